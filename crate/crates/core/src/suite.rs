//! Built-in cross-validation corpora.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumerate::{connected_graphs_up_to_isomorphism, graphs_up_to_isomorphism, random_connected_graph};
use crate::family::Family;
use crate::graph::Graph;
use crate::tree::random_tree;

pub const DEFAULT_SEED: u64 = 7;

/// Number of random trees in the tree suite and the order range they span.
pub const TREE_COUNT: usize = 200;
pub const TREE_ORDERS: std::ops::RangeInclusive<usize> = 5..=10;
/// Trees of order at most this are also crossed with `K1`, up to [`TREE_CORONA_COUNT`] of them.
pub const TREE_CORONA_MAX_ORDER: usize = 6;
pub const TREE_CORONA_COUNT: usize = 20;

pub const K1_SAMPLE: usize = 50;
pub const K1_ORDERS: std::ops::RangeInclusive<usize> = 2..=6;
const K1_EDGE_PROBABILITY: f64 = 0.4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Wheels,
    Fans,
    Diam2,
    Cycles,
    Trees,
    K1,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Wheels,
        Suite::Fans,
        Suite::Diam2,
        Suite::Cycles,
        Suite::Trees,
        Suite::K1,
        Suite::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Wheels => "wheels",
            Suite::Fans => "fans",
            Suite::Diam2 => "diam2",
            Suite::Cycles => "cycles",
            Suite::Trees => "trees",
            Suite::K1 => "k1",
            Suite::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name, or every suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Suite),
    All,
}

impl Selection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Selection::One(s) => vec![s],
            Selection::All => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Selection::All);
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .map(Selection::One)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub suite: Suite,
    pub family: Family,
}

/// Instances of the selected suites in a fixed order; random members are
/// drawn from `seed`.
pub fn corpus(selection: Selection, seed: u64) -> Vec<Instance> {
    selection
        .suites()
        .into_iter()
        .flat_map(|s| {
            suite_families(s, seed)
                .into_iter()
                .enumerate()
                .map(move |(i, family)| Instance {
                    id: format!("{}-{:03}", s.name(), i),
                    suite: s,
                    family,
                })
        })
        .collect()
}

fn k1_corona(g: &Graph) -> Family {
    Family::corona(Family::explicit(g), Family::Complete(1), 1)
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn suite_families(suite: Suite, seed: u64) -> Vec<Family> {
    use Family::*;
    match suite {
        Suite::Wheels => (3..=12).map(Wheel).collect(),
        Suite::Fans => (1..=12).map(Fan).collect(),
        Suite::Diam2 => {
            let gs = [Path(2), Path(3), Cycle(3)];
            let hs = [Complete(2), Complete(3), Path(3), Star(3), Cycle(4), Cycle(5)];
            let mut out: Vec<Family> = gs
                .iter()
                .flat_map(|g| hs.iter().map(move |h| Family::corona(g.clone(), h.clone(), 1)))
                .collect();
            out.push(Family::corona(Path(2), Complete(2), 2));
            out
        }
        Suite::Cycles => vec![
            Family::corona(Path(2), Cycle(7), 1),
            Family::corona(Path(2), Path(7), 1),
        ],
        Suite::Trees => {
            let mut rng = rng_for(seed, 1);
            let trees: Vec<Graph> = (0..TREE_COUNT)
                .map(|_| {
                    let n = rng.gen_range(TREE_ORDERS);
                    random_tree(n, &mut rng)
                })
                .collect();
            let mut out: Vec<Family> = trees.iter().map(Family::explicit).collect();
            out.extend(
                trees
                    .iter()
                    .filter(|t| t.order() <= TREE_CORONA_MAX_ORDER)
                    .take(TREE_CORONA_COUNT)
                    .map(k1_corona),
            );
            out.push(Family::corona(Path(3), Complete(1), 2));
            out
        }
        Suite::K1 => {
            let mut rng = rng_for(seed, 2);
            let mut out: Vec<Family> = (0..K1_SAMPLE)
                .map(|_| {
                    let n = rng.gen_range(K1_ORDERS);
                    k1_corona(&random_connected_graph(n, K1_EDGE_PROBABILITY, &mut rng))
                })
                .collect();
            out.extend((3..=5).map(|n| Family::corona(Complete(n), Complete(1), 1)));
            out
        }
        Suite::Bounds => {
            let mut out = vec![
                Family::corona(Path(2), Empty(2), 1),
                Family::corona(Path(2), Empty(3), 1),
                Family::corona(Path(3), Empty(2), 1),
            ];
            for n in 2..=4 {
                out.extend(
                    graphs_up_to_isomorphism(n)
                        .iter()
                        .filter(|h| !h.is_connected() && h.size() > 0)
                        .map(|h| Family::corona(Path(2), Family::explicit(h), 1)),
                );
            }
            for n in 3..=4 {
                out.extend(
                    connected_graphs_up_to_isomorphism(n)
                        .iter()
                        .map(|h| Family::corona(Path(2), Family::explicit(h), 1)),
                );
            }
            out
        }
    }
}
