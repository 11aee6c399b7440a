//! Resolving sets and exact metric dimension.
//!
//! The exact solver enumerates landmark sets by increasing size, starting
//! from the twin lower bound. Within one size, sets are visited in
//! lexicographic order of their sorted vertex lists, so the first resolving
//! set found is the lexicographically smallest one of minimum size. The only
//! pruning is the twin rule: a resolving set omits at most one vertex of
//! each twin class.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::{all_pairs, DistanceMatrix};

/// Sorted, duplicate-free set of landmark vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LandmarkSet(Vec<Vertex>);

impl LandmarkSet {
    /// Sorts `vertices` and checks that every id is below `order` and appears once.
    pub fn new(mut vertices: Vec<Vertex>, order: usize) -> Result<Self> {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedLandmark(w[0]));
            }
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= order) {
            return Err(Error::InvalidVertex { vertex: v, order });
        }
        Ok(LandmarkSet(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        LandmarkSet(vertices)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Landmarks for which `keep` holds.
    pub fn filtered(&self, mut keep: impl FnMut(Vertex) -> bool) -> LandmarkSet {
        LandmarkSet(self.0.iter().copied().filter(|&v| keep(v)).collect())
    }
}

impl fmt::Display for LandmarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverBudget {
    /// Largest landmark set tried; `None` means `n - 1`.
    pub max_subset_size: Option<usize>,
    pub time_limit: Duration,
    pub max_subsets_checked: u64,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_subset_size: None,
            time_limit: Duration::from_secs(60),
            max_subsets_checked: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SolverStatus {
    Exact,
    BoundsOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    pub status: SolverStatus,
    pub lower: usize,
    pub upper: usize,
    /// Minimum resolving set when exact, otherwise the greedy upper-bound set.
    pub witness: LandmarkSet,
    pub subsets_checked: u64,
}

impl SolverResult {
    pub fn value(&self) -> Option<usize> {
        (self.status == SolverStatus::Exact).then_some(self.lower)
    }
}

fn finite_table(dm: &DistanceMatrix) -> Result<Vec<u32>> {
    dm.finite_table().ok_or(Error::Disconnected)
}

/// Groups of two or more vertices sharing a representation with respect to
/// `s`, each group sorted, groups ordered by first vertex.
pub fn collisions(dm: &DistanceMatrix, s: &LandmarkSet) -> Result<Vec<Vec<Vertex>>> {
    let table = finite_table(dm)?;
    let n = dm.order();
    for v in s.iter() {
        dm.check_vertex(v)?;
    }
    let mut groups: HashMap<Vec<u32>, Vec<Vertex>> = HashMap::new();
    for v in 0..n {
        let rep = s.iter().map(|l| table[v * n + l]).collect();
        groups.entry(rep).or_default().push(v);
    }
    let mut out: Vec<Vec<Vertex>> = groups.into_values().filter(|g| g.len() > 1).collect();
    out.sort();
    Ok(out)
}

pub fn is_resolving(dm: &DistanceMatrix, s: &LandmarkSet) -> Result<bool> {
    Ok(collisions(dm, s)?.is_empty())
}

/// Twin classes: `u` and `v` are twins when `d(u, x) = d(v, x)` for every
/// `x` outside `{u, v}`.
///
/// Computed from neighborhoods: twins are exactly the pairs with equal open
/// neighborhoods or equal closed neighborhoods. Classes are sorted and
/// ordered by smallest vertex.
pub fn twin_partition(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.order();
    let mut parent: Vec<Vertex> = (0..n).collect();
    fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut open: HashMap<&[Vertex], Vertex> = HashMap::new();
    let mut closed: HashMap<Vec<Vertex>, Vertex> = HashMap::new();
    for v in 0..n {
        let ns = g.neighbors(v);
        let mut closed_key = ns.to_vec();
        let pos = closed_key.partition_point(|&w| w < v);
        closed_key.insert(pos, v);
        for first in [*open.entry(ns).or_insert(v), *closed.entry(closed_key).or_insert(v)] {
            let (a, b) = (find(&mut parent, first), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        classes.entry(root).or_default().push(v);
    }
    classes.into_values().collect()
}

/// Every resolving set contains all but one vertex of each twin class.
/// Clamped to at least 1 once there are two vertices.
pub fn twin_lower_bound(partition: &[Vec<Vertex>]) -> usize {
    let n: usize = partition.iter().map(Vec::len).sum();
    let sum: usize = partition.iter().map(|c| c.len().saturating_sub(1)).sum();
    if n >= 2 {
        sum.max(1)
    } else {
        sum
    }
}

/// Incremental refinement of vertex classes by landmark distances.
struct Refiner {
    n: usize,
    width: usize,
    stamp: u32,
    seen: Vec<(u32, u32)>,
}

impl Refiner {
    fn new(n: usize, width: usize) -> Self {
        Refiner {
            n,
            width,
            stamp: 0,
            seen: vec![(0, 0); n * width],
        }
    }

    /// Splits `labels` by distance to `landmark`, writing compacted labels to
    /// `out` and returning the number of classes.
    fn refine(&mut self, dist: &[u32], labels: &[u32], landmark: Vertex, out: &mut [u32]) -> usize {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|e| *e = (0, 0));
            self.stamp = 1;
        }
        let row = &dist[landmark * self.n..(landmark + 1) * self.n];
        let mut next = 0u32;
        for x in 0..self.n {
            let slot = &mut self.seen[labels[x] as usize * self.width + row[x] as usize];
            if slot.0 != self.stamp {
                *slot = (self.stamp, next);
                next += 1;
            }
            out[x] = slot.1;
        }
        next as usize
    }
}

/// Greedy resolving set: repeatedly add the vertex that separates the most
/// still-unresolved pairs, ties to the smallest id.
pub fn greedy_upper_bound(dm: &DistanceMatrix) -> Result<LandmarkSet> {
    let dist = finite_table(dm)?;
    let n = dm.order();
    if n <= 1 {
        return Ok(LandmarkSet::default());
    }
    let width = dm.max_distance().unwrap_or(0) as usize + 1;
    let mut refiner = Refiner::new(n, width);
    let mut labels = vec![0u32; n];
    let mut scratch = vec![0u32; n];
    let mut chosen = Vec::new();
    let pairs = |labels: &[u32], classes: usize| -> usize {
        let mut counts = vec![0usize; classes];
        labels.iter().for_each(|&l| counts[l as usize] += 1);
        counts.iter().map(|c| c * c.saturating_sub(1) / 2).sum()
    };
    let mut classes = 1;
    let mut unresolved = pairs(&labels, classes);
    while unresolved > 0 {
        let mut best: Option<(usize, Vertex, usize)> = None;
        for v in 0..n {
            let k = refiner.refine(&dist, &labels, v, &mut scratch);
            let gain = unresolved - pairs(&scratch, k);
            if best.is_none_or(|(g, _, _)| gain > g) {
                best = Some((gain, v, k));
            }
        }
        let (_, v, k) = best.expect("graph has vertices");
        refiner.refine(&dist, &labels.clone(), v, &mut labels);
        classes = k;
        unresolved = pairs(&labels, classes);
        chosen.push(v);
    }
    chosen.sort_unstable();
    Ok(LandmarkSet::from_sorted(chosen))
}

enum Outcome {
    Finished,
    Stopped,
    OutOfBudget,
}

/// Depth-first enumeration of fixed-size landmark sets in lexicographic order,
/// respecting the twin rule.
struct Search<'a> {
    n: usize,
    size: usize,
    dist: &'a [u32],
    refiner: Refiner,
    class: Vec<usize>,
    need: Vec<usize>,
    omitted: Vec<bool>,
    total_need: usize,
    chosen: Vec<Vertex>,
    labels: Vec<Vec<u32>>,
    distinct: Vec<usize>,
    checked: u64,
    max_checked: u64,
    deadline: Option<Instant>,
}

impl<'a> Search<'a> {
    fn new(dm: &DistanceMatrix, dist: &'a [u32], twins: &[Vec<Vertex>], size: usize) -> Self {
        let n = dm.order();
        let width = dm.max_distance().unwrap_or(0) as usize + 1;
        let mut class = vec![0; n];
        for (c, members) in twins.iter().enumerate() {
            for &v in members {
                class[v] = c;
            }
        }
        let need: Vec<usize> = twins.iter().map(|c| c.len() - 1).collect();
        let total_need = need.iter().sum();
        let mut labels = vec![vec![0u32; n]; size + 1];
        labels[0].iter_mut().for_each(|l| *l = 0);
        let mut distinct = vec![0; size + 1];
        distinct[0] = usize::from(n > 0);
        Search {
            n,
            size,
            dist,
            refiner: Refiner::new(n, width),
            class,
            need,
            omitted: vec![false; twins.len()],
            total_need,
            chosen: Vec::with_capacity(size),
            labels,
            distinct,
            checked: 0,
            max_checked: u64::MAX,
            deadline: None,
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> Outcome {
        self.dfs(0, visit)
    }

    fn dfs(&mut self, v: Vertex, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> Outcome {
        let depth = self.chosen.len();
        let remaining = self.size - depth;
        if self.total_need > remaining {
            return Outcome::Finished;
        }
        if remaining == 0 {
            if self.checked >= self.max_checked {
                return Outcome::OutOfBudget;
            }
            self.checked += 1;
            if self.checked.is_multiple_of(1024) {
                if let Some(deadline) = self.deadline {
                    if Instant::now() >= deadline {
                        return Outcome::OutOfBudget;
                    }
                }
            }
            if self.distinct[depth] == self.n && !visit(&self.chosen) {
                return Outcome::Stopped;
            }
            return Outcome::Finished;
        }
        if self.n - v < remaining {
            return Outcome::Finished;
        }

        let c = self.class[v];
        let counted = self.need[c] > 0;
        if counted {
            self.need[c] -= 1;
            self.total_need -= 1;
        }
        self.chosen.push(v);
        let (head, tail) = self.labels.split_at_mut(depth + 1);
        self.distinct[depth + 1] = self.refiner.refine(self.dist, &head[depth], v, &mut tail[0]);
        let outcome = self.dfs(v + 1, visit);
        self.chosen.pop();
        if counted {
            self.need[c] += 1;
            self.total_need += 1;
        }
        if !matches!(outcome, Outcome::Finished) {
            return outcome;
        }

        if self.omitted[c] {
            return Outcome::Finished;
        }
        self.omitted[c] = true;
        let outcome = self.dfs(v + 1, visit);
        self.omitted[c] = false;
        outcome
    }
}

/// Every resolving set of exactly `size` vertices, in lexicographic order.
pub fn resolving_sets_of_size(g: &Graph, size: usize) -> Result<Vec<LandmarkSet>> {
    let dm = all_pairs(g);
    let dist = finite_table(&dm)?;
    let twins = twin_partition(g);
    let mut found = Vec::new();
    if size > g.order() {
        return Ok(found);
    }
    Search::new(&dm, &dist, &twins, size).run(&mut |s| {
        found.push(LandmarkSet::from_sorted(s.to_vec()));
        true
    });
    Ok(found)
}

/// Exact metric dimension with the lexicographically smallest minimum
/// resolving set as witness, or bounds when the budget runs out.
pub fn metric_dimension_exact(g: &Graph, budget: &SolverBudget) -> Result<SolverResult> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TrivialInput(n));
    }
    let dm = all_pairs(g);
    let dist = finite_table(&dm)?;
    let twins = twin_partition(g);
    let start = twin_lower_bound(&twins);
    let max_size = budget.max_subset_size.unwrap_or(n - 1).min(n - 1);
    let deadline = Instant::now().checked_add(budget.time_limit);
    let mut checked = 0u64;
    let mut lower = start;

    for size in start..=max_size {
        let mut search = Search::new(&dm, &dist, &twins, size);
        search.max_checked = budget.max_subsets_checked.saturating_sub(checked);
        search.deadline = deadline;
        let mut witness = None;
        let outcome = search.run(&mut |s| {
            witness = Some(s.to_vec());
            false
        });
        checked += search.checked;
        match outcome {
            Outcome::Stopped => {
                let witness = LandmarkSet::from_sorted(witness.expect("witness recorded"));
                return Ok(SolverResult {
                    status: SolverStatus::Exact,
                    lower: size,
                    upper: size,
                    witness,
                    subsets_checked: checked,
                });
            }
            Outcome::Finished => lower = size + 1,
            Outcome::OutOfBudget => break,
        }
    }

    let greedy = greedy_upper_bound(&dm)?;
    Ok(SolverResult {
        status: SolverStatus::BoundsOnly,
        lower: lower.min(greedy.len()),
        upper: greedy.len(),
        witness: greedy,
        subsets_checked: checked,
    })
}
