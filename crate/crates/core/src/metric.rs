//! Shortest-path distances, diameter and metric representations.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// A hop distance, or the marker for vertices in different components.
///
/// `Unreachable` orders after every finite distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dist {
    Finite(u32),
    Unreachable,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Unreachable => f.write_str("inf"),
        }
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => s.serialize_u32(*d),
            Dist::Unreachable => s.serialize_none(),
        }
    }
}

pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<Dist>> {
    g.check_vertex(source)?;
    Ok(bfs(g, source))
}

fn bfs(g: &Graph, source: Vertex) -> Vec<Dist> {
    let mut dist = vec![Dist::Unreachable; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = Dist::Finite(0);
    queue.push_back((source, 0u32));
    while let Some((u, d)) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == Dist::Unreachable {
                dist[w] = Dist::Finite(d + 1);
                queue.push_back((w, d + 1));
            }
        }
    }
    dist
}

/// All-pairs hop distances, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[Dist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(crate::Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.d.iter().all(|d| d.is_finite())
    }

    /// The matrix as plain integers, or `None` if some pair is unreachable.
    pub fn finite_table(&self) -> Option<Vec<u32>> {
        self.d.iter().map(|d| d.finite()).collect()
    }

    /// Largest entry; `None` when some pair is unreachable or the graph is null.
    pub fn max_distance(&self) -> Option<u32> {
        if self.n == 0 {
            return None;
        }
        self.d.iter().try_fold(0u32, |acc, d| d.finite().map(|x| acc.max(x)))
    }
}

/// One BFS per source; sources are processed in parallel and written back
/// in vertex order.
pub fn all_pairs(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let rows: Vec<Vec<Dist>> = (0..n).into_par_iter().map(|s| bfs(g, s)).collect();
    DistanceMatrix {
        n,
        d: rows.into_iter().flatten().collect(),
    }
}

/// Maximum distance over all pairs. `None` for disconnected or null graphs;
/// the single vertex has diameter 0.
pub fn diameter(g: &Graph) -> Option<u32> {
    if !g.is_connected() {
        return None;
    }
    all_pairs(g).max_distance()
}

/// Distances from one vertex to each landmark, in landmark order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Representation(pub Vec<Dist>);

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

pub fn representation(dm: &DistanceMatrix, v: Vertex, landmarks: &[Vertex]) -> Result<Representation> {
    dm.check_vertex(v)?;
    for &l in landmarks {
        dm.check_vertex(l)?;
    }
    Ok(Representation(landmarks.iter().map(|&l| dm.get(v, l)).collect()))
}
