//! Trees: leaves, major vertices, terminal degrees and the dimension
//! formulas built on them.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::bfs_distances;
use crate::oracle::{BoundResult, Guards, Source};

pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.size() + 1 == g.order()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    pub is_path: bool,
    /// Number of degree-one vertices.
    pub leaf_count: usize,
    /// Major vertices with at least one terminal vertex.
    pub exterior_major_count: usize,
    /// Every vertex of degree at least 3 with its terminal degree.
    pub major_vertices: Vec<(Vertex, usize)>,
}

/// Each leaf is terminal for the unique major vertex strictly closest to it.
pub fn tree_profile(t: &Graph) -> Result<TreeProfile> {
    if !is_tree(t) || t.order() < 2 {
        return Err(Error::NotATree);
    }
    let leaves: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) == 1).collect();
    let majors: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) >= 3).collect();
    let mut terminal = vec![0usize; majors.len()];
    if !majors.is_empty() {
        for &leaf in &leaves {
            let dist = bfs_distances(t, leaf)?;
            let mut ranked: Vec<(u32, usize)> = majors
                .iter()
                .enumerate()
                .map(|(i, &m)| (dist[m].finite().expect("trees are connected"), i))
                .collect();
            ranked.sort_unstable();
            // Paths to distinct vertices from a leaf have distinct lengths
            // whenever both pass through the leaf's first major vertex.
            assert!(
                ranked.len() < 2 || ranked[0].0 < ranked[1].0,
                "leaf {leaf} is equidistant from two major vertices"
            );
            terminal[ranked[0].1] += 1;
        }
    }
    let major_vertices: Vec<(Vertex, usize)> = majors.into_iter().zip(terminal).collect();
    Ok(TreeProfile {
        is_path: major_vertices.is_empty(),
        leaf_count: leaves.len(),
        exterior_major_count: major_vertices.iter().filter(|(_, d)| *d > 0).count(),
        major_vertices,
    })
}

/// `1` for paths, otherwise leaves minus exterior major vertices.
pub fn tree_dim(t: &Graph) -> Result<BoundResult> {
    let profile = tree_profile(t)?;
    let mut g = Guards::new(Source::Tree);
    g.check("T tree of order >= 2", true);
    if g.check("T path", profile.is_path) {
        return Ok(g.exact(1));
    }
    Ok(g.exact(profile.leaf_count - profile.exterior_major_count))
}

/// `dim(T ⊙^k K1)`: the leaf count of `T` for `k = 1`, `2^(k-2) n` for `k >= 2`.
pub fn tree_corona_k1_dim(t: &Graph, k: u32) -> Result<BoundResult> {
    let profile = tree_profile(t)?;
    let n = t.order();
    let mut g = Guards::new(Source::TreeCorona);
    g.check("T tree", true);
    if !(g.check("n >= 3", n >= 3) && g.check("k >= 1", k >= 1)) {
        return Ok(g.inapplicable());
    }
    if k == 1 {
        return Ok(g.exact(profile.leaf_count));
    }
    Ok(match 2usize.checked_pow(k - 2).and_then(|p| p.checked_mul(n)) {
        Some(v) => g.exact(v),
        None => g.inapplicable(),
    })
}

/// Tree on `seq.len() + 2` vertices encoded by a Prüfer sequence.
pub fn from_prufer(seq: &[Vertex]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidVertex { vertex: v, order: n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Uniformly random labeled tree of order `n >= 2`.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "random trees need at least two vertices");
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    from_prufer(&seq).expect("sequence entries are in range")
}
