//! Small-graph corpora: every graph of a given order up to isomorphism,
//! and seeded random connected graphs.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::tree::random_tree;

/// Largest order [`graphs_up_to_isomorphism`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// Largest order [`canonical_mask`] accepts.
pub const MAX_CANONICAL_ORDER: usize = 8;

fn pair_index(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Bitmask of `g` relabeled by `perm`, one bit per pair in [`pair_index`] order.
fn mask_under(g: &Graph, perm: &[Vertex], slot: &[Vec<usize>]) -> u32 {
    g.edges().fold(0, |m, (u, v)| m | 1 << slot[perm[u]][perm[v]])
}

fn permutations(n: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut p: Vec<Vertex> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Smallest edge bitmask over all relabelings; equal exactly for isomorphic graphs.
pub fn canonical_mask(g: &Graph) -> u32 {
    let n = g.order();
    assert!(n <= MAX_CANONICAL_ORDER, "order {n} too large to canonicalize");
    let pairs = pair_index(n);
    let slot = slot_table(n, &pairs);
    permutations(n)
        .iter()
        .map(|p| mask_under(g, p, &slot))
        .min()
        .unwrap_or(0)
}

fn slot_table(n: usize, pairs: &[(Vertex, Vertex)]) -> Vec<Vec<usize>> {
    let mut slot = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        slot[u][v] = i;
        slot[v][u] = i;
    }
    slot
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_mask(a) == canonical_mask(b)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical mask. Each representative is the canonical labeling.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_ORDER, "order {n} too large to enumerate");
    let pairs = pair_index(n);
    let slot = slot_table(n, &pairs);
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for bits in 0u32..(1u32 << pairs.len()) {
        let g = from_mask(n, &pairs, bits);
        let canon = perms.iter().map(|p| mask_under(&g, p, &slot)).min().unwrap_or(0);
        seen.insert(canon);
    }
    seen.into_iter().map(|m| from_mask(n, &pairs, m)).collect()
}

fn from_mask(n: usize, pairs: &[(Vertex, Vertex)], bits: u32) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_valid_edges(n, edges)
}

pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    graphs_up_to_isomorphism(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Random connected graph: a uniform random spanning tree plus each other
/// pair independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::edgeless(n);
    }
    let tree = random_tree(n, rng);
    let mut edges: Vec<(Vertex, Vertex)> = tree.edges().collect();
    for (u, v) in pair_index(n) {
        if !tree.has_edge(u, v) && rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    Graph::from_valid_edges(n, edges)
}
