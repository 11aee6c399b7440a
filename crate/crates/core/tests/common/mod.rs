//! Slow, obviously-correct reference implementations used as test oracles.
//! None of them share code with the library's search or distance routines.

#![allow(dead_code)]

use std::collections::HashSet;

use coronadim_core::{Graph, Vertex};
use proptest::prelude::*;

/// Floyd–Warshall over the adjacency relation; `None` for unreachable pairs.
#[allow(clippy::needless_range_loop)]
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn resolves(d: &[Vec<Option<u32>>], s: &[Vertex]) -> bool {
    let mut seen = HashSet::new();
    (0..d.len()).all(|v| seen.insert(s.iter().map(|&w| d[v][w]).collect::<Vec<_>>()))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Unpruned search: the lexicographically first resolving set of minimum size.
pub fn brute_dim(g: &Graph) -> (usize, Vec<Vertex>) {
    let d = floyd(g);
    for k in 0..=g.order() {
        if let Some(s) = subsets(g.order(), k).into_iter().find(|s| resolves(&d, s)) {
            return (k, s);
        }
    }
    unreachable!("the full vertex set resolves")
}

pub fn brute_resolving_sets(g: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    let d = floyd(g);
    subsets(g.order(), k).into_iter().filter(|s| resolves(&d, s)).collect()
}

/// Twins by the distance definition: equal distances to every other vertex.
pub fn distance_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let d = floyd(g);
    (0..g.order()).filter(|&x| x != u && x != v).all(|x| d[u][x] == d[v][x])
}

fn all_permutations(n: usize) -> Vec<Vec<Vertex>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && all_permutations(a.order())
            .iter()
            .any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Any graph on `min..=max` vertices.
pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Connected graph on `min..=max` vertices: a random spanning tree, with
/// parent `parents[i] < i + 1` for vertex `i + 1`, plus arbitrary extra edges.
pub fn arb_connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min.max(1)..=max).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (parents, extra).prop_map(move |(parents, extra)| {
            let tree = parents.iter().enumerate().map(|(i, &p)| (p, i + 1));
            let more = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(extra)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            let mut edges: Vec<_> = tree.chain(more).map(|(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Random tree: vertex `i + 1` hangs off `parents[i] <= i`.
pub fn arb_tree(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min.max(1)..=max).prop_flat_map(|n| {
        (1..n).map(|i| 0..i).collect::<Vec<_>>().prop_map(move |parents| {
            let edges = parents.iter().enumerate().map(|(i, &p)| (p, i + 1));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A path on 7 vertices, optionally with an eighth vertex hung anywhere,
/// plus an optional chord. Diameters from 2 to 7 occur.
pub fn arb_long_graph() -> impl Strategy<Value = Graph> {
    (
        proptest::option::of(0usize..7),
        proptest::option::of((0usize..8, 0usize..8)),
    )
        .prop_map(|(hang, chord)| {
            let n = if hang.is_some() { 8 } else { 7 };
            let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
            if let Some(a) = hang {
                edges.push((a, 7));
            }
            if let Some((u, v)) = chord {
                if u != v && u < n && v < n {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
}
