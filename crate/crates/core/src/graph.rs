//! Simple undirected graphs over the vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency is kept twice: as sorted
//! neighbor lists for iteration and as a hashed edge set for constant-time
//! edge queries.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_set: HashSet<(Vertex, Vertex)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

#[inline]
fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// The null graph (no vertices).
    pub fn null() -> Self {
        Self::edgeless(0)
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_set: HashSet::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated edges
    /// and endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edge_set = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !edge_set.insert(key(u, v)) {
                let (a, b) = key(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_set })
    }

    /// Internal constructor for edge lists already known to be valid.
    pub(crate) fn from_valid_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edge_set = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            if edge_set.insert(key(u, v)) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, edge_set }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_set.len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_set.contains(&key(u, v))
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The null graph counts as disconnected; the single vertex as connected.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.size() == 0
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    /// Connected with maximum degree at most two and `n - 1` edges.
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order() && self.adj.iter().all(|ns| ns.len() <= 2)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter_map(move |&w| (index[w] != usize::MAX && index[w] > i).then_some((i, index[w])))
        });
        Graph::from_valid_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Adds one new vertex `n` adjacent only to `anchor`.
    pub fn with_pendant(&self, anchor: Vertex) -> Result<Graph> {
        self.check_vertex(anchor)?;
        let n = self.order();
        Ok(Graph::from_valid_edges(
            n + 1,
            self.edges().chain(std::iter::once((anchor, n))).collect::<Vec<_>>(),
        ))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        Graph::from_valid_edges(
            self.order(),
            self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>(),
        )
    }

    /// Serializes to the edge-list text format: `n <count>` followed by one
    /// `u v` line per edge, edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list text format. Blank lines are skipped.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_no, first) = lines.next().ok_or_else(|| Error::EdgeList {
            line: 1,
            message: "missing header line `n <count>`".into(),
        })?;
        let mut header = first.split_whitespace();
        let n = match (header.next(), header.next(), header.next()) {
            (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| Error::EdgeList {
                line: first_no,
                message: format!("bad vertex count `{count}`"),
            })?,
            _ => {
                return Err(Error::EdgeList {
                    line: first_no,
                    message: format!("expected `n <count>`, found `{first}`"),
                })
            }
        };
        let mut edges = Vec::new();
        for (line, text) in lines {
            let parts: Vec<&str> = text.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::EdgeList {
                    line,
                    message: format!("bad vertex id `{s}`"),
                })
            };
            match parts.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::EdgeList {
                        line,
                        message: format!("expected `u v`, found `{text}`"),
                    })
                }
            }
        }
        Graph::from_edges(n, edges)
    }
}

/// Disjoint union plus every edge between the two parts. Vertices of `h` are
/// shifted by `g.order()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.order();
    let n2 = h.order();
    let cross = (0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v)));
    let edges: Vec<_> = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + n1, v + n1)))
        .chain(cross)
        .collect();
    Graph::from_valid_edges(n1 + n2, edges)
}

/// Vertices of `h` are shifted by `g.order()`; no cross edges.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.order();
    let edges: Vec<_> = g.edges().chain(h.edges().map(|(u, v)| (u + n1, v + n1))).collect();
    Graph::from_valid_edges(n1 + h.order(), edges)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    Graph::from_valid_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn union_and_join_counts() {
        let u = disjoint_union(&path(2), &path(3));
        assert_eq!((u.order(), u.size()), (5, 3));
        assert_eq!(u.components().len(), 2);

        let j = join(&path(2), &path(3));
        assert_eq!((j.order(), j.size()), (5, 1 + 2 + 6));
        assert!(j.has_edge(0, 4));
        assert!(j.has_edge(2, 3));

        let n0 = Graph::null();
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(disjoint_union(&n0, &c3), c3);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k3 = complement(&Graph::edgeless(3));
        assert!(k3.is_complete());
        assert_eq!(complement(&k3), Graph::edgeless(3));
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = Graph::from_edges(4, [(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "n 4\n0 1\n1 2\n2 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);

        assert!(matches!(
            Graph::from_edge_list("4\n0 1\n"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("n 3\n0 1 2\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("n 2\n0 2\n"),
            Err(Error::InvalidVertex { vertex: 2, order: 2 })
        ));
        assert_eq!(Graph::from_edge_list("n 0\n").unwrap(), Graph::null());
    }

    #[test]
    fn shape_predicates() {
        assert!(path(1).is_path());
        assert!(path(5).is_path());
        assert!(!path(5).is_cycle());
        let c = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c.is_cycle());
        assert!(!Graph::null().is_connected());
        assert!(Graph::edgeless(1).is_connected());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p = path(5);
        let sub = p.induced_subgraph(&[1, 2, 4]);
        assert_eq!(sub.order(), 3);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
