//! Corona products `G ⊙ H` and their left-associated iterates.
//!
//! Labeling is fixed: the spine (the copy of `G`) takes ids `0..n1`, and the
//! copy of `H` attached to spine vertex `i` takes the contiguous block
//! `n1 + i*n2 .. n1 + (i+1)*n2`, in `H`'s own vertex order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default ceiling on the order of an iterated corona.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Spine and copy membership of one corona level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoronaStructure {
    pub spine: Vec<Vertex>,
    /// `copies[i]` is the copy of `H` hanging off `spine[i]`.
    pub copies: Vec<Vec<Vertex>>,
}

impl CoronaStructure {
    /// Index `i` of the copy containing `v`, if `v` is not a spine vertex.
    pub fn copy_of(&self, v: Vertex) -> Option<usize> {
        let n1 = self.spine.len();
        let n2 = self.copies.first().map_or(0, Vec::len);
        (v >= n1 && n2 > 0).then(|| (v - n1) / n2)
    }

    pub fn is_spine(&self, v: Vertex) -> bool {
        v < self.spine.len()
    }
}

pub fn corona(g: &Graph, h: &Graph) -> (Graph, CoronaStructure) {
    let n1 = g.order();
    let n2 = h.order();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut copies = Vec::with_capacity(n1);
    for i in 0..n1 {
        let base = n1 + i * n2;
        edges.extend(h.edges().map(|(u, v)| (base + u, base + v)));
        edges.extend((0..n2).map(|j| (i, base + j)));
        copies.push((base..base + n2).collect());
    }
    let product = Graph::from_valid_edges(n1 * (n2 + 1), edges);
    let structure = CoronaStructure {
        spine: (0..n1).collect(),
        copies,
    };
    (product, structure)
}

/// Order of `G ⊙^k H`, i.e. `n1 (n2 + 1)^k`, or `None` on `u128` overflow.
pub fn iterated_order(n1: usize, n2: usize, k: u32) -> Option<u128> {
    (n2 as u128 + 1).checked_pow(k)?.checked_mul(n1 as u128)
}

pub fn iterated_corona(g: &Graph, h: &Graph, k: u32) -> Result<(Graph, Vec<CoronaStructure>)> {
    iterated_corona_with_limit(g, h, k, DEFAULT_MAX_ORDER)
}

/// `G ⊙^k H = (G ⊙^{k-1} H) ⊙ H`, returning one structure per level.
pub fn iterated_corona_with_limit(
    g: &Graph,
    h: &Graph,
    k: u32,
    max_order: usize,
) -> Result<(Graph, Vec<CoronaStructure>)> {
    if k == 0 {
        return Err(Error::InvalidDescriptor(
            "corona iteration count must be at least 1".into(),
        ));
    }
    let order = iterated_order(g.order(), h.order(), k).unwrap_or(u128::MAX);
    if order > max_order as u128 {
        return Err(Error::SizeLimit {
            order,
            limit: max_order,
        });
    }
    let mut levels = Vec::with_capacity(k as usize);
    let mut current = g.clone();
    for _ in 0..k {
        let (next, cs) = corona(&current, h);
        levels.push(cs);
        current = next;
    }
    Ok((current, levels))
}
