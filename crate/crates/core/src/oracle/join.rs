//! Join decompositions and the `dim = n - 2` families.
//!
//! A graph is a join exactly when its complement is disconnected; the join
//! factors are the subgraphs induced by the complement's components.

use std::fmt;

use serde::Serialize;

use crate::graph::{complement, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinDecomposition {
    /// Factor `i` is the subgraph induced by `parts[i]`, relabeled in order.
    pub factors: Vec<Graph>,
    pub parts: Vec<Vec<Vertex>>,
}

impl JoinDecomposition {
    /// True when the graph is not a join of two or more graphs.
    pub fn is_trivial(&self) -> bool {
        self.factors.len() <= 1
    }
}

pub fn recognize_join_decomposition(g: &Graph) -> JoinDecomposition {
    let parts = complement(g).components();
    let factors = parts.iter().map(|p| g.induced_subgraph(p)).collect();
    JoinDecomposition { factors, parts }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NMinus2Family {
    /// `K_{s,t}`, `s, t >= 1`.
    CompleteBipartite,
    /// `K_s + N_t`, `s >= 1`, `t >= 2`.
    CliqueJoinEmpty,
    /// `K_s + (K_1 ∪ K_t)`, `s, t >= 1`.
    CliqueJoinCliquePlusVertex,
}

impl fmt::Display for NMinus2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NMinus2Family::CompleteBipartite => "K_{s,t}",
            NMinus2Family::CliqueJoinEmpty => "K_s+N_t",
            NMinus2Family::CliqueJoinCliquePlusVertex => "K_s+(K_1∪K_t)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NMinus2 {
    /// Order below 4 or disconnected; the characterization does not speak.
    Inapplicable,
    NotRecognized,
    Recognized(NMinus2Family),
}

/// `K_1 ∪ K_t`: exactly two components, one a single vertex and the other complete.
fn is_vertex_plus_clique(g: &Graph) -> bool {
    let comps = g.components();
    comps.len() == 2 && comps.iter().any(|c| c.len() == 1) && comps.iter().all(|c| g.induced_subgraph(c).is_complete())
}

/// Recognizes the connected graphs of order `n >= 4` with dimension `n - 2`
/// by classifying join factors.
pub fn recognize_dim_n_minus_2(g: &Graph) -> NMinus2 {
    if g.order() < 4 || !g.is_connected() {
        return NMinus2::Inapplicable;
    }
    let d = recognize_join_decomposition(g);
    if d.is_trivial() {
        return NMinus2::NotRecognized;
    }
    if d.factors.len() == 2 && d.factors.iter().all(Graph::is_edgeless) {
        return NMinus2::Recognized(NMinus2Family::CompleteBipartite);
    }
    // A clique K_s splits into s single-vertex factors; the remaining
    // non-trivial factor must be N_t or K_1 ∪ K_t.
    let big: Vec<&Graph> = d.factors.iter().filter(|f| f.order() > 1).collect();
    let singles = d.factors.len() - big.len();
    if singles == 0 || big.len() != 1 {
        return NMinus2::NotRecognized;
    }
    let rest = big[0];
    if rest.is_edgeless() {
        NMinus2::Recognized(NMinus2Family::CliqueJoinEmpty)
    } else if is_vertex_plus_clique(rest) {
        NMinus2::Recognized(NMinus2Family::CliqueJoinCliquePlusVertex)
    } else {
        NMinus2::NotRecognized
    }
}
