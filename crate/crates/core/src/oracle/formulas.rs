use serde::Serialize;

use super::{BoundResult, Guards, Source};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::Graph;
use crate::metric::diameter;

/// Parameters of `G ⊙^k H` consumed by the corona rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoronaParams {
    pub n1: usize,
    pub n2: usize,
    pub k: u32,
    pub g_connected: bool,
    pub h_connected: bool,
    pub h_complete: bool,
    pub h_cycle: bool,
    pub dim_h: Option<usize>,
    /// `None` when `H` is disconnected or null.
    pub diam_h: Option<u32>,
    /// Components of `H` with more than one vertex.
    pub alpha: usize,
    /// Isolated vertices of `H`.
    pub beta: usize,
    pub dim_k1_join_h: Option<usize>,
}

impl CoronaParams {
    /// Structural parameters of `g` and `h`; both dimensions are left unknown.
    pub fn measure(g: &Graph, h: &Graph, k: u32) -> Self {
        let comps = h.components();
        let beta = comps.iter().filter(|c| c.len() == 1).count();
        CoronaParams {
            n1: g.order(),
            n2: h.order(),
            k,
            g_connected: g.is_connected(),
            h_connected: h.is_connected(),
            h_complete: h.is_complete(),
            h_cycle: h.is_cycle(),
            dim_h: None,
            diam_h: diameter(h),
            alpha: comps.len() - beta,
            beta,
            dim_k1_join_h: None,
        }
    }

    /// `n1 (n2 + 1)^(k-1)`, the number of copies at the last level.
    pub fn multiplier(&self) -> Option<usize> {
        let k = self.k.checked_sub(1)?;
        (self.n2 + 1).checked_pow(k)?.checked_mul(self.n1)
    }

    fn scaled(&self, per_copy: usize) -> Option<usize> {
        self.multiplier()?.checked_mul(per_copy)
    }
}

/// Common hypotheses: `G` connected, `n1 >= 2`, `n2 >= min_n2`, `k >= 1`.
fn corona_guards(source: Source, p: &CoronaParams, min_n2: usize, n2_name: &'static str) -> (Guards, bool) {
    let mut g = Guards::new(source);
    let ok = g.check("k >= 1", p.k >= 1)
        && g.check("G connected", p.g_connected)
        && g.check("n1 >= 2", p.n1 >= 2)
        && g.check(n2_name, p.n2 >= min_n2);
    (g, ok)
}

fn emit(g: Guards, value: Option<usize>, f: fn(Guards, usize) -> BoundResult) -> BoundResult {
    match value {
        Some(v) => f(g, v),
        None => g.inapplicable(),
    }
}

pub fn wheel_dim(n: usize) -> Result<BoundResult> {
    if n < 3 {
        return Err(Error::InvalidDescriptor(format!("wheel rim size {n} is below 3")));
    }
    let mut g = Guards::new(Source::Wheel);
    g.check("n >= 3", true);
    let v = match n {
        3 | 6 => 3,
        4 | 5 => 2,
        _ => (2 * n + 2) / 5,
    };
    Ok(g.exact(v))
}

pub fn fan_dim(n: usize) -> BoundResult {
    let mut g = Guards::new(Source::Fan);
    if !g.check("n >= 1", n >= 1) {
        return g.inapplicable();
    }
    let v = match n {
        1 => 1,
        2 | 3 => 2,
        6 => 3,
        _ => (2 * n + 2) / 5,
    };
    g.exact(v)
}

/// Known dimension of a base family descriptor.
pub fn base_family_dim(desc: &Family) -> BoundResult {
    let mut g = Guards::new(Source::BaseFamily);
    match *desc {
        Family::Path(n) if g.check("n >= 2", n >= 2) => g.exact(1),
        Family::Cycle(n) if g.check("n >= 3", n >= 3) => g.exact(2),
        Family::Complete(n) if g.check("n >= 2", n >= 2) => g.exact(n - 1),
        Family::CompleteBipartite(s, t) => complete_bipartite_dim(s, t),
        Family::Star(n) => complete_bipartite_dim(1, n),
        Family::Wheel(n) => wheel_dim(n).unwrap_or_else(|_| Guards::new(Source::Wheel).inapplicable()),
        Family::Fan(n) => fan_dim(n),
        _ => g.inapplicable(),
    }
}

fn complete_bipartite_dim(s: usize, t: usize) -> BoundResult {
    let mut g = Guards::new(Source::NMinus2);
    if g.check("s, t >= 1", s >= 1 && t >= 1) && g.check("order >= 4", s + t >= 4) {
        g.exact(s + t - 2)
    } else {
        g.inapplicable()
    }
}

/// `dim(G ⊙^k H) >= n1 (n2+1)^(k-1) dim(H)` for connected `G`, `H`.
pub fn corona_lower(p: &CoronaParams) -> BoundResult {
    let (mut g, ok) = corona_guards(Source::Lower, p, 2, "n2 >= 2");
    if !(ok && g.check("H connected", p.h_connected) && g.check("dim(H) known", p.dim_h.is_some())) {
        return g.inapplicable();
    }
    emit(g, p.scaled(p.dim_h.unwrap_or(0)), Guards::lower)
}

/// Equality with the lower bound when `D(H) <= 2`.
pub fn corona_exact_small_diameter(p: &CoronaParams) -> BoundResult {
    let (mut g, ok) = corona_guards(Source::Diam2, p, 2, "n2 >= 2");
    if !(ok && g.check("D(H) <= 2", p.diam_h.is_some_and(|d| d <= 2)) && g.check("dim(H) known", p.dim_h.is_some())) {
        return g.inapplicable();
    }
    emit(g, p.scaled(p.dim_h.unwrap_or(0)), Guards::exact)
}

/// Upper bound from the number of non-trivial components (`alpha`) and
/// isolated vertices (`beta`) of `H`.
pub fn corona_upper_components(p: &CoronaParams) -> BoundResult {
    let (g, ok) = corona_guards(Source::AlphaBeta, p, 2, "n2 >= 2");
    if !ok {
        return g.inapplicable();
    }
    let per_copy = match (p.alpha, p.beta) {
        (0, _) => p.n2 - 1,
        (a, 0) => p.n2 - a,
        (a, _) => p.n2 - a - 1,
    };
    emit(g, p.scaled(per_copy), Guards::upper)
}

/// Equality `n1 (n2+1)^(k-1) (n2-1)` for edgeless `H`.
pub fn corona_exact_empty_h(p: &CoronaParams) -> BoundResult {
    let (mut g, ok) = corona_guards(Source::EmptyH, p, 2, "n2 >= 2");
    if !(ok && g.check("H edgeless", p.alpha == 0)) {
        return g.inapplicable();
    }
    emit(g, p.scaled(p.n2 - 1), Guards::exact)
}

/// For connected `H` with `n2 >= 3`: exact `(n2-1)` per copy when `H` is
/// complete, otherwise at most `(n2-2)` per copy.
pub fn corona_exact_complete_h(p: &CoronaParams) -> BoundResult {
    let (mut g, ok) = corona_guards(Source::CompleteH, p, 3, "n2 >= 3");
    if !(ok && g.check("H connected", p.h_connected)) {
        return g.inapplicable();
    }
    if g.check("H complete", p.h_complete) {
        emit(g, p.scaled(p.n2 - 1), Guards::exact)
    } else {
        emit(g, p.scaled(p.n2 - 2), Guards::upper)
    }
}

/// `dim(G ⊙^k H) <= n1 (n2+1)^(k-1) dim(K1 ⊙ H)`.
pub fn corona_upper_k1_join(p: &CoronaParams) -> BoundResult {
    let (mut g, ok) = corona_guards(Source::K1JoinUpper, p, 2, "n2 >= 2");
    if !(ok && g.check("dim(K1 ⊙ H) known", p.dim_k1_join_h.is_some())) {
        return g.inapplicable();
    }
    emit(g, p.scaled(p.dim_k1_join_h.unwrap_or(0)), Guards::upper)
}

/// Equality with the `dim(K1 ⊙ H)` bound when `n2 >= 7` and `H` has
/// diameter at least 6 or is a cycle.
pub fn corona_exact_big_diameter_or_cycle(p: &CoronaParams) -> BoundResult {
    let (mut g, ok) = corona_guards(Source::Diam6OrCycle, p, 7, "n2 >= 7");
    if !(ok
        && g.check("D(H) >= 6 or H cycle", p.diam_h.is_some_and(|d| d >= 6) || p.h_cycle)
        && g.check("dim(K1 ⊙ H) known", p.dim_k1_join_h.is_some()))
    {
        return g.inapplicable();
    }
    emit(g, p.scaled(p.dim_k1_join_h.unwrap_or(0)), Guards::exact)
}

/// `dim(G ⊙^k K1) <= 2^(k-1) n - 1` for connected `G` of order `n >= 2`.
pub fn corona_k1_upper(n: usize, k: u32, g_connected: bool) -> BoundResult {
    let mut g = Guards::new(Source::K1Corona);
    if !(g.check("k >= 1", k >= 1) && g.check("G connected", g_connected) && g.check("n >= 2", n >= 2)) {
        return g.inapplicable();
    }
    let value = 2usize.checked_pow(k - 1).and_then(|p| p.checked_mul(n)).map(|v| v - 1);
    emit(g, value, Guards::upper)
}
