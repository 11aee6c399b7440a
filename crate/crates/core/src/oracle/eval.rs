use super::formulas::CoronaParams;
use super::formulas::{
    base_family_dim, corona_exact_big_diameter_or_cycle, corona_exact_complete_h, corona_exact_empty_h,
    corona_exact_small_diameter, corona_k1_upper, corona_lower, corona_upper_components, corona_upper_k1_join, fan_dim,
    wheel_dim,
};
use super::join::{recognize_dim_n_minus_2, NMinus2, NMinus2Family};
use super::{BoundKind, BoundResult, Guards, Source};
use crate::corona::corona;
use crate::error::Result;
use crate::family::Family;
use crate::graph::Graph;
use crate::resolver::{metric_dimension_exact, SolverBudget};
use crate::tree::{is_tree, tree_corona_k1_dim, tree_dim};

/// Evaluates every rule that can speak about a descriptor.
///
/// Dimensions the rules need as inputs (`dim(H)`, `dim(K1 ⊙ H)`) come from
/// other rules where one applies and from the exact solver otherwise.
#[derive(Debug, Clone, Default)]
pub struct Oracle {
    budget: SolverBudget,
}

impl Oracle {
    pub fn new(budget: SolverBudget) -> Self {
        Oracle { budget }
    }

    pub fn evaluate(&self, desc: &Family) -> Result<Vec<BoundResult>> {
        let g = desc.build()?;
        self.evaluate_built(desc, &g)
    }

    /// Like [`Oracle::evaluate`] with `g` already built from `desc`.
    ///
    /// Corona descriptors report every corona rule, applicable or not; other
    /// results are listed only when they apply.
    pub fn evaluate_built(&self, desc: &Family, g: &Graph) -> Result<Vec<BoundResult>> {
        let mut out = Vec::new();
        match desc {
            Family::Corona(gd, hd, k) => out.extend(self.corona_rules(gd, hd, *k)?),
            Family::Path(_)
            | Family::Cycle(_)
            | Family::Complete(_)
            | Family::CompleteBipartite(..)
            | Family::Star(_)
            | Family::Wheel(_)
            | Family::Fan(_) => {
                let r = base_family_dim(desc);
                if r.is_applicable() {
                    out.push(r);
                }
            }
            _ => {}
        }
        for r in structural_rules(g)? {
            let seen = out
                .iter()
                .any(|o| o.source == r.source && o.kind == r.kind && o.value == r.value);
            if !seen {
                out.push(r);
            }
        }
        Ok(out)
    }

    pub fn corona_params(&self, gd: &Family, hd: &Family, k: u32) -> Result<CoronaParams> {
        let g = gd.build()?;
        let h = hd.build()?;
        let mut p = CoronaParams::measure(&g, &h, k);
        p.dim_h = self.known_dim(hd, &h)?;
        p.dim_k1_join_h = self.dim_k1_join(&h)?;
        Ok(p)
    }

    fn corona_rules(&self, gd: &Family, hd: &Family, k: u32) -> Result<Vec<BoundResult>> {
        let g = gd.build()?;
        let h = hd.build()?;
        let p = self.corona_params(gd, hd, k)?;
        let mut out = vec![
            corona_lower(&p),
            corona_exact_small_diameter(&p),
            corona_upper_components(&p),
            corona_exact_empty_h(&p),
            corona_exact_complete_h(&p),
            corona_upper_k1_join(&p),
            corona_exact_big_diameter_or_cycle(&p),
            corona_exact_n_minus_2(&p, recognize_dim_n_minus_2(&h)),
        ];
        if p.n2 == 1 {
            out.push(corona_k1_upper(p.n1, k, p.g_connected));
            if is_tree(&g) {
                out.push(tree_corona_k1_dim(&g, k)?);
            }
        }
        Ok(out)
    }

    /// Dimension of a connected graph of order at least 2: from an exact rule
    /// if one applies, else from the solver. `None` when neither settles it.
    pub fn known_dim(&self, desc: &Family, g: &Graph) -> Result<Option<usize>> {
        if g.order() < 2 || !g.is_connected() {
            return Ok(None);
        }
        let from_rules = self
            .evaluate_built(desc, g)?
            .into_iter()
            .find(|r| r.kind == BoundKind::Exact)
            .and_then(|r| r.value);
        if from_rules.is_some() {
            return Ok(from_rules);
        }
        Ok(metric_dimension_exact(g, &self.budget)?.value())
    }

    /// `dim(K1 ⊙ H)`: the wheel or fan formula when `H` is a cycle or a
    /// path, otherwise the solver on `K1 ⊙ H`.
    pub fn dim_k1_join(&self, h: &Graph) -> Result<Option<usize>> {
        let n = h.order();
        if n == 0 {
            return Ok(None);
        }
        if h.is_cycle() {
            return Ok(wheel_dim(n)?.value);
        }
        if h.is_path() {
            return Ok(fan_dim(n).value);
        }
        let (j, _) = corona(&Graph::edgeless(1), h);
        Ok(metric_dimension_exact(&j, &self.budget)?.value())
    }
}

/// `n1 (n2+1)^(k-1) (n2-2)` when `H` has order at least 4, diameter at most
/// 2 and is one of the `dim = n - 2` families.
pub fn corona_exact_n_minus_2(p: &CoronaParams, h: NMinus2) -> BoundResult {
    let mut g = Guards::new(Source::NMinus2);
    let ok = g.check("k >= 1", p.k >= 1)
        && g.check("G connected", p.g_connected)
        && g.check("n1 >= 2", p.n1 >= 2)
        && g.check("n2 >= 4", p.n2 >= 4)
        && g.check("D(H) <= 2", p.diam_h.is_some_and(|d| d <= 2))
        && g.check("H in n-2 families", matches!(h, NMinus2::Recognized(_)));
    match p.multiplier().and_then(|m| m.checked_mul(p.n2.saturating_sub(2))) {
        Some(v) if ok => g.exact(v),
        _ => g.inapplicable(),
    }
}

/// Rules read off the graph itself: paths, cycles, complete graphs, trees,
/// the `n - 2` families, and wheels or fans around a universal vertex.
fn structural_rules(g: &Graph) -> Result<Vec<BoundResult>> {
    let mut out = Vec::new();
    let n = g.order();
    let base = if n < 2 {
        None
    } else if g.is_path() {
        Some(Family::Path(n))
    } else if g.is_cycle() {
        Some(Family::Cycle(n))
    } else if g.is_complete() {
        Some(Family::Complete(n))
    } else {
        None
    };
    if let Some(f) = base {
        out.push(base_family_dim(&f));
    }
    if is_tree(g) && n >= 2 {
        out.push(tree_dim(g)?);
    }
    if let NMinus2::Recognized(family) = recognize_dim_n_minus_2(g) {
        let mut guards = Guards::new(Source::NMinus2);
        guards.check("G connected", true);
        guards.check("order >= 4", true);
        guards.check(
            match family {
                NMinus2Family::CompleteBipartite => "G = K_{s,t}",
                NMinus2Family::CliqueJoinEmpty => "G = K_s + N_t",
                NMinus2Family::CliqueJoinCliquePlusVertex => "G = K_s + (K_1 ∪ K_t)",
            },
            true,
        );
        out.push(guards.exact(n - 2));
    }
    if let Some(hub) = g.vertices().find(|&v| g.degree(v) + 1 == n) {
        let rest: Vec<_> = g.vertices().filter(|&v| v != hub).collect();
        let rim = g.induced_subgraph(&rest);
        if rim.is_cycle() {
            out.push(wheel_dim(rim.order())?);
        } else if rim.is_path() {
            out.push(fan_dim(rim.order()));
        }
    }
    Ok(out)
}
