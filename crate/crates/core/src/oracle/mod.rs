//! Closed-form metric dimension values and bounds.
//!
//! Each rule checks its hypotheses before emitting anything; a rule whose
//! hypotheses fail yields [`BoundKind::Inapplicable`], never a weaker or
//! unsound bound.

mod eval;
mod formulas;
mod join;

use std::fmt;

use serde::{Serialize, Serializer};

pub use eval::{corona_exact_n_minus_2, Oracle};
pub use formulas::*;
pub use join::{recognize_dim_n_minus_2, recognize_join_decomposition, JoinDecomposition, NMinus2, NMinus2Family};

use crate::error::{Error, Result};
use crate::resolver::{SolverResult, SolverStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundKind {
    Exact,
    Lower,
    Upper,
    Inapplicable,
}

/// Stable identifiers of the implemented rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    /// `n1 (n2+1)^(k-1) dim(H)` lower bound.
    Lower,
    /// Equality with the lower bound when `D(H) <= 2`.
    Diam2,
    /// Upper bound from component counts of `H`.
    AlphaBeta,
    /// Equality for edgeless `H`.
    EmptyH,
    /// Equality iff `H` is complete, `n2 - 2` bound otherwise.
    CompleteH,
    /// Upper bound through `dim(K1 ⊙ H)`.
    K1JoinUpper,
    /// Equality with the `dim(K1 ⊙ H)` bound for `D(H) >= 6` or cycles.
    Diam6OrCycle,
    /// `dim(G ⊙^k K1) <= 2^(k-1) n - 1`.
    K1Corona,
    /// `dim = n - 2` characterization.
    NMinus2,
    Wheel,
    Fan,
    /// `dim(T) = leaves - exterior major vertices`.
    Tree,
    /// `dim(T ⊙^k K1)` for trees.
    TreeCorona,
    /// Paths, cycles and complete graphs.
    BaseFamily,
}

impl Source {
    pub const ALL: [Source; 14] = [
        Source::Lower,
        Source::Diam2,
        Source::AlphaBeta,
        Source::EmptyH,
        Source::CompleteH,
        Source::K1JoinUpper,
        Source::Diam6OrCycle,
        Source::K1Corona,
        Source::NMinus2,
        Source::Wheel,
        Source::Fan,
        Source::Tree,
        Source::TreeCorona,
        Source::BaseFamily,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Source::Lower => "thm:lower",
            Source::Diam2 => "thm:diam2",
            Source::AlphaBeta => "thm:alphabeta",
            Source::EmptyH => "cor:emptyH",
            Source::CompleteH => "thm:completeH",
            Source::K1JoinUpper => "thm:k1join-upper",
            Source::Diam6OrCycle => "thm:diam6-or-cycle",
            Source::K1Corona => "thm:k1-corona",
            Source::NMinus2 => "lem:n-2",
            Source::Wheel => "rem:wheel",
            Source::Fan => "rem:fan",
            Source::Tree => "lem:tree",
            Source::TreeCorona => "thm:tree-corona",
            Source::BaseFamily => "fact:base",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Source {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub kind: BoundKind,
    pub value: Option<usize>,
    pub source: Source,
    /// Hypotheses that held, in the order they were checked.
    pub conditions_checked: Vec<&'static str>,
}

impl BoundResult {
    pub fn is_applicable(&self) -> bool {
        self.kind != BoundKind::Inapplicable
    }

    /// Whether `dim` is consistent with this result.
    pub fn admits(&self, dim: usize) -> bool {
        match (self.kind, self.value) {
            (BoundKind::Exact, Some(v)) => dim == v,
            (BoundKind::Lower, Some(v)) => dim >= v,
            (BoundKind::Upper, Some(v)) => dim <= v,
            _ => true,
        }
    }
}

/// Records which hypotheses of a rule held.
pub(crate) struct Guards {
    source: Source,
    passed: Vec<&'static str>,
}

impl Guards {
    pub(crate) fn new(source: Source) -> Self {
        Guards {
            source,
            passed: Vec::new(),
        }
    }

    pub(crate) fn check(&mut self, name: &'static str, holds: bool) -> bool {
        if holds {
            self.passed.push(name);
        }
        holds
    }

    fn finish(self, kind: BoundKind, value: Option<usize>) -> BoundResult {
        BoundResult {
            kind,
            value,
            source: self.source,
            conditions_checked: self.passed,
        }
    }

    pub(crate) fn inapplicable(self) -> BoundResult {
        self.finish(BoundKind::Inapplicable, None)
    }

    pub(crate) fn exact(self, v: usize) -> BoundResult {
        self.finish(BoundKind::Exact, Some(v))
    }

    pub(crate) fn lower(self, v: usize) -> BoundResult {
        self.finish(BoundKind::Lower, Some(v))
    }

    pub(crate) fn upper(self, v: usize) -> BoundResult {
        self.finish(BoundKind::Upper, Some(v))
    }
}

/// Best known interval after combining rule outputs and a solver result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reconciled {
    pub lower: usize,
    pub upper: Option<usize>,
}

impl Reconciled {
    pub fn exact(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}

/// Intersects every applicable bound. Disagreeing exact values or an empty
/// interval are reported as [`Error::Inconsistent`].
pub fn reconcile(results: &[BoundResult], solver: Option<&SolverResult>) -> Result<Reconciled> {
    let mut exact: Option<(usize, String)> = None;
    let mut lower = 0usize;
    let mut upper: Option<usize> = None;
    let mut any = false;

    let mut set_exact = |v: usize, who: String| -> Result<()> {
        match &exact {
            Some((w, other)) if *w != v => Err(Error::Inconsistent(format!(
                "{other} gives exactly {w} but {who} gives exactly {v}"
            ))),
            Some(_) => Ok(()),
            None => {
                exact = Some((v, who));
                Ok(())
            }
        }
    };

    for r in results.iter().filter(|r| r.is_applicable()) {
        let Some(v) = r.value else { continue };
        any = true;
        match r.kind {
            BoundKind::Exact => {
                set_exact(v, r.source.to_string())?;
                lower = lower.max(v);
                upper = Some(upper.map_or(v, |u| u.min(v)));
            }
            BoundKind::Lower => lower = lower.max(v),
            BoundKind::Upper => upper = Some(upper.map_or(v, |u| u.min(v))),
            BoundKind::Inapplicable => {}
        }
    }
    if let Some(s) = solver {
        any = true;
        if s.status == SolverStatus::Exact {
            set_exact(s.lower, "solver".into())?;
        }
        lower = lower.max(s.lower);
        upper = Some(upper.map_or(s.upper, |u| u.min(s.upper)));
    }
    if !any {
        return Err(Error::Inconsistent("no applicable result to reconcile".into()));
    }
    if let Some(u) = upper {
        if lower > u {
            return Err(Error::Inconsistent(format!(
                "lower bound {lower} exceeds upper bound {u}"
            )));
        }
    }
    Ok(Reconciled { lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolver::LandmarkSet;

    fn r(kind: BoundKind, v: usize) -> BoundResult {
        BoundResult {
            kind,
            value: Some(v),
            source: Source::Lower,
            conditions_checked: vec![],
        }
    }

    #[test]
    fn reconcile_examples() {
        use BoundKind::*;
        let both = reconcile(&[r(Lower, 6), r(Upper, 6)], None).unwrap();
        assert_eq!(both.exact(), Some(6));
        let gap = reconcile(&[r(Lower, 4), r(Upper, 6)], None).unwrap();
        assert_eq!(
            gap,
            Reconciled {
                lower: 4,
                upper: Some(6)
            }
        );
        assert_eq!(gap.exact(), None);
        assert_eq!(reconcile(&[r(Exact, 6), r(Upper, 6)], None).unwrap().exact(), Some(6));
    }

    #[test]
    fn reconcile_inconsistencies() {
        use BoundKind::*;
        assert!(matches!(
            reconcile(&[r(Exact, 5), r(Exact, 6)], None),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            reconcile(&[r(Lower, 7), r(Upper, 6)], None),
            Err(Error::Inconsistent(_))
        ));
        assert!(reconcile(&[], None).is_err());
        let solver = SolverResult {
            status: SolverStatus::Exact,
            lower: 3,
            upper: 3,
            witness: LandmarkSet::default(),
            subsets_checked: 1,
        };
        assert!(reconcile(&[r(Exact, 4)], Some(&solver)).is_err());
        assert_eq!(reconcile(&[r(Upper, 4)], Some(&solver)).unwrap().exact(), Some(3));
    }

    #[test]
    fn source_ids_are_unique() {
        let mut ids: Vec<_> = Source::ALL.iter().map(|s| s.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), Source::ALL.len());
    }
}
