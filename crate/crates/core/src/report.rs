//! Running instances through the solver and the oracle, and writing the
//! resulting records.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::corona::iterated_corona;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::Graph;
use crate::oracle::{reconcile, BoundResult, Oracle, Reconciled};
use crate::properties::{corona_checks, neighbor_distance_check, PropertyCheck};
use crate::resolver::{metric_dimension_exact, SolverBudget, SolverResult, SolverStatus};
use crate::suite::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// At least one rule applies and every applicable rule admits the solver value.
    Agree,
    /// No rule applies.
    OracleSilent,
    /// Some rule contradicts the solver or another rule.
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub id: String,
    pub suite: Option<String>,
    pub expr: String,
    pub order: usize,
    pub solver: SolverResult,
    pub oracle: Vec<BoundResult>,
    pub reconciled: Option<Reconciled>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
    pub properties: Vec<PropertyCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

impl ReportRecord {
    pub fn property_violations(&self) -> usize {
        self.properties.iter().filter(|p| !p.holds).count()
    }

    /// Mismatches, unfinished searches and violated properties.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Mismatch
            || self.solver.status == SolverStatus::BoundsOnly
            || self.property_violations() > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions<'a> {
    pub budget: &'a SolverBudget,
    pub timings: bool,
}

/// Solves `family`, evaluates every rule and checks the structural properties.
///
/// Fails when the graph cannot be built or is disconnected or trivial.
pub fn run_family(id: &str, suite: Option<&str>, family: &Family, opts: RunOptions<'_>) -> Result<ReportRecord> {
    let start = Instant::now();
    let g = family.build()?;
    let solver = metric_dimension_exact(&g, opts.budget)?;
    let oracle = Oracle::new(opts.budget.clone()).evaluate_built(family, &g)?;
    let (verdict, reconciled, mismatch) = judge(&oracle, &solver);

    let mut properties = vec![neighbor_distance_check(&g)];
    if solver.status == SolverStatus::Exact {
        if let Family::Corona(gd, hd, k) = family {
            properties.extend(corona_properties(gd, hd, *k, &solver)?);
        }
    }
    Ok(ReportRecord {
        id: id.to_string(),
        suite: suite.map(str::to_string),
        expr: family.to_string(),
        order: g.order(),
        solver,
        oracle,
        reconciled,
        verdict,
        mismatch,
        properties,
        duration_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

fn corona_properties(gd: &Family, hd: &Family, k: u32, solver: &SolverResult) -> Result<Vec<PropertyCheck>> {
    let g = gd.build()?;
    let h = hd.build()?;
    if !g.is_connected() {
        return Ok(Vec::new());
    }
    let (product, structures) = iterated_corona(&g, &h, k)?;
    let top = structures.last().expect("k >= 1 yields a structure");
    corona_checks(&product, top, &h, &solver.witness)
}

fn judge(oracle: &[BoundResult], solver: &SolverResult) -> (Verdict, Option<Reconciled>, Option<String>) {
    let applicable: Vec<&BoundResult> = oracle.iter().filter(|r| r.is_applicable()).collect();
    if let Some(v) = solver.value() {
        if let Some(bad) = applicable.iter().find(|r| !r.admits(v)) {
            let detail = format!(
                "{} gives {:?} {} but the solver finds {v}",
                bad.source,
                bad.kind,
                bad.value.unwrap_or_default()
            );
            return (Verdict::Mismatch, None, Some(detail));
        }
    }
    match reconcile(oracle, Some(solver)) {
        Err(Error::Inconsistent(msg)) => (Verdict::Mismatch, None, Some(msg)),
        Err(e) => (Verdict::Mismatch, None, Some(e.to_string())),
        Ok(r) if applicable.is_empty() => (Verdict::OracleSilent, Some(r), None),
        Ok(r) => (Verdict::Agree, Some(r), None),
    }
}

/// Runs every instance, in parallel, returning records in instance order.
pub fn run_instances(instances: &[Instance], opts: RunOptions<'_>) -> Result<Vec<ReportRecord>> {
    instances
        .par_iter()
        .map(|inst| run_family(&inst.id, Some(inst.suite.name()), &inst.family, opts))
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub agree: usize,
    pub oracle_silent: usize,
    pub mismatch: usize,
    pub bounds_only: usize,
    pub property_violations: usize,
}

impl Summary {
    pub fn of(records: &[ReportRecord]) -> Self {
        let mut s = Summary {
            instances: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.verdict {
                Verdict::Agree => s.agree += 1,
                Verdict::OracleSilent => s.oracle_silent += 1,
                Verdict::Mismatch => s.mismatch += 1,
            }
            if r.solver.status == SolverStatus::BoundsOnly {
                s.bounds_only += 1;
            }
            s.property_violations += r.property_violations();
        }
        s
    }

    pub fn failures(&self) -> usize {
        self.mismatch + self.bounds_only + self.property_violations
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} instances: {} AGREE, {} ORACLE_SILENT, {} MISMATCH, {} BOUNDS_ONLY, {} property violations",
            self.instances, self.agree, self.oracle_silent, self.mismatch, self.bounds_only, self.property_violations
        )
    }
}

pub fn write_json_lines<W: Write>(mut out: W, records: &[ReportRecord]) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    suite: &'a str,
    expr: &'a str,
    order: usize,
    status: SolverStatus,
    lower: usize,
    upper: usize,
    witness: String,
    subsets_checked: u64,
    oracle: String,
    reconciled_lower: Option<usize>,
    reconciled_upper: Option<usize>,
    verdict: Verdict,
    property_violations: usize,
    duration_ms: Option<u64>,
}

/// Column order of [`write_csv`].
pub const CSV_COLUMNS: [&str; 15] = [
    "id",
    "suite",
    "expr",
    "order",
    "status",
    "lower",
    "upper",
    "witness",
    "subsets_checked",
    "oracle",
    "reconciled_lower",
    "reconciled_upper",
    "verdict",
    "property_violations",
    "duration_ms",
];

/// Applicable oracle results as `tag:KIND=value`, separated by `;`.
fn oracle_cell(results: &[BoundResult]) -> String {
    results
        .iter()
        .filter(|r| r.is_applicable())
        .map(|r| {
            let kind = serde_json::to_value(r.kind).expect("kinds serialize");
            format!(
                "{}:{}={}",
                r.source,
                kind.as_str().unwrap_or_default(),
                r.value.unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn write_csv<W: Write>(out: W, records: &[ReportRecord]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow {
            id: &r.id,
            suite: r.suite.as_deref().unwrap_or(""),
            expr: &r.expr,
            order: r.order,
            status: r.solver.status,
            lower: r.solver.lower,
            upper: r.solver.upper,
            witness: r.solver.witness.to_string(),
            subsets_checked: r.solver.subsets_checked,
            oracle: oracle_cell(&r.oracle),
            reconciled_lower: r.reconciled.as_ref().map(|c| c.lower),
            reconciled_upper: r.reconciled.as_ref().and_then(|c| c.upper),
            verdict: r.verdict,
            property_violations: r.property_violations(),
            duration_ms: r.duration_ms,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Builds a record for a graph without a descriptor, as read from an edge list.
pub fn run_graph(id: &str, g: &Graph, opts: RunOptions<'_>) -> Result<ReportRecord> {
    run_family(id, None, &Family::explicit(g), opts)
}
