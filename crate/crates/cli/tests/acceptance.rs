//! End-to-end acceptance run: each criterion prints one PASS/FAIL line and
//! the process exits nonzero if any criterion fails.

use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use coronadim_core::properties::{COPIES_HIT, COPY_DISTANCES, COPY_RADIUS, COPY_RESOLVING, SPINE_STRIP};
use coronadim_core::report::{run_instances, ReportRecord, RunOptions, Verdict};
use coronadim_core::suite::{corpus, Instance, Selection, Suite, DEFAULT_SEED};
use coronadim_core::{BoundKind, Family, Graph, SolverBudget, SolverStatus, Source};

struct Run {
    instances: Vec<Instance>,
    records: Vec<ReportRecord>,
    elapsed: Duration,
}

fn run_suite(suite: Suite) -> Run {
    let budget = SolverBudget::default();
    let instances = corpus(Selection::One(suite), DEFAULT_SEED);
    let start = Instant::now();
    let records = run_instances(
        &instances,
        RunOptions {
            budget: &budget,
            timings: false,
        },
    )
    .expect("corpus instances are valid");
    Run {
        instances,
        records,
        elapsed: start.elapsed(),
    }
}

impl Run {
    fn pairs(&self) -> impl Iterator<Item = (&Instance, &ReportRecord)> {
        self.instances.iter().zip(&self.records)
    }
}

type Outcome = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn value(r: &ReportRecord) -> Result<usize, String> {
    r.solver
        .value()
        .ok_or_else(|| format!("{} ({}) finished with bounds only", r.id, r.expr))
}

fn expect_eq(r: &ReportRecord, want: usize) -> Outcome {
    let got = value(r)?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{} ({}): solver {got}, expected {want}", r.id, r.expr))
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Outcome {
    if elapsed <= Duration::from_secs(limit_s) {
        Ok(())
    } else {
        Err(format!("took {:.1}s, limit {limit_s}s", elapsed.as_secs_f64()))
    }
}

/// Spine, attached graph and level of a corona instance.
fn parts(f: &Family) -> (Graph, Graph, u32) {
    match f {
        Family::Corona(g, h, k) => (g.build().unwrap(), h.build().unwrap(), *k),
        other => panic!("{other} is not a corona"),
    }
}

fn values_match(run: &Run, expected: &[usize]) -> Outcome {
    if run.records.len() != expected.len() {
        return Err(format!("{} instances, expected {}", run.records.len(), expected.len()));
    }
    for (r, &want) in run.records.iter().zip(expected) {
        expect_eq(r, want)?;
    }
    Ok(())
}

fn wheels(run: &Run) -> Outcome {
    values_match(run, &[3, 2, 2, 3, 3, 3, 4, 4, 4, 5])?;
    within(run.elapsed, 5)
}

fn fans(run: &Run) -> Outcome {
    values_match(run, &[1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5])?;
    within(run.elapsed, 5)
}

fn diam2(run: &Run) -> Outcome {
    // dim of K2, K3, P3, K1,3, C4, C5.
    let dim_h = [1, 2, 1, 2, 2, 2];
    let spines = [2, 3, 3];
    let mut expected: Vec<usize> = spines.iter().flat_map(|n1| dim_h.iter().map(move |d| n1 * d)).collect();
    expected.push(6);
    values_match(run, &expected)?;
    let orders_ok = run.records.iter().all(|r| r.order <= 18);
    if !orders_ok {
        return Err("a product exceeds order 18".into());
    }
    within(run.elapsed, 60)
}

fn cycles(run: &Run) -> Outcome {
    // Twice the dimension of the 7-spoke wheel and the 7-vertex fan, both 3.
    values_match(run, &[6, 6])?;
    for r in &run.records {
        let fired = r
            .oracle
            .iter()
            .any(|b| b.source == Source::Diam6OrCycle && b.kind == BoundKind::Exact && b.value == Some(6));
        if !fired {
            return Err(format!("{}: no exact value 6 from the long-diameter rule", r.expr));
        }
    }
    within(run.elapsed, 120)
}

fn empty_h(run: &Run) -> Outcome {
    let mut unconnected = 0;
    for (inst, r) in run.pairs() {
        let (g, h, _) = parts(&inst.family);
        let (n1, n2) = (g.order(), h.order());
        if h.size() == 0 {
            expect_eq(r, n1 * (n2 - 1))?;
        } else if !h.is_connected() {
            unconnected += 1;
            let v = value(r)?;
            if v > n1 * (n2 - 2) {
                return Err(format!("{}: {v} > {}", r.expr, n1 * (n2 - 2)));
            }
        }
    }
    let empties: Vec<usize> = run.records[..3].iter().map(value).collect::<Result<_, _>>()?;
    if empties != [2, 4, 3] {
        return Err(format!("edgeless copies gave {empties:?}"));
    }
    if unconnected != 5 {
        return Err(format!("{unconnected} unconnected attached graphs, expected 5"));
    }
    Ok(())
}

fn complete_h(run: &Run) -> Outcome {
    let mut seen = [0usize; 5];
    for (inst, r) in run.pairs() {
        let (g, h, _) = parts(&inst.family);
        if !h.is_connected() || !(3..=4).contains(&h.order()) {
            continue;
        }
        seen[h.order()] += 1;
        let (n1, n2) = (g.order(), h.order());
        let v = value(r)?;
        let full = n1 * (n2 - 1);
        if h.is_complete() != (v == full) {
            return Err(format!("{}: value {v}, complete = {}", r.expr, h.is_complete()));
        }
        if !h.is_complete() && v > n1 * (n2 - 2) {
            return Err(format!("{}: {v} > {}", r.expr, n1 * (n2 - 2)));
        }
    }
    if seen[3] != 2 || seen[4] != 6 {
        return Err(format!(
            "{} connected graphs of order 3 and {} of order 4",
            seen[3], seen[4]
        ));
    }
    Ok(())
}

fn corona_properties(runs: &[&Run]) -> Outcome {
    let mut checked = 0;
    for run in runs {
        for (inst, r) in run.pairs() {
            let Family::Corona(..) = inst.family else { continue };
            let (_, h, _) = parts(&inst.family);
            let mut required = vec![COPY_DISTANCES, COPY_RADIUS, COPIES_HIT, SPINE_STRIP];
            if h.is_connected() {
                required.push(COPY_RESOLVING);
            }
            for name in required {
                match r.properties.iter().find(|p| p.name == name) {
                    None => return Err(format!("{}: {name} not checked", r.expr)),
                    Some(p) if !p.holds => {
                        return Err(format!(
                            "{}: {name} fails: {}",
                            r.expr,
                            p.detail.clone().unwrap_or_default()
                        ))
                    }
                    Some(_) => checked += 1,
                }
            }
        }
    }
    if checked == 0 {
        return Err("no corona instances".into());
    }
    Ok(())
}

fn leaves(g: &Graph) -> usize {
    g.vertices().filter(|&v| g.degree(v) == 1).count()
}

fn trees(run: &Run) -> Outcome {
    let mut plain = 0;
    let mut with_k1 = 0;
    let mut iterated = 0;
    for (inst, r) in run.pairs() {
        match &inst.family {
            Family::Corona(_, _, 2) => {
                iterated += 1;
                expect_eq(r, 3)?;
            }
            Family::Corona(..) => {
                let (t, _, _) = parts(&inst.family);
                if t.order() > 6 {
                    return Err(format!("{}: tree of order {} crossed with K1", r.expr, t.order()));
                }
                with_k1 += 1;
                expect_eq(r, leaves(&t))?;
            }
            _ => {
                plain += 1;
                if !(5..=10).contains(&r.order) {
                    return Err(format!("{}: order {}", r.expr, r.order));
                }
                let formula = r
                    .oracle
                    .iter()
                    .find(|b| b.source == Source::Tree)
                    .and_then(|b| b.value)
                    .ok_or_else(|| format!("{}: no tree formula value", r.expr))?;
                expect_eq(r, formula)?;
            }
        }
    }
    if (plain, with_k1, iterated) != (200, 20, 1) {
        return Err(format!("suite shape {plain}/{with_k1}/{iterated}"));
    }
    within(run.elapsed, 120)
}

fn k1(run: &Run) -> Outcome {
    for (inst, r) in run.pairs() {
        let (g, _, _) = parts(&inst.family);
        let n = g.order();
        let v = value(r)?;
        if !g.is_connected() || n > 6 || v > n - 1 {
            return Err(format!("{}: {v} against n - 1 = {}", r.expr, n - 1));
        }
        if g.is_complete() && n >= 3 && v != n - 1 {
            return Err(format!("{}: {v}, expected {}", r.expr, n - 1));
        }
    }
    let tail: Vec<usize> = run.records[run.records.len() - 3..]
        .iter()
        .map(value)
        .collect::<Result<_, _>>()?;
    if tail != [2, 3, 4] {
        return Err(format!("complete graphs with pendants gave {tail:?}"));
    }
    if run.records.len() != 53 {
        return Err(format!("{} instances", run.records.len()));
    }
    within(run.elapsed, 60)
}

fn sandwich(runs: &[Run]) -> Outcome {
    for r in runs.iter().flat_map(|run| &run.records) {
        let v = value(r)?;
        for b in r.oracle.iter().filter(|b| b.is_applicable()) {
            if !b.admits(v) {
                return Err(format!(
                    "{}: {} {:?} {:?} vs solver {v}",
                    r.expr, b.source, b.kind, b.value
                ));
            }
        }
        if r.verdict == Verdict::Mismatch || r.reconciled.is_none() {
            return Err(format!("{}: {}", r.expr, r.mismatch.clone().unwrap_or_default()));
        }
    }
    Ok(())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.jsonl"));
        let status = Command::new(env!("CARGO_BIN_EXE_coronadim"))
            .args(["crossvalidate", "--suite", "all", "--seed", "7", "--out"])
            .arg(&path)
            .stderr(Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("run {i} exited with {status}"));
        }
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if outputs[0].is_empty() {
        return Err("empty output".into());
    }
    if outputs[0] != outputs[1] {
        return Err("outputs differ".into());
    }
    Ok(())
}

fn main() {
    let runs: Vec<Run> = Suite::ALL.iter().map(|&s| run_suite(s)).collect();
    let get = |s: Suite| &runs[Suite::ALL.iter().position(|&x| x == s).unwrap()];
    let bounds = get(Suite::Bounds);

    let criteria: Vec<Criterion> = vec![
        (
            "wheel dimensions for 3..12 spokes",
            Box::new(|| wheels(get(Suite::Wheels))),
        ),
        (
            "fan dimensions for paths of order 1..12",
            Box::new(|| fans(get(Suite::Fans))),
        ),
        (
            "diameter-two attached graphs scale dim(H)",
            Box::new(|| diam2(get(Suite::Diam2))),
        ),
        (
            "long cycles and paths match the hub join",
            Box::new(|| cycles(get(Suite::Cycles))),
        ),
        (
            "edgeless and unconnected attached graphs",
            Box::new(|| {
                empty_h(bounds)?;
                within(bounds.elapsed, 30)
            }),
        ),
        (
            "complete attached graphs characterized",
            Box::new(|| {
                complete_h(bounds)?;
                within(bounds.elapsed, 60)
            }),
        ),
        (
            "copy structure and minimum witness properties",
            Box::new(|| corona_properties(&[get(Suite::Diam2), get(Suite::Cycles), bounds])),
        ),
        (
            "random trees and trees with pendants",
            Box::new(|| trees(get(Suite::Trees))),
        ),
        ("pendant coronas stay below n - 1", Box::new(|| k1(get(Suite::K1)))),
        ("every bound brackets the solver", Box::new(|| sandwich(&runs))),
        ("crossvalidate output is reproducible", Box::new(determinism)),
    ];

    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS criterion {:>2}: {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    let bounds_only = runs
        .iter()
        .flat_map(|r| &r.records)
        .filter(|r| r.solver.status == SolverStatus::BoundsOnly)
        .count();
    println!(
        "{} instances in {:.2}s, {bounds_only} unfinished searches, {failures} failed criteria",
        runs.iter().map(|r| r.records.len()).sum::<usize>(),
        runs.iter().map(|r| r.elapsed.as_secs_f64()).sum::<f64>()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
