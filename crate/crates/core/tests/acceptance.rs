//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p idgraph-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use idgraph_core::graph::{build_idempotent_graph, Graph, Shape};
use idgraph_core::recognize::{is_planar, is_split, is_threshold};
use idgraph_core::ring::{FiniteRing, RingSpec};
use idgraph_core::selftest::{run_selftest, SelftestConfig};
use idgraph_core::sweep::{run_sweep, SweepConfig, SweepOutcome, DEFAULT_CATALOG};
use idgraph_core::theorems::{ClassificationReport, Prediction};

/// Per-ring limit for a single planarity verdict.
const PLANARITY_TIME_LIMIT: Duration = Duration::from_secs(1);
/// Limit for the default sweep on one worker thread.
const SWEEP_TIME_LIMIT: Duration = Duration::from_secs(300);
const MIN_DEGREE_VERTICES: usize = 10_000;
/// Product rings in the default sweep (catalog of 13, 2..=3 factors, |R| <= 256).
const DEFAULT_PRODUCT_RINGS: usize = 390;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn ring(s: &str) -> FiniteRing {
    FiniteRing::parse(s).expect("acceptance ring parses")
}

fn canonical(s: &str) -> String {
    RingSpec::parse(s).expect("spec parses").to_string()
}

fn nonlocal(sweep: &SweepOutcome) -> impl Iterator<Item = &ClassificationReport> {
    sweep.reports.iter().filter(|r| !r.local)
}

/// Factors as a sorted list, so lookups ignore factor order.
fn factor_multiset(spec: &str) -> Vec<String> {
    let mut f: Vec<String> = canonical(spec).split(" * ").map(String::from).collect();
    f.sort();
    f
}

fn find<'a>(sweep: &'a SweepOutcome, s: &str) -> &'a ClassificationReport {
    let key = factor_multiset(s);
    sweep
        .reports
        .iter()
        .find(|r| factor_multiset(&r.spec) == key)
        .unwrap_or_else(|| panic!("{s} missing from sweep"))
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for (s, n) in [
        ("Z3[x]/(x^2) * Z2", 18),
        ("Z3[x]/(x^2) * Z3", 27),
        ("Z3[x]/(x^2) * Z3[x]/(x^2)", 81),
    ] {
        let g = build_idempotent_graph(&ring(s));
        let start = Instant::now();
        let planar = is_planar(&g).value;
        let took = start.elapsed();
        pass &= g.n() == n && !planar && took < PLANARITY_TIME_LIMIT;
        notes.push(format!("{s}: n={} planar={planar} in {took:?}", g.n()));
    }
    outcome(pass, notes.join("; "))
}

fn criterion_2(sweep: &SweepOutcome) -> Outcome {
    let mut pass = true;
    for n in 2..=4 {
        let g = build_idempotent_graph(&ring(&vec!["Z2"; n].join(" * ")));
        pass &= g == Graph::complete(1 << n) && is_split(&g).value && is_threshold(&g).value;
    }
    let boolean: Vec<String> = (2..=4)
        .map(|n| canonical(&vec!["Z2"; n].join(" * ")))
        .collect();
    let mut others = 0;
    for r in nonlocal(sweep) {
        let expected = boolean.contains(&r.spec);
        pass &= r.recognized.split == expected
            && r.recognized.threshold == expected
            && r.predicted.split == Prediction::from_bool(expected)
            && r.predicted.threshold == Prediction::from_bool(expected);
        others += !expected as usize;
    }
    outcome(
        pass,
        format!("Z2^2..Z2^4 complete and split/threshold; {others} other non-local rings neither"),
    )
}

/// Independent count of factor multisets: all index tuples, keeping the sorted ones.
fn count_products(sizes: &[usize], max: usize, factors: usize) -> usize {
    let mut count = 0;
    let mut tuple = vec![0usize; factors];
    loop {
        let sorted = tuple.windows(2).all(|w| w[0] <= w[1]);
        let size: usize = tuple.iter().map(|&i| sizes[i]).product();
        count += (sorted && size <= max) as usize;
        let mut k = 0;
        loop {
            if k == factors {
                return count;
            }
            tuple[k] += 1;
            if tuple[k] < sizes.len() {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
    }
}

fn criterion_3(sweep: &SweepOutcome, took: Duration) -> Outcome {
    let sizes: Vec<usize> = DEFAULT_CATALOG.iter().map(|s| ring(s).size()).collect();
    let expected = count_products(&sizes, 256, 2) + count_products(&sizes, 256, 3);
    let mismatches = nonlocal(sweep)
        .filter(|r| r.predicted.planar.as_bool() != Some(r.recognized.planar))
        .count();
    let planar = nonlocal(sweep).filter(|r| r.recognized.planar).count();
    let products = sweep.product_rings();
    outcome(
        mismatches == 0
            && products == expected
            && products == DEFAULT_PRODUCT_RINGS
            && took <= SWEEP_TIME_LIMIT,
        format!(
            "{products} products (independent count {expected}), {planar} planar, \
             {mismatches} mismatches, single-thread sweep {took:?}"
        ),
    )
}

fn criterion_4(sweep: &SweepOutcome) -> Outcome {
    let bad: Vec<&str> = nonlocal(sweep)
        .filter(|r| r.recognized.outerplanar || r.recognized.cactus || r.recognized.unicyclic)
        .map(|r| r.spec.as_str())
        .collect();
    let n = nonlocal(sweep).count();
    outcome(
        bad.is_empty() && n > 0,
        format!("{n} non-local rings, violations: {bad:?}"),
    )
}

fn criterion_5(sweep: &SweepOutcome) -> Outcome {
    let mismatches = nonlocal(sweep)
        .filter(|r| r.predicted.cograph.as_bool() != Some(r.recognized.cograph))
        .count();
    let char2 = nonlocal(sweep)
        .filter(|r| r.recognized.cograph && r.profiles.iter().all(|p| p.factor_char == 2))
        .count();
    let z3 = nonlocal(sweep)
        .filter(|r| r.recognized.cograph && r.profiles.iter().any(|p| p.is_z3))
        .count();
    let negatives = nonlocal(sweep).filter(|r| !r.recognized.cograph).count();
    let examples = find(sweep, "GF(4) * Z2").recognized.cograph
        && find(sweep, "Z3 * Z2 * Z2").recognized.cograph
        && !find(sweep, "Z4 * Z2").recognized.cograph;
    outcome(
        mismatches == 0 && char2 > 0 && z3 > 0 && negatives > 0 && examples,
        format!(
            "{mismatches} mismatches; cographs: {char2} all-char-2, {z3} with Z3; {negatives} non-cographs"
        ),
    )
}

fn criterion_6(sweep: &SweepOutcome) -> Outcome {
    let total: usize = sweep.reports.iter().map(|r| r.size).sum();
    let failing: Vec<&str> = sweep
        .reports
        .iter()
        .filter(|r| !r.degree_formula)
        .map(|r| r.spec.as_str())
        .collect();
    let locals = sweep.reports.iter().filter(|r| r.local).count();
    outcome(
        failing.is_empty() && total >= MIN_DEGREE_VERTICES && locals > 0,
        format!(
            "{total} vertices over {} rings ({locals} local), failures: {failing:?}",
            sweep.reports.len()
        ),
    )
}

fn criterion_7(sweep: &SweepOutcome) -> Outcome {
    let bad = sweep
        .reports
        .iter()
        .filter(|r| {
            r.predicted.connected.as_bool() != Some(r.recognized.connected)
                || r.predicted.path_graph.as_bool() != Some(r.recognized.path_graph)
        })
        .count();
    let explicit = [("Z4", 4), ("Z9", 9)].iter().all(|&(s, n)| {
        let g = build_idempotent_graph(&ring(s));
        g.is_connected()
            && g.edge_count() == n - 1
            && g.degrees().iter().filter(|&&d| d == 1).count() == 2
            && g.degrees().iter().all(|&d| d <= 2)
    });
    outcome(
        bad == 0 && explicit,
        format!("{bad} connectivity/path mismatches; Z4 = P4 and Z9 = P9: {explicit}"),
    )
}

fn criterion_8(sweep: &SweepOutcome) -> Outcome {
    let locals: Vec<&ClassificationReport> = sweep.reports.iter().filter(|r| r.local).collect();
    let bad: Vec<&str> = locals
        .iter()
        .filter(|r| r.component_structure != Some(true))
        .map(|r| r.spec.as_str())
        .collect();
    let sig = find(sweep, "Z3[x]/(x^2)").graph.census.signature();
    let dual = sig == [(Shape::Path, 3), (Shape::EvenCycle, 6)];
    outcome(
        bad.is_empty() && dual && !locals.is_empty(),
        format!(
            "{} local rings, irregular: {bad:?}; Z3[x]/(x^2) census {sig:?}",
            locals.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let config = SelftestConfig::default();
    let s = run_selftest(&config).expect("default selftest config is valid");
    let exhaustive_ok = s.exhaustive_graphs == 1 << 15 && s.random_graphs == 500;
    outcome(
        s.agreed() && exhaustive_ok && config.random_n == 12,
        format!(
            "{} exhaustive + {} random graphs, {} disagreements, {} invalid witnesses",
            s.exhaustive_graphs, s.random_graphs, s.disagreement_count, s.invalid_witnesses
        ),
    )
}

fn criterion_10(first: &SweepOutcome) -> Outcome {
    let config = SweepConfig {
        parallelism: 0,
        ..first.config.clone()
    };
    let a = first.summary().to_json();
    let b = run_sweep(&config).expect("sweep runs").summary().to_json();
    let c = run_sweep(&config).expect("sweep runs").summary().to_json();
    let selftest = SelftestConfig {
        exhaustive_n: 4,
        random_count: 50,
        seed: 9,
        ..SelftestConfig::default()
    };
    let s1 = run_selftest(&selftest).unwrap().to_json();
    let s2 = run_selftest(&selftest).unwrap().to_json();
    outcome(
        a == b && b == c && s1 == s2,
        format!(
            "sweep summaries of {} bytes identical across runs and thread counts",
            a.len()
        ),
    )
}

fn main() -> ExitCode {
    let config = SweepConfig {
        parallelism: 1,
        ..SweepConfig::default()
    };
    let start = Instant::now();
    let sweep = run_sweep(&config).expect("default sweep runs");
    let took = start.elapsed();

    let results = [
        criterion_1(),
        criterion_2(&sweep),
        criterion_3(&sweep, took),
        criterion_4(&sweep),
        criterion_5(&sweep),
        criterion_6(&sweep),
        criterion_7(&sweep),
        criterion_8(&sweep),
        criterion_9(),
        criterion_10(&sweep),
    ];
    for (i, r) in results.iter().enumerate() {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {}", i + 1, r.detail);
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
