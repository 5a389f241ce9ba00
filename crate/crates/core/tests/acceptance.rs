//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p torus-rainbow --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestCaseError, TestRunner};
use torus_rainbow::cli::run_captured;
use torus_rainbow::coloring::{relabel, PaletteInjection};
use torus_rainbow::planner::{plan_and_color, theorem_bound};
use torus_rainbow::verifier::{is_strong_rainbow_with, VerifyOptions};
use torus_rainbow::{
    cycle_coloring, exact_src, is_strong_rainbow, prism_coloring, verify_table_paths, ColoringDocument, SearchBudget,
    TorusShape,
};

use common::{coloring_strategy, has_rainbow_geodesic_ref, is_rainbow_geodesic_ref};

const PROPERTY_CASES: u32 = 128;

type Outcome = Result<String, String>;

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    let took = started.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:.2?}, limit {limit:.0?}"))
    }
}

fn prisms() -> Outcome {
    let started = Instant::now();
    for n in 3..=14 {
        let c = prism_coloring(n).map_err(|e| e.to_string())?;
        if c.palette_size() != ceil_half(n + 1) {
            return Err(format!(
                "prism {n}: {} colors, expected {}",
                c.palette_size(),
                ceil_half(n + 1)
            ));
        }
        if !is_strong_rainbow(&c).pass {
            return Err(format!("prism {n}: verification failed"));
        }
    }
    within(Duration::from_secs(1), started)?;
    Ok(format!(
        "n = 3..14 verified with ceil((n+1)/2) colors in {:.2?}",
        started.elapsed()
    ))
}

fn tables() -> Outcome {
    let mut instances = 0;
    for n in [4, 6, 8, 10, 5, 7, 9, 11] {
        let report = verify_table_paths(n).map_err(|e| e.to_string())?;
        for row in &report.rows {
            if row.passed != row.instances {
                return Err(format!(
                    "n = {n}, table {}, row {}: {}/{} instances",
                    report.table, row.row, row.passed, row.instances
                ));
            }
            instances += row.instances;
        }
    }
    Ok(format!(
        "{instances} row instances replayed for n in {{4,6,8,10}} and {{5,7,9,11}}"
    ))
}

fn cycles() -> Outcome {
    for n in 2..=14 {
        let c = cycle_coloring(n).map_err(|e| e.to_string())?;
        let expected = if n <= 3 { 1 } else { ceil_half(n) };
        if c.palette_size() != expected {
            return Err(format!("C_{n}: K = {}, expected {expected}", c.palette_size()));
        }
        if !is_strong_rainbow(&c).pass {
            return Err(format!("C_{n}: verification failed"));
        }
    }
    Ok("C_2..C_14 verified".into())
}

fn oracle() -> Outcome {
    let started = Instant::now();
    let budget = SearchBudget::default();
    let cases: [(&[usize], usize); 5] = [(&[4], 2), (&[5], 3), (&[6], 3), (&[3, 2], 2), (&[4, 2], 3)];
    for (dims, expected) in cases {
        let shape = TorusShape::new(dims).map_err(|e| e.to_string())?;
        let (k, witness) = exact_src(&shape, &budget).map_err(|e| format!("{dims:?}: {e}"))?;
        if k != expected {
            return Err(format!("{dims:?}: src = {k}, expected {expected}"));
        }
        if !is_strong_rainbow(&witness).pass {
            return Err(format!("{dims:?}: witness does not verify"));
        }
    }
    within(Duration::from_secs(60), started)?;
    Ok(format!(
        "C_4, C_5, C_6, C_3xC_2, C_4xC_2 = 2, 3, 3, 2, 3 in {:.2?}",
        started.elapsed()
    ))
}

struct GridRow {
    dims: Vec<usize>,
    achieved: usize,
    diameter: usize,
}

fn planner_grid(rows: &mut Vec<GridRow>) -> Outcome {
    let started = Instant::now();
    let tuples = common::acceptance_grid();
    for dims in &tuples {
        let (plan, c, report) = plan_and_color(dims).map_err(|e| format!("{dims:?}: {e}"))?;
        let achieved = c.palette_size();
        let bound = theorem_bound(dims);
        let old: usize = dims.iter().map(|&n| ceil_half(n)).sum();
        if !(achieved <= bound && bound <= old) {
            return Err(format!("{dims:?}: K = {achieved}, bound {bound}, sum ceil {old}"));
        }
        if report.diameter_lower > achieved {
            return Err(format!(
                "{dims:?}: K = {achieved} below diameter {}",
                report.diameter_lower
            ));
        }
        if !is_strong_rainbow(&c).pass {
            return Err(format!("{dims:?}: plan {} does not verify", plan.summary()));
        }
        rows.push(GridRow {
            dims: dims.clone(),
            achieved,
            diameter: report.diameter_lower,
        });
    }
    Ok(format!(
        "{} tuples verified, K <= bound <= sum ceil(n/2), in {:.1?}",
        tuples.len(),
        started.elapsed()
    ))
}

fn even_exactness(rows: &[GridRow]) -> Outcome {
    let even: Vec<&GridRow> = rows.iter().filter(|r| r.dims.iter().all(|n| n % 2 == 0)).collect();
    if rows.is_empty() {
        return Err("grid did not run".into());
    }
    for r in &even {
        let half: usize = r.dims.iter().map(|n| n / 2).sum();
        if r.achieved != half || r.diameter != half {
            return Err(format!(
                "{:?}: K = {}, diameter {}, sum n/2 = {half}",
                r.dims, r.achieved, r.diameter
            ));
        }
    }
    Ok(format!("{} all-even tuples have K = sum n/2 = diameter", even.len()))
}

fn counterexample() -> Outcome {
    let started = Instant::now();
    let (code, out, err) = run_captured(["torus-rainbow", "counterexample"]);
    if code != 0 {
        return Err(format!("exit {code}: {err}"));
    }
    if !out.contains("src(C_4□C_3) = 3 < 4") {
        return Err(format!("unexpected report:\n{out}"));
    }
    let (_, c, report) = plan_and_color(&[4, 3]).map_err(|e| e.to_string())?;
    let conjectured = ceil_half(4) + ceil_half(3);
    if !(c.palette_size() == 3 && report.diameter_lower == 3 && conjectured == 4 && is_strong_rainbow(&c).pass) {
        return Err(format!("K = {}, diameter {}", c.palette_size(), report.diameter_lower));
    }
    within(Duration::from_secs(1), started)?;
    Ok(format!(
        "verified 3-coloring, diameter 3, conjectured 4, in {:.2?}",
        started.elapsed()
    ))
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn properties() -> Outcome {
    let mut r = runner();
    r.run(&coloring_strategy(3, 7, 200), |c| {
        let report = is_strong_rainbow_with(
            &c,
            &VerifyOptions {
                witness_cap: usize::MAX,
            },
        );
        if report.witnesses.len() + report.failing_pairs.len() != report.pairs_checked {
            return Err(TestCaseError::fail("pair accounting"));
        }
        for w in &report.witnesses {
            if w.path.first() != Some(&w.u) || w.path.last() != Some(&w.v) || !is_rainbow_geodesic_ref(&c, &w.path) {
                return Err(TestCaseError::fail(format!("bad witness {} -> {}", w.u, w.v)));
            }
        }
        Ok(())
    })
    .map_err(|e| format!("soundness re-walk: {e}"))?;

    let mut r = runner();
    let strategy = (coloring_strategy(3, 7, 120), 0usize..4, proptest::num::u64::ANY);
    r.run(&strategy, |(c, extra, seed)| {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let target = c.palette_size() + extra;
        let mut map: Vec<u32> = (0..target as u32).collect();
        map.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        map.truncate(c.palette_size());
        let inj = PaletteInjection::new(map, target).unwrap();
        let renamed = relabel(&c, &inj).unwrap();
        let a = is_strong_rainbow(&c);
        let b = is_strong_rainbow(&renamed);
        if a.pass != b.pass || a.failing_pairs != b.failing_pairs {
            return Err(TestCaseError::fail("verdict changed under renaming"));
        }
        Ok(())
    })
    .map_err(|e| format!("renaming invariance: {e}"))?;

    let mut r = runner();
    r.run(&coloring_strategy(3, 7, 200), |c| {
        let report = is_strong_rainbow(&c);
        let n = c.shape().vertex_count();
        let dims = c.shape().dims();
        let mut failing = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !has_rainbow_geodesic_ref(&c, a, b) {
                    failing.push((common::coords_of(dims, a), common::coords_of(dims, b)));
                }
            }
        }
        let reported: Vec<_> = report
            .failing_pairs
            .iter()
            .map(|(u, v)| (u.0.clone(), v.0.clone()))
            .collect();
        if failing != reported {
            return Err(TestCaseError::fail(format!(
                "{dims:?}: exhaustive {} failing pairs, DFS {}",
                failing.len(),
                reported.len()
            )));
        }
        Ok(())
    })
    .map_err(|e| format!("DFS vs exhaustive: {e}"))?;

    let mut r = runner();
    r.run(
        &(coloring_strategy(4, 9, 500), proptest::bool::ANY),
        |(c, with_plan)| {
            let plan = with_plan.then(|| torus_rainbow::planner::plan(c.shape().dims()).unwrap());
            let doc = ColoringDocument::from_coloring(&c, plan, Some("property".into()));
            let text = doc.emit();
            let back = ColoringDocument::parse(&text).unwrap();
            if back.emit() != text || back != doc || back.to_coloring().unwrap() != c {
                return Err(TestCaseError::fail("document round trip"));
            }
            Ok(())
        },
    )
    .map_err(|e| format!("JSON round trip: {e}"))?;

    Ok(format!("4 suites x {PROPERTY_CASES} cases, zero failures"))
}

fn main() {
    let mut grid_rows = Vec::new();
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "prism colorings", prisms()),
        (2, "table witness replay", tables()),
        (3, "cycle colorings", cycles()),
        (4, "oracle ground truth", oracle()),
        (5, "planner bound on the grid", planner_grid(&mut grid_rows)),
        (6, "even-case exactness", even_exactness(&grid_rows)),
        (7, "counterexample C_4xC_3", counterexample()),
        (8, "property suites", properties()),
    ];
    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
