//! Acceptance gate: one line per criterion, then a single verdict.

use std::time::Instant;

use lattice_harmonics::basis::dim_mu;
use lattice_harmonics::properties;
use lattice_harmonics::shapes::Partition;
use lattice_harmonics::spans::y_free_of;
use lattice_harmonics::symfunc::{graded_frobenius, hall_littlewood_h, SymFunc, TPolynomial};
use lattice_harmonics::verify::{run_suite, Suite, SuiteReport, VerifyConfig};

struct Line {
    number: usize,
    pass: bool,
    summary: String,
}

fn criterion(number: usize, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (pass, summary) = f();
    let summary = format!("{summary} [{:.1}s]", start.elapsed().as_secs_f64());
    let line = Line { number, pass, summary };
    println!("criterion {}: {} {}", line.number, if line.pass { "PASS" } else { "FAIL" }, line.summary);
    line
}

fn suite(s: Suite, max_n: usize, y_free_cells: usize) -> SuiteReport {
    let mut cfg = VerifyConfig::new(max_n);
    cfg.budget.y_free_cells = y_free_cells;
    run_suite(s, &cfg).expect("suite runs")
}

fn tallies(r: &SuiteReport, checks: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for c in checks {
        let (cases, bad) = r.tally(c);
        ok &= cases > 0 && bad == 0;
        parts.push(format!("{c} {}/{cases}", cases - bad));
    }
    let failures: Vec<String> = r.failures().take(6).map(|c| format!("{} {}", c.check, c.case)).collect();
    if !failures.is_empty() {
        parts.push(format!("failing: {}", failures.join("; ")));
    }
    (ok, parts.join(", "))
}

#[test]
fn acceptance_criteria() {
    let seed = std::env::var("LATHARM_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(properties::DEFAULT_SEED);
    println!("seed = {seed}");
    let mut lines = Vec::new();

    lines.push(criterion(1, || {
        let mut bad = Vec::new();
        let mut count = 0;
        for n in 1..=6 {
            for mu in Partition::all(n) {
                count += 1;
                let d = y_free_of(&mu, None).unwrap().dim() as u64;
                if d != dim_mu(&mu).unwrap() {
                    bad.push(format!("{mu}: {d}"));
                }
            }
        }
        (bad.is_empty(), format!("brute-force dim M0_mu = n!/mu! for {count} partitions, n <= 6{}", if bad.is_empty() { String::new() } else { format!("; mismatches {}", bad.join(", ")) }))
    }));

    lines.push(criterion(2, || {
        let r = suite(Suite::BasisMu, 6, 5);
        let (ok, s) = tallies(&r, &["basis-rank", "basis-span"]);
        (ok, format!("B_mu rank through n = 6, span = M0_mu through n = 5: {s}"))
    }));

    lines.push(criterion(3, || {
        let r = suite(Suite::BasisMuIj, 5, 5);
        let (ok1, s1) = tallies(&r, &["basis-ij-rank", "basis-ij-span"]);
        let d = suite(Suite::Dims, 7, 5);
        let (ok2, s2) = tallies(&d, &["count-b-mu", "count-b-mu-ij"]);
        (ok1 && ok2, format!("rank = d = dim through mu |- 5: {s1}; cardinality = d through mu |- 7: {s2}"))
    }));

    lines.push(criterion(4, || {
        let r = suite(Suite::Recurrence, 5, 5);
        let (ok, s) = tallies(&r, &["recurrence"]);
        (ok, format!("q = 0 recurrence, column case cross-multiplied, every hole of mu |- <= 5: {s}"))
    }));

    lines.push(criterion(5, || {
        // calibration on n = 2, 3 fixes the normalization before the sweep
        let mut calibrated = true;
        for mu in ["1,1", "2,1", "1,1,1"] {
            let mu: Partition = mu.parse().unwrap();
            let f = graded_frobenius(&y_free_of(&mu, None).unwrap()).unwrap();
            calibrated &= f == hall_littlewood_h(&mu).unwrap();
        }
        let mut two = SymFunc::schur("2".parse().unwrap());
        two.add_term("1,1".parse().unwrap(), &TPolynomial::t_pow(1)).unwrap();
        calibrated &= hall_littlewood_h(&"1,1".parse().unwrap()).unwrap() == two;
        let r = suite(Suite::HallLittlewood, 5, 5);
        let (ok, s) = tallies(&r, &["hall-littlewood"]);
        (calibrated && ok, format!("calibration {calibrated}; graded Frobenius = Hall-Littlewood: {s}"))
    }));

    lines.push(criterion(6, || {
        let r = suite(Suite::Lemmas, 5, 5);
        let (ok, s) = tallies(&r, &["product-rule", "garnir"]);
        let signs: Vec<String> =
            r.cases.iter().filter(|c| c.check == "garnir").map(|c| format!("{}: {}", c.case, c.detail)).collect();
        (ok, format!("{s}; {}", signs.join(", ")))
    }));

    lines.push(criterion(7, || {
        let r = suite(Suite::Ladder, 5, 5);
        let (ok, s) = tallies(&r, &["dx-delta", "dx-a", "dx-b"]);
        (ok, format!("D_X ladder up to scalar, mu |- <= 5: {s}"))
    }));

    lines.push(criterion(8, || {
        let r = suite(Suite::Nesting, 5, 5);
        let (ok, s) = tallies(&r, &["nesting", "nesting-punctured"]);
        (ok, format!("nesting and join intersection, all pairs n <= 5: {s}"))
    }));

    lines.push(criterion(9, || {
        let outcomes = properties::run_all(seed, 1000, 5).expect("spaces build");
        let ok = outcomes.iter().all(|o| o.passed());
        let parts: Vec<String> = outcomes
            .iter()
            .map(|o| format!("{} {}/{}{}", o.name, o.cases - o.failures.len(), o.cases, o.failures.first().map(|f| format!(" ({f})")).unwrap_or_default()))
            .collect();
        (ok, format!("seed {seed}: {}", parts.join(", ")))
    }));

    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.number).collect();
    println!("{} of {} criteria pass", lines.len() - failed.len(), lines.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
