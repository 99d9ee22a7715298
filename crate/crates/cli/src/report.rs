//! The four commands, each producing one JSON document or a short table.

use serde::{Deserialize, Serialize};

use lattice_harmonics::basis::{basis_b_mu, basis_b_mu_ij, count_b_mu_ij, count_elements, d_mu_ij, dim_mu, BasisFamily};
use lattice_harmonics::shapes::{puncture, Cell, Partition};
use lattice_harmonics::spans::y_free_of;
use lattice_harmonics::symfunc::{graded_frobenius, hall_littlewood_h};
use lattice_harmonics::verify::{run_suite, Suite, VerifyConfig};

use crate::{Context, Failure, Format};

/// Largest diagram (in cells) whose basis is built polynomial by polynomial;
/// above it the family is counted instead.
pub const BUILD_CELLS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub mu: Partition,
    pub hole: Option<Cell>,
    pub formula: u64,
    pub basis: u64,
    /// `built` or `counted`
    pub basis_source: String,
    pub rank: Option<usize>,
    pub oracle: Option<u64>,
    pub oracle_skipped: Option<String>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomials: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub mu: Partition,
    pub hole: Option<Cell>,
    pub hilbert: Vec<usize>,
    pub dim: usize,
    /// `oracle`, `cache`, `basis` or `hall-littlewood`
    pub source: String,
}

fn check_hole(mu: &Partition, hole: Option<Cell>) -> Result<usize, Failure> {
    match hole {
        Some(h) if !mu.contains(h) => Err(Failure::Usage(format!("hole {h} is not a cell of mu = {mu}"))),
        Some(_) => Ok(mu.weight() - 1),
        None => Ok(mu.weight()),
    }
}

fn family(mu: &Partition, hole: Option<Cell>) -> lattice_harmonics::Result<BasisFamily> {
    match hole {
        Some(h) => basis_b_mu_ij(mu, h),
        None => basis_b_mu(mu),
    }
}

fn over_budget(ctx: &Context, mu: &Partition) -> Option<String> {
    (mu.weight() > ctx.budget.y_free_cells).then(|| {
        format!("{} cells exceeds the Y-free oracle budget of {} (see --oracle-cells)", mu.weight(), ctx.budget.y_free_cells)
    })
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn hole_text(hole: Option<Cell>) -> String {
    hole.map_or_else(|| "none".into(), |h| h.to_string())
}

pub fn dim(ctx: &Context, mu: &Partition, hole: Option<Cell>, show_basis: bool) -> Result<bool, Failure> {
    let cells = check_hole(mu, hole)?;
    let formula = match hole {
        Some(h) => d_mu_ij(mu, h)?,
        None => dim_mu(mu)?,
    };
    let (basis, basis_source, rank, polynomials) = if cells <= BUILD_CELLS {
        let fam = family(mu, hole)?;
        let polys = show_basis.then(|| fam.polynomials().map(|p| p.to_string()).collect());
        (fam.cardinality() as u64, "built", Some(fam.rank()?), polys)
    } else {
        if show_basis {
            return Err(Failure::Usage(format!("bases are listed only for diagrams of at most {BUILD_CELLS} cells")));
        }
        let count = match hole {
            Some(h) => count_b_mu_ij(mu, h)?,
            None => count_elements(mu),
        };
        let count = u64::try_from(count).map_err(|_| Failure::Runtime("basis count overflows u64".into()))?;
        (count, "counted", None, None)
    };
    let skipped = over_budget(ctx, mu);
    let oracle = match skipped {
        Some(_) => None,
        None => {
            let d = match hole {
                Some(h) => puncture(mu, h)?,
                None => mu.diagram(),
            };
            Some(ctx.cache.hilbert(&d)?.iter().sum::<usize>() as u64)
        }
    };
    let agree = basis == formula && rank.is_none_or(|r| r as u64 == formula) && oracle.is_none_or(|o| o == formula);
    let r = DimReport {
        mu: mu.clone(),
        hole,
        formula,
        basis,
        basis_source: basis_source.into(),
        rank,
        oracle,
        oracle_skipped: skipped,
        agree,
        polynomials,
    };
    match ctx.format {
        Format::Json => emit(&r)?,
        Format::Table => {
            println!("mu       {}", r.mu);
            println!("hole     {}", hole_text(r.hole));
            println!("formula  {}", r.formula);
            match r.rank {
                Some(k) => println!("basis    {} (built, rank {k})", r.basis),
                None => println!("basis    {} (counted)", r.basis),
            }
            match (&r.oracle, &r.oracle_skipped) {
                (Some(o), _) => println!("oracle   {o}"),
                (None, Some(why)) => println!("oracle   skipped: {why}"),
                (None, None) => {}
            }
            let mut seen = vec![r.formula, r.basis];
            seen.extend(r.oracle);
            let joined: Vec<String> = seen.iter().map(|v| v.to_string()).collect();
            if r.agree {
                println!("agree    {}", joined.join(" = "));
            } else {
                println!("MISMATCH formula {}, basis {}, rank {:?}, oracle {:?}", r.formula, r.basis, r.rank, r.oracle);
            }
            for p in r.polynomials.iter().flatten() {
                println!("  {p}");
            }
        }
    }
    Ok(r.agree)
}

pub fn hilbert(ctx: &Context, mu: &Partition, hole: Option<Cell>) -> Result<bool, Failure> {
    let cells = check_hole(mu, hole)?;
    let (series, source) = match over_budget(ctx, mu) {
        None => {
            let d = match hole {
                Some(h) => puncture(mu, h)?,
                None => mu.diagram(),
            };
            let source = if ctx.cache.get(&d).is_some() { "cache" } else { "oracle" };
            (ctx.cache.hilbert(&d)?, source)
        }
        Some(_) if cells <= BUILD_CELLS => (family(mu, hole)?.cardinality_by_degree(), "basis"),
        Some(_) if hole.is_none() => {
            let graded = hall_littlewood_h(mu)?.graded_dimension();
            let ints = graded.to_ints().ok_or_else(|| Failure::Runtime("non-integral Hilbert series".into()))?;
            (ints.into_iter().map(|c| c as usize).collect(), "hall-littlewood")
        }
        Some(why) => return Err(Failure::Usage(format!("{why}, and the basis is only built up to {BUILD_CELLS} cells"))),
    };
    let r = HilbertReport { mu: mu.clone(), hole, dim: series.iter().sum(), hilbert: series, source: source.into() };
    match ctx.format {
        Format::Json => emit(&r)?,
        Format::Table => {
            let coeffs: Vec<String> = r.hilbert.iter().map(|c| c.to_string()).collect();
            println!("mu       {}", r.mu);
            println!("hole     {}", hole_text(r.hole));
            println!("hilbert  [{}]", coeffs.join(","));
            println!("dim      {}", r.dim);
            println!("source   {}", r.source);
        }
    }
    Ok(true)
}

pub fn frobenius(ctx: &Context, mu: &Partition, hole: Option<Cell>) -> Result<bool, Failure> {
    check_hole(mu, hole)?;
    let f = match (over_budget(ctx, mu), hole) {
        (None, _) => graded_frobenius(&y_free_of(mu, hole)?)?,
        (Some(why), None) => {
            eprintln!("note: {why}; reporting the Hall-Littlewood function instead");
            hall_littlewood_h(mu)?
        }
        (Some(why), Some(_)) => return Err(Failure::Usage(why)),
    };
    match ctx.format {
        Format::Json => emit(&f)?,
        Format::Table => println!("{f}"),
    }
    Ok(true)
}

pub fn verify(ctx: &Context, suite: Suite, max_n: usize, cases: usize) -> Result<bool, Failure> {
    let mut cfg = VerifyConfig::new(max_n);
    cfg.budget = ctx.budget;
    cfg.seed = ctx.seed;
    cfg.cases = cases;
    let r = run_suite(suite, &cfg)?;
    match ctx.format {
        Format::Json => emit(&r)?,
        Format::Table => {
            println!("suite {suite}, max-n {max_n}, seed = {}", r.seed);
            for c in &r.cases {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("{mark} {} {}", c.check, c.case);
                } else {
                    println!("{mark} {} {}: {}", c.check, c.case, c.detail);
                }
            }
            for s in &r.skipped {
                println!("SKIP {s} (above the oracle budget)");
            }
            let failed = r.failures().count();
            println!("{} cases, {} passed, {} failed, {} skipped", r.cases.len(), r.cases.len() - failed, failed, r.skipped.len());
        }
    }
    Ok(r.passed())
}
