//! Seeded random checks of the algebraic ground rules.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{Monomial, Polynomial, Rational, RowSpace, Var};
use crate::shapes::Partition;
use crate::spans::{garnir_span, y_free_of, GradedSpace};
use crate::symfunc::CharacterTable;

pub const DEFAULT_SEED: u64 = 20_011_017;

pub fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn random_rational(r: &mut impl Rng) -> Rational {
    let num = r.gen_range(-9i64..=9);
    let den = if r.gen_bool(0.3) { r.gen_range(1i64..=5) } else { 1 };
    Rational::new(num, den)
}

pub fn random_monomial(r: &mut impl Rng, nvars: usize, max_exp: u8) -> Monomial {
    let xs: Vec<u8> = (0..nvars).map(|_| r.gen_range(0..=max_exp)).collect();
    let ys: Vec<u8> = (0..nvars).map(|_| if r.gen_bool(0.4) { r.gen_range(0..=max_exp) } else { 0 }).collect();
    Monomial::from_exponents(&xs, &ys)
}

pub fn random_poly(r: &mut impl Rng, nvars: usize) -> Polynomial {
    let k = r.gen_range(0..=5);
    Polynomial::from_terms(nvars, (0..k).map(|_| (random_rational(r), random_monomial(r, nvars, 3))))
}

pub fn random_var(r: &mut impl Rng, nvars: usize) -> Var {
    let i = r.gen_range(0..nvars);
    if r.gen_bool(0.5) {
        Var::X(i)
    } else {
        Var::Y(i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run<F: FnMut(&mut ChaCha8Rng, usize) -> Option<String>>(
    name: &'static str,
    seed: u64,
    salt: u64,
    cases: usize,
    mut f: F,
) -> PropertyOutcome {
    let mut r = rng(seed, salt);
    let failures = (0..cases).filter_map(|k| f(&mut r, k)).collect();
    PropertyOutcome { name: name.into(), cases, failures }
}

pub fn leibniz(seed: u64, cases: usize) -> PropertyOutcome {
    run("leibniz", seed, 1, cases, |r, k| {
        let n = r.gen_range(1..=4);
        let p = random_poly(r, n);
        let q = random_poly(r, n);
        let v = random_var(r, n);
        let lhs = (&p * &q).partial(v, 1);
        let rhs = &(&p.partial(v, 1) * &q) + &(&p * &q.partial(v, 1));
        (lhs != rhs).then(|| format!("case {k}: p = {p}, q = {q}, {v}"))
    })
}

pub fn mixed_partials(seed: u64, cases: usize) -> PropertyOutcome {
    run("mixed-partials", seed, 2, cases, |r, k| {
        let n = r.gen_range(1..=4);
        let p = random_poly(r, n);
        let (u, v) = (random_var(r, n), random_var(r, n));
        let (a, b) = (r.gen_range(1..=2), r.gen_range(1..=2));
        let uv = p.partial(u, a).partial(v, b);
        let vu = p.partial(v, b).partial(u, a);
        (uv != vu).then(|| format!("case {k}: p = {p}, {u}^{a} {v}^{b}"))
    })
}

pub fn rank_order_independent(seed: u64, cases: usize) -> PropertyOutcome {
    run("rank-order", seed, 3, cases, |r, k| {
        let n = r.gen_range(1..=3);
        let mut polys: Vec<Polynomial> = (0..r.gen_range(1..=6)).map(|_| random_poly(r, n)).collect();
        // planted dependencies
        for _ in 0..r.gen_range(0..=3) {
            let a = polys.choose(r).unwrap().clone();
            let b = polys.choose(r).unwrap().clone();
            polys.push(&a.scale(&random_rational(r)) + &b.scale(&random_rational(r)));
        }
        let first = RowSpace::from_polys(n, &polys);
        polys.shuffle(r);
        let second = RowSpace::from_polys(n, &polys);
        (first.rank() != second.rank() || first != second)
            .then(|| format!("case {k}: ranks {} and {}", first.rank(), second.rank()))
    })
}

/// Every space the library constructs for shapes with at most `max_cells` cells.
pub fn constructed_spaces(max_cells: usize) -> Result<Vec<(String, GradedSpace)>> {
    let mut out = Vec::new();
    for n in 1..=max_cells {
        for mu in Partition::all(n) {
            out.push((format!("M0 {mu}"), y_free_of(&mu, None)?));
            out.push((format!("garnir span {mu}"), garnir_span(&mu)?));
            if n >= 2 {
                for c in mu.cells() {
                    out.push((format!("M0 {mu}/{c}"), y_free_of(&mu, Some(c))?));
                }
            }
        }
    }
    Ok(out)
}

pub fn sn_invariance(seed: u64, cases: usize, spaces: &[(String, GradedSpace)]) -> PropertyOutcome {
    if spaces.is_empty() {
        return PropertyOutcome { name: "sn-invariance".into(), cases: 0, failures: Vec::new() };
    }
    run("sn-invariance", seed, 4, cases, |r, k| {
        let (name, s) = spaces.choose(r).unwrap();
        let mut perm: Vec<usize> = (0..s.nvars()).collect();
        perm.shuffle(r);
        let bad = s.pieces().values().flat_map(|p| p.basis()).find(|b| !s.contains(&b.permute(&perm)));
        bad.map(|b| format!("case {k}: {name}, {perm:?} moves {b} outside"))
    })
}

pub fn character_orthogonality(seed: u64, cases: usize) -> PropertyOutcome {
    run("character-orthogonality", seed, 5, cases, |r, k| {
        let n = r.gen_range(1..=8);
        let t = CharacterTable::cached(n);
        let m = t.partitions.len();
        let (a, b) = (r.gen_range(0..m), r.gen_range(0..m));
        let want = if a == b { 1 } else { 0 };
        if t.inner(a, b) != Rational::from(want) {
            return Some(format!("case {k}: rows {} {}", t.partitions[a], t.partitions[b]));
        }
        // columns: Σ_λ χ^λ(ρ) χ^λ(σ) = z_ρ δ_{ρσ}
        let col: i64 = (0..m).map(|l| t.values[l][a] * t.values[l][b]).sum();
        let want = if a == b { t.z[a].clone() } else { Rational::from(0) };
        (Rational::from(col) != want).then(|| format!("case {k}: columns {} {}", t.partitions[a], t.partitions[b]))
    })
}

/// All five checks, `cases` each, on shapes with at most `max_cells` cells.
pub fn run_all(seed: u64, cases: usize, max_cells: usize) -> Result<Vec<PropertyOutcome>> {
    let spaces = constructed_spaces(max_cells)?;
    Ok(vec![
        leibniz(seed, cases),
        mixed_partials(seed, cases),
        rank_order_independent(seed, cases),
        sn_invariance(seed, cases, &spaces),
        character_orthogonality(seed, cases),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass_and_repeat() {
        let a = run_all(7, 50, 3).unwrap();
        assert!(a.iter().all(|o| o.passed()));
        assert_eq!(a, run_all(7, 50, 3).unwrap());
    }
}
