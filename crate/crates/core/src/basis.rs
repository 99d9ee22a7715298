//! Explicit bases built from Garnir polynomials and their derivatives.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{garnir, garnir_in, vandermonde};
use crate::par;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::shapes::{slide_up, standard_tableaux, Cell, Partition, Tableau};
use crate::spans::GradedSpace;

/// Upper bound on the derivative orders `m_s` relative to `α_T(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderBound {
    /// `0 ≤ m_s < α_T(s)`
    Strict,
    /// `0 ≤ m_s ≤ α_T(s)`
    Weak,
}

/// `∂_X^m Δ` for a recorded tableau and exponent vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisElement {
    /// Tableau whose Garnir polynomial is differentiated.
    pub tableau: Tableau,
    /// Tableau whose `α` bounds `m` (differs from `tableau` after a slide).
    pub alpha_tableau: Tableau,
    pub m: Vec<u8>,
    pub polynomial: Polynomial,
}

impl BasisElement {
    /// Rebuild the polynomial from the recorded tableau and orders.
    pub fn recompute(&self) -> Result<Polynomial> {
        let g = garnir_in(&self.tableau, self.polynomial.nvars())?;
        Ok(g.diff_monomial(Monomial::from_exponents(&self.m, &[])))
    }

    pub fn respects_bound(&self, bound: OrderBound) -> bool {
        self.alpha_tableau.alphas().iter().zip(&self.m).all(|(&a, &m)| match bound {
            OrderBound::Strict => (m as i64) < a,
            OrderBound::Weak => (m as i64) <= a,
        })
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∂^{:?} Δ_{}", self.m, self.tableau)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyLabel {
    Artin { n: usize },
    BMu { mu: Partition },
    AUv { mu: Partition, ell: usize, u: usize, v: usize },
    BMuIj { mu: Partition, hole: Cell },
}

impl FamilyLabel {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilyLabel::Artin { .. } => "B_n",
            FamilyLabel::BMu { .. } => "B_mu",
            FamilyLabel::AUv { .. } => "A_uv",
            FamilyLabel::BMuIj { .. } => "B_mu_ij",
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::Artin { n } => write!(f, "B_{n}"),
            FamilyLabel::BMu { mu } => write!(f, "B_({mu})"),
            FamilyLabel::AUv { mu, ell, u, v } => write!(f, "A_{{{u},{v}}} for ({mu}), corner {ell}"),
            FamilyLabel::BMuIj { mu, hole } => write!(f, "B_({mu})/({hole})"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisFamily {
    pub label: FamilyLabel,
    pub nvars: usize,
    pub elements: Vec<BasisElement>,
}

impl BasisFamily {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn polynomials(&self) -> impl Iterator<Item = &Polynomial> + '_ {
        self.elements.iter().map(|e| &e.polynomial)
    }

    /// The span of the elements (no closure), graded by degree.
    pub fn span(&self) -> Result<GradedSpace> {
        let mut s = GradedSpace::new(self.nvars, self.label.to_string());
        for p in self.polynomials() {
            s.insert(p)?;
        }
        Ok(s)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.span()?.dim())
    }

    /// Number of elements in each X-degree.
    pub fn cardinality_by_degree(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in self.polynomials() {
            let d = p.bidegree().map(|d| d.0 as usize).unwrap_or(0);
            if out.len() <= d {
                out.resize(d + 1, 0);
            }
            out[d] += 1;
        }
        out
    }

    pub fn is_independent(&self) -> Result<bool> {
        Ok(self.rank()? == self.cardinality() && self.polynomials().all(|p| !p.is_zero()))
    }

    pub fn apply_dx(&self) -> Vec<Polynomial> {
        par::map(&self.elements, |e| e.polynomial.dx_sum())
    }
}

/// `D_X = Σ ∂_{x_i}` applied to a polynomial.
pub fn apply_dx(p: &Polynomial) -> Polynomial {
    p.dx_sum()
}

/// Canonical form up to a nonzero scalar: the leading coefficient becomes 1.
pub fn up_to_scalar(p: &Polynomial) -> Polynomial {
    p.normalized().0
}

/// `a =cte b`, that is `a = c·b` with `c ≠ 0` (both zero counts as equal).
pub fn equal_up_to_scalar(a: &Polynomial, b: &Polynomial) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.scalar_multiple_of(b).is_some()
}

/// Sorted canonical texts of the nonzero members, each normalized.
pub fn normalized_multiset<'a, I: IntoIterator<Item = &'a Polynomial>>(polys: I) -> Vec<String> {
    let mut v: Vec<String> = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| up_to_scalar(p).to_text())
        .collect();
    v.sort();
    v
}

/// All vectors `m` with `0 ≤ m_s < bound_s`.
fn boxes(bounds: &[usize]) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..b).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k as u8);
                    v
                })
            })
            .collect();
    }
    out
}

fn bounds_for(t: &Tableau, bound: OrderBound) -> Vec<usize> {
    t.alphas()
        .into_iter()
        .map(|a| {
            let a = a.max(0) as usize;
            match bound {
                OrderBound::Strict => a,
                OrderBound::Weak => a + 1,
            }
        })
        .collect()
}

/// Elements `∂^m Δ_{garnir_t}` for `m` bounded by `α` of `alpha_t`.
fn elements_for(garnir_t: &Tableau, alpha_t: &Tableau, nvars: usize, bound: OrderBound) -> Result<Vec<BasisElement>> {
    let g = garnir_in(garnir_t, nvars)?;
    Ok(boxes(&bounds_for(alpha_t, bound))
        .into_iter()
        .map(|m| BasisElement {
            polynomial: g.diff_monomial(Monomial::from_exponents(&m, &[])),
            tableau: garnir_t.clone(),
            alpha_tableau: alpha_t.clone(),
            m,
        })
        .collect())
}

fn collect_parallel(pairs: Vec<(Tableau, Tableau)>, nvars: usize, bound: OrderBound) -> Result<Vec<BasisElement>> {
    let parts = par::map(&pairs, |(g, a)| elements_for(g, a, nvars, bound));
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// `{∂_X^a Δ_n : a_i < i}`.
pub fn artin_basis(n: usize) -> Result<BasisFamily> {
    let v = vandermonde(n)?;
    let col = Tableau::from_rows(&(1..=n).map(|k| vec![k]).collect::<Vec<_>>())?;
    let elements = boxes(&(1..=n).collect::<Vec<_>>())
        .into_iter()
        .map(|m| BasisElement {
            polynomial: v.diff_monomial(Monomial::from_exponents(&m, &[])),
            tableau: col.clone(),
            alpha_tableau: col.clone(),
            m,
        })
        .collect();
    Ok(BasisFamily { label: FamilyLabel::Artin { n }, nvars: n, elements })
}

/// `B_μ = {∂_X^m Δ_T : T ∈ ST(μ), 0 ≤ m_i < α_T(i)}`.
pub fn basis_b_mu(mu: &Partition) -> Result<BasisFamily> {
    basis_b_mu_with(mu, OrderBound::Strict)
}

/// [`basis_b_mu`] with a chosen bound on the orders.
pub fn basis_b_mu_with(mu: &Partition, bound: OrderBound) -> Result<BasisFamily> {
    let n = mu.weight();
    let pairs = standard_tableaux(&mu.diagram()).into_iter().map(|t| (t.clone(), t)).collect();
    Ok(BasisFamily { label: FamilyLabel::BMu { mu: mu.clone() }, nvars: n, elements: collect_parallel(pairs, n, bound)? })
}

fn corner_at(mu: &Partition, ell: usize) -> Result<Cell> {
    let cs = mu.corners();
    if ell == 0 || ell > cs.len() {
        return Err(Error::OutOfRange { index: ell, limit: cs.len() });
    }
    Ok(cs[ell - 1])
}

/// `A_{u,b_ℓ} = {∂_X^m Δ_{T↑u,b_ℓ} : T ∈ ST(ν_ℓ), 0 ≤ m_s < α_T(s)}`, with `ℓ` 1-based.
pub fn set_a_uv(mu: &Partition, ell: usize, u: usize) -> Result<BasisFamily> {
    let corner = corner_at(mu, ell)?;
    if u > corner.row {
        return Err(Error::OutOfRange { index: u, limit: corner.row });
    }
    let nu = mu.remove_corner(corner)?;
    let n = nu.weight();
    let mut pairs = Vec::new();
    for t in standard_tableaux(&nu.diagram()) {
        pairs.push((slide_up(&t, corner, u, corner.col)?, t));
    }
    Ok(BasisFamily {
        label: FamilyLabel::AUv { mu: mu.clone(), ell, u, v: corner.col },
        nvars: n,
        elements: collect_parallel(pairs, n, OrderBound::Strict)?,
    })
}

/// The `(ℓ, u)` pairs of the union defining `B_{μ/ij}`: shadow corners in
/// column order, `u` from `i` to `min(i + α_ℓ − 1, a_ℓ)`.
pub fn b_mu_ij_pieces(mu: &Partition, hole: Cell) -> Result<Vec<(usize, usize)>> {
    let corners = mu.corners();
    let mut out = Vec::new();
    for c in mu.shadow_corners(hole)? {
        let ell = corners.iter().position(|&d| d == c).expect("shadow corner") + 1;
        let alpha = mu.alpha_corner(ell)?;
        let top = (hole.row + alpha - 1).min(c.row);
        for u in hole.row..=top {
            out.push((ell, u));
        }
    }
    Ok(out)
}

/// `B_{μ/ij} = ∪_ℓ ∪_u A_{u,b_ℓ}`.
pub fn basis_b_mu_ij(mu: &Partition, hole: Cell) -> Result<BasisFamily> {
    let mut elements = Vec::new();
    for (ell, u) in b_mu_ij_pieces(mu, hole)? {
        elements.extend(set_a_uv(mu, ell, u)?.elements);
    }
    Ok(BasisFamily { label: FamilyLabel::BMuIj { mu: mu.clone(), hole }, nvars: mu.weight() - 1, elements })
}

fn factorial_ratio(n: usize, mu: &Partition) -> Rational {
    Rational::factorial(n as u32) / mu.factorial()
}

fn to_count(r: Rational) -> Result<u64> {
    if !r.is_integer() || r.is_negative() {
        return Err(Error::NonIntegral { label: "dimension".into(), value: r.to_string() });
    }
    r.numer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegral { label: "dimension".into(), value: r.to_string() })
}

/// `n!/μ!`.
pub fn dim_mu(mu: &Partition) -> Result<u64> {
    to_count(factorial_ratio(mu.weight(), mu))
}

/// `d_{μ/ij} = (n!/μ!) Σ_{i' > i, μ_{i'} > j} μ_{i'}` with `i'` 1-based and `μ ⊢ n+1`.
pub fn d_mu_ij(mu: &Partition, hole: Cell) -> Result<u64> {
    if !mu.contains(hole) {
        return Err(Error::CellOutside(hole.row, hole.col));
    }
    let s: usize = (1..=mu.len())
        .filter(|&ip| ip > hole.row && mu.row_len(ip - 1) > hole.col)
        .map(|ip| mu.row_len(ip - 1))
        .sum();
    to_count(factorial_ratio(mu.weight() - 1, mu) * Rational::from(s as i64))
}

/// `(n!/μ!) · #{(r,c) ∈ μ : i ≤ r ≤ ℓ}` with `ℓ` the last row having more than `j` cells.
pub fn dim_by_row_count(mu: &Partition, hole: Cell) -> Result<u64> {
    if !mu.contains(hole) {
        return Err(Error::CellOutside(hole.row, hole.col));
    }
    let ell = (0..mu.len()).filter(|&r| mu.row_len(r) > hole.col).max().expect("hole row qualifies");
    let count = mu.cells().filter(|c| hole.row <= c.row && c.row <= ell).count();
    to_count(factorial_ratio(mu.weight() - 1, mu) * Rational::from(count as i64))
}

/// `Σ_{T ∈ ST(shape)} Π_s α_T(s)`, the size of a family without building it.
pub fn count_elements(shape: &Partition) -> BigInt {
    let tabs = standard_tableaux(&shape.diagram());
    let prods = par::map(&tabs, |t| t.alphas().iter().fold(BigInt::from(1), |acc, &a| acc * a.max(0)));
    prods.into_iter().fold(BigInt::zero(), |acc, p| acc + p)
}

/// `|B_{μ/ij}|` without building polynomials.
pub fn count_b_mu_ij(mu: &Partition, hole: Cell) -> Result<BigInt> {
    let corners = mu.corners();
    let mut total = BigInt::zero();
    for (ell, _u) in b_mu_ij_pieces(mu, hole)? {
        total += count_elements(&mu.remove_corner(corners[ell - 1])?);
    }
    Ok(total)
}

/// Report shape used by the command line front end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub mu: Partition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hole: Option<[usize; 2]>,
    pub cardinality: usize,
    pub rank: usize,
    pub oracle_dim: Option<usize>,
    pub by_degree: Vec<usize>,
}

impl FamilyReport {
    pub fn new(family: &BasisFamily, oracle_dim: Option<usize>) -> Result<Self> {
        let span = family.span()?;
        let (mu, hole) = match &family.label {
            FamilyLabel::Artin { n } => (Partition::new(vec![1; *n])?, None),
            FamilyLabel::BMu { mu } => (mu.clone(), None),
            FamilyLabel::AUv { mu, u, v, .. } => (mu.clone(), Some([*u, *v])),
            FamilyLabel::BMuIj { mu, hole } => (mu.clone(), Some([hole.row, hole.col])),
        };
        Ok(FamilyReport {
            family: family.label.kind().into(),
            mu,
            hole,
            cardinality: family.cardinality(),
            rank: span.dim(),
            oracle_dim,
            by_degree: span.hilbert_series(),
        })
    }
}

/// `D_X Δ_T` for a Garnir polynomial; convenience for the ladder checks.
pub fn dx_garnir(t: &Tableau) -> Result<Polynomial> {
    Ok(garnir(t)?.dx_sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spans::{garnir_span, y_free_of};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn artin_small() {
        let b1 = artin_basis(1).unwrap();
        assert_eq!(b1.polynomials().cloned().collect::<Vec<_>>(), vec![Polynomial::one(1)]);
        let b2 = artin_basis(2).unwrap();
        let polys: Vec<_> = b2.polynomials().cloned().collect();
        assert_eq!(polys, vec![p("x1 - x2", 2), p("-1", 2)]);
        let b3 = artin_basis(3).unwrap();
        assert_eq!(b3.cardinality(), 6);
        assert_eq!(b3.span().unwrap().hilbert_series(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn b_mu_small() {
        let b = basis_b_mu(&part("3")).unwrap();
        assert_eq!(b.polynomials().cloned().collect::<Vec<_>>(), vec![Polynomial::one(3)]);
        let b = basis_b_mu(&part("2,1")).unwrap();
        assert_eq!(b.cardinality(), 3);
        assert!(b.is_independent().unwrap());
        let texts = normalized_multiset(b.polynomials());
        let want = normalized_multiset([p("x3 - x1", 3), p("1", 3), p("x2 - x1", 3)].iter());
        assert_eq!(texts, want);
        for e in &b.elements {
            assert_eq!(e.recompute().unwrap(), e.polynomial);
            assert!(e.respects_bound(OrderBound::Strict));
        }
    }

    #[test]
    fn b_mu_column_is_artin() {
        for n in 1..=4 {
            let b = basis_b_mu(&Partition::new(vec![1; n]).unwrap()).unwrap();
            let a = artin_basis(n).unwrap();
            assert_eq!(normalized_multiset(b.polynomials()), normalized_multiset(a.polynomials()));
        }
    }

    #[test]
    fn b_mu_spans_oracle() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let b = basis_b_mu(&mu).unwrap();
                assert_eq!(b.cardinality() as u64, dim_mu(&mu).unwrap());
                assert!(b.is_independent().unwrap());
                assert!(b.span().unwrap().same_space(&garnir_span(&mu).unwrap()));
            }
        }
    }

    #[test]
    fn weak_bound_is_dependent() {
        let b = basis_b_mu_with(&part("2,1"), OrderBound::Weak).unwrap();
        assert!(b.cardinality() > 3);
        assert!(!b.is_independent().unwrap());
    }

    #[test]
    fn a_uv_examples() {
        let a = set_a_uv(&part("1,1"), 1, 0).unwrap();
        assert_eq!(a.polynomials().cloned().collect::<Vec<_>>(), vec![p("x1", 1)]);
        let mu = part("4,2,1");
        for (ell, c) in mu.corners().into_iter().enumerate() {
            let top = set_a_uv(&mu, ell + 1, c.row).unwrap();
            let nu = mu.remove_corner(c).unwrap();
            let b = basis_b_mu(&nu).unwrap();
            assert_eq!(normalized_multiset(top.polynomials()), normalized_multiset(b.polynomials()));
        }
        assert!(matches!(set_a_uv(&mu, 1, 3), Err(Error::OutOfRange { .. })));
        assert!(matches!(set_a_uv(&mu, 4, 0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(d_mu_ij(&part("4,2,1"), Cell::new(0, 1)).unwrap(), 90);
        assert_eq!(d_mu_ij(&part("2,1"), Cell::new(0, 0)).unwrap(), 3);
        assert_eq!(d_mu_ij(&part("1,1"), Cell::new(1, 0)).unwrap(), 1);
        assert!(d_mu_ij(&part("2,1"), Cell::new(1, 1)).is_err());
        for n in 1..=8 {
            for mu in Partition::all(n) {
                for h in mu.cells() {
                    assert_eq!(d_mu_ij(&mu, h).unwrap(), dim_by_row_count(&mu, h).unwrap());
                }
            }
        }
    }

    #[test]
    fn b_mu_ij_small() {
        let b = basis_b_mu_ij(&part("2,1"), Cell::new(0, 0)).unwrap();
        assert_eq!(b.cardinality(), 3);
        let s = y_free_of(&part("2,1"), Some(Cell::new(0, 0))).unwrap();
        assert!(b.span().unwrap().same_space(&s));
        assert_eq!(count_b_mu_ij(&part("4,2,1"), Cell::new(0, 1)).unwrap(), BigInt::from(90));
        let corner = basis_b_mu_ij(&part("3,1"), Cell::new(1, 0)).unwrap();
        let nu = basis_b_mu(&part("3")).unwrap();
        assert_eq!(normalized_multiset(corner.polynomials()), normalized_multiset(nu.polynomials()));
    }

    #[test]
    fn dx_examples() {
        assert_eq!(apply_dx(&p("x1 + x2", 2)), p("2", 2));
        assert!(equal_up_to_scalar(&p("2*x1 - 2", 2), &p("x1 - 1", 2)));
        assert!(!equal_up_to_scalar(&p("x1", 2), &p("0", 2)));
    }
}
