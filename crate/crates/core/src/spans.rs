//! Derivative-closed graded spans: the brute-force oracle for the bases.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{garnir, lattice_delta};
use crate::par;
use crate::poly::{Polynomial, RowSpace, Var};
use crate::shapes::{dominance_join, dominance_leq, puncture, standard_tableaux, Cell, LatticeDiagram, Partition};

/// A graded subspace of `ℚ[X;Y]`, one row space per bidegree `(x, y)`.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    nvars: usize,
    pieces: BTreeMap<(u32, u32), RowSpace>,
    provenance: String,
}

impl GradedSpace {
    pub fn new(nvars: usize, provenance: impl Into<String>) -> Self {
        GradedSpace { nvars, pieces: BTreeMap::new(), provenance: provenance.into() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn pieces(&self) -> &BTreeMap<(u32, u32), RowSpace> {
        &self.pieces
    }

    pub fn piece(&self, r: u32, s: u32) -> Option<&RowSpace> {
        self.pieces.get(&(r, s))
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(|p| p.rank()).sum()
    }

    /// Insert a bihomogeneous polynomial into its piece.
    pub fn insert(&mut self, p: &Polynomial) -> Result<bool> {
        if p.is_zero() {
            return Ok(false);
        }
        let deg = p
            .bidegree()
            .ok_or_else(|| Error::Parse(format!("polynomial `{p}` is not bihomogeneous")))?;
        self.pieces
            .entry(deg)
            .or_insert_with(|| RowSpace::new(self.nvars))
            .try_insert(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        match p.bidegree() {
            // a non-homogeneous member splits into homogeneous members
            None => {
                let mut parts: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
                for (m, c) in p.terms() {
                    parts
                        .entry(m.bidegree())
                        .or_insert_with(|| Polynomial::zero(p.nvars()))
                        .add_term(*m, c);
                }
                parts.values().all(|q| self.contains(q))
            }
            Some(d) => self.pieces.get(&d).is_some_and(|s| s.contains(p)),
        }
    }

    /// Coefficients of `t^r` for the Y-free pieces `(r, 0)`.
    pub fn hilbert_series(&self) -> Vec<usize> {
        let top = self.pieces.keys().filter(|k| k.1 == 0).map(|k| k.0 as usize + 1).max().unwrap_or(0);
        let mut out = vec![0; top];
        for ((r, s), p) in &self.pieces {
            if *s == 0 {
                out[*r as usize] += p.rank();
            }
        }
        out
    }

    /// `dim` of every nonzero piece, keyed by bidegree.
    pub fn bigraded_hilbert(&self) -> BTreeMap<(u32, u32), usize> {
        self.pieces.iter().filter(|(_, p)| p.rank() > 0).map(|(k, p)| (*k, p.rank())).collect()
    }

    /// The pieces of Y-degree 0.
    pub fn y_free(&self) -> GradedSpace {
        GradedSpace {
            nvars: self.nvars,
            pieces: self.pieces.iter().filter(|(k, _)| k.1 == 0).map(|(k, v)| (*k, v.clone())).collect(),
            provenance: format!("Y-free part of {}", self.provenance),
        }
    }

    pub fn is_subspace_of(&self, other: &GradedSpace) -> bool {
        self.pieces.iter().all(|(k, p)| match other.pieces.get(k) {
            Some(q) => p.is_subspace_of(q),
            None => p.rank() == 0,
        })
    }

    pub fn same_space(&self, other: &GradedSpace) -> bool {
        self.is_subspace_of(other) && other.is_subspace_of(self)
    }

    pub fn intersection(&self, other: &GradedSpace) -> Result<GradedSpace> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        let mut out = GradedSpace::new(self.nvars, format!("{} ∩ {}", self.provenance, other.provenance));
        for (k, p) in &self.pieces {
            if let Some(q) = other.pieces.get(k) {
                let i = p.intersection(q)?;
                if i.rank() > 0 {
                    out.pieces.insert(*k, i);
                }
            }
        }
        Ok(out)
    }

    /// `true` iff every `∂_{x_i}` (and `∂_{y_i}` when `with_y`) maps each
    /// piece into the space.
    pub fn is_derivative_closed(&self, with_y: bool) -> bool {
        let vars = variables(self.nvars, with_y);
        self.pieces
            .values()
            .all(|p| p.basis().iter().all(|b| vars.iter().all(|&v| self.contains(&b.partial(v, 1)))))
    }

    /// Membership of `σ·b` for every basis row `b`, for `σ` the transposition
    /// `(1 2)` and the long cycle `(1 2 … n)`; these generate `S_n`.
    pub fn check_invariant(&self) -> Result<()> {
        for sigma in symmetric_generators(self.nvars) {
            for (k, p) in &self.pieces {
                for b in p.basis() {
                    if !p.contains(&b.permute(&sigma)) {
                        return Err(Error::NotInvariant(format!(
                            "{}: piece {k:?} is not stable under {sigma:?}",
                            self.provenance
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(1 2)` and `(1 2 … n)` as 0-based images.
pub fn symmetric_generators(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![swap, cycle]
}

fn variables(nvars: usize, with_y: bool) -> Vec<Var> {
    let mut vars: Vec<Var> = (0..nvars).map(Var::X).collect();
    if with_y {
        vars.extend((0..nvars).map(Var::Y));
    }
    vars
}

/// Smallest derivative-closed graded span containing `gens`.
///
/// Pieces are finished in decreasing total degree: a piece only receives
/// derivatives from pieces one degree higher, so once those are done its
/// basis rows can be differentiated in turn.
pub fn derivative_closure(nvars: usize, gens: &[Polynomial], with_y: bool) -> Result<GradedSpace> {
    let label = if with_y { "derivative closure" } else { "X-derivative closure" };
    let mut space = GradedSpace::new(nvars, label);
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::VariableMismatch(nvars, g.nvars()));
        }
        space.insert(g)?;
    }
    let vars = variables(nvars, with_y);
    let mut total = space.pieces.keys().map(|(r, s)| r + s).max().unwrap_or(0);
    while total > 0 {
        let current: Vec<(u32, u32)> = space.pieces.keys().filter(|(r, s)| r + s == total).copied().collect();
        for key in current {
            let rows = space.pieces[&key].basis();
            let derivs: Vec<Polynomial> = par::map(&rows, |b| {
                vars.iter().map(|&v| b.partial(v, 1)).filter(|d| !d.is_zero()).collect::<Vec<_>>()
            })
            .into_iter()
            .flatten()
            .collect();
            for d in derivs {
                space.insert(&d)?;
            }
        }
        total -= 1;
    }
    Ok(space)
}

/// `M_D^0`: the X-derivative closure of `{∂_Y^b Δ : |b| = deg_Y Δ}`.
///
/// Writing `Δ = Σ_b y^b P_b(X)`, each such derivative is `b! P_b`, so the
/// `P_b` are used directly.
pub fn y_free_component(delta: &Polynomial) -> Result<GradedSpace> {
    let gens: Vec<Polynomial> = delta.split_by_y().into_values().collect();
    let mut s = derivative_closure(delta.nvars(), &gens, false)?;
    s.provenance = "Y-free component".into();
    Ok(s)
}

/// Same space as [`y_free_component`], built literally from `∂_Y^b Δ`.
pub fn y_free_component_by_operators(delta: &Polynomial) -> Result<GradedSpace> {
    let gens: Vec<Polynomial> = delta
        .split_by_y()
        .into_keys()
        .map(|b| Polynomial::apply_diff_operator(&Polynomial::monomial(delta.nvars(), b), delta))
        .collect::<Result<_>>()?;
    derivative_closure(delta.nvars(), &gens, false)
}

/// `M_D^0` for a diagram.
pub fn y_free_of_diagram(d: &LatticeDiagram) -> Result<GradedSpace> {
    let mut s = y_free_component(&lattice_delta(d, d.len())?)?;
    s.provenance = format!("M0 of {d}");
    Ok(s)
}

/// `M^0_μ`, or `M^0_{μ/ij}` when a hole is given.
pub fn y_free_of(mu: &Partition, hole: Option<Cell>) -> Result<GradedSpace> {
    match hole {
        None => y_free_of_diagram(&mu.diagram()),
        Some(h) => y_free_of_diagram(&puncture(mu, h)?),
    }
}

/// The full bigraded module `M_D`.
pub fn bigraded_module(d: &LatticeDiagram) -> Result<GradedSpace> {
    let mut s = derivative_closure(d.len(), &[lattice_delta(d, d.len())?], true)?;
    s.provenance = format!("M of {d}");
    Ok(s)
}

/// Coefficients of `t^r` of the Y-free Hilbert series.
pub fn hilbert_series(s: &GradedSpace) -> Vec<usize> {
    s.hilbert_series()
}

/// Derivative closure of the Garnir polynomials of all standard tableaux of `μ`.
pub fn garnir_span(mu: &Partition) -> Result<GradedSpace> {
    let n = mu.weight();
    let gens: Vec<Polynomial> = standard_tableaux(&mu.diagram()).iter().map(garnir).collect::<Result<_>>()?;
    let mut s = derivative_closure(n, &gens, false)?;
    s.provenance = format!("Garnir span of {mu}");
    Ok(s)
}

/// Outcome of comparing two Y-free spaces under dominance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestingReport {
    pub mu: Partition,
    pub lambda: Partition,
    pub hole: Option<Cell>,
    pub mu_leq_lambda: bool,
    pub lambda_leq_mu: bool,
    pub dim_mu: usize,
    pub dim_lambda: usize,
    pub dim_intersection: usize,
    /// `M^0_λ ⊆ M^0_μ` when `μ ⪯ λ` (and symmetrically); `None` if incomparable.
    pub larger_inside_smaller: Option<bool>,
    /// The literal inclusion `M^0_μ ⊆ M^0_λ` when `μ ⪯ λ`; `None` if incomparable.
    pub smaller_inside_larger: Option<bool>,
    /// Least upper bound in dominance order.
    pub join: Partition,
    /// `M^0` of the join, when the hole lies in it.
    pub dim_join: Option<usize>,
    pub intersection_is_join: Option<bool>,
}

impl NestingReport {
    /// Every applicable identity holds in the direction the computation supports.
    pub fn holds(&self) -> bool {
        self.larger_inside_smaller.unwrap_or(true) && self.intersection_is_join.unwrap_or(true)
    }
}

/// Compare `M^0_{μ/ij}` and `M^0_{λ/ij}` (or the unpunctured spaces).
///
/// Larger partitions in dominance order give smaller spaces, so the
/// intersection is compared with the space of the dominance join.
pub fn nesting_check(mu: &Partition, lambda: &Partition, hole: Option<Cell>) -> Result<NestingReport> {
    let mu_leq = dominance_leq(mu, lambda)?;
    let la_leq = dominance_leq(lambda, mu)?;
    let a = y_free_of(mu, hole)?;
    let b = y_free_of(lambda, hole)?;
    let inter = a.intersection(&b)?;
    let (larger_inside, smaller_inside) = if mu_leq {
        (Some(b.is_subspace_of(&a)), Some(a.is_subspace_of(&b)))
    } else if la_leq {
        (Some(a.is_subspace_of(&b)), Some(b.is_subspace_of(&a)))
    } else {
        (None, None)
    };
    let join = dominance_join(mu, lambda)?;
    let join_space = match hole {
        Some(h) if !join.contains(h) => None,
        _ => Some(y_free_of(&join, hole)?),
    };
    Ok(NestingReport {
        mu: mu.clone(),
        lambda: lambda.clone(),
        hole,
        mu_leq_lambda: mu_leq,
        lambda_leq_mu: la_leq,
        dim_mu: a.dim(),
        dim_lambda: b.dim(),
        dim_intersection: inter.dim(),
        larger_inside_smaller: larger_inside,
        smaller_inside_larger: smaller_inside,
        dim_join: join_space.as_ref().map(|s| s.dim()),
        intersection_is_join: join_space.as_ref().map(|s| s.same_space(&inter)),
        join,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vandermonde;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn closure_examples() {
        let s = derivative_closure(2, &[p("x1 - x2", 2)], true).unwrap();
        assert_eq!(s.hilbert_series(), vec![1, 1]);
        let s = derivative_closure(3, &[vandermonde(3).unwrap()], false).unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.hilbert_series(), vec![1, 2, 2, 1]);
        assert!(s.is_derivative_closed(false));
        let s = derivative_closure(3, &[p("x3 - x1", 3), p("x2 - x1", 3)], false).unwrap();
        assert_eq!(s.dim(), 3);
    }

    #[test]
    fn y_free_examples() {
        let d = puncture(&part("2,1"), Cell::new(0, 0)).unwrap();
        let s = y_free_of_diagram(&d).unwrap();
        assert_eq!(s.dim(), 3);
        for q in ["1", "x1", "x2"] {
            assert!(s.contains(&p(q, 2)));
        }
        assert_eq!(y_free_of(&part("1,1"), Some(Cell::new(1, 0))).unwrap().dim(), 1);
        assert_eq!(y_free_of(&part("1,1,1"), None).unwrap().hilbert_series(), vec![1, 2, 2, 1]);
        assert_eq!(y_free_of(&part("3"), None).unwrap().hilbert_series(), vec![1]);
        assert_eq!(y_free_of(&part("2,1"), None).unwrap().hilbert_series(), vec![1, 2]);
    }

    #[test]
    fn two_routes_to_the_y_free_part_agree() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let delta = lattice_delta(&mu.diagram(), n).unwrap();
                let a = y_free_component(&delta).unwrap();
                let b = y_free_component_by_operators(&delta).unwrap();
                let c = bigraded_module(&mu.diagram()).unwrap().y_free();
                assert!(a.same_space(&b) && a.same_space(&c), "{mu}");
            }
        }
    }

    #[test]
    fn garnir_span_matches_y_free_component() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let g = garnir_span(&mu).unwrap();
                let y = y_free_of(&mu, None).unwrap();
                assert!(g.same_space(&y), "{mu}");
                g.check_invariant().unwrap();
            }
        }
    }

    #[test]
    fn non_invariant_space_is_rejected() {
        let s = derivative_closure(2, &[p("x1", 2)], false).unwrap();
        assert!(matches!(s.check_invariant(), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn nesting_small() {
        let r = nesting_check(&part("1,1,1"), &part("2,1"), None).unwrap();
        assert_eq!(r.larger_inside_smaller, Some(true));
        assert_eq!(r.smaller_inside_larger, Some(false));
        assert_eq!((r.dim_mu, r.dim_lambda), (6, 3));
        let r = nesting_check(&part("3,1"), &part("2,2"), None).unwrap();
        assert!(r.holds());
        let r = nesting_check(&part("2,1"), &part("2,1"), Some(Cell::new(0, 0))).unwrap();
        assert_eq!(r.intersection_is_join, Some(true));
    }
}
