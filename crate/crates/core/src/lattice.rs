//! Lattice determinants `Δ_D`, tableau monomials and Garnir polynomials.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{det_monomial_matrix, Monomial, Polynomial, Rational, MAX_VARS};
use crate::shapes::{LatticeDiagram, Tableau};

fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { max: MAX_VARS, got: n });
    }
    Ok(())
}

/// `Δ_D = det ‖x_i^{r_j} y_i^{c_j}‖`, columns in lexicographic cell order.
pub fn lattice_delta(d: &LatticeDiagram, n: usize) -> Result<Polynomial> {
    if d.len() != n {
        return Err(Error::SizeMismatch { cells: d.len(), expected: n });
    }
    check_vars(n)?;
    let entries: Vec<Vec<Monomial>> = (0..n)
        .map(|i| {
            d.cells()
                .iter()
                .map(|c| Monomial::x_pow(i, c.row as u8).times(Monomial::y_pow(i, c.col as u8)))
                .collect()
        })
        .collect();
    det_monomial_matrix(&entries, n)
}

/// `Π_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> Result<Polynomial> {
    check_vars(n)?;
    let mut out = Polynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            out = &out * &(&Polynomial::x(n, i) - &Polynomial::x(n, j));
        }
    }
    Ok(out)
}

/// Sign `s` with `Δ_D = s · vandermonde(n)` for the single-column diagram.
pub fn vandermonde_sign(n: usize) -> Rational {
    if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `Y_T`, `X_T` and `Z_T = X_T Y_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauMonomialTriple {
    pub y_t: Monomial,
    pub x_t: Monomial,
    pub z_t: Monomial,
}

pub fn tableau_monomials(t: &Tableau) -> TableauMonomialTriple {
    let mut y_t = Monomial::ONE;
    let mut x_t = Monomial::ONE;
    for (cell, v) in t.filling() {
        y_t = y_t.times(Monomial::y_pow(v - 1, cell.col as u8));
        x_t = x_t.times(Monomial::x_pow(v - 1, cell.row as u8));
    }
    TableauMonomialTriple { y_t, x_t, z_t: x_t.times(y_t) }
}

/// `γ_D = Π c!`.
pub fn gamma(d: &LatticeDiagram) -> Rational {
    d.gamma()
}

/// Garnir polynomial: the product over columns of `det ‖x_m^{h_T(ℓ)}‖`,
/// with `m` and `ℓ` running over the column's entries from bottom to top.
pub fn garnir(t: &Tableau) -> Result<Polynomial> {
    garnir_in(t, t.size())
}

/// [`garnir`] in a ring with `nvars ≥ |T|` variables.
pub fn garnir_in(t: &Tableau, nvars: usize) -> Result<Polynomial> {
    check_vars(nvars)?;
    let mut out = Polynomial::one(nvars);
    for col in t.column_sets() {
        if col.len() < 2 {
            let h = col.first().map(|&v| t.height(v)).unwrap_or(0);
            if h > 0 {
                out = &out * &Polynomial::monomial(nvars, Monomial::x_pow(col[0] - 1, h as u8));
            }
            continue;
        }
        let heights: Vec<u8> = col.iter().map(|&v| t.height(v) as u8).collect();
        let entries: Vec<Vec<Monomial>> = col
            .iter()
            .map(|&m| heights.iter().map(|&h| Monomial::x_pow(m - 1, h)).collect())
            .collect();
        out = &out * &det_monomial_matrix(&entries, nvars)?;
    }
    Ok(out)
}

/// `∂Y_T Δ_D`.
pub fn dy_applied_to_delta(t: &Tableau, d: &LatticeDiagram) -> Result<Polynomial> {
    if t.size() != d.len() {
        return Err(Error::SizeMismatch { cells: d.len(), expected: t.size() });
    }
    let delta = lattice_delta(d, d.len())?;
    Ok(delta.diff_monomial(tableau_monomials(t).y_t))
}

/// Outcome of comparing `∂Y_T Δ_D` with `γ_D Δ_T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GarnirRelation {
    /// `∂Y_T Δ_D = sign · γ_D Δ_T` with `sign = ±1`.
    Multiple { sign: i8 },
    /// The Y-free part of `∂Y_T Δ_D` vanishes.
    YFreeVanishes,
    Neither,
}

/// Classify `∂Y_T Δ_D` as `±γ_D Δ_T` or as having no Y-free part.
pub fn garnir_relation(t: &Tableau, d: &LatticeDiagram) -> Result<GarnirRelation> {
    let lhs = dy_applied_to_delta(t, d)?;
    let rhs = garnir(t)?.scale(&gamma(d));
    if lhs == rhs {
        return Ok(GarnirRelation::Multiple { sign: 1 });
    }
    if lhs == -&rhs {
        return Ok(GarnirRelation::Multiple { sign: -1 });
    }
    if lhs.y_free_part().is_zero() {
        return Ok(GarnirRelation::YFreeVanishes);
    }
    Ok(GarnirRelation::Neither)
}

/// Same column sets, that is `R` is a column-fixing rearrangement of `T`.
pub fn same_column_sets(t: &Tableau, r: &Tableau) -> bool {
    let norm = |x: &Tableau| {
        let mut cols = x.column_sets();
        for c in &mut cols {
            c.sort_unstable();
        }
        while cols.last().is_some_and(|c| c.is_empty()) {
            cols.pop();
        }
        cols
    };
    norm(t) == norm(r)
}

/// Check the product rule `∂Y_T Z_R = γ_D X_R` (same column sets) or `0`.
pub fn tableau_lemma_holds(t: &Tableau, r: &Tableau) -> bool {
    let n = t.size();
    let mt = tableau_monomials(t);
    let mr = tableau_monomials(r);
    let lhs = Polynomial::monomial(n, mr.z_t).diff_monomial(mt.y_t);
    let expected = if same_column_sets(t, r) {
        Polynomial::term(n, gamma(r.shape()), mr.x_t)
    } else {
        Polynomial::zero(n)
    };
    lhs == expected
}

/// `true` iff `σ·p = −p` for every adjacent transposition, under the diagonal action.
pub fn is_alternating(p: &Polynomial) -> bool {
    let n = p.nvars();
    (0..n.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        p.permute(&perm) == -p
    })
}
