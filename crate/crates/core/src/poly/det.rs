use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::par;

/// Visit every permutation of `0..n` together with its sign (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&[usize], bool)>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut even = true;
    f(&perm, even);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            even = !even;
            f(&perm, even);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Sign of a permutation by counting inversions.
pub fn permutation_is_even(perm: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv.is_multiple_of(2)
}

/// Determinant of a square matrix of monomials by Leibniz expansion,
/// `Σ_σ sgn(σ) Π_i entries[i][σ(i)]`.
pub fn det_monomial_matrix(entries: &[Vec<Monomial>], nvars: usize) -> Result<Polynomial> {
    let n = entries.len();
    for (row, r) in entries.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { rows: n, row, cols: r.len() });
        }
    }
    if n == 0 {
        return Ok(Polynomial::one(nvars));
    }
    // split on the column chosen by row 0
    let parts = par::map_range(0..n, |first| {
        let rest_cols: Vec<usize> = (0..n).filter(|&c| c != first).collect();
        // moving column `first` to the front costs `first` transpositions
        let base_even = first % 2 == 0;
        let mut out = Polynomial::zero(nvars);
        let plus = Rational::one();
        let minus = -Rational::one();
        for_each_permutation(n - 1, |p, even| {
            let mut m = entries[0][first];
            for (k, &pk) in p.iter().enumerate() {
                m = m.times(entries[k + 1][rest_cols[pk]]);
            }
            let sign = if even == base_even { &plus } else { &minus };
            out.add_term(m, sign);
        });
        out
    });
    let mut total = Polynomial::zero(nvars);
    for p in parts {
        total = &total + &p;
    }
    Ok(total)
}
