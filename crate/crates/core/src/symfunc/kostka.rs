//! Kostka–Foulkes polynomials by charge, and the Hall–Littlewood functions
//! they assemble into.

use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::shapes::{dominance_leq, Partition};

use super::{SymFunc, TPolynomial};

/// Semistandard tableaux of shape `λ` and content `μ`, rows listed from the
/// longest (English top row) down.
pub fn semistandard_tableaux(lambda: &Partition, content: &Partition) -> Result<Vec<Vec<Vec<usize>>>> {
    if lambda.weight() != content.weight() {
        return Err(Error::UnequalWeights(lambda.weight(), content.weight()));
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|r| (0..lambda.row_len(r)).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut left: Vec<usize> = content.parts().to_vec();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == cells.len() {
            out.push(rows.clone());
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            rows[r][c] = v;
            rec(k + 1, cells, rows, left, out);
            left[v - 1] += 1;
        }
        rows[r][c] = 0;
    }
    rec(0, &cells, &mut rows, &mut left, &mut out);
    Ok(out)
}

/// Reading word: rows from the shortest to the longest, each left to right.
pub fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are extracted by scanning leftwards, cyclically, for
/// `1, 2, …`; a letter's index grows by one each time the scan wraps around.
pub fn charge(word: &[usize]) -> usize {
    let mut used = vec![false; word.len()];
    let mut remaining = word.len();
    let mut total = 0;
    while remaining > 0 {
        let top = word.iter().zip(&used).filter(|(_, u)| !**u).map(|(w, _)| *w).max().unwrap_or(0);
        let mut pos = word.len();
        let mut index = 0;
        for letter in 1..=top {
            // scan leftwards from pos, wrapping once if needed
            let mut found = None;
            for p in (0..pos).rev() {
                if !used[p] && word[p] == letter {
                    found = Some(p);
                    break;
                }
            }
            if found.is_none() {
                for p in (pos..word.len()).rev() {
                    if !used[p] && word[p] == letter {
                        found = Some(p);
                        break;
                    }
                }
                if letter > 1 {
                    index += 1;
                }
            }
            let Some(p) = found else { break };
            total += index;
            used[p] = true;
            remaining -= 1;
            pos = p;
        }
    }
    total
}

/// `K_{λμ}(t) = Σ_T t^{charge(T)}` over semistandard `T` of shape `λ`, content `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<TPolynomial> {
    let mut out = TPolynomial::zero();
    for t in semistandard_tableaux(lambda, mu)? {
        out.add_at(charge(&reading_word(&t)), &Rational::from(1));
    }
    Ok(out)
}

/// `K̃_{λμ}(t) = t^{n(μ)} K_{λμ}(1/t)`.
pub fn modified_kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<TPolynomial> {
    let k = kostka_foulkes(lambda, mu)?;
    if k.is_zero() {
        return Ok(k);
    }
    Ok(k.reversed(mu.n_statistic()))
}

/// `Σ_λ K̃_{λμ}(t) s_λ`.
pub fn hall_littlewood_h(mu: &Partition) -> Result<SymFunc> {
    let n = mu.weight();
    let mut out = SymFunc::zero(n);
    for lambda in Partition::all(n) {
        if !dominance_leq(mu, &lambda)? {
            continue;
        }
        let k = modified_kostka_foulkes(&lambda, mu)?;
        out.add_term(lambda, &k)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn k(l: &str, m: &str) -> Vec<i64> {
        kostka_foulkes(&part(l), &part(m)).unwrap().to_ints().unwrap()
    }

    #[test]
    fn tabulated_values() {
        assert_eq!(k("2,1", "1,1,1"), vec![0, 1, 1]);
        assert_eq!(k("3", "1,1,1"), vec![0, 0, 0, 1]);
        assert_eq!(k("1,1,1", "1,1,1"), vec![1]);
        assert_eq!(k("3,1", "2,1,1"), vec![0, 1, 1]);
        assert_eq!(k("2,2", "2,1,1"), vec![0, 1]);
        assert_eq!(k("4", "2,1,1"), vec![0, 0, 0, 1]);
        assert_eq!(k("3,1", "2,2"), vec![0, 1]);
        assert_eq!(k("4", "2,2"), vec![0, 0, 1]);
        assert!(kostka_foulkes(&part("2,2"), &part("3,1")).unwrap().is_zero());
    }

    #[test]
    fn diagonal_and_row() {
        for n in 1..=6 {
            for mu in Partition::all(n) {
                assert_eq!(kostka_foulkes(&mu, &mu).unwrap(), TPolynomial::one());
                let row = Partition::new(vec![n]).unwrap();
                assert_eq!(kostka_foulkes(&row, &mu).unwrap(), TPolynomial::t_pow(mu.n_statistic()));
            }
        }
    }

    #[test]
    fn kostka_numbers_at_one() {
        // Σ_λ f^λ K_{λμ}(1) = n!/μ!
        for n in 1..=6 {
            for mu in Partition::all(n) {
                let mut total = Rational::from(0);
                for l in Partition::all(n) {
                    let v = kostka_foulkes(&l, &mu).unwrap().eval(&Rational::from(1));
                    total += &(&v * &Rational::from(l.hook_count()));
                }
                assert_eq!(total, &Rational::factorial(n as u32) / &mu.factorial());
            }
        }
    }

    #[test]
    fn calibration() {
        let h = hall_littlewood_h(&part("1,1")).unwrap();
        assert_eq!(h.coeff(&part("2")), TPolynomial::one());
        assert_eq!(h.coeff(&part("1,1")), TPolynomial::t_pow(1));
        let h = hall_littlewood_h(&part("2,1")).unwrap();
        assert_eq!(h.coeff(&part("3")), TPolynomial::one());
        assert_eq!(h.coeff(&part("2,1")), TPolynomial::t_pow(1));
        assert_eq!(h.terms().len(), 2);
    }

    #[test]
    fn matches_graded_frobenius() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let f = crate::symfunc::graded_frobenius(&crate::spans::y_free_of(&mu, None).unwrap()).unwrap();
                assert_eq!(hall_littlewood_h(&mu).unwrap(), f, "{mu}");
            }
        }
    }
}
