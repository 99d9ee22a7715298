use num_traits::Zero;

use crate::error::{Error, Result};
use crate::par;
use crate::poly::Rational;
use crate::spans::GradedSpace;

use super::characters::{class_representative, CharacterTable};
use super::{SymFunc, TPolynomial};

/// Graded Frobenius characteristic of the Y-free pieces of an `S_n`-stable space.
///
/// For each degree `r` and class `ρ` the trace of a representative is read
/// off the echelon coordinates; the multiplicity of `s_λ` in degree `r` is
/// `Σ_ρ χ^λ(ρ) tr_r(ρ) / z_ρ`.
pub fn graded_frobenius(space: &GradedSpace) -> Result<SymFunc> {
    space.check_invariant()?;
    let n = space.nvars();
    let table = CharacterTable::cached(n);
    let pieces: Vec<(usize, &crate::poly::RowSpace)> = space
        .pieces()
        .iter()
        .filter(|((_, s), p)| *s == 0 && p.rank() > 0)
        .map(|((r, _), p)| (*r as usize, p))
        .collect();
    let reps: Vec<Vec<usize>> = table.partitions.iter().map(class_representative).collect();
    let jobs: Vec<(usize, usize)> = (0..pieces.len()).flat_map(|k| (0..reps.len()).map(move |c| (k, c))).collect();
    let traces = par::map(&jobs, |&(k, c)| pieces[k].1.trace_of(|b| b.permute(&reps[c])));
    let mut out = SymFunc::zero(n);
    for (k, &(r, _)) in pieces.iter().enumerate() {
        let tr = &traces[k * reps.len()..(k + 1) * reps.len()];
        for (li, lambda) in table.partitions.iter().enumerate() {
            let mut m = Rational::zero();
            for (c, t) in tr.iter().enumerate() {
                m += &(&(t * &Rational::from(table.values[li][c])) / &table.z[c]);
            }
            if !m.is_integer() || m.is_negative() {
                return Err(Error::NonIntegral {
                    label: format!("s[{lambda}] in degree {r}"),
                    value: m.to_string(),
                });
            }
            if !m.is_zero() {
                out.add_term(lambda.clone(), &TPolynomial::t_pow(r).scale(&m))?;
            }
        }
    }
    Ok(out)
}
