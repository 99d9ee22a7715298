//! Symmetric functions with coefficients in `ℚ[t]`, expanded in Schur functions.

pub mod characters;
pub mod frobenius;
pub mod kostka;
pub mod recurrence;
pub mod tpoly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::shapes::Partition;

pub use characters::{class_representative, cycle_type, mn_character, z_rho, CharacterTable};
pub use frobenius::graded_frobenius;
pub use kostka::{charge, hall_littlewood_h, kostka_foulkes, modified_kostka_foulkes, semistandard_tableaux};
pub use recurrence::{dimension_recurrence_holds, recurrence_check, RecurrenceCase, RecurrenceReport};
pub use tpoly::TPolynomial;

/// `Σ_λ c_λ(t) s_λ`, homogeneous of degree `n`. Zeros of every degree compare equal.
#[derive(Clone, Debug)]
pub struct SymFunc {
    degree: usize,
    terms: BTreeMap<Partition, TPolynomial>,
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.degree == other.degree || self.terms.is_empty())
    }
}

impl Eq for SymFunc {}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, terms: BTreeMap::new() }
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut s = Self::zero(lambda.weight());
        s.terms.insert(lambda, TPolynomial::one());
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, TPolynomial> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> TPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &TPolynomial) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::UnequalWeights(lambda.weight(), self.degree));
        }
        let sum = &self.coeff(&lambda) + c;
        if sum.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, sum);
        }
        Ok(())
    }

    /// Multiply every coefficient by `c`.
    pub fn times(&self, c: &TPolynomial) -> SymFunc {
        let mut out = SymFunc::zero(self.degree);
        for (l, a) in &self.terms {
            let p = a * c;
            if !p.is_zero() {
                out.terms.insert(l.clone(), p);
            }
        }
        out
    }

    /// `self + other`; a zero operand of another degree is accepted.
    pub fn plus(&self, other: &SymFunc) -> Result<SymFunc> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(Error::UnequalWeights(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c)?;
        }
        Ok(out)
    }

    pub fn minus(&self, other: &SymFunc) -> Result<SymFunc> {
        self.plus(&other.times(&TPolynomial::from_ints(&[-1])))
    }

    /// Every coefficient has non-negative integer coefficients.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_nonnegative_integral())
    }

    /// `Σ_λ f^λ c_λ(t)`, the graded dimension of the module it describes.
    pub fn graded_dimension(&self) -> TPolynomial {
        let mut out = TPolynomial::zero();
        for (l, c) in &self.terms {
            out = &out + &c.scale(&Rational::from(l.hook_count()));
        }
        out
    }

    /// Coefficients in the power-sum basis: `p_ρ ↦ Σ_λ c_λ χ^λ(ρ) / z_ρ`.
    pub fn to_power_sum(&self) -> BTreeMap<Partition, TPolynomial> {
        let table = CharacterTable::cached(self.degree);
        let mut out = BTreeMap::new();
        for (r, rho) in table.partitions.iter().enumerate() {
            let mut acc = TPolynomial::zero();
            for (l, c) in &self.terms {
                let li = table.index_of(l).expect("partition of the right size");
                acc = &acc + &c.scale(&(&Rational::from(table.values[li][r]) / &table.z[r]));
            }
            if !acc.is_zero() {
                out.insert(rho.clone(), acc);
            }
        }
        out
    }

    /// Inverse of [`SymFunc::to_power_sum`]: `s_λ ↦ Σ_ρ d_ρ χ^λ(ρ)`.
    pub fn from_power_sum(degree: usize, p: &BTreeMap<Partition, TPolynomial>) -> Result<SymFunc> {
        let table = CharacterTable::cached(degree);
        let mut out = SymFunc::zero(degree);
        for (rho, d) in p {
            let r = table.index_of(rho).ok_or(Error::UnequalWeights(rho.weight(), degree))?;
            for (li, l) in table.partitions.iter().enumerate() {
                out.add_term(l.clone(), &d.scale(&Rational::from(table.values[li][r])))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let many = c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() > 1;
            if *c == TPolynomial::one() {
                write!(f, "s[{l}]")?;
            } else if many {
                write!(f, "({c})*s[{l}]")?;
            } else {
                write!(f, "{c}*s[{l}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    lambda: Partition,
    t_coeffs: TPolynomial,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    terms: Vec<SchurTerm>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: "schur".into(),
            terms: self
                .terms
                .iter()
                .map(|(l, c)| SchurTerm { lambda: l.clone(), t_coeffs: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        if j.basis != "schur" {
            return Err(serde::de::Error::custom(format!("unsupported basis `{}`", j.basis)));
        }
        let degree = j.terms.first().map(|t| t.lambda.weight()).unwrap_or(0);
        let mut out = SymFunc::zero(degree);
        for t in j.terms {
            out.add_term(t.lambda, &t.t_coeffs).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

/// `f^λ` as a big integer.
pub fn f_lambda(lambda: &Partition) -> BigInt {
    lambda.hook_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn json_and_display() {
        let mut h = SymFunc::schur(part("2"));
        h.add_term(part("1,1"), &TPolynomial::t_pow(1)).unwrap();
        assert_eq!(h.to_string(), "t*s[1,1] + s[2]");
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"basis":"schur","terms":[{"lambda":[1,1],"t_coeffs":[0,1]},{"lambda":[2],"t_coeffs":[1]}]}"#);
        assert_eq!(serde_json::from_str::<SymFunc>(&s).unwrap(), h);
        assert!(serde_json::from_str::<SymFunc>(r#"{"basis":"monomial","terms":[]}"#).is_err());
    }

    #[test]
    fn power_sum_round_trip() {
        for n in 1..=6 {
            let mut f = SymFunc::zero(n);
            for (k, l) in Partition::all(n).into_iter().enumerate() {
                f.add_term(l, &TPolynomial::from_ints(&[k as i64, 1 - k as i64])).unwrap();
            }
            let p = f.to_power_sum();
            assert_eq!(SymFunc::from_power_sum(n, &p).unwrap(), f);
        }
        // s_1^2 style check: p_{1,1} = s_2 + s_{1,1}
        let mut p = BTreeMap::new();
        p.insert(part("1,1"), TPolynomial::one());
        let s = SymFunc::from_power_sum(2, &p).unwrap();
        assert_eq!(s.coeff(&part("2")), TPolynomial::one());
        assert_eq!(s.coeff(&part("1,1")), TPolynomial::one());
    }

    #[test]
    fn graded_dimension_counts() {
        let mut h = SymFunc::schur(part("2,1"));
        h.add_term(part("3"), &TPolynomial::t_pow(2)).unwrap();
        assert_eq!(h.graded_dimension(), TPolynomial::from_ints(&[2, 0, 1]));
    }
}
