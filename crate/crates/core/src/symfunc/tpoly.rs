use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::poly::Rational;

/// Polynomial in one variable `t` with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPolynomial(Vec<Rational>);

impl TPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPolynomial(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        TPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn t_pow(k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        TPolynomial(v)
    }

    /// `1 + t + … + t^k`.
    pub fn geometric(k: usize) -> Self {
        TPolynomial(vec![Rational::one(); k + 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.0.iter().cloned());
        TPolynomial(v)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * t) + c)
    }

    /// `t^d · P(1/t)`; requires `d ≥ deg P`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|k| k <= d), "reversal degree below polynomial degree");
        let mut v = vec![Rational::zero(); d + 1];
        for (k, c) in self.0.iter().enumerate() {
            v[d - k] = c.clone();
        }
        Self::new(v)
    }

    /// Integer coefficients, if all are integers.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| if c.is_integer() { c.to_i64() } else { None }).collect()
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn add_at(&mut self, k: usize, c: &Rational) {
        if self.0.len() <= k {
            self.0.resize(k + 1, Rational::zero());
        }
        self.0[k] += c;
        let trimmed = Self::new(std::mem::take(&mut self.0));
        *self = trimmed;
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, o: &TPolynomial) -> TPolynomial {
        let n = self.0.len().max(o.0.len());
        TPolynomial::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;
    fn sub(self, o: &TPolynomial) -> TPolynomial {
        let n = self.0.len().max(o.0.len());
        TPolynomial::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, o: &TPolynomial) -> TPolynomial {
        if self.is_zero() || o.is_zero() {
            return TPolynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += &(a * b);
            }
        }
        TPolynomial::new(v)
    }
}

impl Neg for &TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        TPolynomial(self.0.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TPolynomial {
            type Output = TPolynomial;
            fn $m(self, o: TPolynomial) -> TPolynomial {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{a}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPolynomial({self})")
    }
}

/// Integers serialize as JSON numbers, other rationals as `"a/b"` strings.
impl Serialize for TPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            match c.to_i64() {
                Some(i) if c.is_integer() => seq.serialize_element(&i)?,
                _ => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
        let mut out = Vec::with_capacity(raw.len());
        for v in raw {
            let c = match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(Rational::from)
                    .ok_or_else(|| de::Error::custom(format!("coefficient {n} is not an integer")))?,
                serde_json::Value::String(s) => s.parse().map_err(de::Error::custom)?,
                other => return Err(de::Error::custom(format!("bad coefficient {other}"))),
            };
            out.push(c);
        }
        Ok(TPolynomial::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = TPolynomial::from_ints(&[1, 1]);
        let b = TPolynomial::from_ints(&[1, -1]);
        assert_eq!(&a * &b, TPolynomial::from_ints(&[1, 0, -1]));
        assert_eq!(&a - &a, TPolynomial::zero());
        assert_eq!(TPolynomial::from_ints(&[0, 0]), TPolynomial::zero());
        assert_eq!(TPolynomial::geometric(2), TPolynomial::from_ints(&[1, 1, 1]));
        assert_eq!(TPolynomial::from_ints(&[1, 2]).reversed(3), TPolynomial::from_ints(&[0, 0, 2, 1]));
        assert_eq!(a.eval(&Rational::from(3)), Rational::from(4));
        assert_eq!(TPolynomial::one().shift(2), TPolynomial::t_pow(2));
    }

    #[test]
    fn text_and_json() {
        assert_eq!(TPolynomial::from_ints(&[1, -2, 1]).to_string(), "1 - 2*t + t^2");
        assert_eq!(TPolynomial::from_ints(&[0, 1]).to_string(), "t");
        let p = TPolynomial::new(vec![Rational::new(1, 2), Rational::from(3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2",3]"#);
        assert_eq!(serde_json::from_str::<TPolynomial>(&s).unwrap(), p);
    }
}
