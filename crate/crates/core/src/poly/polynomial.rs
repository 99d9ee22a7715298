use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{Monomial, Var, MAX_VARS};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial in `x_1..x_n, y_1..y_n` with exact rational coefficients.
///
/// Terms are kept in a map ordered by the reverse lexicographic monomial
/// order, so the last entry is the leading term. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, c, Monomial::ONE)
    }

    pub fn term(nvars: usize, c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(nvars);
        assert!(m.support_len() <= nvars, "monomial {m} uses more than {nvars} variables");
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(nvars: usize, m: Monomial) -> Self {
        Self::term(nvars, Rational::one(), m)
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        Self::monomial(nvars, Monomial::var(v))
    }

    pub fn x(nvars: usize, i: usize) -> Self {
        Self::var(nvars, Var::X(i))
    }

    pub fn y(nvars: usize, i: usize) -> Self {
        Self::var(nvars, Var::Y(i))
    }

    /// Build from `(coefficient, monomial)` pairs, combining repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut p = Self::zero(nvars);
        for (c, m) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn from_map(nvars: usize, terms: BTreeMap<Monomial, Rational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub(crate) fn into_map(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub(crate) fn map(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in reverse lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.support_len() <= self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(*m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, &(a * c));
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `∂^order / ∂v^order`.
    pub fn partial(&self, v: Var, order: u8) -> Self {
        if order == 0 {
            return self.clone();
        }
        self.diff_monomial(Monomial::ONE.with(v, order))
    }

    /// Apply the mixed partial `∂^a` for the exponent vector of `a`.
    pub fn diff_monomial(&self, a: Monomial) -> Self {
        if a.is_one() {
            return self.clone();
        }
        let factors: Vec<(Var, u8)> = a.factors().collect();
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let Some(rest) = a.quotient_of(*m) else { continue };
            let mut k: u64 = 1;
            for &(v, e) in &factors {
                let top = m.exp(v) as u64;
                for j in 0..e as u64 {
                    k *= top - j;
                }
            }
            // distinct source monomials give distinct quotients
            out.insert(rest, c * &Rational::from(k));
        }
        Polynomial { nvars: self.nvars, terms: out }
    }

    /// `op(∂)` applied to `target`: each monomial of `op` becomes the
    /// matching mixed partial, weighted by its coefficient.
    pub fn apply_diff_operator(op: &Self, target: &Self) -> Result<Self> {
        op.check_vars(target)?;
        let mut out = Self::zero(target.nvars);
        for (m, c) in &op.terms {
            out.add_scaled(&target.diff_monomial(*m), c);
        }
        Ok(out)
    }

    /// `D_X = ∂_{x_1} + … + ∂_{x_n}`.
    pub fn dx_sum(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for i in 0..self.nvars {
            let d = self.partial(Var::X(i), 1);
            for (m, c) in d.terms {
                out.add_term(m, &c);
            }
        }
        out
    }

    /// Diagonal action `σ·P(X;Y) = P(x_{σ1}, …; y_{σ1}, …)` with `perm` 0-based.
    ///
    /// The variable `x_i` is sent to `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect(),
        }
    }

    pub fn is_bihomogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.bidegree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn bidegree(&self) -> Option<(u32, u32)> {
        if self.is_bihomogeneous() {
            self.terms.keys().next().map(|m| m.bidegree())
        } else {
            None
        }
    }

    pub fn is_y_free(&self) -> bool {
        self.terms.keys().all(|m| m.y_degree() == 0)
    }

    /// Terms without any `y` variable.
    pub fn y_free_part(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.y_degree() == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Group terms by their `y` part: `P = Σ_b y^b · P_b(X)`.
    pub fn split_by_y(&self) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.y_part())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .terms
                .insert(m.x_part(), c.clone());
        }
        out
    }

    /// Scale so the leading coefficient is 1; returns the removed scalar.
    pub fn normalized(&self) -> (Self, Rational) {
        match self.leading() {
            None => (self.clone(), Rational::zero()),
            Some((_, c)) => {
                let c = c.clone();
                (self.scale(&c.recip()), c)
            }
        }
    }

    /// `Some(c)` with `self == c * other`, `c != 0`.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<Rational> {
        if self.nvars != other.nvars || self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (lm, lc) = self.leading()?;
        let oc = other.terms.get(lm)?;
        let c = lc / oc;
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Canonical text form, terms from the leading one down, e.g.
    /// `x1^2*y3 - 1/2*x2 + 1`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parse the canonical text form over `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial `{s}`"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = Self::zero(nvars);
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut signed = false;
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if !cur.is_empty() {
                        pieces.push((neg, std::mem::take(&mut cur)));
                    } else if signed {
                        return Err(bad("repeated sign"));
                    }
                    neg = ch == '-';
                    signed = true;
                }
                c if c.is_whitespace() => {}
                c => cur.push(c),
            }
        }
        if cur.is_empty() {
            return Err(bad("trailing sign"));
        }
        pieces.push((neg, cur));
        for (neg, piece) in pieces {
            let mut coeff = Rational::one();
            let mut mono = Monomial::ONE;
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                let first = factor.chars().next().unwrap();
                if first == 'x' || first == 'y' {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u8>().map_err(|_| bad("bad exponent"))?),
                        None => (factor, 1),
                    };
                    let idx: usize = name[1..].parse().map_err(|_| bad("bad variable"))?;
                    if idx == 0 || idx > nvars {
                        return Err(bad("variable index out of range"));
                    }
                    let v = if first == 'x' { Var::X(idx - 1) } else { Var::Y(idx - 1) };
                    mono = mono.times(Monomial::ONE.with(v, exp));
                } else {
                    coeff *= &factor.parse::<Rational>()?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, &coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    nvars: usize,
    poly: String,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson { nvars: self.nvars, poly: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolynomialJson::deserialize(d)?;
        Polynomial::parse(&j.poly, j.nvars).map_err(serde::de::Error::custom)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn addition() {
        assert!((&p("x1 - x2", 2) + &p("x2 - x1", 2)).is_zero());
        let q = p("3*x1*y2 - 1/2", 2);
        assert_eq!(&q + &Polynomial::zero(2), q);
        assert_eq!(&p("x1", 2) + &p("x1", 2), p("2*x1", 2));
        assert!(matches!(
            p("x1", 2).try_add(&p("x1", 3)),
            Err(Error::VariableMismatch(2, 3))
        ));
    }

    #[test]
    fn multiplication() {
        assert_eq!(&p("x1 - x2", 2) * &p("x1 + x2", 2), p("x1^2 - x2^2", 2));
        let q = p("x1*y1 + 7", 2);
        assert_eq!(&q * &Polynomial::one(2), q);
        let v = &(&p("x2 - x1", 3) * &p("x3 - x1", 3)) * &p("x3 - x2", 3);
        assert_eq!(v.len(), 6);
        assert_eq!(v.bidegree(), Some((3, 0)));
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x1^2*x2", 2).partial(Var::X(0), 1), p("2*x1*x2", 2));
        assert!(p("x2", 2).partial(Var::X(0), 1).is_zero());
        assert_eq!(p("x2 - x1", 2).partial(Var::X(1), 1), Polynomial::one(2));
        assert_eq!(p("x1^3", 1).partial(Var::X(0), 2), p("6*x1", 1));
        assert!(p("x1^3", 1).partial(Var::X(0), 4).is_zero());
    }

    #[test]
    fn diff_operator() {
        let out = Polynomial::apply_diff_operator(&p("y1*y2", 2), &p("y1*x2*y2*x1", 2)).unwrap();
        assert_eq!(out, p("x1*x2", 2));
        let t = p("x1^2*y2 - 3*x2", 2);
        assert_eq!(Polynomial::apply_diff_operator(&Polynomial::one(2), &t).unwrap(), t);
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "-1", "x1^2*y3 - 1/2*x2 + 1", "-3*x1*x2*y1^4 + x3"] {
            assert_eq!(p(s, 3).to_string(), s);
        }
        assert!(Polynomial::parse("x4", 3).is_err());
        assert!(Polynomial::parse("x1 +", 3).is_err());
        assert!(Polynomial::parse("", 3).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = p("x1^2*y3 - 1/2*x2 + 1", 3);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"nvars":3,"poly":"x1^2*y3 - 1/2*x2 + 1"}"#);
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn scalar_multiples() {
        let a = p("2*x1 - 4*x2", 2);
        let b = p("-x1 + 2*x2", 2);
        assert_eq!(a.scalar_multiple_of(&b), Some(Rational::from(-2)));
        assert_eq!(a.scalar_multiple_of(&p("x1 - x2", 2)), None);
        let (n, c) = a.normalized();
        assert_eq!(c, Rational::from(-4));
        assert_eq!(n.leading().unwrap().1, &Rational::one());
    }

    #[test]
    fn split_by_y_reassembles() {
        let q = p("x1*y1 + 2*x2*y1 - y2 + x1^2", 2);
        let parts = q.split_by_y();
        assert_eq!(parts.len(), 3);
        let mut back = Polynomial::zero(2);
        for (ym, px) in parts {
            back = &back + &(&px * &Polynomial::monomial(2, ym));
        }
        assert_eq!(back, q);
    }
}
