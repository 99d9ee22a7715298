use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of `x` (and of `y`) variables a monomial can carry.
pub const MAX_VARS: usize = 8;

/// A variable of `Q[x_1..x_n, y_1..y_n]`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::X(i) => {
                assert!(i < MAX_VARS, "variable x{} out of range", i + 1);
                i
            }
            Var::Y(i) => {
                assert!(i < MAX_VARS, "variable y{} out of range", i + 1);
                MAX_VARS + i
            }
        }
    }

    pub fn index(self) -> usize {
        match self {
            Var::X(i) | Var::Y(i) => i,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{}", i + 1),
            Var::Y(i) => write!(f, "y{}", i + 1),
        }
    }
}

/// A monomial `x^a y^b` with one exponent byte per variable.
///
/// Byte `i` holds the exponent of `x_{i+1}` and byte `8 + i` that of
/// `y_{i+1}`, so comparing the packed integers compares exponents starting
/// from the last variable: the derived `Ord` is reverse lexicographic.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var) -> Self {
        Self::ONE.with(v, 1)
    }

    pub fn x_pow(i: usize, e: u8) -> Self {
        Self::ONE.with(Var::X(i), e)
    }

    pub fn y_pow(i: usize, e: u8) -> Self {
        Self::ONE.with(Var::Y(i), e)
    }

    /// `x^xs y^ys`, exponents given per variable.
    pub fn from_exponents(xs: &[u8], ys: &[u8]) -> Self {
        assert!(xs.len() <= MAX_VARS && ys.len() <= MAX_VARS);
        let mut m = Self::ONE;
        for (i, &e) in xs.iter().enumerate() {
            m = m.with(Var::X(i), e);
        }
        for (i, &e) in ys.iter().enumerate() {
            m = m.with(Var::Y(i), e);
        }
        m
    }

    #[inline]
    fn byte(self, slot: usize) -> u8 {
        (self.0 >> (8 * slot)) as u8
    }

    #[inline]
    pub fn exp(self, v: Var) -> u8 {
        self.byte(v.slot())
    }

    /// Copy with the exponent of `v` replaced by `e`.
    #[inline]
    pub fn with(self, v: Var, e: u8) -> Self {
        let shift = 8 * v.slot();
        Monomial((self.0 & !(0xffu128 << shift)) | ((e as u128) << shift))
    }

    pub fn x_exponents(self, n: usize) -> Vec<u8> {
        (0..n).map(|i| self.exp(Var::X(i))).collect()
    }

    pub fn y_exponents(self, n: usize) -> Vec<u8> {
        (0..n).map(|i| self.exp(Var::Y(i))).collect()
    }

    pub fn x_degree(self) -> u32 {
        (0..MAX_VARS).map(|s| self.byte(s) as u32).sum()
    }

    pub fn y_degree(self) -> u32 {
        (MAX_VARS..2 * MAX_VARS).map(|s| self.byte(s) as u32).sum()
    }

    pub fn bidegree(self) -> (u32, u32) {
        (self.x_degree(), self.y_degree())
    }

    pub fn x_part(self) -> Self {
        Monomial(self.0 & ((1u128 << 64) - 1))
    }

    pub fn y_part(self) -> Self {
        Monomial(self.0 & !((1u128 << 64) - 1))
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Product of monomials. Panics if an exponent would exceed 255.
    pub fn times(self, other: Monomial) -> Monomial {
        let mut out = 0u128;
        for s in 0..2 * MAX_VARS {
            let e = self
                .byte(s)
                .checked_add(other.byte(s))
                .expect("monomial exponent overflow");
            out |= (e as u128) << (8 * s);
        }
        Monomial(out)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..2 * MAX_VARS).all(|s| self.byte(s) <= other.byte(s))
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(self, other: Monomial) -> Option<Monomial> {
        if self.divides(other) {
            // no borrows occur because every byte of `self` is <= the matching byte
            Some(Monomial(other.0 - self.0))
        } else {
            None
        }
    }

    /// Non-trivial `(variable, exponent)` pairs.
    pub fn factors(self) -> impl Iterator<Item = (Var, u8)> {
        (0..2 * MAX_VARS).filter_map(move |s| {
            let e = self.byte(s);
            if e == 0 {
                None
            } else if s < MAX_VARS {
                Some((Var::X(s), e))
            } else {
                Some((Var::Y(s - MAX_VARS), e))
            }
        })
    }

    /// Diagonal action: the exponent of `x_i` moves to `x_{perm[i]}`, and
    /// likewise for `y`.
    pub fn permute(self, perm: &[usize]) -> Monomial {
        let mut out = Monomial::ONE;
        for (i, &p) in perm.iter().enumerate() {
            out = out
                .with(Var::X(p), self.exp(Var::X(i)))
                .with(Var::Y(p), self.exp(Var::Y(i)));
        }
        out
    }

    /// Highest variable index carrying a nonzero exponent, plus one.
    pub fn support_len(self) -> usize {
        self.factors().map(|(v, _)| v.index() + 1).max().unwrap_or(0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
