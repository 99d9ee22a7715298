use std::collections::BTreeMap;

use num_traits::Zero;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

type Row<K> = BTreeMap<K, Rational>;

fn sub_scaled<K: Ord + Clone>(v: &mut Row<K>, row: &Row<K>, c: &Rational) {
    for (k, a) in row {
        let delta = a * c;
        match v.get_mut(k) {
            Some(x) => {
                *x -= &delta;
                if x.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), -delta);
            }
        }
    }
}

/// Incremental reduced row-echelon form over sparse rows keyed by `K`.
///
/// The pivot of a row is its greatest key; every pivot entry is 1 and all
/// other rows vanish at that key.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<K: Ord + Clone> {
    rows: Vec<Row<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row<K>] {
        &self.rows
    }

    /// Reduce `v` against the current rows. Subtracting a reduced row never
    /// reintroduces another pivot key, so one pass suffices.
    pub fn reduce(&self, v: &mut Row<K>) {
        if self.rows.is_empty() {
            return;
        }
        let hits: Vec<(usize, Rational)> = if v.len() < self.pivots.len() {
            v.iter()
                .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
                .collect()
        } else {
            self.pivots
                .iter()
                .filter_map(|(k, &r)| v.get(k).map(|c| (r, c.clone())))
                .collect()
        };
        for (r, c) in hits {
            sub_scaled(v, &self.rows[r], &c);
        }
    }

    pub fn contains(&self, v: &Row<K>) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_empty()
    }

    /// Insert `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, mut v: Row<K>) -> bool {
        self.reduce(&mut v);
        let Some((lead, lc)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        if !lc.is_one() {
            let inv = lc.recip();
            for c in v.values_mut() {
                *c *= &inv;
            }
        }
        for row in &mut self.rows {
            if let Some(c) = row.get(&lead).cloned() {
                sub_scaled(row, &v, &c);
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(v);
        true
    }

    /// Coordinates of a member `v` with respect to the rows: the entries of
    /// `v` at the pivot keys.
    pub fn coordinates(&self, v: &Row<K>) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rows.len()];
        for (k, &r) in &self.pivots {
            if let Some(c) = v.get(k) {
                out[r] = c.clone();
            }
        }
        out
    }

    pub fn pivot_of(&self, r: usize) -> &K {
        self.rows[r].keys().next_back().expect("rows are nonzero")
    }
}

/// Span of polynomials, kept as reduced echelon rows over monomial columns.
///
/// Columns are monomials ordered reverse-lexicographically; each stored row
/// has leading coefficient 1 at its pivot monomial.
#[derive(Clone, Debug)]
pub struct RowSpace {
    nvars: usize,
    ech: Echelon<Monomial>,
}

impl RowSpace {
    pub fn new(nvars: usize) -> Self {
        RowSpace { nvars, ech: Echelon::default() }
    }

    pub fn from_polys<'a, I: IntoIterator<Item = &'a Polynomial>>(nvars: usize, polys: I) -> Self {
        let mut s = Self::new(nvars);
        for p in polys {
            s.insert(p);
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.ech.rank() == 0
    }

    /// Insert `p`; returns `true` iff the rank went up (by exactly one).
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        assert_eq!(p.nvars(), self.nvars, "row space variable count");
        self.ech.insert(p.map().clone())
    }

    pub fn try_insert(&mut self, p: &Polynomial) -> Result<bool> {
        if p.nvars() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, p.nvars()));
        }
        Ok(self.insert(p))
    }

    pub fn insert_owned(&mut self, p: Polynomial) -> bool {
        assert_eq!(p.nvars(), self.nvars, "row space variable count");
        self.ech.insert(p.into_map())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.nvars() == self.nvars && self.ech.contains(p.map())
    }

    /// Remainder of `p` after reduction by the space.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut v = p.map().clone();
        self.ech.reduce(&mut v);
        Polynomial::from_map(self.nvars, v)
    }

    /// Basis rows, each with leading coefficient 1.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.ech
            .rows()
            .iter()
            .map(|r| Polynomial::from_map(self.nvars, r.clone()))
            .collect()
    }

    pub fn pivots(&self) -> Vec<Monomial> {
        (0..self.rank()).map(|r| *self.ech.pivot_of(r)).collect()
    }

    /// Coordinates of a member in terms of [`RowSpace::basis`].
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Rational> {
        self.ech.coordinates(p.map())
    }

    /// Trace of a linear map that keeps the space invariant, given the
    /// images of the basis rows.
    pub fn trace_of<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> Rational {
        let mut tr = Rational::zero();
        for (r, row) in self.ech.rows().iter().enumerate() {
            let img = f(&Polynomial::from_map(self.nvars, row.clone()));
            tr += &img.coeff(self.ech.pivot_of(r));
        }
        tr
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        self.nvars == other.nvars
            && self.rank() <= other.rank()
            && self.ech.rows().iter().all(|r| other.ech.contains(r))
    }

    pub fn sum(&self, other: &RowSpace) -> Result<RowSpace> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for r in other.ech.rows() {
            out.ech.insert(r.clone());
        }
        Ok(out)
    }

    /// `self ∩ other` by the Zassenhaus construction: echelonize rows
    /// `(u | u)` and `(w | 0)` with the first block leading; rows whose first
    /// block vanished carry a basis of the intersection in the second block.
    pub fn intersection(&self, other: &RowSpace) -> Result<RowSpace> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        let mut z: Echelon<(bool, Monomial)> = Echelon::default();
        for u in self.ech.rows() {
            let mut row: Row<(bool, Monomial)> = BTreeMap::new();
            for (m, c) in u {
                row.insert((true, *m), c.clone());
                row.insert((false, *m), c.clone());
            }
            z.insert(row);
        }
        for w in other.ech.rows() {
            let row: Row<(bool, Monomial)> =
                w.iter().map(|(m, c)| ((true, *m), c.clone())).collect();
            z.insert(row);
        }
        let mut out = RowSpace::new(self.nvars);
        for row in z.rows() {
            if row.keys().next_back().is_some_and(|(first, _)| !*first) {
                let v: Row<Monomial> = row.iter().map(|((_, m), c)| (*m, c.clone())).collect();
                out.ech.insert(v);
            }
        }
        Ok(out)
    }
}

impl PartialEq for RowSpace {
    /// Equality of spans.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.rank() == other.rank() && self.is_subspace_of(other)
    }
}

impl Eq for RowSpace {}
