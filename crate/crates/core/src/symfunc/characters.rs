//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::Rational;
use crate::shapes::Partition;

/// First-column hook lengths `λ_i + (k − i)`, in decreasing order.
fn beta_set(lambda: &Partition) -> Vec<usize> {
    let k = lambda.len();
    lambda.parts().iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect()
}

fn mn_rec(beta: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some(&r) = rho.first() else {
        return 1;
    };
    let key = (beta.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // removing a rim hook of length r moves one bead from b down to b - r
        let crossed = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn_rec(&next, &rho[1..], memo);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// `χ^λ(ρ)`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::UnequalWeights(lambda.weight(), rho.weight()));
    }
    Ok(mn_rec(&beta_set(lambda), rho.parts(), &mut HashMap::new()))
}

/// `z_ρ = Π i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> Rational {
    let mut z = Rational::one();
    let mut counts: HashMap<usize, u32> = HashMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (part, m) in counts {
        for _ in 0..m {
            z *= &Rational::from(part as i64);
        }
        z *= &Rational::factorial(m);
    }
    z
}

/// The permutation with cycles `(1 … ρ_1)(ρ_1+1 … ρ_1+ρ_2)…`, as 0-based images.
pub fn class_representative(rho: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(rho.weight());
    let mut start = 0;
    for &len in rho.parts() {
        for k in 0..len {
            perm.push(start + (k + 1) % len);
        }
        start += len;
    }
    perm
}

/// Cycle type of a permutation given as 0-based images.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

/// All values `χ^λ(ρ)` for `λ, ρ ⊢ n`, both indexed by [`Partition::all`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `values[λ][ρ]`
    pub values: Vec<Vec<i64>>,
    pub z: Vec<Rational>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = Partition::all(n);
        let values = par::map(&partitions, |lambda| {
            let beta = beta_set(lambda);
            let mut memo = HashMap::new();
            partitions.iter().map(|rho| mn_rec(&beta, rho.parts(), &mut memo)).collect()
        });
        let z = partitions.iter().map(z_rho).collect();
        CharacterTable { n, partitions, values, z }
    }

    /// Shared table for `n`, built once per process.
    pub fn cached(n: usize) -> Arc<CharacterTable> {
        static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(Default::default);
        if let Some(t) = tables.lock().expect("table lock").get(&n) {
            return t.clone();
        }
        let t = Arc::new(CharacterTable::new(n));
        tables.lock().expect("table lock").entry(n).or_insert(t).clone()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lambda)?][self.index_of(rho)?])
    }

    /// `Σ_ρ χ^λ(ρ) χ^κ(ρ) / z_ρ`.
    pub fn inner(&self, a: usize, b: usize) -> Rational {
        let mut s = Rational::zero();
        for r in 0..self.partitions.len() {
            s += &(&Rational::from(self.values[a][r] * self.values[b][r]) / &self.z[r]);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        for rho in Partition::all(4) {
            assert_eq!(mn_character(&part("4"), &rho).unwrap(), 1);
            let sign = if (4 - rho.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mn_character(&part("1,1,1,1"), &rho).unwrap(), sign);
        }
        assert_eq!(mn_character(&part("2,1"), &part("1,1,1")).unwrap(), 2);
        assert_eq!(mn_character(&part("2,1"), &part("3")).unwrap(), -1);
        assert_eq!(mn_character(&part("2,1"), &part("2,1")).unwrap(), 0);
        assert!(matches!(mn_character(&part("2"), &part("1")), Err(Error::UnequalWeights(2, 1))));
    }

    #[test]
    fn degrees_are_hook_counts() {
        for n in 1..=8 {
            let t = CharacterTable::new(n);
            let id = t.index_of(&Partition::new(vec![1; n]).unwrap()).unwrap();
            for (i, lambda) in t.partitions.iter().enumerate() {
                assert_eq!(BigInt::from(t.values[i][id]), lambda.hook_count());
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let t = CharacterTable::new(n);
            for a in 0..t.partitions.len() {
                for b in 0..t.partitions.len() {
                    let want = if a == b { Rational::one() } else { Rational::zero() };
                    assert_eq!(t.inner(a, b), want);
                }
            }
            // class sizes n!/z_ρ add up to n!
            let total: Rational = t.z.iter().map(|z| &Rational::factorial(n as u32) / z).sum();
            assert_eq!(total, Rational::factorial(n as u32));
        }
    }

    #[test]
    fn representatives_have_their_type() {
        for n in 1..=7 {
            for rho in Partition::all(n) {
                assert_eq!(cycle_type(&class_representative(&rho)), rho);
            }
        }
    }
}
