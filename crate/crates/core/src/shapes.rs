//! Partitions, lattice diagrams, punctured diagrams and tableaux.
//!
//! Cells are `(row, column)` pairs, 0-based, rows counted from the bottom.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// A cell `(row, col)` of `N × N`; JSON form `[row, col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl From<[usize; 2]> for Cell {
    fn from([row, col]: [usize; 2]) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid cell `{s}`, expected `r,c`"));
        let (r, c) = s.split_once(',').ok_or_else(bad)?;
        Ok(Cell::new(r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
    }
}

/// A partition `μ_1 ≥ μ_2 ≥ … > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sort and drop zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of 0-based row `r` (0 past the last row).
    pub fn row_len(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// Height of 0-based column `c`.
    pub fn col_len(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p > c).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col < self.row_len(cell.row)
    }

    /// `μ! = Π μ_i!`.
    pub fn factorial(&self) -> Rational {
        self.0.iter().map(|&p| Rational::factorial(p as u32)).product()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.row_len(0);
        Partition((0..w).map(|c| self.col_len(c)).collect())
    }

    /// Cells east of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> usize {
        self.row_len(cell.row) - cell.col - 1
    }

    /// Cells north of `cell` in its column.
    pub fn leg(&self, cell: Cell) -> usize {
        self.col_len(cell.col) - cell.row - 1
    }

    /// `n(μ) = Σ (i-1) μ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_count(&self) -> BigInt {
        let n = self.weight();
        let mut num = BigInt::from(1);
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigInt::from(1);
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                den *= self.arm(Cell::new(r, c)) + self.leg(Cell::new(r, c)) + 1;
            }
        }
        num / den
    }

    /// Corners in increasing column order.
    pub fn corners(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (0..self.len())
            .filter(|&r| self.row_len(r + 1) < self.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r) - 1))
            .collect();
        out.sort_by_key(|c| c.col);
        out
    }

    /// `μ` minus `cell`, if that cell is a corner.
    pub fn remove_corner(&self, cell: Cell) -> Result<Partition> {
        if !self.corners().contains(&cell) {
            return Err(Error::CellOutside(cell.row, cell.col));
        }
        let mut parts = self.0.clone();
        parts[cell.row] -= 1;
        Ok(Partition::from_unsorted(parts))
    }

    /// The partitions `ν_1, …, ν_k` obtained by removing one corner, in
    /// corner order.
    pub fn removable_partitions(&self) -> Vec<Partition> {
        self.corners()
            .into_iter()
            .map(|c| self.remove_corner(c).expect("corner"))
            .collect()
    }

    /// Corners `(a, b)` with `a ≥ i`, `b ≥ j`, in increasing column order.
    pub fn shadow_corners(&self, hole: Cell) -> Result<Vec<Cell>> {
        if !self.contains(hole) {
            return Err(Error::CellOutside(hole.row, hole.col));
        }
        Ok(self
            .corners()
            .into_iter()
            .filter(|c| c.row >= hole.row && c.col >= hole.col)
            .collect())
    }

    /// `α_ℓ` for the corner with 1-based index `ell`: the row gap to the next
    /// corner to the right, or `a_k + 1` for the last corner.
    pub fn alpha_corner(&self, ell: usize) -> Result<usize> {
        let cs = self.corners();
        if ell == 0 || ell > cs.len() {
            return Err(Error::OutOfRange { index: ell, limit: cs.len() });
        }
        let a = cs[ell - 1].row;
        Ok(match cs.get(ell) {
            Some(next) => a - next.row,
            None => a + 1,
        })
    }

    /// `α` for the corner at `cell`.
    pub fn alpha_of_corner(&self, cell: Cell) -> Result<usize> {
        let idx = self
            .corners()
            .iter()
            .position(|&c| c == cell)
            .ok_or(Error::CellOutside(cell.row, cell.col))?;
        self.alpha_corner(idx + 1)
    }

    pub fn diagram(&self) -> LatticeDiagram {
        diagram_of(self)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell::new(r, c)))
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.row_len(i);
                acc
            })
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("invalid partition `{s}`")))?;
        if parts.is_empty() {
            return Err(Error::Parse(format!("invalid partition `{s}`")));
        }
        Partition::new(parts)
    }
}

/// Dominance order: `μ ⪯ λ` iff every partial sum of `μ` is at most that of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    check_weights(mu, lambda)?;
    let len = mu.len().max(lambda.len());
    let (a, b) = (mu.partial_sums(len), lambda.partial_sums(len));
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// Greatest lower bound in dominance order: partial sums are the pointwise minima.
pub fn dominance_meet(mu: &Partition, lambda: &Partition) -> Result<Partition> {
    check_weights(mu, lambda)?;
    let len = mu.len().max(lambda.len());
    let (a, b) = (mu.partial_sums(len), lambda.partial_sums(len));
    let mut prev = 0;
    let mut parts = Vec::with_capacity(len);
    for k in 0..len {
        let s = a[k].min(b[k]);
        parts.push(s - prev);
        prev = s;
    }
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
}

/// Least upper bound in dominance order, via conjugation (which reverses the order).
pub fn dominance_join(mu: &Partition, lambda: &Partition) -> Result<Partition> {
    Ok(dominance_meet(&mu.conjugate(), &lambda.conjugate())?.conjugate())
}

fn check_weights(mu: &Partition, lambda: &Partition) -> Result<()> {
    if mu.weight() != lambda.weight() {
        return Err(Error::UnequalWeights(mu.weight(), lambda.weight()));
    }
    Ok(())
}

/// A finite set of cells, kept in increasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeDiagram {
    cells: Vec<Cell>,
}

impl LatticeDiagram {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        LatticeDiagram { cells: set.into_iter().collect() }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok()
    }

    /// Number of cells in each column, indexed by column.
    pub fn column_counts(&self) -> Vec<usize> {
        let w = self.cells.iter().map(|c| c.col + 1).max().unwrap_or(0);
        let mut out = vec![0; w];
        for c in &self.cells {
            out[c.col] += 1;
        }
        out
    }

    /// `γ_D = Π c!` over the cells.
    pub fn gamma(&self) -> Rational {
        self.cells.iter().map(|c| Rational::factorial(c.col as u32)).product()
    }

    /// Canonical key such as `0,0;0,1;1,0`.
    pub fn canonical(&self) -> String {
        let s: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        s.join(";")
    }
}

impl fmt::Display for LatticeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.canonical())
    }
}

pub fn diagram_of(mu: &Partition) -> LatticeDiagram {
    LatticeDiagram { cells: mu.cells().collect::<BTreeSet<_>>().into_iter().collect() }
}

/// `μ/ij`: the diagram of `μ` with the hole `(i, j)` removed.
pub fn puncture(mu: &Partition, hole: Cell) -> Result<LatticeDiagram> {
    if !mu.contains(hole) {
        return Err(Error::CellOutside(hole.row, hole.col));
    }
    Ok(LatticeDiagram::new(mu.cells().filter(|&c| c != hole)))
}

/// An injective filling of a diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: LatticeDiagram,
    /// `entries[k]` is the value in `shape.cells()[k]`
    entries: Vec<usize>,
    /// `position[v - 1]` is the index of the cell holding `v`
    position: Vec<usize>,
}

impl Tableau {
    /// Build from `(cell, value)` pairs; values must be exactly `1..=n`.
    pub fn new<I: IntoIterator<Item = (Cell, usize)>>(filling: I) -> Result<Self> {
        let mut pairs: Vec<(Cell, usize)> = filling.into_iter().collect();
        pairs.sort();
        let shape = LatticeDiagram::new(pairs.iter().map(|p| p.0));
        if shape.len() != pairs.len() {
            return Err(Error::Parse("tableau repeats a cell".into()));
        }
        let n = pairs.len();
        let mut position = vec![usize::MAX; n];
        for (k, &(_, v)) in pairs.iter().enumerate() {
            if v == 0 || v > n || position[v - 1] != usize::MAX {
                return Err(Error::Parse(format!("tableau value {v} is not a bijection onto 1..={n}")));
            }
            position[v - 1] = k;
        }
        Ok(Tableau { shape, entries: pairs.into_iter().map(|p| p.1).collect(), position })
    }

    /// Rows listed bottom-up, each left to right, for a partition-shaped tableau.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (Cell::new(r, c), v))),
        )
    }

    pub fn shape(&self) -> &LatticeDiagram {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.shape.index_of(cell).map(|k| self.entries[k])
    }

    /// Cell holding the value `v`.
    pub fn cell_of(&self, v: usize) -> Result<Cell> {
        if v == 0 || v > self.size() {
            return Err(Error::NotAnEntry(v));
        }
        Ok(self.shape.cells()[self.position[v - 1]])
    }

    /// `h_T(v)`, the row of `v`.
    pub fn height(&self, v: usize) -> usize {
        self.shape.cells()[self.position[v - 1]].row
    }

    pub fn column_of(&self, v: usize) -> usize {
        self.shape.cells()[self.position[v - 1]].col
    }

    pub fn filling(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.shape.cells().iter().copied().zip(self.entries.iter().copied())
    }

    /// `Γ_k(T)` for every column `k`, entries listed bottom to top.
    pub fn column_sets(&self) -> Vec<Vec<usize>> {
        let w = self.shape.column_counts().len();
        let mut cols = vec![Vec::new(); w];
        for (cell, v) in self.filling() {
            cols[cell.col].push((cell.row, v));
        }
        cols.into_iter()
            .map(|mut c| {
                c.sort();
                c.into_iter().map(|(_, v)| v).collect()
            })
            .collect()
    }

    /// Rows and columns increase along present cells.
    pub fn is_standard(&self) -> bool {
        let cells = self.shape.cells();
        for (k, c) in cells.iter().enumerate() {
            for (l, d) in cells.iter().enumerate() {
                let before = (c.row == d.row && c.col < d.col) || (c.col == d.col && c.row < d.row);
                if before && self.entries[k] > self.entries[l] {
                    return false;
                }
            }
        }
        true
    }

    /// `α_T(j)`: with `k` the largest entry below `j` in the next column to
    /// the right, `r_j − r_k`; `r_j + 1` when there is none.
    pub fn alpha(&self, j: usize) -> Result<i64> {
        let cj = self.cell_of(j)?;
        let best = self
            .filling()
            .filter(|&(c, v)| c.col == cj.col + 1 && v < j)
            .max_by_key(|&(_, v)| v);
        Ok(match best {
            Some((ck, _)) => cj.row as i64 - ck.row as i64,
            None => cj.row as i64 + 1,
        })
    }

    /// `α_T(1), …, α_T(n)`.
    pub fn alphas(&self) -> Vec<i64> {
        (1..=self.size()).map(|j| self.alpha(j).expect("entry")).collect()
    }

    /// Relabel the cells by `f`, keeping values.
    pub fn map_cells<F: Fn(Cell) -> Cell>(&self, f: F) -> Tableau {
        Tableau::new(self.filling().map(|(c, v)| (f(c), v))).expect("relabelled cells stay distinct")
    }

    /// Replace values by `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Tableau {
        Tableau::new(self.filling().map(|(c, v)| (c, perm[v - 1]))).expect("permutation")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.filling().map(|(c, v)| format!("{v}@{c}")).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<[usize; 2]>,
    entries: Vec<[usize; 3]>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape.cells().iter().map(|c| [c.row, c.col]).collect(),
            entries: self.filling().map(|(c, v)| [c.row, c.col, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let t = Tableau::new(j.entries.iter().map(|e| (Cell::new(e[0], e[1]), e[2])))
            .map_err(serde::de::Error::custom)?;
        let shape = LatticeDiagram::new(j.shape.iter().map(|c| Cell::new(c[0], c[1])));
        if &shape != t.shape() {
            return Err(serde::de::Error::custom("shape does not match entries"));
        }
        Ok(t)
    }
}

/// All standard fillings of `d`, by inserting `1..=n` one at a time into
/// cells whose row and column predecessors are already filled.
pub fn standard_tableaux(d: &LatticeDiagram) -> Vec<Tableau> {
    let cells = d.cells();
    let n = cells.len();
    // predecessors of each cell along its row and column
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            cells
                .iter()
                .enumerate()
                .filter(|(_, e)| (e.row == c.row && e.col < c.col) || (e.col == c.col && e.row < c.row))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    fn rec(
        next: usize,
        n: usize,
        preds: &[Vec<usize>],
        values: &mut Vec<usize>,
        d: &LatticeDiagram,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            let mut position = vec![0; n];
            for (k, &v) in values.iter().enumerate() {
                position[v - 1] = k;
            }
            out.push(Tableau { shape: d.clone(), entries: values.clone(), position });
            return;
        }
        for k in 0..n {
            if values[k] == 0 && preds[k].iter().all(|&p| values[p] != 0) {
                values[k] = next;
                rec(next + 1, n, preds, values, d, out);
                values[k] = 0;
            }
        }
    }
    rec(1, n, &preds, &mut values, d, &mut out);
    out
}

/// All injective fillings of `d` (n! of them).
pub fn injective_tableaux(d: &LatticeDiagram) -> Vec<Tableau> {
    let n = d.len();
    let mut out = Vec::new();
    crate::poly::for_each_permutation(n, |p, _| {
        out.push(Tableau::new(d.cells().iter().copied().zip(p.iter().map(|v| v + 1))).expect("bijection"));
    });
    out
}

/// `T↑_{uv}`: slide the cells of column `v` on or above row `u` up by one.
///
/// `t` has shape `ν = μ − corner`; the result has shape `μ/uv`. Requires
/// `v` to be the corner's column and `u ≤` the corner's row.
pub fn slide_up(t: &Tableau, corner: Cell, u: usize, v: usize) -> Result<Tableau> {
    if v != corner.col {
        return Err(Error::WrongColumn { expected: corner.col, got: v });
    }
    if u > corner.row {
        return Err(Error::OutOfRange { index: u, limit: corner.row });
    }
    Ok(t.map_cells(|c| if c.col == v && c.row >= u { Cell::new(c.row + 1, c.col) } else { c }))
}

/// Inverse of [`slide_up`]: slide column `v` above the vacated row `u` back down.
pub fn slide_down(t: &Tableau, u: usize, v: usize) -> Tableau {
    t.map_cells(|c| if c.col == v && c.row > u { Cell::new(c.row - 1, c.col) } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Vec<Cell> {
        v.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn diagrams() {
        assert_eq!(
            diagram_of(&part("4,2,1")).cells(),
            cells(&[(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0)]).as_slice()
        );
        assert_eq!(diagram_of(&part("1")).cells(), cells(&[(0, 0)]).as_slice());
        assert_eq!(diagram_of(&part("2,2")).cells(), cells(&[(0, 0), (0, 1), (1, 0), (1, 1)]).as_slice());
    }

    #[test]
    fn punctures() {
        assert_eq!(puncture(&part("1,1"), Cell::new(1, 0)).unwrap().cells(), cells(&[(0, 0)]).as_slice());
        assert_eq!(puncture(&part("2,1"), Cell::new(0, 0)).unwrap().cells(), cells(&[(0, 1), (1, 0)]).as_slice());
        let d = puncture(&part("4,2,1"), Cell::new(0, 1)).unwrap();
        assert_eq!(d.len(), 6);
        assert!(!d.contains(Cell::new(0, 1)));
        assert!(matches!(puncture(&part("2,1"), Cell::new(1, 1)), Err(Error::CellOutside(1, 1))));
    }

    #[test]
    fn corner_lists() {
        assert_eq!(part("4,2,1").corners(), cells(&[(2, 0), (1, 1), (0, 3)]));
        assert_eq!(part("5").corners(), cells(&[(0, 4)]));
        assert_eq!(part("2,2").corners(), cells(&[(1, 1)]));
        assert_eq!(
            part("4,2,1").removable_partitions(),
            vec![part("4,2"), part("4,1,1"), part("3,2,1")]
        );
    }

    #[test]
    fn shadows() {
        let mu = part("4,2,1");
        assert_eq!(mu.shadow_corners(Cell::new(0, 1)).unwrap(), cells(&[(1, 1), (0, 3)]));
        assert_eq!(mu.shadow_corners(Cell::new(0, 0)).unwrap(), mu.corners());
        assert_eq!(mu.shadow_corners(Cell::new(1, 1)).unwrap(), cells(&[(1, 1)]));
        assert!(mu.shadow_corners(Cell::new(3, 0)).is_err());
    }

    #[test]
    fn standard_counts_match_hook_formula() {
        assert_eq!(standard_tableaux(&diagram_of(&part("2,1"))).len(), 2);
        assert_eq!(standard_tableaux(&diagram_of(&part("1,1,1,1"))).len(), 1);
        for n in 1..=7 {
            for mu in Partition::all(n) {
                let st = standard_tableaux(&mu.diagram());
                assert_eq!(BigInt::from(st.len()), mu.hook_count(), "{mu}");
                assert!(st.iter().all(|t| t.is_standard()));
                let distinct: BTreeSet<_> = st.iter().collect();
                assert_eq!(distinct.len(), st.len());
            }
        }
    }

    #[test]
    fn example_tableau_and_alpha() {
        let t = Tableau::from_rows(&[vec![1, 2, 7, 9, 10], vec![3, 6], vec![4, 8], vec![5]]).unwrap();
        let st = standard_tableaux(&diagram_of(&part("5,2,2,1")));
        assert!(st.contains(&t));
        let by_rows: Vec<Vec<i64>> = [
            vec![1, 2, 7, 9, 10],
            vec![3, 6],
            vec![4, 8],
            vec![5],
        ]
        .iter()
        .map(|row| row.iter().map(|&v| t.alpha(v).unwrap()).collect())
        .collect();
        assert_eq!(by_rows, vec![vec![1, 1, 1, 1, 1], vec![1, 2], vec![2, 2], vec![3]]);
        assert!(matches!(t.alpha(11), Err(Error::NotAnEntry(11))));
    }

    #[test]
    fn single_column_alpha_is_j() {
        let t = Tableau::from_rows(&[vec![1], vec![2], vec![3], vec![4]]).unwrap();
        assert_eq!(t.alphas(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn alpha_corner_values() {
        let mu = part("4,2,1");
        assert_eq!((1..=3).map(|l| mu.alpha_corner(l).unwrap()).collect::<Vec<_>>(), vec![1, 1, 1]);
        assert_eq!(part("1,1,1,1").alpha_corner(1).unwrap(), 4);
        let mu = part("3,1");
        assert_eq!((1..=2).map(|l| mu.alpha_corner(l).unwrap()).collect::<Vec<_>>(), vec![1, 1]);
        assert!(mu.alpha_corner(3).is_err());
        assert!(mu.alpha_corner(0).is_err());
    }

    #[test]
    fn alpha_corner_agrees_with_tableaux() {
        for n in 1..=7 {
            for mu in Partition::all(n) {
                for t in standard_tableaux(&mu.diagram()) {
                    let corner = t.cell_of(n).unwrap();
                    assert_eq!(t.alpha(n).unwrap(), mu.alpha_of_corner(corner).unwrap() as i64);
                }
                // n = Σ α_ℓ (b_ℓ + 1): the corner row has length b_ℓ + 1
                let s: usize = mu
                    .corners()
                    .iter()
                    .enumerate()
                    .map(|(l, c)| mu.alpha_corner(l + 1).unwrap() * (c.col + 1))
                    .sum();
                assert_eq!(s, n, "{mu}");
            }
        }
    }

    #[test]
    fn slides() {
        let nu = part("1");
        let t = Tableau::from_rows(&[vec![1]]).unwrap();
        // μ = (1,1), corner (1,0)
        let up = slide_up(&t, Cell::new(1, 0), 0, 0).unwrap();
        assert_eq!(up.cell_of(1).unwrap(), Cell::new(1, 0));
        // u = a_ℓ leaves the filling alone
        assert_eq!(slide_up(&t, Cell::new(1, 0), 1, 0).unwrap(), t);
        let _ = nu;
        // ν = (2,1) inside μ = (2,1,1), corner (2,0)
        let t = Tableau::from_rows(&[vec![1, 2], vec![3]]).unwrap();
        let up = slide_up(&t, Cell::new(2, 0), 0, 0).unwrap();
        let expect = Tableau::new([(Cell::new(0, 1), 2), (Cell::new(1, 0), 1), (Cell::new(2, 0), 3)]).unwrap();
        assert_eq!(up, expect);
        assert_eq!(slide_down(&up, 0, 0), t);
        assert!(matches!(slide_up(&t, Cell::new(2, 0), 3, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(slide_up(&t, Cell::new(2, 0), 0, 1), Err(Error::WrongColumn { .. })));
    }

    #[test]
    fn dominance() {
        let (a, b, c) = (part("1,1,1"), part("2,1"), part("3"));
        assert!(dominance_leq(&a, &b).unwrap());
        assert!(dominance_leq(&b, &c).unwrap());
        assert!(!dominance_leq(&c, &a).unwrap());
        assert_eq!(dominance_meet(&b, &b).unwrap(), b);
        assert_eq!(dominance_meet(&part("3,1,1,1"), &part("2,2,2")).unwrap(), part("2,2,1,1"));
        assert!(matches!(dominance_leq(&a, &part("2")), Err(Error::UnequalWeights(3, 2))));
    }

    #[test]
    fn meet_and_join_are_bounds_exhaustively() {
        for n in 1..=7 {
            let all = Partition::all(n);
            for mu in &all {
                for la in &all {
                    let m = dominance_meet(mu, la).unwrap();
                    let j = dominance_join(mu, la).unwrap();
                    assert!(dominance_leq(&m, mu).unwrap() && dominance_leq(&m, la).unwrap());
                    assert!(dominance_leq(mu, &j).unwrap() && dominance_leq(la, &j).unwrap());
                    for nu in &all {
                        if dominance_leq(nu, mu).unwrap() && dominance_leq(nu, la).unwrap() {
                            assert!(dominance_leq(nu, &m).unwrap());
                        }
                        if dominance_leq(mu, nu).unwrap() && dominance_leq(la, nu).unwrap() {
                            assert!(dominance_leq(&j, nu).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tableau_json() {
        let t = Tableau::from_rows(&[vec![1, 3], vec![2]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[[0,0],[0,1],[1,0]],"entries":[[0,0,1],[0,1,3],[1,0,2]]}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn text_forms() {
        assert_eq!(part("4,2,1").to_string(), "4,2,1");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert_eq!("0,1".parse::<Cell>().unwrap(), Cell::new(0, 1));
        assert!("01".parse::<Cell>().is_err());
    }
}
