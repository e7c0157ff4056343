//! Columns: admissibility, splitting and the bijection `Φ` between admissible
//! and coadmissible columns.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::Letter;

/// A strictly increasing sequence of letters, read top to bottom.
///
/// Empty columns are allowed; they show up as placeholders in cocrystals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct Column(Vec<Letter>);

/// Outcome of the one column condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// The smallest `z` with `z, z̄` in the column and more than `z` letters
    /// of absolute value at most `z`.
    BreaksAt(u32),
}

/// The split of an admissible column together with the sets used to build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub left: Column,
    pub right: Column,
    /// Unbarred `z` with both `z` and `z̄` present, decreasing.
    pub i_set: Vec<u32>,
    /// The replacement letters `t`, decreasing, paired with `i_set`.
    pub j_set: Vec<u32>,
}

impl TryFrom<Vec<Letter>> for Column {
    type Error = Error;
    fn try_from(v: Vec<Letter>) -> Result<Column> {
        Column::new(v)
    }
}

impl From<Column> for Vec<Letter> {
    fn from(c: Column) -> Vec<Letter> {
        c.0
    }
}

impl Column {
    /// Wraps entries that must already be strictly increasing.
    pub fn new(entries: Vec<Letter>) -> Result<Column> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(Column(entries))
    }

    /// Sorts the letters; fails on repeated letters.
    pub fn from_unsorted(mut entries: Vec<Letter>) -> Result<Column> {
        entries.sort();
        Column::new(entries)
    }

    /// Convenience constructor from signed integers, e.g. `[2, 4, -2]`.
    pub fn from_values(values: &[i32]) -> Result<Column> {
        let letters = values
            .iter()
            .map(|&v| Letter::new(v))
            .collect::<Result<Vec<_>>>()?;
        Column::new(letters)
    }

    pub fn empty() -> Column {
        Column(Vec::new())
    }

    pub fn entries(&self) -> &[Letter] {
        &self.0
    }

    pub fn values(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.0.get(i).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.0.binary_search(&l).is_ok()
    }

    pub fn set(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    /// The column with `l` added. Fails if `l` is already there.
    pub fn with(&self, l: Letter) -> Result<Column> {
        match self.0.binary_search(&l) {
            Ok(_) => Err(Error::NotStrictlyIncreasing),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, l);
                Ok(Column(v))
            }
        }
    }

    /// The column with `l` removed, if present.
    pub fn without(&self, l: Letter) -> Option<Column> {
        let pos = self.0.binary_search(&l).ok()?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Column(v))
    }

    /// Largest absolute value appearing, 0 for the empty column.
    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Unbarred `z` such that both `z` and `z̄` occur, in decreasing order.
    pub fn symmetric_pairs(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .0
            .iter()
            .filter(|l| !l.is_barred() && self.contains(l.bar()))
            .map(|l| l.index())
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn has_symmetric_pair(&self) -> bool {
        self.0.iter().any(|l| !l.is_barred() && self.contains(l.bar()))
    }

    fn absent_with_bar(&self, k: u32) -> bool {
        !self.contains(Letter::unbarred(k)) && !self.contains(Letter::barred(k))
    }

    /// The one column condition.
    pub fn admissibility(&self) -> Admissibility {
        let mut pairs = self.symmetric_pairs();
        pairs.reverse();
        for z in pairs {
            let count = self.0.iter().filter(|l| l.index() <= z).count() as u32;
            if count > z {
                return Admissibility::BreaksAt(z);
            }
        }
        Admissibility::Admissible
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility() == Admissibility::Admissible
    }

    /// `N*(i) <= n - i + 1` for each symmetric pair `(i, ī)`.
    pub fn is_coadmissible(&self, n: usize) -> bool {
        self.symmetric_pairs().into_iter().all(|i| {
            let lo = Letter::unbarred(i);
            let hi = Letter::barred(i);
            let count = self.0.iter().filter(|&&x| lo <= x && x <= hi).count();
            count + i as usize <= n + 1
        })
    }

    /// Splits an admissible column into `(ℓC, rC)`.
    pub fn split(&self) -> Result<Split> {
        if let Admissibility::BreaksAt(z) = self.admissibility() {
            return Err(Error::NotAdmissible { breaks_at: z });
        }
        let i_set = self.symmetric_pairs();
        let mut j_set = Vec::with_capacity(i_set.len());
        let mut bound = u32::MAX;
        for &z in &i_set {
            let start = z.min(bound);
            let t = (1..start)
                .rev()
                .find(|&t| self.absent_with_bar(t))
                .ok_or(Error::SplitImpossible)?;
            j_set.push(t);
            bound = t;
        }
        let mut left = self.0.clone();
        let mut right = self.0.clone();
        for (&z, &t) in i_set.iter().zip(&j_set) {
            for l in left.iter_mut() {
                if *l == Letter::unbarred(z) {
                    *l = Letter::unbarred(t);
                }
            }
            for l in right.iter_mut() {
                if *l == Letter::barred(z) {
                    *l = Letter::barred(t);
                }
            }
        }
        left.sort();
        right.sort();
        Ok(Split {
            left: Column(left),
            right: Column(right),
            i_set,
            j_set,
        })
    }

    /// `ℓC`.
    pub fn left(&self) -> Result<Column> {
        Ok(self.split()?.left)
    }

    /// `rC`.
    pub fn right(&self) -> Result<Column> {
        Ok(self.split()?.right)
    }

    /// `Φ(C)`: unbarred part of `ℓC` followed by the barred part of `rC`.
    pub fn phi(&self) -> Result<Column> {
        if !self.has_symmetric_pair() {
            return Ok(self.clone());
        }
        let s = self.split()?;
        let mut v: Vec<Letter> = s.left.iter().filter(|l| !l.is_barred()).collect();
        v.extend(s.right.iter().filter(|l| l.is_barred()));
        Ok(Column(v))
    }

    /// `Φ⁻¹(D)` for a coadmissible column `D` over `[±n]`.
    pub fn phi_inverse(&self, n: usize) -> Result<Column> {
        if !self.has_symmetric_pair() {
            return Ok(self.clone());
        }
        if !self.is_coadmissible(n) {
            return Err(Error::NotCoadmissible);
        }
        let pairs = self.symmetric_pairs();
        let mut h_set = vec![0u32; pairs.len()];
        let mut floor = 0u32;
        for (k, &z) in pairs.iter().enumerate().rev() {
            let lower = z.max(floor);
            let h = (lower + 1..=n as u32)
                .find(|&h| self.absent_with_bar(h))
                .ok_or(Error::NotCoadmissible)?;
            h_set[k] = h;
            floor = h;
        }
        let mut set = self.set();
        for z in &pairs {
            set.remove(&Letter::unbarred(*z));
            set.remove(&Letter::barred(*z));
        }
        for h in h_set {
            set.insert(Letter::unbarred(h));
            set.insert(Letter::barred(h));
        }
        Ok(Column(set.into_iter().collect()))
    }
}

/// Comma separated values, top to bottom: `2,4,-2`.
impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", l)?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Column {
    type Err = Error;
    fn from_str(s: &str) -> Result<Column> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Column::empty());
        }
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Syntax(format!("bad letter {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Column::from_values(&values)
    }
}

/// Every admissible column of `[±n]` of the given height, in lexicographic order.
pub fn admissible_columns(n: usize, height: usize) -> Vec<Column> {
    subsets(n, height)
        .into_iter()
        .filter(Column::is_admissible)
        .collect()
}

/// Every coadmissible column of `[±n]` of the given height.
pub fn coadmissible_columns(n: usize, height: usize) -> Vec<Column> {
    subsets(n, height)
        .into_iter()
        .filter(|c| c.is_coadmissible(n))
        .collect()
}

fn subsets(n: usize, height: usize) -> Vec<Column> {
    let alphabet: Vec<Letter> = Letter::alphabet(n).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(height);
    fn go(
        alphabet: &[Letter],
        start: usize,
        height: usize,
        current: &mut Vec<Letter>,
        out: &mut Vec<Column>,
    ) {
        if current.len() == height {
            out.push(Column(current.clone()));
            return;
        }
        for i in start..alphabet.len() {
            current.push(alphabet[i]);
            go(alphabet, i + 1, height, current, out);
            current.pop();
        }
    }
    go(&alphabet, 0, height, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[i32]) -> Column {
        Column::from_values(v).unwrap()
    }

    #[test]
    fn one_column_condition() {
        assert_eq!(col(&[1, 2, -1]).admissibility(), Admissibility::BreaksAt(1));
        assert_eq!(col(&[2, 3, -3]).admissibility(), Admissibility::Admissible);
        assert_eq!(col(&[1, 2, 3]).admissibility(), Admissibility::Admissible);
    }

    #[test]
    fn split_examples() {
        let s = col(&[2, 4, -2]).split().unwrap();
        assert_eq!(s.left, col(&[1, 4, -2]));
        assert_eq!(s.right, col(&[2, 4, -1]));
        let s = col(&[2, 3, -3]).split().unwrap();
        assert_eq!(s.left, col(&[1, 2, -3]));
        assert_eq!(s.right, col(&[2, 3, -1]));
        assert_eq!(s.i_set, vec![3]);
        assert_eq!(s.j_set, vec![1]);
        let c = col(&[1, 3, -2]);
        let s = c.split().unwrap();
        assert_eq!((s.left, s.right), (c.clone(), c));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(col(&[2, 4, -2]).phi().unwrap(), col(&[1, 4, -1]));
        assert_eq!(col(&[2, 4, -2]).phi_inverse(4).unwrap(), col(&[3, 4, -3]));
        assert_eq!(col(&[1, 2]).phi().unwrap(), col(&[1, 2]));
        assert!(col(&[1, 4, -1]).is_coadmissible(4));
        assert!(!col(&[3, 4, -3]).is_coadmissible(3));
        assert!(col(&[2, 4, -2]).phi_inverse(3).is_err());
    }

    #[test]
    fn column_counts() {
        // admissible columns of height 2 over [±2]: 12, 1 2̄, 2 2̄, 2 1̄, 2̄ 1̄
        assert_eq!(admissible_columns(2, 2).len(), 5);
        assert_eq!(admissible_columns(2, 3).len(), 0);
    }
}
