//! Right and left keys of KN tableaux.
//!
//! Two independent routes are provided. The jeu de taquin route swaps
//! adjacent column lengths until the first (or last) column has been carried
//! across the tableau. The direct route works on the split form only: it
//! matches each `rC_j` against the next `ℓC_{j+1}` and either creates entries
//! (right key) or deletes them (left key).

use std::collections::BTreeSet;
use std::fmt;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::sjdt::swap_adjacent_column_lengths;
use crate::tableau::{SkewTableau, Weight};

/// Greedy matching between a right column `rC` and the left column `ℓC` of
/// its right neighbour. Indices are positions in the columns.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    /// `(index in rC, index in ℓC)`.
    pub pairs: Vec<(usize, usize)>,
    pub unmatched_left: Vec<usize>,
    pub unmatched_right: Vec<usize>,
}

/// Processes `ℓC` from its largest entry down, pairing each with the largest
/// entry of `rC` not yet used that is `<=` to it.
pub fn match_split_columns(rc: &Column, lc: &Column) -> Matching {
    let mut used = vec![false; rc.len()];
    let mut pairs = Vec::new();
    let mut unmatched_right = Vec::new();
    for k in (0..lc.len()).rev() {
        let b = lc.get(k).unwrap();
        match (0..rc.len()).rev().find(|&a| !used[a] && rc.get(a).unwrap() <= b) {
            Some(a) => {
                used[a] = true;
                pairs.push((a, k));
            }
            None => unmatched_right.push(k),
        }
    }
    pairs.sort_unstable();
    unmatched_right.sort_unstable();
    let unmatched_left = (0..rc.len()).filter(|&a| !used[a]).collect();
    Matching { pairs, unmatched_left, unmatched_right }
}

fn require_kn(t: &SkewTableau) -> Result<()> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("keys are defined for straight tableaux".into()));
    }
    t.validate_kn().map_err(|v| Error::InvalidTableau(v.to_string()))?;
    if t.num_columns() == 0 {
        return Err(Error::InvalidTableau("empty tableau".into()));
    }
    Ok(())
}

fn key_from_columns(n: usize, columns: Vec<Column>) -> Result<SkewTableau> {
    let key = SkewTableau::straight(n, columns)?;
    debug_assert!(key.is_key_tableau(), "not a key: {}", key);
    Ok(key)
}

/// Every column sequence visited while carrying the first column to the right
/// by length swaps, starting with the tableau itself.
pub fn right_key_swaps(t: &SkewTableau) -> Result<Vec<Vec<Column>>> {
    require_kn(t)?;
    let mut cols = t.columns().to_vec();
    let mut seen = vec![cols.clone()];
    for i in 1..cols.len() {
        if cols[i - 1].len() != cols[i].len() {
            let (a, b) = swap_adjacent_column_lengths(t.n(), &cols[i - 1], &cols[i])?;
            cols[i - 1] = a;
            cols[i] = b;
            seen.push(cols.clone());
        } else {
            // equal heights: the pair is left alone and the right column
            // plays the role of the carried one
        }
    }
    Ok(seen)
}

/// Mirror image of [`right_key_swaps`]: the last column travels left.
pub fn left_key_swaps(t: &SkewTableau) -> Result<Vec<Vec<Column>>> {
    require_kn(t)?;
    let mut cols = t.columns().to_vec();
    let mut seen = vec![cols.clone()];
    for i in (1..cols.len()).rev() {
        if cols[i - 1].len() != cols[i].len() {
            let (a, b) = swap_adjacent_column_lengths(t.n(), &cols[i - 1], &cols[i])?;
            cols[i - 1] = a;
            cols[i] = b;
            seen.push(cols.clone());
        }
    }
    Ok(seen)
}

/// `K₊¹(T)` by jeu de taquin.
pub fn right_key_column_sjdt(t: &SkewTableau) -> Result<Column> {
    let last = right_key_swaps(t)?.pop().unwrap();
    last.last().unwrap().right()
}

/// `K₋¹(T)` by jeu de taquin.
pub fn left_key_column_sjdt(t: &SkewTableau) -> Result<Column> {
    let last = left_key_swaps(t)?.pop().unwrap();
    last[0].left()
}

fn suffix(t: &SkewTableau, j: usize) -> Result<SkewTableau> {
    SkewTableau::straight(t.n(), t.columns()[j..].to_vec())
}

fn prefix(t: &SkewTableau, j: usize) -> Result<SkewTableau> {
    SkewTableau::straight(t.n(), t.columns()[..=j].to_vec())
}

/// `K₊(T)`: column `j` is `K₊¹` of the suffix starting at column `j`.
pub fn right_key_sjdt(t: &SkewTableau) -> Result<SkewTableau> {
    require_kn(t)?;
    let cols = (0..t.num_columns())
        .map(|j| right_key_column_sjdt(&suffix(t, j)?))
        .collect::<Result<Vec<_>>>()?;
    key_from_columns(t.n(), cols)
}

/// `K₋(T)`: column `j` is `K₋¹` of the prefix ending at column `j`.
pub fn left_key_sjdt(t: &SkewTableau) -> Result<SkewTableau> {
    require_kn(t)?;
    let cols = (0..t.num_columns())
        .map(|j| left_key_column_sjdt(&prefix(t, j)?))
        .collect::<Result<Vec<_>>>()?;
    key_from_columns(t.n(), cols)
}

/// One column of the direct right key computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightStep {
    /// 1-based index of the column whose right half grows.
    pub column: usize,
    /// Entries of the running column left without a partner in `ℓC_column`.
    pub unmatched: Vec<Letter>,
    /// Entries written into the new cells of `rC_column`.
    pub added: Vec<Letter>,
    /// `rC_column` together with its new cells.
    pub result: Column,
}

impl fmt::Display for RightStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "column {}: unmatched [{}] added [{}] -> {}",
            self.column,
            join(&self.unmatched),
            join(&self.added),
            self.result
        )
    }
}

/// One column of the direct left key computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftStep {
    /// 1-based index of the column whose left half shrinks.
    pub column: usize,
    /// Unmatched entries of `rC_column`, in the order processed.
    pub unmatched: Vec<Letter>,
    /// Entries deleted from `ℓC_column`, paired with `unmatched`.
    pub deleted: Vec<Letter>,
    /// What is left of `ℓC_column`.
    pub result: Column,
}

impl fmt::Display for LeftStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "column {}: unmatched [{}] deleted [{}] -> {}",
            self.column,
            join(&self.unmatched),
            join(&self.deleted),
            self.result
        )
    }
}

fn join(v: &[Letter]) -> String {
    v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

/// `K₊¹(T)` read off the split form, with the per-column log.
pub fn right_key_column_direct_traced(t: &SkewTableau) -> Result<(Column, Vec<RightStep>)> {
    require_kn(t)?;
    let mut cur = t.column(0).right()?;
    let mut log = Vec::new();
    for j in 1..t.num_columns() {
        let split = t.column(j).split()?;
        let m = match_split_columns(&cur, &split.left);
        let unmatched: Vec<Letter> = m.unmatched_left.iter().map(|&a| cur.get(a).unwrap()).collect();
        let mut set: BTreeSet<Letter> = split.right.set();
        let mut added = Vec::with_capacity(unmatched.len());
        for &alpha in &unmatched {
            let x = (alpha.rank(t.n())..=2 * t.n())
                .map(|r| Letter::from_rank(r, t.n()))
                .find(|x| !set.contains(x) && !set.contains(&x.bar()))
                .ok_or_else(|| {
                    Error::InvalidTableau(format!("no free letter above {} in column {}", alpha, j + 1))
                })?;
            set.insert(x);
            added.push(x);
        }
        cur = Column::new(set.into_iter().collect())?;
        log.push(RightStep { column: j + 1, unmatched, added, result: cur.clone() });
    }
    Ok((cur, log))
}

/// `K₋¹(T)` read off the split form, with the per-column log.
pub fn left_key_column_direct_traced(t: &SkewTableau) -> Result<(Column, Vec<LeftStep>)> {
    require_kn(t)?;
    let k = t.num_columns();
    let mut cur = t.column(k - 1).left()?;
    let mut log = Vec::new();
    for j in (0..k - 1).rev() {
        let split = t.column(j).split()?;
        let (lc, rc) = (split.left, split.right);
        let m = match_split_columns(&rc, &cur);
        let mut left_alive = vec![true; lc.len()];
        let mut right_alive = vec![true; rc.len()];
        let mut unmatched = Vec::new();
        let mut deleted = Vec::new();
        // unmatched rows of rC, ascending (rows of a column are increasing)
        for &row in &m.unmatched_left {
            let beta = rc.get(row).unwrap();
            let mut victim = None;
            for r in (0..=row).rev() {
                if !left_alive[r] {
                    continue;
                }
                let ne = (0..r).rev().find(|&s| right_alive[s]).map(|s| rc.get(s).unwrap());
                if ne.map_or(true, |ne| lc.get(r).unwrap() > ne) {
                    victim = Some(r);
                    break;
                }
            }
            let victim = match victim {
                Some(r) => r,
                None => (0..lc.len()).find(|&r| left_alive[r]).ok_or_else(|| {
                    Error::InvalidTableau(format!("nothing left to delete in column {}", j + 1))
                })?,
            };
            left_alive[victim] = false;
            right_alive[row] = false;
            unmatched.push(beta);
            deleted.push(lc.get(victim).unwrap());
        }
        cur = Column::new(
            (0..lc.len()).filter(|&r| left_alive[r]).map(|r| lc.get(r).unwrap()).collect(),
        )?;
        log.push(LeftStep { column: j + 1, unmatched, deleted, result: cur.clone() });
    }
    Ok((cur, log))
}

pub fn right_key_column_direct(t: &SkewTableau) -> Result<Column> {
    Ok(right_key_column_direct_traced(t)?.0)
}

pub fn left_key_column_direct(t: &SkewTableau) -> Result<Column> {
    Ok(left_key_column_direct_traced(t)?.0)
}

/// `K₊(T)` by the direct way.
pub fn right_key_direct(t: &SkewTableau) -> Result<SkewTableau> {
    require_kn(t)?;
    let cols = (0..t.num_columns())
        .map(|j| right_key_column_direct(&suffix(t, j)?))
        .collect::<Result<Vec<_>>>()?;
    key_from_columns(t.n(), cols)
}

/// `K₋(T)` by the direct way.
pub fn left_key_direct(t: &SkewTableau) -> Result<SkewTableau> {
    require_kn(t)?;
    let cols = (0..t.num_columns())
        .map(|j| left_key_column_direct(&prefix(t, j)?))
        .collect::<Result<Vec<_>>>()?;
    key_from_columns(t.n(), cols)
}

/// `K₊(T)`, computed the direct way.
pub fn right_key(t: &SkewTableau) -> Result<SkewTableau> {
    right_key_direct(t)
}

/// `K₋(T)`, computed the direct way.
pub fn left_key(t: &SkewTableau) -> Result<SkewTableau> {
    left_key_direct(t)
}

/// Weight of the right key: the index of the Demazure atom holding `t`.
pub fn atom_of(t: &SkewTableau) -> Result<Weight> {
    Ok(right_key(t)?.weight())
}
