//! Symplectic jeu de taquin.
//!
//! A slide moves a puncture (an empty cell) through a skew tableau. Each
//! elementary step looks at the split form around the puncture and either
//! moves it vertically or exchanges it with a neighbour in the adjacent
//! column. Horizontal moves go through `Φ` on one side, which is why a
//! column may change more than one letter at a time, and an unbarred move
//! to the left can break the one column condition, in which case a pair
//! `i, ī` is erased together with two cells.

use std::fmt;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::tableau::SkewTableau;

/// One elementary step, as printed by traces. Rows and columns are 1-based
/// and refer to the frame of the tableau the slide started from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// The puncture moved to `(row, col)` inside its column.
    Vertical { row: i64, col: usize },
    /// A barred letter crossed between the columns.
    HorizontalBarred { letter: Letter },
    /// An unbarred letter crossed; `lost` holds every `i` erased by a 1CC break.
    HorizontalUnbarred { letter: Letter, lost: Vec<u32> },
    /// The puncture left the shape at `(row, col)`.
    Terminal { row: i64, col: usize },
}

impl Step {
    pub fn cells_lost(&self) -> usize {
        match self {
            Step::HorizontalUnbarred { lost, .. } => 2 * lost.len(),
            _ => 0,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Vertical { row, col } => write!(f, "V {} {}", row, col),
            Step::HorizontalBarred { letter } => write!(f, "HB {}", letter),
            Step::HorizontalUnbarred { letter, lost } => {
                write!(f, "HU {}", letter)?;
                for i in lost {
                    write!(f, " lost {}", i)?;
                }
                Ok(())
            }
            Step::Terminal { row, col } => write!(f, "T {} {}", row, col),
        }
    }
}

#[derive(Clone, Debug)]
struct Slot {
    top: i64,
    entries: Vec<Letter>,
    hole: Option<i64>,
}

impl Slot {
    fn len(&self) -> i64 {
        self.entries.len() as i64 + self.hole.is_some() as i64
    }

    fn bottom(&self) -> i64 {
        self.top + self.len()
    }

    fn column(&self) -> Column {
        Column::new(self.entries.clone()).expect("slot entries stay increasing")
    }

    /// Index into `entries` of the letter sitting on `row`.
    fn index_of_row(&self, row: i64) -> Option<usize> {
        if row < self.top || row >= self.bottom() || self.hole == Some(row) {
            return None;
        }
        let mut k = row - self.top;
        if matches!(self.hole, Some(h) if h < row) {
            k -= 1;
        }
        Some(k as usize)
    }

    fn left_at(&self, row: i64) -> Result<Option<Letter>> {
        match self.index_of_row(row) {
            None => Ok(None),
            Some(k) => Ok(self.column().left()?.get(k)),
        }
    }

    fn right_at(&self, row: i64) -> Result<Option<Letter>> {
        match self.index_of_row(row) {
            None => Ok(None),
            Some(k) => Ok(self.column().right()?.get(k)),
        }
    }
}

/// A skew tableau with one punctured cell.
#[derive(Clone, Debug)]
pub struct Punctured {
    n: usize,
    slots: Vec<Slot>,
    hole_col: Option<usize>,
}

impl Punctured {
    fn from_tableau(t: &SkewTableau) -> Punctured {
        let slots = t
            .columns()
            .iter()
            .zip(t.tops())
            .map(|(c, &top)| Slot { top: top as i64, entries: c.entries().to_vec(), hole: None })
            .collect();
        Punctured { n: t.n(), slots, hole_col: None }
    }

    /// Punctures the inner corner at the bottom of the inner part of column `col`.
    pub fn at_inner_corner(t: &SkewTableau, col: usize) -> Result<Punctured> {
        if !inner_corners(t).contains(&col) {
            return Err(Error::InvalidTableau(format!("column {} has no inner corner", col + 1)));
        }
        let mut p = Punctured::from_tableau(t);
        let s = &mut p.slots[col];
        s.top -= 1;
        s.hole = Some(s.top);
        p.hole_col = Some(col);
        Ok(p)
    }

    /// Punctures the outer addable cell below column `col`; `col` may be one
    /// past the last column, which opens a new column.
    pub fn at_outer_corner(t: &SkewTableau, col: usize) -> Result<Punctured> {
        if !outer_corners(t).contains(&col) {
            return Err(Error::InvalidTableau(format!("no addable cell below column {}", col + 1)));
        }
        let mut p = Punctured::from_tableau(t);
        if col == p.slots.len() {
            p.slots.push(Slot { top: 0, entries: Vec::new(), hole: None });
        }
        let s = &mut p.slots[col];
        s.hole = Some(s.bottom());
        p.hole_col = Some(col);
        Ok(p)
    }

    pub fn is_finished(&self) -> bool {
        self.hole_col.is_none()
    }

    /// Puncture position `(row, column)`, 0-based.
    pub fn puncture(&self) -> Option<(i64, usize)> {
        let c = self.hole_col?;
        Some((self.slots[c].hole.unwrap(), c))
    }

    fn weight(&self) -> Vec<i32> {
        let mut w = vec![0; self.n];
        for s in &self.slots {
            for l in &s.entries {
                w[l.index() as usize - 1] += if l.is_barred() { -1 } else { 1 };
            }
        }
        w
    }

    /// One forward elementary step. The puncture moves down or right.
    pub fn forward_step(&mut self) -> Result<Step> {
        let j = self.hole_col.ok_or_else(|| Error::InvalidTableau("no puncture".into()))?;
        let p = self.slots[j].hole.unwrap();
        let before = if cfg!(debug_assertions) { Some(self.weight()) } else { None };
        let alpha = self.slots[j].right_at(p + 1)?;
        let beta = match self.slots.get(j + 1) {
            Some(s) => s.left_at(p)?,
            None => None,
        };
        let step = match (alpha, beta) {
            (None, None) => {
                self.slots[j].hole = None;
                self.hole_col = None;
                Step::Terminal { row: p + 1, col: j + 1 }
            }
            (Some(a), b) if b.map_or(true, |b| a <= b) => {
                debug_assert!(b.map_or(true, |b| a <= b));
                self.slots[j].hole = Some(p + 1);
                Step::Vertical { row: p + 2, col: j + 1 }
            }
            (_, None) => unreachable!("a present α with absent β is vertical"),
            (_, Some(b)) if b.is_barred() => {
                let right = self.slots[j + 1].column();
                let right = right.without(b).ok_or_else(|| {
                    Error::InvalidTableau("barred letter of ℓC missing from C".into())
                })?;
                let left = self.slots[j].column().phi()?.with(b)?;
                if !left.is_coadmissible(self.n) {
                    return Err(Error::InvalidTableau("slide produced a non-coadmissible column".into()));
                }
                let left = left.phi_inverse(self.n)?;
                self.slots[j].entries = left.entries().to_vec();
                self.slots[j].hole = None;
                self.slots[j + 1].entries = right.entries().to_vec();
                self.slots[j + 1].hole = Some(p);
                self.hole_col = Some(j + 1);
                Step::HorizontalBarred { letter: b }
            }
            (_, Some(b)) => {
                let right = self.slots[j + 1].column().phi()?.without(b).ok_or_else(|| {
                    Error::InvalidTableau("unbarred letter of ℓC missing from Φ(C)".into())
                })?;
                let right = right.phi_inverse(self.n)?;
                let mut left = self.slots[j].column().with(b)?;
                let mut lost = Vec::new();
                self.slots[j].hole = None;
                while let crate::column::Admissibility::BreaksAt(i) = left.admissibility() {
                    left = left
                        .without(Letter::unbarred(i))
                        .and_then(|c| c.without(Letter::barred(i)))
                        .expect("a 1CC break involves a symmetric pair");
                    self.slots[j].top += 1;
                    lost.push(i);
                }
                self.slots[j].entries = left.entries().to_vec();
                self.slots[j + 1].entries = right.entries().to_vec();
                self.slots[j + 1].hole = Some(p);
                self.hole_col = Some(j + 1);
                Step::HorizontalUnbarred { letter: b, lost }
            }
        };
        if let Some(w) = before {
            debug_assert_eq!(w, self.weight(), "slides preserve the weight");
        }
        Ok(step)
    }

    /// One reverse elementary step. The puncture moves up or left.
    pub fn reverse_step(&mut self) -> Result<Step> {
        let j = self.hole_col.ok_or_else(|| Error::InvalidTableau("no puncture".into()))?;
        let p = self.slots[j].hole.unwrap();
        let before = if cfg!(debug_assertions) { Some(self.weight()) } else { None };
        let alpha = self.slots[j].left_at(p - 1)?;
        let beta = if j > 0 { self.slots[j - 1].right_at(p)? } else { None };
        let step = match (alpha, beta) {
            (None, None) => {
                self.slots[j].hole = None;
                self.slots[j].top += 1;
                self.hole_col = None;
                Step::Terminal { row: p + 1, col: j + 1 }
            }
            (Some(a), b) if b.map_or(true, |b| b <= a) => {
                self.slots[j].hole = Some(p - 1);
                Step::Vertical { row: p, col: j + 1 }
            }
            (_, None) => unreachable!("a present α with absent β is vertical"),
            (_, Some(b)) if b.is_barred() => {
                let left = self.slots[j - 1].column().phi()?.without(b).ok_or_else(|| {
                    Error::InvalidTableau("barred letter of rC missing from Φ(C)".into())
                })?;
                let left = left.phi_inverse(self.n)?;
                let right = self.slots[j].column().with(b)?;
                if !right.is_admissible() {
                    return Err(Error::NonMinimalInput);
                }
                self.slots[j].entries = right.entries().to_vec();
                self.slots[j].hole = None;
                self.slots[j - 1].entries = left.entries().to_vec();
                self.slots[j - 1].hole = Some(p);
                self.hole_col = Some(j - 1);
                Step::HorizontalBarred { letter: b }
            }
            (_, Some(b)) => {
                let left = self.slots[j - 1].column().without(b).ok_or_else(|| {
                    Error::InvalidTableau("unbarred letter of rC missing from C".into())
                })?;
                let right = self.slots[j].column().phi()?.with(b)?;
                if !right.is_coadmissible(self.n) {
                    return Err(Error::NonMinimalInput);
                }
                let right = right.phi_inverse(self.n)?;
                self.slots[j].entries = right.entries().to_vec();
                self.slots[j].hole = None;
                self.slots[j - 1].entries = left.entries().to_vec();
                self.slots[j - 1].hole = Some(p);
                self.hole_col = Some(j - 1);
                Step::HorizontalUnbarred { letter: b, lost: Vec::new() }
            }
        };
        if let Some(w) = before {
            debug_assert_eq!(w, self.weight(), "slides preserve the weight");
        }
        Ok(step)
    }

    /// The tableau once the puncture has left the shape.
    pub fn into_tableau(self) -> Result<SkewTableau> {
        if self.hole_col.is_some() {
            return Err(Error::InvalidTableau("slide has not finished".into()));
        }
        let min = self.slots.iter().map(|s| s.top).min().unwrap_or(0).min(0);
        let mut columns = Vec::with_capacity(self.slots.len());
        let mut tops = Vec::with_capacity(self.slots.len());
        for s in self.slots {
            columns.push(Column::new(s.entries)?);
            tops.push((s.top - min) as usize);
        }
        SkewTableau::new(self.n, columns, tops)
    }
}

/// Columns whose inner part ends in a corner of the inner shape.
pub fn inner_corners(t: &SkewTableau) -> Vec<usize> {
    let tops = t.tops();
    (0..tops.len())
        .filter(|&c| tops[c] > tops.get(c + 1).copied().unwrap_or(0))
        .collect()
}

/// Columns (possibly one past the end) with an addable cell right below them.
pub fn outer_corners(t: &SkewTableau) -> Vec<usize> {
    let k = t.num_columns();
    (0..=k)
        .filter(|&c| {
            let below = if c < k { t.bottom(c) } else { 0 };
            c == 0 || t.bottom(c - 1) > below
        })
        .collect()
}

/// Runs a full forward slide from the inner corner of column `col`.
pub fn forward_slide(t: &SkewTableau, col: usize) -> Result<(SkewTableau, Vec<Step>)> {
    let mut p = Punctured::at_inner_corner(t, col)?;
    let mut steps = Vec::new();
    while !p.is_finished() {
        steps.push(p.forward_step()?);
    }
    Ok((p.into_tableau()?, steps))
}

/// Runs a full reverse slide from the addable cell below column `col`.
pub fn reverse_slide(t: &SkewTableau, col: usize) -> Result<(SkewTableau, Vec<Step>)> {
    let mut p = Punctured::at_outer_corner(t, col)?;
    let mut steps = Vec::new();
    while !p.is_finished() {
        steps.push(p.reverse_step()?);
    }
    Ok((p.into_tableau()?, steps))
}

/// Rectifies, always sliding into the top-right inner corner.
pub fn rectify(t: &SkewTableau) -> Result<SkewTableau> {
    Ok(rectify_traced(t)?.0)
}

/// Like [`rectify`], also returning every elementary step.
pub fn rectify_traced(t: &SkewTableau) -> Result<(SkewTableau, Vec<Step>)> {
    rectify_by(t, |corners| corners.len() - 1)
}

/// Rectifies, letting `choose` pick which inner corner (by position in the
/// list of corner columns, left to right) to slide into next.
pub fn rectify_by<F>(t: &SkewTableau, mut choose: F) -> Result<(SkewTableau, Vec<Step>)>
where
    F: FnMut(&[usize]) -> usize,
{
    let mut cur = t.trimmed();
    if let Err(v) = cur.validate_kn() {
        return Err(Error::InvalidTableau(v.to_string()));
    }
    let mut steps = Vec::new();
    loop {
        let corners = inner_corners(&cur);
        if corners.is_empty() {
            break;
        }
        let pick = choose(&corners);
        let (next, s) = forward_slide(&cur, corners[pick])?;
        steps.extend(s);
        cur = next.trimmed();
    }
    Ok((cur, steps))
}

/// Rearranges the contents of two adjacent columns so that the left one has
/// `left_len` cells, staying in the same jeu de taquin class. Returns `None`
/// when that length is not reachable.
pub fn pair_with_lengths(
    n: usize,
    left: &Column,
    right: &Column,
    left_len: usize,
) -> Result<Option<(Column, Column)>> {
    let total = left.len() + right.len();
    if left_len > total {
        return Ok(None);
    }
    if left.len() == left_len {
        return Ok(Some((left.clone(), right.clone())));
    }
    let present: Vec<Column> = [left, right].into_iter().filter(|c| !c.is_empty()).cloned().collect();
    let placed = SkewTableau::from_column_sequence(n, present)?;
    let rect = rectify(&placed)?;
    if rect.size() != total {
        return Err(Error::NonMinimalInput);
    }
    let lens = rect.column_lengths();
    let (p, q) = (lens.first().copied().unwrap_or(0), lens.get(1).copied().unwrap_or(0));
    if left_len > p || left_len < q {
        return Ok(None);
    }
    let mut cur = rect;
    let mut guard = 0;
    while cur.column(0).len() > left_len {
        guard += 1;
        if guard > 4 * total + 4 {
            return Err(Error::InvalidTableau("column lengths did not converge".into()));
        }
        let (next, _) = reverse_slide(&cur, 1)?;
        if next.size() != total {
            return Err(Error::NonMinimalInput);
        }
        cur = next;
    }
    let right = if cur.num_columns() > 1 { cur.column(1).clone() } else { Column::empty() };
    Ok(Some((cur.column(0).clone(), right)))
}

/// Exchanges the lengths of two adjacent columns.
pub fn swap_adjacent_column_lengths(n: usize, c1: &Column, c2: &Column) -> Result<(Column, Column)> {
    pair_with_lengths(n, c1, c2, c2.len())?
        .ok_or_else(|| Error::InvalidTableau("column lengths cannot be swapped".into()))
}

/// The tableau in the class of `t` whose column lengths are `target`, found
/// by adjacent swaps.
pub fn reshape(t: &SkewTableau, target: &[usize]) -> Result<SkewTableau> {
    Ok(reshape_traced(t, target)?.0)
}

/// Like [`reshape`], also returning each swapped pair of column indices
/// (0-based, left index) and the column sequence after the swap.
pub fn reshape_traced(
    t: &SkewTableau,
    target: &[usize],
) -> Result<(SkewTableau, Vec<(usize, Vec<Column>)>)> {
    let mut cols = t.columns().to_vec();
    let mut have: Vec<usize> = t.column_lengths();
    let mut want = target.to_vec();
    have.sort_unstable();
    want.sort_unstable();
    if have != want {
        return Err(Error::NotAPermutation);
    }
    if let Err(v) = t.validate_kn() {
        return Err(Error::InvalidTableau(v.to_string()));
    }
    let mut log = Vec::new();
    for i in 0..target.len() {
        let j = (i..cols.len()).find(|&j| cols[j].len() == target[i]).unwrap();
        for k in (i..j).rev() {
            if cols[k].len() == cols[k + 1].len() {
                cols.swap(k, k + 1);
                continue;
            }
            let (a, b) = swap_adjacent_column_lengths(t.n(), &cols[k], &cols[k + 1])?;
            cols[k] = a;
            cols[k + 1] = b;
            log.push((k, cols.clone()));
        }
    }
    Ok((SkewTableau::from_column_sequence(t.n(), cols)?, log))
}
