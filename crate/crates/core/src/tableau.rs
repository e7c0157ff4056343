//! Skew tableaux over `[±n]`, stored column by column.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::column::{Admissibility, Column};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::shape::{Partition, SkewShape};

/// Weights live in `Z^n`.
pub type Weight = Vec<i32>;

/// A filling of a skew shape. Column `j` occupies rows
/// `tops[j] .. tops[j] + columns[j].len()`; rows are counted from the top of
/// the outer shape.
///
/// The constructor only checks that the letters are in range, that each
/// column is strictly increasing and that the cells form a skew shape. KN
/// validity is a separate question answered by [`SkewTableau::validate_kn`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewTableau {
    n: usize,
    columns: Vec<Column>,
    tops: Vec<usize>,
}

/// Why a tableau fails to be a KN tableau. Coordinates are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnViolation {
    ColumnBreaks1cc { column: usize, breaks_at: u32 },
    /// The split form decreases between `rC_column` and `ℓC_{column+1}`.
    RowDecreases { row: usize, column: usize },
}

impl fmt::Display for KnViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnViolation::ColumnBreaks1cc { column, breaks_at } => {
                write!(f, "column {} breaks 1CC at {}", column, breaks_at)
            }
            KnViolation::RowDecreases { row, column } => write!(
                f,
                "split form row {} decreases between columns {} and {}",
                row,
                column,
                column + 1
            ),
        }
    }
}

impl SkewTableau {
    /// Builds a tableau from columns and their top rows. Fully inner rows are
    /// kept as given; they matter for reverse slides.
    pub fn new(n: usize, columns: Vec<Column>, tops: Vec<usize>) -> Result<SkewTableau> {
        if columns.len() != tops.len() {
            return Err(Error::InvalidTableau("one top offset per column is required".into()));
        }
        for c in &columns {
            for l in c.iter() {
                if l.index() as usize > n {
                    return Err(Error::LetterOutOfRange { letter: l.value(), n });
                }
            }
        }
        for j in 1..columns.len() {
            if tops[j] > tops[j - 1] {
                return Err(Error::InvalidShape(format!(
                    "column {} starts below column {}",
                    j + 1,
                    j
                )));
            }
            if tops[j] + columns[j].len() > tops[j - 1] + columns[j - 1].len() {
                return Err(Error::InvalidShape(format!(
                    "column {} ends below column {}",
                    j + 1,
                    j
                )));
            }
        }
        Ok(SkewTableau { n, columns, tops })
    }

    /// A straight tableau: every column starts at row 0.
    pub fn straight(n: usize, columns: Vec<Column>) -> Result<SkewTableau> {
        let tops = vec![0; columns.len()];
        SkewTableau::new(n, columns, tops)
    }

    /// Places a column sequence with maximum overlap between neighbours: for
    /// each adjacent pair the right column is put as low as the skew shape and
    /// the weak increase of the split rows allow.
    pub fn from_column_sequence(n: usize, columns: Vec<Column>) -> Result<SkewTableau> {
        let mut rel: Vec<i64> = vec![0; columns.len()];
        for j in 1..columns.len() {
            let d = max_overlap_offset(&columns[j - 1], &columns[j])?;
            rel[j] = rel[j - 1] + d;
        }
        let min = rel.iter().copied().min().unwrap_or(0);
        let tops = rel.into_iter().map(|t| (t - min) as usize).collect();
        SkewTableau::new(n, columns, tops)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &Column {
        &self.columns[j]
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Column::len).collect()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.columns.iter().map(Column::len).sum()
    }

    pub fn bottom(&self, j: usize) -> usize {
        self.tops[j] + self.columns[j].len()
    }

    pub fn num_rows(&self) -> usize {
        (0..self.columns.len()).map(|j| self.bottom(j)).max().unwrap_or(0)
    }

    pub fn is_straight(&self) -> bool {
        self.tops.iter().all(|&t| t == 0)
    }

    /// Entry at (row, column), 0-based; `None` for inner or missing cells.
    pub fn entry(&self, row: usize, col: usize) -> Option<Letter> {
        let top = *self.tops.get(col)?;
        if row < top {
            return None;
        }
        self.columns[col].get(row - top)
    }

    pub fn shape(&self) -> SkewShape {
        let rows = self.num_rows();
        let outer: Vec<usize> = (0..rows)
            .map(|r| (0..self.columns.len()).filter(|&j| self.bottom(j) > r).count())
            .collect();
        let inner: Vec<usize> = (0..rows)
            .map(|r| (0..self.columns.len()).filter(|&j| self.tops[j] > r).count())
            .collect();
        SkewShape {
            outer: Partition::new(outer).expect("bottoms are non-increasing"),
            inner: Partition::new(inner).expect("tops are non-increasing"),
        }
    }

    /// The same tableau with trailing empty columns removed.
    pub fn trimmed(&self) -> SkewTableau {
        let mut k = self.columns.len();
        while k > 0 && self.columns[k - 1].is_empty() {
            k -= 1;
        }
        SkewTableau::new(self.n, self.columns[..k].to_vec(), self.tops[..k].to_vec())
            .expect("a prefix of a skew tableau is a skew tableau")
    }

    /// The same filling over a larger (or equal) alphabet.
    pub fn with_n(&self, n: usize) -> Result<SkewTableau> {
        SkewTableau::new(n, self.columns.clone(), self.tops.clone())
    }

    /// Row contents left to right, `None` for inner cells.
    pub fn rows(&self) -> Vec<Vec<Option<Letter>>> {
        (0..self.num_rows())
            .map(|r| {
                (0..self.columns.len())
                    .take_while(|&j| self.bottom(j) > r)
                    .map(|j| self.entry(r, j))
                    .collect()
            })
            .collect()
    }

    /// Builds a tableau from rows (top to bottom), `None` marking inner cells.
    pub fn from_rows(n: usize, rows: &[Vec<Option<Letter>>]) -> Result<SkewTableau> {
        for (r, row) in rows.iter().enumerate() {
            if let Some(pos) = row.iter().position(|c| c.is_some()) {
                if let Some(bad) = row[pos..].iter().position(|c| c.is_none()) {
                    return Err(Error::Parse {
                        row: r + 1,
                        col: pos + bad + 1,
                        msg: "inner cell to the right of a filled cell".into(),
                    });
                }
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(Error::Parse {
                    row: r + 1,
                    col: rows[r - 1].len() + 1,
                    msg: "row is longer than the row above".into(),
                });
            }
            for (c, cell) in row.iter().enumerate() {
                if let Some(l) = cell {
                    if l.index() as usize > n {
                        return Err(Error::Parse {
                            row: r + 1,
                            col: c + 1,
                            msg: format!("letter {} is outside [±{}]", l, n),
                        });
                    }
                }
            }
        }
        let width = rows.first().map(Vec::len).unwrap_or(0);
        let mut columns = Vec::with_capacity(width);
        let mut tops = Vec::with_capacity(width);
        for c in 0..width {
            let cells: Vec<Option<Letter>> = rows
                .iter()
                .take_while(|row| row.len() > c)
                .map(|row| row[c])
                .collect();
            let top = cells.iter().take_while(|x| x.is_none()).count();
            if let Some(bad) = cells[top..].iter().position(|x| x.is_none()) {
                return Err(Error::Parse {
                    row: top + bad + 1,
                    col: c + 1,
                    msg: "inner cell below a filled cell".into(),
                });
            }
            let entries: Vec<Letter> = cells[top..].iter().map(|x| x.unwrap()).collect();
            for (k, w) in entries.windows(2).enumerate() {
                if w[0] >= w[1] {
                    return Err(Error::Parse {
                        row: top + k + 2,
                        col: c + 1,
                        msg: "column is not strictly increasing".into(),
                    });
                }
            }
            columns.push(Column::new(entries)?);
            tops.push(top);
        }
        SkewTableau::new(n, columns, tops)
    }

    /// Letters of the column reading word: columns right to left, each top to
    /// bottom.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.columns.iter().rev().flat_map(|c| c.iter()).collect()
    }

    /// Positions `(column, index in column)` in reading-word order.
    pub fn reading_positions(&self) -> Vec<(usize, usize)> {
        (0..self.columns.len())
            .rev()
            .flat_map(|j| (0..self.columns[j].len()).map(move |k| (j, k)))
            .collect()
    }

    /// Replaces a single entry, keeping the shape.
    pub fn replace(&self, col: usize, idx: usize, l: Letter) -> Result<SkewTableau> {
        let mut entries = self.columns[col].entries().to_vec();
        entries[idx] = l;
        let mut columns = self.columns.clone();
        columns[col] = Column::new(entries)?;
        SkewTableau::new(self.n, columns, self.tops.clone())
    }

    pub fn weight(&self) -> Weight {
        let mut w = vec![0i32; self.n];
        for c in &self.columns {
            for l in c.iter() {
                let i = l.index() as usize - 1;
                w[i] += if l.is_barred() { -1 } else { 1 };
            }
        }
        w
    }

    /// Replaces each column `C` by `ℓC rC`.
    pub fn split_form(&self) -> Result<SkewTableau> {
        let mut columns = Vec::with_capacity(2 * self.columns.len());
        let mut tops = Vec::with_capacity(2 * self.columns.len());
        for (c, &t) in self.columns.iter().zip(&self.tops) {
            let s = c.split()?;
            columns.push(s.left);
            columns.push(s.right);
            tops.push(t);
            tops.push(t);
        }
        SkewTableau::new(self.n, columns, tops)
    }

    /// Checks the KN conditions: admissible columns and a split form with
    /// weakly increasing rows.
    pub fn validate_kn(&self) -> std::result::Result<(), KnViolation> {
        let mut splits = Vec::with_capacity(self.columns.len());
        for (j, c) in self.columns.iter().enumerate() {
            if let Admissibility::BreaksAt(z) = c.admissibility() {
                return Err(KnViolation::ColumnBreaks1cc { column: j + 1, breaks_at: z });
            }
            splits.push(c.split().expect("admissible columns split"));
        }
        for j in 1..self.columns.len() {
            let lo = self.tops[j - 1].max(self.tops[j]);
            let hi = self.bottom(j - 1).min(self.bottom(j));
            for r in lo..hi {
                let a = splits[j - 1].right.get(r - self.tops[j - 1]).unwrap();
                let b = splits[j].left.get(r - self.tops[j]).unwrap();
                if a > b {
                    return Err(KnViolation::RowDecreases { row: r + 1, column: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_kn(&self) -> bool {
        self.validate_kn().is_ok()
    }

    /// Cellwise comparison of two tableaux of the same shape.
    pub fn le_entrywise(&self, other: &SkewTableau) -> bool {
        self.tops == other.tops
            && self.column_lengths() == other.column_lengths()
            && self
                .columns
                .iter()
                .zip(&other.columns)
                .all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| x <= y))
    }

    /// Nested column sets and no letter together with its bar.
    pub fn is_key_tableau(&self) -> bool {
        if !self.is_straight() || !self.is_kn() {
            return false;
        }
        for w in self.columns.windows(2) {
            if !w[1].iter().all(|l| w[0].contains(l)) {
                return false;
            }
        }
        let mut seen = vec![0u8; self.n + 1];
        for c in &self.columns {
            for l in c.iter() {
                seen[l.index() as usize] |= if l.is_barred() { 2 } else { 1 };
            }
        }
        seen.iter().all(|&s| s != 3)
    }

    /// Shape partition of a straight tableau (row lengths).
    pub fn straight_shape(&self) -> Partition {
        self.shape().outer
    }

    /// Serialises as `{"n": .., "rows": [[int|null, ..], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<Option<i32>>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.map(Letter::value)).collect())
            .collect();
        serde_json::json!({ "n": self.n, "rows": rows })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<SkewTableau> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            rows: Vec<Vec<Option<i32>>>,
        }
        let raw: Raw =
            serde_json::from_value(value.clone()).map_err(|e| Error::Syntax(e.to_string()))?;
        let mut rows = Vec::with_capacity(raw.rows.len());
        for (r, row) in raw.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (c, cell) in row.iter().enumerate() {
                out.push(match cell {
                    None => None,
                    Some(v) => Some(Letter::new(*v).map_err(|e| Error::Parse {
                        row: r + 1,
                        col: c + 1,
                        msg: e.to_string(),
                    })?),
                });
            }
            rows.push(out);
        }
        SkewTableau::from_rows(raw.n, &rows)
    }

    /// Parses the text literal `1,3,-1;3,-3;-3` (`.` for inner cells).
    pub fn parse(n: usize, literal: &str) -> Result<SkewTableau> {
        let literal = literal.trim();
        if literal.is_empty() {
            return SkewTableau::straight(n, Vec::new());
        }
        let mut rows = Vec::new();
        for (r, row) in literal.split(';').enumerate() {
            let mut out = Vec::new();
            for (c, tok) in row.split(',').enumerate() {
                let tok = tok.trim();
                if tok == "." {
                    out.push(None);
                    continue;
                }
                let v: i32 = tok.parse().map_err(|_| Error::Parse {
                    row: r + 1,
                    col: c + 1,
                    msg: format!("expected a letter or '.', found {:?}", tok),
                })?;
                let l = Letter::new(v).map_err(|e| Error::Parse {
                    row: r + 1,
                    col: c + 1,
                    msg: e.to_string(),
                })?;
                out.push(Some(l));
            }
            rows.push(out);
        }
        SkewTableau::from_rows(n, &rows)
    }

    /// Multi-line grid for humans, one row per line.
    pub fn to_grid(&self) -> String {
        let width = self
            .columns
            .iter()
            .flat_map(|c| c.iter())
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        self.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Some(l) => format!("{:>w$}", l.to_string(), w = width),
                        None => format!("{:>w$}", ".", w = width),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The key tableau `K(v)`: column `j` holds `i` (or `ī` when `v_i < 0`) for
/// every `i` with `|v_i| >= j`.
pub fn key_of_weight(v: &[i32], shape: &Partition) -> Result<SkewTableau> {
    let n = v.len();
    let mut abs: Vec<usize> = v.iter().map(|x| x.unsigned_abs() as usize).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    if shape.length() > n || abs != shape.padded(n) {
        return Err(Error::WeightNotInOrbit(v.to_vec()));
    }
    let columns = (1..=shape.part(0))
        .map(|j| {
            let letters = (0..n)
                .filter(|&i| v[i].unsigned_abs() as usize >= j)
                .map(|i| {
                    if v[i] > 0 {
                        Letter::unbarred(i as u32 + 1)
                    } else {
                        Letter::barred(i as u32 + 1)
                    }
                })
                .collect();
            Column::from_unsorted(letters)
        })
        .collect::<Result<Vec<_>>>()?;
    let key = SkewTableau::straight(n, columns)?;
    debug_assert!(key.is_key_tableau());
    debug_assert_eq!(key.weight(), v);
    Ok(key)
}

/// Offset `t_right - t_left` giving the largest overlap between two adjacent
/// columns that keeps a skew shape and weakly increasing split rows.
pub fn max_overlap_offset(left: &Column, right: &Column) -> Result<i64> {
    let a = left.len() as i64;
    let b = right.len() as i64;
    let r = left.right()?;
    let l = right.left()?;
    let mut d = 0.min(a - b);
    loop {
        // left rows 0..a, right rows d..d+b in the left column's frame
        let lo = d.max(0);
        let hi = a.min(d + b);
        let ok = (lo..hi).all(|row| r.get(row as usize).unwrap() <= l.get((row - d) as usize).unwrap());
        if ok {
            return Ok(d);
        }
        d -= 1;
    }
}

/// The literal form, rows separated by `;`.
impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.map(|l| l.to_string()).unwrap_or_else(|| ".".into()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewTableau(n={}, ", self.n)?;
        for (j, c) in self.columns.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}@{}", c, self.tops[j])?;
        }
        write!(f, ")")
    }
}
