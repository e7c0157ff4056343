//! The cocrystal of a KN tableau: a type `A_{r-1}` crystal on the skew
//! tableaux in its jeu de taquin class whose operators move one cell
//! between adjacent columns.
//!
//! Vertices are column sequences of a fixed width `r`, placed with maximum
//! overlap. Columns are counted from the right: `F_i` moves a cell from
//! column `i` to column `i+1`, `E_i` moves one back. The weight of a vertex
//! lists its column lengths from right to left.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::sjdt::pair_with_lengths;
use crate::tableau::SkewTableau;

fn check(n: usize, cols: &[Column], i: usize) -> Result<(usize, usize)> {
    let r = cols.len();
    if i == 0 || i >= r {
        return Err(Error::InvalidGenerator { index: i, n: r.saturating_sub(1) });
    }
    let _ = n;
    Ok((r - i - 1, r - i))
}

/// `F_i` on a column sequence; `None` at the end of the string.
pub fn cocrystal_lower_columns(n: usize, cols: &[Column], i: usize) -> Result<Option<Vec<Column>>> {
    let (l, r) = check(n, cols, i)?;
    if cols[r].is_empty() {
        return Ok(None);
    }
    let target = cols[l].len() + 1;
    Ok(pair_with_lengths(n, &cols[l], &cols[r], target)?.map(|(a, b)| {
        let mut out = cols.to_vec();
        out[l] = a;
        out[r] = b;
        out
    }))
}

/// `E_i` on a column sequence; `None` at the top of the string.
pub fn cocrystal_raise_columns(n: usize, cols: &[Column], i: usize) -> Result<Option<Vec<Column>>> {
    let (l, r) = check(n, cols, i)?;
    if cols[l].is_empty() {
        return Ok(None);
    }
    let target = cols[l].len() - 1;
    Ok(pair_with_lengths(n, &cols[l], &cols[r], target)?.map(|(a, b)| {
        let mut out = cols.to_vec();
        out[l] = a;
        out[r] = b;
        out
    }))
}

/// `F_i` on a placed skew tableau.
pub fn cocrystal_lower(x: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
    cocrystal_lower_columns(x.n(), x.columns(), i)?
        .map(|c| SkewTableau::from_column_sequence(x.n(), c))
        .transpose()
}

/// `E_i` on a placed skew tableau.
pub fn cocrystal_raise(x: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
    cocrystal_raise_columns(x.n(), x.columns(), i)?
        .map(|c| SkewTableau::from_column_sequence(x.n(), c))
        .transpose()
}

/// Cocrystal weight: column lengths read from the right.
pub fn cocrystal_weight(cols: &[Column]) -> Vec<usize> {
    cols.iter().rev().map(Column::len).collect()
}

#[derive(Clone, Debug)]
pub struct Cocrystal {
    n: usize,
    r: usize,
    vertices: Vec<Vec<Column>>,
    index: HashMap<Vec<Column>, usize>,
    down: Vec<Vec<Option<usize>>>,
    up: Vec<Vec<Option<usize>>>,
}

/// Closure of `t` (padded on the left with empty columns up to width `r`)
/// under `E_i` and `F_i`.
pub fn generate_cocrystal(t: &SkewTableau, r: usize) -> Result<Cocrystal> {
    if !t.is_straight() {
        return Err(Error::InvalidShape("the base of a cocrystal is a straight tableau".into()));
    }
    t.validate_kn().map_err(|v| Error::InvalidTableau(v.to_string()))?;
    let t = t.trimmed();
    if t.num_columns() > r {
        return Err(Error::InvalidShape(format!(
            "{} columns do not fit in width {}",
            t.num_columns(),
            r
        )));
    }
    let n = t.n();
    let mut start = vec![Column::empty(); r - t.num_columns()];
    start.extend(t.columns().iter().cloned());
    let ops = r.saturating_sub(1);
    let mut vertices = vec![start.clone()];
    let mut index = HashMap::from([(start, 0usize)]);
    let mut down = vec![vec![None; ops]];
    let mut up = vec![vec![None; ops]];
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for i in 1..=ops {
            for lowering in [true, false] {
                let cols = &vertices[v];
                let next = if lowering {
                    cocrystal_lower_columns(n, cols, i)?
                } else {
                    cocrystal_raise_columns(n, cols, i)?
                };
                let Some(w) = next else { continue };
                let id = match index.get(&w) {
                    Some(&id) => id,
                    None => {
                        let id = vertices.len();
                        vertices.push(w.clone());
                        index.insert(w, id);
                        down.push(vec![None; ops]);
                        up.push(vec![None; ops]);
                        queue.push_back(id);
                        id
                    }
                };
                if lowering {
                    down[v][i - 1] = Some(id);
                    up[id][i - 1] = Some(v);
                } else {
                    up[v][i - 1] = Some(id);
                    down[id][i - 1] = Some(v);
                }
            }
        }
    }
    Ok(Cocrystal { n, r, vertices, index, down, up })
}

impl Cocrystal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The base tableau has id 0.
    pub fn base(&self) -> usize {
        0
    }

    pub fn columns(&self, v: usize) -> &[Column] {
        &self.vertices[v]
    }

    pub fn vertex(&self, v: usize) -> SkewTableau {
        SkewTableau::from_column_sequence(self.n, self.vertices[v].clone())
            .expect("vertices are placeable")
    }

    pub fn id_of(&self, cols: &[Column]) -> Option<usize> {
        self.index.get(cols).copied()
    }

    pub fn weight(&self, v: usize) -> Vec<usize> {
        cocrystal_weight(&self.vertices[v])
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.down[v][i - 1]
    }

    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        self.up[v][i - 1]
    }

    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (v, row) in self.down.iter().enumerate() {
            for (i, w) in row.iter().enumerate() {
                if let Some(w) = w {
                    out.push((v, i + 1, *w));
                }
            }
        }
        out
    }

    /// Vertices whose column lengths permute those of the base.
    pub fn key_ids(&self) -> Vec<usize> {
        let mut base = self.weight(0);
        base.sort_unstable();
        (0..self.vertices.len())
            .filter(|&v| {
                let mut w = self.weight(v);
                w.sort_unstable();
                w == base
            })
            .collect()
    }

    pub fn keys(&self) -> Vec<SkewTableau> {
        self.key_ids().into_iter().map(|v| self.vertex(v)).collect()
    }

    fn sorted_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.vertices.len()).collect();
        ids.sort_by_key(|&v| self.vertex(v).to_string());
        ids
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cocrystal {\n");
        let ids = self.sorted_ids();
        for &v in &ids {
            let _ = writeln!(out, "  v{} [label=\"{}\"];", v, self.vertex(v));
        }
        for &v in &ids {
            for i in 1..self.r {
                if let Some(w) = self.f(v, i) {
                    let _ = writeln!(out, "  v{} -> v{} [label=\"F{}\"];", v, w, i);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ids = self.sorted_ids();
        let vertices: Vec<serde_json::Value> = ids
            .iter()
            .map(|&v| {
                serde_json::json!({
                    "id": v,
                    "tableau": self.vertex(v).to_string(),
                    "columns": self.vertices[v].iter().map(|c| c.values()).collect::<Vec<_>>(),
                    "weight": self.weight(v),
                })
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges()
            .into_iter()
            .map(|(v, i, w)| serde_json::json!({ "from": v, "to": w, "i": i }))
            .collect();
        serde_json::json!({ "n": self.n, "r": self.r, "vertices": vertices, "edges": edges })
    }
}

/// The skew tableaux of the class of `t` whose column lengths permute the
/// lengths of `t`, taken from its cocrystal of width `r`.
pub fn cocrystal_keys(t: &SkewTableau, r: usize) -> Result<Vec<SkewTableau>> {
    Ok(generate_cocrystal(t, r)?.keys())
}
