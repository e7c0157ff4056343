//! Type `C_n` crystals on KN tableaux and their Demazure subsets.
//!
//! Crystal operators use the signature rule on the column reading word
//! (columns right to left, each read top to bottom). For `i < n` the letters
//! `i` and `(i+1)‾` carry `+` and the letters `i+1` and `ī` carry `-`; for
//! `i = n` only `n` (`+`) and `n̄` (`-`) count. Adjacent `+ -` pairs cancel,
//! leaving `- ... - + ... +`; `f_i` changes the leftmost remaining `+` and
//! `e_i` the rightmost remaining `-`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::letter::Letter;
use crate::shape::Partition;
use crate::tableau::{key_of_weight, SkewTableau, Weight};
use crate::weyl::{self, SignedPermWord};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Plus,
    Minus,
}

fn sign_of(l: Letter, i: usize, n: usize) -> Option<Sign> {
    let i = i as i32;
    let v = l.value();
    if i < n as i32 {
        if v == i || v == -(i + 1) {
            Some(Sign::Plus)
        } else if v == i + 1 || v == -i {
            Some(Sign::Minus)
        } else {
            None
        }
    } else if v == i {
        Some(Sign::Plus)
    } else if v == -i {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// Unmatched `-` positions and unmatched `+` positions in the word.
fn bracket(word: &[Letter], i: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (k, &l) in word.iter().enumerate() {
        match sign_of(l, i, n) {
            Some(Sign::Plus) => plus.push(k),
            Some(Sign::Minus) => {
                if plus.pop().is_none() {
                    minus.push(k);
                }
            }
            None => {}
        }
    }
    (minus, plus)
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::InvalidGenerator { index: i, n });
    }
    Ok(())
}

fn lowered(l: Letter, i: usize, n: usize) -> Letter {
    let v = l.value();
    let i = i as i32;
    if i == n as i32 {
        Letter::barred(i as u32)
    } else if v == i {
        Letter::unbarred(i as u32 + 1)
    } else {
        debug_assert_eq!(v, -(i + 1));
        Letter::barred(i as u32)
    }
}

fn raised(l: Letter, i: usize, n: usize) -> Letter {
    let v = l.value();
    let i = i as i32;
    if i == n as i32 {
        Letter::unbarred(i as u32)
    } else if v == i + 1 {
        Letter::unbarred(i as u32)
    } else {
        debug_assert_eq!(v, -i);
        Letter::barred(i as u32 + 1)
    }
}

/// `f_i(t)`, or `None` at the end of the `i`-string. Works on skew
/// tableaux too; the shape is kept.
pub fn lower(t: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
    check_index(i, t.n())?;
    let word = t.reading_word();
    let (_, plus) = bracket(&word, i, t.n());
    let Some(&k) = plus.first() else { return Ok(None) };
    let (col, idx) = t.reading_positions()[k];
    Ok(Some(t.replace(col, idx, lowered(word[k], i, t.n()))?))
}

/// `e_i(t)`, or `None` at the top of the `i`-string.
pub fn raise(t: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
    check_index(i, t.n())?;
    let word = t.reading_word();
    let (minus, _) = bracket(&word, i, t.n());
    let Some(&k) = minus.last() else { return Ok(None) };
    let (col, idx) = t.reading_positions()[k];
    Ok(Some(t.replace(col, idx, raised(word[k], i, t.n()))?))
}

/// `φ_i(t)`: how many times `f_i` applies.
pub fn phi(t: &SkewTableau, i: usize) -> Result<usize> {
    check_index(i, t.n())?;
    Ok(bracket(&t.reading_word(), i, t.n()).1.len())
}

/// `ε_i(t)`: how many times `e_i` applies.
pub fn epsilon(t: &SkewTableau, i: usize) -> Result<usize> {
    check_index(i, t.n())?;
    Ok(bracket(&t.reading_word(), i, t.n()).0.len())
}

/// `⟨wt, α_i^∨⟩`.
pub fn coroot_pairing(w: &[i32], i: usize) -> i32 {
    let n = w.len();
    if i < n {
        w[i - 1] - w[i]
    } else {
        w[n - 1]
    }
}

/// Vertex ids of a crystal.
pub type VertexSet = BTreeSet<usize>;

/// The crystal `B^λ` of KN tableaux of shape `λ` over `[±n]`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    n: usize,
    shape: Partition,
    vertices: Vec<SkewTableau>,
    index: HashMap<SkewTableau, usize>,
    down: Vec<Vec<Option<usize>>>,
    up: Vec<Vec<Option<usize>>>,
}

/// Breadth-first closure of `K(λ)` under the lowering operators.
pub fn generate_crystal(shape: &Partition, n: usize) -> Result<CrystalGraph> {
    if shape.length() > n {
        return Err(Error::InvalidShape(format!("{} has more than {} parts", shape, n)));
    }
    let top: Vec<i32> = shape.padded(n).into_iter().map(|p| p as i32).collect();
    let start = key_of_weight(&top, shape)?;
    let mut vertices = vec![start.clone()];
    let mut index = HashMap::new();
    index.insert(start, 0);
    let mut down: Vec<Vec<Option<usize>>> = vec![vec![None; n]];
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for i in 1..=n {
            if let Some(w) = lower(&vertices[v], i)? {
                let id = match index.get(&w) {
                    Some(&id) => id,
                    None => {
                        let id = vertices.len();
                        vertices.push(w.clone());
                        index.insert(w, id);
                        down.push(vec![None; n]);
                        queue.push_back(id);
                        id
                    }
                };
                down[v][i - 1] = Some(id);
            }
        }
    }
    let mut up = vec![vec![None; n]; vertices.len()];
    for (v, row) in down.iter().enumerate() {
        for (i, w) in row.iter().enumerate() {
            if let Some(w) = w {
                up[*w][i] = Some(v);
            }
        }
    }
    Ok(CrystalGraph { n, shape: shape.clone(), vertices, index, down, up })
}

impl CrystalGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[SkewTableau] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &SkewTableau {
        &self.vertices[id]
    }

    pub fn id_of(&self, t: &SkewTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn all(&self) -> VertexSet {
        (0..self.vertices.len()).collect()
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.down[v][i - 1]
    }

    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        self.up[v][i - 1]
    }

    /// Every edge `(v, i, f_i v)`.
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

    pub fn highest(&self) -> usize {
        0
    }

    pub fn lowest(&self) -> usize {
        let low: Vec<i32> = self.shape.padded(self.n).into_iter().map(|p| -(p as i32)).collect();
        self.key_id(&low).expect("K(-λ) is in the crystal")
    }

    /// Id of the key tableau `K(v)`.
    pub fn key_id(&self, v: &[i32]) -> Result<usize> {
        let key = key_of_weight(v, &self.shape)?;
        self.id_of(&key)
            .ok_or_else(|| Error::InvalidTableau(format!("key {} missing from the crystal", key)))
    }

    /// The orbit `B_n λ`.
    pub fn orbit(&self) -> Vec<Weight> {
        weyl::orbit(&self.shape, self.n)
    }

    fn check_word(&self, word: &SignedPermWord) -> Result<()> {
        if word.n() != self.n {
            return Err(Error::AlphabetMismatch { expected: self.n, found: word.n() });
        }
        Ok(())
    }

    /// `D_i X`: everything reachable from `X` by `f_i`.
    pub fn demazure_operator(&self, x: &VertexSet, i: usize) -> VertexSet {
        let mut out = x.clone();
        for &v in x {
            let mut cur = v;
            while let Some(w) = self.f(cur, i) {
                out.insert(w);
                cur = w;
            }
        }
        out
    }

    /// `D^op_i X`: everything reachable from `X` by `e_i`.
    pub fn opposite_demazure_operator(&self, x: &VertexSet, i: usize) -> VertexSet {
        let mut out = x.clone();
        for &v in x {
            let mut cur = v;
            while let Some(w) = self.e(cur, i) {
                out.insert(w);
                cur = w;
            }
        }
        out
    }

    /// `B_σλ = D_{i_l} ... D_{i_1} {K(λ)}`. The word is applied as given even
    /// when it is not reduced.
    pub fn demazure_crystal(&self, word: &SignedPermWord) -> Result<VertexSet> {
        self.check_word(word)?;
        let start = VertexSet::from([self.highest()]);
        Ok(word.word().iter().fold(start, |x, &i| self.demazure_operator(&x, i)))
    }

    /// `B^op = D^op_{i_l} ... D^op_{i_1} {K(-λ)}`.
    pub fn opposite_demazure_crystal(&self, word: &SignedPermWord) -> Result<VertexSet> {
        self.check_word(word)?;
        let start = VertexSet::from([self.lowest()]);
        Ok(word
            .word()
            .iter()
            .fold(start, |x, &i| self.opposite_demazure_operator(&x, i)))
    }

    /// `B_v` for `v` in the orbit.
    pub fn demazure_for(&self, v: &[i32]) -> Result<VertexSet> {
        self.demazure_crystal(&weyl::reduced_word_for(v, &self.shape)?)
    }

    /// The opposite Demazure crystal containing the key `K(u)` as its
    /// extremal element, i.e. `B^op_u` built from a reduced word for `-u`.
    pub fn opposite_demazure_for(&self, u: &[i32]) -> Result<VertexSet> {
        let neg: Vec<i32> = u.iter().map(|x| -x).collect();
        self.opposite_demazure_crystal(&weyl::reduced_word_for(&neg, &self.shape)?)
    }

    /// Keys compared cellwise: `K(u) < K(v)`.
    fn key_less(&self, u: &[i32], v: &[i32]) -> Result<bool> {
        let ku = self.vertex(self.key_id(u)?);
        let kv = self.vertex(self.key_id(v)?);
        Ok(ku != kv && ku.le_entrywise(kv))
    }

    /// `B̂_v = B_v minus every B_u with K(u) < K(v)`.
    pub fn demazure_atom(&self, v: &[i32]) -> Result<VertexSet> {
        let mut atom = self.demazure_for(v)?;
        for u in self.orbit() {
            if self.key_less(&u, v)? {
                for x in self.demazure_for(&u)? {
                    atom.remove(&x);
                }
            }
        }
        Ok(atom)
    }

    /// Opposite atom around `K(u)`: `B^op_u` minus every `B^op_w` with
    /// `K(w) > K(u)`.
    pub fn opposite_demazure_atom(&self, u: &[i32]) -> Result<VertexSet> {
        let mut atom = self.opposite_demazure_for(u)?;
        for w in self.orbit() {
            if self.key_less(u, &w)? {
                for x in self.opposite_demazure_for(&w)? {
                    atom.remove(&x);
                }
            }
        }
        Ok(atom)
    }

    /// `Σ x^{wt T}` over a vertex set.
    pub fn character_of(&self, set: &VertexSet) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero(self.n);
        for &v in set {
            p.add_term(self.vertices[v].weight(), 1);
        }
        p
    }

    pub fn character(&self) -> LaurentPolynomial {
        self.character_of(&self.all())
    }

    /// `κ_v`.
    pub fn demazure_character(&self, v: &[i32]) -> Result<LaurentPolynomial> {
        Ok(self.character_of(&self.demazure_for(v)?))
    }

    /// `κ̂_v`.
    pub fn atom_character(&self, v: &[i32]) -> Result<LaurentPolynomial> {
        Ok(self.character_of(&self.demazure_atom(v)?))
    }

    /// `κ^op_u`.
    pub fn opposite_demazure_character(&self, u: &[i32]) -> Result<LaurentPolynomial> {
        Ok(self.character_of(&self.opposite_demazure_for(u)?))
    }

    /// `κ̂^op_u`.
    pub fn opposite_atom_character(&self, u: &[i32]) -> Result<LaurentPolynomial> {
        Ok(self.character_of(&self.opposite_demazure_atom(u)?))
    }

    /// Vertices sorted by their literal, for stable output.
    pub fn sorted_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.vertices.len()).collect();
        ids.sort_by_key(|&v| self.vertices[v].to_string());
        ids
    }

    pub fn to_dot(&self) -> String {
        let colors = ["blue", "red", "darkgreen", "orange", "purple", "brown"];
        let ids = self.sorted_ids();
        let mut out = String::from("digraph crystal {\n");
        for &v in &ids {
            let _ = writeln!(out, "  v{} [label=\"{}\"];", v, self.vertices[v]);
        }
        for &v in &ids {
            for i in 1..=self.n {
                if let Some(w) = self.f(v, i) {
                    let _ = writeln!(
                        out,
                        "  v{} -> v{} [label=\"{}\", color={}];",
                        v,
                        w,
                        i,
                        colors[(i - 1) % colors.len()]
                    );
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
                    "tableau": self.vertices[v].to_string(),
                    "weight": self.vertices[v].weight(),
                })
            })
            .collect();
        let mut edges: Vec<serde_json::Value> = Vec::new();
        for &v in &ids {
            for i in 1..=self.n {
                if let Some(w) = self.f(v, i) {
                    edges.push(serde_json::json!({ "from": v, "to": w, "i": i }));
                }
            }
        }
        serde_json::json!({
            "n": self.n,
            "shape": self.shape.parts(),
            "vertices": vertices,
            "edges": edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, s: &str) -> SkewTableau {
        SkewTableau::parse(n, s).unwrap()
    }

    #[test]
    fn operator_examples() {
        let top = t(2, "1,1;2");
        assert_eq!(lower(&top, 1).unwrap().unwrap(), t(2, "1,2;2"));
        assert_eq!(lower(&top, 2).unwrap().unwrap(), t(2, "1,1;-2"));
        let bottom = t(2, "-2,-1;-1");
        for i in 1..=2 {
            assert!(lower(&bottom, i).unwrap().is_none());
        }
        assert!(lower(&top, 3).is_err());
        assert_eq!(lower(&t(2, "1,2;-2"), 1).unwrap().unwrap(), t(2, "2,2;-2"));
    }

    #[test]
    fn small_crystals() {
        let c = generate_crystal(&"2,1".parse().unwrap(), 2).unwrap();
        assert_eq!(c.len(), 16);
        assert_eq!(c.edges().len(), 18);
        assert_eq!(generate_crystal(&"1,1".parse().unwrap(), 2).unwrap().len(), 5);
        assert_eq!(generate_crystal(&"1".parse().unwrap(), 2).unwrap().len(), 4);
        assert_eq!(c.vertex(c.lowest()), &t(2, "-2,-1;-1"));
    }

    #[test]
    fn first_demazure_step() {
        let c = generate_crystal(&"2,1".parse().unwrap(), 2).unwrap();
        let d = c.demazure_crystal(&SignedPermWord::new(2, vec![1]).unwrap()).unwrap();
        let got: BTreeSet<String> = d.iter().map(|&v| c.vertex(v).to_string()).collect();
        assert_eq!(got, BTreeSet::from(["1,1;2".to_string(), "1,2;2".to_string()]));
    }
}
