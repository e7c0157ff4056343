//! Column insertion and the dual RSK correspondence on strict biwords.

use std::fmt;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::tableau::SkewTableau;

/// Biletters `(top, bottom)` in strictly increasing lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Biword(Vec<(u32, Letter)>);

impl Biword {
    pub fn new(letters: Vec<(u32, Letter)>) -> Result<Biword> {
        if let Some(&(t, _)) = letters.iter().find(|(t, _)| *t == 0) {
            return Err(Error::MalformedBiword(format!("top letter {} is not positive", t)));
        }
        for w in letters.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedBiword(format!(
                    "{}:{} does not come strictly before {}:{}",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(Biword(letters))
    }

    pub fn letters(&self) -> &[(u32, Letter)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top(&self) -> Vec<u32> {
        self.0.iter().map(|b| b.0).collect()
    }

    pub fn bottom(&self) -> Vec<Letter> {
        self.0.iter().map(|b| b.1).collect()
    }
}

/// `t1:b1 t2:b2 ...`
impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(t, b)| format!("{}:{}", t, b)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl std::str::FromStr for Biword {
    type Err = Error;
    fn from_str(s: &str) -> Result<Biword> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (t, b) = tok
                .split_once(':')
                .ok_or_else(|| Error::MalformedBiword(format!("expected top:bottom, found {:?}", tok)))?;
            let t: u32 = t
                .parse()
                .map_err(|_| Error::MalformedBiword(format!("bad top letter {:?}", t)))?;
            let b: i32 = b
                .parse()
                .map_err(|_| Error::MalformedBiword(format!("bad bottom letter {:?}", b)))?;
            letters.push((t, Letter::new(b).map_err(|e| Error::MalformedBiword(e.to_string()))?));
        }
        Biword::new(letters)
    }
}

/// Inserts `x`, returning the column that received the new cell.
fn insert(columns: &mut Vec<Vec<Letter>>, mut x: Letter) -> usize {
    for (c, col) in columns.iter_mut().enumerate() {
        match col.iter().position(|&y| y >= x) {
            Some(pos) => x = std::mem::replace(&mut col[pos], x),
            None => {
                col.push(x);
                return c;
            }
        }
    }
    columns.push(vec![x]);
    columns.len() - 1
}

/// Column insertion of a word, letter by letter from the left.
pub fn column_insert(n: usize, word: &[Letter]) -> Result<SkewTableau> {
    let mut columns = Vec::new();
    for &x in word {
        insert(&mut columns, x);
    }
    SkewTableau::straight(n, columns.into_iter().map(Column::new).collect::<Result<Vec<_>>>()?)
}

/// `RSK*`: the insertion tableau of the bottom word and the recording
/// tableau of conjugate shape filled with top letters. The recording tableau
/// uses the alphabet `[r]`, `r` being the largest top letter.
pub fn dual_rsk(n: usize, w: &Biword) -> Result<(SkewTableau, SkewTableau)> {
    for &(_, b) in w.letters() {
        if b.index() as usize > n {
            return Err(Error::LetterOutOfRange { letter: b.value(), n });
        }
    }
    let r = w.letters().iter().map(|b| b.0).max().unwrap_or(0) as usize;
    let mut p: Vec<Vec<Letter>> = Vec::new();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for &(t, b) in w.letters() {
        let c = insert(&mut p, b);
        if q.len() <= c {
            q.push(Vec::new());
        }
        q[c].push(Letter::unbarred(t));
    }
    let p = SkewTableau::straight(n, p.into_iter().map(Column::new).collect::<Result<Vec<_>>>()?)?;
    let q_rows: Vec<Vec<Option<Letter>>> =
        q.into_iter().map(|row| row.into_iter().map(Some).collect()).collect();
    let q = SkewTableau::from_rows(r, &q_rows)?;
    Ok((p, q))
}

/// Column index counted from the right, paired with each entry, in reading
/// order. Empty columns still count.
pub fn biword_of(t: &SkewTableau) -> Result<Biword> {
    let k = t.num_columns();
    let mut letters = Vec::with_capacity(t.size());
    for j in (0..k).rev() {
        for l in t.column(j).iter() {
            letters.push(((k - j) as u32, l));
        }
    }
    Biword::new(letters)
}
