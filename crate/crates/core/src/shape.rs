//! Partitions and skew shapes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "{:?} is not weakly decreasing",
                parts
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().filter(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n.max(self.0.len())).map(|i| self.part(i)).collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && (0..other.length()).all(|i| other.part(i) <= self.part(i))
    }

    /// Every partition of `size` with at most `max_parts` parts.
    pub fn all_of_size(size: usize, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(rest: usize, max_part: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_parts {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                go(rest - p, p, max_parts, cur, out);
                cur.pop();
            }
        }
        go(size, size, max_parts, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad part {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `μ/ν`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{} does not contain {}", outer, inner)));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape { outer, inner: Partition::default() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.size() == 0
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_and_parse() {
        let p: Partition = "3,2,2".parse().unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 3, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!("2,1,0".parse::<Partition>().unwrap().length(), 2);
    }

    #[test]
    fn enumerate_partitions() {
        assert_eq!(Partition::all_of_size(4, 4).len(), 5);
        assert_eq!(Partition::all_of_size(4, 2).len(), 3);
        assert_eq!(Partition::all_of_size(0, 2).len(), 1);
    }
}
