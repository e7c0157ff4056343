//! The hyperoctahedral group `B_n` acting on `Z^n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::shape::Partition;

/// Applies the simple reflection `s_i` (1-based): a swap of coordinates
/// `i, i+1` for `i < n`, a sign change of the last coordinate for `i = n`.
pub fn reflect(i: usize, z: &[i32]) -> Vec<i32> {
    let n = z.len();
    let mut out = z.to_vec();
    if i < n {
        out.swap(i - 1, i);
    } else {
        out[n - 1] = -out[n - 1];
    }
    out
}

/// A word in the simple reflections. `word[0]` acts first, so the word
/// `[i_1, ..., i_l]` stands for `s_{i_l} ... s_{i_1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignedPermWord {
    n: usize,
    word: Vec<usize>,
}

impl SignedPermWord {
    pub fn new(n: usize, word: Vec<usize>) -> Result<SignedPermWord> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidGenerator { index: bad, n });
        }
        Ok(SignedPermWord { n, word })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, z: &[i32]) -> Vec<i32> {
        self.word.iter().fold(z.to_vec(), |acc, &i| reflect(i, &acc))
    }

    /// Length of the group element, counted as the number of positive roots
    /// sent to negative ones.
    pub fn group_length(&self) -> usize {
        let rho: Vec<i32> = (1..=self.n as i32).rev().collect();
        let x = self.apply(&rho);
        let mut count = x.iter().filter(|&&v| v < 0).count();
        for i in 0..self.n {
            for j in i + 1..self.n {
                count += (x[i] - x[j] < 0) as usize + (x[i] + x[j] < 0) as usize;
            }
        }
        count
    }

    pub fn is_reduced(&self) -> bool {
        self.group_length() == self.word.len()
    }
}

impl fmt::Display for SignedPermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The orbit `B_n λ`, sorted.
pub fn orbit(shape: &Partition, n: usize) -> Vec<Vec<i32>> {
    let start: Vec<i32> = shape.padded(n).into_iter().map(|p| p as i32).collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(z) = queue.pop_front() {
        for i in 1..=n {
            let y = reflect(i, &z);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Whether `v` lies in `B_n λ`.
pub fn in_orbit(v: &[i32], shape: &Partition) -> bool {
    let mut abs: Vec<usize> = v.iter().map(|x| x.unsigned_abs() as usize).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    shape.length() <= v.len() && abs == shape.padded(v.len())
}

/// A reduced word `σ` with `σλ = v`, found by walking from `v` up to the
/// dominant weight one simple reflection at a time.
pub fn reduced_word_for(v: &[i32], shape: &Partition) -> Result<SignedPermWord> {
    if !in_orbit(v, shape) {
        return Err(Error::WeightNotInOrbit(v.to_vec()));
    }
    let n = v.len();
    let mut cur = v.to_vec();
    let mut descent = Vec::new();
    loop {
        let i = (1..n)
            .find(|&i| cur[i - 1] < cur[i])
            .or_else(|| (n > 0 && cur[n - 1] < 0).then_some(n));
        match i {
            Some(i) => {
                cur = reflect(i, &cur);
                descent.push(i);
            }
            None => break,
        }
    }
    descent.reverse();
    SignedPermWord::new(n, descent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        let sh: Partition = "2,1".parse().unwrap();
        assert_eq!(orbit(&sh, 2).len(), 8);
        let sh: Partition = "1".parse().unwrap();
        assert_eq!(orbit(&sh, 3).len(), 6);
    }

    #[test]
    fn words() {
        let sh: Partition = "2,1".parse().unwrap();
        assert!(reduced_word_for(&[2, 1], &sh).unwrap().is_empty());
        assert_eq!(reduced_word_for(&[1, 2], &sh).unwrap().word(), &[1]);
        for v in orbit(&sh, 2) {
            let w = reduced_word_for(&v, &sh).unwrap();
            assert_eq!(w.apply(&[2, 1]), v);
            assert!(w.is_reduced());
        }
        let w0 = reduced_word_for(&[-2, -1], &sh).unwrap();
        assert_eq!(w0.len(), 4);
        assert!(!SignedPermWord::new(2, vec![1, 1]).unwrap().is_reduced());
        assert!(SignedPermWord::new(2, vec![3]).is_err());
    }
}
