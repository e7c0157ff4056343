//! Letters of the symplectic alphabet `1 < 2 < ... < n < n̄ < ... < 1̄`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A letter of `[±n]`. Barred letters are stored as negative integers, so
/// `Letter(-3)` is `3̄`.
///
/// The ordering is the symplectic one and does not depend on `n`: all
/// unbarred letters come first in increasing order, then the barred letters
/// with decreasing absolute value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    /// Builds a letter from its signed encoding. Zero is rejected.
    pub fn new(value: i32) -> Result<Letter, Error> {
        if value == 0 {
            return Err(Error::ZeroLetter);
        }
        Ok(Letter(value))
    }

    /// Like [`Letter::new`] but also checks that `|value| <= n`.
    pub fn checked(value: i32, n: usize) -> Result<Letter, Error> {
        let l = Letter::new(value)?;
        if l.index() as usize > n {
            return Err(Error::LetterOutOfRange { letter: value, n });
        }
        Ok(l)
    }

    pub fn unbarred(k: u32) -> Letter {
        assert!(k > 0, "letters start at 1");
        Letter(k as i32)
    }

    pub fn barred(k: u32) -> Letter {
        assert!(k > 0, "letters start at 1");
        Letter(-(k as i32))
    }

    /// The signed encoding.
    pub fn value(self) -> i32 {
        self.0
    }

    /// `|x|`, the underlying index in `[n]`.
    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// The symmetric letter: `k <-> k̄`.
    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    /// Position of the letter in `1 < ... < n < n̄ < ... < 1̄`, starting at 1.
    pub fn rank(self, n: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else {
            (2 * n as i32 + 1 + self.0) as usize
        }
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: usize, n: usize) -> Letter {
        assert!(rank >= 1 && rank <= 2 * n, "rank out of range");
        if rank <= n {
            Letter(rank as i32)
        } else {
            Letter(rank as i32 - 2 * n as i32 - 1)
        }
    }

    /// All letters of `[±n]` in increasing order.
    pub fn alphabet(n: usize) -> impl Iterator<Item = Letter> {
        (1..=2 * n).map(move |r| Letter::from_rank(r, n))
    }

    fn key(self) -> (bool, i32) {
        (self.0 < 0, self.0)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Text form used by literals: `3` or `-3`.
impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{305}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}
