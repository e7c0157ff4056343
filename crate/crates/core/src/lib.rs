//! Combinatorics of symplectic Kashiwara-Nakashima tableaux.
//!
//! The crate covers admissible columns and the `Φ` bijection, the symplectic
//! jeu de taquin of Lecouvey and Sheats, type `C_n` crystals with their
//! Demazure and opposite Demazure subsets, cocrystals built from column
//! slides, and right/left key maps computed both by jeu de taquin and by the
//! matching ("direct") procedure on split forms.
//!
//! Letters are signed integers: `-3` stands for `3̄`. Tableau literals list
//! rows top to bottom separated by `;`, entries separated by `,`, and `.` for
//! inner cells of a skew shape:
//!
//! ```
//! use kntab::SkewTableau;
//! let t = SkewTableau::parse(3, "1,3,-1;3,-3;-3").unwrap();
//! assert!(t.is_kn());
//! assert_eq!(kntab::keys::right_key(&t).unwrap().to_string(), "3,3,-1;-2,-1;-1");
//! ```

pub mod column;
pub mod error;
pub mod letter;
pub mod shape;
pub mod tableau;

pub mod sjdt;

pub mod crystal;
pub mod laurent;
pub mod weyl;

pub mod keys;

pub mod cocrystal;
pub mod rsk;

pub use column::{Admissibility, Column, Split};
pub use error::{Error, Result};
pub use letter::Letter;
pub use shape::{Partition, SkewShape};
pub use tableau::{key_of_weight, KnViolation, SkewTableau, Weight};
