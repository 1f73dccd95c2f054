//! Orthosymplectic tableaux over the alphabet `1 < 1̄ < … < m < m̄ < 1° < … < n°`:
//! spo-insertion, products with one-row tableaux, their reverse, and an exact
//! checker for the Pieri rule `spo_λ · spo_(k) = Σ α_ν spo_ν`.
//!
//! ```
//! use spo_tableau::{decompose_with_sequence, product, verify_pieri, Alphabet, OneRowWord, Partition, Tableau};
//!
//! let a = Alphabet::new(2, 1)?;
//! let t = Tableau::parse("1 1b ; 2", a)?;
//! let u = OneRowWord::parse("2 1o")?;
//! let (s, record) = product(&t, &u)?;
//! assert_eq!(decompose_with_sequence(&s, &record)?, (t, u));
//!
//! let report = verify_pieri(&"2,1".parse::<Partition>()?, 2, a)?;
//! assert!(report.identity_holds);
//! # Ok::<(), spo_tableau::Error>(())
//! ```

pub mod characters;
pub mod cli;
pub mod error;
pub mod insertion;
pub mod pieri;
pub mod reverse;
pub mod shape;
pub mod tableau;

pub use characters::{spo_character, symplectic_schur, LaurentMonomial, LaurentPoly};
pub use error::{Error, Result};
pub use insertion::{product, spo_insert, OneRowWord, SpoSequence};
pub use pieri::{pieri_coefficients, sp_to_spo, spo_to_sp, verify_pieri};
pub use reverse::{decompose_with_sequence, decompose_with_triple, SpTriple};
pub use shape::{Partition, SkewShape};
pub use tableau::{Alphabet, Entry, Tableau};
