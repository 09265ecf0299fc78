//! Invariants of maximal tori in finite classical groups and the unipotent
//! parts of products with the Steinberg character, in exact arithmetic.
//!
//! * [`weyl`]: Weyl groups as signed permutations, class labels, centralizers
//!   and induced trivial characters.
//! * [`tori`]: canonical tori as products of cyclic blocks and q-character tests.
//! * [`stdecomp`]: rational vectors over the `R_{T,1}` basis.
//! * [`truncpoly`]: weights of truncated polynomial rings.
//! * [`ffield`]: finite field arithmetic.
//! * [`oracle`]: brute-force recomputations.
//! * [`verify`]: sweeps pairing formulas with oracles.

pub mod error;
pub mod ffield;
pub mod oracle;
pub mod stdecomp;
pub mod tori;
pub mod truncpoly;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
