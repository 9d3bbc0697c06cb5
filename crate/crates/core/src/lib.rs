//! Exact enumeration of alternating oriented pretzel links.
//!
//! The crate counts alternating oriented pretzel links of a given crossing
//! number in three families (Type 1, Type 2, Type 3) using closed-form
//! necklace and bracelet formulas, and ships an exhaustive t-code
//! enumerator that checks those formulas independently.
//!
//! ```
//! use pretzel::count::{count_row, p3_count};
//!
//! assert_eq!(p3_count(10), 38u32.into());
//! let row = count_row(10);
//! assert_eq!(row.total, 86u32.into());
//! ```
//!
//! Module map:
//!
//! - [`combinat`]: totient, divisors, total binomials, gcd, composition streams
//! - [`necklace`]: single-colour necklaces `N(n,k)` and bracelets `B(n,k)`
//! - [`bicolor`]: two-coloured bracelets `B(n1,k1;n2,k2)`
//! - [`count`]: the per-type counters, the Type 3 parameter set and table rows
//! - [`tcode`]: t-codes, canonical forms and the brute-force oracle
//! - [`fit`]: least squares fit of `ln P(c)` against `c`
//! - [`cli`]: the command implementations behind the `pretzel` binary

pub mod bicolor;
pub mod cli;
pub mod combinat;
pub mod count;
pub mod error;
pub mod fit;
pub mod necklace;
pub mod tcode;

pub use combinat::Count;
pub use error::{Error, Result};
