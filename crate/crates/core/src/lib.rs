//! Words in the groups `G_n^2`, `G_n^3`, their parity extensions and the pure
//! braid group, the homomorphisms between them, and free-product valued
//! invariants that detect nontrivial braids.

pub mod error;
pub mod freeprod;
pub mod homomorphisms;
pub mod invariants;
pub mod oracle;
pub mod words;

pub use error::{Error, Result};
pub use freeprod::{FLetter, FWord, Rank};
pub use words::{parse_word, Kind, Label, Letter, MoveSpec, Sign, StrandSet, Word};
