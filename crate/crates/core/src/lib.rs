//! Exact symbolic arithmetic for transfinite ordinals in Cantor normal
//! form, centered on the Hessenberg natural sum and its transfinite
//! iteration: partial sums relative to step sets, tail characterizations,
//! mixed-sum realizations, rearrangement-invariant multiset sums, and
//! sizes of countable well-founded trees.
//!
//! Everything is exact and purely functional: ordinals are immutable terms,
//! uncountable cardinals appear as opaque atoms, and all operations are
//! closed over the term language.

pub mod error;
pub mod generate;
pub mod invariant;
pub mod mixed;
pub mod ordinal;
pub mod seq;
pub mod sum;
pub mod tree;

pub use error::{Error, Result};
pub use invariant::{Multiplicity, OrdMultiset};
pub use mixed::{BlockPiece, Owner, Realization};
pub use ordinal::{Monomial, Ordinal};
pub use seq::{Position, SeqDesc, Segment, StepSet};
pub use sum::TailCharacter;
pub use tree::{TreeDesc, TreeMult};
