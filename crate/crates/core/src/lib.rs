//! Exact Kazhdan–Lusztig and inverse Kazhdan–Lusztig polynomials of braid
//! matroids, the labeled structures counted by their leading coefficients,
//! and brute-force checks tying the two together.

pub mod cactus;
pub mod error;
pub mod exact;
pub mod identities;
pub mod klcore;
pub mod maps;
pub mod matroid;
pub mod oracles;
pub mod spgen;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{IntPoly, Integer, Rational};
pub use klcore::{KlTable, LeadingForm, PartitionType, PolyKind, Provenance};
pub use matroid::{ElemSet, LabeledMatroid};
