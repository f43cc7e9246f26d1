//! Grigorchuk groups `G_ω`, the Schreier graph of the orbit of `0^∞`, and the
//! action of `G_ω` on the cube complex whose vertices are finite
//! modifications of the right half-line `Γ₊`.
//!
//! The crate is organised bottom-up:
//!
//! * [`omega`] holds eventually periodic defining sequences.
//! * [`word`], [`ray`] and [`element`] implement group elements, their wreath
//!   recursion and their action on the boundary of the binary tree.
//! * [`contraction`] solves the word problem with the contraction recursion.
//! * [`gamma`] describes the Schreier graph `Γ` and its halves.
//! * [`cube`] implements vertices, cubes, hyperplanes and the group action.
//! * [`stabilizers`] enumerates balls and computes stabilizers.
//! * [`checks`] and [`export`] back the command line tool.

pub mod checks;
pub mod contraction;
pub mod cube;
pub mod element;
pub mod error;
pub mod export;
pub mod gamma;
pub mod omega;
pub mod ray;
pub mod stabilizers;
pub mod word;

pub use contraction::{CanonicalKey, KeyId, WordSolver};
pub use cube::{Cube, CubeVertex, HalfSpace, Hyperplane};
pub use element::GroupElement;
pub use error::{Error, Result};
pub use gamma::LabelledEdge;
pub use omega::OmegaSequence;
pub use ray::Ray;
pub use stabilizers::{ElementBall, GroupType, SmallGroupTable, StabilizerTarget};
pub use word::{Letter, Word};
