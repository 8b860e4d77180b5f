//! Exact Chen-Ruan and virtual stringy cohomology of linear quotients `[Cⁿ/G]`.
//!
//! A group `G` is given by monomial generators (a permutation of coordinates
//! with root-of-unity phases) and closed into a finite table. Every fixed locus
//! `V^g` is a linear subspace, hence contractible, so each twisted sector
//! carries a one-dimensional cohomology spanned by a class `x_g`. The crate
//! computes the sector geometry exactly, assembles both product structures on
//! the basis `{x_g}`, and checks the comparison between the Chen-Ruan ring of
//! the cotangent doubling `V ⊕ V̄` and the virtual ring of `V`.
//!
//! Modules, bottom up:
//!
//! * [`phase`], [`cyclotomic`]: exact roots of unity and `Q(ζ_N)` arithmetic.
//! * [`monomial`], [`group`]: monomial maps, group closure, conjugacy classes.
//! * [`sectors`]: eigen-phases, ages, fixed dimensions via averaging projectors.
//! * [`rings`]: obstruction and excess ranks, sector and class-level algebras.
//! * [`verify`]: the cotangent comparison checks and the verification report.

pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod monomial;
pub mod phase;
pub mod rings;
pub mod sectors;
mod serde_util;
pub mod spec;
pub mod verify;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use error::{Error, Result};
pub use group::{ConjugacyPartition, GroupTable};
pub use monomial::MonomialMap;
pub use phase::Phase;
pub use rings::{InvariantRing, RingTable, SectorAlgebra, Theory};
pub use sectors::{BuildOptions, Geometry, LinearOrbifold, SectorData};
pub use spec::OrbifoldSpec;
pub use verify::{verify_spec, CotangentPair, VerificationReport};
