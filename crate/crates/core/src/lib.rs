//! Conic sequences of convex polytopes.
//!
//! A conic sequence peels a polytope's face lattice one vertex at a time:
//! at each step a *cone vertex* `v` (one whose containing faces have a unique
//! maximal element `E`) is removed together with the interval `[v, E]`, until a
//! single vertex remains. The vertex figure of `v` in `E` is the step's *base*.
//!
//! The crate is organised bottom-up:
//!
//! * [`geometry`]: exact rational hulls, vertex enumeration and incidences.
//! * [`lattice`]: face posets, subcomplexes and poset isomorphism.
//! * [`conic`]: cone vertices, base classification, search and certificates.
//! * [`invariants`]: f/h/h-square vectors, Poincaré polynomials, cohomology reports.
//! * [`builders`]: the standard polytope families, Bruhat intervals, GZ(3).
//! * [`io`]: JSON documents, the analysis pipeline and report rendering.

pub mod builders;
pub mod conic;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod io;
pub mod lattice;

pub use error::{Error, Result};
