//! Band spectra of adjacency operators of composed graphs.
//!
//! The crate covers four layers:
//!
//! - [`graph`]: finite simple graphs, canonical builders (complete, complete
//!   bipartite, cycles, paths, Cayley graphs of finite groups) and the three
//!   compositions *sum*, *product* and *strong product*.
//! - [`eigen`]: a dense symmetric eigensolver (Householder tridiagonalization
//!   followed by implicitly shifted QL) with tolerance-based grouping of
//!   eigenvalues into distinct values and multiplicities.
//! - [`spectra`]: [`SpectrumSet`], a finite union of disjoint closed intervals,
//!   with the composition rules `x + y`, `x y` and `x + y + x y` and affine
//!   images (Laplacian and Markov operators of regular graphs).
//! - [`expr`]: symbolic graph expressions over finite literals and infinite
//!   atoms (the line, the lattice `Z^d`, regular trees), evaluated
//!   compositionally to an exact band spectrum.
//!
//! [`verify`] cross-checks symbolic predictions against eigenvalues of finite
//! materializations (cycles for the line, tori for lattices, balls for trees).
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![deny(rust_2018_idioms)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod eigen;
pub mod error;
pub mod expr;
pub mod graph;
pub mod spectra;
pub mod verify;

pub use eigen::{eigenvalues, spectral_radius, EigenSpectrum, DEFAULT_GROUPING_TOL};
pub use error::{Error, ParseError, ParseErrorKind};
pub use expr::{parse_expr, parse_expr_with, GraphExpr, LiteralLoader, OperatorKind};
pub use graph::{CayleyMeta, FiniteGraph, Generation, GroupOrder, MultTable};
pub use spectra::{Band, SpectrumSet, MERGE_TOL};
pub use verify::{VerificationReport, VerifyConfig};

pub type Result<T, E = Error> = core::result::Result<T, E>;
