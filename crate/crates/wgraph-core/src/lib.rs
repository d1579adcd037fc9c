//! Exact-arithmetic construction of W-graphs from ideals in finite Coxeter
//! groups.
//!
//! The pipeline: enumerate a finite Coxeter group ([`coxeter`]), pick a
//! suffix-closed subset of the left weak order together with a compatible
//! generator subset J ([`ideal`]), run the Kazhdan-Lusztig-style recursion
//! for the canonical basis ([`wgraph`]), and decompose the resulting graph
//! into cells ([`cells`]). Every polynomial produced by the recursion is
//! cross-checked against an independent fixed-point solver for the bar
//! involution ([`hecke`]). The [`parabolic`] module ties the graphs built
//! from minimal coset representatives to the regular Kazhdan-Lusztig graph,
//! and [`typea`] specializes the machinery to symmetric groups, producing
//! W-graphs indexed by standard Young tableaux.
//!
//! All arithmetic is exact: Laurent polynomials over arbitrary-precision
//! integers, no floating point anywhere. The crate is `no_std` (alloc only);
//! IO, serialization and the command-line front end live in the companion
//! `wgf` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cells;
pub mod coxeter;
pub mod hecke;
pub mod ideal;
pub mod laurent;
pub mod parabolic;
pub mod polymat;
pub mod report;
pub mod typea;
pub mod wgraph;

pub use coxeter::{BuildOptions, CoxeterSystem, Descriptor, Elem, Gen, GenSet};
pub use ideal::{EdgeClass, Ideal};
pub use laurent::LaurentPoly;
pub use report::{Check, Report};
