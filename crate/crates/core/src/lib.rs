//! Exact computation of virtual Hodge (E-)polynomials of complex algebraic
//! varieties assembled by cut-and-paste constructions, closed-form invariants
//! of Chow varieties of projective space, and Euler-Chow series of smooth
//! projective toric varieties from fan data.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and no
//! floating point is used anywhere. All values are immutable after
//! construction and all operations are pure functions, so the whole crate is
//! safe for concurrent use without coordination.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `chowkit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod chow;
pub mod epoly;
pub mod expr;
pub mod matrix;
pub mod series;
pub mod toric;

pub use epoly::{Atom, EPoly, UniPoly};
pub use expr::VarietyExpr;
pub use series::{SymSeries, TruncSeries, Truncation};
pub use toric::{ChowLattice, EulerChowSeries, Fan};
