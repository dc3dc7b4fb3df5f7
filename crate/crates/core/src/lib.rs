//! Local Kneser graphs `U_t(n, r)` and their relatives.
//!
//! The crate builds Kneser graphs `KG(m, n)`, local complete graphs `U(n, r)` and
//! local Kneser graphs `U_t(n, r)` over ground sets of at most 64 elements, and
//! provides exact solvers and explicit constructions for checking their
//! independence numbers, maximum independent sets, colorings, local chromatic
//! numbers and homomorphisms on small instances.
//!
//! Everything here is pure computation over `alloc`; file formats, the CLI and
//! the parallel verification grid live in the `lklab` crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod budget;
pub mod coloring;
pub mod error;
pub mod graphs;
pub mod homkit;
pub mod independence;
pub mod setkit;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graphs::{Family, Graph, VertexLabel};
pub use setkit::{Permutation, Subset};
