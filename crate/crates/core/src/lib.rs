//! Exact-arithmetic workbench for one-dimensional stable sheaves on the
//! minimal resolution of the A-type Kleinian singularity `C^2 / Z_N`.
//!
//! The crate is organized around the two sides of the tilting equivalence:
//!
//! - [`toric`]: the resolution fan, exceptional curves, intersection pairing
//!   and tilting divisors;
//! - [`quiver`]: the affine cycle quiver, preprojective relations and
//!   slope (semi)stability for explicit representations;
//! - [`dictionary`]: the translation between polarization-and-slope data
//!   and quiver stability vectors, and between Chern characters and
//!   dimension vectors;
//! - [`classify`]: enumeration of stable class data, Ext tables, chain
//!   partitions, positive roots and the Yangian factor list;
//! - [`cohomology`]: closed-form sheaf cohomology and Ext dimension tables
//!   for curve chains and exceptional sequences;
//! - [`series`]: exact multivariate truncated series with Adams operations,
//!   the plethystic exponential, and the Betti / restricted-Kac generating
//!   functions.
//!
//! All arithmetic is exact rational; there is no floating point anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod cohomology;
pub mod dictionary;
pub mod linalg;
pub mod quiver;
pub mod rational;
pub mod series;
pub mod toric;

pub use rational::Rat;
