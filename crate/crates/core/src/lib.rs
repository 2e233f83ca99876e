//! Exact arithmetic for component groups of Néron models attached to
//! quaternionic modular curves.
//!
//! The building blocks are finite weighted graphs ([`graph`]), their cycle
//! lattices and discriminants ([`homology`]), weighted Laplacian and
//! adjacency spectra ([`spectral`]), and number theory over `Z` and
//! `F_q[T]` ([`numtheory`]). [`quaternion`] combines them into closed-form
//! orders from the characteristic polynomial of a Brandt matrix.
//!
//! All arithmetic is exact: integers and rationals are arbitrary precision
//! and no floating point is used anywhere.

pub mod error;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod numtheory;
pub mod poly;
pub mod quaternion;
pub mod spectral;

pub use error::{Error, ErrorKind, Result};
pub use graph::WeightedGraph;
pub use homology::{component_group, discriminant, ComponentGroup};
pub use quaternion::{phi_ff, phi_q, PhiReport};
