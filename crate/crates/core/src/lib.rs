//! Braid-group computations for products of Dehn twists on the sphere with
//! `n` boundary components: deciding equality of twist products, searching
//! for alternative factorizations of boundary-parallel products, and the
//! plumbing graphs and Euler characteristics of the associated fillings.

pub mod braid;
pub mod catalog;
pub mod designs;
pub mod error;
pub mod formats;
pub mod plumbing;
pub mod poly;
pub mod surface;

pub use error::{Error, Result};

/// Lawrence–Krammer entries with machine-width coefficients.
pub type LkPoly = poly::LaurentPoly2<i128>;
/// Lawrence–Krammer entries with arbitrary-precision coefficients.
pub type LkPolyBig = poly::LaurentPoly2<num_bigint::BigInt>;
pub type LkMatrixI128 = braid::LkMatrix<i128>;
pub type LkMatrixBig = braid::LkMatrix<num_bigint::BigInt>;
