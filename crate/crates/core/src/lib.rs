//! Universal polynomials counting `r`-nodal curves in families of surfaces,
//! for `r <= 8`.
//!
//! The engine builds polynomials `b_s` in the Chern classes `v, w1, w2` of a
//! family, pushes them down to classes `a_s` on the base, and assembles the
//! node polynomial `P_r(a_1, ..., a_r) / r!` with `P_r` the complete Bell
//! polynomial. [`specialize`] evaluates it on a fixed surface and [`oracle`]
//! provides independent plane-curve counts to check it against.
//!
//! All arithmetic is generic over [`scalar::Ring`]; the aliases below pin the
//! exact-rational instantiation used throughout.

pub mod bell;
pub mod blowup;
pub mod chern;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod ring;
pub mod scalar;
pub mod specialize;

pub use error::{Error, Result};
pub use ring::{DPolynomial, EPolynomial, MixedPolynomial, Poly, Polynomial, SurfacePolynomial, YPolynomial};
pub use scalar::{QAlgebra, Rational, Ring};

/// Largest node count the engine supports.
pub const R_MAX: usize = 8;
