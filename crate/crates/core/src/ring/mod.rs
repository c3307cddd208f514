//! Exact sparse polynomial rings.
//!
//! Three concrete rings carry the computation: `Q[v, w1, w2]` for Chern
//! classes on the surface family, `Q[v, w1, w2, e]` on the blown-up fiber
//! square, and the polynomial ring in the y-symbols for classes on the base.

mod json;
mod monomial;
mod poly;
mod ysym;

pub use json::MonomialJson;
pub use monomial::{
    Alphabet, BlowupMonomial, BlowupVars, ChernMonomial, ChernVars, Exponents, Monomial, PlaneVars,
    RootVars, SurfaceVars, E, MAX_VARS, V, W1, W2,
};
pub use poly::{Poly, WeightedDegree};
pub use ysym::{lift_base, lift_scalars, mixed_push, y_push, YMonomial, YSymbol};

use crate::scalar::{Rational, Ring};

pub type Polynomial = Poly<ChernMonomial, Rational>;
pub type EPolynomial = Poly<BlowupMonomial, Rational>;
pub type YPolynomial = Poly<YMonomial, Rational>;
/// Polynomials in `v, w1, w2` whose coefficients are classes on the base.
pub type MixedPolynomial = Poly<ChernMonomial, YPolynomial>;
/// Polynomials in the intersection numbers `L^2, LK, K^2, c2`.
pub type SurfacePolynomial = Poly<Exponents<SurfaceVars>, Rational>;
/// Polynomials in the plane-curve degree `d`.
pub type DPolynomial = Poly<Exponents<PlaneVars>, Rational>;

/// The class `y(a,b,c)`, or zero when its grade is negative.
pub fn y<R: Ring>(a: u16, b: u16, c: u16) -> Poly<YMonomial, R> {
    let s = YSymbol::new(a, b, c);
    if s.grade() < 0 {
        return num_traits::Zero::zero();
    }
    Poly::term(YMonomial::symbol(s), R::one())
}

/// Includes `Q[v, w1, w2]` into `Q[v, w1, w2, e]`.
pub fn to_blowup<R: Ring>(p: &Poly<ChernMonomial, R>) -> Poly<BlowupMonomial, R> {
    p.map_linear(|m| Some((m.embed(), R::one())))
}
