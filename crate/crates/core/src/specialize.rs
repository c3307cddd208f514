//! Evaluation of universal polynomials on a fixed polarized surface.
//!
//! For the linear system `|L|` on a surface `S`, take `v = l + eta` with `l`
//! from `S` and `eta` the hyperplane class of the parameter space, `w1 = K`,
//! `w2 = c2(S)`. Pushing `v^a w1^b w2^c` to the base keeps the part of
//! `S`-degree two, so with `p = 2 - b - 2c`:
//!
//! ```text
//! y(a,b,c) = C(a, p) * m(p, b, c) * eta^(a+b+2c-2),  0 <= p <= a
//! m(2,0,0) = L^2, m(1,1,0) = LK, m(0,2,0) = K^2, m(0,0,1) = c2
//! ```
//!
//! and zero otherwise. A monomial of grade `r` then contributes the product of
//! its symbol values to the number of `r`-nodal curves through `r` general
//! points-worth of conditions.

use std::collections::HashMap;
use std::ops::Add;

use num_bigint::BigInt;

use crate::engine::loci;
use crate::error::{Error, Result};
use crate::ring::{y_push, DPolynomial, SurfacePolynomial, YPolynomial, YSymbol};
use crate::scalar::{as_integer, binomial, QAlgebra, Rational, Ring};

/// The intersection numbers `(L^2, LK, K^2, c2)` of a polarized surface,
/// numeric or symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceSpec<R> {
    pub l2: R,
    pub lk: R,
    pub k2: R,
    pub c2: R,
}

impl<R: QAlgebra> SurfaceSpec<R> {
    pub fn new(l2: R, lk: R, k2: R, c2: R) -> Self {
        SurfaceSpec { l2, lk, k2, c2 }
    }

    fn m(&self, p: i64, b: u16, c: u16) -> R {
        match (p, b, c) {
            (2, 0, 0) => self.l2.clone(),
            (1, 1, 0) => self.lk.clone(),
            (0, 2, 0) => self.k2.clone(),
            (0, 0, 1) => self.c2.clone(),
            _ => unreachable!("p + b + 2c = 2 has only four solutions"),
        }
    }
}

impl SurfaceSpec<Rational> {
    pub fn numeric(l2: i64, lk: i64, k2: i64, c2: i64) -> Self {
        let q = |n: i64| Rational::from_integer(n.into());
        SurfaceSpec::new(q(l2), q(lk), q(k2), q(c2))
    }

    /// `O(d)` on the plane: `L^2 = d^2, LK = -3d, K^2 = 9, c2 = 3`.
    pub fn plane(d: i64) -> Self {
        Self::numeric(d * d, -3 * d, 9, 3)
    }
}

impl SurfaceSpec<DPolynomial> {
    /// The plane with `d` left as an indeterminate.
    pub fn plane_symbolic() -> Self {
        let d = DPolynomial::var(0);
        SurfaceSpec::new(
            d.pow(2),
            d.scale_i64(-3),
            DPolynomial::from_i64(9),
            DPolynomial::from_i64(3),
        )
    }
}

impl SurfaceSpec<SurfacePolynomial> {
    /// The four intersection numbers as free variables.
    pub fn generic() -> Self {
        SurfaceSpec::new(
            SurfacePolynomial::var(0),
            SurfacePolynomial::var(1),
            SurfacePolynomial::var(2),
            SurfacePolynomial::var(3),
        )
    }
}

/// Direct sum: the intersection numbers add.
impl<R: QAlgebra> Add for &SurfaceSpec<R> {
    type Output = SurfaceSpec<R>;

    fn add(self, rhs: &SurfaceSpec<R>) -> SurfaceSpec<R> {
        let sum = |x: &R, y: &R| {
            let mut s = x.clone();
            s.add_assign_ref(y);
            s
        };
        SurfaceSpec::new(
            sum(&self.l2, &rhs.l2),
            sum(&self.lk, &rhs.lk),
            sum(&self.k2, &rhs.k2),
            sum(&self.c2, &rhs.c2),
        )
    }
}

/// Value of `y(a,b,c)` on the trivial family of `spec`.
pub fn y_value<R: QAlgebra>(a: u16, b: u16, c: u16, spec: &SurfaceSpec<R>) -> Result<R> {
    if YSymbol::new(a, b, c).grade() < 0 {
        return Err(Error::NegativeGrade { a, b, c });
    }
    let p = 2 - b as i64 - 2 * c as i64;
    if p < 0 || p > a as i64 {
        return Ok(R::zero());
    }
    Ok(spec.m(p, b, c).scale_i64(binomial(a as u64, p as u64) as i64))
}

/// Substitutes [`y_value`] for every symbol of `poly`.
pub fn evaluate<R: QAlgebra>(poly: &YPolynomial, spec: &SurfaceSpec<R>) -> R {
    let mut values: HashMap<YSymbol, R> = HashMap::new();
    for (m, _) in poly.terms() {
        for s in m.symbols() {
            values
                .entry(*s)
                .or_insert_with(|| y_value(s.a, s.b, s.c, spec).expect("stored symbols have grade >= 0"));
        }
    }
    poly.evaluate(R::from_rational, |m| {
        m.symbols()
            .iter()
            .fold(R::one(), |acc, s| acc.mul_ref(&values[s]))
    })
}

/// Number of `r`-nodal curves for a numeric surface. Errors if the value is
/// not an integer, which would indicate an engine defect.
pub fn count(node_poly: &YPolynomial, spec: &SurfaceSpec<Rational>) -> Result<BigInt> {
    let value = evaluate(node_poly, spec);
    as_integer(&value).ok_or_else(|| Error::NonIntegralCount(value.to_string()))
}

/// The node polynomial as a polynomial in `L^2, LK, K^2, c2`.
pub fn goettsche_poly(node_poly: &YPolynomial) -> SurfacePolynomial {
    evaluate(node_poly, &SurfaceSpec::generic())
}

/// The node polynomial for plane curves of degree `d`, as a polynomial in `d`.
pub fn severi_poly(node_poly: &YPolynomial) -> DPolynomial {
    evaluate(node_poly, &SurfaceSpec::plane_symbolic())
}

/// Number of members of a generic 8-dimensional subsystem having an ordinary
/// quadruple point: `y_push(x_4)` specialized.
pub fn quadpoint_count<R: QAlgebra>(spec: &SurfaceSpec<R>) -> R {
    evaluate(&y_push(&loci()[2]), spec)
}

/// Smallest plane-curve degree for which the `r`-node count is expected to
/// agree with the polynomial: `ceil(r/2) + 1`.
pub fn plane_validity_threshold(r: usize) -> i64 {
    r.div_ceil(2) as i64 + 1
}

/// `true` if `(d, r)` lies in the range where the polynomial is valid.
pub fn in_validity_range(d: i64, r: usize) -> bool {
    d >= plane_validity_threshold(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{compute_universal, EngineConfig};
    use crate::ring::Exponents;
    use crate::scalar::rat;
    use num_traits::Zero;

    fn abstract_spec() -> SurfaceSpec<SurfacePolynomial> {
        SurfaceSpec::generic()
    }

    #[test]
    fn y_value_examples() {
        let s = abstract_spec();
        assert_eq!(y_value(3, 0, 0, &s).unwrap(), s.l2.scale_i64(3));
        assert!(y_value(1, 1, 1, &s).unwrap().is_zero());
        assert_eq!(y_value(2, 0, 1, &s).unwrap(), s.c2);
        assert_eq!(y_value(2, 1, 0, &s).unwrap(), s.lk.scale_i64(2));
        assert_eq!(y_value(1, 0, 0, &s), Err(Error::NegativeGrade { a: 1, b: 0, c: 0 }));
        assert_eq!(y_value(0, 0, 1, &s).unwrap(), s.c2);
    }

    #[test]
    fn first_counts() {
        let res = compute_universal(&EngineConfig::new(2).unwrap()).unwrap();
        let g = abstract_spec();
        let t1 = &(&g.l2.scale_i64(3) + &g.lk.scale_i64(2)) + &g.c2;
        assert_eq!(goettsche_poly(&res.node_polys[0]), t1);

        let a2 = evaluate(&res.a[1], &g);
        let expected_a2 = SurfacePolynomial::from_terms([
            (Exponents::new(&[1, 0, 0, 0]), rat(-42, 1)),
            (Exponents::new(&[0, 1, 0, 0]), rat(-39, 1)),
            (Exponents::new(&[0, 0, 1, 0]), rat(-6, 1)),
            (Exponents::new(&[0, 0, 0, 1]), rat(-7, 1)),
        ]);
        assert_eq!(a2, expected_a2);
        assert_eq!(goettsche_poly(&res.node_polys[1]), (t1.pow(2) + a2).scale(&rat(1, 2)));

        let d = DPolynomial::var(0);
        let one = DPolynomial::from_i64(1);
        assert_eq!(severi_poly(&res.node_polys[0]), (&d - &one).pow(2).scale_i64(3));
        assert_eq!(count(&res.node_polys[0], &SurfaceSpec::plane(3)).unwrap(), BigInt::from(12));
        assert_eq!(count(&res.node_polys[1], &SurfaceSpec::plane(3)).unwrap(), BigInt::from(21));
        assert_eq!(count(&res.node_polys[0], &SurfaceSpec::numeric(0, 0, 0, 0)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn goettsche_degree_bound() {
        let res = compute_universal(&EngineConfig::new(4).unwrap()).unwrap();
        for (r, p) in res.node_polys.iter().enumerate() {
            let g = goettsche_poly(p);
            assert!(g.terms().all(|(m, _)| m.exponents().iter().sum::<u16>() as usize <= r + 1));
        }
    }

    #[test]
    fn x2_on_the_plane_is_the_discriminant_degree() {
        let x2 = y_push(&crate::chern::x_class(2).unwrap());
        let d = DPolynomial::var(0);
        let expected = (&d - &DPolynomial::from_i64(1)).pow(2).scale_i64(3);
        assert_eq!(evaluate(&x2, &SurfaceSpec::plane_symbolic()), expected);
        let mut oracle = crate::oracle::SeveriOracle::new();
        for (deg, n) in [(3, 12), (4, 27)] {
            assert_eq!(evaluate(&x2, &SurfaceSpec::plane(deg)), rat(n, 1));
            assert_eq!(oracle.ch_irreducible(deg as u32, 1).unwrap(), BigInt::from(n));
        }
    }

    #[test]
    fn quadpoint_plane_values() {
        // Top Chern class of P^3(O(d)) ⊗ O(1) over the plane, expanded
        // separately in explicit roots of the cotangent bundle.
        for (d, n) in [(5, 180), (6, 405), (7, 720)] {
            assert_eq!(quadpoint_count(&SurfaceSpec::plane(d)), rat(n, 1));
        }
        assert_eq!(y_push(&loci()[2]).weighted_degree(), crate::ring::WeightedDegree::Homogeneous(8));
    }

    #[test]
    fn quadpoint_zero_spec() {
        assert!(quadpoint_count(&SurfaceSpec::numeric(0, 0, 0, 0)).is_zero());
    }

    #[test]
    fn non_integral_value_is_reported() {
        let p = YPolynomial::constant(rat(1, 2));
        assert!(matches!(count(&p, &SurfaceSpec::plane(3)), Err(Error::NonIntegralCount(_))));
    }

    #[test]
    fn validity_threshold() {
        assert_eq!(plane_validity_threshold(1), 2);
        assert_eq!(plane_validity_threshold(2), 2);
        assert_eq!(plane_validity_threshold(8), 5);
        assert!(!in_validity_range(4, 8));
    }

    proptest::proptest! {
        #[test]
        fn counts_are_multiplicative_under_direct_sum(
            x in proptest::array::uniform4(-20i64..20),
            y in proptest::array::uniform4(-20i64..20),
        ) {
            let res = compute_universal(&EngineConfig::new(5).unwrap()).unwrap();
            let s1 = SurfaceSpec::numeric(x[0], x[1], x[2], x[3]);
            let s2 = SurfaceSpec::numeric(y[0], y[1], y[2], y[3]);
            let t = |s: &SurfaceSpec<Rational>, r: usize| {
                if r == 0 { rat(1, 1) } else { evaluate(&res.node_polys[r - 1], s) }
            };
            let sum = &s1 + &s2;
            for r in 1..=5 {
                let conv = (0..=r).fold(rat(0, 1), |acc, i| acc + t(&s1, r - i) * t(&s2, i));
                proptest::prop_assert_eq!(t(&sum, r), conv);
            }
        }
    }
}
