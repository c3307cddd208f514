//! Pushdown calculus on the blowup of the fiber square along the diagonal.
//!
//! The exceptional class `e` satisfies `e^3 + w1 e^2 + w2 e = 0`. Under the
//! blowup, `v -> v - i e`, `w1 -> w1 + e`, `w2 -> w2 - e^2`; after reduction the
//! `e`-linear part pushes down to zero and `e^2` pushes down to `-1`, so the
//! correction to each Chern monomial is minus its `e^2` coefficient.

use num_traits::{One, Zero};

use crate::ring::{BlowupMonomial, BlowupVars, ChernVars, EPolynomial, Exponents, Monomial, Polynomial, E, V, W1, W2};
use crate::scalar::Rational;

/// The relation `e^3 + w1 e^2 + w2 e`.
pub fn e_relation() -> EPolynomial {
    let e = EPolynomial::var(E);
    e.pow(3) + &EPolynomial::var(W1) * &e.pow(2) + &EPolynomial::var(W2) * &e
}

/// Divides by the `e`-relation: returns `(quotient, remainder)` with
/// `p = quotient * relation + remainder` and `remainder` of `e`-degree `<= 2`.
pub fn e_divmod(p: &EPolynomial) -> (EPolynomial, EPolynomial) {
    let mut rem = p.clone();
    let mut quot = EPolynomial::zero();
    let w1 = BlowupMonomial::var(W1);
    let w2 = BlowupMonomial::var(W2);
    let e = BlowupMonomial::var(E);
    let e2 = e.mul(&e);
    loop {
        let top = rem
            .terms()
            .filter(|(m, _)| m.exponent(E) >= 3)
            .max_by_key(|(m, _)| m.exponent(E))
            .map(|(m, c)| (*m, c.clone()));
        let Some((m, c)) = top else { break };
        let mut exps = m.exponents().to_vec();
        exps[E] -= 3;
        let base = Exponents::new(&exps);
        rem.add_term(m, &-c.clone());
        rem.add_term(base.mul(&w1).mul(&e2), &-c.clone());
        rem.add_term(base.mul(&w2).mul(&e), &-c.clone());
        quot.add_term(base, &c);
    }
    (quot, rem)
}

/// Normal form modulo `e^3 + w1 e^2 + w2 e`.
pub fn e_reduce(p: &EPolynomial) -> EPolynomial {
    e_divmod(p).1
}

/// The coefficient of `e^k` in `p`, as a polynomial in `v, w1, w2`.
pub fn e_coefficient(p: &EPolynomial, k: u16) -> Polynomial {
    Polynomial::from_terms(p.terms().filter(|(m, _)| m.exponent(E) == k).map(|(m, c)| {
        let mut exps = m.exponents().to_vec();
        exps[E] = 0;
        (
            Exponents::<BlowupVars>::new(&exps)
                .restrict::<ChernVars>()
                .expect("e exponent cleared"),
            c.clone(),
        )
    }))
}

/// `(v - i e)^a (w1 + e)^b (w2 - e^2)^c` expanded in `Q[v, w1, w2, e]`.
pub fn blowup_substitute(i: u32, a: u16, b: u16, c: u16) -> EPolynomial {
    let ie = EPolynomial::var(E).scale(&Rational::from_integer(i.into()));
    let vv = &EPolynomial::var(V) - &ie;
    let ww1 = EPolynomial::var(W1) + EPolynomial::var(E);
    let ww2 = &EPolynomial::var(W2) - &EPolynomial::var(E).pow(2);
    &(&vv.pow(a as u32) * &ww1.pow(b as u32)) * &ww2.pow(c as u32)
}

/// `Q(i; a, b, c)`: minus the `e^2` coefficient of the reduced blowup
/// substitute of `v^a w1^b w2^c`. Weighted homogeneous of degree `a + b + 2c - 2`.
pub fn q_poly(i: u32, a: u16, b: u16, c: u16) -> Polynomial {
    if a as i64 + b as i64 + 2 * c as i64 - 2 < 0 {
        return Polynomial::zero();
    }
    -e_coefficient(&e_reduce(&blowup_substitute(i, a, b, c)), 2)
}

/// Linear extension of [`q_poly`]; lowers weighted degree by two.
pub fn q_apply(i: u32, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let [a, b, cc] = [m.exponent(V), m.exponent(W1), m.exponent(W2)];
        out = out + q_poly(i, a, b, cc).scale(c);
    }
    out
}

/// Truncated Segre series `s_0, s_1, ...` of the dual normal bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct SegreSeries(Vec<Polynomial>);

impl SegreSeries {
    pub fn new(components: Vec<Polynomial>) -> Self {
        SegreSeries(components)
    }

    /// The only case the engine needs: `s_0 = 1`, higher terms unused.
    pub fn diagonal() -> Self {
        SegreSeries(vec![Polynomial::one()])
    }

    pub fn component(&self, j: usize) -> &Polynomial {
        self.0
            .get(j)
            .unwrap_or_else(|| panic!("Segre series truncated before degree {j}"))
    }
}

/// Pushdown of `xi^k` from the exceptional divisor of a blowup along a
/// codimension-`d` center, `xi = c1(O(-E))`: equals `-s_{k-d}`, zero when `k < d`.
pub fn blowup_pushdown(k: usize, d: usize, s: &SegreSeries) -> Polynomial {
    assert!(k >= 1 && d >= 1, "blowup_pushdown needs k, d >= 1");
    if k < d {
        return Polynomial::zero();
    }
    -s.component(k - d).clone()
}

/// Pushes a class on the blowup down to the diagonal, with the diagonal
/// pushforward of `s_0` read as the identity: `e^0` terms pass through and
/// `e^k` uses `(-1)^k` times the pushdown of `xi^k` (`e = -xi`).
pub fn pushdown_to_diagonal(p: &EPolynomial, s: &SegreSeries) -> Polynomial {
    let reduced = e_reduce(p);
    let mut out = e_coefficient(&reduced, 0);
    for k in 1..=2u16 {
        let coeff = e_coefficient(&reduced, k);
        if coeff.is_zero() {
            continue;
        }
        let push = blowup_pushdown(k as usize, 2, s);
        let push = if k % 2 == 0 { push } else { -push };
        out = out + &coeff * &push;
    }
    out
}

/// Embeds a Chern polynomial with the blowup substitution applied.
pub fn pull_to_blowup(i: u32, p: &Polynomial) -> EPolynomial {
    let mut out = EPolynomial::zero();
    for (m, c) in p.terms() {
        out = out + blowup_substitute(i, m.exponent(V), m.exponent(W1), m.exponent(W2)).scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::WeightedDegree;
    use crate::scalar::rat;
    use proptest::prelude::*;

    fn v() -> Polynomial {
        Polynomial::var(V)
    }
    fn w1() -> Polynomial {
        Polynomial::var(W1)
    }
    fn w2() -> Polynomial {
        Polynomial::var(W2)
    }
    fn k(n: i64) -> Polynomial {
        Polynomial::constant(rat(n, 1))
    }
    fn e() -> EPolynomial {
        EPolynomial::var(E)
    }
    fn ew1() -> EPolynomial {
        EPolynomial::var(W1)
    }
    fn ew2() -> EPolynomial {
        EPolynomial::var(W2)
    }

    #[test]
    fn e_reduce_examples() {
        assert_eq!(e_reduce(&e().pow(3)), -(&ew1() * &e().pow(2)) - &ew2() * &e());
        let p = &EPolynomial::var(V).pow(2) * &ew2();
        assert_eq!(e_reduce(&p), p);
        // e^4 = e * (-w1 e^2 - w2 e) = -w1 e^3 - w2 e^2 -> (w1^2 - w2) e^2 + w1 w2 e
        let expected = &(ew1().pow(2) - ew2()) * &e().pow(2) + &(&ew1() * &ew2()) * &e();
        assert_eq!(e_reduce(&e().pow(4)), expected);
    }

    #[test]
    fn q_poly_examples() {
        for i in 2..=4i64 {
            let iu = i as u32;
            assert!(q_poly(iu, 0, 0, 0).is_zero());
            assert_eq!(q_poly(iu, 2, 0, 0), k(-i * i));
            assert_eq!(q_poly(iu, 1, 1, 0), k(i));
            assert_eq!(q_poly(iu, 0, 0, 1), k(1));
            assert_eq!(q_poly(iu, 3, 0, 0), v().scale(&rat(-3 * i * i, 1)) - w1().scale(&rat(i * i * i, 1)));
        }
    }

    #[test]
    fn q_apply_examples() {
        let x2 = v().pow(3) + &v().pow(2) * &w1() + &v() * &w2();
        assert_eq!(q_apply(2, &x2), v().scale(&rat(-7, 1)) - w1().scale(&rat(6, 1)));
        assert_eq!(q_poly(2, 3, 0, 0), v().scale(&rat(-12, 1)) - w1().scale(&rat(8, 1)));
        assert_eq!(q_poly(2, 2, 1, 0), v().scale(&rat(4, 1)));
        assert_eq!(q_poly(2, 1, 0, 1), v() + w1().scale(&rat(2, 1)));
        assert!(q_apply(3, &Polynomial::zero()).is_zero());
        assert_eq!(q_apply(3, &w2().scale(&rat(7, 1))), k(7));
    }

    #[test]
    fn blowup_pushdown_examples() {
        let s = SegreSeries::diagonal();
        assert!(blowup_pushdown(1, 2, &s).is_zero());
        assert_eq!(blowup_pushdown(2, 2, &s), k(-1));
        assert!(blowup_pushdown(1, 3, &s).is_zero());
    }

    #[test]
    fn q_poly_homogeneity_exhaustive() {
        for i in 2..=4 {
            for a in 0..=6 {
                for b in 0..=6 {
                    for c in 0..=3 {
                        let q = q_poly(i, a, b, c);
                        let d = a as i64 + b as i64 + 2 * c as i64 - 2;
                        match q.weighted_degree() {
                            WeightedDegree::Homogeneous(got) => assert_eq!(got, d),
                            WeightedDegree::Undefined => {}
                            WeightedDegree::Inhomogeneous => panic!("Q({i};{a},{b},{c}) inhomogeneous"),
                        }
                        if d < 0 {
                            assert!(q.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushdown_matches_q_correction() {
        let s = SegreSeries::diagonal();
        for i in 2..=4 {
            for a in 0..=5u16 {
                for b in 0..=4u16 {
                    for c in 0..=2u16 {
                        let full = blowup_substitute(i, a, b, c);
                        let mono = Polynomial::term(Exponents::new(&[a, b, c]), rat(1, 1));
                        let expected = mono + q_poly(i, a, b, c);
                        assert_eq!(pushdown_to_diagonal(&full, &s), expected, "({i};{a},{b},{c})");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn divmod_reconstructs(terms in proptest::collection::vec(((0u16..3, 0u16..3, 0u16..2, 0u16..7), -9i64..9), 0..6)) {
            let p = EPolynomial::from_terms(terms.iter().map(|&((a, b, c, d), n)| {
                (Exponents::new(&[a, b, c, d]), rat(n, 1))
            }));
            let (q, r) = e_divmod(&p);
            prop_assert!(r.terms().all(|(m, _)| m.exponent(E) <= 2));
            prop_assert_eq!(&(&q * &e_relation()) + &r, p);
            prop_assert_eq!(e_reduce(&r), r);
        }

        #[test]
        fn q_apply_is_linear(x in proptest::collection::vec(((0u16..4, 0u16..4, 0u16..3), -5i64..5), 0..5),
                             y in proptest::collection::vec(((0u16..4, 0u16..4, 0u16..3), -5i64..5), 0..5),
                             alpha in -4i64..4, beta in -4i64..4, i in 2u32..5) {
            let mk = |t: &Vec<((u16, u16, u16), i64)>| Polynomial::from_terms(
                t.iter().map(|&((a, b, c), n)| (Exponents::new(&[a, b, c]), rat(n, 1))));
            let (p, q) = (mk(&x), mk(&y));
            let lhs = q_apply(i, &(p.scale(&rat(alpha, 1)) + q.scale(&rat(beta, 1))));
            let rhs = q_apply(i, &p).scale(&rat(alpha, 1)) + q_apply(i, &q).scale(&rat(beta, 1));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
