use std::fmt;

use num_traits::Zero;

use super::monomial::{ChernMonomial, Monomial, V, W1, W2};
use super::poly::Poly;
use crate::scalar::Ring;

/// The pushed-down class `y(a,b,c)` of `v^a w1^b w2^c` from the surface
/// family to its base.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YSymbol {
    pub a: u16,
    pub b: u16,
    pub c: u16,
}

impl YSymbol {
    pub fn new(a: u16, b: u16, c: u16) -> Self {
        YSymbol { a, b, c }
    }

    /// Codimension on the base: `a + b + 2c - 2`.
    pub fn grade(&self) -> i64 {
        self.a as i64 + self.b as i64 + 2 * self.c as i64 - 2
    }

    pub fn from_monomial(m: &ChernMonomial) -> Self {
        YSymbol::new(m.exponent(V), m.exponent(W1), m.exponent(W2))
    }
}

impl fmt::Debug for YSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y({},{},{})", self.a, self.b, self.c)
    }
}

/// A commutative product of y-symbols, stored as a sorted multiset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YMonomial(Vec<YSymbol>);

impl YMonomial {
    pub fn new(mut symbols: Vec<YSymbol>) -> Self {
        symbols.sort_unstable();
        YMonomial(symbols)
    }

    pub fn symbol(s: YSymbol) -> Self {
        YMonomial(vec![s])
    }

    pub fn symbols(&self) -> &[YSymbol] {
        &self.0
    }

    /// Groups repeated symbols: `(symbol, multiplicity)` in canonical order.
    pub fn powers(&self) -> Vec<(YSymbol, u32)> {
        let mut out: Vec<(YSymbol, u32)> = Vec::new();
        for s in &self.0 {
            match out.last_mut() {
                Some((t, k)) if t == s => *k += 1,
                _ => out.push((*s, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text().unwrap_or_else(|| "1".into()))
    }
}

impl Monomial for YMonomial {
    fn one() -> Self {
        YMonomial(Vec::new())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        while i < self.0.len() && j < rhs.0.len() {
            if self.0[i] <= rhs.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(rhs.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        YMonomial(out)
    }

    fn weighted_degree(&self) -> i64 {
        self.0.iter().map(YSymbol::grade).sum()
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn text(&self) -> Option<String> {
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(s, k)| match k {
                1 => format!("y({},{},{})", s.a, s.b, s.c),
                _ => format!("y({},{},{})^{k}", s.a, s.b, s.c),
            })
            .collect();
        (!parts.is_empty()).then(|| parts.join("*"))
    }

    fn latex(&self) -> Option<String> {
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(s, k)| match k {
                1 => format!("y({},{},{})", s.a, s.b, s.c),
                _ => format!("y({},{},{})^{{{k}}}", s.a, s.b, s.c),
            })
            .collect();
        (!parts.is_empty()).then(|| parts.join(" "))
    }
}

/// Maps `v^a w1^b w2^c` to `y(a,b,c)`; monomials of negative grade vanish.
pub fn y_push<R: Ring>(p: &Poly<ChernMonomial, R>) -> Poly<YMonomial, R> {
    p.map_linear(|m| {
        let s = YSymbol::from_monomial(m);
        (s.grade() >= 0).then(|| (YMonomial::symbol(s), R::one()))
    })
}

/// Pushes down a polynomial in `v, w1, w2` whose coefficients are already
/// classes pulled back from the base (projection formula).
pub fn mixed_push<R: Ring>(m: &Poly<ChernMonomial, Poly<YMonomial, R>>) -> Poly<YMonomial, R> {
    let mut out = Poly::<YMonomial, R>::zero();
    for (mono, coeff) in m.terms() {
        let s = YSymbol::from_monomial(mono);
        if s.grade() < 0 {
            continue;
        }
        out.add_assign_ref(&coeff.mul_monomial(&YMonomial::symbol(s), &R::one()));
    }
    out
}

/// Embeds a polynomial with scalar coefficients into the mixed ring.
pub fn lift_scalars<R: Ring>(p: &Poly<ChernMonomial, R>) -> Poly<ChernMonomial, Poly<YMonomial, R>> {
    p.map_coeffs(|c| Poly::constant(c.clone()))
}

/// Embeds a pulled-back base class into the mixed ring.
pub fn lift_base<R: Ring>(y: &Poly<YMonomial, R>) -> Poly<ChernMonomial, Poly<YMonomial, R>> {
    Poly::constant(y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Polynomial, YPolynomial};
    use crate::scalar::rat;

    fn v() -> Polynomial {
        Polynomial::var(V)
    }
    fn w1() -> Polynomial {
        Polynomial::var(W1)
    }
    fn w2() -> Polynomial {
        Polynomial::var(W2)
    }
    fn y(a: u16, b: u16, c: u16) -> YPolynomial {
        YPolynomial::term(YMonomial::symbol(YSymbol::new(a, b, c)), rat(1, 1))
    }

    #[test]
    fn y_push_examples() {
        let x2 = v().pow(3) + &v().pow(2) * &w1() + &v() * &w2();
        assert_eq!(y_push(&x2), y(3, 0, 0) + y(2, 1, 0) + y(1, 0, 1));
        assert!(y_push(&v()).is_zero());
        assert_eq!(y_push(&w2().pow(2).scale(&rat(5, 1))), y(0, 0, 2).scale(&rat(5, 1)));
    }

    #[test]
    fn mixed_push_examples() {
        let m = &lift_scalars(&v().pow(3)) * &lift_base(&y(3, 0, 0));
        assert_eq!(mixed_push(&m), y(3, 0, 0).pow(2));

        let junk = &lift_scalars(&v()) * &lift_base(&(y(3, 0, 0) + y(0, 0, 4)));
        assert!(mixed_push(&junk).is_zero());

        let m = lift_scalars(&(v().pow(3) + w2().pow(2)));
        assert_eq!(mixed_push(&m), y(3, 0, 0) + y(0, 0, 2));
    }

    #[test]
    fn y_monomial_grading_and_order() {
        let m = YMonomial::new(vec![YSymbol::new(1, 0, 1), YSymbol::new(3, 0, 0), YSymbol::new(1, 0, 1)]);
        assert_eq!(m.weighted_degree(), 3);
        assert_eq!(m.text().unwrap(), "y(1,0,1)^2*y(3,0,0)");
        let n = YMonomial::symbol(YSymbol::new(2, 1, 0));
        assert_eq!(m.mul(&n), n.mul(&m));
        assert_eq!(m.mul(&n).symbols().len(), 4);
    }
}
