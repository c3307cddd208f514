use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Alphabet, Exponents, Monomial};
use crate::scalar::{QAlgebra, Rational, Ring};

/// Result of asking a polynomial for its weighted degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(i64),
    Inhomogeneous,
    /// The zero polynomial has no degree.
    Undefined,
}

/// Sparse polynomial with monomials `M` and coefficients `R`.
///
/// Zero coefficients are never stored, so two equal polynomials have
/// identical term maps.
#[derive(Clone, PartialEq)]
pub struct Poly<M: Monomial, R: Ring> {
    terms: BTreeMap<M, R>,
}

impl<M: Monomial, R: Ring> Poly<M, R> {
    pub fn constant(c: R) -> Self {
        Self::term(M::one(), c)
    }

    pub fn term(m: M, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (M, R)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: M, c: &R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign_ref(c);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add_owned_term(&mut self, m: M, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign_ref(&c);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &R)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, R)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&M::one())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x.mul_ref(c))))
    }

    pub fn mul_monomial(&self, m: &M, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, x)| (n.mul(m), x.mul_ref(c))))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut degrees = self.terms.keys().map(Monomial::weighted_degree);
        match degrees.next() {
            None => WeightedDegree::Undefined,
            Some(d) if degrees.all(|e| e == d) => WeightedDegree::Homogeneous(d),
            Some(_) => WeightedDegree::Inhomogeneous,
        }
    }

    /// `true` for the zero polynomial and for polynomials of degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.weighted_degree() == d)
    }

    /// Keeps only the part of weighted degree `d`.
    pub fn graded_part(&self, d: i64) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<M, S> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Ring homomorphism into `S`, given images of coefficients and monomials.
    pub fn evaluate<S: Ring>(&self, coeff: impl Fn(&R) -> S, mono: impl Fn(&M) -> S) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            acc.add_assign_ref(&coeff(c).mul_ref(&mono(m)));
        }
        acc
    }

    /// Linear map on monomials; `f` returns `None` for monomials sent to 0.
    pub fn map_linear<N: Monomial>(&self, f: impl Fn(&M) -> Option<(N, R)>) -> Poly<N, R> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((n, k)) = f(m) {
                out.add_owned_term(n, c.mul_ref(&k));
            }
        }
        out
    }
}

impl<A: Alphabet, R: Ring> Poly<Exponents<A>, R> {
    pub fn var(index: usize) -> Self {
        Self::term(Exponents::var(index), R::one())
    }

    /// Substitutes `values[i]` for the `i`th variable.
    pub fn substitute<S: Ring>(&self, coeff: impl Fn(&R) -> S, values: &[S]) -> S {
        assert_eq!(values.len(), A::len());
        let mut powers: Vec<Vec<S>> = values.iter().map(|v| vec![S::one(), v.clone()]).collect();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_ref(&values[i]);
                    powers[i].push(next);
                }
            }
        }
        self.evaluate(coeff, |m| {
            m.exponents()
                .iter()
                .enumerate()
                .fold(S::one(), |acc, (i, &e)| acc.mul_ref(&powers[i][e as usize]))
        })
    }
}

impl<M: Monomial, R: QAlgebra> Poly<M, R> {
    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&R::from_rational(q))
    }
}

impl<M: Monomial, R: Ring> Default for Poly<M, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial, R: Ring> Zero for Poly<M, R> {
    fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<M: Monomial, R: Ring> One for Poly<M, R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<'a, M: Monomial, R: Ring> Add<&'a Poly<M, R>> for &'a Poly<M, R> {
    type Output = Poly<M, R>;

    fn add(self, rhs: &'a Poly<M, R>) -> Poly<M, R> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a, M: Monomial, R: Ring> Sub<&'a Poly<M, R>> for &'a Poly<M, R> {
    type Output = Poly<M, R>;

    fn sub(self, rhs: &'a Poly<M, R>) -> Poly<M, R> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_owned_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, M: Monomial, R: Ring> Mul<&'a Poly<M, R>> for &'a Poly<M, R> {
    type Output = Poly<M, R>;

    fn mul(self, rhs: &'a Poly<M, R>) -> Poly<M, R> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_owned_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }
}

impl<M: Monomial, R: Ring> Neg for &Poly<M, R> {
    type Output = Poly<M, R>;

    fn neg(self) -> Poly<M, R> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<M: Monomial, R: Ring> Neg for Poly<M, R> {
    type Output = Poly<M, R>;

    fn neg(mut self) -> Poly<M, R> {
        for c in self.terms.values_mut() {
            *c = -std::mem::replace(c, R::zero());
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<M: Monomial, R: Ring> $tr<Poly<M, R>> for Poly<M, R> {
            type Output = Poly<M, R>;

            fn $method(self, rhs: Poly<M, R>) -> Poly<M, R> {
                (&self).$method(&rhs)
            }
        }

        impl<'a, M: Monomial, R: Ring> $tr<&'a Poly<M, R>> for Poly<M, R> {
            type Output = Poly<M, R>;

            fn $method(self, rhs: &'a Poly<M, R>) -> Poly<M, R> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<M: Monomial, R: Ring> Add<Poly<M, R>> for Poly<M, R> {
    type Output = Poly<M, R>;

    fn add(mut self, rhs: Poly<M, R>) -> Poly<M, R> {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_owned_term(m, c);
        }
        self
    }
}

impl<'a, M: Monomial, R: Ring> Add<&'a Poly<M, R>> for Poly<M, R> {
    type Output = Poly<M, R>;

    fn add(mut self, rhs: &'a Poly<M, R>) -> Poly<M, R> {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
        self
    }
}

impl<M: Monomial, R: Ring> Ring for Poly<M, R> {
    fn from_i64(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_owned_term(m.clone(), -c.clone());
        }
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.scale(&R::from_i64(n))
    }
}

impl<M: Monomial, R: QAlgebra> QAlgebra for Poly<M, R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&R::from_rational(q))
    }
}

impl<M: Monomial, R: Ring> fmt::Debug for Poly<M, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

fn rational_text(q: &Rational, latex: bool) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn render<M: Monomial>(
    p: &Poly<M, Rational>,
    latex: bool,
    mono: impl Fn(&M) -> Option<String>,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let abs = c.abs();
        match mono(m) {
            None => out.push_str(&rational_text(&abs, latex)),
            Some(s) if abs.is_one() => out.push_str(&s),
            Some(s) if latex => out.push_str(&format!("{} {}", rational_text(&abs, true), s)),
            Some(s) => out.push_str(&format!("{}*{}", rational_text(&abs, false), s)),
        }
    }
    out
}

impl<M: Monomial> Poly<M, Rational> {
    /// Plain-text rendering, highest monomial first.
    pub fn to_text(&self) -> String {
        render(self, false, M::text)
    }

    pub fn to_latex(&self) -> String {
        render(self, true, M::latex)
    }
}

impl<M: Monomial> fmt::Display for Poly<M, Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::monomial::{BlowupVars, ChernVars, E, V, W1, W2};
    use crate::scalar::rat;

    type P = Poly<Exponents<ChernVars>, Rational>;
    type EP = Poly<Exponents<BlowupVars>, Rational>;

    fn v() -> P {
        P::var(V)
    }
    fn w1() -> P {
        P::var(W1)
    }
    fn w2() -> P {
        P::var(W2)
    }

    #[test]
    fn add_examples() {
        assert!((v() + -v()).is_zero());
        assert_eq!((&v() + &w1()) + w2(), P::from_terms([
            (Exponents::var(V), rat(1, 1)),
            (Exponents::var(W1), rat(1, 1)),
            (Exponents::var(W2), rat(1, 1)),
        ]));
        let half = v().pow(2).scale(&rat(1, 2));
        assert_eq!(&half + &half, v().pow(2));
    }

    #[test]
    fn mul_examples() {
        let p = &v() * &w2();
        assert_eq!(p.weighted_degree(), WeightedDegree::Homogeneous(3));
        let e = EP::var(E);
        let ev = EP::var(V);
        assert_eq!(&(&ev + &e) * &(&ev - &e), &ev.pow(2) - &e.pow(2));
        assert_eq!(&P::one() * &p, p);
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!((v().pow(3) + &v() * &w2()).weighted_degree(), WeightedDegree::Homogeneous(3));
        assert_eq!(w2().weighted_degree(), WeightedDegree::Homogeneous(2));
        assert_eq!((v() + w2()).weighted_degree(), WeightedDegree::Inhomogeneous);
        assert_eq!(P::zero().weighted_degree(), WeightedDegree::Undefined);
    }

    #[test]
    fn no_zero_coefficients_after_cancellation() {
        let p = &(&v() + &w1()) * &(&v() - &w1());
        let q = &p - &v().pow(2);
        assert_eq!(q.len(), 1);
        assert_eq!(q.coeff(&Exponents::new(&[0, 2, 0])), rat(-1, 1));
    }

    #[test]
    fn substitution() {
        let p = &(v().pow(2) + w2()).scale(&rat(3, 1)) - &w1();
        let val: Rational = p.substitute(|c| c.clone(), &[rat(2, 1), rat(5, 1), rat(-1, 1)]);
        assert_eq!(val, rat(3 * 4 - 3 - 5, 1));
    }

    #[test]
    fn text_and_latex() {
        let p = &(v().pow(3) + w2().scale(&rat(-1, 2))) + &P::one();
        assert_eq!(p.to_text(), "v^3 - 1/2*w2 + 1");
        assert_eq!(p.to_latex(), "v^{3} - \\frac{1}{2} w_2 + 1");
        assert_eq!(P::zero().to_text(), "0");
    }
}
