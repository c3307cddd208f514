//! Chern classes of the principal-parts bundles `P^{i-1}(D)`.
//!
//! `P^{i-1}(D)` is filtered with graded pieces `Sym^j Omega ⊗ O(D)` for
//! `j < i`. Each piece is handled through formal roots `alpha, beta` of the
//! relative cotangent bundle and then rewritten in `w1 = alpha + beta`,
//! `w2 = alpha * beta`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Exponents, Poly, Polynomial, RootVars, WeightedDegree};
use crate::scalar::{binomial, Rational};

pub type RootPolynomial = Poly<Exponents<RootVars>, Rational>;

pub const ALPHA: usize = 0;
pub const BETA: usize = 1;
pub const ROOT_V: usize = 2;

/// Total Chern class split by degree: `c_0 = 1, c_1, ..., c_rank`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernVector(Vec<Polynomial>);

impl ChernVector {
    /// Splits a total class into graded pieces up to `rank`.
    pub fn from_total(total: &Polynomial, rank: usize) -> Self {
        ChernVector((0..=rank).map(|k| total.graded_part(k as i64)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.0
    }

    pub fn get(&self, k: usize) -> Polynomial {
        self.0.get(k).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn top(&self) -> &Polynomial {
        self.0.last().expect("ChernVector is never empty")
    }

    pub fn total(&self) -> Polynomial {
        self.0.iter().fold(Polynomial::zero(), |acc, c| acc + c)
    }

    /// Whitney product of total classes, truncated at the summed rank.
    pub fn whitney(&self, other: &ChernVector) -> ChernVector {
        let rank = self.rank() + other.rank();
        let mut out = vec![Polynomial::zero(); rank + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ChernVector(out)
    }
}

/// `prod_{k=0}^{j} (1 + k alpha + (j - k) beta + v)` in the root alphabet.
pub fn sym_twist_roots(j: u32) -> RootPolynomial {
    let one = RootPolynomial::one();
    let alpha = RootPolynomial::var(ALPHA);
    let beta = RootPolynomial::var(BETA);
    let v = RootPolynomial::var(ROOT_V);
    (0..=j).fold(one.clone(), |acc, k| {
        let factor = &one + &(&(&alpha.scale(&Rational::from_integer(k.into()))
            + &beta.scale(&Rational::from_integer((j - k).into())))
            + &v);
        &acc * &factor
    })
}

/// Rewrites a polynomial symmetric in `alpha, beta` in terms of
/// `w1 = alpha + beta`, `w2 = alpha beta`. Fails on non-symmetric input.
pub fn symmetrize(p: &RootPolynomial) -> Option<Polynomial> {
    let e1 = &RootPolynomial::var(ALPHA) + &RootPolynomial::var(BETA);
    let e2 = &RootPolynomial::var(ALPHA) * &RootPolynomial::var(BETA);
    let mut rest = p.clone();
    let mut out = Polynomial::zero();
    // Peel off the lex-leading term alpha^p beta^q v^s (p >= q if symmetric)
    // with w1^(p-q) w2^q v^s.
    loop {
        let lead = rest.terms().next_back().map(|(m, c)| (*m, c.clone()));
        let Some((m, c)) = lead else { break };
        let (a, b, s) = (m.exponent(ALPHA), m.exponent(BETA), m.exponent(ROOT_V));
        if a < b {
            return None;
        }
        let roots = &(&e1.pow((a - b) as u32) * &e2.pow(b as u32))
            * &RootPolynomial::var(ROOT_V).pow(s as u32);
        rest = &rest - &roots.scale(&c);
        out.add_term(Exponents::new(&[s, a - b, b]), &c);
    }
    Some(out)
}

/// Total Chern class of `Sym^j Omega ⊗ O(D)`, rank `j + 1`.
pub fn chern_sym_twist(j: u32) -> ChernVector {
    let total = symmetrize(&sym_twist_roots(j)).expect("product over roots is symmetric");
    ChernVector::from_total(&total, j as usize + 1)
}

/// Total Chern class of `P^{i-1}(D)`, rank `i(i+1)/2`, expanded over all
/// roots of the filtration at once.
pub fn chern_pp(i: u32) -> ChernVector {
    assert!(i >= 1, "principal parts need i >= 1");
    let roots = (0..i).fold(RootPolynomial::one(), |acc, j| &acc * &sym_twist_roots(j));
    let total = symmetrize(&roots).expect("product over roots is symmetric");
    ChernVector::from_total(&total, pp_rank(i))
}

/// Rank of `P^{i-1}(D)`.
pub fn pp_rank(i: u32) -> usize {
    binomial(i as u64 + 1, 2) as usize
}

/// Class `x_i` of the locus of points of multiplicity `>= i`, the top Chern
/// class of `P^{i-1}(D)`. Only `i = 2, 3, 4` enter the computation for
/// `r <= 8`.
pub fn x_class(i: u32) -> Result<Polynomial> {
    if !(2..=4).contains(&i) {
        return Err(Error::UnsupportedLocus(i as usize));
    }
    let top = chern_pp(i).top().clone();
    debug_assert_eq!(top.weighted_degree(), WeightedDegree::Homogeneous(pp_rank(i) as i64));
    Ok(top)
}

/// Substitutes `w1 -> alpha + beta`, `w2 -> alpha beta` (the inverse of
/// [`symmetrize`]).
pub fn to_roots(p: &Polynomial) -> RootPolynomial {
    let alpha = RootPolynomial::var(ALPHA);
    let beta = RootPolynomial::var(BETA);
    p.substitute(
        |c| RootPolynomial::constant(c.clone()),
        &[RootPolynomial::var(ROOT_V), &alpha + &beta, &alpha * &beta],
    )
}
