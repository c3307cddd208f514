use std::fmt::{self, Debug};
use std::hash::Hash;
use std::marker::PhantomData;

/// Largest alphabet an [`Exponents`] vector can carry.
pub const MAX_VARS: usize = 8;

/// A commutative monoid of monomials with a weighted grading.
///
/// `Ord` fixes the canonical term order of every polynomial built on top.
pub trait Monomial: Clone + Ord + Hash + Debug + Send + Sync {
    fn one() -> Self;

    fn mul(&self, rhs: &Self) -> Self;

    fn weighted_degree(&self) -> i64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Plain-text rendering, `None` for the unit monomial.
    fn text(&self) -> Option<String>;

    fn latex(&self) -> Option<String>;
}

/// A finite, named set of graded variables.
pub trait Alphabet: Copy + Ord + Hash + Debug + Default + Send + Sync + 'static {
    const NAMES: &'static [&'static str];
    const LATEX: &'static [&'static str];
    const WEIGHTS: &'static [i64];

    fn len() -> usize {
        Self::NAMES.len()
    }

    fn index_of(name: &str) -> Option<usize> {
        Self::NAMES.iter().position(|n| *n == name)
    }
}

/// Exponent vector over the alphabet `A`, ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents<A: Alphabet> {
    exps: [u16; MAX_VARS],
    _alphabet: PhantomData<A>,
}

impl<A: Alphabet> Exponents<A> {
    pub fn new(exps: &[u16]) -> Self {
        assert!(
            exps.len() <= A::len(),
            "{} exponents for a {}-letter alphabet",
            exps.len(),
            A::len()
        );
        let mut out = [0u16; MAX_VARS];
        out[..exps.len()].copy_from_slice(exps);
        Exponents {
            exps: out,
            _alphabet: PhantomData,
        }
    }

    pub fn var(index: usize) -> Self {
        assert!(index < A::len());
        let mut out = Self::one();
        out.exps[index] = 1;
        out
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..A::len()]
    }

    /// Reinterprets the exponents in another alphabet with at least as many
    /// letters (e.g. `v,w1,w2` inside `v,w1,w2,e`).
    pub fn embed<B: Alphabet>(&self) -> Exponents<B> {
        debug_assert!(B::len() >= A::len());
        Exponents::new(self.exponents())
    }

    /// Drops trailing letters; `None` if any dropped exponent is nonzero.
    pub fn restrict<B: Alphabet>(&self) -> Option<Exponents<B>> {
        if self.exps[B::len()..].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Exponents::new(&self.exps[..B::len()]))
    }
}

impl<A: Alphabet> Debug for Exponents<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

impl<A: Alphabet> Monomial for Exponents<A> {
    fn one() -> Self {
        Exponents {
            exps: [0; MAX_VARS],
            _alphabet: PhantomData,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (e, r) in out.exps.iter_mut().zip(rhs.exps.iter()) {
            *e += r;
        }
        out
    }

    fn weighted_degree(&self) -> i64 {
        self.exponents()
            .iter()
            .zip(A::WEIGHTS)
            .map(|(&e, w)| e as i64 * w)
            .sum()
    }

    fn text(&self) -> Option<String> {
        let parts: Vec<String> = self
            .exponents()
            .iter()
            .zip(A::NAMES)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| match e {
                1 => name.to_string(),
                _ => format!("{name}^{e}"),
            })
            .collect();
        (!parts.is_empty()).then(|| parts.join("*"))
    }

    fn latex(&self) -> Option<String> {
        let parts: Vec<String> = self
            .exponents()
            .iter()
            .zip(A::LATEX)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| match e {
                1 => name.to_string(),
                _ => format!("{name}^{{{e}}}"),
            })
            .collect();
        (!parts.is_empty()).then(|| parts.join(" "))
    }
}

macro_rules! alphabet {
    ($(#[$doc:meta])* $name:ident, [$($var:literal),*], [$($tex:literal),*], [$($w:literal),*]) => {
        $(#[$doc])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
        pub struct $name;

        impl Alphabet for $name {
            const NAMES: &'static [&'static str] = &[$($var),*];
            const LATEX: &'static [&'static str] = &[$($tex),*];
            const WEIGHTS: &'static [i64] = &[$($w),*];
        }
    };
}

alphabet!(
    /// `v = c1(O(D))`, `w1, w2` the relative Chern classes of the cotangent bundle.
    ChernVars,
    ["v", "w1", "w2"],
    ["v", "w_1", "w_2"],
    [1, 1, 2]
);
alphabet!(
    /// Chern variables plus the exceptional class `e` of the diagonal blowup.
    BlowupVars,
    ["v", "w1", "w2", "e"],
    ["v", "w_1", "w_2", "e"],
    [1, 1, 2, 1]
);
alphabet!(
    /// Formal Chern roots of the cotangent bundle, plus `v`.
    RootVars,
    ["alpha", "beta", "v"],
    ["\\alpha", "\\beta", "v"],
    [1, 1, 1]
);
alphabet!(
    /// The four intersection numbers of a polarized surface.
    SurfaceVars,
    ["L2", "LK", "K2", "c2"],
    ["L^2", "LK", "K^2", "c_2"],
    [1, 1, 1, 1]
);
alphabet!(
    /// Degree of a plane curve.
    PlaneVars,
    ["d"],
    ["d"],
    [1]
);

pub const V: usize = 0;
pub const W1: usize = 1;
pub const W2: usize = 2;
pub const E: usize = 3;

pub type ChernMonomial = Exponents<ChernVars>;
pub type BlowupMonomial = Exponents<BlowupVars>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_degree_is_additive() {
        let a = ChernMonomial::new(&[1, 2, 3]);
        let b = ChernMonomial::new(&[0, 1, 1]);
        assert_eq!(a.weighted_degree(), 9);
        assert_eq!(a.mul(&b).weighted_degree(), 9 + 3);
    }

    #[test]
    fn lexicographic_order() {
        let mut monos = [
            ChernMonomial::new(&[1, 0, 1]),
            ChernMonomial::new(&[3, 0, 0]),
            ChernMonomial::new(&[2, 1, 0]),
        ];
        monos.sort();
        assert_eq!(monos[0].exponents(), &[1, 0, 1]);
        assert_eq!(monos[2].exponents(), &[3, 0, 0]);
    }

    #[test]
    fn embed_and_restrict() {
        let m = ChernMonomial::new(&[2, 0, 1]);
        let e: BlowupMonomial = m.embed();
        assert_eq!(e.exponents(), &[2, 0, 1, 0]);
        assert_eq!(e.restrict::<ChernVars>(), Some(m));
        assert_eq!(BlowupMonomial::var(E).restrict::<ChernVars>(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(ChernMonomial::new(&[2, 1, 0]).text().unwrap(), "v^2*w1");
        assert_eq!(ChernMonomial::new(&[2, 1, 0]).latex().unwrap(), "v^{2} w_1");
        assert_eq!(ChernMonomial::one().text(), None);
    }
}
