//! The universal polynomials `b_s`, `a_s` and the node polynomial.
//!
//! `b_1 = x_2` and, for `k >= 1`,
//!
//! ```text
//! b_{k+1} = P_k(Q(2; b)) x_2
//!         - k!/(k-3)! P_{k-3}(Q(3; b)) x_3
//!         + k!/(k-7)! P_{k-7}(Q(4; b)) x_4
//!         + [k = 7] 7! C x_4
//! ```
//!
//! where `Q(i; b)` is the argument list `q_apply(i, b_1), q_apply(i, b_2), ...`
//! and terms with a negative Bell index are absent. The last term is the
//! quadruple-point correction needed for eight nodes: the naive Bell count of
//! 7-nodal curves on the once-blown-up family undercounts by `C [X_4]`. Then `a_s = y_push(b_s)`
//! and the class of `r`-nodal curves is `P_r(a_1, ..., a_r) / r!`.
//!
//! Validity: the result counts `r`-nodal fibers only for families that are
//! suitably generic (no unexpected singularities in codimension `<= r`, and for
//! `r = 8` a stronger genericity along the quadruple-point locus). Nothing here
//! checks that; the polynomial is computed unconditionally.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::bell::{bell, bell_all};
use crate::blowup::q_apply;
use crate::chern::x_class;
use crate::error::{Error, Result};
use crate::ring::{lift_base, lift_scalars, mixed_push, y_push, MixedPolynomial, Polynomial, YPolynomial};
use crate::scalar::{big_factorial, factorial, Rational, Ring};
use crate::R_MAX;

/// Default value of the quadruple-point correction constant.
pub const DEFAULT_CORRECTION: i64 = 3280;

#[derive(Clone, Debug, PartialEq)]
pub struct EngineConfig {
    pub r_max: usize,
    pub correction: Rational,
    pub correction_enabled: bool,
}

impl EngineConfig {
    pub fn new(r_max: usize) -> Result<Self> {
        let config = EngineConfig {
            r_max,
            correction: Rational::from_integer(DEFAULT_CORRECTION.into()),
            correction_enabled: true,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_correction(mut self, c: Rational) -> Self {
        self.correction = c;
        self
    }

    pub fn without_correction(mut self) -> Self {
        self.correction_enabled = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=R_MAX).contains(&self.r_max) {
            return Err(Error::NodeCountOutOfRange(self.r_max));
        }
        Ok(())
    }

    /// The correction actually applied, zero when disabled.
    pub fn effective_correction(&self) -> Rational {
        if self.correction_enabled {
            self.correction.clone()
        } else {
            Rational::zero()
        }
    }
}

/// The classes `x_2, x_3, x_4`.
pub fn loci() -> &'static [Polynomial; 3] {
    static LOCI: OnceLock<[Polynomial; 3]> = OnceLock::new();
    LOCI.get_or_init(|| {
        [2, 3, 4].map(|i| x_class(i).expect("x_2, x_3, x_4 are supported"))
    })
}

fn locus(i: usize) -> &'static Polynomial {
    &loci()[i - 2]
}

/// `n! / (n - k)!`.
fn falling(n: usize, k: usize) -> i64 {
    (n - k + 1..=n).product::<usize>() as i64
}

/// `b_1, ..., b_{r_max}` in `Q[v, w1, w2]`.
pub fn compute_b(config: &EngineConfig) -> Result<Vec<Polynomial>> {
    config.validate()?;
    let (x2, x3, x4) = (locus(2), locus(3), locus(4));
    let mut b = vec![x2.clone()];
    let mut q: [Vec<Polynomial>; 3] = Default::default();
    for k in 1..config.r_max {
        for (i, args) in q.iter_mut().enumerate() {
            args.push(q_apply(i as u32 + 2, &b[k - 1]));
        }
        let mut next = &bell(k, &q[0]) * x2;
        if k >= 3 {
            next = &next - &(&bell(k - 3, &q[1]) * x3).scale_i64(falling(k, 3));
        }
        if k >= 7 {
            next = &next + &(&bell(k - 7, &q[2]) * x4).scale_i64(falling(k, 7));
        }
        if k == 7 {
            let c = config.effective_correction() * Rational::from_integer(big_factorial(7));
            next = &next + &x4.scale(&c);
        }
        b.push(next);
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniversalResult {
    pub config: EngineConfig,
    /// `b_1, ..., b_{r_max}`; `b_s` has weighted degree `s + 2`.
    pub b: Vec<Polynomial>,
    /// `a_s = y_push(b_s)`, of grade `s`.
    pub a: Vec<YPolynomial>,
    /// `node_polys[r - 1] = P_r(a) / r!` for `r = 1..=r_max`.
    pub node_polys: Vec<YPolynomial>,
}

impl UniversalResult {
    pub fn r_max(&self) -> usize {
        self.config.r_max
    }

    /// `P_{r_max}(a) / r_max!`.
    pub fn node_poly(&self) -> &YPolynomial {
        self.node_polys.last().expect("r_max >= 1")
    }

    /// `P_r(a) / r!` for `1 <= r <= r_max`.
    pub fn node_poly_for(&self, r: usize) -> Result<&YPolynomial> {
        if r == 0 || r > self.r_max() {
            return Err(Error::NodeCountOutOfRange(r));
        }
        Ok(&self.node_polys[r - 1])
    }
}

pub fn compute_universal(config: &EngineConfig) -> Result<UniversalResult> {
    let b = compute_b(config)?;
    let a: Vec<YPolynomial> = b.iter().map(y_push).collect();
    let node_polys = bell_all(config.r_max, &a)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(r, p)| p.scale(&Rational::new(1.into(), big_factorial(r as u64))))
        .collect();
    Ok(UniversalResult {
        config: config.clone(),
        b,
        a,
        node_polys,
    })
}

/// Checks, in the mixed ring, that the Bell form agrees with the geometric
/// recursion over the induced families:
///
/// ```text
/// P_r(a) = sum_{i=2..4} (-1)^i (r-1)!/r_i! push(P_{r_i}(a + Q(i; b)) x_i)
///          + [r = 8] 7! C y_push(x_4),        r_i = r - i(i+1)/2 + 2
/// ```
///
/// Terms with `r_i < 0` vanish and `P_0 = 1`. `b` must hold at least `r`
/// entries.
pub fn recursion_selfcheck(r: usize, config: &EngineConfig, b: &[Polynomial]) -> Result<bool> {
    if !(1..=R_MAX).contains(&r) {
        return Err(Error::NodeCountOutOfRange(r));
    }
    if b.len() < r {
        return Err(Error::NodeCountOutOfRange(r));
    }
    let a: Vec<YPolynomial> = b[..r].iter().map(y_push).collect();
    let lhs = bell(r, &a);

    let mut rhs = YPolynomial::zero();
    for i in 2..=4usize {
        let ri = r as i64 - (i * (i + 1) / 2) as i64 + 2;
        if ri < 0 {
            continue;
        }
        let ri = ri as usize;
        let args: Vec<MixedPolynomial> = (0..ri)
            .map(|s| &lift_base(&a[s]) + &lift_scalars(&q_apply(i as u32, &b[s])))
            .collect();
        let pushed = mixed_push(&(&bell(ri, &args) * &lift_scalars(locus(i))));
        let factor = (factorial(r as u64 - 1) / factorial(ri as u64)) as i64;
        let sign = if i % 2 == 0 { 1 } else { -1 };
        rhs = &rhs + &pushed.scale_i64(sign * factor);
    }
    if r == 8 {
        let c = config.effective_correction() * Rational::from_integer(big_factorial(7));
        rhs = &rhs + &y_push(locus(4)).scale(&c);
    }
    Ok(lhs == rhs)
}
