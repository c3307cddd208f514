//! Complete Bell polynomials over an arbitrary commutative ring.

use crate::scalar::{binomial, Ring};

/// All of `P_0(a), ..., P_m(a)`, where `args[k]` is `a_{k+1}`.
///
/// Uses `P_n = sum_{k<n} C(n-1, k) P_{n-1-k} a_{k+1}`. Arguments past
/// `args.len()` are taken to be zero.
pub fn bell_all<R: Ring>(m: usize, args: &[R]) -> Vec<R> {
    let mut out: Vec<R> = Vec::with_capacity(m + 1);
    out.push(R::one());
    for n in 1..=m {
        let mut acc = R::zero();
        for k in 0..n.min(args.len()) {
            if args[k].is_zero() {
                continue;
            }
            let term = out[n - 1 - k].mul_ref(&args[k]);
            let c = binomial(n as u64 - 1, k as u64) as i64;
            acc.add_assign_ref(&if c == 1 { term } else { term.scale_i64(c) });
        }
        out.push(acc);
    }
    out
}

/// The complete Bell polynomial `P_m(a_1, ..., a_m)`.
pub fn bell<R: Ring>(m: usize, args: &[R]) -> R {
    bell_all(m, args).pop().expect("bell_all is never empty")
}

/// Checks `P_m(x + y) = sum_k C(m, k) P_{m-k}(x) P_k(y)` by expansion.
pub fn bell_binomial_check<R: Ring>(m: usize, x: &[R], y: &[R]) -> bool {
    let len = x.len().max(y.len());
    let get = |v: &[R], i: usize| v.get(i).cloned().unwrap_or_else(R::zero);
    let sum: Vec<R> = (0..len).map(|i| get(x, i) + get(y, i)).collect();
    let lhs = bell(m, &sum);
    let px = bell_all(m, x);
    let py = bell_all(m, y);
    let mut rhs = R::zero();
    for k in 0..=m {
        rhs.add_assign_ref(&px[m - k].mul_ref(&py[k]).scale_i64(binomial(m as u64, k as u64) as i64));
    }
    lhs == rhs
}

/// `P_m` as a sum over set partitions of `{1..m}` of `prod a_{|block|}`.
///
/// Exponential in `m`; kept as an independent reference for small `m`.
pub fn bell_partition_sum<R: Ring>(m: usize, args: &[R]) -> R {
    // Enumerate restricted growth strings: element i joins an existing block
    // or opens block number `blocks`.
    fn go<R: Ring>(i: usize, m: usize, sizes: &mut Vec<usize>, args: &[R], acc: &mut R) {
        if i == m {
            let mut term = R::one();
            for &s in sizes.iter() {
                match args.get(s - 1) {
                    Some(a) => term = term.mul_ref(a),
                    None => return,
                }
            }
            acc.add_assign_ref(&term);
            return;
        }
        for b in 0..sizes.len() {
            sizes[b] += 1;
            go(i + 1, m, sizes, args, acc);
            sizes[b] -= 1;
        }
        sizes.push(1);
        go(i + 1, m, sizes, args, acc);
        sizes.pop();
    }
    let mut acc = R::zero();
    go(0, m, &mut Vec::new(), args, &mut acc);
    acc
}
