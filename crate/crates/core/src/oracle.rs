//! Plane-curve node counts from the Caporaso–Harris recursion.
//!
//! `N^{d,delta}(alpha, beta)` counts reduced degree-`d` plane curves with
//! `delta` nodes, not containing a fixed line `L`, with `alpha_k` contacts of
//! order `k` with `L` at fixed general points and `beta_k` at unassigned
//! points, through the appropriate number of general points. Specializing one
//! point onto `L` gives
//!
//! ```text
//! N^{d,δ}(α,β) = Σ_k k N^{d,δ}(α+e_k, β−e_k)
//!              + Σ I^{β'−β} C(α,α') C(β',β) N^{d−1,δ'}(α',β')
//! ```
//!
//! with the second sum over `α' <= α`, `β' >= β`, `Iα' + Iβ' = d − 1` and
//! `δ' = δ − (d − 1) + |β' − β|`. The Severi degree is `N^{d,δ}(0, d e_1)`.
//!
//! Irreducible counts are obtained by removing every reducible stratum, and
//! [`SeveriOracle::assemble_reducible`] puts them back together: a curve with
//! components `(d_i, δ_i)` has `Σδ_i + Σ_{i<j} d_i d_j` nodes, and the
//! `d(d+3)/2 − r` points are shared out multinomially with `d_i(d_i+3)/2 − δ_i`
//! on each component, divided by the symmetries of repeated component types.
//! For `(d, r) = (3, 2)` the only stratum is line + conic, giving
//! `7! / (2! 5!) = 21`.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::scalar::{big_factorial, binomial};

/// Memo key of the tangency recursion. `alpha[k-1]`, `beta[k-1]` hold the
/// number of order-`k` contacts; trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TangencyKey {
    pub d: u32,
    pub delta: i64,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn weight(v: &[u32]) -> u32 {
    v.iter().enumerate().map(|(k, &n)| (k as u32 + 1) * n).sum()
}

fn size(v: &[u32]) -> u32 {
    v.iter().sum()
}

impl TangencyKey {
    pub fn new(d: u32, delta: i64, alpha: Vec<u32>, beta: Vec<u32>) -> Self {
        TangencyKey {
            d,
            delta,
            alpha: trim(alpha),
            beta: trim(beta),
        }
    }

    /// Number of general points the curves pass through.
    pub fn point_conditions(&self) -> i64 {
        let d = self.d as i64;
        let genus = (d - 1) * (d - 2) / 2 - self.delta;
        2 * d + genus - 1 + size(&self.beta) as i64
    }

    fn serialize(&self) -> String {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        format!("{};{};[{}];[{}]", self.d, self.delta, join(&self.alpha), join(&self.beta))
    }

    fn parse(s: &str) -> Option<Self> {
        let mut parts = s.split(';');
        let d = parts.next()?.parse().ok()?;
        let delta = parts.next()?.parse().ok()?;
        let list = |p: &str| -> Option<Vec<u32>> {
            let inner = p.strip_prefix('[')?.strip_suffix(']')?;
            if inner.is_empty() {
                return Some(Vec::new());
            }
            inner.split(',').map(|x| x.parse().ok()).collect()
        };
        let alpha = list(parts.next()?)?;
        let beta = list(parts.next()?)?;
        if parts.next().is_some() {
            return None;
        }
        Some(TangencyKey::new(d, delta, alpha, beta))
    }
}

/// Memoized plane-curve counts.
#[derive(Clone, Debug, Default)]
pub struct SeveriOracle {
    cache: HashMap<TangencyKey, BigInt>,
    irreducible: BTreeMap<(u32, u32), BigInt>,
}

/// All vectors `g` with `Σ (k+1) g_k = n`.
fn partitions_as_vectors(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max_part.min(n)).rev() {
            if acc.len() < part as usize {
                acc.resize(part as usize, 0);
            }
            acc[part as usize - 1] += 1;
            go(n - part, part, acc, out);
            acc[part as usize - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.into_iter().map(trim).collect()
}

/// All `a'` with `0 <= a'_k <= a_k`.
fn sub_vectors(a: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &n in a {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(trim).collect()
}

fn at(v: &[u32], k: usize) -> u32 {
    v.get(k).copied().unwrap_or(0)
}

fn add_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    (0..a.len().max(b.len())).map(|k| at(a, k) + at(b, k)).collect()
}

impl SeveriOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// `N^{d,delta}(alpha, beta)`.
    pub fn tangency(&mut self, key: &TangencyKey) -> BigInt {
        if key.delta < 0 {
            return BigInt::zero();
        }
        if key.d == 0 {
            let empty = key.delta == 0 && key.alpha.is_empty() && key.beta.is_empty();
            return if empty { BigInt::one() } else { BigInt::zero() };
        }
        if weight(&key.alpha) + weight(&key.beta) != key.d {
            return BigInt::zero();
        }
        // Every component of a curve of positive degree needs at least one point.
        if key.point_conditions() <= 0 {
            return BigInt::zero();
        }
        if let Some(v) = self.cache.get(key) {
            return v.clone();
        }

        let mut total = BigInt::zero();
        for k in 0..key.beta.len() {
            if key.beta[k] == 0 {
                continue;
            }
            let mut alpha = key.alpha.clone();
            alpha.resize(alpha.len().max(k + 1), 0);
            alpha[k] += 1;
            let mut beta = key.beta.clone();
            beta[k] -= 1;
            let sub = self.tangency(&TangencyKey::new(key.d, key.delta, alpha, beta));
            total += sub * (k as u32 + 1);
        }

        let d1 = key.d - 1;
        for alpha1 in sub_vectors(&key.alpha) {
            let used = weight(&alpha1) + weight(&key.beta);
            if used > d1 {
                continue;
            }
            for extra in partitions_as_vectors(d1 - used) {
                let beta1 = add_vec(&key.beta, &extra);
                let delta1 = key.delta - d1 as i64 + size(&extra) as i64;
                if delta1 < 0 {
                    continue;
                }
                let mut coeff = BigInt::one();
                for (k, &g) in extra.iter().enumerate() {
                    coeff *= BigInt::from(k as u32 + 1).pow(g);
                }
                for (k, &a) in key.alpha.iter().enumerate() {
                    coeff *= binomial(a as u64, at(&alpha1, k) as u64);
                }
                for (k, &b) in beta1.iter().enumerate() {
                    coeff *= binomial(b as u64, at(&key.beta, k) as u64);
                }
                let sub = self.tangency(&TangencyKey::new(d1, delta1, alpha1.clone(), beta1));
                total += coeff * sub;
            }
        }
        self.cache.insert(key.clone(), total.clone());
        total
    }

    /// Severi degree: reduced degree-`d` curves with `delta` nodes through
    /// `d(d+3)/2 - delta` general points.
    pub fn severi(&mut self, d: u32, delta: u32) -> BigInt {
        if d == 0 {
            return if delta == 0 { BigInt::one() } else { BigInt::zero() };
        }
        self.tangency(&TangencyKey::new(d, delta as i64, Vec::new(), vec![d]))
    }

    /// Irreducible degree-`d` curves with `delta` nodes through
    /// `3d - 1 + g` general points, `g = C(d-1, 2) - delta`.
    pub fn ch_irreducible(&mut self, d: u32, delta: u32) -> Result<BigInt> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        if delta as u64 > binomial(d as u64 - 1, 2) {
            return Err(Error::NodesOutOfRange { d, delta });
        }
        if let Some(v) = self.irreducible.get(&(d, delta)) {
            return Ok(v.clone());
        }
        let mut value = self.severi(d, delta);
        for comps in component_multisets(d, delta as u64) {
            if comps.len() < 2 {
                continue;
            }
            value -= self.stratum(d, delta as u64, &comps)?;
        }
        self.irreducible.insert((d, delta), value.clone());
        Ok(value)
    }

    /// Contribution of curves with the given irreducible component types.
    fn stratum(&mut self, d: u32, r: u64, comps: &[(u32, u32)]) -> Result<BigInt> {
        let points = |d: u64, delta: u64| d * (d + 3) / 2 - delta;
        let mut value = big_factorial(points(d as u64, r));
        for (i, &(di, deltai)) in comps.iter().enumerate() {
            value /= big_factorial(points(di as u64, deltai as u64));
            if i > 0 && comps[i - 1] == (di, deltai) {
                continue;
            }
            let mult = comps.iter().filter(|&&c| c == (di, deltai)).count() as u64;
            value /= big_factorial(mult);
        }
        for &(di, deltai) in comps {
            value *= self.ch_irreducible(di, deltai)?;
        }
        Ok(value)
    }

    /// Reduced, possibly reducible degree-`d` curves with exactly `r` nodes
    /// through `d(d+3)/2 - r` general points, assembled from irreducible
    /// counts.
    pub fn assemble_reducible(&mut self, d: u32, r: u32) -> Result<BigInt> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut total = BigInt::zero();
        for comps in component_multisets(d, r as u64) {
            total += self.stratum(d, r as u64, &comps)?;
        }
        Ok(total)
    }

    /// Read-only lookup, for use after a warm-up phase.
    pub fn cached(&self, key: &TangencyKey) -> Option<&BigInt> {
        self.cache.get(key)
    }

    /// Canonical JSON: an object from serialized keys to decimal strings.
    pub fn to_json(&self) -> Value {
        let sorted: BTreeMap<String, String> = self
            .cache
            .iter()
            .map(|(k, v)| (k.serialize(), v.to_string()))
            .collect();
        Value::Object(sorted.into_iter().map(|(k, v)| (k, Value::String(v))).collect::<Map<_, _>>())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("oracle cache must be an object".into()))?;
        let mut cache = HashMap::with_capacity(obj.len());
        for (k, v) in obj {
            let key = TangencyKey::parse(k).ok_or_else(|| Error::Json(format!("bad cache key {k}")))?;
            let value = v
                .as_str()
                .and_then(|s| s.parse::<BigInt>().ok())
                .ok_or_else(|| Error::Json(format!("bad cache value for {k}")))?;
            cache.insert(key, value);
        }
        Ok(SeveriOracle {
            cache,
            irreducible: BTreeMap::new(),
        })
    }

    /// Loads a cache file; a missing file yields an empty oracle.
    pub fn load(path: &Path) -> Result<Self> {
        let cache_err = |msg: String| Error::Cache {
            path: path.display().to_string(),
            msg,
        };
        match fs::read_to_string(path) {
            Ok(text) => {
                let v: Value = serde_json::from_str(&text).map_err(|e| cache_err(e.to_string()))?;
                Self::from_json(&v)
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(cache_err(e.to_string())),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string(&self.to_json()).expect("cache serializes");
        fs::write(path, text).map_err(|e| Error::Cache {
            path: path.display().to_string(),
            msg: e.to_string(),
        })
    }
}

/// Multisets of irreducible component types `(d_i, delta_i)`, listed in
/// nondecreasing order, with `Σ d_i = d` and `Σ delta_i + Σ_{i<j} d_i d_j = r`.
pub fn component_multisets(d: u32, r: u64) -> Vec<Vec<(u32, u32)>> {
    fn go(
        remaining_d: u32,
        remaining_r: i64,
        min: (u32, u32),
        placed_degree: u32,
        acc: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if remaining_d == 0 {
            if remaining_r == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for di in min.0..=remaining_d {
            let start = if di == min.0 { min.1 } else { 0 };
            let max_delta = binomial(di as u64 - 1, 2) as u32;
            // New component meets everything placed so far transversally.
            let crossings = (di * placed_degree) as i64;
            for deltai in start..=max_delta {
                let left = remaining_r - crossings - deltai as i64;
                if left < 0 {
                    break;
                }
                acc.push((di, deltai));
                go(remaining_d - di, left, (di, deltai), placed_degree + di, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, r as i64, (1, 0), 0, &mut Vec::new(), &mut out);
    out
}
