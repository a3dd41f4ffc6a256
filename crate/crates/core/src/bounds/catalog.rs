//! Closed-form bounds on LRC parameters, evaluated in exact integer and
//! rational arithmetic.

use num_bigint::BigInt;
use serde::Serialize;

use super::kopt::KoptProvider;
use crate::codecore::{weight, CoordSet, LinearCode};
use crate::combin::Rational;
use crate::error::{LrcError, Result};
use crate::gf::FieldElement;

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Largest d allowed by k + ceil(k/r) <= n - d + 2.
pub fn gen_singleton_d(n: usize, k: usize, r: usize) -> i64 {
    n as i64 - k as i64 - ceil_div(k as i64, r as i64) + 2
}

/// Largest k in 0..=n with k + ceil(k/r) <= n - d + 2.
pub fn gen_singleton_k(n: usize, d: usize, r: usize) -> usize {
    (0..=n)
        .rev()
        .find(|&k| gen_singleton_d(n, k, r) >= d as i64)
        .unwrap_or(0)
}

/// d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1), for k >= 1.
pub fn rdelta_singleton_d(n: usize, k: usize, r: usize, delta: usize) -> i64 {
    n as i64 - k as i64 + 1 - (ceil_div(k as i64, r as i64) - 1) * (delta as i64 - 1)
}

pub fn rdelta_singleton_k(n: usize, d: usize, r: usize, delta: usize) -> usize {
    (1..=n)
        .rev()
        .find(|&k| rdelta_singleton_d(n, k, r, delta) >= d as i64)
        .unwrap_or(0)
}

/// Meets the generalized Singleton bound with equality.
pub fn is_optimal_params(n: usize, k: usize, d: usize, r: usize) -> bool {
    k >= 1 && gen_singleton_d(n, k, r) == d as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShorteningTerm {
    pub t: usize,
    pub length: usize,
    pub kopt: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShorteningBound {
    pub k_upper: usize,
    pub t_star: usize,
    pub terms: Vec<ShorteningTerm>,
}

/// min over t of t r + k_opt(n - t (r + delta - 1), d), t from 0 while the
/// shortened length is non-negative.
pub fn rdelta_shortening(
    q: u32,
    n: usize,
    d: usize,
    r: usize,
    delta: usize,
    provider: &KoptProvider,
) -> Result<ShorteningBound> {
    if r < 1 || delta < 2 {
        return Err(LrcError::InvalidParameters(format!(
            "need r >= 1 and delta >= 2, got r={r} delta={delta}"
        )));
    }
    let step = r + delta - 1;
    let mut terms = Vec::new();
    let mut t = 0;
    while n >= t * step {
        let length = n - t * step;
        let kopt = provider.kopt(q, length, d)?;
        terms.push(ShorteningTerm {
            t,
            length,
            kopt,
            value: t * r + kopt,
        });
        t += 1;
    }
    let best = terms
        .iter()
        .min_by_key(|term| (term.value, term.t))
        .expect("t = 0 is always present");
    Ok(ShorteningBound {
        k_upper: best.value,
        t_star: best.t,
        terms,
    })
}

pub fn shortening_bound(q: u32, n: usize, d: usize, r: usize, provider: &KoptProvider) -> Result<ShorteningBound> {
    rdelta_shortening(q, n, d, r, 2, provider)
}

/// Largest d with d <= n - k + 1 - (d - q)/q, i.e. floor(q (n - k + 2) / (q + 1)).
pub fn field_singleton_sharp(q: u32, n: usize, k: usize) -> i64 {
    let q = q as i64;
    floor_div(q * (n as i64 - k as i64 + 2), q + 1)
}

/// Largest k in 0..=n for which `field_singleton_sharp` still allows d.
pub fn field_singleton_sharp_k(q: u32, n: usize, d: usize) -> usize {
    (0..=n)
        .rev()
        .find(|&k| field_singleton_sharp(q, n, k) >= d as i64)
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDistanceCheck {
    /// d⊥ - 1 + (d⊥ - q)/q for the supplied d⊥
    pub lhs: Option<Rational>,
    /// n - (d - 2) - ceil(k/r)
    pub rhs: i64,
    /// largest d⊥ satisfying the inequality
    pub max_dual_distance: i64,
    /// locality forces d⊥ <= r + 1
    pub locality_cap: usize,
    pub holds: Option<bool>,
}

pub fn dual_distance_bound(
    q: u32,
    n: usize,
    k: usize,
    d: usize,
    r: usize,
    d_dual: Option<usize>,
) -> Result<DualDistanceCheck> {
    if k < 2 {
        return Err(LrcError::Precondition(format!(
            "the dual distance bound needs k >= 2, got k={k}"
        )));
    }
    let rhs = n as i64 - (d as i64 - 2) - ceil_div(k as i64, r as i64);
    let qi = q as i64;
    // x - 1 + (x - q)/q <= rhs  <=>  x (q + 1) <= q (rhs + 2)
    let max_dual_distance = floor_div(qi * (rhs + 2), qi + 1);
    let lhs = d_dual.map(|x| int(x as i64 - 1) + Rational::new(BigInt::from(x as i64 - qi), BigInt::from(qi)));
    let holds = d_dual.map(|x| x as i64 <= max_dual_distance && x <= r + 1);
    Ok(DualDistanceCheck {
        lhs,
        rhs,
        max_dual_distance,
        locality_cap: r + 1,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioCheck {
    pub i: usize,
    /// (q^i - 1) d_{i-1}
    pub lhs: BigInt,
    /// (q^i - q) d_i
    pub rhs: BigInt,
    pub holds: bool,
}

/// (q^i - 1) d_{i-1} <= (q^i - q) d_i for 2 <= i <= k; `hierarchy[i-1]` is d_i.
pub fn wei_ratio_check(hierarchy: &[usize], q: u32) -> Vec<RatioCheck> {
    (2..=hierarchy.len())
        .map(|i| {
            let qi = BigInt::from(q).pow(i as u32);
            let lhs = (&qi - 1) * BigInt::from(hierarchy[i - 2]);
            let rhs = (&qi - q) * BigInt::from(hierarchy[i - 1]);
            let holds = lhs <= rhs;
            RatioCheck { i, lhs, rhs, holds }
        })
        .collect()
}

/// Wei's bounds d_i <= n - k + i and strict monotonicity.
pub fn wei_singleton_check(hierarchy: &[usize], n: usize) -> bool {
    let k = hierarchy.len();
    hierarchy.iter().enumerate().all(|(idx, &di)| di + k <= n + idx + 1) && hierarchy.windows(2).all(|w| w[0] < w[1])
}

/// With s = d2 - d, returns the bound d <= s q.
pub fn second_weight_field_bound(d: usize, d2: usize, q: u32) -> Result<usize> {
    if d2 <= d {
        return Err(LrcError::Inconsistent(format!(
            "second generalized weight {d2} does not exceed d = {d}"
        )));
    }
    Ok((d2 - d) * q as usize)
}

/// d_i <= n - k + i - (ceil((k - i + 1)/r) - 1).
pub fn lrc_genweight_bound(n: usize, k: usize, r: usize, i: usize) -> Result<i64> {
    if i < 1 || i > k || r < 1 {
        return Err(LrcError::Precondition(format!(
            "need 1 <= i <= k and r >= 1, got i={i} k={k} r={r}"
        )));
    }
    Ok(n as i64 - k as i64 + i as i64 - (ceil_div((k - i + 1) as i64, r as i64) - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum D2Gap {
    /// d_2 = d + 1
    Exact(usize),
    /// d_2 <= d + 2
    AtMost(usize),
}

impl D2Gap {
    pub fn max_d2(self) -> usize {
        match self {
            D2Gap::Exact(v) | D2Gap::AtMost(v) => v,
        }
    }

    pub fn admits(self, d2: usize) -> bool {
        match self {
            D2Gap::Exact(v) => d2 == v,
            D2Gap::AtMost(v) => d2 <= v,
        }
    }
}

pub fn optimal_lrc_d2_gap(n: usize, k: usize, d: usize, r: usize) -> Result<D2Gap> {
    if !is_optimal_params(n, k, d, r) {
        return Err(LrcError::Precondition(format!(
            "(n, k, d, r) = ({n}, {k}, {d}, {r}) does not meet the generalized Singleton bound with equality"
        )));
    }
    if k % r == 1 % r {
        Ok(D2Gap::AtMost(d + 2))
    } else {
        Ok(D2Gap::Exact(d + 1))
    }
}

/// d <= q when k is not 1 mod r, d <= 2q otherwise.
pub fn optimal_lrc_field_bound(q: u32, k: usize, r: usize) -> usize {
    if k % r == 1 % r {
        2 * q as usize
    } else {
        q as usize
    }
}

/// floor(q/(q+1) (n - k - ceil((k-1)/r) + 3)).
pub fn lrc_singleton_q(q: u32, n: usize, k: usize, r: usize) -> Result<i64> {
    if k < 1 || r < 1 {
        return Err(LrcError::Precondition(format!(
            "need k >= 1 and r >= 1, got k={k} r={r}"
        )));
    }
    let q = q as i64;
    let inner = n as i64 - k as i64 - ceil_div(k as i64 - 1, r as i64) + 3;
    Ok(floor_div(q * inner, q + 1))
}

/// Length cap for optimal LRCs with k <= q: 3q, or 4q + 1 when k is 1 mod r.
pub fn optimal_length_bound(q: u32, k: usize, r: usize) -> Result<usize> {
    if k > q as usize {
        return Err(LrcError::Precondition(format!("needs k <= q, got k={k} q={q}")));
    }
    Ok(if k % r == 1 % r {
        4 * q as usize + 1
    } else {
        3 * q as usize
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCheck {
    pub min_weight: usize,
    pub witness: Vec<u16>,
    /// n - k + |S| - (d - q)/q
    pub rhs: Rational,
    pub holds: bool,
}

/// Minimum weight over nonzero words whose support contains S, compared to
/// n - k + |S| - (d - q)/q. `Ok(None)` when |S| > k - 1 or no such word exists.
pub fn prop51_weight_check(code: &LinearCode, s: CoordSet, budget: u64) -> Result<Option<WeightCheck>> {
    let (n, k, q) = (code.n(), code.k(), code.q());
    s.check_within(n)?;
    if k == 0 || s.len() > k - 1 {
        return Ok(None);
    }
    let d = code.min_distance(budget)?;
    let mut best: Option<(usize, Vec<FieldElement>)> = None;
    code.for_each_codeword(budget, |word| {
        let w = weight(word);
        if w == 0 || s.indices().any(|i| word[i].is_zero()) {
            return;
        }
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, word.to_vec()));
        }
    })?;
    Ok(best.map(|(min_weight, witness)| {
        let rhs = int(n as i64 - k as i64 + s.len() as i64)
            - Rational::new(BigInt::from(d as i64 - q as i64), BigInt::from(q));
        WeightCheck {
            holds: int(min_weight as i64) <= rhs,
            min_weight,
            witness: witness.iter().map(|e| e.0).collect(),
            rhs,
        }
    }))
}
