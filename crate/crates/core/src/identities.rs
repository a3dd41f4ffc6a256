//! MacWilliams-type identities for refined weight distributions, evaluated
//! in exact rational arithmetic from data of the dual code.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::codecore::{CoordSet, LinearCode};
use crate::combin::{binom, binom_q, pow_q, sign, Rational};
use crate::error::{LrcError, Result};
use crate::weights::RefinedWeightTable;

/// Code parameters the identities need besides the dual table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualParams {
    pub q: u32,
    pub n: usize,
    /// dimension of the primal code C
    pub k: usize,
}

impl DualParams {
    pub fn of(code: &LinearCode) -> DualParams {
        DualParams {
            q: code.q(),
            n: code.n(),
            k: code.k(),
        }
    }
}

/// Binomial moments alpha_t = sum_i C(n-i, t-i) beta_i and the sequence beta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentVector {
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

impl MomentVector {
    pub fn from_beta(beta: Vec<Rational>) -> MomentVector {
        MomentVector {
            alpha: lemma37_forward(&beta),
            beta,
        }
    }

    pub fn from_alpha(alpha: Vec<Rational>) -> MomentVector {
        MomentVector {
            beta: lemma37_invert(&alpha),
            alpha,
        }
    }
}

pub fn lemma37_forward(beta: &[Rational]) -> Vec<Rational> {
    let n = beta.len() as i64 - 1;
    (0..=n)
        .map(|t| {
            (0..=n).fold(Rational::zero(), |acc, i| {
                acc + binom_q(n - i, t - i) * &beta[i as usize]
            })
        })
        .collect()
}

/// beta_i = sum_t (-1)^(i-t) C(n-t, i-t) alpha_t
pub fn lemma37_invert(alpha: &[Rational]) -> Vec<Rational> {
    let n = alpha.len() as i64 - 1;
    (0..=n)
        .map(|i| {
            (0..=n).fold(Rational::zero(), |acc, t| {
                acc + binom_q(n - t, i - t) * &alpha[t as usize] * Rational::from_integer(sign(i - t).into())
            })
        })
        .collect()
}

/// Integer view of an identity result, refusing fractions and negatives.
pub fn as_count(value: &Rational) -> Result<u128> {
    if !value.is_integer() {
        return Err(LrcError::NonIntegral(value.to_string()));
    }
    if value.is_negative() {
        return Err(LrcError::Negative(value.to_string()));
    }
    u128::try_from(value.to_integer()).map_err(|e| LrcError::Inconsistent(e.to_string()))
}

/// |C(S,T)| from shortenings of the dual:
/// |C| sum_{A ⊆ S} (-1)^|A| |C⊥(T^c ∪ A)| / q^(n-|T|+|A|).
pub fn prop35_cst_via_dual(code: &LinearCode, s: CoordSet, t: CoordSet) -> Result<u128> {
    let n = code.n();
    t.check_within(n)?;
    if !s.is_subset(t) {
        return Err(LrcError::NotSubset {
            inner: s.to_string(),
            outer: t.to_string(),
        });
    }
    let dual = code.dual();
    let q = code.q();
    let outside = t.complement(n);
    let mut sum = Rational::zero();
    for a in s.subsets() {
        let dim = dual.shortened_dim(outside.union(a)) as i64;
        let term = pow_q(q, dim - (n - t.len() + a.len()) as i64);
        sum += term * Rational::from_integer(sign(a.len() as i64).into());
    }
    as_count(&(sum * pow_q(q, code.k() as i64)))
}

/// sum_i C(n-i, t-i) W_i^S(C) from the refined distribution of C itself.
pub fn prop36_moment_lhs(refined: &[u128], s: CoordSet, t: usize) -> Result<Rational> {
    let n = refined.len() - 1;
    if t < s.len() || t > n {
        return Err(LrcError::Precondition(format!(
            "need |S| <= t <= n, got |S|={} t={t} n={n}",
            s.len()
        )));
    }
    Ok((0..=n).fold(Rational::zero(), |acc, i| {
        acc + binom_q((n - i) as i64, t as i64 - i as i64) * Rational::from_integer(refined[i].into())
    }))
}

/// kernel[d][j][t'] = sum_{b=0}^{d} C(d, b) (-1)^(d-b) (1-q)^(-b) C(n-s-j+b, t'),
/// shared by every D ⊆ S of size d (t' = t - |S|).
fn moment_kernel(q: u32, n: usize, s: usize) -> Vec<Vec<Vec<Rational>>> {
    let one_minus_q = Rational::from_integer(BigInt::from(1) - BigInt::from(q));
    (0..=s)
        .map(|d| {
            (0..=n)
                .map(|j| {
                    (0..=n - s)
                        .map(|tp| {
                            (0..=d).fold(Rational::zero(), |acc, b| {
                                let c = binom_q(d as i64, b as i64)
                                    * Rational::from_integer(sign((d - b) as i64).into())
                                    * one_minus_q.pow(-(b as i32))
                                    * binom_q((n - s) as i64 - j as i64 + b as i64, tp as i64);
                                acc + c
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// alpha_t for t = 0..=n given g[d][j] = sum over D ⊆ S, |D| = d, of W_j^D(C⊥).
fn alpha_from_aggregate(p: DualParams, s: usize, g: &[Vec<Rational>]) -> Vec<Rational> {
    let kernel = moment_kernel(p.q, p.n, s);
    let qm1 = Rational::from_integer(BigInt::from(p.q - 1));
    let mut alpha = vec![Rational::zero(); p.n + 1];
    for (t, slot) in alpha.iter_mut().enumerate().skip(s) {
        let tp = t - s;
        let mut sum = Rational::zero();
        for (d, gd) in g.iter().enumerate() {
            for (j, w) in gd.iter().enumerate() {
                if !w.is_zero() {
                    sum += &kernel[d][j][tp] * w;
                }
            }
        }
        *slot = sum * pow_q(p.q, p.k as i64 - p.n as i64 + t as i64 - s as i64) * qm1.pow(s as i32);
    }
    alpha
}

fn aggregate_below(table: &RefinedWeightTable, p: DualParams, s: CoordSet) -> Result<Vec<Vec<Rational>>> {
    let mut g = vec![vec![Rational::zero(); p.n + 1]; s.len() + 1];
    for d in s.subsets() {
        let row = table.row(d)?;
        for (j, &w) in row.iter().enumerate().take(p.n + 1) {
            g[d.len()][j] += Rational::from_integer(w.into());
        }
    }
    Ok(g)
}

/// The moment identity's right-hand side, from W_i^D(C⊥) for every D ⊆ S.
pub fn prop36_moment_rhs(dual_table: &RefinedWeightTable, p: DualParams, s: CoordSet, t: usize) -> Result<Rational> {
    if t < s.len() || t > p.n {
        return Err(LrcError::Precondition(format!(
            "need |S| <= t <= n, got |S|={} t={t} n={}",
            s.len(),
            p.n
        )));
    }
    Ok(prop36_alpha(dual_table, p, s)?.swap_remove(t))
}

/// All moments alpha_|S|, ..., alpha_n at once (entries below |S| are 0).
pub fn prop36_alpha(dual_table: &RefinedWeightTable, p: DualParams, s: CoordSet) -> Result<Vec<Rational>> {
    let g = aggregate_below(dual_table, p, s)?;
    Ok(alpha_from_aggregate(p, s.len(), &g))
}

/// W_0^S(C), ..., W_n^S(C) from the dual table.
pub fn thm38_refined_all(dual_table: &RefinedWeightTable, p: DualParams, s: CoordSet) -> Result<Vec<Rational>> {
    Ok(lemma37_invert(&prop36_alpha(dual_table, p, s)?))
}

/// W_i^S(C) from the dual table.
pub fn thm38_refined_from_dual(
    dual_table: &RefinedWeightTable,
    p: DualParams,
    s: CoordSet,
    i: usize,
) -> Result<Rational> {
    if i > p.n {
        return Err(LrcError::Precondition(format!("weight {i} exceeds n={}", p.n)));
    }
    Ok(thm38_refined_all(dual_table, p, s)?.swap_remove(i))
}

/// W_0^S(C), ..., W_n^S(C) from the level table {W_j^T(C⊥) : |T| = |S|}.
///
/// `d_dual` is the minimum distance of C⊥, or `None` when C⊥ is the zero code.
pub fn cor39_refined_all(
    level_table: &RefinedWeightTable,
    p: DualParams,
    d_dual: Option<usize>,
    s: CoordSet,
) -> Result<Vec<Rational>> {
    let n = p.n;
    let size = s.len();
    let d_dual = d_dual.unwrap_or(n + 1);
    if size > d_dual {
        return Err(LrcError::Precondition(format!(
            "|S| = {size} exceeds the dual distance {d_dual}"
        )));
    }
    // e[m][j] = sum over |T| = |S|, |S ∩ T| = m, of W_j^T(C⊥)
    let mut e = vec![vec![BigInt::zero(); n + 1]; size + 1];
    let mut seen = 0usize;
    for t in level_table.sets().filter(|t| t.len() == size) {
        seen += 1;
        let m = s.intersection(t).len();
        let row = level_table.row(t)?;
        for j in d_dual.max(1)..=n {
            e[m][j] += BigInt::from(row.get(j).copied().unwrap_or(0));
        }
    }
    let expected = binom(n as i64, size as i64);
    if BigInt::from(seen) != expected {
        return Err(LrcError::MissingTableEntry(format!(
            "level {size} has {seen} of {expected} sets"
        )));
    }
    // g[d][j] = sum_T sum_{D ⊆ S∩T, |D|=d} W_j^T / C(j-d, |S|-d)
    let mut g = vec![vec![Rational::zero(); n + 1]; size + 1];
    for (d, gd) in g.iter_mut().enumerate() {
        for j in d_dual.max(1)..=n {
            let mut num = BigInt::zero();
            for (m, em) in e.iter().enumerate() {
                num += binom(m as i64, d as i64) * &em[j];
            }
            if !num.is_zero() {
                gd[j] = Rational::new(num, binom(j as i64 - d as i64, (size - d) as i64));
            }
        }
    }
    let mut alpha = alpha_from_aggregate(p, size, &g);
    let mut beta = lemma37_invert(&std::mem::take(&mut alpha));
    // the j = 0 term, isolated
    let qm1 = BigInt::from(p.q - 1);
    for (i, b) in beta.iter_mut().enumerate() {
        let constant = binom((n - size) as i64, i as i64 - size as i64) * qm1.pow(i as u32);
        *b += Rational::from_integer(constant) * pow_q(p.q, p.k as i64 - n as i64);
    }
    Ok(beta)
}

pub fn cor39_refined_from_dual_level(
    level_table: &RefinedWeightTable,
    p: DualParams,
    d_dual: Option<usize>,
    s: CoordSet,
    i: usize,
) -> Result<Rational> {
    if i > p.n {
        return Err(LrcError::Precondition(format!("weight {i} exceeds n={}", p.n)));
    }
    Ok(cor39_refined_all(level_table, p, d_dual, s)?.swap_remove(i))
}

/// sum_{t=1}^{i} (-1)^(i-t) q^t C(n-t, i-t) times the branch factor
/// (1/j) C(n-1-j, t-1) when s ≠ l, or ((1-j)/j) C(n-1-j, t-1) - C(n-j, t-1)/(q-1)
/// when s = l.
pub fn single_coordinate_kernel(q: u32, n: usize, i: usize, j: usize, same: bool) -> Rational {
    assert!(j >= 1, "the kernel is only defined for j >= 1");
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let inv_j = Rational::new(BigInt::one(), BigInt::from(j));
    let qm1 = Rational::from_integer(BigInt::from(q - 1));
    (1..=i).fold(Rational::zero(), |acc, t| {
        let outer = pow_q(q, t) * binom_q(n - t, i - t) * Rational::from_integer(sign(i - t).into());
        let branch = if same {
            Rational::from_integer(BigInt::from(1 - j)) * &inv_j * binom_q(n - 1 - j, t - 1)
                - binom_q(n - j, t - 1) / &qm1
        } else {
            &inv_j * binom_q(n - 1 - j, t - 1)
        };
        acc + outer * branch
    })
}

/// W_i^{l}(C) from the singleton table of C⊥; `l` is 0-based.
pub fn cor44_single_coordinate(
    singleton_table: &RefinedWeightTable,
    p: DualParams,
    d_dual: Option<usize>,
    l: usize,
    i: usize,
) -> Result<Rational> {
    let n = p.n;
    if l >= n || i > n {
        return Err(LrcError::Precondition(format!(
            "need l < n and i <= n, got l={l} i={i} n={n}"
        )));
    }
    for s in 0..n {
        if singleton_table.get(CoordSet::singleton(s), 1)? > 0 {
            // a weight-1 dual word means coordinate s is identically 0 in C
            return Err(LrcError::Degenerate(s + 1));
        }
    }
    let qm1 = BigInt::from(p.q - 1);
    let constant = Rational::from_integer(binom(n as i64 - 1, i as i64 - 1) * qm1.pow(i as u32))
        * pow_q(p.q, p.k as i64 - n as i64);
    if i == 0 {
        return Ok(constant);
    }
    let mut sum = Rational::zero();
    for j in d_dual.unwrap_or(n + 1).max(1)..=n {
        let here = singleton_table.get(CoordSet::singleton(l), j)?;
        let mut others = 0u128;
        for s in (0..n).filter(|&s| s != l) {
            others += singleton_table.get(CoordSet::singleton(s), j)?;
        }
        if here > 0 {
            sum += single_coordinate_kernel(p.q, n, i, j, true) * Rational::from_integer(here.into());
        }
        if others > 0 {
            sum += single_coordinate_kernel(p.q, n, i, j, false) * Rational::from_integer(others.into());
        }
    }
    Ok(constant + sum * pow_q(p.q, p.k as i64 - n as i64 - 1) * Rational::from_integer(qm1))
}
