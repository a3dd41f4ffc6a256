use serde::Serialize;

use super::locality::locality_profile;
use crate::codecore::{subsets_of_size, LinearCode};
use crate::error::{LrcError, Result};

/// d_1 < ... < d_k together with mu_1, ..., mu_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralizedWeightHierarchy {
    pub d: Vec<usize>,
    pub mu: Vec<usize>,
}

/// d_i = min{|T| : dim C(T) >= i} by sweeping T in order of size.
pub fn weight_hierarchy(code: &LinearCode, budget: u64) -> Result<Vec<usize>> {
    let (n, k) = (code.n(), code.k());
    let states = 1u128 << n;
    if states > budget as u128 {
        return Err(LrcError::BudgetExceeded { needed: states, budget });
    }
    let mut d = Vec::with_capacity(k);
    // |T| < i can never carry an i-dimensional subcode
    'sizes: for size in 1..=n {
        if d.len() == k {
            break;
        }
        let mut best = 0;
        for t in subsets_of_size(n, size) {
            best = best.max(code.shortened_dim(t));
            if best == k {
                break;
            }
        }
        while d.len() < best {
            d.push(size);
            if d.len() == k {
                break 'sizes;
            }
        }
    }
    Ok(d)
}

/// mu_i = min{t : d⊥_t >= k - (i-1) + t}, i = 1..k, with d⊥_{k⊥+1} read as
/// infinite so that mu_i = k⊥ + 1 when no listed t qualifies.
pub fn mu_from_dual(n: usize, k: usize, dual_d: &[usize]) -> Vec<usize> {
    let k_dual = n - k;
    debug_assert_eq!(dual_d.len(), k_dual);
    (1..=k)
        .map(|i| {
            (1..=k_dual)
                .find(|&t| dual_d[t - 1] + i >= k + 1 + t)
                .unwrap_or(k_dual + 1)
        })
        .collect()
}

pub fn mu_parameters(code: &LinearCode, budget: u64) -> Result<Vec<usize>> {
    let dual_d = weight_hierarchy(&code.dual(), budget)?;
    Ok(mu_from_dual(code.n(), code.k(), &dual_d))
}

/// Both hierarchies, with d_i = n - k - mu_i + i + 1 enforced.
pub fn generalized_weights(code: &LinearCode, budget: u64) -> Result<GeneralizedWeightHierarchy> {
    if code.k() == 0 {
        return Err(LrcError::ZeroCode);
    }
    let d = weight_hierarchy(code, budget)?;
    let mu = mu_parameters(code, budget)?;
    let (n, k) = (code.n(), code.k());
    for i in 1..=k {
        if d[i - 1] + mu[i - 1] != n - k + i + 1 {
            return Err(LrcError::Inconsistent(format!(
                "d_{i} = {} but n - k - mu_{i} + i + 1 = {}",
                d[i - 1],
                (n + i + 1) as i64 - (k + mu[i - 1]) as i64
            )));
        }
    }
    Ok(GeneralizedWeightHierarchy { d, mu })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalityVerdict {
    pub optimal: bool,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    /// d⊥ at index ⌈k/r⌉, if the dual is that large.
    pub dual_weight_at_ceil: Option<usize>,
}

/// Equality in k + ⌈k/r⌉ <= n - d + 2 at r = r_min, checked against the
/// dual-hierarchy characterization d⊥_{⌈k/r⌉} = n - k⊥ + ⌈k/r⌉.
pub fn is_optimal_lrc(code: &LinearCode, budget: u64) -> Result<OptimalityVerdict> {
    let profile = locality_profile(code, budget)?;
    let (n, k, r) = (code.n(), code.k(), profile.r_min);
    let d = code.min_distance(budget)?;
    let ceil = k.div_ceil(r);
    let optimal = k + ceil + d == n + 2;
    let dual_d = weight_hierarchy(&code.dual(), budget)?;
    let dual_weight_at_ceil = dual_d.get(ceil - 1).copied();
    let via_dual = dual_weight_at_ceil == Some(k + ceil);
    if optimal != via_dual {
        return Err(LrcError::Inconsistent(format!(
            "optimality {optimal} from distance, {via_dual} from the dual hierarchy"
        )));
    }
    Ok(OptimalityVerdict {
        optimal,
        n,
        k,
        d,
        r,
        dual_weight_at_ceil,
    })
}
