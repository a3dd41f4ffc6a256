use serde::Serialize;

use super::refined::SupportHistogram;
use crate::codecore::{subsets_of_size, CoordSet, LinearCode};
use crate::error::{LrcError, Result};

/// Upper limit on candidate recovery sets examined by `is_rdelta_lrc`.
pub const SUBSET_SEARCH_CAP: u64 = 10_000_000;

/// Locality read off the dual code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalityProfile {
    /// max over coordinates of `per_coord_r`
    pub r_min: usize,
    /// entry j: (least weight of a dual word covering j) - 1
    pub per_coord_r: Vec<usize>,
}

/// Per-coordinate locality from the dual words covering each coordinate.
pub fn locality_profile(code: &LinearCode, budget: u64) -> Result<LocalityProfile> {
    if let Some(c) = code.degenerate_coordinate() {
        return Err(LrcError::Degenerate(c + 1));
    }
    if !code.is_nontrivial() {
        return Err(LrcError::Precondition(format!(
            "locality needs 1 <= k <= n-1, got k={} n={}",
            code.k(),
            code.n()
        )));
    }
    let hist = SupportHistogram::new(&code.dual(), budget)?;
    let mut best = vec![usize::MAX; code.n()];
    for &(supp, _) in hist.entries() {
        let w = supp.len();
        for j in supp.indices() {
            best[j] = best[j].min(w);
        }
    }
    if let Some(j) = best.iter().position(|&w| w == usize::MAX) {
        return Err(LrcError::Precondition(format!(
            "coordinate {} lies in no dual support, so it has no recovery set",
            j + 1
        )));
    }
    let per_coord_r: Vec<usize> = best.iter().map(|w| w - 1).collect();
    Ok(LocalityProfile {
        r_min: *per_coord_r.iter().max().expect("n >= 1"),
        per_coord_r,
    })
}

/// Which size rule a repair group for coordinate i obeys.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum RepairConvention {
    /// R contains i and |R| <= r + delta - 1.
    #[default]
    Containing,
    /// S excludes i and |S| <= r + delta; the group is R = S ∪ {i}.
    Excluding,
}

impl RepairConvention {
    /// Largest admissible |R| including i itself.
    pub fn max_group(self, r: usize, delta: usize) -> usize {
        match self {
            RepairConvention::Containing => r + delta - 1,
            RepairConvention::Excluding => r + delta + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RDeltaVerdict {
    pub holds: bool,
    /// A repair group R ∋ i with d(π_R(C)) >= delta, per coordinate, if found.
    pub witnesses: Vec<Option<CoordSet>>,
}

/// d(π_R(C)) >= delta, with the zero projection counting as failure.
fn projection_reaches(code: &LinearCode, r: CoordSet, delta: usize, budget: u64) -> Result<bool> {
    let k_r = code.projected_dim(r);
    if k_r == 0 || r.len() + 1 < k_r + delta {
        // Singleton already rules it out
        return Ok(false);
    }
    Ok(code.project(r)?.min_distance(budget)? >= delta)
}

/// Searches each coordinate for a repair group of increasing size.
pub fn is_rdelta_lrc(
    code: &LinearCode,
    r: usize,
    delta: usize,
    convention: RepairConvention,
    budget: u64,
) -> Result<RDeltaVerdict> {
    if r < 1 || delta < 2 {
        return Err(LrcError::InvalidParameters(format!(
            "need r >= 1 and delta >= 2, got r={r} delta={delta}"
        )));
    }
    if let Some(c) = code.degenerate_coordinate() {
        return Err(LrcError::Degenerate(c + 1));
    }
    let n = code.n();
    let max_group = convention.max_group(r, delta).min(n);
    let per_coord: u64 = (1..=max_group)
        .map(|s| crate::combin::binom(n as i64 - 1, s as i64 - 1))
        .sum::<num_bigint::BigInt>()
        .try_into()
        .unwrap_or(u64::MAX);
    let total = per_coord.saturating_mul(n as u64);
    if total > SUBSET_SEARCH_CAP {
        return Err(LrcError::BudgetExceeded {
            needed: total as u128,
            budget: SUBSET_SEARCH_CAP,
        });
    }

    let mut witnesses = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&c| c != i).collect();
        let mut found = None;
        'sizes: for size in delta.min(max_group)..=max_group {
            for pick in subsets_of_size(n - 1, size - 1) {
                let group = CoordSet::from_indices(pick.indices().map(|p| others[p])).union(CoordSet::singleton(i));
                if projection_reaches(code, group, delta, budget)? {
                    found = Some(group);
                    break 'sizes;
                }
            }
        }
        witnesses.push(found);
    }
    Ok(RDeltaVerdict {
        holds: witnesses.iter().all(Option::is_some),
        witnesses,
    })
}

/// Smallest r for which `is_rdelta_lrc` holds, searching r = 1..=n-delta+1.
pub fn smallest_r_for_delta(
    code: &LinearCode,
    delta: usize,
    convention: RepairConvention,
    budget: u64,
) -> Result<Option<usize>> {
    for r in 1..=code.n().saturating_sub(delta) + 1 {
        if is_rdelta_lrc(code, r, delta, convention, budget)?.holds {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualMass {
    /// entry j: sum over i <= r + delta - 1 of W_i^{j}(C⊥)
    pub sums: Vec<u128>,
    /// q^(delta-1) - q^(delta-2)
    pub threshold: u128,
    pub holds: Vec<bool>,
}

impl DualMass {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

/// The dual-mass necessary condition for (r, delta)-locality.
pub fn prop41_dual_mass(code: &LinearCode, r: usize, delta: usize, budget: u64) -> Result<DualMass> {
    if r < 1 || delta < 2 {
        return Err(LrcError::InvalidParameters(format!(
            "need r >= 1 and delta >= 2, got r={r} delta={delta}"
        )));
    }
    let q = code.q() as u128;
    let threshold = q.pow(delta as u32 - 1) - q.pow(delta as u32 - 2);
    let hist = SupportHistogram::new(&code.dual(), budget)?;
    let limit = r + delta - 1;
    let mut sums = vec![0u128; code.n()];
    for &(supp, c) in hist.entries() {
        if supp.len() <= limit {
            for j in supp.indices() {
                sums[j] += c;
            }
        }
    }
    let holds = sums.iter().map(|&s| s >= threshold).collect();
    Ok(DualMass { sums, threshold, holds })
}
