use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::codecore::{subsets_of_size, CoordSet, LinearCode};
use crate::combin::binom;
use crate::error::{LrcError, Result};

/// W_0, ..., W_n of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight, if any.
    pub fn min_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }
}

/// Exact distribution by enumerating every codeword.
pub fn weight_distribution(code: &LinearCode, budget: u64) -> Result<WeightDistribution> {
    Ok(WeightDistribution {
        counts: code.enumerated_weights(budget)?,
    })
}

/// Number of codewords for each distinct support.
#[derive(Clone, Debug)]
pub struct SupportHistogram {
    n: usize,
    counts: Vec<(CoordSet, u128)>,
}

impl SupportHistogram {
    pub fn new(code: &LinearCode, budget: u64) -> Result<SupportHistogram> {
        let mut map: HashMap<CoordSet, u128> = HashMap::new();
        code.for_each_codeword(budget, |w| {
            *map.entry(crate::codecore::support(w)).or_default() += 1;
        })?;
        let mut counts: Vec<_> = map.into_iter().collect();
        counts.sort_unstable();
        Ok(SupportHistogram { n: code.n(), counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(CoordSet, u128)] {
        &self.counts
    }

    /// W_i^S for i = 0..=n.
    pub fn refined(&self, s: CoordSet) -> Vec<u128> {
        let mut out = vec![0u128; self.n + 1];
        for &(supp, c) in &self.counts {
            if s.is_subset(supp) {
                out[supp.len()] += c;
            }
        }
        out
    }

    /// |{x : S ⊆ σ(x) ⊆ T}|
    pub fn between(&self, s: CoordSet, t: CoordSet) -> u128 {
        self.counts
            .iter()
            .filter(|(supp, _)| s.is_subset(*supp) && supp.is_subset(t))
            .map(|(_, c)| c)
            .sum()
    }
}

/// W_i^S(C) for i = 0..=n, by enumeration.
pub fn refined_weight_distribution(code: &LinearCode, s: CoordSet, budget: u64) -> Result<Vec<u128>> {
    s.check_within(code.n())?;
    Ok(SupportHistogram::new(code, budget)?.refined(s))
}

/// |C(S,T)| = |{x ∈ C : S ⊆ σ(x) ⊆ T}| by enumeration.
pub fn cst_cardinality(code: &LinearCode, s: CoordSet, t: CoordSet, budget: u64) -> Result<u128> {
    t.check_within(code.n())?;
    if !s.is_subset(t) {
        return Err(LrcError::NotSubset {
            inner: s.to_string(),
            outer: t.to_string(),
        });
    }
    Ok(SupportHistogram::new(code, budget)?.between(s, t))
}

/// The numbers W_i^S for a family of support sets S.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RefinedWeightTable {
    n: usize,
    rows: BTreeMap<CoordSet, Vec<u128>>,
}

impl RefinedWeightTable {
    pub fn empty(n: usize) -> RefinedWeightTable {
        RefinedWeightTable {
            n,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_histogram<I: IntoIterator<Item = CoordSet>>(hist: &SupportHistogram, family: I) -> RefinedWeightTable {
        let mut table = RefinedWeightTable::empty(hist.n());
        for s in family {
            table.rows.insert(s, hist.refined(s));
        }
        table
    }

    pub fn for_family<I: IntoIterator<Item = CoordSet>>(
        code: &LinearCode,
        family: I,
        budget: u64,
    ) -> Result<RefinedWeightTable> {
        let hist = SupportHistogram::new(code, budget)?;
        let family: Vec<CoordSet> = family.into_iter().collect();
        for s in &family {
            s.check_within(code.n())?;
        }
        Ok(RefinedWeightTable::from_histogram(&hist, family))
    }

    /// The default family: the empty set and all singletons.
    pub fn singletons(code: &LinearCode, budget: u64) -> Result<RefinedWeightTable> {
        let family = std::iter::once(CoordSet::EMPTY).chain((0..code.n()).map(CoordSet::singleton));
        RefinedWeightTable::for_family(code, family, budget)
    }

    /// Every S with |S| = t.
    pub fn level(code: &LinearCode, t: usize, budget: u64) -> Result<RefinedWeightTable> {
        RefinedWeightTable::for_family(code, subsets_of_size(code.n(), t), budget)
    }

    /// Every D ⊆ S.
    pub fn below(code: &LinearCode, s: CoordSet, budget: u64) -> Result<RefinedWeightTable> {
        RefinedWeightTable::for_family(code, s.subsets(), budget)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, s: CoordSet, counts: Vec<u128>) {
        self.rows.insert(s, counts);
    }

    pub fn sets(&self) -> impl Iterator<Item = CoordSet> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, s: CoordSet) -> Result<&[u128]> {
        self.rows
            .get(&s)
            .map(Vec::as_slice)
            .ok_or_else(|| LrcError::MissingTableEntry(s.to_string()))
    }

    /// W_i^S; weights past n count as 0.
    pub fn get(&self, s: CoordSet, i: usize) -> Result<u128> {
        Ok(self.row(s)?.get(i).copied().unwrap_or(0))
    }
}

/// W_i^A recovered from the level-t sums: the sum of W_i^S over S ⊇ A with
/// |S| = t, divided by C(i-|A|, t-|A|).
pub fn lemma33_downlevel(table: &RefinedWeightTable, a: CoordSet, t: usize, i: usize) -> Result<u128> {
    let n = table.n();
    if a.len() > t || t > i || i > n {
        return Err(LrcError::Precondition(format!(
            "need |A| <= t <= i <= n, got |A|={} t={t} i={i} n={n}",
            a.len()
        )));
    }
    let rest: Vec<usize> = a.complement(n).indices().collect();
    let mut sum = BigInt::from(0);
    for extra in subsets_of_size(rest.len(), t - a.len()) {
        // spread the chosen positions of `rest` back onto [n]
        let s = a.union(CoordSet::from_indices(extra.indices().map(|e| rest[e])));
        sum += BigInt::from(table.get(s, i)?);
    }
    let den = binom((i - a.len()) as i64, (t - a.len()) as i64);
    let (quot, rem) = sum.div_rem(&den);
    if rem != BigInt::from(0) {
        return Err(LrcError::NonIntegral(format!("{sum}/{den}")));
    }
    u128::try_from(quot).map_err(|e| LrcError::Inconsistent(e.to_string()))
}
