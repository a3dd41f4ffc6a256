//! Runs every identity and predicate against brute-force enumeration on a
//! corpus of codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::{seq::SliceRandom, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::*;
use crate::codecore::{subsets_of_size, CoordSet, LinearCode};
use crate::combin::{macwilliams, Rational};
use crate::corpus::{generate_corpus, CorpusConfig, CorpusEntry};
use crate::error::Result;
use crate::identities::*;
use crate::weights::{
    lemma33_downlevel, locality_profile, mu_parameters, weight_hierarchy, RefinedWeightTable, SupportHistogram,
};

/// Largest |S| used for the identities that take a coordinate set.
pub const MAX_SET_SIZE: usize = 3;

/// Check names in report order, with what each compares.
pub const CHECKS: &[(&str, &str)] = &[
    (
        "refined_macwilliams",
        "W^S(C) from the dual table below S vs enumeration, |S| <= 3",
    ),
    (
        "level_identity",
        "W^S(C) from the dual level-|S| table vs enumeration, |S| <= min(3, d⊥)",
    ),
    (
        "single_coordinate",
        "W_i^{l}(C) from dual singleton weights vs enumeration",
    ),
    ("shortened_count", "|C(S,T)| from dual shortenings vs enumeration"),
    ("binomial_moments", "moment sums of W^S(C) vs the dual-side expression"),
    ("downlevel", "W_i^A from level-t sums vs enumeration"),
    ("coordinate_average", "W_i(C) = sum_j W_i^{j}(C) / i"),
    ("moment_inversion", "binomial moments forward then inverted"),
    ("macwilliams_empty_set", "S = empty set against the classical transform"),
    ("field_singleton", "d <= n - k + 1 - (d - q)/q"),
    ("wei_singleton", "d_1 < ... < d_k and d_i <= n - k + i"),
    ("wei_ratio", "(q^i - 1) d_{i-1} <= (q^i - q) d_i"),
    ("second_weight_field", "d <= (d_2 - d) q"),
    ("lrc_genweight", "d_i <= n - k + i - (ceil((k-i+1)/r) - 1)"),
    (
        "shortened_weight",
        "min weight over C(S,[n]) <= n - k + |S| - (d - q)/q",
    ),
    (
        "dual_distance",
        "d⊥ - 1 + (d⊥ - q)/q <= n - (d - 2) - ceil(k/r) and d⊥ <= r + 1",
    ),
    ("mu_hierarchy", "d_i = n - k - mu_i + i + 1"),
    ("mu_locality", "mu_i >= ceil((k - i + 1)/r)"),
    ("gen_singleton", "k + ceil(k/r) <= n - d + 2"),
    ("optimal_d2_gap", "second weight of optimal LRCs"),
];

/// Printed statements evaluated outside the hypotheses their proofs use.
/// These are reported, not counted as mismatches.
pub const EDGE_CHECKS: &[(&str, &str)] = &[
    ("field_singleton_k1", "d <= n - k + 1 - (d - q)/q on codes with k = 1"),
    ("shortened_weight_empty_set", "the minimum-weight bound with S empty"),
    (
        "dual_distance_dual_dim1",
        "the dual distance inequality when dim C⊥ = 1",
    ),
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub checked: u64,
    pub mismatches: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub config: CorpusConfig,
    pub codes: usize,
    pub codes_per_field: BTreeMap<u32, usize>,
    pub checks: BTreeMap<String, CheckCount>,
    /// statement evaluations outside the proof hypotheses; violations here are
    /// counterexamples to the statement as printed, not implementation errors
    pub edge_cases: BTreeMap<String, CheckCount>,
    /// first few mismatch descriptions, in corpus order
    pub failures: Vec<String>,
}

const FAILURE_LOG: usize = 20;

impl VerifySummary {
    pub fn total_mismatches(&self) -> u64 {
        self.checks.values().map(|c| c.mismatches).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_mismatches() == 0
    }

    pub fn count(&self, name: &str) -> CheckCount {
        self.checks.get(name).copied().unwrap_or_default()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "corpus: {} codes, fields {:?}, n <= {}, k <= {}, seed {}",
            self.codes, c.fields, c.max_n, c.max_k, c.seed
        );
        for (q, count) in &self.codes_per_field {
            let _ = writeln!(out, "  GF({q}): {count} codes");
        }
        let width = CHECKS
            .iter()
            .chain(EDGE_CHECKS)
            .map(|(n, _)| n.len())
            .max()
            .unwrap_or(0);
        for (name, _) in CHECKS {
            let cc = self.count(name);
            let status = if cc.mismatches == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {name:<width$} {:>9} checked {:>5} mismatches",
                cc.checked, cc.mismatches
            );
        }
        for (name, _) in EDGE_CHECKS {
            let cc = self.edge_cases.get(*name).copied().unwrap_or_default();
            let _ = writeln!(
                out,
                "edge {name:<width$} {:>9} checked {:>5} counterexamples",
                cc.checked, cc.mismatches
            );
        }
        for f in &self.failures {
            let _ = writeln!(out, "  mismatch: {f}");
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "MISMATCHES FOUND"
            }
        );
        out
    }
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, CheckCount>,
    edge: BTreeMap<&'static str, CheckCount>,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool, what: impl FnOnce() -> String) {
        let c = self.counts.entry(name).or_default();
        c.checked += 1;
        if !ok {
            c.mismatches += 1;
            if self.failures.len() < FAILURE_LOG {
                self.failures.push(format!("{name}: {}", what()));
            }
        }
    }

    fn edge(&mut self, name: &'static str, ok: bool) {
        let c = self.edge.entry(name).or_default();
        c.checked += 1;
        c.mismatches += u64::from(!ok);
    }

    fn merge(&mut self, other: Tally) {
        for (name, c) in other.counts {
            let m = self.counts.entry(name).or_default();
            m.checked += c.checked;
            m.mismatches += c.mismatches;
        }
        for (name, c) in other.edge {
            let m = self.edge.entry(name).or_default();
            m.checked += c.checked;
            m.mismatches += c.mismatches;
        }
        self.failures.extend(other.failures);
    }

    /// Equality of an identity result (or its error) with the oracle value.
    fn equal(
        &mut self,
        name: &'static str,
        got: Result<Vec<Rational>>,
        want: &[Rational],
        ctx: impl FnOnce() -> String,
    ) {
        match got {
            Ok(v) => self.record(name, v == want, || format!("{}: got {v:?}, want {want:?}", ctx())),
            Err(e) => self.record(name, false, || format!("{}: {e}", ctx())),
        }
    }
}

fn ints(v: &[u128]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
}

/// Sets S of size <= `max` in a fixed order: all of them.
fn small_sets(n: usize, max: usize) -> Vec<CoordSet> {
    (0..=max.min(n)).flat_map(|t| subsets_of_size(n, t)).collect()
}

fn check_code(entry: &CorpusEntry, seed: u64, budget: u64) -> Result<Tally> {
    let code: &LinearCode = &entry.code;
    let (q, n, k) = (code.q(), code.n(), code.k());
    let label = format!("code #{} (q={q}, n={n}, k={k})", entry.index);
    let mut t = Tally::default();
    let p = DualParams::of(code);
    let dual = code.dual();
    let hist = SupportHistogram::new(code, budget)?;
    let dual_hist = SupportHistogram::new(&dual, budget)?;
    let d = code.min_distance(budget)?;
    let d_dual = if dual.k() == 0 {
        None
    } else {
        Some(dual.min_distance(budget)?)
    };
    let sets = small_sets(n, MAX_SET_SIZE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ entry.index as u64);

    // identities taking one coordinate set S
    for &s in &sets {
        let want = ints(&hist.refined(s));
        let below = RefinedWeightTable::from_histogram(&dual_hist, s.subsets());
        t.equal("refined_macwilliams", thm38_refined_all(&below, p, s), &want, || {
            format!("{label}, S={s}")
        });
        if d_dual.is_none_or(|dd| s.len() <= dd) {
            let level = RefinedWeightTable::from_histogram(&dual_hist, subsets_of_size(n, s.len()));
            t.equal("level_identity", cor39_refined_all(&level, p, d_dual, s), &want, || {
                format!("{label}, S={s}")
            });
        }
        if s.len() <= 2 {
            match prop36_alpha(&below, p, s) {
                Ok(alpha) => {
                    for tt in s.len()..=n {
                        let lhs = prop36_moment_lhs(&hist.refined(s), s, tt);
                        t.record("binomial_moments", lhs.as_ref().ok() == Some(&alpha[tt]), || {
                            format!("{label}, S={s}, t={tt}")
                        });
                    }
                    let forward = lemma37_forward(&want);
                    t.record("moment_inversion", lemma37_invert(&forward) == want, || {
                        format!("{label}, S={s}")
                    });
                }
                Err(e) => t.record("binomial_moments", false, || format!("{label}, S={s}: {e}")),
            }
        }
    }

    // the empty set against the classical transform
    let weights_c = ints(&hist.refined(CoordSet::default()));
    let dual_weights: Vec<BigInt> = dual_hist
        .refined(CoordSet::default())
        .iter()
        .map(|&x| BigInt::from(x))
        .collect();
    t.record(
        "macwilliams_empty_set",
        macwilliams(q, n, dual.k(), &dual_weights) == weights_c,
        || label.clone(),
    );

    // single-coordinate form
    let singletons = RefinedWeightTable::from_histogram(&dual_hist, (0..n).map(CoordSet::singleton));
    for l in 0..n {
        let want = hist.refined(CoordSet::singleton(l));
        for (i, &w) in want.iter().enumerate() {
            let got = cor44_single_coordinate(&singletons, p, d_dual, l, i);
            t.record(
                "single_coordinate",
                got.as_ref().ok() == Some(&Rational::from_integer(BigInt::from(w))),
                || format!("{label}, l={}, i={i}: {got:?} vs {w}", l + 1),
            );
        }
    }

    // |C(S,T)| for random T and all S ⊆ T with |S| <= 3
    let mut all: Vec<usize> = (0..n).collect();
    for _ in 0..6 {
        all.shuffle(&mut rng);
        let size = 1 + (all[0] % n);
        let tset = CoordSet::from_indices(all[..size].iter().copied());
        for s in tset.subsets().filter(|s| s.len() <= MAX_SET_SIZE) {
            let got = prop35_cst_via_dual(code, s, tset);
            let want = hist.between(s, tset);
            t.record("shortened_count", got.as_ref().ok() == Some(&want), || {
                format!("{label}, S={s}, T={tset}: {got:?} vs {want}")
            });
        }
    }

    // level-t sums back down to A, |A| <= 1
    for tt in 1..=MAX_SET_SIZE.min(n) {
        let level = RefinedWeightTable::from_histogram(&hist, subsets_of_size(n, tt));
        for a in small_sets(n, 1).into_iter().filter(|a| a.len() <= tt) {
            let want = hist.refined(a);
            for i in tt..=n {
                let got = lemma33_downlevel(&level, a, tt, i);
                t.record("downlevel", got.as_ref().ok() == Some(&want[i]), || {
                    format!("{label}, A={a}, t={tt}, i={i}: {got:?} vs {}", want[i])
                });
            }
        }
    }

    // W_i(C) as the coordinate average
    let weights = hist.refined(CoordSet::default());
    for i in 1..=n {
        let total: u128 = (0..n).map(|j| hist.refined(CoordSet::singleton(j))[i]).sum();
        t.record("coordinate_average", total == weights[i] * i as u128, || {
            format!("{label}, i={i}: {total} vs {} * {i}", weights[i])
        });
    }

    // field-size predicates
    // the argument needs a second independent codeword
    let sharp = d as i64 <= field_singleton_sharp(q, n, k);
    if k >= 2 {
        t.record("field_singleton", sharp, || format!("{label}, d={d}"));
    } else {
        t.edge("field_singleton_k1", sharp);
    }
    let hierarchy = weight_hierarchy(code, budget)?;
    t.record(
        "wei_singleton",
        hierarchy.len() == k && wei_singleton_check(&hierarchy, n),
        || format!("{label}: {hierarchy:?}"),
    );
    t.record("wei_singleton", hierarchy.first() == Some(&d), || {
        format!("{label}: d_1 vs d={d}")
    });
    for c in wei_ratio_check(&hierarchy, q) {
        t.record("wei_ratio", c.holds, || {
            format!("{label}, i={}: {} > {}", c.i, c.lhs, c.rhs)
        });
    }
    if k >= 2 {
        let ok = second_weight_field_bound(d, hierarchy[1], q).is_ok_and(|cap| d <= cap);
        t.record("second_weight_field", ok, || {
            format!("{label}: d={d}, d_2={}", hierarchy[1])
        });
    }
    for s in sets.iter().filter(|s| s.len() < k && s.len() <= 2) {
        if let Some(c) = prop51_weight_check(code, *s, budget)? {
            if s.is_empty() {
                // nothing forces the modified word to stay nonzero
                t.edge("shortened_weight_empty_set", c.holds);
            } else {
                t.record("shortened_weight", c.holds, || {
                    format!("{label}, S={s}: {} > {}", c.min_weight, c.rhs)
                });
            }
        }
    }

    // the dual hierarchy route to d_i
    let mu = mu_parameters(code, budget)?;
    for i in 1..=k {
        t.record("mu_hierarchy", hierarchy[i - 1] + mu[i - 1] == n - k + i + 1, || {
            format!("{label}, i={i}: d_i={}, mu_i={}", hierarchy[i - 1], mu[i - 1])
        });
    }

    // locality-dependent predicates, only when every coordinate has a repair set
    if let Ok(profile) = locality_profile(code, budget) {
        let r = profile.r_min;
        t.record("gen_singleton", gen_singleton_d(n, k, r) >= d as i64, || {
            format!("{label}, r={r}, d={d}")
        });
        for i in 1..=k {
            let cap = lrc_genweight_bound(n, k, r, i)?;
            t.record("lrc_genweight", hierarchy[i - 1] as i64 <= cap, || {
                format!("{label}, r={r}, i={i}: {} > {cap}", hierarchy[i - 1])
            });
            t.record("mu_locality", mu[i - 1] >= (k - i + 1).div_ceil(r), || {
                format!("{label}, r={r}, i={i}: mu_i={}", mu[i - 1])
            });
        }
        if k >= 2 {
            let c = dual_distance_bound(q, n, k, d, r, d_dual)?;
            let ok = c.holds == Some(true);
            // the inequality applies the k >= 2 form of the sharp bound to C⊥
            if n - k >= 2 {
                t.record("dual_distance", ok, || format!("{label}, r={r}, d⊥={d_dual:?}"));
            } else {
                t.edge("dual_distance_dual_dim1", ok);
            }
            if is_optimal_params(n, k, d, r) {
                let gap = optimal_lrc_d2_gap(n, k, d, r)?;
                t.record(
                    "optimal_d2_gap",
                    gap.admits(hierarchy[1]) && d <= optimal_lrc_field_bound(q, k, r),
                    || format!("{label}, r={r}: d_2={} vs {gap:?}", hierarchy[1]),
                );
            }
        }
    }
    Ok(t)
}

/// Generates the corpus and runs every check; codes are split across threads
/// and merged back in corpus order.
pub fn run_verify(config: &CorpusConfig, budget: u64) -> Result<VerifySummary> {
    let corpus = generate_corpus(config)?;
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(corpus.len().max(1));
    let chunk = corpus.len().div_ceil(workers).max(1);
    let tallies: Vec<Result<Tally>> = std::thread::scope(|scope| {
        let handles: Vec<_> = corpus
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut merged = Tally::default();
                    for entry in part {
                        merged.merge(check_code(entry, config.seed, budget)?);
                    }
                    Ok(merged)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });
    let mut checks: BTreeMap<String, CheckCount> = CHECKS
        .iter()
        .map(|(n, _)| (n.to_string(), CheckCount::default()))
        .collect();
    let mut all = Tally::default();
    for tally in tallies {
        all.merge(tally?);
    }
    for (name, c) in all.counts {
        checks.insert(name.to_string(), c);
    }
    let mut edge_cases: BTreeMap<String, CheckCount> = EDGE_CHECKS
        .iter()
        .map(|(n, _)| (n.to_string(), CheckCount::default()))
        .collect();
    for (name, c) in all.edge {
        edge_cases.insert(name.to_string(), c);
    }
    let mut failures = all.failures;
    failures.truncate(FAILURE_LOG);
    let mut codes_per_field = BTreeMap::new();
    for entry in &corpus {
        *codes_per_field.entry(entry.code.q()).or_insert(0) += 1;
    }
    Ok(VerifySummary {
        config: config.clone(),
        codes: corpus.len(),
        codes_per_field,
        checks,
        edge_cases,
        failures,
    })
}
