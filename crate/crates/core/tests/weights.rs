use lrc_core::codecore::named::{
    dual_mass_counterexample, dual_mass_counterexample_parity, hamming_7_4, reed_muller_first_order, repetition,
    simplex_7_3,
};
use lrc_core::codecore::{subsets_of_size, support, CoordSet, MatrixGF, DEFAULT_BUDGET};
use lrc_core::weights::*;
use lrc_core::{Field, FieldElement, LinearCode, LrcError};
use proptest::prelude::*;

const B: u64 = DEFAULT_BUDGET;

fn set(labels: &[usize], n: usize) -> CoordSet {
    CoordSet::from_labels(labels, n).unwrap()
}

fn all_words(c: &LinearCode) -> Vec<Vec<FieldElement>> {
    c.codewords(B).unwrap().collect()
}

/// Locality straight from recovery sets: the least |S|, i ∉ S, such that no
/// codeword vanishing on S is nonzero at i.
fn locality_oracle(c: &LinearCode) -> usize {
    let words = all_words(c);
    let n = c.n();
    (0..n)
        .map(|i| {
            (0..n)
                .find(|&size| {
                    subsets_of_size(n, size).any(|s| {
                        !s.contains(i)
                            && words
                                .iter()
                                .all(|w| !s.indices().all(|j| w[j].is_zero()) || w[i].is_zero())
                    })
                })
                .unwrap()
        })
        .max()
        .unwrap()
}

/// d_i as the least support of any i linearly independent codewords.
fn hierarchy_oracle(c: &LinearCode) -> Vec<usize> {
    let words: Vec<_> = all_words(c).into_iter().skip(1).collect();
    let mut best = vec![usize::MAX; c.k()];
    let f = c.field().clone();
    let mut pick = vec![];
    fn rec(f: &Field, words: &[Vec<FieldElement>], start: usize, pick: &mut Vec<usize>, best: &mut [usize], n: usize) {
        if !pick.is_empty() {
            let rows: Vec<_> = pick.iter().map(|&p| words[p].clone()).collect();
            let rank = MatrixGF::from_rows(f, n, &rows).unwrap().rank();
            if rank < pick.len() {
                return;
            }
            let supp = pick.iter().fold(CoordSet::EMPTY, |a, &p| a.union(support(&words[p])));
            best[rank - 1] = best[rank - 1].min(supp.len());
        }
        if pick.len() == best.len() {
            return;
        }
        for p in start..words.len() {
            pick.push(p);
            rec(f, words, p + 1, pick, best, n);
            pick.pop();
        }
    }
    rec(&f, &words, 0, &mut pick, &mut best, c.n());
    best
}

#[test]
fn distributions_of_named_codes() {
    let s = weight_distribution(&simplex_7_3(), B).unwrap();
    assert_eq!(s.counts, vec![1, 0, 0, 0, 7, 0, 0, 0]);
    assert_eq!(s.total(), 8);
    for q in [2, 3, 5] {
        let w = weight_distribution(&repetition(q, 5).unwrap(), B).unwrap();
        assert_eq!(w.counts, vec![1, 0, 0, 0, 0, q as u128 - 1]);
    }
    let h = weight_distribution(&dual_mass_counterexample_parity(), B).unwrap();
    assert_eq!(h.counts, vec![1, 0, 0, 2, 1, 0]);
}

#[test]
fn refined_examples() {
    let s = simplex_7_3();
    assert_eq!(refined_weight_distribution(&s, set(&[1], 7), B).unwrap()[4], 4);
    assert_eq!(
        refined_weight_distribution(&s, CoordSet::EMPTY, B).unwrap(),
        weight_distribution(&s, B).unwrap().counts
    );
    let h = dual_mass_counterexample_parity();
    let w = refined_weight_distribution(&h, set(&[1], 5), B).unwrap();
    assert_eq!((w[3], w[4]), (2, 0));
    assert_eq!(w[..=4].iter().sum::<u128>(), 2);
    assert_eq!(w[0], 0);
}

#[test]
fn downlevel_examples() {
    let s = simplex_7_3();
    let level1 = RefinedWeightTable::level(&s, 1, B).unwrap();
    assert_eq!(lemma33_downlevel(&level1, CoordSet::EMPTY, 1, 4).unwrap(), 7);
    let a = set(&[3], 7);
    assert_eq!(lemma33_downlevel(&level1, a, 1, 4).unwrap(), level1.get(a, 4).unwrap());
    let h = dual_mass_counterexample_parity();
    let level1 = RefinedWeightTable::level(&h, 1, B).unwrap();
    let sum: u128 = (0..5).map(|j| level1.get(CoordSet::singleton(j), 3).unwrap()).sum();
    assert_eq!(sum, 6);
    assert_eq!(lemma33_downlevel(&level1, CoordSet::EMPTY, 1, 3).unwrap(), 2);

    let mut bad = level1.clone();
    bad.insert(CoordSet::singleton(0), vec![0, 0, 0, 3, 0, 0]);
    assert!(matches!(
        lemma33_downlevel(&bad, CoordSet::EMPTY, 1, 3),
        Err(LrcError::NonIntegral(_))
    ));
    let singles = RefinedWeightTable::singletons(&h, B).unwrap();
    assert!(matches!(
        lemma33_downlevel(&singles, CoordSet::EMPTY, 2, 3),
        Err(LrcError::MissingTableEntry(_))
    ));
}

#[test]
fn cst_examples() {
    let s = simplex_7_3();
    assert_eq!(cst_cardinality(&s, CoordSet::EMPTY, CoordSet::full(7), B).unwrap(), 8);
    assert_eq!(cst_cardinality(&s, set(&[1], 7), CoordSet::full(7), B).unwrap(), 4);
    let err = cst_cardinality(&s, set(&[1], 7), set(&[2, 3, 4, 5, 6, 7], 7), B).unwrap_err();
    assert!(matches!(err, LrcError::NotSubset { .. }));
}

#[test]
fn locality_examples() {
    let s = locality_profile(&simplex_7_3(), B).unwrap();
    assert_eq!(s.r_min, 2);
    assert_eq!(s.per_coord_r, vec![2; 7]);
    assert_eq!(locality_profile(&repetition(2, 6).unwrap(), B).unwrap().r_min, 1);
    assert_eq!(locality_profile(&dual_mass_counterexample(), B).unwrap().r_min, 2);
    let f = Field::new(2).unwrap();
    let degenerate = LinearCode::from_entries(&f, 3, &[vec![1, 1, 0]]).unwrap();
    assert_eq!(locality_profile(&degenerate, B).unwrap_err(), LrcError::Degenerate(3));
}

#[test]
fn rdelta_examples() {
    let c = dual_mass_counterexample();
    let v = is_rdelta_lrc(&c, 2, 3, RepairConvention::Containing, B).unwrap();
    assert!(!v.holds);
    assert_eq!(v.witnesses[0], None);

    let s = simplex_7_3();
    let v = is_rdelta_lrc(&s, 2, 2, RepairConvention::Containing, B).unwrap();
    assert!(v.holds);
    for (i, w) in v.witnesses.iter().enumerate() {
        let w = w.unwrap();
        assert!(w.contains(i) && w.len() <= 3);
        assert!(s.project(w).unwrap().min_distance(B).unwrap() >= 2);
    }
    assert!(!is_rdelta_lrc(&s, 1, 2, RepairConvention::Containing, B).unwrap().holds);
    assert_eq!(
        smallest_r_for_delta(&s, 2, RepairConvention::Containing, B).unwrap(),
        Some(2)
    );

    // the wider Excluding convention admits groups of size r + delta + 1 = 6
    let wide = is_rdelta_lrc(&c, 2, 3, RepairConvention::Excluding, B).unwrap();
    assert!(!wide.holds, "π_R(C) for |R| = 5 is C itself, distance 2");
    assert!(is_rdelta_lrc(&c, 0, 3, RepairConvention::Containing, B).is_err());
}

#[test]
fn dual_mass_examples() {
    let m = prop41_dual_mass(&dual_mass_counterexample(), 2, 3, B).unwrap();
    assert_eq!(m.sums, vec![2; 5]);
    assert_eq!(m.threshold, 2);
    assert!(m.all_hold());
    let m = prop41_dual_mass(&simplex_7_3(), 2, 2, B).unwrap();
    assert!(m.sums.iter().all(|&s| s >= 1));
    assert!(m.all_hold());
    assert!(!prop41_dual_mass(&simplex_7_3(), 1, 2, B).unwrap().all_hold());
}

#[test]
fn hierarchy_examples() {
    let s = generalized_weights(&simplex_7_3(), B).unwrap();
    assert_eq!(s.d, vec![4, 6, 7]);
    assert_eq!(s.mu, vec![2, 1, 1]);
    assert_eq!(hierarchy_oracle(&simplex_7_3()), vec![4, 6, 7]);
    let h = generalized_weights(&hamming_7_4(), B).unwrap();
    assert_eq!(h.d, vec![3, 5, 6, 7]);
    assert_eq!(hierarchy_oracle(&hamming_7_4()), vec![3, 5, 6, 7]);
    assert_eq!(generalized_weights(&repetition(3, 6).unwrap(), B).unwrap().d, vec![6]);
    // full space: dual is zero, so mu needs the infinite sentinel
    let f = Field::new(2).unwrap();
    let full = LinearCode::from_entries(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let g = generalized_weights(&full, B).unwrap();
    assert_eq!(g.d, vec![1, 2, 3]);
    assert_eq!(g.mu, vec![1, 1, 1]);
}

#[test]
fn optimality_examples() {
    let v = is_optimal_lrc(&simplex_7_3(), B).unwrap();
    assert!(v.optimal);
    assert_eq!((v.r, v.d, v.dual_weight_at_ceil), (2, 4, Some(5)));
    for n in 2..7 {
        assert!(is_optimal_lrc(&repetition(2, n).unwrap(), B).unwrap().optimal);
    }
    // [7,4,3] with r = 3 meets the bound too: 4 + 2 = 7 - 3 + 2
    assert!(is_optimal_lrc(&hamming_7_4(), B).unwrap().optimal);
    let rm = is_optimal_lrc(&reed_muller_first_order(4), B).unwrap();
    assert_eq!((rm.k, rm.d, rm.r), (5, 8, 3));
    assert!(!rm.optimal);
}

fn arb_nondegenerate() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u32, 3, 4]), 3usize..=7, 1usize..=3)
        .prop_flat_map(|(q, n, k)| {
            prop::collection::vec(prop::collection::vec(0..q as u64, n), k)
                .prop_map(move |rows| LinearCode::from_entries(&Field::new(q).unwrap(), n, &rows).unwrap())
        })
        .prop_filter("non-degenerate and non-trivial", |c| {
            c.is_nondegenerate() && c.is_nontrivial()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn refined_monotone_and_lemma44(c in arb_nondegenerate()) {
        let n = c.n();
        let hist = SupportHistogram::new(&c, B).unwrap();
        let classical = hist.refined(CoordSet::EMPTY);
        for s in (0..1u64 << n).map(CoordSet) {
            let ws = hist.refined(s);
            for i in 0..s.len() { prop_assert_eq!(ws[i], 0); }
            for j in s.complement(n).indices() {
                let bigger = hist.refined(s.union(CoordSet::singleton(j)));
                for i in 0..=n { prop_assert!(bigger[i] <= ws[i]); }
            }
        }
        for i in 1..=n {
            let sum: u128 = (0..n).map(|j| hist.refined(CoordSet::singleton(j))[i]).sum();
            prop_assert_eq!(sum, i as u128 * classical[i]);
        }
    }

    #[test]
    fn locality_matches_recovery_sets(c in arb_nondegenerate()) {
        match locality_profile(&c, B) {
            Ok(p) => prop_assert_eq!(p.r_min, locality_oracle(&c)),
            Err(LrcError::Precondition(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn hierarchy_properties(c in arb_nondegenerate()) {
        let g = generalized_weights(&c, B).unwrap();
        let (n, k, q) = (c.n(), c.k(), c.q() as u128);
        prop_assert_eq!(&g.d, &hierarchy_oracle(&c));
        prop_assert_eq!(g.d[0], c.min_distance(B).unwrap());
        for i in 1..=k {
            prop_assert!(g.d[i - 1] <= n - k + i);
            if i >= 2 {
                prop_assert!(g.d[i - 2] < g.d[i - 1]);
                let qi = q.pow(i as u32);
                prop_assert!((qi - 1) * g.d[i - 2] as u128 <= (qi - q) * g.d[i - 1] as u128);
            }
        }
    }

    #[test]
    fn rdelta_implies_dual_mass(c in arb_nondegenerate(), r in 1usize..4, delta in 2usize..4) {
        let v = is_rdelta_lrc(&c, r, delta, RepairConvention::Containing, B).unwrap();
        let m = prop41_dual_mass(&c, r, delta, B).unwrap();
        if v.holds { prop_assert!(m.all_hold()); }
        if delta == 2 {
            // both reduce to locality <= r
            prop_assert_eq!(v.holds, m.all_hold());
        }
    }
}
