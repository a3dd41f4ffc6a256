use lrc_core::codecore::named::{
    dual_mass_counterexample, dual_mass_counterexample_parity, hamming_7_4, repetition, simplex_7_3,
};
use lrc_core::codecore::{dot, parse_code, support, weight, CoordSet, DEFAULT_BUDGET};
use lrc_core::{Field, FieldElement, LinearCode, LrcError};
use proptest::prelude::*;

const B: u64 = DEFAULT_BUDGET;

fn set(labels: &[usize], n: usize) -> CoordSet {
    CoordSet::from_labels(labels, n).unwrap()
}

fn words(code: &LinearCode) -> Vec<Vec<u16>> {
    code.codewords(B)
        .unwrap()
        .map(|w| w.iter().map(|x| x.0).collect())
        .collect()
}

/// Every vector of GF(q)^n, oracle for duals and shortenings.
fn ambient(q: u32, n: usize) -> Vec<Vec<FieldElement>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q as u16).map(move |x| {
                    let mut w = v.clone();
                    w.push(FieldElement(x));
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn generator_examples() {
    assert_eq!(dual_mass_counterexample().k(), 3);
    assert_eq!(dual_mass_counterexample().n(), 5);
    assert_eq!(simplex_7_3().k(), 3);
    assert_eq!(simplex_7_3().n(), 7);
    let f = Field::new(2).unwrap();
    let zero = LinearCode::from_entries(&f, 4, &[vec![0, 0, 0, 0]]).unwrap();
    assert_eq!(zero.k(), 0);
    assert_eq!(words(&zero), vec![vec![0; 4]]);
    assert_eq!(zero.min_distance(B).unwrap_err(), LrcError::ZeroCode);
}

#[test]
fn parity_rows_span_the_dual() {
    let c = dual_mass_counterexample();
    assert_eq!(c.dual(), dual_mass_counterexample_parity());
    let h = dual_mass_counterexample_parity();
    for g in c.generator().to_rows() {
        for row in h.generator().to_rows() {
            assert!(dot(c.field(), &g, &row).is_zero());
        }
    }
    assert_eq!(
        words(&h),
        vec![
            vec![0, 0, 0, 0, 0],
            vec![0, 1, 1, 1, 1],
            vec![1, 0, 0, 1, 1],
            vec![1, 1, 1, 0, 0]
        ]
    );
}

#[test]
fn dual_is_involution_and_matches_brute_force() {
    let s = simplex_7_3();
    assert_eq!(s.dual().dual(), s);
    let rep = repetition(2, 3).unwrap();
    let mut even = words(&rep.dual());
    even.sort();
    assert_eq!(even, vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
}

#[test]
fn simplex_enumeration_and_distance() {
    let s = simplex_7_3();
    let all = words(&s);
    assert_eq!(all.len(), 8);
    assert_eq!(
        all.iter()
            .filter(|w| w.iter().filter(|&&x| x != 0).count() == 4)
            .count(),
        7
    );
    assert_eq!(s.min_distance(B).unwrap(), 4);
    assert_eq!(hamming_7_4().min_distance(B).unwrap(), 3);
    assert_eq!(dual_mass_counterexample().min_distance(B).unwrap(), 2);
    for n in 1..6 {
        assert_eq!(repetition(3, n).unwrap().min_distance(B).unwrap(), n);
    }
}

#[test]
fn shortening_examples() {
    let s = simplex_7_3();
    assert_eq!(s.shorten_to(CoordSet::full(7)).unwrap(), s);
    assert_eq!(s.shorten_to(CoordSet::EMPTY).unwrap().k(), 0);
    let t = set(&[1, 2, 4], 7);
    let oracle = words(&s)
        .iter()
        .filter(|w| w.iter().enumerate().all(|(i, &x)| x == 0 || t.contains(i)))
        .count();
    let short = s.shorten_to(t).unwrap();
    assert_eq!(2usize.pow(short.k() as u32), oracle);
    // no weight-4 support fits inside three coordinates
    assert_eq!(short.k(), 0);
    assert_eq!(s.shortened_dim(t), 0);
    let row1 = set(&[1, 4, 6, 7], 7);
    assert_eq!(s.shorten_to(row1).unwrap().k(), 1);
    assert_eq!(s.shorten_to(set(&[1, 2, 4, 5, 6, 7], 7)).unwrap().k(), 2);
}

#[test]
fn projection_examples() {
    let s = simplex_7_3();
    assert_eq!(s.project(CoordSet::full(7)).unwrap(), s);
    assert_eq!(s.project(set(&[1, 2, 3], 7)).unwrap().k(), 3);
    assert_eq!(s.project(CoordSet::EMPTY).unwrap_err(), LrcError::EmptyProjection);
}

#[test]
fn degeneracy() {
    assert!(simplex_7_3().is_nondegenerate());
    assert!(dual_mass_counterexample().is_nondegenerate());
    let f = Field::new(2).unwrap();
    let c = LinearCode::from_entries(&f, 3, &[vec![1, 1, 0]]).unwrap();
    assert!(!c.is_nondegenerate());
    assert_eq!(c.degenerate_coordinate(), Some(2));
}

#[test]
fn file_formats() {
    let text = "2 7 3\n1 0 0 1 0 1 1\n0 1 0 1 1 0 1\n0 0 1 0 1 1 1\n";
    assert_eq!(parse_code(text).unwrap(), simplex_7_3());
    let json = r#"{"q": 2, "n": 5, "generator": [[1,1,0,1,0],[0,1,1,0,0],[0,0,0,1,1]]}"#;
    assert_eq!(parse_code(json).unwrap(), dual_mass_counterexample());
    let roundtrip = lrc_core::codecore::io::to_json(&simplex_7_3());
    assert_eq!(parse_code(&roundtrip).unwrap(), simplex_7_3());
    assert!(matches!(parse_code(""), Err(LrcError::Parse(_))));
    assert!(matches!(parse_code("2 3 2\n1 1 1\n"), Err(LrcError::Parse(_))));
    assert!(matches!(parse_code("2 3 1\n1 1\n"), Err(LrcError::RaggedRows { .. })));
    assert!(matches!(
        parse_code("2 3 1\n1 2 1\n"),
        Err(LrcError::InvalidElement { .. })
    ));
    let gf9 = r#"{"q": 9, "modulus": [2, 2, 1], "n": 2, "generator": [[1, 5]]}"#;
    assert_eq!(parse_code(gf9).unwrap().field().modulus(), &[2, 2, 1]);
}

#[test]
fn budget_guard() {
    let s = simplex_7_3();
    assert_eq!(
        s.for_each_codeword(7, |_| ()).unwrap_err(),
        LrcError::BudgetExceeded { needed: 8, budget: 7 }
    );
    assert!(s.codewords(8).is_ok());
}

fn arb_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 1usize..=7, 1usize..=4).prop_flat_map(|(q, n, k)| {
        prop::collection::vec(prop::collection::vec(0..q as u64, n), k)
            .prop_map(move |rows| LinearCode::from_entries(&Field::new(q).unwrap(), n, &rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn dimensions_add_up(c in arb_code()) {
        prop_assert_eq!(c.k() + c.dual().k(), c.n());
    }

    #[test]
    fn dual_matches_orthogonal_complement(c in arb_code()) {
        let f = c.field().clone();
        let gens = c.generator().to_rows();
        let dual = c.dual();
        let mut count = 0u128;
        for v in ambient(c.q(), c.n()) {
            let orth = gens.iter().all(|g| dot(&f, g, &v).is_zero());
            prop_assert_eq!(orth, dual.contains(&v));
            count += orth as u128;
        }
        prop_assert_eq!(count, dual.size());
    }

    #[test]
    fn singleton_and_distance_sides_agree(c in arb_code()) {
        prop_assume!(c.k() >= 1);
        let d = c.min_distance(B).unwrap();
        prop_assert!(d + c.k() <= c.n() + 1);
        let direct = c.codewords(B).unwrap().skip(1).map(|w| weight(&w)).min().unwrap();
        prop_assert_eq!(d, direct);
        let all: Vec<u128> = c.enumerated_weights(B).unwrap();
        let mac: Vec<u128> = c.weight_distribution(B).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        prop_assert_eq!(all, mac);
    }

    #[test]
    fn rref_is_canonical(c in arb_code(), seed in 0u64..1000) {
        // random invertible recombination of the generator rows
        let f = c.field().clone();
        let rows = c.generator().to_rows();
        let k = rows.len();
        let mut mixed = rows.clone();
        for r in 0..k {
            let mult = FieldElement(1 + ((seed as u16 + r as u16) % (c.q() as u16 - 1)));
            for v in mixed[r].iter_mut() { *v = f.mul(*v, mult); }
            if r + 1 < k {
                let next = rows[r + 1].clone();
                for (v, w) in mixed[r].iter_mut().zip(next) { *v = f.add(*v, w); }
            }
        }
        mixed.reverse();
        let again = LinearCode::from_generator(&f, c.n(), &mixed).unwrap();
        prop_assert_eq!(again, c);
    }

    #[test]
    fn shorten_project_duality(c in arb_code(), mask in 1u64..128) {
        let s = CoordSet(mask & CoordSet::full(c.n()).0);
        prop_assume!(!s.is_empty() && s.len() <= 4);
        let lhs = c.project(s).unwrap().dual();
        let rhs = c.dual().shorten_to(s).unwrap().project(s).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(c.shortened_dim(s) + c.projected_dim(s.complement(c.n())), c.k());
        prop_assert_eq!(c.shorten_to(s).unwrap().k(), c.shortened_dim(s));
        for w in c.shorten_to(s).unwrap().codewords(B).unwrap() {
            prop_assert!(support(&w).is_subset(s));
            prop_assert!(c.contains(&w));
        }
    }
}
