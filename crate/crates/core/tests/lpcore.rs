use lrc_core::codecore::named::{dual_mass_counterexample, simplex_7_3};
use lrc_core::codecore::{CoordSet, DEFAULT_BUDGET};
use lrc_core::combin::{binom_q, pow_q, Rational};
use lrc_core::lpcore::*;
use lrc_core::weights::SupportHistogram;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn frac(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn p(q: u32, n: usize, d: usize, r: usize, delta: usize) -> LrcParams {
    LrcParams { q, n, d, r, delta }
}

#[test]
fn simplex_examples() {
    let mut lp = LpProblem::new(1, Sense::Minimize, vec![int(1)]);
    lp.add("x>=3", vec![int(1)], Relation::Ge, int(3));
    let s = simplex_solve(&lp);
    assert_eq!(s.status, LpStatus::Optimal);
    assert_eq!(s.value, Some(int(3)));

    let mut lp = LpProblem::new(1, Sense::Minimize, vec![int(1)]);
    lp.add("x>=1", vec![int(1)], Relation::Ge, int(1));
    lp.add("x<=0", vec![int(1)], Relation::Le, int(0));
    assert_eq!(simplex_solve(&lp).status, LpStatus::Infeasible);

    let mut lp = LpProblem::new(2, Sense::Minimize, vec![int(1), int(1)]);
    lp.add("a", vec![int(1), int(2)], Relation::Ge, int(4));
    lp.add("b", vec![int(3), int(1)], Relation::Ge, int(6));
    let s = simplex_solve(&lp);
    assert_eq!(s.value, Some(frac(14, 5)));
    assert_eq!(s.assignment, vec![frac(8, 5), frac(6, 5)]);
    assert!(lp.violations(&s.assignment).is_empty());

    let mut lp = LpProblem::new(1, Sense::Maximize, vec![int(1)]);
    lp.add("x>=1", vec![int(1)], Relation::Ge, int(1));
    assert_eq!(simplex_solve(&lp).status, LpStatus::Unbounded);
}

#[test]
fn simplex_bounds_equalities_and_degeneracy() {
    // max 3x + 2y, x + y = 4, x - y <= 2, y >= 1/2, x >= -1
    let mut lp = LpProblem::new(2, Sense::Maximize, vec![int(3), int(2)]);
    lp.lower_bounds = vec![int(-1), frac(1, 2)];
    lp.add("sum", vec![int(1), int(1)], Relation::Eq, int(4));
    lp.add("gap", vec![int(1), int(-1)], Relation::Le, int(2));
    let s = simplex_solve(&lp);
    assert_eq!(s.assignment, vec![int(3), int(1)]);
    assert_eq!(s.value, Some(int(11)));

    // a classic cycling example under largest-coefficient pivoting
    let mut lp = LpProblem::new(4, Sense::Maximize, vec![frac(3, 4), int(-150), frac(1, 50), int(-6)]);
    lp.add(
        "r1",
        vec![frac(1, 4), int(-60), frac(-1, 25), int(9)],
        Relation::Le,
        int(0),
    );
    lp.add(
        "r2",
        vec![frac(1, 2), int(-90), frac(-1, 50), int(3)],
        Relation::Le,
        int(0),
    );
    lp.add("r3", vec![int(0), int(0), int(1), int(0)], Relation::Le, int(1));
    let s = simplex_solve(&lp);
    assert_eq!(s.status, LpStatus::Optimal);
    assert_eq!(s.value, Some(frac(1, 20)));

    // redundant equality rows leave a zero-level artificial behind
    let mut lp = LpProblem::new(2, Sense::Minimize, vec![int(1), int(2)]);
    lp.add("e1", vec![int(1), int(1)], Relation::Eq, int(2));
    lp.add("e2", vec![int(2), int(2)], Relation::Eq, int(4));
    assert_eq!(simplex_solve(&lp).value, Some(int(2)));
}

/// The nested sum of the single-coordinate coefficient, written out again
/// from the level-one refined identity rather than the two-branch form.
fn coefficient_oracle(q: u32, n: usize, i: usize, j: usize, same: bool) -> Rational {
    // inclusion-exclusion over D ⊆ {l} ∩ {s} and B ⊆ D, term by term
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let qm1 = int(q as i64 - 1);
    let mut total = Rational::zero();
    for t in 1..=n {
        let mut inner = binom_q(n - 1 - j, t - 1) / binom_q(j, 1);
        if same {
            // D = {l}: B = ∅ and B = {l}
            inner -= binom_q(n - 1 - j, t - 1) / binom_q(j - 1, 0);
            inner -= qm1.recip() * binom_q(n - j, t - 1) / binom_q(j - 1, 0);
        }
        let sign = if (i - t).rem_euclid(2) == 0 { int(1) } else { int(-1) };
        total += sign * pow_q(q, t) * binom_q(n - t, i - t) * inner;
    }
    total * frac(q as i64 - 1, q as i64)
}

#[test]
fn notation45_against_oracle() {
    let v = notation45_coefficient(2, 5, 2, 1, 3, 2, 1).unwrap();
    assert_eq!(v, coefficient_oracle(2, 5, 2, 3, false));
    for q in [2u32, 3, 4] {
        for n in 2..=7 {
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(
                        notation45_coefficient(q, n, i, 2, j, 2, 1).unwrap(),
                        coefficient_oracle(q, n, i, j, true)
                    );
                    assert_eq!(
                        notation45_coefficient(q, n, i, 2, j, 1, 1).unwrap(),
                        coefficient_oracle(q, n, i, j, false)
                    );
                }
            }
        }
    }
    assert_eq!(notation45_coefficient(2, 5, 2, 1, 1, 1, 2).unwrap(), Rational::zero());
    assert!(notation45_coefficient(2, 5, 0, 1, 1, 1, 1).is_err());
    assert!(notation45_coefficient(2, 5, 1, 6, 1, 1, 1).is_err());
}

#[test]
fn dual_functional_reproduces_scaled_weights() {
    for code in [dual_mass_counterexample(), simplex_7_3()] {
        let (q, n, k) = (code.q(), code.n(), code.k());
        let model = build_lrc_lp(p(q, n, 1, 1, 2)).unwrap();
        let dual = SupportHistogram::new(&code.dual(), DEFAULT_BUDGET).unwrap();
        let primal = SupportHistogram::new(&code, DEFAULT_BUDGET).unwrap();
        let mut x = vec![Rational::zero(); n * n];
        for j in 1..=n {
            let w = dual.refined(CoordSet::singleton(j - 1));
            for i in 1..=n {
                x[model.var_index(i, j)] = Rational::from_integer(w[i].into());
            }
        }
        for i in 1..=n {
            for l in 1..=n {
                let expect = pow_q(q, (n - k) as i64)
                    * Rational::from_integer(primal.refined(CoordSet::singleton(l - 1))[i].into());
                assert_eq!(model.dual_value(i, l, &x), expect, "i={i} l={l}");
            }
        }
    }
}

#[test]
fn model_shape() {
    let params = p(2, 10, 4, 2, 2);
    let model = build_lrc_lp(params).unwrap();
    let n = 10;
    let c = model.census();
    assert_eq!(c.distance, n * 3);
    assert_eq!(c.no_weight_one, n);
    assert_eq!(c.mass, n);
    assert_eq!(c.sign, 2 * n * n);
    // with delta = 2 the mass rows ask for q - 1 = 1 over weights 1..=r+1
    let mass = model.problem.constraints.iter().find(|c| c.name == "mass[1]").unwrap();
    assert_eq!(mass.rhs, int(1));
    assert_eq!(mass.coeffs.iter().filter(|v| !v.is_zero()).count(), 3);
    assert!(build_lrc_lp(p(6, 10, 4, 2, 2)).is_err());
    assert!(build_lrc_lp(p(2, 10, 11, 2, 2)).is_err());
    assert!(build_lrc_lp(p(2, 10, 4, 2, 1)).is_err());
}

#[test]
fn symmetric_optimum_is_feasible_for_full_model() {
    for params in [p(2, 10, 4, 2, 2), p(4, 9, 3, 3, 2), p(2, 16, 8, 5, 3)] {
        let sym = simplex_solve(&build_symmetric_lrc_lp(params).unwrap());
        let model = build_lrc_lp(params).unwrap();
        let n = params.n;
        let lifted: Vec<Rational> = (0..n * n).map(|c| sym.assignment[c / n].clone()).collect();
        assert!(model.problem.violations(&lifted).is_empty());
        assert_eq!(model.problem.objective_at(&lifted), sym.value.clone().unwrap());
    }
}

#[test]
fn full_and_symmetric_models_agree() {
    for params in [
        p(2, 5, 2, 2, 2),
        p(2, 6, 3, 2, 2),
        p(3, 5, 3, 2, 2),
        p(2, 6, 2, 2, 3),
        p(2, 7, 4, 2, 2),
    ] {
        let full = simplex_solve(&build_lrc_lp(params).unwrap().problem);
        let sym = simplex_solve(&build_symmetric_lrc_lp(params).unwrap());
        assert_eq!(full.status, sym.status, "{params:?}");
        assert_eq!(full.value, sym.value, "{params:?}");
    }
}

#[test]
fn genuine_code_is_feasible_and_dominates() {
    // the simplex code is a (2,2)-LRC of length 7 and distance 4
    let code = simplex_7_3();
    let params = p(2, 7, 4, 2, 2);
    let model = build_lrc_lp(params).unwrap();
    let dual = SupportHistogram::new(&code.dual(), DEFAULT_BUDGET).unwrap();
    let mut x = vec![Rational::zero(); 49];
    for j in 1..=7 {
        let w = dual.refined(CoordSet::singleton(j - 1));
        for i in 1..=7 {
            x[model.var_index(i, j)] = Rational::from_integer(w[i].into());
        }
    }
    assert!(model.problem.violations(&x).is_empty());
    let objective = model.problem.objective_at(&x);
    assert_eq!(objective, int(15));
    let bound = lp_dimension_bound(params).unwrap();
    assert!(bound.mu_star.clone().unwrap() <= objective);
    assert!(kval(&bound.k_max) >= 3);
}

fn kval(k: &KMax) -> i64 {
    match k {
        KMax::AtMost(v) => *v,
        KMax::NoCode => i64::MIN,
    }
}

#[test]
fn exact_optima_match_independent_solver() {
    // optima of the same LP from a separate fraction-arithmetic simplex,
    // with the full n^2 model cross-checked in floating point
    let expect = [
        (p(2, 10, 4, 2, 2), frac(35, 1), 4),
        (p(2, 17, 7, 2, 2), frac(31729, 15), 5),
        (p(2, 18, 8, 2, 2), frac(4095, 1), 6),
        (p(2, 20, 11, 2, 2), frac(131071, 1), 3),
        (p(3, 10, 2, 4, 2), frac(8, 1), 8),
        (p(3, 14, 9, 3, 2), frac(59048, 1), 4),
        (p(3, 25, 5, 5, 2), frac(25507, 8), 17),
        (p(4, 9, 3, 3, 2), frac(135, 2), 5),
        (p(4, 20, 2, 9, 2), frac(15, 1), 18),
        (p(5, 9, 3, 3, 2), frac(1017, 8), 5),
        (p(5, 24, 2, 11, 2), frac(24, 1), 22),
        (p(2, 16, 8, 5, 3), frac(2047, 1), 5),
        (p(2, 17, 10, 5, 3), frac(98299, 5), 2),
    ];
    for (params, mu, k) in expect {
        let b = lp_dimension_bound(params).unwrap();
        assert_eq!(b.mu_star, Some(mu), "{params:?}");
        assert_eq!(b.k_max, KMax::AtMost(k), "{params:?}");
    }
}

#[test]
fn ceiling_of_log_is_exact() {
    assert_eq!(ceil_log(2, &int(1)), 0);
    assert_eq!(ceil_log(2, &int(4096)), 12);
    assert_eq!(ceil_log(2, &(int(4096) + frac(1, 1_000_000_000))), 13);
    assert_eq!(ceil_log(3, &frac(1, 2)), 0);
    assert_eq!(ceil_log(5, &int(25)), 2);
}

#[test]
fn monotone_in_distance_and_locality() {
    for q in [2u32, 3] {
        for n in [8usize, 11] {
            for r in 1..=4 {
                let mut prev = i64::MAX;
                for d in 2..=n / 2 {
                    let k = kval(&lp_dimension_bound(p(q, n, d, r, 2)).unwrap().k_max);
                    assert!(k <= prev, "q={q} n={n} r={r} d={d}");
                    prev = k;
                }
            }
            for d in 2..=4 {
                let mut prev = i64::MIN;
                for r in 1..=5 {
                    let k = kval(&lp_dimension_bound(p(q, n, d, r, 2)).unwrap().k_max);
                    assert!(k >= prev, "q={q} n={n} d={d} r={r}");
                    prev = k;
                }
            }
        }
    }
}

#[test]
fn krawtchouk_examples() {
    assert_eq!(krawtchouk(3, 6, 0, 4), BigInt::one());
    assert_eq!(krawtchouk(3, 6, 1, 4), BigInt::from(6 * 2 - 3 * 4));
    let total: BigInt = (0..=6).map(|k| krawtchouk(4, 6, k, 0)).sum();
    assert_eq!(total, BigInt::from(4096));
}

#[test]
fn delsarte_examples() {
    for n in 1..=8 {
        assert_eq!(delsarte_kopt_bound(2, n, 1).unwrap(), n);
        assert_eq!(delsarte_kopt_bound(3, n, 1).unwrap(), n);
    }
    for n in 2..=12 {
        assert_eq!(delsarte_kopt_bound(2, n, n).unwrap(), 1);
    }
    // optima of the same LP from an independent floating-point solver
    let float = [
        ((2, 10, 4), 42.666666666666664),
        ((2, 10, 3), 85.3333333333333),
        ((2, 12, 5), 40.0),
        ((2, 15, 5), 256.0),
        ((3, 10, 4), 937.2857142857137),
        ((4, 12, 6), 6241.523809523816),
        ((2, 7, 4), 8.0),
        ((2, 8, 8), 2.0),
        ((5, 9, 3), 44642.85714285708),
    ];
    for ((q, n, d), value) in float {
        let exact = delsarte_size_bound(q, n, d).unwrap();
        let approx =
            exact.numer().to_string().parse::<f64>().unwrap() / exact.denom().to_string().parse::<f64>().unwrap();
        assert!((approx - value).abs() < 1e-6 * value, "{q} {n} {d}: {exact}");
    }
    assert_eq!(delsarte_size_bound(2, 10, 4).unwrap(), frac(128, 3));
    assert_eq!(delsarte_kopt_bound(2, 10, 4).unwrap(), 5);
    assert_eq!(delsarte_kopt_bound(2, 15, 5).unwrap(), 8);
    assert_eq!(delsarte_kopt_bound(2, 7, 4).unwrap(), 3);
}

#[test]
fn infeasible_lp_reports_no_code() {
    // a local code of distance 4 needs at least 4 coordinates
    for q in [2u32, 3] {
        for d in 2..=3 {
            let b = lp_dimension_bound(p(q, 3, d, 2, 4)).unwrap();
            assert_eq!(b.k_max, KMax::NoCode);
            assert_eq!(b.mu_star, None);
            assert_eq!(b.k_max.to_string(), "-inf");
        }
    }
    assert_ne!(lp_dimension_bound(p(2, 4, 2, 1, 4)).unwrap().k_max, KMax::NoCode);
}

#[test]
fn json_dump_uses_fractions() {
    let problem = build_symmetric_lrc_lp(p(2, 5, 2, 2, 2)).unwrap();
    let json: serde_json::Value = serde_json::from_str(&dump::to_json(&problem)).unwrap();
    assert_eq!(json["sense"], "minimize");
    assert_eq!(json["variables"][0], "a[1]");
    assert_eq!(json["objective"][1], "5/2");
    let rhs = json["constraints"][0]["rhs"].as_str().unwrap();
    assert!(rhs.contains('/'));
}
