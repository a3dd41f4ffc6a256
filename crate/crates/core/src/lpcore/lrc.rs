//! The LP whose optimum bounds the dual size of an (r, delta)-LRC.
//!
//! Variable a_{ij} stands for W_i^{j}(C⊥), the number of dual words of
//! weight i covering coordinate j, for 1 <= i, j <= n.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::simplex::{simplex_solve, LpProblem, LpStatus, Relation, Sense};
use crate::combin::{binom, pow_q, Rational};
use crate::error::{LrcError, Result};
use crate::gf::prime_power_decomposition;
use crate::identities::single_coordinate_kernel;

/// Coefficient of a_{js} in a⊥_{il}. `jstart` is the first j the sum runs
/// over; coefficients of earlier j are zero. Indices are 1-based.
pub fn notation45_coefficient(
    q: u32,
    n: usize,
    i: usize,
    l: usize,
    j: usize,
    s: usize,
    jstart: usize,
) -> Result<Rational> {
    for (name, v) in [("i", i), ("l", l), ("j", j), ("s", s)] {
        if v < 1 || v > n {
            return Err(LrcError::InvalidParameters(format!("index {name}={v} outside 1..={n}")));
        }
    }
    if j < jstart.max(1) {
        return Ok(Rational::zero());
    }
    let scale = Rational::new(BigInt::from(q - 1), BigInt::from(q));
    Ok(single_coordinate_kernel(q, n, i, j, s == l) * scale)
}

/// Constant term C(n-1, i-1) (q-1)^i of a⊥_{il}.
pub fn notation45_constant(q: u32, n: usize, i: usize) -> Rational {
    Rational::from_integer(binom(n as i64 - 1, i as i64 - 1) * BigInt::from(q - 1).pow(i as u32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LrcParams {
    pub q: u32,
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub delta: usize,
}

impl LrcParams {
    pub fn validate(&self) -> Result<()> {
        if prime_power_decomposition(self.q as u64).is_none() {
            return Err(LrcError::NotPrimePower(self.q as u64));
        }
        if self.q > crate::gf::MAX_FIELD_SIZE {
            return Err(LrcError::FieldTooLarge(self.q as u64));
        }
        if self.d < 1 || self.d > self.n || self.r < 1 || self.delta < 2 {
            return Err(LrcError::InvalidParameters(format!(
                "need 1 <= d <= n, r >= 1, delta >= 2; got n={} d={} r={} delta={}",
                self.n, self.d, self.r, self.delta
            )));
        }
        Ok(())
    }

    /// q^(delta-1) - q^(delta-2)
    pub fn mass_threshold(&self) -> Rational {
        pow_q(self.q, self.delta as i64 - 1) - pow_q(self.q, self.delta as i64 - 2)
    }
}

/// The full model over n^2 variables.
#[derive(Clone, Debug)]
pub struct LrcLpModel {
    pub params: LrcParams,
    /// row (i-1)*n + (l-1): coefficients of a⊥_{il} over the n^2 columns
    pub dual_coeff: Vec<Vec<Rational>>,
    /// constant term of a⊥_{il}, indexed by i-1
    pub dual_const: Vec<Rational>,
    pub problem: LpProblem,
}

impl LrcLpModel {
    /// Column of a_{ij}, 1-based indices.
    pub fn var_index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.params.n + (j - 1)
    }

    /// a⊥_{il} at a point.
    pub fn dual_value(&self, i: usize, l: usize, x: &[Rational]) -> Rational {
        let row = &self.dual_coeff[(i - 1) * self.params.n + (l - 1)];
        row.iter()
            .zip(x)
            .fold(self.dual_const[i - 1].clone(), |acc, (c, v)| acc + c * v)
    }

    pub fn census(&self) -> ConstraintCensus {
        let mut census = ConstraintCensus {
            sign: self.params.n * self.params.n,
            ..Default::default()
        };
        for c in &self.problem.constraints {
            match c.name.split('[').next().unwrap_or("") {
                "dual_nonneg" => census.sign += 1,
                "distance" => census.distance += 1,
                "mass" => census.mass += 1,
                "no_weight_one" => census.no_weight_one += 1,
                _ => {}
            }
        }
        census
    }
}

/// How many constraints of each family the full model carries; `sign`
/// counts both the bounds a_{ij} >= 0 and the rows a⊥_{ij} >= 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintCensus {
    pub sign: usize,
    pub distance: usize,
    pub mass: usize,
    pub no_weight_one: usize,
}

/// Builds the n^2-variable model: minimize sum_i sum_j a_{ij} / i subject to
/// a >= 0, a⊥ >= 0, a⊥_{ij} = 0 for i < d, the mass rows and a_{1j} = 0.
pub fn build_lrc_lp(params: LrcParams) -> Result<LrcLpModel> {
    params.validate()?;
    let LrcParams { q, n, d, r, delta } = params;
    let nv = n * n;
    let col = |i: usize, j: usize| (i - 1) * n + (j - 1);

    // kernel values depend on (i, j, s == l) only
    let mut same = vec![vec![Rational::zero(); n + 1]; n + 1];
    let mut other = vec![vec![Rational::zero(); n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            same[i][j] = notation45_coefficient(q, n, i, 1, j, 1, 1)?;
            if n > 1 {
                other[i][j] = notation45_coefficient(q, n, i, 1, j, 2, 1)?;
            }
        }
    }
    let dual_const: Vec<Rational> = (1..=n).map(|i| notation45_constant(q, n, i)).collect();
    let mut dual_coeff = Vec::with_capacity(nv);
    for i in 1..=n {
        for l in 1..=n {
            let mut row = vec![Rational::zero(); nv];
            for j in 1..=n {
                for s in 1..=n {
                    row[col(j, s)] = if s == l {
                        same[i][j].clone()
                    } else {
                        other[i][j].clone()
                    };
                }
            }
            dual_coeff.push(row);
        }
    }

    let objective: Vec<Rational> = (0..nv)
        .map(|c| Rational::new(BigInt::one(), BigInt::from(c / n + 1)))
        .collect();
    let mut problem = LpProblem::new(nv, Sense::Minimize, objective);
    problem.var_names = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| format!("a[{i},{j}]")))
        .collect();
    for i in 1..=n {
        for l in 1..=n {
            let coeffs = dual_coeff[col(i, l)].clone();
            let rhs = -dual_const[i - 1].clone();
            problem.add(
                format!("dual_nonneg[{i},{l}]"),
                coeffs.clone(),
                Relation::Ge,
                rhs.clone(),
            );
            if i < d {
                problem.add(format!("distance[{i},{l}]"), coeffs, Relation::Eq, rhs);
            }
        }
    }
    let top = (r + delta - 1).min(n);
    for j in 1..=n {
        let mut coeffs = vec![Rational::zero(); nv];
        for i in 1..=top {
            coeffs[col(i, j)] = Rational::one();
        }
        problem.add(format!("mass[{j}]"), coeffs, Relation::Ge, params.mass_threshold());
    }
    for j in 1..=n {
        let mut coeffs = vec![Rational::zero(); nv];
        coeffs[col(1, j)] = Rational::one();
        problem.add(format!("no_weight_one[{j}]"), coeffs, Relation::Eq, Rational::zero());
    }
    Ok(LrcLpModel {
        params,
        dual_coeff,
        dual_const,
        problem,
    })
}

/// The model restricted to coordinate-symmetric points a_{ij} = a_i.
///
/// Permuting coordinates maps feasible points to feasible points with the
/// same objective, so averaging over all permutations turns any optimum
/// into a symmetric one; both models share the optimal value.
pub fn build_symmetric_lrc_lp(params: LrcParams) -> Result<LpProblem> {
    params.validate()?;
    let LrcParams { q, n, d, r, delta } = params;
    let objective: Vec<Rational> = (1..=n)
        .map(|i| Rational::new(BigInt::from(n), BigInt::from(i)))
        .collect();
    let mut problem = LpProblem::new(n, Sense::Minimize, objective);
    problem.var_names = (1..=n).map(|i| format!("a[{i}]")).collect();
    let spread = Rational::from_integer(BigInt::from(n - 1));
    for i in 1..=n {
        let coeffs: Vec<Rational> = (1..=n)
            .map(|j| -> Result<Rational> {
                let same = notation45_coefficient(q, n, i, 1, j, 1, 1)?;
                let other = if n > 1 {
                    notation45_coefficient(q, n, i, 1, j, 2, 1)?
                } else {
                    Rational::zero()
                };
                Ok(same + &spread * other)
            })
            .collect::<Result<_>>()?;
        let rhs = -notation45_constant(q, n, i);
        let relation = if i < d { Relation::Eq } else { Relation::Ge };
        problem.add(format!("dual[{i}]"), coeffs, relation, rhs);
    }
    let top = (r + delta - 1).min(n);
    let mass: Vec<Rational> = (1..=n)
        .map(|i| if i <= top { Rational::one() } else { Rational::zero() })
        .collect();
    problem.add("mass", mass, Relation::Ge, params.mass_threshold());
    let mut first = vec![Rational::zero(); n];
    first[0] = Rational::one();
    problem.add("no_weight_one", first, Relation::Eq, Rational::zero());
    Ok(problem)
}

/// Upper bound on k, or proof that no such code exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum KMax {
    AtMost(i64),
    /// the LP is infeasible: k_max = -infinity
    NoCode,
}

impl fmt::Display for KMax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KMax::AtMost(k) => write!(f, "{k}"),
            KMax::NoCode => write!(f, "-inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpBound {
    pub params: LrcParams,
    pub mu_star: Option<Rational>,
    pub k_max: KMax,
    pub pivots: usize,
}

/// Least m with q^m >= value, in exact arithmetic.
pub fn ceil_log(q: u32, value: &Rational) -> i64 {
    let mut m = 0i64;
    let mut power = Rational::one();
    let base = Rational::from_integer(BigInt::from(q));
    while &power < value {
        power *= &base;
        m += 1;
    }
    m
}

/// k <= n - m with m the least integer such that q^m >= 1 + mu*.
pub fn lp_dimension_bound(params: LrcParams) -> Result<LpBound> {
    let problem = build_symmetric_lrc_lp(params)?;
    let solution = simplex_solve(&problem);
    match solution.status {
        LpStatus::Infeasible => Ok(LpBound {
            params,
            mu_star: None,
            k_max: KMax::NoCode,
            pivots: solution.pivots,
        }),
        LpStatus::Unbounded => Err(LrcError::Unbounded),
        LpStatus::Optimal => {
            let mu = solution.value.expect("optimal solutions carry a value");
            let m = ceil_log(params.q, &(Rational::one() + &mu));
            Ok(LpBound {
                params,
                mu_star: Some(mu),
                k_max: KMax::AtMost(params.n as i64 - m),
                pivots: solution.pivots,
            })
        }
    }
}
