//! Delsarte's LP bound on the size of a code with given length and distance.

use num_traits::One;

use super::lrc::ceil_log;
use super::simplex::{simplex_solve, LpProblem, LpStatus, Relation, Sense};
use crate::combin::{krawtchouk, pow_q, Rational};
use crate::error::{LrcError, Result};

/// The distance-distribution LP over A_d, ..., A_n (A_0 = 1, A_1..A_{d-1} = 0),
/// maximizing sum_{i >= d} A_i subject to sum_i A_i K_k(i) >= -K_k(0).
pub fn delsarte_problem(q: u32, n: usize, d: usize) -> Result<LpProblem> {
    if d < 1 || d > n {
        return Err(LrcError::InvalidParameters(format!(
            "need 1 <= d <= n, got n={n} d={d}"
        )));
    }
    let vars: Vec<usize> = (d.max(1)..=n).collect();
    let mut problem = LpProblem::new(vars.len(), Sense::Maximize, vec![Rational::one(); vars.len()]);
    problem.var_names = vars.iter().map(|i| format!("A[{i}]")).collect();
    for k in 1..=n {
        let coeffs = vars
            .iter()
            .map(|&i| Rational::from_integer(krawtchouk(q, n, k, i)))
            .collect();
        let rhs = -Rational::from_integer(krawtchouk(q, n, k, 0));
        problem.add(format!("krawtchouk[{k}]"), coeffs, Relation::Ge, rhs);
    }
    Ok(problem)
}

/// 1 + the LP optimum: an upper bound on the number of codewords.
pub fn delsarte_size_bound(q: u32, n: usize, d: usize) -> Result<Rational> {
    let solution = simplex_solve(&delsarte_problem(q, n, d)?);
    match solution.status {
        LpStatus::Optimal => Ok(Rational::one() + solution.value.expect("optimal")),
        LpStatus::Unbounded => Err(LrcError::Unbounded),
        LpStatus::Infeasible => Err(LrcError::Inconsistent("the Delsarte LP always admits A = 0".into())),
    }
}

/// Largest k with q^k <= the Delsarte size bound.
pub fn delsarte_kopt_bound(q: u32, n: usize, d: usize) -> Result<usize> {
    let size = delsarte_size_bound(q, n, d)?;
    let m = ceil_log(q, &size);
    // q^m >= size; step back unless it lands exactly
    let k = if pow_q(q, m) == size { m } else { m - 1 };
    Ok(k.max(0) as usize)
}
