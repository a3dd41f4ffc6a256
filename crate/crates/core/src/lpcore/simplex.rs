//! Dense two-phase simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combin::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub num_vars: usize,
    pub var_names: Vec<String>,
    pub sense: Sense,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    /// x_v >= lower_bounds[v]
    pub lower_bounds: Vec<Rational>,
}

impl LpProblem {
    pub fn new(num_vars: usize, sense: Sense, objective: Vec<Rational>) -> LpProblem {
        assert_eq!(objective.len(), num_vars);
        LpProblem {
            num_vars,
            var_names: (0..num_vars).map(|v| format!("x{v}")).collect(),
            sense,
            objective,
            constraints: Vec::new(),
            lower_bounds: vec![Rational::zero(); num_vars],
        }
    }

    pub fn add(&mut self, name: impl Into<String>, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            name: name.into(),
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    /// Names of the constraints and bounds violated at x.
    pub fn violations(&self, x: &[Rational]) -> Vec<String> {
        let mut bad = Vec::new();
        for (v, lb) in self.lower_bounds.iter().enumerate() {
            if &x[v] < lb {
                bad.push(format!("lower bound of {}", self.var_names[v]));
            }
        }
        for c in &self.constraints {
            if !c.relation.holds(&dot(&c.coeffs, x), &c.rhs) {
                bad.push(c.name.clone());
            }
        }
        bad
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub assignment: Vec<Rational>,
    /// Tableau column basic in each row at termination; columns past
    /// `num_vars` are slack, surplus or artificial.
    pub basis: Vec<usize>,
    pub pivots: usize,
}

struct Tableau {
    /// rows of [coefficients | rhs]
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
        self.pivots += 1;
    }

    /// Minimizes cost · x over the current feasible basis; `allowed` masks
    /// columns that may enter. Returns false when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            // reduced cost c_j - c_B B^-1 A_j, read off the tableau
            let mut entering = None;
            for j in 0..self.cols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[r][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[r][j];
                    }
                }
                if reduced.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if row[col].is_positive() {
                    let ratio = &row[self.cols] / &row[col];
                    let better = match &leaving {
                        None => true,
                        Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                    };
                    if better {
                        leaving = Some((r, ratio));
                    }
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Exact optimum, verified by substitution before it is returned.
pub fn simplex_solve(problem: &LpProblem) -> LpSolution {
    let nv = problem.num_vars;
    let lb = &problem.lower_bounds;
    // move lower bounds to zero: x = y + lb
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = problem
        .constraints
        .iter()
        .map(|c| {
            let shift = dot(&c.coeffs, lb);
            (c.coeffs.clone(), c.relation, &c.rhs - shift)
        })
        .collect();
    for (coeffs, rel, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            for v in coeffs.iter_mut() {
                *v = -v.clone();
            }
            *rhs = -rhs.clone();
            *rel = match *rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }
    let m = rows.len();
    let slack_count = rows.iter().filter(|(_, rel, _)| *rel != Relation::Eq).count();
    let art_count = rows.iter().filter(|(_, rel, _)| *rel != Relation::Le).count();
    let cols = nv + slack_count + art_count;
    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        cols,
        pivots: 0,
    };
    let mut next_slack = nv;
    let mut next_art = nv + slack_count;
    let mut artificial = vec![false; cols];
    for (coeffs, rel, rhs) in rows {
        let mut row = vec![Rational::zero(); cols + 1];
        row[..nv].clone_from_slice(&coeffs);
        row[cols] = rhs;
        match rel {
            Relation::Le => {
                row[next_slack] = Rational::one();
                tab.basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                artificial[next_art] = true;
                tab.basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                artificial[next_art] = true;
                tab.basis.push(next_art);
                next_art += 1;
            }
        }
        tab.rows.push(row);
    }

    let infeasible = |tab: &Tableau| LpSolution {
        status: LpStatus::Infeasible,
        value: None,
        assignment: Vec::new(),
        basis: tab.basis.clone(),
        pivots: tab.pivots,
    };

    // phase 1
    if art_count > 0 {
        let cost: Vec<Rational> = (0..cols)
            .map(|j| {
                if artificial[j] {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let all = vec![true; cols];
        tab.optimize(&cost, &all);
        let residual = tab
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| artificial[b])
            .fold(Rational::zero(), |acc, (r, _)| acc + &tab.rows[r][cols]);
        if residual.is_positive() {
            return infeasible(&tab);
        }
        // drive zero-level artificials out of the basis where possible
        for r in 0..m {
            if artificial[tab.basis[r]] {
                if let Some(j) = (0..cols).find(|&j| !artificial[j] && !tab.rows[r][j].is_zero()) {
                    tab.pivot(r, j);
                }
            }
        }
    }

    // phase 2
    let mut cost = vec![Rational::zero(); cols];
    for (j, c) in problem.objective.iter().enumerate() {
        cost[j] = match problem.sense {
            Sense::Minimize => c.clone(),
            Sense::Maximize => -c.clone(),
        };
    }
    let allowed: Vec<bool> = (0..cols).map(|j| !artificial[j]).collect();
    if !tab.optimize(&cost, &allowed) {
        return LpSolution {
            status: LpStatus::Unbounded,
            value: None,
            assignment: Vec::new(),
            basis: tab.basis.clone(),
            pivots: tab.pivots,
        };
    }

    let mut x = lb.clone();
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < nv {
            x[b] += &tab.rows[r][cols];
        }
    }
    let violated = problem.violations(&x);
    assert!(
        violated.is_empty(),
        "simplex returned an infeasible point: {violated:?}"
    );
    LpSolution {
        status: LpStatus::Optimal,
        value: Some(problem.objective_at(&x)),
        assignment: x,
        basis: tab.basis,
        pivots: tab.pivots,
    }
}
