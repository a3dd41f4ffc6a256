//! JSON export of an LP with exact "num/den" coefficients.

use serde::Serialize;

use super::simplex::{LpProblem, Sense};
use crate::combin::Rational;

pub fn fraction(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Serialize)]
struct DumpConstraint<'a> {
    name: &'a str,
    coefficients: Vec<String>,
    relation: &'static str,
    rhs: String,
}

#[derive(Serialize)]
struct Dump<'a> {
    sense: &'static str,
    variables: &'a [String],
    lower_bounds: Vec<String>,
    objective: Vec<String>,
    constraints: Vec<DumpConstraint<'a>>,
}

pub fn to_json(problem: &LpProblem) -> String {
    let dump = Dump {
        sense: match problem.sense {
            Sense::Minimize => "minimize",
            Sense::Maximize => "maximize",
        },
        variables: &problem.var_names,
        lower_bounds: problem.lower_bounds.iter().map(fraction).collect(),
        objective: problem.objective.iter().map(fraction).collect(),
        constraints: problem
            .constraints
            .iter()
            .map(|c| DumpConstraint {
                name: &c.name,
                coefficients: c.coeffs.iter().map(fraction).collect(),
                relation: c.relation.symbol(),
                rhs: fraction(&c.rhs),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dump).expect("plain data serializes")
}
