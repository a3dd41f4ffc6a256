//! Reference tables of dimension bounds and their recomputation.

use serde::{Deserialize, Serialize};

use super::catalog::{gen_singleton_k, rdelta_shortening, rdelta_singleton_k};
use super::kopt::KoptProvider;
use crate::error::{LrcError, Result};
use crate::lpcore::{lp_dimension_bound, KMax, LrcParams};

const EMBEDDED_TABLES: &str = include_str!("../../data/reference_tables.csv");

/// One published row: parameters and the four k upper bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub table: u8,
    pub row: usize,
    pub q: u32,
    pub delta: usize,
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub lp: i64,
    pub sh_lp: i64,
    pub sh_exact: i64,
    pub gen_singl: i64,
    pub source: String,
}

impl ReferenceRow {
    pub fn params(&self) -> LrcParams {
        LrcParams {
            q: self.q,
            n: self.n,
            d: self.d,
            r: self.r,
            delta: self.delta,
        }
    }
}

pub fn reference_rows() -> Vec<ReferenceRow> {
    let mut reader = csv::Reader::from_reader(EMBEDDED_TABLES.as_bytes());
    reader
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .expect("embedded reference tables parse")
}

pub fn table_rows(table: u8) -> Result<Vec<ReferenceRow>> {
    if !(1..=5).contains(&table) {
        return Err(LrcError::InvalidParameters(format!(
            "table id must be 1..=5, got {table}"
        )));
    }
    Ok(reference_rows().into_iter().filter(|r| r.table == table).collect())
}

/// Generalized Singleton column: the delta-free form when delta = 2.
pub fn gen_singl_cell(p: LrcParams) -> i64 {
    if p.delta == 2 {
        gen_singleton_k(p.n, p.d, p.r) as i64
    } else {
        rdelta_singleton_k(p.n, p.d, p.r, p.delta) as i64
    }
}

pub fn sh_cell(p: LrcParams, provider: &KoptProvider) -> Result<i64> {
    Ok(rdelta_shortening(p.q, p.n, p.d, p.r, p.delta, provider)?.k_upper as i64)
}

/// LP column; `None` when the LP is infeasible.
pub fn lp_cell(p: LrcParams) -> Result<Option<i64>> {
    Ok(match lp_dimension_bound(p)?.k_max {
        KMax::AtMost(v) => Some(v),
        KMax::NoCode => None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowComputation {
    pub reference: ReferenceRow,
    pub lp: Option<i64>,
    pub sh_lp: i64,
    pub sh_exact: i64,
    pub gen_singl: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub column: &'static str,
    pub expected: i64,
    pub computed: Option<i64>,
}

impl RowComputation {
    pub fn mismatches(&self) -> Vec<CellMismatch> {
        let r = &self.reference;
        let mut out = Vec::new();
        let mut check = |column, expected: i64, computed: Option<i64>| {
            if computed != Some(expected) {
                out.push(CellMismatch {
                    column,
                    expected,
                    computed,
                });
            }
        };
        check("LP", r.lp, self.lp);
        check("SH with LP", r.sh_lp, Some(self.sh_lp));
        check("SH exact", r.sh_exact, Some(self.sh_exact));
        check("gen. Singl.", r.gen_singl, Some(self.gen_singl));
        out
    }
}

pub fn compute_row(row: &ReferenceRow, exact: &KoptProvider, lp: &KoptProvider) -> Result<RowComputation> {
    let p = row.params();
    Ok(RowComputation {
        reference: row.clone(),
        lp: lp_cell(p)?,
        sh_lp: sh_cell(p, lp)?,
        sh_exact: sh_cell(p, exact)?,
        gen_singl: gen_singl_cell(p),
    })
}
