//! Evaluates every applicable bound for a parameter tuple.

use std::fmt::Write as _;

use serde::Serialize;

use super::catalog::*;
use super::kopt::{KoptMode, KoptProvider};
use crate::error::{LrcError, Result};
use crate::gf::{prime_power_decomposition, MAX_FIELD_SIZE};
use crate::lpcore::{lp_dimension_bound, KMax, LrcParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub q: u32,
    pub n: usize,
    pub k: Option<usize>,
    pub d: usize,
    pub r: usize,
    pub delta: usize,
}

impl CodeParams {
    pub fn new(q: u32, n: usize, d: usize, r: usize) -> CodeParams {
        CodeParams {
            q,
            n,
            k: None,
            d,
            r,
            delta: 2,
        }
    }

    pub fn with_k(mut self, k: usize) -> CodeParams {
        self.k = Some(k);
        self
    }

    pub fn with_delta(mut self, delta: usize) -> CodeParams {
        self.delta = delta;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.q as u64 > MAX_FIELD_SIZE as u64 {
            return Err(LrcError::FieldTooLarge(self.q as u64));
        }
        if prime_power_decomposition(self.q as u64).is_none() {
            return Err(LrcError::NotPrimePower(self.q as u64));
        }
        if self.d < 1 || self.d > self.n || self.r < 1 || self.delta < 2 {
            return Err(LrcError::InvalidParameters(format!(
                "need 1 <= d <= n, r >= 1, delta >= 2; got n={} d={} r={} delta={}",
                self.n, self.d, self.r, self.delta
            )));
        }
        if let Some(k) = self.k {
            if k < 1 || k + 1 > self.n {
                return Err(LrcError::InvalidParameters(format!(
                    "need 1 <= k <= n-1, got k={k} n={}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    pub fn lp_params(&self) -> LrcParams {
        LrcParams {
            q: self.q,
            n: self.n,
            d: self.d,
            r: self.r,
            delta: self.delta,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundForm {
    KUpper,
    DUpper,
    NUpper,
    Predicate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub bound_name: String,
    pub form: BoundForm,
    /// numeric bound; `None` for predicates and non-applicable records
    pub value: Option<i64>,
    /// for predicates, or for bounds checked against a supplied k
    pub holds: Option<bool>,
    pub applicable: bool,
    /// violated precondition, error text or a short derivation
    pub note: String,
    pub inputs: CodeParams,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub inputs: CodeParams,
    pub records: Vec<BoundRecord>,
    pub min_k_upper: Option<i64>,
    pub min_d_upper: Option<i64>,
    /// a code with these parameters cannot exist
    pub code_excluded: bool,
    /// an optimal LRC with (q, n, k, r) cannot exist; needs k
    pub optimal_lrc_excluded: Option<bool>,
}

struct Builder {
    inputs: CodeParams,
    records: Vec<BoundRecord>,
}

impl Builder {
    fn push(&mut self, name: &str, form: BoundForm, value: Option<i64>, holds: Option<bool>, note: String) {
        self.records.push(BoundRecord {
            bound_name: name.to_string(),
            form,
            value,
            holds,
            applicable: true,
            note,
            inputs: self.inputs,
        });
    }

    fn skip(&mut self, name: &str, form: BoundForm, why: String) {
        self.records.push(BoundRecord {
            bound_name: name.to_string(),
            form,
            value: None,
            holds: None,
            applicable: false,
            note: why,
            inputs: self.inputs,
        });
    }

    /// k upper bound, checked against the supplied k if any
    fn k_upper(&mut self, name: &str, value: i64, note: String) {
        let holds = self.inputs.k.map(|k| k as i64 <= value);
        self.push(name, BoundForm::KUpper, Some(value), holds, note);
    }

    fn d_upper(&mut self, name: &str, value: i64, note: String) {
        let holds = Some(self.inputs.d as i64 <= value);
        self.push(name, BoundForm::DUpper, Some(value), holds, note);
    }
}

fn provider_label(mode: KoptMode) -> &'static str {
    match mode {
        KoptMode::ExactTable => "exact",
        KoptMode::DelsarteLp => "lp",
        KoptMode::Singleton => "singleton",
    }
}

/// Runs the catalog. Individual failures become non-applicable records.
pub fn aggregate_report(params: CodeParams, provider: &KoptProvider, with_lp: bool) -> Result<BoundReport> {
    params.validate()?;
    let CodeParams { q, n, k, d, r, delta } = params;
    let mut b = Builder {
        inputs: params,
        records: Vec::new(),
    };

    if delta == 2 {
        b.k_upper(
            "gen_singleton",
            gen_singleton_k(n, d, r) as i64,
            "largest k with k + ceil(k/r) <= n - d + 2".into(),
        );
    }
    b.k_upper(
        "rdelta_singleton",
        rdelta_singleton_k(n, d, r, delta) as i64,
        "largest k with d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1)".into(),
    );

    let shortening_name = format!("shortening[{}]", provider_label(provider.mode));
    match rdelta_shortening(q, n, d, r, delta, provider) {
        Ok(sh) => b.k_upper(
            &shortening_name,
            sh.k_upper as i64,
            format!("minimum at t = {}", sh.t_star),
        ),
        Err(e) => b.skip(&shortening_name, BoundForm::KUpper, e.to_string()),
    }

    if with_lp {
        match lp_dimension_bound(params.lp_params()) {
            Ok(lp) => match (&lp.k_max, &lp.mu_star) {
                (KMax::AtMost(v), Some(mu)) => b.k_upper("lp", *v, format!("mu* = {mu}")),
                _ => b.push(
                    "lp",
                    BoundForm::Predicate,
                    None,
                    Some(false),
                    "LP infeasible: no such (r, delta)-LRC exists".into(),
                ),
            },
            Err(e) => b.skip("lp", BoundForm::KUpper, e.to_string()),
        }
    }

    b.k_upper(
        "field_singleton_sharp",
        field_singleton_sharp_k(q, n, d) as i64,
        "largest k with d <= q (n - k + 2) / (q + 1)".into(),
    );
    match (1..n)
        .rev()
        .find(|&kk| lrc_singleton_q(q, n, kk, r).is_ok_and(|v| v >= d as i64))
    {
        Some(kk) => b.k_upper(
            "lrc_singleton_q",
            kk as i64,
            "largest k with d <= q/(q+1) (n - k - ceil((k-1)/r) + 3)".into(),
        ),
        None => b.k_upper("lrc_singleton_q", 0, "no k >= 1 satisfies the bound".into()),
    }

    let mut optimal_lrc_excluded = None;
    match k {
        None => {
            for name in [
                "gen_singleton_d",
                "field_singleton_sharp_d",
                "lrc_singleton_q_d",
                "dual_distance_bound",
                "optimal_lrc_field_bound",
                "optimal_length_bound",
            ] {
                b.skip(name, BoundForm::DUpper, "needs k".into());
            }
        }
        Some(k) => {
            if delta == 2 {
                b.d_upper(
                    "gen_singleton_d",
                    gen_singleton_d(n, k, r),
                    "n - k - ceil(k/r) + 2".into(),
                );
            } else {
                b.d_upper(
                    "rdelta_singleton_d",
                    rdelta_singleton_d(n, k, r, delta),
                    "n - k + 1 - (ceil(k/r) - 1)(delta - 1)".into(),
                );
            }
            b.d_upper(
                "field_singleton_sharp_d",
                field_singleton_sharp(q, n, k),
                "floor(q (n - k + 2) / (q + 1))".into(),
            );
            match lrc_singleton_q(q, n, k, r) {
                Ok(v) => b.d_upper(
                    "lrc_singleton_q_d",
                    v,
                    "floor(q/(q+1) (n - k - ceil((k-1)/r) + 3))".into(),
                ),
                Err(e) => b.skip("lrc_singleton_q_d", BoundForm::DUpper, e.to_string()),
            }
            match dual_distance_bound(q, n, k, d, r, None) {
                Ok(c) => b.push(
                    "dual_distance_bound",
                    BoundForm::DUpper,
                    Some(c.max_dual_distance.min(c.locality_cap as i64)),
                    None,
                    format!(
                        "upper bound on d⊥: {} from the inequality, {} from locality",
                        c.max_dual_distance, c.locality_cap
                    ),
                ),
                Err(e) => b.skip("dual_distance_bound", BoundForm::DUpper, e.to_string()),
            }

            // the optimal LRC with (q, n, k, r) has d = n - k - ceil(k/r) + 2
            let d_opt = gen_singleton_d(n, k, r);
            let mut excluded = false;
            if d_opt < 1 {
                b.skip(
                    "optimal_lrc_field_bound",
                    BoundForm::DUpper,
                    format!("optimal distance {d_opt} < 1"),
                );
                b.skip(
                    "optimal_length_bound",
                    BoundForm::NUpper,
                    format!("optimal distance {d_opt} < 1"),
                );
                excluded = true;
            } else {
                let cap = optimal_lrc_field_bound(q, k, r) as i64;
                let ok = d_opt <= cap;
                excluded |= !ok;
                b.push(
                    "optimal_lrc_field_bound",
                    BoundForm::DUpper,
                    Some(cap),
                    Some(ok),
                    format!("an optimal LRC would have d = {d_opt}"),
                );
                match optimal_length_bound(q, k, r) {
                    Ok(cap) => {
                        let ok = n <= cap;
                        excluded |= !ok;
                        b.push(
                            "optimal_length_bound",
                            BoundForm::NUpper,
                            Some(cap as i64),
                            Some(ok),
                            "length cap for an optimal LRC with k <= q".into(),
                        );
                    }
                    Err(e) => b.skip("optimal_length_bound", BoundForm::NUpper, e.to_string()),
                }
            }
            optimal_lrc_excluded = Some(excluded);
        }
    }

    let min_of = |form: BoundForm| {
        b.records
            .iter()
            .filter(|rec| rec.applicable && rec.form == form && rec.bound_name != "dual_distance_bound")
            .filter_map(|rec| rec.value)
            .min()
    };
    let min_k_upper = min_of(BoundForm::KUpper);
    let min_d_upper = if k.is_some() { min_of(BoundForm::DUpper) } else { None };
    let code_excluded = b.records.iter().any(|rec| {
        rec.applicable
            && rec.holds == Some(false)
            && !matches!(
                rec.bound_name.as_str(),
                "optimal_lrc_field_bound" | "optimal_length_bound"
            )
    });
    Ok(BoundReport {
        inputs: params,
        records: b.records,
        min_k_upper,
        min_d_upper,
        code_excluded,
        optimal_lrc_excluded,
    })
}

impl BoundReport {
    pub fn record(&self, name: &str) -> Option<&BoundRecord> {
        self.records.iter().find(|r| r.bound_name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let p = &self.inputs;
        let k = p.k.map_or("?".to_string(), |k| k.to_string());
        let mut out = format!("q={} n={} k={} d={} r={} delta={}\n", p.q, p.n, k, p.d, p.r, p.delta);
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|rec| {
                [
                    rec.bound_name.clone(),
                    format!("{:?}", rec.form).to_lowercase(),
                    rec.value.map_or("-".into(), |v| v.to_string()),
                    match (rec.applicable, rec.holds) {
                        (false, _) => "n/a".into(),
                        (true, Some(true)) => "ok".into(),
                        (true, Some(false)) => "VIOLATED".into(),
                        (true, None) => "".into(),
                    },
                    rec.note.clone(),
                ]
            })
            .collect();
        let header = ["bound", "form", "value", "status", "note"];
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut line = |cells: [&str; 5]| {
            let mut s = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i == 4 {
                    s.push_str(cell);
                } else {
                    let _ = write!(s, "{:<width$}  ", cell, width = widths[i]);
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(header);
        for row in &rows {
            line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
        }
        let show = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(out, "min k upper bound: {}", show(self.min_k_upper));
        if self.inputs.k.is_some() {
            let _ = writeln!(out, "min d upper bound: {}", show(self.min_d_upper));
        }
        let _ = writeln!(out, "code excluded: {}", self.code_excluded);
        if let Some(x) = self.optimal_lrc_excluded {
            let _ = writeln!(out, "optimal LRC excluded: {x}");
        }
        out
    }
}
