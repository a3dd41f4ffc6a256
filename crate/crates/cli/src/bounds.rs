use std::fmt::Write;
use std::path::PathBuf;

use clap::Args;
use lrc_core::bounds::{aggregate_report, CodeParams};
use lrc_core::combin::{pow_q, Rational};
use lrc_core::corpus::CorpusConfig;
use lrc_core::lpcore::{
    build_lrc_lp, build_symmetric_lrc_lp, ceil_log, dump, lp_dimension_bound, simplex_solve, KMax, LpStatus, LrcParams,
};
use lrc_core::verify;
use lrc_core::LrcError;
use serde::Serialize;

use crate::{csv_string, BudgetArg, CliError, Format, KoptArg, Output};

#[derive(Args)]
pub struct TupleArgs {
    /// Field size q (a prime power up to 512)
    #[arg(short = 'q', long = "field")]
    pub q: u32,
    /// Code length n
    #[arg(short = 'n', long = "length")]
    pub n: usize,
    /// Minimum distance d
    #[arg(short = 'd', long = "distance")]
    pub d: usize,
    /// Locality r
    #[arg(short = 'r', long = "locality")]
    pub r: usize,
    /// Local distance delta; 2 is classical locality
    #[arg(long, default_value_t = 2)]
    pub delta: usize,
}

impl TupleArgs {
    fn lp_params(&self) -> LrcParams {
        LrcParams {
            q: self.q,
            n: self.n,
            d: self.d,
            r: self.r,
            delta: self.delta,
        }
    }
}

#[derive(Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub tuple: TupleArgs,
    /// Dimension k, enabling the d- and n-form bounds
    #[arg(short = 'k', long = "dimension")]
    pub k: Option<usize>,
    #[command(flatten)]
    pub kopt: KoptArg,
    /// Also solve the LP bound
    #[arg(long)]
    pub with_lp: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct RecordRow<'a> {
    bound_name: &'a str,
    form: String,
    value: Option<i64>,
    holds: Option<bool>,
    applicable: bool,
    note: &'a str,
}

pub fn run_bound(args: &BoundArgs) -> Result<Output, CliError> {
    let t = &args.tuple;
    let mut params = CodeParams::new(t.q, t.n, t.d, t.r).with_delta(t.delta);
    if let Some(k) = args.k {
        params = params.with_k(k);
    }
    let provider = args.kopt.provider()?;
    let report = aggregate_report(params, &provider, args.with_lp)?;
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => csv_string(report.records.iter().map(|r| RecordRow {
            bound_name: &r.bound_name,
            form: format!("{:?}", r.form).to_lowercase(),
            value: r.value,
            holds: r.holds,
            applicable: r.applicable,
            note: &r.note,
        }))?,
    };
    Ok(Output {
        text,
        failed: report.code_excluded,
    })
}

#[derive(Args)]
pub struct LpArgs {
    #[command(flatten)]
    pub tuple: TupleArgs,
    /// Also solve the n^2-variable model and compare optima
    #[arg(long)]
    pub full_model: bool,
    /// Write the solved model as JSON with exact fractions
    #[arg(long, value_name = "FILE")]
    pub dump: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct LpReport {
    q: u32,
    n: usize,
    d: usize,
    r: usize,
    delta: usize,
    mu_star: Option<String>,
    k_max: String,
    pivots: usize,
    full_model_mu_star: Option<String>,
}

pub fn run_lp(args: &LpArgs) -> Result<Output, CliError> {
    let params = args.tuple.lp_params();
    let bound = lp_dimension_bound(params)?;
    let mut report = LpReport {
        q: params.q,
        n: params.n,
        d: params.d,
        r: params.r,
        delta: params.delta,
        mu_star: bound.mu_star.as_ref().map(exact),
        k_max: bound.k_max.to_string(),
        pivots: bound.pivots,
        full_model_mu_star: None,
    };
    let mut full_k = None;
    if args.full_model {
        let model = build_lrc_lp(params)?;
        let solution = simplex_solve(&model.problem);
        match solution.status {
            LpStatus::Optimal => {
                let mu = solution.value.expect("optimal solutions carry a value");
                report.full_model_mu_star = Some(exact(&mu));
                full_k = Some(KMax::AtMost(
                    params.n as i64 - ceil_log(params.q, &(mu + pow_q(params.q, 0))),
                ));
            }
            LpStatus::Infeasible => full_k = Some(KMax::NoCode),
            LpStatus::Unbounded => return Err(LrcError::Unbounded.into()),
        }
        if let Some(path) = &args.dump {
            write_dump(path, &dump::to_json(&model.problem))?;
        }
    } else if let Some(path) = &args.dump {
        write_dump(path, &dump::to_json(&build_symmetric_lrc_lp(params)?))?;
    }
    if let Some(k) = &full_k {
        if *k != bound.k_max {
            return Err(CliError::Domain(format!(
                "full model gives k_max {k}, symmetric model gives {}",
                bound.k_max
            )));
        }
    }
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("plain data serializes") + "\n",
        Format::Csv => csv_string([&report])?,
        Format::Text => {
            let mut out = String::new();
            let p = params;
            let _ = writeln!(out, "q={} n={} d={} r={} delta={}", p.q, p.n, p.d, p.r, p.delta);
            let _ = writeln!(out, "mu* = {}", report.mu_star.as_deref().unwrap_or("infeasible"));
            if let Some(mu) = &report.full_model_mu_star {
                let _ = writeln!(out, "full model mu* = {mu}");
            }
            let _ = writeln!(out, "k <= {}", report.k_max);
            let _ = writeln!(out, "pivots: {}", report.pivots);
            out
        }
    };
    Ok(Output {
        text,
        failed: bound.k_max == KMax::NoCode,
    })
}

/// Integers print bare, other values as num/den.
fn exact(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        dump::fraction(x)
    }
}

fn write_dump(path: &PathBuf, json: &str) -> Result<(), CliError> {
    std::fs::write(path, json).map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Field sizes, comma separated
    #[arg(long = "q", value_delimiter = ',', default_values_t = CorpusConfig::default().fields)]
    pub fields: Vec<u32>,
    #[arg(long, default_value_t = CorpusConfig::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = CorpusConfig::default().max_k)]
    pub max_k: usize,
    /// Number of random codes
    #[arg(long, default_value_t = CorpusConfig::default().trials)]
    pub trials: usize,
    #[arg(long, default_value_t = CorpusConfig::default().seed)]
    pub seed: u64,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct CheckRow<'a> {
    check: &'a str,
    kind: &'static str,
    checked: u64,
    mismatches: u64,
}

pub fn run_verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let config = CorpusConfig {
        fields: args.fields.clone(),
        max_n: args.max_n,
        max_k: args.max_k,
        trials: args.trials,
        seed: args.seed,
    };
    let summary = verify::run_verify(&config, args.budget.budget)?;
    let text = match args.format {
        Format::Text => summary.to_text(),
        Format::Json => summary.to_json() + "\n",
        Format::Csv => {
            let checks = summary.checks.iter().map(|(name, c)| CheckRow {
                check: name,
                kind: "check",
                checked: c.checked,
                mismatches: c.mismatches,
            });
            let edges = summary.edge_cases.iter().map(|(name, c)| CheckRow {
                check: name,
                kind: "edge",
                checked: c.checked,
                mismatches: c.mismatches,
            });
            csv_string(checks.chain(edges))?
        }
    };
    Ok(Output {
        text,
        failed: !summary.passed(),
    })
}

#[derive(Args)]
pub struct KoptArgs {
    #[arg(short = 'q', long = "field")]
    pub q: u32,
    #[arg(short = 'n', long = "length")]
    pub n: usize,
    #[arg(short = 'd', long = "distance")]
    pub d: usize,
    #[command(flatten)]
    pub kopt: KoptArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct KoptRow<'a> {
    q: u32,
    n: usize,
    d: usize,
    kopt: usize,
    source: &'a str,
}

pub fn run_kopt(args: &KoptArgs) -> Result<Output, CliError> {
    LrcParams {
        q: args.q,
        n: args.n.max(1),
        d: 1,
        r: 1,
        delta: 2,
    }
    .validate()?;
    let provider = args.kopt.provider()?;
    let kopt = provider.kopt(args.q, args.n, args.d)?;
    let source = provider
        .source(args.q, args.n, args.d)
        .unwrap_or("computed")
        .to_string();
    let row = KoptRow {
        q: args.q,
        n: args.n,
        d: args.d,
        kopt,
        source: &source,
    };
    let text = match args.format {
        Format::Text => format!("k_opt(q={}, n={}, d={}) = {kopt} ({source})\n", args.q, args.n, args.d),
        Format::Json => serde_json::to_string_pretty(&row).expect("plain data serializes") + "\n",
        Format::Csv => csv_string([&row])?,
    };
    Ok(Output::ok(text))
}
