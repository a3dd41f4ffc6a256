use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lrc_core::codecore::parse_code;
use lrc_core::weights::{
    generalized_weights, is_optimal_lrc, is_rdelta_lrc, locality_profile, prop41_dual_mass, smallest_r_for_delta,
    weight_distribution, DualMass, GeneralizedWeightHierarchy, LocalityProfile, OptimalityVerdict, RefinedWeightTable,
    RepairConvention,
};
use lrc_core::{CoordSet, LinearCode, LrcError};
use serde::Serialize;

use crate::{csv_string, read_file, BudgetArg, CliError, Format, Output};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Convention {
    /// group contains i and has at most r + delta - 1 coordinates
    Containing,
    /// i plus at most r + delta other coordinates
    Excluding,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Code file: JSON {"q","n","generator"} or a `q n k` header plus rows
    pub file: PathBuf,
    /// Test (r, delta)-locality for this r; with only --delta, the least r is searched
    #[arg(short = 'r', long = "locality")]
    pub r: Option<usize>,
    /// Local distance for the (r, delta) test
    #[arg(long)]
    pub delta: Option<usize>,
    #[arg(long, value_enum, default_value_t = Convention::Containing)]
    pub convention: Convention,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct RDeltaReport {
    r: Option<usize>,
    delta: usize,
    holds: bool,
    /// repair group per coordinate, 1-based labels
    witnesses: Vec<Option<Vec<usize>>>,
    dual_mass: Option<DualMass>,
}

#[derive(Serialize)]
struct RefinedRow {
    set: Vec<usize>,
    counts: Vec<u128>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    q: u32,
    n: usize,
    k: usize,
    d: Option<usize>,
    dual_d: Option<usize>,
    locality: Option<LocalityProfile>,
    rdelta: Option<RDeltaReport>,
    weights: Vec<u128>,
    dual_weights: Vec<u128>,
    refined_singletons: Vec<RefinedRow>,
    hierarchy: Option<GeneralizedWeightHierarchy>,
    optimality: Option<OptimalityVerdict>,
    /// quantities that could not be computed, with the reason
    notes: Vec<String>,
}

/// Budget and domain errors abort; precondition failures become notes.
fn soft<T>(res: Result<T, LrcError>, what: &str, notes: &mut Vec<String>) -> Result<Option<T>, CliError> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e @ LrcError::BudgetExceeded { .. }) => Err(e.into()),
        Err(e) => {
            notes.push(format!("{what}: {e}"));
            Ok(None)
        }
    }
}

fn distance(code: &LinearCode, budget: u64) -> Result<Option<usize>, CliError> {
    match code.min_distance(budget) {
        Ok(d) => Ok(Some(d)),
        Err(LrcError::ZeroCode) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn rdelta(
    args: &AnalyzeArgs,
    code: &LinearCode,
    budget: u64,
    notes: &mut Vec<String>,
) -> Result<Option<RDeltaReport>, CliError> {
    if args.r.is_none() && args.delta.is_none() {
        return Ok(None);
    }
    let delta = args.delta.unwrap_or(2);
    let convention = match args.convention {
        Convention::Containing => RepairConvention::Containing,
        Convention::Excluding => RepairConvention::Excluding,
    };
    let r = match args.r {
        Some(r) => Some(r),
        None => soft(smallest_r_for_delta(code, delta, convention, budget), "least r", notes)?.flatten(),
    };
    let Some(r_val) = r else {
        return Ok(Some(RDeltaReport {
            r: None,
            delta,
            holds: false,
            witnesses: Vec::new(),
            dual_mass: None,
        }));
    };
    let Some(verdict) = soft(
        is_rdelta_lrc(code, r_val, delta, convention, budget),
        "(r,delta) test",
        notes,
    )?
    else {
        return Ok(None);
    };
    let dual_mass = soft(prop41_dual_mass(code, r_val, delta, budget), "dual mass", notes)?;
    Ok(Some(RDeltaReport {
        r,
        delta,
        holds: verdict.holds,
        witnesses: verdict.witnesses.iter().map(|w| w.map(CoordSet::labels)).collect(),
        dual_mass,
    }))
}

fn analyze(args: &AnalyzeArgs) -> Result<AnalyzeReport, CliError> {
    let code = parse_code(&read_file(&args.file)?)?;
    let budget = args.budget.budget;
    let dual = code.dual();
    let mut notes = Vec::new();
    let locality = soft(locality_profile(&code, budget), "locality", &mut notes)?;
    let rdelta = rdelta(args, &code, budget, &mut notes)?;
    let refined = RefinedWeightTable::singletons(&code, budget)?;
    let refined_singletons = refined
        .sets()
        .map(|s| RefinedRow {
            set: s.labels(),
            counts: refined.row(s).expect("listed set").to_vec(),
        })
        .collect();
    let hierarchy = soft(generalized_weights(&code, budget), "generalized weights", &mut notes)?;
    let optimality = if locality.is_some() {
        soft(is_optimal_lrc(&code, budget), "optimality", &mut notes)?
    } else {
        None
    };
    Ok(AnalyzeReport {
        q: code.q(),
        n: code.n(),
        k: code.k(),
        d: distance(&code, budget)?,
        dual_d: distance(&dual, budget)?,
        locality,
        rdelta,
        weights: weight_distribution(&code, budget)?.counts,
        dual_weights: weight_distribution(&dual, budget)?.counts,
        refined_singletons,
        hierarchy,
        optimality,
        notes,
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn show(x: Option<usize>) -> String {
    x.map_or("-".to_string(), |v| v.to_string())
}

fn render_text(rep: &AnalyzeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "code: GF({}) n={} k={}", rep.q, rep.n, rep.k);
    let _ = writeln!(out, "d = {}, dual d = {}", show(rep.d), show(rep.dual_d));
    if let Some(loc) = &rep.locality {
        let _ = writeln!(
            out,
            "locality r = {} (per coordinate: {})",
            loc.r_min,
            join(&loc.per_coord_r)
        );
    }
    if let Some(rd) = &rep.rdelta {
        let r = show(rd.r);
        let _ = writeln!(out, "({r},{})-LRC: {}", rd.delta, rd.holds);
        for (j, w) in rd.witnesses.iter().enumerate() {
            let group = w.as_ref().map_or("none".to_string(), |g| format!("{{{}}}", join(g)));
            let _ = writeln!(out, "  coordinate {}: {group}", j + 1);
        }
        if let Some(dm) = &rd.dual_mass {
            let _ = writeln!(
                out,
                "dual mass (r={r}, delta={}): sums {} threshold {} all hold: {}",
                rd.delta,
                join(&dm.sums),
                dm.threshold,
                dm.all_hold()
            );
        }
    }
    let _ = writeln!(out, "weight distribution: {}", join(&rep.weights));
    let _ = writeln!(out, "dual weight distribution: {}", join(&rep.dual_weights));
    let _ = writeln!(out, "refined weights W_i^S, S empty or a singleton:");
    for row in &rep.refined_singletons {
        let _ = writeln!(out, "  {{{}}}: {}", join(&row.set), join(&row.counts));
    }
    if let Some(h) = &rep.hierarchy {
        let _ = writeln!(out, "generalized weights: {}", join(&h.d));
        let _ = writeln!(out, "mu: {}", join(&h.mu));
    }
    if let Some(opt) = &rep.optimality {
        let _ = writeln!(out, "optimal LRC (r={}): {}", opt.r, opt.optimal);
    }
    for note in &rep.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

#[derive(Serialize)]
struct WeightRow {
    i: usize,
    weight: u128,
    dual_weight: u128,
}

pub fn run(args: &AnalyzeArgs) -> Result<Output, CliError> {
    let rep = analyze(args)?;
    let text = match args.format {
        Format::Text => render_text(&rep),
        Format::Json => serde_json::to_string_pretty(&rep).expect("plain data serializes") + "\n",
        Format::Csv => csv_string(
            rep.weights
                .iter()
                .zip(&rep.dual_weights)
                .enumerate()
                .map(|(i, (&w, &dw))| WeightRow {
                    i,
                    weight: w,
                    dual_weight: dw,
                }),
        )?,
    };
    Ok(Output::ok(text))
}
