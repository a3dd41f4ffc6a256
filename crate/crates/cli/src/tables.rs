use std::fmt::Write;
use std::path::PathBuf;

use clap::Args;
use lrc_core::bounds::tables::{compute_row, reference_rows, RowComputation};
use lrc_core::bounds::{parse_kopt_csv, KoptProvider};
use serde::Serialize;

use crate::{csv_string, read_file, CliError, Format, Output};

#[derive(Args)]
pub struct TablesArgs {
    /// Table ids 1..=5; all when omitted
    pub ids: Vec<u8>,
    /// Exit 1 if any recomputed cell differs from the reference
    #[arg(long)]
    pub check: bool,
    /// Extra exact k_opt rows layered over the embedded table
    #[arg(long, value_name = "FILE")]
    pub kopt_table: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize)]
struct CellRow {
    table: u8,
    row: usize,
    q: u32,
    delta: usize,
    n: usize,
    d: usize,
    r: usize,
    lp: Option<i64>,
    sh_lp: i64,
    sh_exact: i64,
    gen_singl: i64,
    ref_lp: i64,
    ref_sh_lp: i64,
    ref_sh_exact: i64,
    ref_gen_singl: i64,
    mismatches: usize,
}

impl CellRow {
    fn new(c: &RowComputation) -> CellRow {
        let r = &c.reference;
        CellRow {
            table: r.table,
            row: r.row,
            q: r.q,
            delta: r.delta,
            n: r.n,
            d: r.d,
            r: r.r,
            lp: c.lp,
            sh_lp: c.sh_lp,
            sh_exact: c.sh_exact,
            gen_singl: c.gen_singl,
            ref_lp: r.lp,
            ref_sh_lp: r.sh_lp,
            ref_sh_exact: r.sh_exact,
            ref_gen_singl: r.gen_singl,
            mismatches: c.mismatches().len(),
        }
    }
}

/// Rows are independent, so each gets its own thread; output keeps row order.
fn compute_all(ids: &[u8], exact: &KoptProvider, lp: &KoptProvider) -> Result<Vec<RowComputation>, CliError> {
    for &id in ids {
        if !(1..=5).contains(&id) {
            return Err(CliError::Usage(format!("table id must be 1..=5, got {id}")));
        }
    }
    let rows: Vec<_> = reference_rows()
        .into_iter()
        .filter(|r| ids.is_empty() || ids.contains(&r.table))
        .collect();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = rows
            .iter()
            .map(|row| s.spawn(move || compute_row(row, exact, lp)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("row worker panicked"))
            .collect()
    });
    results.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

fn cell(computed: Option<i64>, expected: i64) -> String {
    let shown = computed.map_or("-inf".to_string(), |v| v.to_string());
    if computed == Some(expected) {
        shown
    } else {
        format!("{shown}* (ref {expected})")
    }
}

fn render_text(rows: &[RowComputation]) -> String {
    let mut out = String::new();
    let mut current = None;
    for c in rows {
        let r = &c.reference;
        if current != Some(r.table) {
            if current.is_some() {
                out.push('\n');
            }
            current = Some(r.table);
            let _ = writeln!(out, "Table {}: q={} delta={}", r.table, r.q, r.delta);
            let header = format!(
                "{:>4} {:>4} {:>4}  {:<14} {:<14} {:<14} {:<14}",
                "n", "d", "r", "LP", "SH with LP", "SH exact", "gen. Singl."
            );
            let _ = writeln!(out, "{}", header.trim_end());
        }
        let line = format!(
            "{:>4} {:>4} {:>4}  {:<14} {:<14} {:<14} {:<14}",
            r.n,
            r.d,
            r.r,
            cell(c.lp, r.lp),
            cell(Some(c.sh_lp), r.sh_lp),
            cell(Some(c.sh_exact), r.sh_exact),
            cell(Some(c.gen_singl), r.gen_singl)
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let differing: usize = rows.iter().map(|c| c.mismatches().len()).sum();
    if differing == 0 {
        let _ = writeln!(out, "\nall cells match the reference");
    } else {
        let _ = writeln!(out, "\n{differing} cells differ from the reference (marked *)");
    }
    out
}

pub fn run(args: &TablesArgs) -> Result<Output, CliError> {
    let mut exact = KoptProvider::exact();
    if let Some(path) = &args.kopt_table {
        exact.extend(parse_kopt_csv(&read_file(path)?)?);
    }
    let lp = KoptProvider::delsarte();
    let rows = compute_all(&args.ids, &exact, &lp)?;
    let text = match args.format {
        Format::Text => render_text(&rows),
        Format::Json => {
            serde_json::to_string_pretty(&rows.iter().map(CellRow::new).collect::<Vec<_>>())
                .expect("plain data serializes")
                + "\n"
        }
        Format::Csv => csv_string(rows.iter().map(CellRow::new))?,
    };
    let differing = rows.iter().any(|c| !c.mismatches().is_empty());
    Ok(Output {
        text,
        failed: args.check && differing,
    })
}
