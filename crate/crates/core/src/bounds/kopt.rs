//! Providers of k_opt(n, d), the largest dimension of a q-ary [n, k, d] code.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::Mutex;

use serde::Deserialize;

use crate::error::{LrcError, Result};
use crate::lpcore::delsarte_kopt_bound;

const EMBEDDED_TABLE: &str = include_str!("../../data/kopt.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoptMode {
    /// lookup in a table of known optimal dimensions
    ExactTable,
    /// largest k with q^k at most the Delsarte LP size bound
    DelsarteLp,
    /// n - d + 1
    Singleton,
}

impl FromStr for KoptMode {
    type Err = LrcError;
    fn from_str(s: &str) -> Result<KoptMode> {
        match s {
            "exact" | "exact_table" => Ok(KoptMode::ExactTable),
            "lp" | "delsarte" | "delsarte_lp" => Ok(KoptMode::DelsarteLp),
            "singleton" => Ok(KoptMode::Singleton),
            other => Err(LrcError::Parse(format!("unknown k_opt mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoptEntry {
    pub kopt: usize,
    pub source: String,
}

#[derive(Deserialize)]
struct Row {
    q: u32,
    n: usize,
    d: usize,
    kopt: usize,
    source: String,
}

pub type KoptTable = BTreeMap<(u32, usize, usize), KoptEntry>;

/// Parses a `q,n,d,kopt,source` CSV with a header line.
pub fn parse_kopt_csv(text: &str) -> Result<KoptTable> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut table = BTreeMap::new();
    for (line, row) in reader.deserialize::<Row>().enumerate() {
        let row = row.map_err(|e| LrcError::Parse(format!("k_opt table row {}: {e}", line + 2)))?;
        if row.kopt > row.n {
            return Err(LrcError::Parse(format!("k_opt table row {}: kopt exceeds n", line + 2)));
        }
        table.insert(
            (row.q, row.n, row.d),
            KoptEntry {
                kopt: row.kopt,
                source: row.source,
            },
        );
    }
    Ok(table)
}

pub fn embedded_kopt_table() -> KoptTable {
    parse_kopt_csv(EMBEDDED_TABLE).expect("embedded k_opt table parses")
}

pub struct KoptProvider {
    pub mode: KoptMode,
    pub table: KoptTable,
    cache: Mutex<HashMap<(u32, usize, usize), usize>>,
}

impl KoptProvider {
    pub fn new(mode: KoptMode, table: KoptTable) -> KoptProvider {
        KoptProvider {
            mode,
            table,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Exact mode backed by the embedded table.
    pub fn exact() -> KoptProvider {
        KoptProvider::new(KoptMode::ExactTable, embedded_kopt_table())
    }

    pub fn delsarte() -> KoptProvider {
        KoptProvider::new(KoptMode::DelsarteLp, KoptTable::new())
    }

    pub fn singleton() -> KoptProvider {
        KoptProvider::new(KoptMode::Singleton, KoptTable::new())
    }

    /// Adds or replaces entries; later entries win.
    pub fn extend(&mut self, extra: KoptTable) {
        self.table.extend(extra);
    }

    /// k_opt(n, d); 0 when n < d, n when d <= 1.
    pub fn kopt(&self, q: u32, n: usize, d: usize) -> Result<usize> {
        if n < d || n == 0 {
            return Ok(0);
        }
        if d <= 1 {
            return Ok(n);
        }
        match self.mode {
            KoptMode::Singleton => Ok(n - d + 1),
            KoptMode::ExactTable => self
                .table
                .get(&(q, n, d))
                .map(|e| e.kopt)
                .ok_or(LrcError::KoptMiss { q, n, d }),
            KoptMode::DelsarteLp => {
                if let Some(&k) = self.cache.lock().unwrap().get(&(q, n, d)) {
                    return Ok(k);
                }
                let k = delsarte_kopt_bound(q, n, d)?;
                self.cache.lock().unwrap().insert((q, n, d), k);
                Ok(k)
            }
        }
    }

    pub fn source(&self, q: u32, n: usize, d: usize) -> Option<&str> {
        self.table.get(&(q, n, d)).map(|e| e.source.as_str())
    }
}

impl std::fmt::Debug for KoptProvider {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KoptProvider")
            .field("mode", &self.mode)
            .field("entries", &self.table.len())
            .finish()
    }
}
