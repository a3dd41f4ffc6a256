//! Seeded random codes for the oracle suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codecore::LinearCode;
use crate::error::{LrcError, Result};
use crate::gf::Field;

/// Seed of the committed default corpus.
pub const CORPUS_SEED: u64 = 0x5EED_C0DE_0001;

/// Largest side (|C| or |C⊥|) a corpus code may have; both sides are enumerated.
pub const MAX_SIDE: u128 = 1 << 17;

/// Attempts per corpus entry before giving up on a configuration.
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub fields: Vec<u32>,
    pub max_n: usize,
    pub max_k: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> CorpusConfig {
        CorpusConfig {
            fields: vec![2, 3, 4, 5],
            max_n: 12,
            max_k: 6,
            trials: 240,
            seed: CORPUS_SEED,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub index: usize,
    pub code: LinearCode,
}

fn side_fits(q: u32, dim: usize) -> bool {
    (q as u128).checked_pow(dim as u32).is_some_and(|s| s <= MAX_SIDE)
}

/// Non-degenerate codes with 1 <= k <= n-1 from uniform generator matrices.
/// Fields are used round-robin; n and k are drawn uniformly among sizes
/// whose both sides fit `MAX_SIDE`.
pub fn generate_corpus(config: &CorpusConfig) -> Result<Vec<CorpusEntry>> {
    if config.fields.is_empty() || config.max_n < 2 || config.max_k < 1 {
        return Err(LrcError::InvalidParameters(
            "need a field, max_n >= 2 and max_k >= 1".into(),
        ));
    }
    if config.max_n > 16 {
        return Err(LrcError::InvalidParameters(format!(
            "corpus length is capped at 16, got {}",
            config.max_n
        )));
    }
    let fields = config
        .fields
        .iter()
        .map(|&q| Field::new(q))
        .collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.trials);
    for index in 0..config.trials {
        let field = &fields[index % fields.len()];
        let q = field.q();
        let shapes: Vec<(usize, usize)> = (2..=config.max_n)
            .flat_map(|n| (1..n.min(config.max_k + 1)).map(move |k| (n, k)))
            .filter(|&(n, k)| side_fits(q, k) && side_fits(q, n - k))
            .collect();
        if shapes.is_empty() {
            return Err(LrcError::InvalidParameters(format!("no admissible (n, k) for q={q}")));
        }
        let mut attempts = 0;
        let code = loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS {
                return Err(LrcError::Inconsistent(format!(
                    "no non-degenerate code found for q={q}"
                )));
            }
            let (n, k) = shapes[rng.gen_range(0..shapes.len())];
            let rows: Vec<Vec<u64>> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..q as u64)).collect())
                .collect();
            let code = LinearCode::from_entries(field, n, &rows)?;
            if code.k() == k && code.is_nondegenerate() {
                break code;
            }
        };
        out.push(CorpusEntry { index, code });
    }
    Ok(out)
}
