//! Small codes used as worked examples throughout the tests and the CLI.

use super::code::LinearCode;
use crate::error::Result;
use crate::gf::Field;

/// Binary [7,3,4] simplex code with the generator (I | A).
pub fn simplex_7_3() -> LinearCode {
    let f = Field::new(2).expect("GF(2)");
    LinearCode::from_entries(
        &f,
        7,
        &[
            vec![1, 0, 0, 1, 0, 1, 1],
            vec![0, 1, 0, 1, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 1],
        ],
    )
    .expect("valid generator")
}

/// Binary [7,4,3] Hamming code, the dual of `simplex_7_3`.
pub fn hamming_7_4() -> LinearCode {
    simplex_7_3().dual()
}

/// Binary [5,3,2] code that passes the dual-mass test for (2,3)-locality
/// without being a (2,3)-LRC.
pub fn dual_mass_counterexample() -> LinearCode {
    let f = Field::new(2).expect("GF(2)");
    LinearCode::from_entries(&f, 5, &[vec![1, 1, 0, 1, 0], vec![0, 1, 1, 0, 0], vec![0, 0, 0, 1, 1]])
        .expect("valid generator")
}

/// Parity-check rows of `dual_mass_counterexample`.
pub fn dual_mass_counterexample_parity() -> LinearCode {
    let f = Field::new(2).expect("GF(2)");
    LinearCode::from_entries(&f, 5, &[vec![1, 1, 1, 0, 0], vec![1, 0, 0, 1, 1]]).expect("valid generator")
}

/// [n,1,n] repetition code over GF(q).
pub fn repetition(q: u32, n: usize) -> Result<LinearCode> {
    let f = Field::new(q)?;
    LinearCode::from_entries(&f, n, &[vec![1; n]])
}

/// [n, n-2, 2] code whose dual is spanned by the indicator vectors of
/// {1..h} and {h+1..n}, h = n/2. Every coordinate is repaired from h-1 others.
pub fn two_block_parity(q: u32, n: usize) -> Result<LinearCode> {
    let f = Field::new(q)?;
    let h = n / 2;
    let left: Vec<u64> = (0..n).map(|c| u64::from(c < h)).collect();
    let right: Vec<u64> = (0..n).map(|c| u64::from(c >= h)).collect();
    Ok(LinearCode::from_entries(&f, n, &[left, right])?.dual())
}

/// First-order binary Reed-Muller code RM(1, m), point x in F_2^m at
/// coordinate 1 + (x read as a binary integer).
pub fn reed_muller_first_order(m: usize) -> LinearCode {
    let f = Field::new(2).expect("GF(2)");
    let n = 1 << m;
    let mut rows = vec![vec![1u64; n]];
    for bit in 0..m {
        rows.push((0..n).map(|x| ((x >> bit) & 1) as u64).collect());
    }
    LinearCode::from_entries(&f, n, &rows).expect("valid generator")
}
