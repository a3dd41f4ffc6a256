use num_bigint::BigInt;
use num_traits::Zero;

use super::coords::{CoordSet, MAX_LENGTH};
use super::matrix::MatrixGF;
use crate::combin::macwilliams;
use crate::error::{LrcError, Result};
use crate::gf::{Field, FieldElement};

/// Enumeration budget used when the caller does not pass one: 2^28 words.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// `LRC_BUDGET` from the environment, else `DEFAULT_BUDGET`.
pub fn default_budget() -> u64 {
    std::env::var("LRC_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// q^k, saturating at `u128::MAX`.
pub fn code_size(q: u32, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

pub fn check_budget(q: u32, k: usize, budget: u64) -> Result<()> {
    let needed = code_size(q, k);
    if needed > budget as u128 {
        Err(LrcError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// A linear [n, k] code over GF(q), kept as its RREF generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    gen: MatrixGF,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row space of `rows`; dependent rows collapse.
    pub fn from_generator(field: &Field, n: usize, rows: &[Vec<FieldElement>]) -> Result<LinearCode> {
        LinearCode::from_matrix(&MatrixGF::from_rows(field, n, rows)?)
    }

    /// Like `from_generator` but with raw integer entries.
    pub fn from_entries(field: &Field, n: usize, rows: &[Vec<u64>]) -> Result<LinearCode> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_generator(field, n, &rows)
    }

    pub fn from_matrix(m: &MatrixGF) -> Result<LinearCode> {
        if m.cols() > MAX_LENGTH {
            return Err(LrcError::InvalidParameters(format!(
                "length {} exceeds the supported maximum {MAX_LENGTH}",
                m.cols()
            )));
        }
        let (gen, pivots) = m.rref();
        Ok(LinearCode {
            n: m.cols(),
            gen,
            pivots,
        })
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            n,
            gen: MatrixGF::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    #[inline]
    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.field().q()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.pivots.len()
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// |C| = q^k, saturating.
    pub fn size(&self) -> u128 {
        code_size(self.q(), self.k())
    }

    /// 1 <= k <= n - 1.
    pub fn is_nontrivial(&self) -> bool {
        self.k() >= 1 && self.k() < self.n
    }

    pub fn dual(&self) -> LinearCode {
        let f = self.field();
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        // one dual word per non-pivot column: 1 there, -G[r][c] at pivot p_r
        let mut h = MatrixGF::zeros(f, free.len(), self.n);
        for (b, &c) in free.iter().enumerate() {
            h.set(b, c, FieldElement::ONE);
            for (r, &p) in self.pivots.iter().enumerate() {
                h.set(b, p, f.neg(self.gen.get(r, c)));
            }
        }
        LinearCode::from_matrix(&h).expect("dual has the same length")
    }

    /// C(T): the codewords supported inside T, as a length-n code.
    pub fn shorten_to(&self, t: CoordSet) -> Result<LinearCode> {
        t.check_within(self.n)?;
        let outside: Vec<usize> = t.complement(self.n).indices().collect();
        let kernel = self.gen.select_columns(&outside).left_kernel();
        let mut rows = Vec::with_capacity(kernel.rows());
        for b in 0..kernel.rows() {
            rows.push(self.encode(kernel.row(b)));
        }
        LinearCode::from_generator(self.field(), self.n, &rows)
    }

    /// dim C(T) = k - rank of the generator restricted to the complement of T.
    pub fn shortened_dim(&self, t: CoordSet) -> usize {
        let outside: Vec<usize> = t.complement(self.n).indices().collect();
        self.k() - self.gen.select_columns(&outside).rank()
    }

    /// pi_S(C) on the coordinates of S in ascending order.
    pub fn project(&self, s: CoordSet) -> Result<LinearCode> {
        if s.is_empty() {
            return Err(LrcError::EmptyProjection);
        }
        s.check_within(self.n)?;
        let cols: Vec<usize> = s.indices().collect();
        LinearCode::from_matrix(&self.gen.select_columns(&cols))
    }

    /// dim pi_S(C).
    pub fn projected_dim(&self, s: CoordSet) -> usize {
        let cols: Vec<usize> = s.indices().collect();
        self.gen.select_columns(&cols).rank()
    }

    /// message * G
    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        let f = self.field();
        let mut word = vec![FieldElement::ZERO; self.n];
        for (r, &u) in message.iter().enumerate() {
            if !u.is_zero() {
                for (c, w) in word.iter_mut().enumerate() {
                    *w = f.add(*w, f.mul(u, self.gen.get(r, c)));
                }
            }
        }
        word
    }

    /// Membership test; the message is read off the pivot columns.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let message: Vec<FieldElement> = self.pivots.iter().map(|&p| word[p]).collect();
        self.encode(&message) == word
    }

    /// Calls `visit` on every codeword, messages in lexicographic order.
    pub fn for_each_codeword<F: FnMut(&[FieldElement])>(&self, budget: u64, mut visit: F) -> Result<()> {
        check_budget(self.q(), self.k(), budget)?;
        let f = self.field();
        let k = self.k();
        let q = self.q() as u16;
        let mut message = vec![0u16; k];
        let mut word = vec![FieldElement::ZERO; self.n];
        loop {
            visit(&word);
            // odometer step, last digit fastest
            let mut r = k;
            loop {
                if r == 0 {
                    return Ok(());
                }
                r -= 1;
                let old = FieldElement(message[r]);
                let new = FieldElement((message[r] + 1) % q);
                message[r] = new.0;
                let delta = f.sub(new, old);
                for (c, w) in word.iter_mut().enumerate() {
                    *w = f.add(*w, f.mul(delta, self.gen.get(r, c)));
                }
                if new.0 != 0 {
                    break;
                }
            }
        }
    }

    /// Every codeword, messages in lexicographic order.
    pub fn codewords(&self, budget: u64) -> Result<Codewords<'_>> {
        check_budget(self.q(), self.k(), budget)?;
        Ok(Codewords {
            code: self,
            message: vec![0; self.k()],
            done: false,
        })
    }

    /// Supports of all codewords, in enumeration order.
    pub fn supports(&self, budget: u64) -> Result<Vec<CoordSet>> {
        let mut out = Vec::with_capacity(self.size().min(budget as u128) as usize);
        self.for_each_codeword(budget, |w| out.push(support(w)))?;
        Ok(out)
    }

    /// Weight distribution by direct enumeration of this code.
    pub fn enumerated_weights(&self, budget: u64) -> Result<Vec<u128>> {
        let mut counts = vec![0u128; self.n + 1];
        self.for_each_codeword(budget, |w| counts[weight(w)] += 1)?;
        Ok(counts)
    }

    /// Weight distribution, enumerating whichever of C and its dual is smaller.
    pub fn weight_distribution(&self, budget: u64) -> Result<Vec<BigInt>> {
        if self.k() <= self.n - self.k() {
            let w = self.enumerated_weights(budget)?;
            return Ok(w.into_iter().map(BigInt::from).collect());
        }
        let dual = self.dual();
        let w: Vec<BigInt> = dual.enumerated_weights(budget)?.into_iter().map(BigInt::from).collect();
        macwilliams(self.q(), self.n, dual.k(), &w)
            .into_iter()
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(LrcError::NonIntegral(x.to_string()))
                }
            })
            .collect()
    }

    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        if self.k() == 0 {
            return Err(LrcError::ZeroCode);
        }
        let w = self.weight_distribution(budget)?;
        Ok((1..=self.n).find(|&i| !w[i].is_zero()).expect("a nonzero word exists"))
    }

    /// First coordinate (0-based) on which every codeword vanishes.
    pub fn degenerate_coordinate(&self) -> Option<usize> {
        (0..self.n).find(|&c| (0..self.k()).all(|r| self.gen.get(r, c).is_zero()))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.degenerate_coordinate().is_none()
    }

    pub fn to_entries(&self) -> Vec<Vec<u64>> {
        (0..self.k())
            .map(|r| self.gen.row(r).iter().map(|x| x.0 as u64).collect())
            .collect()
    }
}

pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Vec<u16>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Vec<FieldElement>> {
        if self.done {
            return None;
        }
        let msg: Vec<FieldElement> = self.message.iter().map(|&x| FieldElement(x)).collect();
        let word = self.code.encode(&msg);
        let q = self.code.q() as u16;
        self.done = true;
        for digit in self.message.iter_mut().rev() {
            *digit = (*digit + 1) % q;
            if *digit != 0 {
                self.done = false;
                break;
            }
        }
        Some(word)
    }
}

#[inline]
pub fn weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

#[inline]
pub fn support(word: &[FieldElement]) -> CoordSet {
    let mut s = CoordSet::EMPTY;
    for (i, x) in word.iter().enumerate() {
        if !x.is_zero() {
            s.insert(i);
        }
    }
    s
}

/// sum_c a_c b_c
pub fn dot(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter()
        .zip(b)
        .fold(FieldElement::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
