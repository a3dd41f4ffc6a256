use crate::error::{LrcError, Result};
use crate::gf::{Field, FieldElement};

/// Dense row-major matrix over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGF {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl MatrixGF {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> MatrixGF {
        MatrixGF {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    /// Rows of element indices; every row must have length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<FieldElement>]) -> Result<MatrixGF> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LrcError::RaggedRows {
                    expected: cols,
                    found: row.len(),
                });
            }
            for &x in row {
                if x.0 as u32 >= field.q() {
                    return Err(LrcError::InvalidElement {
                        q: field.q(),
                        value: x.0 as u64,
                    });
                }
            }
            data.extend_from_slice(row);
        }
        Ok(MatrixGF {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: FieldElement) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut t = MatrixGF::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// The submatrix on the given columns, in the order listed.
    pub fn select_columns(&self, cols: &[usize]) -> MatrixGF {
        let mut out = MatrixGF::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row-echelon form with zero rows removed, and the pivot columns.
    pub fn rref(&self) -> (MatrixGF, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            m.scale_row(lead, inv);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, c);
                    if !factor.is_zero() {
                        m.add_row_multiple(r, lead, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        m.rows = lead;
        m.data.truncate(lead * m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of {u : u M = 0}, one vector of length `rows` per row of the result.
    pub fn left_kernel(&self) -> MatrixGF {
        self.transpose().right_kernel()
    }

    /// A basis of {v : M v = 0}.
    pub fn right_kernel(&self) -> MatrixGF {
        let f = &self.field;
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = MatrixGF::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, FieldElement::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(reduced.get(r, fc)));
            }
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, factor: FieldElement) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), factor);
            self.set(r, c, v);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: FieldElement) {
        for c in 0..self.cols {
            let v = self
                .field
                .add(self.get(dst, c), self.field.mul(factor, self.get(src, c)));
            self.set(dst, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(f: &Field, rows: &[&[u16]]) -> MatrixGF {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| FieldElement(x)).collect())
            .collect();
        MatrixGF::from_rows(f, rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn rref_over_gf3() {
        let f = Field::new(3).unwrap();
        let m = mat(&f, &[&[2, 1, 0], &[1, 2, 0], &[0, 0, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r, mat(&f, &[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn kernels_annihilate() {
        let f = Field::new(5).unwrap();
        let m = mat(&f, &[&[1, 2, 3, 4], &[0, 1, 1, 1]]);
        let k = m.right_kernel();
        assert_eq!(k.rows(), 2);
        for b in 0..k.rows() {
            for r in 0..m.rows() {
                let dot = (0..4).fold(FieldElement::ZERO, |acc, c| f.add(acc, f.mul(m.get(r, c), k.get(b, c))));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(m.left_kernel().rows(), 0);
    }

    #[test]
    fn ragged_and_invalid_rows() {
        let f = Field::new(2).unwrap();
        let rows = vec![vec![FieldElement(1)], vec![]];
        assert_eq!(
            MatrixGF::from_rows(&f, 1, &rows).unwrap_err(),
            LrcError::RaggedRows { expected: 1, found: 0 }
        );
        let bad = vec![vec![FieldElement(2)]];
        assert!(MatrixGF::from_rows(&f, 1, &bad).is_err());
    }
}
