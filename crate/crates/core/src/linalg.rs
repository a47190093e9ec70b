//! Dense exact linear algebra over [`Rational`]: reduced row echelon form,
//! rank, null spaces, multi-right-hand-side solves, and an incremental span
//! used to maintain linearly independent bases.
//!
//! Pivoting always picks the first nonzero entry of the column, so every
//! result is a deterministic function of the input ordering.

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduces `self` in place to reduced row echelon form, considering only
    /// the first `limit` columns for pivots. Returns the pivot columns.
    pub fn rref_limited(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..limit.min(self.cols) {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, lead);
            let inv = self.get(lead, col).recip();
            for c in col..self.cols {
                let v = self.get(lead, c);
                if !v.is_zero() {
                    self.set(lead, c, v * inv);
                }
            }
            let pivot_row: Vec<Rational> = self.row(lead).to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for (c, &pv) in pivot_row.iter().enumerate().skip(col) {
                    if !pv.is_zero() {
                        let cur = self.get(r, c);
                        self.set(r, c, cur - factor * pv);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        self.rref_limited(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column, with the free
    /// variable set to 1 and the other free variables set to 0.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::ZERO; self.cols];
                v[f] = Rational::ONE;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Solves `A X = B` for every column of `B` at once.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, SolveFailure> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let n = self.cols;
        let k = rhs.cols;
        let mut aug = Matrix::zeros(self.rows, n + k);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            for c in 0..k {
                aug.set(r, n + c, rhs.get(r, c));
            }
        }
        let pivots = aug.rref_limited(n);
        for r in pivots.len()..self.rows {
            if let Some(c) = (0..k).find(|&c| !aug.get(r, n + c).is_zero()) {
                return Err(SolveFailure::Inconsistent { rhs_column: c });
            }
        }
        if pivots.len() < n {
            return Err(SolveFailure::Underdetermined { rank: pivots.len(), unknowns: n });
        }
        let mut out = Matrix::zeros(n, k);
        for (r, &p) in pivots.iter().enumerate() {
            for c in 0..k {
                out.set(p, c, aug.get(r, n + c));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| *a * *b).sum())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveFailure {
    Inconsistent { rhs_column: usize },
    Underdetermined { rank: usize, unknowns: usize },
}

/// Row span of a growing set of vectors, kept in reduced echelon form so
/// membership is a single reduction pass.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    len: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonSpan {
    pub fn new(len: usize) -> Self {
        EchelonSpan { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = w[p];
            if f.is_zero() {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= inv;
        }
        for row in self.rows.iter_mut() {
            let f = row[p];
            if f.is_zero() {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    /// The reduced rows, ordered by pivot column.
    pub fn reduced_rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128) -> Rational {
        Rational::int(n)
    }

    fn mat(rows: &[&[i128]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Rational::is_zero));
    }

    #[test]
    fn solve_reports_failures() {
        let a = mat(&[&[1, 1], &[1, -1], &[2, 0]]);
        let b = mat(&[&[3], &[1], &[4]]);
        let x = a.solve(&b).unwrap();
        assert_eq!((x.get(0, 0), x.get(1, 0)), (q(2), q(1)));

        let bad = mat(&[&[3], &[1], &[5]]);
        assert_eq!(a.solve(&bad), Err(SolveFailure::Inconsistent { rhs_column: 0 }));

        let wide = mat(&[&[1, 1]]);
        assert_eq!(wide.solve(&mat(&[&[1]])), Err(SolveFailure::Underdetermined { rank: 1, unknowns: 2 }));
    }

    #[test]
    fn echelon_span_membership() {
        let mut s = EchelonSpan::new(3);
        assert!(s.insert(&[q(0), q(2), q(2)]));
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(!s.insert(&[q(2), q(4), q(2)]));
        assert!(s.contains(&[q(1), q(-1), q(-2)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.dim(), 2);
    }
}
