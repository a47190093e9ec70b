use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::Octonion;
use crate::rational::Rational;

/// Square matrix with exact rational entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix { n, entries: vec![Rational::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMatrix { n, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn from_flat(n: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), n * n);
        RatMatrix { n, entries }
    }

    /// `e_p e_q^T - e_q e_p^T`.
    pub fn elementary_antisymmetric(n: usize, p: usize, q: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(p, q, Rational::ONE);
        m.set(q, p, -Rational::ONE);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.n + c] = v;
    }

    pub fn flat(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|r| (r..self.n).all(|c| self.get(r, c) == -self.get(c, r)))
    }

    pub fn scale(&self, s: Rational) -> Self {
        RatMatrix { n: self.n, entries: self.entries.iter().map(|x| *x * s).collect() }
    }

    pub fn matmul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, rhs: &RatMatrix) -> RatMatrix {
        self.matmul(rhs) - rhs.matmul(self)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n);
        (0..self.n).map(|r| (0..self.n).filter(|&c| !v[c].is_zero()).map(|c| self.get(r, c) * v[c]).sum()).collect()
    }

    /// Action on an octonion's coefficient vector. Panics unless `n == 8`.
    pub fn apply_octonion(&self, x: &Octonion) -> Octonion {
        assert_eq!(self.n, 8, "octonion action needs an 8x8 matrix");
        let v = self.apply(x.coeffs());
        Octonion::new(std::array::from_fn(|i| v[i]))
    }

    /// Linear combination `sum_k coeffs[k] * mats[k]`.
    pub fn combination(n: usize, coeffs: &[Rational], mats: &[RatMatrix]) -> RatMatrix {
        let mut out = Self::zeros(n);
        for (c, m) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.entries.iter_mut().zip(&m.entries) {
                if !x.is_zero() {
                    *o += *c * *x;
                }
            }
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        RatMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| *a + *b).collect() }
    }
}

impl Sub for RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: RatMatrix) -> RatMatrix {
        &self + &(-rhs)
    }
}

impl Neg for RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix { n: self.n, entries: self.entries.into_iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix({}x{}) [", self.n, self.n)?;
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Matrix of `x -> a x` in the basis `1, e1, ..., e7`.
pub fn left_mult_matrix(a: &Octonion) -> RatMatrix {
    let mut m = RatMatrix::zeros(8);
    for c in 0..8 {
        let col = a.multiply(&Octonion::basis(c));
        for r in 0..8 {
            m.set(r, c, col[r]);
        }
    }
    m
}

/// Matrix of `x -> x a`.
pub fn right_mult_matrix(a: &Octonion) -> RatMatrix {
    let mut m = RatMatrix::zeros(8);
    for c in 0..8 {
        let col = Octonion::basis(c).multiply(a);
        for r in 0..8 {
            m.set(r, c, col[r]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::e;

    #[test]
    fn left_mult_examples() {
        assert_eq!(left_mult_matrix(&Octonion::ONE), RatMatrix::identity(8));
        let l1 = left_mult_matrix(&e(1));
        assert!(l1.is_antisymmetric());
        assert_eq!(l1.get(1, 0), Rational::ONE);
        let a = Octonion::from_ints([1, 2, 0, -1, 0, 3, 0, 1]);
        let b = Octonion::from_ints([0, 1, 1, 0, 2, 0, -2, 0]);
        assert_eq!(left_mult_matrix(&(a + b)), &left_mult_matrix(&a) + &left_mult_matrix(&b));
        assert_eq!(left_mult_matrix(&a).apply_octonion(&b), a * b);
        assert_eq!(right_mult_matrix(&a).apply_octonion(&b), b * a);
    }

    #[test]
    fn imaginary_left_multiplications_are_antisymmetric() {
        for i in 1..8 {
            assert!(left_mult_matrix(&e(i)).is_antisymmetric());
            assert!(right_mult_matrix(&e(i)).is_antisymmetric());
        }
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let a = left_mult_matrix(&e(1));
        let b = left_mult_matrix(&e(3));
        assert_eq!(a.bracket(&b), -b.bracket(&a));
        assert!(a.bracket(&a).is_zero());
    }
}
