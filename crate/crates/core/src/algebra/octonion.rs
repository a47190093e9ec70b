use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::rational::Rational;

/// Oriented quaternionic triples: `e_i e_j = e_k` for every cyclic rotation
/// of `(i, j, k)`.
pub const TRIPLES: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];

/// `BASIS_PRODUCT[i][j] = (sign, k)` with `e_i e_j = sign * e_k`; index 0 is the unit.
pub const BASIS_PRODUCT: [[(i8, usize); 8]; 8] = build_table();

const fn build_table() -> [[(i8, usize); 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    let mut i = 0;
    while i < 8 {
        t[0][i] = (1, i);
        t[i][0] = (1, i);
        if i > 0 {
            t[i][i] = (-1, 0);
        }
        i += 1;
    }
    let mut n = 0;
    while n < 7 {
        let [a, b, c] = TRIPLES[n];
        let rot = [[a, b, c], [b, c, a], [c, a, b]];
        let mut r = 0;
        while r < 3 {
            let [x, y, z] = rot[r];
            t[x][y] = (1, z);
            t[y][x] = (-1, z);
            r += 1;
        }
        n += 1;
    }
    t
}

/// An octonion `c0 + c1 e1 + ... + c7 e7` with exact rational coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    coeffs: [Rational; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { coeffs: [Rational::ZERO; 8] };
    pub const ONE: Octonion = Octonion::basis(0);

    pub const fn new(coeffs: [Rational; 8]) -> Self {
        Octonion { coeffs }
    }

    /// `e_index`, with `e_0 = 1`. Panics if `index > 7`.
    pub const fn basis(index: usize) -> Self {
        let mut coeffs = [Rational::ZERO; 8];
        coeffs[index] = Rational::ONE;
        Octonion { coeffs }
    }

    pub fn from_ints(c: [i128; 8]) -> Self {
        Octonion { coeffs: c.map(Rational::int) }
    }

    pub fn real(value: Rational) -> Self {
        let mut coeffs = [Rational::ZERO; 8];
        coeffs[0] = value;
        Octonion { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn re(&self) -> Rational {
        self.coeffs[0]
    }

    /// The imaginary part `c1 e1 + ... + c7 e7`.
    pub fn im(&self) -> Self {
        let mut c = self.coeffs;
        c[0] = Rational::ZERO;
        Octonion { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn scale(&self, s: Rational) -> Self {
        Octonion { coeffs: self.coeffs.map(|c| c * s) }
    }

    pub fn multiply(&self, rhs: &Octonion) -> Octonion {
        let mut out = [Rational::ZERO; 8];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, k) = BASIS_PRODUCT[i][j];
                let p = *a * *b;
                if sign > 0 {
                    out[k] += p;
                } else {
                    out[k] -= p;
                }
            }
        }
        Octonion { coeffs: out }
    }

    pub fn conjugate(&self) -> Octonion {
        let mut c = self.coeffs.map(|x| -x);
        c[0] = self.coeffs[0];
        Octonion { coeffs: c }
    }

    /// Euclidean inner product, equal to `Re(a * conj(b))`.
    pub fn inner(&self, rhs: &Octonion) -> Rational {
        self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a * *b).sum()
    }

    /// Squared Euclidean length `inner(x, x)`.
    pub fn norm(&self) -> Rational {
        self.inner(self)
    }

    pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
        x.multiply(y).multiply(z) - x.multiply(&y.multiply(z))
    }

    pub fn commutator(x: &Octonion, y: &Octonion) -> Octonion {
        x.multiply(y) - y.multiply(x)
    }

    /// Indices of the nonzero coefficients.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..8).filter(|&i| !self.coeffs[i].is_zero())
    }
}

impl Index<usize> for Octonion {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.coeffs;
        for (x, y) in c.iter_mut().zip(rhs.coeffs) {
            *x += y;
        }
        Octonion { coeffs: c }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion { coeffs: self.coeffs.map(|x| -x) }
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        self.multiply(&rhs)
    }
}

impl Mul<Octonion> for Rational {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs.scale(self)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::literal::format_octonion(self))
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({self})")
    }
}

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}
