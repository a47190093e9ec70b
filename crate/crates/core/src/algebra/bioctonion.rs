use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::rational::Rational;

use super::octonion::Octonion;

/// A complex number with rational parts; values of the complexified norm form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, Serialize)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub const ZERO: ComplexRational = ComplexRational { re: Rational::ZERO, im: Rational::ZERO };

    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, o: ComplexRational) -> ComplexRational {
        ComplexRational::new(self.re + o.re, self.im + o.im)
    }
}

impl Mul for ComplexRational {
    type Output = ComplexRational;
    fn mul(self, o: ComplexRational) -> ComplexRational {
        ComplexRational::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}i", self.re, if self.im.signum() < 0 { "" } else { "+" }, self.im)
    }
}

/// `re + i im` where `i` is a central imaginary unit commuting with every octonion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, Serialize)]
pub struct BiOctonion {
    pub re: Octonion,
    pub im: Octonion,
}

impl BiOctonion {
    pub const ZERO: BiOctonion = BiOctonion { re: Octonion::ZERO, im: Octonion::ZERO };

    pub fn new(re: Octonion, im: Octonion) -> Self {
        BiOctonion { re, im }
    }

    pub fn from_real(re: Octonion) -> Self {
        BiOctonion { re, im: Octonion::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `(p + iq)(r + is) = (pr - qs) + i(ps + qr)`.
    pub fn multiply(&self, rhs: &BiOctonion) -> BiOctonion {
        let (p, q) = (&self.re, &self.im);
        let (r, s) = (&rhs.re, &rhs.im);
        BiOctonion { re: p.multiply(r) - q.multiply(s), im: p.multiply(s) + q.multiply(r) }
    }

    /// The complex bilinear norm `sum_k (re_k + i im_k)^2`; no complex conjugation.
    pub fn quadratic_norm(&self) -> ComplexRational {
        let re = self.re.norm() - self.im.norm();
        let im = Rational::int(2) * self.re.inner(&self.im);
        ComplexRational::new(re, im)
    }
}

impl Add for BiOctonion {
    type Output = BiOctonion;
    fn add(self, o: BiOctonion) -> BiOctonion {
        BiOctonion::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for BiOctonion {
    type Output = BiOctonion;
    fn sub(self, o: BiOctonion) -> BiOctonion {
        BiOctonion::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for BiOctonion {
    type Output = BiOctonion;
    fn neg(self) -> BiOctonion {
        BiOctonion::new(-self.re, -self.im)
    }
}

impl Mul for BiOctonion {
    type Output = BiOctonion;
    fn mul(self, o: BiOctonion) -> BiOctonion {
        self.multiply(&o)
    }
}

/// A pair of nonzero null elements whose product vanishes: `(1 + i e1)(1 - i e1) = 0`.
pub fn zero_divisor_witness() -> (BiOctonion, BiOctonion) {
    let one = Octonion::ONE;
    let e1 = Octonion::basis(1);
    (BiOctonion::new(one, e1), BiOctonion::new(one, -e1))
}
