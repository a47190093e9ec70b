//! Exact rational scalar used by every computation in the crate.
//!
//! `Rational` wraps a reduced `Ratio<i128>`. All arithmetic is checked: an
//! intermediate that does not fit in `i128` panics instead of wrapping, so a
//! result is either exact or absent.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero as _};
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));
    pub const HALF: Rational = Rational(Ratio::new_raw(1, 2));

    /// Builds `numer / denom` in lowest terms. Panics if `denom == 0`.
    pub fn new(numer: i128, denom: i128) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub const fn int(value: i128) -> Self {
        Rational(Ratio::new_raw(value, 1))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.numer().cmp(&0) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Exact square root when `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.numer() < 0 {
            return None;
        }
        let n = isqrt(self.numer())?;
        let d = isqrt(self.denom())?;
        Some(Rational::new(n, d))
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

fn isqrt(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}

impl From<i128> for Rational {
    fn from(v: i128) -> Self {
        Rational::int(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::int(v as i128)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::int(v as i128)
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident, $assign_trait:ident, $assign:ident, $what:literal) => {
        impl $trait for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$checked(&rhs.0).unwrap_or_else(|| panic!(concat!("rational ", $what, " overflow"))))
            }
        }

        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: &'a Rational) -> Rational {
                self.$method(*rhs)
            }
        }

        impl $assign_trait for Rational {
            #[inline]
            fn $assign(&mut self, rhs: Rational) {
                *self = (*self).$method(rhs);
            }
        }
    };
}

checked_binop!(Add, add, checked_add, AddAssign, add_assign, "addition");
checked_binop!(Sub, sub, checked_sub, SubAssign, sub_assign, "subtraction");
checked_binop!(Mul, mul, checked_mul, MulAssign, mul_assign, "multiplication");

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0.checked_div(&rhs.0).expect("rational division overflow"))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ONE, |acc, x| acc * x)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `-p` and `p/q` with decimal integers and `q > 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_owned());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let unsigned = n.strip_prefix('-').unwrap_or(n);
        if !digits(unsigned) {
            return Err(err());
        }
        let numer: i128 = n.parse().map_err(|_| err())?;
        let denom: i128 = match d {
            Some(d) if digits(d) => d.parse().map_err(|_| err())?,
            Some(_) => return Err(err()),
            None => 1,
        };
        if denom == 0 {
            return Err(err());
        }
        Ok(Rational::new(numer, denom))
    }
}

/// Least common multiple of the denominators, used to clear fractions.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> i128 {
    values.into_iter().fold(1i128, |acc, v| acc.lcm(&v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let r = Rational::new(6, -8);
        assert_eq!((r.numer(), r.denom()), (-3, 4));
        assert_eq!(r.to_string(), "-3/4");
    }

    #[test]
    fn parses_and_rejects() {
        assert_eq!("3/5".parse::<Rational>().unwrap(), Rational::new(3, 5));
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::int(-7));
        for bad in ["", "/3", "1/0", "1/-2", "a", "1.5", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Rational::new(16, 25).sqrt_exact(), Some(Rational::new(4, 5)));
        assert_eq!(Rational::new(2, 1).sqrt_exact(), None);
        assert_eq!(Rational::new(-1, 4).sqrt_exact(), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics_instead_of_wrapping() {
        let big = Rational::int(i128::MAX / 2 + 1);
        let _ = big + big;
    }
}
