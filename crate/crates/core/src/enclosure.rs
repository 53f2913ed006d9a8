//! Certified rational enclosures of nonnegative reals.
//!
//! Powers like `2^(1/2)` leave the rationals. An [`Enclosure`] keeps a closed
//! interval `[lo, hi]` with rational endpoints that provably contains the
//! true value, so comparisons either decide rigorously or report overlap.
//! When `lo == hi` the value is exact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{exact_root, floor_root, pow_int, to_f64};
use crate::Rational;

/// Binary digits kept when an irrational root has to be enclosed.
pub const DEFAULT_BITS: u32 = 160;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn exact(value: Rational) -> Self {
        Enclosure {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "enclosure with lo > hi");
        Enclosure { lo, hi }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn one() -> Self {
        Self::exact(Rational::one())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / Rational::from_integer(2.into())))
    }

    pub fn add(&self, other: &Self) -> Self {
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Difference of two enclosures; the result may straddle zero.
    pub fn sub(&self, other: &Self) -> Self {
        Enclosure {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    /// Product of two enclosures of nonnegative values.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(!self.lo.is_negative() && !other.lo.is_negative());
        Enclosure {
            lo: &self.lo * &other.lo,
            hi: &self.hi * &other.hi,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        debug_assert!(!c.is_negative());
        Enclosure {
            lo: &self.lo * c,
            hi: &self.hi * c,
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        Enclosure {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// `self^q` for a nonnegative base and a rational exponent `q >= 0`.
    pub fn pow(&self, q: &Rational) -> Self {
        self.pow_bits(q, DEFAULT_BITS)
    }

    pub fn pow_bits(&self, q: &Rational, bits: u32) -> Self {
        assert!(!q.is_negative(), "negative exponent");
        assert!(!self.lo.is_negative(), "power of a possibly negative value");
        if q.is_zero() {
            return Self::one();
        }
        let a = q.numer().to_i64().expect("exponent numerator fits in i64");
        let c = q.denom().to_u32().expect("exponent denominator fits in u32");
        Enclosure {
            lo: root_down(&pow_int(&self.lo, a), c, bits),
            hi: root_up(&pow_int(&self.hi, a), c, bits),
        }
    }

    /// True when every point of `self` is strictly above every point of `other`.
    pub fn certainly_gt(&self, other: &Self) -> bool {
        self.lo > other.hi
    }

    pub fn certainly_lt(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    /// True when the enclosures cannot be separated: `self <= other` is not refuted.
    pub fn possibly_le(&self, other: &Self) -> bool {
        !self.certainly_gt(other)
    }

    /// Decided order, or `Equal` when the enclosures overlap.
    pub fn cmp_certified(&self, other: &Self) -> Ordering {
        if self.certainly_lt(other) {
            Ordering::Less
        } else if self.certainly_gt(other) {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl From<Rational> for Enclosure {
    fn from(value: Rational) -> Self {
        Enclosure::exact(value)
    }
}

impl std::iter::Sum for Enclosure {
    fn sum<I: Iterator<Item = Enclosure>>(iter: I) -> Self {
        iter.fold(Enclosure::zero(), |acc, x| acc.add(&x))
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_exact() {
            Some(x) => write!(f, "{x}"),
            None => write!(f, "~{}", self.to_f64()),
        }
    }
}

fn scaled_floor_root(x: &Rational, c: u32, bits: u32) -> BigInt {
    // floor((x * 2^(bits*c))^(1/c)) computed on integers.
    let scale = BigInt::one() << (bits as usize * c as usize);
    floor_root(&(x.numer() * scale).div_floor(x.denom()), c)
}

fn root_down(x: &Rational, c: u32, bits: u32) -> Rational {
    if c == 1 {
        return x.clone();
    }
    if let Some(r) = exact_root(x, c) {
        return r;
    }
    let y = scaled_floor_root(x, c, bits);
    Rational::new(y, BigInt::one() << bits as usize)
}

fn root_up(x: &Rational, c: u32, bits: u32) -> Rational {
    if c == 1 {
        return x.clone();
    }
    if let Some(r) = exact_root(x, c) {
        return r;
    }
    let y = scaled_floor_root(x, c, bits) + 1;
    Rational::new(y, BigInt::one() << bits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_frac, from_i64};

    #[test]
    fn sqrt_two_is_enclosed() {
        let e = Enclosure::exact(from_i64(2)).pow(&from_frac(1, 2));
        assert!(!e.is_exact());
        let lo2 = e.lo() * e.lo();
        let hi2 = e.hi() * e.hi();
        assert!(lo2 <= from_i64(2) && hi2 >= from_i64(2));
        assert!((e.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn rational_roots_stay_exact() {
        let e = Enclosure::exact(from_frac(9, 4)).pow(&from_frac(3, 2));
        assert_eq!(e.as_exact(), Some(&from_frac(27, 8)));
    }

    #[test]
    fn comparisons() {
        let s2 = Enclosure::exact(from_i64(2)).pow(&from_frac(1, 2));
        let s3 = Enclosure::exact(from_i64(3)).pow(&from_frac(1, 2));
        assert!(s2.certainly_lt(&s3));
        assert_eq!(s2.cmp_certified(&s2.clone()), Ordering::Equal);
        // sqrt(2)^2 overlaps 2, so 2 <= sqrt(2)^2 is not refuted.
        let sq = s2.mul(&s2);
        assert!(Enclosure::exact(from_i64(2)).possibly_le(&sq));
        assert!(sq.possibly_le(&Enclosure::exact(from_i64(2))));
    }
}
