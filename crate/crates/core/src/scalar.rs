//! The scalar abstraction behind distance matrices.
//!
//! Distances are either exact rationals or binary floats. Exact scalars
//! compare with zero slack and raise to fractional powers through certified
//! [`Enclosure`]s; floats carry a tolerance and raise through `powf`.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_traits::{Num, One, Zero};

use crate::enclosure::Enclosure;
use crate::rational::{exact_pow, parse_rational};
use crate::Rational;

/// Values of `d^q`, summed and compared in the power domain.
pub trait PowerValue: Clone + Debug + Send + Sync {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    /// Order with ties for values that cannot be told apart.
    fn cmp_power(&self, other: &Self) -> Ordering;
    fn to_f64(&self) -> f64;
}

/// Relative slack applied to float power-domain comparisons.
pub const FLOAT_POWER_REL_TOL: f64 = 1e-12;

impl PowerValue for Enclosure {
    fn zero() -> Self {
        Enclosure::zero()
    }
    fn add(&self, other: &Self) -> Self {
        Enclosure::add(self, other)
    }
    fn cmp_power(&self, other: &Self) -> Ordering {
        self.cmp_certified(other)
    }
    fn to_f64(&self) -> f64 {
        Enclosure::to_f64(self)
    }
}

impl PowerValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn cmp_power(&self, other: &Self) -> Ordering {
        let slack = FLOAT_POWER_REL_TOL * self.abs().max(other.abs());
        if self + slack < *other {
            Ordering::Less
        } else if *self > other + slack {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// A distance scalar: an ordered field element with a notion of comparison slack.
pub trait Scalar:
    Num + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
    type Power: PowerValue;

    /// Whether arithmetic and comparisons are exact.
    const EXACT: bool;

    /// Matrix-level comparison slack used when none is given.
    fn default_tolerance() -> Self;

    fn to_f64(&self) -> f64;

    /// Nearest representable value to a rational.
    fn from_rational(r: &Rational) -> Self;

    fn parse_scalar(s: &str) -> Option<Self>;

    /// `self^q` in the power domain, for `self >= 0` and `q > 0`.
    fn power(&self, q: &Rational) -> Self::Power;

    /// `self^q` as a scalar, if representable (always for floats).
    fn exact_power(&self, q: &Rational) -> Option<Self>;

    /// The scalar whose `q`-th power is `value`, if representable.
    fn root_of_power(value: &Self::Power, q: &Rational) -> Option<Self>;

    fn max_of(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn min_of(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn is_negative_scalar(&self) -> bool {
        *self < Self::zero()
    }
}

impl Scalar for Rational {
    type Power = Enclosure;
    const EXACT: bool = true;

    fn default_tolerance() -> Self {
        Rational::zero()
    }
    fn to_f64(&self) -> f64 {
        crate::rational::to_f64(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn parse_scalar(s: &str) -> Option<Self> {
        parse_rational(s)
    }
    fn power(&self, q: &Rational) -> Enclosure {
        Enclosure::exact(self.clone()).pow(q)
    }
    fn exact_power(&self, q: &Rational) -> Option<Self> {
        exact_pow(self, q)
    }
    fn root_of_power(value: &Enclosure, q: &Rational) -> Option<Self> {
        exact_pow(value.as_exact()?, &q.recip())
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            type Power = f64;
            const EXACT: bool = false;

            fn default_tolerance() -> Self {
                $tol
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn from_rational(r: &Rational) -> Self {
                crate::rational::to_f64(r) as $t
            }
            fn parse_scalar(s: &str) -> Option<Self> {
                let s = s.trim();
                s.parse::<$t>()
                    .ok()
                    .or_else(|| parse_rational(s).map(|r| Self::from_rational(&r)))
                    .filter(|x| x.is_finite())
            }
            fn power(&self, q: &Rational) -> f64 {
                (*self as f64).powf(crate::rational::to_f64(q))
            }
            fn exact_power(&self, q: &Rational) -> Option<Self> {
                Some(self.power(q) as $t)
            }
            fn root_of_power(value: &f64, q: &Rational) -> Option<Self> {
                Some(value.powf(1.0 / crate::rational::to_f64(q)) as $t)
            }
        }
    };
}

float_scalar!(f64, 1e-12);
float_scalar!(f32, 1e-6);

/// An exponent in `(0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exponent {
    Finite(Rational),
    Infinite,
}

impl Exponent {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Exponent::Finite(r) => Some(r),
            Exponent::Infinite => None,
        }
    }

    /// Parses a positive rational or `inf`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Some(Exponent::Infinite);
        }
        let r = parse_rational(s)?;
        (r > Rational::zero()).then_some(Exponent::Finite(r))
    }

    pub fn one() -> Self {
        Exponent::Finite(Rational::one())
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(match (self, other) {
            (Exponent::Infinite, Exponent::Infinite) => Ordering::Equal,
            (Exponent::Infinite, _) => Ordering::Greater,
            (_, Exponent::Infinite) => Ordering::Less,
            (Exponent::Finite(a), Exponent::Finite(b)) => a.cmp(b),
        })
    }
}

impl Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Finite(r) => write!(f, "{r}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_frac, from_i64};

    #[test]
    fn exact_power_domain_sums() {
        let three = from_i64(3);
        let four = from_i64(4);
        let q = from_i64(2);
        let lhs = three.power(&q).add(&four.power(&q));
        assert_eq!(lhs.cmp_power(&from_i64(5).power(&q)), Ordering::Equal);
        assert_eq!(lhs.as_exact(), Some(&from_i64(25)));
        assert_eq!(Rational::root_of_power(&lhs, &q), Some(from_i64(5)));
    }

    #[test]
    fn float_power_slack() {
        let a = 0.1f64 + 0.2;
        assert_eq!(a.cmp_power(&0.3), Ordering::Equal);
        assert_eq!(0.3f64.cmp_power(&0.31), Ordering::Less);
    }

    #[test]
    fn exponent_parsing() {
        assert_eq!(Exponent::parse("inf"), Some(Exponent::Infinite));
        assert_eq!(Exponent::parse("1/2"), Some(Exponent::Finite(from_frac(1, 2))));
        assert_eq!(Exponent::parse("0"), None);
        assert!(Exponent::Infinite > Exponent::Finite(from_i64(1000)));
    }
}
