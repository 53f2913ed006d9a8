//! Absolute value functions on the rationals and auditors for their axioms.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::rational::{exact_pow, from_i64, is_prime, parse_rational, split_prime};
use crate::scalar::Exponent;
use crate::Rational;

/// A multiplicative absolute value on the rational field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbsoluteValue {
    /// `|x| = 1` for every nonzero `x`.
    Trivial,
    /// The restriction of the usual absolute value on the reals.
    RealStd,
    /// `|x|_p = p^(-v_p(x))`.
    Padic(u64),
    /// `|x|^e` for a base absolute value and `e > 0`; never nested.
    Power(Box<AbsoluteValue>, Rational),
}

impl AbsoluteValue {
    pub fn padic(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(AbsoluteValue::Padic(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// `self^e`, normalizing powers of powers into a single power.
    pub fn power(self, e: Rational) -> Result<Self> {
        if !e.is_positive() {
            return Err(Error::InvalidArgument(format!("exponent {e} must be positive")));
        }
        Ok(match self {
            AbsoluteValue::Power(base, e0) => {
                let e = e0 * e;
                if e.is_one() {
                    *base
                } else {
                    AbsoluteValue::Power(base, e)
                }
            }
            // A power of the trivial absolute value is trivial.
            AbsoluteValue::Trivial => AbsoluteValue::Trivial,
            base if e.is_one() => base,
            base => AbsoluteValue::Power(Box::new(base), e),
        })
    }

    fn base(&self) -> &AbsoluteValue {
        match self {
            AbsoluteValue::Power(b, _) => b,
            other => other,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.base(), AbsoluteValue::Trivial)
    }

    /// Whether the ultrametric inequality `|x + y| <= max(|x|, |y|)` holds.
    pub fn is_ultrametric(&self) -> bool {
        matches!(self.base(), AbsoluteValue::Trivial | AbsoluteValue::Padic(_))
    }

    /// The largest `q` for which this is a `q`-absolute value (`Infinite` for ultrametrics).
    pub fn q_exponent(&self) -> Exponent {
        match self {
            AbsoluteValue::RealStd => Exponent::one(),
            AbsoluteValue::Power(b, e) if **b == AbsoluteValue::RealStd => {
                Exponent::Finite(e.recip())
            }
            _ => Exponent::Infinite,
        }
    }

    /// Parses `trivial`, `real`, `padic:P`, optionally followed by `^E`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (base, exp) = match s.split_once('^') {
            Some((b, e)) => (b, Some(parse_rational(e)?)),
            None => (s, None),
        };
        let base = match base.trim() {
            "trivial" => AbsoluteValue::Trivial,
            "real" | "realstd" => AbsoluteValue::RealStd,
            other => {
                let p = other.strip_prefix("padic:")?.trim().parse().ok()?;
                AbsoluteValue::padic(p).ok()?
            }
        };
        match exp {
            Some(e) => base.power(e).ok(),
            None => Some(base),
        }
    }

    /// A nonzero scalar with magnitude strictly inside `(0, 1)`, if one exists.
    pub fn small_scalar(&self) -> Option<Rational> {
        match self.base() {
            AbsoluteValue::Trivial => None,
            AbsoluteValue::RealStd => Some(Rational::new(1.into(), 2.into())),
            AbsoluteValue::Padic(p) => Some(from_i64(*p as i64)),
            AbsoluteValue::Power(..) => unreachable!("powers are never nested"),
        }
    }
}

impl fmt::Display for AbsoluteValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbsoluteValue::Trivial => write!(f, "trivial"),
            AbsoluteValue::RealStd => write!(f, "real"),
            AbsoluteValue::Padic(p) => write!(f, "padic:{p}"),
            AbsoluteValue::Power(b, e) => write!(f, "{b}^{e}"),
        }
    }
}

/// A value of an absolute value function.
#[derive(Clone, Debug)]
pub enum Magnitude {
    Exact(Rational),
    /// `p^exp`, kept symbolic.
    PrimePower { p: u64, exp: Rational },
    /// An irrational value held in a certified enclosure.
    Approx(Enclosure),
}

impl Magnitude {
    pub fn zero() -> Self {
        Magnitude::Exact(Rational::zero())
    }

    pub fn one() -> Self {
        Magnitude::Exact(Rational::one())
    }

    /// The exact rational value, when there is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Magnitude::Exact(r) => Some(r.clone()),
            Magnitude::PrimePower { p, exp } => exact_pow(&from_i64(*p as i64), exp),
            Magnitude::Approx(e) => e.as_exact().cloned(),
        }
    }

    pub fn enclosure(&self) -> Enclosure {
        match self {
            Magnitude::Exact(r) => Enclosure::exact(r.clone()),
            Magnitude::PrimePower { p, exp } => {
                let base = Rational::from_integer(BigInt::from(*p));
                if exp.is_negative() {
                    Enclosure::exact(base.recip()).pow(&-exp)
                } else {
                    Enclosure::exact(base).pow(exp)
                }
            }
            Magnitude::Approx(e) => e.clone(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Magnitude::Approx(e) if !e.is_exact())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Magnitude::Exact(r) if r.is_zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Magnitude::PrimePower { p, exp } => (*p as f64).powf(crate::rational::to_f64(exp)),
            other => other.enclosure().to_f64(),
        }
    }

    /// Relative width of the enclosure; zero for exact magnitudes.
    pub fn rel_tolerance(&self) -> f64 {
        match self {
            Magnitude::Approx(e) if !e.is_exact() => {
                crate::rational::to_f64(&e.width()) / e.to_f64().max(f64::MIN_POSITIVE)
            }
            _ => 0.0,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Magnitude::PrimePower { p, exp }, Magnitude::PrimePower { p: p2, exp: e2 })
                if p == p2 =>
            {
                Magnitude::PrimePower {
                    p: *p,
                    exp: exp + e2,
                }
            }
            _ if self.is_zero() || other.is_zero() => Magnitude::zero(),
            _ => match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => Magnitude::Exact(a * b),
                _ => Magnitude::Approx(self.enclosure().mul(&other.enclosure())),
            },
        }
    }

    /// `self^q` for `q > 0`.
    pub fn pow(&self, q: &Rational) -> Self {
        match self {
            Magnitude::PrimePower { p, exp } => Magnitude::PrimePower {
                p: *p,
                exp: exp * q,
            },
            Magnitude::Exact(r) => match exact_pow(r, q) {
                Some(v) => Magnitude::Exact(v),
                None => Magnitude::Approx(Enclosure::exact(r.clone()).pow(q)),
            },
            Magnitude::Approx(e) => Magnitude::Approx(e.pow(q)),
        }
    }

    /// Exact comparison where both sides are exact; otherwise certified, with
    /// `Equal` meaning the values could not be separated.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        if let (
            Magnitude::PrimePower { p, exp },
            Magnitude::PrimePower { p: p2, exp: e2 },
        ) = (self, other)
        {
            if p == p2 {
                return exp.cmp(e2);
            }
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.enclosure().cmp_certified(&other.enclosure()),
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Exact(r) => write!(f, "{r}"),
            Magnitude::PrimePower { p, exp } => match self.as_rational() {
                Some(r) => write!(f, "{r}"),
                None => write!(f, "{p}^({exp})"),
            },
            Magnitude::Approx(e) => write!(f, "{e}"),
        }
    }
}

/// The p-adic valuation of a rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    /// The valuation of zero.
    Infinity,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(j) => write!(f, "{j}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// The exponent `j` in `x = p^j (a/b)` with `p` dividing neither `a` nor `b`.
pub fn padic_valuation(p: u64, x: &Rational) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(valuation_unchecked(p, x))
}

pub(crate) fn valuation_unchecked(p: u64, x: &Rational) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinity;
    }
    let pb = BigInt::from(p);
    let (num, _) = split_prime(x.numer(), &pb);
    let (den, _) = split_prime(x.denom(), &pb);
    Valuation::Finite(num - den)
}

pub fn abs_eval(v: &AbsoluteValue, x: &Rational) -> Magnitude {
    if x.is_zero() {
        return Magnitude::zero();
    }
    match v {
        AbsoluteValue::Trivial => Magnitude::one(),
        AbsoluteValue::RealStd => Magnitude::Exact(x.abs()),
        AbsoluteValue::Padic(p) => match valuation_unchecked(*p, x) {
            Valuation::Finite(j) => Magnitude::PrimePower {
                p: *p,
                exp: from_i64(-j),
            },
            Valuation::Infinity => unreachable!(),
        },
        AbsoluteValue::Power(base, e) => abs_eval(base, x).pow(e),
    }
}

/// Every sample pair with `|x + y|^q > |x|^q + |y|^q`.
///
/// A pair is reported only when the violation is certified; exact magnitudes
/// with exact powers are compared exactly.
pub fn check_q_subadditive(
    v: &AbsoluteValue,
    samples: &[(Rational, Rational)],
    q: &Rational,
) -> Vec<(Rational, Rational)> {
    assert!(q.is_positive(), "q must be positive");
    samples
        .iter()
        .filter(|(x, y)| {
            let lhs = abs_eval(v, &(x + y)).enclosure().pow(q);
            let rhs = abs_eval(v, x)
                .enclosure()
                .pow(q)
                .add(&abs_eval(v, y).enclosure().pow(q));
            lhs.certainly_gt(&rhs)
        })
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArchimedeanVerdict {
    /// `|n| > 1` for this `n`, so `|n^j|` grows without bound.
    Archimedean(u64),
    /// `|n| <= 1` for every `n` in `1..=n_max`.
    NonArchimedeanUpTo(u64),
}

/// Bounded search for an integer `n <= n_max` with `|n| > 1`.
pub fn is_archimedean(v: &AbsoluteValue, n_max: u64) -> ArchimedeanVerdict {
    let one = Magnitude::one();
    for n in 2..=n_max {
        let m = abs_eval(v, &from_i64(n as i64));
        if m.cmp_value(&one) == Ordering::Greater {
            return ArchimedeanVerdict::Archimedean(n);
        }
    }
    ArchimedeanVerdict::NonArchimedeanUpTo(n_max)
}

/// An exponent `a` relating two absolute values by `|x|_2 = |x|_1^a`.
#[derive(Clone, Debug, PartialEq)]
pub enum EquivExponent {
    Exact(Rational),
    Approx(f64),
}

/// Relative tolerance for float-only equivalence checks.
pub const EQUIV_REL_TOL: f64 = 1e-9;

const MAX_EXPONENT_DENOMINATOR: i64 = 1 << 12;

/// Solves `|x|_2 = |x|_1^a` from the first informative sample and verifies the rest.
pub fn equivalence_exponent(
    v1: &AbsoluteValue,
    v2: &AbsoluteValue,
    samples: &[Rational],
) -> Result<Option<EquivExponent>> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument("no samples".into()));
    }
    if samples.iter().any(Zero::is_zero) {
        return Err(Error::InvalidArgument("samples must be nonzero".into()));
    }
    let one = Magnitude::one();
    let pivot = samples
        .iter()
        .find(|x| abs_eval(v1, x).cmp_value(&one) != Ordering::Equal)
        .ok_or(Error::Underdetermined)?;
    let m1 = abs_eval(v1, pivot);
    let m2 = abs_eval(v2, pivot);
    let candidate = match (&m1, &m2) {
        (Magnitude::PrimePower { p, exp }, Magnitude::PrimePower { p: p2, exp: e2 })
            if p == p2 =>
        {
            Some(e2 / exp)
        }
        _ => {
            let a = m2.to_f64().ln() / m1.to_f64().ln();
            if !(a.is_finite() && a > 0.0) {
                return Ok(None);
            }
            small_denominator_approx(a)
        }
    };
    if let Some(a) = candidate.filter(|a| a.is_positive()) {
        if samples.iter().all(|x| exact_power_relation(v1, v2, x, &a)) {
            return Ok(Some(EquivExponent::Exact(a)));
        }
    }
    // Fall back to a float exponent checked to relative tolerance.
    let a = m2.to_f64().ln() / m1.to_f64().ln();
    if !(a.is_finite() && a > 0.0) {
        return Ok(None);
    }
    let ok = samples.iter().all(|x| {
        let lhs = abs_eval(v2, x).to_f64();
        let rhs = abs_eval(v1, x).to_f64().powf(a);
        (lhs - rhs).abs() <= EQUIV_REL_TOL * lhs.abs().max(rhs.abs())
    });
    Ok(ok.then_some(EquivExponent::Approx(a)))
}

/// `|x|_2 = |x|_1^(n/d)` checked as `|x|_1^n = |x|_2^d`.
fn exact_power_relation(v1: &AbsoluteValue, v2: &AbsoluteValue, x: &Rational, a: &Rational) -> bool {
    let (n, d) = (a.numer().clone(), a.denom().clone());
    let lhs = abs_eval(v1, x).pow(&Rational::from_integer(n));
    let rhs = abs_eval(v2, x).pow(&Rational::from_integer(d));
    lhs.cmp_value(&rhs) == Ordering::Equal
}

/// Best rational approximation with a bounded denominator (continued fractions).
fn small_denominator_approx(x: f64) -> Option<Rational> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        if a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > MAX_EXPONENT_DENOMINATOR {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        y = 1.0 / frac;
    }
    (k1 != 0).then(|| Rational::new(h1.into(), k1.into()))
}
