//! p-adic integers at finite precision.
//!
//! `Z_p / p^j Z_p` is isomorphic as a ring to `Z / p^j Z`, so a p-adic integer
//! known to precision `j` is a residue in `[0, p^j)`. Rationals whose
//! denominator is prime to `p` embed through a modular inverse of the
//! denominator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::absval::{valuation_unchecked, Valuation};
use crate::error::{Error, Result};
use crate::rational::{from_i64, is_prime, pow_int, split_prime};
use crate::Rational;

/// The coset `residue + p^precision Z_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicApprox {
    p: u64,
    precision: u32,
    residue: BigInt,
}

/// Size of a p-adic integer known only modulo `p^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PadicMagnitude {
    /// `p^(-v)` with `v < j`.
    Exact { p: u64, valuation: u32 },
    /// Residue zero: the true value is anywhere in `p^j Z_p`.
    AtMost { p: u64, precision: u32 },
}

impl PadicMagnitude {
    /// The exact value, or the upper bound `p^(-j)`.
    pub fn bound(&self) -> Rational {
        match self {
            PadicMagnitude::Exact { p, valuation } => pow_int(&from_i64(*p as i64), -(*valuation as i64)),
            PadicMagnitude::AtMost { p, precision } => pow_int(&from_i64(*p as i64), -(*precision as i64)),
        }
    }
}

impl fmt::Display for PadicMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicMagnitude::Exact { .. } => write!(f, "{}", self.bound()),
            PadicMagnitude::AtMost { .. } => write!(f, "<={}", self.bound()),
        }
    }
}

pub(crate) fn modulus(p: u64, j: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), j as usize)
}

fn check_params(p: u64, j: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if j == 0 {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    Ok(())
}

impl PadicApprox {
    /// The class of an integer modulo `p^j`.
    pub fn new(p: u64, precision: u32, value: impl Into<BigInt>) -> Result<Self> {
        check_params(p, precision)?;
        let m = modulus(p, precision);
        Ok(PadicApprox {
            p,
            precision,
            residue: value.into().mod_floor(&m),
        })
    }

    /// Embeds a rational with `|w|_p <= 1` as `a * b^(-1) mod p^j`.
    pub fn from_rational(w: &Rational, p: u64, precision: u32) -> Result<Self> {
        check_params(p, precision)?;
        if w.denom().is_multiple_of(&BigInt::from(p)) {
            return Err(Error::NotIntegral(w.to_string()));
        }
        let m = modulus(p, precision);
        let inv = mod_inverse(w.denom(), &m).expect("denominator prime to p is invertible");
        Self::new(p, precision, w.numer() * inv)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> BigInt {
        modulus(self.p, self.precision)
    }

    fn with_residue(&self, r: BigInt) -> Self {
        PadicApprox {
            p: self.p,
            precision: self.precision,
            residue: r.mod_floor(&self.modulus()),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.precision != other.precision {
            return Err(Error::Mismatch(self.p, self.precision, other.p, other.precision));
        }
        Ok(())
    }

    pub fn zero(p: u64, precision: u32) -> Result<Self> {
        Self::new(p, precision, 0)
    }

    pub fn one(p: u64, precision: u32) -> Result<Self> {
        Self::new(p, precision, 1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_residue(&self.residue + &other.residue))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_residue(&self.residue - &other.residue))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_residue(&self.residue * &other.residue))
    }

    pub fn neg(&self) -> Self {
        self.with_residue(-&self.residue)
    }

    pub fn is_unit(&self) -> bool {
        !self.residue.is_multiple_of(&BigInt::from(self.p))
    }

    pub fn invert(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotUnit(self.residue.to_string()));
        }
        let inv = mod_inverse(&self.residue, &self.modulus()).expect("unit residue");
        Ok(self.with_residue(inv))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with_residue(self.residue.modpow(&BigInt::from(e), &self.modulus()))
    }

    /// Valuation of the residue; `None` when it is zero (valuation `>= j`).
    pub fn valuation(&self) -> Option<u32> {
        if self.residue.is_zero() {
            return None;
        }
        let (k, _) = split_prime(&self.residue, &BigInt::from(self.p));
        Some(k as u32)
    }

    pub fn magnitude(&self) -> PadicMagnitude {
        match self.valuation() {
            Some(valuation) => PadicMagnitude::Exact { p: self.p, valuation },
            None => PadicMagnitude::AtMost {
                p: self.p,
                precision: self.precision,
            },
        }
    }

    /// p-adic distance `|self - other|_p` as far as the precision resolves it.
    pub fn distance(&self, other: &Self) -> Result<PadicMagnitude> {
        Ok(self.sub(other)?.magnitude())
    }

    /// The `j` base-`p` digits of the residue, least significant first.
    pub fn digits(&self) -> Vec<u64> {
        let pb = BigInt::from(self.p);
        let mut r = self.residue.clone();
        (0..self.precision)
            .map(|_| {
                let (q, d) = r.div_rem(&pb);
                r = q;
                d.to_u64().expect("digit below p")
            })
            .collect()
    }

    /// The same element at a lower precision.
    pub fn truncate(&self, precision: u32) -> Result<Self> {
        if precision > self.precision {
            return Err(Error::InvalidArgument(format!(
                "cannot raise precision {} to {precision}",
                self.precision
            )));
        }
        Self::new(self.p, precision, self.residue.clone())
    }

    /// `sum_{i=0}^{n} x^i mod p^j` for `x` divisible by `p`.
    pub fn geometric_sum(&self, n: u64) -> Result<Self> {
        if self.is_unit() {
            return Err(Error::InvalidArgument(format!(
                "geometric series needs |x|_p < 1, residue {} is a unit",
                self.residue
            )));
        }
        let mut sum = self.with_residue(BigInt::one());
        let mut term = sum.clone();
        // x^i vanishes mod p^j once i >= j.
        for _ in 0..n.min(self.precision as u64) {
            term = term.mul(self)?;
            sum = sum.add(&term)?;
        }
        Ok(sum)
    }

    /// `1 / (1 - x)` for `x` divisible by `p`.
    pub fn geometric_limit(&self) -> Result<Self> {
        if self.is_unit() {
            return Err(Error::InvalidArgument(format!(
                "geometric series needs |x|_p < 1, residue {} is a unit",
                self.residue
            )));
        }
        self.with_residue(BigInt::one()).sub(self)?.invert()
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.precision)
    }
}

/// Splits a nonzero rational as `p^v * u` with `u` a p-adic unit known mod `p^j`.
pub fn split_rational(w: &Rational, p: u64, precision: u32) -> Result<(i64, PadicApprox)> {
    check_params(p, precision)?;
    let v = match valuation_unchecked(p, w) {
        Valuation::Finite(v) => v,
        Valuation::Infinity => {
            return Err(Error::InvalidArgument("zero has no unit part".into()));
        }
    };
    let unit = w * pow_int(&from_i64(p as i64), -v);
    Ok((v, PadicApprox::from_rational(&unit, p, precision)?))
}

/// Representatives `0..p^l` of `Z_p / p^l Z_p`, each carried at precision `j`.
pub fn coset_decomposition(p: u64, precision: u32, level: u32) -> Result<Vec<PadicApprox>> {
    check_params(p, precision)?;
    if level > precision {
        return Err(Error::InvalidArgument(format!(
            "level {level} exceeds precision {precision}"
        )));
    }
    let count = modulus(p, level)
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("too many cosets to enumerate".into()))?;
    (0..count).map(|r| PadicApprox::new(p, precision, r)).collect()
}

/// Index of the coset of `p^l Z_p` containing `x`.
pub fn coset_index(x: &PadicApprox, level: u32) -> Result<BigInt> {
    if level > x.precision {
        return Err(Error::InvalidArgument(format!(
            "level {level} exceeds precision {}",
            x.precision
        )));
    }
    Ok(x.residue.mod_floor(&modulus(x.p, level)))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.abs().is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_frac;

    fn res(x: &PadicApprox) -> i64 {
        x.residue().to_i64().unwrap()
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(res(&PadicApprox::from_rational(&from_frac(1, 3), 2, 4).unwrap()), 11);
        assert_eq!(res(&PadicApprox::from_rational(&from_i64(5), 2, 3).unwrap()), 5);
        assert!(matches!(
            PadicApprox::from_rational(&from_frac(1, 2), 2, 4),
            Err(Error::NotIntegral(_))
        ));
        assert_eq!(res(&PadicApprox::from_rational(&from_i64(-1), 3, 2).unwrap()), 8);
        assert_eq!(PadicApprox::new(4, 2, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn arithmetic_examples() {
        let a = PadicApprox::new(2, 4, 11).unwrap();
        let b = PadicApprox::new(2, 4, 5).unwrap();
        assert_eq!(res(&a.add(&b).unwrap()), 0);
        let third = PadicApprox::from_rational(&from_frac(1, 3), 2, 4).unwrap();
        let three = PadicApprox::from_rational(&from_i64(3), 2, 4).unwrap();
        assert_eq!(res(&third.mul(&three).unwrap()), 1);
        assert_eq!(res(&PadicApprox::new(2, 4, 1).unwrap().neg()), 15);
        let other = PadicApprox::new(2, 5, 1).unwrap();
        assert!(matches!(a.add(&other), Err(Error::Mismatch(2, 4, 2, 5))));
        let p3 = PadicApprox::new(3, 4, 1).unwrap();
        assert!(a.mul(&p3).is_err());
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(res(&PadicApprox::new(2, 4, 3).unwrap().invert().unwrap()), 11);
        assert_eq!(res(&PadicApprox::new(2, 4, 1).unwrap().invert().unwrap()), 1);
        assert!(matches!(PadicApprox::new(2, 4, 6).unwrap().invert(), Err(Error::NotUnit(_))));
    }

    #[test]
    fn geometric_examples() {
        let two = PadicApprox::new(2, 4, 2).unwrap();
        assert_eq!(res(&two.geometric_limit().unwrap()), 15);
        assert_eq!(res(&two.geometric_sum(3).unwrap()), 15);
        assert_eq!(res(&two.geometric_sum(0).unwrap()), 1);
        assert_eq!(res(&two.geometric_sum(1_000_000).unwrap()), 15);
        assert!(PadicApprox::new(2, 4, 3).unwrap().geometric_sum(2).is_err());
        assert!(PadicApprox::new(2, 4, 3).unwrap().geometric_limit().is_err());
    }

    #[test]
    fn digit_examples() {
        assert_eq!(PadicApprox::new(2, 4, 11).unwrap().digits(), vec![1, 1, 0, 1]);
        assert_eq!(PadicApprox::new(2, 4, 0).unwrap().digits(), vec![0, 0, 0, 0]);
        assert_eq!(PadicApprox::new(3, 2, 5).unwrap().digits(), vec![2, 1]);
    }

    #[test]
    fn coset_examples() {
        let r = |p, j, l| -> Vec<i64> {
            coset_decomposition(p, j, l).unwrap().iter().map(res).collect()
        };
        assert_eq!(r(2, 3, 1), vec![0, 1]);
        assert_eq!(r(2, 3, 3), (0..8).collect::<Vec<_>>());
        assert_eq!(r(3, 2, 1), vec![0, 1, 2]);
        assert!(coset_decomposition(2, 3, 4).is_err());
        // Every residue mod 8 lies in exactly one parity class.
        for x in 0..8 {
            let a = PadicApprox::new(2, 3, x).unwrap();
            let idx = coset_index(&a, 1).unwrap();
            let hits = coset_decomposition(2, 3, 1)
                .unwrap()
                .iter()
                .filter(|c| *c.residue() == idx)
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn zero_residue_is_a_bound() {
        let z = PadicApprox::new(5, 3, 125).unwrap();
        assert_eq!(z.magnitude(), PadicMagnitude::AtMost { p: 5, precision: 3 });
        assert_eq!(z.magnitude().bound(), from_frac(1, 125));
        let x = PadicApprox::new(5, 3, 50).unwrap();
        assert_eq!(x.magnitude(), PadicMagnitude::Exact { p: 5, valuation: 2 });
    }

    #[test]
    fn split_negative_valuation() {
        let (v, u) = split_rational(&from_frac(5, 12), 2, 4).unwrap();
        assert_eq!(v, -2);
        assert_eq!(u, PadicApprox::from_rational(&from_frac(5, 3), 2, 4).unwrap());
    }
}
