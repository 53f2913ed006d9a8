//! Helpers on arbitrary-precision rationals: parsing, integer powers and exact roots.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Parses `a/b`, an integer, or a decimal literal (`0.25`, `-1.5e-3`) into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    let mut value = Rational::from_integer(all) * pow_int(&ten, scale as i64);
    if neg {
        value = -value;
    }
    Some(value)
}

/// `x^e` for an integer exponent; `x` must be nonzero when `e < 0`.
pub fn pow_int(x: &Rational, e: i64) -> Rational {
    let mag = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

pub fn from_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact `n`-th root of a nonnegative integer, if it exists.
pub fn exact_int_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = floor_root(x, n);
    if num_traits::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

/// `floor(x^(1/n))` for `x >= 0`.
///
/// Newton's method from a float-seeded overestimate; `BigInt::nth_root`
/// starts from a power of two and needs on the order of `n` steps when `n`
/// is large.
pub fn floor_root(x: &BigInt, n: u32) -> BigInt {
    assert!(!x.is_negative() && n > 0);
    if n == 1 || x.is_zero() {
        return x.clone();
    }
    let bits = x.bits();
    if bits <= 64 {
        return x.nth_root(n);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit prefix");
    let log2_root = (top.log2() + shift as f64) / n as f64;
    let whole = log2_root.floor();
    let mantissa = BigInt::from((2f64.powf(log2_root - whole) * (1u64 << 52) as f64) as u64);
    let e = whole as i64 - 52;
    let mut y = if e >= 0 { mantissa << e as u64 } else { mantissa >> (-e) as u64 };
    // Pad the seed so Newton descends from above.
    y = &y + (&y >> 24u32) + 1;
    let (nb, n1) = (BigInt::from(n), n as usize - 1);
    loop {
        let next = (&y * (&nb - 1) + x / num_traits::pow(y.clone(), n1)) / &nb;
        if next >= y {
            break;
        }
        y = next;
    }
    while num_traits::pow(y.clone(), n as usize) > *x {
        y -= 1;
    }
    while num_traits::pow(&y + 1, n as usize) <= *x {
        y += 1;
    }
    y
}

/// Exact `n`-th root of a nonnegative rational, if it is rational.
pub fn exact_root(x: &Rational, n: u32) -> Option<Rational> {
    if n == 1 {
        return Some(x.clone());
    }
    let num = exact_int_root(x.numer(), n)?;
    let den = exact_int_root(x.denom(), n)?;
    Some(Rational::new(num, den))
}

/// Exact `x^q` for nonnegative `x` and rational `q`, when the result is rational.
pub fn exact_pow(x: &Rational, q: &Rational) -> Option<Rational> {
    if q.is_zero() {
        return Some(Rational::one());
    }
    if x.is_zero() {
        return if q.is_positive() { Some(Rational::zero()) } else { None };
    }
    let a = q.numer().to_i64()?;
    let c = q.denom().to_u32()?;
    exact_root(&pow_int(x, a), c)
}

/// Smallest integer `>= x`.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Number of times `p` divides the nonzero integer `n`, and the cofactor.
pub fn split_prime(n: &BigInt, p: &BigInt) -> (i64, BigInt) {
    let mut k = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (k, m);
        }
        m = q;
        k += 1;
    }
}

/// Deterministic primality test for the small primes used as p-adic bases.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rational approximation of `x` as an `f64`.
pub fn to_f64(x: &Rational) -> f64 {
    if let Some(f) = x.to_f64() {
        if f.is_finite() {
            return f;
        }
    }
    // Very large components: scale both by the same power of two.
    let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(900);
    let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    if d == 0.0 {
        if x.numer().sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    } else {
        n / d
    }
}

/// Converts a finite `f64` to the exactly equal rational.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_root_matches_nth_root() {
        let mut x = BigInt::from(3u8);
        for k in 1..40u32 {
            x = &x * 123_457u32 + k;
            for n in [2u32, 3, 7, 31] {
                assert_eq!(floor_root(&x, n), x.nth_root(n), "n = {n}");
            }
        }
        let big = num_traits::pow(BigInt::from(5u8), 2001) << 160_000usize;
        let y = floor_root(&big, 1000);
        assert!(num_traits::pow(y.clone(), 1000) <= big);
        assert!(num_traits::pow(y + 1u8, 1000) > big);
        assert_eq!(floor_root(&num_traits::pow(BigInt::from(10u8), 300), 3), num_traits::pow(BigInt::from(10u8), 100));
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/6"), Some(from_frac(1, 2)));
        assert_eq!(parse_rational("0.25"), Some(from_frac(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(from_frac(-3, 2)));
        assert_eq!(parse_rational("1e-3"), Some(from_frac(1, 1000)));
        assert_eq!(parse_rational("12"), Some(from_i64(12)));
        assert_eq!(parse_rational(".5"), Some(from_frac(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_root(&from_frac(4, 9), 2), Some(from_frac(2, 3)));
        assert_eq!(exact_root(&from_i64(2), 2), None);
        assert_eq!(exact_pow(&from_i64(8), &from_frac(2, 3)), Some(from_i64(4)));
        assert_eq!(exact_pow(&from_frac(1, 4), &from_frac(-1, 2)), Some(from_i64(2)));
    }

    #[test]
    fn prime_split() {
        let (k, m) = split_prime(&BigInt::from(12), &BigInt::from(2));
        assert_eq!((k, m), (2, BigInt::from(3)));
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
    }
}
