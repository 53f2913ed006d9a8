//! ℓ^r norms of finitely supported vector-valued functions.
//!
//! Vectors live in `k^m` with the coordinate-max norm `N(v) = max_i |v_i|`
//! for an absolute value on the rationals; this is an ultranorm exactly when
//! the absolute value is ultrametric. Norms are compared through their r-th
//! powers, which are exact whenever every `N(f(x))^r` is rational and
//! certified enclosures otherwise.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::absval::{abs_eval, AbsoluteValue, Magnitude};
use crate::enclosure::Enclosure;
use crate::error::{Error, ParseError, Result};
use crate::rational::parse_rational;
use crate::scalar::Exponent;
use crate::Rational;

/// Index into the domain of a finitely supported function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    Int(i64),
    Str(String),
}

impl Key {
    pub fn parse(s: &str) -> Key {
        match s.parse() {
            Ok(i) => Key::Int(i),
            Err(_) => Key::Str(s.to_string()),
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Int(i) => write!(f, "{i}"),
            Key::Str(s) => write!(f, "{s}"),
        }
    }
}

impl From<i64> for Key {
    fn from(i: i64) -> Self {
        Key::Int(i)
    }
}

impl From<&str> for Key {
    fn from(s: &str) -> Self {
        Key::parse(s)
    }
}

/// `k^m` with the coordinate-max norm over a chosen absolute value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormedSpace {
    scalar: AbsoluteValue,
    dim: usize,
}

impl NormedSpace {
    pub fn new(scalar: AbsoluteValue, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        Ok(NormedSpace { scalar, dim })
    }

    pub fn scalar(&self) -> &AbsoluteValue {
        &self.scalar
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The exponent of the triangle inequality `N` satisfies (`Infinite` for ultranorms).
    pub fn q_exponent(&self) -> Exponent {
        self.scalar.q_exponent()
    }

    pub fn norm(&self, v: &[Rational]) -> Magnitude {
        v.iter()
            .map(|x| abs_eval(&self.scalar, x))
            .fold(Magnitude::zero(), |a, b| magnitude_max(&a, &b))
    }

    fn check_dim(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }
}

pub(crate) fn magnitude_max(a: &Magnitude, b: &Magnitude) -> Magnitude {
    match a.cmp_value(b) {
        Ordering::Greater => a.clone(),
        Ordering::Less => b.clone(),
        Ordering::Equal if a.is_exact() => a.clone(),
        Ordering::Equal if b.is_exact() => b.clone(),
        Ordering::Equal => Magnitude::Approx(a.enclosure().max(&b.enclosure())),
    }
}

/// A finitely supported map from keys to vectors; zero vectors are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteVec {
    dim: usize,
    entries: BTreeMap<Key, Vec<Rational>>,
}

impl FiniteVec {
    pub fn zero(dim: usize) -> Self {
        FiniteVec {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (Key, Vec<Rational>)>) -> Result<Self> {
        let mut f = FiniteVec::zero(dim);
        for (k, v) in entries {
            if f.entries.contains_key(&k) {
                return Err(Error::RepeatedKey(k.to_string()));
            }
            f.set(k, v)?;
        }
        Ok(f)
    }

    /// Sets `f(key) = v`, dropping the key when `v = 0`.
    pub fn set(&mut self, key: Key, v: Vec<Rational>) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, key: &Key) -> Option<&Vec<Rational>> {
        self.entries.get(key)
    }

    pub fn support(&self) -> impl Iterator<Item = &Key> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Vec<Rational>)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        let s = Rational::from_integer(BigInt::from(sign));
        for (k, w) in &other.entries {
            let v = match self.entries.get(k) {
                Some(v) => v.iter().zip(w).map(|(a, b)| a + b * &s).collect(),
                None => w.iter().map(|b| b * &s).collect(),
            };
            out.set(k.clone(), v).expect("same dimension");
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        let mut out = FiniteVec::zero(self.dim);
        for (k, v) in &self.entries {
            out.set(k.clone(), v.iter().map(|x| x * t).collect())
                .expect("same dimension");
        }
        out
    }

    /// One line per entry: `key<TAB>coord_1 ... coord_m`.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(k, v)| {
                let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("{k}\t{}\n", coords.join(" "))
            })
            .collect()
    }

    /// Parses the line form; the dimension comes from the first entry unless given.
    pub fn parse(text: &str, dim: Option<usize>) -> std::result::Result<Self, ParseError> {
        let mut f: Option<FiniteVec> = dim.map(FiniteVec::zero);
        let mut seen = std::collections::BTreeSet::new();
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let key = Key::parse(fields.next().expect("nonempty"));
            let coords = fields
                .map(|c| parse_rational(c).ok_or_else(|| ParseError::new(ln, format!("bad coordinate `{c}`"))))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if coords.is_empty() {
                return Err(ParseError::new(ln, "entry without coordinates"));
            }
            if !seen.insert(key.clone()) {
                return Err(ParseError::new(ln, format!("repeated key `{key}`")));
            }
            let target = f.get_or_insert_with(|| FiniteVec::zero(coords.len()));
            target
                .set(key, coords)
                .map_err(|e| ParseError::new(ln, e.to_string()))?;
        }
        f.ok_or_else(|| ParseError::new(0, "empty vector file needs an explicit dimension"))
    }
}

/// `‖f‖_r` together with its r-th power (for `r = ∞` both are the maximum).
#[derive(Clone, Debug)]
pub struct NormValue {
    pub power_sum: Enclosure,
    pub value: Enclosure,
}

/// `sum_x N(f(x))^r`.
pub fn power_sum(space: &NormedSpace, f: &FiniteVec, r: &Rational) -> Enclosure {
    f.entries
        .values()
        .map(|v| space.norm(v).pow(r).enclosure())
        .sum()
}

/// `max_x N(f(x))`.
pub fn sup_norm(space: &NormedSpace, f: &FiniteVec) -> Magnitude {
    f.entries
        .values()
        .map(|v| space.norm(v))
        .fold(Magnitude::zero(), |a, b| magnitude_max(&a, &b))
}

pub fn lr_norm(space: &NormedSpace, f: &FiniteVec, r: &Exponent) -> NormValue {
    match r {
        Exponent::Infinite => {
            let m = sup_norm(space, f).enclosure();
            NormValue {
                power_sum: m.clone(),
                value: m,
            }
        }
        Exponent::Finite(r) => {
            let s = power_sum(space, f, r);
            NormValue {
                value: s.pow(&r.recip()),
                power_sum: s,
            }
        }
    }
}

/// Which triangle inequality `‖·‖_r` satisfies over a given space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `‖f+g‖^r <= ‖f‖^r + ‖g‖^r` (when `r <= q`).
    RNorm,
    /// `‖f+g‖^q <= ‖f‖^q + ‖g‖^q` (when `q <= r`).
    QNorm(Rational),
    /// Ultranorm scalars: an r-norm for every finite r, an ultranorm at `r = ∞`.
    UltranormAllR,
}

pub fn triangle_regime(space: &NormedSpace, r: &Exponent) -> Regime {
    match space.q_exponent() {
        Exponent::Infinite => Regime::UltranormAllR,
        Exponent::Finite(q) => match r {
            Exponent::Finite(r) if *r <= q => Regime::RNorm,
            _ => Regime::QNorm(q),
        },
    }
}

/// Whether `f`, `g` satisfy the inequality named by [`triangle_regime`].
/// Only a certified violation returns false.
pub fn check_triangle(space: &NormedSpace, f: &FiniteVec, g: &FiniteVec, r: &Exponent) -> bool {
    let sum = f.add(g);
    match (triangle_regime(space, r), r) {
        (Regime::RNorm, Exponent::Finite(r)) | (Regime::UltranormAllR, Exponent::Finite(r)) => {
            let lhs = power_sum(space, &sum, r);
            let rhs = power_sum(space, f, r).add(&power_sum(space, g, r));
            lhs.possibly_le(&rhs)
        }
        (Regime::UltranormAllR, Exponent::Infinite) => {
            let lhs = sup_norm(space, &sum);
            let rhs = magnitude_max(&sup_norm(space, f), &sup_norm(space, g));
            lhs.cmp_value(&rhs) != Ordering::Greater
        }
        (Regime::QNorm(q), r) => {
            let n = |h: &FiniteVec| lr_norm(space, h, r).value.pow(&q);
            n(&sum).possibly_le(&n(f).add(&n(g)))
        }
        (Regime::RNorm, Exponent::Infinite) => unreachable!("r = ∞ never selects the r-norm regime"),
    }
}

/// The keys in descending norm order, ties by key.
fn keys_by_norm(space: &NormedSpace, f: &FiniteVec, r: &Rational) -> Vec<(Key, Enclosure)> {
    let mut items: Vec<(Key, Magnitude)> = f
        .entries
        .iter()
        .map(|(k, v)| (k.clone(), space.norm(v)))
        .collect();
    items.sort_by(|(ka, a), (kb, b)| b.cmp_value(a).then_with(|| ka.cmp(kb)));
    items
        .into_iter()
        .map(|(k, m)| (k, m.pow(r).enclosure()))
        .collect()
}

/// A smallest key set `A(ε)` whose complement carries r-th power mass `< ε`,
/// chosen greedily by descending norm.
pub fn tail_support(space: &NormedSpace, f: &FiniteVec, eps: &Rational, r: &Rational) -> Result<Vec<Key>> {
    if !eps.is_positive() || !r.is_positive() {
        return Err(Error::InvalidArgument("ε and r must be positive".into()));
    }
    let items = keys_by_norm(space, f, r);
    let eps = Enclosure::exact(eps.clone());
    let mut suffix = vec![Enclosure::zero(); items.len() + 1];
    for k in (0..items.len()).rev() {
        suffix[k] = suffix[k + 1].add(&items[k].1);
    }
    let k = (0..=items.len())
        .find(|&k| suffix[k].certainly_lt(&eps))
        .expect("the empty tail is below any positive ε");
    let mut keys: Vec<Key> = items.into_iter().take(k).map(|(k, _)| k).collect();
    keys.sort();
    Ok(keys)
}

/// `f_0 = 0` and `f_l = f_{l-1} + v_η · 1_{x_l}` for distinct keys `x_1..x_n`.
pub fn erdos_chain(space: &NormedSpace, keys: &[Key], v_eta: &[Rational]) -> Result<Vec<FiniteVec>> {
    space.check_dim(v_eta)?;
    if v_eta.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("v_η must be nonzero".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for k in keys {
        if !seen.insert(k) {
            return Err(Error::RepeatedKey(k.to_string()));
        }
    }
    let mut chain = vec![FiniteVec::zero(space.dim)];
    for k in keys {
        let mut next = chain.last().expect("nonempty").clone();
        next.set(k.clone(), v_eta.to_vec())?;
        chain.push(next);
    }
    Ok(chain)
}

/// An η-chain from `0` to a point of r-norm at least `target`, built from
/// steps `v_η · 1_{x_l}` with `0 < N(v_η) < η`.
#[derive(Clone, Debug)]
pub struct UnboundednessCertificate {
    pub space: NormedSpace,
    pub eta: Rational,
    pub target: Rational,
    pub r: Rational,
    pub v_eta: Vec<Rational>,
    pub step_norm: Magnitude,
    /// Number of steps `n = ⌈(target / N(v_η))^r⌉`.
    pub length: u64,
}

impl UnboundednessCertificate {
    /// Keys `1..=n` of the chain.
    pub fn key(&self, l: u64) -> Key {
        Key::Int(l as i64)
    }

    /// The chain element `f_l`.
    pub fn element(&self, l: u64) -> FiniteVec {
        assert!(l <= self.length, "chain index out of range");
        let mut f = FiniteVec::zero(self.space.dim);
        for j in 1..=l {
            f.set(self.key(j), self.v_eta.clone()).expect("dimension checked");
        }
        f
    }

    /// `‖f_l‖_r^r = l · N(v_η)^r`.
    pub fn power_norm_at(&self, l: u64) -> Enclosure {
        self.step_norm
            .pow(&self.r)
            .enclosure()
            .scale(&Rational::from_integer(BigInt::from(l)))
    }

    /// Checks step size `< η`, that the endpoint reaches the target and that
    /// one step fewer would not.
    pub fn verify(&self) -> bool {
        let eta = Magnitude::Exact(self.eta.clone());
        let small_steps = self.step_norm.cmp_value(&eta) == Ordering::Less;
        let goal = Enclosure::exact(self.target.clone()).pow(&self.r);
        let reaches = !self.power_norm_at(self.length).certainly_lt(&goal);
        let minimal = self.length == 1 || self.power_norm_at(self.length - 1).certainly_lt(&goal);
        small_steps && reaches && minimal
    }
}

/// Builds the certificate that η-separated sets containing `0` are unbounded.
pub fn unboundedness_certificate(
    space: &NormedSpace,
    eta: &Rational,
    target: &Rational,
    r: &Rational,
) -> Result<UnboundednessCertificate> {
    if !eta.is_positive() || !target.is_positive() || !r.is_positive() {
        return Err(Error::InvalidArgument("η, target and r must be positive".into()));
    }
    let s = space
        .scalar
        .small_scalar()
        .ok_or(Error::TrivialAbsoluteValue)?;
    let eta_m = Magnitude::Exact(eta.clone());
    let mut t = s.clone();
    while abs_eval(&space.scalar, &t).cmp_value(&eta_m) != Ordering::Less {
        t *= &s;
    }
    let mut v_eta = vec![Rational::zero(); space.dim];
    v_eta[0] = t.clone();
    let step_norm = space.norm(&v_eta);
    let length = steps_to_reach(&step_norm, target, r)?;
    Ok(UnboundednessCertificate {
        space: space.clone(),
        eta: eta.clone(),
        target: target.clone(),
        r: r.clone(),
        v_eta,
        step_norm,
        length,
    })
}

/// Smallest `n >= 1` with `n · N^r >= target^r`.
fn steps_to_reach(step: &Magnitude, target: &Rational, r: &Rational) -> Result<u64> {
    let goal_base = Enclosure::exact(target.clone());
    let mut bits = crate::enclosure::DEFAULT_BITS;
    loop {
        let goal = goal_base.pow_bits(r, bits);
        let unit = match step {
            Magnitude::PrimePower { p, exp } => {
                let e = exp * r;
                let base = Rational::from_integer(BigInt::from(*p));
                if e.is_negative() {
                    Enclosure::exact(base.recip()).pow_bits(&-e, bits)
                } else {
                    Enclosure::exact(base).pow_bits(&e, bits)
                }
            }
            other => other.enclosure().pow_bits(r, bits),
        };
        // n must satisfy n >= goal / unit.
        let lo = goal.lo() / unit.hi();
        let hi = goal.hi() / unit.lo();
        let (n_lo, n_hi) = (lo.ceil().to_integer(), hi.ceil().to_integer());
        if n_lo == n_hi || bits >= 4096 {
            let n = n_hi.max(BigInt::one());
            return n
                .to_u64()
                .ok_or_else(|| Error::InvalidArgument(format!("chain length {n} too large")));
        }
        bits *= 2;
    }
}

/// Whether `N(f(x)) <= a(x)` for every key, with `supp f ⊆ supp a`.
pub fn cube_membership(space: &NormedSpace, f: &FiniteVec, bounds: &BTreeMap<Key, Rational>) -> bool {
    f.entries.iter().all(|(k, v)| match bounds.get(k) {
        Some(a) => space.norm(v).cmp_value(&Magnitude::Exact(a.clone())) != Ordering::Greater,
        None => false,
    })
}

/// Outcome of the tail estimate near a sphere of radius `t`.
#[derive(Clone, Debug)]
pub struct SphereTail {
    /// The key set `A(ε)` chosen for `f`.
    pub head: Vec<Key>,
    /// `sum over keys outside A(ε) of N(g(x))^r`.
    pub tail: Enclosure,
    /// `2ε`.
    pub bound: Rational,
    /// Whether `tail < 2ε` is certified.
    pub holds: bool,
}

/// For `‖f‖_r = t`, `‖g‖_r <= t` and `g` carrying more than `t^r - 2ε` on
/// `A(ε)`, the mass of `g` outside `A(ε)` is below `2ε`.
pub fn sphere_tail_bound(
    space: &NormedSpace,
    f: &FiniteVec,
    g: &FiniteVec,
    t: &Enclosure,
    eps: &Rational,
    r: &Rational,
) -> Result<SphereTail> {
    let head = tail_support(space, f, eps, r)?;
    let t_r = t.pow(r);
    let f_r = power_sum(space, f, r);
    if f_r.cmp_certified(&t_r) != Ordering::Equal {
        return Err(Error::Precondition(format!("‖f‖_r^r = {f_r} differs from t^r = {t_r}")));
    }
    let g_r = power_sum(space, g, r);
    if g_r.certainly_gt(&t_r) {
        return Err(Error::Precondition(format!("‖g‖_r^r = {g_r} exceeds t^r = {t_r}")));
    }
    let two_eps = eps * Rational::from_integer(BigInt::from(2));
    let on_head: Enclosure = head
        .iter()
        .filter_map(|k| g.get(k))
        .map(|v| space.norm(v).pow(r).enclosure())
        .sum();
    let floor = t_r.sub(&Enclosure::exact(two_eps.clone()));
    if !on_head.certainly_gt(&floor) {
        return Err(Error::Precondition(format!(
            "mass of g on A(ε) is {on_head}, not above t^r - 2ε = {floor}"
        )));
    }
    let tail: Enclosure = g
        .iter()
        .filter(|(k, _)| head.binary_search(k).is_err())
        .map(|(_, v)| space.norm(v).pow(r).enclosure())
        .sum();
    let holds = tail.certainly_lt(&Enclosure::exact(two_eps.clone()));
    Ok(SphereTail {
        head,
        tail,
        bound: two_eps,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_frac, from_i64};

    fn real1() -> NormedSpace {
        NormedSpace::new(AbsoluteValue::RealStd, 1).unwrap()
    }

    fn padic1(p: u64) -> NormedSpace {
        NormedSpace::new(AbsoluteValue::Padic(p), 1).unwrap()
    }

    fn vec1(items: &[(i64, Rational)]) -> FiniteVec {
        FiniteVec::from_entries(1, items.iter().map(|(k, x)| (Key::Int(*k), vec![x.clone()]))).unwrap()
    }

    #[test]
    fn norm_examples() {
        let s = real1();
        let f = vec1(&[(1, from_i64(1)), (2, from_i64(-1))]);
        assert_eq!(lr_norm(&s, &f, &Exponent::one()).value.as_exact(), Some(&from_i64(2)));
        let two = lr_norm(&s, &f, &Exponent::Finite(from_i64(2)));
        assert_eq!(two.power_sum.as_exact(), Some(&from_i64(2)));
        assert!((two.value.to_f64() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(lr_norm(&s, &f, &Exponent::Infinite).value.as_exact(), Some(&from_i64(1)));
        let z = FiniteVec::zero(1);
        for r in [Exponent::one(), Exponent::Finite(from_frac(1, 3)), Exponent::Infinite] {
            assert_eq!(lr_norm(&s, &z, &r).value.as_exact(), Some(&from_i64(0)));
        }
        let single = vec1(&[(5, from_i64(12))]);
        let p2 = padic1(2);
        for r in [from_frac(1, 2), from_i64(1), from_i64(3)] {
            assert_eq!(
                lr_norm(&p2, &single, &Exponent::Finite(r)).value.as_exact(),
                Some(&from_frac(1, 4))
            );
        }
    }

    #[test]
    fn coordinate_max_norm() {
        let s = NormedSpace::new(AbsoluteValue::Padic(3), 3).unwrap();
        let v = vec![from_i64(9), from_frac(1, 3), from_i64(2)];
        assert_eq!(s.norm(&v).as_rational(), Some(from_i64(3)));
        assert!(s.norm(&[from_i64(0), from_i64(0), from_i64(0)]).is_zero());
    }

    #[test]
    fn regime_examples() {
        assert_eq!(triangle_regime(&real1(), &Exponent::Finite(from_frac(1, 2))), Regime::RNorm);
        assert_eq!(
            triangle_regime(&real1(), &Exponent::Finite(from_i64(2))),
            Regime::QNorm(from_i64(1))
        );
        assert_eq!(triangle_regime(&padic1(5), &Exponent::Finite(from_i64(2))), Regime::UltranormAllR);
        assert_eq!(triangle_regime(&real1(), &Exponent::Infinite), Regime::QNorm(from_i64(1)));
    }

    #[test]
    fn tail_examples() {
        let s = real1();
        let f = vec1(&[(1, from_i64(1)), (2, from_frac(1, 10))]);
        assert_eq!(tail_support(&s, &f, &from_frac(1, 2), &from_i64(1)).unwrap(), vec![Key::Int(1)]);
        assert!(tail_support(&s, &f, &from_i64(2), &from_i64(1)).unwrap().is_empty());
        assert_eq!(
            tail_support(&s, &f, &from_frac(1, 1_000_000), &from_i64(1)).unwrap().len(),
            2
        );
        // Equal norms: ties broken by key order.
        let g = vec1(&[(3, from_i64(1)), (1, from_i64(-1)), (2, from_i64(1))]);
        assert_eq!(
            tail_support(&s, &g, &from_frac(3, 2), &from_i64(1)).unwrap(),
            vec![Key::Int(1), Key::Int(2)]
        );
    }

    #[test]
    fn erdos_examples() {
        let p2 = padic1(2);
        let keys: Vec<Key> = (1..=3).map(Key::Int).collect();
        let chain = erdos_chain(&p2, &keys, &[from_i64(4)]).unwrap();
        assert_eq!(chain.len(), 4);
        assert!(chain[0].is_empty());
        let n3 = lr_norm(&p2, &chain[3], &Exponent::one());
        assert_eq!(n3.value.as_exact(), Some(&from_frac(3, 4)));
        let one = erdos_chain(&p2, &keys[..1], &[from_i64(4)]).unwrap();
        assert_eq!(lr_norm(&p2, &one[1], &Exponent::Finite(from_i64(2))).value.as_exact(), Some(&from_frac(1, 4)));
        let keys4: Vec<Key> = (1..=4).map(Key::Int).collect();
        let c4 = erdos_chain(&real1(), &keys4, &[from_i64(1)]).unwrap();
        assert_eq!(lr_norm(&real1(), &c4[4], &Exponent::Finite(from_i64(2))).value.as_exact(), Some(&from_i64(2)));
        assert!(matches!(
            erdos_chain(&p2, &[Key::Int(1), Key::Int(1)], &[from_i64(1)]),
            Err(Error::RepeatedKey(_))
        ));
        assert!(erdos_chain(&p2, &keys, &[from_i64(0)]).is_err());
    }

    #[test]
    fn certificate_examples() {
        let p2 = padic1(2);
        let c = unboundedness_certificate(&p2, &from_frac(1, 2), &from_i64(10), &from_i64(1)).unwrap();
        assert_eq!(c.step_norm.as_rational(), Some(from_frac(1, 4)));
        assert_eq!(c.length, 40);
        assert!(c.verify());
        let end = lr_norm(&p2, &c.element(c.length), &Exponent::one());
        assert_eq!(end.value.as_exact(), Some(&from_i64(10)));
        let short = unboundedness_certificate(&p2, &from_frac(1, 2), &from_frac(1, 8), &from_i64(1)).unwrap();
        assert_eq!(short.length, 1);
        let triv = NormedSpace::new(AbsoluteValue::Trivial, 1).unwrap();
        assert_eq!(
            unboundedness_certificate(&triv, &from_frac(1, 2), &from_i64(10), &from_i64(1)).unwrap_err(),
            Error::TrivialAbsoluteValue
        );
        // Irrational (L / N)^r still yields the least sufficient length.
        let c = unboundedness_certificate(&p2, &from_frac(1, 2), &from_i64(10), &from_frac(1, 2)).unwrap();
        assert_eq!(c.length, 7);
        assert!(c.verify());
    }

    #[test]
    fn cube_examples() {
        let s = padic1(2);
        let bounds: BTreeMap<Key, Rational> = [(Key::Int(1), from_frac(1, 2))].into_iter().collect();
        assert!(cube_membership(&s, &FiniteVec::zero(1), &bounds));
        assert!(cube_membership(&s, &vec1(&[(1, from_i64(2))]), &bounds));
        assert!(!cube_membership(&s, &vec1(&[(1, from_i64(1))]), &bounds));
        assert!(!cube_membership(&s, &vec1(&[(2, from_i64(2))]), &bounds));
    }

    #[test]
    fn sphere_examples() {
        let s = real1();
        let f = vec1(&[(1, from_i64(3)), (2, from_i64(1)), (3, from_frac(1, 10))]);
        let r = from_i64(1);
        let t = lr_norm(&s, &f, &Exponent::one()).value;
        let eps = from_frac(1, 2);
        let same = sphere_tail_bound(&s, &f, &f, &t, &eps, &r).unwrap();
        assert!(same.holds);
        assert!(same.tail.certainly_lt(&Enclosure::exact(eps.clone())));
        // g differs from f only on A(ε).
        let g = vec1(&[(1, from_i64(2)), (2, from_i64(2)), (3, from_frac(1, 10))]);
        let moved = sphere_tail_bound(&s, &f, &g, &t, &eps, &r).unwrap();
        assert_eq!(moved.tail, same.tail);
        let big = vec1(&[(1, from_i64(5))]);
        assert!(matches!(
            sphere_tail_bound(&s, &f, &big, &t, &eps, &r),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let f = FiniteVec::from_entries(
            2,
            [
                (Key::from("a"), vec![from_frac(1, 3), from_i64(0)]),
                (Key::Int(7), vec![from_i64(-2), from_frac(5, 4)]),
            ],
        )
        .unwrap();
        assert_eq!(FiniteVec::parse(&f.to_text(), None).unwrap(), f);
        assert!(FiniteVec::parse("1\t1 2\n2\t3\n", None).is_err());
        assert!(FiniteVec::parse("", None).is_err());
        assert_eq!(FiniteVec::parse("", Some(3)).unwrap(), FiniteVec::zero(3));
    }
}
