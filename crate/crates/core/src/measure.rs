//! Simple functions on `[0, 1)` over an algebra of finite interval unions.
//!
//! Sets are finite unions of half-open intervals with rational endpoints;
//! closed and half-open intervals differ by finitely many points, which are
//! null for every measure here because distribution functions are
//! continuous. Measures come from nondecreasing piecewise-linear
//! distribution functions, so every measure, integral and metric below is an
//! exact rational.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::absval::Magnitude;
use crate::chain::quantize_value;
use crate::enclosure::Enclosure;
use crate::error::{Error, ParseError, Result};
use crate::lr::{magnitude_max, NormValue, NormedSpace, Regime};
use crate::rational::parse_rational;
use crate::scalar::Exponent;
use crate::Rational;

/// A finite disjoint union of half-open intervals `[a, b) ⊆ [0, 1)`, kept
/// sorted with adjacent pieces merged.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn full() -> Self {
        IntervalSet::interval(Rational::zero(), Rational::one()).expect("valid")
    }

    pub fn interval(a: Rational, b: Rational) -> Result<Self> {
        IntervalSet::from_intervals(vec![(a, b)])
    }

    /// Union of arbitrary (possibly overlapping or empty) intervals in `[0, 1]`.
    pub fn from_intervals(mut v: Vec<(Rational, Rational)>) -> Result<Self> {
        for (a, b) in &v {
            if a.is_negative() || *b > Rational::one() || a > b {
                return Err(Error::InvalidArgument(format!("[{a},{b}) is not an interval in [0,1]")));
            }
        }
        v.retain(|(a, b)| a < b);
        v.sort();
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(v.len());
        for (a, b) in v {
            match out.last_mut() {
                Some(last) if a <= last.1 => {
                    if b > last.1 {
                        last.1 = b;
                    }
                }
                _ => out.push((a, b)),
            }
        }
        Ok(IntervalSet { intervals: out })
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let i = self.intervals.partition_point(|(a, _)| a <= x);
        i > 0 && *x < self.intervals[i - 1].1
    }

    fn endpoints(&self) -> impl Iterator<Item = &Rational> {
        self.intervals.iter().flat_map(|(a, b)| [a, b])
    }

    /// Pointwise boolean combination, evaluated on the common refinement.
    fn combine(&self, other: &Self, keep: impl Fn(bool, bool) -> bool) -> Self {
        let mut cuts: BTreeSet<Rational> = self.endpoints().chain(other.endpoints()).cloned().collect();
        cuts.insert(Rational::zero());
        cuts.insert(Rational::one());
        let cuts: Vec<Rational> = cuts.into_iter().collect();
        let pieces = cuts
            .windows(2)
            .filter(|w| keep(self.contains(&w[0]), other.contains(&w[0])))
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        IntervalSet::from_intervals(pieces).expect("cuts lie in [0,1]")
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a != b)
    }

    /// Complement in `[0, 1)`.
    pub fn complement(&self) -> Self {
        IntervalSet::full().difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Parses the [`Display`](fmt::Display) form: `[a,b) [c,d) ...` or `empty`.
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s == "empty" || s == "∅" {
            return Ok(IntervalSet::empty());
        }
        let mut v = Vec::new();
        for tok in s.split_whitespace() {
            let inner = tok
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| format!("expected `[a,b)`, found `{tok}`"))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| format!("expected `[a,b)`, found `{tok}`"))?;
            let a = parse_rational(a).ok_or_else(|| format!("bad endpoint `{a}`"))?;
            let b = parse_rational(b).ok_or_else(|| format!("bad endpoint `{b}`"))?;
            v.push((a, b));
        }
        IntervalSet::from_intervals(v).map_err(|e| e.to_string())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self.intervals.iter().map(|(a, b)| format!("[{a},{b})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finitely additive measure `μ([a, b)) = F(b) - F(a)` for a continuous,
/// nondecreasing, piecewise-linear `F` with `F(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FAMeasure {
    /// Breakpoints `(t, F(t))`, strictly increasing in `t`, from `t = 0` to `t = 1`.
    points: Vec<(Rational, Rational)>,
}

impl FAMeasure {
    pub fn lebesgue() -> Self {
        FAMeasure {
            points: vec![(Rational::zero(), Rational::zero()), (Rational::one(), Rational::one())],
        }
    }

    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidArgument(format!("distribution function: {m}")));
        match (points.first(), points.last()) {
            (Some((t0, f0)), Some((t1, _))) if points.len() >= 2 => {
                if !t0.is_zero() || !f0.is_zero() {
                    return bad("must start at (0, 0)");
                }
                if !t1.is_one() {
                    return bad("must end at t = 1");
                }
            }
            _ => return bad("needs at least the breakpoints 0 and 1"),
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return bad("breakpoints must increase");
            }
            if w[1].1 < w[0].1 {
                return bad("must be nondecreasing");
            }
        }
        Ok(FAMeasure { points })
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    /// `F(t)` for `t ∈ [0, 1]`.
    pub fn cdf(&self, t: &Rational) -> Rational {
        let i = self.points.partition_point(|(s, _)| s <= t);
        if i == 0 {
            return Rational::zero();
        }
        if i == self.points.len() {
            return self.points[i - 1].1.clone();
        }
        let (t0, f0) = &self.points[i - 1];
        let (t1, f1) = &self.points[i];
        f0 + (f1 - f0) * (t - t0) / (t1 - t0)
    }

    /// Smallest `x >= a` with `F(x) >= v`, for `v <= F(1)`.
    fn inverse_from(&self, a: &Rational, v: &Rational) -> Rational {
        if self.cdf(a) >= *v {
            return a.clone();
        }
        for w in self.points.windows(2) {
            let ((t0, f0), (t1, f1)) = (&w[0], &w[1]);
            if t1 <= a || f1 < v {
                continue;
            }
            // F crosses v inside [max(t0, a), t1].
            return t0 + (v - f0) * (t1 - t0) / (f1 - f0);
        }
        Rational::one()
    }

    pub fn measure(&self, s: &IntervalSet) -> Rational {
        s.intervals
            .iter()
            .map(|(a, b)| self.cdf(b) - self.cdf(a))
            .sum()
    }

    pub fn total(&self) -> Rational {
        self.points.last().expect("nonempty").1.clone()
    }

    /// One `t F(t)` pair per line.
    pub fn to_text(&self) -> String {
        self.points.iter().map(|(t, f)| format!("{t} {f}\n")).collect()
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut points = Vec::new();
        let mut last = 0;
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(ParseError::new(ln, "expected `t F(t)`"));
            }
            let parse = |s: &str| parse_rational(s).ok_or_else(|| ParseError::new(ln, format!("bad number `{s}`")));
            points.push((parse(fields[0])?, parse(fields[1])?));
            last = ln;
        }
        FAMeasure::new(points).map_err(|e| ParseError::new(last, e.to_string()))
    }
}

/// `sum_j v_j · 1_{E_j}` with disjoint nonempty `E_j` and distinct nonzero `v_j ∈ k^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFn {
    dim: usize,
    parts: Vec<(IntervalSet, Vec<Rational>)>,
}

impl SimpleFn {
    pub fn zero(dim: usize) -> Self {
        SimpleFn { dim, parts: Vec::new() }
    }

    /// Builds the canonical form from disjoint `(set, value)` pieces.
    pub fn new(dim: usize, pieces: Vec<(IntervalSet, Vec<Rational>)>) -> Result<Self> {
        let mut covered = IntervalSet::empty();
        let mut by_value: BTreeMap<Vec<Rational>, IntervalSet> = BTreeMap::new();
        for (s, v) in pieces {
            if v.len() != dim {
                return Err(Error::Dimension { expected: dim, found: v.len() });
            }
            if !covered.intersection(&s).is_empty() {
                return Err(Error::InvalidArgument("pieces of a simple function must be disjoint".into()));
            }
            covered = covered.union(&s);
            if s.is_empty() || v.iter().all(Zero::is_zero) {
                continue;
            }
            let e = by_value.entry(v).or_default();
            *e = e.union(&s);
        }
        let mut parts: Vec<(IntervalSet, Vec<Rational>)> = by_value.into_iter().map(|(v, s)| (s, v)).collect();
        parts.sort_by(|a, b| a.0.intervals[0].0.cmp(&b.0.intervals[0].0));
        Ok(SimpleFn { dim, parts })
    }

    /// A real-valued simple function from `(a, b, t)` triples meaning `t` on `[a, b)`.
    pub fn real(pieces: &[(Rational, Rational, Rational)]) -> Result<Self> {
        let v = pieces
            .iter()
            .map(|(a, b, t)| Ok((IntervalSet::interval(a.clone(), b.clone())?, vec![t.clone()])))
            .collect::<Result<Vec<_>>>()?;
        SimpleFn::new(1, v)
    }

    pub fn indicator(s: &IntervalSet) -> Self {
        SimpleFn::new(1, vec![(s.clone(), vec![Rational::one()])]).expect("single piece")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parts(&self) -> &[(IntervalSet, Vec<Rational>)] {
        &self.parts
    }

    pub fn support(&self) -> IntervalSet {
        self.parts.iter().fold(IntervalSet::empty(), |acc, (s, _)| acc.union(s))
    }

    pub fn value_at(&self, x: &Rational) -> Vec<Rational> {
        self.parts
            .iter()
            .find(|(s, _)| s.contains(x))
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| vec![Rational::zero(); self.dim])
    }

    fn cuts(&self) -> impl Iterator<Item = &Rational> {
        self.parts.iter().flat_map(|(s, _)| s.endpoints())
    }

    /// Applies `op` pointwise on the common refinement of `self` and `other`.
    fn zip_with(&self, other: &Self, op: impl Fn(&[Rational], &[Rational]) -> Vec<Rational>) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut cuts: BTreeSet<Rational> = self.cuts().chain(other.cuts()).cloned().collect();
        cuts.insert(Rational::zero());
        cuts.insert(Rational::one());
        let cuts: Vec<Rational> = cuts.into_iter().collect();
        let pieces = cuts
            .windows(2)
            .map(|w| {
                let v = op(&self.value_at(&w[0]), &other.value_at(&w[0]));
                (IntervalSet::interval(w[0].clone(), w[1].clone()).expect("cut"), v)
            })
            .collect();
        SimpleFn::new(self.dim, pieces).expect("refinement is disjoint")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, t: &Rational) -> Self {
        let pieces = self
            .parts
            .iter()
            .map(|(s, v)| (s.clone(), v.iter().map(|x| x * t).collect()))
            .collect();
        SimpleFn::new(self.dim, pieces).expect("same pieces")
    }

    /// `1_S · f`.
    pub fn restrict(&self, s: &IntervalSet) -> Self {
        let pieces = self
            .parts
            .iter()
            .map(|(e, v)| (e.intersection(s), v.clone()))
            .collect();
        SimpleFn::new(self.dim, pieces).expect("subsets of disjoint pieces")
    }

    /// Where `self` and `other` take different values.
    pub fn disagreement(&self, other: &Self) -> IntervalSet {
        self.sub(other).support()
    }

    /// One line per interval: `a b<TAB>coord_1 ... coord_m`.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<(&Rational, String)> = Vec::new();
        for (s, v) in &self.parts {
            let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
            for (a, b) in &s.intervals {
                lines.push((a, format!("{a} {b}\t{}\n", coords.join(" "))));
            }
        }
        lines.sort_by(|x, y| x.0.cmp(y.0));
        lines.into_iter().map(|(_, l)| l).collect()
    }

    pub fn parse(text: &str, dim: Option<usize>) -> std::result::Result<Self, ParseError> {
        let mut pieces = Vec::new();
        let mut dim = dim;
        let mut last = 0;
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|s| parse_rational(s).ok_or_else(|| ParseError::new(ln, format!("bad number `{s}`"))))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if nums.len() < 3 {
                return Err(ParseError::new(ln, "expected `a b<TAB>coords`"));
            }
            let m = *dim.get_or_insert(nums.len() - 2);
            if nums.len() - 2 != m {
                return Err(ParseError::new(ln, format!("expected {m} coordinates")));
            }
            let s = IntervalSet::interval(nums[0].clone(), nums[1].clone())
                .map_err(|e| ParseError::new(ln, e.to_string()))?;
            pieces.push((s, nums[2..].to_vec()));
            last = ln;
        }
        let dim = dim.ok_or_else(|| ParseError::new(0, "empty simple function needs an explicit dimension"))?;
        SimpleFn::new(dim, pieces).map_err(|e| ParseError::new(last, e.to_string()))
    }
}

/// `∫ f dμ = sum_j t_j μ(E_j)` for a nonnegative real simple function.
pub fn integrate_simple(mu: &FAMeasure, f: &SimpleFn) -> Result<Rational> {
    if f.dim != 1 {
        return Err(Error::Dimension { expected: 1, found: f.dim });
    }
    let mut total = Rational::zero();
    for (s, v) in &f.parts {
        if v[0].is_negative() {
            return Err(Error::InvalidArgument(format!("negative value {} in integrand", v[0])));
        }
        total += &v[0] * mu.measure(s);
    }
    Ok(total)
}

/// `‖f‖_{L^r}` with the space norm on values; for `r = ∞` the essential maximum.
pub fn lr_norm_simple(mu: &FAMeasure, f: &SimpleFn, r: &Exponent, space: &NormedSpace) -> NormValue {
    match r {
        Exponent::Infinite => {
            let m = f
                .parts
                .iter()
                .filter(|(s, _)| mu.measure(s).is_positive())
                .map(|(_, v)| space.norm(v))
                .fold(Magnitude::zero(), |a, b| magnitude_max(&a, &b))
                .enclosure();
            NormValue {
                power_sum: m.clone(),
                value: m,
            }
        }
        Exponent::Finite(r) => {
            let s: Enclosure = f
                .parts
                .iter()
                .map(|(s, v)| space.norm(v).pow(r).enclosure().scale(&mu.measure(s)))
                .sum();
            NormValue {
                value: s.pow(&r.recip()),
                power_sum: s,
            }
        }
    }
}

/// The triangle inequality for `L^r` norms in the regime of the value space:
/// the r-power form for `r <= q`, the q-power form for `q <= r`, and the max
/// form at `r = ∞` over ultranormed values. Only certified violations fail.
pub fn minkowski_holds(mu: &FAMeasure, f: &SimpleFn, g: &SimpleFn, r: &Exponent, space: &NormedSpace) -> bool {
    let sum = f.add(g);
    let norm = |h: &SimpleFn| lr_norm_simple(mu, h, r, space);
    match (crate::lr::triangle_regime(space, r), r) {
        (Regime::QNorm(q), _) => {
            let p = |h: &SimpleFn| norm(h).value.pow(&q);
            p(&sum).possibly_le(&p(f).add(&p(g)))
        }
        (_, Exponent::Finite(_)) => norm(&sum)
            .power_sum
            .possibly_le(&norm(f).power_sum.add(&norm(g).power_sum)),
        (_, Exponent::Infinite) => {
            let (a, b) = (norm(f).value, norm(g).value);
            norm(&sum).value.possibly_le(&a.max(&b))
        }
    }
}

/// `sum_j h(N(v_j))^r μ(E_j)` where `h` rounds up to an integer power of `base`.
pub fn quantized_power_sum(
    mu: &FAMeasure,
    f: &SimpleFn,
    r: &Rational,
    space: &NormedSpace,
    base: &Rational,
) -> Result<Enclosure> {
    f.parts
        .iter()
        .map(|(s, v)| {
            let n = space
                .norm(v)
                .as_rational()
                .ok_or_else(|| Error::InexactPower(format!("{}", space.norm(v).to_f64())))?;
            let h = quantize_value(&n, base);
            Ok(Enclosure::exact(h).pow(r).scale(&mu.measure(s)))
        })
        .sum::<Result<Enclosure>>()
}

/// `d_μ(A, B) = μ(A △ B)`.
pub fn sym_diff_metric(mu: &FAMeasure, a: &IntervalSet, b: &IntervalSet) -> Rational {
    mu.measure(&a.symmetric_difference(b))
}

/// Cuts `E` at F-quantiles into `⌊μ(E)/ε⌋ + 1` pieces of equal measure, each `< ε`.
pub fn chain_decompose(mu: &FAMeasure, e: &IntervalSet, eps: &Rational) -> Result<Vec<IntervalSet>> {
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("ε must be positive".into()));
    }
    if e.is_empty() {
        return Ok(Vec::new());
    }
    let total = mu.measure(e);
    let n = (&total / eps).floor().to_integer() + BigInt::one();
    let n = n
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("too many pieces".into()))?;
    let share = &total / Rational::from_integer(BigInt::from(n));
    let mut cuts = vec![Rational::zero()];
    for l in 1..n {
        cuts.push(quantile(mu, e, &(&share * Rational::from_integer(BigInt::from(l)))));
    }
    cuts.push(Rational::one());
    Ok(cuts
        .windows(2)
        .map(|w| e.intersection(&IntervalSet::interval(w[0].clone(), w[1].clone()).expect("ordered cuts")))
        .collect())
}

/// Smallest `x` with `μ(E ∩ [0, x)) = target`, for `0 <= target <= μ(E)`.
fn quantile(mu: &FAMeasure, e: &IntervalSet, target: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (a, b) in &e.intervals {
        let fa = mu.cdf(a);
        let here = mu.cdf(b) - &fa;
        if &acc + &here >= *target {
            return mu.inverse_from(a, &(fa + target - &acc));
        }
        acc += here;
    }
    Rational::one()
}

/// Whether consecutive sets are at `d_μ`-distance `< ε`.
pub fn is_eps_chain(mu: &FAMeasure, chain: &[IntervalSet], eps: &Rational) -> bool {
    chain.windows(2).all(|w| sym_diff_metric(mu, &w[0], &w[1]) < *eps)
}

/// Partial unions `∅, A_1, A_1 ∪ A_2, ...` of a decomposition.
pub fn partial_unions(pieces: &[IntervalSet]) -> Vec<IntervalSet> {
    let mut out = vec![IntervalSet::empty()];
    for a in pieces {
        let next = out.last().expect("nonempty").union(a);
        out.push(next);
    }
    out
}

/// From a chain `∅ = E_0, ..., E_n = E`, the disjoint pieces
/// `A_l = E''_l \ E''_{l-1}` with `E''_l = ∪_{j<=l} (E_j ∩ E)`.
pub fn pieces_from_chain(chain: &[IntervalSet]) -> Result<Vec<IntervalSet>> {
    match chain.first() {
        Some(first) if first.is_empty() => {}
        _ => return Err(Error::InvalidArgument("a chain must start at the empty set".into())),
    }
    let e = chain.last().expect("nonempty");
    let mut prev = IntervalSet::empty();
    let mut pieces = Vec::with_capacity(chain.len() - 1);
    for el in &chain[1..] {
        let next = prev.union(&el.intersection(e));
        pieces.push(next.difference(&prev));
        prev = next;
    }
    Ok(pieces)
}

/// `f_t = 1_{[0, t)} f`.
pub fn truncate_path(f: &SimpleFn, t: &Rational) -> Result<SimpleFn> {
    if t.is_negative() || *t > Rational::one() {
        return Err(Error::InvalidArgument(format!("t = {t} is outside [0, 1]")));
    }
    Ok(f.restrict(&IntervalSet::interval(Rational::zero(), t.clone())?))
}

/// `‖f_{t2} - f_{t1}‖^r` against `μ([t1, t2)) · ‖f‖_∞^r`.
#[derive(Clone, Debug)]
pub struct PathModulus {
    pub difference: Enclosure,
    pub bound: Enclosure,
    pub holds: bool,
}

pub fn path_modulus(
    mu: &FAMeasure,
    f: &SimpleFn,
    t1: &Rational,
    t2: &Rational,
    r: &Rational,
    space: &NormedSpace,
) -> Result<PathModulus> {
    if t1 > t2 {
        return Err(Error::InvalidArgument(format!("t1 = {t1} exceeds t2 = {t2}")));
    }
    if !r.is_positive() {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let diff = truncate_path(f, t2)?.sub(&truncate_path(f, t1)?);
    let difference = lr_norm_simple(mu, &diff, &Exponent::Finite(r.clone()), space).power_sum;
    let sup = lr_norm_simple(mu, f, &Exponent::Infinite, space).value;
    let window = mu.measure(&IntervalSet::interval(t1.clone(), t2.clone())?);
    let bound = sup.pow(r).scale(&window);
    let holds = difference.possibly_le(&bound);
    Ok(PathModulus {
        difference,
        bound,
        holds,
    })
}

/// Whether `f = g` outside a `μ`-null set.
pub fn ae_equal(mu: &FAMeasure, f: &SimpleFn, g: &SimpleFn) -> bool {
    mu.measure(&f.disagreement(g)).is_zero()
}

/// A finite set of labelled atoms with nonnegative weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicSpace {
    atoms: Vec<(String, Rational)>,
}

impl AtomicSpace {
    pub fn new(atoms: Vec<(String, Rational)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (l, w) in &atoms {
            if w.is_negative() {
                return Err(Error::InvalidArgument(format!("atom `{l}` has negative weight")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::RepeatedKey(l.clone()));
            }
        }
        Ok(AtomicSpace { atoms })
    }

    pub fn atoms(&self) -> &[(String, Rational)] {
        &self.atoms
    }

    pub fn total(&self) -> Rational {
        self.atoms.iter().map(|(_, w)| w).sum()
    }

    /// `∫ f dμ` for a real function on the labels.
    pub fn integrate(&self, f: impl Fn(&str) -> Rational) -> Rational {
        self.atoms.iter().map(|(l, w)| f(l) * w).sum()
    }
}

/// The image measure `ν(E) = μ(φ^{-1}(E))` of an atomic space on `[0, 1)`.
#[derive(Clone, Debug)]
pub struct Pushforward {
    points: Vec<(Rational, Rational)>,
}

impl Pushforward {
    pub fn measure(&self, e: &IntervalSet) -> Rational {
        self.points.iter().filter(|(x, _)| e.contains(x)).map(|(_, w)| w).sum()
    }

    /// `∫ f dν` for a real simple function.
    pub fn integrate(&self, f: &SimpleFn) -> Result<Rational> {
        if f.dim != 1 {
            return Err(Error::Dimension { expected: 1, found: f.dim });
        }
        Ok(f.parts.iter().map(|(s, v)| &v[0] * self.measure(s)).sum())
    }
}

pub fn pushforward(space: &AtomicSpace, phi: &BTreeMap<String, Rational>) -> Result<Pushforward> {
    let points = space
        .atoms
        .iter()
        .map(|(l, w)| {
            let x = phi.get(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            if x.is_negative() || *x >= Rational::one() {
                return Err(Error::InvalidArgument(format!("φ({l}) = {x} is outside [0, 1)")));
            }
            Ok((x.clone(), w.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Pushforward { points })
}

/// Both sides of `∫_X f∘φ dμ = ∫ f dν`.
pub fn pushforward_check(space: &AtomicSpace, phi: &BTreeMap<String, Rational>, f: &SimpleFn) -> Result<(Rational, Rational)> {
    let nu = pushforward(space, phi)?;
    let rhs = nu.integrate(f)?;
    let lhs = space.integrate(|l| f.value_at(&phi[l])[0].clone());
    Ok((lhs, rhs))
}
