//! Finite distance matrices and audits of the q-metric and ultrametric axioms.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::scalar::{PowerValue, Scalar};
use crate::Rational;

/// A labeled symmetric distance matrix with zero diagonal.
///
/// Comparisons between entries allow a matrix-level slack `tol`, which is
/// zero for exact scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct DistMatrix<T> {
    labels: Vec<String>,
    d: Vec<T>,
    tol: T,
}

/// An ordered triple of point indices `(x, y, z)`, read as the triangle
/// `d(x, z)` against the path through `y`.
pub type Triple = (usize, usize, usize);

impl<T: Scalar> DistMatrix<T> {
    /// Builds a matrix from rows, checking squareness, zero diagonal,
    /// symmetry and positivity off the diagonal (all up to the tolerance).
    pub fn new(labels: Vec<String>, rows: Vec<Vec<T>>) -> Result<Self> {
        Self::with_tolerance(labels, rows, T::default_tolerance())
    }

    pub fn with_tolerance(labels: Vec<String>, rows: Vec<Vec<T>>, tol: T) -> Result<Self> {
        let n = labels.len();
        if rows.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: rows.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidArgument(format!("duplicate label `{l}`")));
            }
        }
        let mut d = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let x = &rows[i][j];
                if x.is_negative_scalar() {
                    return Err(Error::InvalidArgument(format!(
                        "negative distance {x} between `{}` and `{}`",
                        labels[i], labels[j]
                    )));
                }
                if i == j {
                    if *x > tol {
                        return Err(Error::InvalidArgument(format!(
                            "nonzero diagonal entry {x} at `{}`",
                            labels[i]
                        )));
                    }
                    d.push(T::zero());
                } else if j < i {
                    let upper = &rows[j][i];
                    let diff = if x > upper {
                        x.clone() - upper.clone()
                    } else {
                        upper.clone() - x.clone()
                    };
                    if diff > tol {
                        return Err(Error::InvalidArgument(format!(
                            "asymmetric entries {upper} and {x} between `{}` and `{}`",
                            labels[j], labels[i]
                        )));
                    }
                    d.push(upper.clone());
                } else {
                    if *x <= T::zero() {
                        return Err(Error::InvalidArgument(format!(
                            "distinct points `{}` and `{}` at distance zero",
                            labels[i], labels[j]
                        )));
                    }
                    d.push(x.clone());
                }
            }
        }
        Ok(DistMatrix { labels, d, tol })
    }

    /// Builds a matrix from a distance function on index pairs `i < j`.
    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let n = labels.len();
        let mut rows = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let x = f(i, j);
                rows[i][j] = x.clone();
                rows[j][i] = x;
            }
        }
        Self::new(labels, rows)
    }

    /// Matrix with labels `0..n`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(labels, rows)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn tolerance(&self) -> &T {
        &self.tol
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.d[i * self.len() + j]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    /// Unordered pairs `i < j` with their distances.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.get(i, j))))
    }

    pub fn max_distance(&self) -> T {
        self.pairs()
            .map(|(_, _, x)| x.clone())
            .fold(T::zero(), |a, b| T::max_of(&a, &b))
    }

    /// `a > b + tol`.
    pub(crate) fn exceeds(&self, a: &T, b: &T) -> bool {
        *a > b.clone() + self.tol.clone()
    }

    /// The submatrix on the given indices, in order.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        DistMatrix {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            d: idx
                .iter()
                .flat_map(|&i| idx.iter().map(move |&j| self.get(i, j).clone()))
                .collect(),
            tol: self.tol.clone(),
        }
    }

    /// Entrywise multiplication by a positive constant.
    pub fn scale(&self, c: &T) -> Self {
        assert!(*c > T::zero(), "scale factor must be positive");
        DistMatrix {
            labels: self.labels.clone(),
            d: self.d.iter().map(|x| x.clone() * c.clone()).collect(),
            tol: self.tol.clone() * c.clone(),
        }
    }

    /// The same distances as `f64`s.
    pub fn to_float(&self) -> DistMatrix<f64> {
        DistMatrix {
            labels: self.labels.clone(),
            d: self.d.iter().map(Scalar::to_f64).collect(),
            tol: self.tol.to_f64().max(f64::default_tolerance()),
        }
    }

    /// Same shape, new entries; the caller guarantees the axioms.
    pub(crate) fn map_entries(&self, f: impl Fn(usize, usize) -> T) -> Self {
        let n = self.len();
        DistMatrix {
            labels: self.labels.clone(),
            d: (0..n * n).map(|k| f(k / n, k % n)).collect(),
            tol: self.tol.clone(),
        }
    }

    fn triples(&self) -> impl Iterator<Item = Triple> {
        let n = self.len();
        (0..n).flat_map(move |x| {
            (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z)))
        })
        .filter(|&(x, y, z)| x != y && y != z && x != z)
    }

    /// Ordered triples with `d(x,z)^q > d(x,y)^q + d(y,z)^q`.
    ///
    /// Float entries get the matrix slack before powering: a triple is
    /// reported only if `(d(x,z) - tol)^q` still exceeds the widened sum.
    pub fn verify_qmetric(&self, q: &Rational) -> Vec<Triple> {
        assert!(*q > Rational::from_integer(0.into()), "q must be positive");
        let shrunk: Vec<T::Power> = self
            .d
            .iter()
            .map(|c| {
                let c = if *c > self.tol { c.clone() - self.tol.clone() } else { T::zero() };
                c.power(q)
            })
            .collect();
        let widened: Vec<T::Power> = if self.tol.is_zero() {
            shrunk.clone()
        } else {
            self.d.iter().map(|a| (a.clone() + self.tol.clone()).power(q)).collect()
        };
        let n = self.len();
        self.triples()
            .filter(|&(x, y, z)| {
                let rhs = widened[x * n + y].add(&widened[y * n + z]);
                shrunk[x * n + z].cmp_power(&rhs) == Ordering::Greater
            })
            .collect()
    }

    /// Ordered triples with `d(x,z) > max(d(x,y), d(y,z))`.
    pub fn verify_ultrametric(&self) -> Vec<Triple> {
        self.triples()
            .filter(|&(x, y, z)| {
                let m = T::max_of(self.get(x, y), self.get(y, z));
                self.exceeds(self.get(x, z), &m)
            })
            .collect()
    }

    pub fn is_ultrametric(&self) -> bool {
        self.verify_ultrametric().is_empty()
    }

    /// Entrywise `d^a`. Fails for exact scalars when some power is irrational;
    /// use [`DistMatrix::to_float`] first in that case.
    pub fn power_transform(&self, a: &Rational) -> Result<Self> {
        if *a <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidArgument(format!("exponent {a} must be positive")));
        }
        let mut d = Vec::with_capacity(self.d.len());
        for x in &self.d {
            d.push(
                x.exact_power(a)
                    .ok_or_else(|| Error::InexactPower(format!("{x}^{a}")))?,
            );
        }
        let tol = if T::EXACT {
            self.tol.clone()
        } else {
            // Slack grows with the derivative of t -> t^a over the entry range.
            let a = crate::rational::to_f64(a);
            let m = self.max_distance().to_f64().max(1.0);
            let slack = self.tol.to_f64() * a * m.powf(a - 1.0).max(1.0);
            T::from_rational(&crate::rational::from_f64(slack).unwrap_or_default())
        };
        Ok(DistMatrix {
            labels: self.labels.clone(),
            d,
            tol,
        })
    }

    /// Triples whose two largest sides differ (each unordered triangle once).
    pub fn isoceles_audit(&self) -> Vec<Triple> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let mut sides = [
                        self.get(x, y).clone(),
                        self.get(y, z).clone(),
                        self.get(x, z).clone(),
                    ];
                    sides.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
                    if self.exceeds(&sides[2], &sides[1]) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    /// Labels within distance `r` of `x`: strictly for open balls, non-strictly for closed.
    pub fn ball(&self, x: &str, r: &T, closed: bool) -> Result<Vec<String>> {
        let i = self.index_of(x)?;
        Ok(self
            .ball_indices(i, r, closed)
            .into_iter()
            .map(|j| self.labels[j].clone())
            .collect())
    }

    pub fn ball_indices(&self, i: usize, r: &T, closed: bool) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| {
                let d = self.get(i, j);
                if closed {
                    d <= r
                } else {
                    d < r
                }
            })
            .collect()
    }

    /// Text form: `n`, then one line per point: label followed by `n` entries.
    pub fn to_text(&self) -> String {
        let n = self.len();
        let mut s = format!("{n}\n");
        for i in 0..n {
            s.push_str(&self.labels[i]);
            for j in 0..n {
                let _ = write!(s, " {}", self.get(i, j));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text form; `#` starts a comment and blank lines are skipped.
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "empty distance matrix"))?;
        let n: usize = first
            .parse()
            .map_err(|_| ParseError::new(ln, format!("expected point count, found `{first}`")))?;
        let mut labels = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        for k in 0..n {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| ParseError::new(ln + k + 1, format!("expected {n} rows")))?;
            let mut fields = line.split_whitespace();
            let label = fields.next().expect("nonempty line").to_string();
            let row = fields
                .map(|f| {
                    T::parse_scalar(f)
                        .ok_or_else(|| ParseError::new(ln, format!("bad entry `{f}`")))
                })
                .collect::<std::result::Result<Vec<T>, _>>()?;
            if row.len() != n {
                return Err(ParseError::new(
                    ln,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            labels.push(label);
            rows.push(row);
        }
        if let Some((ln, _)) = lines.next() {
            return Err(ParseError::new(ln, "trailing content after matrix"));
        }
        DistMatrix::new(labels, rows).map_err(|e| ParseError::new(0, e.to_string()))
    }
}

/// Result of the maximal q-metric exponent search.
#[derive(Clone, Debug, PartialEq)]
pub enum MaxExponent {
    /// `q* = sup { q : D is a q-metric }`, to the bisection tolerance.
    Finite(f64),
    /// No triple has a side longer than both others: a q-metric for every q.
    Ultrametric,
    /// The binding root lies outside the search bracket.
    OutOfRange { below: bool },
}

/// Search bracket for the q* bisection.
pub const QSTAR_LO: f64 = 1e-3;
pub const QSTAR_HI: f64 = 64.0;
/// Relative tolerance of the q* bisection.
pub const QSTAR_REL_TOL: f64 = 1e-9;

impl<T: Scalar> DistMatrix<T> {
    /// `q*` as the smallest root of `c^q = a^q + b^q` over triangles whose
    /// longest side `c` exceeds the other two.
    pub fn max_metric_exponent(&self) -> MaxExponent {
        let n = self.len();
        let mut best: Option<f64> = None;
        let mut above = false;
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let mut s = [
                        self.get(x, y).clone(),
                        self.get(y, z).clone(),
                        self.get(x, z).clone(),
                    ];
                    s.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
                    if !self.exceeds(&s[2], &s[1]) {
                        continue;
                    }
                    // Ratios in the scalar type keep exact inputs exact until here.
                    let a = (s[0].clone() / s[2].clone()).to_f64();
                    let b = (s[1].clone() / s[2].clone()).to_f64();
                    match triangle_exponent(a, b) {
                        Some(q) => best = Some(best.map_or(q, |m: f64| m.min(q))),
                        None => above = true,
                    }
                }
            }
        }
        match best {
            Some(q) => MaxExponent::Finite(q),
            None if above => MaxExponent::OutOfRange { below: false },
            None => MaxExponent::Ultrametric,
        }
    }
}

/// Root of `a^q + b^q = 1` for `0 < a <= b < 1`; `None` when above the bracket.
fn triangle_exponent(a: f64, b: f64) -> Option<f64> {
    let g = |q: f64| a.powf(q) + b.powf(q) - 1.0;
    let (mut lo, mut hi) = (QSTAR_LO, QSTAR_HI);
    if g(hi) > 0.0 {
        return None;
    }
    if g(lo) <= 0.0 {
        return Some(lo);
    }
    while hi - lo > QSTAR_REL_TOL * 1e-3 * hi {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}
