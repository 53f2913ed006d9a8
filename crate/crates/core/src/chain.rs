//! η-chains on finite distance matrices.
//!
//! Two points are η-chained when a sequence of steps, each strictly shorter
//! than η, joins them. The classes of this relation are the connected
//! components of the threshold graph `{d < η}`; the smallest η that joins
//! `x` and `y` is the subdominant ultrametric `u(x, y)`, the minimax step
//! over all chains, read off a minimum spanning tree.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::metric::DistMatrix;
use crate::rational::to_f64;
use crate::scalar::{Exponent, PowerValue, Scalar};
use crate::union_find::UnionFind;
use crate::Rational;

/// A threshold in `(0, ∞]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Threshold<T> {
    Finite(T),
    Infinite,
}

impl<T: fmt::Display> fmt::Display for Threshold<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(t) => write!(f, "{t}"),
            Threshold::Infinite => write!(f, "inf"),
        }
    }
}

/// The η-chain classes of a matrix, as index blocks ordered by smallest member.
#[derive(Clone, Debug, PartialEq)]
pub struct Partition<T> {
    blocks: Vec<Vec<usize>>,
    eta: T,
}

impl<T: Scalar> Partition<T> {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn eta(&self) -> &T {
        &self.eta
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, i: usize) -> &[usize] {
        self.blocks
            .iter()
            .find(|b| b.contains(&i))
            .expect("every index lies in a block")
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition<T>) -> bool {
        self.blocks.iter().all(|b| {
            let target = coarser.block_of(b[0]);
            b.iter().all(|i| target.contains(i))
        })
    }

    /// Same blocks, regardless of threshold.
    pub fn same_blocks(&self, other: &Partition<T>) -> bool {
        self.blocks == other.blocks
    }

    /// One block per line, labels separated by spaces.
    pub fn to_text(&self, d: &DistMatrix<T>) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let labels: Vec<&str> = b.iter().map(|&i| d.label(i)).collect();
                labels.join(" ") + "\n"
            })
            .collect()
    }

    /// Reads the block-per-line form back against the matrix it came from.
    pub fn parse(text: &str, d: &DistMatrix<T>, eta: T) -> std::result::Result<Self, ParseError> {
        let mut seen = vec![false; d.len()];
        let mut blocks = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut block = Vec::new();
            for label in line.split_whitespace() {
                let i = d
                    .index_of(label)
                    .map_err(|e| ParseError::new(ln + 1, e.to_string()))?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(ParseError::new(ln + 1, format!("label `{label}` repeated")));
                }
                block.push(i);
            }
            block.sort_unstable();
            blocks.push(block);
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(ParseError::new(0, format!("label `{}` missing", d.label(i))));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Partition { blocks, eta })
    }
}

/// Components of the graph with an edge wherever `d < eta`.
pub fn eta_partition<T: Scalar>(d: &DistMatrix<T>, eta: &T) -> Partition<T> {
    let mut uf = UnionFind::new(d.len());
    for (i, j, x) in d.pairs() {
        if x < eta {
            uf.union(i, j);
        }
    }
    Partition {
        blocks: uf.groups(),
        eta: eta.clone(),
    }
}

/// Whether every distance between `a` and `b` is at least `eta`.
pub fn is_eta_separated<T: Scalar>(d: &DistMatrix<T>, a: &[usize], b: &[usize], eta: &T) -> Result<bool> {
    if let Some(i) = a.iter().find(|i| b.contains(i)) {
        return Err(Error::Overlap(d.label(*i).to_string()));
    }
    Ok(a.iter().all(|&i| b.iter().all(|&j| d.get(i, j) >= eta)))
}

/// Whether `s` is a single η-chain class of its own restriction.
///
/// Computed twice: from the threshold-graph components, and as the absence of
/// an η-separated split of `s` into two nonempty parts. The two must agree.
pub fn is_eta_connected<T: Scalar>(d: &DistMatrix<T>, s: &[usize], eta: &T) -> bool {
    assert!(!s.is_empty(), "connectivity of the empty set");
    let by_components = eta_partition(&d.restrict(s), eta).len() == 1;
    let by_splits = !has_separated_split(d, s, eta);
    assert_eq!(by_components, by_splits, "connectivity characterizations disagree");
    by_components
}

const EXHAUSTIVE_SPLIT_LIMIT: usize = 16;

/// Looks for a split `s = A ∪ B` into nonempty η-separated parts.
///
/// Small sets are searched exhaustively. Larger sets grow a candidate part
/// from the first point by absorbing anything closer than η, which finds a
/// split whenever one exists.
pub fn has_separated_split<T: Scalar>(d: &DistMatrix<T>, s: &[usize], eta: &T) -> bool {
    let n = s.len();
    if n < 2 {
        return false;
    }
    if n <= EXHAUSTIVE_SPLIT_LIMIT {
        // The first point is always in A; masks choose the rest of A.
        for mask in 0u32..(1 << (n - 1)) - 1 {
            let mut a = vec![s[0]];
            let mut b = Vec::new();
            for (k, &i) in s[1..].iter().enumerate() {
                if mask & (1 << k) != 0 {
                    a.push(i);
                } else {
                    b.push(i);
                }
            }
            if is_eta_separated(d, &a, &b, eta).expect("disjoint by construction") {
                return true;
            }
        }
        return false;
    }
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut grew = true;
    while grew {
        grew = false;
        for k in 0..n {
            if !inside[k] && (0..n).any(|m| inside[m] && d.get(s[m], s[k]) < eta) {
                inside[k] = true;
                grew = true;
            }
        }
    }
    inside.iter().any(|x| !x)
}

/// Minimum spanning tree edges `(i, j, d(i, j))` by Prim's algorithm on the dense matrix.
pub fn minimum_spanning_tree<T: Scalar>(d: &DistMatrix<T>) -> Vec<(usize, usize, T)> {
    let n = d.len();
    if n == 0 {
        return Vec::new();
    }
    let mut in_tree = vec![false; n];
    let mut best: Vec<Option<(T, usize)>> = vec![None; n];
    let mut edges = Vec::with_capacity(n - 1);
    let mut current = 0;
    in_tree[0] = true;
    for _ in 1..n {
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            let w = d.get(current, v);
            if best[v].as_ref().map_or(true, |(b, _)| w < b) {
                best[v] = Some((w.clone(), current));
            }
        }
        let next = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&a, &b| {
                let (wa, _) = best[a].as_ref().expect("candidate");
                let (wb, _) = best[b].as_ref().expect("candidate");
                wa.partial_cmp(wb).unwrap_or(Ordering::Equal)
            })
            .expect("a vertex remains");
        let (w, from) = best[next].clone().expect("candidate");
        edges.push((from, next, w));
        in_tree[next] = true;
        current = next;
    }
    edges
}

/// The largest ultrametric below `d`: `u(x, y)` is the least achievable
/// maximal step over chains from `x` to `y`.
pub fn subdominant_ultrametric<T: Scalar>(d: &DistMatrix<T>) -> DistMatrix<T> {
    let n = d.len();
    let mut adj: Vec<Vec<(usize, T)>> = vec![Vec::new(); n];
    for (i, j, w) in minimum_spanning_tree(d) {
        adj[i].push((j, w.clone()));
        adj[j].push((i, w));
    }
    let mut u = vec![T::zero(); n * n];
    for root in 0..n {
        // Tree walk carrying the largest edge seen so far.
        let mut stack = vec![(root, usize::MAX, T::zero())];
        while let Some((v, parent, m)) = stack.pop() {
            u[root * n + v] = m.clone();
            for (w, x) in &adj[v] {
                if *w != parent {
                    stack.push((*w, v, T::max_of(&m, x)));
                }
            }
        }
    }
    d.map_entries(|i, j| u[i * n + j].clone())
}

/// The thresholds where the η-partition changes: the distinct MST edge weights, ascending.
pub fn critical_thresholds<T: Scalar>(d: &DistMatrix<T>) -> Vec<T> {
    let mut w: Vec<T> = minimum_spanning_tree(d).into_iter().map(|(_, _, x)| x).collect();
    w.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    w.dedup();
    w
}

/// A finite sequence of points; repetitions allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    points: Vec<String>,
}

impl Chain {
    pub fn new(points: Vec<String>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("a chain needs at least one point".into()));
        }
        Ok(Chain { points })
    }

    pub fn from_indices<T: Scalar>(d: &DistMatrix<T>, idx: &[usize]) -> Result<Self> {
        Chain::new(idx.iter().map(|&i| d.label(i).to_string()).collect())
    }

    /// Comma-separated labels.
    pub fn parse(s: &str) -> Result<Self> {
        Chain::new(s.split(',').map(|p| p.trim().to_string()).collect())
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.points.join(","))
    }
}

/// An a-length `(sum step^a)^(1/a)`, or the maximal step when `a = ∞`.
#[derive(Clone, Debug)]
pub struct ALength<T: Scalar> {
    /// `sum step^a` in the power domain; absent for `a = ∞`.
    pub power_sum: Option<T::Power>,
    /// The length itself, when representable in `T`.
    pub exact: Option<T>,
    pub approx: f64,
}

impl<T: Scalar> ALength<T> {
    fn from_power_sum(sum: T::Power, a: &Rational) -> Self {
        let exact = T::root_of_power(&sum, a);
        let approx = sum.to_f64().powf(1.0 / to_f64(a));
        ALength {
            power_sum: Some(sum),
            exact,
            approx,
        }
    }

    fn from_max(m: T) -> Self {
        ALength {
            power_sum: None,
            approx: m.to_f64(),
            exact: Some(m),
        }
    }
}

pub fn chain_a_length<T: Scalar>(d: &DistMatrix<T>, chain: &Chain, a: &Exponent) -> Result<ALength<T>> {
    let idx = d.indices_of(chain.points())?;
    Ok(a_length_of_indices(d, &idx, a))
}

pub fn a_length_of_indices<T: Scalar>(d: &DistMatrix<T>, idx: &[usize], a: &Exponent) -> ALength<T> {
    let steps = idx.windows(2).map(|w| d.get(w[0], w[1]));
    match a {
        Exponent::Infinite => ALength::from_max(steps.fold(T::zero(), |m, x| T::max_of(&m, x))),
        Exponent::Finite(a) => {
            let sum = steps.fold(T::Power::zero(), |acc, x| acc.add(&x.power(a)));
            ALength::from_power_sum(sum, a)
        }
    }
}

/// The shortest chain from `x` to `y` under step costs `d^a`, with its a-length.
///
/// Ties in cost go to fewer hops, then to the lexicographically smallest
/// label sequence.
pub fn min_a_length<T: Scalar>(
    d: &DistMatrix<T>,
    x: &str,
    y: &str,
    a: &Rational,
) -> Result<(ALength<T>, Chain)> {
    if *a <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidArgument(format!("exponent {a} must be positive")));
    }
    let (s, t) = (d.index_of(x)?, d.index_of(y)?);
    let n = d.len();
    struct Key<P> {
        cost: P,
        path: Vec<usize>,
    }
    let better = |new: &Key<T::Power>, old: &Key<T::Power>| -> bool {
        match new.cost.cmp_power(&old.cost) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match new.path.len().cmp(&old.path.len()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => {
                    let nl = new.path.iter().map(|&i| d.label(i));
                    let ol = old.path.iter().map(|&i| d.label(i));
                    nl.lt(ol)
                }
            },
        }
    };
    let mut best: Vec<Option<Key<T::Power>>> = (0..n).map(|_| None).collect();
    let mut done = vec![false; n];
    best[s] = Some(Key {
        cost: T::Power::zero(),
        path: vec![s],
    });
    loop {
        let mut pick: Option<usize> = None;
        for v in 0..n {
            if done[v] || best[v].is_none() {
                continue;
            }
            if pick.map_or(true, |p| {
                better(best[v].as_ref().unwrap(), best[p].as_ref().unwrap())
            }) {
                pick = Some(v);
            }
        }
        let Some(u) = pick else { break };
        done[u] = true;
        if u == t {
            break;
        }
        let (cost_u, path_u) = {
            let k = best[u].as_ref().unwrap();
            (k.cost.clone(), k.path.clone())
        };
        for v in 0..n {
            if done[v] || v == u {
                continue;
            }
            let mut path = path_u.clone();
            path.push(v);
            let cand = Key {
                cost: cost_u.add(&d.get(u, v).power(a)),
                path,
            };
            if best[v].as_ref().map_or(true, |old| better(&cand, old)) {
                best[v] = Some(cand);
            }
        }
    }
    let key = best[t].take().expect("complete graph reaches every point");
    let chain = Chain::from_indices(d, &key.path)?;
    Ok((ALength::from_power_sum(key.cost, a), chain))
}

/// The largest η at which the η-class of `x` still fits in the open ball
/// `B(x, r)`; it is η-separated from the rest by construction.
///
/// `Threshold::Infinite` means the whole space fits. This is a finite-sample
/// diagnostic of strong 0-dimensionality at `(x, r)`, not a decision about
/// any ambient space.
pub fn zero_dim_profile<T: Scalar>(d: &DistMatrix<T>, x: &str, r: &T) -> Result<Option<Threshold<T>>> {
    if *r <= T::zero() {
        return Err(Error::InvalidArgument(format!("radius {r} must be positive")));
    }
    let i = d.index_of(x)?;
    let ball = d.ball_indices(i, r, false);
    let thresholds = critical_thresholds(d);
    let mut best = None;
    // On (t_k, t_{k+1}] the partition equals the one at t_{k+1}.
    let uppers = thresholds
        .iter()
        .map(|t| Threshold::Finite(t.clone()))
        .chain(std::iter::once(Threshold::Infinite));
    for upper in uppers {
        let component: Vec<usize> = match &upper {
            Threshold::Finite(t) => eta_partition(d, t).block_of(i).to_vec(),
            Threshold::Infinite => (0..d.len()).collect(),
        };
        if !component.iter().all(|j| ball.contains(j)) {
            break;
        }
        if let Threshold::Finite(t) = &upper {
            let rest: Vec<usize> = (0..d.len()).filter(|j| !component.contains(j)).collect();
            debug_assert!(is_eta_separated(d, &component, &rest, t)?);
        }
        best = Some(upper);
    }
    Ok(best)
}

/// `h(t)`: the smallest integer power of `base` that is `>= t`, with `h(0) = 0`.
pub fn quantize_value<T: Scalar>(t: &T, base: &T) -> T {
    if *t <= T::zero() {
        return T::zero();
    }
    let mut p = T::one();
    if *t > p {
        while p < *t {
            p = p * base.clone();
        }
    } else {
        loop {
            let next = p.clone() / base.clone();
            if next < *t {
                break;
            }
            p = next;
        }
    }
    p
}

/// Applies `h` entrywise to an ultrametric; the result is again an ultrametric.
pub fn quantize_metric<T: Scalar>(d: &DistMatrix<T>, base: &Rational) -> Result<DistMatrix<T>> {
    if *base <= Rational::from_integer(1.into()) {
        return Err(Error::InvalidArgument(format!("base {base} must exceed 1")));
    }
    let violations = d.verify_ultrametric().len();
    if violations > 0 {
        return Err(Error::NotUltrametric(violations));
    }
    let b = T::from_rational(base);
    Ok(d.map_entries(|i, j| quantize_value(d.get(i, j), &b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_frac, from_i64};

    fn line(points: &[i64]) -> DistMatrix<Rational> {
        let labels = points.iter().map(|p| p.to_string()).collect();
        DistMatrix::from_fn(labels, |i, j| from_i64((points[i] - points[j]).abs())).unwrap()
    }

    fn equilateral(n: usize) -> DistMatrix<Rational> {
        DistMatrix::from_fn((0..n).map(|i| format!("p{i}")).collect(), |_, _| from_i64(1)).unwrap()
    }

    #[test]
    fn partition_examples() {
        let l = line(&[0, 1, 2, 10]);
        assert_eq!(eta_partition(&l, &from_frac(3, 2)).blocks(), [vec![0, 1, 2], vec![3]]);
        assert_eq!(eta_partition(&l, &from_i64(1)).len(), 4);
        assert_eq!(eta_partition(&l, &from_i64(11)).len(), 1);
        assert_eq!(eta_partition(&l, &from_frac(3, 2)).to_text(&l), "0 1 2\n10\n");
    }

    #[test]
    fn separation_examples() {
        let l = line(&[0, 1, 2, 10]);
        assert_eq!(is_eta_separated(&l, &[0, 1, 2], &[3], &from_i64(8)), Ok(true));
        assert_eq!(is_eta_separated(&l, &[0, 1, 2], &[3], &from_i64(9)), Ok(false));
        assert_eq!(is_eta_separated(&l, &[0, 1, 2], &[], &from_i64(9)), Ok(true));
        assert!(matches!(is_eta_separated(&l, &[0, 1], &[1], &from_i64(1)), Err(Error::Overlap(_))));
    }

    #[test]
    fn connectivity_examples() {
        let l = line(&[0, 1, 2, 10]);
        assert!(is_eta_connected(&l, &[0, 1, 2], &from_frac(3, 2)));
        assert!(!is_eta_connected(&l, &[0, 3], &from_frac(3, 2)));
        assert!(is_eta_connected(&l, &[3], &from_frac(1, 100)));
        // Connectivity of a subset uses only chains inside it.
        assert!(!is_eta_connected(&l, &[0, 2], &from_frac(3, 2)));
    }

    #[test]
    fn subdominant_examples() {
        let l = line(&[0, 1, 2, 10]);
        let u = subdominant_ultrametric(&l);
        assert_eq!(*u.get(0, 2), from_i64(1));
        assert_eq!(*u.get(0, 3), from_i64(8));
        assert!(u.is_ultrametric());
        let e = equilateral(4);
        assert_eq!(subdominant_ultrametric(&e), e);
        let two = line(&[3, 8]);
        assert_eq!(subdominant_ultrametric(&two), two);
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(critical_thresholds(&line(&[0, 1, 2, 10])), vec![from_i64(1), from_i64(8)]);
        assert!(critical_thresholds(&line(&[5])).is_empty());
        assert_eq!(critical_thresholds(&equilateral(3)), vec![from_i64(1)]);
    }

    #[test]
    fn a_length_examples() {
        let l = line(&[0, 1, 2]);
        let c = Chain::parse("0,1,2").unwrap();
        let one = chain_a_length(&l, &c, &Exponent::one()).unwrap();
        assert_eq!(one.exact, Some(from_i64(2)));
        let inf = chain_a_length(&l, &c, &Exponent::Infinite).unwrap();
        assert_eq!(inf.exact, Some(from_i64(1)));
        let single = chain_a_length(&l, &Chain::parse("1").unwrap(), &Exponent::Finite(from_frac(1, 3))).unwrap();
        assert_eq!(single.exact, Some(from_i64(0)));
        let half = chain_a_length(&l, &c, &Exponent::Finite(from_frac(1, 2))).unwrap();
        assert_eq!(half.exact, Some(from_i64(4)));
        let two = chain_a_length(&l, &c, &Exponent::Finite(from_i64(2))).unwrap();
        assert_eq!(two.exact, None);
        assert!((two.approx - 2f64.sqrt()).abs() < 1e-12);
        assert!(chain_a_length(&l, &Chain::parse("0,9").unwrap(), &Exponent::one()).is_err());
    }

    #[test]
    fn min_a_length_examples() {
        let l = line(&[0, 1, 2]);
        let (len, chain) = min_a_length(&l, "0", "2", &from_i64(1)).unwrap();
        assert_eq!(len.exact, Some(from_i64(2)));
        assert_eq!(chain.to_string(), "0,2");
        let (len, chain) = min_a_length(&l, "0", "2", &from_i64(2)).unwrap();
        assert_eq!(chain.to_string(), "0,1,2");
        assert!((len.approx - 2f64.sqrt()).abs() < 1e-12);
        let (len, chain) = min_a_length(&l, "1", "1", &from_i64(3)).unwrap();
        assert_eq!(len.exact, Some(from_i64(0)));
        assert_eq!(chain.to_string(), "1");
        // Large a approaches the minimax step.
        let w = line(&[0, 1, 2, 10]);
        let u = subdominant_ultrametric(&w);
        let (len, _) = min_a_length(&w, "0", "10", &from_i64(64)).unwrap();
        assert!((len.approx - u.get(0, 3).to_f64()).abs() / 8.0 < 0.05);
    }

    #[test]
    fn lexicographic_tie_break() {
        // Square with unit sides: 0-1-3 and 0-2-3 cost the same with the same hops.
        let d = DistMatrix::from_rows(vec![
            vec![from_i64(0), from_i64(1), from_i64(1), from_i64(4)],
            vec![from_i64(1), from_i64(0), from_i64(4), from_i64(1)],
            vec![from_i64(1), from_i64(4), from_i64(0), from_i64(1)],
            vec![from_i64(4), from_i64(1), from_i64(1), from_i64(0)],
        ])
        .unwrap();
        let (_, chain) = min_a_length(&d, "0", "3", &from_i64(1)).unwrap();
        assert_eq!(chain.to_string(), "0,1,3");
    }

    #[test]
    fn profile_examples() {
        let l = line(&[0, 1, 2, 10]);
        assert_eq!(zero_dim_profile(&l, "0", &from_i64(5)).unwrap(), Some(Threshold::Finite(from_i64(8))));
        let two = line(&[0, 1]);
        assert_eq!(
            zero_dim_profile(&two, "0", &from_frac(1, 2)).unwrap(),
            Some(Threshold::Finite(from_i64(1)))
        );
        assert_eq!(zero_dim_profile(&l, "0", &from_i64(11)).unwrap(), Some(Threshold::Infinite));
        assert!(zero_dim_profile(&l, "0", &from_i64(0)).is_err());
    }

    #[test]
    fn quantize_examples() {
        let two = from_i64(2);
        assert_eq!(quantize_value(&from_frac(3, 10), &two), from_frac(1, 2));
        assert_eq!(quantize_value(&from_i64(1), &two), from_i64(1));
        assert_eq!(quantize_value(&from_i64(0), &two), from_i64(0));
        assert_eq!(quantize_value(&from_i64(5), &two), from_i64(8));
        assert_eq!(quantize_value(&0.3f64, &2.0), 0.5);
        assert!(matches!(quantize_metric(&line(&[0, 1, 2]), &two), Err(Error::NotUltrametric(_))));
        let q = quantize_metric(&subdominant_ultrametric(&line(&[0, 3, 4, 11])), &two).unwrap();
        assert!(q.is_ultrametric());
        assert_eq!(*q.get(0, 1), from_i64(4));
    }

    #[test]
    fn partition_text_round_trip() {
        let l = line(&[0, 1, 2, 10]);
        let p = eta_partition(&l, &from_frac(3, 2));
        let back = Partition::parse(&p.to_text(&l), &l, from_frac(3, 2)).unwrap();
        assert_eq!(back, p);
        assert!(Partition::parse("0 1\n2\n", &l, from_i64(1)).is_err());
    }

    #[test]
    fn generic_over_floats() {
        let d = DistMatrix::<f64>::from_rows(vec![
            vec![0.0, 1.0, 2.0, 10.0],
            vec![1.0, 0.0, 1.0, 9.0],
            vec![2.0, 1.0, 0.0, 8.0],
            vec![10.0, 9.0, 8.0, 0.0],
        ])
        .unwrap();
        assert_eq!(eta_partition(&d, &1.5).len(), 2);
        assert_eq!(*subdominant_ultrametric(&d).get(0, 3), 8.0);
        let f32m = DistMatrix::<f32>::from_rows(vec![vec![0.0, 2.5], vec![2.5, 0.0]]).unwrap();
        assert_eq!(critical_thresholds(&f32m), vec![2.5f32]);
    }
}
