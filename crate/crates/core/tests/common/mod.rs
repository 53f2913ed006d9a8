#![allow(dead_code)]

use nonarch::measure::{FAMeasure, IntervalSet, SimpleFn};
use nonarch::rational::from_frac;
use nonarch::{DistMatrix, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    from_frac(n, d)
}

/// A positive rational `a / b` with `1 <= a <= num_max`, `1 <= b <= den_max`.
pub fn positive(r: &mut impl Rng, num_max: i64, den_max: i64) -> Rational {
    q(r.gen_range(1..=num_max), r.gen_range(1..=den_max))
}

pub fn signed(r: &mut impl Rng, num_max: i64, den_max: i64) -> Rational {
    q(r.gen_range(-num_max..=num_max), r.gen_range(1..=den_max))
}

/// A symmetric matrix of positive rationals, not necessarily a metric.
pub fn random_matrix(r: &mut impl Rng, n: usize) -> DistMatrix<Rational> {
    let mut rows = vec![vec![Rational::from_integer(0.into()); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = positive(r, 30, 4);
            rows[i][j] = x.clone();
            rows[j][i] = x;
        }
    }
    DistMatrix::from_rows(rows).expect("valid matrix")
}

/// Endpoints on the grid `k / den` in `[0, 1]`.
pub fn random_set(r: &mut impl Rng, den: i64) -> IntervalSet {
    let k = r.gen_range(0..=4);
    let v = (0..k)
        .map(|_| {
            let a = r.gen_range(0..den);
            let b = r.gen_range(a..=den);
            (q(a, den), q(b, den))
        })
        .collect();
    IntervalSet::from_intervals(v).expect("grid intervals")
}

/// A continuous piecewise-linear distribution function, sometimes with flat stretches.
pub fn random_measure(r: &mut impl Rng) -> FAMeasure {
    if r.gen_bool(0.3) {
        return FAMeasure::lebesgue();
    }
    let k = r.gen_range(1..=4);
    let mut ts: Vec<i64> = (0..k).map(|_| r.gen_range(1..12)).collect();
    ts.sort();
    ts.dedup();
    let mut points = vec![(q(0, 1), q(0, 1))];
    let mut f = q(0, 1);
    for t in ts.into_iter().map(|t| q(t, 12)).chain(std::iter::once(q(1, 1))) {
        if r.gen_bool(0.75) {
            f += positive(r, 5, 4);
        }
        points.push((t, f.clone()));
    }
    FAMeasure::new(points).expect("nondecreasing")
}

/// A real simple function with values `v` of dimension `dim`.
pub fn random_simple(r: &mut impl Rng, dim: usize, nonnegative: bool) -> SimpleFn {
    let den = 12;
    let mut cuts: Vec<i64> = (0..r.gen_range(1..=5)).map(|_| r.gen_range(1..den)).collect();
    cuts.push(0);
    cuts.push(den);
    cuts.sort();
    cuts.dedup();
    let pieces = cuts
        .windows(2)
        .map(|w| {
            let v = (0..dim)
                .map(|_| {
                    if r.gen_bool(0.2) {
                        q(0, 1)
                    } else if nonnegative {
                        positive(r, 9, 3)
                    } else {
                        signed(r, 9, 3)
                    }
                })
                .collect();
            (IntervalSet::interval(q(w[0], den), q(w[1], den)).unwrap(), v)
        })
        .collect();
    SimpleFn::new(dim, pieces).expect("disjoint pieces")
}
