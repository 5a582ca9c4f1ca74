#![allow(dead_code)]

use chipfire::catalog;
use chipfire::{Divisor, Multigraph, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected multigraph on `1..=max_n` vertices with multiplicities <= `max_mult`.
pub fn multigraph(max_n: usize, max_mult: u32) -> impl Strategy<Value = Multigraph> {
    (1..=max_n, 0..=max_n, any::<u64>()).prop_map(move |(n, extra, seed)| {
        catalog::random_connected_multigraph(&mut rng(seed), n, extra, max_mult)
    })
}

pub fn divisor_on<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Divisor {
    Divisor::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// A non-empty proper subset, or `None` on a single vertex.
pub fn proper_subset<R: Rng>(rng: &mut R, n: usize) -> Option<VertexSet> {
    if n < 2 {
        return None;
    }
    loop {
        let set = VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(0.5))).unwrap();
        if set.is_proper_nonempty() {
            return Some(set);
        }
    }
}

/// Applies `steps` random set firings; the result is equivalent to `d`.
pub fn scramble<R: Rng>(rng: &mut R, g: &Multigraph, d: &Divisor, steps: usize) -> Divisor {
    let mut d = d.clone();
    for _ in 0..steps {
        if let Some(set) = proper_subset(rng, g.vertex_count()) {
            d = d.fire_set(g, &set).unwrap();
        }
    }
    d
}

/// Fraction-free determinant.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `a ~ b` iff `a - b` is an integer combination of Laplacian columns:
/// with vertex 0 dropped the reduced Laplacian is invertible, so this is
/// integrality of the Cramer solution.
pub fn equivalent_by_linear_algebra(g: &Multigraph, a: &Divisor, b: &Divisor) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let n = g.vertex_count();
    let lap = g.laplacian();
    let reduced: Vec<Vec<i128>> = (1..n)
        .map(|i| (1..n).map(|j| lap[i][j] as i128).collect())
        .collect();
    let det = bareiss_det(reduced.clone());
    assert_ne!(det, 0);
    let rhs: Vec<i128> = (1..n).map(|i| (a[i] - b[i]) as i128).collect();
    (0..n - 1).all(|col| {
        let mut m = reduced.clone();
        for (row, value) in m.iter_mut().zip(&rhs) {
            row[col] = *value;
        }
        bareiss_det(m) % det == 0
    })
}
