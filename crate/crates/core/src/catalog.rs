//! Graph collections for exhaustive and randomized checks: all connected
//! simple graphs on few vertices up to isomorphism, seeded random
//! multigraphs, and a handful of small cubic graphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::families;
use crate::graph::Multigraph;

/// Largest order supported by [`connected_simple_graphs`].
pub const MAX_CATALOG_ORDER: usize = 8;

/// Adjacency rows as bitmasks.
type Rows = Vec<u16>;

fn canonical_key(rows: &Rows) -> u64 {
    let n = rows.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| rows[v].count_ones());
    let degree = |v: usize| rows[v].count_ones();
    // class boundaries in `order`
    let mut classes = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || degree(order[i]) != degree(order[start]) {
            classes.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_classes(&mut order, &classes, 0, &mut |perm| {
        let mut key = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[perm[i]] >> perm[j] & 1 == 1 {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(key);
    });
    best
}

/// Visits every arrangement of `order` that permutes entries only within
/// each class range.
fn permute_classes(
    order: &mut Vec<usize>,
    classes: &[(usize, usize)],
    class: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if class == classes.len() {
        visit(order);
        return;
    }
    let (lo, hi) = classes[class];
    heap_permute(order, lo, hi - lo, &mut |o| {
        permute_classes(o, classes, class + 1, visit)
    });
}

fn heap_permute(
    order: &mut Vec<usize>,
    lo: usize,
    k: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if k <= 1 {
        visit(order);
        return;
    }
    for i in 0..k {
        heap_permute(order, lo, k - 1, visit);
        if i + 1 == k {
            break;
        }
        if k % 2 == 0 {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
}

fn rows_to_graph(rows: &Rows) -> Multigraph {
    let n = rows.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rows[u] >> v & 1 == 1 {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("catalog graphs are connected")
}

/// Every connected simple graph on `n` vertices, one per isomorphism
/// class, for `1 <= n <= MAX_CATALOG_ORDER`.
pub fn connected_simple_graphs(n: usize) -> Vec<Multigraph> {
    assert!(
        (1..=MAX_CATALOG_ORDER).contains(&n),
        "catalog order must be in 1..={MAX_CATALOG_ORDER}"
    );
    let mut level: Vec<Rows> = vec![vec![0]];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for rows in &level {
            for nbhd in 1u16..(1 << (k - 1)) {
                let mut ext = rows.clone();
                for (v, row) in ext.iter_mut().enumerate() {
                    if nbhd >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                ext.push(nbhd);
                if seen.insert(canonical_key(&ext)) {
                    next.push(ext);
                }
            }
        }
        level = next;
    }
    level.iter().map(rows_to_graph).collect()
}

/// Random spanning tree plus `extra` random edges, multiplicities drawn
/// from `1..=max_mult`.
pub fn random_connected_multigraph<R: Rng>(
    rng: &mut R,
    n: usize,
    extra: usize,
    max_mult: u32,
) -> Multigraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent, order[i], rng.gen_range(1..=max_mult)));
    }
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            edges.push((u, v, rng.gen_range(1..=max_mult)));
        }
    }
    Multigraph::from_edges(n, &edges).expect("spanning tree keeps it connected")
}

/// Random connected simple graph: a spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_simple<R: Rng>(rng: &mut R, n: usize, p: f64) -> Multigraph {
    let tree = random_connected_multigraph(rng, n, 0, 1);
    let mut edges: Vec<_> = tree.edges().collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if tree.multiplicity(u, v) == 0 && rng.gen_bool(p) {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::from_edges(n, &edges).expect("spanning tree keeps it connected")
}

/// Random connected multigraph whose every edge has multiplicity >= 2.
pub fn random_all_multiedge<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Multigraph {
    let g = random_connected_multigraph(rng, n, extra, 3);
    let edges: Vec<_> = g.edges().map(|(u, v, m)| (u, v, m.max(2))).collect();
    Multigraph::from_edges(n, &edges).expect("same support as a connected graph")
}

/// `K_4`, `K_{3,3}`, the triangular prism, the cube and the Petersen graph.
pub fn small_cubic_graphs() -> Vec<Multigraph> {
    let k2 = families::complete(2).expect("valid");
    let prism = families::cycle(3)
        .and_then(|c| c.cartesian_product(&k2))
        .expect("valid");
    let cube = families::cycle(4)
        .and_then(|c| c.cartesian_product(&k2))
        .expect("valid");
    let mut petersen = Vec::new();
    for i in 0..5 {
        petersen.push((i, (i + 1) % 5, 1));
        petersen.push((i, i + 5, 1));
        petersen.push((i + 5, (i + 2) % 5 + 5, 1));
    }
    vec![
        families::complete(4).expect("valid"),
        families::complete_multipartite(&[3, 3]).expect("valid"),
        prism,
        cube,
        Multigraph::from_edges(10, &petersen).expect("valid"),
    ]
}

/// Integer partitions of `n` into at least two parts, parts non-increasing.
pub fn partitions_into_parts(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
