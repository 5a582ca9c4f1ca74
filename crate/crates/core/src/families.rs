//! Constructors for the named graph families, plus the explicit divisors
//! used to certify their gonality upper bounds.

use std::fmt;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParams(msg.into()))
}

fn labelled(g: Multigraph, labels: Vec<String>) -> Result<Multigraph> {
    g.with_labels(labels)
}

pub fn path(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return invalid("path needs at least one vertex");
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v, 1)).collect();
    Multigraph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return invalid("cycle needs at least 3 vertices");
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n, 1)).collect();
    Multigraph::from_edges(n, &edges)
}

/// Tree where vertex `k + 1` hangs off `parents[k]`, which must be `<= k`.
pub fn tree(parents: &[usize]) -> Result<Multigraph> {
    let mut edges = Vec::with_capacity(parents.len());
    for (k, &p) in parents.iter().enumerate() {
        if p > k {
            return invalid(format!("parent {p} of vertex {} must precede it", k + 1));
        }
        edges.push((p, k + 1, 1));
    }
    Multigraph::from_edges(parents.len() + 1, &edges)
}

pub fn complete(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return invalid("complete graph needs at least one vertex");
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v, 1));
        }
    }
    Multigraph::from_edges(n, &edges)
}

/// `K_{n_1, .., n_l}`; parts are consecutive index blocks.
pub fn complete_multipartite(parts: &[usize]) -> Result<Multigraph> {
    if parts.len() < 2 || parts.contains(&0) {
        return invalid("complete multipartite needs at least two non-empty parts");
    }
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::from_edges(n, &edges)
}

/// Path on `vertices` vertices with `multiplicity` parallel edges per step.
pub fn multipath(vertices: usize, multiplicity: u32) -> Result<Multigraph> {
    if vertices < 2 || multiplicity == 0 {
        return invalid("multipath needs at least 2 vertices and multiplicity >= 1");
    }
    let edges: Vec<_> = (1..vertices).map(|v| (v - 1, v, multiplicity)).collect();
    Multigraph::from_edges(vertices, &edges)
}

fn ladder_labels(m: usize) -> Vec<String> {
    (1..=m)
        .map(|i| format!("u{i}"))
        .chain((1..=m).map(|i| format!("v{i}")))
        .collect()
}

fn slashed_ladder_edges(m: usize) -> Vec<(usize, usize, u32)> {
    let u = |i: usize| i;
    let v = |i: usize| m + i;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((u(i), v(i), 1));
        if i + 1 < m {
            edges.push((u(i), u(i + 1), 1));
            edges.push((v(i), v(i + 1), 1));
            if i % 2 == 0 {
                edges.push((u(i), v(i + 1), 1));
            } else {
                edges.push((v(i), u(i + 1), 1));
            }
        }
    }
    edges
}

/// The 2×m slashed ladder. `u_i` has index `i - 1` and `v_i` index
/// `m + i - 1`; rails, rungs, and one diagonal per cell. The diagonals
/// zigzag: `u_1 v_2`, `v_2 u_3`, `u_3 v_4`, ...
///
/// The orientation is forced by the firing arithmetic on `2(u_1) + (v_1)`:
/// firing `{v_1}` must give `3(u_1) - (v_1) + (v_2)`, so `val(v_1) = 2`, and
/// firing `{u_1}` next must give `(u_2) + 2(v_2)`, so the first diagonal is
/// `u_1 v_2`. The class must also contain `2(u_3) + (v_3)`, which by the
/// same arithmetic with `u` and `v` swapped makes the second one `v_2 u_3`.
pub fn slashed_ladder(m: usize) -> Result<Multigraph> {
    if m < 2 {
        return invalid("slashed ladder needs m >= 2");
    }
    labelled(
        Multigraph::from_edges(2 * m, &slashed_ladder_edges(m))?,
        ladder_labels(m),
    )
}

/// `KL_{m,n}`: the slashed ladder with `K_n` glued on so that column `m`
/// (`u_m`, `v_m`) lies inside the clique. The extra clique vertices
/// `w_1 .. w_{n-2}` take indices `2m ..`.
pub fn complete_slashed_ladder(m: usize, n: usize) -> Result<Multigraph> {
    if m < 2 || n < 3 {
        return invalid("complete slashed ladder needs m >= 2 and n >= 3");
    }
    let total = 2 * m + n - 2;
    let mut edges = slashed_ladder_edges(m);
    let mut clique = vec![m - 1, 2 * m - 1];
    clique.extend(2 * m..total);
    for (a, &x) in clique.iter().enumerate() {
        for &y in &clique[a + 1..] {
            // u_m v_m is already a rung
            if !(x == m - 1 && y == 2 * m - 1) {
                edges.push((x, y, 1));
            }
        }
    }
    let mut labels = ladder_labels(m);
    labels.extend((1..=n - 2).map(|i| format!("w{i}")));
    labelled(Multigraph::from_edges(total, &edges)?, labels)
}

/// Antiprism on two n-cycles `u` (indices `0..n`) and `v` (`n..2n`), with
/// `u_i` joined to `v_i` and `v_{i+1}`; the augmented variant also joins
/// `u_i` to `v_{i-1}`.
pub fn antiprism(n: usize, augmented: bool) -> Result<Multigraph> {
    if n < 3 {
        return invalid("antiprism needs n >= 3");
    }
    let u = |i: usize| i % n;
    let v = |i: usize| n + i % n;
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((u(i), u(i + 1), 1));
        edges.push((v(i), v(i + 1), 1));
        edges.push((u(i), v(i), 1));
        edges.push((u(i), v(i + 1), 1));
        if augmented {
            edges.push((u(i), v(i + n - 1), 1));
        }
    }
    let g = Multigraph::from_edges(2 * n, &edges)?;
    if !g.is_simple() {
        return invalid("antiprism parameters produce parallel edges");
    }
    labelled(g, ladder_labels(n))
}

/// `W_n`: hub at index 0, rim `1..=n` in cyclic order.
pub fn wheel(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return invalid("wheel needs n >= 3");
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((0, i, 1));
        edges.push((i, i % n + 1, 1));
    }
    let mut labels = vec!["w".to_string()];
    labels.extend((1..=n).map(|i| format!("v{i}")));
    labelled(Multigraph::from_edges(n + 1, &edges)?, labels)
}

/// `K_{n_1} □ .. □ K_{n_l}`, vertices in mixed-radix order with the first
/// factor most significant.
pub fn rook(dims: &[usize]) -> Result<Multigraph> {
    if dims.is_empty() || dims.iter().any(|&d| d < 2) {
        return invalid("rook's graph needs at least one factor, each of size >= 2");
    }
    let mut g = complete(dims[0])?;
    for &d in &dims[1..] {
        g = g.cartesian_product(&complete(d)?)?;
    }
    Ok(g)
}

/// r-regular multigraph on a cycle. Even `r`: `C_{r+1}` with every edge of
/// multiplicity `r/2`. Odd `r = 2s+1`: `C_{2s(s+1)+2}` whose edge
/// `(i, i+1)` has multiplicity `s` for even `i` and `s + 1` for odd `i`.
pub fn regular_gap_multi(r: usize) -> Result<Multigraph> {
    if r < 4 {
        return invalid("regular gap multigraph needs r >= 4");
    }
    let (n, mult): (usize, Box<dyn Fn(usize) -> u32>) = if r % 2 == 0 {
        (r + 1, Box::new(move |_| (r / 2) as u32))
    } else {
        let s = (r - 1) / 2;
        (
            2 * s * (s + 1) + 2,
            Box::new(move |i| if i % 2 == 0 { s as u32 } else { s as u32 + 1 }),
        )
    };
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, mult(i))).collect();
    Multigraph::from_edges(n, &edges)
}

/// Smallest admissible number of clique copies: `N(r - 4) > 4r - 3`.
pub fn regular_gap_simple_default_copies(r: usize) -> usize {
    (4 * r - 3) / (r - 4) + 1
}

/// Simple r-regular graph built from `copies` cliques `K_{r-3}` arranged in
/// a cycle; vertex `j` of copy `i` (index `i(r-3) + j`) is joined to
/// vertices `j` and `j+1` of copy `i+1`.
pub fn regular_gap_simple(r: usize, copies: Option<usize>) -> Result<Multigraph> {
    if r < 6 {
        return invalid("regular gap simple graph needs r >= 6");
    }
    let copies = copies.unwrap_or_else(|| regular_gap_simple_default_copies(r));
    if copies * (r - 4) <= 4 * r - 3 {
        return invalid(format!("{copies} copies are too few for r = {r}"));
    }
    let k = r - 3;
    let idx = |i: usize, j: usize| (i % copies) * k + j % k;
    let mut edges = Vec::new();
    for i in 0..copies {
        for a in 0..k {
            for b in (a + 1)..k {
                edges.push((idx(i, a), idx(i, b), 1));
            }
            edges.push((idx(i, a), idx(i + 1, a), 1));
            edges.push((idx(i, a), idx(i + 1, a + 1), 1));
        }
    }
    let labels = (0..copies)
        .flat_map(|i| (1..=k).map(move |j| format!("v{j}^{}", i + 1)))
        .collect();
    labelled(Multigraph::from_edges(copies * k, &edges)?, labels)
}

/// Family name plus parameters, buildable into a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Tree(Vec<usize>),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Multipath { vertices: usize, multiplicity: u32 },
    SlashedLadder(usize),
    CompleteSlashedLadder { m: usize, n: usize },
    Antiprism(usize),
    AugmentedAntiprism(usize),
    Wheel(usize),
    Rook(Vec<usize>),
    RegularGapMulti(usize),
    RegularGapSimple { r: usize, copies: Option<usize> },
    Cone { base: Box<FamilySpec>, apexes: usize },
}

pub const FAMILY_KINDS: &[&str] = &[
    "path",
    "cycle",
    "tree",
    "complete",
    "complete_multipartite",
    "multipath",
    "slashed_ladder",
    "complete_slashed_ladder",
    "antiprism",
    "augmented_antiprism",
    "wheel",
    "rook",
    "regular_gap_multi",
    "regular_gap_simple",
    "cone",
];

impl FamilySpec {
    /// Parses `kind` with its parameter list. `cone` takes the number of
    /// apexes followed by a nested kind and its parameters.
    pub fn parse(kind: &str, params: &[&str]) -> Result<Self> {
        let ints = |xs: &[&str]| -> Result<Vec<usize>> {
            xs.iter()
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        Error::InvalidParams(format!("expected a non-negative integer, got {s:?}"))
                    })
                })
                .collect()
        };
        let exactly = |xs: &[&str], count: usize| -> Result<Vec<usize>> {
            let v = ints(xs)?;
            if v.len() != count {
                return invalid(format!("{kind} takes {count} parameter(s), got {}", v.len()));
            }
            Ok(v)
        };
        let spec = match kind {
            "path" => FamilySpec::Path(exactly(params, 1)?[0]),
            "cycle" => FamilySpec::Cycle(exactly(params, 1)?[0]),
            "tree" => FamilySpec::Tree(ints(params)?),
            "complete" => FamilySpec::Complete(exactly(params, 1)?[0]),
            "complete_multipartite" => FamilySpec::CompleteMultipartite(ints(params)?),
            "multipath" => {
                let p = exactly(params, 2)?;
                FamilySpec::Multipath {
                    vertices: p[0],
                    multiplicity: p[1] as u32,
                }
            }
            "slashed_ladder" => FamilySpec::SlashedLadder(exactly(params, 1)?[0]),
            "complete_slashed_ladder" => {
                let p = exactly(params, 2)?;
                FamilySpec::CompleteSlashedLadder { m: p[0], n: p[1] }
            }
            "antiprism" => FamilySpec::Antiprism(exactly(params, 1)?[0]),
            "augmented_antiprism" => FamilySpec::AugmentedAntiprism(exactly(params, 1)?[0]),
            "wheel" => FamilySpec::Wheel(exactly(params, 1)?[0]),
            "rook" => FamilySpec::Rook(ints(params)?),
            "regular_gap_multi" => FamilySpec::RegularGapMulti(exactly(params, 1)?[0]),
            "regular_gap_simple" => {
                let p = ints(params)?;
                match p.as_slice() {
                    [r] => FamilySpec::RegularGapSimple { r: *r, copies: None },
                    [r, c] => FamilySpec::RegularGapSimple {
                        r: *r,
                        copies: Some(*c),
                    },
                    _ => return invalid("regular_gap_simple takes r and an optional copy count"),
                }
            }
            "cone" => {
                let (k, rest) = params
                    .split_first()
                    .ok_or_else(|| Error::InvalidParams("cone needs an apex count".into()))?;
                let (base_kind, base_params) = rest
                    .split_first()
                    .ok_or_else(|| Error::InvalidParams("cone needs a base family".into()))?;
                FamilySpec::Cone {
                    apexes: exactly(&[k], 1)?[0],
                    base: Box::new(FamilySpec::parse(base_kind, base_params)?),
                }
            }
            other => return invalid(format!("unknown family {other:?}")),
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<Multigraph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Tree(p) => tree(p),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteMultipartite(p) => complete_multipartite(p),
            FamilySpec::Multipath {
                vertices,
                multiplicity,
            } => multipath(*vertices, *multiplicity),
            FamilySpec::SlashedLadder(m) => slashed_ladder(*m),
            FamilySpec::CompleteSlashedLadder { m, n } => complete_slashed_ladder(*m, *n),
            FamilySpec::Antiprism(n) => antiprism(*n, false),
            FamilySpec::AugmentedAntiprism(n) => antiprism(*n, true),
            FamilySpec::Wheel(n) => wheel(*n),
            FamilySpec::Rook(d) => rook(d),
            FamilySpec::RegularGapMulti(r) => regular_gap_multi(*r),
            FamilySpec::RegularGapSimple { r, copies } => regular_gap_simple(*r, *copies),
            FamilySpec::Cone { base, apexes } => base.build()?.cone(*apexes),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Tree(p) => write!(f, "tree {}", join(p)),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::CompleteMultipartite(p) => write!(f, "complete_multipartite {}", join(p)),
            FamilySpec::Multipath {
                vertices,
                multiplicity,
            } => write!(f, "multipath {vertices} {multiplicity}"),
            FamilySpec::SlashedLadder(m) => write!(f, "slashed_ladder {m}"),
            FamilySpec::CompleteSlashedLadder { m, n } => {
                write!(f, "complete_slashed_ladder {m} {n}")
            }
            FamilySpec::Antiprism(n) => write!(f, "antiprism {n}"),
            FamilySpec::AugmentedAntiprism(n) => write!(f, "augmented_antiprism {n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel {n}"),
            FamilySpec::Rook(d) => write!(f, "rook {}", join(d)),
            FamilySpec::RegularGapMulti(r) => write!(f, "regular_gap_multi {r}"),
            FamilySpec::RegularGapSimple { r, copies: None } => write!(f, "regular_gap_simple {r}"),
            FamilySpec::RegularGapSimple {
                r,
                copies: Some(c),
            } => write!(f, "regular_gap_simple {r} {c}"),
            FamilySpec::Cone { base, apexes } => write!(f, "cone {apexes} {base}"),
        }
    }
}

/// Explicit divisors that certify upper bounds on gonality.
pub mod witnesses {
    use super::*;

    /// `2(u_1) + (v_1)` on the 2×m slashed ladder.
    pub fn slashed_ladder(m: usize) -> Divisor {
        let mut d = Divisor::zero(2 * m);
        d.add_chips(0, 2);
        d.add_chips(m, 1);
        d
    }

    /// Degree-n divisor on `KL_{m,n}`: `2(u_1) + (v_1)` plus one chip on
    /// each clique-only vertex except the last.
    pub fn complete_slashed_ladder(m: usize, n: usize) -> Divisor {
        let mut d = Divisor::zero(2 * m + n - 2);
        d.add_chips(0, 2);
        d.add_chips(m, 1);
        for w in 0..n - 3 {
            d.add_chips(2 * m + w, 1);
        }
        d
    }

    /// `3(u_1)+(u_2)+(u_3)+(v_1)+(v_2)+3(v_3)` on the antiprism over 11-cycles.
    pub fn antiprism_11() -> Divisor {
        let mut d = Divisor::zero(22);
        for (v, k) in [(0, 3), (1, 1), (2, 1), (11, 1), (12, 1), (13, 3)] {
            d.add_chips(v, k);
        }
        d
    }

    /// `4(u_1) + 4(v_1)`, a degree-8 positive-rank divisor on the augmented
    /// antiprism over 9-cycles.
    pub fn augmented_antiprism_9() -> Divisor {
        let mut d = Divisor::point(18, 0, 4);
        d.add_chips(9, 4);
        d
    }

    /// `ceil(sqrt n) - 1` chips on the hub and one chip every
    /// `ceil(sqrt n)` rim vertices.
    pub fn wheel(n: usize) -> Divisor {
        let s = crate::formulas::ceil_sqrt(n as u64) as usize;
        let mut d = Divisor::zero(n + 1);
        d.add_chips(0, s as i64 - 1);
        for rim in (0..n).step_by(s) {
            d.add_chips(rim + 1, 1);
        }
        d
    }

    /// One chip on every vertex whose first coordinate is nonzero.
    pub fn rook_mf(dims: &[usize]) -> Divisor {
        let block: usize = dims[1..].iter().product();
        let n = block * dims[0];
        let mut d = Divisor::zero(n);
        for v in block..n {
            d.add_chips(v, 1);
        }
        d
    }

    /// `r(v_0)` for even `r`; `s(s+1)` chips on each end of an
    /// `s`-multiplicity edge for odd `r = 2s+1`.
    pub fn regular_gap_multi(r: usize) -> Divisor {
        if r % 2 == 0 {
            Divisor::point(r + 1, 0, r as i64)
        } else {
            let s = (r - 1) / 2;
            let n = 2 * s * (s + 1) + 2;
            let k = (s * (s + 1)) as i64;
            let mut d = Divisor::point(n, 0, k);
            d.add_chips(1, k);
            d
        }
    }

    /// Four chips on every vertex of the first clique copy.
    pub fn regular_gap_simple(r: usize, copies: usize) -> Divisor {
        let k = r - 3;
        let mut d = Divisor::zero(copies * k);
        for j in 0..k {
            d.add_chips(j, 4);
        }
        d
    }

    /// Chips on the complement of a maximum independent set.
    pub fn independent_complement(g: &Multigraph) -> Divisor {
        let n = g.vertex_count();
        let mut d = Divisor::ones(n);
        for v in g.maximum_independent_set() {
            d.add_chips(v, -1);
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slashed_ladder_shape() {
        let g = slashed_ladder(4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.genus(), 6);
        assert_eq!(g.valence(4), 2); // v_1
        assert_eq!(g.valence(0), 3); // u_1
        assert_eq!(g.label(5), "v2");
        assert!(slashed_ladder(1).is_err());
    }

    #[test]
    fn complete_slashed_ladder_shape() {
        let g = complete_slashed_ladder(6, 5).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert!(g.is_simple());
        // the clique on u_6, v_6, w_1..w_3
        let clique = [5, 11, 12, 13, 14];
        for &a in &clique {
            for &b in &clique {
                if a != b {
                    assert_eq!(g.multiplicity(a, b), 1);
                }
            }
        }
        // v_6 carries the slash from u_5 and has the higher valence of the overlap
        assert!(g.valence(11) > g.valence(5));
        assert!(complete_slashed_ladder(1, 5).is_err());
        assert!(complete_slashed_ladder(3, 2).is_err());
    }

    #[test]
    fn antiprism_shapes() {
        let a11 = antiprism(11, false).unwrap();
        assert_eq!(a11.vertex_count(), 22);
        assert_eq!(a11.regularity(), Some(4));
        let aug = antiprism(9, true).unwrap();
        assert_eq!(aug.vertex_count(), 18);
        assert_eq!(aug.regularity(), Some(5));
        let a4 = antiprism(4, false).unwrap();
        assert_eq!(a4.vertex_count(), 8);
        assert_eq!(a4.edge_count(), 16);
    }

    #[test]
    fn wheel_shape() {
        assert_eq!(wheel(3).unwrap(), complete(4).unwrap());
        let w12 = wheel(12).unwrap();
        assert_eq!(w12.vertex_count(), 13);
        assert_eq!(w12.valence(0), 12);
        assert!((1..=12).all(|v| w12.valence(v) == 3));
        for n in 4..=10 {
            assert_eq!(wheel(n).unwrap().vertex_connectivity(), 3);
        }
        assert!(wheel(2).is_err());
    }

    #[test]
    fn rook_shapes() {
        // (a, b) -> 2a + b, so K_2 □ K_2 is the 4-cycle 0-1-3-2
        let c4 = Multigraph::from_edges(4, &[(0, 1, 1), (1, 3, 1), (3, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(rook(&[2, 2]).unwrap(), c4);
        let r234 = rook(&[2, 3, 4]).unwrap();
        assert_eq!(r234.vertex_count(), 24);
        assert_eq!(r234.regularity(), Some(6));
        assert!(rook(&[1, 3]).is_err());
        assert!(rook(&[]).is_err());
    }

    #[test]
    fn regular_gap_multi_shapes() {
        let g4 = regular_gap_multi(4).unwrap();
        assert_eq!(g4.vertex_count(), 5);
        assert!(g4.edges().all(|(_, _, m)| m == 2));
        let g5 = regular_gap_multi(5).unwrap();
        assert_eq!(g5.vertex_count(), 14);
        assert_eq!(g5.regularity(), Some(5));
        let mults: Vec<u32> = (0..14).map(|i| g5.multiplicity(i, (i + 1) % 14)).collect();
        assert!(mults.chunks(2).all(|c| c == [2, 3]));
        assert_eq!(regular_gap_multi(6).unwrap().regularity(), Some(6));
        assert!(regular_gap_multi(3).is_err());
    }

    #[test]
    fn regular_gap_simple_shapes() {
        assert_eq!(regular_gap_simple_default_copies(7), 9);
        let g = regular_gap_simple(7, None).unwrap();
        assert_eq!(g.vertex_count(), 36);
        assert!(g.is_simple());
        assert_eq!(g.regularity(), Some(7));
        for r in 6..=9 {
            let g = regular_gap_simple(r, None).unwrap();
            assert_eq!(g.regularity(), Some(r as u64));
            assert!(g.is_simple());
        }
        assert!(regular_gap_simple(7, Some(8)).is_err());
        assert!(regular_gap_simple(5, None).is_err());
    }

    #[test]
    fn spec_parsing_round_trips_through_display() {
        for text in [
            "path 4",
            "tree 0 0 1",
            "complete_multipartite 2 3",
            "multipath 5 3",
            "complete_slashed_ladder 6 5",
            "augmented_antiprism 9",
            "rook 2 3 4",
            "regular_gap_simple 7 9",
            "cone 2 cycle 4",
        ] {
            let words: Vec<&str> = text.split_whitespace().collect();
            let spec = FamilySpec::parse(words[0], &words[1..]).unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert!(FamilySpec::parse("wheel", &["x"]).is_err());
        assert!(FamilySpec::parse("wheel", &[]).is_err());
        assert!(FamilySpec::parse("moebius", &["3"]).is_err());
    }
}
