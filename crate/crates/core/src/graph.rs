//! Immutable loopless multigraphs and their structural invariants.
//!
//! Vertices are dense 0-based indices. Edge multiplicities live in a dense
//! symmetric table, with a sparse neighbor list kept alongside it for the
//! hot loops in burning and reduction.

use std::collections::VecDeque;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::subsets::Combinations;

/// A finite, connected, loopless multigraph.
#[derive(Debug, Clone)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
    adj: Vec<Vec<(usize, u32)>>,
    valence: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mult == other.mult
    }
}

impl Eq for Multigraph {}

impl Multigraph {
    /// Builds a graph from an edge list. Repeated pairs accumulate
    /// multiplicity; zero multiplicities are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut mult = vec![0u32; n * n];
        for &(u, v, m) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if m == 0 {
                continue;
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            mult[u * n + v] += m;
            mult[v * n + u] += m;
        }
        Self::from_table(n, mult)
    }

    fn from_table(n: usize, mult: Vec<u32>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut valence = vec![0u64; n];
        for u in 0..n {
            for v in 0..n {
                let m = mult[u * n + v];
                if m > 0 {
                    adj[u].push((v, m));
                    valence[u] += m as u64;
                }
            }
        }
        let g = Multigraph {
            n,
            mult,
            adj,
            valence,
            labels: None,
        };
        let components = g.components(&VertexSet::full(n));
        if components.len() > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    /// Attaches cosmetic vertex names.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    /// Neighbors of `v` in ascending order, paired with edge multiplicity.
    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[v]
    }

    pub fn valence(&self, v: usize) -> u64 {
        self.valence[v]
    }

    pub fn min_valence(&self) -> u64 {
        self.valence.iter().copied().min().unwrap_or(0)
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.valence.iter().sum::<u64>() / 2
    }

    /// Unordered adjacent pairs `(u, v, m)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&(v, _)| v > u)
                .map(move |&(v, m)| (u, v, m))
        })
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// True when every adjacent pair shares at least two edges.
    pub fn all_edges_multiple(&self) -> bool {
        self.mult.iter().all(|&m| m != 1)
    }

    pub fn regularity(&self) -> Option<u64> {
        let first = self.valence[0];
        self.valence.iter().all(|&d| d == first).then_some(first)
    }

    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == j {
                            self.valence[i] as i64
                        } else {
                            -(self.multiplicity(i, j) as i64)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Number of edges leaving `set`, with multiplicity.
    pub fn outdegree(&self, set: &VertexSet) -> Result<u64> {
        self.check_set(set)?;
        if !set.is_proper_nonempty() {
            return Err(Error::TrivialVertexSet);
        }
        Ok(set
            .iter()
            .flat_map(|u| self.adj[u].iter())
            .filter(|&&(w, _)| !set.contains(w))
            .map(|&(_, m)| m as u64)
            .sum())
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: set.universe(),
            });
        }
        Ok(())
    }

    /// First Betti number `|E| - |V| + 1`.
    pub fn genus(&self) -> u64 {
        self.edge_count() + 1 - self.n as u64
    }

    /// `K(v) = val(v) - 2`.
    pub fn canonical_divisor(&self) -> Divisor {
        Divisor::new(self.valence.iter().map(|&d| d as i64 - 2).collect())
    }

    /// Connected components of the subgraph induced on `alive`, each sorted,
    /// ordered by smallest member.
    pub fn components(&self, alive: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in alive.iter() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if alive.contains(w) && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distance from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex connectivity. Brute force over cut sets up to 16 vertices,
    /// max-flow beyond.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n <= 16 {
            self.vertex_connectivity_brute_force()
        } else {
            self.vertex_connectivity_flow()
        }
    }

    /// Smallest `S` such that deleting it leaves a disconnected graph or a
    /// single vertex.
    pub fn vertex_connectivity_brute_force(&self) -> usize {
        for k in 0..self.n {
            for cut in Combinations::new(self.n, k) {
                let mut alive = VertexSet::full(self.n);
                for &v in &cut {
                    alive.remove(v);
                }
                if alive.len() == 1 || self.components(&alive).len() > 1 {
                    return k;
                }
            }
        }
        self.n.saturating_sub(1)
    }

    /// Minimum over non-adjacent pairs of the number of internally
    /// vertex-disjoint paths; `n - 1` when the underlying graph is complete.
    pub fn vertex_connectivity_flow(&self) -> usize {
        let mut best = self.n.saturating_sub(1);
        for s in 0..self.n {
            for t in (s + 1)..self.n {
                if self.multiplicity(s, t) == 0 {
                    best = best.min(self.local_connectivity(s, t, best));
                }
            }
        }
        best
    }

    /// Vertex-disjoint s-t paths via unit-capacity flow on the split graph,
    /// stopping early once `cap` paths are found.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // node 2v = v_in, 2v+1 = v_out
        let nodes = 2 * self.n;
        let mut graph = FlowGraph::new(nodes);
        let big = self.n as i32 + 1;
        for v in 0..self.n {
            let c = if v == s || v == t { big } else { 1 };
            graph.add_edge(2 * v, 2 * v + 1, c);
            for &(w, _) in &self.adj[v] {
                graph.add_edge(2 * v + 1, 2 * w, big);
            }
        }
        graph.max_flow(2 * s + 1, 2 * t, cap)
    }

    pub fn independence_number(&self) -> usize {
        self.maximum_independent_set().len()
    }

    /// A maximum independent set, found by exact branch and bound. Ties are
    /// broken deterministically.
    pub fn maximum_independent_set(&self) -> Vec<usize> {
        let words = self.n.div_ceil(64);
        let neighborhoods: Vec<Bits> = (0..self.n)
            .map(|v| {
                let mut b = Bits::zero(words);
                for &(w, _) in &self.adj[v] {
                    b.set(w);
                }
                b
            })
            .collect();
        let mut all = Bits::zero(words);
        for v in 0..self.n {
            all.set(v);
        }
        let mut best = Vec::new();
        let mut current = Vec::new();
        mis_branch(&neighborhoods, all, &mut current, &mut best);
        best.sort_unstable();
        best
    }

    /// Cartesian product; vertex `(a, b)` has index `a * |H| + b`.
    pub fn cartesian_product(&self, other: &Multigraph) -> Result<Multigraph> {
        if !self.is_simple() || !other.is_simple() {
            return Err(Error::NotSimple);
        }
        let m = other.n;
        let mut edges = Vec::new();
        for a in 0..self.n {
            for (b, c, _) in other.edges() {
                edges.push((a * m + b, a * m + c, 1));
            }
        }
        for (a, a2, _) in self.edges() {
            for b in 0..m {
                edges.push((a * m + b, a2 * m + b, 1));
            }
        }
        let g = Multigraph::from_edges(self.n * m, &edges)?;
        match (self.labels(), other.labels()) {
            (Some(l1), Some(l2)) => {
                let labels = l1
                    .iter()
                    .flat_map(|x| l2.iter().map(move |y| format!("({x},{y})")))
                    .collect();
                g.with_labels(labels)
            }
            _ => Ok(g),
        }
    }

    /// Adds `k` universal vertices, adjacent to everything including each other.
    pub fn cone(&self, k: usize) -> Result<Multigraph> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let total = self.n + k;
        let mut edges: Vec<_> = self.edges().collect();
        for apex in self.n..total {
            for v in 0..apex {
                edges.push((v, apex, 1));
            }
        }
        Multigraph::from_edges(total, &edges)
    }
}

/// A subset of the vertices of a specific graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            members: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            members: vec![true; n],
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.members[v] = true;
        }
        Ok(set)
    }

    pub(crate) fn from_mask(members: Vec<bool>) -> Self {
        VertexSet { members }
    }

    /// Number of vertices of the ambient graph.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members[v]
    }

    pub fn insert(&mut self, v: usize) {
        self.members[v] = true;
    }

    pub fn remove(&mut self, v: usize) {
        self.members[v] = false;
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    pub fn is_proper_nonempty(&self) -> bool {
        let k = self.len();
        k > 0 && k < self.members.len()
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            members: self.members.iter().map(|&b| !b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn zero(words: usize) -> Self {
        Bits(vec![0; words])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn without(&self, i: usize) -> Bits {
        let mut b = self.clone();
        b.0[i / 64] &= !(1 << (i % 64));
        b
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b)
        })
    }
}

fn mis_branch(nbrs: &[Bits], cand: Bits, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand.is_zero() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + cand.count() <= best.len() {
        return;
    }
    // Pick the candidate with the most neighbors among the candidates.
    let mut pick = usize::MAX;
    let mut pick_deg = 0;
    for v in cand.iter() {
        let d = cand.and_count(&nbrs[v]);
        if pick == usize::MAX || d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    if pick_deg == 0 {
        let before = current.len();
        current.extend(cand.iter());
        if current.len() > best.len() {
            *best = current.clone();
        }
        current.truncate(before);
        return;
    }
    current.push(pick);
    mis_branch(nbrs, cand.minus(&nbrs[pick]).without(pick), current, best);
    current.pop();
    mis_branch(nbrs, cand.without(pick), current, best);
}

struct FlowGraph {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowGraph {
    fn new(nodes: usize) -> Self {
        FlowGraph {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut prev_edge = vec![usize::MAX; self.head.len()];
            let mut visited = vec![false; self.head.len()];
            visited[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && !visited[v] {
                        visited[v] = true;
                        prev_edge[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !visited[t] {
                break;
            }
            let mut v = t;
            while v != s {
                let e = prev_edge[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rejects_loops_and_disconnected_input() {
        assert_eq!(
            Multigraph::from_edges(2, &[(1, 1, 1)]),
            Err(Error::Loop(1))
        );
        match Multigraph::from_edges(4, &[(0, 1, 1), (2, 3, 2)]) {
            Err(Error::Disconnected { components }) => {
                assert_eq!(components, vec![vec![0, 1], vec![2, 3]]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Multigraph::from_edges(2, &[(0, 2, 1)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn laplacian_of_k3_and_multipath() {
        let k3 = families::complete(3).unwrap();
        assert_eq!(
            k3.laplacian(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        let mp = families::multipath(3, 2).unwrap();
        assert_eq!(
            mp.laplacian(),
            vec![vec![2, -2, 0], vec![-2, 4, -2], vec![0, -2, 2]]
        );
    }

    #[test]
    fn outdegree_examples() {
        let k4 = families::complete(4).unwrap();
        let u = VertexSet::from_vertices(4, [0, 2]).unwrap();
        assert_eq!(k4.outdegree(&u).unwrap(), 4);
        let c6 = families::cycle(6).unwrap();
        for v in 0..6 {
            let u = VertexSet::from_vertices(6, [v]).unwrap();
            assert_eq!(c6.outdegree(&u).unwrap(), 2);
        }
        assert_eq!(
            k4.outdegree(&VertexSet::empty(4)),
            Err(Error::TrivialVertexSet)
        );
        assert_eq!(
            k4.outdegree(&VertexSet::full(4)),
            Err(Error::TrivialVertexSet)
        );
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(families::cycle(5).unwrap().vertex_connectivity(), 2);
        for n in 1..=7 {
            assert_eq!(families::complete(n).unwrap().vertex_connectivity(), n - 1);
        }
        assert_eq!(families::wheel(9).unwrap().vertex_connectivity(), 3);
        assert_eq!(families::path(5).unwrap().vertex_connectivity(), 1);
    }

    #[test]
    fn connectivity_routes_agree() {
        let graphs = [
            families::wheel(9).unwrap(),
            families::complete_multipartite(&[2, 3, 3]).unwrap(),
            families::slashed_ladder(5).unwrap(),
            families::antiprism(5, false).unwrap(),
            families::rook(&[3, 3]).unwrap(),
            families::multipath(5, 3).unwrap(),
            families::complete(6).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(
                g.vertex_connectivity_brute_force(),
                g.vertex_connectivity_flow()
            );
        }
    }

    #[test]
    fn independence_examples() {
        for n in 1..=6 {
            assert_eq!(families::complete(n).unwrap().independence_number(), 1);
        }
        assert_eq!(families::cycle(8).unwrap().independence_number(), 4);
        for n in 3..=14 {
            assert_eq!(families::wheel(n).unwrap().independence_number(), n / 2);
        }
        let set = families::cycle(7).unwrap().maximum_independent_set();
        assert_eq!(set.len(), 3);
    }

    #[test]
    fn genus_and_canonical_divisor() {
        assert_eq!(families::path(6).unwrap().genus(), 0);
        assert_eq!(families::cycle(7).unwrap().genus(), 1);
        assert_eq!(families::slashed_ladder(4).unwrap().genus(), 6);
        assert!(families::cycle(5)
            .unwrap()
            .canonical_divisor()
            .coefficients()
            .iter()
            .all(|&c| c == 0));
        let k4 = families::complete(4).unwrap();
        let k = k4.canonical_divisor();
        assert_eq!(k.coefficients(), &[1, 1, 1, 1]);
        assert_eq!(k.degree(), 2 * k4.genus() as i64 - 2);
    }

    #[test]
    fn products_and_cones() {
        let k2 = families::complete(2).unwrap();
        let c4 = k2.cartesian_product(&k2).unwrap();
        assert_eq!(c4.regularity(), Some(2));
        assert_eq!(c4.edge_count(), 4);
        let k3 = families::complete(3).unwrap();
        let r33 = k3.cartesian_product(&k3).unwrap();
        assert_eq!(r33.vertex_count(), 9);
        assert_eq!(r33.regularity(), Some(4));
        assert_eq!(r33.edge_count(), 18);
        let r234 = families::rook(&[2, 3, 4]).unwrap();
        assert_eq!(r234.vertex_count(), 24);
        assert_eq!(r234.regularity(), Some(6));

        // cone(C_4, 1) is W_4 with the hub last instead of first
        let w4 = families::cycle(4).unwrap().cone(1).unwrap();
        let wheel = families::wheel(4).unwrap();
        let relabeled: Vec<_> = wheel
            .edges()
            .map(|(u, v, m)| ((u + 4) % 5, (v + 4) % 5, m))
            .collect();
        assert_eq!(w4, Multigraph::from_edges(5, &relabeled).unwrap());

        let mp = families::multipath(3, 2).unwrap();
        assert_eq!(mp.cone(1), Err(Error::NotSimple));
        assert_eq!(mp.cartesian_product(&k2), Err(Error::NotSimple));
    }
}
