//! Baker–Norine rank.
//!
//! The production path uses the recursion
//! `r(D) = -1` if `D` has no effective representative, otherwise
//! `1 + min_v r(D - (v))`, evaluated with a cap and memoized on the
//! 0-reduced representative of each class. The definitional quantifier over
//! all effective `E` is kept as [`rank_by_definition`] for cross-checking.

use dashmap::DashMap;

use crate::divisor::Divisor;
use crate::error::Result;
use crate::graph::Multigraph;
use crate::reduction::{self, Burner};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankWitness {
    /// The base vertex at which the reduced form is negative.
    NegativeAt(usize),
    /// Effective `E` of degree `r + 1` such that `D - E` has no effective
    /// representative.
    Obstruction(Divisor),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankResult {
    pub value: i64,
    pub witness: RankWitness,
}

/// `(value, exact)`: `value = min(rank, cap)`, and `exact` is set when the
/// cap did not bind.
#[derive(Debug, Clone, Copy)]
struct Memo {
    value: i64,
    exact: bool,
}

/// Rank evaluator for one graph with a concurrent class-keyed memo.
pub struct RankEngine<'g> {
    graph: &'g Multigraph,
    memo: DashMap<Vec<i64>, Memo>,
}

impl<'g> RankEngine<'g> {
    pub fn new(graph: &'g Multigraph) -> Self {
        RankEngine {
            graph,
            memo: DashMap::new(),
        }
    }

    pub fn graph(&self) -> &Multigraph {
        self.graph
    }

    /// Number of memoized classes.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn rank(&self, d: &Divisor) -> Result<RankResult> {
        d.check_graph(self.graph)?;
        let reduced = reduction::reduced_form(self.graph, d, 0)?;
        if reduced[0] < 0 {
            return Ok(RankResult {
                value: -1,
                witness: RankWitness::NegativeAt(0),
            });
        }
        // effective-equivalent, so deg >= 0 and r(D) <= deg(D)
        let value = self.capped(reduced.coefficients(), d.degree());
        let witness = RankWitness::Obstruction(self.obstruction(reduced, value));
        Ok(RankResult { value, witness })
    }

    /// `r(d) >= r`, evaluated without computing the full rank.
    pub fn rank_at_least(&self, d: &Divisor, r: i64) -> Result<bool> {
        d.check_graph(self.graph)?;
        if r < 0 {
            return Ok(true);
        }
        if d.degree() < r {
            return Ok(false);
        }
        let reduced = reduction::reduced_form(self.graph, d, 0)?;
        Ok(self.capped(reduced.coefficients(), r) >= r)
    }

    /// `min(r(D), cap)` for a 0-reduced `D`.
    fn capped(&self, reduced: &[i64], cap: i64) -> i64 {
        if reduced[0] < 0 {
            return -1;
        }
        if cap <= 0 {
            return 0;
        }
        if let Some(m) = self.memo.get(reduced) {
            if m.exact {
                return m.value.min(cap);
            }
            if m.value >= cap {
                return cap;
            }
        }
        let value = if cap == 1 {
            let mut work = reduced.to_vec();
            let mut burner = Burner::new(self.graph.vertex_count());
            if positive_rank_effective(self.graph, &mut work, &mut burner) {
                1
            } else {
                0
            }
        } else {
            let mut best = cap;
            for v in 0..reduced.len() {
                let child = self.child(reduced, v);
                best = best.min(1 + self.capped(child.coefficients(), cap - 1));
                if best == 0 {
                    break;
                }
            }
            best
        };
        let entry = Memo {
            value,
            exact: value < cap,
        };
        self.memo
            .entry(reduced.to_vec())
            .and_modify(|m| {
                if !m.exact && (entry.exact || entry.value > m.value) {
                    *m = entry;
                }
            })
            .or_insert(entry);
        value
    }

    fn child(&self, reduced: &[i64], v: usize) -> Divisor {
        let mut d = Divisor::new(reduced.to_vec());
        d.add_chips(v, -1);
        reduction::reduced_form(self.graph, &d, 0).expect("length checked")
    }

    /// Walks down the recursion collecting the vertices that realize the
    /// minimum.
    fn obstruction(&self, mut current: Divisor, rank: i64) -> Divisor {
        let n = self.graph.vertex_count();
        let mut e = Divisor::zero(n);
        for level in (0..=rank).rev() {
            // current has rank exactly `level`
            let next = (0..n)
                .map(|v| (v, self.child(current.coefficients(), v)))
                .find(|(_, child)| self.capped(child.coefficients(), level) == level - 1)
                .expect("some vertex realizes the minimum");
            e.add_chips(next.0, 1);
            current = next.1;
        }
        e
    }
}

/// For effective `d`: true iff `d - (v)` has an effective representative for
/// every `v`. Reduces toward each uncovered vertex in turn; every vertex that
/// holds a chip in some representative along the way is covered for free.
/// Leaves `d` at some equivalent effective divisor.
pub(crate) fn positive_rank_effective(g: &Multigraph, d: &mut [i64], burner: &mut Burner) -> bool {
    let n = d.len();
    let mut covered: Vec<bool> = d.iter().map(|&c| c > 0).collect();
    for v in 0..n {
        if covered[v] {
            continue;
        }
        reduction::settle(g, d, v, burner);
        if d[v] == 0 {
            return false;
        }
        for (w, c) in covered.iter_mut().enumerate() {
            if d[w] > 0 {
                *c = true;
            }
        }
    }
    true
}

/// `r(d) >= 1`.
pub fn has_positive_rank(g: &Multigraph, d: &Divisor) -> Result<bool> {
    d.check_graph(g)?;
    let reduced = reduction::reduced_form(g, d, 0)?;
    if reduced[0] < 1 {
        return Ok(false);
    }
    let mut work = reduced.into_coefficients();
    let mut burner = Burner::new(g.vertex_count());
    Ok(positive_rank_effective(g, &mut work, &mut burner))
}

/// `d` is equivalent to an effective divisor.
pub fn is_effective_equivalent(g: &Multigraph, d: &Divisor) -> Result<bool> {
    Ok(reduction::reduced_form(g, d, 0)?[0] >= 0)
}

pub fn rank(g: &Multigraph, d: &Divisor) -> Result<RankResult> {
    RankEngine::new(g).rank(d)
}

/// Rank straight from the quantifier: the largest `r` such that `d - E` is
/// effective-equivalent for every effective `E` of degree `r`. Exponential;
/// meant for small instances.
pub fn rank_by_definition(g: &Multigraph, d: &Divisor) -> Result<i64> {
    d.check_graph(g)?;
    if !is_effective_equivalent(g, d)? {
        return Ok(-1);
    }
    let n = g.vertex_count();
    let mut k = 1;
    loop {
        let mut all_ok = true;
        for_each_multiset(n, k, &mut |chosen| {
            if !all_ok {
                return;
            }
            let mut e = d.clone();
            for &v in chosen {
                e.add_chips(v, -1);
            }
            if !is_effective_equivalent(g, &e).expect("length checked") {
                all_ok = false;
            }
        });
        if !all_ok {
            return Ok(k as i64 - 1);
        }
        k += 1;
    }
}

fn for_each_multiset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        for v in start..n {
            buf.push(v);
            rec(n, k, v, buf, f);
            buf.pop();
        }
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), f);
}

/// Both sides of `r(D) - r(K - D) = deg(D) + 1 - g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannRoch {
    pub rank: i64,
    pub residual_rank: i64,
    pub degree: i64,
    pub genus: i64,
}

impl RiemannRoch {
    pub fn lhs(&self) -> i64 {
        self.rank - self.residual_rank
    }

    pub fn rhs(&self) -> i64 {
        self.degree + 1 - self.genus
    }

    pub fn holds(&self) -> bool {
        self.lhs() == self.rhs()
    }
}

/// Evaluates both sides of the Riemann–Roch identity with the rank engine.
/// A failure indicates an engine bug.
pub fn riemann_roch(engine: &RankEngine<'_>, d: &Divisor) -> Result<RiemannRoch> {
    let g = engine.graph();
    let k = g.canonical_divisor();
    let residual = &k - d;
    Ok(RiemannRoch {
        rank: engine.rank(d)?.value,
        residual_rank: engine.rank(&residual)?.value,
        degree: d.degree(),
        genus: g.genus() as i64,
    })
}

pub fn riemann_roch_check(g: &Multigraph, d: &Divisor) -> Result<bool> {
    Ok(riemann_roch(&RankEngine::new(g), d)?.holds())
}
