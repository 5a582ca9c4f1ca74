//! Dhar's burning algorithm and q-reduction.
//!
//! Reduction runs in two phases. Phase one clears all debt away from `q` by
//! firing BFS balls around `q`, outermost layer first: firing
//! `T = L_0 ∪ .. ∪ L_{i-1}` only moves chips from `L_{i-1}` into `L_i`, so
//! layers already fixed stay out of debt. Phase two repeatedly burns from `q`
//! and fires the unburned set until everything burns.

use crate::divisor::{fire_in_place, Divisor};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// Outcome of one burning pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnReport {
    pub source: usize,
    pub burned_order: Vec<usize>,
    pub unburned: VertexSet,
}

impl BurnReport {
    pub fn burned_everything(&self) -> bool {
        self.unburned.is_empty()
    }
}

/// A set fired `times` times in a row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Firing {
    pub set: VertexSet,
    pub times: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub reduced: Divisor,
    /// Phase-one layer firings followed by phase-two burning firings.
    pub script: Vec<Firing>,
    pub layer_firings: usize,
    pub burn_passes: usize,
}

/// Scratch buffers for repeated burning passes on one graph.
pub(crate) struct Burner {
    edges: Vec<i64>,
    burned: Vec<bool>,
    order: Vec<usize>,
}

impl Burner {
    pub(crate) fn new(n: usize) -> Self {
        Burner {
            edges: vec![0; n],
            burned: vec![false; n],
            order: Vec::with_capacity(n),
        }
    }

    /// Burns from `source`; returns the number of burned vertices. A vertex
    /// burns once its burning incident edges exceed its chips.
    pub(crate) fn run(&mut self, g: &Multigraph, d: &[i64], source: usize) -> usize {
        self.edges.fill(0);
        self.burned.fill(false);
        self.order.clear();
        self.burned[source] = true;
        self.order.push(source);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head];
            head += 1;
            for &(w, m) in g.neighbors(u) {
                if self.burned[w] {
                    continue;
                }
                self.edges[w] += m as i64;
                if self.edges[w] > d[w] {
                    self.burned[w] = true;
                    self.order.push(w);
                }
            }
        }
        self.order.len()
    }

    pub(crate) fn is_burned(&self, v: usize) -> bool {
        self.burned[v]
    }

    fn unburned(&self) -> VertexSet {
        VertexSet::from_mask(self.burned.iter().map(|&b| !b).collect())
    }

    /// Largest `t` such that firing the unburned set `t` times stays legal.
    fn max_legal_repeats(&self, g: &Multigraph, d: &[i64]) -> i64 {
        let mut t = i64::MAX;
        for u in 0..d.len() {
            if self.burned[u] {
                continue;
            }
            let out: i64 = g
                .neighbors(u)
                .iter()
                .filter(|&&(w, _)| self.burned[w])
                .map(|&(_, m)| m as i64)
                .sum();
            if out > 0 {
                t = t.min(d[u] / out);
            }
        }
        t.max(1)
    }

    fn fire_unburned(&self, g: &Multigraph, d: &mut [i64], times: i64) {
        for u in 0..d.len() {
            if self.burned[u] {
                continue;
            }
            for &(w, m) in g.neighbors(u) {
                if self.burned[w] {
                    let flow = m as i64 * times;
                    d[u] -= flow;
                    d[w] += flow;
                }
            }
        }
    }
}

fn check_vertex(g: &Multigraph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// One burning pass from `q`. Requires no debt away from `q`.
pub fn dhar(g: &Multigraph, d: &Divisor, q: usize) -> Result<BurnReport> {
    d.check_graph(g)?;
    check_vertex(g, q)?;
    if let Some(v) = (0..d.len()).find(|&v| v != q && d[v] < 0) {
        return Err(Error::DebtOffSource(v));
    }
    let mut burner = Burner::new(g.vertex_count());
    burner.run(g, d.coefficients(), q);
    Ok(BurnReport {
        source: q,
        burned_order: burner.order.clone(),
        unburned: burner.unburned(),
    })
}

/// True iff `d` has no debt away from `q` and burning from `q` burns everything.
pub fn is_q_reduced(g: &Multigraph, d: &Divisor, q: usize) -> Result<bool> {
    d.check_graph(g)?;
    check_vertex(g, q)?;
    if (0..d.len()).any(|v| v != q && d[v] < 0) {
        return Ok(false);
    }
    let mut burner = Burner::new(g.vertex_count());
    Ok(burner.run(g, d.coefficients(), q) == g.vertex_count())
}

/// The unique q-reduced divisor equivalent to `d`, with the firing script
/// that produced it.
pub fn q_reduce(g: &Multigraph, d: &Divisor, q: usize) -> Result<ReductionResult> {
    d.check_graph(g)?;
    check_vertex(g, q)?;
    let mut coeffs = d.clone();
    let mut script = Vec::new();
    clear_debt(g, coeffs.as_mut_slice(), q, Some(&mut script));
    let layer_firings = script.len();

    let n = g.vertex_count();
    let mut burner = Burner::new(n);
    let mut burn_passes = 0;
    loop {
        burn_passes += 1;
        if burner.run(g, coeffs.coefficients(), q) == n {
            break;
        }
        let set = burner.unburned();
        burner.fire_unburned(g, coeffs.as_mut_slice(), 1);
        let mergeable = script.len() > layer_firings;
        match script.last_mut() {
            Some(last) if mergeable && last.set == set => last.times += 1,
            _ => script.push(Firing { set, times: 1 }),
        }
    }
    Ok(ReductionResult {
        reduced: coeffs,
        script,
        layer_firings,
        burn_passes,
    })
}

/// The q-reduced form alone, using repeated legal firings of each unburned set.
pub fn reduced_form(g: &Multigraph, d: &Divisor, q: usize) -> Result<Divisor> {
    d.check_graph(g)?;
    check_vertex(g, q)?;
    let mut coeffs = d.clone();
    clear_debt(g, coeffs.as_mut_slice(), q, None);
    let mut burner = Burner::new(g.vertex_count());
    settle(g, coeffs.as_mut_slice(), q, &mut burner);
    Ok(coeffs)
}

/// Phase two on a divisor already out of debt away from `q`.
pub(crate) fn settle(g: &Multigraph, d: &mut [i64], q: usize, burner: &mut Burner) {
    let n = g.vertex_count();
    while burner.run(g, d, q) < n {
        let t = burner.max_legal_repeats(g, d);
        burner.fire_unburned(g, d, t);
    }
}

fn clear_debt(g: &Multigraph, d: &mut [i64], q: usize, mut script: Option<&mut Vec<Firing>>) {
    let n = g.vertex_count();
    let dist = g.distances_from(q);
    let dmax = dist.iter().copied().max().unwrap_or(0);
    for layer in (1..=dmax).rev() {
        let mut times = 0i64;
        for v in (0..n).filter(|&v| dist[v] == layer && d[v] < 0) {
            let inflow: i64 = g
                .neighbors(v)
                .iter()
                .filter(|&&(w, _)| dist[w] < layer)
                .map(|&(_, m)| m as i64)
                .sum();
            times = times.max((-d[v] + inflow - 1) / inflow);
        }
        if times > 0 {
            let ball = VertexSet::from_mask(dist.iter().map(|&x| x < layer).collect());
            fire_in_place(g, d, &ball, times);
            if let Some(s) = script.as_deref_mut() {
                s.push(Firing {
                    set: ball,
                    times: times as u64,
                });
            }
        }
    }
}

/// Applies a firing script to `d`.
pub fn replay(g: &Multigraph, d: &Divisor, script: &[Firing]) -> Result<Divisor> {
    d.check_graph(g)?;
    let mut out = d.clone();
    for firing in script {
        g.check_set(&firing.set)?;
        if !firing.set.is_proper_nonempty() {
            return Err(Error::TrivialVertexSet);
        }
        fire_in_place(g, out.as_mut_slice(), &firing.set, firing.times as i64);
    }
    Ok(out)
}

/// Sound certificate that `r(d) = 0`: for `d` effective and q-reduced with
/// `d(v) = 0`, one burning pass from `v` that reaches `q` proves it.
pub fn rank_zero_certificate(g: &Multigraph, d: &Divisor, q: usize, v: usize) -> Result<bool> {
    d.check_graph(g)?;
    check_vertex(g, q)?;
    check_vertex(g, v)?;
    if let Some(w) = (0..d.len()).find(|&w| d[w] < 0) {
        return Err(Error::NotEffective(w));
    }
    if v == q {
        return Err(Error::Precondition("certificate vertex must differ from q".into()));
    }
    if d[v] != 0 {
        return Err(Error::Precondition(format!("vertex {v} carries chips")));
    }
    if !is_q_reduced(g, d, q)? {
        return Err(Error::Precondition(format!("divisor is not {q}-reduced")));
    }
    let mut burner = Burner::new(g.vertex_count());
    burner.run(g, d.coefficients(), v);
    Ok(burner.is_burned(q))
}

/// For effective `d` with `d(v) = 0`: true when burning from `v` consumes
/// the whole graph, i.e. `d` is v-reduced and `d - (v)` has no effective
/// representative.
pub fn burns_completely_from(g: &Multigraph, d: &Divisor, v: usize) -> Result<bool> {
    d.check_graph(g)?;
    check_vertex(g, v)?;
    if let Some(w) = (0..d.len()).find(|&w| d[w] < 0) {
        return Err(Error::NotEffective(w));
    }
    if d[v] != 0 {
        return Err(Error::Precondition(format!("vertex {v} carries chips")));
    }
    let mut burner = Burner::new(g.vertex_count());
    Ok(burner.run(g, d.coefficients(), v) == g.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k4_three_chips_survive_a_fire_from_the_fourth_vertex() {
        let k4 = families::complete(4).unwrap();
        let d = Divisor::indicator(4, &[0, 1, 2]);
        let report = dhar(&k4, &d, 3).unwrap();
        assert_eq!(report.burned_order, vec![3]);
        assert_eq!(report.unburned.to_vec(), vec![0, 1, 2]);
        assert!(d.is_legal_firing(&k4, &report.unburned).unwrap());
    }

    #[test]
    fn zero_divisor_burns_everything() {
        let g = families::slashed_ladder(5).unwrap();
        for q in 0..g.vertex_count() {
            let report = dhar(&g, &Divisor::zero(10), q).unwrap();
            assert!(report.burned_everything());
            assert_eq!(report.burned_order[0], q);
            assert_eq!(report.burned_order.len(), 10);
        }
    }

    #[test]
    fn debt_away_from_source_is_rejected() {
        let g = families::cycle(4).unwrap();
        let d = Divisor::new(vec![-3, 0, -1, 0]);
        assert_eq!(dhar(&g, &d, 0), Err(Error::DebtOffSource(2)));
        assert!(dhar(&g, &Divisor::new(vec![-3, 0, 1, 0]), 0).is_ok());
    }

    #[test]
    fn c4_two_chips_move_to_base() {
        let c4 = families::cycle(4).unwrap();
        let result = q_reduce(&c4, &Divisor::point(4, 2, 2), 0).unwrap();
        assert_eq!(result.reduced, Divisor::point(4, 0, 2));
        assert_eq!(
            replay(&c4, &Divisor::point(4, 2, 2), &result.script).unwrap(),
            result.reduced
        );
        assert!(is_q_reduced(&c4, &result.reduced, 0).unwrap());
    }

    #[test]
    fn trees_concentrate_everything_on_q() {
        let tree = families::tree(&[0, 0, 1, 1, 2, 4]).unwrap();
        let d = Divisor::new(vec![0, 2, 0, 1, 3, 0, 1]);
        for q in 0..7 {
            let r = q_reduce(&tree, &d, q).unwrap();
            assert_eq!(r.reduced, Divisor::point(7, q, 7));
        }
    }

    #[test]
    fn reduced_input_comes_back_unchanged_with_empty_script() {
        let g = families::wheel(5).unwrap();
        let d = Divisor::new(vec![4, 0, 1, 0, 0, 1]);
        assert!(is_q_reduced(&g, &d, 0).unwrap());
        let r = q_reduce(&g, &d, 0).unwrap();
        assert_eq!(r.reduced, d);
        assert!(r.script.is_empty());
        assert_eq!(r.burn_passes, 1);
    }

    #[test]
    fn deep_debt_is_cleared_in_one_pass_per_layer() {
        let g = families::path(5).unwrap();
        let d = Divisor::new(vec![0, 0, -2, 0, -7]);
        let r = q_reduce(&g, &d, 0).unwrap();
        assert_eq!(r.reduced, Divisor::point(5, 0, -9));
        assert!(r.layer_firings <= 4);
        assert_eq!(replay(&g, &d, &r.script).unwrap(), r.reduced);
        assert_eq!(reduced_form(&g, &d, 0).unwrap(), r.reduced);
    }

    #[test]
    fn certificate_preconditions() {
        let k4 = families::complete(4).unwrap();
        let d = Divisor::point(4, 0, 2);
        assert!(rank_zero_certificate(&k4, &d, 0, 1).unwrap());
        assert!(rank_zero_certificate(&k4, &d, 0, 0).is_err());
        assert!(rank_zero_certificate(&k4, &Divisor::new(vec![1, 1, 0, 0]), 0, 1).is_err());
        assert!(rank_zero_certificate(&k4, &Divisor::new(vec![-1, 0, 0, 0]), 0, 1).is_err());
        // not 0-reduced: the three chips off 0 can fire together
        assert!(rank_zero_certificate(&k4, &Divisor::indicator(4, &[1, 2, 3]), 0, 1).is_err());
        // (n-1)(q) on K_n has positive rank, so no certificate exists
        let win = Divisor::point(4, 0, 3);
        for v in 1..4 {
            assert!(!rank_zero_certificate(&k4, &win, 0, v).unwrap());
        }
    }

    #[test]
    fn slashed_ladder_mf_divisors_burn_from_a_chipless_column() {
        let m = 4;
        let g = families::slashed_ladder(m).unwrap();
        for cut in crate::subsets::Combinations::new(2 * m, 3) {
            let d = Divisor::indicator(2 * m, &cut);
            let col = (0..m).find(|&i| d[i] == 0 && d[m + i] == 0).unwrap();
            assert!(burns_completely_from(&g, &d, col).unwrap());
        }
    }
}
