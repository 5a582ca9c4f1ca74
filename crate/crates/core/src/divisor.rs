//! Divisors and chip-firing moves.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index, Sub};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::reduction;

/// An integer chip count on each vertex. Negative entries are debt.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor(Vec<i64>);

impl Divisor {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Divisor(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    /// `D_1`: one chip on every vertex.
    pub fn ones(n: usize) -> Self {
        Divisor(vec![1; n])
    }

    /// `k(v)`.
    pub fn point(n: usize, v: usize, k: i64) -> Self {
        let mut d = Self::zero(n);
        d.0[v] = k;
        d
    }

    /// Indicator divisor of a vertex list (one chip per listed vertex).
    pub fn indicator(n: usize, vertices: &[usize]) -> Self {
        let mut d = Self::zero(n);
        for &v in vertices {
            d.0[v] += 1;
        }
        d
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coefficients(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Effective with at most one chip per vertex.
    pub fn is_multiplicity_free(&self) -> bool {
        self.0.iter().all(|&c| c == 0 || c == 1)
    }

    pub fn add_chips(&mut self, v: usize, k: i64) {
        self.0[v] += k;
    }

    /// `self - (v)`.
    pub fn minus_point(&self, v: usize) -> Divisor {
        let mut d = self.clone();
        d.0[v] -= 1;
        d
    }

    /// Vertices carrying at least one chip.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] > 0).collect()
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub(crate) fn check_graph(&self, g: &Multigraph) -> Result<()> {
        if self.0.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// Fires every vertex of `set` once. Chips only cross the boundary.
    pub fn fire_set(&self, g: &Multigraph, set: &VertexSet) -> Result<Divisor> {
        self.check_graph(g)?;
        g.check_set(set)?;
        if !set.is_proper_nonempty() {
            return Err(Error::TrivialVertexSet);
        }
        let mut out = self.clone();
        fire_in_place(g, out.as_mut_slice(), set, 1);
        Ok(out)
    }

    /// Fires a single vertex once.
    pub fn fire_vertex(&self, g: &Multigraph, v: usize) -> Result<Divisor> {
        self.check_graph(g)?;
        let mut out = self.clone();
        out.0[v] -= g.valence(v) as i64;
        for &(w, m) in g.neighbors(v) {
            out.0[w] += m as i64;
        }
        Ok(out)
    }

    /// True iff firing `set` leaves every vertex out of debt.
    pub fn is_legal_firing(&self, g: &Multigraph, set: &VertexSet) -> Result<bool> {
        if let Some(v) = self.0.iter().position(|&c| c < 0) {
            return Err(Error::NotEffective(v));
        }
        Ok(self.fire_set(g, set)?.is_effective())
    }

    /// Linear equivalence, decided by comparing 0-reduced forms.
    pub fn equivalent(&self, g: &Multigraph, other: &Divisor) -> Result<bool> {
        self.check_graph(g)?;
        other.check_graph(g)?;
        if self.degree() != other.degree() {
            return Ok(false);
        }
        let a = reduction::reduced_form(g, self, 0)?;
        let b = reduction::reduced_form(g, other, 0)?;
        Ok(a == b)
    }
}

/// Compares coefficient vectors starting from the highest vertex index.
/// This is the order in which the searches enumerate candidates.
pub fn colex_cmp(a: &Divisor, b: &Divisor) -> Ordering {
    a.0.iter().rev().cmp(b.0.iter().rev())
}

pub(crate) fn fire_in_place(g: &Multigraph, d: &mut [i64], set: &VertexSet, times: i64) {
    for u in set.iter() {
        for &(w, m) in g.neighbors(u) {
            if !set.contains(w) {
                let flow = m as i64 * times;
                d[u] -= flow;
                d[w] += flow;
            }
        }
    }
}

impl Index<usize> for Divisor {
    type Output = i64;

    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Divisor {
    type Output = Divisor;

    fn sub(self, rhs: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "div {}:", self.0.len())?;
        for c in &self.0 {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}
