//! Closed-form gonality values for the named families. Everything is exact
//! integer arithmetic; a value the theory does not pin down is reported as
//! unknown rather than guessed.

use std::fmt;

use crate::families::FamilySpec;
use crate::graph::Multigraph;

pub fn floor_sqrt(n: u64) -> u64 {
    n.isqrt()
}

pub fn ceil_sqrt(n: u64) -> u64 {
    let f = n.isqrt();
    if f * f == n {
        f
    } else {
        f + 1
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `ceil(sqrt n) - 1 + ceil(n / ceil(sqrt n))`.
pub fn wheel_gon(n: u64) -> u64 {
    let c = ceil_sqrt(n);
    c - 1 + ceil_div(n, c)
}

/// `ceil(n / 2) + 1`.
pub fn wheel_mfgon(n: u64) -> u64 {
    ceil_div(n, 2) + 1
}

/// `(n_1 - 1) n_2 .. n_l` with the factors sorted ascending.
pub fn rook_mfgon(dims: &[u64]) -> u64 {
    let mut dims = dims.to_vec();
    dims.sort_unstable();
    (dims[0] - 1) * dims[1..].iter().product::<u64>()
}

/// Whether the wheel formula gives the same value with `floor(sqrt n)` in
/// place of `ceil(sqrt n)`.
pub fn floor_ceil_identity(n: u64) -> bool {
    let f = floor_sqrt(n);
    wheel_gon(n) == f - 1 + ceil_div(n, f)
}

pub fn wheel_equality_predicate(n: u64) -> bool {
    wheel_gon(n) == wheel_mfgon(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Gon,
    MfGon,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Gon => "gon",
            Quantity::MfGon => "mfgon",
        })
    }
}

/// A proven value for one quantity, or `None` when no formula applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub quantity: Quantity,
    pub value: Option<u64>,
    pub source: &'static str,
}

impl Prediction {
    fn known(quantity: Quantity, value: u64, source: &'static str) -> Self {
        Prediction {
            quantity,
            value: Some(value),
            source,
        }
    }

    fn unknown(quantity: Quantity) -> Self {
        Prediction {
            quantity,
            value: None,
            source: "no formula",
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Some(v) => write!(f, "{}={} [{}]", self.quantity, v, self.source),
            None => write!(f, "{}=unknown [{}]", self.quantity, self.source),
        }
    }
}

fn both(gon: u64, mfgon: u64, source: &'static str) -> (Prediction, Prediction) {
    (
        Prediction::known(Quantity::Gon, gon, source),
        Prediction::known(Quantity::MfGon, mfgon, source),
    )
}

/// Values that follow from structure alone: trees, dense simple graphs,
/// and graphs whose every edge is multiple.
fn structural(g: &Multigraph) -> (Prediction, Prediction) {
    let n = g.vertex_count() as u64;
    if g.edge_count() == n - 1 {
        return both(1, 1, "tree");
    }
    if g.is_simple() && g.min_valence() > n / 2 {
        let a = g.independence_number() as u64;
        return both(n - a, n - a, "min valence above n/2: n - alpha");
    }
    let mf = if g.all_edges_multiple() {
        Prediction::known(Quantity::MfGon, n, "all edges multiple: |V|")
    } else {
        Prediction::unknown(Quantity::MfGon)
    };
    (Prediction::unknown(Quantity::Gon), mf)
}

/// The `(gon, mfgon)` pair for a family instance. Returns `None` when the
/// spec does not describe a valid graph.
pub fn predicted(spec: &FamilySpec) -> Option<(Prediction, Prediction)> {
    let g = spec.build().ok()?;
    let n = g.vertex_count() as u64;
    let pair = match spec {
        FamilySpec::Path(_) | FamilySpec::Tree(_) => both(1, 1, "tree"),
        FamilySpec::Cycle(_) => both(2, 2, "cycle"),
        FamilySpec::Complete(1) => both(1, 1, "tree"),
        FamilySpec::Complete(k) => both(*k as u64 - 1, *k as u64 - 1, "complete graph: n - 1"),
        FamilySpec::CompleteMultipartite(parts) => {
            let v = n - *parts.iter().max().unwrap() as u64;
            both(v, v, "complete multipartite: n - largest part")
        }
        FamilySpec::Multipath {
            vertices,
            multiplicity,
        } => {
            if *multiplicity == 1 {
                both(1, 1, "tree")
            } else {
                let (j, i) = (*vertices as u64, *multiplicity as u64);
                (
                    Prediction::known(Quantity::Gon, i.min(j), "multipath: min(i, j)"),
                    Prediction::known(Quantity::MfGon, j, "multipath: j"),
                )
            }
        }
        FamilySpec::SlashedLadder(2) => both(2, 2, "complete multipartite: n - largest part"),
        FamilySpec::SlashedLadder(m) => (
            Prediction::known(Quantity::Gon, 3, "slashed ladder: 3"),
            Prediction::known(Quantity::MfGon, *m as u64, "slashed ladder: m"),
        ),
        FamilySpec::CompleteSlashedLadder { m, n: k } => (
            Prediction::known(Quantity::Gon, *k as u64, "complete slashed ladder: n"),
            Prediction::known(
                Quantity::MfGon,
                (*k + *m - 2) as u64,
                "complete slashed ladder: n + m - 2",
            ),
        ),
        FamilySpec::Wheel(k) => (
            Prediction::known(
                Quantity::Gon,
                wheel_gon(*k as u64),
                "wheel: ceil(sqrt n) - 1 + ceil(n / ceil(sqrt n))",
            ),
            Prediction::known(Quantity::MfGon, wheel_mfgon(*k as u64), "wheel: ceil(n/2) + 1"),
        ),
        FamilySpec::Rook(dims) => {
            let d: Vec<u64> = dims.iter().map(|&x| x as u64).collect();
            let mf = Prediction::known(
                Quantity::MfGon,
                rook_mfgon(&d),
                "rook: (n_1 - 1) n_2 .. n_l",
            );
            let mut sorted = d.clone();
            sorted.sort_unstable();
            let gon = match sorted.as_slice() {
                [k] => Prediction::known(Quantity::Gon, k - 1, "complete graph: n - 1"),
                [2, 2] => Prediction::known(Quantity::Gon, 2, "cycle"),
                [2, 3, 4] => Prediction::known(Quantity::Gon, 12, "rook K2xK3xK4: 12"),
                _ => Prediction::unknown(Quantity::Gon),
            };
            (gon, mf)
        }
        _ => structural(&g),
    };
    Some(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots_are_exact() {
        for n in 0..10_000u64 {
            let f = floor_sqrt(n);
            assert!(f * f <= n && (f + 1) * (f + 1) > n);
            let c = ceil_sqrt(n);
            assert!(c * c >= n && (c == 0 || (c - 1) * (c - 1) < n));
        }
        let big = (1u64 << 32) - 1;
        assert_eq!(floor_sqrt(big * big), big);
        assert_eq!(ceil_sqrt(big * big + 1), big + 1);
    }

    #[test]
    fn wheel_values() {
        assert_eq!(wheel_gon(3), 3);
        assert_eq!(wheel_gon(9), 5);
        assert_eq!(wheel_gon(12), 6);
        assert_eq!(wheel_mfgon(3), 3);
        assert_eq!(wheel_mfgon(8), 5);
        assert_eq!(wheel_mfgon(9), 6);
        assert!(wheel_equality_predicate(8));
        assert!(!wheel_equality_predicate(9));
        assert!(!wheel_equality_predicate(200));
    }

    #[test]
    fn rook_values() {
        assert_eq!(rook_mfgon(&[2, 2]), 2);
        assert_eq!(rook_mfgon(&[3, 3]), 6);
        assert_eq!(rook_mfgon(&[2, 3, 4]), 12);
        assert_eq!(rook_mfgon(&[4, 2, 3]), 12);
    }

    #[test]
    fn floor_ceil_examples() {
        assert!(floor_ceil_identity(7));
        assert_eq!(wheel_gon(7), 5);
        assert!(floor_ceil_identity(16));
        assert_eq!(wheel_gon(16), 7);
        assert!((1..5000).all(floor_ceil_identity));
    }

    fn predict(text: &str) -> (Option<u64>, Option<u64>) {
        let words: Vec<&str> = text.split_whitespace().collect();
        let spec = FamilySpec::parse(words[0], &words[1..]).unwrap();
        let (g, m) = predicted(&spec).unwrap();
        assert_eq!(g.quantity, Quantity::Gon);
        assert_eq!(m.quantity, Quantity::MfGon);
        (g.value, m.value)
    }

    #[test]
    fn predictions() {
        assert_eq!(predict("complete_slashed_ladder 6 5"), (Some(5), Some(9)));
        assert_eq!(predict("rook 3 3"), (None, Some(6)));
        assert_eq!(predict("multipath 4 2"), (Some(2), Some(4)));
        assert_eq!(predict("multipath 5 3"), (Some(3), Some(5)));
        assert_eq!(predict("complete_multipartite 2 3"), (Some(2), Some(2)));
        assert_eq!(predict("cycle 6"), (Some(2), Some(2)));
        assert_eq!(predict("regular_gap_multi 4"), (None, Some(5)));
        assert_eq!(predict("antiprism 11"), (None, None));
        // K_4 with a two-vertex cone: 6 vertices, min valence 5, alpha 1
        assert_eq!(predict("cone 2 complete 4"), (Some(5), Some(5)));
        // C_4 coned twice: alpha = 2
        assert_eq!(predict("cone 4 cycle 4"), (Some(6), Some(6)));
    }

    #[test]
    fn predicted_mfgon_dominates_gon() {
        for text in [
            "wheel 3",
            "wheel 12",
            "multipath 2 5",
            "slashed_ladder 5",
            "complete_slashed_ladder 3 4",
            "rook 2 3 4",
            "complete 7",
        ] {
            if let (Some(g), Some(m)) = predict(text) {
                assert!(g <= m, "{text}");
            }
        }
    }
}
