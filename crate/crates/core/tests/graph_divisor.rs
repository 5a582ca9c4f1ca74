mod common;

use chipfire::catalog;
use chipfire::families;
use chipfire::{Divisor, VertexSet};
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn laplacian_is_symmetric_with_zero_row_sums(g in multigraph(8, 3)) {
        let l = g.laplacian();
        for (i, row) in l.iter().enumerate() {
            prop_assert_eq!(row.iter().sum::<i64>(), 0);
            for (j, &x) in row.iter().enumerate() {
                prop_assert_eq!(x, l[j][i]);
            }
        }
    }

    #[test]
    fn outdegree_is_valence_sum_minus_twice_internal_edges(g in multigraph(8, 3), seed in any::<u64>()) {
        let Some(set) = proper_subset(&mut rng(seed), g.vertex_count()) else { return Ok(()) };
        let valence: u64 = set.iter().map(|v| g.valence(v)).sum();
        let internal: u64 = g
            .edges()
            .filter(|&(u, v, _)| set.contains(u) && set.contains(v))
            .map(|(_, _, m)| m as u64)
            .sum();
        prop_assert_eq!(g.outdegree(&set).unwrap(), valence - 2 * internal);
    }

    #[test]
    fn canonical_divisor_has_degree_2g_minus_2(g in multigraph(8, 3)) {
        prop_assert_eq!(g.canonical_divisor().degree(), 2 * g.genus() as i64 - 2);
    }

    #[test]
    fn set_firing_conserves_degree_and_matches_vertex_firings(
        g in multigraph(7, 3),
        seed in any::<u64>(),
    ) {
        let mut r = rng(seed);
        let n = g.vertex_count();
        let Some(set) = proper_subset(&mut r, n) else { return Ok(()) };
        let d = divisor_on(&mut r, n, -4, 6);
        let fired = d.fire_set(&g, &set).unwrap();
        prop_assert_eq!(fired.degree(), d.degree());
        let mut order = set.to_vec();
        order.reverse();
        let mut step = d.clone();
        for v in order {
            step = step.fire_vertex(&g, v).unwrap();
        }
        prop_assert_eq!(step, fired);
    }
}

#[test]
fn small_separators_have_large_outdegree() {
    // k-connected simple G, 2 <= |U| <= k - 1 => outdegree(U) >= k + 1
    let mut checked = 0;
    for n in 3..=7 {
        for g in catalog::connected_simple_graphs(n) {
            let k = g.vertex_connectivity();
            for mask in 1u32..(1 << n) - 1 {
                let size = mask.count_ones() as usize;
                if size < 2 || size + 1 > k {
                    continue;
                }
                let set = VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1)).unwrap();
                assert!(g.outdegree(&set).unwrap() > k as u64);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn multipartite_connectivity() {
    for parts in catalog::partitions_into_parts(8) {
        let g = families::complete_multipartite(&parts).unwrap();
        let total: usize = parts.iter().sum();
        assert_eq!(g.vertex_connectivity(), total - parts.iter().max().unwrap());
    }
}

#[test]
fn equivalence_agrees_with_linear_algebra() {
    let mut r = rng(500);
    let mut equivalent_pairs = 0;
    for case in 0..600 {
        let n = 1 + case % 7;
        let g = catalog::random_connected_multigraph(&mut r, n, case % 5, 3);
        let a = divisor_on(&mut r, n, -3, 5);
        let b = if case % 2 == 0 {
            scramble(&mut r, &g, &a, 4)
        } else {
            // same degree, usually inequivalent
            let mut b = divisor_on(&mut r, n, -3, 5);
            let shift = a.degree() - b.degree();
            b.add_chips(0, shift);
            b
        };
        let expected = equivalent_by_linear_algebra(&g, &a, &b);
        assert_eq!(a.equivalent(&g, &b).unwrap(), expected, "{g:?} {a} {b}");
        equivalent_pairs += expected as usize;
    }
    assert!(equivalent_pairs >= 300);
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let mut r = rng(501);
    for _ in 0..200 {
        let g = catalog::random_connected_multigraph(&mut r, 5, 3, 2);
        let a = divisor_on(&mut r, 5, -2, 3);
        let b = scramble(&mut r, &g, &a, 3);
        let c = scramble(&mut r, &g, &b, 3);
        assert!(a.equivalent(&g, &a).unwrap());
        assert_eq!(a.equivalent(&g, &b).unwrap(), b.equivalent(&g, &a).unwrap());
        assert!(a.equivalent(&g, &c).unwrap());
        let other = Divisor::point(5, 4, 1);
        assert!(!a.equivalent(&g, &(&a + &other)).unwrap());
    }
}
