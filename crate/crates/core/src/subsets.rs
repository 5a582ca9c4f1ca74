//! k-subsets of `{0, .., n-1}` in colexicographic order, with ranking and
//! unranking through the combinatorial number system so that ranges of the
//! enumeration can be handed to independent workers.

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// A position in the colex enumeration of k-subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColexCursor {
    n: usize,
    items: Vec<usize>,
}

impl ColexCursor {
    /// The colex-first subset `{0, .., k-1}`, or `None` when `k > n`.
    pub fn first(n: usize, k: usize) -> Option<Self> {
        (k <= n).then(|| ColexCursor {
            n,
            items: (0..k).collect(),
        })
    }

    /// The subset with the given colex rank. `rank` must be below `C(n, k)`.
    pub fn from_rank(n: usize, k: usize, mut rank: u64) -> Self {
        let mut items = vec![0; k];
        let mut upper = n;
        for i in (1..=k).rev() {
            // largest c < upper with C(c, i) <= rank
            let mut c = upper - 1;
            while binomial(c as u64, i as u64) > rank {
                c -= 1;
            }
            items[i - 1] = c;
            rank -= binomial(c as u64, i as u64);
            upper = c;
        }
        ColexCursor { n, items }
    }

    pub fn rank(&self) -> u64 {
        self.items
            .iter()
            .enumerate()
            .map(|(i, &c)| binomial(c as u64, i as u64 + 1))
            .sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.items
    }

    /// Steps to the colex successor; returns false when exhausted.
    pub fn advance(&mut self) -> bool {
        let k = self.items.len();
        for i in 0..k {
            let limit = if i + 1 < k { self.items[i + 1] } else { self.n };
            if self.items[i] + 1 < limit {
                self.items[i] += 1;
                for (j, slot) in self.items[..i].iter_mut().enumerate() {
                    *slot = j;
                }
                return true;
            }
        }
        false
    }
}

/// Iterator over all k-subsets in colex order.
pub struct Combinations {
    cursor: Option<ColexCursor>,
    started: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            cursor: ColexCursor::first(n, k),
            started: false,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cursor = self.cursor.as_mut()?;
        if self.started && !cursor.advance() {
            self.cursor = None;
            return None;
        }
        self.started = true;
        Some(cursor.as_slice().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(22, 10), 646_646);
        assert_eq!(binomial(18, 8), 43_758);
        assert_eq!(binomial(36, 16), 7_307_872_110);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn colex_order_small() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn enumeration_count_matches_binomial() {
        for n in 0..10 {
            for k in 0..=n {
                assert_eq!(
                    Combinations::new(n, k).count() as u64,
                    binomial(n as u64, k as u64)
                );
            }
        }
    }

    proptest! {
        #[test]
        fn rank_unrank_round_trip(n in 1usize..20, k_frac in 0.0f64..1.0, r_frac in 0.0f64..1.0) {
            let k = ((n as f64) * k_frac) as usize;
            let total = binomial(n as u64, k as u64);
            let rank = ((total as f64) * r_frac) as u64 % total;
            let c = ColexCursor::from_rank(n, k, rank);
            prop_assert_eq!(c.rank(), rank);
            let mut d = c.clone();
            if d.advance() {
                prop_assert_eq!(d.rank(), rank + 1);
            } else {
                prop_assert_eq!(rank + 1, total);
            }
        }
    }
}
