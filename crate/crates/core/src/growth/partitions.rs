use crate::scalar::{binomial, Count};

/// `P(n, k)`: partitions of `n` into exactly `k` parts, and `Q(n, k)`: into
/// exactly `k` distinct parts, for `0 ≤ k ≤ n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct PartitionTable<C> {
    n_max: usize,
    p: Vec<Vec<C>>,
    q: Vec<Vec<C>>,
}

impl<C: Count> PartitionTable<C> {
    pub fn new(n_max: usize) -> Self {
        Self::with_base(n_max, C::one())
    }

    /// The same recurrences seeded with `P(0, 0) = Q(0, 0) = base`. Only a
    /// base of one gives partition numbers; other values scale every entry
    /// and serve as a deliberately broken table.
    pub fn with_base(n_max: usize, base: C) -> Self {
        let mut p = vec![vec![C::zero(); n_max + 1]; n_max + 1];
        let mut q = vec![vec![C::zero(); n_max + 1]; n_max + 1];
        p[0][0] = base.clone();
        q[0][0] = base;
        for n in 1..=n_max {
            for k in 1..=n {
                p[n][k] = p[n - 1][k - 1].clone() + p[n - k][k].clone();
                q[n][k] = q[n - k][k - 1].clone() + q[n - k][k].clone();
            }
        }
        PartitionTable { n_max, p, q }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn lookup(table: &[Vec<C>], n: i64, k: i64) -> C {
        if n < 0 || k < 0 || k > n {
            return C::zero();
        }
        let (n, k) = (n as usize, k as usize);
        assert!(n < table.len(), "partition table exceeded: n = {n}");
        table[n][k].clone()
    }

    /// `P(n, k)`, zero outside `0 ≤ k ≤ n`.
    pub fn p(&self, n: i64, k: i64) -> C {
        Self::lookup(&self.p, n, k)
    }

    /// `Q(n, k)`, zero outside `0 ≤ k ≤ n`.
    pub fn q(&self, n: i64, k: i64) -> C {
        Self::lookup(&self.q, n, k)
    }

    /// `P(n)`, all partitions of `n`.
    pub fn p_total(&self, n: usize) -> C {
        self.p[n].iter().cloned().fold(C::zero(), |a, b| a + b)
    }

    /// `Q(n)`, partitions of `n` into distinct parts.
    pub fn q_total(&self, n: usize) -> C {
        self.q[n].iter().cloned().fold(C::zero(), |a, b| a + b)
    }
}

impl<C: Count> PartitionTable<C>
where
    for<'a> &'a C: std::ops::Mul<&'a C, Output = C> + std::ops::Div<&'a C, Output = C>,
{
    /// Checks `P(n, k) = Q(n + C(k, 2), k)` wherever both sides are in the
    /// table.
    pub fn cross_law_holds(&self) -> bool {
        (0..=self.n_max).all(|n| {
            (0..=n).all(|k| {
                let shifted = n + binomial::<u64>(k, 2) as usize;
                shifted > self.n_max || self.p(n as i64, k as i64) == self.q(shifted as i64, k as i64)
            })
        })
    }
}

/// Both sides of the subset-sum identity over `Q` with parameters `m, r, t`,
/// where `[j] = {0, …, j}` and `[-1]` is empty.
pub fn sums_with_t<C: Count>(table: &PartitionTable<C>, m: i64, r: i64, t: i64) -> (C, C) {
    let side = |top: i64, base: i64, extra: i64| {
        let size = (top + 1).max(0) as u32;
        let mut acc = C::zero();
        for mask in 0u64..(1u64 << size) {
            let sum: i64 = (0..size as i64).filter(|i| mask >> i & 1 == 1).sum();
            let card = mask.count_ones() as i64;
            acc = acc + table.q(base - sum, card + extra);
        }
        acc
    };
    let lhs = side(r - 1, m, t);
    let rhs = side(r - 2, m + t + 1, t + 1);
    (lhs, rhs)
}

pub fn sums_with_t_check<C: Count>(table: &PartitionTable<C>, m: i64, r: i64, t: i64) -> bool {
    let (l, r) = sums_with_t(table, m, r, t);
    l == r
}

/// Distinct-part partitions of `n` into exactly `parts` parts, each listed in
/// increasing order.
pub fn distinct_partitions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, parts: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        // the smallest possible completion is min + (min+1) + … (parts terms)
        let mut x = min;
        while x * parts + parts * (parts - 1) / 2 <= remaining {
            acc.push(x);
            go(remaining - x, parts - 1, x + 1, acc, out);
            acc.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(n, parts, 1, &mut Vec::new(), &mut out);
    out
}
