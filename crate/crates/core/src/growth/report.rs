use serde::Serialize;

use super::partitions::PartitionTable;
use super::sphere::{left_sphere, two_sided_sphere_bounded, Strategy};
use super::GrowthError;
use crate::scalar::{binomial, hardy_ramanujan};

#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    /// `|S_L(n)|` by structural enumeration.
    pub left_sphere: u64,
    /// `P(n+1)`.
    pub partitions: u64,
    /// Hardy–Ramanujan estimate of `P(n+1)`.
    pub hardy_ramanujan: f64,
    /// `|S(n)|` and `|S_E(n)|` in the monogenic two-sided monoid, when
    /// within the exact bound.
    pub two_sided: Option<u64>,
    pub two_sided_idempotents: Option<u64>,
    /// `C(n−1, ⌊(n−1)/2⌋)` for `n ≥ 1`.
    pub idempotent_lower_bound: Option<u64>,
    /// `rank^n · C(n−1, ⌊(n−1)/2⌋)` for `n ≥ 1`.
    pub rank_lower_bound: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub rank: usize,
    /// Base of the exponential lower bound on idempotents of rank `rank`.
    pub rank_growth_base: usize,
    pub rows: Vec<GrowthRow>,
}

impl GrowthReport {
    /// Whether `S_E(n) ≥ C(n−1, ⌊(n−1)/2⌋)` at every exactly computed `n`.
    pub fn idempotent_bound_holds(&self) -> bool {
        self.rows.iter().all(|r| match (r.two_sided_idempotents, r.idempotent_lower_bound) {
            (Some(e), Some(b)) => e >= b,
            _ => true,
        })
    }

    pub fn left_matches_partitions(&self) -> bool {
        self.rows.iter().all(|r| r.left_sphere == r.partitions)
    }
}

/// Exact counts up to `n_max`, with the two-sided sphere computed exactly up
/// to `two_sided_max`.
pub fn growth_report(n_max: usize, rank: usize, two_sided_max: usize) -> Result<GrowthReport, GrowthError> {
    let table = PartitionTable::<u64>::new(n_max + 1);
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let left = left_sphere(n, Strategy::Structural)?.census.total;
        let (two_sided, two_sided_idempotents) = if n <= two_sided_max {
            let s = two_sided_sphere_bounded(n, two_sided_max)?;
            (Some(s.census.total), Some(s.census.idempotent_count))
        } else {
            (None, None)
        };
        let bound = (n >= 1).then(|| binomial::<u64>(n - 1, (n - 1) / 2));
        rows.push(GrowthRow {
            n,
            left_sphere: left,
            partitions: table.p_total(n + 1),
            hardy_ramanujan: hardy_ramanujan(n + 1).expect("n + 1 ≥ 1"),
            two_sided,
            two_sided_idempotents,
            idempotent_lower_bound: bound,
            rank_lower_bound: bound.map(|b| (rank as u128).pow(n as u32) * b as u128),
        });
    }
    Ok(GrowthReport {
        rank,
        rank_growth_base: 2 * rank,
        rows,
    })
}
