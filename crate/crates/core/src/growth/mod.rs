//! Partition arithmetic, sphere enumeration and growth reports for the
//! monogenic free adequate monoids.

mod ball;
mod partitions;
mod report;
mod sphere;
mod zigzag;

use thiserror::Error;

pub use ball::{word_balls, word_spheres};
pub use partitions::{distinct_partitions, sums_with_t, sums_with_t_check, PartitionTable};
pub use report::{growth_report, GrowthReport, GrowthRow};
pub use sphere::{
    first_branch, left_comb, left_sphere, left_sphere_bounded, two_sided_sphere,
    two_sided_sphere_bounded, CensusRow, Sphere, Strategy, CSV_HEADER, DEFAULT_LEFT_GENERIC_BOUND,
    DEFAULT_TWO_SIDED_BOUND,
};
pub use zigzag::{
    d_value, zigzag_census, zigzag_census_bounded, zigzag_word, ZigZag, ZigZagRow,
    DEFAULT_ZIGZAG_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    Bound { n: usize, bound: usize },
    #[error("not a zig-zag tree")]
    NotZigZag,
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::algebra::Flavor;
    use crate::retract::{for_each_endomorphism, is_retract_free};
    use crate::scalar::binomial;
    use crate::terms::Letter;
    use crate::trees::XTree;

    fn codes(s: &Sphere) -> BTreeSet<Vec<u8>> {
        s.elements.iter().map(|e| e.code().0.clone()).collect()
    }

    #[test]
    fn left_spheres_small() {
        let table = PartitionTable::<u64>::new(12);
        for n in 0..=8 {
            let s = left_sphere(n, Strategy::Structural).unwrap();
            let g = left_sphere(n, Strategy::Generic).unwrap();
            assert_eq!(codes(&s), codes(&g), "n = {n}");
            assert_eq!(s.census.total, table.p_total(n + 1));
            for k in 0..=n {
                assert_eq!(s.census.trunk(k), table.p((n + 1) as i64, (k + 1) as i64));
            }
            assert_eq!(s.census.trunk(n), 1);
            assert!(s.elements.iter().all(|e| is_retract_free(e.tree()) && e.edge_count() == n));
        }
        assert_eq!(left_sphere(5, Strategy::Structural).unwrap().census.total, 11);
        assert!(left_sphere(13, Strategy::Generic).is_err());
    }

    #[test]
    fn figure_two() {
        let s = left_sphere(6, Strategy::Structural).unwrap();
        let found: Vec<_> = s
            .elements
            .iter()
            .filter(|e| e.trunk_len() == 2 && first_branch(e.tree()) == Some(1))
            .collect();
        assert_eq!(found.len(), 2);
        let a = Letter('a');
        let one = left_comb(2, &[0, 4, 0], a);
        let two = left_comb(2, &[0, 3, 1], a);
        assert!(found.iter().any(|e| e.tree().isomorphic(&one)));
        assert!(found.iter().any(|e| e.tree().isomorphic(&two)));
    }

    #[test]
    fn two_sided_table() {
        let s: Vec<u64> = (0..=5).map(|n| two_sided_sphere(n).unwrap().census.total).collect();
        let e: Vec<u64> = (0..=5)
            .map(|n| two_sided_sphere(n).unwrap().census.idempotent_count)
            .collect();
        assert_eq!(s, vec![1, 3, 6, 14, 29, 74]);
        assert_eq!(e, vec![1, 2, 3, 6, 11, 28]);
        let one = two_sided_sphere(1).unwrap();
        for t in ["a", "a^+", "a^*"] {
            let v = crate::algebra::eval_free(&crate::terms::parse_term(t).unwrap(), Flavor::TwoSided).unwrap();
            assert!(one.elements.contains(&v));
        }
    }

    #[test]
    fn word_search_matches_edge_count() {
        let spheres = word_spheres(4, &[Letter('a')], Flavor::TwoSided);
        for (n, sphere) in spheres.iter().enumerate() {
            let enumerated = two_sided_sphere(n).unwrap();
            let found: BTreeSet<_> = sphere.iter().map(|e| e.code().0.clone()).collect();
            assert_eq!(found, codes(&enumerated), "n = {n}");
        }
        let left = word_spheres(5, &[Letter('a')], Flavor::Left);
        for (n, sphere) in left.iter().enumerate() {
            let found: BTreeSet<_> = sphere.iter().map(|e| e.code().0.clone()).collect();
            assert_eq!(found, codes(&left_sphere(n, Strategy::Structural).unwrap()));
        }
    }

    #[test]
    fn zigzags() {
        let rows = zigzag_census(6).unwrap();
        assert_eq!(rows[2].z_count, 5);
        assert_eq!(rows[0].z_count, 1);
        assert_eq!(rows[0].z_count + rows[1].z_count + rows[2].z_count, 10);
        assert_eq!(rows[3].z_count, 0);
        for n in 1..=12usize {
            let rows = zigzag_census(n).unwrap();
            let mut running = 0;
            for i in 0..n {
                assert_eq!(rows[i].all_count, binomial::<u64>(n, i));
                if 2 * i < n {
                    // (n − 2i)/n · C(n, i)
                    let expected = (n - 2 * i) as u64 * binomial::<u64>(n, i) / n as u64;
                    assert_eq!(rows[i].z_count, expected, "Z({n},{i})");
                    running += rows[i].z_count;
                    assert_eq!(running, binomial::<u64>(n - 1, i));
                    for z in &rows[i].members {
                        assert!(is_retract_free(&z.to_tree()));
                    }
                }
            }
        }
    }

    #[test]
    fn d_values() {
        for n in 1..=8 {
            for i in 0..n {
                if 2 * i >= n {
                    continue;
                }
                let t = ZigZag::p(n, i).to_tree();
                assert_eq!(d_value(&t, 0).unwrap(), 0);
                assert_eq!(d_value(&t, n).unwrap(), (n - 2 * i) as i64);
            }
        }
        assert!(d_value(&XTree::generator('a'), 0).is_err());
        // every endomorphism of every zig-zag with at most 8 edges keeps d
        for n in 1..=8usize {
            for mask in 0u64..(1 << n) {
                let t = ZigZag((0..n).map(|j| mask >> j & 1 == 1).collect()).to_tree();
                let d: Vec<i64> = (0..=n).map(|v| d_value(&t, v).unwrap()).collect();
                for_each_endomorphism(&t, 8, |m| {
                    assert!((0..=n).all(|v| d[m[v]] == d[v]));
                    std::ops::ControlFlow::Continue(())
                })
                .unwrap();
            }
        }
    }

    #[test]
    fn report() {
        let r = growth_report(8, 2, 5).unwrap();
        assert!(r.left_matches_partitions());
        assert!(r.idempotent_bound_holds());
        assert_eq!(r.rank_growth_base, 4);
        assert_eq!(r.rows[5].two_sided_idempotents, Some(28));
        assert_eq!(r.rows[5].idempotent_lower_bound, Some(6));
    }
}
