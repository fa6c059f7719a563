use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{CanonicalCode, Edge, XTree};
use crate::terms::Letter;

/// All rooted unlabelled trees on `n ≥ 1` vertices, as parent arrays with the
/// root at index 0 (`parents[0] = 0`), generated from level sequences in
/// constant amortised time per tree.
pub fn rooted_shapes(n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut level: Vec<usize> = (1..=n).collect();
    loop {
        out.push(parents_of(&level));
        let Some(p) = level.iter().rposition(|&l| l != 2).filter(|&p| p > 0) else {
            break;
        };
        let q = (0..p).rev().find(|&i| level[i] == level[p] - 1).unwrap();
        for i in p..n {
            level[i] = level[i - (p - q)];
        }
    }
    out
}

fn parents_of(level: &[usize]) -> Vec<usize> {
    let mut parents = vec![0; level.len()];
    let mut last_at = vec![0usize; level.len() + 2];
    for (i, &l) in level.iter().enumerate() {
        if i > 0 {
            parents[i] = last_at[l - 1];
        }
        last_at[l] = i;
    }
    parents
}

/// Every X-tree with exactly `edges` edges over `labels`, up to isomorphism,
/// keyed by canonical code. `keep` filters candidates before deduplication.
pub fn all_trees<F>(edges: usize, labels: &[Letter], keep: F) -> BTreeMap<CanonicalCode, XTree>
where
    F: Fn(&XTree) -> bool + Sync,
{
    let n = edges + 1;
    let shapes = rooted_shapes(n);
    let label_count = labels.len().max(1);
    let label_combos = label_count.pow(edges as u32);
    let found: Vec<(CanonicalCode, XTree)> = shapes
        .par_iter()
        .flat_map_iter(|parents| {
            let mut local = BTreeMap::new();
            for mask in 0u64..(1u64 << edges) {
                for combo in 0..label_combos {
                    let mut c = combo;
                    let es: Vec<Edge> = (1..n)
                        .map(|v| {
                            let label = labels[c % label_count];
                            c /= label_count;
                            if mask >> (v - 1) & 1 == 1 {
                                Edge::new(parents[v], v, label)
                            } else {
                                Edge::new(v, parents[v], label)
                            }
                        })
                        .collect();
                    let probe = XTree::new_unchecked_unrooted(n, es);
                    for end in probe.reachable_from(0) {
                        let t = XTree::new_unchecked(n, 0, end, probe.edges().to_vec());
                        if keep(&t) {
                            local.entry(t.canonical_code()).or_insert(t);
                        }
                    }
                }
            }
            local.into_iter()
        })
        .collect();
    found.into_iter().collect()
}

/// All monogenic trees with at most `max_edges` edges, up to isomorphism.
pub fn all_monogenic(max_edges: usize, label: Letter) -> Vec<XTree> {
    (0..=max_edges)
        .flat_map(|m| all_trees(m, &[label], |_| true).into_values())
        .collect()
}
