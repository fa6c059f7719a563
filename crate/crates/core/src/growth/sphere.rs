use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::partitions::distinct_partitions;
use super::GrowthError;
use crate::algebra::{Element, Flavor};
use crate::retract::is_retract_free;
use crate::terms::Letter;
use crate::trees::{all_trees, rooted_shapes, Edge, XTree};

pub const DEFAULT_LEFT_GENERIC_BOUND: usize = 12;
pub const DEFAULT_TWO_SIDED_BOUND: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Build each tree from its branch-length partition data.
    Structural,
    /// Enumerate every left tree and keep the retract-free ones.
    Generic,
}

/// Counts for the elements with `n` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: u64,
    pub by_trunk: BTreeMap<usize, u64>,
    /// `(k, l, count)`: trunk length `k` and first branching trunk vertex
    /// `v_l`; trees without branches are not listed.
    pub by_trunk_and_first_branch: Vec<(usize, usize, u64)>,
    pub idempotent_count: u64,
}

impl CensusRow {
    pub fn from_elements(n: usize, elements: &[Element]) -> Self {
        let mut by_trunk = BTreeMap::new();
        let mut by_first = BTreeMap::new();
        let mut idempotent_count = 0;
        for e in elements {
            let k = e.trunk_len();
            *by_trunk.entry(k).or_insert(0) += 1;
            if let Some(l) = first_branch(e.tree()) {
                *by_first.entry((k, l)).or_insert(0u64) += 1;
            }
            if e.is_idempotent() {
                idempotent_count += 1;
            }
        }
        CensusRow {
            n,
            total: elements.len() as u64,
            by_trunk,
            by_trunk_and_first_branch: by_first.into_iter().map(|((k, l), c)| (k, l, c)).collect(),
            idempotent_count,
        }
    }

    pub fn trunk(&self, k: usize) -> u64 {
        self.by_trunk.get(&k).copied().unwrap_or(0)
    }

    pub fn trunk_and_first_branch(&self, k: usize, l: usize) -> u64 {
        self.by_trunk_and_first_branch
            .iter()
            .find(|&&(kk, ll, _)| kk == k && ll == l)
            .map_or(0, |&(_, _, c)| c)
    }

    /// CSV lines `n,total,k,count_by_trunk,idempotent_count`, one per trunk
    /// length `0..=n`.
    pub fn csv_rows(&self) -> Vec<String> {
        (0..=self.n)
            .map(|k| {
                format!(
                    "{},{},{},{},{}",
                    self.n,
                    self.total,
                    k,
                    self.trunk(k),
                    self.idempotent_count
                )
            })
            .collect()
    }
}

pub const CSV_HEADER: &str = "n,total,k,count_by_trunk,idempotent_count";

/// The least `i` such that a non-trunk edge starts at trunk vertex `v_i`.
pub fn first_branch(t: &XTree) -> Option<usize> {
    let trunk = t.trunk();
    let mut position = vec![usize::MAX; t.vertex_count()];
    for (i, &v) in trunk.vertices.iter().enumerate() {
        position[v] = i;
    }
    t.edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !trunk.edges.contains(i))
        .map(|(_, e)| position[e.src])
        .filter(|&p| p != usize::MAX)
        .min()
}

/// Elements with `n` edges, sorted by canonical code, and their census.
#[derive(Clone, Debug)]
pub struct Sphere {
    pub elements: Vec<Element>,
    pub census: CensusRow,
}

impl Sphere {
    fn from_unsorted(n: usize, mut elements: Vec<Element>) -> Self {
        elements.sort_by(|a, b| a.code().cmp(b.code()));
        elements.dedup();
        let census = CensusRow::from_elements(n, &elements);
        Sphere { elements, census }
    }
}

/// Left tree with trunk `v_0 → … → v_k` and an out-path of `lengths[i]`
/// edges at `v_i`.
pub fn left_comb(k: usize, lengths: &[usize], label: Letter) -> XTree {
    let mut edges: Vec<Edge> = (0..k).map(|i| Edge::new(i, i + 1, label)).collect();
    let mut next = k + 1;
    for (i, &len) in lengths.iter().enumerate() {
        let mut at = i;
        for _ in 0..len {
            edges.push(Edge::new(at, next, label));
            at = next;
            next += 1;
        }
    }
    XTree::new(next, 0, k, edges).expect("combs are valid trees")
}

/// The structural generator: for each trunk length `k`, each set `Y ⊆
/// {0..k}` of branch offsets (counted back from the end) and each partition
/// of `n − k − ΣY` into `|Y|` distinct parts, pair the offsets and the parts
/// in increasing order; offset `x` with part `τ` gives a branch of length
/// `x + τ` at `v_{k−x}`.
fn structural_trees(n: usize, label: Letter) -> Vec<XTree> {
    let mut out = Vec::new();
    for k in 0..=n {
        for mask in 0u64..(1u64 << (k + 1)) {
            let ys: Vec<usize> = (0..=k).filter(|&i| mask >> i & 1 == 1).collect();
            let sum: usize = ys.iter().sum();
            if k + sum > n {
                continue;
            }
            for parts in distinct_partitions(n - k - sum, ys.len()) {
                let mut lengths = vec![0; k + 1];
                for (&x, &tau) in ys.iter().zip(&parts) {
                    lengths[k - x] = x + tau;
                }
                out.push(left_comb(k, &lengths, label));
            }
        }
    }
    out
}

/// Every left tree with `n` edges over one letter: all rooted shapes with
/// edges directed away from the root, every choice of end vertex.
fn generic_left_trees(n: usize, label: Letter) -> Vec<XTree> {
    rooted_shapes(n + 1)
        .par_iter()
        .flat_map_iter(|parents| {
            let edges: Vec<Edge> = (1..=n).map(|v| Edge::new(parents[v], v, label)).collect();
            (0..=n)
                .map(move |end| XTree::new(n + 1, 0, end, edges.clone()).expect("out-trees have trunks"))
                .filter(is_retract_free)
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `S_L(n)` for the monogenic free left adequate monoid.
pub fn left_sphere(n: usize, strategy: Strategy) -> Result<Sphere, GrowthError> {
    left_sphere_bounded(n, strategy, DEFAULT_LEFT_GENERIC_BOUND)
}

pub fn left_sphere_bounded(n: usize, strategy: Strategy, generic_bound: usize) -> Result<Sphere, GrowthError> {
    let a = Letter('a');
    let trees = match strategy {
        Strategy::Structural => structural_trees(n, a),
        Strategy::Generic => {
            if n > generic_bound {
                return Err(GrowthError::Bound { n, bound: generic_bound });
            }
            generic_left_trees(n, a)
        }
    };
    let elements = trees
        .into_iter()
        .map(|t| Element::from_retract_free(t, Flavor::Left))
        .collect();
    Ok(Sphere::from_unsorted(n, elements))
}

/// `S(n)` for the monogenic free adequate monoid, by exhaustive enumeration.
pub fn two_sided_sphere(n: usize) -> Result<Sphere, GrowthError> {
    two_sided_sphere_bounded(n, DEFAULT_TWO_SIDED_BOUND)
}

pub fn two_sided_sphere_bounded(n: usize, bound: usize) -> Result<Sphere, GrowthError> {
    if n > bound {
        return Err(GrowthError::Bound { n, bound });
    }
    let elements = all_trees(n, &[Letter('a')], is_retract_free)
        .into_values()
        .map(|t| Element::from_retract_free(t, Flavor::TwoSided))
        .collect();
    Ok(Sphere::from_unsorted(n, elements))
}
