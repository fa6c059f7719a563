use std::fmt;

use serde::Serialize;

use super::GrowthError;
use crate::trees::{Edge, XTree};

pub const DEFAULT_ZIGZAG_BOUND: usize = 18;

/// A non-branching a-tree with start and end at one extremity, read from the
/// start: `true` for an edge pointing away from the start.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ZigZag(pub Vec<bool>);

impl ZigZag {
    /// `p_{n,i}`: `n − 2i − 1` toward edges, `2i` alternating edges starting
    /// away, one toward edge.
    pub fn p(n: usize, i: usize) -> ZigZag {
        assert!(2 * i < n, "p(n, i) needs i < n/2");
        let mut w = vec![false; n - 2 * i - 1];
        for j in 0..2 * i {
            w.push(j % 2 == 0);
        }
        w.push(false);
        ZigZag(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&a| a).count()
    }

    /// `self ≥ other`: every prefix of `self` has at least as many away
    /// edges as the prefix of `other` of the same length.
    pub fn dominates(&self, other: &ZigZag) -> bool {
        assert_eq!(self.len(), other.len());
        let (mut a, mut b) = (0, 0);
        self.0.iter().zip(&other.0).all(|(&x, &y)| {
            a += x as usize;
            b += y as usize;
            a >= b
        })
    }

    /// Vertex `j` is at distance `j` from the start; start and end are 0.
    pub fn to_tree(&self) -> XTree {
        let edges = self
            .0
            .iter()
            .enumerate()
            .map(|(j, &away)| {
                if away {
                    Edge::new(j, j + 1, 'a')
                } else {
                    Edge::new(j + 1, j, 'a')
                }
            })
            .collect();
        XTree::new(self.len() + 1, 0, 0, edges).expect("zig-zags are valid trees")
    }
}

impl fmt::Display for ZigZag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.0 {
            f.write_str(if a { "A" } else { "T" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZigZagRow {
    pub i: usize,
    /// All zig-zags with `n` edges and height `i`.
    pub all_count: u64,
    /// `|Z(n, i)|`; zero when `2i ≥ n`.
    pub z_count: u64,
    pub members: Vec<ZigZag>,
}

/// For each height `i ≤ n`, the zig-zags of height `i` and the members of
/// `Z(n, i)` found by testing `T ≥ p_{n,i}`.
pub fn zigzag_census(n: usize) -> Result<Vec<ZigZagRow>, GrowthError> {
    zigzag_census_bounded(n, DEFAULT_ZIGZAG_BOUND)
}

pub fn zigzag_census_bounded(n: usize, bound: usize) -> Result<Vec<ZigZagRow>, GrowthError> {
    if n == 0 || n > bound {
        return Err(GrowthError::Bound { n, bound });
    }
    let mut rows: Vec<ZigZagRow> = (0..=n)
        .map(|i| ZigZagRow {
            i,
            all_count: 0,
            z_count: 0,
            members: Vec::new(),
        })
        .collect();
    let ps: Vec<Option<ZigZag>> = (0..=n).map(|i| (2 * i < n).then(|| ZigZag::p(n, i))).collect();
    for mask in 0u64..(1u64 << n) {
        let z = ZigZag((0..n).map(|j| mask >> j & 1 == 1).collect());
        let i = z.height();
        rows[i].all_count += 1;
        if let Some(p) = &ps[i] {
            if z.dominates(p) {
                rows[i].z_count += 1;
                rows[i].members.push(z);
            }
        }
    }
    for r in &mut rows {
        r.members.sort();
    }
    Ok(rows)
}

/// Toward edges minus away edges on the path from the start to `v`.
pub fn d_value(t: &XTree, v: usize) -> Result<i64, GrowthError> {
    let word = zigzag_word(t).ok_or(GrowthError::NotZigZag)?;
    if v >= t.vertex_count() {
        return Err(GrowthError::NotZigZag);
    }
    let (mut cur, mut prev, mut d) = (t.start(), usize::MAX, 0i64);
    let adj = t.adjacency();
    let mut step = 0;
    while cur != v {
        let a = adj[cur].iter().find(|a| a.to != prev).expect("path continues");
        d += if word.0[step] { -1 } else { 1 };
        step += 1;
        prev = cur;
        cur = a.to;
    }
    Ok(d)
}

/// The orientation word of `t` if it is a zig-zag tree.
pub fn zigzag_word(t: &XTree) -> Option<ZigZag> {
    if t.start() != t.end() || !t.is_monogenic() {
        return None;
    }
    let adj = t.adjacency();
    if adj.iter().any(|a| a.len() > 2) || adj[t.start()].len() > 1 {
        return None;
    }
    let mut word = Vec::new();
    let (mut cur, mut prev) = (t.start(), usize::MAX);
    while let Some(a) = adj[cur].iter().find(|a| a.to != prev) {
        word.push(a.dir == crate::trees::Dir::Out);
        prev = cur;
        cur = a.to;
    }
    Some(ZigZag(word))
}
