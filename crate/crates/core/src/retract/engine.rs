use std::collections::VecDeque;

use super::hom::HomSearch;
use crate::trees::{Arc, XTree};

/// A non-trunk edge together with everything hanging beyond it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    /// Endpoint of the edge on the trunk side.
    pub anchor: usize,
    /// Index of the edge in `XTree::edges`.
    pub edge: usize,
    /// Endpoint of the edge away from the trunk.
    pub child: usize,
    /// Vertices of the branch, `child` first; never contains a trunk vertex.
    pub subtree: Vec<usize>,
}

/// All branches of `t`, ordered by edge index.
pub fn branches(t: &XTree) -> Vec<Branch> {
    let adj = t.adjacency();
    let trunk = t.trunk();
    let n = t.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in &trunk.vertices {
        parent[v] = v;
        queue.push_back(v);
    }
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for a in &adj[v] {
            if parent[a.to] == usize::MAX {
                parent[a.to] = v;
                queue.push_back(a.to);
            }
        }
    }
    let mut out: Vec<Branch> = Vec::new();
    for (i, e) in t.edges().iter().enumerate() {
        if trunk.edges.contains(&i) {
            continue;
        }
        let (anchor, child) = if parent[e.dst] == e.src {
            (e.src, e.dst)
        } else {
            (e.dst, e.src)
        };
        let mut subtree = vec![child];
        let mut k = 0;
        while k < subtree.len() {
            let v = subtree[k];
            subtree.extend(adj[v].iter().filter(|a| parent[a.to] == v && a.to != v).map(|a| a.to));
            k += 1;
        }
        out.push(Branch {
            anchor,
            edge: i,
            child,
            subtree,
        });
    }
    out
}

/// Whether the branch maps, with its anchor fixed, into the rest of the tree.
/// Such a map together with the identity elsewhere is an idempotent
/// retraction deleting the branch.
pub fn is_foldable(t: &XTree, branch: &Branch) -> bool {
    let adj = t.adjacency();
    foldable_with(&adj, t.vertex_count(), branch)
}

fn foldable_with(adj: &[Vec<Arc>], n: usize, branch: &Branch) -> bool {
    let mut allowed = vec![true; n];
    for &v in &branch.subtree {
        allowed[v] = false;
    }
    let edge = branch.edge;
    let skip = move |a: &Arc| a.edge != edge;
    let mut search = HomSearch::new(adj, branch.anchor, adj, Some(&allowed), Some(&skip));
    search.fits(branch.anchor, branch.anchor)
}

/// The foldable branch with the lowest edge index, if any.
pub fn find_foldable_branch(t: &XTree) -> Option<Branch> {
    let adj = t.adjacency();
    branches(t)
        .into_iter()
        .find(|b| foldable_with(&adj, t.vertex_count(), b))
}

pub fn foldable_branches(t: &XTree) -> Vec<Branch> {
    let adj = t.adjacency();
    branches(t)
        .into_iter()
        .filter(|b| foldable_with(&adj, t.vertex_count(), b))
        .collect()
}

fn delete(t: &XTree, branch: &Branch) -> XTree {
    let mut keep = vec![true; t.vertex_count()];
    for &v in &branch.subtree {
        keep[v] = false;
    }
    t.induced(&keep)
}

/// Deletes foldable branches, always choosing the one at index
/// `choose(candidates)`, until none remain.
pub fn retract_by(t: &XTree, mut choose: impl FnMut(&[Branch]) -> usize) -> XTree {
    let mut cur = t.clone();
    loop {
        let candidates = foldable_branches(&cur);
        if candidates.is_empty() {
            return cur;
        }
        let pick = choose(&candidates);
        cur = delete(&cur, &candidates[pick]);
    }
}

/// Greedy deletion with the generic morphism test.
///
/// Terminates at the retract-free retract: if a retraction with image `R`
/// were still proper, an edge leaving `R` at a vertex of `R` starts a branch
/// disjoint from `R` (trees have unique paths), and the retraction restricted
/// to that branch witnesses that it is foldable.
pub fn retract_generic(t: &XTree) -> XTree {
    let mut cur = t.clone();
    while let Some(b) = find_foldable_branch(&cur) {
        cur = delete(&cur, &b);
    }
    cur
}

/// The retract-free retract of `t`, up to isomorphism.
pub fn retract(t: &XTree) -> XTree {
    if t.is_monogenic() {
        if t.is_left() {
            return retract_left_monogenic(t);
        }
        if t.is_right() {
            return retract_left_monogenic(&t.reverse()).reverse();
        }
    }
    retract_generic(t)
}

pub fn is_retract_free(t: &XTree) -> bool {
    if t.is_monogenic() && (t.is_left() || t.is_right()) {
        return retract(t).edge_count() == t.edge_count();
    }
    find_foldable_branch(t).is_none()
}

/// Height comparison retraction for a monogenic tree whose edges all point
/// away from the start. One subtree maps into a sibling iff it is no taller,
/// and keeping the tallest child preserves heights, so one top-down pass
/// suffices.
pub fn retract_left_monogenic(t: &XTree) -> XTree {
    debug_assert!(t.is_monogenic() && t.is_left());
    let n = t.vertex_count();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in t.edges() {
        children[e.src].push(e.dst);
    }
    let trunk = t.trunk();
    let mut next_on_trunk = vec![usize::MAX; n];
    for w in trunk.vertices.windows(2) {
        next_on_trunk[w[0]] = w[1];
    }
    // heights by reverse BFS order
    let mut order = vec![t.start()];
    let mut i = 0;
    while i < order.len() {
        order.extend(children[order[i]].iter().copied());
        i += 1;
    }
    let mut height = vec![0usize; n];
    for &v in order.iter().rev() {
        height[v] = children[v].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
    }
    let tallest = |v: usize, skip: usize| {
        children[v]
            .iter()
            .copied()
            .filter(|&c| c != skip)
            .max_by(|&a, &b| height[a].cmp(&height[b]).then(b.cmp(&a)))
    };
    let mut keep = vec![false; n];
    keep[t.start()] = true;
    let mut stack = vec![t.start()];
    while let Some(v) = stack.pop() {
        let trunk_child = next_on_trunk[v];
        let mut kept = Vec::new();
        if trunk_child != usize::MAX {
            kept.push(trunk_child);
            if let Some(c) = tallest(v, trunk_child) {
                if height[c] > height[trunk_child] {
                    kept.push(c);
                }
            }
        } else if let Some(c) = tallest(v, usize::MAX) {
            kept.push(c);
        }
        for c in kept {
            keep[c] = true;
            stack.push(c);
        }
    }
    t.induced(&keep)
}
