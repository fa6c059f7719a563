use std::collections::HashMap;

use super::RetractError;
use crate::trees::{Arc, XTree};

/// Label- and direction-preserving map search from a rooted pattern into a
/// host, memoised on (pattern vertex, host vertex).
pub(crate) struct HomSearch<'a> {
    pattern: &'a [Vec<Arc>],
    host: &'a [Vec<Arc>],
    allowed: Option<&'a [bool]>,
    parent: Vec<usize>,
    memo: HashMap<(usize, usize), bool>,
}

impl<'a> HomSearch<'a> {
    pub(crate) fn new(
        pattern: &'a [Vec<Arc>],
        root: usize,
        host: &'a [Vec<Arc>],
        allowed: Option<&'a [bool]>,
        skip_from_root: Option<&dyn Fn(&Arc) -> bool>,
    ) -> Self {
        let mut parent = vec![usize::MAX; pattern.len()];
        parent[root] = root;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for a in &pattern[v] {
                if parent[a.to] == usize::MAX && !(v == root && skip_from_root.is_some_and(|f| f(a))) {
                    parent[a.to] = v;
                    stack.push(a.to);
                }
            }
        }
        HomSearch {
            pattern,
            host,
            allowed,
            parent,
            memo: HashMap::new(),
        }
    }

    fn children(&self, pv: usize) -> impl Iterator<Item = &Arc> {
        self.pattern[pv]
            .iter()
            .filter(move |a| self.parent[a.to] == pv && a.to != pv)
    }

    fn ok_host(&self, hv: usize) -> bool {
        self.allowed.is_none_or(|a| a[hv])
    }

    /// Whether the pattern subtree at `pv` maps into the host with `pv ↦ hv`.
    pub(crate) fn fits(&mut self, pv: usize, hv: usize) -> bool {
        if let Some(&r) = self.memo.get(&(pv, hv)) {
            return r;
        }
        let kids: Vec<Arc> = self.children(pv).copied().collect();
        let r = kids.iter().all(|pa| {
            let host = self.host;
            host[hv].iter().any(|ha| {
                ha.dir == pa.dir && ha.label == pa.label && self.ok_host(ha.to) && self.fits(pa.to, ha.to)
            })
        });
        self.memo.insert((pv, hv), r);
        r
    }

    /// Like `fits` at the root, but the root edges may not use host edge
    /// `forbidden`.
    pub(crate) fn fits_root_avoiding(&mut self, pv: usize, hv: usize, forbidden: Option<usize>) -> bool {
        let kids: Vec<Arc> = self.children(pv).copied().collect();
        kids.iter().all(|pa| {
            let host = self.host;
            host[hv].iter().any(|ha| {
                Some(ha.edge) != forbidden
                    && ha.dir == pa.dir
                    && ha.label == pa.label
                    && self.ok_host(ha.to)
                    && self.fits(pa.to, ha.to)
            })
        })
    }
}

/// Whether `pattern`, rooted at `root`, maps into `host` with `root ↦ anchor`
/// preserving edge directions and labels. Distinct pattern vertices may share
/// an image. With `forbidden_first_edge`, no edge at the root may be sent to
/// that host edge.
pub fn hom_exists(
    pattern: &XTree,
    root: usize,
    host: &XTree,
    anchor: usize,
    forbidden_first_edge: Option<usize>,
) -> Result<bool, RetractError> {
    if root >= pattern.vertex_count() {
        return Err(RetractError::VertexOutOfRange(root));
    }
    if anchor >= host.vertex_count() {
        return Err(RetractError::VertexOutOfRange(anchor));
    }
    let p = pattern.adjacency();
    let h = host.adjacency();
    let mut search = HomSearch::new(&p, root, &h, None, None);
    Ok(search.fits_root_avoiding(root, anchor, forbidden_first_edge))
}
