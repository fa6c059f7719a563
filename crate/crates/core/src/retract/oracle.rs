use std::ops::ControlFlow;

use super::{retract, RetractError};
use crate::trees::{Arc, XTree};

pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// A root-fixing, label- and direction-preserving vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    pub vertex_map: Vec<usize>,
    pub idempotent: bool,
}

impl Endomorphism {
    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
    }
}

fn is_idempotent(map: &[usize]) -> bool {
    map.iter().all(|&v| map[v] == v)
}

/// Vertices in BFS order from the start, with the arc from each vertex's
/// parent.
fn bfs_plan(t: &XTree, adj: &[Vec<Arc>]) -> Vec<(usize, Option<(usize, Arc)>)> {
    let mut seen = vec![false; t.vertex_count()];
    seen[t.start()] = true;
    let mut plan = vec![(t.start(), None)];
    let mut i = 0;
    while i < plan.len() {
        let v = plan[i].0;
        for a in &adj[v] {
            if !seen[a.to] {
                seen[a.to] = true;
                plan.push((a.to, Some((v, *a))));
            }
        }
        i += 1;
    }
    plan
}

struct Enumerator<'a> {
    t: &'a XTree,
    adj: Vec<Vec<Arc>>,
    plan: Vec<(usize, Option<(usize, Arc)>)>,
    map: Vec<usize>,
    assigned: Vec<bool>,
    pointed: Vec<usize>,
    only_idempotent: bool,
}

impl<'a> Enumerator<'a> {
    fn new(t: &'a XTree, only_idempotent: bool) -> Self {
        let adj = t.adjacency();
        let plan = bfs_plan(t, &adj);
        let n = t.vertex_count();
        Enumerator {
            t,
            adj,
            plan,
            map: vec![usize::MAX; n],
            assigned: vec![false; n],
            pointed: vec![0; n],
            only_idempotent,
        }
    }

    fn admissible(&self, v: usize, w: usize) -> bool {
        if v == self.t.end() && w != self.t.end() {
            return false;
        }
        if !self.only_idempotent {
            return true;
        }
        // images must be fixed points
        if self.assigned[w] && self.map[w] != w {
            return false;
        }
        if w != v && self.pointed[v] > 0 {
            return false;
        }
        true
    }

    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if depth == self.plan.len() {
            return visit(&self.map);
        }
        let (v, via) = self.plan[depth];
        let candidates: Vec<usize> = match via {
            None => vec![self.t.start()],
            Some((p, arc)) => self.adj[self.map[p]]
                .iter()
                .filter(|h| h.dir == arc.dir && h.label == arc.label)
                .map(|h| h.to)
                .collect(),
        };
        for w in candidates {
            if !self.admissible(v, w) {
                continue;
            }
            self.map[v] = w;
            self.assigned[v] = true;
            self.pointed[w] += 1;
            let flow = self.run(depth + 1, visit);
            self.pointed[w] -= 1;
            self.assigned[v] = false;
            self.map[v] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn check_bound(t: &XTree, bound: usize) -> Result<(), RetractError> {
    if t.edge_count() > bound {
        return Err(RetractError::SizeBound {
            edges: t.edge_count(),
            bound,
        });
    }
    Ok(())
}

/// Streams every endomorphism fixing start and end to `visit`, which may stop
/// the enumeration early.
pub fn for_each_endomorphism(
    t: &XTree,
    bound: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<(), RetractError> {
    check_bound(t, bound)?;
    let _ = Enumerator::new(t, false).run(0, &mut visit);
    Ok(())
}

/// Streams only the idempotent endomorphisms, pruning partial maps that
/// already send some vertex to a non-fixed point.
pub fn for_each_idempotent(
    t: &XTree,
    bound: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<(), RetractError> {
    check_bound(t, bound)?;
    let _ = Enumerator::new(t, true).run(0, &mut |m: &[usize]| {
        debug_assert!(is_idempotent(m));
        visit(m)
    });
    Ok(())
}

/// Every endomorphism of `t` fixing start and end, with idempotents flagged.
pub fn endomorphism_oracle(t: &XTree, bound: usize) -> Result<Vec<Endomorphism>, RetractError> {
    let mut out = Vec::new();
    for_each_endomorphism(t, bound, |m| {
        out.push(Endomorphism {
            vertex_map: m.to_vec(),
            idempotent: is_idempotent(m),
        });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Oracle verdict: retract-free iff the identity is the only idempotent.
pub fn oracle_retract_free(t: &XTree, bound: usize) -> Result<bool, RetractError> {
    let mut free = true;
    for_each_idempotent(t, bound, |m| {
        if m.iter().enumerate().any(|(i, &v)| i != v) {
            free = false;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(free)
}

/// Whether no copy of the retract-free retract of `t` inside `t` (same start
/// and end) uses an edge of `path`.
pub fn strongly_retracts(t: &XTree, path: &[usize]) -> bool {
    let r = retract(t);
    let r_adj = r.adjacency();
    let plan = bfs_plan(&r, &r_adj);
    let t_adj = t.adjacency();
    let mut on_path = vec![false; t.edge_count()];
    for &e in path {
        on_path[e] = true;
    }
    let mut map = vec![usize::MAX; r.vertex_count()];
    let mut used = vec![false; t.vertex_count()];
    map[r.start()] = t.start();
    used[t.start()] = true;
    let hit = embed_hits(&plan, 1, &r, t, &t_adj, &on_path, &mut map, &mut used);
    !hit
}

/// Backtracking over injective embeddings; true once an embedding uses a
/// path edge.
#[allow(clippy::too_many_arguments)]
fn embed_hits(
    plan: &[(usize, Option<(usize, Arc)>)],
    depth: usize,
    r: &XTree,
    t: &XTree,
    t_adj: &[Vec<Arc>],
    on_path: &[bool],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == plan.len() {
        return false;
    }
    let (v, via) = plan[depth];
    let (p, arc) = via.expect("non-root vertices have a parent");
    for h in &t_adj[map[p]] {
        if h.dir != arc.dir || h.label != arc.label || used[h.to] {
            continue;
        }
        if v == r.end() && h.to != t.end() || v != r.end() && h.to == t.end() {
            continue;
        }
        if on_path[h.edge] {
            // completing the embedding is enough: any extension uses this edge
            map[v] = h.to;
            used[h.to] = true;
            let ok = embeds(plan, depth + 1, r, t, t_adj, map, used);
            used[h.to] = false;
            map[v] = usize::MAX;
            if ok {
                return true;
            }
            continue;
        }
        map[v] = h.to;
        used[h.to] = true;
        let hit = embed_hits(plan, depth + 1, r, t, t_adj, on_path, map, used);
        used[h.to] = false;
        map[v] = usize::MAX;
        if hit {
            return true;
        }
    }
    false
}

fn embeds(
    plan: &[(usize, Option<(usize, Arc)>)],
    depth: usize,
    r: &XTree,
    t: &XTree,
    t_adj: &[Vec<Arc>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == plan.len() {
        return true;
    }
    let (v, via) = plan[depth];
    let (p, arc) = via.expect("non-root vertices have a parent");
    for h in &t_adj[map[p]] {
        if h.dir != arc.dir || h.label != arc.label || used[h.to] {
            continue;
        }
        if v == r.end() && h.to != t.end() || v != r.end() && h.to == t.end() {
            continue;
        }
        map[v] = h.to;
        used[h.to] = true;
        let ok = embeds(plan, depth + 1, r, t, t_adj, map, used);
        used[h.to] = false;
        map[v] = usize::MAX;
        if ok {
            return true;
        }
    }
    false
}
