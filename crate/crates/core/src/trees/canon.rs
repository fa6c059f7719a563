use std::fmt;

use super::xtree::{Dir, XTree};

/// Isomorphism-invariant byte encoding of a birooted labelled tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl XTree {
    /// Rooted at the start vertex; each vertex is `(` end-flag, then the
    /// sorted `direction label child` entries, then `)`.
    pub fn canonical_code(&self) -> CanonicalCode {
        let adj = self.adjacency();
        // iterative post-order so deep paths do not exhaust the stack
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![self.start()];
        parent[self.start()] = self.start();
        while let Some(v) = stack.pop() {
            order.push(v);
            for a in &adj[v] {
                if parent[a.to] == usize::MAX {
                    parent[a.to] = v;
                    stack.push(a.to);
                }
            }
        }
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut children: Vec<Vec<u8>> = adj[v]
                .iter()
                .filter(|a| parent[a.to] == v && a.to != v)
                .map(|a| {
                    let mut entry = Vec::new();
                    entry.push(match a.dir {
                        Dir::Out => b'>',
                        Dir::In => b'<',
                    });
                    let mut buf = [0u8; 4];
                    entry.extend_from_slice(a.label.0.encode_utf8(&mut buf).as_bytes());
                    entry.extend(std::mem::take(&mut codes[a.to]));
                    entry
                })
                .collect();
            children.sort();
            let mut code = vec![b'(', if v == self.end() { b'x' } else { b'.' }];
            for c in children {
                code.extend(c);
            }
            code.push(b')');
            codes[v] = code;
        }
        CanonicalCode(std::mem::take(&mut codes[self.start()]))
    }

    /// Isomorphism as birooted labelled directed trees.
    pub fn isomorphic(&self, other: &XTree) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.canonical_code() == other.canonical_code()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Edge;

    fn monogenic_trees(max_edges: usize) -> Vec<XTree> {
        // every orientation of every labelled tree shape built by attaching
        // vertex i to some earlier vertex, every start/end pair with a trunk
        let mut out = Vec::new();
        for edges in 0..=max_edges {
            let n = edges + 1;
            let mut parents = vec![0usize; n];
            loop {
                for mask in 0u32..(1 << edges) {
                    let es: Vec<Edge> = (1..n)
                        .map(|v| {
                            if mask >> (v - 1) & 1 == 1 {
                                Edge::new(parents[v], v, 'a')
                            } else {
                                Edge::new(v, parents[v], 'a')
                            }
                        })
                        .collect();
                    for s in 0..n {
                        for e in 0..n {
                            if let Ok(t) = XTree::new(n, s, e, es.clone()) {
                                out.push(t);
                            }
                        }
                    }
                }
                // next parent vector with parents[v] < v
                let mut v = n;
                loop {
                    if v <= 1 {
                        break;
                    }
                    v -= 1;
                    if parents[v] + 1 < v {
                        parents[v] += 1;
                        for w in v + 1..n {
                            parents[w] = 0;
                        }
                        v = usize::MAX;
                        break;
                    }
                }
                if v != usize::MAX {
                    break;
                }
            }
        }
        out
    }

    fn brute_isomorphic(a: &XTree, b: &XTree) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let target: std::collections::BTreeSet<_> = b.edges().iter().copied().collect();
        loop {
            if perm[a.start()] == b.start()
                && perm[a.end()] == b.end()
                && a.edges()
                    .iter()
                    .all(|e| target.contains(&Edge::new(perm[e.src], perm[e.dst], e.label)))
            {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn code_is_index_invariant() {
        let t = XTree::new(
            5,
            0,
            2,
            vec![
                Edge::new(0, 1, 'a'),
                Edge::new(1, 2, 'b'),
                Edge::new(1, 3, 'a'),
                Edge::new(4, 3, 'c'),
            ],
        )
        .unwrap();
        let p = t.permuted(&[3, 0, 4, 2, 1]);
        assert_ne!(t, p);
        assert_eq!(t.canonical_code(), p.canonical_code());
    }

    #[test]
    fn codes_agree_with_brute_force_isomorphism() {
        // all monogenic trees with at most five edges: members of a code class
        // are isomorphic to its representative, representatives are pairwise
        // non-isomorphic
        let mut classes: std::collections::BTreeMap<CanonicalCode, Vec<XTree>> = Default::default();
        for t in monogenic_trees(5) {
            classes.entry(t.canonical_code()).or_default().push(t);
        }
        for members in classes.values() {
            for t in members {
                assert!(brute_isomorphic(&members[0], t), "{:?} vs {t:?}", members[0]);
            }
        }
        let reps: Vec<&XTree> = classes.values().map(|m| &m[0]).collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!brute_isomorphic(a, b), "{a:?} vs {b:?}");
            }
        }
    }
}
