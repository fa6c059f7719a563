use std::collections::VecDeque;

use thiserror::Error;

use crate::terms::Letter;

/// A labelled directed edge `src → dst`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: Letter,
}

impl Edge {
    pub fn new(src: usize, dst: usize, label: impl Into<Letter>) -> Self {
        Edge {
            src,
            dst,
            label: label.into(),
        }
    }
}

/// Orientation of an edge as seen from one of its endpoints.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    /// The edge leaves this vertex.
    Out,
    /// The edge enters this vertex.
    In,
}

/// An edge seen from one endpoint.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub to: usize,
    pub dir: Dir,
    pub label: Letter,
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("no trunk: no directed path from start to end")]
    NoTrunk,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("tree has no vertices")]
    Empty,
    #[error("invalid tree JSON at {path}: {message}")]
    Json { path: String, message: String },
}

/// The trunk: vertices `v_0 = start, …, v_k = end` and the edge indices
/// `v_i → v_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrunkInfo {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl TrunkInfo {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_left: bool,
    pub is_right: bool,
    pub is_idempotent_shape: bool,
}

/// A birooted edge-labelled directed tree.
///
/// Construction validates the tree and trunk invariants; edges are kept
/// sorted so structurally equal trees compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XTree {
    vertices: usize,
    start: usize,
    end: usize,
    edges: Vec<Edge>,
}

impl XTree {
    pub fn new(
        vertices: usize,
        start: usize,
        end: usize,
        mut edges: Vec<Edge>,
    ) -> Result<XTree, TreeError> {
        edges.sort();
        let t = XTree {
            vertices,
            start,
            end,
            edges,
        };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(vertices: usize, start: usize, end: usize, mut edges: Vec<Edge>) -> XTree {
        edges.sort();
        let t = XTree {
            vertices,
            start,
            end,
            edges,
        };
        debug_assert!(t.validate().is_ok(), "invalid tree {t:?}");
        t
    }

    /// Edge set only, with both roots at vertex 0; for probing reachability
    /// before the real roots are chosen.
    pub(crate) fn new_unchecked_unrooted(vertices: usize, edges: Vec<Edge>) -> XTree {
        XTree {
            vertices,
            start: 0,
            end: 0,
            edges,
        }
    }

    /// Vertices reachable from `v` along directed edges, including `v`.
    pub fn reachable_from(&self, v: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        seen[v] = true;
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            for a in adj[out[i]].iter().filter(|a| a.dir == Dir::Out) {
                if !seen[a.to] {
                    seen[a.to] = true;
                    out.push(a.to);
                }
            }
            i += 1;
        }
        out
    }

    /// The tree `ε`: one vertex, no edges.
    pub fn empty() -> XTree {
        XTree {
            vertices: 1,
            start: 0,
            end: 0,
            edges: Vec::new(),
        }
    }

    /// The single-edge tree of a generator.
    pub fn generator(label: impl Into<Letter>) -> XTree {
        XTree {
            vertices: 2,
            start: 0,
            end: 1,
            edges: vec![Edge::new(0, 1, label)],
        }
    }

    /// A directed path `start → … → end` spelling `word`.
    pub fn path(word: &[Letter]) -> XTree {
        let edges = word
            .iter()
            .enumerate()
            .map(|(i, &l)| Edge::new(i, i + 1, l))
            .collect();
        XTree::new_unchecked(word.len() + 1, 0, word.len(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> impl Iterator<Item = Letter> + '_ {
        self.edges.iter().map(|e| e.label)
    }

    /// True when every edge carries the same label.
    pub fn is_monogenic(&self) -> bool {
        let mut labels = self.labels();
        match labels.next() {
            None => true,
            Some(first) => labels.all(|l| l == first),
        }
    }

    pub fn adjacency(&self) -> Vec<Vec<Arc>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.src].push(Arc {
                to: e.dst,
                dir: Dir::Out,
                label: e.label,
                edge: i,
            });
            adj[e.dst].push(Arc {
                to: e.src,
                dir: Dir::In,
                label: e.label,
                edge: i,
            });
        }
        adj
    }

    /// Checks the tree and trunk invariants and returns the trunk.
    pub fn validate(&self) -> Result<TrunkInfo, TreeError> {
        if self.vertices == 0 {
            return Err(TreeError::Empty);
        }
        for &v in [self.start, self.end]
            .iter()
            .chain(self.edges.iter().flat_map(|e| [&e.src, &e.dst]))
        {
            if v >= self.vertices {
                return Err(TreeError::VertexOutOfRange(v));
            }
        }
        if self.edges.len() + 1 != self.vertices {
            return Err(TreeError::NotATree(format!(
                "{} vertices but {} edges",
                self.vertices,
                self.edges.len()
            )));
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for a in &adj[v] {
                if !seen[a.to] {
                    seen[a.to] = true;
                    reached += 1;
                    queue.push_back(a.to);
                }
            }
        }
        if reached != self.vertices {
            return Err(TreeError::NotATree("disconnected".into()));
        }
        self.find_trunk(&adj).ok_or(TreeError::NoTrunk)
    }

    fn find_trunk(&self, adj: &[Vec<Arc>]) -> Option<TrunkInfo> {
        // directed search; in a tree the path, if any, is unique
        let mut via: Vec<Option<(usize, usize)>> = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(v) = queue.pop_front() {
            for a in adj[v].iter().filter(|a| a.dir == Dir::Out) {
                if !seen[a.to] {
                    seen[a.to] = true;
                    via[a.to] = Some((v, a.edge));
                    queue.push_back(a.to);
                }
            }
        }
        if !seen[self.end] {
            return None;
        }
        let mut vertices = vec![self.end];
        let mut edges = Vec::new();
        let mut v = self.end;
        while let Some((p, e)) = via[v] {
            vertices.push(p);
            edges.push(e);
            v = p;
        }
        vertices.reverse();
        edges.reverse();
        Some(TrunkInfo { vertices, edges })
    }

    pub fn trunk(&self) -> TrunkInfo {
        self.find_trunk(&self.adjacency())
            .expect("constructed trees always have a trunk")
    }

    pub fn trunk_len(&self) -> usize {
        self.trunk().len()
    }

    pub fn classify(&self) -> Classification {
        let adj = self.adjacency();
        Classification {
            is_left: reaches_all(&adj, self.start, Dir::Out),
            is_right: reaches_all(&adj, self.end, Dir::In),
            is_idempotent_shape: self.start == self.end,
        }
    }

    pub fn is_left(&self) -> bool {
        reaches_all(&self.adjacency(), self.start, Dir::Out)
    }

    pub fn is_right(&self) -> bool {
        reaches_all(&self.adjacency(), self.end, Dir::In)
    }

    /// Glues `other`'s start onto this tree's end; the start of `self` and the
    /// end of `other` become the roots.
    pub fn glue(&self, other: &XTree) -> XTree {
        let offset = self.vertices;
        let relabel = |v: usize| {
            if v == other.start {
                self.end
            } else if v < other.start {
                v + offset
            } else {
                v + offset - 1
            }
        };
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| Edge::new(relabel(e.src), relabel(e.dst), e.label)),
        );
        XTree::new_unchecked(
            self.vertices + other.vertices - 1,
            self.start,
            relabel(other.end),
            edges,
        )
    }

    /// The same tree with the end moved onto the start.
    pub fn end_to_start(&self) -> XTree {
        XTree {
            end: self.start,
            ..self.clone()
        }
    }

    /// The same tree with the start moved onto the end.
    pub fn start_to_end(&self) -> XTree {
        XTree {
            start: self.end,
            ..self.clone()
        }
    }

    /// Flips every edge and swaps start and end.
    pub fn reverse(&self) -> XTree {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.dst, e.src, e.label))
            .collect();
        XTree::new_unchecked(self.vertices, self.end, self.start, edges)
    }

    /// The subtree made of the trunk vertices and trunk edges.
    pub fn theta(&self) -> XTree {
        let trunk = self.trunk();
        let word: Vec<Letter> = trunk.edges.iter().map(|&e| self.edges[e].label).collect();
        XTree::path(&word)
    }

    /// Keeps only the vertices flagged in `keep` (which must induce a subtree
    /// containing both roots) and renumbers them densely.
    pub fn induced(&self, keep: &[bool]) -> XTree {
        let mut index = vec![usize::MAX; self.vertices];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                index[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.src] && keep[e.dst])
            .map(|e| Edge::new(index[e.src], index[e.dst], e.label))
            .collect();
        XTree::new_unchecked(next, index[self.start], index[self.end], edges)
    }

    /// Renumbers vertices by `perm` (old index → new index).
    pub fn permuted(&self, perm: &[usize]) -> XTree {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.src], perm[e.dst], e.label))
            .collect();
        XTree::new_unchecked(self.vertices, perm[self.start], perm[self.end], edges)
    }

    /// Replaces every label by `label`.
    pub fn relabelled(&self, f: impl Fn(usize, Letter) -> Letter) -> XTree {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge::new(e.src, e.dst, f(i, e.label)))
            .collect();
        XTree::new_unchecked(self.vertices, self.start, self.end, edges)
    }
}

fn reaches_all(adj: &[Vec<Arc>], from: usize, dir: Dir) -> bool {
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut stack = vec![from];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for a in adj[v].iter().filter(|a| a.dir == dir) {
            if !seen[a.to] {
                seen[a.to] = true;
                count += 1;
                stack.push(a.to);
            }
        }
    }
    count == adj.len()
}
