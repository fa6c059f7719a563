use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::xtree::{Edge, TreeError, XTree};
use crate::terms::Letter;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    vertices: usize,
    start: usize,
    end: usize,
    edges: Vec<(usize, usize, Letter)>,
}

impl From<XTree> for TreeJson {
    fn from(t: XTree) -> Self {
        TreeJson {
            vertices: t.vertex_count(),
            start: t.start(),
            end: t.end(),
            edges: t.edges().iter().map(|e| (e.src, e.dst, e.label)).collect(),
        }
    }
}

impl TryFrom<TreeJson> for XTree {
    type Error = TreeError;

    fn try_from(j: TreeJson) -> Result<Self, Self::Error> {
        let edges = j
            .edges
            .into_iter()
            .map(|(s, d, l)| Edge::new(s, d, l))
            .collect();
        XTree::new(j.vertices, j.start, j.end, edges)
    }
}

impl Serialize for XTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TreeJson::from(self.clone()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for XTree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = TreeJson::deserialize(deserializer)?;
        XTree::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl XTree {
    /// Compact JSON with edges in sorted order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<XTree, TreeError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| TreeError::Json {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })
    }

    /// Graphviz rendering; the start vertex is drawn as `+`, the end as `×`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph xtree {\n  node [shape=circle, label=\"\"];\n");
        for v in 0..self.vertex_count() {
            let mark = match (v == self.start(), v == self.end()) {
                (true, true) => "+×",
                (true, false) => "+",
                (false, true) => "×",
                (false, false) => "",
            };
            if mark.is_empty() {
                let _ = writeln!(out, "  v{v} [shape=point];");
            } else {
                let _ = writeln!(out, "  v{v} [shape=plaintext, label=\"{mark}\"];");
            }
        }
        for e in self.edges() {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.src, e.dst, e.label);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fixed_json_forms() {
        assert_eq!(
            XTree::empty().to_json(),
            r#"{"vertices":1,"start":0,"end":0,"edges":[]}"#
        );
        assert_eq!(
            XTree::generator('a').to_json(),
            r#"{"vertices":2,"start":0,"end":1,"edges":[[0,1,"a"]]}"#
        );
    }

    #[test]
    fn malformed_json_reports_path() {
        let err = XTree::from_json(r#"{"vertices":2,"start":0,"end":1,"edges":[[0,1,"ab"]]}"#)
            .unwrap_err();
        match err {
            TreeError::Json { path, .. } => assert_eq!(path, "edges[0][2]"),
            other => panic!("unexpected {other:?}"),
        }
        let err = XTree::from_json(r#"{"vertices":2,"start":1,"end":0,"edges":[[0,1,"a"]]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("no trunk"), "{err}");
    }

    #[test]
    fn dot_marks_roots() {
        let dot = XTree::generator('a').to_dot();
        assert!(dot.contains("label=\"+\""));
        assert!(dot.contains("label=\"×\""));
        assert!(dot.contains("v0 -> v1 [label=\"a\"]"));
    }

    pub(crate) fn arb_tree(max_edges: usize) -> impl Strategy<Value = XTree> {
        (0..=max_edges)
            .prop_flat_map(|m| {
                (
                    proptest::collection::vec((any::<prop::sample::Index>(), any::<bool>(), 0u8..3), m),
                    any::<prop::sample::Index>(),
                )
            })
            .prop_map(|(spec, end_pick)| {
                let n = spec.len() + 1;
                let edges = spec
                    .iter()
                    .enumerate()
                    .map(|(i, (p, out, l))| {
                        let v = i + 1;
                        let parent = p.index(v);
                        let label = (b'a' + l) as char;
                        if *out {
                            Edge::new(parent, v, label)
                        } else {
                            Edge::new(v, parent, label)
                        }
                    })
                    .collect::<Vec<_>>();
                // choose an end among vertices reachable from 0
                let probe = XTree::new_unchecked(n, 0, 0, edges.clone());
                let adj = probe.adjacency();
                let mut reach = vec![0];
                let mut i = 0;
                while i < reach.len() {
                    for a in &adj[reach[i]] {
                        if a.dir == super::super::Dir::Out && !reach.contains(&a.to) {
                            reach.push(a.to);
                        }
                    }
                    i += 1;
                }
                XTree::new(n, 0, reach[end_pick.index(reach.len())], edges).unwrap()
            })
    }

    proptest! {
        #[test]
        fn json_round_trips(t in arb_tree(10)) {
            let back = XTree::from_json(&t.to_json()).unwrap();
            prop_assert_eq!(back, t);
        }
    }
}
