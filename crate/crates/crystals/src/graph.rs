//! Breadth-first enumeration of crystal graphs and their export to DOT and
//! JSON.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::crystal::CrystalElement;

/// A finite piece of a crystal graph: nodes in breadth-first order from a
/// root and the `f_a`-arrows among them.
#[derive(Clone, Debug)]
pub struct CrystalGraph<T> {
    /// Nodes; the root is `nodes[0]`.
    pub nodes: Vec<T>,
    /// Distance of each node from the root.
    pub depth: Vec<usize>,
    /// Arrows `(source, target, a)` meaning `f_a(source) = target`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl<T: CrystalElement> CrystalGraph<T> {
    /// Explores everything reachable from `root` with at most `max_depth`
    /// lowering operators (everything, when `None`).
    pub fn explore(root: T, max_depth: Option<usize>) -> CrystalGraph<T> {
        let ct = root.cartan_type();
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut nodes = vec![root.clone()];
        let mut depth = vec![0];
        let mut edges = Vec::new();
        index.insert(root, 0);
        let mut head = 0;
        while head < nodes.len() {
            let d = depth[head];
            if max_depth.is_some_and(|m| d >= m) {
                head += 1;
                continue;
            }
            for a in ct.nodes() {
                if let Some(y) = nodes[head].f(a) {
                    let j = match index.get(&y) {
                        Some(&j) => j,
                        None => {
                            let j = nodes.len();
                            index.insert(y.clone(), j);
                            nodes.push(y);
                            depth.push(d + 1);
                            j
                        }
                    };
                    edges.push((head, j, a));
                }
            }
            head += 1;
        }
        CrystalGraph {
            nodes,
            depth,
            edges,
        }
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Whether the graph has no nodes (never true for an explored graph).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Position of a node, if present.
    pub fn position(&self, x: &T) -> Option<usize> {
        self.nodes.iter().position(|y| y == x)
    }

    /// Graphviz rendering with the given node labels.
    pub fn to_dot(&self, label: impl Fn(&T) -> String) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (i, x) in self.nodes.iter().enumerate() {
            let text = label(x).replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  n{i} [label=\"{text}\"];");
        }
        for &(s, t, a) in &self.edges {
            let _ = writeln!(out, "  n{s} -> n{t} [label=\"{a}\"];");
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: `{"nodes": [...], "edges": [{"from", "to", "label"}]}`.
    pub fn to_json(&self, node: impl Fn(&T) -> Value) -> Value {
        let nodes: Vec<Value> = self.nodes.iter().map(node).collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|&(s, t, a)| json!({"from": s, "to": t, "label": a}))
            .collect();
        json!({"nodes": nodes, "edges": edges})
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanType, Weight};
    use crate::tableaux::Tableau;

    #[test]
    fn full_graph_of_the_adjoint_of_a2() {
        let ct: CartanType = "A2".parse().unwrap();
        let g = CrystalGraph::explore(Tableau::highest(ct, &Weight(vec![1, 1])).unwrap(), None);
        assert_eq!(g.len(), 8);
        assert_eq!(g.edges.len(), 8);
        assert_eq!(g.depth.iter().max(), Some(&4));
        let dot = g.to_dot(|t| format!("{:?}", t.rows()));
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 8);
    }

    #[test]
    fn depth_limit() {
        let ct: CartanType = "A2".parse().unwrap();
        let g = CrystalGraph::explore(Tableau::highest(ct, &Weight(vec![1, 1])).unwrap(), Some(1));
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges.len(), 2);
    }
}
