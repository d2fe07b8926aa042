//! The graph on positive ordered primitive solutions whose edges join face
//! planes meeting at the tetrahedral dihedral angle `arccos(1/3)`.

use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;

use crate::numtheory::{three_squares_primitive, NumError, PrimitiveSolution};

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// A permutation of the second solution and four signs with
/// `σ₁a₁a′ + σ₂b₁b′ + σ₃c₁c′ + σ₄d₁d₂ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub perm: [usize; 3],
    pub signs: [i8; 4],
}

impl Witness {
    pub fn evaluate(&self, s1: &PrimitiveSolution, s2: &PrimitiveSolution) -> i64 {
        let first = s1.normal();
        let second = s2.normal();
        let mut sum = self.signs[3] as i64 * s1.d * s2.d;
        for i in 0..3 {
            sum += self.signs[i] as i64 * first[i] * second[self.perm[i]];
        }
        sum
    }
}

/// First witness in (permutation, sign pattern) order, if any.
pub fn connection_witness(s1: &PrimitiveSolution, s2: &PrimitiveSolution) -> Option<Witness> {
    for perm in PERMUTATIONS {
        for bits in 0..16u8 {
            let signs = [0, 1, 2, 3].map(|i| if bits >> i & 1 == 0 { 1 } else { -1 });
            let w = Witness { perm, signs };
            if w.evaluate(s1, s2) == 0 {
                return Some(w);
            }
        }
    }
    None
}

pub fn are_connected(s1: &PrimitiveSolution, s2: &PrimitiveSolution) -> bool {
    connection_witness(s1, s2).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTGraph {
    pub nodes: Vec<PrimitiveSolution>,
    /// Edges with `from < to`.
    pub edges: Vec<Edge>,
    /// Nodes satisfying the edge condition with themselves.
    pub self_loops: Vec<(usize, Witness)>,
}

pub fn build_graph(d_max: u64) -> Result<RTGraph, NumError> {
    let mut nodes = Vec::new();
    for d in (1..=d_max).step_by(2) {
        nodes.extend(three_squares_primitive(d)?);
    }
    let mut edges = Vec::new();
    let mut self_loops = Vec::new();
    for i in 0..nodes.len() {
        if let Some(w) = connection_witness(&nodes[i], &nodes[i]) {
            self_loops.push((i, w));
        }
        for j in (i + 1)..nodes.len() {
            if let Some(witness) = connection_witness(&nodes[i], &nodes[j]) {
                edges.push(Edge {
                    from: i,
                    to: j,
                    witness,
                });
            }
        }
    }
    Ok(RTGraph {
        nodes,
        edges,
        self_loops,
    })
}

impl RTGraph {
    pub fn label(&self, node: usize) -> String {
        self.nodes[node].to_string()
    }

    /// Connected components, largest first, members in node order.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.nodes.len());
        for e in &self.edges {
            uf.union(e.from, e.to);
        }
        let labels = uf.into_labeling();
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (node, root) in labels.into_iter().enumerate() {
            groups.entry(root).or_default().push(node);
        }
        let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        comps
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph RT {\n");
        for i in 0..self.nodes.len() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", self.label(i));
        }
        for (i, _) in &self.self_loops {
            let _ = writeln!(out, "  n{i} -- n{i} [style=dashed];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -- n{};", e.from, e.to);
        }
        out.push_str("}\n");
        out
    }

    /// `component_id,size,members` with members separated by `;`.
    pub fn components_csv(&self) -> String {
        let mut out = String::from("component_id,size,members\n");
        for (id, comp) in self.connected_components().iter().enumerate() {
            let members: Vec<String> = comp.iter().map(|&n| self.label(n)).collect();
            let _ = writeln!(out, "{id},{},\"{}\"", comp.len(), members.join(";"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::pi_epsilon;

    fn sol(a: i64, b: i64, c: i64, d: i64) -> PrimitiveSolution {
        PrimitiveSolution::new(a, b, c, d).unwrap()
    }

    #[test]
    fn worked_edge() {
        let (s1, s2) = (sol(1, 1, 5, 3), sol(1, 5, 11, 7));
        assert!(are_connected(&s1, &s2));
        let w = Witness {
            perm: [2, 1, 0],
            signs: [1, 1, 1, -1],
        };
        assert_eq!(w.evaluate(&s1, &s2), 0);
    }

    #[test]
    fn unit_with_itself() {
        assert!(are_connected(&sol(1, 1, 1, 1), &sol(1, 1, 1, 1)));
    }

    #[test]
    fn d3_and_unit() {
        // −1 − 1 + 5 − 3 = 0
        let (s1, s2) = (sol(1, 1, 5, 3), sol(1, 1, 1, 1));
        let w = connection_witness(&s1, &s2).unwrap();
        assert_eq!(w.evaluate(&s1, &s2), 0);
    }

    #[test]
    fn graph_examples() {
        let g1 = build_graph(1).unwrap();
        assert_eq!(g1.nodes.len(), 1);
        assert!(g1.edges.is_empty());
        assert_eq!(g1.self_loops.len(), 1);

        let g7 = build_graph(7).unwrap();
        let a = g7.nodes.iter().position(|s| *s == sol(1, 1, 5, 3)).unwrap();
        let b = g7
            .nodes
            .iter()
            .position(|s| *s == sol(1, 5, 11, 7))
            .unwrap();
        assert!(g7
            .edges
            .iter()
            .any(|e| (e.from, e.to) == (a.min(b), a.max(b))));

        let g19 = build_graph(19).unwrap();
        let expected: u64 = (1..=19).step_by(2).map(|d| pi_epsilon(d).unwrap()).sum();
        assert_eq!(g19.nodes.len() as u64, expected);
        for e in &g19.edges {
            assert_eq!(e.witness.evaluate(&g19.nodes[e.from], &g19.nodes[e.to]), 0);
        }
    }

    #[test]
    fn symmetric() {
        let g = build_graph(19).unwrap();
        for s1 in &g.nodes {
            for s2 in &g.nodes {
                assert_eq!(are_connected(s1, s2), are_connected(s2, s1));
            }
        }
    }

    #[test]
    fn dot_and_csv() {
        let g = build_graph(7).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph RT {"));
        assert!(dot.contains("label=\"[(1,5,11),7]\""));
        let csv = g.components_csv();
        assert!(csv.starts_with("component_id,size,members\n"));
        let total: usize = g.connected_components().iter().map(Vec::len).sum();
        assert_eq!(total, g.nodes.len());
    }
}
