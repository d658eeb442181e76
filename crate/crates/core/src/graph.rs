//! Undirected simple connected graphs with an optional marked base node.

use std::collections::{HashSet, VecDeque};

use crate::error::GraphError;

/// An undirected, simple, connected graph.
///
/// Vertices are `0..vertex_count`. Branches (edges) keep their input order and
/// are identified by their position in [`Graph::edges`]; each is stored with
/// the smaller endpoint first. Construction validates every invariant, so a
/// `Graph` value is always simple and connected and satisfies the degree-sum
/// identity `sum(deg) == 2 * branch_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// Sorted by neighbor: `(neighbor, branch id)`.
    adjacency: Vec<Vec<(usize, usize)>>,
    base_node: Option<usize>,
    labels: Option<Vec<String>>,
}

/// Checks that `edges` over `vertex_count` vertices form a simple connected
/// graph and that `base_node` is in range. The first offending element is
/// reported.
pub fn validate_graph(
    vertex_count: usize,
    edges: &[(usize, usize)],
    base_node: Option<usize>,
) -> Result<(), GraphError> {
    if vertex_count == 0 {
        return Err(GraphError::Empty);
    }
    let mut seen = HashSet::with_capacity(edges.len());
    for &(u, v) in edges {
        if u >= vertex_count || v >= vertex_count {
            return Err(GraphError::VertexOutOfRange { u, v, vertex_count });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
    }
    if let Some(index) = base_node {
        if index >= vertex_count {
            return Err(GraphError::BadBaseNode { index, vertex_count });
        }
    }

    let mut adjacency = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut reached = vec![false; vertex_count];
    reached[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if !reached[w] {
                reached[w] = true;
                queue.push_back(w);
            }
        }
    }
    match reached.iter().position(|&r| !r) {
        Some(v) => Err(GraphError::Disconnected(v)),
        None => Ok(()),
    }
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        base_node: Option<usize>,
    ) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        validate_graph(vertex_count, &edges, base_node)?;
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
            base_node,
            labels: None,
        })
    }

    /// Attaches one display label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count {
            return Err(GraphError::LabelCount(labels.len(), self.vertex_count));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Returns a copy with the base node replaced.
    pub fn with_base_node(&self, base_node: Option<usize>) -> Result<Self, GraphError> {
        if let Some(index) = base_node {
            if index >= self.vertex_count {
                return Err(GraphError::BadBaseNode {
                    index,
                    vertex_count: self.vertex_count,
                });
            }
        }
        let mut g = self.clone();
        g.base_node = base_node;
        Ok(g)
    }

    /// K, the number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// L, the number of branches.
    pub fn branch_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn base_node(&self) -> Option<usize> {
        self.base_node
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, branch id)` pairs of `v`, ascending by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.branch_id(u, v).is_some()
    }

    pub fn branch_id(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adjacency[u][i].1)
    }

    /// Terminal (degree-1) vertices in ascending order.
    pub fn terminal_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertex_count
    }

    /// Cyclomatic number `L - K + 1`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    /// Relabels vertices so that old vertex `v` becomes `mapping[v]`.
    ///
    /// Branch order follows the original order; labels and the base node move
    /// with their vertices.
    ///
    /// # Panics
    ///
    /// If `mapping` is not a permutation of `0..vertex_count`.
    pub fn relabel(&self, mapping: &[usize]) -> Graph {
        assert_eq!(mapping.len(), self.vertex_count, "mapping length");
        let mut hit = vec![false; self.vertex_count];
        for &m in mapping {
            assert!(!std::mem::replace(&mut hit[m], true), "mapping is not a permutation");
        }
        let edges = self.edges.iter().map(|&(u, v)| (mapping[u], mapping[v]));
        let mut g = Graph::new(self.vertex_count, edges, self.base_node.map(|b| mapping[b]))
            .expect("relabeling preserves validity");
        if let Some(labels) = &self.labels {
            let mut moved = vec![String::new(); labels.len()];
            for (v, label) in labels.iter().enumerate() {
                moved[mapping[v]] = label.clone();
            }
            g.labels = Some(moved);
        }
        g
    }

    /// Same vertex numbering with branches sorted lexicographically.
    pub(crate) fn with_sorted_edges(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        let mut g = Graph::new(self.vertex_count, edges, self.base_node).expect("already valid");
        g.labels = self.labels.clone();
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_is_valid() {
        let g = Graph::new(2, [(0, 1)], None).unwrap();
        assert_eq!(g.branch_count(), 1);
        assert!(g.is_tree());
    }

    #[test]
    fn two_isolated_edges_are_disconnected() {
        assert_eq!(
            validate_graph(4, &[(0, 1), (2, 3)], None),
            Err(GraphError::Disconnected(2))
        );
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(validate_graph(1, &[(0, 0)], None), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn duplicate_edge_names_first_repeat() {
        assert_eq!(
            validate_graph(3, &[(0, 1), (1, 2), (1, 0)], None),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn base_node_out_of_range() {
        assert_eq!(
            validate_graph(2, &[(0, 1)], Some(2)),
            Err(GraphError::BadBaseNode {
                index: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn empty_vertex_set_rejected() {
        assert_eq!(validate_graph(0, &[], None), Err(GraphError::Empty));
    }

    #[test]
    fn single_vertex_accepted() {
        let g = Graph::new(1, [], None).unwrap();
        assert_eq!(g.degrees(), vec![0]);
        assert!(g.is_tree());
    }

    #[test]
    fn degree_sum_is_twice_branch_count() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)], None).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.branch_count());
        assert_eq!(g.cyclomatic_number(), 1);
    }

    #[test]
    fn relabel_moves_base_node_and_labels() {
        let g = Graph::new(3, [(0, 1), (1, 2)], Some(0))
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let h = g.relabel(&[2, 0, 1]);
        assert_eq!(h.base_node(), Some(2));
        assert_eq!(h.label(2), "a");
        assert!(h.has_edge(2, 0) && h.has_edge(0, 1));
    }
}
