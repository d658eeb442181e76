//! Contour space: the reduced incidence matrix, fundamental cycles (contour
//! matrix), open contours from the reference vertex to terminal vertices
//! (path matrix), and the union system that feeds the contour entropies.
//!
//! All matrices are unoriented {0, 1} matrices over the graph's branch order.
//! Orthogonality between incidence and contour rows is checked over GF(2).

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::bfs_distances;

/// Dense binary matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<u8>>,
}

impl BinaryMatrix {
    fn from_rows(cols: usize, data: Vec<Vec<u8>>) -> Self {
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r][c]
    }

    /// CSV with a header row of branch ids `u-v`.
    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = g
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", g.label(u), g.label(v)))
            .collect::<Vec<_>>()
            .join(",");
        out.push('\n');
        for row in &self.data {
            let line = row.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(out, "{line}");
        }
        out
    }
}

/// Incidence matrix with the basic vertex's row removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    pub basic_vertex: usize,
    /// Vertex behind each row.
    pub row_vertices: Vec<usize>,
    pub matrix: BinaryMatrix,
}

pub fn build_incidence(g: &Graph, basic_vertex: usize) -> IncidenceMatrix {
    let row_vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != basic_vertex).collect();
    let data = row_vertices
        .iter()
        .map(|&v| {
            let mut row = vec![0u8; g.branch_count()];
            for &(_, id) in g.incident(v) {
                row[id] = 1;
            }
            row
        })
        .collect();
    IncidenceMatrix {
        basic_vertex,
        row_vertices,
        matrix: BinaryMatrix::from_rows(g.branch_count(), data),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ContourKind {
    /// Open contour: reference vertex to a terminal vertex.
    Path,
    /// Closed contour from the fundamental cycle basis.
    Cycle,
}

/// One row of the union matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contour {
    pub kind: ContourKind,
    /// Branch ids, ascending.
    pub branches: Vec<usize>,
    /// Distinct vertices incident to the branches, ascending.
    pub vertices: Vec<usize>,
}

impl Contour {
    fn new(kind: ContourKind, g: &Graph, mut branches: Vec<usize>) -> Self {
        branches.sort_unstable();
        let mut vertices: Vec<usize> = branches
            .iter()
            .flat_map(|&b| {
                let (u, v) = g.edges()[b];
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        Self {
            kind,
            branches,
            vertices,
        }
    }

    /// C_i, the number of branches in the row.
    pub fn complexity(&self) -> usize {
        self.branches.len()
    }

    /// M_i, the number of distinct vertices on the row.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Path rows (W) and cycle rows (N); the union U stacks W over N.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContourSystem {
    pub reference: usize,
    pub branch_count: usize,
    pub paths: Vec<Contour>,
    pub cycles: Vec<Contour>,
}

impl ContourSystem {
    /// Rows of U: paths first, then cycles.
    pub fn rows(&self) -> impl Iterator<Item = &Contour> + '_ {
        self.paths.iter().chain(&self.cycles)
    }

    /// P, the number of rows of U.
    pub fn row_count(&self) -> usize {
        self.paths.len() + self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row_count() == 0
    }

    pub fn complexities(&self) -> Vec<usize> {
        self.rows().map(Contour::complexity).collect()
    }

    /// F^j for every branch, including zeros for uncovered branches.
    pub fn frequencies(&self) -> Vec<usize> {
        let mut f = vec![0; self.branch_count];
        for row in self.rows() {
            for &b in &row.branches {
                f[b] += 1;
            }
        }
        f
    }

    pub fn vertex_counts(&self) -> Vec<usize> {
        self.rows().map(Contour::vertex_count).collect()
    }

    fn matrix<'a>(&self, rows: impl Iterator<Item = &'a Contour>) -> BinaryMatrix {
        let data = rows
            .map(|c| {
                let mut row = vec![0u8; self.branch_count];
                for &b in &c.branches {
                    row[b] = 1;
                }
                row
            })
            .collect();
        BinaryMatrix::from_rows(self.branch_count, data)
    }

    /// N, the contour matrix.
    pub fn contour_matrix(&self) -> BinaryMatrix {
        self.matrix(self.cycles.iter())
    }

    /// W, the path matrix.
    pub fn path_matrix(&self) -> BinaryMatrix {
        self.matrix(self.paths.iter())
    }

    /// U, W stacked over N.
    pub fn union_matrix(&self) -> BinaryMatrix {
        self.matrix(self.rows())
    }
}

/// Breadth-first spanning tree rooted at `root`; neighbors are visited in
/// ascending order. Returns `(parent vertex, parent branch)` per vertex.
fn bfs_tree(g: &Graph, root: usize) -> Vec<Option<(usize, usize)>> {
    let mut parent = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &(w, id) in g.incident(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((u, id));
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Fundamental cycles of the breadth-first spanning tree rooted at `root`,
/// one per non-tree branch in branch order.
pub fn fundamental_cycles(g: &Graph, root: usize) -> Vec<Contour> {
    let parent = bfs_tree(g, root);
    let depth = bfs_distances(g, root);
    let mut tree_branch = vec![false; g.branch_count()];
    for &(_, id) in parent.iter().flatten() {
        tree_branch[id] = true;
    }
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(id, _)| !tree_branch[id])
        .map(|(id, &(u, v))| {
            let mut branches = vec![id];
            let (mut a, mut b) = (u, v);
            while a != b {
                if depth[a] >= depth[b] {
                    let (p, pid) = parent[a].expect("non-root has a parent");
                    branches.push(pid);
                    a = p;
                } else {
                    let (p, pid) = parent[b].expect("non-root has a parent");
                    branches.push(pid);
                    b = p;
                }
            }
            Contour::new(ContourKind::Cycle, g, branches)
        })
        .collect()
}

/// Open contours: for every terminal vertex other than `reference`, the
/// shortest path from `reference` with the lexicographically smallest vertex
/// sequence.
pub fn open_contours(g: &Graph, reference: usize) -> Vec<Contour> {
    g.terminal_vertices()
        .into_iter()
        .filter(|&t| t != reference)
        .map(|t| {
            let to_target = bfs_distances(g, t);
            let mut branches = Vec::with_capacity(to_target[reference]);
            let mut at = reference;
            while at != t {
                let &(next, id) = g
                    .incident(at)
                    .iter()
                    .find(|&&(w, _)| to_target[w] + 1 == to_target[at])
                    .expect("a shortest-path successor exists");
                branches.push(id);
                at = next;
            }
            Contour::new(ContourKind::Path, g, branches)
        })
        .collect()
}

/// Union system for `reference`.
///
/// Fails with [`Error::EmptySystem`] when there are neither open contours nor
/// cycles (only the single-vertex graph).
pub fn union_system(g: &Graph, reference: usize) -> Result<ContourSystem> {
    let system = ContourSystem {
        reference,
        branch_count: g.branch_count(),
        paths: open_contours(g, reference),
        cycles: fundamental_cycles(g, reference),
    };
    if system.is_empty() {
        Err(Error::EmptySystem)
    } else {
        Ok(system)
    }
}

/// `M * N^t == 0` over GF(2), using only the cycle rows of `system`.
pub fn check_orthogonality(m: &IncidenceMatrix, system: &ContourSystem) -> Result<bool> {
    if m.matrix.cols != system.branch_count {
        return Err(Error::DimensionMismatch(format!(
            "incidence has {} columns, contour system has {} branches",
            m.matrix.cols, system.branch_count
        )));
    }
    Ok(orthogonal_rows(&m.matrix, &system.contour_matrix()))
}

pub(crate) fn orthogonal_rows(m: &BinaryMatrix, n: &BinaryMatrix) -> bool {
    m.data.iter().all(|mr| {
        n.data.iter().all(|nr| {
            let dot = mr.iter().zip(nr).fold(0u8, |acc, (&a, &b)| acc ^ (a & b));
            dot == 0
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    #[test]
    fn triangle_incidence() {
        let m = build_incidence(&cycle(3), 0);
        assert_eq!((m.matrix.rows, m.matrix.cols), (2, 3));
        for row in &m.matrix.data {
            assert_eq!(row.iter().filter(|&&x| x == 1).count(), 2);
        }
    }

    #[test]
    fn p2_incidence() {
        let m = build_incidence(&path(2), 0);
        assert_eq!(m.matrix.data, vec![vec![1]]);
    }

    #[test]
    fn star_incidence_from_hub_is_identity() {
        let m = build_incidence(&star(3), 0);
        assert_eq!(m.matrix.data, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn triangle_has_one_full_cycle() {
        let n = fundamental_cycles(&cycle(3), 0);
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].branches, vec![0, 1, 2]);
        assert_eq!(n[0].complexity(), 3);
        assert_eq!(n[0].vertex_count(), 3);
    }

    #[test]
    fn trees_have_no_cycles() {
        assert!(fundamental_cycles(&path(6), 2).is_empty());
        assert!(fundamental_cycles(&star(5), 0).is_empty());
    }

    #[test]
    fn k4_has_three_fundamental_cycles() {
        assert_eq!(fundamental_cycles(&complete(4), 0).len(), 3);
    }

    #[test]
    fn p3_paths_from_center() {
        let w = open_contours(&path(3), 1);
        let s = ContourSystem {
            reference: 1,
            branch_count: 2,
            paths: w,
            cycles: vec![],
        };
        assert_eq!(s.path_matrix().data, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(s.complexities(), vec![1, 1]);
        assert_eq!(s.vertex_counts(), vec![2, 2]);
    }

    #[test]
    fn star_paths_from_hub() {
        let s = union_system(&star(3), 0).unwrap();
        assert_eq!(s.path_matrix().data, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(s.complexities(), vec![1, 1, 1]);
        assert_eq!(s.frequencies(), vec![1, 1, 1]);
    }

    #[test]
    fn triangle_has_no_paths() {
        assert!(open_contours(&cycle(3), 0).is_empty());
        let s = union_system(&cycle(3), 0).unwrap();
        assert_eq!(s.row_count(), 1);
        assert_eq!(s.union_matrix(), s.contour_matrix());
    }

    #[test]
    fn tree_union_is_path_matrix() {
        let s = union_system(&path(5), 2).unwrap();
        assert_eq!(s.union_matrix(), s.path_matrix());
    }

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)], None).unwrap();
        let s = union_system(&g, 0).unwrap();
        assert_eq!(s.paths.len(), 1);
        assert_eq!(s.cycles.len(), 1);
        assert_eq!(s.row_count(), 2);
        assert_eq!(s.paths[0].branches, vec![3]);
        assert_eq!(s.cycles[0].branches, vec![0, 1, 2]);
    }

    #[test]
    fn terminal_reference_contributes_no_row() {
        let s = union_system(&path(3), 0).unwrap();
        assert_eq!(s.paths.len(), 1);
        assert_eq!(s.paths[0].branches, vec![0, 1]);
        assert_eq!(s.paths[0].vertex_count(), 3);
    }

    #[test]
    fn shortest_path_tie_takes_smallest_sequence() {
        // 4-cycle 0-1-3-2-0 plus pendant 4 on vertex 3; from 0 both 0-1-3 and
        // 0-2-3 are shortest, 0-1-3-4 wins.
        let g = Graph::new(5, [(0, 1), (1, 3), (3, 2), (2, 0), (3, 4)], None).unwrap();
        let w = open_contours(&g, 0);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].vertices, vec![0, 1, 3, 4]);
    }

    #[test]
    fn single_vertex_system_is_empty() {
        assert_eq!(union_system(&path(1), 0), Err(Error::EmptySystem));
    }

    #[test]
    fn orthogonality_examples() {
        let c3 = cycle(3);
        let s = union_system(&c3, 0).unwrap();
        assert!(check_orthogonality(&build_incidence(&c3, 0), &s).unwrap());

        let k4 = complete(4);
        let s = union_system(&k4, 0).unwrap();
        assert!(check_orthogonality(&build_incidence(&k4, 0), &s).unwrap());

        let mut corrupted = union_system(&c3, 0).unwrap();
        corrupted.cycles[0] = Contour::new(ContourKind::Cycle, &c3, vec![0, 1]);
        assert!(!check_orthogonality(&build_incidence(&c3, 0), &corrupted).unwrap());

        let p = path(3);
        let err = check_orthogonality(&build_incidence(&p, 1), &s).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn csv_header_lists_branches() {
        let g = path(3);
        let s = union_system(&g, 1).unwrap();
        assert_eq!(s.union_matrix().to_csv(&g), "0-1,1-2\n1,0\n0,1\n");
    }
}
