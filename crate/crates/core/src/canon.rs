//! Exact canonical labeling by colour refinement and individualization.
//!
//! The search explores every leaf of the individualization-refinement tree
//! except subtrees proven equivalent by automorphisms already discovered
//! (automorphisms that fix the current individualized prefix pointwise). The
//! certificate is the lexicographically smallest adjacency string over the
//! explored leaves, so two graphs get equal certificates iff they are
//! isomorphic. An optional distinguished vertex (the base node) is kept in a
//! cell of its own, so certificates of marked graphs are also invariant under
//! relabeling that carries the mark.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size limit for [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 12;

/// Canonical certificate: equal iff the (marked) graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Result of a canonical labeling.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub certificate: CanonicalForm,
}

impl Labeling {
    /// Old vertex -> canonical position, for [`Graph::relabel`].
    pub fn mapping(&self) -> Vec<usize> {
        let mut m = vec![0; self.order.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            m[v] = pos;
        }
        m
    }
}

/// Certificate of `g`, honoring its base node. Limited to
/// [`MAX_CANONICAL_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.vertex_count() > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge {
            what: "canonical_form",
            limit: MAX_CANONICAL_VERTICES,
            got: g.vertex_count(),
        });
    }
    Ok(canonical_labeling(g, g.base_node()).certificate)
}

/// Canonical labeling with `distinguished` kept apart from all other vertices.
pub fn canonical_labeling(g: &Graph, distinguished: Option<usize>) -> Labeling {
    let n = g.vertex_count();
    let adjacency: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            let mut row = vec![false; n];
            for w in g.neighbors(u) {
                row[w] = true;
            }
            row
        })
        .collect();
    let mut search = Search {
        g,
        adjacency,
        distinguished: distinguished.is_some(),
        best: None,
        automorphisms: Vec::new(),
    };
    let initial = match distinguished {
        Some(d) => {
            let rest: Vec<usize> = (0..n).filter(|&v| v != d).collect();
            if rest.is_empty() {
                vec![vec![d]]
            } else {
                vec![vec![d], rest]
            }
        }
        None => vec![(0..n).collect()],
    };
    search.explore(initial, &mut Vec::new());
    let (certificate, order) = search.best.expect("at least one leaf");
    Labeling {
        order,
        certificate: CanonicalForm(certificate),
    }
}

/// `g` relabeled into canonical order, with branches sorted.
pub fn canonical_graph(g: &Graph, distinguished: Option<usize>) -> (Graph, Labeling) {
    let labeling = canonical_labeling(g, distinguished);
    let relabeled = g.relabel(&labeling.mapping()).with_sorted_edges();
    (relabeled, labeling)
}

struct Search<'a> {
    g: &'a Graph,
    adjacency: Vec<Vec<bool>>,
    distinguished: bool,
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Each entry maps vertex `v` to `perm[v]`.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if !explored.is_empty() && self.equivalent_to_explored(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
        }
    }

    /// True when some known automorphism fixing `prefix` pointwise links `v`
    /// to an explored sibling.
    fn equivalent_to_explored(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.adjacency.len();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for perm in &self.automorphisms {
            if prefix.iter().all(|&p| perm[p] == p) {
                any = true;
                for (x, &y) in perm.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        any && explored.iter().any(|&u| uf.find(u) == uf.find(v))
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = self.certificate(&order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => match cert.cmp(best) {
                Ordering::Less => self.best = Some((cert, order)),
                Ordering::Equal => {
                    let mut perm = vec![0; order.len()];
                    for (i, &v) in best_order.iter().enumerate() {
                        perm[v] = order[i];
                    }
                    if perm.iter().enumerate().any(|(x, &y)| x != y) {
                        self.automorphisms.push(perm);
                    }
                }
                Ordering::Greater => {}
            },
        }
    }

    fn certificate(&self, order: &[usize]) -> Vec<u8> {
        let n = order.len();
        let mut out = Vec::with_capacity(5 + n * n / 16 + 1);
        out.extend_from_slice(&(n as u32).to_be_bytes());
        out.push(u8::from(self.distinguished));
        let mut byte = 0u8;
        let mut filled = 0;
        for i in 0..n {
            for j in i + 1..n {
                byte = (byte << 1) | u8::from(self.adjacency[order[i]][order[j]]);
                filled += 1;
                if filled == 8 {
                    out.push(byte);
                    byte = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(byte << (8 - filled));
        }
        out
    }
}

/// Refines an ordered partition to the coarsest equitable refinement. New
/// cells are ordered by their neighbor-count signature, so the result is
/// equivariant under relabeling.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let count = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(count);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut signed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; count];
                    for w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            signed.sort();
            let mut start = 0;
            for i in 1..=signed.len() {
                if i == signed.len() || signed[i].0 != signed[start].0 {
                    next.push(signed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == count;
        *cells = next;
        if stable {
            return;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}
