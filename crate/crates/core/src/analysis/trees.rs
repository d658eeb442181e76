use std::collections::BTreeMap;

use crate::error::{Error, GraphError, Result};
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, find_center};

pub const MAX_TREE_VERTICES: usize = 12;

/// Nonisomorphic free trees on `n` vertices, one representative per class.
///
/// Trees of size `n` are grown by attaching a leaf to every vertex of every
/// tree of size `n - 1` and deduplicating by [`free_tree_code`]. The result is
/// ordered by decreasing diameter, then by code, so the path comes first and
/// the star last.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(GraphError::Empty.into());
    }
    if n > MAX_TREE_VERTICES {
        return Err(Error::TooLarge {
            what: "enumerate_trees",
            limit: MAX_TREE_VERTICES,
            got: n,
        });
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut next: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
        for edges in &level {
            for attach in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((attach, size - 1));
                let code = code_of(size, &grown);
                next.entry(code).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    let mut trees: Vec<(usize, String, Graph)> = level
        .into_iter()
        .map(|edges| {
            let g = Graph::new(n, edges, None).expect("grown trees are valid");
            let diameter = all_pairs_distances(&g).diameter();
            (diameter, free_tree_code(&g), g)
        })
        .collect();
    trees.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    Ok(trees.into_iter().map(|(_, _, g)| g).collect())
}

fn code_of(n: usize, edges: &[(usize, usize)]) -> String {
    free_tree_code(&Graph::new(n, edges.iter().copied(), None).expect("valid tree"))
}

/// Canonical parenthesis code of a free tree: the smaller of the rooted codes
/// at its (one or two) central vertices.
///
/// # Panics
///
/// If `tree` is not a tree.
pub fn free_tree_code(tree: &Graph) -> String {
    assert!(tree.is_tree(), "free_tree_code needs a tree");
    let center = find_center(tree, &all_pairs_distances(tree));
    center
        .central_vertices
        .iter()
        .map(|&c| rooted_code(tree, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn rooted_code(tree: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .filter(|&w| w != parent)
        .map(|w| rooted_code(tree, w, v))
        .collect();
    children.sort_unstable();
    let mut s = String::from("(");
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}
