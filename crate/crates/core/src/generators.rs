//! Standard graph families and a seeded random connected-graph generator.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Path on `n >= 1` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v)), None).expect("path is valid")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)), None).expect("cycle is valid")
}

/// Star K(1, leaves) with the hub at vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)), None).expect("star is valid")
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges, None).expect("complete graph is valid")
}

/// Random connected graph: a uniformly shuffled random-attachment spanning
/// tree plus each remaining vertex pair independently with probability
/// `extra_edge_probability`.
pub fn random_connected<R: Rng + ?Sized>(vertex_count: usize, extra_edge_probability: f64, rng: &mut R) -> Graph {
    assert!(vertex_count >= 1);
    let mut order: Vec<usize> = (0..vertex_count).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    let mut present = vec![vec![false; vertex_count]; vertex_count];
    for i in 1..vertex_count {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        edges.push((parent, child));
        present[parent][child] = true;
        present[child][parent] = true;
    }
    for (u, row) in present.iter().enumerate() {
        for (v, &adjacent) in row.iter().enumerate().skip(u + 1) {
            if !adjacent && rng.gen_bool(extra_edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertex_count, edges, None).expect("spanning tree keeps the graph connected")
}

/// A uniformly random permutation usable with [`Graph::relabel`].
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
