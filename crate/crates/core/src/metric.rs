//! Hop-count metric structure: distances, eccentricities, center, remoteness,
//! and the degree partition.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which vertex anchors remoteness and open contours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reference {
    /// The graph center (or the selected vertex of a bicenter).
    Center,
    /// The marked base node.
    #[serde(rename = "bn")]
    BaseNode,
}

/// All-pairs hop distances and per-vertex eccentricities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    distances: Vec<Vec<usize>>,
    eccentricity: Vec<usize>,
}

impl DistanceProfile {
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.distances[u][v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.distances[u]
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.eccentricity[v]
    }

    pub fn eccentricities(&self) -> &[usize] {
        &self.eccentricity
    }

    /// Sum of distances from `v` to every other vertex.
    pub fn distance_sum(&self, v: usize) -> usize {
        self.distances[v].iter().sum()
    }

    pub fn radius(&self) -> usize {
        self.eccentricity.iter().copied().min().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.eccentricity.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first hop distances from `source`.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// One breadth-first layering per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceProfile {
    let distances: Vec<Vec<usize>> = (0..g.vertex_count()).map(|s| bfs_distances(g, s)).collect();
    let eccentricity = distances
        .iter()
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect();
    DistanceProfile {
        distances,
        eccentricity,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Center {
    pub vertex: usize,
    pub eccentricity: usize,
    /// Set when exactly two adjacent vertices share the minimum eccentricity.
    pub bicenter: Option<(usize, usize)>,
    /// Every vertex of minimum eccentricity, ascending.
    pub central_vertices: Vec<usize>,
}

impl Center {
    pub fn is_bicenter(&self) -> bool {
        self.bicenter.is_some()
    }
}

/// Minimum-eccentricity vertices that also have the minimum distance sum
/// among them. These are the candidates for the center; the tie between them
/// is resolved by the caller.
pub fn center_candidates(profile: &DistanceProfile) -> Vec<usize> {
    let radius = profile.radius();
    let central: Vec<usize> = (0..profile.eccentricities().len())
        .filter(|&v| profile.eccentricity(v) == radius)
        .collect();
    let best = central.iter().map(|&v| profile.distance_sum(v)).min().unwrap_or(0);
    central
        .into_iter()
        .filter(|&v| profile.distance_sum(v) == best)
        .collect()
}

/// Center by minimum eccentricity, then minimum distance sum, then lowest
/// vertex index.
pub fn find_center(g: &Graph, profile: &DistanceProfile) -> Center {
    let radius = profile.radius();
    let central_vertices: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| profile.eccentricity(v) == radius)
        .collect();
    let bicenter = match central_vertices[..] {
        [a, b] if g.has_edge(a, b) => Some((a, b)),
        _ => None,
    };
    let vertex = center_candidates(profile)[0];
    Center {
        vertex,
        eccentricity: radius,
        bicenter,
        central_vertices,
    }
}

/// Resolves `reference` to a concrete vertex using the index tie-break of
/// [`find_center`].
pub fn reference_vertex(g: &Graph, profile: &DistanceProfile, reference: Reference) -> Result<usize> {
    match reference {
        Reference::Center => Ok(find_center(g, profile).vertex),
        Reference::BaseNode => g.base_node().ok_or(Error::NoBaseNode),
    }
}

/// Remoteness `t_i = ecc(ref) + d(ref, i)` for every vertex.
pub fn remoteness(g: &Graph, profile: &DistanceProfile, reference: Reference) -> Result<Vec<usize>> {
    let r = reference_vertex(g, profile, reference)?;
    Ok(remoteness_from(profile, r))
}

pub fn remoteness_from(profile: &DistanceProfile, reference: usize) -> Vec<usize> {
    let ecc = profile.eccentricity(reference);
    profile.row(reference).iter().map(|&d| ecc + d).collect()
}

/// Degrees sorted descending: a partition of `2L` into `K` parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreePartition {
    pub parts: Vec<usize>,
    pub total: usize,
    pub is_tree: bool,
}

pub fn degree_partition(g: &Graph) -> DegreePartition {
    let mut parts = g.degrees();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    DegreePartition {
        total: parts.iter().sum(),
        parts,
        is_tree: g.is_tree(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    #[test]
    fn p3_distances() {
        let d = all_pairs_distances(&path(3));
        assert_eq!(d.distance(0, 2), 2);
        assert_eq!(d.distance(0, 1), 1);
        assert_eq!(d.distance(1, 1), 0);
    }

    #[test]
    fn triangle_distances_all_one() {
        let d = all_pairs_distances(&cycle(3));
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(d.distance(u, v), usize::from(u != v));
            }
        }
    }

    #[test]
    fn star_leaves_are_two_apart() {
        let d = all_pairs_distances(&star(3));
        for u in 1..4 {
            for v in 1..4 {
                if u != v {
                    assert_eq!(d.distance(u, v), 2);
                }
            }
        }
    }

    #[test]
    fn p3_center_is_middle() {
        let g = path(3);
        let c = find_center(&g, &all_pairs_distances(&g));
        assert_eq!((c.vertex, c.eccentricity, c.bicenter), (1, 1, None));
    }

    #[test]
    fn p4_bicenter_breaks_to_lower_index() {
        let g = path(4);
        let d = all_pairs_distances(&g);
        assert_eq!((d.distance_sum(1), d.distance_sum(2)), (4, 4));
        let c = find_center(&g, &d);
        assert_eq!(c.vertex, 1);
        assert_eq!(c.eccentricity, 2);
        assert_eq!(c.bicenter, Some((1, 2)));
    }

    #[test]
    fn bicenter_prefers_smaller_distance_sum() {
        // 0-1-2-3 with an extra leaf 4 on vertex 2: center candidates 1, 2
        // (eccentricity 2); vertex 2 is closer to everything.
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (2, 4)], None).unwrap();
        let c = find_center(&g, &all_pairs_distances(&g));
        assert_eq!(c.bicenter, Some((1, 2)));
        assert_eq!(c.vertex, 2);
    }

    #[test]
    fn star_center_is_hub() {
        let g = star(3);
        let c = find_center(&g, &all_pairs_distances(&g));
        assert_eq!((c.vertex, c.eccentricity), (0, 1));
    }

    #[test]
    fn remoteness_examples() {
        let g = path(3);
        let d = all_pairs_distances(&g);
        assert_eq!(remoteness(&g, &d, Reference::Center).unwrap(), vec![2, 1, 2]);
        let marked = g.with_base_node(Some(0)).unwrap();
        assert_eq!(remoteness(&marked, &d, Reference::BaseNode).unwrap(), vec![2, 3, 4]);
        assert_eq!(remoteness(&g, &d, Reference::BaseNode), Err(Error::NoBaseNode));

        let k1 = path(1);
        let d1 = all_pairs_distances(&k1);
        assert_eq!(remoteness(&k1, &d1, Reference::Center).unwrap(), vec![0]);
    }

    #[test]
    fn bn_at_center_matches_center_reference() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)], None).unwrap();
        let d = all_pairs_distances(&g);
        let c = find_center(&g, &d).vertex;
        let marked = g.with_base_node(Some(c)).unwrap();
        assert_eq!(
            remoteness(&g, &d, Reference::Center).unwrap(),
            remoteness(&marked, &d, Reference::BaseNode).unwrap()
        );
    }

    #[test]
    fn degree_partitions() {
        let s = degree_partition(&star(3));
        assert_eq!(s.parts, vec![3, 1, 1, 1]);
        assert_eq!(s.total, 6);
        assert!(s.is_tree);

        let c = degree_partition(&cycle(3));
        assert_eq!(c.parts, vec![2, 2, 2]);
        assert!(!c.is_tree);

        assert_eq!(degree_partition(&path(8)).parts, vec![2, 2, 2, 2, 2, 2, 1, 1]);
        assert_eq!(degree_partition(&complete(5)).total, 20);
    }
}
