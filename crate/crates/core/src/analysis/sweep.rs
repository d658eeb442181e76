use rayon::prelude::*;
use serde::Serialize;

use crate::entropy::{estimate, EstimatorOptions, IeVector};
use crate::error::Result;
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, find_center, Center, Reference};

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub vertex: usize,
    pub label: String,
    pub distance_to_center: usize,
    pub ie: IeVector,
}

/// Marked estimation with the base node at every vertex in turn.
#[derive(Debug, Clone, Serialize)]
pub struct BnSweep {
    pub center: Center,
    pub rows: Vec<SweepRow>,
    /// Vertices whose amplitude is within the tolerance of the minimum.
    pub argmin_amplitude: Vec<usize>,
    pub argmin_h1: Vec<usize>,
    pub argmin_h2: Vec<usize>,
    pub argmin_h12: Vec<usize>,
    /// Distance from the center to the nearest amplitude minimizer.
    pub argmin_distance_to_center: usize,
    /// True when a central vertex (center or bicenter vertex) minimizes the
    /// amplitude.
    pub center_attains_minimum: bool,
}

pub fn bn_sweep(g: &Graph, tolerance: f64, options: &EstimatorOptions) -> Result<BnSweep> {
    let profile = all_pairs_distances(g);
    let center = find_center(g, &profile);
    let rows: Vec<SweepRow> = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| {
            let marked = g.with_base_node(Some(v))?;
            Ok(SweepRow {
                vertex: v,
                label: g.label(v),
                distance_to_center: profile.distance(center.vertex, v),
                ie: estimate(&marked, Reference::BaseNode, options)?.ie,
            })
        })
        .collect::<Result<_>>()?;

    let argmin = |key: fn(&IeVector) -> f64| -> Vec<usize> {
        let min = rows.iter().map(|r| key(&r.ie)).fold(f64::INFINITY, f64::min);
        rows.iter()
            .filter(|r| key(&r.ie) <= min + tolerance)
            .map(|r| r.vertex)
            .collect()
    };
    let argmin_amplitude = argmin(|v| v.amplitude);
    let argmin_distance_to_center = argmin_amplitude
        .iter()
        .map(|&v| profile.distance(center.vertex, v))
        .min()
        .unwrap_or(0);
    let center_attains_minimum = argmin_amplitude.iter().any(|v| center.central_vertices.contains(v));
    Ok(BnSweep {
        argmin_h1: argmin(|v| v.h1),
        argmin_h2: argmin(|v| v.h2),
        argmin_h12: argmin(|v| v.h12),
        argmin_amplitude,
        argmin_distance_to_center,
        center_attains_minimum,
        center,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, star};

    #[test]
    fn p3_h12_minimized_at_center() {
        let s = bn_sweep(&path(3), 1e-9, &EstimatorOptions::default()).unwrap();
        assert_eq!(s.argmin_h12, vec![1]);
        assert!((s.rows[1].ie.h12 - 1.521_928_094_887_362).abs() < 1e-9);
        assert!((s.rows[0].ie.h12 - 1.530_493_056_757_482_6).abs() < 1e-9);
    }

    #[test]
    fn star_sweep_matches_hand_values() {
        // hub: H2 = 3 H(3,1) + log2 3 + log2 3
        // leaf: two 2-branch paths over degrees (1,3,1); C = (2,2); F = (2,1,1)
        let s = bn_sweep(&star(3), 1e-9, &EstimatorOptions::default()).unwrap();
        let h = |w: &[f64]| crate::entropy::entropy_of_weights(w).unwrap();
        let hub_h2 = 3.0 * h(&[3.0, 1.0]) + 2.0 * 3f64.log2();
        let leaf_h2 = 2.0 * h(&[1.0, 3.0, 1.0]) + 1.0 + h(&[2.0, 1.0, 1.0]);
        assert!((s.rows[0].ie.h2 - hub_h2).abs() < 1e-12);
        assert!((s.rows[0].ie.h12 - h(&[1.0, 2.0, 2.0, 2.0])).abs() < 1e-12);
        for leaf in 1..4 {
            assert!((s.rows[leaf].ie.h2 - leaf_h2).abs() < 1e-12);
            assert!((s.rows[leaf].ie.h12 - h(&[3.0, 2.0, 4.0, 4.0])).abs() < 1e-12);
        }
        // the shorter, fewer open contours from a leaf give the smaller amplitude
        assert_eq!(s.argmin_amplitude, vec![1, 2, 3]);
        assert!(!s.center_attains_minimum);
        assert_eq!(s.argmin_distance_to_center, 1);
    }

    #[test]
    fn vertex_transitive_graph_has_constant_table() {
        let s = bn_sweep(&cycle(6), 1e-9, &EstimatorOptions::default()).unwrap();
        for r in &s.rows {
            assert_eq!(r.ie, s.rows[0].ie);
        }
        assert_eq!(s.argmin_amplitude.len(), 6);
    }
}
