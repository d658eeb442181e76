//! Information estimation: Shannon entropies over the vertex space (degrees
//! and remoteness) and the contour space (row degrees, row complexities,
//! branch frequencies), composed into a two-component vector.
//!
//! All entropies are in bits. The full pipeline ([`estimate`]) runs on the
//! canonical relabeling of the graph with the reference vertex individualized,
//! so the result does not depend on the input vertex numbering even where the
//! contour construction (spanning tree, shortest-path ties) does.

use serde::Serialize;

use crate::canon::canonical_labeling;
use crate::cycles::{union_system, ContourSystem};
use crate::error::{Error, Result};
use crate::format::fixed9;
use crate::graph::Graph;
use crate::metric::{all_pairs_distances, center_candidates, DistanceProfile, Reference};

/// Eccentricity term of the remoteness weights.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EpsVariant {
    /// `ecc(ref) + r_i`, the same eccentricity for every vertex.
    #[default]
    Center,
    /// `ecc(i) + r_i`.
    PerVertex,
}

/// Normalization of the vertex-degree weights inside contour rows.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum H21Normalization {
    /// One entropy per row, summed over rows.
    #[default]
    Row,
    /// One entropy over all (row, vertex) degree entries.
    Global,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EstimatorOptions {
    pub eps_variant: EpsVariant,
    pub h21_normalization: H21Normalization,
}

/// `-sum p_i log2 p_i` with `p_i = w_i / sum(w)`; zero weights contribute 0.
pub fn entropy_of_weights(weights: &[f64]) -> Result<f64> {
    let total: f64 = weights.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return Err(Error::AllZero);
    }
    let h = -weights
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| {
            let p = w / total;
            p * p.log2()
        })
        .sum::<f64>();
    // -0.0 for single-outcome distributions
    Ok(h.max(0.0))
}

pub(crate) fn entropy_of_counts(counts: impl IntoIterator<Item = usize>) -> Result<f64> {
    let w: Vec<f64> = counts.into_iter().map(|c| c as f64).collect();
    entropy_of_weights(&w)
}

/// Degree entropy; 0 for the single-vertex graph.
pub fn h11(g: &Graph) -> f64 {
    if g.vertex_count() < 2 {
        return 0.0;
    }
    entropy_of_counts(g.degrees()).expect("connected graph with K >= 2 has positive degrees")
}

/// Remoteness entropy around `reference`, computed on the graph as given.
pub fn h12_from(profile: &DistanceProfile, reference: usize, variant: EpsVariant) -> f64 {
    let n = profile.eccentricities().len();
    if n < 2 {
        return 0.0;
    }
    let row = profile.row(reference);
    let weights: Vec<usize> = match variant {
        EpsVariant::Center => {
            let ecc = profile.eccentricity(reference);
            row.iter().map(|&d| ecc + d).collect()
        }
        EpsVariant::PerVertex => row
            .iter()
            .enumerate()
            .map(|(i, &d)| profile.eccentricity(i) + d)
            .collect(),
    };
    entropy_of_counts(weights).expect("remoteness weights are positive for K >= 2")
}

/// Remoteness entropy for the center or the base node.
pub fn h12(g: &Graph, reference: Reference) -> Result<f64> {
    let profile = all_pairs_distances(g);
    let r = resolve_reference(g, &profile, reference)?;
    Ok(h12_from(&profile, r, EpsVariant::Center))
}

/// Sum over rows of the degree entropy of the row's vertices.
pub fn h21(system: &ContourSystem, g: &Graph, normalization: H21Normalization) -> f64 {
    if system.is_empty() {
        return 0.0;
    }
    match normalization {
        H21Normalization::Row => system
            .rows()
            .map(|row| {
                entropy_of_counts(row.vertices.iter().map(|&v| g.degree(v))).expect("row vertices have degree >= 1")
            })
            .sum(),
        H21Normalization::Global => {
            entropy_of_counts(system.rows().flat_map(|row| row.vertices.iter().map(|&v| g.degree(v))))
                .expect("row vertices have degree >= 1")
        }
    }
}

/// Entropy of the row complexities C_i.
pub fn h22(system: &ContourSystem) -> f64 {
    if system.is_empty() {
        return 0.0;
    }
    entropy_of_counts(system.complexities()).expect("rows are nonempty")
}

/// Entropy of the branch frequencies F^j.
pub fn h23(system: &ContourSystem) -> f64 {
    if system.is_empty() {
        return 0.0;
    }
    entropy_of_counts(system.frequencies()).expect("some branch is covered")
}

/// The two-component information estimation of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IeVector {
    #[serde(serialize_with = "fixed9")]
    pub h11: f64,
    #[serde(serialize_with = "fixed9")]
    pub h12: f64,
    #[serde(serialize_with = "fixed9")]
    pub h1: f64,
    #[serde(serialize_with = "fixed9")]
    pub h21: f64,
    #[serde(serialize_with = "fixed9")]
    pub h22: f64,
    #[serde(serialize_with = "fixed9")]
    pub h23: f64,
    #[serde(serialize_with = "fixed9")]
    pub h2: f64,
    /// Euclidean norm of (H1, H2).
    #[serde(serialize_with = "fixed9")]
    pub amplitude: f64,
    /// `atan2(H2, H1)` in radians, 0 for the zero vector.
    #[serde(serialize_with = "fixed9")]
    pub phase: f64,
}

impl IeVector {
    pub const ZERO: IeVector = IeVector {
        h11: 0.0,
        h12: 0.0,
        h1: 0.0,
        h21: 0.0,
        h22: 0.0,
        h23: 0.0,
        h2: 0.0,
        amplitude: 0.0,
        phase: 0.0,
    };

    pub fn from_components(h11: f64, h12: f64, h21: f64, h22: f64, h23: f64) -> Self {
        let h1 = h11 + h12;
        let h2 = h21 + h22 + h23;
        let phase = if h1 == 0.0 && h2 == 0.0 { 0.0 } else { h2.atan2(h1) };
        Self {
            h11,
            h12,
            h1,
            h21,
            h22,
            h23,
            h2,
            amplitude: h1.hypot(h2),
            phase,
        }
    }

    /// All nine fields in serialization order.
    pub fn components(&self) -> [f64; 9] {
        [
            self.h11,
            self.h12,
            self.h1,
            self.h21,
            self.h22,
            self.h23,
            self.h2,
            self.amplitude,
            self.phase,
        ]
    }

    pub const FIELD_NAMES: [&'static str; 9] = ["h11", "h12", "h1", "h21", "h22", "h23", "h2", "amplitude", "phase"];

    /// Largest absolute component difference.
    pub fn max_abs_diff(&self, other: &IeVector) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &IeVector, tolerance: f64) -> bool {
        self.max_abs_diff(other) <= tolerance
    }
}

/// Resolves the reference vertex without depending on vertex numbering: the
/// base node, or among center candidates (minimum eccentricity, then minimum
/// distance sum) the one whose marked canonical form is smallest.
pub fn resolve_reference(g: &Graph, profile: &DistanceProfile, reference: Reference) -> Result<usize> {
    match reference {
        Reference::BaseNode => g.base_node().ok_or(Error::NoBaseNode),
        Reference::Center => {
            let candidates = center_candidates(profile);
            if candidates.len() == 1 {
                return Ok(candidates[0]);
            }
            Ok(candidates
                .into_iter()
                .map(|c| (canonical_labeling(g, Some(c)).certificate, c))
                .min()
                .expect("at least one candidate")
                .1)
        }
    }
}

/// Everything the estimator derived for one graph.
#[derive(Debug, Clone)]
pub struct Estimate {
    pub ie: IeVector,
    /// Reference vertex in the input numbering.
    pub reference_vertex: usize,
    /// The graph in canonical numbering (reference individualized).
    pub canonical: Graph,
    /// `order[i]` is the input vertex at canonical position `i`.
    pub order: Vec<usize>,
    /// Reference vertex in canonical numbering.
    pub canonical_reference: usize,
    pub profile: DistanceProfile,
    /// `None` only for the single-vertex graph.
    pub system: Option<ContourSystem>,
}

/// Full information estimation with default options.
pub fn ie_vector(g: &Graph, reference: Reference) -> Result<IeVector> {
    Ok(estimate(g, reference, &EstimatorOptions::default())?.ie)
}

pub fn estimate(g: &Graph, reference: Reference, options: &EstimatorOptions) -> Result<Estimate> {
    let raw_profile = all_pairs_distances(g);
    let reference_vertex = resolve_reference(g, &raw_profile, reference)?;
    let labeling = canonical_labeling(g, Some(reference_vertex));
    let canonical = g.relabel(&labeling.mapping()).with_sorted_edges();
    let canonical_reference = labeling.mapping()[reference_vertex];
    let profile = all_pairs_distances(&canonical);

    if canonical.vertex_count() < 2 {
        return Ok(Estimate {
            ie: IeVector::ZERO,
            reference_vertex,
            canonical,
            order: labeling.order,
            canonical_reference,
            profile,
            system: None,
        });
    }

    let system = match union_system(&canonical, canonical_reference) {
        Ok(s) => Some(s),
        Err(Error::EmptySystem) => None,
        Err(e) => return Err(e),
    };
    let h11 = h11(&canonical);
    let h12 = h12_from(&profile, canonical_reference, options.eps_variant);
    let (h21, h22, h23) = match &system {
        Some(s) => (h21(s, &canonical, options.h21_normalization), h22(s), h23(s)),
        None => (0.0, 0.0, 0.0),
    };
    Ok(Estimate {
        ie: IeVector::from_components(h11, h12, h21, h22, h23),
        reference_vertex,
        canonical,
        order: labeling.order,
        canonical_reference,
        profile,
        system,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, star};
    use std::f64::consts::FRAC_PI_4;

    const LOG2_3: f64 = 1.584_962_500_721_156;

    #[test]
    fn kernel_examples() {
        assert_eq!(entropy_of_weights(&[1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(entropy_of_weights(&[1.0]).unwrap(), 0.0);
        assert!((entropy_of_weights(&[3.0, 1.0, 1.0, 1.0]).unwrap() - 1.792_481_250_360_578).abs() < 1e-9);
        assert_eq!(entropy_of_weights(&[0.0, 2.0, 0.0, 2.0]).unwrap(), 1.0);
        assert_eq!(entropy_of_weights(&[0.0, 0.0]), Err(Error::AllZero));
        assert_eq!(entropy_of_weights(&[]), Err(Error::AllZero));
    }

    #[test]
    fn h11_examples() {
        assert!((h11(&cycle(3)) - LOG2_3).abs() < 1e-12);
        assert!((h11(&star(3)) - 1.792_481_250_360_578).abs() < 1e-9);
        assert!((h11(&path(3)) - 1.5).abs() < 1e-12);
        assert_eq!(h11(&path(1)), 0.0);
    }

    #[test]
    fn h12_examples() {
        // oracle: -(2*(2/5)log2(2/5) + (1/5)log2(1/5))
        assert!((h12(&path(3), Reference::Center).unwrap() - 1.521_928_094_887_362).abs() < 1e-9);
        let leaf = path(3).with_base_node(Some(0)).unwrap();
        // oracle: weights [2,3,4]/9
        assert!((h12(&leaf, Reference::BaseNode).unwrap() - 1.530_493_056_757_482_6).abs() < 1e-9);
        assert_eq!(h12(&path(3), Reference::BaseNode), Err(Error::NoBaseNode));
        // C4 from any vertex: weights [2,3,3,4], not constant
        assert!(h12(&cycle(4), Reference::Center).unwrap() < 2.0);
    }

    #[test]
    fn contour_entropies_p3() {
        let g = path(3);
        let s = union_system(&g, 1).unwrap();
        // 2 * H([2,1])
        assert!((h21(&s, &g, H21Normalization::Row) - 1.836_591_668_108_979).abs() < 1e-9);
        assert!((h22(&s) - 1.0).abs() < 1e-12);
        assert!((h23(&s) - 1.0).abs() < 1e-12);
        // global: H([2,1,2,1])
        assert!((h21(&s, &g, H21Normalization::Global) - 1.918_295_834_054_489_6).abs() < 1e-9);
    }

    #[test]
    fn contour_entropies_star_and_triangle() {
        let st = star(3);
        let s = union_system(&st, 0).unwrap();
        assert!((h21(&s, &st, H21Normalization::Row) - 2.433_834_373_377_398_4).abs() < 1e-9);
        assert!((h22(&s) - LOG2_3).abs() < 1e-12);

        let c3 = cycle(3);
        let s = union_system(&c3, 0).unwrap();
        assert!((h21(&s, &c3, H21Normalization::Row) - LOG2_3).abs() < 1e-12);
        assert_eq!(h22(&s), 0.0);
        assert!((h23(&s) - LOG2_3).abs() < 1e-12);
    }

    #[test]
    fn p4_frequencies_uniform() {
        let g = path(4);
        let s = union_system(&g, 1).unwrap();
        assert_eq!(s.frequencies(), vec![1, 1, 1]);
        assert!((h23(&s) - LOG2_3).abs() < 1e-12);
    }

    #[test]
    fn triangle_vector() {
        // remoteness from the center is [1, 2, 2]: the center itself sits at
        // distance 0
        let v = ie_vector(&cycle(3), Reference::Center).unwrap();
        assert!((v.h11 - LOG2_3).abs() < 1e-12);
        assert!((v.h12 - 1.521_928_094_887_362_1).abs() < 1e-12);
        assert!((v.h1 - 3.106_890_595_608_518).abs() < 1e-12);
        assert!((v.h2 - 2.0 * LOG2_3).abs() < 1e-12);
        assert!((v.amplitude - 4.438_602_672_897_146).abs() < 1e-12);
        assert!((v.phase - 0.795_440_243_808_679_8).abs() < 1e-12);
        assert!(v.phase > FRAC_PI_4);
    }

    #[test]
    fn p3_vector() {
        let v = ie_vector(&path(3), Reference::Center).unwrap();
        assert!((v.h1 - 3.021_928_094_887_362).abs() < 1e-9);
        assert!((v.h2 - 3.836_591_668_108_979).abs() < 1e-9);
    }

    #[test]
    fn single_vertex_is_zero() {
        let v = ie_vector(&path(1), Reference::Center).unwrap();
        assert_eq!(v, IeVector::ZERO);
    }

    #[test]
    fn per_vertex_eccentricity_variant() {
        let g = path(3);
        let e = estimate(
            &g,
            Reference::Center,
            &EstimatorOptions {
                eps_variant: EpsVariant::PerVertex,
                ..Default::default()
            },
        )
        .unwrap();
        // ecc = [2,1,2], r = [1,0,1] -> weights [3,1,3]
        let expected = entropy_of_weights(&[3.0, 1.0, 3.0]).unwrap();
        assert!((e.ie.h12 - expected).abs() < 1e-12);
    }

    #[test]
    fn reference_maps_back_to_input_numbering() {
        let g = path(5).relabel(&[4, 0, 2, 1, 3]);
        let e = estimate(&g, Reference::Center, &EstimatorOptions::default()).unwrap();
        assert_eq!(e.reference_vertex, 2);
        assert_eq!(e.order[e.canonical_reference], 2);
    }
}
