//! Closed-form extremal estimates for every entropy component, the Lagrange
//! sensitivities of the constrained scenarios, and an audit comparing a
//! graph's achieved components against the bounds.
//!
//! Sensitivities are evaluated exactly as their closed forms are written, with
//! `e` the natural base. Their sign is whatever the formula yields.

use std::f64::consts::E;

use serde::Serialize;

use crate::cycles::ContourSystem;
use crate::entropy::{Estimate, IeVector};
use crate::error::{Error, Result};
use crate::format::fixed9;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VertexBounds {
    #[serde(serialize_with = "fixed9")]
    pub h11: f64,
    #[serde(serialize_with = "fixed9")]
    pub h12: f64,
    #[serde(serialize_with = "fixed9")]
    pub h1: f64,
    /// Degree maximizing H11 under the degree-sum constraint, `2L / K`.
    #[serde(serialize_with = "fixed9")]
    pub optimal_degree: f64,
}

/// Bounds from K vertices and L branches: `log2 K`, `log2 K`, `2 log2 K`.
pub fn vertex_bounds(vertex_count: usize, branch_count: usize) -> Result<VertexBounds> {
    if vertex_count == 0 {
        return Err(Error::NonPositiveParameter { name: "K", value: 0.0 });
    }
    let log_k = (vertex_count as f64).log2();
    Ok(VertexBounds {
        h11: log_k,
        h12: log_k,
        h1: 2.0 * log_k,
        optimal_degree: 2.0 * branch_count as f64 / vertex_count as f64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContourBounds {
    #[serde(serialize_with = "fixed9")]
    pub h21: f64,
    #[serde(serialize_with = "fixed9")]
    pub h22: f64,
    #[serde(serialize_with = "fixed9")]
    pub h23: f64,
    #[serde(serialize_with = "fixed9")]
    pub h2: f64,
}

/// Bounds for P rows of at most M vertices over L branches:
/// `P log2 M`, `log2 P`, `log2 L` and their sum.
pub fn contour_bounds(rows: usize, max_row_vertices: usize, branch_count: usize) -> Result<ContourBounds> {
    for (name, value) in [("P", rows), ("M", max_row_vertices), ("L", branch_count)] {
        if value == 0 {
            return Err(Error::NonPositiveParameter { name, value: 0.0 });
        }
    }
    let h21 = rows as f64 * (max_row_vertices as f64).log2();
    let h22 = (rows as f64).log2();
    let h23 = (branch_count as f64).log2();
    Ok(ContourBounds {
        h21,
        h22,
        h23,
        h2: h21 + h22 + h23,
    })
}

/// A constrained scenario together with its limit parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "scenario", rename_all = "kebab-case")]
pub enum Scenario {
    /// Degree entropy under the degree-sum constraint:
    /// `-(1/2L) log2(e R)`.
    DegreeSum {
        #[serde(serialize_with = "fixed9")]
        branches: f64,
        #[serde(serialize_with = "fixed9")]
        max_degree: f64,
    },
    /// Degree entropy with every degree at most R:
    /// `-(1/(K R)) log2(e R)`.
    BoundedBranching {
        #[serde(serialize_with = "fixed9")]
        vertices: f64,
        #[serde(serialize_with = "fixed9")]
        max_degree: f64,
    },
    /// Remoteness entropy with every distance at most d:
    /// `-((K-1)/K^2) (1/(ecc + d)) log2(e/K)`.
    BoundedRemoteness {
        #[serde(serialize_with = "fixed9")]
        vertices: f64,
        #[serde(serialize_with = "fixed9")]
        reference_eccentricity: f64,
        #[serde(serialize_with = "fixed9")]
        max_distance: f64,
    },
    /// Row degree entropy with degrees at most R and rows of at most M
    /// vertices: `-((M-1)/M^2) (1/R) log2(e/R)`.
    ContourVertices {
        #[serde(serialize_with = "fixed9")]
        max_row_vertices: f64,
        #[serde(serialize_with = "fixed9")]
        max_degree: f64,
    },
    /// Row complexity entropy with at most C_max branches per row:
    /// `-((P-1)/P^2) (1/C_max) log2(e/P)`.
    ContourBranches {
        #[serde(serialize_with = "fixed9")]
        rows: f64,
        #[serde(serialize_with = "fixed9")]
        max_complexity: f64,
    },
    /// Branch frequency entropy with frequencies at most F_max:
    /// `-((L-1)/L^2) (1/F_max) log2(e/L)`.
    BranchFrequency {
        #[serde(serialize_with = "fixed9")]
        branches: f64,
        #[serde(serialize_with = "fixed9")]
        max_frequency: f64,
    },
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::DegreeSum { .. } => "degree-sum",
            Scenario::BoundedBranching { .. } => "bounded-branching",
            Scenario::BoundedRemoteness { .. } => "bounded-remoteness",
            Scenario::ContourVertices { .. } => "contour-vertices",
            Scenario::ContourBranches { .. } => "contour-branches",
            Scenario::BranchFrequency { .. } => "branch-frequency",
        }
    }

    /// Component whose objective the multiplier belongs to.
    pub fn component(&self) -> &'static str {
        match self {
            Scenario::DegreeSum { .. } | Scenario::BoundedBranching { .. } => "h11",
            Scenario::BoundedRemoteness { .. } => "h12",
            Scenario::ContourVertices { .. } => "h21",
            Scenario::ContourBranches { .. } => "h22",
            Scenario::BranchFrequency { .. } => "h23",
        }
    }

    fn parameters(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Scenario::DegreeSum { branches, max_degree } => vec![("L", branches), ("R", max_degree)],
            Scenario::BoundedBranching { vertices, max_degree } => vec![("K", vertices), ("R", max_degree)],
            Scenario::BoundedRemoteness {
                vertices,
                reference_eccentricity,
                max_distance,
            } => vec![("K", vertices), ("ecc", reference_eccentricity), ("d", max_distance)],
            Scenario::ContourVertices {
                max_row_vertices,
                max_degree,
            } => vec![("M", max_row_vertices), ("R", max_degree)],
            Scenario::ContourBranches { rows, max_complexity } => vec![("P", rows), ("C_max", max_complexity)],
            Scenario::BranchFrequency {
                branches,
                max_frequency,
            } => vec![("L", branches), ("F_max", max_frequency)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sensitivity {
    #[serde(flatten)]
    pub scenario: Scenario,
    pub component: &'static str,
    #[serde(serialize_with = "fixed9")]
    pub lambda: f64,
    pub meaning: &'static str,
}

const SENSITIVITY_MEANING: &str = "rate of change of the component's optimum per unit change of the scenario's limit";

/// Lagrange multiplier of `scenario` at its extremum.
pub fn lagrange_sensitivity(scenario: Scenario) -> Result<Sensitivity> {
    for (name, value) in scenario.parameters() {
        if value.is_nan() || value <= 0.0 {
            return Err(Error::NonPositiveParameter { name, value });
        }
    }
    let lambda = match scenario {
        Scenario::DegreeSum { branches, max_degree } => -(1.0 / (2.0 * branches)) * (E * max_degree).log2(),
        Scenario::BoundedBranching { vertices, max_degree } => {
            -(1.0 / (vertices * max_degree)) * (E * max_degree).log2()
        }
        Scenario::BoundedRemoteness {
            vertices,
            reference_eccentricity,
            max_distance,
        } => {
            -((vertices - 1.0) / (vertices * vertices))
                * (1.0 / (reference_eccentricity + max_distance))
                * (E / vertices).log2()
        }
        Scenario::ContourVertices {
            max_row_vertices,
            max_degree,
        } => {
            -((max_row_vertices - 1.0) / (max_row_vertices * max_row_vertices))
                * (1.0 / max_degree)
                * (E / max_degree).log2()
        }
        Scenario::ContourBranches { rows, max_complexity } => {
            -((rows - 1.0) / (rows * rows)) * (1.0 / max_complexity) * (E / rows).log2()
        }
        Scenario::BranchFrequency {
            branches,
            max_frequency,
        } => -((branches - 1.0) / (branches * branches)) * (1.0 / max_frequency) * (E / branches).log2(),
    };
    Ok(Sensitivity {
        scenario,
        component: scenario.component(),
        lambda: if lambda == 0.0 { 0.0 } else { lambda },
        meaning: SENSITIVITY_MEANING,
    })
}

/// One row of the audit table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentAudit {
    pub component: &'static str,
    #[serde(serialize_with = "fixed9")]
    pub achieved: f64,
    #[serde(serialize_with = "fixed9")]
    pub bound: f64,
    #[serde(serialize_with = "fixed9")]
    pub gap: f64,
}

impl ComponentAudit {
    fn new(component: &'static str, achieved: f64, bound: f64) -> Self {
        Self {
            component,
            achieved,
            bound,
            gap: bound - achieved,
        }
    }

    pub fn within(&self, slack: f64) -> bool {
        self.achieved <= self.bound + slack
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub vertex_count: usize,
    pub branch_count: usize,
    pub rows: usize,
    pub max_row_vertices: usize,
    pub vertex_bounds: VertexBounds,
    pub contour_bounds: Option<ContourBounds>,
    pub components: Vec<ComponentAudit>,
    pub sensitivities: Vec<Sensitivity>,
    /// Extremal H2 minus extremal H1.
    #[serde(serialize_with = "fixed9")]
    pub contour_lead: f64,
    pub notes: Vec<String>,
}

impl ExtremalReport {
    pub fn gap(&self, component: &str) -> Option<f64> {
        self.components.iter().find(|c| c.component == component).map(|c| c.gap)
    }

    pub fn all_within(&self, slack: f64) -> bool {
        self.components.iter().all(|c| c.within(slack))
    }
}

/// Achieved-versus-bound audit for one graph.
///
/// `reference` is the vertex (in `g`'s numbering) that anchors remoteness and
/// the open contours; `system` is `None` only for the single-vertex graph.
/// The H21 bound uses the largest row vertex count.
pub fn bound_audit(
    g: &Graph,
    ie: &IeVector,
    system: Option<&ContourSystem>,
    reference_eccentricity: usize,
) -> Result<ExtremalReport> {
    let k = g.vertex_count();
    let l = g.branch_count();
    let vb = vertex_bounds(k, l)?;
    let rows = system.map_or(0, ContourSystem::row_count);
    let max_row_vertices = system.and_then(|s| s.vertex_counts().into_iter().max()).unwrap_or(0);
    let cb = if rows > 0 {
        Some(contour_bounds(rows, max_row_vertices, l)?)
    } else {
        None
    };

    let mut components = vec![
        ComponentAudit::new("h11", ie.h11, vb.h11),
        ComponentAudit::new("h12", ie.h12, vb.h12),
        ComponentAudit::new("h1", ie.h1, vb.h1),
    ];
    let zero = ContourBounds {
        h21: 0.0,
        h22: 0.0,
        h23: 0.0,
        h2: 0.0,
    };
    let c = cb.unwrap_or(zero);
    components.extend([
        ComponentAudit::new("h21", ie.h21, c.h21),
        ComponentAudit::new("h22", ie.h22, c.h22),
        ComponentAudit::new("h23", ie.h23, c.h23),
        ComponentAudit::new("h2", ie.h2, c.h2),
    ]);

    let mut notes = vec![
        "the degree-sum multiplier takes its branching limit R from the bounded-branching scenario".to_string(),
        "the H1 bound is not claimed to be jointly attainable; gaps are reported only".to_string(),
    ];
    let mut sensitivities = Vec::new();
    if k >= 2 {
        let max_degree = g.degrees().into_iter().max().unwrap_or(0) as f64;
        let max_distance = reference_eccentricity as f64;
        let scenarios = [
            Some(Scenario::DegreeSum {
                branches: l as f64,
                max_degree,
            }),
            Some(Scenario::BoundedBranching {
                vertices: k as f64,
                max_degree,
            }),
            Some(Scenario::BoundedRemoteness {
                vertices: k as f64,
                reference_eccentricity: reference_eccentricity as f64,
                max_distance,
            }),
            system.map(|_| Scenario::ContourVertices {
                max_row_vertices: max_row_vertices as f64,
                max_degree,
            }),
            system.map(|s| Scenario::ContourBranches {
                rows: rows as f64,
                max_complexity: s.complexities().into_iter().max().unwrap_or(0) as f64,
            }),
            system.map(|s| Scenario::BranchFrequency {
                branches: l as f64,
                max_frequency: s.frequencies().into_iter().max().unwrap_or(0) as f64,
            }),
        ];
        for scenario in scenarios.into_iter().flatten() {
            sensitivities.push(lagrange_sensitivity(scenario)?);
        }
    } else {
        notes.push("single-vertex graph: every component is 0 and no contour rows exist".to_string());
    }

    Ok(ExtremalReport {
        vertex_count: k,
        branch_count: l,
        rows,
        max_row_vertices,
        vertex_bounds: vb,
        contour_bounds: cb,
        components,
        sensitivities,
        contour_lead: c.h2 - vb.h1,
        notes,
    })
}

/// [`bound_audit`] on the output of [`estimate`](crate::entropy::estimate).
pub fn audit_estimate(estimate: &Estimate) -> Result<ExtremalReport> {
    bound_audit(
        &estimate.canonical,
        &estimate.ie,
        estimate.system.as_ref(),
        estimate.profile.eccentricity(estimate.canonical_reference),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{estimate, EstimatorOptions};
    use crate::generators::{cycle, path};
    use crate::metric::Reference;

    fn audit(g: &Graph) -> ExtremalReport {
        audit_estimate(&estimate(g, Reference::Center, &EstimatorOptions::default()).unwrap()).unwrap()
    }

    #[test]
    fn vertex_bound_examples() {
        assert!((vertex_bounds(8, 7).unwrap().h1 - 6.0).abs() < 1e-12);
        assert_eq!(vertex_bounds(3, 3).unwrap().optimal_degree, 2.0);
        let k5 = vertex_bounds(5, 10).unwrap();
        assert_eq!(k5.optimal_degree, 4.0);
        assert_eq!(k5.optimal_degree * 5.0, 20.0);
    }

    #[test]
    fn contour_bound_examples() {
        let c3 = contour_bounds(1, 3, 3).unwrap();
        let l3 = 3f64.log2();
        assert!((c3.h21 - l3).abs() < 1e-12);
        assert_eq!(c3.h22, 0.0);
        assert!((c3.h23 - l3).abs() < 1e-12);
        assert!((c3.h2 - 2.0 * l3).abs() < 1e-12);
        assert_eq!(contour_bounds(2, 2, 2).unwrap().h21, 2.0);
        assert!(contour_bounds(0, 2, 2).is_err());
    }

    #[test]
    fn sensitivity_formulas() {
        // closed forms evaluated independently (python math.log2, math.e)
        let s = lagrange_sensitivity(Scenario::BoundedBranching {
            vertices: 4.0,
            max_degree: 3.0,
        })
        .unwrap();
        assert!((s.lambda - -0.252_304_795_134_176_6).abs() < 1e-12);

        let s = lagrange_sensitivity(Scenario::BoundedRemoteness {
            vertices: 2.0,
            reference_eccentricity: 1.0,
            max_distance: 1.0,
        })
        .unwrap();
        assert!((s.lambda - -0.055_336_880_111_120_416).abs() < 1e-12);

        let s = lagrange_sensitivity(Scenario::ContourBranches {
            rows: 1.0,
            max_complexity: 3.0,
        })
        .unwrap();
        assert_eq!(s.lambda, 0.0);
    }

    #[test]
    fn non_positive_parameter_rejected() {
        let err = lagrange_sensitivity(Scenario::DegreeSum {
            branches: 0.0,
            max_degree: 2.0,
        })
        .unwrap_err();
        assert_eq!(err, Error::NonPositiveParameter { name: "L", value: 0.0 });
    }

    #[test]
    fn triangle_saturates_degree_and_contour_bounds() {
        let r = audit(&cycle(3));
        for c in ["h11", "h21", "h22", "h23", "h2"] {
            assert!(r.gap(c).unwrap().abs() < 1e-9, "{c}");
        }
        // remoteness weights [1, 2, 2] fall short of log2 3
        assert!((r.gap("h12").unwrap() - (3f64.log2() - 1.521_928_094_887_362_1)).abs() < 1e-12);
    }

    #[test]
    fn path8_degree_gap_positive() {
        let r = audit(&path(8));
        assert!(r.gap("h11").unwrap() > 1e-3);
        assert!(r.all_within(1e-9));
    }

    #[test]
    fn contour_bound_outgrows_vertex_bound() {
        // K = L = 8 and K = L = 16 cycles-with-chords scaled: one row per
        // branch-excess, rows of M = K / 2 vertices
        let small_v = vertex_bounds(8, 8).unwrap().h1;
        let large_v = vertex_bounds(16, 16).unwrap().h1;
        let small_c = contour_bounds(4, 4, 8).unwrap().h2;
        let large_c = contour_bounds(8, 8, 16).unwrap().h2;
        assert!(large_c - small_c > large_v - small_v);
    }

    #[test]
    fn single_vertex_audit() {
        let r = audit(&path(1));
        assert_eq!(r.rows, 0);
        assert!(r.sensitivities.is_empty());
        assert!(r.all_within(0.0));
    }
}
