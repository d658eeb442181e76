//! Information estimations of graph structures.
//!
//! A connected simple graph is measured by Shannon entropies in two
//! orthogonal spaces. The vertex component combines the degree distribution
//! with the remoteness of every vertex from the center (or a marked base
//! node). The contour component is taken over fundamental cycles and open
//! contours (reference-to-terminal paths): the degrees inside each row, the
//! row sizes, and how often each branch is used. The two components form a
//! vector with an amplitude and a phase.
//!
//! ```
//! use structinfo::{generators, ie_vector, Reference};
//!
//! let v = ie_vector(&generators::cycle(3), Reference::Center).unwrap();
//! assert!((v.h2 - 2.0 * 3f64.log2()).abs() < 1e-12);
//! assert!((v.h11 - 3f64.log2()).abs() < 1e-12);
//! ```

#![forbid(unsafe_code)]

pub mod analysis;
pub mod bounds;
pub mod canon;
pub mod cycles;
pub mod entropy;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metric;

pub use bounds::{
    audit_estimate, bound_audit, contour_bounds, lagrange_sensitivity, vertex_bounds, ExtremalReport, Scenario,
};
pub use canon::{canonical_form, CanonicalForm};
pub use cycles::{
    build_incidence, check_orthogonality, fundamental_cycles, open_contours, union_system, ContourSystem,
};
pub use entropy::{
    entropy_of_weights, estimate, ie_vector, EpsVariant, Estimate, EstimatorOptions, H21Normalization, IeVector,
};
pub use error::{Error, GraphError, ParseError, Result};
pub use graph::{validate_graph, Graph};
pub use metric::{
    all_pairs_distances, degree_partition, find_center, remoteness, DegreePartition, DistanceProfile, Reference,
};
