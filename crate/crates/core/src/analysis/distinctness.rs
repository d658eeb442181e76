use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::entropy::{estimate, EstimatorOptions, IeVector};
use crate::error::{Error, Result};
use crate::format::{fixed9, fmt9};
use crate::metric::{degree_partition, Reference};

use super::trees::enumerate_trees;

const MAX_EXPERIMENT_VERTICES: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct TreeRecord {
    pub index: usize,
    pub partition: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub certificate: String,
    pub ie: IeVector,
}

#[derive(Debug, Clone, Serialize)]
pub struct DistinctnessReport {
    pub vertex_count: usize,
    pub tree_count: usize,
    pub partition_count: usize,
    pub distinct_vectors: usize,
    #[serde(serialize_with = "fixed9")]
    pub tolerance: f64,
    /// Pairs of tree indices whose vectors agree within the tolerance.
    pub collisions: Vec<(usize, usize)>,
    /// Pairs of trees that share a degree partition.
    pub shared_partition_pairs: usize,
    /// Of those, pairs the vectors still separate.
    pub shared_partition_separated: usize,
    pub trees: Vec<TreeRecord>,
}

impl DistinctnessReport {
    pub fn all_distinct(&self) -> bool {
        self.collisions.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} trees, {} partitions, {} distinct IE vectors",
            self.tree_count, self.partition_count, self.distinct_vectors
        )
    }

    /// `index,h1,h2,amplitude,phase` per tree, for external plotting.
    pub fn plot_csv(&self) -> String {
        let mut out = String::from("index,h1,h2,amplitude,phase\n");
        for t in &self.trees {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                t.index,
                fmt9(t.ie.h1),
                fmt9(t.ie.h2),
                fmt9(t.ie.amplitude),
                fmt9(t.ie.phase)
            );
        }
        out
    }
}

/// Estimates every nonisomorphic tree on `n <= 10` vertices (unmarked,
/// center reference) and counts distinct vectors at `tolerance`.
pub fn distinctness_experiment(n: usize, tolerance: f64, options: &EstimatorOptions) -> Result<DistinctnessReport> {
    if n > MAX_EXPERIMENT_VERTICES {
        return Err(Error::TooLarge {
            what: "distinctness_experiment",
            limit: MAX_EXPERIMENT_VERTICES,
            got: n,
        });
    }
    let trees = enumerate_trees(n)?;
    let records: Vec<TreeRecord> = trees
        .par_iter()
        .enumerate()
        .map(|(index, t)| {
            Ok(TreeRecord {
                index,
                partition: degree_partition(t).parts,
                edges: t.edges().to_vec(),
                certificate: canonical_form(t)?.to_hex(),
                ie: estimate(t, Reference::Center, options)?.ie,
            })
        })
        .collect::<Result<_>>()?;

    let partition_count = records.iter().map(|r| &r.partition).collect::<BTreeSet<_>>().len();
    let mut classes: Vec<usize> = (0..records.len()).collect();
    let mut collisions = Vec::new();
    let mut shared_partition_pairs = 0;
    let mut shared_partition_separated = 0;
    for i in 0..records.len() {
        for j in i + 1..records.len() {
            let same = records[i].ie.approx_eq(&records[j].ie, tolerance);
            if same {
                collisions.push((i, j));
                let (a, b) = (root(&mut classes, i), root(&mut classes, j));
                classes[a.max(b)] = a.min(b);
            }
            if records[i].partition == records[j].partition {
                shared_partition_pairs += 1;
                if !same {
                    shared_partition_separated += 1;
                }
            }
        }
    }
    let distinct_vectors = (0..records.len()).filter(|&i| root(&mut classes, i) == i).count();

    Ok(DistinctnessReport {
        vertex_count: n,
        tree_count: records.len(),
        partition_count,
        distinct_vectors,
        tolerance,
        collisions,
        shared_partition_pairs,
        shared_partition_separated,
        trees: records,
    })
}

fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertices_single_tree() {
        let r = distinctness_experiment(2, 1e-9, &EstimatorOptions::default()).unwrap();
        assert_eq!((r.tree_count, r.distinct_vectors), (1, 1));
        assert!(r.all_distinct());
    }

    #[test]
    fn too_large() {
        assert!(distinctness_experiment(11, 1e-9, &EstimatorOptions::default()).is_err());
    }

    #[test]
    fn plot_data_has_one_row_per_tree() {
        let r = distinctness_experiment(5, 1e-9, &EstimatorOptions::default()).unwrap();
        assert_eq!(r.plot_csv().lines().count(), 1 + 3);
    }
}
