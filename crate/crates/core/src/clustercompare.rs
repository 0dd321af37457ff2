//! Comparison of Louvain partitions across parallel networks: common-node
//! restriction, Rand index / Adjusted Rand Index, and top-cluster sizes.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::louvain::Partition;

/// Pair-agreement comparison of two partitions over the same node set.
///
/// `same_in_both` (a) counts pairs co-clustered on both sides,
/// `different_in_both` (b) pairs separated on both sides, and `total_pairs`
/// (c) is n(n-1)/2, so the Rand index is (a + b) / c. The ARI corrects for
/// chance into [-1, 1]; both are absent when fewer than two common nodes
/// exist. `edge_count_a` is context copied from the first network when the
/// comparison is produced by the reporting pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionComparison {
    pub common_nodes: usize,
    pub same_in_both: u64,
    pub different_in_both: u64,
    pub total_pairs: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rand_index: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ari: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_count_a: Option<usize>,
}

/// Restrict a partition to the given node set; clusters left empty simply
/// disappear, surviving assignments keep their cluster ids.
pub fn restrict_partition(partition: &Partition, nodes: &BTreeSet<String>) -> Partition {
    Partition {
        assignments: partition
            .assignments
            .iter()
            .filter(|(node, _)| nodes.contains(*node))
            .map(|(node, &cluster)| (node.clone(), cluster))
            .collect(),
        seed: partition.seed,
    }
}

fn choose2(n: u64) -> u64 {
    n * (n - 1) / 2
}

/// Rand index and Hubert-Arabie Adjusted Rand Index from the contingency
/// table of two partitions over an identical node set.
pub fn adjusted_rand_index(p1: &Partition, p2: &Partition) -> Result<PartitionComparison> {
    if p1.assignments.len() != p2.assignments.len()
        || p1.assignments.keys().ne(p2.assignments.keys())
    {
        let first_diff = p1
            .assignments
            .keys()
            .find(|k| !p2.assignments.contains_key(*k))
            .or_else(|| {
                p2.assignments
                    .keys()
                    .find(|k| !p1.assignments.contains_key(*k))
            })
            .cloned()
            .unwrap_or_default();
        return Err(Error::PartitionMismatch {
            left: p1.assignments.len(),
            right: p2.assignments.len(),
            first_diff,
        });
    }

    let n = p1.assignments.len() as u64;
    let mut contingency: HashMap<(usize, usize), u64> = HashMap::new();
    let mut rows: HashMap<usize, u64> = HashMap::new();
    let mut cols: HashMap<usize, u64> = HashMap::new();
    for (node, &c1) in &p1.assignments {
        let c2 = p2.assignments[node];
        *contingency.entry((c1, c2)).or_insert(0) += 1;
        *rows.entry(c1).or_insert(0) += 1;
        *cols.entry(c2).or_insert(0) += 1;
    }

    let same_in_both: u64 = contingency.values().map(|&v| choose2(v)).sum();
    let same_p1: u64 = rows.values().map(|&v| choose2(v)).sum();
    let same_p2: u64 = cols.values().map(|&v| choose2(v)).sum();
    let total_pairs = choose2(n);
    // b = c - |same in p1| - |same in p2| + a, summed before subtracting so
    // the intermediate stays non-negative
    let different_in_both = total_pairs + same_in_both - same_p1 - same_p2;

    let (rand_index, ari) = if n < 2 {
        (None, None)
    } else {
        let r = (same_in_both + different_in_both) as f64 / total_pairs as f64;
        let expected = same_p1 as f64 * same_p2 as f64 / total_pairs as f64;
        let max_index = (same_p1 + same_p2) as f64 / 2.0;
        // Degenerate denominator happens exactly when both partitions are
        // all singletons or both are one block, i.e. identical.
        let ari = if (max_index - expected).abs() < 1e-12 {
            1.0
        } else {
            (same_in_both as f64 - expected) / (max_index - expected)
        };
        (Some(r), Some(ari))
    };

    Ok(PartitionComparison {
        common_nodes: n as usize,
        same_in_both,
        different_in_both,
        total_pairs,
        rand_index,
        ari,
        edge_count_a: None,
    })
}

/// Sizes of the largest clusters, descending; shorter than `count` if the
/// partition has fewer clusters.
pub fn top_cluster_sizes(partition: &Partition, count: usize) -> Vec<usize> {
    let mut sizes = partition.sizes_descending();
    sizes.truncate(count);
    sizes
}
