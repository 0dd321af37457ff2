//! Louvain community detection on the weighted undirected simplification
//! of an interaction network.
//!
//! The usual algorithm is nondeterministic; here nodes are visited in
//! sorted-id order, candidate communities are examined in ascending id
//! order, and exact gain ties are broken by a seeded RNG, so a fixed
//! (graph, seed) pair always yields the identical partition.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::network::InteractionGraph;

const GAIN_EPS: f64 = 1e-12;

/// A total assignment of nodes to clusters, with the seed that produced it.
/// Cluster ids are dense and ordered by each cluster's first node id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub assignments: BTreeMap<String, usize>,
    pub seed: u64,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn cluster_count(&self) -> usize {
        self.assignments
            .values()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }

    /// Cluster sizes, largest first.
    pub fn sizes_descending(&self) -> Vec<usize> {
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &cluster in self.assignments.values() {
            *sizes.entry(cluster).or_insert(0) += 1;
        }
        let mut sizes: Vec<usize> = sizes.into_values().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Modularity-maximizing partition at resolution 1.0.
pub fn louvain(graph: &InteractionGraph, seed: u64) -> Partition {
    louvain_with_resolution(graph, seed, 1.0)
}

pub fn louvain_with_resolution(graph: &InteractionGraph, seed: u64, resolution: f64) -> Partition {
    let n = graph.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut level = Level::from_graph(graph);
    // membership[i]: current community of original node i, as an index into
    // the current level's nodes.
    let mut membership: Vec<usize> = (0..n).collect();

    while let Some(node_to_comm) = one_level(&level, resolution, &mut rng) {
        let (dense, next) = level.aggregate(&node_to_comm);
        for m in membership.iter_mut() {
            *m = dense[node_to_comm[*m]];
        }
        level = next;
        if level.node_count() == 1 {
            break;
        }
    }

    // Relabel communities densely in order of first appearance over the
    // sorted original node ids.
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    let mut assignments = BTreeMap::new();
    for (i, id) in graph.node_ids().iter().enumerate() {
        let next_label = relabel.len();
        let label = *relabel.entry(membership[i]).or_insert(next_label);
        assignments.insert(id.clone(), label);
    }

    Partition { assignments, seed }
}

/// Modularity of a partition on the weighted undirected simplification.
pub fn modularity(graph: &InteractionGraph, partition: &Partition) -> f64 {
    let level = Level::from_graph(graph);
    let comm: Vec<usize> = graph
        .node_ids()
        .iter()
        .map(|id| partition.assignments[id])
        .collect();
    level.modularity(&comm, 1.0)
}

/// One coarsening level: symmetric weighted adjacency plus per-node
/// self-loop weight (intra-community weight folded in by aggregation).
struct Level {
    adj: Vec<Vec<(usize, f64)>>,
    self_loop: Vec<f64>,
    /// Weighted degree: sum of incident weights, self-loops counted twice.
    degree: Vec<f64>,
    /// Total degree over all nodes (2m).
    two_m: f64,
}

impl Level {
    fn from_graph(graph: &InteractionGraph) -> Level {
        let adj: Vec<Vec<(usize, f64)>> = graph
            .undirected_adjacency()
            .into_iter()
            .map(|list| list.into_iter().map(|(v, w)| (v, w as f64)).collect())
            .collect();
        let self_loop = vec![0.0; adj.len()];
        Level::assemble(adj, self_loop)
    }

    fn assemble(adj: Vec<Vec<(usize, f64)>>, self_loop: Vec<f64>) -> Level {
        let degree: Vec<f64> = adj
            .iter()
            .zip(&self_loop)
            .map(|(list, s)| list.iter().map(|(_, w)| *w).sum::<f64>() + 2.0 * s)
            .collect();
        let two_m = degree.iter().sum();
        Level {
            adj,
            self_loop,
            degree,
            two_m,
        }
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Collapse communities into nodes. Returns the dense relabeling
    /// (old community id -> new node index) and the coarsened level.
    fn aggregate(&self, node_to_comm: &[usize]) -> (Vec<usize>, Level) {
        let mut dense = vec![usize::MAX; self.node_count()];
        let mut next = 0;
        for &c in node_to_comm {
            if dense[c] == usize::MAX {
                dense[c] = next;
                next += 1;
            }
        }
        // Iterate communities in ascending id so new indices follow it.
        let mut dense_sorted = vec![usize::MAX; self.node_count()];
        let mut used: Vec<usize> = (0..self.node_count())
            .filter(|&c| dense[c] != usize::MAX)
            .collect();
        used.sort_unstable();
        for (i, &c) in used.iter().enumerate() {
            dense_sorted[c] = i;
        }

        let mut adj: Vec<BTreeMap<usize, f64>> = vec![BTreeMap::new(); next];
        let mut self_loop = vec![0.0; next];
        for u in 0..self.node_count() {
            let cu = dense_sorted[node_to_comm[u]];
            self_loop[cu] += self.self_loop[u];
            for &(v, w) in &self.adj[u] {
                let cv = dense_sorted[node_to_comm[v]];
                if cu == cv {
                    // Each undirected edge is visited from both endpoints,
                    // contributing w twice; half of that is the loop weight.
                    self_loop[cu] += w / 2.0;
                } else {
                    *adj[cu].entry(cv).or_insert(0.0) += w;
                }
            }
        }
        let adj: Vec<Vec<(usize, f64)>> = adj
            .into_iter()
            .map(|m| m.into_iter().collect())
            .collect();
        (dense_sorted, Level::assemble(adj, self_loop))
    }

    fn modularity(&self, node_to_comm: &[usize], resolution: f64) -> f64 {
        if self.two_m == 0.0 {
            return 0.0;
        }
        let n_comms = node_to_comm.iter().copied().max().map_or(0, |m| m + 1);
        let mut internal = vec![0.0; n_comms];
        let mut total = vec![0.0; n_comms];
        for u in 0..self.node_count() {
            let cu = node_to_comm[u];
            total[cu] += self.degree[u];
            internal[cu] += 2.0 * self.self_loop[u];
            for &(v, w) in &self.adj[u] {
                if node_to_comm[v] == cu {
                    internal[cu] += w;
                }
            }
        }
        (0..n_comms)
            .map(|c| {
                internal[c] / self.two_m - resolution * (total[c] / self.two_m).powi(2)
            })
            .sum()
    }
}

/// One local-moving phase. Returns the node-to-community map if at least
/// one node moved, `None` when the level is already stable.
fn one_level(level: &Level, resolution: f64, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let n = level.node_count();
    if n == 0 || level.two_m == 0.0 {
        return None;
    }

    let mut comm: Vec<usize> = (0..n).collect();
    let mut comm_total: Vec<f64> = level.degree.clone();
    let mut any_move = false;
    let mut pass = 0;

    loop {
        let mut moved_in_pass = false;
        for node in 0..n {
            let current = comm[node];
            let k = level.degree[node];

            // Weight from this node to each neighboring community,
            // in ascending community id.
            let mut neighbor_weight: BTreeMap<usize, f64> = BTreeMap::new();
            for &(v, w) in &level.adj[node] {
                if v != node {
                    *neighbor_weight.entry(comm[v]).or_insert(0.0) += w;
                }
            }

            comm_total[current] -= k;
            let gain_of = |c: usize| {
                let w_to_c = neighbor_weight.get(&c).copied().unwrap_or(0.0);
                w_to_c - resolution * k * comm_total[c] / level.two_m
            };
            let stay_gain = gain_of(current);

            let mut best_gain = stay_gain;
            let mut ties: Vec<usize> = Vec::new();
            for &c in neighbor_weight.keys() {
                if c == current {
                    continue;
                }
                let gain = gain_of(c);
                if gain > best_gain + GAIN_EPS {
                    best_gain = gain;
                    ties.clear();
                    ties.push(c);
                } else if (gain - best_gain).abs() <= GAIN_EPS && !ties.is_empty() {
                    ties.push(c);
                }
            }

            let target = if ties.is_empty() {
                current
            } else if ties.len() == 1 {
                ties[0]
            } else {
                ties[rng.gen_range(0..ties.len())]
            };

            comm_total[target] += k;
            if target != current {
                comm[node] = target;
                moved_in_pass = true;
                any_move = true;
            }
        }
        pass += 1;
        if !moved_in_pass || pass >= 1000 {
            break;
        }
    }

    any_move.then_some(comm)
}
