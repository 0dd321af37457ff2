//! Network-level statistics: size, degree, density, components and the
//! diameter of the largest, reciprocity, transitivity, k-cores, and the
//! Louvain cluster profile.
//!
//! Conventions (recorded in output metadata): average degree is |E|/|V|;
//! density is |E|/(|V|(|V|-1)) on the simple digraph; diameter, transitivity
//! and k-cores are computed on the undirected unweighted simplification;
//! the diameter is that of the largest weakly-connected component.

use serde::{Deserialize, Serialize};

use crate::louvain::louvain_with_resolution;
use crate::network::InteractionGraph;

/// The statistics row set for one interaction network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkStats {
    pub nodes: usize,
    pub edges: usize,
    /// |E| / |V|.
    pub average_degree: f64,
    /// |E| / (|V| (|V|-1)).
    pub density: f64,
    pub mean_edge_weight: f64,
    pub component_count: usize,
    pub largest_component_size: usize,
    pub largest_component_diameter: usize,
    pub cluster_count: usize,
    pub largest_cluster_size: usize,
    pub reciprocity: f64,
    pub transitivity: f64,
    pub max_k_core: usize,
    /// Seed used for the Louvain clustering behind the cluster rows.
    pub louvain_seed: u64,
}

/// Weakly-connected components as sorted node-index lists, ordered by their
/// smallest member.
pub fn weak_components(graph: &InteractionGraph) -> Vec<Vec<usize>> {
    let n = graph.node_count();
    let adj = undirected_unweighted(graph);
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    component.push(v);
                    queue.push_back(v);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

/// Exact diameter (unweighted hops, ignoring edge direction) of a
/// weakly-connected node set, by iterative fringe BFS from a double-sweep
/// midpoint. Only a handful of BFS runs are needed on social graphs.
pub fn diameter(graph: &InteractionGraph, component: &[usize]) -> usize {
    let adj = undirected_unweighted(graph);
    diameter_on_adjacency(&adj, component)
}

fn diameter_on_adjacency(adj: &[Vec<usize>], component: &[usize]) -> usize {
    if component.len() <= 1 {
        return 0;
    }
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];

    // Double sweep from the highest-degree node: a lower bound and a
    // midpoint node whose BFS levels drive the upper-bound refinement.
    let start = *component
        .iter()
        .max_by_key(|&&v| (adj[v].len(), std::cmp::Reverse(v)))
        .expect("component is non-empty");
    let (far_a, _) = bfs(adj, start, &mut dist);
    let mut parent = vec![usize::MAX; n];
    let (far_b, ecc_a) = bfs_with_parents(adj, far_a, &mut dist, &mut parent);
    let mut lower_bound = ecc_a;

    let mut mid = far_b;
    for _ in 0..ecc_a / 2 {
        mid = parent[mid];
    }

    let (_, ecc_mid) = bfs(adj, mid, &mut dist);
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); ecc_mid + 1];
    for &v in component {
        levels[dist[v]].push(v);
    }
    lower_bound = lower_bound.max(ecc_mid);

    for i in (0..=ecc_mid).rev() {
        // All unprocessed nodes are within distance i of mid, so any pair of
        // them is within 2i; once the lower bound reaches that, it is exact.
        if lower_bound >= 2 * i {
            return lower_bound;
        }
        for &v in &levels[i] {
            let (_, ecc_v) = bfs(adj, v, &mut dist);
            lower_bound = lower_bound.max(ecc_v);
        }
    }
    lower_bound
}

fn bfs(adj: &[Vec<usize>], start: usize, dist: &mut [usize]) -> (usize, usize) {
    for d in dist.iter_mut() {
        *d = usize::MAX;
    }
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let (mut farthest, mut ecc) = (start, 0);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                if dist[v] > ecc {
                    ecc = dist[v];
                    farthest = v;
                }
                queue.push_back(v);
            }
        }
    }
    (farthest, ecc)
}

fn bfs_with_parents(
    adj: &[Vec<usize>],
    start: usize,
    dist: &mut [usize],
    parent: &mut [usize],
) -> (usize, usize) {
    for d in dist.iter_mut() {
        *d = usize::MAX;
    }
    dist[start] = 0;
    parent[start] = start;
    let mut queue = std::collections::VecDeque::from([start]);
    let (mut farthest, mut ecc) = (start, 0);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                if dist[v] > ecc {
                    ecc = dist[v];
                    farthest = v;
                }
                queue.push_back(v);
            }
        }
    }
    (farthest, ecc)
}

/// Fraction of directed edges (u, v) whose reverse (v, u) is also present.
/// Weights are ignored; an edgeless graph scores 0.
pub fn reciprocity(graph: &InteractionGraph) -> f64 {
    let edges = graph.edge_count();
    if edges == 0 {
        return 0.0;
    }
    let mut mutual = 0usize;
    for u in 0..graph.node_count() {
        for &(v, _) in graph.out_neighbors(u) {
            if graph.has_edge(v, u) {
                mutual += 1;
            }
        }
    }
    mutual as f64 / edges as f64
}

/// Global clustering coefficient (3 x triangles / connected triplets) on the
/// undirected simplification. Triangles are counted with forward adjacency
/// lists in degree order, which keeps hub-heavy graphs tractable.
pub fn transitivity(graph: &InteractionGraph) -> f64 {
    let adj = undirected_unweighted(graph);
    let n = adj.len();

    let triplets: u64 = adj
        .iter()
        .map(|list| {
            let d = list.len() as u64;
            d * (d - 1) / 2
        })
        .sum();
    if triplets == 0 {
        return 0.0;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (adj[v].len(), v));
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }

    let mut forward: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        for &w in &adj[v] {
            if rank[w] > rank[v] {
                forward[v].push(w);
            }
        }
        forward[v].sort_unstable_by_key(|&w| rank[w]);
    }

    let mut triangles = 0u64;
    for u in 0..n {
        for &v in &forward[u] {
            triangles += sorted_intersection_len(&forward[u], &forward[v], &rank);
        }
    }

    3.0 * triangles as f64 / triplets as f64
}

fn sorted_intersection_len(a: &[usize], b: &[usize], rank: &[usize]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match rank[a[i]].cmp(&rank[b[j]]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Largest k such that the k-core of the undirected simplification is
/// non-empty (total degree, weights ignored).
pub fn max_k_core(graph: &InteractionGraph) -> usize {
    let adj = undirected_unweighted(graph);
    coreness(&adj).into_iter().max().unwrap_or(0)
}

/// Coreness of every node, by bucketed peeling in O(|E|).
fn coreness(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    let mut bucket_start = vec![0usize; max_degree + 2];
    for &d in &degree {
        bucket_start[d + 1] += 1;
    }
    for i in 1..bucket_start.len() {
        bucket_start[i] += bucket_start[i - 1];
    }
    let mut nodes = vec![0usize; n];
    let mut position = vec![0usize; n];
    let mut next_slot = bucket_start.clone();
    for v in 0..n {
        position[v] = next_slot[degree[v]];
        nodes[position[v]] = v;
        next_slot[degree[v]] += 1;
    }

    for i in 0..n {
        let v = nodes[i];
        for &w in &adj[v] {
            if degree[w] > degree[v] {
                // Swap w with the first node of its degree bucket, then
                // shrink the bucket by one and decrement w's degree.
                let dw = degree[w];
                let pw = position[w];
                let first = bucket_start[dw];
                let u = nodes[first];
                if u != w {
                    nodes[pw] = u;
                    nodes[first] = w;
                    position[u] = pw;
                    position[w] = first;
                }
                bucket_start[dw] = first + 1;
                degree[w] -= 1;
            }
        }
    }

    degree
}

/// Simple undirected unweighted adjacency (neighbor indices, sorted).
fn undirected_unweighted(graph: &InteractionGraph) -> Vec<Vec<usize>> {
    graph
        .undirected_adjacency()
        .into_iter()
        .map(|list| list.into_iter().map(|(v, _)| v).collect())
        .collect()
}

/// Compute the full statistics row set. The seed drives Louvain only.
pub fn network_stats(graph: &InteractionGraph, seed: u64) -> NetworkStats {
    network_stats_with_resolution(graph, seed, 1.0)
}

pub fn network_stats_with_resolution(
    graph: &InteractionGraph,
    seed: u64,
    resolution: f64,
) -> NetworkStats {
    let nodes = graph.node_count();
    let edges = graph.edge_count();

    let components = weak_components(graph);
    let largest = components
        .iter()
        .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])))
        .cloned()
        .unwrap_or_default();
    let largest_component_diameter = if largest.is_empty() {
        0
    } else {
        diameter(graph, &largest)
    };

    let partition = louvain_with_resolution(graph, seed, resolution);
    let cluster_sizes = partition.sizes_descending();

    NetworkStats {
        nodes,
        edges,
        average_degree: if nodes == 0 {
            0.0
        } else {
            edges as f64 / nodes as f64
        },
        density: if nodes < 2 {
            0.0
        } else {
            edges as f64 / (nodes as f64 * (nodes as f64 - 1.0))
        },
        mean_edge_weight: if edges == 0 {
            0.0
        } else {
            graph.total_weight() as f64 / edges as f64
        },
        component_count: components.len(),
        largest_component_size: largest.len(),
        largest_component_diameter,
        cluster_count: partition.cluster_count(),
        largest_cluster_size: cluster_sizes.first().copied().unwrap_or(0),
        reciprocity: reciprocity(graph),
        transitivity: transitivity(graph),
        max_k_core: max_k_core(graph),
        louvain_seed: seed,
    }
}
