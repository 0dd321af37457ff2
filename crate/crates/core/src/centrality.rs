//! Node centralities and deterministic ranking.
//!
//! Degree, betweenness and closeness treat the graph as unweighted;
//! eigenvector centrality runs on the weighted undirected simplification.
//! Closeness is the harmonic variant over outgoing distances, which stays
//! well-defined on the heavily disconnected networks this pipeline sees
//! (the classic variant is available for connected graphs). Every variant
//! choice is recorded on the result.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::network::InteractionGraph;

pub const EIGENVECTOR_TOLERANCE: f64 = 1e-9;
pub const EIGENVECTOR_MAX_ITERATIONS: usize = 1000;

/// Sources processed per parallel betweenness task; partial sums are folded
/// in task order so the result does not depend on scheduling.
const BETWEENNESS_CHUNK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Degree,
    Betweenness,
    Closeness,
    Eigenvector,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Degree,
        Measure::Betweenness,
        Measure::Closeness,
        Measure::Eigenvector,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Betweenness => "betweenness",
            Measure::Closeness => "closeness",
            Measure::Eigenvector => "eigenvector",
        }
    }
}

impl std::str::FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "degree" => Ok(Measure::Degree),
            "betweenness" => Ok(Measure::Betweenness),
            "closeness" => Ok(Measure::Closeness),
            "eigenvector" => Ok(Measure::Eigenvector),
            other => Err(Error::InvalidConfig(format!(
                "unknown centrality measure '{other}'"
            ))),
        }
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Centrality values for every node of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityResult {
    pub measure: Measure,
    pub values: BTreeMap<String, f64>,
    /// `Some` for eigenvector centrality: whether power iteration reached
    /// tolerance within the iteration budget. Non-convergence is reported,
    /// never raised; the caller decides whether to exclude the result.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
    /// Which concrete variant produced the values.
    pub variant: String,
    pub weighted: bool,
}

impl CentralityResult {
    pub fn is_usable(&self) -> bool {
        self.converged.unwrap_or(true)
    }
}

/// An ordered node list, rank 1 first, with the tie-break rule that made
/// it deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedList {
    pub measure: Measure,
    pub entries: Vec<String>,
    pub tie_break: String,
}

impl RankedList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Compute one centrality measure over a graph.
pub fn centrality(graph: &InteractionGraph, measure: Measure) -> CentralityResult {
    match measure {
        Measure::Degree => degree(graph),
        Measure::Betweenness => betweenness(graph),
        Measure::Closeness => harmonic_closeness(graph),
        Measure::Eigenvector => eigenvector(graph),
    }
}

fn result_from_values(
    graph: &InteractionGraph,
    measure: Measure,
    values: Vec<f64>,
    converged: Option<bool>,
    variant: &str,
    weighted: bool,
) -> CentralityResult {
    CentralityResult {
        measure,
        values: graph
            .node_ids()
            .iter()
            .cloned()
            .zip(values)
            .collect(),
        converged,
        variant: variant.to_string(),
        weighted,
    }
}

/// Total (in + out) degree on the simple digraph, normalized by n-1.
fn degree(graph: &InteractionGraph) -> CentralityResult {
    let n = graph.node_count();
    let scale = if n > 1 { 1.0 / (n as f64 - 1.0) } else { 0.0 };
    let values: Vec<f64> = (0..n)
        .map(|v| (graph.out_neighbors(v).len() + graph.in_neighbors(v).len()) as f64 * scale)
        .collect();
    result_from_values(
        graph,
        Measure::Degree,
        values,
        None,
        "total_degree_over_n_minus_1",
        false,
    )
}

/// Directed unweighted betweenness (Brandes), normalized by (n-1)(n-2).
fn betweenness(graph: &InteractionGraph) -> CentralityResult {
    let n = graph.node_count();
    let mut accumulated = vec![0.0f64; n];
    if n > 2 {
        let sources: Vec<usize> = (0..n).collect();
        let partials: Vec<Vec<f64>> = sources
            .par_chunks(BETWEENNESS_CHUNK)
            .map(|chunk| {
                let mut partial = vec![0.0f64; n];
                let mut state = BrandesState::new(n);
                for &s in chunk {
                    state.accumulate(graph, s, &mut partial);
                }
                partial
            })
            .collect();
        for partial in partials {
            for (acc, p) in accumulated.iter_mut().zip(partial) {
                *acc += p;
            }
        }
        let scale = 1.0 / ((n as f64 - 1.0) * (n as f64 - 2.0));
        for v in accumulated.iter_mut() {
            *v *= scale;
        }
    }
    result_from_values(
        graph,
        Measure::Betweenness,
        accumulated,
        None,
        "directed_unweighted_brandes",
        false,
    )
}

struct BrandesState {
    sigma: Vec<f64>,
    dist: Vec<i64>,
    delta: Vec<f64>,
    predecessors: Vec<Vec<usize>>,
    stack: Vec<usize>,
    queue: VecDeque<usize>,
}

impl BrandesState {
    fn new(n: usize) -> BrandesState {
        BrandesState {
            sigma: vec![0.0; n],
            dist: vec![-1; n],
            delta: vec![0.0; n],
            predecessors: vec![Vec::new(); n],
            stack: Vec::with_capacity(n),
            queue: VecDeque::new(),
        }
    }

    fn accumulate(&mut self, graph: &InteractionGraph, source: usize, out: &mut [f64]) {
        self.stack.clear();
        for v in 0..graph.node_count() {
            self.sigma[v] = 0.0;
            self.dist[v] = -1;
            self.delta[v] = 0.0;
            self.predecessors[v].clear();
        }
        self.sigma[source] = 1.0;
        self.dist[source] = 0;
        self.queue.push_back(source);

        while let Some(u) = self.queue.pop_front() {
            self.stack.push(u);
            for &(v, _) in graph.out_neighbors(u) {
                if self.dist[v] < 0 {
                    self.dist[v] = self.dist[u] + 1;
                    self.queue.push_back(v);
                }
                if self.dist[v] == self.dist[u] + 1 {
                    self.sigma[v] += self.sigma[u];
                    self.predecessors[v].push(u);
                }
            }
        }

        while let Some(w) = self.stack.pop() {
            for i in 0..self.predecessors[w].len() {
                let v = self.predecessors[w][i];
                self.delta[v] += self.sigma[v] / self.sigma[w] * (1.0 + self.delta[w]);
            }
            if w != source {
                out[w] += self.delta[w];
            }
        }
    }
}

/// Harmonic closeness over outgoing distances, normalized by n-1.
fn harmonic_closeness(graph: &InteractionGraph) -> CentralityResult {
    let n = graph.node_count();
    let values: Vec<f64> = if n <= 1 {
        vec![0.0; n]
    } else {
        (0..n)
            .into_par_iter()
            .map(|source| {
                let mut dist = vec![-1i64; n];
                let mut queue = VecDeque::from([source]);
                dist[source] = 0;
                let mut sum = 0.0;
                while let Some(u) = queue.pop_front() {
                    for &(v, _) in graph.out_neighbors(u) {
                        if dist[v] < 0 {
                            dist[v] = dist[u] + 1;
                            sum += 1.0 / dist[v] as f64;
                            queue.push_back(v);
                        }
                    }
                }
                sum / (n as f64 - 1.0)
            })
            .collect()
    };
    result_from_values(
        graph,
        Measure::Closeness,
        values,
        None,
        "harmonic_outgoing",
        false,
    )
}

/// Classic closeness (inverse mean distance to reachable nodes, scaled by
/// the reachable fraction). Offered for connected graphs; the pipeline
/// default is [`Measure::Closeness`]'s harmonic variant.
pub fn classic_closeness(graph: &InteractionGraph) -> CentralityResult {
    let n = graph.node_count();
    let values: Vec<f64> = if n <= 1 {
        vec![0.0; n]
    } else {
        (0..n)
            .into_par_iter()
            .map(|source| {
                let mut dist = vec![-1i64; n];
                let mut queue = VecDeque::from([source]);
                dist[source] = 0;
                let mut total = 0i64;
                let mut reached = 0i64;
                while let Some(u) = queue.pop_front() {
                    for &(v, _) in graph.out_neighbors(u) {
                        if dist[v] < 0 {
                            dist[v] = dist[u] + 1;
                            total += dist[v];
                            reached += 1;
                            queue.push_back(v);
                        }
                    }
                }
                if total == 0 {
                    0.0
                } else {
                    (reached as f64 / total as f64) * (reached as f64 / (n as f64 - 1.0))
                }
            })
            .collect()
    };
    result_from_values(
        graph,
        Measure::Closeness,
        values,
        None,
        "classic_outgoing_wf_improved",
        false,
    )
}

/// Eigenvector centrality by power iteration on the weighted undirected
/// simplification, final vector scaled to unit max entry.
fn eigenvector(graph: &InteractionGraph) -> CentralityResult {
    let n = graph.node_count();
    let adj = graph.undirected_adjacency();

    let mut x = vec![if n > 0 { 1.0 / n as f64 } else { 0.0 }; n];
    let mut converged = n == 0;
    for _ in 0..EIGENVECTOR_MAX_ITERATIONS {
        let mut next = vec![0.0f64; n];
        for (u, list) in adj.iter().enumerate() {
            let mut sum = 0.0;
            for &(v, w) in list {
                sum += w as f64 * x[v];
            }
            next[u] = sum;
        }
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            break;
        }
        for v in next.iter_mut() {
            *v /= norm;
        }
        let diff = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        x = next;
        if diff < EIGENVECTOR_TOLERANCE {
            converged = true;
            break;
        }
    }

    let max = x.iter().copied().fold(0.0f64, f64::max);
    if max > 0.0 {
        for v in x.iter_mut() {
            *v /= max;
        }
    }

    result_from_values(
        graph,
        Measure::Eigenvector,
        x,
        Some(converged),
        "power_iteration_undirected",
        true,
    )
}

/// Rank nodes by descending value; exact ties break by ascending node id.
pub fn rank_nodes(result: &CentralityResult) -> RankedList {
    let mut entries: Vec<(&String, f64)> =
        result.values.iter().map(|(id, v)| (id, *v)).collect();
    entries.sort_by(|(id_a, va), (id_b, vb)| {
        vb.partial_cmp(va)
            .expect("centrality values are finite")
            .then_with(|| id_a.cmp(id_b))
    });
    RankedList {
        measure: result.measure,
        entries: entries.into_iter().map(|(id, _)| id.clone()).collect(),
        tie_break: "value_desc_then_id_asc".to_string(),
    }
}
