//! Weighted directed interaction networks built from a dataset.
//!
//! For each interaction kind, an edge (u, v) exists iff account u interacted
//! with account v that way at least once, and the edge weight is the number
//! of such interactions. Mention edges use the full mention multiset (two
//! mentions of v in one tweet add 2); reply and retweet edges require the
//! target author id to be present in the source record. Self-interactions
//! are dropped, and a node exists only as the endpoint of some edge.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::Dataset;

/// The interaction type an edge encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InteractionKind {
    Mention,
    Reply,
    Retweet,
}

impl InteractionKind {
    pub const ALL: [InteractionKind; 3] = [
        InteractionKind::Mention,
        InteractionKind::Reply,
        InteractionKind::Retweet,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            InteractionKind::Mention => "mention",
            InteractionKind::Reply => "reply",
            InteractionKind::Retweet => "retweet",
        }
    }
}

impl std::str::FromStr for InteractionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mention" | "mentions" => Ok(InteractionKind::Mention),
            "reply" | "replies" => Ok(InteractionKind::Reply),
            "retweet" | "retweets" => Ok(InteractionKind::Retweet),
            other => Err(Error::InvalidConfig(format!(
                "unknown interaction kind '{other}'"
            ))),
        }
    }
}

impl std::fmt::Display for InteractionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A weighted directed simple graph of accounts for one interaction kind.
///
/// Nodes are indexed by position in the sorted id list; adjacency lists are
/// sorted by neighbor index. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteractionGraph {
    kind: InteractionKind,
    nodes: Vec<String>,
    index: HashMap<String, usize>,
    out: Vec<Vec<(usize, u64)>>,
    incoming: Vec<Vec<(usize, u64)>>,
    edge_count: usize,
    total_weight: u64,
}

impl InteractionGraph {
    /// Build a graph from (source, target, weight) triples. Self-loops and
    /// non-positive weights are rejected; repeated pairs accumulate.
    pub fn from_edges<I>(kind: InteractionKind, edges: I) -> Result<InteractionGraph>
    where
        I: IntoIterator<Item = (String, String, u64)>,
    {
        let mut weights: BTreeMap<(String, String), u64> = BTreeMap::new();
        for (source, target, weight) in edges {
            if source == target {
                return Err(Error::GraphImport(format!("self-loop on '{source}'")));
            }
            if weight == 0 {
                return Err(Error::GraphImport(format!(
                    "edge ({source}, {target}) has zero weight"
                )));
            }
            *weights.entry((source, target)).or_insert(0) += weight;
        }
        Ok(Self::from_weight_map(kind, weights))
    }

    fn from_weight_map(
        kind: InteractionKind,
        weights: BTreeMap<(String, String), u64>,
    ) -> InteractionGraph {
        let mut nodes: Vec<String> = weights
            .keys()
            .flat_map(|(s, t)| [s.clone(), t.clone()])
            .collect();
        nodes.sort_unstable();
        nodes.dedup();

        let index: HashMap<String, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();

        let mut out = vec![Vec::new(); nodes.len()];
        let mut incoming = vec![Vec::new(); nodes.len()];
        let mut total_weight = 0;
        let edge_count = weights.len();
        for ((source, target), weight) in &weights {
            let s = index[source];
            let t = index[target];
            out[s].push((t, *weight));
            incoming[t].push((s, *weight));
            total_weight += *weight;
        }
        for list in out.iter_mut().chain(incoming.iter_mut()) {
            list.sort_unstable_by_key(|(n, _)| *n);
        }

        InteractionGraph {
            kind,
            nodes,
            index,
            out,
            incoming,
            edge_count,
            total_weight,
        }
    }

    pub fn kind(&self) -> InteractionKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    /// Node ids in index order (ascending).
    pub fn node_ids(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_id(&self, index: usize) -> &str {
        &self.nodes[index]
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn out_neighbors(&self, node: usize) -> &[(usize, u64)] {
        &self.out[node]
    }

    pub fn in_neighbors(&self, node: usize) -> &[(usize, u64)] {
        &self.incoming[node]
    }

    pub fn has_edge(&self, source: usize, target: usize) -> bool {
        self.out[source]
            .binary_search_by_key(&target, |(n, _)| *n)
            .is_ok()
    }

    pub fn weight(&self, source: &str, target: &str) -> Option<u64> {
        let s = self.node_index(source)?;
        let t = self.node_index(target)?;
        self.out[s]
            .binary_search_by_key(&t, |(n, _)| *n)
            .ok()
            .map(|i| self.out[s][i].1)
    }

    /// All edges as (source, target, weight), ordered by (source, target).
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, u64)> + '_ {
        self.out.iter().enumerate().flat_map(move |(s, list)| {
            list.iter()
                .map(move |(t, w)| (self.nodes[s].as_str(), self.nodes[*t].as_str(), *w))
        })
    }

    /// Undirected view: for each node, the merged neighbor list with weights
    /// summed over both directions. Sorted by neighbor index.
    pub fn undirected_adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); self.nodes.len()];
        for (node, list) in adj.iter_mut().enumerate() {
            let a = &self.out[node];
            let b = &self.incoming[node];
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                match (a.get(i), b.get(j)) {
                    (Some(&(na, wa)), Some(&(nb, wb))) if na == nb => {
                        list.push((na, wa + wb));
                        i += 1;
                        j += 1;
                    }
                    (Some(&(na, wa)), Some(&(nb, _))) if na < nb => {
                        list.push((na, wa));
                        i += 1;
                    }
                    (Some(_), Some(&(nb, wb))) => {
                        list.push((nb, wb));
                        j += 1;
                    }
                    (Some(&(na, wa)), None) => {
                        list.push((na, wa));
                        i += 1;
                    }
                    (None, Some(&(nb, wb))) => {
                        list.push((nb, wb));
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
        }
        adj
    }

    /// Write the weighted edge list as `source,target,weight` CSV.
    pub fn to_edge_csv(&self, writer: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["source", "target", "weight"])?;
        for (source, target, weight) in self.edges() {
            w.write_record([source, target, &weight.to_string()])?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    /// Read a graph from the CSV written by [`Self::to_edge_csv`].
    pub fn from_edge_csv(kind: InteractionKind, reader: impl std::io::Read) -> Result<Self> {
        let mut r = csv::Reader::from_reader(reader);
        let mut edges = Vec::new();
        for record in r.records() {
            let record = record?;
            if record.len() != 3 {
                return Err(Error::GraphImport(format!(
                    "expected 3 columns, got {}",
                    record.len()
                )));
            }
            let weight: u64 = record[2]
                .parse()
                .map_err(|_| Error::GraphImport(format!("bad weight '{}'", &record[2])))?;
            edges.push((record[0].to_string(), record[1].to_string(), weight));
        }
        Self::from_edges(kind, edges)
    }

    /// JSON adjacency form: `{"kind": ..., "edges": {source: {target: weight}}}`.
    pub fn to_adjacency_json(&self) -> GraphJson {
        let mut edges: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
        for (source, target, weight) in self.edges() {
            edges
                .entry(source.to_string())
                .or_default()
                .insert(target.to_string(), weight);
        }
        GraphJson {
            kind: self.kind,
            nodes: self.nodes.clone(),
            edges,
        }
    }

    pub fn from_adjacency_json(json: &GraphJson) -> Result<Self> {
        let mut edges = Vec::new();
        for (source, targets) in &json.edges {
            for (target, weight) in targets {
                edges.push((source.clone(), target.clone(), *weight));
            }
        }
        let graph = Self::from_edges(json.kind, edges)?;
        if graph.nodes != json.nodes {
            return Err(Error::GraphImport(
                "node list does not match edge endpoints".into(),
            ));
        }
        Ok(graph)
    }
}

/// Serializable adjacency form of an [`InteractionGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub kind: InteractionKind,
    pub nodes: Vec<String>,
    pub edges: BTreeMap<String, BTreeMap<String, u64>>,
}

/// Construct the interaction network of the given kind from a dataset.
pub fn build_network(dataset: &Dataset, kind: InteractionKind) -> InteractionGraph {
    let mut weights: BTreeMap<(String, String), u64> = BTreeMap::new();
    let mut add = |source: &str, target: &str| {
        if source != target {
            *weights
                .entry((source.to_string(), target.to_string()))
                .or_insert(0) += 1;
        }
    };

    for tweet in dataset.tweets.values() {
        match kind {
            InteractionKind::Mention => {
                for mention in &tweet.mentions {
                    add(&tweet.author_id, &mention.author_id);
                }
            }
            InteractionKind::Reply => {
                // A reply to an uncollected tweet has no author to point at;
                // such replies are skipped.
                if let Some(target) = &tweet.in_reply_to_author_id {
                    add(&tweet.author_id, target);
                }
            }
            InteractionKind::Retweet => {
                if let Some(target) = &tweet.retweeted_author_id {
                    add(&tweet.author_id, target);
                }
            }
        }
    }

    InteractionGraph::from_weight_map(kind, weights)
}
