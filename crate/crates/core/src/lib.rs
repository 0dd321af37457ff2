//! Compare social-media datasets collected in parallel and quantify how
//! collection differences propagate into the social networks built from them.
//!
//! The pipeline: ingest line-delimited JSON tweet files into normalized
//! [`Dataset`]s, build weighted directed interaction networks (mention,
//! reply, retweet), compute network statistics and node centralities, and
//! compare the two sides via rank correlation (Kendall tau, Spearman rho),
//! Louvain cluster agreement (Adjusted Rand Index), and longitudinal
//! bucketed similarity series.
//!
//! Every analysis is deterministic given a seed; see the `examples/`
//! directory for one runnable program per capability.

pub mod centrality;
pub mod clustercompare;
pub mod error;
pub mod export;
pub mod ingest;
pub mod longitudinal;
pub mod louvain;
pub mod metrics;
pub mod network;
pub mod rankcompare;
pub mod report;
pub mod stats;
pub mod synth;
pub mod timeline;

pub use centrality::{centrality, rank_nodes, CentralityResult, Measure, RankedList};
pub use clustercompare::{
    adjusted_rand_index, restrict_partition, top_cluster_sizes, PartitionComparison,
};
pub use error::{Error, Result};
pub use ingest::{dataset_overlap, parse_dataset, Dataset, Mention, OverlapReport, Tweet};
pub use longitudinal::{longitudinal_compare, LongitudinalOptions, LongitudinalSeries};
pub use louvain::{louvain, modularity, Partition};
pub use metrics::{network_stats, NetworkStats};
pub use network::{build_network, InteractionGraph, InteractionKind};
pub use rankcompare::{
    common_top_k, common_top_k_ordered, kendall_tau, neighborhood_rank_score, scatter_data,
    similarity, spearman_rho, CommonRanking, SimilarityScore, TruncationOrder,
};
pub use report::{run_compare, ComparisonReport, DatasetSource, OutputFormat, RunConfig};
pub use stats::{dataset_stats, stats_delta, DatasetStats, DeltaReport};
pub use timeline::{activity_timeline, detect_gaps, Gap, GapReport, TimeSeries};
