//! End-to-end comparison runs: ingest, per-dataset artifacts, pairwise
//! network / centrality / cluster / longitudinal comparisons, and a
//! machine-readable manifest.
//!
//! Stages form a dependency chain per dataset and pair; a failing stage is
//! recorded in the manifest and independent stages keep running. All
//! randomness is driven by the single configured seed, so a rerun with the
//! same config produces byte-identical artifacts (the manifest differs only
//! in its `generated_at` timestamp).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use chrono::Duration;
use serde::{Deserialize, Serialize};

use crate::centrality::{
    centrality, rank_nodes, CentralityResult, Measure, RankedList, EIGENVECTOR_MAX_ITERATIONS,
    EIGENVECTOR_TOLERANCE,
};
use crate::clustercompare::{adjusted_rand_index, restrict_partition, top_cluster_sizes};
use crate::error::{Error, Result};
use crate::export;
use crate::ingest::{dataset_overlap, Dataset};
use crate::longitudinal::{longitudinal_compare, LongitudinalOptions};
use crate::louvain::{louvain_with_resolution, Partition};
use crate::metrics::network_stats_with_resolution;
use crate::network::{build_network, InteractionGraph, InteractionKind};
use crate::rankcompare::{
    common_top_k_ordered, neighborhood_rank_score, scatter_data, similarity, SimilarityScore,
    TruncationOrder,
};
use crate::stats::{dataset_stats, stats_delta};
use crate::timeline::{activity_timeline, detect_gaps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(Error::InvalidConfig(format!(
                "unknown output format '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetSource {
    pub path: PathBuf,
    pub label: String,
}

impl DatasetSource {
    pub fn new(path: impl Into<PathBuf>, label: impl Into<String>) -> DatasetSource {
        DatasetSource {
            path: path.into(),
            label: label.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub datasets: Vec<DatasetSource>,
    pub kinds: Vec<InteractionKind>,
    pub measures: Vec<Measure>,
    pub top_k: usize,
    pub bucket_secs: i64,
    pub cumulative: bool,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub formats: BTreeSet<OutputFormat>,
    pub truncation_order: TruncationOrder,
    /// Cluster pipeline order: Louvain on each full network then restrict
    /// to common nodes (default), or Louvain on the induced common-node
    /// subgraphs.
    pub induced_subgraph_clusters: bool,
    pub allow_retweet_centrality: bool,
    pub timeline_interval_secs: i64,
    pub gap_window: usize,
    pub gap_threshold: f64,
    pub louvain_resolution: f64,
}

impl RunConfig {
    pub fn new(datasets: Vec<DatasetSource>, out_dir: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            datasets,
            kinds: InteractionKind::ALL.to_vec(),
            measures: Measure::ALL.to_vec(),
            top_k: 1000,
            bucket_secs: 3600,
            cumulative: false,
            seed: 0,
            out_dir: out_dir.into(),
            formats: [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Svg]
                .into_iter()
                .collect(),
            truncation_order: TruncationOrder::TopKThenIntersect,
            induced_subgraph_clusters: false,
            allow_retweet_centrality: false,
            timeline_interval_secs: 900,
            gap_window: 8,
            gap_threshold: 0.25,
            louvain_resolution: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.datasets.len() < 2 {
            return Err(Error::InvalidConfig(
                "at least two datasets are required".into(),
            ));
        }
        let labels: BTreeSet<&str> = self.datasets.iter().map(|d| d.label.as_str()).collect();
        if labels.len() != self.datasets.len() {
            return Err(Error::InvalidConfig("dataset labels must be unique".into()));
        }
        if self.top_k == 0 {
            return Err(Error::InvalidConfig("top-k must be at least 1".into()));
        }
        if self.bucket_secs <= 0 || self.timeline_interval_secs <= 0 {
            return Err(Error::InvalidConfig("durations must be positive".into()));
        }
        if self.kinds.is_empty() || self.measures.is_empty() {
            return Err(Error::InvalidConfig(
                "at least one kind and one measure are required".into(),
            ));
        }
        Ok(())
    }

    /// Measures actually reported for a kind: retweet networks are limited
    /// to degree centrality unless the override flag is set.
    pub fn measures_for(&self, kind: InteractionKind) -> Vec<Measure> {
        self.measures
            .iter()
            .copied()
            .filter(|m| {
                kind != InteractionKind::Retweet
                    || self.allow_retweet_centrality
                    || *m == Measure::Degree
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StageState {
    Ok,
    Error,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageStatus {
    pub name: String,
    pub status: StageState,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

/// Every knob that affects reproducibility, echoed into the manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: u64,
    pub rank_tie_break: String,
    pub degree_variant: String,
    pub betweenness_variant: String,
    pub closeness_variant: String,
    pub eigenvector_variant: String,
    pub eigenvector_tolerance: f64,
    pub eigenvector_max_iterations: usize,
    pub truncation_order: String,
    pub cluster_pipeline: String,
    pub louvain_resolution: f64,
    pub retweet_centrality_policy: String,
    pub timeline_interval_secs: i64,
    pub gap_window: usize,
    pub gap_threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub datasets: Vec<DatasetSource>,
    pub kinds: Vec<InteractionKind>,
    pub measures: Vec<Measure>,
    pub top_k: usize,
    pub bucket_secs: i64,
    pub cumulative: bool,
    pub formats: Vec<OutputFormat>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: ToolInfo,
    pub generated_at: String,
    pub config: ConfigEcho,
    pub provenance: Provenance,
    pub stages: Vec<StageStatus>,
    pub artifacts: Vec<String>,
}

impl Manifest {
    pub fn failed_stages(&self) -> Vec<&StageStatus> {
        self.stages
            .iter()
            .filter(|s| s.status == StageState::Error)
            .collect()
    }
}

/// Result handle for a finished run.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub out_dir: PathBuf,
    pub manifest: Manifest,
}

/// How the similarity of one (pair, kind, measure) combination is reported:
/// convergence flags plus the scores, absent when undefined.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityReport {
    pub kind: InteractionKind,
    pub measure: Measure,
    pub converged_a: bool,
    pub converged_b: bool,
    pub n_compared: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub score: Option<SimilarityScore>,
}

struct ArtifactSink<'a> {
    root: &'a Path,
    formats: &'a BTreeSet<OutputFormat>,
    written: Vec<String>,
}

impl<'a> ArtifactSink<'a> {
    fn enabled(&self, format: OutputFormat) -> bool {
        self.formats.contains(&format)
    }

    fn write_bytes(&mut self, rel: &str, bytes: &[u8]) -> Result<()> {
        let path = self.root.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|source| Error::Io {
                path: parent.to_path_buf(),
                source,
            })?;
        }
        fs::write(&path, bytes).map_err(|source| Error::Io { path, source })?;
        self.written.push(rel.to_string());
        Ok(())
    }

    fn json<T: Serialize>(&mut self, rel: &str, value: &T) -> Result<()> {
        if !self.enabled(OutputFormat::Json) {
            return Ok(());
        }
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write_bytes(rel, text.as_bytes())
    }

    fn csv(&mut self, rel: &str, write: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<()> {
        if !self.enabled(OutputFormat::Csv) {
            return Ok(());
        }
        let mut buf = Vec::new();
        write(&mut buf)?;
        self.write_bytes(rel, &buf)
    }

    fn svg(&mut self, rel: &str, content: &str) -> Result<()> {
        if !self.enabled(OutputFormat::Svg) {
            return Ok(());
        }
        self.write_bytes(rel, content.as_bytes())
    }
}

struct Recorder {
    stages: Vec<StageStatus>,
    artifacts: BTreeSet<String>,
}

impl Recorder {
    fn run(
        &mut self,
        name: &str,
        sink: &mut ArtifactSink<'_>,
        stage: impl FnOnce(&mut ArtifactSink<'_>) -> Result<()>,
    ) {
        let result = stage(sink);
        self.artifacts.extend(sink.written.drain(..));
        self.stages.push(match result {
            Ok(()) => StageStatus {
                name: name.to_string(),
                status: StageState::Ok,
                detail: None,
            },
            Err(e) => StageStatus {
                name: name.to_string(),
                status: StageState::Error,
                detail: Some(e.to_string()),
            },
        });
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.stages.push(StageStatus {
            name: name.to_string(),
            status: StageState::Skipped,
            detail: Some(reason.to_string()),
        });
    }
}

/// Labels are used in artifact paths; anything unfriendly to a filesystem
/// is mapped to '_'.
fn path_label(label: &str) -> String {
    label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// Run the full comparison pipeline and write the artifact directory.
pub fn run_compare(cfg: &RunConfig) -> Result<ComparisonReport> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.out_dir).map_err(|source| Error::Io {
        path: cfg.out_dir.clone(),
        source,
    })?;

    let mut recorder = Recorder {
        stages: Vec::new(),
        artifacts: BTreeSet::new(),
    };
    let mut sink = ArtifactSink {
        root: &cfg.out_dir,
        formats: &cfg.formats,
        written: Vec::new(),
    };

    // ingest
    let mut datasets: Vec<Option<Dataset>> = Vec::new();
    for source in &cfg.datasets {
        let label = path_label(&source.label);
        let mut loaded = None;
        recorder.run(&format!("ingest:{}", source.label), &mut sink, |sink| {
            let dataset = Dataset::from_path(&source.path, &source.label)?;
            sink.json(
                &format!("datasets/{label}/summary.json"),
                &dataset.summary(),
            )?;
            loaded = Some(dataset);
            Ok(())
        });
        datasets.push(loaded);
    }

    // per-dataset statistics and timelines
    for (source, dataset) in cfg.datasets.iter().zip(&datasets) {
        let label = path_label(&source.label);
        let Some(dataset) = dataset else {
            recorder.skip(
                &format!("stats:{}", source.label),
                "input dataset unavailable",
            );
            recorder.skip(
                &format!("timeline:{}", source.label),
                "input dataset unavailable",
            );
            continue;
        };
        recorder.run(&format!("stats:{}", source.label), &mut sink, |sink| {
            let stats = dataset_stats(dataset);
            sink.json(&format!("datasets/{label}/stats.json"), &stats)?;
            sink.csv(&format!("datasets/{label}/stats.csv"), |buf| {
                export::dataset_stats_csv(buf, &stats)
            })
        });
        recorder.run(&format!("timeline:{}", source.label), &mut sink, |sink| {
            let series =
                activity_timeline(dataset, Duration::seconds(cfg.timeline_interval_secs))?;
            sink.csv(&format!("datasets/{label}/timeline.csv"), |buf| {
                export::timeseries_csv(buf, &series)
            })?;
            let gaps = detect_gaps(&series, cfg.gap_window, cfg.gap_threshold)?;
            sink.json(&format!("datasets/{label}/gaps.json"), &gaps)
        });
    }

    // overlap across all datasets; only meaningful when every configured
    // dataset actually loaded
    if datasets.iter().all(Option::is_some) {
        let loaded: Vec<&Dataset> = datasets.iter().map(|d| d.as_ref().unwrap()).collect();
        recorder.run("overlap", &mut sink, |sink| {
            sink.json(
                "overlap.json",
                &dataset_overlap(loaded[0], loaded[1], loaded.get(2).copied()),
            )
        });
    } else {
        recorder.skip("overlap", "input dataset unavailable");
    }

    // networks, cached per (dataset, kind)
    let mut graphs: HashMap<(usize, InteractionKind), InteractionGraph> = HashMap::new();
    for (i, (source, dataset)) in cfg.datasets.iter().zip(&datasets).enumerate() {
        for kind in &cfg.kinds {
            let name = format!("network:{}:{kind}", source.label);
            match dataset {
                Some(dataset) => {
                    graphs.insert((i, *kind), build_network(dataset, *kind));
                    recorder.stages.push(StageStatus {
                        name,
                        status: StageState::Ok,
                        detail: None,
                    });
                }
                None => recorder.skip(&name, "input dataset unavailable"),
            }
        }
    }

    // centralities, cached per (dataset, kind, measure)
    let mut rankings: HashMap<(usize, InteractionKind, Measure), (CentralityResult, RankedList)> =
        HashMap::new();
    for (i, source) in cfg.datasets.iter().enumerate() {
        for kind in &cfg.kinds {
            for measure in cfg.measures_for(*kind) {
                let name = format!("centrality:{}:{kind}:{measure}", source.label);
                match graphs.get(&(i, *kind)) {
                    Some(graph) => {
                        let result = centrality(graph, measure);
                        let ranked = rank_nodes(&result);
                        rankings.insert((i, *kind, measure), (result, ranked));
                        recorder.stages.push(StageStatus {
                            name,
                            status: StageState::Ok,
                            detail: None,
                        });
                    }
                    None => recorder.skip(&name, "network unavailable"),
                }
            }
        }
    }

    // pairwise comparisons
    for i in 0..cfg.datasets.len() {
        for j in (i + 1)..cfg.datasets.len() {
            let label_a = &cfg.datasets[i].label;
            let label_b = &cfg.datasets[j].label;
            let pair = format!("{}__{}", path_label(label_a), path_label(label_b));
            let pair_name = format!("{label_a}__{label_b}");

            let (Some(da), Some(db)) = (&datasets[i], &datasets[j]) else {
                recorder.skip(&format!("pair:{pair_name}"), "input dataset unavailable");
                continue;
            };

            recorder.run(&format!("delta:{pair_name}"), &mut sink, |sink| {
                let delta = stats_delta(&dataset_stats(da), &dataset_stats(db), label_a, label_b);
                sink.json(&format!("pairs/{pair}/stats_delta.json"), &delta)?;
                sink.csv(&format!("pairs/{pair}/stats_delta.csv"), |buf| {
                    export::stats_delta_csv(buf, &delta)
                })
            });

            for kind in &cfg.kinds {
                let kind_dir = format!("pairs/{pair}/{kind}");
                let (Some(ga), Some(gb)) = (graphs.get(&(i, *kind)), graphs.get(&(j, *kind)))
                else {
                    recorder.skip(
                        &format!("network_stats:{pair_name}:{kind}"),
                        "network unavailable",
                    );
                    continue;
                };

                recorder.run(
                    &format!("network_stats:{pair_name}:{kind}"),
                    &mut sink,
                    |sink| {
                        let stats_a =
                            network_stats_with_resolution(ga, cfg.seed, cfg.louvain_resolution);
                        let stats_b =
                            network_stats_with_resolution(gb, cfg.seed, cfg.louvain_resolution);
                        let pair_stats = BTreeMap::from([
                            (label_a.clone(), stats_a.clone()),
                            (label_b.clone(), stats_b.clone()),
                        ]);
                        sink.json(&format!("{kind_dir}/network_stats.json"), &pair_stats)?;
                        sink.csv(&format!("{kind_dir}/network_stats.csv"), |buf| {
                            export::network_stats_csv(
                                buf,
                                label_a,
                                &stats_a,
                                Some((label_b.as_str(), &stats_b)),
                            )
                        })
                    },
                );

                recorder.run(&format!("clusters:{pair_name}:{kind}"), &mut sink, |sink| {
                    let common: BTreeSet<String> = ga
                        .node_ids()
                        .iter()
                        .filter(|id| gb.node_index(id).is_some())
                        .cloned()
                        .collect();

                    let (pa, pb): (Partition, Partition) = if cfg.induced_subgraph_clusters {
                        let induce = |g: &InteractionGraph| -> Result<Partition> {
                            let edges = g
                                .edges()
                                .filter(|(s, t, _)| common.contains(*s) && common.contains(*t))
                                .map(|(s, t, w)| (s.to_string(), t.to_string(), w));
                            let induced = InteractionGraph::from_edges(*kind, edges)?;
                            Ok(louvain_with_resolution(
                                &induced,
                                cfg.seed,
                                cfg.louvain_resolution,
                            ))
                        };
                        (induce(ga)?, induce(gb)?)
                    } else {
                        (
                            louvain_with_resolution(ga, cfg.seed, cfg.louvain_resolution),
                            louvain_with_resolution(gb, cfg.seed, cfg.louvain_resolution),
                        )
                    };

                    sink.csv(&format!("{kind_dir}/partition_{}.csv", path_label(label_a)), |buf| {
                        export::partition_csv(buf, &pa)
                    })?;
                    sink.csv(&format!("{kind_dir}/partition_{}.csv", path_label(label_b)), |buf| {
                        export::partition_csv(buf, &pb)
                    })?;
                    sink.csv(&format!("{kind_dir}/top_clusters.csv"), |buf| {
                        export::top_clusters_csv(
                            buf,
                            label_a,
                            &top_cluster_sizes(&pa, 20),
                            label_b,
                            &top_cluster_sizes(&pb, 20),
                        )
                    })?;

                    let ra = restrict_partition(&pa, &common);
                    let rb = restrict_partition(&pb, &common);
                    let mut comparison = adjusted_rand_index(&ra, &rb)?;
                    comparison.edge_count_a = Some(ga.edge_count());
                    sink.json(&format!("{kind_dir}/clusters.json"), &comparison)
                });

                for measure in cfg.measures_for(*kind) {
                    let measure_dir = format!("{kind_dir}/{measure}");
                    let (Some((ca, ranked_a)), Some((cb, ranked_b))) = (
                        rankings.get(&(i, *kind, measure)),
                        rankings.get(&(j, *kind, measure)),
                    ) else {
                        recorder.skip(
                            &format!("rank:{pair_name}:{kind}:{measure}"),
                            "centrality unavailable",
                        );
                        continue;
                    };

                    recorder.run(
                        &format!("rank:{pair_name}:{kind}:{measure}"),
                        &mut sink,
                        |sink| {
                            let usable = ca.is_usable() && cb.is_usable();
                            let common = common_top_k_ordered(
                                ranked_a,
                                ranked_b,
                                cfg.top_k,
                                cfg.truncation_order,
                            )?;
                            let report = SimilarityReport {
                                kind: *kind,
                                measure,
                                converged_a: ca.is_usable(),
                                converged_b: cb.is_usable(),
                                n_compared: common.len(),
                                score: if usable { similarity(&common) } else { None },
                            };
                            sink.json(&format!("{measure_dir}/similarity.json"), &report)?;
                            if usable {
                                let points = scatter_data(&common);
                                sink.csv(&format!("{measure_dir}/scatter.csv"), |buf| {
                                    export::scatter_csv(buf, &points)
                                })?;
                                let title =
                                    format!("{kind}/{measure}: {label_a} vs {label_b}");
                                sink.svg(
                                    &format!("{measure_dir}/scatter.svg"),
                                    &export::scatter_points_svg(&title, &points, common.len()),
                                )?;
                                let neighborhood = neighborhood_rank_score(&common);
                                sink.csv(&format!("{measure_dir}/neighborhood.csv"), |buf| {
                                    export::neighborhood_csv(buf, &neighborhood)
                                })?;
                                sink.svg(
                                    &format!("{measure_dir}/neighborhood.svg"),
                                    &export::neighborhood_points_svg(
                                        &format!("{title} (neighborhood score)"),
                                        &neighborhood,
                                        common.len(),
                                    ),
                                )?;
                            }
                            Ok(())
                        },
                    );

                    recorder.run(
                        &format!("longitudinal:{pair_name}:{kind}:{measure}"),
                        &mut sink,
                        |sink| {
                            let opts = LongitudinalOptions {
                                kind: *kind,
                                measure,
                                bucket_width: Duration::seconds(cfg.bucket_secs),
                                cumulative: cfg.cumulative,
                                top_k: cfg.top_k,
                                permit_retweet_centrality: cfg.allow_retweet_centrality,
                                truncation_order: cfg.truncation_order,
                            };
                            let series = longitudinal_compare(da, db, &opts)?;
                            sink.json(&format!("{measure_dir}/longitudinal.json"), &series)?;
                            sink.csv(&format!("{measure_dir}/longitudinal.csv"), |buf| {
                                export::longitudinal_csv(buf, &series)
                            })
                        },
                    );
                }
            }
        }
    }

    // manifest goes last so it can list everything
    let manifest = Manifest {
        tool: ToolInfo {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        generated_at: chrono::Utc::now().to_rfc3339(),
        config: ConfigEcho {
            datasets: cfg.datasets.clone(),
            kinds: cfg.kinds.clone(),
            measures: cfg.measures.clone(),
            top_k: cfg.top_k,
            bucket_secs: cfg.bucket_secs,
            cumulative: cfg.cumulative,
            formats: cfg.formats.iter().copied().collect(),
        },
        provenance: Provenance {
            seed: cfg.seed,
            rank_tie_break: "value_desc_then_id_asc".to_string(),
            degree_variant: "total_degree_over_n_minus_1".to_string(),
            betweenness_variant: "directed_unweighted_brandes".to_string(),
            closeness_variant: "harmonic_outgoing".to_string(),
            eigenvector_variant: "power_iteration_undirected".to_string(),
            eigenvector_tolerance: EIGENVECTOR_TOLERANCE,
            eigenvector_max_iterations: EIGENVECTOR_MAX_ITERATIONS,
            truncation_order: cfg.truncation_order.as_str().to_string(),
            cluster_pipeline: if cfg.induced_subgraph_clusters {
                "louvain_on_induced_common_subgraphs".to_string()
            } else {
                "louvain_on_full_networks_then_restrict".to_string()
            },
            louvain_resolution: cfg.louvain_resolution,
            retweet_centrality_policy: if cfg.allow_retweet_centrality {
                "all_measures".to_string()
            } else {
                "degree_only".to_string()
            },
            timeline_interval_secs: cfg.timeline_interval_secs,
            gap_window: cfg.gap_window,
            gap_threshold: cfg.gap_threshold,
        },
        stages: recorder.stages,
        artifacts: recorder.artifacts.into_iter().collect(),
    };

    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    let manifest_path = cfg.out_dir.join("manifest.json");
    fs::write(&manifest_path, text).map_err(|source| Error::Io {
        path: manifest_path,
        source,
    })?;

    Ok(ComparisonReport {
        out_dir: cfg.out_dir.clone(),
        manifest,
    })
}
