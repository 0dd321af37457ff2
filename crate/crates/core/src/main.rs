//! Command-line front end. Every subcommand is a thin wrapper over the
//! library; `compare` runs the whole pipeline, the rest run single stages.
//! Set RUST_LOG to control verbosity.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use socmed_compare::centrality::{centrality, rank_nodes, Measure};
use socmed_compare::clustercompare::{adjusted_rand_index, restrict_partition, top_cluster_sizes};
use socmed_compare::error::Error;
use socmed_compare::export;
use socmed_compare::ingest::{dataset_overlap, Dataset};
use socmed_compare::louvain::louvain_with_resolution;
use socmed_compare::metrics::network_stats;
use socmed_compare::network::{build_network, InteractionKind};
use socmed_compare::rankcompare::{
    common_top_k_ordered, neighborhood_rank_score, scatter_data, similarity, TruncationOrder,
};
use socmed_compare::report::{run_compare, DatasetSource, OutputFormat, RunConfig};
use socmed_compare::stats::{dataset_stats, stats_delta};
use socmed_compare::timeline::{activity_timeline, detect_gaps};

#[derive(Parser)]
#[command(
    name = "socmed-compare",
    version,
    about = "Compare parallel social-media collections and the interaction networks built from them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full comparison pipeline and write a report directory.
    Compare(CompareArgs),
    /// Dataset statistics for one file, or the delta between two.
    Stats {
        file: PathBuf,
        other: Option<PathBuf>,
        /// Emit CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Exclusive-region overlap of two or three datasets.
    Overlap {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        third: Option<PathBuf>,
        /// Include the tweet ids of every region, not just the counts.
        #[arg(long)]
        ids: bool,
    },
    /// Build one interaction network and export it.
    Net {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: InteractionKind,
        /// Print network statistics instead of the edge list.
        #[arg(long)]
        stats: bool,
        /// Edge list format: csv or json (adjacency form).
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: OutputFormat,
        #[arg(long)]
        seed: Option<u64>,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare centrality rankings of two datasets for one network kind.
    Rank {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: InteractionKind,
        #[arg(long, value_parser = parse_measure)]
        measure: Measure,
        #[arg(long, default_value_t = 1000)]
        top_k: usize,
        /// Intersect the full lists before the top-k cut (default is the
        /// reverse).
        #[arg(long)]
        intersect_first: bool,
        /// Write scatter/neighborhood CSV+SVG artifacts into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Louvain cluster comparison (ARI) for one network kind.
    Clusters {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: InteractionKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        resolution: f64,
        /// Cluster the induced common-node subgraphs instead of the full
        /// networks.
        #[arg(long)]
        induced: bool,
    },
    /// Activity timeline (CSV) or collection-gap report for one dataset.
    Timeline {
        file: PathBuf,
        #[arg(long, default_value = "15m", value_parser = parse_duration)]
        interval: i64,
        /// Print the gap report (JSON) instead of the timeline CSV.
        #[arg(long)]
        gaps: bool,
        #[arg(long, default_value_t = 8)]
        gap_window: usize,
        #[arg(long, default_value_t = 0.25)]
        gap_threshold: f64,
    },
}

#[derive(Args)]
struct CompareArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long)]
    third: Option<PathBuf>,
    /// Comma-separated labels; default is each file's stem.
    #[arg(long, value_delimiter = ',')]
    labels: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "mention,reply,retweet", value_parser = parse_kind)]
    kinds: Vec<InteractionKind>,
    #[arg(long, value_delimiter = ',', default_value = "degree,betweenness,closeness,eigenvector", value_parser = parse_measure)]
    measures: Vec<Measure>,
    #[arg(long, default_value_t = 1000)]
    top_k: usize,
    /// Longitudinal bucket width, e.g. 1h, 30m, 900s.
    #[arg(long, default_value = "1h", value_parser = parse_duration)]
    bucket: i64,
    /// Accumulate buckets instead of comparing them independently.
    #[arg(long)]
    cumulative: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "report")]
    out: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "json,csv,svg", value_parser = parse_format)]
    formats: Vec<OutputFormat>,
    /// Intersect the full ranked lists before the top-k cut.
    #[arg(long)]
    intersect_first: bool,
    /// Run Louvain on induced common-node subgraphs instead of the full
    /// networks.
    #[arg(long)]
    induced_clusters: bool,
    /// Report all centrality measures for retweet networks too.
    #[arg(long)]
    allow_retweet_centrality: bool,
    /// Activity-timeline interval for the per-dataset tweet counts.
    #[arg(long, default_value = "15m", value_parser = parse_duration)]
    timeline_interval: i64,
    #[arg(long, default_value_t = 8)]
    gap_window: usize,
    #[arg(long, default_value_t = 0.25)]
    gap_threshold: f64,
}

fn parse_kind(s: &str) -> Result<InteractionKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Accepts `90s`, `15m`, `1h`, `2d`, or a bare number of seconds.
fn parse_duration(s: &str) -> Result<i64, String> {
    let s = s.trim();
    let (number, unit) = match s.find(|c: char| !c.is_ascii_digit()) {
        Some(split) => s.split_at(split),
        None => (s, "s"),
    };
    let value: i64 = number
        .parse()
        .map_err(|_| format!("invalid duration '{s}'"))?;
    let secs = match unit.trim() {
        "s" | "sec" | "secs" => value,
        "m" | "min" | "mins" => value * 60,
        "h" | "hr" | "hour" | "hours" => value * 3600,
        "d" | "day" | "days" => value * 86_400,
        other => return Err(format!("unknown duration unit '{other}'")),
    };
    if secs <= 0 {
        return Err("duration must be positive".to_string());
    }
    Ok(secs)
}

fn stem_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".to_string())
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> socmed_compare::Result<ExitCode> {
    match command {
        Command::Compare(args) => compare(args),
        Command::Stats { file, other, csv } => {
            let a = Dataset::from_path(&file, &stem_label(&file))?;
            let stats_a = dataset_stats(&a);
            match other {
                None if csv => export::dataset_stats_csv(std::io::stdout().lock(), &stats_a)?,
                None => println!("{}", serde_json::to_string_pretty(&stats_a)?),
                Some(other_path) => {
                    let b = Dataset::from_path(&other_path, &stem_label(&other_path))?;
                    let delta = stats_delta(&stats_a, &dataset_stats(&b), &a.label, &b.label);
                    if csv {
                        export::stats_delta_csv(std::io::stdout().lock(), &delta)?;
                    } else {
                        println!("{}", serde_json::to_string_pretty(&delta)?);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Overlap { a, b, third, ids } => {
            let da = Dataset::from_path(&a, &stem_label(&a))?;
            let db = Dataset::from_path(&b, &stem_label(&b))?;
            let dc = third
                .as_ref()
                .map(|p| Dataset::from_path(p, &stem_label(p)))
                .transpose()?;
            let report = dataset_overlap(&da, &db, dc.as_ref());
            if ids {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                let counts: Vec<_> = report
                    .regions
                    .iter()
                    .map(|r| json!({"datasets": r.datasets, "count": r.count}))
                    .collect();
                let summary = json!({"labels": report.labels, "regions": counts});
                println!("{}", serde_json::to_string_pretty(&summary)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Net {
            file,
            kind,
            stats,
            format,
            seed,
            out,
        } => {
            let dataset = Dataset::from_path(&file, &stem_label(&file))?;
            let graph = build_network(&dataset, kind);
            let output = if stats {
                let net = network_stats(&graph, seed.unwrap_or_default());
                if format == OutputFormat::Csv {
                    let mut buf = Vec::new();
                    export::network_stats_csv(&mut buf, &dataset.label, &net, None)?;
                    buf
                } else {
                    let mut s = serde_json::to_string_pretty(&net)?;
                    s.push('\n');
                    s.into_bytes()
                }
            } else {
                match format {
                    OutputFormat::Json => {
                        let mut s = serde_json::to_string_pretty(&graph.to_adjacency_json())?;
                        s.push('\n');
                        s.into_bytes()
                    }
                    _ => {
                        let mut buf = Vec::new();
                        graph.to_edge_csv(&mut buf)?;
                        buf
                    }
                }
            };
            write_out(out.as_deref(), &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank {
            a,
            b,
            kind,
            measure,
            top_k,
            intersect_first,
            out,
        } => {
            let da = Dataset::from_path(&a, &stem_label(&a))?;
            let db = Dataset::from_path(&b, &stem_label(&b))?;
            let ca = centrality(&build_network(&da, kind), measure);
            let cb = centrality(&build_network(&db, kind), measure);
            let order = if intersect_first {
                TruncationOrder::IntersectThenTopK
            } else {
                TruncationOrder::TopKThenIntersect
            };
            let common = common_top_k_ordered(&rank_nodes(&ca), &rank_nodes(&cb), top_k, order)?;
            let usable = ca.is_usable() && cb.is_usable();
            let summary = json!({
                "kind": kind,
                "measure": measure,
                "converged_a": ca.is_usable(),
                "converged_b": cb.is_usable(),
                "n_compared": common.len(),
                "score": if usable { similarity(&common) } else { None },
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);

            if let Some(dir) = out {
                std::fs::create_dir_all(&dir).map_err(|source| Error::Io {
                    path: dir.clone(),
                    source,
                })?;
                let (ranked_a, ranked_b) = (rank_nodes(&ca), rank_nodes(&cb));
                write_file(&dir.join(format!("ranking_{}.csv", da.label)), |buf| {
                    export::ranking_csv(buf, &ca.values, &ranked_a.entries)
                })?;
                write_file(&dir.join(format!("ranking_{}.csv", db.label)), |buf| {
                    export::ranking_csv(buf, &cb.values, &ranked_b.entries)
                })?;
                let points = scatter_data(&common);
                let neighborhood = neighborhood_rank_score(&common);
                let title = format!("{kind}/{measure}: {} vs {}", da.label, db.label);
                write_file(&dir.join("scatter.csv"), |buf| {
                    export::scatter_csv(buf, &points)
                })?;
                write_file(&dir.join("neighborhood.csv"), |buf| {
                    export::neighborhood_csv(buf, &neighborhood)
                })?;
                std::fs::write(
                    dir.join("scatter.svg"),
                    export::scatter_points_svg(&title, &points, common.len()),
                )
                .map_err(|source| Error::Io {
                    path: dir.join("scatter.svg"),
                    source,
                })?;
                std::fs::write(
                    dir.join("neighborhood.svg"),
                    export::neighborhood_points_svg(&title, &neighborhood, common.len()),
                )
                .map_err(|source| Error::Io {
                    path: dir.join("neighborhood.svg"),
                    source,
                })?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Clusters {
            a,
            b,
            kind,
            seed,
            resolution,
            induced,
        } => {
            let da = Dataset::from_path(&a, &stem_label(&a))?;
            let db = Dataset::from_path(&b, &stem_label(&b))?;
            let ga = build_network(&da, kind);
            let gb = build_network(&db, kind);
            let common: BTreeSet<String> = ga
                .node_ids()
                .iter()
                .filter(|id| gb.node_index(id).is_some())
                .cloned()
                .collect();
            let (pa, pb) = if induced {
                let induce = |g: &socmed_compare::InteractionGraph| {
                    let edges = g
                        .edges()
                        .filter(|(s, t, _)| common.contains(*s) && common.contains(*t))
                        .map(|(s, t, w)| (s.to_string(), t.to_string(), w));
                    socmed_compare::InteractionGraph::from_edges(kind, edges)
                        .map(|g| louvain_with_resolution(&g, seed, resolution))
                };
                (induce(&ga)?, induce(&gb)?)
            } else {
                (
                    louvain_with_resolution(&ga, seed, resolution),
                    louvain_with_resolution(&gb, seed, resolution),
                )
            };
            let mut comparison =
                adjusted_rand_index(&restrict_partition(&pa, &common), &restrict_partition(&pb, &common))?;
            comparison.edge_count_a = Some(ga.edge_count());
            let summary = json!({
                "kind": kind,
                "comparison": comparison,
                "top_clusters": {
                    da.label.clone(): top_cluster_sizes(&pa, 20),
                    db.label.clone(): top_cluster_sizes(&pb, 20),
                },
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Timeline {
            file,
            interval,
            gaps,
            gap_window,
            gap_threshold,
        } => {
            let dataset = Dataset::from_path(&file, &stem_label(&file))?;
            let series = activity_timeline(&dataset, chrono::Duration::seconds(interval))?;
            if gaps {
                let report = detect_gaps(&series, gap_window, gap_threshold)?;
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                export::timeseries_csv(std::io::stdout().lock(), &series)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn compare(args: CompareArgs) -> socmed_compare::Result<ExitCode> {
    let mut paths = vec![args.a.clone(), args.b.clone()];
    if let Some(third) = &args.third {
        paths.push(third.clone());
    }
    let datasets: Vec<DatasetSource> = paths
        .iter()
        .enumerate()
        .map(|(i, path)| {
            let label = args
                .labels
                .get(i)
                .cloned()
                .unwrap_or_else(|| stem_label(path));
            DatasetSource::new(path.clone(), label)
        })
        .collect();

    let mut cfg = RunConfig::new(datasets, &args.out);
    cfg.kinds = args.kinds;
    cfg.measures = args.measures;
    cfg.top_k = args.top_k;
    cfg.bucket_secs = args.bucket;
    cfg.cumulative = args.cumulative;
    cfg.seed = args.seed;
    cfg.formats = args.formats.into_iter().collect();
    cfg.truncation_order = if args.intersect_first {
        TruncationOrder::IntersectThenTopK
    } else {
        TruncationOrder::TopKThenIntersect
    };
    cfg.induced_subgraph_clusters = args.induced_clusters;
    cfg.allow_retweet_centrality = args.allow_retweet_centrality;
    cfg.timeline_interval_secs = args.timeline_interval;
    cfg.gap_window = args.gap_window;
    cfg.gap_threshold = args.gap_threshold;

    let report = run_compare(&cfg)?;
    let failed = report.manifest.failed_stages();
    log::info!(
        "wrote {} artifacts to {}",
        report.manifest.artifacts.len(),
        report.out_dir.display()
    );
    eprintln!(
        "report written to {} ({} stages, {} failed)",
        report.out_dir.display(),
        report.manifest.stages.len(),
        failed.len()
    );
    if failed.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for stage in failed {
            eprintln!(
                "failed stage {}: {}",
                stage.name,
                stage.detail.as_deref().unwrap_or("unknown")
            );
        }
        Ok(ExitCode::from(1))
    }
}

fn write_out(path: Option<&Path>, bytes: &[u8]) -> socmed_compare::Result<()> {
    use std::io::Write;
    match path {
        Some(path) => std::fs::write(path, bytes).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            std::io::stdout()
                .lock()
                .write_all(bytes)
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn write_file(
    path: &Path,
    write: impl FnOnce(&mut Vec<u8>) -> socmed_compare::Result<()>,
) -> socmed_compare::Result<()> {
    let mut buf = Vec::new();
    write(&mut buf)?;
    std::fs::write(path, buf).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
