//! Side-by-side network statistics for two parallel collections, the
//! table that makes collection differences visible at the network level.
//!
//! Run with: `cargo run --example network_stats`

use socmed_compare::ingest::parse_dataset;
use socmed_compare::metrics::network_stats;
use socmed_compare::network::{build_network, InteractionKind};
use socmed_compare::synth::{generate_jsonl, random_subset, SynthConfig};

fn main() {
    let lines = generate_jsonl(&SynthConfig {
        tweets: 3000,
        authors: 160,
        ..SynthConfig::default()
    });
    let a = parse_dataset(&lines, "tool-a");
    let b = parse_dataset(&random_subset(&lines, 0.7, 5), "tool-b");
    let seed = 7;

    for kind in InteractionKind::ALL {
        let sa = network_stats(&build_network(&a, kind), seed);
        let sb = network_stats(&build_network(&b, kind), seed);
        println!("\n=== {kind} ===");
        println!("{:<28} {:>12} {:>12}", "metric", "tool-a", "tool-b");
        let rows: [(&str, String, String); 13] = [
            ("nodes", sa.nodes.to_string(), sb.nodes.to_string()),
            ("edges", sa.edges.to_string(), sb.edges.to_string()),
            (
                "average degree",
                format!("{:.3}", sa.average_degree),
                format!("{:.3}", sb.average_degree),
            ),
            (
                "density",
                format!("{:.5}", sa.density),
                format!("{:.5}", sb.density),
            ),
            (
                "mean edge weight",
                format!("{:.3}", sa.mean_edge_weight),
                format!("{:.3}", sb.mean_edge_weight),
            ),
            (
                "components",
                sa.component_count.to_string(),
                sb.component_count.to_string(),
            ),
            (
                "largest component",
                sa.largest_component_size.to_string(),
                sb.largest_component_size.to_string(),
            ),
            (
                "- diameter",
                sa.largest_component_diameter.to_string(),
                sb.largest_component_diameter.to_string(),
            ),
            (
                "clusters",
                sa.cluster_count.to_string(),
                sb.cluster_count.to_string(),
            ),
            (
                "largest cluster",
                sa.largest_cluster_size.to_string(),
                sb.largest_cluster_size.to_string(),
            ),
            (
                "reciprocity",
                format!("{:.4}", sa.reciprocity),
                format!("{:.4}", sb.reciprocity),
            ),
            (
                "transitivity",
                format!("{:.4}", sa.transitivity),
                format!("{:.4}", sb.transitivity),
            ),
            (
                "maximum k-core",
                sa.max_k_core.to_string(),
                sb.max_k_core.to_string(),
            ),
        ];
        for (name, va, vb) in rows {
            println!("{name:<28} {va:>12} {vb:>12}");
        }
    }
}
