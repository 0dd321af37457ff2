//! Louvain partitions on two parallel networks, restricted to their common
//! nodes and scored with the Adjusted Rand Index.
//!
//! Run with: `cargo run --example cluster_comparison`

use std::collections::BTreeSet;

use socmed_compare::clustercompare::{adjusted_rand_index, restrict_partition, top_cluster_sizes};
use socmed_compare::ingest::parse_dataset;
use socmed_compare::louvain::louvain;
use socmed_compare::network::{build_network, InteractionKind};
use socmed_compare::synth::{generate_jsonl, random_subset, SynthConfig};

fn main() {
    let lines = generate_jsonl(&SynthConfig {
        tweets: 3000,
        authors: 160,
        ..SynthConfig::default()
    });
    let a = parse_dataset(&lines, "tool-a");
    let b = parse_dataset(&random_subset(&lines, 0.7, 13), "tool-b");
    let seed = 42;

    println!("{:<10} {:>7} {:>7} {:>8} {:>8}", "network", "nodes", "edges", "R", "ARI");
    for kind in InteractionKind::ALL {
        let ga = build_network(&a, kind);
        let gb = build_network(&b, kind);
        let pa = louvain(&ga, seed);
        let pb = louvain(&gb, seed);

        let common: BTreeSet<String> = ga
            .node_ids()
            .iter()
            .filter(|id| gb.node_index(id).is_some())
            .cloned()
            .collect();
        let comparison = adjusted_rand_index(
            &restrict_partition(&pa, &common),
            &restrict_partition(&pb, &common),
        )
        .unwrap();

        println!(
            "{:<10} {:>7} {:>7} {:>8.3} {:>8.3}",
            kind.to_string(),
            comparison.common_nodes,
            ga.edge_count(),
            comparison.rand_index.unwrap_or(f64::NAN),
            comparison.ari.unwrap_or(f64::NAN),
        );

        if kind == InteractionKind::Mention {
            println!("  top clusters, tool-a: {:?}", top_cluster_sizes(&pa, 10));
            println!("  top clusters, tool-b: {:?}", top_cluster_sizes(&pb, 10));
        }
    }
}
