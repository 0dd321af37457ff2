//! Compute all four centrality measures on a mention network and print the
//! top of each deterministic ranking.
//!
//! Run with: `cargo run --example centrality_rankings`

use socmed_compare::centrality::{centrality, rank_nodes, Measure};
use socmed_compare::network::{build_network, InteractionKind};
use socmed_compare::synth::{generate_dataset, SynthConfig};

fn main() {
    let dataset = generate_dataset(
        &SynthConfig {
            tweets: 2500,
            authors: 120,
            ..SynthConfig::default()
        },
        "demo",
    );
    let graph = build_network(&dataset, InteractionKind::Mention);
    println!(
        "mention network: {} nodes, {} edges",
        graph.node_count(),
        graph.edge_count()
    );

    for measure in Measure::ALL {
        let result = centrality(&graph, measure);
        let ranked = rank_nodes(&result);
        print!("\n{measure} ({})", result.variant);
        if let Some(converged) = result.converged {
            print!(" converged={converged}");
        }
        println!();
        for (rank, node) in ranked.entries.iter().take(8).enumerate() {
            println!("  {:>2}. {:<10} {:.6}", rank + 1, node, result.values[node]);
        }
    }
}
