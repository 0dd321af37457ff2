//! Build the mention, reply and retweet networks from one dataset and
//! export an edge list.
//!
//! Run with: `cargo run --example build_networks`

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
    println!("dataset: {} tweets", dataset.len());

    for kind in InteractionKind::ALL {
        let g = build_network(&dataset, kind);
        println!(
            "\n{kind} network: {} nodes, {} edges, total weight {}",
            g.node_count(),
            g.edge_count(),
            g.total_weight()
        );
        println!("heaviest edges:");
        let mut edges: Vec<_> = g.edges().collect();
        edges.sort_by_key(|&(s, t, w)| (std::cmp::Reverse(w), s.to_string(), t.to_string()));
        for (source, target, weight) in edges.into_iter().take(5) {
            println!("  {source} -> {target}  (weight {weight})");
        }
    }

    // round-trip the mention network through its CSV form
    let mention = build_network(&dataset, InteractionKind::Mention);
    let mut csv = Vec::new();
    mention.to_edge_csv(&mut csv).unwrap();
    let reloaded = socmed_compare::network::InteractionGraph::from_edge_csv(
        InteractionKind::Mention,
        csv.as_slice(),
    )
    .unwrap();
    assert_eq!(mention, reloaded);
    println!(
        "\nmention edge list round-trips through CSV ({} bytes)",
        csv.len()
    );
}
