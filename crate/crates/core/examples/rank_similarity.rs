//! Compare the centrality rankings of two parallel collections: restrict
//! to the common top k, score with Kendall tau and Spearman rho, and write
//! the scatter and neighborhood-score plots as SVG.
//!
//! Run with: `cargo run --example rank_similarity`

use socmed_compare::centrality::{centrality, rank_nodes, Measure};
use socmed_compare::export;
use socmed_compare::ingest::parse_dataset;
use socmed_compare::network::{build_network, InteractionKind};
use socmed_compare::rankcompare::{
    common_top_k, neighborhood_rank_score, scatter_data, similarity,
};
use socmed_compare::synth::{generate_jsonl, random_subset, SynthConfig};

fn main() {
    let lines = generate_jsonl(&SynthConfig {
        tweets: 3500,
        authors: 200,
        ..SynthConfig::default()
    });
    let a = parse_dataset(&lines, "tool-a");
    let b = parse_dataset(&random_subset(&lines, 0.7, 21), "tool-b");

    let kind = InteractionKind::Mention;
    println!("{:<14} {:>6} {:>8} {:>12} {:>8} {:>12}", "measure", "m", "tau", "tau p", "rho", "rho p");
    for measure in Measure::ALL {
        let ca = centrality(&build_network(&a, kind), measure);
        let cb = centrality(&build_network(&b, kind), measure);
        if !(ca.is_usable() && cb.is_usable()) {
            println!("{measure:<14} power iteration did not converge; skipped");
            continue;
        }
        let common = common_top_k(&rank_nodes(&ca), &rank_nodes(&cb), 1000).unwrap();
        match similarity(&common) {
            Some(score) => println!(
                "{:<14} {:>6} {:>8.4} {:>12.3e} {:>8.4} {:>12.3e}",
                measure.to_string(),
                score.n_compared,
                score.tau,
                score.tau_p_value,
                score.rho,
                score.rho_p_value
            ),
            None => println!("{measure:<14} fewer than two common nodes"),
        }

        if measure == Measure::Degree {
            let points = scatter_data(&common);
            let neighborhood = neighborhood_rank_score(&common);
            let out = std::env::temp_dir().join("socmed-compare-example");
            std::fs::create_dir_all(&out).unwrap();
            std::fs::write(
                out.join("scatter.svg"),
                export::scatter_points_svg("mention/degree", &points, common.len()),
            )
            .unwrap();
            std::fs::write(
                out.join("neighborhood.svg"),
                export::neighborhood_points_svg("mention/degree", &neighborhood, common.len()),
            )
            .unwrap();
            println!("  wrote scatter.svg and neighborhood.svg to {}", out.display());
        }
    }
}
