//! Hour-by-hour and cumulative ranking similarity between two parallel
//! collections of the same stream.
//!
//! Run with: `cargo run --example longitudinal`

use socmed_compare::centrality::Measure;
use socmed_compare::ingest::parse_dataset;
use socmed_compare::longitudinal::{longitudinal_compare, LongitudinalOptions};
use socmed_compare::network::InteractionKind;
use socmed_compare::synth::{generate_jsonl, random_subset, SynthConfig};

fn main() {
    let lines = generate_jsonl(&SynthConfig {
        tweets: 6000,
        authors: 250,
        span: chrono::Duration::hours(12),
        ..SynthConfig::default()
    });
    let a = parse_dataset(&lines, "tool-a");
    let b = parse_dataset(&random_subset(&lines, 0.7, 33), "tool-b");

    let opts = LongitudinalOptions::new(InteractionKind::Mention, Measure::Degree);
    for cumulative in [false, true] {
        let series = longitudinal_compare(
            &a,
            &b,
            &LongitudinalOptions {
                cumulative,
                ..opts.clone()
            },
        )
        .unwrap();
        println!(
            "\nmention/degree, {} buckets of {}s{}:",
            series.rows.len(),
            series.bucket_secs,
            if cumulative { " (cumulative)" } else { "" }
        );
        println!("{:>3} {:>16} {:>9} {:>7} {:>8} {:>8}", "i", "bucket start", "compared", "pct", "tau", "rho");
        for row in &series.rows {
            println!(
                "{:>3} {:>16} {:>9} {:>7.2} {:>8} {:>8}",
                row.bucket_index,
                row.bucket_start.format("%m-%d %H:%M"),
                row.compared,
                row.pct_compared,
                row.tau.map(|t| format!("{t:.4}")).unwrap_or_else(|| "-".into()),
                row.rho.map(|r| format!("{r:.4}")).unwrap_or_else(|| "-".into()),
            );
        }
    }
}
