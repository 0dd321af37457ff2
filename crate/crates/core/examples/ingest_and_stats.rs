//! Ingest two parallel synthetic streams and compare their dataset
//! statistics field by field.
//!
//! Run with: `cargo run --example ingest_and_stats`

use socmed_compare::ingest::parse_dataset;
use socmed_compare::stats::{dataset_stats, stats_delta};
use socmed_compare::synth::{generate_jsonl, random_subset, SynthConfig};

fn main() {
    // one "true" stream and a lossy parallel collection of it
    let lines = generate_jsonl(&SynthConfig {
        tweets: 4000,
        authors: 250,
        ..SynthConfig::default()
    });
    let collector_a = parse_dataset(&lines, "tool-a");
    let collector_b = parse_dataset(&random_subset(&lines, 0.72, 99), "tool-b");

    for d in [&collector_a, &collector_b] {
        let s = d.summary();
        println!(
            "{}: {} tweets, {} duplicates, {} malformed, span {:?}",
            s.label,
            s.tweet_count,
            s.duplicate_count,
            s.malformed_count,
            s.time_span.map(|(lo, hi)| (lo.to_rfc3339(), hi.to_rfc3339())),
        );
    }

    let sa = dataset_stats(&collector_a);
    let sb = dataset_stats(&collector_b);
    let delta = stats_delta(&sa, &sb, "tool-a", "tool-b");

    println!("\n{:<24} {:>10} {:>10} {:>8} {:>8}", "field", "tool-a", "tool-b", "diff", "ratio");
    for f in &delta.fields {
        println!(
            "{:<24} {:>10} {:>10} {:>8} {:>8}",
            f.field,
            f.a,
            f.b,
            f.diff,
            f.ratio.map(|r| format!("{r:.3}")).unwrap_or_default()
        );
    }

    println!("\nhighest-count items:");
    for t in &delta.top_items {
        let show = |x: &Option<socmed_compare::stats::TopItem>| {
            x.as_ref()
                .map(|i| format!("{} ({})", i.item, i.count))
                .unwrap_or_else(|| "-".into())
        };
        println!(
            "{:<24} {:<22} {:<22} {}",
            t.field,
            show(&t.a),
            show(&t.b),
            if t.differs { "<- differs" } else { "" }
        );
    }
}
