//! Split the tweet-id union of two or three parallel collections into
//! exclusive regions, the numbers behind a Venn diagram.
//!
//! Run with: `cargo run --example dataset_overlap`

use socmed_compare::ingest::{dataset_overlap, parse_dataset};
use socmed_compare::synth::{generate_jsonl, random_subset, SynthConfig};

fn main() {
    let lines = generate_jsonl(&SynthConfig {
        tweets: 2000,
        ..SynthConfig::default()
    });
    // three collectors watching the same stream with different loss
    let a = parse_dataset(&random_subset(&lines, 0.97, 1), "collector-a");
    let b = parse_dataset(&random_subset(&lines, 0.93, 2), "collector-b");
    let c = parse_dataset(&random_subset(&lines, 0.80, 3), "collector-c");

    println!("two-way overlap:");
    let two = dataset_overlap(&a, &b, None);
    for region in &two.regions {
        println!("  {:<30} {:>5}", region.datasets.join(" & "), region.count);
    }
    println!("  union: {}", two.union_size());

    println!("\nthree-way overlap:");
    let three = dataset_overlap(&a, &b, Some(&c));
    for region in &three.regions {
        println!("  {:<42} {:>5}", region.datasets.join(" & "), region.count);
    }
    println!("  union: {}", three.union_size());
}
