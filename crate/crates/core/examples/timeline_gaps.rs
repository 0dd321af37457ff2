//! Bucket a stream into a 15-minute activity timeline and detect the
//! collection interruptions hiding in it.
//!
//! Run with: `cargo run --example timeline_gaps`

use chrono::{Duration, TimeZone, Utc};

use socmed_compare::synth::{generate_dataset, SynthConfig};
use socmed_compare::timeline::{activity_timeline, detect_gaps};

fn main() {
    let start = Utc.with_ymd_and_hms(2019, 3, 23, 0, 0, 0).unwrap();
    // a day-long stream whose collector dropped out twice
    let outage1 = start + Duration::hours(6);
    let outage2 = start + Duration::hours(15) + Duration::minutes(30);
    let dataset = generate_dataset(
        &SynthConfig {
            tweets: 2400,
            start,
            span: Duration::hours(24),
            omit_windows: vec![
                (outage1, outage1 + Duration::minutes(75)),
                (outage2, outage2 + Duration::minutes(75)),
            ],
            ..SynthConfig::default()
        },
        "interrupted",
    );

    let series = activity_timeline(&dataset, Duration::minutes(15)).unwrap();
    println!(
        "{} tweets over {} intervals of 15 minutes",
        series.total(),
        series.counts.len()
    );

    // a crude console sparkline of counts per interval
    print!("activity: ");
    for &count in &series.counts {
        let glyph = match count {
            0 => '_',
            1..=12 => '.',
            13..=20 => 'o',
            _ => 'O',
        };
        print!("{glyph}");
    }
    println!();

    let report = detect_gaps(&series, 8, 0.25).unwrap();
    println!(
        "\n{} gaps (window {}, threshold {}):",
        report.gaps.len(),
        report.window,
        report.threshold
    );
    for gap in &report.gaps {
        let from = series.interval_start(gap.start_interval).unwrap();
        let to = series.interval_start(gap.end_interval + 1).unwrap();
        println!(
            "  intervals {:>2}..{:<2}  {} .. {}  severity {:.3}",
            gap.start_interval,
            gap.end_interval,
            from.format("%H:%M"),
            to.format("%H:%M"),
            gap.severity
        );
    }
}
