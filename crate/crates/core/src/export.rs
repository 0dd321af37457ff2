//! CSV and SVG emission for every report artifact.
//!
//! All writers are deterministic: rows come from already-ordered inputs and
//! floats go through Rust's shortest-roundtrip formatting.

use std::io::Write;

use crate::error::Result;
use crate::longitudinal::LongitudinalSeries;
use crate::louvain::Partition;
use crate::metrics::NetworkStats;
use crate::rankcompare::{NeighborhoodPoint, ScatterPoint};
use crate::stats::{DatasetStats, DeltaReport};
use crate::timeline::TimeSeries;

pub fn timeseries_csv(writer: impl Write, series: &TimeSeries) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["interval_start_iso8601", "count"])?;
    for (i, count) in series.counts.iter().enumerate() {
        let start = series
            .interval_start(i)
            .expect("non-empty series has an origin");
        w.write_record([start.to_rfc3339(), count.to_string()])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// One `field,value` row per statistic, top items flattened to item and
/// count columns.
pub fn dataset_stats_csv(writer: impl Write, stats: &DatasetStats) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["field", "value"])?;
    let rows = [
        ("tweet_count", stats.tweet_count),
        ("retweet_count", stats.retweet_count),
        ("quote_count", stats.quote_count),
        ("reply_count", stats.reply_count),
        ("tweets_with_hashtags", stats.tweets_with_hashtags),
        ("tweets_with_urls", stats.tweets_with_urls),
        ("tweets_with_mentions", stats.tweets_with_mentions),
        ("author_count", stats.author_count),
        ("hashtag_uses", stats.hashtag_uses),
        ("unique_hashtags", stats.unique_hashtags),
        ("url_uses", stats.url_uses),
        ("unique_urls", stats.unique_urls),
    ];
    for (field, value) in rows {
        w.write_record([field, &value.to_string()])?;
    }
    let tops = [
        ("most_prolific_author", &stats.most_prolific_author),
        ("most_retweeted_tweet", &stats.most_retweeted_tweet),
        ("most_replied_to_tweet", &stats.most_replied_to_tweet),
        ("most_mentioned_account", &stats.most_mentioned_account),
        ("most_used_hashtag", &stats.most_used_hashtag),
        ("next_most_used_hashtag", &stats.next_most_used_hashtag),
        ("most_used_url", &stats.most_used_url),
    ];
    for (field, top) in tops {
        let (item, count) = match top {
            Some(t) => (t.item.clone(), t.count.to_string()),
            None => (String::new(), String::new()),
        };
        w.write_record([field.to_string(), item])?;
        w.write_record([format!("{field}_count"), count])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn stats_delta_csv(writer: impl Write, delta: &DeltaReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "field",
        delta.label_a.as_str(),
        delta.label_b.as_str(),
        "diff",
        "ratio",
    ])?;
    for f in &delta.fields {
        w.write_record([
            f.field.clone(),
            f.a.to_string(),
            f.b.to_string(),
            f.diff.to_string(),
            f.ratio.map(|r| r.to_string()).unwrap_or_default(),
        ])?;
    }
    for t in &delta.top_items {
        let item = |x: &Option<crate::stats::TopItem>| {
            x.as_ref().map(|i| i.item.clone()).unwrap_or_default()
        };
        w.write_record([
            t.field.clone(),
            item(&t.a),
            item(&t.b),
            String::new(),
            if t.differs { "differs".into() } else { String::new() },
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Two-column metric table for one network, or a three-column side-by-side
/// pair when `b` is given.
pub fn network_stats_csv(
    writer: impl Write,
    label_a: &str,
    a: &NetworkStats,
    b: Option<(&str, &NetworkStats)>,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let mut header = vec!["metric".to_string(), label_a.to_string()];
    if let Some((label_b, _)) = b {
        header.push(label_b.to_string());
    }
    w.write_record(&header)?;

    let rows = |s: &NetworkStats| -> Vec<(&'static str, String)> {
        vec![
            ("nodes", s.nodes.to_string()),
            ("edges", s.edges.to_string()),
            ("average_degree", s.average_degree.to_string()),
            ("density", s.density.to_string()),
            ("mean_edge_weight", s.mean_edge_weight.to_string()),
            ("components", s.component_count.to_string()),
            ("largest_component", s.largest_component_size.to_string()),
            ("largest_component_diameter", s.largest_component_diameter.to_string()),
            ("clusters", s.cluster_count.to_string()),
            ("largest_cluster", s.largest_cluster_size.to_string()),
            ("reciprocity", s.reciprocity.to_string()),
            ("transitivity", s.transitivity.to_string()),
            ("max_k_core", s.max_k_core.to_string()),
        ]
    };
    let rows_a = rows(a);
    let rows_b = b.map(|(_, s)| rows(s));
    for (i, (metric, value)) in rows_a.into_iter().enumerate() {
        let mut record = vec![metric.to_string(), value];
        if let Some(rb) = &rows_b {
            record.push(rb[i].1.clone());
        }
        w.write_record(&record)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// `node,value,rank` rows in rank order.
pub fn ranking_csv(
    writer: impl Write,
    values: &std::collections::BTreeMap<String, f64>,
    entries: &[String],
) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["node", "value", "rank"])?;
    for (i, node) in entries.iter().enumerate() {
        w.write_record([
            node.clone(),
            values[node].to_string(),
            (i + 1).to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn scatter_csv(writer: impl Write, points: &[ScatterPoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["node", "x", "y", "shade"])?;
    for p in points {
        w.write_record([
            p.node.clone(),
            p.x.to_string(),
            p.y.to_string(),
            p.shade.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn neighborhood_csv(writer: impl Write, points: &[NeighborhoodPoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["node", "x", "y", "shade"])?;
    for p in points {
        w.write_record([
            p.node.clone(),
            p.baseline.to_string(),
            p.score.to_string(),
            p.shade.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// `node,cluster` rows in node order.
pub fn partition_csv(writer: impl Write, partition: &Partition) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["node", "cluster"])?;
    for (node, cluster) in &partition.assignments {
        w.write_record([node.clone(), cluster.to_string()])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Grouped-bar source data: `rank,<label_a>,<label_b>` sizes.
pub fn top_clusters_csv(
    writer: impl Write,
    label_a: &str,
    sizes_a: &[usize],
    label_b: &str,
    sizes_b: &[usize],
) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["rank", label_a, label_b])?;
    for i in 0..sizes_a.len().max(sizes_b.len()) {
        let fmt = |s: &[usize]| s.get(i).map(|v| v.to_string()).unwrap_or_default();
        w.write_record([(i + 1).to_string(), fmt(sizes_a), fmt(sizes_b)])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn longitudinal_csv(writer: impl Write, series: &LongitudinalSeries) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "bucket_index",
        "bucket_start_iso8601",
        "compared",
        "pct_compared",
        "tau",
        "rho",
    ])?;
    for row in &series.rows {
        w.write_record([
            row.bucket_index.to_string(),
            row.bucket_start.to_rfc3339(),
            row.compared.to_string(),
            row.pct_compared.to_string(),
            row.tau.map(|v| v.to_string()).unwrap_or_default(),
            row.rho.map(|v| v.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

const SVG_SIZE: f64 = 1000.0;
const SVG_MARGIN: f64 = 40.0;

/// Grayscale scatter plot in a fixed 1000x1000 viewbox with a reference
/// diagonal. `max_x`/`max_y` scale the axes; darker points are higher
/// ranked (shade closer to 0).
pub fn scatter_svg(
    title: &str,
    points: impl Iterator<Item = (f64, f64, f64)>,
    max_x: f64,
    max_y: f64,
) -> String {
    let span = SVG_SIZE - 2.0 * SVG_MARGIN;
    let scale_x = if max_x > 0.0 { span / max_x } else { 0.0 };
    let scale_y = if max_y > 0.0 { span / max_y } else { 0.0 };

    let mut svg = String::new();
    svg.push_str(&format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {s} {s}">"#,
        s = SVG_SIZE
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<rect width="{s}" height="{s}" fill="white" stroke="black"/>"#,
        s = SVG_SIZE
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r#"<text x="{}" y="24" font-size="20" text-anchor="middle">{}</text>"#,
        SVG_SIZE / 2.0,
        xml_escape(title)
    ));
    svg.push('\n');
    svg.push_str(&format!(
        r##"<line x1="{m}" y1="{b}" x2="{r}" y2="{t}" stroke="#cccccc"/>"##,
        m = SVG_MARGIN,
        b = SVG_SIZE - SVG_MARGIN,
        r = SVG_SIZE - SVG_MARGIN,
        t = SVG_MARGIN,
    ));
    svg.push('\n');
    for (x, y, shade) in points {
        let cx = SVG_MARGIN + x * scale_x;
        let cy = SVG_SIZE - SVG_MARGIN - y * scale_y;
        let gray = (shade.clamp(0.0, 1.0) * 220.0) as u8;
        svg.push_str(&format!(
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3" fill="rgb({gray},{gray},{gray})"/>"#
        ));
        svg.push('\n');
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn scatter_points_svg(title: &str, points: &[ScatterPoint], m: usize) -> String {
    scatter_svg(
        title,
        points
            .iter()
            .map(|p| (p.x as f64, p.y as f64, p.shade)),
        m as f64,
        m as f64,
    )
}

pub fn neighborhood_points_svg(title: &str, points: &[NeighborhoodPoint], m: usize) -> String {
    let max = if m > 0 { (m - 1) as f64 } else { 0.0 };
    scatter_svg(
        title,
        points
            .iter()
            .map(|p| (p.baseline as f64, p.score as f64, p.shade)),
        max,
        max,
    )
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
