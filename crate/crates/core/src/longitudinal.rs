//! Time-bucketed and cumulative cross-dataset ranking comparisons.
//!
//! Both datasets share one bucket grid anchored at the floor of the earlier
//! first timestamp, so bucket i always covers the same wall-clock window on
//! both sides. Each row reports how many ranked nodes were actually
//! compared, that count as a fraction of the smaller list, and tau/rho when
//! they are defined (two or more common nodes, converged centralities).

use chrono::{DateTime, Duration, Utc};
use serde::{Deserialize, Serialize};

use crate::centrality::{centrality, rank_nodes, Measure};
use crate::error::{Error, Result};
use crate::ingest::Dataset;
use crate::network::{build_network, InteractionKind};
use crate::rankcompare::{common_top_k_ordered, similarity, TruncationOrder};
use crate::timeline::floor_to_interval;

#[derive(Debug, Clone)]
pub struct LongitudinalOptions {
    pub kind: InteractionKind,
    pub measure: Measure,
    pub bucket_width: Duration,
    pub cumulative: bool,
    pub top_k: usize,
    /// Retweet-network comparisons are limited to degree centrality unless
    /// this override is set.
    pub permit_retweet_centrality: bool,
    pub truncation_order: TruncationOrder,
}

impl LongitudinalOptions {
    pub fn new(kind: InteractionKind, measure: Measure) -> LongitudinalOptions {
        LongitudinalOptions {
            kind,
            measure,
            bucket_width: Duration::hours(1),
            cumulative: false,
            top_k: 1000,
            permit_retweet_centrality: false,
            truncation_order: TruncationOrder::TopKThenIntersect,
        }
    }
}

/// One bucket (or prefix, in cumulative mode) of the comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LongitudinalRow {
    pub bucket_index: usize,
    pub bucket_start: DateTime<Utc>,
    /// Number of ranked nodes common to both sides after the top-k cut.
    pub compared: usize,
    /// `compared` as a fraction of the smaller of the two truncated lists.
    pub pct_compared: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LongitudinalSeries {
    pub kind: InteractionKind,
    pub measure: Measure,
    pub bucket_secs: i64,
    pub cumulative: bool,
    pub top_k: usize,
    pub rows: Vec<LongitudinalRow>,
}

/// Compare two datasets bucket by bucket (or prefix by prefix).
pub fn longitudinal_compare(
    a: &Dataset,
    b: &Dataset,
    opts: &LongitudinalOptions,
) -> Result<LongitudinalSeries> {
    let width_secs = opts.bucket_width.num_seconds();
    if width_secs <= 0 {
        return Err(Error::InvalidConfig("bucket width must be positive".into()));
    }
    if opts.top_k == 0 {
        return Err(Error::InvalidConfig("top-k must be at least 1".into()));
    }
    if opts.kind == InteractionKind::Retweet
        && opts.measure != Measure::Degree
        && !opts.permit_retweet_centrality
    {
        return Err(Error::RetweetMeasureNotPermitted {
            measure: opts.measure,
        });
    }
    let (Some((a_min, a_max)), Some((b_min, b_max))) = (a.time_span(), b.time_span()) else {
        return Err(Error::InvalidConfig(
            "longitudinal comparison needs two non-empty datasets".into(),
        ));
    };

    let origin = floor_to_interval(a_min.min(b_min), width_secs);
    let end = a_max.max(b_max);
    let buckets = ((end.timestamp() - origin.timestamp()) / width_secs) as usize + 1;

    let mut rows = Vec::with_capacity(buckets);
    for index in 0..buckets {
        let bucket_start = origin + Duration::seconds(width_secs * index as i64);
        let window_start = if opts.cumulative { origin } else { bucket_start };
        let window_end = bucket_start + Duration::seconds(width_secs);

        let slice_a = slice_dataset(a, window_start, window_end);
        let slice_b = slice_dataset(b, window_start, window_end);
        rows.push(compare_window(&slice_a, &slice_b, opts, index, bucket_start)?);
    }

    Ok(LongitudinalSeries {
        kind: opts.kind,
        measure: opts.measure,
        bucket_secs: width_secs,
        cumulative: opts.cumulative,
        top_k: opts.top_k,
        rows,
    })
}

fn slice_dataset(dataset: &Dataset, from: DateTime<Utc>, to: DateTime<Utc>) -> Dataset {
    Dataset {
        label: dataset.label.clone(),
        tweets: dataset
            .tweets
            .iter()
            .filter(|(_, t)| t.created_at >= from && t.created_at < to)
            .map(|(id, t)| (id.clone(), t.clone()))
            .collect(),
        duplicate_count: 0,
        conflict_count: 0,
        malformed_count: 0,
    }
}

fn compare_window(
    a: &Dataset,
    b: &Dataset,
    opts: &LongitudinalOptions,
    bucket_index: usize,
    bucket_start: DateTime<Utc>,
) -> Result<LongitudinalRow> {
    let graph_a = build_network(a, opts.kind);
    let graph_b = build_network(b, opts.kind);
    let cent_a = centrality(&graph_a, opts.measure);
    let cent_b = centrality(&graph_b, opts.measure);
    let usable = cent_a.is_usable() && cent_b.is_usable();

    let ranked_a = rank_nodes(&cent_a);
    let ranked_b = rank_nodes(&cent_b);
    let len_a = ranked_a.len().min(opts.top_k);
    let len_b = ranked_b.len().min(opts.top_k);
    let common = common_top_k_ordered(&ranked_a, &ranked_b, opts.top_k, opts.truncation_order)?;

    let compared = common.len();
    let smaller = len_a.min(len_b);
    let pct_compared = if smaller == 0 {
        0.0
    } else {
        compared as f64 / smaller as f64
    };

    let score = if usable { similarity(&common) } else { None };
    Ok(LongitudinalRow {
        bucket_index,
        bucket_start,
        compared,
        pct_compared,
        tau: score.as_ref().map(|s| s.tau),
        rho: score.as_ref().map(|s| s.rho),
    })
}
