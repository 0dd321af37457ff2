//! Activity timelines and collection-gap detection.
//!
//! A [`TimeSeries`] is a zero-filled, contiguous count-per-interval view of
//! a dataset, aligned to the epoch grid of its interval width (so 15-minute
//! intervals start at :00/:15/:30/:45). Gap detection flags maximal runs of
//! intervals that fall far below a rolling-median baseline of their
//! neighbors, making visually-spotted collection interruptions reproducible.

use chrono::{DateTime, Duration, TimeZone, Utc};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::Dataset;

/// Tweet counts per fixed-width interval, contiguous from `origin`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeSeries {
    /// Interval width in seconds.
    pub interval_secs: i64,
    /// Start of interval 0; `None` iff the series is empty.
    pub origin: Option<DateTime<Utc>>,
    pub counts: Vec<u64>,
}

impl TimeSeries {
    pub fn interval_start(&self, index: usize) -> Option<DateTime<Utc>> {
        self.origin
            .map(|o| o + Duration::seconds(self.interval_secs * index as i64))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// A run of intervals whose counts fall below the local baseline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gap {
    pub start_interval: usize,
    pub end_interval: usize,
    /// Observed count as a fraction of the expected (baseline) count;
    /// always below the detection threshold.
    pub severity: f64,
}

/// Gap-detection output. `series_too_short` flags inputs shorter than the
/// rolling window, for which no verdict is possible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub gaps: Vec<Gap>,
    pub window: usize,
    pub threshold: f64,
    pub series_too_short: bool,
}

/// Floor a timestamp to the epoch-aligned grid of `width_secs`.
pub fn floor_to_interval(t: DateTime<Utc>, width_secs: i64) -> DateTime<Utc> {
    let ts = t.timestamp();
    Utc.timestamp_opt(ts - ts.rem_euclid(width_secs), 0)
        .single()
        .expect("floored timestamp in range")
}

/// Bucket a dataset's tweets into contiguous zero-filled interval counts.
pub fn activity_timeline(dataset: &Dataset, interval: Duration) -> Result<TimeSeries> {
    let width_secs = interval.num_seconds();
    if width_secs <= 0 {
        return Err(Error::InvalidConfig(format!(
            "interval width must be positive, got {width_secs}s"
        )));
    }

    let Some((min_ts, max_ts)) = dataset.time_span() else {
        return Ok(TimeSeries {
            interval_secs: width_secs,
            origin: None,
            counts: Vec::new(),
        });
    };

    let origin = floor_to_interval(min_ts, width_secs);
    let n = ((max_ts.timestamp() - origin.timestamp()) / width_secs) as usize + 1;
    let mut counts = vec![0u64; n];
    for tweet in dataset.tweets.values() {
        let idx = (tweet.created_at.timestamp() - origin.timestamp()) / width_secs;
        counts[idx as usize] += 1;
    }

    Ok(TimeSeries {
        interval_secs: width_secs,
        origin: Some(origin),
        counts,
    })
}

/// Report maximal runs of intervals whose count drops below
/// `threshold` x (rolling median of up to `window` neighboring intervals,
/// the candidate run itself excluded). Runs are sorted by start.
pub fn detect_gaps(series: &TimeSeries, window: usize, threshold: f64) -> Result<GapReport> {
    if window < 1 {
        return Err(Error::InvalidConfig("gap window must be >= 1".into()));
    }
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "gap threshold must be in (0, 1), got {threshold}"
        )));
    }

    let counts = &series.counts;
    let n = counts.len();
    if n < window {
        return Ok(GapReport {
            gaps: Vec::new(),
            window,
            threshold,
            series_too_short: true,
        });
    }

    let mut gaps = Vec::new();
    let mut i = 0;
    while i < n {
        let baseline = neighbor_median(counts, i, i, window);
        if (counts[i] as f64) < threshold * baseline {
            // Grow the run while each next interval is still below the
            // baseline of the run extended to include it.
            let start = i;
            let mut end = i;
            while end + 1 < n {
                let b = neighbor_median(counts, start, end + 1, window);
                if (counts[end + 1] as f64) < threshold * b {
                    end += 1;
                } else {
                    break;
                }
            }
            let scan_resume = end + 1;
            // Confirm every member against the final baseline, shrinking
            // from the ends if the baseline moved under it.
            let mut s = start;
            let mut e = end;
            loop {
                if s > e {
                    break;
                }
                let b = neighbor_median(counts, s, e, window);
                if b <= 0.0 {
                    break;
                }
                let head_ok = (counts[s] as f64) < threshold * b;
                let tail_ok = (counts[e] as f64) < threshold * b;
                if head_ok && tail_ok {
                    let observed: u64 = counts[s..=e].iter().sum();
                    let expected = b * (e - s + 1) as f64;
                    gaps.push(Gap {
                        start_interval: s,
                        end_interval: e,
                        severity: observed as f64 / expected,
                    });
                    break;
                }
                if !head_ok {
                    s += 1;
                }
                if !tail_ok && e > 0 {
                    e -= 1;
                }
            }
            i = scan_resume;
        } else {
            i += 1;
        }
    }

    Ok(GapReport {
        gaps,
        window,
        threshold,
        series_too_short: false,
    })
}

/// Median of up to `window` interval counts nearest to the run `[s, e]`,
/// excluding the run itself. Values are taken alternately from both sides,
/// nearest first, spilling to the other side at the series boundary.
fn neighbor_median(counts: &[u64], s: usize, e: usize, window: usize) -> f64 {
    let n = counts.len();
    let mut values: Vec<u64> = Vec::with_capacity(window);
    let mut d = 1usize;
    while values.len() < window {
        let left = s.checked_sub(d);
        let right = if e + d < n { Some(e + d) } else { None };
        if left.is_none() && right.is_none() {
            break;
        }
        if let Some(l) = left {
            values.push(counts[l]);
        }
        if values.len() < window {
            if let Some(r) = right {
                values.push(counts[r]);
            }
        }
        d += 1;
    }
    if values.is_empty() {
        return 0.0;
    }
    values.sort_unstable();
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid] as f64
    } else {
        (values[mid - 1] + values[mid]) as f64 / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::parse_dataset;

    fn dataset_at_minutes(minutes: &[i64]) -> Dataset {
        let lines: Vec<String> = minutes
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let ms = (1_541_700_000 + m * 60) * 1000;
                format!(
                    r#"{{"id_str":"{i}","user":{{"id_str":"a","screen_name":"ua"}},"timestamp_ms":{ms},"text":"x"}}"#
                )
            })
            .collect();
        parse_dataset(&lines, "t")
    }

    fn series(counts: &[u64]) -> TimeSeries {
        TimeSeries {
            interval_secs: 900,
            origin: Some(Utc.timestamp_opt(1_541_700_000, 0).unwrap()),
            counts: counts.to_vec(),
        }
    }

    #[test]
    fn single_window_bucket() {
        let d = dataset_at_minutes(&[0, 3, 7, 14]);
        let ts = activity_timeline(&d, Duration::minutes(15)).unwrap();
        assert_eq!(ts.counts, vec![4]);
        assert_eq!(ts.total(), d.len() as u64);
    }

    #[test]
    fn zero_filled_intermediate_buckets() {
        let d = dataset_at_minutes(&[0, 10, 40]);
        let ts = activity_timeline(&d, Duration::minutes(15)).unwrap();
        assert_eq!(ts.counts, vec![2, 0, 1]);
    }

    #[test]
    fn uniform_minutely_traffic_buckets_evenly() {
        let minutes: Vec<i64> = (0..60).collect();
        let d = dataset_at_minutes(&minutes);
        let ts = activity_timeline(&d, Duration::minutes(15)).unwrap();
        assert_eq!(ts.counts, vec![15, 15, 15, 15]);
    }

    #[test]
    fn empty_dataset_gives_empty_series() {
        let d = parse_dataset::<&str>(&[], "t");
        let ts = activity_timeline(&d, Duration::minutes(15)).unwrap();
        assert!(ts.counts.is_empty());
        assert!(ts.origin.is_none());
    }

    #[test]
    fn nonpositive_interval_is_rejected() {
        let d = dataset_at_minutes(&[0]);
        assert!(activity_timeline(&d, Duration::seconds(0)).is_err());
    }

    #[test]
    fn constant_series_has_no_gaps() {
        let r = detect_gaps(&series(&[10, 10, 10, 10]), 4, 0.9).unwrap();
        assert!(r.gaps.is_empty());
        assert!(!r.series_too_short);
    }

    #[test]
    fn single_zero_run_is_one_gap() {
        let r = detect_gaps(&series(&[10, 10, 0, 0, 10, 10]), 4, 0.25).unwrap();
        assert_eq!(r.gaps.len(), 1);
        let gap = &r.gaps[0];
        assert_eq!((gap.start_interval, gap.end_interval), (2, 3));
        // rolling median of the four neighbors is exactly 10
        assert_eq!(gap.severity, 0.0);
    }

    #[test]
    fn two_separated_zero_runs_are_two_gaps() {
        let mut counts = vec![10u64; 30];
        counts[5..8].fill(0);
        counts[20..22].fill(0);
        let r = detect_gaps(&series(&counts), 8, 0.25).unwrap();
        assert_eq!(r.gaps.len(), 2);
        assert_eq!(
            (r.gaps[0].start_interval, r.gaps[0].end_interval),
            (5, 7)
        );
        assert_eq!(
            (r.gaps[1].start_interval, r.gaps[1].end_interval),
            (20, 21)
        );
    }

    #[test]
    fn zero_run_longer_than_window_is_still_one_gap() {
        let mut counts = vec![10u64; 40];
        counts[14..26].fill(0);
        let r = detect_gaps(&series(&counts), 8, 0.25).unwrap();
        assert_eq!(r.gaps.len(), 1);
        assert_eq!(
            (r.gaps[0].start_interval, r.gaps[0].end_interval),
            (14, 25)
        );
    }

    #[test]
    fn short_series_sets_diagnostic_flag() {
        let r = detect_gaps(&series(&[5, 5]), 8, 0.25).unwrap();
        assert!(r.gaps.is_empty());
        assert!(r.series_too_short);
    }

    #[test]
    fn severity_is_ratio_of_observed_to_expected() {
        let r = detect_gaps(&series(&[20, 20, 20, 2, 20, 20, 20]), 4, 0.5).unwrap();
        assert_eq!(r.gaps.len(), 1);
        assert!((r.gaps[0].severity - 0.1).abs() < 1e-12);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(detect_gaps(&series(&[1, 2, 3]), 0, 0.25).is_err());
        assert!(detect_gaps(&series(&[1, 2, 3]), 4, 0.0).is_err());
        assert!(detect_gaps(&series(&[1, 2, 3]), 4, 1.0).is_err());
    }
}
