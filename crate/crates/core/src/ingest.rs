//! Ingest line-delimited JSON tweet files into normalized [`Dataset`]s.
//!
//! One JSON object per line. The parser accepts the platform's native tweet
//! schema (`id_str`, `user.screen_name`, nested `retweeted_status`, entity
//! arrays) as well as the normalized schema this library writes back out, so
//! a serialized dataset can be re-ingested losslessly. Unknown fields are
//! ignored; unparseable lines are counted, never fatal.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hasher;
use std::io::BufRead;
use std::path::Path;

use chrono::{DateTime, TimeZone, Utc};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// One account mentioned in a tweet. Repeated mentions of the same account
/// within a tweet are kept as repeated entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mention {
    pub author_id: String,
    pub screen_name: String,
}

/// A normalized post record.
///
/// Reply / retweet / quote classification is derived solely from the
/// presence of the corresponding id fields. Hashtags are stored lowercased;
/// the mention list preserves repetition within one tweet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tweet {
    pub id: String,
    pub author_id: String,
    pub author_screen_name: String,
    pub created_at: DateTime<Utc>,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_reply_to_tweet_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub in_reply_to_author_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retweeted_tweet_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retweeted_author_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quoted_tweet_id: Option<String>,
    #[serde(default)]
    pub hashtags: Vec<String>,
    #[serde(default)]
    pub urls: Vec<String>,
    #[serde(default)]
    pub mentions: Vec<Mention>,
}

impl Tweet {
    pub fn is_retweet(&self) -> bool {
        self.retweeted_tweet_id.is_some()
    }

    pub fn is_reply(&self) -> bool {
        self.in_reply_to_tweet_id.is_some()
    }

    pub fn is_quote(&self) -> bool {
        self.quoted_tweet_id.is_some()
    }
}

/// A deduplicated, id-keyed collection of tweets plus ingest diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub label: String,
    /// Tweets keyed by id; iteration order is the id order.
    pub tweets: BTreeMap<String, Tweet>,
    /// Input lines whose id had already been seen (first occurrence kept).
    pub duplicate_count: u64,
    /// Duplicate-id lines that were not byte-identical to the first
    /// occurrence. A nonzero value signals an upstream collection problem.
    pub conflict_count: u64,
    /// Lines that could not be parsed into a [`Tweet`].
    pub malformed_count: u64,
}

/// Compact per-dataset summary: the ingest diagnostics without the tweets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub label: String,
    pub tweet_count: usize,
    pub duplicate_count: u64,
    pub conflict_count: u64,
    pub malformed_count: u64,
    /// Replies whose target author is unknown (the replied-to tweet was not
    /// collected); these create no reply-network edge.
    pub replies_without_author: u64,
    pub time_span: Option<(DateTime<Utc>, DateTime<Utc>)>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.tweets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tweets.is_empty()
    }

    /// (min, max) of `created_at` over all tweets; `None` when empty.
    pub fn time_span(&self) -> Option<(DateTime<Utc>, DateTime<Utc>)> {
        let mut span: Option<(DateTime<Utc>, DateTime<Utc>)> = None;
        for t in self.tweets.values() {
            span = Some(match span {
                None => (t.created_at, t.created_at),
                Some((lo, hi)) => (lo.min(t.created_at), hi.max(t.created_at)),
            });
        }
        span
    }

    pub fn summary(&self) -> DatasetSummary {
        DatasetSummary {
            label: self.label.clone(),
            tweet_count: self.tweets.len(),
            duplicate_count: self.duplicate_count,
            conflict_count: self.conflict_count,
            malformed_count: self.malformed_count,
            replies_without_author: self
                .tweets
                .values()
                .filter(|t| t.in_reply_to_tweet_id.is_some() && t.in_reply_to_author_id.is_none())
                .count() as u64,
            time_span: self.time_span(),
        }
    }

    /// Read a `.jsonl` file. I/O failures are errors; bad lines are counted.
    pub fn from_path(path: impl AsRef<Path>, label: &str) -> Result<Dataset> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Dataset::from_reader(std::io::BufReader::new(file), label).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn from_reader(reader: impl BufRead, label: &str) -> std::io::Result<Dataset> {
        let lines: Vec<String> = reader.lines().collect::<std::io::Result<_>>()?;
        Ok(parse_dataset(&lines, label))
    }

    /// Serialize every tweet back to one JSON object per line, in id order.
    /// Re-ingesting the result reproduces the tweet set exactly.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for tweet in self.tweets.values() {
            out.push_str(&serde_json::to_string(tweet).expect("tweet serializes"));
            out.push('\n');
        }
        out
    }
}

enum LineOutcome {
    Parsed(Box<Tweet>, u64),
    Malformed,
    Blank,
}

/// Parse JSON lines into a [`Dataset`].
///
/// Lines are parsed in parallel; the merge keeps the first occurrence of
/// each id and counts the rest as duplicates (byte-unequal repeats also as
/// conflicts). Empty input yields an empty dataset.
pub fn parse_dataset<S>(lines: &[S], label: &str) -> Dataset
where
    S: AsRef<str> + Sync,
{
    let outcomes: Vec<LineOutcome> = lines
        .par_iter()
        .map(|line| {
            let line = line.as_ref();
            if line.trim().is_empty() {
                return LineOutcome::Blank;
            }
            match parse_line(line) {
                Some(tweet) => {
                    let mut hasher = DefaultHasher::new();
                    hasher.write(line.as_bytes());
                    LineOutcome::Parsed(Box::new(tweet), hasher.finish())
                }
                None => LineOutcome::Malformed,
            }
        })
        .collect();

    let mut tweets = BTreeMap::new();
    let mut first_line_hash: HashMap<String, u64> = HashMap::new();
    let mut duplicate_count = 0;
    let mut conflict_count = 0;
    let mut malformed_count = 0;

    for outcome in outcomes {
        match outcome {
            LineOutcome::Blank => {}
            LineOutcome::Malformed => malformed_count += 1,
            LineOutcome::Parsed(tweet, line_hash) => {
                if let Some(&first_hash) = first_line_hash.get(&tweet.id) {
                    duplicate_count += 1;
                    if first_hash != line_hash {
                        conflict_count += 1;
                    }
                } else {
                    first_line_hash.insert(tweet.id.clone(), line_hash);
                    tweets.insert(tweet.id.clone(), *tweet);
                }
            }
        }
    }

    Dataset {
        label: label.to_string(),
        tweets,
        duplicate_count,
        conflict_count,
        malformed_count,
    }
}

fn parse_line(line: &str) -> Option<Tweet> {
    let value: Value = serde_json::from_str(line).ok()?;
    let obj = value.as_object()?;

    let id = string_or_number(obj.get("id_str").or_else(|| obj.get("id"))?)?;
    if id.is_empty() {
        return None;
    }

    // Normalized schema carries author_id/author_screen_name at the top
    // level; the platform schema nests them under `user`.
    let (author_id, author_screen_name) = if let Some(author_id) = str_field(obj, "author_id") {
        let name = str_field(obj, "author_screen_name").unwrap_or_default();
        (author_id, name)
    } else {
        let user = obj.get("user")?.as_object()?;
        let author_id = string_or_number(user.get("id_str").or_else(|| user.get("id"))?)?;
        let name = str_field(user, "screen_name").unwrap_or_default();
        (author_id, name)
    };
    if author_id.is_empty() {
        return None;
    }

    let created_at = parse_timestamp(obj)?;

    let text = str_field(obj, "text")
        .or_else(|| str_field(obj, "full_text"))
        .or_else(|| {
            obj.get("extended_tweet")
                .and_then(Value::as_object)
                .and_then(|ext| str_field(ext, "full_text"))
        })
        .unwrap_or_default();

    let in_reply_to_tweet_id = str_field(obj, "in_reply_to_tweet_id")
        .or_else(|| opt_string_or_number(obj.get("in_reply_to_status_id_str")))
        .or_else(|| opt_string_or_number(obj.get("in_reply_to_status_id")));
    let in_reply_to_author_id = str_field(obj, "in_reply_to_author_id")
        .or_else(|| opt_string_or_number(obj.get("in_reply_to_user_id_str")))
        .or_else(|| opt_string_or_number(obj.get("in_reply_to_user_id")));

    let (mut retweeted_tweet_id, mut retweeted_author_id) = (
        str_field(obj, "retweeted_tweet_id"),
        str_field(obj, "retweeted_author_id"),
    );
    if retweeted_tweet_id.is_none() {
        if let Some(rt) = obj.get("retweeted_status").and_then(Value::as_object) {
            retweeted_tweet_id = opt_string_or_number(rt.get("id_str").or_else(|| rt.get("id")));
            retweeted_author_id = rt
                .get("user")
                .and_then(Value::as_object)
                .and_then(|u| opt_string_or_number(u.get("id_str").or_else(|| u.get("id"))));
        }
    }

    let quoted_tweet_id = str_field(obj, "quoted_tweet_id")
        .or_else(|| opt_string_or_number(obj.get("quoted_status_id_str")))
        .or_else(|| {
            obj.get("quoted_status")
                .and_then(Value::as_object)
                .and_then(|q| opt_string_or_number(q.get("id_str").or_else(|| q.get("id"))))
        });

    // Prefer extended_tweet entities when present: on the platform they
    // supersede the truncated top-level ones.
    let entities = obj
        .get("extended_tweet")
        .and_then(Value::as_object)
        .and_then(|ext| ext.get("entities"))
        .or_else(|| obj.get("entities"))
        .and_then(Value::as_object);

    let mut hashtags = Vec::new();
    let mut urls = Vec::new();
    let mut mentions = Vec::new();

    if let Some(tags) = obj.get("hashtags").and_then(Value::as_array) {
        hashtags.extend(
            tags.iter()
                .filter_map(Value::as_str)
                .map(|t| t.to_lowercase()),
        );
    } else if let Some(tags) = entities.and_then(|e| e.get("hashtags")).and_then(Value::as_array) {
        hashtags.extend(
            tags.iter()
                .filter_map(|t| t.get("text").and_then(Value::as_str))
                .map(|t| t.to_lowercase()),
        );
    }

    if let Some(list) = obj.get("urls").and_then(Value::as_array) {
        urls.extend(list.iter().filter_map(Value::as_str).map(str::to_string));
    } else if let Some(list) = entities.and_then(|e| e.get("urls")).and_then(Value::as_array) {
        urls.extend(list.iter().filter_map(|u| {
            u.get("expanded_url")
                .or_else(|| u.get("url"))
                .and_then(Value::as_str)
                .map(str::to_string)
        }));
    }

    if let Some(list) = obj.get("mentions").and_then(Value::as_array) {
        for m in list {
            if let Some(author_id) = m.get("author_id").and_then(Value::as_str) {
                mentions.push(Mention {
                    author_id: author_id.to_string(),
                    screen_name: m
                        .get("screen_name")
                        .and_then(Value::as_str)
                        .unwrap_or_default()
                        .to_string(),
                });
            }
        }
    } else if let Some(list) = entities
        .and_then(|e| e.get("user_mentions"))
        .and_then(Value::as_array)
    {
        for m in list {
            if let Some(author_id) = opt_string_or_number(m.get("id_str").or_else(|| m.get("id")))
            {
                mentions.push(Mention {
                    author_id,
                    screen_name: m
                        .get("screen_name")
                        .and_then(Value::as_str)
                        .unwrap_or_default()
                        .to_string(),
                });
            }
        }
    }

    Some(Tweet {
        id,
        author_id,
        author_screen_name,
        created_at,
        text,
        in_reply_to_tweet_id,
        in_reply_to_author_id,
        retweeted_tweet_id,
        retweeted_author_id,
        quoted_tweet_id,
        hashtags,
        urls,
        mentions,
    })
}

/// Accept the platform's legacy `created_at` string, RFC 3339, or epoch
/// milliseconds (`created_at` as a number, or the `timestamp_ms` field).
/// Everything is normalized to UTC at seconds precision.
fn parse_timestamp(obj: &serde_json::Map<String, Value>) -> Option<DateTime<Utc>> {
    if let Some(raw) = obj.get("created_at") {
        match raw {
            Value::String(s) => {
                if let Ok(dt) = DateTime::parse_from_str(s, "%a %b %d %H:%M:%S %z %Y") {
                    return truncate_to_seconds(dt.with_timezone(&Utc));
                }
                if let Ok(dt) = DateTime::parse_from_rfc3339(s) {
                    return truncate_to_seconds(dt.with_timezone(&Utc));
                }
                if let Ok(ms) = s.parse::<i64>() {
                    return from_epoch_millis(ms);
                }
                return None;
            }
            Value::Number(n) => return from_epoch_millis(n.as_i64()?),
            _ => return None,
        }
    }
    match obj.get("timestamp_ms")? {
        Value::String(s) => from_epoch_millis(s.parse::<i64>().ok()?),
        Value::Number(n) => from_epoch_millis(n.as_i64()?),
        _ => None,
    }
}

fn from_epoch_millis(ms: i64) -> Option<DateTime<Utc>> {
    Utc.timestamp_opt(ms.div_euclid(1000), 0).single()
}

fn truncate_to_seconds(dt: DateTime<Utc>) -> Option<DateTime<Utc>> {
    Utc.timestamp_opt(dt.timestamp(), 0).single()
}

fn str_field(obj: &serde_json::Map<String, Value>, key: &str) -> Option<String> {
    obj.get(key).and_then(Value::as_str).map(str::to_string)
}

fn string_or_number(value: &Value) -> Option<String> {
    match value {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

fn opt_string_or_number(value: Option<&Value>) -> Option<String> {
    match value {
        None | Some(Value::Null) => None,
        Some(v) => string_or_number(v),
    }
}

/// One exclusive region of the id-overlap partition: the ids present in
/// exactly the datasets listed in `datasets`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapRegion {
    pub datasets: Vec<String>,
    pub count: usize,
    pub ids: BTreeSet<String>,
}

/// Partition of the union of tweet ids into exclusive regions (3 regions
/// for two datasets, 7 for three). Region counts sum to the union size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub labels: Vec<String>,
    pub regions: Vec<OverlapRegion>,
}

impl OverlapReport {
    /// Look up the exclusive region for exactly this set of labels.
    pub fn region(&self, labels: &[&str]) -> Option<&OverlapRegion> {
        let want: BTreeSet<&str> = labels.iter().copied().collect();
        self.regions
            .iter()
            .find(|r| r.datasets.iter().map(String::as_str).collect::<BTreeSet<_>>() == want)
    }

    pub fn union_size(&self) -> usize {
        self.regions.iter().map(|r| r.count).sum()
    }
}

/// Split the union of tweet ids into exclusive membership regions.
pub fn dataset_overlap(a: &Dataset, b: &Dataset, c: Option<&Dataset>) -> OverlapReport {
    let mut sets: Vec<(&str, &BTreeMap<String, Tweet>)> =
        vec![(&a.label, &a.tweets), (&b.label, &b.tweets)];
    if let Some(c) = c {
        sets.push((&c.label, &c.tweets));
    }
    let n = sets.len();

    let mut membership: BTreeMap<&str, u32> = BTreeMap::new();
    for (i, (_, tweets)) in sets.iter().enumerate() {
        for id in tweets.keys() {
            *membership.entry(id).or_insert(0) |= 1 << i;
        }
    }

    let mut by_mask: Vec<BTreeSet<String>> = vec![BTreeSet::new(); 1 << n];
    for (id, mask) in membership {
        by_mask[mask as usize].insert(id.to_string());
    }

    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));

    let regions = masks
        .into_iter()
        .map(|mask| {
            let ids = std::mem::take(&mut by_mask[mask as usize]);
            OverlapRegion {
                datasets: sets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, (label, _))| label.to_string())
                    .collect(),
                count: ids.len(),
                ids,
            }
        })
        .collect();

    OverlapReport {
        labels: sets.iter().map(|(l, _)| l.to_string()).collect(),
        regions,
    }
}
