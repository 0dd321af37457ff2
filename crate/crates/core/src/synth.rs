//! Seeded synthetic tweet streams in the platform's JSONL schema.
//!
//! The generator produces realistic interaction structure (skewed author
//! activity, retweets that carry the original's entities and a mention of
//! the retweeted author, reply chains, quotes that may also be replies) so
//! the whole pipeline can be exercised and benchmarked without real data.
//! Identical configs always yield identical lines.

use chrono::{DateTime, Duration, TimeZone, Utc};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::ingest::{parse_dataset, Dataset};

#[derive(Debug, Clone)]
pub struct SynthConfig {
    pub seed: u64,
    pub tweets: usize,
    pub authors: usize,
    pub hashtag_pool: usize,
    pub url_pool: usize,
    pub start: DateTime<Utc>,
    pub span: Duration,
    pub retweet_prob: f64,
    pub reply_prob: f64,
    pub quote_prob: f64,
    pub hashtag_prob: f64,
    pub url_prob: f64,
    /// Chance of mentioning 1-2 extra accounts beyond structural mentions.
    pub extra_mention_prob: f64,
    /// Chance that a reply points at a tweet outside the collection, so the
    /// replied-to author is unknown.
    pub reply_missing_author_prob: f64,
    /// Time windows with no emitted tweets, to simulate collection outages.
    pub omit_windows: Vec<(DateTime<Utc>, DateTime<Utc>)>,
    /// Every n-th line carries only `timestamp_ms` instead of `created_at`;
    /// 0 disables this.
    pub epoch_ms_every: usize,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 42,
            tweets: 1000,
            authors: 200,
            hashtag_pool: 40,
            url_pool: 60,
            start: Utc.with_ymd_and_hms(2019, 3, 23, 0, 0, 0).unwrap(),
            span: Duration::hours(24),
            retweet_prob: 0.35,
            reply_prob: 0.2,
            quote_prob: 0.06,
            hashtag_prob: 0.55,
            url_prob: 0.2,
            extra_mention_prob: 0.35,
            reply_missing_author_prob: 0.02,
            omit_windows: Vec::new(),
            epoch_ms_every: 7,
        }
    }
}

/// Generate one JSON line per tweet. Tweets falling inside an omitted
/// window are dropped, mimicking a collection interruption.
pub fn generate_jsonl(cfg: &SynthConfig) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut lines = Vec::with_capacity(cfg.tweets);
    // (tweet id, author index) of past original posts, retweet/reply targets
    let mut originals: Vec<(String, usize)> = Vec::new();
    let span_secs = cfg.span.num_seconds().max(1);

    for i in 0..cfg.tweets {
        let ts = cfg.start + Duration::seconds(span_secs * i as i64 / cfg.tweets as i64);
        let author = skewed_index(&mut rng, cfg.authors);
        let id = format!("t{i:07}");

        let is_retweet = !originals.is_empty() && rng.gen_bool(cfg.retweet_prob);
        let is_reply = !is_retweet && !originals.is_empty() && rng.gen_bool(cfg.reply_prob);
        let is_quote = !is_retweet && !originals.is_empty() && rng.gen_bool(cfg.quote_prob);

        let mut hashtags: Vec<String> = Vec::new();
        let mut urls: Vec<String> = Vec::new();
        let mut mentions: Vec<usize> = Vec::new();
        let mut line = serde_json::Map::new();

        if cfg.epoch_ms_every > 0 && i % cfg.epoch_ms_every == cfg.epoch_ms_every - 1 {
            line.insert(
                "timestamp_ms".into(),
                json!((ts.timestamp() * 1000).to_string()),
            );
        } else {
            line.insert(
                "created_at".into(),
                json!(ts.format("%a %b %d %H:%M:%S +0000 %Y").to_string()),
            );
        }
        line.insert("id_str".into(), json!(id));
        line.insert(
            "user".into(),
            json!({"id_str": author_id(author), "screen_name": screen_name(author)}),
        );

        let text;
        if is_retweet {
            let (target_id, target_author) = recent_pick(&mut rng, &originals);
            // the platform models a retweet as a mention of its author and
            // copies the original's entities
            mentions.push(target_author);
            if rng.gen_bool(cfg.hashtag_prob) {
                hashtags.push(format!("tag{}", skewed_index(&mut rng, cfg.hashtag_pool)));
            }
            if rng.gen_bool(cfg.url_prob) {
                urls.push(format!(
                    "https://example.org/p/{}",
                    skewed_index(&mut rng, cfg.url_pool)
                ));
            }
            text = format!("RT @{}: post {target_id}", screen_name(target_author));
            line.insert(
                "retweeted_status".into(),
                json!({
                    "id_str": target_id,
                    "user": {"id_str": author_id(target_author), "screen_name": screen_name(target_author)},
                }),
            );
        } else {
            if is_reply {
                let (target_id, target_author) = recent_pick(&mut rng, &originals);
                if rng.gen_bool(cfg.reply_missing_author_prob) {
                    line.insert(
                        "in_reply_to_status_id_str".into(),
                        json!(format!("ext{i}")),
                    );
                } else {
                    line.insert("in_reply_to_status_id_str".into(), json!(target_id));
                    line.insert(
                        "in_reply_to_user_id_str".into(),
                        json!(author_id(target_author)),
                    );
                    mentions.push(target_author);
                }
            }
            if is_quote {
                let (target_id, _) = recent_pick(&mut rng, &originals);
                line.insert("quoted_status_id_str".into(), json!(target_id));
            }
            if rng.gen_bool(cfg.hashtag_prob) {
                let n = 1 + usize::from(rng.gen_bool(0.3));
                for _ in 0..n {
                    hashtags.push(format!("tag{}", skewed_index(&mut rng, cfg.hashtag_pool)));
                }
            }
            if rng.gen_bool(cfg.url_prob) {
                urls.push(format!(
                    "https://example.org/p/{}",
                    skewed_index(&mut rng, cfg.url_pool)
                ));
            }
            if rng.gen_bool(cfg.extra_mention_prob) {
                let n = 1 + usize::from(rng.gen_bool(0.4));
                for _ in 0..n {
                    mentions.push(skewed_index(&mut rng, cfg.authors));
                }
            }
            text = format!("post {i} about things");
            originals.push((id.clone(), author));
        }

        line.insert("text".into(), json!(text));
        line.insert(
            "entities".into(),
            json!({
                "hashtags": hashtags.iter().map(|t| json!({"text": t})).collect::<Vec<_>>(),
                "urls": urls.iter().map(|u| json!({"expanded_url": u})).collect::<Vec<_>>(),
                "user_mentions": mentions
                    .iter()
                    .map(|&m| json!({"id_str": author_id(m), "screen_name": screen_name(m)}))
                    .collect::<Vec<_>>(),
            }),
        );

        if cfg
            .omit_windows
            .iter()
            .any(|(from, to)| ts >= *from && ts < *to)
        {
            continue;
        }
        lines.push(serde_json::Value::Object(line).to_string());
    }

    lines
}

/// Generate and ingest in one step.
pub fn generate_dataset(cfg: &SynthConfig, label: &str) -> Dataset {
    parse_dataset(&generate_jsonl(cfg), label)
}

/// Keep a seeded random fraction of lines, preserving order. Handy for
/// building a parallel "lossy collector" view of the same stream.
pub fn random_subset(lines: &[String], keep_fraction: f64, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    lines
        .iter()
        .filter(|_| rng.gen_bool(keep_fraction))
        .cloned()
        .collect()
}

fn author_id(index: usize) -> String {
    format!("a{index}")
}

fn screen_name(index: usize) -> String {
    format!("user{index}")
}

/// Index in 0..n biased toward small values (squared uniform), giving the
/// heavy-tailed activity typical of these streams.
fn skewed_index(rng: &mut ChaCha8Rng, n: usize) -> usize {
    let r: f64 = rng.gen();
    ((r * r * n as f64) as usize).min(n - 1)
}

/// Pick a past original with recency bias.
fn recent_pick(rng: &mut ChaCha8Rng, originals: &[(String, usize)]) -> (String, usize) {
    let r: f64 = rng.gen();
    let back = (r * r * originals.len() as f64) as usize;
    let idx = originals.len() - 1 - back.min(originals.len() - 1);
    originals[idx].clone()
}
