//! Per-dataset feature statistics and the pairwise delta report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ingest::Dataset;

/// An item (author, tweet, hashtag or URL) together with its count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopItem {
    pub item: String,
    pub count: u64,
}

/// Absolute counts and highest-count items for one dataset.
///
/// Category counts are not exclusive: a quote tweet that is also a reply
/// increments both `quote_count` and `reply_count`. Entities carried by
/// retweets count toward the usage totals. "Most X" ties break toward the
/// lexicographically smallest item.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub tweet_count: u64,
    pub retweet_count: u64,
    pub quote_count: u64,
    pub reply_count: u64,
    pub tweets_with_hashtags: u64,
    pub tweets_with_urls: u64,
    pub tweets_with_mentions: u64,
    pub author_count: u64,
    pub hashtag_uses: u64,
    pub unique_hashtags: u64,
    pub url_uses: u64,
    pub unique_urls: u64,
    pub most_prolific_author: Option<TopItem>,
    pub most_retweeted_tweet: Option<TopItem>,
    pub most_replied_to_tweet: Option<TopItem>,
    pub most_mentioned_account: Option<TopItem>,
    pub most_used_hashtag: Option<TopItem>,
    pub next_most_used_hashtag: Option<TopItem>,
    pub most_used_url: Option<TopItem>,
}

fn top(histogram: &BTreeMap<&str, u64>) -> Option<TopItem> {
    top_n(histogram, 0)
}

/// n-th ranked item (0-based) under (count desc, item asc) ordering.
/// BTreeMap iteration is already item-ascending, so max_by on count > keeps
/// the first (smallest) item among ties.
fn top_n(histogram: &BTreeMap<&str, u64>, n: usize) -> Option<TopItem> {
    let mut entries: Vec<(&str, u64)> = histogram.iter().map(|(k, v)| (*k, *v)).collect();
    entries.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    entries.get(n).map(|(item, count)| TopItem {
        item: item.to_string(),
        count: *count,
    })
}

/// Compute the absolute-count and highest-count statistics for a dataset.
pub fn dataset_stats(dataset: &Dataset) -> DatasetStats {
    let mut retweet_count = 0;
    let mut quote_count = 0;
    let mut reply_count = 0;
    let mut tweets_with_hashtags = 0;
    let mut tweets_with_urls = 0;
    let mut tweets_with_mentions = 0;
    let mut hashtag_uses = 0;
    let mut url_uses = 0;

    let mut by_author: BTreeMap<&str, u64> = BTreeMap::new();
    let mut retweets_of: BTreeMap<&str, u64> = BTreeMap::new();
    let mut replies_to: BTreeMap<&str, u64> = BTreeMap::new();
    let mut mentions_of: BTreeMap<&str, u64> = BTreeMap::new();
    let mut hashtags: BTreeMap<&str, u64> = BTreeMap::new();
    let mut urls: BTreeMap<&str, u64> = BTreeMap::new();

    for tweet in dataset.tweets.values() {
        *by_author.entry(&tweet.author_id).or_insert(0) += 1;
        if let Some(rt) = &tweet.retweeted_tweet_id {
            retweet_count += 1;
            *retweets_of.entry(rt).or_insert(0) += 1;
        }
        if tweet.is_quote() {
            quote_count += 1;
        }
        if let Some(replied) = &tweet.in_reply_to_tweet_id {
            reply_count += 1;
            *replies_to.entry(replied).or_insert(0) += 1;
        }
        if !tweet.hashtags.is_empty() {
            tweets_with_hashtags += 1;
            hashtag_uses += tweet.hashtags.len() as u64;
            for tag in &tweet.hashtags {
                *hashtags.entry(tag).or_insert(0) += 1;
            }
        }
        if !tweet.urls.is_empty() {
            tweets_with_urls += 1;
            url_uses += tweet.urls.len() as u64;
            for url in &tweet.urls {
                *urls.entry(url).or_insert(0) += 1;
            }
        }
        if !tweet.mentions.is_empty() {
            tweets_with_mentions += 1;
            for mention in &tweet.mentions {
                *mentions_of.entry(&mention.author_id).or_insert(0) += 1;
            }
        }
    }

    DatasetStats {
        tweet_count: dataset.len() as u64,
        retweet_count,
        quote_count,
        reply_count,
        tweets_with_hashtags,
        tweets_with_urls,
        tweets_with_mentions,
        author_count: by_author.len() as u64,
        hashtag_uses,
        unique_hashtags: hashtags.len() as u64,
        url_uses,
        unique_urls: urls.len() as u64,
        most_prolific_author: top(&by_author),
        most_retweeted_tweet: top(&retweets_of),
        most_replied_to_tweet: top(&replies_to),
        most_mentioned_account: top(&mentions_of),
        most_used_hashtag: top(&hashtags),
        next_most_used_hashtag: top_n(&hashtags, 1),
        most_used_url: top(&urls),
    }
}

/// One numeric field compared across the two sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldDelta {
    pub field: String,
    pub a: u64,
    pub b: u64,
    /// |a - b|
    pub diff: u64,
    /// a / b, absent when b is zero.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
}

/// One highest-count field compared across the two sides; `differs` is set
/// when the top items are not the same.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopItemDelta {
    pub field: String,
    pub a: Option<TopItem>,
    pub b: Option<TopItem>,
    pub differs: bool,
}

/// Field-by-field comparison of two [`DatasetStats`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub label_a: String,
    pub label_b: String,
    pub fields: Vec<FieldDelta>,
    pub top_items: Vec<TopItemDelta>,
    /// Names of the top-item fields whose items differ.
    pub flagged: Vec<String>,
}

macro_rules! count_fields {
    ($($name:ident),* $(,)?) => {
        pub(crate) const COUNT_FIELDS: &[&str] = &[$(stringify!($name)),*];
        fn count_field(stats: &DatasetStats, name: &str) -> u64 {
            match name {
                $(stringify!($name) => stats.$name,)*
                _ => unreachable!("unknown count field {name}"),
            }
        }
    };
}

macro_rules! top_fields {
    ($($name:ident),* $(,)?) => {
        pub(crate) const TOP_FIELDS: &[&str] = &[$(stringify!($name)),*];
        fn top_field<'a>(stats: &'a DatasetStats, name: &str) -> &'a Option<TopItem> {
            match name {
                $(stringify!($name) => &stats.$name,)*
                _ => unreachable!("unknown top field {name}"),
            }
        }
    };
}

count_fields!(
    tweet_count,
    retweet_count,
    quote_count,
    reply_count,
    tweets_with_hashtags,
    tweets_with_urls,
    tweets_with_mentions,
    author_count,
    hashtag_uses,
    unique_hashtags,
    url_uses,
    unique_urls,
);

top_fields!(
    most_prolific_author,
    most_retweeted_tweet,
    most_replied_to_tweet,
    most_mentioned_account,
    most_used_hashtag,
    next_most_used_hashtag,
    most_used_url,
);

/// Per-field absolute differences and ratios (a relative to b), plus flags on
/// highest-count fields whose top items differ across the sides.
pub fn stats_delta(
    a: &DatasetStats,
    b: &DatasetStats,
    label_a: &str,
    label_b: &str,
) -> DeltaReport {
    let fields = COUNT_FIELDS
        .iter()
        .map(|name| {
            let va = count_field(a, name);
            let vb = count_field(b, name);
            FieldDelta {
                field: name.to_string(),
                a: va,
                b: vb,
                diff: va.abs_diff(vb),
                ratio: (vb != 0).then(|| va as f64 / vb as f64),
            }
        })
        .collect();

    let top_items: Vec<TopItemDelta> = TOP_FIELDS
        .iter()
        .map(|name| {
            let ia = top_field(a, name);
            let ib = top_field(b, name);
            let differs = match (ia, ib) {
                (None, None) => false,
                (Some(x), Some(y)) => x.item != y.item,
                _ => true,
            };
            TopItemDelta {
                field: name.to_string(),
                a: ia.clone(),
                b: ib.clone(),
                differs,
            }
        })
        .collect();

    let flagged = top_items
        .iter()
        .filter(|t| t.differs)
        .map(|t| t.field.clone())
        .collect();

    DeltaReport {
        label_a: label_a.to_string(),
        label_b: label_b.to_string(),
        fields,
        top_items,
        flagged,
    }
}
