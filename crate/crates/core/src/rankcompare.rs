//! Comparison of two centrality rankings: common-top-k restriction,
//! Kendall tau and Spearman rho with p-values, scatter-plot data, and the
//! neighborhood-preserving rank score.
//!
//! The neighborhood score follows this formalization: the score of an item
//! is the number of items ranked below it in *both* lists, and its baseline
//! is the number of items below it in the first list alone, so the score
//! can never exceed the baseline and items whose neighborhood is preserved
//! stay on the diagonal. Summed over all items the score equals the
//! concordant pair count, which ties the plot back to Kendall tau.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};
use statrs::function::erf::erfc;

use crate::centrality::RankedList;
use crate::error::{Error, Result};

/// Largest list size for which the exact tau null distribution is used;
/// beyond it the normal approximation takes over.
pub const EXACT_TAU_P_LIMIT: usize = 30;

/// Whether the top-k cut is applied before or after intersecting the lists.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruncationOrder {
    /// Take the top k of each list, then keep the nodes common to both.
    #[default]
    TopKThenIntersect,
    /// Keep the common nodes first, then cut each list to its top k.
    IntersectThenTopK,
}

impl TruncationOrder {
    pub fn as_str(&self) -> &'static str {
        match self {
            TruncationOrder::TopKThenIntersect => "top_k_then_intersect",
            TruncationOrder::IntersectThenTopK => "intersect_then_top_k",
        }
    }
}

/// One node common to both restricted lists, with its dense rank on each
/// side (1 = highest).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonEntry {
    pub node: String,
    pub rank_a: usize,
    pub rank_b: usize,
}

/// The common-node restriction of two rankings, re-ranked densely 1..m on
/// each side. Entries are ordered by `rank_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonRanking {
    pub k_requested: usize,
    pub entries: Vec<CommonEntry>,
}

impl CommonRanking {
    /// Validate that both rank maps are bijections onto 1..m and that the
    /// entries come sorted by `rank_a`.
    pub fn new(k_requested: usize, entries: Vec<CommonEntry>) -> Result<CommonRanking> {
        let m = entries.len();
        let mut seen_b = vec![false; m];
        for (i, e) in entries.iter().enumerate() {
            if e.rank_a != i + 1 {
                return Err(Error::InvalidConfig(format!(
                    "entries must be sorted by rank_a with dense ranks; \
                     position {i} has rank_a {}",
                    e.rank_a
                )));
            }
            if e.rank_b == 0 || e.rank_b > m || seen_b[e.rank_b - 1] {
                return Err(Error::InvalidConfig(format!(
                    "rank_b values must form a permutation of 1..{m}"
                )));
            }
            seen_b[e.rank_b - 1] = true;
        }
        Ok(CommonRanking {
            k_requested,
            entries,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The rank_b sequence read in rank_a order.
    pub fn rank_b_in_a_order(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.rank_b).collect()
    }
}

/// Rank-similarity scores over the common nodes of two rankings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityScore {
    pub tau: f64,
    pub tau_p_value: f64,
    pub rho: f64,
    pub rho_p_value: f64,
    pub n_compared: usize,
}

/// Restrict two rankings to their common top k (main-text order: truncate,
/// then intersect) and re-rank densely.
pub fn common_top_k(a: &RankedList, b: &RankedList, k: usize) -> Result<CommonRanking> {
    common_top_k_ordered(a, b, k, TruncationOrder::TopKThenIntersect)
}

pub fn common_top_k_ordered(
    a: &RankedList,
    b: &RankedList,
    k: usize,
    order: TruncationOrder,
) -> Result<CommonRanking> {
    if k == 0 {
        return Err(Error::InvalidConfig("top-k must be at least 1".into()));
    }
    match order {
        TruncationOrder::TopKThenIntersect => {
            let top_a = &a.entries[..k.min(a.entries.len())];
            let top_b = &b.entries[..k.min(b.entries.len())];
            Ok(intersect_and_rerank(k, top_a, top_b))
        }
        TruncationOrder::IntersectThenTopK => {
            let set_a: HashSet<&str> = a.entries.iter().map(String::as_str).collect();
            let set_b: HashSet<&str> = b.entries.iter().map(String::as_str).collect();
            let restricted_a: Vec<String> = a
                .entries
                .iter()
                .filter(|n| set_b.contains(n.as_str()))
                .take(k)
                .cloned()
                .collect();
            let restricted_b: Vec<String> = b
                .entries
                .iter()
                .filter(|n| set_a.contains(n.as_str()))
                .take(k)
                .cloned()
                .collect();
            Ok(intersect_and_rerank(k, &restricted_a, &restricted_b))
        }
    }
}

fn intersect_and_rerank(k: usize, list_a: &[String], list_b: &[String]) -> CommonRanking {
    let set_a: HashSet<&str> = list_a.iter().map(String::as_str).collect();
    let set_b: HashSet<&str> = list_b.iter().map(String::as_str).collect();

    let rank_b: HashMap<&str, usize> = list_b
        .iter()
        .filter(|n| set_a.contains(n.as_str()))
        .enumerate()
        .map(|(i, n)| (n.as_str(), i + 1))
        .collect();

    let entries: Vec<CommonEntry> = list_a
        .iter()
        .filter(|n| set_b.contains(n.as_str()))
        .enumerate()
        .map(|(i, n)| CommonEntry {
            node: n.clone(),
            rank_a: i + 1,
            rank_b: rank_b[n.as_str()],
        })
        .collect();

    CommonRanking {
        k_requested: k,
        entries,
    }
}

/// Kendall tau over the two dense rank vectors, with a two-sided p-value
/// (exact null distribution up to m = 30, normal approximation beyond).
/// `None` when fewer than two nodes are compared.
pub fn kendall_tau(common: &CommonRanking) -> Option<(f64, f64)> {
    let ranks = common.rank_b_in_a_order();
    let m = ranks.len();
    if m < 2 {
        return None;
    }
    let total_pairs = (m * (m - 1) / 2) as u64;
    let discordant = count_inversions(&ranks);
    let s = total_pairs as f64 - 2.0 * discordant as f64;
    let tau = s / total_pairs as f64;

    let p = if m <= EXACT_TAU_P_LIMIT {
        exact_tau_p(m, discordant, total_pairs)
    } else {
        let variance = m as f64 * (m as f64 - 1.0) * (2.0 * m as f64 + 5.0) / 18.0;
        let z = s / variance.sqrt();
        erfc(z.abs() / std::f64::consts::SQRT_2)
    };
    Some((tau, p))
}

/// Two-sided exact p-value from the inversion-count (Mahonian) null
/// distribution: P(|S| >= |s_observed|) over all m! permutations.
/// The per-m distribution is cached; longitudinal pipelines hit the same m
/// over and over.
fn exact_tau_p(m: usize, discordant: u64, total_pairs: u64) -> f64 {
    use std::cell::RefCell;
    use std::collections::HashMap;
    use std::rc::Rc;

    thread_local! {
        static DISTRIBUTIONS: RefCell<HashMap<usize, Rc<Vec<f64>>>> =
            RefCell::new(HashMap::new());
    }
    let probabilities = DISTRIBUTIONS.with(|cache| {
        cache
            .borrow_mut()
            .entry(m)
            .or_insert_with(|| Rc::new(inversion_distribution(m)))
            .clone()
    });
    // By symmetry of the distribution about total_pairs / 2,
    // P(|S| >= |s|) = 2 P(D <= min(d, total - d)), capped at 1.
    let d_min = discordant.min(total_pairs - discordant) as usize;
    let tail: f64 = probabilities[..=d_min].iter().sum();
    (2.0 * tail).min(1.0)
}

/// probabilities[k] = P(exactly k inversions) for a uniform random
/// permutation of m items, built by the standard convolution.
fn inversion_distribution(m: usize) -> Vec<f64> {
    let max_inversions = m * (m - 1) / 2;
    let mut probabilities = vec![0.0f64; max_inversions + 1];
    probabilities[0] = 1.0;
    let mut width = 0usize;
    for i in 2..=m {
        width += i - 1;
        let mut prefix = vec![0.0f64; width + 2];
        for k in 0..=width {
            prefix[k + 1] = prefix[k] + probabilities.get(k).copied().unwrap_or(0.0);
        }
        for k in (0..=width).rev() {
            let lo = k.saturating_sub(i - 1);
            probabilities[k] = (prefix[k + 1] - prefix[lo]) / i as f64;
        }
    }
    probabilities
}

/// Spearman rho = 1 - 6 sum(d^2) / (m (m^2 - 1)) over the dense ranks,
/// with a two-sided p-value from the t approximation. `None` when fewer
/// than two nodes are compared.
pub fn spearman_rho(common: &CommonRanking) -> Option<(f64, f64)> {
    let m = common.len();
    if m < 2 {
        return None;
    }
    let sum_d2: u64 = common
        .entries
        .iter()
        .map(|e| {
            let d = e.rank_a.abs_diff(e.rank_b) as u64;
            d * d
        })
        .sum();
    let mf = m as f64;
    let rho = 1.0 - 6.0 * sum_d2 as f64 / (mf * (mf * mf - 1.0));

    let p = if m == 2 {
        // both orders are equally extreme; the statistic carries no power
        1.0
    } else if (rho.abs() - 1.0).abs() < 1e-15 {
        0.0
    } else {
        let df = mf - 2.0;
        let t = rho * (df / (1.0 - rho * rho)).sqrt();
        let dist = StudentsT::new(0.0, 1.0, df).expect("valid t distribution");
        2.0 * dist.cdf(-t.abs())
    };
    Some((rho, p))
}

/// Both correlation scores over a common ranking; `None` when m < 2.
pub fn similarity(common: &CommonRanking) -> Option<SimilarityScore> {
    let (tau, tau_p_value) = kendall_tau(common)?;
    let (rho, rho_p_value) = spearman_rho(common)?;
    Some(SimilarityScore {
        tau,
        tau_p_value,
        rho,
        rho_p_value,
        n_compared: common.len(),
    })
}

/// One point of the rank-vs-rank scatter plot. `shade` is rank_a / m, so
/// higher-ranked (smaller rank_a) points are darker.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatterPoint {
    pub node: String,
    pub x: usize,
    pub y: usize,
    pub shade: f64,
}

/// Scatter data: x = rank in list a, y = rank in list b. Both coordinate
/// sets are permutations of 1..m.
pub fn scatter_data(common: &CommonRanking) -> Vec<ScatterPoint> {
    let m = common.len() as f64;
    common
        .entries
        .iter()
        .map(|e| ScatterPoint {
            node: e.node.clone(),
            x: e.rank_a,
            y: e.rank_b,
            shade: e.rank_a as f64 / m,
        })
        .collect()
}

/// One point of the neighborhood-preserving rank-score plot: x is the
/// item's baseline (m - rank_a), y its score, and score <= baseline always.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeighborhoodPoint {
    pub node: String,
    pub baseline: usize,
    pub score: usize,
    pub shade: f64,
}

/// For each item, count the items ranked below it in both lists. Items
/// that keep their whole neighborhood score exactly their baseline and lie
/// on the diagonal; displaced items fall below it.
pub fn neighborhood_rank_score(common: &CommonRanking) -> Vec<NeighborhoodPoint> {
    let m = common.len();
    let mut scores = vec![0usize; m];
    let mut tree = FenwickTree::new(m);
    // Entries are in rank_a order; walking from the bottom up, every
    // already-inserted item is below the current one in list a.
    for (i, entry) in common.entries.iter().enumerate().rev() {
        let inserted = m - 1 - i;
        scores[i] = inserted - tree.count_at_most(entry.rank_b);
        tree.insert(entry.rank_b);
    }
    common
        .entries
        .iter()
        .zip(scores)
        .map(|(e, score)| NeighborhoodPoint {
            node: e.node.clone(),
            baseline: m - e.rank_a,
            score,
            shade: e.rank_a as f64 / m as f64,
        })
        .collect()
}

struct FenwickTree {
    tree: Vec<usize>,
}

impl FenwickTree {
    fn new(size: usize) -> FenwickTree {
        FenwickTree {
            tree: vec![0; size + 1],
        }
    }

    fn insert(&mut self, mut index: usize) {
        while index < self.tree.len() {
            self.tree[index] += 1;
            index += index & index.wrapping_neg();
        }
    }

    fn count_at_most(&self, mut index: usize) -> usize {
        let mut sum = 0;
        while index > 0 {
            sum += self.tree[index];
            index -= index & index.wrapping_neg();
        }
        sum
    }
}

/// Inversion count by merge sort, O(m log m).
fn count_inversions(ranks: &[usize]) -> u64 {
    let mut work = ranks.to_vec();
    let mut buffer = vec![0usize; ranks.len()];
    merge_count(&mut work, &mut buffer)
}

fn merge_count(values: &mut [usize], buffer: &mut [usize]) -> u64 {
    let n = values.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let (left_buf, right_buf) = buffer.split_at_mut(mid);
    let mut inversions;
    {
        let (left, right) = values.split_at_mut(mid);
        inversions = merge_count(left, left_buf) + merge_count(right, right_buf);
    }
    let (mut i, mut j) = (0, mid);
    for slot in buffer.iter_mut().take(n) {
        if i < mid && (j >= n || values[i] <= values[j]) {
            *slot = values[i];
            i += 1;
        } else {
            inversions += (mid - i) as u64;
            *slot = values[j];
            j += 1;
        }
    }
    values.copy_from_slice(&buffer[..n]);
    inversions
}
