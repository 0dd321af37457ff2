//! Brute-force oracles and generators shared by the property and acceptance
//! suites. Everything here is implemented independently of the library's
//! algorithms: quadratic pair counting, Floyd-Warshall distances, iterative
//! peeling, path-count DP. Slow on purpose.

#![allow(dead_code)]
// matrix-style index loops are the clearest form for these oracles
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use socmed_compare::network::{InteractionGraph, InteractionKind};
use socmed_compare::rankcompare::{CommonEntry, CommonRanking};

// ---- permutations and partitions -----------------------------------------

pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..m).collect();
    heap_permute(&mut items, m, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Every set partition of n items as a restricted-growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    rgs(&mut prefix, 0, n, &mut out);
    out
}

fn rgs(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for v in 0..=max {
        prefix.push(v);
        rgs(prefix, max.max(v + 1), n, out);
        prefix.pop();
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

// ---- rank correlation -----------------------------------------------------

/// A CommonRanking where item at rank_a = i+1 holds rank_b = ranks[i].
/// `ranks` entries are 1-based.
pub fn common_from_rank_b(ranks: &[usize]) -> CommonRanking {
    let entries = ranks
        .iter()
        .enumerate()
        .map(|(i, &rb)| CommonEntry {
            node: format!("n{i}"),
            rank_a: i + 1,
            rank_b: rb,
        })
        .collect();
    CommonRanking::new(ranks.len(), entries).expect("valid ranking")
}

/// Kendall tau by quadratic concordant/discordant pair counting.
pub fn brute_tau(rank_b: &[usize]) -> f64 {
    let m = rank_b.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..m {
        for j in (i + 1)..m {
            if rank_b[j] > rank_b[i] {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    (concordant - discordant) as f64 / (m * (m - 1) / 2) as f64
}

/// Spearman rho as the Pearson correlation of the two rank vectors, an
/// algebraic route independent of the sum-of-squared-differences formula.
pub fn brute_rho(rank_b: &[usize]) -> f64 {
    let m = rank_b.len() as f64;
    let mean = (m + 1.0) / 2.0;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (i, &rb) in rank_b.iter().enumerate() {
        let x = (i + 1) as f64 - mean;
        let y = rb as f64 - mean;
        cov += x * y;
        var_x += x * x;
        var_y += y * y;
    }
    cov / (var_x * var_y).sqrt()
}

/// Count of items below item i in both lists, by definition.
pub fn brute_neighborhood_scores(ranks: &[usize]) -> Vec<usize> {
    let m = ranks.len();
    (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j > i && ranks[j] > ranks[i])
                .count()
        })
        .collect()
}

// ---- adjusted rand index ---------------------------------------------------

/// (Rand index, ARI) from the four pair classes, using the pair-count form
/// of the Hubert-Arabie correction rather than the contingency table.
pub fn brute_rand_ari(a: &[usize], b: &[usize]) -> (Option<f64>, Option<f64>) {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    if n < 2 {
        return (None, None);
    }
    let (mut n11, mut n00, mut n10, mut n01) = (0f64, 0f64, 0f64, 0f64);
    for i in 0..n {
        for j in (i + 1)..n {
            match (a[i] == a[j], b[i] == b[j]) {
                (true, true) => n11 += 1.0,
                (false, false) => n00 += 1.0,
                (true, false) => n10 += 1.0,
                (false, true) => n01 += 1.0,
            }
        }
    }
    let total = n11 + n00 + n10 + n01;
    let rand = (n11 + n00) / total;
    let denominator = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00);
    let ari = if denominator == 0.0 {
        // possible only when both partitions have identical pair structure
        1.0
    } else {
        2.0 * (n11 * n00 - n10 * n01) / denominator
    };
    (Some(rand), Some(ari))
}

// ---- digraphs ---------------------------------------------------------------

/// Build an [`InteractionGraph`] over nodes "n0".."n{n-1}" from arc indices.
pub fn graph_from_arcs(arcs: &[(usize, usize, u64)]) -> InteractionGraph {
    InteractionGraph::from_edges(
        InteractionKind::Mention,
        arcs.iter()
            .map(|&(s, t, w)| (format!("n{s}"), format!("n{t}"), w)),
    )
    .expect("valid arcs")
}

/// Random simple digraph with up to `max_n` labeled nodes.
pub fn random_arcs(rng: &mut ChaCha8Rng, max_n: usize) -> Vec<(usize, usize, u64)> {
    let n = rng.gen_range(2..=max_n);
    let p = rng.gen_range(0.15..0.55);
    let mut arcs = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t && rng.gen_bool(p) {
                arcs.push((s, t, rng.gen_range(1..=3)));
            }
        }
    }
    arcs
}

/// Directed adjacency matrix of a built graph, indexed like the graph.
pub fn adjacency_matrix(g: &InteractionGraph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut m = vec![vec![false; n]; n];
    for u in 0..n {
        for &(v, _) in g.out_neighbors(u) {
            m[u][v] = true;
        }
    }
    m
}

fn undirected_matrix(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = m.len();
    let mut u = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if m[i][j] || m[j][i] {
                u[i][j] = true;
                u[j][i] = true;
            }
        }
    }
    u
}

pub fn brute_density(m: &[Vec<bool>]) -> f64 {
    let n = m.len();
    if n < 2 {
        return 0.0;
    }
    let edges = m.iter().flatten().filter(|&&b| b).count();
    edges as f64 / (n * (n - 1)) as f64
}

pub fn brute_reciprocity(m: &[Vec<bool>]) -> f64 {
    let n = m.len();
    let mut edges = 0;
    let mut mutual = 0;
    for i in 0..n {
        for j in 0..n {
            if m[i][j] {
                edges += 1;
                if m[j][i] {
                    mutual += 1;
                }
            }
        }
    }
    if edges == 0 {
        0.0
    } else {
        mutual as f64 / edges as f64
    }
}

pub fn brute_transitivity(m: &[Vec<bool>]) -> f64 {
    let u = undirected_matrix(m);
    let n = u.len();
    let mut triangles = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if u[i][j] && u[j][k] && u[i][k] {
                    triangles += 1;
                }
            }
        }
    }
    let mut triplets = 0u64;
    for i in 0..n {
        let d = u[i].iter().filter(|&&b| b).count() as u64;
        triplets += d * (d - 1) / 2;
    }
    if triplets == 0 {
        0.0
    } else {
        3.0 * triangles as f64 / triplets as f64
    }
}

/// Weak components by union-find; each sorted, ordered by smallest member.
pub fn brute_components(m: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for i in 0..n {
        for j in 0..n {
            if m[i][j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    for c in components.iter_mut() {
        c.sort_unstable();
    }
    components.sort_by_key(|c| c[0]);
    components
}

/// Diameter of the largest weak component via Floyd-Warshall on the
/// undirected view. Largest means (size, then smallest first member).
pub fn brute_largest_component_diameter(m: &[Vec<bool>]) -> usize {
    let components = brute_components(m);
    let Some(largest) = components
        .iter()
        .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])))
    else {
        return 0;
    };
    let u = undirected_matrix(m);
    let inf = usize::MAX / 2;
    let idx: Vec<usize> = largest.clone();
    let k_n = idx.len();
    let mut dist = vec![vec![inf; k_n]; k_n];
    for (a, &i) in idx.iter().enumerate() {
        dist[a][a] = 0;
        for (b, &j) in idx.iter().enumerate() {
            if u[i][j] {
                dist[a][b] = 1;
            }
        }
    }
    for k in 0..k_n {
        for a in 0..k_n {
            for b in 0..k_n {
                let through = dist[a][k] + dist[k][b];
                if through < dist[a][b] {
                    dist[a][b] = through;
                }
            }
        }
    }
    dist.iter().flatten().copied().filter(|&d| d < inf).max().unwrap_or(0)
}

/// Largest k with a non-empty k-core, by repeated removal from scratch.
pub fn brute_max_k_core(m: &[Vec<bool>]) -> usize {
    let u = undirected_matrix(m);
    let n = u.len();
    let mut best = 0;
    for k in 1..=n {
        let mut alive: BTreeSet<usize> = (0..n).collect();
        loop {
            let doomed: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&v| {
                    alive.iter().filter(|&&w| w != v && u[v][w]).count() < k
                })
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive.remove(&v);
            }
        }
        if alive.is_empty() {
            break;
        }
        best = k;
    }
    best
}

/// Diameter by plain BFS from every node, for graphs too large for
/// Floyd-Warshall but small enough to sweep. Assumes one weak component.
pub fn brute_diameter_all_bfs(g: &InteractionGraph) -> usize {
    let adj: Vec<Vec<usize>> = g
        .undirected_adjacency()
        .into_iter()
        .map(|list| list.into_iter().map(|(v, _)| v).collect())
        .collect();
    let n = adj.len();
    let mut best = 0;
    let mut dist = vec![usize::MAX; n];
    for start in 0..n {
        dist.fill(usize::MAX);
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    best = best.max(dist[v]);
                    queue.push_back(v);
                }
            }
        }
    }
    best
}

pub fn brute_degree_centrality(m: &[Vec<bool>]) -> Vec<f64> {
    let n = m.len();
    (0..n)
        .map(|v| {
            if n < 2 {
                return 0.0;
            }
            let out = m[v].iter().filter(|&&b| b).count();
            let inc = (0..n).filter(|&u| m[u][v]).count();
            (out + inc) as f64 / (n - 1) as f64
        })
        .collect()
}

/// Betweenness from explicit shortest-path counts: for each source, BFS
/// distances plus a path-count DP in distance order, then the standard
/// dependency sum evaluated pair by pair.
pub fn brute_betweenness(m: &[Vec<bool>]) -> Vec<f64> {
    let n = m.len();
    if n <= 2 {
        return vec![0.0; n];
    }
    let inf = usize::MAX / 2;
    let mut dist = vec![vec![inf; n]; n];
    let mut sigma = vec![vec![0f64; n]; n];
    for s in 0..n {
        dist[s][s] = 0;
        sigma[s][s] = 1.0;
        let mut frontier = vec![s];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in 0..n {
                    if m[u][v] {
                        if dist[s][v] == inf {
                            dist[s][v] = d;
                            next.push(v);
                        }
                        if dist[s][v] == d {
                            sigma[s][v] += sigma[s][u];
                        }
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }
    }
    let mut betweenness = vec![0.0; n];
    for v in 0..n {
        for s in 0..n {
            for t in 0..n {
                if s == v || t == v || s == t {
                    continue;
                }
                if dist[s][t] < inf && dist[s][v] + dist[v][t] == dist[s][t] {
                    betweenness[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
                }
            }
        }
    }
    let scale = 1.0 / ((n - 1) as f64 * (n - 2) as f64);
    for b in betweenness.iter_mut() {
        *b *= scale;
    }
    betweenness
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
