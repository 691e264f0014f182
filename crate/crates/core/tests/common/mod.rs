//! Independent brute-force oracles and the shared test corpus.
#![allow(dead_code)]

use std::collections::HashMap;

use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twohop_core::graph::generate::random_connected;
use twohop_core::{generate, Family, NetworkGraph, Rational};

/// Named graphs used by the soundness and sandwich checks.
pub fn corpus(random_graphs: usize, seed: u64) -> Vec<(String, NetworkGraph)> {
    let mut out: Vec<(String, NetworkGraph)> = [
        Family::Cycle(10),
        Family::Cycle(14),
        Family::CliquePendant(3),
        Family::Complete(5),
        Family::Star(5),
    ]
    .into_iter()
    .map(|f| (f.to_string(), generate(&f).unwrap()))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random_graphs {
        let n = 2 + i % 7;
        out.push((format!("random-{i}"), random_connected(n, 10, &mut rng)));
    }
    out
}

/// All-pairs node distances by Floyd–Warshall, `None` for unreachable.
pub fn floyd_distances(g: &NetworkGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for l in g.links() {
        let (a, b) = l.endpoints();
        let (a, b) = (g.node_id(a).unwrap(), g.node_id(b).unwrap());
        d[a][b] = Some(1);
        d[b][a] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|z| x + y < z) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

/// Conflict adjacency from the definition: min endpoint distance `< k`.
pub fn brute_conflict(g: &NetworkGraph, k: usize) -> Vec<Vec<bool>> {
    let d = floyd_distances(g);
    let ends: Vec<(usize, usize)> = g
        .links()
        .iter()
        .map(|l| {
            let (a, b) = l.endpoints();
            (g.node_id(a).unwrap(), g.node_id(b).unwrap())
        })
        .collect();
    let m = ends.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let (a, b) = ends[i];
            let (c, e) = ends[j];
            let dist = [d[a][c], d[a][e], d[b][c], d[b][e]]
                .into_iter()
                .flatten()
                .min();
            adj[i][j] = dist.is_some_and(|x| x < k);
        }
    }
    adj
}

/// Maximal independent sets as bitmasks, by scanning every subset.
pub fn brute_maximal_independent(adj: &[Vec<bool>]) -> Vec<u32> {
    let n = adj.len();
    assert!(n <= 20);
    let independent =
        |s: u32| (0..n).all(|i| s >> i & 1 == 0 || (0..n).all(|j| s >> j & 1 == 0 || !adj[i][j]));
    (0u32..1 << n)
        .filter(|&s| independent(s) && (0..n).all(|v| s >> v & 1 == 1 || !independent(s | 1 << v)))
        .collect()
}

/// Integral multi-coloring number: fewest independent sets (with repetition)
/// covering vertex `v` at least `demand[v]` times.
pub fn multicoloring_number(adj: &[Vec<bool>], demand: &[u32]) -> u32 {
    let sets = brute_maximal_independent(adj);
    let mut memo = HashMap::new();
    multicolor(&sets, demand.to_vec(), &mut memo)
}

fn multicolor(sets: &[u32], rem: Vec<u32>, memo: &mut HashMap<Vec<u32>, u32>) -> u32 {
    let Some(v) = (0..rem.len())
        .filter(|&v| rem[v] > 0)
        .max_by_key(|&v| (rem[v], std::cmp::Reverse(v)))
    else {
        return 0;
    };
    if let Some(&hit) = memo.get(&rem) {
        return hit;
    }
    // some color class contains v, and it can be taken maximal
    let mut best = u32::MAX;
    for &s in sets.iter().filter(|&&s| s >> v & 1 == 1) {
        let next: Vec<u32> = rem
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                if s >> i & 1 == 1 {
                    r.saturating_sub(1)
                } else {
                    r
                }
            })
            .collect();
        best = best.min(1 + multicolor(sets, next, memo));
    }
    memo.insert(rem, best);
    best
}

/// Weighted fractional chromatic number as `min_m χ(H, m·L·w) / (m·L)` over
/// `m = 1..=multipliers`, where `L` is the lcm of the weight denominators.
pub fn multicoloring_chif(adj: &[Vec<bool>], w: &[Rational], multipliers: i64) -> Rational {
    let lcm = w
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let lcm: i64 = lcm.try_into().unwrap();
    (1..=multipliers)
        .map(|m| {
            let scale = Rational::integer(m * lcm);
            let demand: Vec<u32> = w
                .iter()
                .map(|x| {
                    let d = x * &scale;
                    assert!(d.denom() == &1.into());
                    u32::try_from(d.numer()).unwrap()
                })
                .collect();
            Rational::new(multicoloring_number(adj, &demand) as i64, m * lcm)
        })
        .min()
        .unwrap()
}
