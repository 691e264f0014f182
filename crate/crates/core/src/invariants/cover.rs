//! `λ(G)`: the largest number of 1-hop neighborhoods ever needed to cover a
//! set of pairwise-interfering links, with exact set cover for the inner
//! minimum.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::caps::Caps;
use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{conflict_graph, Link, NetworkGraph};

/// Minimum number of `sets` whose union contains `universe`; returns the
/// chosen set indices. `None` when no cover exists.
pub fn min_set_cover(
    universe: &FixedBitSet,
    sets: &[FixedBitSet],
    max_nodes: usize,
) -> Result<Option<Vec<usize>>> {
    let mut union = FixedBitSet::with_capacity(universe.len());
    for s in sets {
        union.union_with(s);
    }
    if !universe.is_subset(&union) {
        return Ok(None);
    }
    let mut search = CoverSearch {
        sets,
        best: greedy_cover(universe, sets),
        nodes: 0,
        max_nodes,
    };
    search.branch(universe.clone(), &mut Vec::new())?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(Some(best))
}

fn greedy_cover(universe: &FixedBitSet, sets: &[FixedBitSet]) -> Vec<usize> {
    let mut left = universe.clone();
    let mut chosen = Vec::new();
    while !left.is_clear() {
        let (i, _) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection_count(&left)))
            .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
            .expect("cover exists");
        chosen.push(i);
        left.difference_with(&sets[i]);
    }
    chosen
}

struct CoverSearch<'a> {
    sets: &'a [FixedBitSet],
    best: Vec<usize>,
    nodes: usize,
    max_nodes: usize,
}

impl CoverSearch<'_> {
    fn branch(&mut self, left: FixedBitSet, chosen: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Resource {
                what: "set cover branch and bound",
                cap: self.max_nodes,
            });
        }
        let remaining = left.count_ones(..);
        if remaining == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        let widest = self
            .sets
            .iter()
            .map(|s| s.intersection_count(&left))
            .max()
            .unwrap_or(0);
        if widest == 0 || chosen.len() + remaining.div_ceil(widest) >= self.best.len() {
            return Ok(());
        }
        // branch on the element with the fewest covering sets
        let elem = left
            .ones()
            .min_by_key(|&e| self.sets.iter().filter(|s| s.contains(e)).count())
            .expect("left is nonempty");
        let mut options: Vec<usize> = (0..self.sets.len())
            .filter(|&i| self.sets[i].contains(elem))
            .collect();
        options.sort_by_key(|&i| std::cmp::Reverse(self.sets[i].intersection_count(&left)));
        for i in options {
            let mut next = left.clone();
            next.difference_with(&self.sets[i]);
            chosen.push(i);
            self.branch(next, chosen)?;
            chosen.pop();
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaWitness {
    /// A maximal set of pairwise-interfering links attaining the maximum.
    pub links: Vec<Link>,
    /// Centers of a minimum cover of `links` by 1-hop neighborhoods.
    pub nodes: Vec<String>,
}

/// `λ(g)` under the 2-hop rule: max over maximal cliques `F` of `L_2(g)` of
/// the least number of `G_v` whose link sets together contain `F`.
/// Graphs without links give 0.
pub fn lambda(g: &NetworkGraph, caps: &Caps) -> Result<(usize, LambdaWitness)> {
    let mut best = (
        0,
        LambdaWitness {
            links: Vec::new(),
            nodes: Vec::new(),
        },
    );
    if g.link_count() == 0 {
        return Ok(best);
    }
    let gc = conflict_graph(g, 2)?;
    let m = g.link_count();
    let neighborhoods: Vec<FixedBitSet> = (0..g.node_count())
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(m);
            for i in g.one_hop_link_ids(v) {
                s.insert(i);
            }
            s
        })
        .collect();
    for clique in maximal_cliques(gc.graph(), caps.max_sets)? {
        let mut universe = FixedBitSet::with_capacity(m);
        for &i in &clique {
            universe.insert(i);
        }
        let cover = min_set_cover(&universe, &neighborhoods, caps.max_cover_nodes)?
            .expect("each link lies in its endpoints' neighborhoods");
        if cover.len() > best.0 {
            best = (
                cover.len(),
                LambdaWitness {
                    links: clique.iter().map(|&i| g.links()[i].clone()).collect(),
                    nodes: cover.iter().map(|&v| g.nodes()[v].clone()).collect(),
                },
            );
        }
    }
    Ok(best)
}

/// Checks that `w.links` is pairwise interfering and covered by the `G_v` of `w.nodes`.
pub fn verify_lambda_witness(g: &NetworkGraph, w: &LambdaWitness) -> Result<bool> {
    let gc = conflict_graph(g, 2)?;
    let pairwise = w
        .links
        .iter()
        .enumerate()
        .all(|(i, a)| w.links[i + 1..].iter().all(|b| gc.interferes(a, b)));
    let mut covered: Vec<Link> = Vec::new();
    for node in &w.nodes {
        covered.extend(g.one_hop_subgraph(node)?.links().iter().cloned());
    }
    Ok(pairwise && w.links.iter().all(|l| covered.contains(l)))
}
