//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting) and
//! maximum clique search by branch and bound with greedy-coloring bounds.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::AdjGraph;

struct Enumerator<'a> {
    g: &'a AdjGraph,
    cap: usize,
    out: Vec<Vec<usize>>,
}

impl Enumerator<'_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) -> Result<()> {
        if p.is_clear() {
            if x.is_clear() {
                if self.out.len() == self.cap {
                    return Err(Error::Resource {
                        what: "maximal clique enumeration",
                        cap: self.cap,
                    });
                }
                let mut c = r.clone();
                c.sort_unstable();
                self.out.push(c);
            }
            return Ok(());
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| p.intersection_count(self.g.row(u)))
            .expect("p is nonempty");
        let mut candidates = p.clone();
        candidates.difference_with(self.g.row(pivot));
        for v in candidates.ones() {
            let row = self.g.row(v);
            let mut p2 = p.clone();
            p2.intersect_with(row);
            let mut x2 = x.clone();
            x2.intersect_with(row);
            r.push(v);
            self.expand(r, p2, x2)?;
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
        Ok(())
    }
}

/// All inclusion-maximal cliques, each sorted ascending, listed in
/// lexicographic order. An empty graph has the single clique `{}`.
pub fn maximal_cliques(g: &AdjGraph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.len();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let mut e = Enumerator {
        g,
        cap,
        out: Vec::new(),
    };
    e.expand(&mut Vec::new(), p, FixedBitSet::with_capacity(n))?;
    let mut out = e.out;
    out.sort();
    Ok(out)
}

/// All inclusion-maximal independent sets, via cliques of the complement.
pub fn maximal_independent_sets(g: &AdjGraph, cap: usize) -> Result<Vec<Vec<usize>>> {
    maximal_cliques(&g.complement(), cap)
}

/// Greedy sequential coloring of `p`; returns vertices in color order with
/// their (1-based) color, so `color` bounds the clique size among the prefix.
fn color_sort(g: &AdjGraph, p: &FixedBitSet) -> Vec<(usize, usize)> {
    let mut uncolored = p.clone();
    let mut order = Vec::with_capacity(p.count_ones(..));
    let mut color = 0;
    while !uncolored.is_clear() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.minimum() {
            avail.set(v, false);
            avail.difference_with(g.row(v));
            uncolored.set(v, false);
            order.push((v, color));
        }
    }
    order
}

fn max_expand(g: &AdjGraph, r: &mut Vec<usize>, mut p: FixedBitSet, best: &mut Vec<usize>) {
    let order = color_sort(g, &p);
    for &(v, color) in order.iter().rev() {
        if r.len() + color <= best.len() {
            return;
        }
        let mut p2 = p.clone();
        p2.intersect_with(g.row(v));
        r.push(v);
        if p2.is_clear() {
            if r.len() > best.len() {
                *best = r.clone();
            }
        } else {
            max_expand(g, r, p2, best);
        }
        r.pop();
        p.set(v, false);
    }
}

/// A maximum clique (sorted). Lexicographically first among those found.
pub fn maximum_clique(g: &AdjGraph) -> Vec<usize> {
    let mut p = FixedBitSet::with_capacity(g.len());
    p.insert_range(..);
    let mut best = Vec::new();
    max_expand(g, &mut Vec::new(), p, &mut best);
    best.sort_unstable();
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_maximal_cliques(g: &AdjGraph) -> Vec<Vec<usize>> {
        let n = g.len();
        let cliques: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| g.is_clique(s))
            .collect();
        let mut out: Vec<Vec<usize>> = cliques
            .iter()
            .filter(|s| !(0..n).any(|v| !s.contains(&v) && s.iter().all(|&u| g.has_edge(u, v))))
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn octahedral_ring_has_three_antipodal_independent_sets() {
        let g = AdjGraph::circulant(6, &[1, 2]);
        let mis = maximal_independent_sets(&g, 100).unwrap();
        assert_eq!(mis, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn edgeless_and_complete() {
        assert_eq!(
            maximal_independent_sets(&AdjGraph::empty(4), 10).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(
            maximal_independent_sets(&AdjGraph::complete(3), 10).unwrap(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = AdjGraph::empty(0).complement();
        assert_eq!(maximal_cliques(&g, 1).unwrap(), vec![Vec::<usize>::new()]);
        let err = maximal_independent_sets(&AdjGraph::complete(5), 3).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn agrees_with_brute_force() {
        for (n, offsets) in [(7, vec![1]), (8, vec![1, 3]), (9, vec![2, 4]), (5, vec![1])] {
            let g = AdjGraph::circulant(n, &offsets);
            assert_eq!(
                maximal_cliques(&g, 1000).unwrap(),
                brute_maximal_cliques(&g)
            );
            let c = g.complement();
            assert_eq!(
                maximal_cliques(&c, 1000).unwrap(),
                brute_maximal_cliques(&c)
            );
        }
    }

    #[test]
    fn maximum_clique_sizes() {
        assert_eq!(maximum_clique(&AdjGraph::complete(6)).len(), 6);
        assert_eq!(maximum_clique(&AdjGraph::cycle(5)).len(), 2);
        assert_eq!(maximum_clique(&AdjGraph::circulant(10, &[1, 2])).len(), 3);
        assert_eq!(maximum_clique(&AdjGraph::empty(3)).len(), 1);
        assert!(maximum_clique(&AdjGraph::empty(0)).is_empty());
    }
}
