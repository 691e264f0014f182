//! Chordality with checkable certificates: a perfect elimination ordering,
//! or an induced cycle of length at least 4.

use serde::Serialize;

use crate::graph::{AdjGraph, ConflictGraph, NetworkGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "chordal", rename_all = "snake_case")]
pub enum Chordality {
    /// Vertices in elimination order: each vertex's later neighbors form a clique.
    Chordal { elimination_order: Vec<usize> },
    /// Vertices of an induced cycle, in cyclic order.
    NotChordal { hole: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub trait Adjacency {
    fn adjacency(&self) -> &AdjGraph;
}

impl Adjacency for AdjGraph {
    fn adjacency(&self) -> &AdjGraph {
        self
    }
}

impl Adjacency for NetworkGraph {
    fn adjacency(&self) -> &AdjGraph {
        NetworkGraph::adjacency(self)
    }
}

impl Adjacency for ConflictGraph {
    fn adjacency(&self) -> &AdjGraph {
        self.graph()
    }
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination ordering whenever the graph is chordal.
fn mcs_order(g: &AdjGraph) -> Vec<usize> {
    let n = g.len();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

pub fn verify_elimination_order(g: &AdjGraph, order: &[usize]) -> bool {
    let n = g.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return false;
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        g.is_clique(&later)
    })
}

/// `cycle` lists distinct vertices of an induced (chordless) cycle of length >= 4.
pub fn verify_hole(g: &AdjGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != k || seen.iter().any(|&v| v >= g.len()) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Finds a chordless cycle of length >= 4 through some vertex `v` and two
/// non-adjacent neighbors `a`, `b`: a shortest `a`–`b` path avoiding the
/// rest of `N[v]` closes one.
fn find_hole(g: &AdjGraph) -> Option<Vec<usize>> {
    let n = g.len();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let blocked = |u: usize| u == v || (u != a && u != b && g.has_edge(v, u));
                let mut prev = vec![usize::MAX; n];
                prev[a] = a;
                let mut queue = std::collections::VecDeque::from([a]);
                while let Some(u) = queue.pop_front() {
                    if u == b {
                        break;
                    }
                    for w in g.neighbors(u) {
                        if prev[w] == usize::MAX && !blocked(w) {
                            prev[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if prev[b] != usize::MAX {
                    let mut cycle = vec![v];
                    let mut path = vec![b];
                    while *path.last().unwrap() != a {
                        path.push(prev[*path.last().unwrap()]);
                    }
                    path.reverse();
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn chordality<G: Adjacency + ?Sized>(graph: &G) -> Chordality {
    let g = graph.adjacency();
    let order = mcs_order(g);
    if verify_elimination_order(g, &order) {
        Chordality::Chordal {
            elimination_order: order,
        }
    } else {
        let hole = find_hole(g).expect("a non-chordal graph has a hole");
        debug_assert!(verify_hole(g, &hole));
        Chordality::NotChordal { hole }
    }
}

pub fn is_chordal<G: Adjacency + ?Sized>(graph: &G) -> bool {
    chordality(graph).is_chordal()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_is_its_own_hole() {
        let g = AdjGraph::cycle(4);
        let Chordality::NotChordal { hole } = chordality(&g) else {
            panic!()
        };
        assert!(verify_hole(&g, &hole));
        assert_eq!(hole.len(), 4);
    }

    #[test]
    fn trees_and_cliques_are_chordal() {
        let tree = AdjGraph::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]);
        let c = chordality(&tree);
        let Chordality::Chordal { elimination_order } = &c else {
            panic!()
        };
        assert!(verify_elimination_order(&tree, elimination_order));
        assert!(is_chordal(&AdjGraph::complete(5)));
        assert!(is_chordal(&AdjGraph::empty(3)));
    }

    #[test]
    fn long_holes_found() {
        for n in 4..10 {
            let g = AdjGraph::cycle(n);
            let Chordality::NotChordal { hole } = chordality(&g) else {
                panic!()
            };
            assert_eq!(hole.len(), n);
        }
        // ring-square on 8 vertices: holes of length 4 exist (0,2,4,6)
        let g = AdjGraph::circulant(8, &[1, 2]);
        let Chordality::NotChordal { hole } = chordality(&g) else {
            panic!()
        };
        assert!(verify_hole(&g, &hole));
    }

    #[test]
    fn certificate_checkers_reject_bad_input() {
        let g = AdjGraph::complete(4);
        assert!(!verify_hole(&g, &[0, 1, 2, 3]));
        assert!(!verify_elimination_order(&g, &[0, 1, 2]));
        let c4 = AdjGraph::cycle(4);
        assert!(!verify_elimination_order(&c4, &[0, 1, 2, 3]));
    }
}
