use super::{AdjGraph, Distance, Link, NetworkGraph};
use crate::error::{Error, Result};

/// Conflict graph `L_k(G)`: one vertex per link, adjacent when the links'
/// distance in `G` is below `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    links: Vec<Link>,
    adj: AdjGraph,
    k: usize,
}

pub fn conflict_graph(g: &NetworkGraph, k: usize) -> Result<ConflictGraph> {
    if k == 0 {
        return Err(Error::input("interference range k must be >= 1"));
    }
    let dist = g.link_distance_matrix();
    let m = g.link_count();
    let mut adj = AdjGraph::empty(m);
    for i in 0..m {
        for j in i + 1..m {
            if dist[i][j] < Distance::Finite(k) {
                adj.add_edge(i, j);
            }
        }
    }
    Ok(ConflictGraph {
        links: g.links().to_vec(),
        adj,
        k,
    })
}

impl ConflictGraph {
    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn graph(&self) -> &AdjGraph {
        &self.adj
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn index_of(&self, link: &Link) -> Option<usize> {
        self.links.binary_search(link).ok()
    }

    pub fn interferes(&self, a: &Link, b: &Link) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adj.has_edge(i, j),
            _ => false,
        }
    }

    /// Conflict graph induced on the listed vertex indices (kept in canonical order).
    pub fn induced(&self, keep: &[usize]) -> ConflictGraph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        ConflictGraph {
            links: keep.iter().map(|&i| self.links[i].clone()).collect(),
            adj: self.adj.induced(&keep),
            k: self.k,
        }
    }

    /// `G_c` minus the given links.
    pub fn without(&self, remove: &[Link]) -> ConflictGraph {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| !remove.contains(&self.links[i]))
            .collect();
        self.induced(&keep)
    }
}
