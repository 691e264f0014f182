use serde::{Deserialize, Serialize};

/// Enumeration and search limits. Exceeding any of them aborts with
/// [`Error::Resource`](crate::Error::Resource) instead of returning a partial answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximal independent sets / maximal cliques per enumeration.
    pub max_sets: usize,
    /// Largest link count accepted by the exactly-1-separated matching search.
    pub max_matching_links: usize,
    /// Largest conflict graph handed to stable-set polytope enumeration.
    pub max_polytope_vertices: usize,
    /// Intermediate ray count allowed during double description.
    pub max_polytope_rays: usize,
    /// Cycles examined while searching for uncovered rings.
    pub max_cycles: usize,
    /// Branch-and-bound nodes in exact set cover.
    pub max_cover_nodes: usize,
    /// Largest conflict graph on which every 0/1 demand vector is tried.
    pub max_exhaustive_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_sets: 1_000_000,
            max_matching_links: 64,
            max_polytope_vertices: 12,
            max_polytope_rays: 250_000,
            max_cycles: 2_000_000,
            max_cover_nodes: 5_000_000,
            max_exhaustive_vertices: 12,
        }
    }
}
