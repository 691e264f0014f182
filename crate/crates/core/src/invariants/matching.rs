//! Exactly-1-separated matchings: link sets whose pairwise distance is exactly 1.

use crate::caps::Caps;
use crate::cliques::maximum_clique;
use crate::error::{Error, Result};
use crate::graph::{AdjGraph, Distance, Link, NetworkGraph};

/// Links joined when their distance in `g` is exactly 1. Cliques of this
/// graph are exactly the exactly-1-separated matchings.
pub fn exactly_one_graph(g: &NetworkGraph) -> AdjGraph {
    let d = g.link_distance_matrix();
    let m = g.link_count();
    let mut h = AdjGraph::empty(m);
    for i in 0..m {
        for j in i + 1..m {
            if d[i][j] == Distance::Finite(1) {
                h.add_edge(i, j);
            }
        }
    }
    h
}

pub fn is_exactly_one_separated(g: &NetworkGraph, links: &[Link]) -> Result<bool> {
    for (i, a) in links.iter().enumerate() {
        for b in &links[i + 1..] {
            if g.link_distance(a, b)? != Distance::Finite(1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ν(g)` with a maximum exactly-1-separated matching as witness.
pub fn nu(g: &NetworkGraph, caps: &Caps) -> Result<(usize, Vec<Link>)> {
    if g.link_count() > caps.max_matching_links {
        return Err(Error::Resource {
            what: "exactly-1-separated matching search (links)",
            cap: caps.max_matching_links,
        });
    }
    let best = maximum_clique(&exactly_one_graph(g));
    let witness: Vec<Link> = best.iter().map(|&i| g.links()[i].clone()).collect();
    Ok((witness.len(), witness))
}

/// `max_v ν(G_v)` and a node attaining it (`None` for an empty graph).
pub fn nu_neighborhood_max(g: &NetworkGraph, caps: &Caps) -> Result<(usize, Option<String>)> {
    let mut best = (0, None);
    for node in g.nodes() {
        let (k, _) = nu(&g.one_hop_subgraph(node)?, caps)?;
        if best.1.is_none() || k > best.0 {
            best = (k, Some(node.clone()));
        }
    }
    Ok(best)
}
