//! Network graphs, links, link distances and 1-hop neighborhoods.

mod adj;
mod conflict;
pub mod generate;

pub use adj::AdjGraph;
pub use conflict::{conflict_graph, ConflictGraph};
pub use generate::{generate, Family};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// A wireless link: an unordered pair of distinct node ids, stored with the
/// lexicographically smaller endpoint first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    a: String,
    b: String,
}

impl Link {
    pub fn new(x: impl Into<String>, y: impl Into<String>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(Link { a: x, b: y }),
            std::cmp::Ordering::Greater => Ok(Link { a: y, b: x }),
            std::cmp::Ordering::Equal => Err(Error::input(format!("self-loop on node {x:?}"))),
        }
    }

    pub fn endpoints(&self) -> (&str, &str) {
        (&self.a, &self.b)
    }

    pub fn touches(&self, node: &str) -> bool {
        self.a == node || self.b == node
    }

    /// `"a-b"` form used in demand files and reports.
    pub fn id(&self) -> String {
        format!("{}-{}", self.a, self.b)
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Debug for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl Serialize for Link {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Hop distance that may be infinite across components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl From<Option<usize>> for Distance {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Distance::Infinite, Distance::Finite)
    }
}

/// Simple undirected graph `G = (V, L)` with opaque string node ids.
///
/// Nodes and links are kept in sorted order, so indices are stable for a
/// given vertex and edge set regardless of input order.
#[derive(Clone)]
pub struct NetworkGraph {
    nodes: Vec<String>,
    node_index: HashMap<String, usize>,
    adj: AdjGraph,
    links: Vec<Link>,
    link_ends: Vec<(usize, usize)>,
    link_index: HashMap<Link, usize>,
}

impl fmt::Debug for NetworkGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NetworkGraph")
            .field("nodes", &self.nodes)
            .field("links", &self.links)
            .finish()
    }
}

impl PartialEq for NetworkGraph {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.links == other.links
    }
}

impl Eq for NetworkGraph {}

impl NetworkGraph {
    /// Builds a graph. Duplicate vertices and duplicate (or reversed) edges
    /// collapse; self-loops and undeclared endpoints are rejected.
    pub fn build<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let nodes: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        let mut links = BTreeSet::new();
        for (x, y) in edges {
            let link = Link::new(x, y)?;
            for end in [&link.a, &link.b] {
                if !nodes.contains(end) {
                    return Err(Error::input(format!(
                        "edge {link} uses undeclared node {end:?}"
                    )));
                }
            }
            links.insert(link);
        }
        Ok(Self::from_sorted(
            nodes.into_iter().collect(),
            links.into_iter().collect(),
        ))
    }

    fn from_sorted(nodes: Vec<String>, links: Vec<Link>) -> Self {
        let node_index: HashMap<String, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adj = AdjGraph::empty(nodes.len());
        let link_ends: Vec<(usize, usize)> = links
            .iter()
            .map(|l| (node_index[&l.a], node_index[&l.b]))
            .collect();
        for &(u, v) in &link_ends {
            adj.add_edge(u, v);
        }
        let link_index = links
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        NetworkGraph {
            nodes,
            node_index,
            adj,
            links,
            link_ends,
            link_index,
        }
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn adjacency(&self) -> &AdjGraph {
        &self.adj
    }

    pub fn node_id(&self, name: &str) -> Option<usize> {
        self.node_index.get(name).copied()
    }

    pub fn link_id(&self, link: &Link) -> Option<usize> {
        self.link_index.get(link).copied()
    }

    /// Endpoint node indices of link `i`.
    pub fn link_ends(&self, i: usize) -> (usize, usize) {
        self.link_ends[i]
    }

    /// Looks up a link by its `"a-b"` id (either endpoint order).
    pub fn link_by_id(&self, id: &str) -> Option<&Link> {
        // node names may themselves contain '-', so try every split point
        id.match_indices('-').find_map(|(pos, _)| {
            let link = Link::new(&id[..pos], &id[pos + 1..]).ok()?;
            self.link_index.get(&link).map(|&i| &self.links[i])
        })
    }

    pub fn neighbors(&self, node: &str) -> Result<Vec<&str>> {
        let v = self.require_node(node)?;
        Ok(self
            .adj
            .neighbors(v)
            .map(|u| self.nodes[u].as_str())
            .collect())
    }

    /// Links incident to `node`, in canonical order.
    pub fn incident_links(&self, node: &str) -> Result<Vec<&Link>> {
        self.require_node(node)?;
        Ok(self.links.iter().filter(|l| l.touches(node)).collect())
    }

    fn require_node(&self, node: &str) -> Result<usize> {
        self.node_id(node)
            .ok_or_else(|| Error::input(format!("unknown node {node:?}")))
    }

    fn require_link(&self, link: &Link) -> Result<usize> {
        self.link_id(link)
            .ok_or_else(|| Error::input(format!("{link} is not a link of the graph")))
    }

    /// All-pairs hop distances by repeated BFS.
    pub fn node_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.node_count()).map(|s| self.adj.bfs(s)).collect()
    }

    /// Minimum hop distance between an endpoint of `e` and an endpoint of `f`.
    pub fn link_distance(&self, e: &Link, f: &Link) -> Result<Distance> {
        let (ie, jf) = (self.require_link(e)?, self.require_link(f)?);
        let (u, v) = self.link_ends[ie];
        let (x, y) = self.link_ends[jf];
        let du = self.adj.bfs(u);
        let dv = self.adj.bfs(v);
        Ok([du[x], du[y], dv[x], dv[y]]
            .into_iter()
            .flatten()
            .min()
            .into())
    }

    /// Link distance matrix over link indices, computed from one all-pairs table.
    pub fn link_distance_matrix(&self) -> Vec<Vec<Distance>> {
        let d = self.node_distances();
        let m = self.link_count();
        let mut out = vec![vec![Distance::Infinite; m]; m];
        for i in 0..m {
            let (u, v) = self.link_ends[i];
            for j in i..m {
                let (x, y) = self.link_ends[j];
                let dist: Distance = [d[u][x], d[u][y], d[v][x], d[v][y]]
                    .into_iter()
                    .flatten()
                    .min()
                    .into();
                out[i][j] = dist;
                out[j][i] = dist;
            }
        }
        out
    }

    /// Subgraph induced by the given node indices.
    pub fn induced_by_indices(&self, keep: &[usize]) -> NetworkGraph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let inside: BTreeSet<usize> = keep.iter().copied().collect();
        let nodes = keep.iter().map(|&i| self.nodes[i].clone()).collect();
        let links = self
            .links
            .iter()
            .zip(&self.link_ends)
            .filter(|(_, (u, v))| inside.contains(u) && inside.contains(v))
            .map(|(l, _)| l.clone())
            .collect();
        NetworkGraph::from_sorted(nodes, links)
    }

    /// Closed neighborhood `{v} ∪ Γ(v)` as node indices.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut ball: Vec<usize> = std::iter::once(v).chain(self.adj.neighbors(v)).collect();
        ball.sort_unstable();
        ball
    }

    /// `G_v`: the subgraph induced by `node` and its neighbors.
    pub fn one_hop_subgraph(&self, node: &str) -> Result<NetworkGraph> {
        let v = self.require_node(node)?;
        Ok(self.induced_by_indices(&self.closed_neighborhood(v)))
    }

    /// Link indices (into `self.links()`) of `G_v` for node index `v`.
    pub fn one_hop_link_ids(&self, v: usize) -> Vec<usize> {
        let ball = self.adj.row(v);
        self.link_ends
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| (a == v || ball.contains(a)) && (b == v || ball.contains(b)))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.adj.components().len() <= 1
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.nodes.clone(),
            edges: self
                .links
                .iter()
                .map(|l| [l.a.clone(), l.b.clone()])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        NetworkGraph::build(
            json.vertices.iter().cloned(),
            json.edges.iter().map(|[a, b]| (a.clone(), b.clone())),
        )
    }
}

impl Serialize for NetworkGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Wire form: `{"vertices": [...], "edges": [["a","b"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Convenience map from link to value, ordered canonically.
pub type LinkMap<T> = BTreeMap<Link, T>;
