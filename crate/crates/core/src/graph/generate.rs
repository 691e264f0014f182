//! Generators for the graph families used throughout the analysis.
//!
//! Node naming: rings, complete graphs, paths and circulants use `v1..vn`;
//! `clique_pendant(r)` uses clique nodes `x1..xr` with pendant partners
//! `y1..yr`; `star(m)` uses hub `h` and leaves `s1..sm`.

use rand::seq::SliceRandom;
use rand::Rng;
use std::fmt;
use std::str::FromStr;

use super::{Link, NetworkGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    CliquePendant(usize),
    Star(usize),
    Path(usize),
    Circulant(usize, Vec<usize>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CliquePendant(r) => write!(f, "clique_pendant:{r}"),
            Family::Star(m) => write!(f, "star:{m}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Circulant(n, s) => {
                let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "circulant:{n}:{}", s.join(","))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the `name:arg[:arg...]` shorthand, e.g. `cycle:10` or `circulant:10:1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| -> Result<usize> {
            t.trim()
                .parse()
                .map_err(|_| Error::input(format!("bad generator argument {t:?} in {s:?}")))
        };
        let one = || -> Result<usize> {
            match parts.as_slice() {
                [_, a] => num(a),
                _ => Err(Error::input(format!(
                    "generator {s:?} takes exactly one argument"
                ))),
            }
        };
        match parts[0] {
            "cycle" => Ok(Family::Cycle(one()?)),
            "complete" => Ok(Family::Complete(one()?)),
            "clique_pendant" => Ok(Family::CliquePendant(one()?)),
            "star" => Ok(Family::Star(one()?)),
            "path" => Ok(Family::Path(one()?)),
            "circulant" => match parts.as_slice() {
                [_, n, set] => Ok(Family::Circulant(
                    num(n)?,
                    set.split(',').map(num).collect::<Result<_>>()?,
                )),
                _ => Err(Error::input(format!(
                    "generator {s:?}: expected circulant:<n>:<s1,s2,...>"
                ))),
            },
            other => Err(Error::input(format!("unknown generator {other:?}"))),
        }
    }
}

fn v(i: usize) -> String {
    format!("v{i}")
}

pub fn generate(family: &Family) -> Result<NetworkGraph> {
    let range = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::input(format!("{family}: {what}")))
        }
    };
    match *family {
        Family::Cycle(n) => {
            range(n >= 3, "cycle needs n >= 3")?;
            NetworkGraph::build((1..=n).map(v), (1..=n).map(|i| (v(i), v(i % n + 1))))
        }
        Family::Complete(n) => {
            range(n >= 1, "complete graph needs n >= 1")?;
            NetworkGraph::build(
                (1..=n).map(v),
                (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (v(i), v(j)))),
            )
        }
        Family::CliquePendant(r) => {
            range(r >= 1, "clique_pendant needs r >= 1")?;
            let x = |i: usize| format!("x{i}");
            let y = |i: usize| format!("y{i}");
            let nodes = (1..=r).map(x).chain((1..=r).map(y));
            let clique = (1..=r).flat_map(|i| (i + 1..=r).map(move |j| (x(i), x(j))));
            let pendants = (1..=r).map(|i| (x(i), y(i)));
            NetworkGraph::build(nodes, clique.chain(pendants))
        }
        Family::Star(m) => {
            range(m >= 1, "star needs m >= 1")?;
            let leaf = |i: usize| format!("s{i}");
            NetworkGraph::build(
                std::iter::once("h".to_string()).chain((1..=m).map(leaf)),
                (1..=m).map(|i| ("h".to_string(), leaf(i))),
            )
        }
        Family::Path(n) => {
            range(n >= 1, "path needs n >= 1")?;
            NetworkGraph::build((1..=n).map(v), (1..n).map(|i| (v(i), v(i + 1))))
        }
        Family::Circulant(n, ref set) => {
            range(n >= 1, "circulant needs n >= 1")?;
            range(
                set.iter().all(|&s| s >= 1 && s <= n / 2),
                "connection offsets must lie in 1..=n/2",
            )?;
            let edges =
                (0..n).flat_map(|i| set.iter().map(move |&s| (v(i + 1), v((i + s) % n + 1))));
            NetworkGraph::build((1..=n).map(v), edges)
        }
    }
}

/// Ring links `ℓ_1, ..., ℓ_n` of `cycle(n)` in cyclic order, `ℓ_i = {v_i, v_{i+1}}`.
pub fn cycle_links(n: usize) -> Vec<Link> {
    (1..=n)
        .map(|i| Link::new(v(i), v(i % n + 1)).expect("n >= 2"))
        .collect()
}

/// Pendant links `{x_i, y_i}` of `clique_pendant(r)`.
pub fn pendant_links(r: usize) -> Vec<Link> {
    (1..=r)
        .map(|i| Link::new(format!("x{i}"), format!("y{i}")).unwrap())
        .collect()
}

/// Random connected graph on `n` nodes `v1..vn` with at most `max_links`
/// links: a random spanning tree plus random extra edges.
pub fn random_connected<R: Rng>(n: usize, max_links: usize, rng: &mut R) -> NetworkGraph {
    assert!(
        n >= 1 && max_links + 1 >= n,
        "a spanning tree needs n - 1 links"
    );
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        edges.push((order[i].min(parent), order[i].max(parent)));
    }
    let mut missing: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    let budget = max_links.min(n * (n - 1) / 2) - edges.len();
    let extra = rng.random_range(0..=budget);
    edges.extend(missing.into_iter().take(extra));
    NetworkGraph::build((1..=n).map(v), edges.into_iter().map(|(a, b)| (v(a), v(b))))
        .expect("generated edges are valid")
}
