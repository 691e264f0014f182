//! Demand vectors, schedules, and exact minimum schedule length.
//!
//! The minimum duration of a schedule satisfying `τ` is the weighted
//! fractional chromatic number `χ_f(G_c, τ)`: the optimum of
//! `min 1ᵀt s.t. Bt >= τ, t >= 0`, where the columns of `B` are the maximal
//! independent sets of the conflict graph. Only links with positive demand
//! take part in the program; independent sets of that induced subgraph are
//! independent in `G_c` as well.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};

use crate::caps::Caps;
use crate::cliques::{maximal_cliques, maximal_independent_sets as mis};
use crate::error::{Error, Result};
use crate::graph::{AdjGraph, ConflictGraph, Link, NetworkGraph};
use crate::lp::{LinearProgram, LpOutcome};
use crate::rational::Rational;

/// Per-link demand `τ(ℓ)`, the fraction of unit time link `ℓ` must be active.
/// Links absent from the map have demand zero; zero entries are not stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DemandVector {
    values: BTreeMap<Link, Rational>,
}

impl std::fmt::Debug for DemandVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.values.iter()).finish()
    }
}

impl Serialize for DemandVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (link, v) in &self.values {
            map.serialize_entry(&link.id(), v)?;
        }
        map.end()
    }
}

impl DemandVector {
    pub fn new() -> Self {
        DemandVector::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Link, Rational)>) -> Result<Self> {
        let mut tau = DemandVector::new();
        for (l, v) in pairs {
            tau.set(l, v)?;
        }
        Ok(tau)
    }

    /// Demand 1 on every listed link.
    pub fn indicator<'a>(links: impl IntoIterator<Item = &'a Link>) -> Self {
        Self::uniform(links, Rational::one())
    }

    pub fn uniform<'a>(links: impl IntoIterator<Item = &'a Link>, value: Rational) -> Self {
        let mut tau = DemandVector::new();
        for l in links {
            tau.set(l.clone(), value.clone())
                .expect("uniform value is nonnegative");
        }
        tau
    }

    pub fn set(&mut self, link: Link, value: Rational) -> Result<()> {
        if value.is_negative() {
            return Err(Error::input(format!(
                "negative demand {value} on link {link}"
            )));
        }
        if value.is_zero() {
            self.values.remove(&link);
        } else {
            self.values.insert(link, value);
        }
        Ok(())
    }

    pub fn get(&self, link: &Link) -> Rational {
        self.values.get(link).cloned().unwrap_or_default()
    }

    /// Links with positive demand and their values.
    pub fn support(&self) -> impl Iterator<Item = (&Link, &Rational)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> DemandVector {
        let mut out = DemandVector::new();
        for (l, v) in &self.values {
            out.set(l.clone(), v * c)
                .expect("scale factor must be nonnegative");
        }
        out
    }

    /// Restriction to the listed links.
    pub fn restricted(&self, links: &[Link]) -> DemandVector {
        DemandVector {
            values: links
                .iter()
                .filter_map(|l| self.values.get(l).map(|v| (l.clone(), v.clone())))
                .collect(),
        }
    }

    pub fn dense(&self, links: &[Link]) -> Vec<Rational> {
        links.iter().map(|l| self.get(l)).collect()
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &DemandVector) -> bool {
        self.values.iter().all(|(l, v)| *v <= other.get(l))
    }

    /// Fails when some demanded link is not among `links`.
    pub fn check_links(&self, links: &[Link]) -> Result<()> {
        match self.values.keys().find(|l| links.binary_search(l).is_err()) {
            Some(l) => Err(Error::input(format!("demand on unknown link {l}"))),
            None => Ok(()),
        }
    }

    /// Parses `{"a-b": "3/4", ...}` against the links of `g`.
    pub fn from_json(g: &NetworkGraph, text: &str) -> Result<Self> {
        let raw: HashMap<String, serde_json::Value> = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("malformed demand JSON: {e}")))?;
        let mut tau = DemandVector::new();
        for (id, value) in raw {
            let link = g
                .link_by_id(&id)
                .ok_or_else(|| Error::input(format!("demand names unknown link {id:?}")))?;
            let value: Rational = match value {
                serde_json::Value::String(s) => s.parse()?,
                serde_json::Value::Number(n) if n.is_u64() => {
                    Rational::integer(n.as_u64().unwrap() as i64)
                }
                other => {
                    return Err(Error::input(format!(
                        "demand for {id:?} must be a \"p/q\" string, got {other}"
                    )))
                }
            };
            tau.set(link.clone(), value)?;
        }
        Ok(tau)
    }
}

/// One schedule slot: an independent set of links active together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScheduleEntry {
    pub links: Vec<Link>,
    pub duration: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Schedule {
    pub entries: Vec<ScheduleEntry>,
}

impl Schedule {
    pub fn duration(&self) -> Rational {
        self.entries.iter().map(|e| &e.duration).sum()
    }

    /// Every link receives at least its demand.
    pub fn satisfies(&self, tau: &DemandVector) -> bool {
        tau.support().all(|(l, need)| {
            let got: Rational = self
                .entries
                .iter()
                .filter(|e| e.links.contains(l))
                .map(|e| &e.duration)
                .sum();
            got >= *need
        })
    }

    /// Every slot is an independent set of `gc` with nonnegative duration.
    pub fn is_valid_for(&self, gc: &ConflictGraph) -> bool {
        self.entries.iter().all(|e| {
            !e.duration.is_negative()
                && e.links.iter().all(|l| gc.index_of(l).is_some())
                && e.links.iter().enumerate().all(|(i, a)| {
                    e.links[i + 1..]
                        .iter()
                        .all(|b| a != b && !gc.interferes(a, b))
                })
        })
    }
}

/// Optimal fractional coloring of a vertex-weighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalColoring {
    pub value: Rational,
    /// Independent sets (vertex indices of the input graph) with their weights.
    pub classes: Vec<(Vec<usize>, Rational)>,
}

fn positive_support(w: &[Rational]) -> Vec<usize> {
    (0..w.len()).filter(|&i| w[i].is_positive()).collect()
}

/// `χ_f(g, w)` with an optimal coloring, by the covering LP over maximal
/// independent sets of the positive-weight subgraph.
pub fn weighted_chif(g: &AdjGraph, w: &[Rational], caps: &Caps) -> Result<FractionalColoring> {
    assert_eq!(g.len(), w.len());
    if w.iter().any(Rational::is_negative) {
        return Err(Error::input("negative vertex weight"));
    }
    let support = positive_support(w);
    if support.is_empty() {
        return Ok(FractionalColoring {
            value: Rational::zero(),
            classes: Vec::new(),
        });
    }
    let sub = g.induced(&support);
    let sets = mis(&sub, caps.max_sets)?;
    // max -1ᵀt  s.t.  -B t <= -w
    let a = (0..support.len())
        .map(|i| {
            sets.iter()
                .map(|s| {
                    if s.binary_search(&i).is_ok() {
                        Rational::integer(-1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let lp = LinearProgram {
        a,
        b: support.iter().map(|&v| -w[v].clone()).collect(),
        c: vec![Rational::integer(-1); sets.len()],
    };
    let LpOutcome::Optimal(sol) = lp.solve() else {
        unreachable!("covering LP with all-singleton coverage is feasible and bounded");
    };
    let classes = sets
        .iter()
        .zip(sol.x)
        .filter(|(_, t)| t.is_positive())
        .map(|(s, t)| (s.iter().map(|&i| support[i]).collect(), t))
        .collect();
    Ok(FractionalColoring {
        value: -sol.value,
        classes,
    })
}

/// `χ_f(g, w)` from the dual packing LP `max wᵀy s.t. y(I) <= 1 for every
/// maximal independent set I, y >= 0`, solved as a separate program.
/// Returns the value and an optimal `y` indexed like `w`.
pub fn weighted_chif_dual(
    g: &AdjGraph,
    w: &[Rational],
    caps: &Caps,
) -> Result<(Rational, Vec<Rational>)> {
    assert_eq!(g.len(), w.len());
    let support = positive_support(w);
    let mut y = vec![Rational::zero(); w.len()];
    if support.is_empty() {
        return Ok((Rational::zero(), y));
    }
    let sub = g.induced(&support);
    let sets = mis(&sub, caps.max_sets)?;
    let a = sets
        .iter()
        .map(|s| {
            (0..support.len())
                .map(|i| {
                    if s.binary_search(&i).is_ok() {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let lp = LinearProgram {
        a,
        b: vec![Rational::one(); sets.len()],
        c: support.iter().map(|&v| w[v].clone()).collect(),
    };
    let LpOutcome::Optimal(sol) = lp.solve() else {
        unreachable!("packing LP with nonnegative rhs is feasible and bounded");
    };
    for (i, &v) in support.iter().enumerate() {
        y[v] = sol.x[i].clone();
    }
    Ok((sol.value, y))
}

/// Maximum weight of a clique; the clique is returned as sorted vertex indices.
pub fn weighted_clique(
    g: &AdjGraph,
    w: &[Rational],
    caps: &Caps,
) -> Result<(Rational, Vec<usize>)> {
    let support = positive_support(w);
    if support.is_empty() {
        return Ok((Rational::zero(), Vec::new()));
    }
    let sub = g.induced(&support);
    let mut best = (Rational::zero(), Vec::new());
    for c in maximal_cliques(&sub, caps.max_sets)? {
        let weight: Rational = c.iter().map(|&i| &w[support[i]]).sum();
        if weight > best.0 {
            best = (weight, c.iter().map(|&i| support[i]).collect());
        }
    }
    Ok(best)
}

/// Maximal independent sets of `gc`, as link lists in canonical order.
pub fn maximal_independent_sets(gc: &ConflictGraph, caps: &Caps) -> Result<Vec<Vec<Link>>> {
    Ok(mis(gc.graph(), caps.max_sets)?
        .into_iter()
        .map(|s| s.into_iter().map(|i| gc.links()[i].clone()).collect())
        .collect())
}

fn dense_demands(gc: &ConflictGraph, tau: &DemandVector) -> Result<Vec<Rational>> {
    tau.check_links(gc.links())?;
    Ok(tau.dense(gc.links()))
}

/// `T*(τ) = χ_f(G_c, τ)`, the minimum duration of a schedule satisfying `τ`.
pub fn fractional_chromatic(
    gc: &ConflictGraph,
    tau: &DemandVector,
    caps: &Caps,
) -> Result<Rational> {
    if tau.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(weighted_chif(gc.graph(), &dense_demands(gc, tau)?, caps)?.value)
}

/// Optimal value of the dual packing program; equals [`fractional_chromatic`].
pub fn dual_fractional_chromatic(
    gc: &ConflictGraph,
    tau: &DemandVector,
    caps: &Caps,
) -> Result<Rational> {
    Ok(weighted_chif_dual(gc.graph(), &dense_demands(gc, tau)?, caps)?.0)
}

/// A minimum-duration schedule satisfying `τ`.
pub fn min_schedule(gc: &ConflictGraph, tau: &DemandVector, caps: &Caps) -> Result<Schedule> {
    if tau.is_zero() {
        return Ok(Schedule::default());
    }
    let coloring = weighted_chif(gc.graph(), &dense_demands(gc, tau)?, caps)?;
    let schedule = Schedule {
        entries: coloring
            .classes
            .into_iter()
            .map(|(set, duration)| ScheduleEntry {
                links: set.into_iter().map(|i| gc.links()[i].clone()).collect(),
                duration,
            })
            .collect(),
    };
    assert!(
        schedule.satisfies(tau) && schedule.duration() == coloring.value,
        "LP witness failed verification"
    );
    Ok(schedule)
}

/// `ω(G_c, τ)`: the heaviest set of pairwise-interfering links.
pub fn weighted_clique_number(
    gc: &ConflictGraph,
    tau: &DemandVector,
    caps: &Caps,
) -> Result<Rational> {
    Ok(weighted_clique(gc.graph(), &dense_demands(gc, tau)?, caps)?.0)
}

/// `τ` is feasible iff `χ_f(G_c, τ) <= 1`.
pub fn is_feasible(gc: &ConflictGraph, tau: &DemandVector, caps: &Caps) -> Result<bool> {
    Ok(fractional_chromatic(gc, tau, caps)? <= Rational::one())
}
