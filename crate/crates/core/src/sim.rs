//! Round-based simulation of distance-1 admission control.
//!
//! Round 0: every node knows its incident links and their demands.
//! Round 1: every node sends that list to each neighbor. A node's view of
//! `G_v` is then rebuilt from what it received, and it admits iff
//! `T*(G_v, τ)` is at most the threshold. The network admits iff all nodes do.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{conflict_graph, Link, NetworkGraph};
use crate::perf::{admission_threshold, random_demand, t1_star};
use crate::rational::Rational;
use crate::schedule::{fractional_chromatic, DemandVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Admit,
    Reject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    TrueAdmit,
    TrueReject,
    FalseReject,
    FalseAdmit,
}

impl Classification {
    pub fn of(decision: Decision, feasible: bool) -> Self {
        match (decision, feasible) {
            (Decision::Admit, true) => Classification::TrueAdmit,
            (Decision::Reject, false) => Classification::TrueReject,
            (Decision::Reject, true) => Classification::FalseReject,
            (Decision::Admit, false) => Classification::FalseAdmit,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::TrueAdmit => "true-admit",
            Classification::TrueReject => "true-reject",
            Classification::FalseReject => "false-reject",
            Classification::FalseAdmit => "false-admit",
        }
    }
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Admit => "admit",
            Decision::Reject => "reject",
        }
    }
}

/// A link and its demand as carried in a message.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub link: Link,
    pub demand: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Message {
    pub round: usize,
    pub sender: String,
    pub receiver: String,
    pub links: Vec<LinkReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeView {
    pub center: String,
    pub subgraph: NetworkGraph,
    pub local_demands: DemandVector,
    pub local_value: Rational,
    pub decision: Decision,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimTrace {
    pub threshold: Rational,
    pub rounds: Vec<Message>,
    pub views: Vec<NodeView>,
    pub local_max: Rational,
    pub global_decision: Decision,
    pub oracle_chif: Rational,
    pub oracle_feasible: bool,
    pub classification: Classification,
}

/// What a node knows at round 0.
fn incident_reports(g: &NetworkGraph, tau: &DemandVector, node: &str) -> Result<Vec<LinkReport>> {
    Ok(g.incident_links(node)?
        .into_iter()
        .map(|l| LinkReport {
            link: l.clone(),
            demand: tau.get(l),
        })
        .collect())
}

/// Rebuild `G_v` from the center's own links and the lists received in round 1.
fn view_from_messages(
    center: &str,
    own: &[LinkReport],
    inbox: &[&Message],
) -> Result<(NetworkGraph, DemandVector)> {
    let mut ball: BTreeSet<&str> = BTreeSet::from([center]);
    ball.extend(inbox.iter().map(|m| m.sender.as_str()));
    let mut known: BTreeMap<&Link, &Rational> = BTreeMap::new();
    for r in own.iter().chain(inbox.iter().flat_map(|m| m.links.iter())) {
        known.insert(&r.link, &r.demand);
    }
    let inside: Vec<(&Link, &Rational)> = known
        .into_iter()
        .filter(|(l, _)| {
            let (a, b) = l.endpoints();
            ball.contains(a) && ball.contains(b)
        })
        .collect();
    let sub = NetworkGraph::build(
        ball.iter().map(|s| s.to_string()),
        inside.iter().map(|(l, _)| {
            let (a, b) = l.endpoints();
            (a.to_string(), b.to_string())
        }),
    )?;
    let demands =
        DemandVector::from_pairs(inside.into_iter().map(|(l, d)| (l.clone(), d.clone())))?;
    Ok((sub, demands))
}

/// One admission decision with the full message log.
pub fn run_admission(
    g: &NetworkGraph,
    tau: &DemandVector,
    threshold: &Rational,
    caps: &Caps,
) -> Result<SimTrace> {
    if !threshold.is_positive() {
        return Err(Error::input("threshold must be positive"));
    }
    tau.check_links(g.links())?;

    let round0: Vec<Vec<LinkReport>> = g
        .nodes()
        .iter()
        .map(|v| incident_reports(g, tau, v))
        .collect::<Result<_>>()?;
    let mut rounds = Vec::new();
    for (i, v) in g.nodes().iter().enumerate() {
        for w in g.neighbors(v)? {
            rounds.push(Message {
                round: 1,
                sender: v.clone(),
                receiver: w.to_string(),
                links: round0[i].clone(),
            });
        }
    }

    let views: Vec<NodeView> = g
        .nodes()
        .par_iter()
        .enumerate()
        .map(|(i, v)| {
            let inbox: Vec<&Message> = rounds.iter().filter(|m| &m.receiver == v).collect();
            let (subgraph, local_demands) = view_from_messages(v, &round0[i], &inbox)?;
            let local_value = if local_demands.is_zero() {
                Rational::zero()
            } else {
                fractional_chromatic(&conflict_graph(&subgraph, 2)?, &local_demands, caps)?
            };
            let decision = if local_value <= *threshold {
                Decision::Admit
            } else {
                Decision::Reject
            };
            Ok(NodeView {
                center: v.clone(),
                subgraph,
                local_demands,
                local_value,
                decision,
            })
        })
        .collect::<Result<_>>()?;

    let local_max = views
        .iter()
        .map(|v| v.local_value.clone())
        .max()
        .unwrap_or_default();
    let global_decision = if views.iter().all(|v| v.decision == Decision::Admit) {
        Decision::Admit
    } else {
        Decision::Reject
    };
    let oracle_chif = fractional_chromatic(&conflict_graph(g, 2)?, tau, caps)?;
    let oracle_feasible = oracle_chif <= Rational::one();
    Ok(SimTrace {
        threshold: threshold.clone(),
        rounds,
        views,
        local_max,
        global_decision,
        oracle_chif,
        oracle_feasible,
        classification: Classification::of(global_decision, oracle_feasible),
    })
}

/// How the per-node threshold is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Policy {
    /// `1 / (imp(L_2(G)) · λ(G))`.
    Certified,
    /// `1 / B` for a user-supplied `B`.
    User(Rational),
    /// Replace the local test by the centralized `χ_f <= 1` check.
    OracleExact,
}

impl Policy {
    pub fn name(&self) -> String {
        match self {
            Policy::Certified => "certified".into(),
            Policy::User(b) => format!("user:{b}"),
            Policy::OracleExact => "oracle-exact".into(),
        }
    }
}

/// Demand vector generators. Every sample gets its own seed, drawn up front
/// from the master seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sampler {
    /// Each link gets `p/q` with `q <= max_denominator`, `0 <= p <= q`.
    Uniform { max_denominator: i64 },
    /// Sample `i` is `factors[i mod len] · base`.
    Scaled {
        base: DemandVector,
        factors: Vec<Rational>,
    },
    /// A uniform sample rescaled so that `T₁*` equals `level · threshold`,
    /// with `level` cycling through `levels`.
    Boundary {
        max_denominator: i64,
        levels: Vec<Rational>,
    },
}

impl Sampler {
    fn draw(
        &self,
        g: &NetworkGraph,
        index: usize,
        seed: u64,
        threshold: &Rational,
        caps: &Caps,
    ) -> Result<DemandVector> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut nonzero = |max_den: i64| loop {
            let tau = random_demand(g.links(), max_den, &mut rng);
            if !tau.is_zero() || g.link_count() == 0 {
                return tau;
            }
        };
        match self {
            Sampler::Uniform { max_denominator } => Ok(nonzero(*max_denominator)),
            Sampler::Scaled { base, factors } => {
                if factors.is_empty() {
                    return Err(Error::input("scaled sampler needs at least one factor"));
                }
                Ok(base.scaled(&factors[index % factors.len()]))
            }
            Sampler::Boundary {
                max_denominator,
                levels,
            } => {
                if levels.is_empty() {
                    return Err(Error::input("boundary sampler needs at least one level"));
                }
                let tau = nonzero(*max_denominator);
                let local = t1_star(g, &tau, caps)?;
                if local.is_zero() {
                    return Ok(tau);
                }
                let target = threshold * &levels[index % levels.len()];
                Ok(tau.scaled(&(target / local)))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub sample_id: usize,
    pub seed: u64,
    pub local_max: Rational,
    pub oracle_chif: Rational,
    pub decision: Decision,
    pub classification: Classification,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub true_admit: usize,
    pub true_reject: usize,
    pub false_reject: usize,
    pub false_admit: usize,
}

impl ClassCounts {
    fn add(&mut self, c: Classification) {
        match c {
            Classification::TrueAdmit => self.true_admit += 1,
            Classification::TrueReject => self.true_reject += 1,
            Classification::FalseReject => self.false_reject += 1,
            Classification::FalseAdmit => self.false_admit += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolicyMetrics {
    pub policy: String,
    /// `None` under the oracle policy.
    pub threshold: Option<Rational>,
    pub seed: u64,
    pub counts: ClassCounts,
    /// False rejects over feasible samples; `None` when no sample is feasible.
    pub false_reject_rate: Option<Rational>,
    pub samples: Vec<SampleRecord>,
}

/// Run `samples` sampled demand vectors through the admission test.
pub fn evaluate_policy(
    g: &NetworkGraph,
    sampler: &Sampler,
    policy: &Policy,
    seed: u64,
    samples: usize,
    caps: &Caps,
) -> Result<PolicyMetrics> {
    let threshold = match policy {
        Policy::Certified => Some(admission_threshold(g, caps)?.value),
        Policy::User(b) => {
            if !b.is_positive() {
                return Err(Error::input("B must be positive"));
            }
            Some(b.recip())
        }
        Policy::OracleExact => None,
    };
    let scale = threshold.clone().unwrap_or_else(Rational::one);
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..samples).map(|_| master.next_u64()).collect();
    let gc = conflict_graph(g, 2)?;

    let records: Vec<SampleRecord> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let tau = sampler.draw(g, i, s, &scale, caps)?;
            let local_max = t1_star(g, &tau, caps)?;
            let oracle_chif = fractional_chromatic(&gc, &tau, caps)?;
            let feasible = oracle_chif <= Rational::one();
            let admit = match &threshold {
                Some(t) => local_max <= *t,
                None => feasible,
            };
            let decision = if admit {
                Decision::Admit
            } else {
                Decision::Reject
            };
            Ok(SampleRecord {
                sample_id: i,
                seed: s,
                local_max,
                oracle_chif,
                decision,
                classification: Classification::of(decision, feasible),
            })
        })
        .collect::<Result<_>>()?;

    let mut counts = ClassCounts::default();
    for r in &records {
        counts.add(r.classification);
    }
    let feasible = counts.true_admit + counts.false_reject;
    let false_reject_rate =
        (feasible > 0).then(|| Rational::new(counts.false_reject as i64, feasible as i64));
    Ok(PolicyMetrics {
        policy: policy.name(),
        threshold,
        seed,
        counts,
        false_reject_rate,
        samples: records,
    })
}

/// Per-sample CSV: `sample_id,seed,local_max,oracle_chif,decision,classification`.
pub fn write_metrics_csv<W: Write>(metrics: &PolicyMetrics, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Input(format!("csv output: {e}"));
    w.write_record([
        "sample_id",
        "seed",
        "local_max",
        "oracle_chif",
        "decision",
        "classification",
    ])
    .map_err(io)?;
    for r in &metrics.samples {
        w.write_record([
            r.sample_id.to_string(),
            r.seed.to_string(),
            r.local_max.to_string(),
            r.oracle_chif.to_string(),
            r.decision.as_str().to_string(),
            r.classification.as_str().to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::Input(format!("csv output: {e}")))?;
    Ok(())
}
