//! Performance of the distance-1 distributed test.
//!
//! `T₁*(τ) = max_v T*(G_v, τ)` is what nodes can compute from their 1-hop
//! neighborhoods; `β(G) = sup_τ T*(τ) / T₁*(τ)` is the worst-case factor by
//! which it underestimates the centralized optimum. `β` is reported as a
//! certified interval: the lower end is the ratio of an explicit demand
//! vector (replayable), the upper end is `imp(L_2(G)) · λ(G)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{conflict_graph, generate, ConflictGraph, Family, Link, NetworkGraph};
use crate::invariants::{imp_upper_bound, lambda, nu, nu_neighborhood_max, ImpCertificate};
use crate::rational::Rational;
use crate::schedule::{fractional_chromatic, DemandVector};

/// `T*(G_v, τ)` for node `v`, with interference evaluated inside `G_v`.
pub fn local_value(
    g: &NetworkGraph,
    node: &str,
    tau: &DemandVector,
    caps: &Caps,
) -> Result<Rational> {
    let gv = g.one_hop_subgraph(node)?;
    let local = tau.restricted(gv.links());
    if local.is_zero() {
        return Ok(Rational::zero());
    }
    fractional_chromatic(&conflict_graph(&gv, 2)?, &local, caps)
}

/// `T₁*(τ) = max_v T*(G_v, τ)`.
pub fn t1_star(g: &NetworkGraph, tau: &DemandVector, caps: &Caps) -> Result<Rational> {
    tau.check_links(g.links())?;
    let values: Vec<Rational> = g
        .nodes()
        .par_iter()
        .map(|node| local_value(g, node, tau, caps))
        .collect::<Result<_>>()?;
    Ok(values.into_iter().max().unwrap_or_default())
}

/// `T*(τ) / T₁*(τ)`, a certified lower bound on `β(g)`.
pub fn beta_ratio(g: &NetworkGraph, tau: &DemandVector, caps: &Caps) -> Result<Rational> {
    if tau.is_zero() {
        return Err(Error::input("beta ratio needs a nonzero demand vector"));
    }
    let local = t1_star(g, tau, caps)?;
    let global = fractional_chromatic(&conflict_graph(g, 2)?, tau, caps)?;
    Ok(global / local)
}

/// A `(4k+2)`-cycle not inside any single `G_v`, listed as consecutive nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UncoveredCycle {
    pub k: usize,
    pub nodes: Vec<String>,
}

impl UncoveredCycle {
    /// Cycle links in order, `ℓ_1 = {c_0, c_1}`, ...
    pub fn links(&self) -> Vec<Link> {
        let n = self.nodes.len();
        (0..n)
            .map(|i| Link::new(self.nodes[i].clone(), self.nodes[(i + 1) % n].clone()).unwrap())
            .collect()
    }

    /// Every other link of the cycle, `{ℓ_1, ℓ_3, ..., ℓ_{4k+1}}`.
    pub fn alternate_links(&self) -> Vec<Link> {
        self.links().into_iter().step_by(2).collect()
    }
}

/// Smallest `k >= 2` such that some cycle of length `4k+2` is not contained
/// in any 1-hop neighborhood; `None` stands for `k = ∞`.
pub fn uncovered_cycle_k(g: &NetworkGraph, caps: &Caps) -> Result<Option<UncoveredCycle>> {
    let adj = g.adjacency();
    let n = g.node_count();
    let balls: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut b = vec![false; n];
            for u in g.closed_neighborhood(v) {
                b[u] = true;
            }
            b
        })
        .collect();
    let covered = |cycle: &[usize]| balls.iter().any(|b| cycle.iter().all(|&u| b[u]));
    let mut budget = caps.max_cycles;

    let mut k = 2;
    while 4 * k + 2 <= n {
        let len = 4 * k + 2;
        // cycles through their smallest vertex s, oriented so path[1] < last
        for s in 0..n {
            let mut path = vec![s];
            let mut on_path = vec![false; n];
            on_path[s] = true;
            let mut stack: Vec<Vec<usize>> = vec![adj.neighbors(s).filter(|&v| v > s).collect()];
            while let Some(cands) = stack.last_mut() {
                let Some(v) = cands.pop() else {
                    stack.pop();
                    if let Some(u) = path.pop() {
                        on_path[u] = false;
                    }
                    continue;
                };
                if budget == 0 {
                    return Err(Error::Resource {
                        what: "cycle enumeration",
                        cap: caps.max_cycles,
                    });
                }
                budget -= 1;
                if path.len() + 1 == len {
                    if adj.has_edge(v, s) && path[1] < v {
                        let mut cycle = path.clone();
                        cycle.push(v);
                        if !covered(&cycle) {
                            return Ok(Some(UncoveredCycle {
                                k,
                                nodes: cycle.iter().map(|&u| g.nodes()[u].clone()).collect(),
                            }));
                        }
                    }
                    continue;
                }
                path.push(v);
                on_path[v] = true;
                stack.push(adj.neighbors(v).filter(|&w| w > s && !on_path[w]).collect());
            }
        }
        k += 1;
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerSource {
    NuRatio,
    OddCycle,
    Empirical,
    RingExact,
}

/// A demand vector together with its replayed ratio `T*/T₁*`.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub source: LowerSource,
    pub ratio: Rational,
    pub demand: DemandVector,
}

/// Certified interval for `β(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct BetaBounds {
    pub lower: Rational,
    pub lower_source: LowerSource,
    pub lower_witness: DemandVector,
    pub upper: Option<Rational>,
    pub imp_upper: Option<Rational>,
    pub imp_certificate: ImpCertificate,
    pub lambda: usize,
    /// Set when the lower and upper ends coincide.
    pub exact: Option<Rational>,
    /// `ν(G) / max_v ν(G_v)`.
    pub nu_ratio: Option<Rational>,
    /// `(2k+1)/(2k)` for the smallest uncovered `(4k+2)`-cycle.
    pub odd_cycle_bound: Option<Rational>,
    pub witnesses: Vec<Witness>,
}

/// Settings for the lower-bound search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerSearch {
    /// Random rational demand vectors tried in addition to the structured ones.
    pub random_samples: usize,
    /// Largest denominator of random demands.
    pub max_denominator: i64,
    pub seed: u64,
}

impl Default for LowerSearch {
    fn default() -> Self {
        LowerSearch {
            random_samples: 16,
            max_denominator: 4,
            seed: 0,
        }
    }
}

/// Candidate demand vectors for `β` lower bounds besides the ν and ring
/// witnesses: 0/1 vectors on maximal conflict cliques, then seeded random
/// rational vectors. The list is fixed before any evaluation.
pub fn empirical_candidates(
    g: &NetworkGraph,
    gc: &ConflictGraph,
    search: &LowerSearch,
    caps: &Caps,
) -> Result<Vec<DemandVector>> {
    let mut out = Vec::new();
    for clique in maximal_cliques(gc.graph(), caps.max_sets)? {
        if !clique.is_empty() {
            out.push(DemandVector::indicator(
                clique.iter().map(|&i| &gc.links()[i]),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.random_samples {
        let tau = random_demand(g.links(), search.max_denominator, &mut rng);
        if !tau.is_zero() {
            out.push(tau);
        }
    }
    Ok(out)
}

/// Each link independently gets `p/q` with `q` in `1..=max_den`, `p` in `0..=q`.
pub fn random_demand<R: Rng>(links: &[Link], max_den: i64, rng: &mut R) -> DemandVector {
    let mut tau = DemandVector::new();
    for l in links {
        let den = rng.random_range(1..=max_den);
        let num = rng.random_range(0..=den);
        tau.set(l.clone(), Rational::new(num, den)).unwrap();
    }
    tau
}

struct LowerSide {
    nu_ratio: Option<Rational>,
    odd_cycle_bound: Option<Rational>,
    witnesses: Vec<Witness>,
}

fn lower_side(g: &NetworkGraph, search: &LowerSearch, caps: &Caps) -> Result<LowerSide> {
    let gc = conflict_graph(g, 2)?;
    let mut witnesses = Vec::new();
    let replay = |source, demand: DemandVector, out: &mut Vec<Witness>| -> Result<()> {
        if !demand.is_zero() {
            let ratio = beta_ratio(g, &demand, caps)?;
            out.push(Witness {
                source,
                ratio,
                demand,
            });
        }
        Ok(())
    };

    let (nu_g, nu_witness) = nu(g, caps)?;
    let (nu_local, _) = nu_neighborhood_max(g, caps)?;
    let nu_ratio = (nu_local > 0).then(|| Rational::new(nu_g as i64, nu_local as i64));
    replay(
        LowerSource::NuRatio,
        DemandVector::indicator(&nu_witness),
        &mut witnesses,
    )?;

    let cycle = uncovered_cycle_k(g, caps)?;
    let odd_cycle_bound = cycle
        .as_ref()
        .map(|c| Rational::new(2 * c.k as i64 + 1, 2 * c.k as i64));
    if let Some(c) = &cycle {
        replay(
            LowerSource::OddCycle,
            DemandVector::indicator(&c.alternate_links()),
            &mut witnesses,
        )?;
    }

    for tau in empirical_candidates(g, &gc, search, caps)? {
        replay(LowerSource::Empirical, tau, &mut witnesses)?;
    }
    Ok(LowerSide {
        nu_ratio,
        odd_cycle_bound,
        witnesses,
    })
}

/// Certified `β` lower bound (best replayed witness), with the ν-ratio and
/// odd-cycle formula values, plus the upper bound `imp(L_2(g)) · λ(g)`.
pub fn beta_bounds(g: &NetworkGraph, search: &LowerSearch, caps: &Caps) -> Result<BetaBounds> {
    if g.link_count() == 0 {
        return Err(Error::input("beta is undefined for a graph without links"));
    }
    let lower = lower_side(g, search, caps)?;
    // first maximal ratio wins, so structured witnesses take precedence
    let best = lower
        .witnesses
        .iter()
        .fold(None::<&Witness>, |best, w| match best {
            Some(b) if b.ratio >= w.ratio => Some(b),
            _ => Some(w),
        })
        .expect("the nu witness is nonzero when links exist");
    let upper = beta_upper_bound(g, caps)?;
    let exact = upper.upper.clone().filter(|u| *u == best.ratio);
    Ok(BetaBounds {
        lower: best.ratio.clone(),
        lower_source: best.source,
        lower_witness: best.demand.clone(),
        upper: upper.upper,
        imp_upper: upper.imp_upper,
        imp_certificate: upper.imp_certificate,
        lambda: upper.lambda,
        exact,
        nu_ratio: lower.nu_ratio,
        odd_cycle_bound: lower.odd_cycle_bound,
        witnesses: lower.witnesses,
    })
}

/// Lower side only, as `(certified lower, source, witness)`.
pub fn beta_lower_bound(
    g: &NetworkGraph,
    search: &LowerSearch,
    caps: &Caps,
) -> Result<(Rational, LowerSource, DemandVector)> {
    let lower = lower_side(g, search, caps)?;
    let best = lower
        .witnesses
        .into_iter()
        .reduce(|b, w| if w.ratio > b.ratio { w } else { b })
        .ok_or_else(|| Error::input("beta is undefined for a graph without links"))?;
    Ok((best.ratio, best.source, best.demand))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaUpper {
    pub upper: Option<Rational>,
    pub imp_upper: Option<Rational>,
    pub imp_certificate: ImpCertificate,
    pub lambda: usize,
}

/// `β(g) <= imp(L_2(g)) · λ(g)` whenever an imperfection bound is certified.
pub fn beta_upper_bound(g: &NetworkGraph, caps: &Caps) -> Result<BetaUpper> {
    let gc = conflict_graph(g, 2)?;
    let imp = imp_upper_bound(&gc, caps)?;
    let (lam, _) = lambda(g, caps)?;
    Ok(BetaUpper {
        upper: imp.value.as_ref().map(|v| v * &Rational::from(lam)),
        imp_upper: imp.value,
        imp_certificate: imp.certificate,
        lambda: lam,
    })
}

/// Closed form `β(C_{4k+2}) = (2k+1)/k` for `k >= 2`, cross-checked against
/// the replayed alternate-link witness and the certified upper bound.
pub fn beta_ring_exact(n: usize, caps: &Caps) -> Result<Rational> {
    if n < 10 || n % 4 != 2 {
        return Err(Error::input(format!(
            "ring closed form needs n = 4k+2 with k >= 2, got n = {n}"
        )));
    }
    let k = ((n - 2) / 4) as i64;
    let value = Rational::new(2 * k + 1, k);
    let g = generate(&Family::Cycle(n))?;
    let alternate: Vec<Link> = crate::graph::generate::cycle_links(n)
        .into_iter()
        .step_by(2)
        .collect();
    let replayed = beta_ratio(&g, &DemandVector::indicator(&alternate), caps)?;
    let upper = beta_upper_bound(&g, caps)?.upper;
    assert_eq!(
        replayed, value,
        "alternate-link witness disagrees with closed form"
    );
    assert_eq!(
        upper,
        Some(value.clone()),
        "certified upper bound disagrees with closed form"
    );
    Ok(value)
}

/// Threshold for the distributed test: admit when every `T*(G_v, τ)` is at
/// most `1 / (imp(L_2(G)) · λ(G))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub value: Rational,
    pub imp_upper: Rational,
    pub imp_certificate: ImpCertificate,
    pub lambda: usize,
}

pub fn admission_threshold(g: &NetworkGraph, caps: &Caps) -> Result<Threshold> {
    let upper = beta_upper_bound(g, caps)?;
    let (Some(imp), Some(product)) = (upper.imp_upper, upper.upper) else {
        return Err(Error::Unavailable(
            "no certified imperfection-ratio upper bound for this conflict graph".into(),
        ));
    };
    // no links: nothing to schedule, every demand is feasible
    let value = if product.is_zero() {
        Rational::one()
    } else {
        product.recip()
    };
    Ok(Threshold {
        value,
        imp_upper: imp,
        imp_certificate: upper.imp_certificate,
        lambda: upper.lambda,
    })
}

/// Threshold `1/B` for a user-chosen `B`; the flag is false when `B` is below
/// the certified `β` lower bound, in which case soundness is not guaranteed.
pub fn user_threshold(b: &Rational, certified_lower: &Rational) -> Result<(Rational, bool)> {
    if !b.is_positive() {
        return Err(Error::input("B must be positive"));
    }
    if b < certified_lower {
        log::warn!("B = {b} is below the certified beta lower bound {certified_lower}; admissions may be unsound");
    }
    Ok((b.recip(), b >= certified_lower))
}
