//! Bounds on the imperfection ratio `imp(G_c) = sup_τ χ_f(G_c,τ) / ω(G_c,τ)`.

use serde::Serialize;

use super::chordal::is_chordal;
use super::polytope::qstab_vertices;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{AdjGraph, ConflictGraph};
use crate::rational::Rational;
use crate::schedule::{weighted_chif, weighted_clique, DemandVector};

/// Where an imperfection-ratio upper bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImpCertificate {
    /// Chordal or bipartite, hence perfect.
    Perfect,
    /// The graph is itself an odd hole `C_n`, where `imp = n/(n-1)`.
    OddCycleFamily,
    /// Recognized as the 2-hop conflict graph of a `(4k+2)`-ring; bound
    /// from chordal two-vertex deletions.
    RingFormula,
    /// Exact value from the vertices of the clique-constrained polytope.
    PolytopeEnumeration,
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImpUpper {
    pub value: Option<Rational>,
    pub certificate: ImpCertificate,
}

fn ratio(g: &AdjGraph, w: &[Rational], caps: &Caps) -> Result<Option<Rational>> {
    let (omega, _) = weighted_clique(g, w, caps)?;
    if omega.is_zero() {
        return Ok(None);
    }
    let chif = weighted_chif(g, w, caps)?.value;
    Ok(Some(chif / omega))
}

/// `χ_f / ω` for one demand vector on a conflict graph (`None` when `τ = 0`).
pub fn imp_ratio(gc: &ConflictGraph, tau: &DemandVector, caps: &Caps) -> Result<Option<Rational>> {
    tau.check_links(gc.links())?;
    ratio(gc.graph(), &tau.dense(gc.links()), caps)
}

/// Induced cycles of odd length >= 5, each listed once in cyclic order
/// starting from its smallest vertex.
pub fn odd_holes(g: &AdjGraph, max_paths: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.len();
    let mut out = Vec::new();
    let mut explored = 0usize;
    for s in 0..n {
        let mut path = vec![s];
        let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
        let first: Vec<usize> = g.neighbors(s).filter(|&v| v > s).collect();
        stack.push((1, first));
        while let Some((depth, mut cands)) = stack.pop() {
            path.truncate(depth);
            let Some(v) = cands.pop() else { continue };
            stack.push((depth, cands));
            explored += 1;
            if explored > max_paths {
                return Err(Error::Resource {
                    what: "induced path search",
                    cap: max_paths,
                });
            }
            // v must not be adjacent to interior path vertices other than the tail
            let tail = path.len() - 1;
            if path
                .get(1..tail)
                .unwrap_or(&[])
                .iter()
                .any(|&u| g.has_edge(u, v))
            {
                continue;
            }
            if path.len() >= 3 && g.has_edge(s, v) {
                // closes a hole; path[1] < v fixes the orientation
                if path[1] < v && (path.len() + 1) % 2 == 1 && path.len() + 1 >= 5 {
                    let mut cycle = path.clone();
                    cycle.push(v);
                    out.push(cycle);
                }
                continue;
            }
            if path.len() >= 2 && g.has_edge(s, v) {
                continue;
            }
            path.push(v);
            let next: Vec<usize> = g
                .neighbors(v)
                .filter(|&w| w > s && !path.contains(&w))
                .collect();
            stack.push((path.len(), next));
        }
    }
    out.sort();
    Ok(out)
}

/// Lower bound on `imp(gc)`: the best ratio over the candidate demand
/// vectors, which always include single-link demands (ratio 1), odd-hole
/// indicator vectors, every 0/1 vector when `gc` is small, and `extra`.
pub fn imp_lower_bound(
    gc: &ConflictGraph,
    extra: &[DemandVector],
    caps: &Caps,
) -> Result<(Rational, DemandVector)> {
    let g = gc.graph();
    let n = gc.len();
    let links = gc.links();
    let mut best = (Rational::one(), DemandVector::new());
    if n > 0 {
        best.1 = DemandVector::indicator(&links[..1]);
    }
    let consider = |w: Vec<Rational>, best: &mut (Rational, DemandVector)| -> Result<()> {
        if let Some(r) = ratio(g, &w, caps)? {
            if r > best.0 {
                let tau = DemandVector::from_pairs(links.iter().cloned().zip(w))?;
                *best = (r, tau);
            }
        }
        Ok(())
    };
    let indicator = |set: &[usize]| -> Vec<Rational> {
        (0..n)
            .map(|i| {
                if set.contains(&i) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    for hole in odd_holes(g, caps.max_cycles)? {
        consider(indicator(&hole), &mut best)?;
    }
    if n <= caps.max_exhaustive_vertices {
        for mask in 1u64..1 << n {
            let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            consider(indicator(&set), &mut best)?;
        }
    }
    for tau in extra {
        tau.check_links(links)?;
        consider(tau.dense(links), &mut best)?;
    }
    Ok(best)
}

/// Cyclic order `v_0..v_{m-1}` under which `g` is the circulant with
/// connection set `{±1, ±2}`, if any (requires `m >= 7`).
pub fn ring_square_order(g: &AdjGraph) -> Option<Vec<usize>> {
    let m = g.len();
    if m < 7 || (0..m).any(|v| g.degree(v) != 4) {
        return None;
    }
    fn extend(g: &AdjGraph, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let m = g.len();
        if order.len() == m {
            return (0..m).all(|i| {
                (0..m).all(|j| {
                    let gap = (j + m - i) % m;
                    let expect = gap != 0 && (matches!(gap, 1 | 2) || matches!(m - gap, 1 | 2));
                    g.has_edge(order[i], order[j]) == expect
                })
            });
        }
        let last = order[order.len() - 1];
        let prev = order[order.len() - 2];
        let cands: Vec<usize> = g
            .neighbors(last)
            .filter(|&c| !used[c] && g.has_edge(prev, c))
            .collect();
        for c in cands {
            used[c] = true;
            order.push(c);
            if extend(g, order, used) {
                return true;
            }
            order.pop();
            used[c] = false;
        }
        false
    }
    for v1 in g.neighbors(0) {
        let mut order = vec![0, v1];
        let mut used = vec![false; m];
        used[0] = true;
        used[v1] = true;
        if extend(g, &mut order, &mut used) {
            return Some(order);
        }
    }
    None
}

/// If the vertex classes `parts` partition `g` and deleting any single class
/// leaves a chordal graph, then `(q-1)·χ_f <= q·ω` for `q = parts.len()`.
pub fn deletion_bound(g: &AdjGraph, parts: &[Vec<usize>]) -> Option<Rational> {
    let q = parts.len();
    if q < 2 {
        return None;
    }
    let mut seen = vec![0usize; g.len()];
    for p in parts {
        for &v in p {
            seen[v] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        return None;
    }
    let all_chordal = parts.iter().all(|p| {
        let keep: Vec<usize> = (0..g.len()).filter(|v| !p.contains(v)).collect();
        is_chordal(&g.induced(&keep))
    });
    all_chordal.then(|| Rational::new(q as i64, q as i64 - 1))
}

/// `Some(n)` when `g` is a single induced cycle of odd length `n >= 5`.
fn odd_hole_size(g: &AdjGraph) -> Option<usize> {
    let n = g.len();
    let is_cycle =
        n >= 5 && n % 2 == 1 && (0..n).all(|v| g.degree(v) == 2) && g.components().len() == 1;
    is_cycle.then_some(n)
}

/// Upper bound on `imp(gc)`, with the certificate that justifies it.
/// Tried in order: perfection (bipartite or chordal), the ring deletion
/// scheme, polytope enumeration on small graphs, a bare odd hole.
pub fn imp_upper_bound(gc: &ConflictGraph, caps: &Caps) -> Result<ImpUpper> {
    imp_upper_bound_graph(gc.graph(), caps)
}

pub fn imp_upper_bound_graph(g: &AdjGraph, caps: &Caps) -> Result<ImpUpper> {
    if g.bipartition().is_some() || is_chordal(g) {
        return Ok(ImpUpper {
            value: Some(Rational::one()),
            certificate: ImpCertificate::Perfect,
        });
    }
    if g.len() % 4 == 2 && g.len() >= 10 {
        if let Some(order) = ring_square_order(g) {
            let parts: Vec<Vec<usize>> = order.chunks(2).map(<[usize]>::to_vec).collect();
            if let Some(bound) = deletion_bound(g, &parts) {
                return Ok(ImpUpper {
                    value: Some(bound),
                    certificate: ImpCertificate::RingFormula,
                });
            }
        }
    }
    if g.len() <= caps.max_polytope_vertices {
        return Ok(ImpUpper {
            value: Some(imp_by_polytope(g, caps)?.0),
            certificate: ImpCertificate::PolytopeEnumeration,
        });
    }
    if let Some(n) = odd_hole_size(g) {
        return Ok(ImpUpper {
            value: Some(Rational::new(n as i64, n as i64 - 1)),
            certificate: ImpCertificate::OddCycleFamily,
        });
    }
    Ok(ImpUpper {
        value: None,
        certificate: ImpCertificate::Unavailable,
    })
}

/// Exact `imp(g)` as the maximum of `χ_f` over the vertices of `QSTAB(g)`,
/// with a maximizing vertex. Every nonzero vertex has `ω = 1`.
pub fn imp_by_polytope(g: &AdjGraph, caps: &Caps) -> Result<(Rational, Vec<Rational>)> {
    let mut best = (Rational::one(), vec![Rational::zero(); g.len()]);
    for w in qstab_vertices(g, caps)? {
        if let Some(r) = ratio(g, &w, caps)? {
            if r > best.0 {
                best = (r, w);
            }
        }
    }
    Ok(best)
}
