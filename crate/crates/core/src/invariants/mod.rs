//! Graph invariants: `ν(G)`, `λ(G)`, chordality, imperfection-ratio bounds.

pub mod chordal;
pub mod cover;
pub mod imp;
pub mod matching;
pub mod polytope;

pub use chordal::{
    chordality, is_chordal, verify_elimination_order, verify_hole, Adjacency, Chordality,
};
pub use cover::{lambda, min_set_cover, verify_lambda_witness, LambdaWitness};
pub use imp::{
    imp_lower_bound, imp_ratio, imp_upper_bound, imp_upper_bound_graph, odd_holes, ImpCertificate,
    ImpUpper,
};
pub use matching::{exactly_one_graph, is_exactly_one_separated, nu, nu_neighborhood_max};
pub use polytope::qstab_vertices;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::graph::{conflict_graph, Link, NetworkGraph};
use crate::rational::Rational;
use crate::schedule::DemandVector;

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub nu: usize,
    pub nu_witness: Vec<Link>,
    pub nu_local_max: usize,
    pub lambda: usize,
    pub lambda_witness: LambdaWitness,
    pub conflict_chordal: bool,
    pub imp_lower: Rational,
    pub imp_lower_witness: DemandVector,
    pub imp_upper: Option<Rational>,
    pub imp_upper_certificate: ImpCertificate,
}

/// Every invariant of `g` and its 2-hop conflict graph.
pub fn invariant_report(g: &NetworkGraph, caps: &Caps) -> Result<InvariantReport> {
    let gc = conflict_graph(g, 2)?;
    let (nu_value, nu_witness) = nu(g, caps)?;
    let (nu_local_max, _) = nu_neighborhood_max(g, caps)?;
    let (lambda_value, lambda_witness) = lambda(g, caps)?;
    let (imp_lower, imp_lower_witness) = imp_lower_bound(&gc, &[], caps)?;
    let upper = imp_upper_bound(&gc, caps)?;
    Ok(InvariantReport {
        nu: nu_value,
        nu_witness,
        nu_local_max,
        lambda: lambda_value,
        lambda_witness,
        conflict_chordal: is_chordal(&gc),
        imp_lower,
        imp_lower_witness,
        imp_upper: upper.value,
        imp_upper_certificate: upper.certificate,
    })
}
