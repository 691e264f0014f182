//! Vertex enumeration of the clique-constrained stable set polytope
//! `QSTAB(G) = { x >= 0 : x(Q) <= 1 for every maximal clique Q }`
//! by the double description method over exact integers.
//!
//! The polytope is homogenized to the cone `{(x0, x) : x0 >= 0, x >= 0,
//! x0 - x(Q) >= 0}`. Starting from the orthant, clique constraints are
//! added one at a time; adjacency of rays uses the combinatorial test.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::caps::Caps;
use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::AdjGraph;
use crate::rational::Rational;
use num_rational::BigRational;

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    /// Indices of processed constraints tight at this ray.
    zeros: FixedBitSet,
}

fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Vertices of `QSTAB(g)` as rational points, in a deterministic order.
pub fn qstab_vertices(g: &AdjGraph, caps: &Caps) -> Result<Vec<Vec<Rational>>> {
    let n = g.len();
    if n > caps.max_polytope_vertices {
        return Err(Error::Resource {
            what: "stable set polytope enumeration (graph vertices)",
            cap: caps.max_polytope_vertices,
        });
    }
    let dim = n + 1;
    let cliques = maximal_cliques(g, caps.max_sets)?;
    // constraint 0: x0 >= 0; 1..=n: x_i >= 0; then one per clique
    let total = dim + cliques.len();
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut coords = vec![BigInt::zero(); dim];
            coords[j] = BigInt::from(1);
            let mut zeros = FixedBitSet::with_capacity(total);
            zeros.insert_range(0..dim);
            zeros.set(j, false);
            Ray { coords, zeros }
        })
        .collect();

    for (ci, clique) in cliques.iter().enumerate() {
        let idx = dim + ci;
        let value = |r: &Ray| -> BigInt {
            clique
                .iter()
                .fold(r.coords[0].clone(), |acc, &i| acc - &r.coords[i + 1])
        };
        let values: Vec<BigInt> = rays.iter().map(value).collect();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(idx);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) + 2 < dim {
                    continue;
                }
                let adjacent =
                    (0..rays.len()).all(|r| r == p || r == q || !common.is_subset(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                let a = &values[p];
                let b = -&values[q];
                let coords = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(x, y)| a * x + &b * y)
                    .collect();
                common.insert(idx);
                next.push(Ray {
                    coords: normalize(coords),
                    zeros: common,
                });
                if next.len() + rays.len() > caps.max_polytope_rays {
                    return Err(Error::Resource {
                        what: "double description rays",
                        cap: caps.max_polytope_rays,
                    });
                }
            }
        }
        for (i, r) in rays.iter().enumerate() {
            if values[i].is_zero() {
                let mut r = r.clone();
                r.zeros.insert(idx);
                next.push(r);
            } else if values[i].is_positive() {
                next.push(r.clone());
            }
        }
        rays = next;
    }

    let mut vertices: Vec<Vec<Rational>> = rays
        .iter()
        .map(|r| {
            assert!(r.coords[0].is_positive(), "QSTAB is bounded");
            r.coords[1..]
                .iter()
                .map(|x| Rational::from_big(BigRational::new(x.clone(), r.coords[0].clone())))
                .collect()
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}
