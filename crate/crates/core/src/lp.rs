//! Dense two-phase simplex over exact rationals.
//!
//! Solves `maximize c·x subject to A x <= b, x >= 0`. Bland's rule is used
//! for both entering and leaving variables, so the method terminates on
//! degenerate problems.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct LinearProgram {
    /// Constraint rows, each of length `c.len()`.
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// Optimal primal point.
    pub x: Vec<Rational>,
    /// Optimal multipliers of the `<=` rows (a feasible point of the dual).
    pub duals: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    /// Reduced-cost row `z_j - c_j`; the objective value sits in `obj_value`.
    obj: Vec<BigRational>,
    obj_value: BigRational,
    basis: Vec<usize>,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, s: usize) {
        let inv = self.rows[r][s].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][s].clone();
            if f.is_zero() {
                continue;
            }
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        let f = self.obj[s].clone();
        if !f.is_zero() {
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.obj_value -= &f * &pivot_rhs;
        }
        self.basis[r] = s;
    }

    fn run(&mut self) -> Step {
        loop {
            let Some(s) = self.obj.iter().position(|d| d.is_negative()) else {
                return Step::Optimal;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][s];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Step::Unbounded,
                Some((r, _)) => self.pivot(r, s),
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> LpOutcome {
        let m = self.b.len();
        let n = self.c.len();
        assert!(self.a.len() == m && self.a.iter().all(|r| r.len() == n));
        let needs_phase_one = self.b.iter().any(Rational::is_negative);
        let width = n + m + usize::from(needs_phase_one);
        let art = n + m;

        let mut rows = Vec::with_capacity(m);
        for (i, row) in self.a.iter().enumerate() {
            let mut r: Vec<BigRational> = row.iter().map(|v| v.as_big().clone()).collect();
            r.resize(width, BigRational::zero());
            r[n + i] = BigRational::one();
            if needs_phase_one {
                r[art] = -BigRational::one();
            }
            rows.push(r);
        }
        let mut t = Tableau {
            rows,
            rhs: self.b.iter().map(|v| v.as_big().clone()).collect(),
            obj: vec![BigRational::zero(); width],
            obj_value: BigRational::zero(),
            basis: (n..n + m).collect(),
        };

        if needs_phase_one {
            // maximize -x0
            t.obj[art] = BigRational::one();
            let worst = (0..m)
                .min_by(|&i, &j| t.rhs[i].cmp(&t.rhs[j]))
                .expect("some row has negative rhs");
            t.pivot(worst, art);
            if let Step::Unbounded = t.run() {
                unreachable!("phase one objective is bounded by zero");
            }
            if t.obj_value.is_negative() {
                return LpOutcome::Infeasible;
            }
            if let Some(r) = t.basis.iter().position(|&j| j == art) {
                let s = (0..art)
                    .find(|&j| !t.rows[r][j].is_zero())
                    .expect("row of full-rank system has a nonzero entry");
                t.pivot(r, s);
            }
            for row in t.rows.iter_mut() {
                row.truncate(art);
            }
            t.obj.truncate(art);
        }

        // phase two objective in terms of the current basis
        let cost = |j: usize| -> BigRational {
            if j < n {
                self.c[j].as_big().clone()
            } else {
                BigRational::zero()
            }
        };
        let total = n + m;
        let mut obj: Vec<BigRational> = (0..total).map(|j| -cost(j)).collect();
        let mut value = BigRational::zero();
        for (i, &bj) in t.basis.iter().enumerate() {
            let cb = cost(bj);
            if cb.is_zero() {
                continue;
            }
            for (o, v) in obj.iter_mut().zip(&t.rows[i]) {
                if !v.is_zero() {
                    *o += &cb * v;
                }
            }
            value += &cb * &t.rhs[i];
        }
        t.obj = obj;
        t.obj_value = value;

        match t.run() {
            Step::Unbounded => LpOutcome::Unbounded,
            Step::Optimal => {
                let mut x = vec![Rational::zero(); n];
                for (i, &bj) in t.basis.iter().enumerate() {
                    if bj < n {
                        x[bj] = Rational::from_big(t.rhs[i].clone());
                    }
                }
                let duals = (0..m)
                    .map(|i| Rational::from_big(t.obj[n + i].clone()))
                    .collect();
                LpOutcome::Optimal(LpSolution {
                    value: Rational::from_big(t.obj_value),
                    x,
                    duals,
                })
            }
        }
    }
}
