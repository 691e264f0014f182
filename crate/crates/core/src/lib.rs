//! Exact analysis of distance-1 distributed admission control for wireless
//! networks under the K-hop (chiefly 2-hop) interference model.
//!
//! * [`graph`]: network graphs, link distances, `G_v` neighborhoods,
//!   conflict graphs `L_K(G)` and family generators.
//! * [`schedule`]: demand vectors, schedules, exact `χ_f(G_c, τ)`.
//! * [`invariants`]: `ν(G)`, `λ(G)`, chordality, imperfection-ratio bounds.
//! * [`perf`]: the local estimate `T₁*`, certified bounds on `β(G)` and the
//!   admission threshold.
//! * [`sim`]: round-based simulation of the distributed test.

pub mod caps;
pub mod cliques;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod lp;
pub mod perf;
pub mod rational;
pub mod schedule;
pub mod sim;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{
    conflict_graph, generate, AdjGraph, ConflictGraph, Distance, Family, Link, NetworkGraph,
};
pub use perf::{BetaBounds, LowerSource, Threshold};
pub use rational::{q, Rational};
pub use schedule::{DemandVector, Schedule, ScheduleEntry};
pub use sim::{Classification, Decision, NodeView, SimTrace};
