//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twohop_core::graph::generate::{cycle_links, pendant_links};
use twohop_core::invariants::{
    chordality, lambda, nu, verify_elimination_order, verify_hole, Chordality,
};
use twohop_core::perf::{
    beta_bounds, beta_ratio, beta_ring_exact, random_demand, t1_star, LowerSearch,
};
use twohop_core::schedule::{fractional_chromatic, weighted_chif, weighted_chif_dual};
use twohop_core::sim::{evaluate_policy, Policy, Sampler};
use twohop_core::{
    conflict_graph, generate, q, AdjGraph, Caps, DemandVector, Family, NetworkGraph, Rational,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn(&Caps) -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn g(f: Family) -> NetworkGraph {
    generate(&f).unwrap()
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn six_ring_example(caps: &Caps) -> Outcome {
    let g6 = g(Family::Cycle(6));
    let l = cycle_links(6);
    let tau = DemandVector::indicator([&l[0], &l[2], &l[4]]);
    let total = fractional_chromatic(&conflict_graph(&g6, 2).map_err(e)?, &tau, caps).map_err(e)?;
    let local = t1_star(&g6, &tau, caps).map_err(e)?;
    let ratio = beta_ratio(&g6, &tau, caps).map_err(e)?;
    check(
        total == q(3, 1) && local == q(1, 1) && ratio == q(3, 1),
        format!("T*={total} T1*={local} ratio={ratio}"),
    )?;
    Ok(format!("T*={total} T1*={local} ratio={ratio}"))
}

fn pendant_family(caps: &Caps) -> Outcome {
    for r in 2..=6 {
        let gr = g(Family::CliquePendant(r));
        let tau = DemandVector::indicator(&pendant_links(r));
        let total =
            fractional_chromatic(&conflict_graph(&gr, 2).map_err(e)?, &tau, caps).map_err(e)?;
        let local = t1_star(&gr, &tau, caps).map_err(e)?;
        check(
            total == Rational::from(r) && local == Rational::one(),
            format!("r={r}: T*={total} T1*={local}"),
        )?;
    }
    Ok("T*=r, T1*=1 for r=2..6".into())
}

fn ring_exactness(caps: &Caps) -> Outcome {
    let mut parts = Vec::new();
    for (n, expect) in [(10, q(5, 2)), (14, q(7, 3)), (18, q(9, 4))] {
        let b = beta_bounds(&g(Family::Cycle(n)), &LowerSearch::default(), caps).map_err(e)?;
        check(
            b.lower == expect
                && b.upper.as_ref() == Some(&expect)
                && b.exact.as_ref() == Some(&expect),
            format!("C_{n}: lower={} upper={:?}", b.lower, b.upper),
        )?;
        check(
            beta_ring_exact(n, caps).map_err(e)? == expect,
            format!("C_{n}: closed form"),
        )?;
        parts.push(format!("C_{n}={expect}"));
    }
    Ok(parts.join(" "))
}

fn invariant_values(caps: &Caps) -> Outcome {
    for n in 3..=8 {
        let (v, _) = nu(&g(Family::Complete(n)), caps).map_err(e)?;
        check(v == n / 2, format!("nu(K_{n})={v}"))?;
    }
    let (v6, _) = nu(&g(Family::Cycle(6)), caps).map_err(e)?;
    check(v6 == 3, format!("nu(C_6)={v6}"))?;
    for n in 7..=12 {
        let (v, _) = nu(&g(Family::Cycle(n)), caps).map_err(e)?;
        check(v == 2, format!("nu(C_{n})={v}"))?;
    }
    let (l10, _) = lambda(&g(Family::Cycle(10)), caps).map_err(e)?;
    check(l10 == 2, format!("lambda(C_10)={l10}"))?;
    Ok("nu(K_n)=floor(n/2), nu(C_6)=3, nu(C_7..12)=2, lambda(C_10)=2".into())
}

fn odd_cycle_chif(caps: &Caps) -> Outcome {
    let mut parts = Vec::new();
    for k in 2..=4i64 {
        let n = (2 * k + 1) as usize;
        let c = AdjGraph::cycle(n);
        let w = vec![Rational::one(); n];
        let primal = weighted_chif(&c, &w, caps).map_err(e)?.value;
        let (dual, _) = weighted_chif_dual(&c, &w, caps).map_err(e)?;
        let expect = Rational::new(2 * k + 1, k);
        check(
            primal == expect && dual == expect,
            format!("C_{n}: primal={primal} dual={dual}"),
        )?;
        parts.push(format!("C_{n}={expect}"));
    }
    Ok(parts.join(" "))
}

fn soundness(caps: &Caps) -> Outcome {
    let sampler = Sampler::Boundary {
        max_denominator: 4,
        levels: vec![q(1, 4), q(1, 2), q(3, 4), q(1, 1), q(5, 4), q(2, 1)],
    };
    let (mut admitted, mut total) = (0, 0);
    for (i, (name, graph)) in common::corpus(200, 2024).into_iter().enumerate() {
        let m = evaluate_policy(
            &graph,
            &sampler,
            &Policy::Certified,
            1000 + i as u64,
            100,
            caps,
        )
        .map_err(|err| format!("{name}: {err}"))?;
        check(
            m.counts.false_admit == 0,
            format!("{name}: {} false admits", m.counts.false_admit),
        )?;
        admitted += m.counts.true_admit;
        total += m.samples.len();
    }
    Ok(format!(
        "0 false admits over {total} samples ({admitted} admitted)"
    ))
}

fn sandwich(caps: &Caps) -> Outcome {
    let mut witnesses = 0;
    for (name, graph) in common::corpus(200, 2024) {
        let b = beta_bounds(&graph, &LowerSearch::default(), caps)
            .map_err(|err| format!("{name}: {err}"))?;
        if let Some(u) = &b.upper {
            check(
                b.lower <= *u,
                format!("{name}: lower {} > upper {u}", b.lower),
            )?;
        }
        check(
            b.lower >= Rational::one(),
            format!("{name}: lower {} < 1", b.lower),
        )?;
        let replay = beta_ratio(&graph, &b.lower_witness, caps).map_err(e)?;
        check(
            replay == b.lower,
            format!("{name}: witness replays to {replay}, reported {}", b.lower),
        )?;
        for w in &b.witnesses {
            check(
                beta_ratio(&graph, &w.demand, caps).map_err(e)? == w.ratio,
                format!("{name}: stale witness"),
            )?;
            witnesses += 1;
        }
    }
    Ok(format!("{witnesses} witnesses replayed"))
}

fn oracle_equivalence(caps: &Caps) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut compared = 0;
    for (name, graph) in common::corpus(200, 2024) {
        if graph.link_count() > 8 || graph.link_count() == 0 {
            continue;
        }
        let gc = conflict_graph(&graph, 2).map_err(e)?;
        let adj = common::brute_conflict(&graph, 2);
        let mut demands = vec![DemandVector::uniform(graph.links(), Rational::one())];
        demands.extend((0..3).map(|_| random_demand(graph.links(), 4, &mut rng)));
        for tau in demands {
            let lp = fractional_chromatic(&gc, &tau, caps).map_err(e)?;
            let brute = common::multicoloring_chif(&adj, &tau.dense(graph.links()), 3);
            check(
                lp == brute,
                format!("{name}: LP {lp} vs multicoloring {brute} for {tau:?}"),
            )?;
            compared += 1;
        }
    }
    Ok(format!("{compared} demand vectors agree"))
}

fn ring_chordality(_caps: &Caps) -> Outcome {
    let g10 = g(Family::Cycle(10));
    let gc = conflict_graph(&g10, 2).map_err(e)?;
    let l = cycle_links(10);
    let cut = gc.without(&[l[8].clone(), l[9].clone()]);
    let Chordality::Chordal { elimination_order } = chordality(&cut) else {
        return Err("L_2(C_10) minus two consecutive links is not chordal".into());
    };
    check(
        verify_elimination_order(cut.graph(), &elimination_order),
        "elimination order fails verification",
    )?;
    let Chordality::NotChordal { hole } = chordality(&gc) else {
        return Err("L_2(C_10) reported chordal".into());
    };
    check(verify_hole(gc.graph(), &hole), "hole fails verification")?;
    Ok(format!(
        "elimination order verified; hole of length {} in L_2(C_10)",
        hole.len()
    ))
}

fn main() {
    let caps = Caps::default();
    let criteria: [Criterion; 9] = [
        (
            "six-ring example ratio",
            Duration::from_secs(1),
            six_ring_example,
        ),
        (
            "clique-pendant family",
            Duration::from_secs(5),
            pendant_family,
        ),
        ("ring exactness", Duration::from_secs(60), ring_exactness),
        (
            "invariant values",
            Duration::from_secs(10),
            invariant_values,
        ),
        (
            "odd-cycle fractional chromatic number",
            Duration::from_secs(5),
            odd_cycle_chif,
        ),
        (
            "certified threshold soundness",
            Duration::from_secs(600),
            soundness,
        ),
        (
            "bound sandwich and witness replay",
            Duration::from_secs(600),
            sandwich,
        ),
        (
            "LP vs multicoloring oracle",
            Duration::from_secs(300),
            oracle_equivalence,
        ),
        (
            "ring conflict graph chordality",
            Duration::from_secs(1),
            ring_chordality,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&caps);
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name} ({took:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
