//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bek_core::bei::{
    binomial_edge_ideal, check_ini_intersection, check_ini_power_commutes,
    check_radical_decomposition, compare_powers, initial_ideal_of_graph, lemma_certificate,
    power_contained_in_symbolic, Verdict,
};
use bek_core::graph::cut_sets;
use bek_core::groebner::{buchberger, is_reduced, satisfies_buchberger_criterion};
use bek_core::monomial::{mono_intersect, mono_power, symbolic_power_squarefree};
use bek_core::ring::{Coeff, Monomial};
use bek_core::{Config, Graph, MonomialIdeal, RingContext};
use itertools::Itertools;
use proptest::prelude::*;
use proptest::test_runner::{Config as RunnerConfig, TestRunner};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    check(start.elapsed() < limit, format!("took {:?}, limit {:?}", start.elapsed(), limit))
}

fn err(e: bek_core::Error) -> String {
    e.to_string()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Connected graphs on 2..=5 vertices, one per isomorphism class.
fn connected_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
        let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for mask in 1u32..(1 << pairs.len()) {
            let canon = perms
                .iter()
                .map(|p| {
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(e, _)| mask & (1 << e) != 0)
                        .fold(0u32, |m, (_, &(a, b))| m | (1 << index(p[a - 1], p[b - 1])))
                })
                .min()
                .unwrap();
            if !seen.insert(canon) {
                continue;
            }
            let edges = pairs.iter().enumerate().filter(|(e, _)| canon & (1 << e) != 0).map(|(_, &p)| p);
            let g = Graph::new(n, edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_bek"))
        .args(["initial", "--graph"])
        .arg(data("c4.graph"))
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().last().unwrap_or_default().to_string();
    let expected = "x1*x4*y3, x1*y2, x1*y4, x2*y1*y4, x2*y3, x3*y4";
    check(out.status.success(), "initial exited with an error")?;
    check(line == expected, format!("got {line:?}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("ini(J_C4) = ({line}) in {:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let cfg = Config::default();
    let ini = initial_ideal_of_graph(&Graph::cycle(5), &cfg).map_err(err)?;
    let ctx = *ini.ctx();
    let ordinary = mono_power(&ini, 2).map_err(err)?;
    let symbolic = symbolic_power_squarefree(&ini, 2).map_err(err)?;
    let m = |xs: &[usize], ys: &[usize]| {
        let vars: Vec<usize> = xs.iter().map(|&i| ctx.x(i)).chain(ys.iter().map(|&i| ctx.y(i))).collect();
        Monomial::from_vars(&ctx, &vars)
    };
    let w = m(&[1, 4, 5], &[3, 5]);
    let w1 = w.mul(&Monomial::var(&ctx, ctx.x(1)));
    check(ordinary != symbolic, "I^2 = I^(2)")?;
    check(symbolic.contains_ideal(&ordinary), "I^2 not inside I^(2)")?;
    check(symbolic.contains(&w), "x1*x4*x5*y3*y5 not in I^(2)")?;
    check(!ordinary.contains(&w), "x1*x4*x5*y3*y5 in I^2")?;
    check(ordinary.gens().contains(&w1), "x1^2*x4*x5*y3*y5 is not a minimal generator of I^2")?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("x1*x4*x5*y3*y5 in I^(2) \\ I^2, {} minimal generator of I^2", w1.render(&ctx)))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cmp = compare_powers(&Graph::cycle(5), 2, &Config::default()).map_err(err)?;
    let primes = cut_sets(&Graph::cycle(5), &Config::default()).map_err(err)?.len();
    check(primes == 6, format!("{primes} minimal primes"))?;
    check(cmp.verdict == Verdict::Equal, format!("verdict {}", cmp.verdict.label()))?;
    within(start, Duration::from_secs(300))?;
    let sizes = cmp.ordinary_gb.as_ref().map(|g| g.len()).unwrap_or(0);
    Ok(format!("J_C5^2 = J_C5^(2) over 6 primes, reduced GB size {sizes}, {:?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let cfg = Config::default();
    let graphs = (3..=6).map(Graph::path).chain((3..=5).map(Graph::complete));
    let mut count = 0;
    for g in graphs {
        for k in [2, 3] {
            let cmp = compare_powers(&g, k, &cfg).map_err(err)?;
            check(cmp.verdict == Verdict::Equal, format!("{g} k={k}: {}", cmp.verdict.label()))?;
            count += 1;
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{count} closed-graph comparisons EQUAL in {:?}", start.elapsed()))
}

fn criterion_5() -> Outcome {
    let cfg = Config::default();
    let graphs = connected_graphs();
    check(graphs.len() == 1 + 2 + 6 + 21, format!("{} isomorphism classes", graphs.len()))?;
    for g in &graphs {
        check(check_radical_decomposition(g, &cfg).map_err(err)?, format!("{g}"))?;
    }
    Ok(format!("J_G = ∩ P_S(G) for all {} connected graphs with n <= 5", graphs.len()))
}

fn criterion_6() -> Outcome {
    let cfg = Config::default();
    let mut graphs = connected_graphs();
    graphs.push(Graph::cycle(5));
    for g in &graphs {
        check(check_ini_intersection(g, &cfg).map_err(err)?, format!("{g}"))?;
    }
    Ok(format!("ini(J_G) = ∩ ini(P_S) for {} graphs", graphs.len()))
}

fn criterion_7() -> Outcome {
    let cfg = Config::default();
    let mut count = 0;
    for g in [Graph::path(3), Graph::cycle(4), Graph::cycle(5)] {
        for cs in cut_sets(&g, &cfg).map_err(err)? {
            for t in [2, 3] {
                let ok = check_ini_power_commutes(&g, &cs.set, t, &cfg).map_err(err)?;
                check(ok, format!("{g} S={} t={t}", cs.render()))?;
                count += 1;
            }
        }
    }
    Ok(format!("ini(P_S^t) = ini(P_S)^t on {count} instances"))
}

fn criterion_8() -> Outcome {
    let cfg = Config::default();
    let mut graphs = connected_graphs();
    graphs.push(Graph::new(6, [(1, 2), (1, 3), (1, 6), (2, 3), (2, 5), (3, 4)]).unwrap());
    let mut applied = 0;
    for g in &graphs {
        let cert = lemma_certificate(g, 2, false, &cfg).map_err(err)?;
        if cert.conclusion {
            applied += 1;
            let cmp = compare_powers(g, 2, &cfg).map_err(err)?;
            check(cmp.verdict == Verdict::Equal, format!("certificate applies but {g} is strict"))?;
        }
    }
    let c5 = lemma_certificate(&Graph::cycle(5), 2, true, &cfg).map_err(err)?;
    check(!c5.ini_symbolic_equal && !c5.conclusion, "C5 certificate should not apply")?;
    check(c5.cross_check == Some(Verdict::Equal), "C5 direct comparison not EQUAL")?;
    Ok(format!(
        "{applied}/{} certificates apply, all confirmed EQUAL; C5 (c) false with direct EQUAL",
        graphs.len()
    ))
}

fn graph_strategy() -> impl Strategy<Value = Graph> + Clone {
    (2usize..=4).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            Graph::new(n, pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e)).unwrap()
        })
    })
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(RunnerConfig { cases: 48, failure_persistence: None, ..RunnerConfig::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn criterion_9() -> Outcome {
    let cfg = Config::default();
    let fail = |e: bek_core::Error| TestCaseError::fail(e.to_string());
    let with_edges = || graph_strategy().prop_filter("needs an edge", |g: &Graph| g.num_edges() > 0);

    run_property("S-pair postcondition", with_edges(), |g| {
        let j = binomial_edge_ideal(&g).map_err(fail)?;
        let basis = buchberger(*j.ctx(), j.gens(), &cfg).map_err(fail)?;
        prop_assert!(satisfies_buchberger_criterion(&basis));
        prop_assert!(is_reduced(&basis));
        Ok(())
    })?;

    run_property("GB uniqueness under shuffles", (with_edges(), any::<u64>()), |(g, seed)| {
        let j = binomial_edge_ideal(&g).map_err(fail)?;
        let basis = buchberger(*j.ctx(), j.gens(), &cfg).map_err(fail)?;
        let mut gens = j.gens().to_vec();
        let len = gens.len();
        gens.rotate_left(seed as usize % len);
        gens.reverse();
        gens[0] = gens[0].scale(&Coeff::from_ratio(-7, 2));
        prop_assert_eq!(buchberger(*j.ctx(), &gens, &cfg).map_err(fail)?, basis);
        Ok(())
    })?;

    run_property("J^k inside J^(k)", (with_edges(), 2usize..=3), |(g, k)| {
        prop_assert!(power_contained_in_symbolic(&g, k, &cfg).map_err(fail)?);
        Ok(())
    })?;

    let ctx = RingContext::new(3, 0).unwrap();
    let ideal = proptest::collection::vec(proptest::collection::vec(0u32..=2, 6), 1..5)
        .prop_map(move |ms| MonomialIdeal::new(ctx, ms.iter().map(|e| Monomial::from_exponents(&ctx, e)).collect()));
    let probes = proptest::collection::vec(proptest::collection::vec(0u32..=3, 6), 1..10);
    run_property("monomial intersection vs divisibility", (ideal.clone(), ideal, probes), |(a, b, ps)| {
        let meet = mono_intersect(&a, &b).map_err(fail)?;
        let divides = |i: &MonomialIdeal, m: &Monomial| {
            i.gens().iter().any(|g| (0..6).all(|v| g.exponent(v) <= m.exponent(v)))
        };
        for e in ps {
            let m = Monomial::from_exponents(&ctx, &e);
            prop_assert_eq!(meet.contains(&m), divides(&a, &m) && divides(&b, &m));
        }
        Ok(())
    })?;

    let small = RingContext::new(2, 0).unwrap();
    let (x, y, z) = (Monomial::var(&small, 0), Monomial::var(&small, 1), Monomial::var(&small, 2));
    let tri = MonomialIdeal::new(small, vec![x.mul(&y), y.mul(&z), x.mul(&z)]);
    let xyz = x.mul(&y).mul(&z);
    check(symbolic_power_squarefree(&tri, 2).map_err(err)?.contains(&xyz), "xyz not in I^(2)")?;
    check(!mono_power(&tri, 2).map_err(err)?.contains(&xyz), "xyz in I^2")?;
    Ok("S-pair, GB uniqueness, J^k ⊆ J^(k), monomial intersection, triangle xyz".into())
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (n, run) in criteria {
        if filter.as_ref().is_some_and(|f| f != &n.to_string()) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[criterion {n}] PASS {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[criterion {n}] FAIL {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
