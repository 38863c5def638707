//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kfcrit_core::criticality::{is_k_factor_critical_by_definition, is_k_factor_critical_by_favaron};
use kfcrit_core::enumerate::enumerate_connected_graphs;
use kfcrit_core::families::{extremal_general, extremal_k_plus_6, extremal_k_plus_8, FamilyGraph};
use kfcrit_core::format::{decode_graph6, encode_graph6};
use kfcrit_core::graph::{sequential_join, Graph, VertexSet};
use kfcrit_core::matching::{brute_force_max_matching_size, max_matching};
use kfcrit_core::poly::Polynomial;
use kfcrit_core::spectral::{
    char_poly, quotient_matrix, quotient_spectral_radius, spectral_radius, Partition,
};
use kfcrit_core::verify::{run_sweep, SweepConfig};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TOL: f64 = 1e-9;
const STRICT_MARGIN: f64 = 1e-10;
const GENERAL_PAIRS: [(usize, usize); 6] = [(4, 0), (8, 0), (5, 1), (11, 1), (6, 2), (10, 2)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rho(g: &Graph) -> f64 {
    spectral_radius(g, 1e-12).expect("nonempty graph")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// ρ matches `expected` and Favaron's first violating set is `block` with
/// `odd` odd components.
fn check_extremal(fam: &FamilyGraph, k: usize, expected: f64, block: VertexSet, odd: usize) -> Result<(), String> {
    let r = rho(&fam.graph);
    ensure((r - expected).abs() < TOL, || format!("{}: rho {r} vs {expected}", fam.name))?;
    let verdict = is_k_factor_critical_by_favaron(&fam.graph, k).map_err(|e| e.to_string())?;
    let cert = verdict.certificate.ok_or_else(|| format!("{} reported {k}-factor-critical", fam.name))?;
    ensure(cert.witness == block && cert.odd_components == Some(odd), || {
        format!("{}: certificate {:?} o={:?}, expected {:?} o={odd}", fam.name, cert.witness, cert.odd_components, block)
    })?;
    ensure(odd > block.len() - k, || "certificate does not violate the bound".into())?;
    ensure(cert.is_valid_for(&fam.graph, k), || "certificate does not re-validate".into())
}

fn criterion_1() -> Outcome {
    let fam = extremal_k_plus_6(0);
    let expected = (1.0 + 33f64.sqrt()) / 2.0;
    check_extremal(&fam, 0, expected, VertexSet::range(0..2), 4)?;
    Ok(format!("rho(K2 v 4K1) = {:.10}, D = V(K2), o = 4 > 2", rho(&fam.graph)))
}

fn criterion_2() -> Outcome {
    let fam = extremal_k_plus_8(1);
    let expected = (3.0 + 89f64.sqrt()) / 2.0;
    check_extremal(&fam, 1, expected, VertexSet::range(0..4), 5)?;
    Ok(format!("rho(K4 v 5K1) = {:.10}, D = V(K4), o = 5 > 3", rho(&fam.graph)))
}

fn cubic(n: usize, k: usize) -> Polynomial {
    let (n, k) = (n as i64, k as i64);
    Polynomial::from_integers(&[1, -(n - 4), -(n + 2 * k - 1), 2 * (k + 1) * (n - k - 4)])
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for (n, k) in GENERAL_PAIRS {
        let fam = extremal_general(n, k).map_err(|e| e.to_string())?;
        let root = cubic(n, k).largest_real_root(None).map_err(|e| e.to_string())?;
        let middle = VertexSet::range(n - k - 3..n - 2);
        check_extremal(&fam, k, root, middle, 3).map_err(|e| format!("(n,k)=({n},{k}): {e}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("6 pairs, D = middle block, o = 3 > 1, {elapsed:?}"))
}

fn criterion_4() -> Outcome {
    for (n, k) in GENERAL_PAIRS {
        let fam = extremal_general(n, k).map_err(|e| e.to_string())?;
        let q = quotient_matrix(&fam.graph, &fam.partition).map_err(|e| e.to_string())?;
        let p = char_poly(&q);
        ensure(p == cubic(n, k), || format!("(n,k)=({n},{k}): {p} vs {}", cubic(n, k)))?;
    }
    Ok("exact rational coefficients match for all 6 pairs".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for (n, k) in [(4, 0), (6, 0), (5, 1), (7, 1), (6, 2)] {
        let out = run_sweep(&SweepConfig::builtin(n, k)).map_err(|e| e.to_string())?;
        let r = &out.report;
        ensure(r.counterexamples.is_empty() && r.theorem_holds, || {
            format!("(n,k)=({n},{k}): {} counterexamples", r.counterexamples.len())
        })?;
        summary.push(format!("({n},{k}): {}/{} above", r.totals.above_threshold, r.totals.hypothesis_passed));
    }
    Ok(format!("zero counterexamples [{}] in {:?}", summary.join(", "), start.elapsed()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).map_err(|e| e.to_string())? {
            for k in (0..=2).filter(|&k| k % 2 == n % 2 && k <= n) {
                let a = is_k_factor_critical_by_definition(&g, k).map_err(|e| e.to_string())?;
                let b = is_k_factor_critical_by_favaron(&g, k).map_err(|e| e.to_string())?;
                ensure(a.is_critical == b.is_critical, || {
                    format!("disagree on {} with k={k}", encode_graph6(&g).unwrap())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (graph, k) pairs agree in {:?}", start.elapsed()))
}

fn random_join(rng: &mut StdRng) -> (Graph, Partition) {
    loop {
        let parts: Vec<Graph> = (0..rng.gen_range(1..=5))
            .map(|_| {
                let size = rng.gen_range(1..=6);
                if rng.gen_bool(0.5) {
                    Graph::complete(size)
                } else {
                    Graph::empty(size)
                }
            })
            .collect();
        if parts.iter().map(Graph::order).sum::<usize>() <= 20 {
            let a = sequential_join(&parts).expect("nonempty");
            return (a.graph, Partition::from_ranges(&a.blocks));
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let (g, p) = random_join(&mut rng);
        let q = quotient_spectral_radius(&g, &p).map_err(|e| format!("sample {i}: {e}"))?;
        let diff = (q - rho(&g)).abs();
        ensure(diff < TOL, || format!("sample {i}: {g:?} differs by {diff:e}"))?;
        worst = worst.max(diff);
    }
    Ok(format!("200 joins, max |quotient - power| = {worst:.2e}"))
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let mut smallest = f64::INFINITY;
    let mut done = 0;
    while done < 500 {
        let n = rng.gen_range(3..=15);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        if !g.is_connected() || non_edges.is_empty() {
            continue;
        }
        let (u, v) = non_edges[rng.gen_range(0..non_edges.len())];
        let gap = rho(&g.with_edge(u, v).unwrap()) - rho(&g);
        ensure(gap > STRICT_MARGIN, || format!("{g:?} + ({u},{v}) raised rho by {gap:e}"))?;
        smallest = smallest.min(gap);
        done += 1;
    }
    Ok(format!("500 pairs, smallest increase {smallest:.3e}"))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    for i in 0..300 {
        let density = [0.2, 0.5, 0.8][i % 3];
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, density);
        let m = max_matching(&g);
        ensure(m.is_valid_in(&g), || format!("invalid matching on {g:?}"))?;
        let oracle = brute_force_max_matching_size(&g).map_err(|e| e.to_string())?;
        ensure(m.len() == oracle, || format!("{g:?}: blossom {} vs brute force {oracle}", m.len()))?;
    }
    Ok("300 graphs agree".into())
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).map_err(|e| e.to_string())? {
            let text = encode_graph6(&g).map_err(|e| e.to_string())?;
            ensure(decode_graph6(&text).ok() == Some(g.clone()), || format!("{text} does not round-trip"))?;
            count += 1;
        }
    }
    let k4 = decode_graph6("C~").map_err(|e| e.to_string())?;
    ensure(k4 == Graph::complete(4), || "C~ is not K4".into())?;
    ensure(encode_graph6(&k4).as_deref() == Ok("C~"), || "K4 does not encode to C~".into())?;
    Ok(format!("{count} graphs round-trip, C~ byte-exact"))
}

fn criterion_11() -> Outcome {
    let mut worst: f64 = 0.0;
    for d in 1..=8 {
        for m in 1..=8 {
            let g = sequential_join(&[Graph::complete(d), Graph::empty(m)]).unwrap().graph;
            let (df, mf) = (d as f64, m as f64);
            let closed = (df - 1.0 + ((df - 1.0).powi(2) + 4.0 * df * mf).sqrt()) / 2.0;
            let diff = (rho(&g) - closed).abs();
            ensure(diff < TOL, || format!("d={d}, n-d={m}: off by {diff:e}"))?;
            worst = worst.max(diff);
        }
    }
    Ok(format!("64 graphs, max error {worst:.2e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("sharpness n = k+6 (K2 v 4K1)", criterion_1),
        ("sharpness n = k+8 (K4 v 5K1)", criterion_2),
        ("sharpness general cubic regime", criterion_3),
        ("quotient polynomial identity", criterion_4),
        ("exhaustive sweeps, zero counterexamples", criterion_5),
        ("definition vs Favaron deciders agree", criterion_6),
        ("equitable quotient radius equals rho", criterion_7),
        ("adding an edge strictly raises rho", criterion_8),
        ("blossom matches brute force", criterion_9),
        ("graph6 round trip", criterion_10),
        ("K_d v (n-d)K1 closed form", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {:>2}: {name} -- {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} -- {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
