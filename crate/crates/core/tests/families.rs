use kfcrit_core::criticality::is_k_factor_critical_by_definition;
use kfcrit_core::families::{
    clique_join_clique_and_singletons_poly, clique_join_independent_radius, extremal_for, phi, proof_case_graph,
    star_of_cliques, threshold, Regime,
};
use kfcrit_core::graph::Graph;
use kfcrit_core::spectral::{char_poly, is_equitable, quotient_matrix, spectral_radius, COMPUTE_TOLERANCE};
use kfcrit_core::verify::verify_sharpness;

fn rho(g: &Graph) -> f64 {
    spectral_radius(g, COMPUTE_TOLERANCE).unwrap()
}

/// det(xI − Q) for the arrowhead quotient of `K_d ∨ (K_{n₁} ∪ … ∪ K_{n_β})`.
fn arrowhead_det(d: usize, sizes: &[usize], x: f64) -> f64 {
    let d = d as f64;
    let diag: Vec<f64> = sizes.iter().map(|&s| x - (s as f64 - 1.0)).collect();
    let full: f64 = diag.iter().product();
    let mut det = (x - (d - 1.0)) * full;
    for (i, &s) in sizes.iter().enumerate() {
        let others: f64 = diag.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).product();
        det -= d * s as f64 * others;
    }
    det
}

#[test]
fn star_of_cliques_quotient_matches_arrowhead_determinant() {
    let cases: [(usize, &[usize]); 5] = [(1, &[1, 1, 1]), (2, &[3, 1, 1]), (3, &[5, 3, 1, 1]), (4, &[2, 2]), (2, &[7])];
    for (d, sizes) in cases {
        let fam = star_of_cliques(d, sizes).unwrap();
        assert!(is_equitable(&fam.graph, &fam.partition).unwrap());
        let p = char_poly(&quotient_matrix(&fam.graph, &fam.partition).unwrap());
        assert_eq!(p.degree(), sizes.len() + 1);
        for i in 0..20 {
            let x = -6.0 + 0.65 * i as f64;
            let want = arrowhead_det(d, sizes, x);
            assert!((p.eval(x) - want).abs() <= 1e-9 * want.abs().max(1.0), "{} at {x}", fam.name);
        }
        assert!((p.largest_real_root(None).unwrap() - rho(&fam.graph)).abs() < 1e-9);
    }
}

#[test]
fn phi_is_the_quotient_polynomial_of_the_general_extremal_graph() {
    for k in 0..=4 {
        for n in (k + 4..=k + 16).step_by(2) {
            let t = threshold(n, k).unwrap();
            let fam = extremal_for(n, k).unwrap();
            let q = quotient_matrix(&fam.graph, &fam.partition).unwrap();
            if t.regime == Regime::GeneralCubic {
                assert_eq!(char_poly(&q), phi(n, k));
            }
            assert_eq!(char_poly(&q), t.defining_polynomial, "(n,k)=({n},{k})");
        }
    }
}

#[test]
fn extremal_graphs_attain_the_threshold_up_to_order_14() {
    for k in 0..=10 {
        for n in (k + 4..=14).step_by(2) {
            let rec = verify_sharpness(n, k).unwrap();
            assert!(rec.confirmed(), "(n,k)=({n},{k}): {:?}", rec.findings);
            let fam = extremal_for(n, k).unwrap();
            assert!(!is_k_factor_critical_by_definition(&fam.graph, k).unwrap().is_critical);
        }
    }
}

#[test]
fn larger_extremal_graphs_use_the_structural_certificate() {
    for (n, k) in [(20, 0), (21, 1), (24, 4), (30, 6)] {
        let rec = verify_sharpness(n, k).unwrap();
        assert!(rec.confirmed(), "(n,k)=({n},{k}): {:?}", rec.findings);
        assert!(rec.extremal.certificate_valid);
    }
}

#[test]
fn order_eight_k_zero_reports_both_constructions() {
    let rec = verify_sharpness(8, 0).unwrap();
    assert_eq!(rec.regime, Regime::GeneralCubic);
    let companion = rec.companion.expect("companion for (0, 8)");
    assert!((companion.rho - 5.0).abs() < 1e-9);
    assert!(rec.threshold > companion.rho);
}

#[test]
fn case_one_graphs_have_the_closed_form_radius() {
    for k in 0..=3 {
        for d in k + 1..=k + 5 {
            let fam = proof_case_graph(d, k, 1).unwrap();
            assert_eq!(fam.graph.order(), 2 * d - k + 2);
            let want = clique_join_independent_radius(d, d - k + 2);
            assert!((rho(&fam.graph) - want).abs() < 1e-9, "d={d}, k={k}");
        }
    }
}

#[test]
fn three_block_case_graphs_match_their_cubic() {
    for k in 0..=3 {
        for d in k + 1..=k + 4 {
            for n1 in [3, 5, 7] {
                let fam = proof_case_graph(d, k, n1).unwrap();
                let n = fam.graph.order();
                assert_eq!(n, 2 * d + n1 - k + 1);
                let q = quotient_matrix(&fam.graph, &fam.partition).unwrap();
                assert_eq!(char_poly(&q), clique_join_clique_and_singletons_poly(n, d, k));
                if n <= 16 {
                    assert!(!is_k_factor_critical_by_definition(&fam.graph, k).unwrap().is_critical);
                }
            }
        }
    }
}
