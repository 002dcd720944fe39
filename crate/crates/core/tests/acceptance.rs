//! Acceptance gate: twelve pinned end-to-end checks, one test per
//! criterion. Each prints a single `criterion NN ...: pass` line on
//! success and carries its own wall-clock budget.

mod common;

use std::time::{Duration, Instant};

use common::*;
use morseforest::*;
use num_bigint::BigInt;
use num_traits::Zero;

fn opts() -> CensusOptions {
    CensusOptions::default()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn criterion_01_cycle4_graph_identity() {
    let start = Instant::now();
    let g = builtin("cycle", Some(4)).unwrap();
    let report = verify_graph_theorem(&g, &opts()).unwrap();
    assert!(report.verdict.is_pass());
    let expected = strings(&["0", "16", "20", "8", "1"]);
    assert_eq!(report.lhs, expected);
    assert_eq!(report.rhs, expected);
    assert!(report.witnesses.is_empty());
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1 s");
    println!("criterion 01 (cycle(4) graph identity): pass");
}

#[test]
fn criterion_02_star_census_formula() {
    let start = Instant::now();
    for n in 2..=6u64 {
        let s = builtin("star", Some(n as u32)).unwrap();
        let census = gradient_census(&s).unwrap();
        assert_eq!(census.counts.len() as u64, n + 1);
        for l in 0..=n {
            let expected = binomial(n, l) * (n + 1 - l);
            assert_eq!(
                census.counts[l as usize],
                BigInt::from(expected),
                "star({n}) with {l} unpaired edges"
            );
        }
    }
    assert!(start.elapsed() < Duration::from_secs(5), "budget 5 s");
    println!("criterion 02 (star census formula): pass");
}

#[test]
fn criterion_03_complete4_kirchhoff_count() {
    let start = Instant::now();
    let g = builtin("complete", Some(4)).unwrap();
    // First Betti number 6 - 4 + 1 = 3: a maximal acyclic matching leaves
    // exactly 3 edges unpaired, and there are trees x roots = 16 x 4 such
    // matchings.
    let census = gradient_census(&g).unwrap();
    assert_eq!(census.counts[3], BigInt::from(64));
    assert_eq!(spanning_tree_count(&g).unwrap(), BigInt::from(16));
    let report = verify_kirchhoff_gradients(&g, &opts()).unwrap();
    assert!(report.verdict.is_pass());
    assert_eq!(report.lhs, strings(&["64"]));
    assert!(start.elapsed() < Duration::from_secs(1), "budget 1 s");
    println!("criterion 03 (complete(4) spanning-tree count 64 = 16 x 4): pass");
}

#[test]
fn criterion_04_moebius_defect() {
    let start = Instant::now();
    let m = builtin("moebius", None).unwrap();
    let charpoly = char_poly_shifted(&laplacian(&m, 2).unwrap()).unwrap();
    assert_eq!(
        charpoly.coeffs(),
        &bigs(&[0, 0, 0, 0, 0, 125, 275, 225, 85, 15, 1])[..]
    );
    let census = gradient_census(&m).unwrap().polynomial();
    assert_eq!(
        census.coeffs(),
        &bigs(&[0, 0, 0, 0, 0, 121, 275, 225, 85, 15, 1])[..]
    );
    let report = verify_main_theorem(&m, &opts()).unwrap();
    assert!(report.verdict.is_pass());
    assert_eq!(report.witnesses.len(), 1);
    let w = &report.witnesses[0];
    assert_eq!(w.power, 5);
    assert_eq!(w.epsilon, big(4));
    assert_eq!(w.forests.len(), 1, "exactly one non-collapsing forest");
    assert_eq!(relative_homology_order(&m, &w.forests[0]).unwrap(), big(2));
    assert!(start.elapsed() < Duration::from_secs(10), "budget 10 s");
    println!("criterion 04 (moebius defect 4 = one forest of homology order 2): pass");
}

#[test]
fn criterion_05_bipyramid_defect() {
    let start = Instant::now();
    let b = builtin("bipyramid", None).unwrap();
    let charpoly = char_poly_shifted(&laplacian(&b, 2).unwrap()).unwrap();
    assert_eq!(
        charpoly.coeffs(),
        &bigs(&[0, 0, 0, 0, 1125, 1425, 710, 174, 21, 1])[..]
    );
    let census = gradient_census(&b).unwrap().polynomial();
    assert_eq!(
        census.coeffs(),
        &bigs(&[0, 0, 0, 0, 1119, 1425, 710, 174, 21, 1])[..]
    );
    let report = verify_main_theorem(&b, &opts()).unwrap();
    assert!(report.verdict.is_pass());
    assert_eq!(report.witnesses.len(), 1);
    let w = &report.witnesses[0];
    assert_eq!(w.power, 4);
    assert_eq!(w.epsilon, big(6));
    assert_eq!(w.forests.len(), 6, "six non-collapsing forests");
    for rf in &w.forests {
        assert_eq!(relative_homology_order(&b, rf).unwrap(), big(1));
    }
    assert!(start.elapsed() < Duration::from_secs(10), "budget 10 s");
    println!("criterion 05 (bipyramid defect 6 = six forests of homology order 1): pass");
}

#[test]
fn criterion_06_orientable_identity_zero_delta() {
    for k in [
        builtin("simplex_boundary", Some(3)).unwrap(),
        octahedron(),
        builtin("simplex_boundary", Some(4)).unwrap(),
    ] {
        let start = Instant::now();
        assert!(k.is_orientable().unwrap(), "{}", k.display_name());
        let report = verify_main_theorem(&k, &opts()).unwrap();
        assert!(report.verdict.is_pass(), "{}", k.display_name());
        assert!(
            report.delta.iter().all(|c| c == "0"),
            "{}: delta {:?}",
            k.display_name(),
            report.delta
        );
        assert!(
            start.elapsed() < Duration::from_secs(60),
            "{}: budget 60 s",
            k.display_name()
        );
    }
    println!("criterion 06 (orientable boundaries verify with zero delta): pass");
}

#[test]
fn criterion_07_forest_polynomial_matches_charpoly() {
    let start = Instant::now();
    let guard = Guard::default();
    let mut complexes = standard_roster();
    complexes.push(octahedron());
    complexes.extend(morseforest::builtins::random_pure_2_complexes(25, 20260816, 6, 8));
    for k in complexes {
        let fc = forest_census(&k, &guard).unwrap();
        let charpoly = char_poly_shifted(&laplacian(&k, k.dim()).unwrap()).unwrap();
        assert_eq!(
            fc.polynomial(),
            charpoly,
            "{}: forest generating polynomial vs det(lap + lambda I)",
            k.display_name()
        );
    }
    assert!(start.elapsed() < Duration::from_secs(120), "budget 120 s");
    println!("criterion 07 (forest generating polynomial = charpoly, roster + 25 random): pass");
}

#[test]
fn criterion_08_fitting_orientation_uniqueness() {
    let guard = Guard::default();
    let mut forests_checked = 0usize;
    for k in standard_roster() {
        visit_rooted_forests(&k, &guard, None, |rf| {
            if rf.forest().len() > 6 {
                return;
            }
            let count = acyclic_orientation_count(&k, &rf);
            assert!(
                count <= 1,
                "{}: {:?} has {count} acyclic fitting orientations",
                k.display_name(),
                rf.forest()
            );
            let found = acyclic_fitting_orientation(&k, &rf).unwrap();
            assert_eq!(found.is_some(), count == 1, "{}", k.display_name());
            if let Some(vf) = found {
                assert_eq!(vf.len(), rf.forest().len());
            }
            forests_checked += 1;
        })
        .unwrap();
    }
    assert!(forests_checked > 100_000, "exhaustive scale: {forests_checked}");
    println!("criterion 08 (fitting orientations unique, peeling agrees, {forests_checked} forests): pass");
}

#[test]
fn criterion_09_realization_round_trip() {
    let mut complexes = standard_roster();
    complexes.push(octahedron());
    let mut matchings_checked = 0usize;
    for k in complexes {
        assert!(k.n_cells(k.dim()) <= 12, "{}", k.display_name());
        let betti = betti_numbers(&k);
        let chi = k.euler_characteristic();
        let fields = gradient_vector_fields(&k, &opts()).unwrap();
        for vf in fields {
            let f = realize_morse_function(&k, &vf).unwrap();
            assert!(f.is_discrete_morse(&k), "{}", k.display_name());
            assert!(f.exclusivity_holds(&k), "{}", k.display_name());
            let counts = critical_counts(&k, &vf);
            assert!(
                weak_morse_inequalities_hold(&betti, chi, &counts),
                "{}: counts {:?} betti {:?}",
                k.display_name(),
                counts,
                betti
            );
            let induced = f.induced_vector_field(&k).unwrap();
            assert_eq!(induced.pairs(), vf.pairs(), "{}", k.display_name());
            matchings_checked += 1;
        }
    }
    assert!(matchings_checked > 300_000, "exhaustive scale: {matchings_checked}");
    println!("criterion 09 (Morse realization round-trips on {matchings_checked} matchings): pass");
}

#[test]
fn criterion_10_projective_plane_defect_positive() {
    let start = Instant::now();
    let p = builtin("projective_plane", None).unwrap();
    assert!(p.is_pseudomanifold());
    assert!(!p.is_orientable().unwrap());
    let fc = forest_census(&p, &Guard::default()).unwrap();
    assert_eq!(fc.tails - fc.heads, 5);
    assert!(fc.defect[5] > BigInt::zero(), "eps_5 = {}", fc.defect[5]);
    assert!(start.elapsed() < Duration::from_secs(30), "budget 30 s");
    println!(
        "criterion 10 (projective plane eps_5 = {} > 0): pass",
        fc.defect[5]
    );
}

#[test]
fn criterion_11_graph_identity_exhaustive() {
    let start = Instant::now();
    let graphs = connected_graphs_upto(5);
    assert_eq!(graphs.len(), 771, "labeled connected simple graphs on 2..=5 vertices");
    for g in &graphs {
        let report = verify_graph_theorem(g, &opts()).unwrap();
        assert!(report.verdict.is_pass(), "failing graph: {:?}", g.maximal_faces());
    }
    assert!(start.elapsed() < Duration::from_secs(60), "budget 60 s");
    println!("criterion 11 (graph identity on all 771 connected graphs <= 5 vertices): pass");
}

#[test]
fn criterion_12_matching_adjacency_exhaustive() {
    let start = Instant::now();
    let forests = labeled_forests_upto(7);
    assert_eq!(forests.len(), 40_225, "labeled forests on 2..=7 vertices");
    for f in &forests {
        let report = verify_matching_adjacency(f, &opts()).unwrap();
        assert!(
            report.verdict.is_pass(),
            "failing forest: {:?}",
            f.maximal_faces()
        );
    }
    assert!(start.elapsed() < Duration::from_secs(60), "budget 60 s");
    println!("criterion 12 (matching/adjacency bridge on all 40225 labeled forests <= 6 edges): pass");
}
