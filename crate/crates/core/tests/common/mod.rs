//! Oracles and generators shared by the integration suites. Everything here
//! recomputes results through routes independent of the library internals
//! under test.
//!
//! Each test target compiles its own copy, so helpers a target does not
//! call are expected.
#![allow(dead_code)]

use std::path::PathBuf;

use morseforest::*;
use num_bigint::BigInt;

pub fn octahedron() -> SimplicialComplex {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/octahedron.json");
    complex_from_path(&path).expect("bundled octahedron fixture")
}

/// All labeled connected simple graphs on 2..=`max_n` vertices, as
/// complexes. Every edge subset of K_n is tested for spanning
/// connectivity, so each graph appears exactly once per labeling.
pub fn connected_graphs_upto(max_n: u32) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs = all_pairs(n);
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<Vec<u32>> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect();
            if edges.is_empty() || !spans_connected(n, &edges) {
                continue;
            }
            out.push(SimplicialComplex::from_maximal_faces(&edges).unwrap());
        }
    }
    out
}

/// All labeled forests with at least one edge on exactly 2..=`max_n`
/// vertices, isolated vertices kept as 0-cells. Enumerated by union-find
/// backtracking over the edges of K_n, so only acyclic subsets are built.
pub fn labeled_forests_upto(max_n: u32) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs = all_pairs(n);
        let mut chosen: Vec<usize> = Vec::new();
        grow_forests(n, &pairs, 0, &mut chosen, &mut out);
    }
    out
}

fn grow_forests(
    n: u32,
    pairs: &[Vec<u32>],
    next: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<SimplicialComplex>,
) {
    if !chosen.is_empty() {
        let mut faces: Vec<Vec<u32>> = chosen.iter().map(|&i| pairs[i].clone()).collect();
        let used: std::collections::HashSet<u32> = faces.iter().flatten().copied().collect();
        for v in 0..n {
            if !used.contains(&v) {
                faces.push(vec![v]);
            }
        }
        out.push(SimplicialComplex::from_maximal_faces(&faces).unwrap());
    }
    for i in next..pairs.len() {
        chosen.push(i);
        let edges: Vec<&Vec<u32>> = chosen.iter().map(|&j| &pairs[j]).collect();
        if is_acyclic_edge_set(n, &edges) {
            grow_forests(n, pairs, i + 1, chosen, out);
        }
        chosen.pop();
    }
}

fn all_pairs(n: u32) -> Vec<Vec<u32>> {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push(vec![a, b]);
        }
    }
    pairs
}

fn uf_find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn spans_connected(n: u32, edges: &[Vec<u32>]) -> bool {
    let mut parent: Vec<usize> = (0..n as usize).collect();
    for e in edges {
        let (a, b) = (
            uf_find(&mut parent, e[0] as usize),
            uf_find(&mut parent, e[1] as usize),
        );
        parent[a] = b;
    }
    (1..n as usize).all(|v| uf_find(&mut parent, v) == uf_find(&mut parent, 0))
}

fn is_acyclic_edge_set(n: u32, edges: &[&Vec<u32>]) -> bool {
    let mut parent: Vec<usize> = (0..n as usize).collect();
    for e in edges {
        let (a, b) = (
            uf_find(&mut parent, e[0] as usize),
            uf_find(&mut parent, e[1] as usize),
        );
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Brute-force count of acyclic fitting orientations of one rooted forest:
/// every bijection from the root complement onto the forest respecting
/// face incidence is generated, and each complete one is tested for
/// directed cycles among the forest cells.
pub fn acyclic_orientation_count(k: &SimplicialComplex, rf: &RootedForest) -> usize {
    let forest = rf.forest();
    let cobase = rf.cobase();
    let candidates: Vec<Vec<usize>> = cobase
        .iter()
        .map(|tail| {
            forest
                .iter()
                .enumerate()
                .filter(|(_, head)| contains_cell(head, tail))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    // incidence[h][t]: tail t is a face of forest cell h.
    let incidence: Vec<Vec<bool>> = forest
        .iter()
        .map(|head| cobase.iter().map(|tail| contains_cell(head, tail)).collect())
        .collect();
    let mut assignment = vec![usize::MAX; cobase.len()];
    let mut used = vec![false; forest.len()];
    let mut found = 0usize;
    assign(
        &candidates,
        &incidence,
        0,
        &mut assignment,
        &mut used,
        &mut found,
    );
    let _ = k;
    found
}

fn assign(
    candidates: &[Vec<usize>],
    incidence: &[Vec<bool>],
    t: usize,
    assignment: &mut [usize],
    used: &mut [bool],
    found: &mut usize,
) {
    if t == candidates.len() {
        if matching_is_acyclic(incidence, assignment) {
            *found += 1;
        }
        return;
    }
    for &h in &candidates[t] {
        if used[h] {
            continue;
        }
        used[h] = true;
        assignment[t] = h;
        assign(candidates, incidence, t + 1, assignment, used, found);
        assignment[t] = usize::MAX;
        used[h] = false;
    }
}

/// Cycle test over the matched forest cells: h → h' when the tail assigned
/// to h' is also a face of h. Kahn peeling; leftovers mean a cycle.
fn matching_is_acyclic(incidence: &[Vec<bool>], assignment: &[usize]) -> bool {
    let m = incidence.len();
    let mut head_tail = vec![usize::MAX; m];
    for (t, &h) in assignment.iter().enumerate() {
        head_tail[h] = t;
    }
    let nodes: Vec<usize> = (0..m).filter(|&h| head_tail[h] != usize::MAX).collect();
    let mut indeg = vec![0usize; m];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &a in &nodes {
        for &b in &nodes {
            if a != b && incidence[a][head_tail[b]] {
                out[a].push(b);
                indeg[b] += 1;
            }
        }
    }
    let mut queue: Vec<usize> = nodes.iter().copied().filter(|&h| indeg[h] == 0).collect();
    let mut seen = 0usize;
    while let Some(h) = queue.pop() {
        seen += 1;
        for &b in &out[h] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                queue.push(b);
            }
        }
    }
    seen == nodes.len()
}

fn contains_cell(big: &Cell, small: &Cell) -> bool {
    small
        .vertices()
        .iter()
        .all(|v| big.vertices().binary_search(v).is_ok())
}

/// Critical-cell counts per dimension of a top-level matching: the matched
/// pairs empty one slot at the top two levels, everything else is critical.
pub fn critical_counts(k: &SimplicialComplex, vf: &VectorField) -> Vec<usize> {
    let d = k.dim();
    let mut counts: Vec<usize> = (0..=d).map(|i| k.n_cells(i)).collect();
    for (tail, head) in vf.pairs() {
        counts[tail.dim()] -= 1;
        counts[head.dim()] -= 1;
    }
    counts
}

pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    (0..=k.dim())
        .map(|i| homology(k, i).unwrap().betti)
        .collect()
}

/// Weak Morse inequalities against precomputed Betti numbers: every
/// critical count dominates the Betti number, and the alternating sums
/// agree with the Euler characteristic.
pub fn weak_morse_inequalities_hold(betti: &[usize], chi: i64, counts: &[usize]) -> bool {
    if counts.iter().zip(betti).any(|(c, b)| c < b) {
        return false;
    }
    let alt = |xs: &[usize]| -> i64 {
        xs.iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum()
    };
    alt(counts) == chi && alt(betti) == chi
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn bigs(vs: &[i64]) -> Vec<BigInt> {
    vs.iter().map(|&v| BigInt::from(v)).collect()
}
