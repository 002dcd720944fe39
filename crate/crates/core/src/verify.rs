//! One-shot verifiers. Each computes both sides of a counting identity
//! exactly and reports them coefficient by coefficient:
//!
//! * `graph`: for a graph, det(L + λI) equals the census polynomial of
//!   acyclic vertex-edge pairings.
//! * `main`: for a complex of top dimension d, det(Δ_d + λI) equals the
//!   census polynomial plus the defect carried by non-collapsing rooted
//!   forests, and the census alone equals the collapsing part.
//! * `kirchhoff`: for a connected graph on n vertices, the λ¹ coefficient
//!   is n times the number of spanning trees.
//! * `matching-adjacency`: for a forest, pairing counts reappear with
//!   alternating signs in det(A + λI) of the vertex-edge incidence graph.
//!
//! [`conjecture_scan`] sweeps a family of complexes and records each one's
//! defect profile next to its orientability.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::builtins::{random_pure_2_complexes, standard_roster};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::forests::{collapses_to_root, forest_census, is_forest, visit_rooted_forests, RootedForest};
use crate::linalg::{
    adjacency_matrix, char_poly_shifted, determinant, laplacian, IntegerPolynomial,
};
use crate::morse::{gradient_census_with, CensusOptions};

/// Outcome of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// The non-collapsing rooted forests behind one nonzero defect coefficient.
#[derive(Debug, Clone)]
pub struct DefectWitness {
    /// Root size, which is also the λ-power the defect contributes to.
    pub power: usize,
    /// Sum of squared determinants over `forests`.
    pub epsilon: BigInt,
    pub forests: Vec<RootedForest>,
}

/// Both sides of one identity as ascending decimal coefficient lists of
/// equal length, plus their entrywise difference.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub complex: String,
    pub theorem: String,
    /// Determinant side.
    pub lhs: Vec<String>,
    /// Enumeration side.
    pub rhs: Vec<String>,
    /// `lhs - rhs`.
    pub delta: Vec<String>,
    pub witnesses: Vec<DefectWitness>,
    pub verdict: Verdict,
    /// Wall-clock milliseconds the verification took.
    pub ms: u128,
}

fn report(
    k: &SimplicialComplex,
    theorem: &str,
    lhs: &IntegerPolynomial,
    rhs: &IntegerPolynomial,
    witnesses: Vec<DefectWitness>,
    extra_ok: bool,
    start: Instant,
) -> VerificationReport {
    let delta = lhs.sub(rhs);
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    let verdict = if delta.is_zero() && extra_ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    VerificationReport {
        complex: k.display_name(),
        theorem: theorem.to_string(),
        lhs: lhs.decimal_strings(len),
        rhs: rhs.decimal_strings(len),
        delta: delta.decimal_strings(len),
        witnesses,
        verdict,
        ms: start.elapsed().as_millis(),
    }
}

/// Checks det(L + λI) of a graph against its census polynomial. In
/// dimension 1 the two agree exactly; there is no defect term.
pub fn verify_graph_theorem(
    g: &SimplicialComplex,
    options: &CensusOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if g.dim() != 1 {
        return Err(Error::NotAGraph(g.dim()));
    }
    let lhs = char_poly_shifted(&laplacian(g, 1)?)?;
    let rhs = gradient_census_with(g, options)?.polynomial();
    Ok(report(g, "graph", &lhs, &rhs, Vec::new(), true, start))
}

/// Checks det(Δ_d + λI) against census plus defect, and the census alone
/// against the collapsing forests, in one enumeration pass. Every nonzero
/// defect coefficient comes back with its witnessing non-collapsing
/// forests.
pub fn verify_main_theorem(
    k: &SimplicialComplex,
    options: &CensusOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let d = k.dim();
    if d == 0 {
        return Err(Error::DimensionOutOfRange { d: 0, max: 0 });
    }
    let lhs = char_poly_shifted(&laplacian(k, d)?)?;
    let census = gradient_census_with(k, options)?.polynomial();

    let n = k.n_cells(d - 1);
    let mut collapsing = vec![BigInt::zero(); n + 1];
    let mut defect = vec![BigInt::zero(); n + 1];
    let mut defect_forests: Vec<Vec<RootedForest>> = vec![Vec::new(); n + 1];
    visit_rooted_forests(k, &options.guard, None, |rf| {
        let i = rf.root().len();
        let collapses = collapses_to_root(k, &rf)
            .expect("enumerated rooted forests index cleanly into their complex");
        if collapses {
            collapsing[i] += rf.weight();
        } else {
            defect[i] += rf.weight();
            defect_forests[i].push(rf);
        }
    })?;

    let defect_poly = IntegerPolynomial::from_coeffs(defect.clone());
    let rhs = census.add(&defect_poly);
    let census_matches_collapsing = census == IntegerPolynomial::from_coeffs(collapsing);
    let witnesses = defect
        .iter()
        .enumerate()
        .filter(|(_, eps)| !eps.is_zero())
        .map(|(power, eps)| DefectWitness {
            power,
            epsilon: eps.clone(),
            forests: std::mem::take(&mut defect_forests[power]),
        })
        .collect();
    Ok(report(
        k,
        "main",
        &lhs,
        &rhs,
        witnesses,
        census_matches_collapsing,
        start,
    ))
}

/// Number of spanning trees of a connected graph, by the matrix-tree
/// cofactor: delete one vertex's row and column from L and take the
/// determinant.
pub fn spanning_tree_count(g: &SimplicialComplex) -> Result<BigInt> {
    if g.dim() != 1 {
        return Err(Error::NotAGraph(g.dim()));
    }
    let n = g.n_cells(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for e in g.cells(1) {
        let vs = e.vertices();
        let a = vertex_index(g, vs[0]);
        let b = vertex_index(g, vs[1]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    if (0..n).any(|v| find(&mut parent, v) != find(&mut parent, 0)) {
        return Err(Error::Disconnected);
    }
    let keep: Vec<usize> = (1..n).collect();
    determinant(&laplacian(g, 1)?.submatrix(&keep, &keep))
}

fn vertex_index(g: &SimplicialComplex, v: u32) -> usize {
    let cell = crate::complex::Cell::new(vec![v]).expect("singleton cell");
    g.index_of(&cell).expect("edge endpoint is a vertex cell")
}

/// Checks n · #spanning-trees of a connected graph against the λ¹
/// coefficient of the census polynomial, requiring det(L + λI) to carry
/// the same coefficient.
pub fn verify_kirchhoff_gradients(
    g: &SimplicialComplex,
    options: &CensusOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let tau = spanning_tree_count(g)?;
    let target = BigInt::from(g.n_cells(0) as u64) * &tau;
    let census = gradient_census_with(g, options)?.polynomial();
    let charpoly = char_poly_shifted(&laplacian(g, 1)?)?;
    let lhs = IntegerPolynomial::from_coeffs(vec![target.clone()]);
    let rhs = IntegerPolynomial::from_coeffs(vec![census.coeff(1)]);
    let extra_ok = charpoly.coeff(1) == target;
    Ok(report(g, "kirchhoff", &lhs, &rhs, Vec::new(), extra_ok, start))
}

/// For a forest graph on n vertices and m edges, checks det(A + λI) of its
/// vertex-edge incidence graph (one vertex per cell, one edge per
/// incidence) against the census with alternating signs: pairing k
/// incidences contributes (−1)^k · counts[m−k] · λ^(n+m−2k).
pub fn verify_matching_adjacency(
    g: &SimplicialComplex,
    options: &CensusOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if g.dim() != 1 {
        return Err(Error::NotAGraph(g.dim()));
    }
    if !is_forest(g, g.cells(1))? {
        return Err(Error::NotAForest("the graph contains a cycle".into()));
    }
    let census = gradient_census_with(g, options)?;
    let n = census.tails;
    let m = census.heads;
    let mut coeffs = vec![BigInt::zero(); n + m + 1];
    for k in 0..=m {
        let c = census.counts[m - k].clone();
        coeffs[n + m - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    let rhs = IntegerPolynomial::from_coeffs(coeffs);
    let incidence_graph = g.hasse().as_graph()?;
    let lhs = char_poly_shifted(&adjacency_matrix(&incidence_graph)?)?;
    Ok(report(
        g,
        "matching-adjacency",
        &lhs,
        &rhs,
        Vec::new(),
        true,
        start,
    ))
}

/// Which complexes [`conjecture_scan`] walks.
#[derive(Debug, Clone)]
pub enum ScanFamily {
    /// The fixed catalog roster.
    Builtins,
    /// Seeded random pure 2-complexes.
    RandomPure2 {
        count: usize,
        seed: u64,
        max_vertices: u32,
        max_triangles: usize,
    },
}

/// One scanned complex: where its defects sit, next to its orientability.
#[derive(Debug, Clone)]
pub struct ScanRecord {
    pub complex: String,
    pub dim: usize,
    pub pseudomanifold: bool,
    /// `None` when the complex is not a pseudomanifold.
    pub orientable: Option<bool>,
    /// Nonzero defect coefficients as (root size, ε) pairs.
    pub defects: Vec<(usize, BigInt)>,
    /// Whether det(Δ + λI) = census + defect held and the census matched
    /// the collapsing forests.
    pub identity_holds: bool,
    /// A non-orientable pseudomanifold must show a positive defect at the
    /// smallest root size: its torsion keeps maximal forests from
    /// collapsing with unit determinant. `true` whenever that test does
    /// not apply.
    pub consistent: bool,
    /// Why the complex was skipped; the arithmetic fields are vacuous when
    /// set.
    pub skipped: Option<String>,
}

/// Walks a family and records each complex's defect profile. Complexes the
/// guard refuses are recorded as skipped, not failed.
pub fn conjecture_scan(family: &ScanFamily, options: &CensusOptions) -> Vec<ScanRecord> {
    let complexes = match family {
        ScanFamily::Builtins => standard_roster(),
        ScanFamily::RandomPure2 {
            count,
            seed,
            max_vertices,
            max_triangles,
        } => random_pure_2_complexes(*count, *seed, *max_vertices, *max_triangles),
    };
    complexes.iter().map(|k| scan_one(k, options)).collect()
}

fn scan_one(k: &SimplicialComplex, options: &CensusOptions) -> ScanRecord {
    let pm = k.pseudomanifold().holds;
    let mut record = ScanRecord {
        complex: k.display_name(),
        dim: k.dim(),
        pseudomanifold: pm,
        orientable: if pm { k.is_orientable().ok() } else { None },
        defects: Vec::new(),
        identity_holds: true,
        consistent: true,
        skipped: None,
    };
    let parts = forest_census(k, &options.guard).and_then(|fc| {
        let census = gradient_census_with(k, options)?.polynomial();
        let charpoly = char_poly_shifted(&laplacian(k, k.dim())?)?;
        Ok((fc, census, charpoly))
    });
    let (fc, census, charpoly) = match parts {
        Ok(parts) => parts,
        Err(e) => {
            record.skipped = Some(e.to_string());
            return record;
        }
    };
    record.defects = fc
        .defect
        .iter()
        .enumerate()
        .filter(|(_, eps)| !eps.is_zero())
        .map(|(i, eps)| (i, eps.clone()))
        .collect();
    record.identity_holds = charpoly == census.add(&fc.defect_polynomial())
        && census == fc.collapsing_polynomial();
    if record.pseudomanifold && record.orientable == Some(false) {
        record.consistent = fc
            .tails
            .checked_sub(fc.heads)
            .and_then(|s| fc.defect.get(s))
            .is_some_and(|eps| eps > &BigInt::zero());
    }
    record
}
