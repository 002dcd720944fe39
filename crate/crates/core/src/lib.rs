//! Exact combinatorics of simplicial Laplacians.
//!
//! This crate builds finite simplicial complexes, computes their boundary
//! and Laplacian matrices over the integers, and enumerates the discrete
//! structures whose counts those matrices encode: gradient vector fields,
//! rooted spanning forests of top cells, and the collapsibility defects
//! that separate the two.
//!
//! Everything is exact. Matrices carry `BigInt` entries, polynomial
//! identities are checked coefficient by coefficient, and enumeration
//! results are cross-checked against determinant formulas rather than
//! floating-point spectra.

pub mod builtins;
pub mod complex;
pub mod error;
pub mod forests;
pub mod guard;
pub mod io;
pub mod linalg;
pub mod morse;
pub mod verify;

pub use builtins::{builtin, standard_roster, BUILTIN_NAMES};
pub use complex::{Cell, HasseDigraph, PseudomanifoldCheck, SimplicialComplex};
pub use error::{Error, Result};
pub use forests::{
    acyclic_fitting_orientation, collapses_to_root, defects, enumerate_rooted_forests, forest_census,
    is_forest, relative_homology_order, remainder, rooted_forests_with_root_size,
    visit_rooted_forests, ForestCensus, RootedForest,
};
pub use guard::Guard;
pub use io::{complex_from_json, complex_from_path, complex_to_json};
pub use linalg::{
    adjacency_matrix, boundary_matrix, char_poly_shifted, determinant, homology, laplacian, rank,
    smith_normal_form, HomologySummary, IntegerMatrix, IntegerPolynomial, SmithNormalForm,
};
pub use morse::{
    gradient_census, gradient_census_with, gradient_vector_fields, realize_morse_function,
    CensusOptions, GradientCensus, MorseFunction, TopMatching, VectorField,
};
pub use verify::{
    conjecture_scan, spanning_tree_count, verify_graph_theorem, verify_kirchhoff_gradients,
    verify_main_theorem, verify_matching_adjacency, DefectWitness, ScanFamily, ScanRecord,
    VerificationReport, Verdict,
};
