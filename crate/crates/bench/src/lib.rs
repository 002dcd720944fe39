//! Shared fixtures for the enumeration benchmarks.

use morseforest::SimplicialComplex;

/// The boundary of the octahedron: two poles joined through a square
/// equator, 8 triangles in total.
pub fn octahedron() -> SimplicialComplex {
    SimplicialComplex::from_maximal_faces(&[
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 1, 4],
        vec![1, 2, 5],
        vec![2, 3, 5],
        vec![3, 4, 5],
        vec![1, 4, 5],
    ])
    .expect("octahedron faces are valid")
    .with_name("octahedron")
}
