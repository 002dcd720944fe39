//! Named complex catalog and seeded random generators.
//!
//! Parameterized families take the parameter `n`; the three fixed complexes
//! (`moebius`, `projective_plane`, `bipyramid`) reject one. The fixed
//! triangulations are the standard minimal ones; tests pin them through
//! their Laplacian characteristic polynomials, not through the labeling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Builds a complex from the catalog:
///
/// | name                 | parameter | complex                                   |
/// |----------------------|-----------|-------------------------------------------|
/// | `cycle(n)`           | n >= 3    | cycle graph on n vertices                 |
/// | `path(n)`            | n >= 2    | path graph on n vertices                  |
/// | `star(n)`            | n >= 1    | hub 0 joined to leaves 1..=n              |
/// | `complete(n)`        | n >= 2    | complete graph on n vertices              |
/// | `wheel(n)`           | n >= 3    | hub 0 joined to a cycle on 1..=n          |
/// | `simplex(n)`         | n >= 0    | full simplex on n+1 vertices              |
/// | `simplex_boundary(n)`| n >= 2    | boundary of the n-simplex                 |
/// | `moebius`            | —         | 5-vertex Möbius strip (5 triangles)       |
/// | `projective_plane`   | —         | 6-vertex projective plane (10 triangles)  |
/// | `bipyramid`          | —         | two tetrahedron boundaries sharing a face |
pub fn builtin(name: &str, n: Option<u32>) -> Result<SimplicialComplex> {
    match name {
        "cycle" => {
            let n = need(name, n, 3)?;
            let faces: Vec<Vec<u32>> = (0..n).map(|i| sorted_pair(i, (i + 1) % n)).collect();
            named(&faces, format!("cycle({n})"))
        }
        "path" => {
            let n = need(name, n, 2)?;
            let faces: Vec<Vec<u32>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
            named(&faces, format!("path({n})"))
        }
        "star" => {
            let n = need(name, n, 1)?;
            let faces: Vec<Vec<u32>> = (1..=n).map(|i| vec![0, i]).collect();
            named(&faces, format!("star({n})"))
        }
        "complete" => {
            let n = need(name, n, 2)?;
            let mut faces = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    faces.push(vec![i, j]);
                }
            }
            named(&faces, format!("complete({n})"))
        }
        "wheel" => {
            let n = need(name, n, 3)?;
            let mut faces: Vec<Vec<u32>> = (1..=n).map(|i| vec![0, i]).collect();
            for i in 1..n {
                faces.push(vec![i, i + 1]);
            }
            faces.push(vec![1, n]);
            named(&faces, format!("wheel({n})"))
        }
        "simplex" => {
            let n = need(name, n, 0)?;
            named(&[(0..=n).collect()], format!("simplex({n})"))
        }
        "simplex_boundary" => {
            let n = need(name, n, 2)?;
            let verts: Vec<u32> = (0..=n).collect();
            let faces: Vec<Vec<u32>> = (0..=n)
                .map(|skip| {
                    verts
                        .iter()
                        .copied()
                        .filter(|&v| v != skip)
                        .collect::<Vec<u32>>()
                })
                .collect();
            named(&faces, format!("simplex_boundary({n})"))
        }
        "moebius" => {
            fixed(name, n)?;
            let faces: Vec<Vec<u32>> = (0..5u32)
                .map(|i| {
                    let mut t = vec![i, (i + 1) % 5, (i + 2) % 5];
                    t.sort_unstable();
                    t
                })
                .collect();
            named(&faces, "moebius".to_string())
        }
        "projective_plane" => {
            fixed(name, n)?;
            let faces: Vec<Vec<u32>> = [
                [0, 1, 4],
                [0, 1, 5],
                [0, 2, 3],
                [0, 2, 5],
                [0, 3, 4],
                [1, 2, 3],
                [1, 2, 4],
                [1, 3, 5],
                [2, 4, 5],
                [3, 4, 5],
            ]
            .iter()
            .map(|t| t.to_vec())
            .collect();
            named(&faces, "projective_plane".to_string())
        }
        "bipyramid" => {
            fixed(name, n)?;
            let faces: Vec<Vec<u32>> = [
                [0, 1, 2],
                [0, 1, 3],
                [0, 2, 3],
                [1, 2, 3],
                [1, 2, 4],
                [1, 3, 4],
                [2, 3, 4],
            ]
            .iter()
            .map(|t| t.to_vec())
            .collect();
            named(&faces, "bipyramid".to_string())
        }
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

/// The catalog names, parameterized families first.
pub const BUILTIN_NAMES: [&str; 10] = [
    "cycle",
    "path",
    "star",
    "complete",
    "wheel",
    "simplex",
    "simplex_boundary",
    "moebius",
    "projective_plane",
    "bipyramid",
];

/// A fixed cross-section of the catalog used by scans and broad checks:
/// every family at a few sizes plus all the fixed surfaces.
pub fn standard_roster() -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push(builtin("cycle", Some(n)).unwrap());
    }
    for n in 2..=6 {
        out.push(builtin("path", Some(n)).unwrap());
    }
    for n in 1..=6 {
        out.push(builtin("star", Some(n)).unwrap());
    }
    for n in 2..=5 {
        out.push(builtin("complete", Some(n)).unwrap());
    }
    for n in 3..=5 {
        out.push(builtin("wheel", Some(n)).unwrap());
    }
    for n in 1..=3 {
        out.push(builtin("simplex", Some(n)).unwrap());
    }
    for n in 2..=4 {
        out.push(builtin("simplex_boundary", Some(n)).unwrap());
    }
    for name in ["moebius", "projective_plane", "bipyramid"] {
        out.push(builtin(name, None).unwrap());
    }
    out
}

fn named(faces: &[Vec<u32>], name: String) -> Result<SimplicialComplex> {
    Ok(SimplicialComplex::from_maximal_faces(faces)?.with_name(name))
}

fn need(name: &str, n: Option<u32>, min: u32) -> Result<u32> {
    match n {
        None => Err(Error::MissingParameter {
            name: name.to_string(),
            min,
        }),
        Some(got) if got < min => Err(Error::BuiltinParameter {
            name: name.to_string(),
            min,
            got,
        }),
        Some(got) => Ok(got),
    }
}

fn fixed(name: &str, n: Option<u32>) -> Result<()> {
    match n {
        Some(_) => Err(Error::UnexpectedParameter(name.to_string())),
        None => Ok(()),
    }
}

fn sorted_pair(a: u32, b: u32) -> Vec<u32> {
    if a < b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

/// A pure 2-dimensional complex with 1..=`max_triangles` distinct triangles
/// on at most `max_vertices` vertices.
pub fn random_pure_2_complex<R: Rng>(
    rng: &mut R,
    max_vertices: u32,
    max_triangles: usize,
) -> SimplicialComplex {
    let v = rng.gen_range(4..=max_vertices.max(4));
    let mut all: Vec<Vec<u32>> = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                all.push(vec![a, b, c]);
            }
        }
    }
    let t = rng.gen_range(1..=max_triangles.min(all.len()));
    let faces: Vec<Vec<u32>> = all.choose_multiple(rng, t).cloned().collect();
    SimplicialComplex::from_maximal_faces(&faces).expect("non-empty face list")
}

/// A batch of seeded pure 2-complexes, reproducible from the seed.
pub fn random_pure_2_complexes(
    count: usize,
    seed: u64,
    max_vertices: u32,
    max_triangles: usize,
) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            random_pure_2_complex(&mut rng, max_vertices, max_triangles)
                .with_name(format!("random2[{i}]#{seed}"))
        })
        .collect()
}

/// A complex from random faces of mixed sizes (1..=`max_face_size` vertices
/// each); may be impure or disconnected.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    max_vertices: u32,
    max_faces: usize,
    max_face_size: usize,
) -> SimplicialComplex {
    let v = rng.gen_range(3..=max_vertices.max(3));
    let verts: Vec<u32> = (0..v).collect();
    let f = rng.gen_range(1..=max_faces.max(1));
    let faces: Vec<Vec<u32>> = (0..f)
        .map(|_| {
            let size = rng.gen_range(1..=max_face_size.min(v as usize).max(1));
            verts.choose_multiple(rng, size).copied().collect()
        })
        .collect();
    SimplicialComplex::from_maximal_faces(&faces).expect("non-empty face list")
}

/// A batch of seeded mixed-dimension complexes.
pub fn random_complexes(
    count: usize,
    seed: u64,
    max_vertices: u32,
    max_faces: usize,
    max_face_size: usize,
) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            random_complex(&mut rng, max_vertices, max_faces, max_face_size)
                .with_name(format!("random[{i}]#{seed}"))
        })
        .collect()
}

/// A simple graph with 1..=`max_edges` distinct edges on at most
/// `max_vertices` vertices.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: u32, max_edges: usize) -> SimplicialComplex {
    let v = rng.gen_range(2..=max_vertices.max(2));
    let mut all: Vec<Vec<u32>> = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            all.push(vec![a, b]);
        }
    }
    let e = rng.gen_range(1..=max_edges.min(all.len()));
    let faces: Vec<Vec<u32>> = all.choose_multiple(rng, e).cloned().collect();
    SimplicialComplex::from_maximal_faces(&faces).expect("non-empty face list")
}
