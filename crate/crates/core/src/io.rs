//! JSON encoding of complexes.
//!
//! A complex file is a single object with an optional `name` and the list
//! of maximal faces; every other cell is implied by downward closure.
//! Unknown fields are rejected so that typos fail loudly instead of being
//! silently ignored.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    maximal_faces: Vec<Vec<u32>>,
}

/// Parses a complex from its JSON text form.
pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let k = SimplicialComplex::from_maximal_faces(&file.maximal_faces)?;
    Ok(match file.name {
        Some(name) => k.with_name(name),
        None => k,
    })
}

/// Reads and parses a complex from a JSON file.
pub fn complex_from_path(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path)?;
    complex_from_json(&text)
}

/// Serializes a complex as JSON via its maximal faces; parsing the output
/// reproduces the same complex.
pub fn complex_to_json(k: &SimplicialComplex) -> String {
    let file = ComplexFile {
        name: k.name().map(str::to_owned),
        maximal_faces: k
            .maximal_faces()
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect(),
    };
    serde_json::to_string(&file).expect("complex serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    #[test]
    fn parse_and_round_trip() {
        let text = r#"{"name":"C4","maximal_faces":[[0,1],[1,2],[2,3],[0,3]]}"#;
        let k = complex_from_json(text).unwrap();
        assert_eq!(k.name(), Some("C4"));
        assert_eq!(k.n_cells(0), 4);
        assert_eq!(k.n_cells(1), 4);
        let again = complex_from_json(&complex_to_json(&k)).unwrap();
        assert_eq!(
            again.all_cells().collect::<Vec<_>>(),
            k.all_cells().collect::<Vec<_>>()
        );
        assert_eq!(again.name(), k.name());
    }

    #[test]
    fn name_is_optional() {
        let k = complex_from_json(r#"{"maximal_faces":[[0,1,2]]}"#).unwrap();
        assert_eq!(k.name(), None);
        assert!(!complex_to_json(&k).contains("name"));
    }

    #[test]
    fn builtins_round_trip() {
        for name in crate::builtins::BUILTIN_NAMES {
            let needs_n = !matches!(name, "moebius" | "projective_plane" | "bipyramid");
            let k = builtin(name, if needs_n { Some(4) } else { None }).unwrap();
            let again = complex_from_json(&complex_to_json(&k)).unwrap();
            assert_eq!(
                again.all_cells().collect::<Vec<_>>(),
                k.all_cells().collect::<Vec<_>>(),
                "{name}"
            );
        }
    }

    #[test]
    fn rejects_unknown_fields() {
        let err = complex_from_json(r#"{"maximal_faces":[[0,1]],"faces":[]}"#).unwrap_err();
        match err {
            Error::Json(msg) => assert!(msg.contains("unknown field"), "{msg}"),
            other => panic!("wrong error: {other}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            complex_from_json("not json"),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            complex_from_json(r#"{"name":"x"}"#),
            Err(Error::Json(_))
        ));
        assert!(matches!(
            complex_from_json(r#"{"maximal_faces":[[0,0,1]]}"#),
            Err(Error::DegenerateFace(_))
        ));
        assert!(matches!(
            complex_from_json(r#"{"maximal_faces":[]}"#),
            Err(Error::EmptyComplex)
        ));
        assert!(matches!(
            complex_from_json(r#"{"maximal_faces":[[]]}"#),
            Err(Error::EmptyFace)
        ));
    }
}
