//! The JSON matroid file: one document per matroid, in one of three
//! formats. Element labels are strings; indices never appear in files.

use std::fs;
use std::path::Path;

use ccix_core::construct::{self, GraphSpec, MatrixOverGF};
use ccix_core::{ElemSet, GroundSet, Matroid};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum MatroidFile {
    Circuits {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        ground: Vec<String>,
        circuits: Vec<Vec<String>>,
    },
    Matrix {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        field: u32,
        labels: Vec<String>,
        rows: Vec<Vec<i64>>,
    },
    Graph {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        vertices: usize,
        edges: Vec<(usize, usize, String)>,
    },
}

impl MatroidFile {
    pub fn name(&self) -> Option<&str> {
        match self {
            Self::Circuits { name, .. } | Self::Matrix { name, .. } | Self::Graph { name, .. } => {
                name.as_deref()
            }
        }
    }

    /// Builds and axiom-checks the matroid. `origin` names the source in
    /// error messages.
    pub fn to_matroid(&self, origin: &str) -> Result<Matroid, CliError> {
        let parse = |message: String| CliError::Parse {
            origin: origin.to_string(),
            message,
        };
        check_size(origin, self.element_count())?;
        match self {
            Self::Circuits { ground, circuits, .. } => {
                let g = GroundSet::new(ground.iter().cloned())
                    .map_err(|e| parse(format!("ground: {e}")))?;
                let mut sets = Vec::with_capacity(circuits.len());
                for (i, circuit) in circuits.iter().enumerate() {
                    let mut set = ElemSet::EMPTY;
                    for (j, label) in circuit.iter().enumerate() {
                        let idx = g
                            .index_of(label)
                            .ok_or_else(|| parse(format!("circuits[{i}][{j}]: unknown label `{label}`")))?;
                        set = set.with(idx);
                    }
                    sets.push(set);
                }
                Matroid::new(g, sets).map_err(|e| match e {
                    ccix_core::Error::Axiom(violation) => CliError::Axiom {
                        origin: origin.to_string(),
                        axiom: violation.axiom(),
                        detail: violation.to_string(),
                    },
                    other => CliError::Core(other),
                })
            }
            Self::Matrix {
                field, labels, rows, ..
            } => {
                let m = MatrixOverGF::from_rows(*field, rows).map_err(|e| parse(format!("rows: {e}")))?;
                let g = GroundSet::new(labels.iter().cloned()).map_err(|e| parse(format!("labels: {e}")))?;
                if g.len() != m.column_count() {
                    return Err(parse(format!(
                        "labels: {} labels for {} columns",
                        g.len(),
                        m.column_count()
                    )));
                }
                construct::from_matrix_labeled(&m, g).map_err(CliError::Core)
            }
            Self::Graph { vertices, edges, .. } => {
                let spec = GraphSpec::new(*vertices, edges.clone()).map_err(|e| parse(format!("edges: {e}")))?;
                construct::from_graph(&spec).map_err(|e| match e {
                    ccix_core::Error::InvalidParameter(m) => parse(format!("edges: {m}")),
                    other => CliError::Core(other),
                })
            }
        }
    }

    fn element_count(&self) -> usize {
        match self {
            Self::Circuits { ground, .. } => ground.len(),
            Self::Matrix { labels, .. } => labels.len(),
            Self::Graph { edges, .. } => edges.len(),
        }
    }

    /// Circuits-format description of `m`, listing only `E(m)`.
    pub fn circuits_of(m: &Matroid, name: Option<String>) -> Self {
        let ground = m.ground();
        Self::Circuits {
            name,
            ground: ground.labels_of(m.elements()),
            circuits: m.circuits().iter().map(|c| ground.labels_of(c)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("matroid files serialize");
        s.push('\n');
        s
    }
}

fn check_size(origin: &str, size: usize) -> Result<(), CliError> {
    if size > ccix_core::set::MAX_ELEMENTS {
        return Err(CliError::TooLarge {
            origin: origin.to_string(),
            size,
        });
    }
    Ok(())
}

// Deserialization goes through one plain struct per format rather than
// the tagged enum: serde buffers tagged content, which loses line numbers.

#[derive(Deserialize)]
struct Tag {
    format: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitsDoc {
    #[allow(dead_code)]
    format: String,
    name: Option<String>,
    ground: Vec<String>,
    circuits: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    #[allow(dead_code)]
    format: String,
    name: Option<String>,
    field: u32,
    labels: Vec<String>,
    rows: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[allow(dead_code)]
    format: String,
    name: Option<String>,
    vertices: usize,
    edges: Vec<(usize, usize, String)>,
}

fn from_json(text: &str, origin: &str) -> Result<MatroidFile, CliError> {
    let parse = |e: serde_json::Error| CliError::Parse {
        origin: origin.to_string(),
        message: e.to_string(),
    };
    let tag: Tag = serde_json::from_str(text).map_err(parse)?;
    Ok(match tag.format.as_str() {
        "circuits" => {
            let d: CircuitsDoc = serde_json::from_str(text).map_err(parse)?;
            MatroidFile::Circuits {
                name: d.name,
                ground: d.ground,
                circuits: d.circuits,
            }
        }
        "matrix" => {
            let d: MatrixDoc = serde_json::from_str(text).map_err(parse)?;
            MatroidFile::Matrix {
                name: d.name,
                field: d.field,
                labels: d.labels,
                rows: d.rows,
            }
        }
        "graph" => {
            let d: GraphDoc = serde_json::from_str(text).map_err(parse)?;
            MatroidFile::Graph {
                name: d.name,
                vertices: d.vertices,
                edges: d.edges,
            }
        }
        other => {
            return Err(CliError::Parse {
                origin: origin.to_string(),
                message: format!("format: unknown format `{other}` (expected circuits, matrix or graph)"),
            })
        }
    })
}

pub fn parse_matroid_str(text: &str, origin: &str) -> Result<(MatroidFile, Matroid), CliError> {
    let file = from_json(text, origin)?;
    let m = file.to_matroid(origin)?;
    Ok((file, m))
}

/// Reads, parses and validates a matroid file.
pub fn parse_matroid(path: &Path) -> Result<(MatroidFile, Matroid), CliError> {
    let origin = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: origin.clone(),
        source,
    })?;
    parse_matroid_str(&text, &origin)
}

pub fn write_matroid(path: &Path, file: &MatroidFile) -> Result<(), CliError> {
    fs::write(path, file.to_json()).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_circuits() {
        let text = r#"{"format":"circuits","ground":["a","b","c"],"circuits":[["a","b","c"]]}"#;
        let (_, m) = parse_matroid_str(text, "t").unwrap();
        assert!(m.is_uniform_isomorphic(3, 2));
    }

    #[test]
    fn fano_from_matrix() {
        let text = r#"{"format":"matrix","name":"fano","field":2,
            "labels":["1","2","3","4","5","6","7"],
            "rows":[[1,0,0,1,1,0,1],[0,1,0,1,0,1,1],[0,0,1,0,1,1,1]]}"#;
        let (file, m) = parse_matroid_str(text, "t").unwrap();
        assert_eq!(file.name(), Some("fano"));
        assert_eq!(m.circuits().len(), 14);
    }

    #[test]
    fn graph_format() {
        let text = r#"{"format":"graph","vertices":2,"edges":[[0,1,"x"],[1,0,"y"]]}"#;
        let (_, m) = parse_matroid_str(text, "t").unwrap();
        assert_eq!(m.circuits().len(), 1);
    }

    #[test]
    fn c2_violation_is_an_axiom_error() {
        let text = r#"{"format":"circuits","ground":["a","b"],"circuits":[["a"],["a","b"]]}"#;
        match parse_matroid_str(text, "bad").unwrap_err() {
            CliError::Axiom { axiom, .. } => assert_eq!(axiom, "C2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_context() {
        let text = r#"{"format":"circuits","ground":["a"],"circuits":[["a","z"]]}"#;
        let err = parse_matroid_str(text, "f.json").unwrap_err().to_string();
        assert!(err.contains("circuits[0][1]"), "{err}");
        let err = parse_matroid_str("{\"format\":\"circuits\",\n\"ground\": 3}", "f.json")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(parse_matroid_str(r#"{"format":"circuits","ground":[],"circuits":[]}"#, "e").is_err());
        assert!(parse_matroid_str(r#"{"format":"matrix","field":4,"labels":["a"],"rows":[[1]]}"#, "e").is_err());
    }

    #[test]
    fn oversize_ground_rejected() {
        let labels: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        let file = MatroidFile::Circuits {
            name: None,
            ground: labels,
            circuits: vec![],
        };
        assert!(matches!(file.to_matroid("big"), Err(CliError::TooLarge { size: 65, .. })));
    }
}
