//! The standard catalog of small matroids used for sweeps.

use std::fs;
use std::path::Path;

use ccix_core::construct::{self, GraphSpec};

use crate::error::CliError;
use crate::format::{write_matroid, MatroidFile};

pub const DEFAULT_SEED: u64 = 0;

/// Shapes `(n, r)` cycled through by the random entries; all have `n <= 9`.
const RANDOM_SHAPES: [(usize, usize); 5] = [(7, 3), (8, 4), (9, 4), (9, 5), (8, 3)];
const RANDOM_PER_FIELD: usize = 10;

fn graph_file(name: &str, g: GraphSpec) -> MatroidFile {
    MatroidFile::Graph {
        name: Some(name.to_string()),
        vertices: g.vertex_count,
        edges: g.edges,
    }
}

fn matrix_file(name: &str, labels: Vec<String>, m: &construct::MatrixOverGF) -> MatroidFile {
    MatroidFile::Matrix {
        name: Some(name.to_string()),
        field: m.field(),
        labels,
        rows: m
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(i64::from).collect())
            .collect(),
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// `(file name, contents)` pairs, sorted by file name. Only the random
/// entries depend on `seed`.
pub fn standard_catalog(seed: u64) -> Vec<(String, MatroidFile)> {
    let mut out = Vec::new();

    // U_n^k for 4 <= n <= 10 and 0 < k < n
    for n in 4..=10 {
        for k in 1..n {
            let m = construct::uniform(n, k).expect("valid uniform parameters");
            out.push((
                format!("u{n}_{k}.json"),
                MatroidFile::circuits_of(&m, Some(format!("U_{n}^{k}"))),
            ));
        }
    }

    for name in ["k4", "k5", "wheel3"] {
        let g = construct::named_graph(name).expect("named graph");
        out.push((format!("{name}.json"), graph_file(name, g)));
    }
    for name in ["fano", "nonfano"] {
        let m = construct::named_matrix(name).expect("named matrix");
        out.push((format!("{name}.json"), matrix_file(name, numbered(7), &m)));
    }
    let vamos = construct::named("vamos").expect("vamos");
    out.push(("vamos.json".into(), MatroidFile::circuits_of(&vamos, Some("vamos".into()))));

    for p in [2u32, 3] {
        for i in 0..RANDOM_PER_FIELD {
            let (n, r) = RANDOM_SHAPES[i % RANDOM_SHAPES.len()];
            let s = seed.wrapping_mul(1_000).wrapping_add(u64::from(p) * 100 + i as u64);
            let m = construct::random_matrix(s, n, r, p).expect("valid random parameters");
            let name = format!("rand_gf{p}_{i:02}");
            out.push((format!("{name}.json"), matrix_file(&name, numbered(n), &m)));
        }
    }

    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn write_catalog(dir: &Path, seed: u64) -> Result<Vec<String>, CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut written = Vec::new();
    for (file, contents) in standard_catalog(seed) {
        write_matroid(&dir.join(&file), &contents)?;
        written.push(file);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let cat = standard_catalog(DEFAULT_SEED);
        assert!(cat.len() >= 30);
        let names: Vec<&str> = cat.iter().map(|(f, _)| f.as_str()).collect();
        for needed in ["u10_5.json", "u4_2.json", "k4.json", "k5.json", "wheel3.json", "fano.json", "vamos.json"] {
            assert!(names.contains(&needed), "{needed}");
        }
        assert_eq!(names.iter().filter(|n| n.starts_with("rand_")).count(), 20);
        assert!(names.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn seed_only_moves_random_entries() {
        let a = standard_catalog(1);
        let b = standard_catalog(2);
        assert_eq!(a, standard_catalog(1));
        for ((fa, ca), (_, cb)) in a.iter().zip(&b) {
            if !fa.starts_with("rand_") {
                assert_eq!(ca, cb);
            }
        }
        assert_ne!(a, b);
    }
}
