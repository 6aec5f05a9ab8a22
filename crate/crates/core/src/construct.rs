//! Matroid constructors: uniform, linear over small prime fields, graphic,
//! a few named classics and seeded random linear instances.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matroid::{CircuitFamily, Matroid};
use crate::set::{ElemSet, GroundSet, MAX_ELEMENTS};
use crate::SCAN_LIMIT;

/// Fields accepted by [`MatrixOverGF`].
pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// Names accepted by [`named`].
pub const NAMES: [&str; 6] = ["fano", "nonfano", "k4", "k5", "vamos", "wheel3"];

/// `U_n^k` on labels `1..=n`.
pub fn uniform(n: usize, k: usize) -> Result<Matroid> {
    if n == 0 || k > n {
        return Err(Error::InvalidParameter(alloc::format!(
            "uniform matroid needs 0 <= k <= n and n >= 1, got n={n}, k={k}"
        )));
    }
    let ground = GroundSet::numbered(n)?;
    let elements = ground.all();
    let circuits = if k == n {
        CircuitFamily::default()
    } else {
        CircuitFamily::new(elements.subsets_of_size(k + 1))
    };
    Ok(Matroid::on_trusted(Arc::new(ground), elements, circuits))
}

/// A matrix over GF(p), stored column by column; column `j` represents
/// element `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixOverGF {
    p: u32,
    rows: usize,
    columns: Vec<Vec<u32>>,
}

impl MatrixOverGF {
    /// From row-major entries; entries are reduced mod `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::InvalidParameter(alloc::format!(
                "field size {p} is not one of 2, 3, 5, 7"
            )));
        }
        let width = rows.first().map_or(0, Vec::len);
        if width == 0 {
            return Err(Error::InvalidParameter("matrix has no columns".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::InvalidParameter(alloc::format!(
                "row {i} has {} entries, expected {width}",
                rows[i].len()
            )));
        }
        if width > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge {
                size: width,
                limit: MAX_ELEMENTS,
            });
        }
        let columns = (0..width)
            .map(|j| rows.iter().map(|r| r[j].rem_euclid(p as i64) as u32).collect())
            .collect();
        Ok(Self {
            p,
            rows: rows.len(),
            columns,
        })
    }

    pub fn field(&self) -> u32 {
        self.p
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Row-major copy of the entries.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank_of(ElemSet::full(self.column_count()))
    }

    /// Rank of the columns in `set`, by Gaussian elimination mod p.
    pub fn rank_of(&self, set: ElemSet) -> usize {
        let p = self.p;
        let mut vectors: Vec<Vec<u32>> = set.iter().map(|j| self.columns[j].clone()).collect();
        let mut rank = 0;
        for row in 0..self.rows {
            let Some(pivot) = (rank..vectors.len()).find(|&v| vectors[v][row] != 0) else {
                continue;
            };
            vectors.swap(rank, pivot);
            let inv = inverse_mod(vectors[rank][row], p);
            let (done, rest) = vectors.split_at_mut(rank + 1);
            let pivot_row = &done[rank];
            for vector in rest {
                let factor = vector[row] * inv % p;
                if factor == 0 {
                    continue;
                }
                for (x, &y) in vector[row..].iter_mut().zip(&pivot_row[row..]) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut result = 1u32;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Scans subsets of `elements` by increasing size up to `max_size`; a
/// dependent set containing no circuit found so far is a circuit.
fn minimal_dependent_sets(
    elements: ElemSet,
    max_size: usize,
    mut is_dependent: impl FnMut(ElemSet) -> bool,
) -> Result<CircuitFamily> {
    if elements.len() > SCAN_LIMIT {
        return Err(Error::ScanLimit {
            size: elements.len(),
            limit: SCAN_LIMIT,
        });
    }
    let mut found: Vec<ElemSet> = Vec::new();
    for size in 1..=max_size.min(elements.len()) {
        for candidate in elements.subsets_of_size(size) {
            if !found.iter().any(|c| c.is_subset(candidate)) && is_dependent(candidate) {
                found.push(candidate);
            }
        }
    }
    Ok(CircuitFamily::new(found))
}

/// Column matroid of `m` on labels `1..=n`.
pub fn from_matrix(m: &MatrixOverGF) -> Result<Matroid> {
    from_matrix_labeled(m, GroundSet::numbered(m.column_count())?)
}

pub fn from_matrix_labeled(m: &MatrixOverGF, ground: GroundSet) -> Result<Matroid> {
    if ground.len() != m.column_count() {
        return Err(Error::InvalidParameter(alloc::format!(
            "{} labels for {} columns",
            ground.len(),
            m.column_count()
        )));
    }
    let elements = ground.all();
    let circuits = minimal_dependent_sets(elements, m.rank() + 1, |s| m.rank_of(s) < s.len())?;
    Matroid::on_validated(Arc::new(ground), elements, circuits)
}

/// Multigraph with labelled edges; loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, String)>,
}

impl GraphSpec {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, String)>) -> Result<Self> {
        if let Some((u, v, label)) = edges
            .iter()
            .find(|(u, v, _)| *u >= vertex_count || *v >= vertex_count)
        {
            return Err(Error::InvalidParameter(alloc::format!(
                "edge `{label}` = ({u}, {v}) leaves the {vertex_count} vertices"
            )));
        }
        Ok(Self { vertex_count, edges })
    }

    /// Complete graph with edges labelled `u-v` (1-based vertices).
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, alloc::format!("{}-{}", u + 1, v + 1)));
            }
        }
        Self {
            vertex_count: n,
            edges,
        }
    }

    /// Wheel with `spokes` rim vertices: hub 0, rim edges `r1..`, spokes
    /// `s1..`.
    pub fn wheel(spokes: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=spokes {
            let next = if i == spokes { 1 } else { i + 1 };
            edges.push((i, next, alloc::format!("r{i}")));
        }
        for i in 1..=spokes {
            edges.push((0, i, alloc::format!("s{i}")));
        }
        Self {
            vertex_count: spokes + 1,
            edges,
        }
    }

    /// Number of connected components among the given edges plus isolated
    /// vertices.
    pub fn components(&self) -> usize {
        let mut forest = Forest::new(self.vertex_count);
        let merged = self
            .edges
            .iter()
            .filter(|(u, v, _)| forest.union(*u, *v))
            .count();
        self.vertex_count - merged
    }

    fn contains_cycle(&self, set: ElemSet) -> bool {
        let mut forest = Forest::new(self.vertex_count);
        set.iter().any(|j| {
            let (u, v, _) = &self.edges[j];
            !forest.union(*u, *v)
        })
    }
}

struct Forest {
    parent: Vec<usize>,
}

impl Forest {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Cycle matroid of `g`: circuits are the edge sets of cycles, loops being
/// 1-circuits and parallel pairs 2-circuits.
pub fn from_graph(g: &GraphSpec) -> Result<Matroid> {
    let ground = GroundSet::new(g.edges.iter().map(|(_, _, l)| l.clone()))?;
    let elements = ground.all();
    let rank = g.vertex_count - g.components();
    let circuits = minimal_dependent_sets(elements, rank + 1, |s| g.contains_cycle(s))?;
    Matroid::on_validated(Arc::new(ground), elements, circuits)
}

fn vamos() -> Result<Matroid> {
    let ground = GroundSet::new(["a", "a'", "b", "b'", "c", "c'", "d", "d'"])?;
    let pair = |i: usize| ElemSet::from_indices([2 * i, 2 * i + 1]);
    // every union of two of the four pairs except {c,c',d,d'}
    let planes: Vec<ElemSet> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        .iter()
        .map(|&(i, j)| pair(i) | pair(j))
        .collect();
    let fives = ground
        .all()
        .subsets_of_size(5)
        .filter(|s| !planes.iter().any(|p| p.is_subset(*s)));
    let circuits: Vec<ElemSet> = planes.iter().copied().chain(fives).collect();
    Matroid::new(ground, circuits)
}

fn fano_matrix() -> MatrixOverGF {
    let rows = vec![
        vec![1, 0, 0, 1, 1, 0, 1],
        vec![0, 1, 0, 1, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 1],
    ];
    MatrixOverGF::from_rows(2, &rows).expect("valid fano matrix")
}

fn nonfano_matrix() -> MatrixOverGF {
    let rows = vec![
        vec![1, 0, 0, 1, 1, 0, 1],
        vec![0, 1, 0, 1, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 1],
    ];
    MatrixOverGF::from_rows(3, &rows).expect("valid non-fano matrix")
}

/// Standard representation used by [`named`] for the linear entries.
pub fn named_matrix(name: &str) -> Option<MatrixOverGF> {
    match name {
        "fano" => Some(fano_matrix()),
        "nonfano" => Some(nonfano_matrix()),
        _ => None,
    }
}

/// Standard graph used by [`named`] for the graphic entries.
pub fn named_graph(name: &str) -> Option<GraphSpec> {
    match name {
        "k4" => Some(GraphSpec::complete(4)),
        "k5" => Some(GraphSpec::complete(5)),
        "wheel3" => Some(GraphSpec::wheel(3)),
        _ => None,
    }
}

/// One of [`NAMES`].
pub fn named(name: &str) -> Result<Matroid> {
    if let Some(m) = named_matrix(name) {
        return from_matrix(&m);
    }
    if let Some(g) = named_graph(name) {
        return from_graph(&g);
    }
    match name {
        "vamos" => vamos(),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// `r x n` matrix with entries drawn uniformly from GF(p) by a ChaCha8
/// generator seeded with `seed` through `SeedableRng::seed_from_u64`.
pub fn random_matrix(seed: u64, n: usize, r: usize, p: u32) -> Result<MatrixOverGF> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::InvalidParameter(alloc::format!(
            "random matrix needs 1 <= r <= n, got r={r}, n={n}"
        )));
    }
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::InvalidParameter(alloc::format!(
            "field size {p} is not one of 2, 3, 5, 7"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| (0..n).map(|_| rng.gen_range(0..p) as i64).collect())
        .collect();
    MatrixOverGF::from_rows(p, &rows)
}

/// Column matroid of [`random_matrix`].
pub fn random_linear(seed: u64, n: usize, r: usize, p: u32) -> Result<Matroid> {
    from_matrix(&random_matrix(seed, n, r, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_uniforms() {
        let u32_ = uniform(3, 2).unwrap();
        assert_eq!(u32_.circuits().as_slice(), &[ElemSet::full(3)]);
        let u44 = uniform(4, 4).unwrap();
        assert!(u44.circuits().is_empty());
        assert_eq!(u44.rank(), 4);
        let u10 = uniform(10, 5).unwrap();
        assert_eq!(u10.circuits().len(), 210);
        assert_eq!(u10.rank(), 5);
        assert!(uniform(3, 4).is_err());
        assert!(uniform(0, 0).is_err());
    }

    #[test]
    fn identity_and_zero_columns() {
        let id = MatrixOverGF::from_rows(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(from_matrix(&id).unwrap().circuits().is_empty());
        let z = MatrixOverGF::from_rows(3, &[vec![1, 0], vec![0, 0]]).unwrap();
        let m = from_matrix(&z).unwrap();
        assert_eq!(m.circuits().as_slice(), &[ElemSet::singleton(1)]);
        assert!(MatrixOverGF::from_rows(4, &[vec![1]]).is_err());
        assert!(MatrixOverGF::from_rows(2, &[vec![1, 0], vec![1]]).is_err());
    }

    #[test]
    fn entries_reduced() {
        let m = MatrixOverGF::from_rows(3, &[vec![4, -1, 3]]).unwrap();
        assert_eq!(m.rows(), vec![vec![1, 2, 0]]);
    }

    #[test]
    fn graphs() {
        let tri = GraphSpec::complete(3);
        assert!(from_graph(&tri).unwrap().is_uniform_isomorphic(3, 2));
        let par = GraphSpec::new(2, vec![(0, 1, "a".into()), (0, 1, "b".into())]).unwrap();
        assert_eq!(from_graph(&par).unwrap().circuits().as_slice(), &[ElemSet::full(2)]);
        let looped = GraphSpec::new(1, vec![(0, 0, "l".into())]).unwrap();
        let m = from_graph(&looped).unwrap();
        assert_eq!(m.circuits().as_slice(), &[ElemSet::singleton(0)]);
        assert_eq!(m.rank(), 0);
        assert!(GraphSpec::new(2, vec![(0, 2, "x".into())]).is_err());
    }

    #[test]
    fn unknown_name() {
        assert_eq!(named("petersen"), Err(Error::UnknownName("petersen".into())));
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_linear(1, 6, 3, 2).unwrap();
        let b = random_linear(1, 6, 3, 2).unwrap();
        assert_eq!(a, b);
        assert!(random_linear(1, 3, 4, 2).is_err());
        assert!(random_linear(1, 3, 2, 6).is_err());
    }
}
