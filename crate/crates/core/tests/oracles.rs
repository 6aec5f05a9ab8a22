//! Cross-checks against brute-force oracles that share no code path with
//! the library: rank as a maximum over all independent subsets, linear
//! dependence by enumerating every coefficient vector, graph circuits as
//! connected 2-regular edge sets, cocircuits as minimal edge cuts.

use ccix_core::analyze::{achieved_sizes, DEFAULT_PAIR_CAP};
use ccix_core::construct::{self, GraphSpec, MatrixOverGF};
use ccix_core::transform::{cocircuits, contract, delete, dual};
use ccix_core::{ElemSet, Matroid};

fn brute_rank(m: &Matroid, s: ElemSet) -> usize {
    (s & m.elements())
        .subsets()
        .filter(|t| !m.circuits().iter().any(|c| c.is_subset(*t)))
        .map(|t| t.len())
        .max()
        .unwrap_or(0)
}

/// Dependent iff some nonzero coefficient vector over GF(p) kills the columns.
fn brute_dependent(m: &MatrixOverGF, s: ElemSet) -> bool {
    let p = m.field() as u64;
    let rows = m.rows();
    let cols: Vec<usize> = s.iter().collect();
    let total = p.pow(cols.len() as u32);
    (1..total).any(|mut code| {
        let coeffs: Vec<u64> = cols
            .iter()
            .map(|_| {
                let c = code % p;
                code /= p;
                c
            })
            .collect();
        rows.iter().all(|row| {
            cols.iter()
                .zip(&coeffs)
                .map(|(&j, &a)| a * row[j] as u64)
                .sum::<u64>()
                % p
                == 0
        })
    })
}

fn brute_linear_circuits(m: &MatrixOverGF) -> Vec<ElemSet> {
    let all = ElemSet::full(m.column_count());
    let mut out: Vec<ElemSet> = all
        .subsets()
        .filter(|s| !s.is_empty() && brute_dependent(m, *s))
        .filter(|s| s.iter().all(|e| !brute_dependent(m, s.without(e))))
        .collect();
    out.sort();
    out
}

/// A nonempty edge set is a cycle iff every touched vertex has degree 2
/// (a loop counting twice) and the edges are connected.
fn is_cycle(g: &GraphSpec, s: ElemSet) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut degree = vec![0usize; g.vertex_count];
    for j in s {
        let (u, v, _) = &g.edges[j];
        degree[*u] += 1;
        degree[*v] += 1;
    }
    if degree.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    // connectivity by flood fill over the chosen edges
    let start = g.edges[s.first().unwrap()].0;
    let mut seen = vec![false; g.vertex_count];
    seen[start] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for j in s {
            let (u, v, _) = &g.edges[j];
            if seen[*u] != seen[*v] {
                seen[*u] = true;
                seen[*v] = true;
                changed = true;
            }
        }
    }
    degree.iter().zip(&seen).all(|(&d, &vis)| d == 0 || vis)
}

fn components_without(g: &GraphSpec, removed: ElemSet) -> usize {
    let kept: Vec<_> = g
        .edges
        .iter()
        .enumerate()
        .filter(|(j, _)| !removed.contains(*j))
        .map(|(_, e)| e.clone())
        .collect();
    GraphSpec::new(g.vertex_count, kept).unwrap().components()
}

fn brute_minimal_cuts(g: &GraphSpec) -> Vec<ElemSet> {
    let base = g.components();
    let all = ElemSet::full(g.edges.len());
    let cuts: Vec<ElemSet> = all
        .subsets()
        .filter(|s| !s.is_empty() && components_without(g, *s) > base)
        .collect();
    let mut minimal: Vec<ElemSet> = cuts
        .iter()
        .copied()
        .filter(|s| !cuts.iter().any(|t| t.is_proper_subset(*s)))
        .collect();
    minimal.sort();
    minimal
}

#[test]
fn fano_structure() {
    let f7 = construct::named("fano").unwrap();
    assert_eq!(f7.len(), 7);
    assert_eq!(f7.rank(), 3);
    assert_eq!(brute_rank(&f7, f7.elements()), 3);
    let sizes: Vec<usize> = f7.circuits().iter().map(|c| c.len()).collect();
    assert_eq!(sizes, [3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4]);
    assert!(f7.is_simple());
    assert!(!f7.is_uniform_isomorphic(7, 3));

    let m = construct::named_matrix("fano").unwrap();
    assert_eq!(f7.circuits().as_slice(), brute_linear_circuits(&m).as_slice());

    // every 4-circuit is the complement of a line
    let lines: Vec<ElemSet> = f7.circuits().iter().filter(|c| c.len() == 3).collect();
    for c in f7.circuits().iter().filter(|c| c.len() == 4) {
        assert!(lines.contains(&(f7.elements() - c)));
    }
}

#[test]
fn fano_lines_closure_and_hyperplanes() {
    let f7 = construct::named("fano").unwrap();
    let lines: Vec<ElemSet> = f7.circuits().iter().filter(|c| c.len() == 3).collect();
    for &line in &lines {
        let mut pts = line.iter();
        let (a, b, c) = (pts.next().unwrap(), pts.next().unwrap(), pts.next().unwrap());
        let pair = ElemSet::from_indices([a, b]);
        // closure by rank oracle
        let by_rank: ElemSet = f7
            .elements()
            .iter()
            .filter(|&e| brute_rank(&f7, pair.with(e)) == brute_rank(&f7, pair))
            .collect();
        assert_eq!(f7.closure(pair), line);
        assert_eq!(by_rank, line);
        assert_eq!(f7.fundamental_circuit(pair, c), Ok(line));
        assert_eq!(f7.restriction(line).circuits().as_slice(), &[line]);
        assert!(f7.restriction(line).is_uniform_isomorphic(3, 2));
    }
    assert_eq!(f7.hyperplanes().unwrap(), lines);
    let complements: Vec<ElemSet> = {
        let mut v: Vec<ElemSet> = lines.iter().map(|l| f7.elements() - *l).collect();
        v.sort();
        v
    };
    assert_eq!(cocircuits(&f7).unwrap(), complements);
}

#[test]
fn nonfano_has_six_lines() {
    let m = construct::named("nonfano").unwrap();
    assert_eq!(m.rank(), 3);
    assert_eq!(m.circuits().iter().filter(|c| c.len() == 3).count(), 6);
    let mat = construct::named_matrix("nonfano").unwrap();
    assert_eq!(m.circuits().as_slice(), brute_linear_circuits(&mat).as_slice());
}

#[test]
fn graphic_matroids_match_cycle_and_cut_oracles() {
    for name in ["k4", "k5", "wheel3"] {
        let g = construct::named_graph(name).unwrap();
        let m = construct::named(name).unwrap();
        let cycles: Vec<ElemSet> = ElemSet::full(g.edges.len())
            .subsets()
            .filter(|s| is_cycle(&g, *s))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(m.circuits().as_slice(), cycles.as_slice(), "{name}");
        assert_eq!(m.rank(), g.vertex_count - g.components());
        assert_eq!(cocircuits(&m).unwrap(), brute_minimal_cuts(&g), "{name}");
    }
}

#[test]
fn k4_counts() {
    let k4 = construct::named("k4").unwrap();
    assert_eq!(k4.len(), 6);
    assert_eq!(k4.rank(), 3);
    let sizes: Vec<usize> = k4.circuits().iter().map(|c| c.len()).collect();
    assert_eq!(sizes, [3, 3, 3, 3, 4, 4, 4]);
    let co: Vec<usize> = cocircuits(&k4).unwrap().iter().map(|c| c.len()).collect();
    assert_eq!(co, [3, 3, 3, 3, 4, 4, 4]);
    assert_eq!(
        achieved_sizes(&k4, DEFAULT_PAIR_CAP).unwrap().into_iter().collect::<Vec<_>>(),
        [2, 4]
    );
}

#[test]
fn k5_has_37_cycles() {
    // 10 triangles, 15 four-cycles, 12 five-cycles
    let k5 = construct::named("k5").unwrap();
    let count = |n| k5.circuits().iter().filter(|c| c.len() == n).count();
    assert_eq!((count(3), count(4), count(5)), (10, 15, 12));
    assert_eq!(k5.rank(), 4);
}

#[test]
fn vamos_is_a_rank_four_paving_matroid() {
    let v = construct::named("vamos").unwrap();
    assert_eq!(v.len(), 8);
    assert_eq!(v.rank(), 4);
    let fours = v.circuits().iter().filter(|c| c.len() == 4).count();
    assert_eq!(fours, 5);
    assert!(v.circuits().iter().all(|c| c.len() == 4 || c.len() == 5));
    assert_eq!(v.circuits().as_slice().len(), 5 + (56 - 5 * 4));
    for s in v.elements().subsets() {
        assert_eq!(v.rank_of(s), brute_rank(&v, s));
    }
}

#[test]
fn uniform_10_5_count() {
    let u = construct::uniform(10, 5).unwrap();
    assert_eq!(u.circuits().len(), 210);
    assert!(u.is_uniform_isomorphic(10, 5));
}

#[test]
fn greedy_rank_matches_brute_force() {
    let mut catalog: Vec<Matroid> = vec![
        construct::named("fano").unwrap(),
        construct::named("nonfano").unwrap(),
        construct::named("k4").unwrap(),
        construct::uniform(7, 3).unwrap(),
    ];
    for seed in 0..8 {
        catalog.push(construct::random_linear(seed, 7, 3, 2 + (seed as u32 % 2)).unwrap());
    }
    for m in &catalog {
        for s in m.elements().subsets() {
            assert_eq!(m.rank_of(s), brute_rank(m, s));
        }
    }
}

#[test]
fn random_linear_matches_enumeration_and_matrix_rank() {
    for seed in 0..12u64 {
        let p = [2, 3, 5, 7][seed as usize % 4];
        let mat = construct::random_matrix(seed, 6, 3, p).unwrap();
        let m = construct::from_matrix(&mat).unwrap();
        assert_eq!(m.circuits().as_slice(), brute_linear_circuits(&mat).as_slice());
        assert_eq!(m.rank(), mat.rank());
    }
}

#[test]
fn dual_via_basis_complements() {
    for m in [
        construct::named("fano").unwrap(),
        construct::named("vamos").unwrap(),
        construct::named("wheel3").unwrap(),
        construct::uniform(6, 2).unwrap(),
    ] {
        let d = dual(&m).unwrap();
        let e = m.elements();
        let mut from_bases: Vec<ElemSet> = m.bases().unwrap().into_iter().map(|b| e - b).collect();
        from_bases.sort();
        assert_eq!(d.bases().unwrap(), from_bases);
        assert_eq!(d.rank(), m.len() - m.rank());
    }
}

#[test]
fn contraction_rank_formula() {
    let f7 = construct::named("fano").unwrap();
    for t in f7.elements().subsets() {
        let c = contract(&f7, t);
        for s in c.elements().subsets() {
            assert_eq!(c.rank_of(s), brute_rank(&f7, s | t) - brute_rank(&f7, t));
        }
        let d = delete(&f7, t);
        assert_eq!(d.rank(), brute_rank(&f7, f7.elements() - t));
    }
}
