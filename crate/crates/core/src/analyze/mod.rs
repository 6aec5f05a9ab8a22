//! Circuit-cocircuit intersections and the constructive reduction of a
//! size-`k` intersection to one of size `k - 2` for `4 <= k <= 6`.
//!
//! Everything here is checked twice: constructions assert their own
//! postconditions, and the brute-force enumeration in
//! [`IntersectionOracle`] is the independent reference.

mod oxley;
mod suites;
mod verify;
mod witness;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElemSet;
use crate::transform::{self, MinorSpec};

pub use oxley::{oxley_minor, OxleyInvariant, OxleyMinor};
pub use suites::{
    ce_family, ce_family_suite, crossing_pair_suite, rank_two_circuit_suite, CeFamily, Suite,
    SuiteReport,
};
pub use verify::{verify_conjecture, SizeCase, VerifyReport};
pub use witness::{
    reduction_chain, witness_k4, witness_k5, witness_k6, Constructed, Route, WitnessChain,
    WitnessStep,
};

/// Default bound on `|circuits| * |cocircuits|` for the brute-force oracle.
pub const DEFAULT_PAIR_CAP: u64 = 10_000_000;

/// `C ∩ D` for a circuit `C` and cocircuit `D` that meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CCIntersection {
    pub circuit: ElemSet,
    pub cocircuit: ElemSet,
    pub intersection: ElemSet,
}

impl CCIntersection {
    pub fn new(circuit: ElemSet, cocircuit: ElemSet) -> Self {
        Self {
            circuit,
            cocircuit,
            intersection: circuit & cocircuit,
        }
    }

    pub fn size(&self) -> usize {
        self.intersection.len()
    }
}

/// A matroid together with its cocircuits, for exhaustive pair scans.
#[derive(Debug, Clone)]
pub struct IntersectionOracle<'a> {
    matroid: &'a Matroid,
    cocircuits: Vec<ElemSet>,
    cap: u64,
}

impl<'a> IntersectionOracle<'a> {
    pub fn new(matroid: &'a Matroid, cap: u64) -> Result<Self> {
        let cocircuits = transform::cocircuits(matroid)?;
        let pairs = matroid.circuits().len() as u128 * cocircuits.len() as u128;
        if pairs > cap as u128 {
            return Err(Error::CapExceeded { pairs, cap });
        }
        Ok(Self {
            matroid,
            cocircuits,
            cap,
        })
    }

    pub fn matroid(&self) -> &'a Matroid {
        self.matroid
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn circuits(&self) -> &[ElemSet] {
        self.matroid.circuits().as_slice()
    }

    pub fn cocircuits(&self) -> &[ElemSet] {
        &self.cocircuits
    }

    pub fn is_cocircuit(&self, set: ElemSet) -> bool {
        self.cocircuits.binary_search(&set).is_ok()
    }

    /// Every meeting pair, circuits outermost, both in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = CCIntersection> + '_ {
        self.circuits().iter().flat_map(move |&c| {
            self.cocircuits
                .iter()
                .filter(move |&&d| c.intersects(d))
                .map(move |&d| CCIntersection::new(c, d))
        })
    }

    pub fn achieved_sizes(&self) -> BTreeSet<usize> {
        self.pairs().map(|p| p.size()).collect()
    }

    /// Canonical-first pair whose intersection has `size` elements.
    pub fn find(&self, size: usize) -> Option<CCIntersection> {
        self.pairs().find(|p| p.size() == size)
    }

    pub fn contains(&self, pair: &CCIntersection) -> bool {
        self.matroid.is_circuit(pair.circuit)
            && self.is_cocircuit(pair.cocircuit)
            && pair.intersection == pair.circuit & pair.cocircuit
    }

    /// Lifts a circuit/cocircuit pair of `minor(M, spec)` to `M`: a circuit
    /// `C` avoiding the deleted set with `C - contracted = circuit`, and a
    /// cocircuit `D` avoiding the contracted set with `D - deleted =
    /// cocircuit`. Both are the canonical-first matches.
    pub fn lift(&self, spec: &MinorSpec, circuit: ElemSet, cocircuit: ElemSet) -> Result<(ElemSet, ElemSet)> {
        let lifted_circuit = self
            .circuits()
            .iter()
            .copied()
            .find(|c| c.is_disjoint(spec.deleted) && *c - spec.contracted == circuit)
            .ok_or(Error::LiftFailed)?;
        let lifted_cocircuit = self
            .cocircuits
            .iter()
            .copied()
            .find(|d| d.is_disjoint(spec.contracted) && *d - spec.deleted == cocircuit)
            .ok_or(Error::LiftFailed)?;
        if lifted_circuit & lifted_cocircuit != circuit & cocircuit {
            return Err(Error::TheoremViolation(alloc::format!(
                "lifted pair meets in {:?}, minor pair in {:?}",
                lifted_circuit & lifted_cocircuit,
                circuit & cocircuit
            )));
        }
        Ok((lifted_circuit, lifted_cocircuit))
    }
}

/// All meeting circuit-cocircuit pairs of `m` in canonical order.
pub fn cc_intersections(m: &Matroid, cap: u64) -> Result<Vec<CCIntersection>> {
    Ok(IntersectionOracle::new(m, cap)?.pairs().collect())
}

/// `{|C ∩ D| : C ∩ D nonempty}`.
pub fn achieved_sizes(m: &Matroid, cap: u64) -> Result<BTreeSet<usize>> {
    Ok(IntersectionOracle::new(m, cap)?.achieved_sizes())
}

pub fn find_intersection_of_size(m: &Matroid, size: usize, cap: u64) -> Result<Option<CCIntersection>> {
    Ok(IntersectionOracle::new(m, cap)?.find(size))
}

/// See [`IntersectionOracle::lift`].
pub fn lift_intersection(
    m: &Matroid,
    spec: &MinorSpec,
    circuit: ElemSet,
    cocircuit: ElemSet,
) -> Result<(ElemSet, ElemSet)> {
    IntersectionOracle::new(m, u64::MAX)?.lift(spec, circuit, cocircuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{named, uniform};
    use crate::transform::minor;
    use alloc::vec;

    fn sizes(m: &Matroid) -> Vec<usize> {
        achieved_sizes(m, DEFAULT_PAIR_CAP).unwrap().into_iter().collect()
    }

    #[test]
    fn anchor_sizes() {
        assert_eq!(sizes(&uniform(4, 2).unwrap()), vec![2, 3]);
        // one 3-circuit against the 2-element cocircuits
        assert_eq!(sizes(&uniform(3, 2).unwrap()), vec![2]);
        assert_eq!(sizes(&named("fano").unwrap()), vec![2, 4]);
        assert_eq!(sizes(&named("k4").unwrap()), vec![2, 4]);
        assert_eq!(sizes(&uniform(10, 5).unwrap()), vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn cap_is_enforced() {
        let u = uniform(10, 5).unwrap();
        assert_eq!(
            cc_intersections(&u, 1000).unwrap_err(),
            Error::CapExceeded { pairs: 210 * 210, cap: 1000 }
        );
    }

    #[test]
    fn fano_size_four_is_a_line_complement() {
        let f7 = named("fano").unwrap();
        let hit = find_intersection_of_size(&f7, 4, DEFAULT_PAIR_CAP).unwrap().unwrap();
        assert_eq!(hit.circuit, hit.cocircuit);
        let line = f7.elements() - hit.circuit;
        assert!(f7.is_circuit(line) && line.len() == 3);
        // the first 4-circuit in canonical order
        let first_four = f7.circuits().iter().find(|c| c.len() == 4).unwrap();
        assert_eq!(hit.circuit, first_four);
        assert_eq!(find_intersection_of_size(&f7, 3, DEFAULT_PAIR_CAP).unwrap(), None);
        assert_eq!(find_intersection_of_size(&f7, 1, DEFAULT_PAIR_CAP).unwrap(), None);
    }

    #[test]
    fn identity_lift_is_unchanged() {
        let f7 = named("fano").unwrap();
        let oracle = IntersectionOracle::new(&f7, DEFAULT_PAIR_CAP).unwrap();
        for p in oracle.pairs() {
            assert_eq!(
                oracle.lift(&MinorSpec::identity(), p.circuit, p.cocircuit).unwrap(),
                (p.circuit, p.cocircuit)
            );
        }
    }

    #[test]
    fn lifts_from_single_element_minors() {
        for (m, spec) in [
            (uniform(6, 3).unwrap(), MinorSpec::new(ElemSet::singleton(5), ElemSet::EMPTY).unwrap()),
            (named("fano").unwrap(), MinorSpec::new(ElemSet::EMPTY, ElemSet::singleton(0)).unwrap()),
        ] {
            let n = minor(&m, &spec).unwrap();
            let parent = IntersectionOracle::new(&m, DEFAULT_PAIR_CAP).unwrap();
            for p in cc_intersections(&n, DEFAULT_PAIR_CAP).unwrap() {
                let (c, d) = parent.lift(&spec, p.circuit, p.cocircuit).unwrap();
                assert!(m.is_circuit(c) && parent.is_cocircuit(d));
                assert_eq!(c & d, p.intersection);
            }
        }
    }

    #[test]
    fn lift_of_foreign_pair_fails() {
        let u = uniform(4, 2).unwrap();
        let bogus = ElemSet::from_indices([0, 1]);
        assert_eq!(
            lift_intersection(&u, &MinorSpec::identity(), bogus, bogus),
            Err(Error::LiftFailed)
        );
    }
}
