//! Matroids represented by their circuit family.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::{ElemSet, GroundSet};
use crate::SCAN_LIMIT;

/// Deduplicated circuit list in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CircuitFamily {
    circuits: Vec<ElemSet>,
}

impl CircuitFamily {
    /// Sorts and deduplicates; does not check the axioms.
    pub fn new<I: IntoIterator<Item = ElemSet>>(sets: I) -> Self {
        let mut circuits: Vec<ElemSet> = sets.into_iter().collect();
        circuits.sort_unstable();
        circuits.dedup();
        Self { circuits }
    }

    /// The inclusion-minimal nonempty members of `sets`.
    pub fn minimal<I: IntoIterator<Item = ElemSet>>(sets: I) -> Self {
        let sorted = Self::new(sets.into_iter().filter(|s| !s.is_empty()));
        let mut circuits: Vec<ElemSet> = Vec::with_capacity(sorted.len());
        for s in sorted.circuits {
            // canonical order puts every proper subset of `s` before it
            if !circuits.iter().any(|c| c.is_subset(s)) {
                circuits.push(s);
            }
        }
        Self { circuits }
    }

    pub fn as_slice(&self) -> &[ElemSet] {
        &self.circuits
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, set: ElemSet) -> bool {
        self.circuits.binary_search(&set).is_ok()
    }

    /// Whether some member is a subset of `set`.
    pub fn any_within(&self, set: ElemSet) -> bool {
        self.circuits.iter().any(|c| c.is_subset(set))
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemSet> + '_ {
        self.circuits.iter().copied()
    }

    /// Checks C1 (nonempty), C2 (antichain) and C3 (weak elimination), in
    /// that order, and reports the first violation found.
    pub fn validate(&self, ground: ElemSet) -> Result<(), AxiomViolation> {
        let cs = &self.circuits;
        if let Some(&set) = cs.iter().find(|c| !c.is_subset(ground)) {
            return Err(AxiomViolation::OutsideGround { set });
        }
        if cs.first().is_some_and(|c| c.is_empty()) {
            return Err(AxiomViolation::EmptyCircuit);
        }
        for (i, &small) in cs.iter().enumerate() {
            for &large in &cs[i + 1..] {
                if small.is_subset(large) {
                    return Err(AxiomViolation::NotAntichain { smaller: small, larger: large });
                }
            }
        }
        for (i, &first) in cs.iter().enumerate() {
            for &second in &cs[i + 1..] {
                let union = first | second;
                for e in first & second {
                    if !self.any_within(union.without(e)) {
                        return Err(AxiomViolation::Elimination { first, second, element: e });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CircuitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.circuits).finish()
    }
}

/// First failing circuit axiom together with its witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    OutsideGround { set: ElemSet },
    EmptyCircuit,
    NotAntichain { smaller: ElemSet, larger: ElemSet },
    Elimination { first: ElemSet, second: ElemSet, element: usize },
}

impl AxiomViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Self::OutsideGround { .. } => "ground",
            Self::EmptyCircuit => "C1",
            Self::NotAntichain { .. } => "C2",
            Self::Elimination { .. } => "C3",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutsideGround { set } => write!(f, "circuit {set:?} leaves the ground set"),
            Self::EmptyCircuit => f.write_str("C1: the empty set is a circuit"),
            Self::NotAntichain { smaller, larger } => {
                write!(f, "C2: circuit {smaller:?} is contained in {larger:?}")
            }
            Self::Elimination { first, second, element } => write!(
                f,
                "C3: ({first:?} | {second:?}) - {{{element}}} contains no circuit"
            ),
        }
    }
}

/// An immutable matroid: a ground set (a mask over a shared label table)
/// and its circuit family.
#[derive(Clone)]
pub struct Matroid {
    labels: Arc<GroundSet>,
    elements: ElemSet,
    circuits: CircuitFamily,
    rank: usize,
}

impl Matroid {
    /// Builds a matroid on the whole label table, validating the circuit
    /// axioms.
    pub fn new<I: IntoIterator<Item = ElemSet>>(ground: GroundSet, circuits: I) -> Result<Self> {
        let elements = ground.all();
        Self::on_validated(Arc::new(ground), elements, CircuitFamily::new(circuits))
    }

    pub(crate) fn on_validated(
        labels: Arc<GroundSet>,
        elements: ElemSet,
        circuits: CircuitFamily,
    ) -> Result<Self> {
        circuits.validate(elements).map_err(Error::Axiom)?;
        Ok(Self::on_trusted(labels, elements, circuits))
    }

    /// For families that are circuit families by construction (minors,
    /// duals, restrictions of valid matroids).
    pub(crate) fn on_trusted(labels: Arc<GroundSet>, elements: ElemSet, circuits: CircuitFamily) -> Self {
        let mut m = Self {
            labels,
            elements,
            circuits,
            rank: 0,
        };
        m.rank = m.rank_of(elements);
        m
    }

    /// The full label table, shared with every minor derived from this
    /// matroid.
    pub fn ground(&self) -> &GroundSet {
        &self.labels
    }

    pub(crate) fn labels_arc(&self) -> &Arc<GroundSet> {
        &self.labels
    }

    /// `E(M)` as a mask over [`Matroid::ground`].
    pub fn elements(&self) -> ElemSet {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn circuits(&self) -> &CircuitFamily {
        &self.circuits
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank
    }

    pub fn is_circuit(&self, set: ElemSet) -> bool {
        self.circuits.contains(set)
    }

    pub fn is_independent(&self, set: ElemSet) -> bool {
        set.is_subset(self.elements) && !self.circuits.any_within(set)
    }

    pub fn is_basis(&self, set: ElemSet) -> bool {
        set.len() == self.rank && self.is_independent(set)
    }

    /// Greedy rank: elements of `set ∩ E` are taken in index order and kept
    /// when they close no circuit.
    pub fn rank_of(&self, set: ElemSet) -> usize {
        let mut basis = ElemSet::EMPTY;
        for e in set & self.elements {
            let grown = basis.with(e);
            if !self
                .circuits
                .iter()
                .any(|c| c.contains(e) && c.is_subset(grown))
            {
                basis = grown;
            }
        }
        basis.len()
    }

    /// `{e : r(S + e) = r(S)}`, computed as `S` plus every element that
    /// completes a circuit whose other elements all lie in `S`.
    pub fn closure(&self, set: ElemSet) -> ElemSet {
        let set = set & self.elements;
        self.circuits.iter().fold(set, |acc, c| {
            let outside = c - set;
            if outside.len() == 1 {
                acc | outside
            } else {
                acc
            }
        })
    }

    pub fn is_flat(&self, set: ElemSet) -> bool {
        set.is_subset(self.elements) && self.closure(set) == set
    }

    /// Maximal proper flats in canonical order, found as the closures of
    /// the independent sets of size `r(M) - 1`. Empty for rank zero.
    pub fn hyperplanes(&self) -> Result<Vec<ElemSet>> {
        self.check_scan()?;
        if self.rank == 0 {
            return Ok(Vec::new());
        }
        let mut found: BTreeSet<ElemSet> = BTreeSet::new();
        for candidate in self.elements.subsets_of_size(self.rank - 1) {
            if found.iter().any(|h| candidate.is_subset(*h)) || !self.is_independent(candidate) {
                continue;
            }
            found.insert(self.closure(candidate));
        }
        Ok(found.into_iter().collect())
    }

    /// The unique circuit `C` with `e ∈ C ⊆ I + e`.
    pub fn fundamental_circuit(&self, independent: ElemSet, e: usize) -> Result<ElemSet> {
        if !self.elements.contains(e) || independent.contains(e) {
            return Err(Error::PreconditionViolated("element must lie in E - I"));
        }
        if !self.is_independent(independent) {
            return Err(Error::PreconditionViolated("I is dependent"));
        }
        let span = independent.with(e);
        self.circuits
            .iter()
            .find(|c| c.contains(e) && c.is_subset(span))
            .ok_or(Error::PreconditionViolated("I + e is independent"))
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.circuits.iter().all(|c| c.len() >= 3)
    }

    /// `M|S`: the circuits of `M` inside `S`.
    pub fn restriction(&self, set: ElemSet) -> Self {
        let elements = set & self.elements;
        let circuits = CircuitFamily {
            circuits: self.circuits.iter().filter(|c| c.is_subset(elements)).collect(),
        };
        Self::on_trusted(self.labels.clone(), elements, circuits)
    }

    /// Whether `M` is `U_n^k`: `n` elements whose circuits are exactly the
    /// `(k+1)`-subsets (none when `k = n`).
    pub fn is_uniform_isomorphic(&self, n: usize, k: usize) -> bool {
        if self.len() != n || k > n {
            return false;
        }
        if k == n {
            return self.circuits.is_empty();
        }
        self.circuits.iter().all(|c| c.len() == k + 1)
            && binomial(n, k + 1) == Some(self.circuits.len() as u128)
    }

    /// Bases in canonical order, by exhaustive scan.
    pub fn bases(&self) -> Result<Vec<ElemSet>> {
        self.check_scan()?;
        let mut bases: Vec<ElemSet> = self
            .elements
            .subsets_of_size(self.rank)
            .filter(|b| self.is_independent(*b))
            .collect();
        bases.sort_unstable();
        Ok(bases)
    }

    pub fn display(&self, set: ElemSet) -> alloc::string::String {
        self.labels.display(set)
    }

    pub(crate) fn check_scan(&self) -> Result<()> {
        if self.len() > SCAN_LIMIT {
            Err(Error::ScanLimit {
                size: self.len(),
                limit: SCAN_LIMIT,
            })
        } else {
            Ok(())
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
            && self.circuits == other.circuits
            && (Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels)
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("elements", &self.elements)
            .field("rank", &self.rank)
            .field("circuits", &self.circuits)
            .finish()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use alloc::vec;

    fn set(ix: &[usize]) -> ElemSet {
        ElemSet::from_indices(ix.iter().copied())
    }

    #[test]
    fn single_circuit_family_is_valid() {
        let fam = CircuitFamily::new([set(&[0, 1, 2])]);
        assert_eq!(fam.validate(ElemSet::full(3)), Ok(()));
    }

    #[test]
    fn containment_violates_c2() {
        let fam = CircuitFamily::new([set(&[0]), set(&[0, 1])]);
        assert_eq!(
            fam.validate(ElemSet::full(2)),
            Err(AxiomViolation::NotAntichain {
                smaller: set(&[0]),
                larger: set(&[0, 1])
            })
        );
    }

    #[test]
    fn elimination_needs_the_third_pair() {
        let fam = CircuitFamily::new([set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(
            fam.validate(ElemSet::full(3)),
            Err(AxiomViolation::Elimination {
                first: set(&[0, 1]),
                second: set(&[1, 2]),
                element: 1
            })
        );
        let fixed = CircuitFamily::new([set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]);
        assert_eq!(fixed.validate(ElemSet::full(3)), Ok(()));
    }

    #[test]
    fn empty_circuit_violates_c1() {
        let fam = CircuitFamily::new([ElemSet::EMPTY, set(&[0, 1])]);
        assert_eq!(fam.validate(ElemSet::full(2)), Err(AxiomViolation::EmptyCircuit));
        assert_eq!(AxiomViolation::EmptyCircuit.axiom(), "C1");
    }

    #[test]
    fn minimal_drops_supersets() {
        let fam = CircuitFamily::minimal([set(&[0, 1, 2]), set(&[1]), ElemSet::EMPTY, set(&[2, 3])]);
        assert_eq!(fam.as_slice(), &[set(&[1]), set(&[2, 3])]);
    }

    #[test]
    fn uniform_rank_and_closure() {
        let u42 = construct::uniform(4, 2).unwrap();
        assert_eq!(u42.rank_of(set(&[0, 1, 2])), 2);
        assert_eq!(u42.rank_of(ElemSet::EMPTY), 0);
        assert_eq!(u42.closure(set(&[0])), set(&[0]));
        assert_eq!(u42.closure(set(&[0, 1])), ElemSet::full(4));
        assert_eq!(
            u42.hyperplanes().unwrap(),
            vec![set(&[0]), set(&[1]), set(&[2]), set(&[3])]
        );
        assert!(u42.is_simple());
    }

    #[test]
    fn free_matroid_hyperplanes_are_coatoms() {
        let u33 = construct::uniform(3, 3).unwrap();
        assert_eq!(
            u33.hyperplanes().unwrap(),
            vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
        assert!(u33.is_uniform_isomorphic(3, 3));
    }

    #[test]
    fn rank_zero_has_no_hyperplanes() {
        let u30 = construct::uniform(3, 0).unwrap();
        assert_eq!(u30.rank(), 0);
        assert!(u30.hyperplanes().unwrap().is_empty());
        assert!(!u30.is_simple());
    }

    #[test]
    fn fundamental_circuit_cases() {
        let u42 = construct::uniform(4, 2).unwrap();
        assert_eq!(u42.fundamental_circuit(set(&[0, 1]), 2), Ok(set(&[0, 1, 2])));
        assert_eq!(
            u42.fundamental_circuit(set(&[0]), 1),
            Err(Error::PreconditionViolated("I + e is independent"))
        );
        assert_eq!(
            u42.fundamental_circuit(set(&[0, 1, 2]), 3),
            Err(Error::PreconditionViolated("I is dependent"))
        );
    }

    #[test]
    fn loop_is_not_simple() {
        let g = GroundSet::numbered(2).unwrap();
        let m = Matroid::new(g, [set(&[0])]).unwrap();
        assert!(!m.is_simple());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn restrictions_of_uniform() {
        let u53 = construct::uniform(5, 3).unwrap();
        assert!(u53.restriction(set(&[0, 1, 2])).is_uniform_isomorphic(3, 3));
        assert!(u53.restriction(set(&[0, 1, 2, 4])).is_uniform_isomorphic(4, 3));
        assert!(construct::uniform(6, 3).unwrap().is_uniform_isomorphic(6, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 6), Some(210));
        assert_eq!(binomial(4, 5), Some(0));
        assert_eq!(binomial(64, 32), Some(1_832_624_140_942_590_534));
    }
}
