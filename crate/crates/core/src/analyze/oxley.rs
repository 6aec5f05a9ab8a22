//! Extraction of the minor `N` in which a size-`k` intersection `X` is both
//! a circuit and a cocircuit, with rank and corank `k - 1`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElemSet;
use crate::transform::{self, MinorSpec};

/// A verified minor `N = M \ D / C` around the intersection `X`, with
/// `Y = E(N) - X`.
#[derive(Debug, Clone)]
pub struct OxleyMinor {
    spec: MinorSpec,
    minor: Matroid,
    cocircuits: Vec<ElemSet>,
    x: ElemSet,
    y: ElemSet,
    k: usize,
}

/// The structural properties every [`OxleyMinor`] must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OxleyInvariant {
    /// `|X| = k >= 4`, `|Y| = k - 2`.
    Sizes,
    /// `r(N) = r*(N) = k - 1`.
    RankAndCorank,
    /// `X` is a circuit and a cocircuit of `N`.
    CircuitAndCocircuit,
    Simple,
    /// `N|X` is `U_k^{k-1}` and `N|Y` is `U_{k-2}^{k-2}`.
    UniformRestrictions,
    /// `cl(Y) = Y`.
    YIsFlat,
}

impl OxleyInvariant {
    pub const ALL: [Self; 6] = [
        Self::Sizes,
        Self::RankAndCorank,
        Self::CircuitAndCocircuit,
        Self::Simple,
        Self::UniformRestrictions,
        Self::YIsFlat,
    ];
}

impl fmt::Display for OxleyInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sizes => "|X| = k >= 4 and |Y| = k - 2",
            Self::RankAndCorank => "rank and corank are k - 1",
            Self::CircuitAndCocircuit => "X is a circuit and a cocircuit",
            Self::Simple => "N is simple",
            Self::UniformRestrictions => "N|X = U(k, k-1) and N|Y = U(k-2, k-2)",
            Self::YIsFlat => "Y is a flat",
        })
    }
}

impl OxleyMinor {
    /// Wraps `minor(parent, spec)` if it satisfies every invariant for `x`.
    pub fn new(parent: &Matroid, spec: MinorSpec, x: ElemSet) -> Result<Self> {
        let minor = transform::minor(parent, &spec)?;
        let candidate = Self::assemble(spec, minor, x)?;
        match candidate.violated() {
            None => Ok(candidate),
            Some(inv) => Err(Error::TheoremViolation(alloc::format!(
                "candidate minor fails invariant: {inv}"
            ))),
        }
    }

    fn assemble(spec: MinorSpec, minor: Matroid, x: ElemSet) -> Result<Self> {
        let cocircuits = transform::cocircuits(&minor)?;
        let y = minor.elements() - x;
        Ok(Self {
            spec,
            cocircuits,
            x,
            y,
            k: x.len(),
            minor,
        })
    }

    pub fn spec(&self) -> &MinorSpec {
        &self.spec
    }

    /// `N`.
    pub fn matroid(&self) -> &Matroid {
        &self.minor
    }

    pub fn cocircuits(&self) -> &[ElemSet] {
        &self.cocircuits
    }

    pub fn is_cocircuit(&self, set: ElemSet) -> bool {
        self.cocircuits.binary_search(&set).is_ok()
    }

    pub fn x(&self) -> ElemSet {
        self.x
    }

    pub fn y(&self) -> ElemSet {
        self.y
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The first invariant that fails, if any.
    pub fn violated(&self) -> Option<OxleyInvariant> {
        OxleyInvariant::ALL.into_iter().find(|inv| !self.holds(*inv))
    }

    pub fn holds(&self, invariant: OxleyInvariant) -> bool {
        let n = &self.minor;
        let k = self.k;
        match invariant {
            OxleyInvariant::Sizes => {
                k >= 4
                    && self.x.is_subset(n.elements())
                    && self.y.len() == k - 2
                    && n.len() == 2 * k - 2
            }
            OxleyInvariant::RankAndCorank => {
                // corank from the dual's own rank function, not |E| - r
                let dual_rank = transform::dual(n).map_or(usize::MAX, |d| d.rank());
                n.rank() + 1 == k && dual_rank + 1 == k
            }
            OxleyInvariant::CircuitAndCocircuit => n.is_circuit(self.x) && self.is_cocircuit(self.x),
            OxleyInvariant::Simple => n.is_simple(),
            OxleyInvariant::UniformRestrictions => {
                n.restriction(self.x).is_uniform_isomorphic(k, k - 1)
                    && n.restriction(self.y).is_uniform_isomorphic(k - 2, k - 2)
            }
            OxleyInvariant::YIsFlat => n.is_flat(self.y),
        }
    }
}

/// Searches for an [`OxleyMinor`] of `m` around `X = circuit ∩ cocircuit`.
///
/// Depth-first over single-element deletions and contractions outside `X`,
/// with visited `(deleted, contracted)` pairs memoised. Moves are tried in
/// the order: contract `C - X`, delete `E - (C ∪ D)`, delete `D - X`, then
/// the remaining alternatives. A state is abandoned when its rank or
/// corank has dropped below `k - 1` or when `X` no longer lies in some
/// circuit and in some cocircuit. The first state of `2k - 2` elements
/// passing every invariant is returned.
pub fn oxley_minor(m: &Matroid, circuit: ElemSet, cocircuit: ElemSet) -> Result<OxleyMinor> {
    if !m.is_circuit(circuit) {
        return Err(Error::PreconditionViolated("first set is not a circuit"));
    }
    if transform::cocircuits(m)?.binary_search(&cocircuit).is_err() {
        return Err(Error::PreconditionViolated("second set is not a cocircuit"));
    }
    let x = circuit & cocircuit;
    let k = x.len();
    if k < 4 {
        return Err(Error::PreconditionViolated("intersection has fewer than 4 elements"));
    }

    let c_rest = circuit - x;
    let d_rest = cocircuit - x;
    let others = m.elements() - circuit - cocircuit;
    let mut moves: Vec<(usize, Move)> = Vec::new();
    moves.extend(c_rest.iter().map(|e| (e, Move::Contract)));
    moves.extend(others.iter().map(|e| (e, Move::Delete)));
    moves.extend(d_rest.iter().map(|e| (e, Move::Delete)));
    moves.extend(c_rest.iter().map(|e| (e, Move::Delete)));
    moves.extend(others.iter().map(|e| (e, Move::Contract)));
    moves.extend(d_rest.iter().map(|e| (e, Move::Contract)));

    let mut search = Search {
        x,
        k,
        moves,
        visited: BTreeSet::new(),
    };
    search
        .descend(MinorSpec::identity(), m.clone())?
        .ok_or(Error::ExtractionFailed { k })
}

#[derive(Debug, Clone, Copy)]
enum Move {
    Delete,
    Contract,
}

struct Search {
    x: ElemSet,
    k: usize,
    moves: Vec<(usize, Move)>,
    visited: BTreeSet<MinorSpec>,
}

impl Search {
    fn descend(&mut self, spec: MinorSpec, current: Matroid) -> Result<Option<OxleyMinor>> {
        if current.rank() + 1 < self.k || current.corank() + 1 < self.k {
            return Ok(None);
        }
        if !current.circuits().iter().any(|c| self.x.is_subset(c)) {
            return Ok(None);
        }
        if !transform::cocircuits(&current)?.iter().any(|d| self.x.is_subset(*d)) {
            return Ok(None);
        }
        if current.len() == 2 * self.k - 2 {
            let candidate = OxleyMinor::assemble(spec, current, self.x)?;
            return Ok(candidate.violated().is_none().then_some(candidate));
        }
        for i in 0..self.moves.len() {
            let (e, mv) = self.moves[i];
            if !current.elements().contains(e) {
                continue;
            }
            let next_spec = match mv {
                Move::Delete => spec.then(ElemSet::singleton(e), ElemSet::EMPTY),
                Move::Contract => spec.then(ElemSet::EMPTY, ElemSet::singleton(e)),
            };
            if !self.visited.insert(next_spec) {
                continue;
            }
            let next = match mv {
                Move::Delete => transform::delete(&current, ElemSet::singleton(e)),
                Move::Contract => transform::contract(&current, ElemSet::singleton(e)),
            };
            if let Some(found) = self.descend(next_spec, next)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::{IntersectionOracle, DEFAULT_PAIR_CAP};
    use crate::construct::{named, uniform};

    fn all_hold(nx: &OxleyMinor) {
        for inv in OxleyInvariant::ALL {
            assert!(nx.holds(inv), "{inv} fails");
        }
    }

    #[test]
    fn whole_uniform_is_its_own_minor() {
        let u = uniform(10, 5).unwrap();
        let c = ElemSet::full(6);
        let nx = oxley_minor(&u, c, c).unwrap();
        assert!(nx.spec().is_identity());
        assert_eq!(nx.k(), 6);
        all_hold(&nx);

        let u63 = uniform(6, 3).unwrap();
        let c = ElemSet::full(4);
        let nx = oxley_minor(&u63, c, c).unwrap();
        assert!(nx.spec().is_identity());
        assert_eq!(nx.y(), ElemSet::from_indices([4, 5]));
    }

    #[test]
    fn fano_extraction() {
        let f7 = named("fano").unwrap();
        let hit = IntersectionOracle::new(&f7, DEFAULT_PAIR_CAP).unwrap().find(4).unwrap();
        let nx = oxley_minor(&f7, hit.circuit, hit.cocircuit).unwrap();
        assert_eq!(nx.matroid().len(), 6);
        assert_eq!(nx.matroid().rank(), 3);
        all_hold(&nx);
    }

    #[test]
    fn rejects_bad_inputs() {
        let u = uniform(6, 3).unwrap();
        let four = ElemSet::full(4);
        let three = ElemSet::full(3);
        assert!(matches!(oxley_minor(&u, three, four), Err(Error::PreconditionViolated(_))));
        assert!(matches!(oxley_minor(&u, four, three), Err(Error::PreconditionViolated(_))));
        let u42 = uniform(4, 2).unwrap();
        assert!(matches!(oxley_minor(&u42, three, three), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn new_rejects_a_non_minor() {
        let u = uniform(8, 4).unwrap();
        let x = ElemSet::full(5);
        // X is a 5-circuit and 5-cocircuit of U(8,4); dropping a Y element breaks the sizes
        assert!(OxleyMinor::new(&u, MinorSpec::identity(), x).is_ok());
        let bad = MinorSpec::new(ElemSet::singleton(7), ElemSet::EMPTY).unwrap();
        assert!(matches!(OxleyMinor::new(&u, bad, x), Err(Error::TheoremViolation(_))));
    }
}
