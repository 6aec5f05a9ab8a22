//! Duality, deletion, contraction and minors.
//!
//! Results share the parent's label table and element indices; a minor's
//! ground set is simply a smaller mask.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matroid::{CircuitFamily, Matroid};
use crate::set::ElemSet;

/// How a minor is obtained from its parent: `M \ deleted / contracted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MinorSpec {
    pub deleted: ElemSet,
    pub contracted: ElemSet,
}

impl MinorSpec {
    pub fn new(deleted: ElemSet, contracted: ElemSet) -> Result<Self> {
        if deleted.intersects(contracted) {
            return Err(Error::OverlappingSpec);
        }
        Ok(Self { deleted, contracted })
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn removed(&self) -> ElemSet {
        self.deleted | self.contracted
    }

    pub fn is_identity(&self) -> bool {
        self.removed().is_empty()
    }

    /// The spec of `(M \ self) \ d / c` relative to `M`.
    #[must_use]
    pub fn then(self, deleted: ElemSet, contracted: ElemSet) -> Self {
        Self {
            deleted: self.deleted | deleted,
            contracted: self.contracted | contracted,
        }
    }
}

/// `M*`: circuits are the complements of the hyperplanes of `M`.
pub fn dual(m: &Matroid) -> Result<Matroid> {
    let circuits = cocircuits(m)?;
    Ok(Matroid::on_trusted(
        m.labels_arc().clone(),
        m.elements(),
        CircuitFamily::new(circuits),
    ))
}

/// Circuits of `M*` in canonical order.
pub fn cocircuits(m: &Matroid) -> Result<Vec<ElemSet>> {
    let e = m.elements();
    let mut out: Vec<ElemSet> = m.hyperplanes()?.into_iter().map(|h| e - h).collect();
    out.sort_unstable();
    Ok(out)
}

/// `M \ T`: circuits avoiding `T`.
pub fn delete(m: &Matroid, t: ElemSet) -> Matroid {
    m.restriction(m.elements() - t)
}

/// `M / T`: the minimal nonempty sets `C - T` over circuits `C`.
pub fn contract(m: &Matroid, t: ElemSet) -> Matroid {
    let t = t & m.elements();
    if t.is_empty() {
        return m.clone();
    }
    let circuits = CircuitFamily::minimal(m.circuits().iter().map(|c| c - t));
    Matroid::on_trusted(m.labels_arc().clone(), m.elements() - t, circuits)
}

/// `M \ deleted / contracted`.
pub fn minor(m: &Matroid, spec: &MinorSpec) -> Result<Matroid> {
    if spec.deleted.intersects(spec.contracted) {
        return Err(Error::OverlappingSpec);
    }
    Ok(contract(&delete(m, spec.deleted), spec.contracted))
}
