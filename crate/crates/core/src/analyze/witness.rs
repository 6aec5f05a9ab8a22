//! Constructive reduction of a size-`k` intersection to size `k - 2`.
//!
//! For `k = 4` and `k = 5` the intersection inside the extracted minor is
//! built step by step, each step asserted; for `k = 6` a size-4
//! intersection of the minor is found by enumeration. The result is then
//! lifted back to the parent matroid.

use alloc::string::String;
use alloc::vec::Vec;

use super::oxley::{oxley_minor, OxleyMinor};
use super::{CCIntersection, IntersectionOracle};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElemSet;
use crate::transform::MinorSpec;

/// Which argument produced a constructed intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `k = 4`: fundamental circuit of `x2` over `Y + x1`.
    FundamentalCircuit,
    /// `k = 5`: a 4-circuit meeting `Y` once, against the cocircuit `X`.
    FourCircuit,
    /// `k = 5`: a 4-cocircuit meeting `Y` once, against the circuit `X`.
    FourCocircuit,
    /// `k = 5`: a 5-cocircuit `C0` with `C0 ∩ Y = {y1}` against a
    /// 5-circuit of `C_{y2}` through the element of `X` that `C0` misses.
    CocircuitPivot,
    /// `k = 6`: enumeration of the minor's pairs for a size-4 intersection.
    SizeFourSearch,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Self::FundamentalCircuit => "fundamental-circuit",
            Self::FourCircuit => "four-circuit",
            Self::FourCocircuit => "four-cocircuit",
            Self::CocircuitPivot => "cocircuit-pivot",
            Self::SizeFourSearch => "size-four-search",
        }
    }
}

/// An intersection inside `N`, with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constructed {
    pub route: Route,
    pub intersection: CCIntersection,
}

fn violation(message: String) -> Error {
    Error::TheoremViolation(message)
}

fn require(cond: bool, message: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(violation(message()))
    }
}

/// `k = 4`: with `Y = {y1, y2}` and `x1 < x2` the first two elements of
/// `X`, the fundamental circuit of `x2` over the independent set `Y + x1`
/// meets the cocircuit `X` in exactly `{x1, x2}`.
pub fn witness_k4(nx: &OxleyMinor) -> Result<Constructed> {
    if nx.k() != 4 {
        return Err(Error::PreconditionViolated("witness_k4 needs k = 4"));
    }
    let n = nx.matroid();
    let mut xs = nx.x().iter();
    let (x1, x2) = (xs.next().unwrap(), xs.next().unwrap());
    let base = nx.y().with(x1);
    require(n.is_independent(base), || alloc::format!("{} is dependent", n.display(base)))?;
    let circuit = n.fundamental_circuit(base, x2)?;
    let pair = ElemSet::from_indices([x1, x2]);
    require(circuit & nx.x() == pair, || {
        alloc::format!("fundamental circuit {} meets X outside {{x1, x2}}", n.display(circuit))
    })?;
    Ok(Constructed {
        route: Route::FundamentalCircuit,
        intersection: CCIntersection::new(circuit, nx.x()),
    })
}

/// `k = 5`. If a 4-element circuit or cocircuit meets `Y` once, it meets
/// `X` in three elements. Otherwise take the canonical-first 5-cocircuit
/// `C0` meeting `Y` in one element `y1`, let `x1` be the element of `X`
/// outside `C0` and `y2` the first other element of `Y`; some 5-element
/// member of `C_{y2}` contains `x1`, and it meets `C0` in three elements.
pub fn witness_k5(nx: &OxleyMinor) -> Result<Constructed> {
    if nx.k() != 5 {
        return Err(Error::PreconditionViolated("witness_k5 needs k = 5"));
    }
    let n = nx.matroid();
    let (x, y) = (nx.x(), nx.y());
    let meets_y_once = |s: &ElemSet| (*s & y).len() == 1;

    if let Some(c) = n.circuits().iter().find(|c| c.len() == 4 && meets_y_once(c)) {
        return Ok(Constructed {
            route: Route::FourCircuit,
            intersection: CCIntersection::new(c, x),
        });
    }
    if let Some(&d) = nx.cocircuits().iter().find(|d| d.len() == 4 && meets_y_once(d)) {
        return Ok(Constructed {
            route: Route::FourCocircuit,
            intersection: CCIntersection::new(x, d),
        });
    }

    let c0 = nx
        .cocircuits()
        .iter()
        .copied()
        .find(|d| d.len() == 5 && meets_y_once(d))
        .ok_or_else(|| violation("no 5-cocircuit meets Y in one element".into()))?;
    let missed = x - c0;
    require(missed.len() == 1, || {
        alloc::format!("cocircuit {} misses {} elements of X", n.display(c0), missed.len())
    })?;
    let x1 = missed.first().unwrap();
    let y1 = (c0 & y).first().unwrap();
    let y2 = y.without(y1).first().unwrap();

    let family: Vec<ElemSet> = n
        .circuits()
        .iter()
        .filter(|c| *c - x == ElemSet::singleton(y2))
        .collect();
    let c1 = family
        .iter()
        .copied()
        .find(|c| c.contains(x1))
        .ok_or_else(|| violation("no member of C_y2 contains x1".into()))?;
    require(c1.len() == 3 || c1.len() == 5, || {
        alloc::format!("member {} of C_y2 has size {}", n.display(c1), c1.len())
    })?;
    let circuit = if c1.len() == 5 {
        c1
    } else {
        family
            .iter()
            .copied()
            .find(|c| c.len() == 5 && c.contains(x1))
            .ok_or_else(|| violation("C_y2 has no 5-element member containing x1".into()))?
    };
    let found = CCIntersection::new(circuit, c0);
    require(found.size() == 3, || {
        alloc::format!("{} meets {} in {} elements", n.display(circuit), n.display(c0), found.size())
    })?;
    Ok(Constructed {
        route: Route::CocircuitPivot,
        intersection: found,
    })
}

/// One verified step of a [`WitnessChain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessStep {
    /// `N = M \ deleted / contracted` around `X`, with `Y = E(N) - X`.
    Extraction { spec: MinorSpec, x: ElemSet, y: ElemSet },
    /// A size-4 intersection of `N` found by enumeration (`k = 6`).
    SizeFourReduction { intersection: CCIntersection },
    /// The constructed intersection inside `N` (`k = 4, 5`).
    Constructive { route: Route, intersection: CCIntersection },
    /// The pair lifted from `N` back to `M`.
    Lift { spec: MinorSpec, circuit: ElemSet, cocircuit: ElemSet },
}

/// Audit trail from a size-`k` intersection of `M` to a size-`k - 2` one.
#[derive(Debug, Clone)]
pub struct WitnessChain {
    pub k: usize,
    pub start: CCIntersection,
    pub steps: Vec<WitnessStep>,
    /// Lives in the original matroid.
    pub result: CCIntersection,
    pub minor: OxleyMinor,
}

/// Runs the whole reduction for `X = circuit ∩ cocircuit` with
/// `4 <= |X| <= 6`, verifying the final pair against `parent`.
pub fn reduction_chain(
    parent: &IntersectionOracle<'_>,
    circuit: ElemSet,
    cocircuit: ElemSet,
) -> Result<WitnessChain> {
    let m = parent.matroid();
    let start = CCIntersection::new(circuit, cocircuit);
    let k = start.size();
    if !(4..=6).contains(&k) {
        return Err(Error::PreconditionViolated("intersection size must be 4, 5 or 6"));
    }
    let nx = oxley_minor(m, circuit, cocircuit)?;
    let mut steps = alloc::vec![WitnessStep::Extraction {
        spec: *nx.spec(),
        x: nx.x(),
        y: nx.y(),
    }];

    let inner = match k {
        4 => witness_k4(&nx)?,
        5 => witness_k5(&nx)?,
        _ => {
            let oracle = IntersectionOracle::new(nx.matroid(), parent.cap())?;
            let hit = oracle
                .find(4)
                .ok_or_else(|| violation("minor for k = 6 has no size-4 intersection".into()))?;
            Constructed {
                route: Route::SizeFourSearch,
                intersection: hit,
            }
        }
    };
    require(
        nx.matroid().is_circuit(inner.intersection.circuit) && nx.is_cocircuit(inner.intersection.cocircuit),
        || "constructed pair is not a circuit/cocircuit pair of N".into(),
    )?;
    require(inner.intersection.size() == k - 2, || {
        alloc::format!("constructed intersection has size {}", inner.intersection.size())
    })?;
    steps.push(match inner.route {
        Route::SizeFourSearch => WitnessStep::SizeFourReduction {
            intersection: inner.intersection,
        },
        route => WitnessStep::Constructive {
            route,
            intersection: inner.intersection,
        },
    });

    let spec = *nx.spec();
    let (lc, ld) = parent.lift(&spec, inner.intersection.circuit, inner.intersection.cocircuit)?;
    steps.push(WitnessStep::Lift {
        spec,
        circuit: lc,
        cocircuit: ld,
    });
    let result = CCIntersection::new(lc, ld);
    require(parent.contains(&result) && result.size() == k - 2, || {
        "lifted pair is not a size k - 2 intersection of M".into()
    })?;
    Ok(WitnessChain {
        k,
        start,
        steps,
        result,
        minor: nx,
    })
}

/// `k = 6` reduction for the pair `(circuit, cocircuit)` of `m`.
pub fn witness_k6(m: &Matroid, circuit: ElemSet, cocircuit: ElemSet, cap: u64) -> Result<WitnessChain> {
    if (circuit & cocircuit).len() != 6 {
        return Err(Error::PreconditionViolated("witness_k6 needs an intersection of size 6"));
    }
    reduction_chain(&IntersectionOracle::new(m, cap)?, circuit, cocircuit)
}
