//! Exhaustive checks of the structure of an [`OxleyMinor`]: the families
//! `C_e` of circuits meeting `Y` only in `e`, pairs of such circuits, and
//! the rank-2 circuits.
//!
//! Each suite quantifies over every object its statement mentions and
//! returns the first counterexample, plus how many instances of each clause
//! had a non-vacuous hypothesis.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::oxley::OxleyMinor;
use crate::error::{Error, Result};
use crate::set::ElemSet;

/// Circuits `C` of `N` with `C - X = {e}`, canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeFamily {
    pub e: usize,
    pub members: Vec<ElemSet>,
}

fn members_for(nx: &OxleyMinor, e: usize) -> Vec<ElemSet> {
    let only_e = ElemSet::singleton(e);
    nx.matroid()
        .circuits()
        .iter()
        .filter(|c| *c - nx.x() == only_e)
        .collect()
}

/// The family `C_e` for `e ∈ Y`; fewer than two members is a theorem
/// violation.
pub fn ce_family(nx: &OxleyMinor, e: usize) -> Result<CeFamily> {
    if !nx.y().contains(e) {
        return Err(Error::PreconditionViolated("element is not in Y"));
    }
    let members = members_for(nx, e);
    if members.len() < 2 {
        return Err(Error::TheoremViolation(alloc::format!(
            "C_e for e = {} has {} members",
            nx.matroid().ground().label(e),
            members.len()
        )));
    }
    Ok(CeFamily { e, members })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    CeFamilies,
    CrossingPairs,
    RankTwoCircuits,
}

impl Suite {
    pub const ALL: [Self; 3] = [Self::CeFamilies, Self::CrossingPairs, Self::RankTwoCircuits];

    /// Report key.
    pub fn key(self) -> &'static str {
        match self {
            Self::CeFamilies => "lemma3",
            Self::CrossingPairs => "prop4",
            Self::RankTwoCircuits => "cor5",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub failure: Option<String>,
    /// Clause name to the number of instances checked with a satisfied
    /// hypothesis.
    pub exercised: BTreeMap<&'static str, usize>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            failure: None,
            exercised: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn count(&self, clause: &str) -> usize {
        self.exercised.get(clause).copied().unwrap_or(0)
    }

    fn tick(&mut self, clause: &'static str) {
        *self.exercised.entry(clause).or_default() += 1;
    }

    fn fail(mut self, message: String) -> Self {
        self.failure = Some(message);
        self
    }

    /// Accumulates counts; keeps the first failure.
    pub fn absorb(&mut self, other: &SuiteReport) {
        debug_assert_eq!(self.suite, other.suite);
        if self.failure.is_none() {
            self.failure.clone_from(&other.failure);
        }
        for (clause, n) in &other.exercised {
            *self.exercised.entry(clause).or_default() += n;
        }
    }

    pub fn empty(suite: Suite) -> Self {
        Self::new(suite)
    }
}

/// For every `e ∈ Y`: members of `C_e` have `3 <= |C| <= k` and
/// `2 <= r(C) <= k - 1`; `|C_e| >= 2`; any two members cover `X + e`; any
/// third member contains `X - (C1 ∩ C2)`; and `|C_e| = 2` exactly when the
/// members meet only in `e`.
pub fn ce_family_suite(nx: &OxleyMinor) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::CeFamilies);
    let n = nx.matroid();
    let k = nx.k();
    let x = nx.x();
    let show = |s: ElemSet| n.display(s);
    for e in nx.y() {
        let members = members_for(nx, e);
        for &c in &members {
            let r = n.rank_of(c);
            if !(3..=k).contains(&c.len()) || !(2..k).contains(&r) {
                return report.fail(alloc::format!(
                    "C_e member {} has size {} and rank {r}",
                    show(c),
                    c.len()
                ));
            }
            report.tick("ce.bounds");
        }
        if members.len() < 2 {
            return report.fail(alloc::format!(
                "C_e for e = {} has {} members",
                n.ground().label(e),
                members.len()
            ));
        }
        report.tick("ce.at_least_two");

        let target = x.with(e);
        let exactly_two = members.len() == 2;
        for (i, &c1) in members.iter().enumerate() {
            for &c2 in &members[i + 1..] {
                if c1 | c2 != target {
                    return report.fail(alloc::format!(
                        "{} and {} do not cover X + e",
                        show(c1),
                        show(c2)
                    ));
                }
                report.tick("ce.pair_union");

                let must_hold = x - (c1 & c2);
                for &c in members.iter().filter(|&&c| c != c1 && c != c2) {
                    if !must_hold.is_subset(c.without(e)) {
                        return report.fail(alloc::format!(
                            "{} misses part of X - ({} ∩ {})",
                            show(c),
                            show(c1),
                            show(c2)
                        ));
                    }
                    report.tick("ce.third_member");
                }

                let meet_only_in_e = c1 & c2 == ElemSet::singleton(e);
                if meet_only_in_e != exactly_two {
                    return report.fail(alloc::format!(
                        "|C_e| = {} but {} ∩ {} = {}",
                        members.len(),
                        show(c1),
                        show(c2),
                        show(c1 & c2)
                    ));
                }
            }
        }
        report.tick(if exactly_two { "ce.exactly_two" } else { "ce.more_than_two" });
    }
    report
}

/// For distinct circuits `C`, `C'` meeting each other and each meeting `Y`
/// in one element:
/// if `X ⊄ C ∪ C'`, their `X`-parts are nested or some circuit `C''`
/// satisfies `C △ C' ⊆ C'' ⊊ C ∪ C'`;
/// if `C' ∩ X ⊊ C ∩ X`, they meet `Y` in different elements and some
/// circuit `C'' ⊊ C ∪ C'` has `C'' ∩ Y = (C ∪ C') ∩ Y` and `C - C' ⊆ C''`.
pub fn crossing_pair_suite(nx: &OxleyMinor) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::CrossingPairs);
    let n = nx.matroid();
    let (x, y) = (nx.x(), nx.y());
    let circuits = n.circuits().as_slice();
    let single: Vec<ElemSet> = circuits.iter().copied().filter(|c| (*c & y).len() == 1).collect();
    let show = |s: ElemSet| n.display(s);

    for &c in &single {
        for &c2 in &single {
            if c == c2 || c.is_disjoint(c2) {
                continue;
            }
            let union = c | c2;
            if !x.is_subset(union) {
                let (cx, c2x) = (c & x, c2 & x);
                let nested = cx.is_subset(c2x) || c2x.is_subset(cx);
                let sym = c ^ c2;
                let bridged = || circuits.iter().any(|d| sym.is_subset(*d) && d.is_proper_subset(union));
                if nested {
                    report.tick("crossing.uncovered.nested");
                } else if bridged() {
                    report.tick("crossing.uncovered.bridged");
                } else {
                    return report.fail(alloc::format!(
                        "{} and {} leave X uncovered with no bridging circuit",
                        show(c),
                        show(c2)
                    ));
                }
            }
            if (c2 & x).is_proper_subset(c & x) {
                if c & y == c2 & y {
                    return report.fail(alloc::format!(
                        "{} ⊋ {} on X but they share their Y element",
                        show(c),
                        show(c2)
                    ));
                }
                let union_y = union & y;
                let c_only = c - c2;
                let found = circuits
                    .iter()
                    .any(|d| d.is_proper_subset(union) && *d & y == union_y && c_only.is_subset(*d));
                if !found {
                    return report.fail(alloc::format!(
                        "no circuit inside {} ∪ {} carries both Y elements and {}",
                        show(c),
                        show(c2),
                        show(c_only)
                    ));
                }
                report.tick("crossing.nested");
            }
        }
    }
    report
}

/// Every rank-2 circuit is a closed triangle meeting `Y` once; for
/// `k >= 5` two rank-2 circuits are disjoint or share one element, meet
/// `Y` in two elements together, and have a 4-circuit as symmetric
/// difference.
pub fn rank_two_circuit_suite(nx: &OxleyMinor) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::RankTwoCircuits);
    let n = nx.matroid();
    let y = nx.y();
    let show = |s: ElemSet| n.display(s);
    let rank_two: Vec<ElemSet> = n.circuits().iter().filter(|c| n.rank_of(*c) == 2).collect();

    for &c in &rank_two {
        if (c & y).len() != 1 || c.len() != 3 || n.closure(c) != c {
            return report.fail(alloc::format!(
                "rank-2 circuit {} is not a closed triangle meeting Y once",
                show(c)
            ));
        }
        report.tick("triangle.shape");
    }
    if nx.k() < 5 {
        return report;
    }
    for (i, &c) in rank_two.iter().enumerate() {
        for &c2 in &rank_two[i + 1..] {
            if c.is_disjoint(c2) {
                report.tick("triangle.disjoint");
                continue;
            }
            let sym = c ^ c2;
            let ok = (c & c2).len() == 1
                && ((c | c2) & y).len() == 2
                && sym.len() == 4
                && n.is_circuit(sym);
            if !ok {
                return report.fail(alloc::format!(
                    "rank-2 circuits {} and {} meet badly",
                    show(c),
                    show(c2)
                ));
            }
            report.tick("triangle.meeting");
        }
    }
    report
}
