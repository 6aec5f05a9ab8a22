use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::suites::{ce_family_suite, crossing_pair_suite, rank_two_circuit_suite, Suite, SuiteReport};
use super::witness::{reduction_chain, WitnessChain};
use super::IntersectionOracle;
use crate::error::Result;
use crate::matroid::Matroid;

/// Outcome for one achieved intersection size `k >= 4`.
#[derive(Debug, Clone)]
pub struct SizeCase {
    pub k: usize,
    /// `4 <= k <= 6`; larger sizes only get the oracle check.
    pub in_scope: bool,
    /// Whether some intersection of size `k - 2` exists.
    pub oracle_ok: bool,
    pub chain: Option<WitnessChain>,
    pub suites: Vec<SuiteReport>,
}

impl SizeCase {
    pub fn passed(&self) -> bool {
        !self.in_scope
            || (self.oracle_ok
                && self
                    .chain
                    .as_ref()
                    .is_some_and(|c| c.result.size() + 2 == self.k)
                && self.suites.iter().all(SuiteReport::passed))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub circuit_count: usize,
    pub cocircuit_count: usize,
    pub achieved: BTreeSet<usize>,
    pub cases: Vec<SizeCase>,
}

impl VerifyReport {
    /// No size-1 intersection and every in-scope case verified.
    pub fn passed(&self) -> bool {
        !self.achieved.contains(&1) && self.cases.iter().all(SizeCase::passed)
    }

    /// No achieved size in `4..=6`.
    pub fn is_vacuous(&self) -> bool {
        !self.cases.iter().any(|c| c.in_scope)
    }

    /// Suite results summed over every extracted minor.
    pub fn suite(&self, suite: Suite) -> SuiteReport {
        let mut total = SuiteReport::empty(suite);
        for r in self.cases.iter().flat_map(|c| &c.suites).filter(|r| r.suite == suite) {
            total.absorb(r);
        }
        total
    }
}

/// For each achieved size `k >= 4`: checks by enumeration that `k - 2` is
/// achieved; for `k <= 6` also builds the reduction chain from the
/// canonical-first size-`k` pair and runs the three structure suites on
/// its minor.
pub fn verify_conjecture(m: &Matroid, cap: u64) -> Result<VerifyReport> {
    let oracle = IntersectionOracle::new(m, cap)?;
    let achieved = oracle.achieved_sizes();
    let mut cases = Vec::new();
    for &k in achieved.iter().filter(|&&k| k >= 4) {
        let in_scope = k <= 6;
        let oracle_ok = achieved.contains(&(k - 2));
        let mut case = SizeCase {
            k,
            in_scope,
            oracle_ok,
            chain: None,
            suites: Vec::new(),
        };
        if in_scope {
            let start = oracle.find(k).expect("k is achieved");
            let chain = reduction_chain(&oracle, start.circuit, start.cocircuit)?;
            case.suites = alloc::vec![
                ce_family_suite(&chain.minor),
                crossing_pair_suite(&chain.minor),
                rank_two_circuit_suite(&chain.minor),
            ];
            case.chain = Some(chain);
        }
        cases.push(case);
    }
    Ok(VerifyReport {
        circuit_count: m.circuits().len(),
        cocircuit_count: oracle.cocircuits().len(),
        achieved,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::DEFAULT_PAIR_CAP;
    use crate::construct::{named, uniform};

    #[test]
    fn fano_verifies_k4() {
        let r = verify_conjecture(&named("fano").unwrap(), DEFAULT_PAIR_CAP).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases.len(), 1);
        assert_eq!(r.cases[0].chain.as_ref().unwrap().result.size(), 2);
    }

    #[test]
    fn u10_5_verifies_three_sizes() {
        let r = verify_conjecture(&uniform(10, 5).unwrap(), DEFAULT_PAIR_CAP).unwrap();
        assert!(r.passed());
        let ks: Vec<usize> = r.cases.iter().map(|c| c.k).collect();
        assert_eq!(ks, [4, 5, 6]);
        for c in &r.cases {
            assert_eq!(c.chain.as_ref().unwrap().result.size(), c.k - 2);
        }
    }

    #[test]
    fn small_uniform_is_vacuous() {
        let r = verify_conjecture(&uniform(3, 2).unwrap(), DEFAULT_PAIR_CAP).unwrap();
        assert!(r.is_vacuous());
        assert!(r.passed());
    }

    #[test]
    fn large_sizes_are_out_of_scope() {
        let r = verify_conjecture(&uniform(12, 6).unwrap(), DEFAULT_PAIR_CAP).unwrap();
        let seven = r.cases.iter().find(|c| c.k == 7).unwrap();
        assert!(!seven.in_scope && seven.oracle_ok && seven.chain.is_none());
        assert!(r.passed());
    }
}
