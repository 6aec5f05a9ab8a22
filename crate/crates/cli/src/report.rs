//! Verification reports: a stable JSON document and a plain-text summary.
//!
//! Everything here is built from sorted data so the JSON bytes depend only
//! on the inputs, never on thread scheduling. Timings are the one
//! exception and are zeroed unless asked for.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ccix_core::analyze::{CCIntersection, Suite, VerifyReport, WitnessChain, WitnessStep};
use ccix_core::{ElemSet, GroundSet, Matroid, MinorSpec};
use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub file: String,
    pub name: String,
    /// "pass", "fail" or "error".
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub result: Option<EntryResult>,
    pub ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryResult {
    pub elements: usize,
    pub rank: usize,
    pub circuits: usize,
    pub cocircuits: usize,
    pub achieved_sizes: Vec<usize>,
    pub conjecture: Vec<SizeEntry>,
    pub property_suites: PropertySuites,
    pub exercised: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeEntry {
    pub k: usize,
    pub in_scope: bool,
    pub oracle_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub circuit: Vec<String>,
    pub cocircuit: Vec<String>,
    pub intersection: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum Step {
    Start {
        circuit: Vec<String>,
        cocircuit: Vec<String>,
        intersection: Vec<String>,
    },
    Extraction {
        deleted: Vec<String>,
        contracted: Vec<String>,
        x: Vec<String>,
        y: Vec<String>,
    },
    SizeFourReduction {
        circuit: Vec<String>,
        cocircuit: Vec<String>,
        intersection: Vec<String>,
    },
    Constructive {
        route: &'static str,
        circuit: Vec<String>,
        cocircuit: Vec<String>,
        intersection: Vec<String>,
    },
    Lift {
        deleted: Vec<String>,
        contracted: Vec<String>,
        circuit: Vec<String>,
        cocircuit: Vec<String>,
    },
}

/// Suite verdicts: "pass", "vacuous" (nothing to check) or "fail: <reason>".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertySuites {
    pub lemma3: String,
    pub prop4: String,
    pub cor5: String,
}

impl PropertySuites {
    pub fn all_pass_or_vacuous(&self) -> bool {
        [&self.lemma3, &self.prop4, &self.cor5]
            .iter()
            .all(|v| *v == "pass" || *v == "vacuous")
    }
}

fn witness(g: &GroundSet, p: &CCIntersection) -> Witness {
    Witness {
        circuit: g.labels_of(p.circuit),
        cocircuit: g.labels_of(p.cocircuit),
        intersection: g.labels_of(p.intersection),
    }
}

fn spec_labels(g: &GroundSet, spec: &MinorSpec) -> (Vec<String>, Vec<String>) {
    (g.labels_of(spec.deleted), g.labels_of(spec.contracted))
}

fn steps(g: &GroundSet, chain: &WitnessChain) -> Vec<Step> {
    let w = witness(g, &chain.start);
    let mut out = vec![Step::Start {
        circuit: w.circuit,
        cocircuit: w.cocircuit,
        intersection: w.intersection,
    }];
    for step in &chain.steps {
        out.push(match step {
            WitnessStep::Extraction { spec, x, y } => {
                let (deleted, contracted) = spec_labels(g, spec);
                Step::Extraction {
                    deleted,
                    contracted,
                    x: g.labels_of(*x),
                    y: g.labels_of(*y),
                }
            }
            WitnessStep::SizeFourReduction { intersection } => {
                let w = witness(g, intersection);
                Step::SizeFourReduction {
                    circuit: w.circuit,
                    cocircuit: w.cocircuit,
                    intersection: w.intersection,
                }
            }
            WitnessStep::Constructive { route, intersection } => {
                let w = witness(g, intersection);
                Step::Constructive {
                    route: route.name(),
                    circuit: w.circuit,
                    cocircuit: w.cocircuit,
                    intersection: w.intersection,
                }
            }
            WitnessStep::Lift {
                spec,
                circuit,
                cocircuit,
            } => {
                let (deleted, contracted) = spec_labels(g, spec);
                Step::Lift {
                    deleted,
                    contracted,
                    circuit: g.labels_of(*circuit),
                    cocircuit: g.labels_of(*cocircuit),
                }
            }
        });
    }
    out
}

fn verdict(report: &VerifyReport, suite: Suite) -> String {
    let total = report.suite(suite);
    match total.failure {
        Some(reason) => format!("fail: {reason}"),
        None if report.is_vacuous() => "vacuous".to_string(),
        None => "pass".to_string(),
    }
}

pub fn entry_result(m: &Matroid, report: &VerifyReport) -> EntryResult {
    let g = m.ground();
    let conjecture = report
        .cases
        .iter()
        .map(|case| SizeEntry {
            k: case.k,
            in_scope: case.in_scope,
            oracle_ok: case.oracle_ok,
            witness: case.chain.as_ref().map(|c| witness(g, &c.result)),
            steps: case.chain.as_ref().map(|c| steps(g, c)).unwrap_or_default(),
        })
        .collect();
    let mut exercised = BTreeMap::new();
    for suite in [Suite::CeFamilies, Suite::CrossingPairs, Suite::RankTwoCircuits] {
        for (clause, n) in report.suite(suite).exercised {
            *exercised.entry(clause.to_string()).or_insert(0) += n;
        }
    }
    EntryResult {
        elements: m.len(),
        rank: m.rank(),
        circuits: report.circuit_count,
        cocircuits: report.cocircuit_count,
        achieved_sizes: report.achieved.iter().copied().collect(),
        conjecture,
        property_suites: PropertySuites {
            lemma3: verdict(report, Suite::CeFamilies),
            prop4: verdict(report, Suite::CrossingPairs),
            cor5: verdict(report, Suite::RankTwoCircuits),
        },
        exercised,
    }
}

impl Report {
    pub fn new(entries: Vec<Entry>) -> Self {
        Self {
            report_version: REPORT_VERSION,
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == "pass")
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(out, "{} [{}] {}", e.file, e.name, e.status.to_uppercase());
            if timing {
                let _ = write!(out, " ({:.1} ms)", e.ms);
            }
            out.push('\n');
            if let Some(err) = &e.error {
                let _ = writeln!(out, "  {}: {}", err.kind, err.message);
            }
            let Some(r) = &e.result else { continue };
            let sizes: Vec<String> = r.achieved_sizes.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "  |E|={} r={} circuits={} cocircuits={} sizes={{{}}}",
                r.elements,
                r.rank,
                r.circuits,
                r.cocircuits,
                sizes.join(",")
            );
            for case in &r.conjecture {
                let _ = write!(out, "  k={}: ", case.k);
                let _ = write!(out, "k-2 {}", if case.oracle_ok { "achieved" } else { "MISSING" });
                match &case.witness {
                    Some(w) => {
                        let _ = write!(
                            out,
                            "; witness {{{}}} & {{{}}} = {{{}}}",
                            w.circuit.join(","),
                            w.cocircuit.join(","),
                            w.intersection.join(",")
                        );
                    }
                    None if !case.in_scope => out.push_str("; outside 4..=6, oracle only"),
                    None => {}
                }
                out.push('\n');
            }
            let s = &r.property_suites;
            let _ = writeln!(out, "  suites: lemma3 {}, prop4 {}, cor5 {}", s.lemma3, s.prop4, s.cor5);
        }
        let passed = self.entries.iter().filter(|e| e.status == "pass").count();
        let _ = writeln!(out, "{passed}/{} passed", self.entries.len());
        out
    }
}

/// Label list for an arbitrary set, used by `inspect`.
pub fn labels(g: &GroundSet, s: ElemSet) -> String {
    g.labels_of(s).join(",")
}
