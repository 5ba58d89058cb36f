//! Seeded invariant suites run against a built model.

mod group;
mod roots;
mod sample;
mod sl2;
mod tits;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::action::{GeneratorActionTable, KmWord, WindowComparison};
use crate::algebra::Alphabet;
use crate::error::{Error, Result};
use crate::models::ModelSpec;
use crate::semidirect::{GroupElement, SemidirectGroup, SCHEMA_VERSION};

pub use sample::{Sampler, MAX_ATTEMPTS};
pub use tits::{fit_commutator, CommutatorFit, FittedRoot};

pub const SUITES: &[&str] = &[
    "model",
    "group-axioms",
    "automorphism",
    "normality",
    "basis-change",
    "sl2-relations",
    "sl2-relations-as-printed",
    "tits",
    "root-sets",
    "root-sets-bch",
    "derivation-transfer",
];

/// Witnesses kept per line.
const MAX_WITNESSES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    /// Individual evaluations that were decided.
    pub checked: usize,
    /// Evaluations abandoned because an image left the window.
    pub undecided: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckLine {
    pub fn new(name: &str) -> Self {
        CheckLine { name: name.to_string(), passed: false, checked: 0, undecided: 0, failed: 0, failures: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(witness());
        }
    }

    fn fail(&mut self, witness: String) {
        self.failed += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(witness);
        }
    }

    pub fn record(&mut self, cmp: &WindowComparison, context: &str) {
        self.checked += cmp.checked;
        self.undecided += cmp.undecided;
        if !cmp.equal {
            self.fail(format!("{context}: {}", cmp.witness.clone().unwrap_or_default()));
        }
    }

    /// Counts `r` as one evaluation, or as undecided if the window was left.
    pub fn outcome(&mut self, r: Result<bool>, witness: impl FnOnce() -> String) -> Result<()> {
        match r {
            Ok(ok) => self.check(ok, witness),
            Err(Error::WindowExceeded { .. }) => self.undecided += 1,
            Err(e) => return Err(e),
        }
        Ok(())
    }

    pub fn finish(mut self) -> Self {
        self.passed = self.failed == 0 && self.checked > 0;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub model: String,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    /// Random draws discarded because they left the window.
    pub rejected: usize,
    pub provenance: BTreeMap<String, String>,
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict} {} on {} (seed {}, {} samples)", self.suite, self.model, self.seed, self.samples);
        for l in &self.lines {
            let v = if l.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {v} {:<28} checked {:>6}  undecided {:>5}  failed {}", l.name, l.checked, l.undecided, l.failed);
            for w in &l.failures {
                let _ = writeln!(out, "         {w}");
            }
        }
        if self.rejected > 0 {
            let _ = writeln!(out, "  {} samples rejected for leaving the window", self.rejected);
        }
        out
    }

    pub fn line(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }
}

/// Compares two words letter by letter on every generator, without merging letters first.
pub fn compare_action(a: &KmWord, b: &KmWord, table: &GeneratorActionTable, alphabet: &Arc<Alphabet>) -> Result<WindowComparison> {
    let mut cmp = WindowComparison { equal: true, checked: 0, undecided: 0, witness: None };
    for g in alphabet.ids() {
        match (a.apply_generator(table, alphabet, g), b.apply_generator(table, alphabet, g)) {
            (Ok(x), Ok(y)) => {
                cmp.checked += 1;
                if x != y && cmp.witness.is_none() {
                    cmp.equal = false;
                    cmp.witness = Some(format!("{}: {} vs {}", alphabet.get(g)?.label, x.render(), y.render()));
                }
            }
            (Err(Error::WindowExceeded { .. }), _) | (_, Err(Error::WindowExceeded { .. })) => cmp.undecided += 1,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Ok(cmp)
}

/// Equality in G: identical Magnus parts and G_J parts acting alike on the window.
pub(crate) fn record_elements(
    line: &mut CheckLine,
    group: &SemidirectGroup,
    a: &GroupElement,
    b: &GroupElement,
    context: &str,
) -> Result<()> {
    if a.n != b.n {
        line.checked += 1;
        line.fail(format!(
            "{context}: Magnus parts differ: {} vs {}",
            a.n.log().to_polynomial().render(),
            b.n.log().to_polynomial().render()
        ));
        return Ok(());
    }
    let cmp = compare_action(&a.g, &b.g, group.table(), group.alphabet())?;
    line.record(&cmp, context);
    Ok(())
}

fn default_samples(suite: &str) -> usize {
    match suite {
        "group-axioms" | "automorphism" | "normality" => 100,
        "basis-change" => 50,
        "sl2-relations" | "sl2-relations-as-printed" | "tits" => 10,
        "root-sets" | "root-sets-bch" => 5,
        _ => 1,
    }
}

pub(crate) fn not_applicable(suite: &str, spec: &ModelSpec) -> Error {
    Error::NotApplicable { suite: suite.to_string(), model: spec.id.clone() }
}

/// Runs one named suite. `samples` overrides the suite's default sample count.
pub fn run_suite(spec: &ModelSpec, suite: &str, seed: u64, samples: Option<usize>) -> Result<SuiteReport> {
    let n = samples.unwrap_or_else(|| default_samples(suite));
    let mut s = Sampler::new(seed);
    let lines = match suite {
        "model" => roots::model(spec)?,
        "group-axioms" => group::axioms(spec, &mut s, n)?,
        "automorphism" => group::automorphism(spec, &mut s, n)?,
        "normality" => group::normality(spec, &mut s, n)?,
        "basis-change" => group::basis_change(spec, &mut s, n)?,
        "sl2-relations" => sl2::relations(spec, &mut s, n, false)?,
        "sl2-relations-as-printed" => sl2::relations(spec, &mut s, n, true)?,
        "tits" => tits::relations(spec, &mut s, n)?,
        "root-sets" => roots::root_sets(spec, &mut s, n, false)?,
        "root-sets-bch" => roots::root_sets(spec, &mut s, n, true)?,
        "derivation-transfer" => roots::derivation_transfer(spec, &mut s)?,
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    };
    let lines: Vec<CheckLine> = lines.into_iter().map(CheckLine::finish).collect();
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.to_string(),
        model: spec.id.clone(),
        seed,
        samples: n,
        passed: !lines.is_empty() && lines.iter().all(|l| l.passed),
        rejected: s.rejected,
        provenance: spec.provenance.clone(),
        lines,
    })
}
