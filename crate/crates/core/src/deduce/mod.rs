//! Obstruction arguments replayed as checkable traces.
//!
//! Each pipeline reads invariants from a [`ManifoldRecord`], records them as
//! trace inputs, and emits steps whose numbers carry the expression they
//! were derived from. [`replay`] re-evaluates every expression and re-reads
//! every input from the record.

mod bb;
mod expr;
mod fano;
mod hk;
mod partner;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

pub use bb::{bb_decompositions, bb_trace, DecompositionShape, Factor};
pub use expr::{num, rat, var, Expr};
pub use fano::{fano_index_match, general_type_index, ricci_flat_exclusion};
pub use hk::{
    cy_hk_distinction, hk_elimination_system, hk_partner_pipeline, hk_partner_record,
    nef_hypotheses_check,
};
pub use partner::{
    cubic_partner_solve, cubic_partner_solve_with, divisor_c3_compare, partner_model, Family,
};

use crate::algebra::GradedAlgebra;
use crate::catalog::ManifoldRecord;
use crate::chern::{chern_numbers, monomial_label, pontrjagin_classes, pontrjagin_numbers};
use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::genus::hrr_chi;
use crate::hodge::{signature_from_hodge, signature_legacy};
use crate::schubert::Partition;

/// Why a step holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    PontrjaginInvariance,
    SwInvariance,
    HodgeSymmetry,
    SerreDuality,
    KodairaVanishing,
    Rr,
    Integrality,
    Divisibility,
    Fujiki,
    Miyaoka,
    BbDecomposition,
    Lefschetz,
}

impl Justification {
    pub fn as_str(self) -> &'static str {
        match self {
            Justification::PontrjaginInvariance => "pontrjagin-invariance",
            Justification::SwInvariance => "sw-invariance",
            Justification::HodgeSymmetry => "hodge-symmetry",
            Justification::SerreDuality => "serre-duality",
            Justification::KodairaVanishing => "kodaira-vanishing",
            Justification::Rr => "rr",
            Justification::Integrality => "integrality",
            Justification::Divisibility => "divisibility",
            Justification::Fujiki => "fujiki",
            Justification::Miyaoka => "miyaoka",
            Justification::BbDecomposition => "bb-decomposition",
            Justification::Lefschetz => "lefschetz",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn ser_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_expr<S: Serializer>(e: &Option<Expr>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match e {
        Some(e) => s.serialize_some(&e.to_string()),
        None => s.serialize_none(),
    }
}

/// A named exact value, optionally with the expression it must equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: String,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    #[serde(serialize_with = "ser_expr", skip_serializing_if = "Option::is_none")]
    pub expr: Option<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub claim: String,
    pub tag: Justification,
    pub values: Vec<Quantity>,
}

impl Step {
    pub fn new(tag: Justification, claim: impl Into<String>) -> Self {
        Step {
            claim: claim.into(),
            tag,
            values: Vec::new(),
        }
    }

    /// Records `name = value`, which replay checks against `expr`.
    pub fn derived(mut self, name: impl Into<String>, value: Rational, expr: Expr) -> Self {
        self.values.push(Quantity {
            name: name.into(),
            value,
            expr: Some(expr),
        });
        self
    }

    /// Records a value produced by a search or solver rather than a formula.
    pub fn observed(mut self, name: impl Into<String>, value: Rational) -> Self {
        self.values.push(Quantity {
            name: name.into(),
            value,
            expr: None,
        });
        self
    }
}

/// Structured result of a pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Excluded { reason: String },
    Shapes { shapes: Vec<String> },
    IndexMatch { index: i64, c1_top: String },
    CanonicalMultiple { r: i64 },
    PartnerSolutions { solutions: Vec<(i64, i64)> },
    Unequal { witness: String },
    NuSet { values: Vec<u32> },
    ChiWitness { cy: i64, hk: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeductionTrace {
    pub title: String,
    pub subject: String,
    /// Values read from the catalog record, keyed as in [`catalog_quantity`].
    pub inputs: Vec<Quantity>,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl DeductionTrace {
    fn new(title: &str, subject: &str) -> Self {
        DeductionTrace {
            title: title.to_string(),
            subject: subject.to_string(),
            inputs: Vec::new(),
            steps: Vec::new(),
            verdict: Verdict {
                outcome: Outcome::Excluded {
                    reason: String::new(),
                },
                summary: String::new(),
            },
        }
    }

    /// Reads `key` from the record and keeps it as an input.
    fn input(&mut self, record: &ManifoldRecord, key: &str) -> Result<Rational> {
        if let Some(q) = self.inputs.iter().find(|q| q.name == key) {
            return Ok(q.value.clone());
        }
        let v = catalog_quantity(record, key)?;
        self.inputs.push(Quantity {
            name: key.to_string(),
            value: v.clone(),
            expr: None,
        });
        Ok(v)
    }

    /// A parameter of a record-free pipeline.
    fn parameter(&mut self, key: &str, value: i64) {
        self.inputs.push(Quantity {
            name: key.to_string(),
            value: int(value),
            expr: None,
        });
    }

    fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    fn finish(mut self, outcome: Outcome, summary: impl Into<String>) -> Self {
        self.verdict = Verdict {
            outcome,
            summary: summary.into(),
        };
        self
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("### {} ({})\n\n", self.title, self.subject);
        if !self.inputs.is_empty() {
            out.push_str("| input | value |\n|---|---|\n");
            for q in &self.inputs {
                out.push_str(&format!("| {} | {} |\n", q.name, q.value));
            }
            out.push('\n');
        }
        for (i, s) in self.steps.iter().enumerate() {
            out.push_str(&format!("{}. [{}] {}\n", i + 1, s.tag, s.claim));
            for q in &s.values {
                match &q.expr {
                    Some(e) => out.push_str(&format!("   - {} = {} = {}\n", q.name, e, q.value)),
                    None => out.push_str(&format!("   - {} = {}\n", q.name, q.value)),
                }
            }
        }
        out.push_str(&format!("\n**Verdict:** {}\n", self.verdict.summary));
        out
    }
}

/// Reads a named invariant of a record.
///
/// Keys: `deg`, `index`, `euler`, `sigma`, `sigma_legacy`, `fujiki`, `b<k>`, `h<p>,<q>`,
/// `chi(<m>)` for `χ(O(m h))`, `h^<a>c<k>` and `h^<a>` for `∫ h^a c_k`,
/// `p1h^<a>` for `∫ p1 h^a`, and Chern or Pontrjagin number labels such as
/// `c1^2c2` or `p1^2`.
pub fn catalog_quantity(record: &ManifoldRecord, key: &str) -> Result<Rational> {
    let m = &record.model;
    let missing = || Error::MissingData(format!("{} has no value for `{key}`", record.name()));
    match key {
        "deg" => return m.degree().ok_or_else(missing),
        "index" => return m.index.map(int).ok_or_else(missing),
        "euler" => return m.euler_number(),
        "sigma" => {
            let d = m.hodge.as_ref().ok_or_else(missing)?;
            return signature_from_hodge(d).map(int);
        }
        "sigma_legacy" => {
            let d = m.hodge.as_ref().ok_or_else(missing)?;
            return Ok(int(signature_legacy(d)));
        }
        "fujiki" => {
            return m
                .fujiki
                .as_ref()
                .map(|f| f.constant.clone())
                .ok_or_else(missing)
        }
        _ => {}
    }
    if let Some(arg) = key.strip_prefix("chi(").and_then(|s| s.strip_suffix(')')) {
        let k: i64 = arg.parse().map_err(|_| missing())?;
        return hrr_chi(m, k);
    }
    if let Some(k) = key.strip_prefix('b').and_then(|s| s.parse::<usize>().ok()) {
        return record
            .betti_number(k)
            .map(|b| int(b as i64))
            .ok_or_else(missing);
    }
    if let Some((p, q)) = key.strip_prefix('h').and_then(|s| s.split_once(',')) {
        let (p, q): (usize, usize) = (
            p.parse().map_err(|_| missing())?,
            q.parse().map_err(|_| missing())?,
        );
        let d = m.hodge.as_ref().ok_or_else(missing)?;
        if p > d.n() || q > d.n() {
            return Err(missing());
        }
        return Ok(int(d.get(p, q) as i64));
    }
    if let Some(rest) = key.strip_prefix("p1h") {
        let a = parse_power(rest).ok_or_else(missing)?;
        let p = pontrjagin_classes(m)?;
        let h = m.line_generator().ok_or_else(missing)?;
        let ring = &m.ring;
        return m.integrate(&ring.mul(&p[0], &ring.pow(&h, a)));
    }
    if let Some(rest) = key.strip_prefix('h') {
        let (pow, ck) = match rest.find('c') {
            Some(i) => (&rest[..i], Some(&rest[i + 1..])),
            None => (rest, None),
        };
        let a = parse_power(pow).ok_or_else(missing)?;
        let k: usize = match ck {
            Some(s) => s.parse().map_err(|_| missing())?,
            None => 0,
        };
        let h = m.line_generator().ok_or_else(missing)?;
        let ring = &m.ring;
        return m.integrate(&ring.mul(&ring.pow(&h, a), &m.chern_class(k)));
    }
    let table = if key.starts_with('c') {
        chern_numbers(m)?
    } else if key.starts_with('p') {
        pontrjagin_numbers(m)?
    } else {
        return Err(missing());
    };
    table
        .rows()
        .into_iter()
        .find(|(label, _)| label == key)
        .map(|(_, v)| v)
        .ok_or_else(missing)
}

/// Chern-number label of an exponent vector over `c1, c2, ..`.
fn label_of(mono: &[u32]) -> Result<String> {
    let mut parts: Vec<u32> = mono
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i as u32 + 1, e as usize))
        .collect();
    parts.reverse();
    Ok(monomial_label('c', &Partition::new(parts)?))
}

/// `""` is 1, `"^3"` is 3.
fn parse_power(s: &str) -> Option<u32> {
    if s.is_empty() {
        Some(1)
    } else {
        s.strip_prefix('^')?.parse().ok()
    }
}

/// Re-evaluates a trace. Inputs are re-read from `record` when given; every
/// derived quantity is recomputed from inputs and earlier quantities.
/// Returns the list of disagreements.
pub fn replay(
    trace: &DeductionTrace,
    record: Option<&ManifoldRecord>,
) -> std::result::Result<usize, Vec<String>> {
    let mut env: BTreeMap<String, Rational> = BTreeMap::new();
    let mut problems = Vec::new();
    let mut checked = 0;
    for q in &trace.inputs {
        if let Some(r) = record {
            match catalog_quantity(r, &q.name) {
                Ok(v) if v == q.value => checked += 1,
                Ok(v) => problems.push(format!(
                    "input {}: trace has {} but the record gives {v}",
                    q.name, q.value
                )),
                Err(e) => problems.push(format!("input {}: {e}", q.name)),
            }
        }
        env.insert(q.name.clone(), q.value.clone());
    }
    for (i, step) in trace.steps.iter().enumerate() {
        for q in &step.values {
            if let Some(e) = &q.expr {
                match e.eval(&|name| env.get(name).cloned()) {
                    Ok(v) if v == q.value => checked += 1,
                    Ok(v) => problems.push(format!(
                        "step {} {}: recorded {} but {e} gives {v}",
                        i + 1,
                        q.name,
                        q.value
                    )),
                    Err(msg) => problems.push(format!("step {} {}: {msg}", i + 1, q.name)),
                }
            }
            if env.insert(q.name.clone(), q.value.clone()).is_some()
                && !trace.inputs.iter().any(|p| p.name == q.name)
            {
                problems.push(format!("step {} redefines {}", i + 1, q.name));
            }
        }
    }
    if problems.is_empty() {
        Ok(checked)
    } else {
        Err(problems)
    }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Hypothesis(what()))
    }
}
