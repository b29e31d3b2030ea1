//! Shared parsing and rendering helpers for command output.

use anyhow::{anyhow, bail, Result};

use mvlab::engine::Verdict;
use mvlab::kernel::{Logic, TruthValue, Valuation};
use mvlab::syntax::{parse, Formula, Schema, Sequent};

/// Parse a sequent written as `premise, premise => conclusion`. Premises
/// may be empty (`=> A`). Formula syntax has no commas or `=`, so the
/// splits are unambiguous.
pub fn parse_sequent(logic: &Logic, text: &str) -> Result<Sequent> {
    let (premise_part, conclusion_part) = text
        .split_once("=>")
        .ok_or_else(|| anyhow!("a sequent needs `=>` between premises and conclusion"))?;
    if conclusion_part.contains("=>") {
        bail!("a sequent has exactly one `=>`");
    }
    let mut premises = Vec::new();
    for chunk in premise_part.split(',') {
        if chunk.trim().is_empty() {
            continue;
        }
        premises.push(parse(logic, chunk).map_err(|e| anyhow!("in premise `{}`: {e}", chunk.trim()))?);
    }
    let conclusion =
        parse(logic, conclusion_part).map_err(|e| anyhow!("in conclusion `{}`: {e}", conclusion_part.trim()))?;
    Ok(Sequent::new(premises, conclusion))
}

/// Parse `atom=VALUE` pairs into a valuation over a logic's values.
pub fn parse_valuation(logic: &Logic, pairs: &[String]) -> Result<Valuation> {
    let mut valuation = Valuation::new();
    for pair in pairs {
        let (atom, value) = pair
            .split_once('=')
            .ok_or_else(|| anyhow!("assignment `{pair}` is not of the form atom=VALUE"))?;
        let value: TruthValue = value.trim().parse().map_err(|e| anyhow!("{e}"))?;
        if !logic.values().contains(&value) {
            bail!("value {value} is not admissible in {}", logic.name());
        }
        valuation.bind(atom.trim(), value);
    }
    Ok(valuation)
}

/// One-line rendering of a verdict with its witness valuation.
pub fn verdict_line(verdict: &Verdict) -> String {
    match verdict {
        Verdict::ValidJustTrue => "valid-just-true".to_string(),
        Verdict::ValidSometimesFalse { witness } => {
            format!("valid-sometimes-false (false at {witness})")
        }
        Verdict::Invalid { witness } => format!("invalid (countermodel: {witness})"),
    }
}

/// An expected verdict given on the command line or in a claims manifest.
/// `valid` accepts either valid status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Valid,
    ValidJustTrue,
    ValidSometimesFalse,
    Invalid,
}

impl Expectation {
    pub fn parse(text: &str) -> Result<Expectation> {
        Ok(match text {
            "valid" => Expectation::Valid,
            "valid-just-true" => Expectation::ValidJustTrue,
            "valid-sometimes-false" => Expectation::ValidSometimesFalse,
            "invalid" => Expectation::Invalid,
            other => bail!(
                "unknown verdict `{other}` (expected valid, valid-just-true, valid-sometimes-false, or invalid)"
            ),
        })
    }

    pub fn matches(self, verdict: &Verdict) -> bool {
        match self {
            Expectation::Valid => verdict.is_valid(),
            Expectation::ValidJustTrue => matches!(verdict, Verdict::ValidJustTrue),
            Expectation::ValidSometimesFalse => matches!(verdict, Verdict::ValidSometimesFalse { .. }),
            Expectation::Invalid => matches!(verdict, Verdict::Invalid { .. }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Expectation::Valid => "valid",
            Expectation::ValidJustTrue => "valid-just-true",
            Expectation::ValidSometimesFalse => "valid-sometimes-false",
            Expectation::Invalid => "invalid",
        }
    }
}

/// Reread a formula as a schema: every atom becomes a metavariable.
pub fn schema_of_formula(formula: &Formula) -> Schema {
    match formula {
        Formula::Atom(a) => Schema::Metavar(a.clone()),
        Formula::Apply(c, children) => {
            Schema::Apply(c.clone(), children.iter().map(schema_of_formula).collect())
        }
    }
}
