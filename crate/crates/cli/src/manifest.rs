//! The claims manifest: a data file of semantic claims about the built-in
//! logics, each executable by one library operation, with an executor that
//! reports per-claim pass/fail.
//!
//! Expected tables live in the manifest as data, independently of the
//! kernel fixtures, so a corrupted fixture entry shows up as a failing
//! claim rather than silently propagating.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use mvlab::definability::{
    clone_closure, closure_is_complete, is_definable, term_table, witness_is_sound,
};
use mvlab::engine::{
    check_consequence, check_deduction, check_validity, evaluate, valuations, ConsequenceFlavor,
};
use mvlab::kernel::{dunn_conditional, Logic, TruthTable, TruthValue};
use mvlab::properties::{
    centering_suite, check_stability, classify, enumerate_tspn, negated_conditional_asymmetry,
    second_theses, Thesis,
};
use mvlab::syntax::{parse, Formula};

use crate::config::TableConfig;
use crate::output::{parse_sequent, parse_valuation, schema_of_formula, verdict_line, Expectation};
use crate::registry::Registry;

pub const FORMAT_VERSION: u32 = 1;

/// The built-in manifest distributed with the binary.
pub const BUILTIN_MANIFEST: &str = include_str!("../manifests/builtin.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub format_version: u32,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// Human-readable description of what the claim pins down.
    pub locus: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// The fixture table of a connective equals this expected table.
    Table { logic: String, connective: String, expected: TableConfig },
    /// The nine membership-clause cases agree with the E-conditional table.
    DunnAgreement { logic: String, connective: String },
    /// Designation tracks containing 1, for every value of the logic.
    DesignationConvention { logic: String },
    Valid {
        logic: String,
        formula: String,
        expect: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        refuted_by: Option<String>,
    },
    Consequence {
        logic: String,
        sequent: String,
        #[serde(default = "flavor_truth")]
        flavor: String,
        expect: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<String>,
    },
    Classify {
        logic: String,
        negation: String,
        conditional: String,
        expect: ClassifyExpect,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        theses: BTreeMap<String, String>,
    },
    Tspn {
        values: Vec<String>,
        designated: Vec<String>,
        expect_count: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        expect_members: Vec<TspnMember>,
    },
    Stability {
        logic: String,
        conditional: String,
        expect_stable: bool,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        failures: Vec<StabilityFailure>,
    },
    Deduction {
        logic: String,
        premise: String,
        conclusion: String,
        conditional: String,
        expect_entailment: String,
        expect_conditional: String,
    },
    SecondTheses {
        logic: String,
        negation: String,
        conditional: String,
        expect_ast: String,
        expect_abp: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        refuted_by: Option<String>,
    },
    Centering {
        logic: String,
        negation: String,
        conditional: String,
        expect_cent1: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect_cent2: Option<String>,
        expect_forward: String,
        expect_backward: String,
        expect_ms: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ms_witness: Option<String>,
    },
    /// `(X > Y) > N(W > Z)` valid while `N(W > Z) > (X > Y)` is not.
    Asymmetry { logic: String, negation: String, conditional: String },
    Definable {
        logic: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        extend: Vec<String>,
        /// `logic:connective` or a bare connective name.
        target: String,
        expect_definable: bool,
    },
    /// A term over the listed variables denotes the expected table.
    TermDenotes {
        logic: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        extend: Vec<String>,
        term: String,
        variables: Vec<String>,
        expected: TableConfig,
    },
    /// The two logics carry identical tables for the listed connectives and
    /// agree on every formula built from them up to the given depth over
    /// two atoms (with identical tables, depth exhaustion is a cross-check;
    /// agreement then extends to all formulas of the fragment).
    FragmentAgreement { left: String, right: String, connectives: Vec<String>, depth: usize },
    CloneBound {
        logic: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        restrict: Vec<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        extend: Vec<String>,
        arity: usize,
        max_size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expect_size: Option<usize>,
        #[serde(default)]
        check_soundness: bool,
        #[serde(default)]
        check_completeness: bool,
    },
}

fn flavor_truth() -> String {
    "truth".to_string()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyExpect {
    pub connexive: bool,
    pub hyper_connexive: bool,
    pub nexive: bool,
    pub hyper_nexive: bool,
    pub contradictory: bool,
    pub ultra_abelardian: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TspnMember {
    pub name: String,
    pub table: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabilityFailure {
    pub negation: String,
    pub thesis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub locus: String,
    pub pass: bool,
    pub detail: String,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest> {
        let manifest: Manifest = serde_json::from_str(text).context("parsing claims manifest")?;
        if manifest.format_version != FORMAT_VERSION {
            bail!(
                "unsupported manifest format_version {} (this build reads version {})",
                manifest.format_version,
                FORMAT_VERSION
            );
        }
        if manifest.claims.is_empty() {
            bail!("the manifest contains no claims");
        }
        let mut seen = std::collections::BTreeSet::new();
        for claim in &manifest.claims {
            if !seen.insert(&claim.id) {
                bail!("duplicate claim id `{}`", claim.id);
            }
        }
        Ok(manifest)
    }

    pub fn builtin() -> Manifest {
        Manifest::parse(BUILTIN_MANIFEST).expect("builtin manifest is well-formed")
    }

    /// Execute every claim against the given registry.
    pub fn run(&self, registry: &Registry) -> Vec<ClaimResult> {
        self.claims
            .iter()
            .map(|claim| {
                let (pass, detail) = match run_check(&claim.check, registry) {
                    Ok(None) => (true, "ok".to_string()),
                    Ok(Some(failure)) => (false, failure),
                    Err(e) => (false, format!("error: {e:#}")),
                };
                ClaimResult { id: claim.id.clone(), locus: claim.locus.clone(), pass, detail }
            })
            .collect()
    }

    /// Only the fixture-table claims (used by the mutation smoke tests).
    pub fn table_claims(&self) -> Manifest {
        Manifest {
            format_version: self.format_version,
            claims: self
                .claims
                .iter()
                .filter(|c| matches!(c.check, Check::Table { .. }))
                .cloned()
                .collect(),
        }
    }
}

fn lookup<'r>(registry: &'r Registry, name: &str) -> Result<&'r Logic> {
    registry.get(name).ok_or_else(|| anyhow!("no logic named `{name}`"))
}

fn expected_table(logic: &Logic, spec: &TableConfig) -> Result<TruthTable> {
    let to_values = |names: &[String]| -> Result<Vec<TruthValue>> {
        names.iter().map(|n| TruthValue::from_str(n).map_err(|e| anyhow!("{e}"))).collect()
    };
    match spec {
        TableConfig::Unary(outs) => {
            let outs = to_values(outs)?;
            if outs.len() != logic.values().len() {
                bail!("expected table lists {} outputs, logic has {} values", outs.len(), logic.values().len());
            }
            Ok(TruthTable::unary_over(logic.values(), &outs))
        }
        TableConfig::Binary(rows) => {
            let rows: Vec<Vec<TruthValue>> = rows.iter().map(|r| to_values(r)).collect::<Result<_>>()?;
            if rows.len() != logic.values().len() || rows.iter().any(|r| r.len() != logic.values().len()) {
                bail!("expected binary table has the wrong shape");
            }
            let refs: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
            Ok(TruthTable::binary_over(logic.values(), &refs))
        }
    }
}

fn check_verdict(
    what: &str,
    verdict: &mvlab::engine::Verdict,
    expect: &str,
    witness: Option<&str>,
    logic: &Logic,
) -> Result<Option<String>> {
    let expectation = Expectation::parse(expect)?;
    if !expectation.matches(verdict) {
        return Ok(Some(format!(
            "{what}: expected {}, got {}",
            expectation.name(),
            verdict_line(verdict)
        )));
    }
    if let Some(expected_witness) = witness {
        let expected = parse_valuation(logic, &split_pairs(expected_witness))?;
        match verdict.witness() {
            Some(got) if *got == expected => {}
            got => {
                return Ok(Some(format!(
                    "{what}: expected witness `{expected_witness}`, got {}",
                    got.map(|v| v.to_string()).unwrap_or_else(|| "none".to_string())
                )));
            }
        }
    }
    Ok(None)
}

fn split_pairs(text: &str) -> Vec<String> {
    text.split_whitespace().map(str::to_string).collect()
}

/// Evaluate the formula under the given valuation and require a
/// non-designated value (a genuine countermodel, not necessarily the first).
fn check_refutation(logic: &Logic, formula: &Formula, valuation_text: &str) -> Result<Option<String>> {
    let valuation = parse_valuation(logic, &split_pairs(valuation_text))?;
    let value = evaluate(logic, &valuation, formula)?;
    if logic.is_designated(value) {
        return Ok(Some(format!(
            "valuation `{valuation_text}` does not refute (value {value} is designated)"
        )));
    }
    Ok(None)
}

/// Run one check. `Ok(None)` is a pass; `Ok(Some(detail))` a failure.
fn run_check(check: &Check, registry: &Registry) -> Result<Option<String>> {
    match check {
        Check::Table { logic, connective, expected } => {
            let logic = lookup(registry, logic)?;
            let conn = logic
                .connective(connective)
                .ok_or_else(|| anyhow!("no connective `{connective}` in {}", logic.name()))?;
            let expected = expected_table(logic, expected)?;
            if conn.table() != &expected {
                return Ok(Some(format!(
                    "fixture table of {}:{} differs from the expected table",
                    logic.name(),
                    connective
                )));
            }
            Ok(None)
        }
        Check::DunnAgreement { logic, connective } => {
            let logic = lookup(registry, logic)?;
            use TruthValue::{B, F, T};
            for a in [T, B, F] {
                for b in [T, B, F] {
                    let clauses = dunn_conditional(a, b).map_err(|e| anyhow!("{e}"))?;
                    let table = logic.lookup(connective, &[a, b]).map_err(|e| anyhow!("{e}"))?;
                    if clauses != table {
                        return Ok(Some(format!(
                            "at ({a}, {b}): clauses give {clauses}, table gives {table}"
                        )));
                    }
                }
            }
            Ok(None)
        }
        Check::DesignationConvention { logic } => {
            let logic = lookup(registry, logic)?;
            for v in logic.values() {
                if logic.is_designated(*v) != v.contains_one() {
                    return Ok(Some(format!("designation of {v} does not track containing 1")));
                }
            }
            Ok(None)
        }
        Check::Valid { logic, formula, expect, witness, refuted_by } => {
            let logic = lookup(registry, logic)?;
            let parsed = parse(logic, formula).map_err(|e| anyhow!("parsing `{formula}`: {e}"))?;
            let verdict = check_validity(logic, &parsed)?;
            if let Some(fail) = check_verdict(formula, &verdict, expect, witness.as_deref(), logic)? {
                return Ok(Some(fail));
            }
            if let Some(valuation_text) = refuted_by {
                if let Some(fail) = check_refutation(logic, &parsed, valuation_text)? {
                    return Ok(Some(fail));
                }
            }
            Ok(None)
        }
        Check::Consequence { logic, sequent, flavor, expect, witness } => {
            let logic = lookup(registry, logic)?;
            let parsed = parse_sequent(logic, sequent)?;
            let flavor = match flavor.as_str() {
                "truth" => ConsequenceFlavor::TruthPreservation,
                "exact-truth" => ConsequenceFlavor::ExactTruthPreservation,
                "non-falsity" => ConsequenceFlavor::NonFalsityPreservation,
                other => bail!("unknown flavor `{other}`"),
            };
            let verdict = check_consequence(logic, &parsed, flavor)?;
            check_verdict(sequent, &verdict, expect, witness.as_deref(), logic)
        }
        Check::Classify { logic, negation, conditional, expect, theses } => {
            let logic = lookup(registry, logic)?;
            let report = classify(logic, negation, conditional).map_err(|e| anyhow!("{e}"))?;
            let flags = [
                ("connexive", report.connexive, expect.connexive),
                ("hyper-connexive", report.hyper_connexive, expect.hyper_connexive),
                ("nexive", report.nexive, expect.nexive),
                ("hyper-nexive", report.hyper_nexive, expect.hyper_nexive),
                ("contradictory", report.is_contradictory(), expect.contradictory),
                ("ultra-Abelardian", report.ultra_abelardian, expect.ultra_abelardian),
            ];
            for (name, got, want) in flags {
                if got != want {
                    return Ok(Some(format!("{name}: expected {want}, got {got}")));
                }
            }
            for (thesis_name, expect) in theses {
                let thesis = Thesis::ALL
                    .into_iter()
                    .find(|t| t.name() == thesis_name)
                    .ok_or_else(|| anyhow!("unknown thesis `{thesis_name}`"))?;
                let verdict = report
                    .verdict(thesis)
                    .ok_or_else(|| anyhow!("thesis {thesis_name} not checkable in this signature"))?;
                if let Some(fail) = check_verdict(thesis_name, verdict, expect, None, logic)? {
                    return Ok(Some(fail));
                }
            }
            Ok(None)
        }
        Check::Tspn { values, designated, expect_count, expect_members } => {
            let to_values = |names: &[String]| -> Result<Vec<TruthValue>> {
                names.iter().map(|n| TruthValue::from_str(n).map_err(|e| anyhow!("{e}"))).collect()
            };
            let values = to_values(values)?;
            let designated = to_values(designated)?;
            let members = enumerate_tspn(&values, &designated).map_err(|e| anyhow!("{e}"))?;
            if members.len() != *expect_count {
                return Ok(Some(format!("expected {expect_count} members, got {}", members.len())));
            }
            for expected in expect_members {
                let outs = expected
                    .table
                    .iter()
                    .map(|n| TruthValue::from_str(n).map_err(|e| anyhow!("{e}")))
                    .collect::<Result<Vec<_>>>()?;
                let expected_table = TruthTable::unary_over(&values, &outs);
                match members.iter().find(|m| m.name() == expected.name) {
                    Some(member) if member.table() == &expected_table => {}
                    Some(_) => {
                        return Ok(Some(format!("member `{}` has an unexpected table", expected.name)));
                    }
                    None => return Ok(Some(format!("no member named `{}`", expected.name))),
                }
            }
            Ok(None)
        }
        Check::Stability { logic, conditional, expect_stable, failures } => {
            let logic = lookup(registry, logic)?;
            let report = check_stability(logic, conditional).map_err(|e| anyhow!("{e}"))?;
            if report.stable != *expect_stable {
                return Ok(Some(format!(
                    "expected stable={expect_stable}, got {} (entries: {})",
                    report.stable,
                    report.entries.len()
                )));
            }
            for failure in failures {
                let entry = report
                    .entries
                    .iter()
                    .find(|e| e.negation.name() == failure.negation)
                    .ok_or_else(|| anyhow!("no TSPN member named `{}`", failure.negation))?;
                let thesis = Thesis::ALL
                    .into_iter()
                    .find(|t| t.name() == failure.thesis)
                    .ok_or_else(|| anyhow!("unknown thesis `{}`", failure.thesis))?;
                let verdict = entry
                    .report
                    .verdict(thesis)
                    .ok_or_else(|| anyhow!("thesis {} not checkable", failure.thesis))?;
                let label = format!("{} under {}", failure.thesis, failure.negation);
                if let Some(fail) =
                    check_verdict(&label, verdict, "invalid", failure.witness.as_deref(), logic)?
                {
                    return Ok(Some(fail));
                }
            }
            Ok(None)
        }
        Check::Deduction { logic, premise, conclusion, conditional, expect_entailment, expect_conditional } => {
            let logic = lookup(registry, logic)?;
            let premise = parse(logic, premise).map_err(|e| anyhow!("{e}"))?;
            let conclusion = parse(logic, conclusion).map_err(|e| anyhow!("{e}"))?;
            let (entailment, object) = check_deduction(logic, &premise, &conclusion, conditional)?;
            if let Some(fail) = check_verdict("entailment", &entailment, expect_entailment, None, logic)? {
                return Ok(Some(fail));
            }
            check_verdict("object conditional", &object, expect_conditional, None, logic)
        }
        Check::SecondTheses { logic, negation, conditional, expect_ast, expect_abp, refuted_by } => {
            let logic = lookup(registry, logic)?;
            let (ast, abp) = second_theses(logic, negation, conditional).map_err(|e| anyhow!("{e}"))?;
            if let Some(fail) = check_verdict("AST", &ast, expect_ast, None, logic)? {
                return Ok(Some(fail));
            }
            if let Some(fail) = check_verdict("AbP", &abp, expect_abp, None, logic)? {
                return Ok(Some(fail));
            }
            if let Some(valuation_text) = refuted_by {
                let roles = mvlab::properties::Roles::resolve(logic, negation, conditional)
                    .map_err(|e| anyhow!("{e}"))?;
                for thesis in [Thesis::AST, Thesis::AbP] {
                    let formula = thesis
                        .schema(&roles)
                        .ok_or_else(|| anyhow!("no conjunction in signature"))?
                        .atomic_instance();
                    if let Some(fail) = check_refutation(logic, &formula, valuation_text)? {
                        return Ok(Some(format!("{thesis}: {fail}")));
                    }
                }
            }
            Ok(None)
        }
        Check::Centering {
            logic,
            negation,
            conditional,
            expect_cent1,
            expect_cent2,
            expect_forward,
            expect_backward,
            expect_ms,
            ms_witness,
        } => {
            let logic = lookup(registry, logic)?;
            let report = centering_suite(logic, negation, conditional).map_err(|e| anyhow!("{e}"))?;
            if let Some(fail) = check_verdict("Cent1", &report.cent1, expect_cent1, None, logic)? {
                return Ok(Some(fail));
            }
            if let Some(expect) = expect_cent2 {
                let cent2 = report.cent2.as_ref().ok_or_else(|| anyhow!("no biconditional in signature"))?;
                if let Some(fail) = check_verdict("Cent2", cent2, expect, None, logic)? {
                    return Ok(Some(fail));
                }
            }
            if let Some(fail) = check_verdict("(A>A) > N(A>A)", &report.cent2_forward, expect_forward, None, logic)? {
                return Ok(Some(fail));
            }
            if let Some(fail) = check_verdict("N(A>A) > (A>A)", &report.cent2_backward, expect_backward, None, logic)? {
                return Ok(Some(fail));
            }
            check_verdict("Meyer-Slaney", &report.meyer_slaney, expect_ms, ms_witness.as_deref(), logic)
        }
        Check::Asymmetry { logic, negation, conditional } => {
            let logic = lookup(registry, logic)?;
            let (toward, backward) =
                negated_conditional_asymmetry(logic, negation, conditional).map_err(|e| anyhow!("{e}"))?;
            if !toward.is_valid() {
                return Ok(Some(format!("(X>Y) > N(W>Z): expected valid, got {}", verdict_line(&toward))));
            }
            if backward.is_valid() {
                return Ok(Some("N(W>Z) > (X>Y): expected invalid, got valid".to_string()));
            }
            Ok(None)
        }
        Check::Definable { logic, extend, target, expect_definable } => {
            let host = registry.extended(logic, extend)?;
            let target_conn = registry.find_connective(target)?;
            let found = is_definable(&host, target_conn.table()).map_err(|e| anyhow!("{e}"))?;
            match (found, expect_definable) {
                (Some(member), true) => {
                    if &member.table != target_conn.table() {
                        return Ok(Some("found member does not match the target table".to_string()));
                    }
                    if !witness_is_sound(&host, &member).map_err(|e| anyhow!("{e}"))? {
                        return Ok(Some("witness does not reproduce the member table".to_string()));
                    }
                    Ok(None)
                }
                (None, false) => Ok(None),
                (Some(_), false) => Ok(Some("expected not definable, but a witness exists".to_string())),
                (None, true) => Ok(Some("expected definable, but no witness exists".to_string())),
            }
        }
        Check::TermDenotes { logic, extend, term, variables, expected } => {
            let host = registry.extended(logic, extend)?;
            let parsed = parse(&host, term).map_err(|e| anyhow!("parsing `{term}`: {e}"))?;
            let schema = schema_of_formula(&parsed);
            let vars: Vec<&str> = variables.iter().map(String::as_str).collect();
            let denoted = term_table(&host, &schema, &vars).map_err(|e| anyhow!("{e}"))?;
            let expected = expected_table(&host, expected)?;
            if denoted != expected {
                return Ok(Some(format!("`{term}` does not denote the expected table")));
            }
            Ok(None)
        }
        Check::FragmentAgreement { left, right, connectives, depth } => {
            let left = lookup(registry, left)?;
            let right = lookup(registry, right)?;
            for name in connectives {
                let lc = left
                    .connective(name)
                    .ok_or_else(|| anyhow!("no `{name}` in {}", left.name()))?;
                let rc = right
                    .connective(name)
                    .ok_or_else(|| anyhow!("no `{name}` in {}", right.name()))?;
                if lc.table() != rc.table() {
                    return Ok(Some(format!("tables of `{name}` differ")));
                }
            }
            if left.values() != right.values()
                || left.designated() != right.designated()
            {
                return Ok(Some("value spaces differ".to_string()));
            }
            // Exhaustive cross-check by evaluation up to the given depth.
            let atoms = [Formula::atom("A"), Formula::atom("B")];
            let mut layer: Vec<Formula> = atoms.to_vec();
            let mut all = layer.clone();
            for _ in 0..*depth {
                let mut next = Vec::new();
                for name in connectives {
                    let conn = left.connective(name).expect("checked above");
                    match conn.arity() {
                        1 => {
                            for f in &all {
                                next.push(Formula::unary(conn.name(), f.clone()));
                            }
                        }
                        _ => {
                            for f in &all {
                                for g in &all {
                                    next.push(Formula::binary(conn.name(), f.clone(), g.clone()));
                                }
                            }
                        }
                    }
                }
                layer = next;
                all.extend(layer.iter().cloned());
            }
            let atom_set = atoms.iter().flat_map(|a| a.atoms()).collect();
            for valuation in valuations(left, &atom_set) {
                for formula in &all {
                    let lv = evaluate(left, &valuation, formula)?;
                    let rv = evaluate(right, &valuation, formula)?;
                    if lv != rv {
                        return Ok(Some(format!(
                            "disagreement at {valuation} on a depth-{depth} formula"
                        )));
                    }
                }
            }
            Ok(None)
        }
        Check::CloneBound {
            logic,
            restrict,
            extend,
            arity,
            max_size,
            expect_size,
            check_soundness,
            check_completeness,
        } => {
            let mut host = registry.extended(logic, extend)?;
            if !restrict.is_empty() {
                let names: Vec<&str> = restrict.iter().map(String::as_str).collect();
                host = host.restricted_to(&names).map_err(|e| anyhow!("{e}"))?;
            }
            let closure = clone_closure(&host, *arity).map_err(|e| anyhow!("{e}"))?;
            if closure.len() > *max_size {
                return Ok(Some(format!("closure has {} members, over the {max_size} bound", closure.len())));
            }
            if let Some(expected) = expect_size {
                if closure.len() != *expected {
                    return Ok(Some(format!("closure has {} members, expected {expected}", closure.len())));
                }
            }
            if *check_soundness {
                for member in &closure {
                    if !witness_is_sound(&host, member).map_err(|e| anyhow!("{e}"))? {
                        return Ok(Some("a member's witness does not reproduce its table".to_string()));
                    }
                }
            }
            if *check_completeness && !closure_is_complete(&host, &closure) {
                return Ok(Some("closure is not closed under the signature".to_string()));
            }
            Ok(None)
        }
    }
}

/// (passed, failed) counts for a result list.
pub fn summary(results: &[ClaimResult]) -> (usize, usize) {
    let passed = results.iter().filter(|r| r.pass).count();
    (passed, results.len() - passed)
}
