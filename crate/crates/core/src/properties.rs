//! Named thesis schemas, logic classification, enumeration of standard
//! paraconsistent negations, and connexive stability of a conditional.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::engine::{check_consequence, check_schema_validity, ConsequenceFlavor, EngineError, Verdict};
use crate::kernel::{Connective, Logic, TruthTable, TruthValue};
use crate::syntax::{Formula, Schema, Sequent};

/// The catalog of thesis schemas, parameterized by a negation role `N` and
/// a conditional role `>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Thesis {
    /// Aristotle's Thesis: `N(A > N A)`.
    AT,
    /// Variant of Aristotle's Thesis: `N(N A > A)`.
    ATv,
    /// Boethius' Thesis: `(A > B) > N(A > N B)`.
    BT,
    /// Variant of Boethius' Thesis: `(A > N B) > N(A > B)`.
    BTv,
    /// Converse of Boethius' Thesis: `N(A > N B) > (A > B)`.
    CBT,
    /// Converse of the Variant of Boethius' Thesis: `N(A > B) > (A > N B)`.
    CBTv,
    /// Francez's Thesis: `(N A > B) > N(A > B)`.
    FT,
    /// Variant of Francez's Thesis: `(A > B) > N(N A > B)`.
    FTv,
    /// First hyper-nexivity converse: `N(A > B) > (N A > B)`.
    ///
    /// The second one is catalogued under a "Converse of Boethius" label in
    /// some presentations even though it converts a Francez thesis; both are
    /// implemented exactly as displayed.
    CFT,
    /// Second hyper-nexivity converse: `N(N A > B) > (A > B)`.
    CFTv,
    /// Symmetry of implication: `(A > B) > (B > A)`. Connexive and nexive
    /// logics must refute it.
    NSym,
    /// Ultra-Abelardianism: `N(A > N B)`.
    UA,
    /// Aristotle's Second Thesis: `N((A > B) ∧ (N A > B))`.
    AST,
    /// Abelard's Principle: `N((A > B) ∧ (A > N B))`.
    AbP,
    /// First Centering principle: `N(A > A)`.
    Cent1,
    /// Second Centering principle: `N(A > A) ↔ (A > A)`.
    Cent2,
    /// Meyer–Slaney relativity schema: `((A > B) > B) > A`.
    MS,
}

impl Thesis {
    pub const ALL: [Thesis; 17] = [
        Thesis::AT,
        Thesis::ATv,
        Thesis::BT,
        Thesis::BTv,
        Thesis::CBT,
        Thesis::CBTv,
        Thesis::FT,
        Thesis::FTv,
        Thesis::CFT,
        Thesis::CFTv,
        Thesis::NSym,
        Thesis::UA,
        Thesis::AST,
        Thesis::AbP,
        Thesis::Cent1,
        Thesis::Cent2,
        Thesis::MS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Thesis::AT => "AT",
            Thesis::ATv => "ATv",
            Thesis::BT => "BT",
            Thesis::BTv => "BTv",
            Thesis::CBT => "CBT",
            Thesis::CBTv => "CBTv",
            Thesis::FT => "FT",
            Thesis::FTv => "FTv",
            Thesis::CFT => "CFT",
            Thesis::CFTv => "CFTv",
            Thesis::NSym => "NSym",
            Thesis::UA => "UA",
            Thesis::AST => "AST",
            Thesis::AbP => "AbP",
            Thesis::Cent1 => "Cent1",
            Thesis::Cent2 => "Cent2",
            Thesis::MS => "MS",
        }
    }

    /// Build the schema with the given roles. `AST`/`AbP` need a
    /// conjunction and `Cent2` a biconditional; without them there is no
    /// schema to build.
    pub fn schema(self, roles: &Roles) -> Option<Schema> {
        let a = || Schema::metavar("A");
        let b = || Schema::metavar("B");
        let n = |s: Schema| Schema::unary(&roles.negation, s);
        let c = |l: Schema, r: Schema| Schema::binary(&roles.conditional, l, r);
        Some(match self {
            Thesis::AT => n(c(a(), n(a()))),
            Thesis::ATv => n(c(n(a()), a())),
            Thesis::BT => c(c(a(), b()), n(c(a(), n(b())))),
            Thesis::BTv => c(c(a(), n(b())), n(c(a(), b()))),
            Thesis::CBT => c(n(c(a(), n(b()))), c(a(), b())),
            Thesis::CBTv => c(n(c(a(), b())), c(a(), n(b()))),
            Thesis::FT => c(c(n(a()), b()), n(c(a(), b()))),
            Thesis::FTv => c(c(a(), b()), n(c(n(a()), b()))),
            Thesis::CFT => c(n(c(a(), b())), c(n(a()), b())),
            Thesis::CFTv => c(n(c(n(a()), b())), c(a(), b())),
            Thesis::NSym => c(c(a(), b()), c(b(), a())),
            Thesis::UA => n(c(a(), n(b()))),
            Thesis::AST => {
                let and = roles.conjunction.as_ref()?;
                n(Schema::binary(and, c(a(), b()), c(n(a()), b())))
            }
            Thesis::AbP => {
                let and = roles.conjunction.as_ref()?;
                n(Schema::binary(and, c(a(), b()), c(a(), n(b()))))
            }
            Thesis::Cent1 => n(c(a(), a())),
            Thesis::Cent2 => {
                let iff = roles.biconditional.as_ref()?;
                Schema::binary(iff, n(c(a(), a())), c(a(), a()))
            }
            Thesis::MS => c(c(c(a(), b()), b()), a()),
        })
    }
}

impl fmt::Display for Thesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Resolved connective roles for schema instantiation. Conjunction and
/// biconditional are optional; theses needing them are skipped when absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Roles {
    pub negation: String,
    pub conditional: String,
    pub conjunction: Option<String>,
    pub biconditional: Option<String>,
}

impl Roles {
    /// Resolve a negation and conditional in `logic`, picking up the
    /// logic's conjunction (`and`) and biconditional (`iff_e`) when present.
    pub fn resolve(logic: &Logic, negation: &str, conditional: &str) -> Result<Roles, PropertiesError> {
        let neg = logic
            .connective(negation)
            .ok_or_else(|| PropertiesError::UnknownRole(negation.to_string()))?;
        if neg.arity() != 1 {
            return Err(PropertiesError::RoleArity { name: neg.name().to_string(), expected: 1 });
        }
        let cond = logic
            .connective(conditional)
            .ok_or_else(|| PropertiesError::UnknownRole(conditional.to_string()))?;
        if cond.arity() != 2 {
            return Err(PropertiesError::RoleArity { name: cond.name().to_string(), expected: 2 });
        }
        let binary_named = |n: &str| {
            logic.connective(n).filter(|c| c.arity() == 2).map(|c| c.name().to_string())
        };
        Ok(Roles {
            negation: neg.name().to_string(),
            conditional: cond.name().to_string(),
            conjunction: binary_named("and"),
            biconditional: binary_named("iff_e"),
        })
    }
}

/// A pair of formulas that are both valid, witnessing negation
/// inconsistency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContradictionWitness {
    pub formula: Formula,
    pub negation: Formula,
}

/// Per-thesis verdicts plus the derived classification flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub logic: String,
    pub roles: Roles,
    /// Verdict per catalog thesis; `None` when a required role (conjunction
    /// or biconditional) is missing from the signature.
    pub theses: BTreeMap<Thesis, Option<Verdict>>,
    pub connexive: bool,
    pub hyper_connexive: bool,
    pub nexive: bool,
    pub hyper_nexive: bool,
    pub contradictory: Option<ContradictionWitness>,
    pub ultra_abelardian: bool,
}

impl ClassificationReport {
    pub fn verdict(&self, thesis: Thesis) -> Option<&Verdict> {
        self.theses.get(&thesis).and_then(|v| v.as_ref())
    }

    pub fn is_contradictory(&self) -> bool {
        self.contradictory.is_some()
    }

    fn valid(&self, thesis: Thesis) -> bool {
        self.verdict(thesis).map(Verdict::is_valid).unwrap_or(false)
    }

    fn invalid(&self, thesis: Thesis) -> bool {
        self.verdict(thesis).map(|v| !v.is_valid()).unwrap_or(false)
    }
}

/// Instantiate every catalog schema with fresh atoms, check validity, and
/// derive the classification flags.
pub fn classify(logic: &Logic, negation: &str, conditional: &str) -> Result<ClassificationReport, PropertiesError> {
    let roles = Roles::resolve(logic, negation, conditional)?;
    let mut theses = BTreeMap::new();
    for thesis in Thesis::ALL {
        let verdict = match thesis.schema(&roles) {
            Some(schema) => Some(check_schema_validity(logic, &schema)?),
            None => None,
        };
        theses.insert(thesis, verdict);
    }

    let mut report = ClassificationReport {
        logic: logic.name().to_string(),
        roles: roles.clone(),
        theses,
        connexive: false,
        hyper_connexive: false,
        nexive: false,
        hyper_nexive: false,
        contradictory: None,
        ultra_abelardian: false,
    };
    report.connexive = report.valid(Thesis::AT)
        && report.valid(Thesis::ATv)
        && report.valid(Thesis::BT)
        && report.valid(Thesis::BTv)
        && report.invalid(Thesis::NSym);
    report.hyper_connexive =
        report.connexive && (report.valid(Thesis::CBT) || report.valid(Thesis::CBTv));
    report.nexive = report.valid(Thesis::AT)
        && report.valid(Thesis::ATv)
        && report.valid(Thesis::FT)
        && report.valid(Thesis::FTv)
        && report.invalid(Thesis::NSym);
    report.hyper_nexive =
        report.nexive && (report.valid(Thesis::CFT) || report.valid(Thesis::CFTv));
    report.ultra_abelardian = report.valid(Thesis::UA);
    report.contradictory = find_contradiction(logic, &roles)?;
    Ok(report)
}

/// Search the fixed witness list, then the catalog, for a formula valid
/// together with its negation.
fn find_contradiction(logic: &Logic, roles: &Roles) -> Result<Option<ContradictionWitness>, PropertiesError> {
    let a = Formula::atom("A");
    let reflexive = Formula::binary(&roles.conditional, a.clone(), a.clone());
    let mut candidates = vec![reflexive];
    if let Some(and) = &roles.conjunction {
        // (A ∧ N A) > A
        let contradiction = Formula::binary(and, a.clone(), Formula::unary(&roles.negation, a.clone()));
        candidates.push(Formula::binary(&roles.conditional, contradiction, a.clone()));
    }
    for thesis in Thesis::ALL {
        if let Some(schema) = thesis.schema(roles) {
            candidates.push(schema.atomic_instance());
        }
    }
    for candidate in candidates {
        let negated = Formula::unary(&roles.negation, candidate.clone());
        if crate::engine::check_validity(logic, &candidate)?.is_valid()
            && crate::engine::check_validity(logic, &negated)?.is_valid()
        {
            return Ok(Some(ContradictionWitness { formula: candidate, negation: negated }));
        }
    }
    Ok(None)
}

/// Enumerate the type of standard paraconsistent negations (TSPN) over a
/// value set: unary tables that are classical on `T` and `F` and fail
/// explosion, i.e. `{A, N A} ⊭ B`.
///
/// Members are named after the built-in negation they coincide with (`sim`
/// or `neg`) when they do, and `n1`, `n2`, … otherwise.
pub fn enumerate_tspn(values: &[TruthValue], designated: &[TruthValue]) -> Result<Vec<Connective>, PropertiesError> {
    if !values.contains(&TruthValue::T) || !values.contains(&TruthValue::F) {
        return Err(PropertiesError::MissingClassicalValues);
    }
    let middles: Vec<TruthValue> = values
        .iter()
        .copied()
        .filter(|v| *v != TruthValue::T && *v != TruthValue::F)
        .collect();

    let mut result = Vec::new();
    let mut images = vec![0usize; middles.len()];
    loop {
        let mut outputs: BTreeMap<TruthValue, TruthValue> = BTreeMap::new();
        outputs.insert(TruthValue::T, TruthValue::F);
        outputs.insert(TruthValue::F, TruthValue::T);
        for (m, ix) in middles.iter().zip(&images) {
            outputs.insert(*m, values[*ix]);
        }
        let ordered: Vec<TruthValue> = values.iter().map(|v| outputs[v]).collect();
        let table = TruthTable::unary_over(values, &ordered);
        let candidate = Connective::unary("n", "n?", table);
        if fails_explosion(values, designated, &candidate)? {
            result.push(candidate);
        }

        // Advance the image tuple; done when it wraps around.
        let mut pos = middles.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            images[pos] += 1;
            if images[pos] < values.len() {
                break;
            }
            images[pos] = 0;
        }
        if middles.is_empty() || images.iter().all(|i| *i == 0) {
            break;
        }
    }

    let named = result
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let (name, symbol) = canonical_negation_name(values, c.table(), i);
            Connective::unary(&name, &symbol, c.table().clone())
        })
        .collect();
    Ok(named)
}

fn canonical_negation_name(values: &[TruthValue], table: &TruthTable, index: usize) -> (String, String) {
    if values.len() == 3 && values.contains(&TruthValue::B) {
        let at_b = table.get(&[TruthValue::B]);
        if at_b == Some(TruthValue::B) {
            return ("sim".to_string(), "~".to_string());
        }
        if at_b == Some(TruthValue::T) {
            return ("neg".to_string(), "-".to_string());
        }
    }
    (format!("n{}", index + 1), format!("-{}", index + 1))
}

/// `{A, N A} ⊨ B` fails, checked through the consequence engine on a
/// two-atom sequent in a minimal logic carrying just the candidate.
fn fails_explosion(
    values: &[TruthValue],
    designated: &[TruthValue],
    candidate: &Connective,
) -> Result<bool, PropertiesError> {
    let probe = Logic::new("tspn-probe", values.to_vec(), designated.to_vec(), vec![candidate.clone()])
        .map_err(|e| PropertiesError::Internal(e.to_string()))?;
    let a = Formula::atom("A");
    let sequent = Sequent::new(
        vec![a.clone(), Formula::Apply(candidate.name().to_string(), vec![a])],
        Formula::atom("B"),
    );
    let verdict = check_consequence(&probe, &sequent, ConsequenceFlavor::TruthPreservation)?;
    Ok(!verdict.is_valid())
}

/// Classification of one conditional under one TSPN member.
#[derive(Clone, Debug)]
pub struct StabilityEntry {
    pub negation: Connective,
    pub report: ClassificationReport,
}

impl StabilityEntry {
    /// The core connexive pattern: AT, ATv, BT, BTv valid and NSym invalid.
    pub fn core_connexive(&self) -> bool {
        self.report.connexive
    }

    /// The thesis that breaks first under this negation, if any.
    pub fn first_failure(&self) -> Option<(Thesis, &Verdict)> {
        for thesis in [Thesis::AT, Thesis::ATv, Thesis::BT, Thesis::BTv] {
            if let Some(v) = self.report.verdict(thesis) {
                if !v.is_valid() {
                    return Some((thesis, v));
                }
            }
        }
        if let Some(v) = self.report.verdict(Thesis::NSym) {
            if v.is_valid() {
                return Some((Thesis::NSym, v));
            }
        }
        None
    }
}

/// Stability of a conditional across every TSPN member of the logic's
/// value space.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub logic: String,
    pub conditional: String,
    pub entries: Vec<StabilityEntry>,
    /// Connexive under every TSPN member.
    pub stable: bool,
}

/// For each standard paraconsistent negation over the logic's values and
/// designated set, classify the named conditional with it. The conditional
/// is connexively stable when the core connexive pattern holds under every
/// member.
pub fn check_stability(logic: &Logic, conditional: &str) -> Result<StabilityReport, PropertiesError> {
    let cond = logic
        .connective(conditional)
        .ok_or_else(|| PropertiesError::UnknownRole(conditional.to_string()))?;
    if cond.arity() != 2 {
        return Err(PropertiesError::RoleArity { name: cond.name().to_string(), expected: 2 });
    }
    let designated: Vec<TruthValue> = logic.designated().iter().copied().collect();
    let members = enumerate_tspn(logic.values(), &designated)?;

    let mut entries = Vec::new();
    for member in members {
        // Reuse an existing connective with the same table; otherwise graft
        // the member onto the signature under a free name and symbol.
        let (host, neg_name) = match logic.connectives().iter().find(|c| c.table() == member.table()) {
            Some(existing) => (logic.clone(), existing.name().to_string()),
            None => {
                let grafted = unclashed(logic, &member);
                let name = grafted.name().to_string();
                let host = logic
                    .with_connective(grafted)
                    .map_err(|e| PropertiesError::Internal(e.to_string()))?;
                (host, name)
            }
        };
        let report = classify(&host, &neg_name, cond.name())?;
        let negation = host.connective(&neg_name).expect("grafted or existing").clone();
        entries.push(StabilityEntry { negation, report });
    }
    let stable = !entries.is_empty() && entries.iter().all(StabilityEntry::core_connexive);
    Ok(StabilityReport {
        logic: logic.name().to_string(),
        conditional: cond.name().to_string(),
        entries,
        stable,
    })
}

fn unclashed(logic: &Logic, member: &Connective) -> Connective {
    let mut name = member.name().to_string();
    let mut symbol = member.symbol().to_string();
    while logic.connective(&name).is_some() {
        name.push('_');
    }
    while logic.connectives().iter().any(|c| c.symbol() == symbol) {
        symbol.push('\'');
    }
    Connective::unary(&name, &symbol, member.table().clone())
}

/// Verdicts for Aristotle's Second Thesis and Abelard's Principle.
pub fn second_theses(logic: &Logic, negation: &str, conditional: &str) -> Result<(Verdict, Verdict), PropertiesError> {
    let roles = Roles::resolve(logic, negation, conditional)?;
    let ast = Thesis::AST.schema(&roles).ok_or(PropertiesError::MissingConjunction)?;
    let abp = Thesis::AbP.schema(&roles).ok_or(PropertiesError::MissingConjunction)?;
    Ok((check_schema_validity(logic, &ast)?, check_schema_validity(logic, &abp)?))
}

/// The Centering principles and the Meyer–Slaney schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenteringReport {
    /// `N(A > A)`.
    pub cent1: Verdict,
    /// `N(A > A) ↔ (A > A)`, when a biconditional is available.
    pub cent2: Option<Verdict>,
    /// `(A > A) > N(A > A)`.
    pub cent2_forward: Verdict,
    /// `N(A > A) > (A > A)`.
    pub cent2_backward: Verdict,
    /// `((A > B) > B) > A`.
    pub meyer_slaney: Verdict,
}

/// Check the Centering principles; both directions of the second one are
/// always reported so logics where the biconditional splits are visible.
pub fn centering_suite(logic: &Logic, negation: &str, conditional: &str) -> Result<CenteringReport, PropertiesError> {
    let roles = Roles::resolve(logic, negation, conditional)?;
    let a = || Schema::metavar("A");
    let n = |s: Schema| Schema::unary(&roles.negation, s);
    let c = |l: Schema, r: Schema| Schema::binary(&roles.conditional, l, r);

    let cent1 = Thesis::Cent1.schema(&roles).expect("needs only N and >");
    let cent2 = Thesis::Cent2.schema(&roles);
    let forward = c(c(a(), a()), n(c(a(), a())));
    let backward = c(n(c(a(), a())), c(a(), a()));
    let ms = Thesis::MS.schema(&roles).expect("needs only >");

    Ok(CenteringReport {
        cent1: check_schema_validity(logic, &cent1)?,
        cent2: match cent2 {
            Some(s) => Some(check_schema_validity(logic, &s)?),
            None => None,
        },
        cent2_forward: check_schema_validity(logic, &forward)?,
        cent2_backward: check_schema_validity(logic, &backward)?,
        meyer_slaney: check_schema_validity(logic, &ms)?,
    })
}

/// The asymmetry behind the failure of the Deduction Property, generalized
/// to four distinct atoms: `(X > Y) > N(W > Z)` against
/// `N(W > Z) > (X > Y)`.
pub fn negated_conditional_asymmetry(
    logic: &Logic,
    negation: &str,
    conditional: &str,
) -> Result<(Verdict, Verdict), PropertiesError> {
    let roles = Roles::resolve(logic, negation, conditional)?;
    let cond = |l: Formula, r: Formula| Formula::binary(&roles.conditional, l, r);
    let xy = cond(Formula::atom("X"), Formula::atom("Y"));
    let nwz = Formula::unary(&roles.negation, cond(Formula::atom("W"), Formula::atom("Z")));
    let toward = crate::engine::check_validity(logic, &cond(xy.clone(), nwz.clone()))?;
    let backward = crate::engine::check_validity(logic, &cond(nwz, xy))?;
    Ok((toward, backward))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PropertiesError {
    #[error("no connective named `{0}` in the signature")]
    UnknownRole(String),
    #[error("role `{name}` must have arity {expected}")]
    RoleArity { name: String, expected: usize },
    #[error("the value set must contain T and F")]
    MissingClassicalValues,
    #[error("this check needs a conjunction in the signature")]
    MissingConjunction,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("internal: {0}")]
    Internal(String),
}
