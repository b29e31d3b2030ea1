//! Exhaustive-valuation evaluation, validity, and consequence checking.
//!
//! Atom counts in this domain are tiny (≤ 4), so every check enumerates all
//! `|values|^|atoms|` valuations outright. Enumeration is lexicographic over
//! the alphabetically sorted atoms with digits in the logic's value order,
//! and the reported witness is always the first refuting valuation in that
//! order, so identical inputs yield identical witnesses.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::kernel::{Logic, TruthValue, Valuation};
use crate::syntax::{Formula, Schema, Sequent};

/// Outcome of a validity or consequence check.
///
/// Validity is designation under every valuation; valid formulas are
/// further split into *just true* (value exactly `T` everywhere) and
/// *sometimes false* (designated everywhere but containing 0 under some
/// valuation). The split is this tool's refinement; reports label it as
/// such.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    ValidJustTrue,
    /// Designated everywhere; the witness is the first valuation under
    /// which the value contains 0.
    ValidSometimesFalse { witness: Valuation },
    /// The witness is the first refuting valuation.
    Invalid { witness: Valuation },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        !matches!(self, Verdict::Invalid { .. })
    }

    pub fn is_just_true(&self) -> bool {
        matches!(self, Verdict::ValidJustTrue)
    }

    pub fn witness(&self) -> Option<&Valuation> {
        match self {
            Verdict::ValidJustTrue => None,
            Verdict::ValidSometimesFalse { witness } | Verdict::Invalid { witness } => Some(witness),
        }
    }

    /// Short status name, stable across output formats.
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::ValidJustTrue => "valid-just-true",
            Verdict::ValidSometimesFalse { .. } => "valid-sometimes-false",
            Verdict::Invalid { .. } => "invalid",
        }
    }
}

/// What consequence preserves from premises to conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsequenceFlavor {
    /// Designated premises force a designated conclusion.
    TruthPreservation,
    /// Premises all exactly `T` force a `T` conclusion.
    ExactTruthPreservation,
    /// Premises all excluding 0 force a conclusion excluding 0.
    NonFalsityPreservation,
}

impl ConsequenceFlavor {
    fn holds(self, logic: &Logic, v: TruthValue) -> bool {
        match self {
            ConsequenceFlavor::TruthPreservation => logic.is_designated(v),
            ConsequenceFlavor::ExactTruthPreservation => v == TruthValue::T,
            ConsequenceFlavor::NonFalsityPreservation => !v.contains_zero(),
        }
    }
}

/// Homomorphic table evaluation of `formula` under `valuation`.
pub fn evaluate(logic: &Logic, valuation: &Valuation, formula: &Formula) -> Result<TruthValue, EngineError> {
    match formula {
        Formula::Atom(a) => valuation.get(a).ok_or_else(|| EngineError::UnboundAtom(a.clone())),
        Formula::Apply(c, children) => {
            let conn = logic
                .connective(c)
                .ok_or_else(|| EngineError::UnknownConnective(c.clone()))?;
            if conn.arity() != children.len() {
                return Err(EngineError::ArityMismatch {
                    connective: c.clone(),
                    expected: conn.arity(),
                    got: children.len(),
                });
            }
            let args = children
                .iter()
                .map(|ch| evaluate(logic, valuation, ch))
                .collect::<Result<Vec<_>, _>>()?;
            conn.apply(&args).ok_or_else(|| EngineError::NonAdmissibleValue(c.clone()))
        }
    }
}

/// Iterator over all valuations of `atoms`, lexicographic in the logic's
/// value order with the alphabetically first atom most significant.
///
/// The valuation space must fit in `usize`; the checking entry points guard
/// that with [`EngineError::TooManyAtoms`] first.
pub fn valuations<'a>(logic: &'a Logic, atoms: &BTreeSet<String>) -> impl Iterator<Item = Valuation> + 'a {
    let atoms: Vec<String> = atoms.iter().cloned().collect();
    let values = logic.values().to_vec();
    let total: usize = values.len().checked_pow(atoms.len() as u32).expect("valuation space fits in usize");
    (0..total).map(move |mut index| {
        let mut valuation = Valuation::new();
        for atom in atoms.iter().rev() {
            valuation.bind(atom, values[index % values.len()]);
            index /= values.len();
        }
        valuation
    })
}

fn guard_atom_count(logic: &Logic, atoms: &BTreeSet<String>) -> Result<(), EngineError> {
    if logic.values().len().checked_pow(atoms.len() as u32).is_none() {
        return Err(EngineError::TooManyAtoms(atoms.len()));
    }
    Ok(())
}

/// Classify `formula` by enumerating every valuation of its atoms.
pub fn check_validity(logic: &Logic, formula: &Formula) -> Result<Verdict, EngineError> {
    let atoms = formula.atoms();
    guard_atom_count(logic, &atoms)?;
    let mut falsity_witness: Option<Valuation> = None;
    for valuation in valuations(logic, &atoms) {
        let value = evaluate(logic, &valuation, formula)?;
        if !logic.is_designated(value) {
            let verdict = Verdict::Invalid { witness: valuation };
            debug_assert!(refutes_validity(logic, formula, &verdict));
            return Ok(verdict);
        }
        if value.contains_zero() && falsity_witness.is_none() {
            falsity_witness = Some(valuation);
        }
    }
    Ok(match falsity_witness {
        Some(witness) => Verdict::ValidSometimesFalse { witness },
        None => Verdict::ValidJustTrue,
    })
}

/// Validity of a schema via its atomic instance (one fresh atom per
/// metavariable), which is equivalent in any truth-functional logic.
pub fn check_schema_validity(logic: &Logic, schema: &Schema) -> Result<Verdict, EngineError> {
    check_validity(logic, &schema.atomic_instance())
}

/// Check `sequent` under the chosen consequence flavor. Valid sequents get
/// status `valid-just-true`; the just-true/sometimes-false refinement only
/// applies to formulas.
pub fn check_consequence(
    logic: &Logic,
    sequent: &Sequent,
    flavor: ConsequenceFlavor,
) -> Result<Verdict, EngineError> {
    let atoms = sequent.atoms();
    guard_atom_count(logic, &atoms)?;
    for valuation in valuations(logic, &atoms) {
        let mut premises_hold = true;
        for p in &sequent.premises {
            if !flavor.holds(logic, evaluate(logic, &valuation, p)?) {
                premises_hold = false;
                break;
            }
        }
        if premises_hold && !flavor.holds(logic, evaluate(logic, &valuation, &sequent.conclusion)?) {
            let verdict = Verdict::Invalid { witness: valuation };
            debug_assert!(refutes_consequence(logic, sequent, flavor, &verdict));
            return Ok(verdict);
        }
    }
    Ok(Verdict::ValidJustTrue)
}

/// The two sides of the Deduction Property for one conditional: whether
/// `premise ⊨ conclusion` holds, and whether `premise > conclusion` is
/// valid. Logics lacking the property show up as `(valid, invalid)` pairs.
pub fn check_deduction(
    logic: &Logic,
    premise: &Formula,
    conclusion: &Formula,
    conditional: &str,
) -> Result<(Verdict, Verdict), EngineError> {
    let conn = logic
        .connective(conditional)
        .ok_or_else(|| EngineError::UnknownConnective(conditional.to_string()))?;
    if conn.arity() != 2 {
        return Err(EngineError::ArityMismatch {
            connective: conditional.to_string(),
            expected: 2,
            got: conn.arity(),
        });
    }
    let sequent = Sequent::new(vec![premise.clone()], conclusion.clone());
    let entailment = check_consequence(logic, &sequent, ConsequenceFlavor::TruthPreservation)?;
    let object = Formula::Apply(conn.name().to_string(), vec![premise.clone(), conclusion.clone()]);
    let validity = check_validity(logic, &object)?;
    Ok((entailment, validity))
}

fn refutes_validity(logic: &Logic, formula: &Formula, verdict: &Verdict) -> bool {
    match verdict {
        Verdict::Invalid { witness } => evaluate(logic, witness, formula)
            .map(|v| !logic.is_designated(v))
            .unwrap_or(false),
        _ => true,
    }
}

fn refutes_consequence(
    logic: &Logic,
    sequent: &Sequent,
    flavor: ConsequenceFlavor,
    verdict: &Verdict,
) -> bool {
    match verdict {
        Verdict::Invalid { witness } => {
            let premises = sequent
                .premises
                .iter()
                .all(|p| evaluate(logic, witness, p).map(|v| flavor.holds(logic, v)).unwrap_or(false));
            let conclusion = evaluate(logic, witness, &sequent.conclusion)
                .map(|v| flavor.holds(logic, v))
                .unwrap_or(true);
            premises && !conclusion
        }
        _ => true,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("atom `{0}` has no assigned value")]
    UnboundAtom(String),
    #[error("unknown connective `{0}`")]
    UnknownConnective(String),
    #[error("connective `{connective}` expects {expected} argument(s), got {got}")]
    ArityMismatch { connective: String, expected: usize, got: usize },
    #[error("arguments to `{0}` fell outside the admissible values")]
    NonAdmissibleValue(String),
    #[error("formula has {0} atoms; the valuation space does not fit in memory")]
    TooManyAtoms(usize),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{builtin_logic, TruthValue::*};
    use crate::syntax::parse;

    fn val(pairs: &[(&str, TruthValue)]) -> Valuation {
        Valuation::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn evaluate_aristotle_in_m3v() {
        // Oracle: table lookup chain. A=T: ~T=F, T>F=F, ~F=T. A=B: ~B=B,
        // B>B=B, ~B=B.
        let m3v = builtin_logic("M3V").unwrap();
        let f = parse(&m3v, "~(A > ~A)").unwrap();
        assert_eq!(evaluate(&m3v, &val(&[("A", T)]), &f), Ok(T));
        assert_eq!(evaluate(&m3v, &val(&[("A", B)]), &f), Ok(B));
    }

    #[test]
    fn evaluate_aristotle_in_ccsl3() {
        // Oracle: -F=T, F>T=B, -B=T.
        let ccsl3 = builtin_logic("cCSL3").unwrap();
        let f = parse(&ccsl3, "-(A > -A)").unwrap();
        assert_eq!(evaluate(&ccsl3, &val(&[("A", F)]), &f), Ok(T));
    }

    #[test]
    fn evaluate_errors() {
        let m3v = builtin_logic("M3V").unwrap();
        let f = parse(&m3v, "A & B").unwrap();
        assert_eq!(
            evaluate(&m3v, &val(&[("A", T)]), &f),
            Err(EngineError::UnboundAtom("B".into()))
        );
        let foreign = Formula::unary("mystery", Formula::atom("A"));
        assert_eq!(
            evaluate(&m3v, &val(&[("A", T)]), &foreign),
            Err(EngineError::UnknownConnective("mystery".into()))
        );
        let bad_arity = Formula::Apply("sim".into(), vec![Formula::atom("A"), Formula::atom("A")]);
        assert_eq!(
            evaluate(&m3v, &val(&[("A", T)]), &bad_arity),
            Err(EngineError::ArityMismatch { connective: "sim".into(), expected: 1, got: 2 })
        );
    }

    #[test]
    fn valuation_enumeration_order() {
        let m3v = builtin_logic("M3V").unwrap();
        let atoms: BTreeSet<String> = ["A".to_string(), "B".to_string()].into();
        let order: Vec<(TruthValue, TruthValue)> = valuations(&m3v, &atoms)
            .map(|v| (v.get("A").unwrap(), v.get("B").unwrap()))
            .collect();
        assert_eq!(order.len(), 9);
        assert_eq!(order[0], (T, T));
        assert_eq!(order[1], (T, B));
        assert_eq!(order[2], (T, F));
        assert_eq!(order[3], (B, T));
        assert_eq!(order[8], (F, F));
    }

    #[test]
    fn validity_three_way() {
        let m3v = builtin_logic("M3V").unwrap();
        // Negated conditionals are valid but also false somewhere.
        let f = parse(&m3v, "~(A > B)").unwrap();
        let verdict = check_validity(&m3v, &f).unwrap();
        assert_eq!(verdict, Verdict::ValidSometimesFalse { witness: val(&[("A", T), ("B", T)]) });

        let ccsl3 = builtin_logic("cCSL3").unwrap();
        let f = parse(&ccsl3, "-(A > B)").unwrap();
        assert_eq!(check_validity(&ccsl3, &f), Ok(Verdict::ValidJustTrue));

        let f = parse(&m3v, "((A > B) > B) > A").unwrap();
        let verdict = check_validity(&m3v, &f).unwrap();
        assert_eq!(verdict, Verdict::Invalid { witness: val(&[("A", F), ("B", T)]) });
    }

    #[test]
    fn consequence_flavors_and_detachment() {
        let m3v = builtin_logic("M3V").unwrap();
        let seq = Sequent::new(
            vec![parse(&m3v, "A").unwrap(), parse(&m3v, "A > B").unwrap()],
            parse(&m3v, "B").unwrap(),
        );
        assert_eq!(
            check_consequence(&m3v, &seq, ConsequenceFlavor::TruthPreservation),
            Ok(Verdict::ValidJustTrue)
        );

        let csl3 = builtin_logic("CSL3").unwrap();
        let seq = Sequent::new(
            vec![parse(&csl3, "A").unwrap(), parse(&csl3, "-A | B").unwrap()],
            parse(&csl3, "B").unwrap(),
        );
        let verdict = check_consequence(&csl3, &seq, ConsequenceFlavor::TruthPreservation).unwrap();
        assert_eq!(verdict, Verdict::Invalid { witness: val(&[("A", B), ("B", F)]) });

        let seq = Sequent::new(
            vec![parse(&csl3, "A").unwrap(), parse(&csl3, "-A | B").unwrap()],
            parse(&csl3, "B | (A & -A)").unwrap(),
        );
        assert_eq!(
            check_consequence(&csl3, &seq, ConsequenceFlavor::TruthPreservation),
            Ok(Verdict::ValidJustTrue)
        );
    }

    #[test]
    fn exact_truth_and_non_falsity_flavors() {
        let m3v = builtin_logic("M3V").unwrap();
        // A ⊨ A holds under every flavor.
        let seq = Sequent::new(vec![parse(&m3v, "A").unwrap()], parse(&m3v, "A").unwrap());
        for flavor in [
            ConsequenceFlavor::TruthPreservation,
            ConsequenceFlavor::ExactTruthPreservation,
            ConsequenceFlavor::NonFalsityPreservation,
        ] {
            assert_eq!(check_consequence(&m3v, &seq, flavor), Ok(Verdict::ValidJustTrue));
        }
        // A ⊨ A & A holds; A ⊨ A > A splits the flavors: the conditional
        // always contains 0, so exact truth and non-falsity both fail even
        // though designation is preserved.
        let seq = Sequent::new(vec![parse(&m3v, "A").unwrap()], parse(&m3v, "A > A").unwrap());
        assert_eq!(
            check_consequence(&m3v, &seq, ConsequenceFlavor::TruthPreservation),
            Ok(Verdict::ValidJustTrue)
        );
        assert_eq!(
            check_consequence(&m3v, &seq, ConsequenceFlavor::ExactTruthPreservation),
            Ok(Verdict::Invalid { witness: val(&[("A", T)]) })
        );
        assert_eq!(
            check_consequence(&m3v, &seq, ConsequenceFlavor::NonFalsityPreservation),
            Ok(Verdict::Invalid { witness: val(&[("A", T)]) })
        );
    }

    #[test]
    fn deduction_property_failure_in_ccsl3() {
        let ccsl3 = builtin_logic("cCSL3").unwrap();
        let premise = parse(&ccsl3, "-(A > A)").unwrap();
        let conclusion = parse(&ccsl3, "A > A").unwrap();
        let (entailment, validity) = check_deduction(&ccsl3, &premise, &conclusion, "to_e").unwrap();
        assert!(entailment.is_valid());
        assert_eq!(validity, Verdict::Invalid { witness: val(&[("A", T)]) });

        let m3v = builtin_logic("M3V").unwrap();
        let a = parse(&m3v, "A").unwrap();
        let (entailment, validity) = check_deduction(&m3v, &a, &a, "to_e").unwrap();
        assert!(entailment.is_valid() && validity.is_valid());

        let premise = parse(&ccsl3, "A").unwrap();
        let conclusion = parse(&ccsl3, "--A").unwrap();
        let (entailment, validity) = check_deduction(&ccsl3, &premise, &conclusion, "to_e").unwrap();
        assert_eq!(entailment, Verdict::Invalid { witness: val(&[("A", B)]) });
        assert_eq!(validity, Verdict::Invalid { witness: val(&[("A", B)]) });
    }

    #[test]
    fn empty_premises_match_validity() {
        // ∅ ⊨ f under truth preservation agrees with validity for both a
        // valid and an invalid formula.
        let m3v = builtin_logic("M3V").unwrap();
        for text in ["~(A > ~A)", "A > B", "A"] {
            let f = parse(&m3v, text).unwrap();
            let seq = Sequent::new(vec![], f.clone());
            let as_consequence = check_consequence(&m3v, &seq, ConsequenceFlavor::TruthPreservation).unwrap();
            let as_validity = check_validity(&m3v, &f).unwrap();
            assert_eq!(as_consequence.is_valid(), as_validity.is_valid(), "{text}");
        }
    }
}
