//! Property tests for the syntax layer: canonical printing round-trips
//! through the parser, and schema validity is invariant under instantiation.

use proptest::prelude::*;

use mvlab::engine::{check_schema_validity, check_validity};
use mvlab::kernel::{builtin_logic, builtin_logics, Logic};
use mvlab::syntax::{instantiate, parse, print, Formula, Schema};

/// Random formulas over a logic's signature with atoms from a fixed pool.
fn formula_strategy(logic: &Logic) -> impl Strategy<Value = Formula> {
    let unary: Vec<String> = logic
        .connectives()
        .iter()
        .filter(|c| c.arity() == 1)
        .map(|c| c.name().to_string())
        .collect();
    let binary: Vec<String> = logic
        .connectives()
        .iter()
        .filter(|c| c.arity() == 2)
        .map(|c| c.name().to_string())
        .collect();
    let atom = prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(Formula::atom);
    atom.prop_recursive(5, 64, 4, move |inner| {
        let unary = unary.clone();
        let binary = binary.clone();
        let unary_node = (0..unary.len().max(1), inner.clone()).prop_map(move |(i, f)| {
            if unary.is_empty() {
                f
            } else {
                Formula::unary(&unary[i], f)
            }
        });
        let binary_node =
            (0..binary.len().max(1), inner.clone(), inner.clone()).prop_map(move |(i, l, r)| {
                if binary.is_empty() {
                    l
                } else {
                    Formula::binary(&binary[i], l, r)
                }
            });
        prop_oneof![unary_node, binary_node]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_parse_round_trip_m3v(f in formula_strategy(&builtin_logic("M3V").unwrap())) {
        let logic = builtin_logic("M3V").unwrap();
        let text = print(&logic, &f);
        prop_assert_eq!(parse(&logic, &text).unwrap(), f);
    }

    #[test]
    fn print_parse_round_trip_toolbox(f in formula_strategy(&builtin_logic("toolbox").unwrap())) {
        let logic = builtin_logic("toolbox").unwrap();
        let text = print(&logic, &f);
        prop_assert_eq!(parse(&logic, &text).unwrap(), f);
    }

    #[test]
    fn print_parse_round_trip_c02(f in formula_strategy(&builtin_logic("C0.2").unwrap())) {
        let logic = builtin_logic("C0.2").unwrap();
        let text = print(&logic, &f);
        prop_assert_eq!(parse(&logic, &text).unwrap(), f);
    }
}

/// Schemas over metavariables A, B using a logic's signature; reuses the
/// formula generator and renames the atom pool.
fn schema_strategy(logic: &Logic) -> impl Strategy<Value = Schema> {
    formula_strategy(logic).prop_map(|f| to_schema(&f))
}

fn to_schema(f: &Formula) -> Schema {
    match f {
        Formula::Atom(a) => {
            let mv = match a.as_str() {
                "p" => "A",
                "q" => "B",
                _ => "C",
            };
            Schema::metavar(mv)
        }
        Formula::Apply(c, children) => {
            Schema::Apply(c.clone(), children.iter().map(to_schema).collect())
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Substitution invariance: if the atomic instance of a schema is valid,
    /// every instance is valid; if invalid, the atomic instance itself is a
    /// counterexample, so equivalence holds.
    #[test]
    fn schema_validity_transfers_to_instances(
        schema in schema_strategy(&builtin_logic("M3V").unwrap()),
        subs in proptest::collection::vec(formula_strategy(&builtin_logic("M3V").unwrap()), 3),
    ) {
        let logic = builtin_logic("M3V").unwrap();
        let schema_verdict = check_schema_validity(&logic, &schema).unwrap();
        let mapping = [
            ("A".to_string(), subs[0].clone()),
            ("B".to_string(), subs[1].clone()),
            ("C".to_string(), subs[2].clone()),
        ]
        .into_iter()
        .collect();
        let instance = instantiate(&schema, &mapping).unwrap();
        let instance_verdict = check_validity(&logic, &instance).unwrap();
        if schema_verdict.is_valid() {
            prop_assert!(
                instance_verdict.is_valid(),
                "valid schema with refuted instance: {:?}",
                instance
            );
        }
    }

    /// Determinism: re-running a check yields the identical verdict,
    /// witness included.
    #[test]
    fn verdicts_are_deterministic(f in formula_strategy(&builtin_logic("cP2").unwrap())) {
        let logic = builtin_logic("cP2").unwrap();
        let first = check_validity(&logic, &f).unwrap();
        let second = check_validity(&logic, &f).unwrap();
        prop_assert_eq!(first, second);
    }
}

#[test]
fn round_trip_smoke_for_every_builtin() {
    // One deterministic composite per logic, built from its own signature.
    for logic in builtin_logics() {
        let mut formula = Formula::atom("p");
        for conn in logic.connectives() {
            formula = match conn.arity() {
                1 => Formula::unary(conn.name(), formula),
                _ => Formula::binary(conn.name(), formula, Formula::atom("q")),
            };
        }
        let text = print(&logic, &formula);
        assert_eq!(parse(&logic, &text).unwrap(), formula, "{}: {text}", logic.name());
    }
}
