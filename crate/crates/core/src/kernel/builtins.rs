//! Built-in logic fixtures.
//!
//! Tables are written row by row in the canonical value order of each logic
//! (`T, B, F`, or `T, N, F` for C0.2). Binary tables: rows are the first
//! argument, columns the second.

use super::{Assoc, Connective, Logic, TruthTable, TruthValue};
use TruthValue::{B, F, N, T};

const PREC_AND: u8 = 3;
const PREC_OR: u8 = 2;
const PREC_COND: u8 = 1;

fn unary(name: &str, symbol: &str, values: &[TruthValue], outs: &[TruthValue]) -> Connective {
    Connective::unary(name, symbol, TruthTable::unary_over(values, outs))
}

fn conditional(name: &str, symbol: &str, values: &[TruthValue], rows: &[&[TruthValue]]) -> Connective {
    Connective::binary(name, symbol, PREC_COND, Assoc::None, TruthTable::binary_over(values, rows))
}

/// The LP negation over `{T, B, F}`: the fixed point sits at `B`.
fn sim3() -> Connective {
    unary("sim", "~", &[T, B, F], &[F, B, T])
}

/// The closed-set (Sette) negation over `{T, B, F}`: `B` goes to `T`.
fn neg3() -> Connective {
    unary("neg", "-", &[T, B, F], &[F, T, T])
}

/// Lattice conjunction (minimum in the order `T > B > F`).
fn and_lattice() -> Connective {
    Connective::binary(
        "and",
        "&",
        PREC_AND,
        Assoc::Left,
        TruthTable::binary_over(
            &[T, B, F],
            &[
                &[T, B, F],
                &[B, B, F],
                &[F, F, F],
            ],
        ),
    )
}

/// Lattice disjunction (maximum in the order `T > B > F`).
fn or_lattice() -> Connective {
    Connective::binary(
        "or",
        "|",
        PREC_OR,
        Assoc::Left,
        TruthTable::binary_over(
            &[T, B, F],
            &[
                &[T, T, T],
                &[T, B, B],
                &[T, B, F],
            ],
        ),
    )
}

/// The E-conditional over `{T, B, F}`.
fn to_e() -> Connective {
    conditional(
        "to_e",
        ">",
        &[T, B, F],
        &[
            &[B, F, F],
            &[B, B, F],
            &[B, B, B],
        ],
    )
}

/// Biconditional derived as `(A > B) & (B > A)` from a logic's own
/// conjunction and conditional, materialized as a signature connective.
fn derived_iff(name: &str, symbol: &str, and: &Connective, cond: &Connective, values: &[TruthValue]) -> Connective {
    let mut rows: Vec<Vec<TruthValue>> = Vec::new();
    for a in values {
        let mut row = Vec::new();
        for b in values {
            let ab = cond.apply(&[*a, *b]).unwrap();
            let ba = cond.apply(&[*b, *a]).unwrap();
            row.push(and.apply(&[ab, ba]).unwrap());
        }
        rows.push(row);
    }
    let rows: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
    Connective::binary(name, symbol, PREC_COND, Assoc::None, TruthTable::binary_over(values, &rows))
}

/// Material conditional derived as `~A | B`, materialized for LP so the
/// classification machinery has a conditional role to resolve there.
fn derived_material(sim: &Connective, or: &Connective, values: &[TruthValue]) -> Connective {
    let mut rows: Vec<Vec<TruthValue>> = Vec::new();
    for a in values {
        let na = sim.apply(&[*a]).unwrap();
        let row: Vec<TruthValue> = values.iter().map(|b| or.apply(&[na, *b]).unwrap()).collect();
        rows.push(row);
    }
    let rows: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
    conditional("mat", ">", values, &rows)
}

/// P-family conjunction over `{T, B, F}`: `B` behaves like `T`.
fn and_p() -> Connective {
    Connective::binary(
        "and",
        "&",
        PREC_AND,
        Assoc::Left,
        TruthTable::binary_over(
            &[T, B, F],
            &[
                &[T, T, F],
                &[T, T, F],
                &[F, F, F],
            ],
        ),
    )
}

/// P-family disjunction over `{T, B, F}`.
fn or_p() -> Connective {
    Connective::binary(
        "or",
        "|",
        PREC_OR,
        Assoc::Left,
        TruthTable::binary_over(
            &[T, B, F],
            &[
                &[T, T, T],
                &[T, T, T],
                &[T, T, F],
            ],
        ),
    )
}

/// The P-conditional over `{T, B, F}`.
fn to_p() -> Connective {
    conditional(
        "to_p",
        ">",
        &[T, B, F],
        &[
            &[T, T, F],
            &[T, T, F],
            &[T, T, T],
        ],
    )
}

fn lp() -> Logic {
    let sim = sim3();
    let or = or_lattice();
    let mat = derived_material(&sim, &or, &[T, B, F]);
    Logic::new("LP", vec![T, B, F], vec![T, B], vec![sim, and_lattice(), or, mat]).unwrap()
}

fn m3v() -> Logic {
    let and = and_lattice();
    let cond = to_e();
    let iff = derived_iff("iff_e", "<>", &and, &cond, &[T, B, F]);
    Logic::new("M3V", vec![T, B, F], vec![T, B], vec![sim3(), and, or_lattice(), cond, iff]).unwrap()
}

fn csl3() -> Logic {
    Logic::new("CSL3", vec![T, B, F], vec![T, B], vec![neg3(), and_lattice(), or_lattice()]).unwrap()
}

fn ccsl3() -> Logic {
    let and = and_lattice();
    let cond = to_e();
    let iff = derived_iff("iff_e", "<>", &and, &cond, &[T, B, F]);
    Logic::new("cCSL3", vec![T, B, F], vec![T, B], vec![neg3(), and, or_lattice(), cond, iff]).unwrap()
}

/// Mortensen's C0.2 over `{T, N, F}` with `T` the only designated value.
fn c02() -> Logic {
    let vals = [T, N, F];
    let sim = unary("sim", "~", &vals, &[F, N, T]);
    let and = Connective::binary(
        "and",
        "&",
        PREC_AND,
        Assoc::Left,
        TruthTable::binary_over(
            &vals,
            &[
                &[T, T, F],
                &[T, T, F],
                &[F, F, F],
            ],
        ),
    );
    let or = Connective::binary(
        "or",
        "|",
        PREC_OR,
        Assoc::Left,
        TruthTable::binary_over(
            &vals,
            &[
                &[T, T, T],
                &[T, T, T],
                &[T, T, F],
            ],
        ),
    );
    let cond = conditional(
        "to_p",
        ">",
        &vals,
        &[
            &[T, T, F],
            &[T, T, F],
            &[T, T, T],
        ],
    );
    Logic::new("C0.2", vec![T, N, F], vec![T], vec![sim, and, or, cond]).unwrap()
}

fn p1() -> Logic {
    Logic::new("P1", vec![T, B, F], vec![T, B], vec![neg3(), and_p(), or_p(), to_p()]).unwrap()
}

fn p2() -> Logic {
    Logic::new("P2", vec![T, B, F], vec![T, B], vec![sim3(), and_p(), or_p(), to_p()]).unwrap()
}

fn cp2() -> Logic {
    let and = and_p();
    let cond = to_e();
    let iff = derived_iff("iff_e", "<>", &and, &cond, &[T, B, F]);
    Logic::new("cP2", vec![T, B, F], vec![T, B], vec![sim3(), and, or_p(), cond, iff]).unwrap()
}

/// Both standard paraconsistent negations plus the connexive conditionals
/// from the literature and the consistency connective, for stability and
/// definability experiments.
fn toolbox() -> Logic {
    let vals = [T, B, F];
    let to_w = conditional(
        "to_w",
        ">w",
        &vals,
        &[
            &[T, B, F],
            &[T, B, F],
            &[B, B, B],
        ],
    );
    let to_bl = conditional(
        "to_bl",
        ">bl",
        &vals,
        &[
            &[T, F, F],
            &[T, B, F],
            &[B, B, B],
        ],
    );
    let to_f = conditional(
        "to_f",
        ">f",
        &vals,
        &[
            &[B, B, F],
            &[B, B, F],
            &[B, B, B],
        ],
    );
    let circ = unary("circ", "o", &vals, &[T, F, T]);
    Logic::new(
        "toolbox",
        vec![T, B, F],
        vec![T, B],
        vec![sim3(), neg3(), to_w, to_bl, to_f, circ],
    )
    .unwrap()
}

/// All built-in logics, in a fixed order.
pub fn builtin_logics() -> Vec<Logic> {
    vec![lp(), m3v(), csl3(), ccsl3(), c02(), p1(), p2(), cp2(), toolbox()]
}

/// Look up a built-in logic by name, case-insensitively.
pub fn builtin_logic(name: &str) -> Option<Logic> {
    builtin_logics().into_iter().find(|l| l.name().eq_ignore_ascii_case(name))
}
