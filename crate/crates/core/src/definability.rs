//! Term-definability over a logic's signature: clone closure of the
//! signature at a given arity, exact definability decisions with witness
//! terms, and brute-force enumeration of connectives under constraints.

use std::collections::HashMap;

use thiserror::Error;

use crate::engine::{check_consequence, check_validity, ConsequenceFlavor, EngineError};
use crate::kernel::{Assoc, Connective, Logic, TruthTable, TruthValue};
use crate::syntax::{Formula, Schema, Sequent};

/// An n-ary truth function reachable from the signature, with a
/// smallest-found witness term over the metavariables `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermFunction {
    pub arity: usize,
    pub table: TruthTable,
    pub witness: Schema,
}

/// One entry of the dense working representation: outputs indexed by the
/// row-major tuple order over the logic's value order.
type DenseTable = Vec<u8>;

fn pack(table: &DenseTable) -> u64 {
    table.iter().fold(0u64, |acc, v| (acc << 2) | u64::from(*v))
}

/// packed-key → member index, dense when the key space is small.
enum Index {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

impl Index {
    fn for_space(entries: usize) -> Index {
        let bits = 2 * entries;
        if bits <= 24 {
            Index::Dense(vec![u32::MAX; 1 << bits])
        } else {
            Index::Sparse(HashMap::new())
        }
    }

    fn get(&self, key: u64) -> Option<u32> {
        match self {
            Index::Dense(v) => {
                let slot = v[key as usize];
                (slot != u32::MAX).then_some(slot)
            }
            Index::Sparse(m) => m.get(&key).copied(),
        }
    }

    fn insert(&mut self, key: u64, value: u32) {
        match self {
            Index::Dense(v) => v[key as usize] = value,
            Index::Sparse(m) => {
                m.insert(key, value);
            }
        }
    }
}

struct DenseConnective {
    name: String,
    arity: usize,
    // Outputs indexed by value indices; unary uses the first dimension only.
    unary: [u8; 4],
    binary: [[u8; 4]; 4],
}

fn densify(logic: &Logic) -> Vec<DenseConnective> {
    let position: HashMap<TruthValue, u8> = logic
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, i as u8))
        .collect();
    logic
        .connectives()
        .iter()
        .map(|c| {
            let mut dense = DenseConnective {
                name: c.name().to_string(),
                arity: c.arity(),
                unary: [0; 4],
                binary: [[0; 4]; 4],
            };
            match c.table() {
                TruthTable::Unary(m) => {
                    for (k, v) in m {
                        dense.unary[position[k] as usize] = position[v];
                    }
                }
                TruthTable::Binary(m) => {
                    for ((a, b), v) in m {
                        dense.binary[position[a] as usize][position[b] as usize] = position[v];
                    }
                }
            }
            dense
        })
        .collect()
}

/// The projection tables for `arity` over `n_values` values, in argument
/// order, together with their metavariable witnesses.
fn projections(n_values: usize, arity: usize) -> Vec<(DenseTable, Schema)> {
    let entries = n_values.pow(arity as u32);
    (0..arity)
        .map(|arg| {
            let table: DenseTable = (0..entries)
                .map(|row| {
                    // Row-major: the first argument is most significant.
                    let shift = n_values.pow((arity - 1 - arg) as u32);
                    ((row / shift) % n_values) as u8
                })
                .collect();
            (table, Schema::metavar(&format!("x{}", arg + 1)))
        })
        .collect()
}

/// Compute the clone of the signature at the given arity: every truth
/// function obtainable by composing signature connectives over the
/// projections. Each member carries a smallest witness term; ties go to the
/// first discovery in the fixed enumeration order (size, then signature
/// order, then operand discovery order).
///
/// Termination: new functions are found by size; once no new function has
/// appeared in any size up to twice the largest size seen plus one, no
/// larger term can denote anything new, and the set is the full clone. Over
/// three values the binary clone is bounded by 3^9 = 19683 tables.
pub fn clone_closure(logic: &Logic, arity: usize) -> Result<Vec<TermFunction>, DefinabilityError> {
    if !(1..=2).contains(&arity) {
        return Err(DefinabilityError::UnsupportedArity(arity));
    }
    if logic.values().len() > 4 {
        return Err(DefinabilityError::TooManyValues(logic.values().len()));
    }
    let n_values = logic.values().len();
    let entries = n_values.pow(arity as u32);
    let connectives = densify(logic);

    let mut members: Vec<(DenseTable, Schema)> = Vec::new();
    let mut index = Index::for_space(entries);
    // by_size[s] lists the members whose minimal witness size is s.
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(), Vec::new()];

    for (table, witness) in projections(n_values, arity) {
        let key = pack(&table);
        if index.get(key).is_none() {
            index.insert(key, members.len() as u32);
            by_size[1].push(members.len() as u32);
            members.push((table, witness));
        }
    }

    let mut last_new = 1usize;
    let mut size = 1usize;
    while size < 2 * last_new + 2 {
        size += 1;
        let mut found_at_this_size: Vec<u32> = Vec::new();
        for conn in &connectives {
            match conn.arity {
                1 => {
                    for ix in &by_size[size - 1] {
                        let operand = members[*ix as usize].clone();
                        let table: DenseTable =
                            operand.0.iter().map(|v| conn.unary[*v as usize]).collect();
                        let key = pack(&table);
                        if index.get(key).is_none() {
                            let witness =
                                Schema::Apply(conn.name.clone(), vec![operand.1.clone()]);
                            index.insert(key, members.len() as u32);
                            found_at_this_size.push(members.len() as u32);
                            members.push((table, witness));
                        }
                    }
                }
                _ => {
                    for left_size in 1..size - 1 {
                        let right_size = size - 1 - left_size;
                        let pairs: Vec<(usize, usize)> = by_size[left_size]
                            .iter()
                            .flat_map(|l| {
                                by_size[right_size].iter().map(move |r| (*l as usize, *r as usize))
                            })
                            .collect();
                        for (left_ix, right_ix) in pairs {
                            let table: DenseTable = (0..entries)
                                .map(|k| {
                                    let a = members[left_ix].0[k] as usize;
                                    let b = members[right_ix].0[k] as usize;
                                    conn.binary[a][b]
                                })
                                .collect();
                            let key = pack(&table);
                            if index.get(key).is_none() {
                                let witness = Schema::Apply(
                                    conn.name.clone(),
                                    vec![members[left_ix].1.clone(), members[right_ix].1.clone()],
                                );
                                index.insert(key, members.len() as u32);
                                found_at_this_size.push(members.len() as u32);
                                members.push((table, witness));
                            }
                        }
                    }
                }
            }
        }
        if !found_at_this_size.is_empty() {
            last_new = size;
        }
        by_size.push(found_at_this_size);
    }

    let values = logic.values().to_vec();
    Ok(members
        .into_iter()
        .map(|(dense, witness)| TermFunction {
            arity,
            table: undensify(&values, arity, &dense),
            witness,
        })
        .collect())
}

fn undensify(values: &[TruthValue], arity: usize, dense: &DenseTable) -> TruthTable {
    let n = values.len();
    match arity {
        1 => {
            let outs: Vec<TruthValue> = dense.iter().map(|v| values[*v as usize]).collect();
            TruthTable::unary_over(values, &outs)
        }
        _ => {
            let rows: Vec<Vec<TruthValue>> = (0..n)
                .map(|a| (0..n).map(|b| values[dense[a * n + b] as usize]).collect())
                .collect();
            let rows: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
            TruthTable::binary_over(values, &rows)
        }
    }
}

/// Decide whether `target` is term-definable from the signature. The
/// decision is exact: membership of the target table in the clone of
/// matching arity. Returns the witnessing term function when it is.
pub fn is_definable(logic: &Logic, target: &TruthTable) -> Result<Option<TermFunction>, DefinabilityError> {
    if !target.is_closed_over(logic.values()) {
        return Err(DefinabilityError::TargetNotOverValues);
    }
    let closure = clone_closure(logic, target.arity())?;
    Ok(closure.into_iter().find(|tf| &tf.table == target))
}

/// The table a term denotes in `logic`, with argument order fixed by
/// `variables`. Every metavariable of the term must be listed.
pub fn term_table(logic: &Logic, term: &Schema, variables: &[&str]) -> Result<TruthTable, DefinabilityError> {
    for mv in term.metavariables() {
        if !variables.contains(&mv.as_str()) {
            return Err(DefinabilityError::UnlistedVariable(mv));
        }
    }
    if !(1..=2).contains(&variables.len()) {
        return Err(DefinabilityError::UnsupportedArity(variables.len()));
    }
    let formula = term.atomic_instance();
    let values = logic.values();
    let assign = |tuple: &[TruthValue]| {
        crate::kernel::Valuation::from_pairs(variables.iter().copied().zip(tuple.iter().copied()))
    };
    match variables.len() {
        1 => {
            let mut outs = Vec::new();
            for v in values {
                outs.push(crate::engine::evaluate(logic, &assign(&[*v]), &formula)?);
            }
            Ok(TruthTable::unary_over(values, &outs))
        }
        _ => {
            let mut rows: Vec<Vec<TruthValue>> = Vec::new();
            for a in values {
                let mut row = Vec::new();
                for b in values {
                    row.push(crate::engine::evaluate(logic, &assign(&[*a, *b]), &formula)?);
                }
                rows.push(row);
            }
            let rows: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
            Ok(TruthTable::binary_over(values, &rows))
        }
    }
}

/// Whether the member's witness term denotes exactly the member's table.
pub fn witness_is_sound(logic: &Logic, member: &TermFunction) -> Result<bool, DefinabilityError> {
    let vars: Vec<String> = (1..=member.arity).map(|i| format!("x{i}")).collect();
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    Ok(term_table(logic, &member.witness, &var_refs)? == member.table)
}

/// Whether `members` is closed under every signature connective: applying
/// any connective to any tuple of members lands back in the set. True of a
/// finished [`clone_closure`] result; this recomputes it independently of
/// the termination rule.
pub fn closure_is_complete(logic: &Logic, members: &[TermFunction]) -> bool {
    let Some(first) = members.first() else { return true };
    let n = logic.values().len();
    let entries = n.pow(first.arity as u32);
    let position: HashMap<TruthValue, u8> = logic
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, i as u8))
        .collect();
    let dense: Vec<DenseTable> = members
        .iter()
        .map(|m| m.table.entries().iter().map(|(_, out)| position[out]).collect())
        .collect();
    let seen: std::collections::HashSet<u64> = dense.iter().map(pack).collect();
    for conn in densify(logic) {
        match conn.arity {
            1 => {
                for f in &dense {
                    let h: DenseTable = f.iter().map(|v| conn.unary[*v as usize]).collect();
                    if !seen.contains(&pack(&h)) {
                        return false;
                    }
                }
            }
            _ => {
                for f in &dense {
                    for g in &dense {
                        let h: DenseTable =
                            (0..entries).map(|k| conn.binary[f[k] as usize][g[k] as usize]).collect();
                        if !seen.contains(&pack(&h)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// A checkable property of a candidate binary connective. Schemas may
/// mention the candidate under the reserved name [`CANDIDATE`].
#[derive(Clone, Debug)]
pub enum Constraint {
    /// `A, A c B ⊨ B` under truth preservation.
    DetachmentValid,
    /// Designated inputs always yield a designated output.
    DesignatedPreserving,
    /// Restricted to `{T, F}`, the table is the classical conditional.
    ClassicalOnTF,
    /// The schema is valid in the extended logic.
    SchemaValid(Schema),
    /// The sequent (premises, conclusion) holds under truth preservation.
    SequentValid(Vec<Schema>, Schema),
}

/// Name under which constraint schemas refer to the candidate connective.
pub const CANDIDATE: &str = "cand";

/// Brute-force every binary table over the logic's values, keep those
/// satisfying all constraints. Each candidate is grafted onto the signature
/// and the constraints run through the engine.
pub fn enumerate_connectives(
    logic: &Logic,
    constraints: &[Constraint],
) -> Result<Vec<TruthTable>, DefinabilityError> {
    let values = logic.values().to_vec();
    let n = values.len();
    let entries = n * n;
    if n > 4 {
        return Err(DefinabilityError::TooManyValues(n));
    }
    let mut survivors = Vec::new();
    let mut outputs = vec![0u8; entries];
    loop {
        let rows: Vec<Vec<TruthValue>> = (0..n)
            .map(|a| (0..n).map(|b| values[outputs[a * n + b] as usize]).collect())
            .collect();
        let rows_ref: Vec<&[TruthValue]> = rows.iter().map(Vec::as_slice).collect();
        let table = TruthTable::binary_over(&values, &rows_ref);
        if satisfies(logic, &table, constraints)? {
            survivors.push(table);
        }

        // Odometer over the output entries, last entry fastest.
        let mut pos = entries;
        loop {
            if pos == 0 {
                return Ok(survivors);
            }
            pos -= 1;
            outputs[pos] += 1;
            if (outputs[pos] as usize) < n {
                break;
            }
            outputs[pos] = 0;
        }
    }
}

fn satisfies(logic: &Logic, table: &TruthTable, constraints: &[Constraint]) -> Result<bool, DefinabilityError> {
    // Cheap table-level constraints first.
    for c in constraints {
        match c {
            Constraint::DesignatedPreserving => {
                for (args, out) in table.entries() {
                    if args.iter().all(|a| logic.is_designated(*a)) && !logic.is_designated(out) {
                        return Ok(false);
                    }
                }
            }
            Constraint::ClassicalOnTF => {
                use TruthValue::{F, T};
                let classical = [((T, T), T), ((T, F), F), ((F, T), T), ((F, F), T)];
                for ((a, b), out) in classical {
                    if table.get(&[a, b]) != Some(out) {
                        return Ok(false);
                    }
                }
            }
            _ => {}
        }
    }
    let needs_engine = constraints.iter().any(|c| {
        matches!(c, Constraint::DetachmentValid | Constraint::SchemaValid(_) | Constraint::SequentValid(..))
    });
    if !needs_engine {
        return Ok(true);
    }

    let candidate = Connective::binary(CANDIDATE, "?c", 1, Assoc::None, table.clone());
    let extended = logic
        .with_connective(candidate)
        .map_err(|e| DefinabilityError::Internal(e.to_string()))?;
    for c in constraints {
        match c {
            Constraint::DetachmentValid => {
                let a = Formula::atom("A");
                let b = Formula::atom("B");
                let seq = Sequent::new(
                    vec![a.clone(), Formula::binary(CANDIDATE, a, b.clone())],
                    b,
                );
                if !check_consequence(&extended, &seq, ConsequenceFlavor::TruthPreservation)?.is_valid() {
                    return Ok(false);
                }
            }
            Constraint::SchemaValid(schema) => {
                if !check_validity(&extended, &schema.atomic_instance())?.is_valid() {
                    return Ok(false);
                }
            }
            Constraint::SequentValid(premises, conclusion) => {
                let seq = Sequent::new(
                    premises.iter().map(Schema::atomic_instance).collect(),
                    conclusion.atomic_instance(),
                );
                if !check_consequence(&extended, &seq, ConsequenceFlavor::TruthPreservation)?.is_valid() {
                    return Ok(false);
                }
            }
            Constraint::DesignatedPreserving | Constraint::ClassicalOnTF => {}
        }
    }
    Ok(true)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DefinabilityError {
    #[error("clone closure supports arity 1 and 2, got {0}")]
    UnsupportedArity(usize),
    #[error("clone closure supports at most 4 values, got {0}")]
    TooManyValues(usize),
    #[error("the target table is not total over this logic's values")]
    TargetNotOverValues,
    #[error("term mentions metavariable `{0}` which is not in the variable list")]
    UnlistedVariable(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("internal: {0}")]
    Internal(String),
}
