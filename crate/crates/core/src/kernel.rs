//! Truth values, truth-functional connectives, and logic matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

mod builtins;

pub use builtins::{builtin_logic, builtin_logics};

/// A truth value in subset semantics: which of the classical values 1 and 0
/// the formula receives. Exactly four exist.
///
/// The declaration order `T, B, N, F` is the canonical value order used for
/// table serialization and valuation enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue {
    /// `{1}` — just true.
    T,
    /// `{1, 0}` — both true and false.
    B,
    /// `{}` — neither true nor false.
    N,
    /// `{0}` — just false.
    F,
}

impl TruthValue {
    pub const ALL: [TruthValue; 4] = [TruthValue::T, TruthValue::B, TruthValue::N, TruthValue::F];

    /// Whether 1 is a member of this value.
    pub fn contains_one(self) -> bool {
        matches!(self, TruthValue::T | TruthValue::B)
    }

    /// Whether 0 is a member of this value.
    pub fn contains_zero(self) -> bool {
        matches!(self, TruthValue::B | TruthValue::F)
    }

    /// The value with the given membership pair (contains-1, contains-0).
    pub fn from_membership(contains_one: bool, contains_zero: bool) -> TruthValue {
        match (contains_one, contains_zero) {
            (true, false) => TruthValue::T,
            (true, true) => TruthValue::B,
            (false, false) => TruthValue::N,
            (false, true) => TruthValue::F,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TruthValue::T => "T",
            TruthValue::B => "B",
            TruthValue::N => "N",
            TruthValue::F => "F",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TruthValue {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(TruthValue::T),
            "B" => Ok(TruthValue::B),
            "N" => Ok(TruthValue::N),
            "F" => Ok(TruthValue::F),
            other => Err(KernelError::UnknownValueName(other.to_string())),
        }
    }
}

/// Fixity and, for infix connectives, binding strength of a parse symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixity {
    /// Unary prefix; binds tighter than any infix operator.
    Prefix,
    /// Binary infix at the given precedence (higher binds tighter).
    Infix { precedence: u8, assoc: Assoc },
}

/// Whether chains of same-precedence infix operators are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Assoc {
    /// `A & B & C` parses as `(A & B) & C`.
    Left,
    /// Chaining requires explicit parentheses (conditionals).
    None,
}

/// A total truth function over some value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruthTable {
    Unary(BTreeMap<TruthValue, TruthValue>),
    Binary(BTreeMap<(TruthValue, TruthValue), TruthValue>),
}

impl TruthTable {
    /// Unary table given as outputs in the order of `values`.
    pub fn unary_over(values: &[TruthValue], outputs: &[TruthValue]) -> TruthTable {
        assert_eq!(values.len(), outputs.len(), "one output per value");
        TruthTable::Unary(values.iter().copied().zip(outputs.iter().copied()).collect())
    }

    /// Binary table given as rows (first argument) of outputs (second
    /// argument), both in the order of `values`.
    pub fn binary_over(values: &[TruthValue], rows: &[&[TruthValue]]) -> TruthTable {
        assert_eq!(values.len(), rows.len(), "one row per value");
        let mut map = BTreeMap::new();
        for (a, row) in values.iter().zip(rows) {
            assert_eq!(values.len(), row.len(), "one entry per value");
            for (b, out) in values.iter().zip(row.iter()) {
                map.insert((*a, *b), *out);
            }
        }
        TruthTable::Binary(map)
    }

    pub fn arity(&self) -> usize {
        match self {
            TruthTable::Unary(_) => 1,
            TruthTable::Binary(_) => 2,
        }
    }

    pub fn get(&self, args: &[TruthValue]) -> Option<TruthValue> {
        match (self, args) {
            (TruthTable::Unary(m), [a]) => m.get(a).copied(),
            (TruthTable::Binary(m), [a, b]) => m.get(&(*a, *b)).copied(),
            _ => None,
        }
    }

    /// All (input tuple, output) entries, in key order.
    pub fn entries(&self) -> Vec<(Vec<TruthValue>, TruthValue)> {
        match self {
            TruthTable::Unary(m) => m.iter().map(|(k, v)| (vec![*k], *v)).collect(),
            TruthTable::Binary(m) => m.iter().map(|((a, b), v)| (vec![*a, *b], *v)).collect(),
        }
    }

    /// Total over `values` with outputs inside `values`.
    pub fn is_closed_over(&self, values: &[TruthValue]) -> bool {
        let inside = |v: &TruthValue| values.contains(v);
        match self {
            TruthTable::Unary(m) => {
                values.iter().all(|a| m.get(a).is_some_and(&inside))
                    && m.keys().all(inside)
            }
            TruthTable::Binary(m) => {
                values.iter().all(|a| {
                    values.iter().all(|b| m.get(&(*a, *b)).is_some_and(&inside))
                }) && m.keys().all(|(a, b)| inside(a) && inside(b))
            }
        }
    }
}

/// A named, fixed-arity truth function with a parse symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connective {
    name: String,
    symbol: String,
    fixity: Fixity,
    table: TruthTable,
}

impl Connective {
    pub fn unary(name: &str, symbol: &str, table: TruthTable) -> Connective {
        assert_eq!(table.arity(), 1);
        Connective { name: name.to_string(), symbol: symbol.to_string(), fixity: Fixity::Prefix, table }
    }

    pub fn binary(name: &str, symbol: &str, precedence: u8, assoc: Assoc, table: TruthTable) -> Connective {
        assert_eq!(table.arity(), 2);
        Connective {
            name: name.to_string(),
            symbol: symbol.to_string(),
            fixity: Fixity::Infix { precedence, assoc },
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn arity(&self) -> usize {
        self.table.arity()
    }

    pub fn fixity(&self) -> Fixity {
        self.fixity
    }

    pub fn table(&self) -> &TruthTable {
        &self.table
    }

    /// Table lookup with arity and admissibility already vetted by the
    /// owning logic.
    pub fn apply(&self, args: &[TruthValue]) -> Option<TruthValue> {
        self.table.get(args)
    }
}

/// A logical matrix: admissible values, designated values, and a signature
/// of connectives whose tables are closed over the values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Logic {
    name: String,
    values: Vec<TruthValue>,
    designated: BTreeSet<TruthValue>,
    connectives: Vec<Connective>,
}

impl Logic {
    pub fn new(
        name: &str,
        values: Vec<TruthValue>,
        designated: Vec<TruthValue>,
        connectives: Vec<Connective>,
    ) -> Result<Logic, KernelError> {
        if values.is_empty() {
            return Err(KernelError::EmptyValueSet);
        }
        let mut seen = BTreeSet::new();
        for v in &values {
            if !seen.insert(*v) {
                return Err(KernelError::DuplicateValue(*v));
            }
        }
        let designated: BTreeSet<TruthValue> = designated.into_iter().collect();
        for d in &designated {
            if !values.contains(d) {
                return Err(KernelError::DesignatedNotAdmissible(*d));
            }
        }
        let mut names = BTreeSet::new();
        let mut symbols = BTreeSet::new();
        for c in &connectives {
            if c.name.is_empty() || c.symbol.is_empty() {
                return Err(KernelError::EmptyConnectiveName);
            }
            if !names.insert(c.name.clone()) {
                return Err(KernelError::DuplicateConnective(c.name.clone()));
            }
            if !symbols.insert(c.symbol.clone()) {
                return Err(KernelError::DuplicateSymbol(c.symbol.clone()));
            }
            if !c.table.is_closed_over(&values) {
                return Err(KernelError::TableNotClosed(c.name.clone()));
            }
        }
        Ok(Logic { name: name.to_string(), values, designated, connectives })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Admissible values in their declared (canonical) order.
    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn designated(&self) -> &BTreeSet<TruthValue> {
        &self.designated
    }

    pub fn is_designated(&self, v: TruthValue) -> bool {
        self.designated.contains(&v)
    }

    pub fn connectives(&self) -> &[Connective] {
        &self.connectives
    }

    /// Resolve a connective by name, falling back to its parse symbol.
    pub fn connective(&self, name_or_symbol: &str) -> Option<&Connective> {
        self.connectives
            .iter()
            .find(|c| c.name == name_or_symbol)
            .or_else(|| self.connectives.iter().find(|c| c.symbol == name_or_symbol))
    }

    /// Table lookup: checks the connective exists, the arity matches, and
    /// every argument is admissible.
    pub fn lookup(&self, connective: &str, args: &[TruthValue]) -> Result<TruthValue, KernelError> {
        let conn = self
            .connective(connective)
            .ok_or_else(|| KernelError::UnknownConnective(connective.to_string()))?;
        if conn.arity() != args.len() {
            return Err(KernelError::ArityMismatch {
                connective: conn.name.clone(),
                expected: conn.arity(),
                got: args.len(),
            });
        }
        for a in args {
            if !self.values.contains(a) {
                return Err(KernelError::NonAdmissibleValue(*a));
            }
        }
        // Totality over admissible values is a construction invariant.
        Ok(conn.apply(args).expect("table is total over admissible values"))
    }

    /// A copy of this logic with one more connective in the signature.
    pub fn with_connective(&self, connective: Connective) -> Result<Logic, KernelError> {
        let mut connectives = self.connectives.clone();
        connectives.push(connective);
        Logic::new(
            &self.name,
            self.values.clone(),
            self.designated.iter().copied().collect(),
            connectives,
        )
    }

    /// The fragment of this logic keeping only the named connectives.
    pub fn restricted_to(&self, names: &[&str]) -> Result<Logic, KernelError> {
        let mut connectives = Vec::new();
        for n in names {
            let c = self
                .connective(n)
                .ok_or_else(|| KernelError::UnknownConnective(n.to_string()))?;
            connectives.push(c.clone());
        }
        Logic::new(
            &self.name,
            self.values.clone(),
            self.designated.iter().copied().collect(),
            connectives,
        )
    }

    /// Same logic under a different name.
    pub fn renamed(mut self, name: &str) -> Logic {
        self.name = name.to_string();
        self
    }
}

/// A total assignment of admissible values to a finite atom set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Valuation {
    assignment: BTreeMap<String, TruthValue>,
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, TruthValue)>) -> Valuation {
        Valuation {
            assignment: pairs.into_iter().map(|(a, v)| (a.to_string(), v)).collect(),
        }
    }

    pub fn bind(&mut self, atom: &str, value: TruthValue) {
        self.assignment.insert(atom.to_string(), value);
    }

    pub fn get(&self, atom: &str) -> Option<TruthValue> {
        self.assignment.get(atom).copied()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.assignment.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Every assigned value is admissible in `logic`.
    pub fn is_admissible_in(&self, logic: &Logic) -> bool {
        self.assignment.values().all(|v| logic.values().contains(v))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.assignment.is_empty() {
            return f.write_str("(empty)");
        }
        let mut first = true;
        for (atom, value) in &self.assignment {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{atom}={value}")?;
            first = false;
        }
        Ok(())
    }
}

/// The E-conditional computed from its membership clauses rather than a
/// stored table: 1 is in the result iff 1 ∉ a, or 0 ∉ b, or both 0 ∈ a and
/// 1 ∈ b; 0 is in the result iff a is nonempty and b is nonempty.
///
/// Stated for the three admissible values `{T, B, F}` only; `N` is rejected.
pub fn dunn_conditional(a: TruthValue, b: TruthValue) -> Result<TruthValue, KernelError> {
    if a == TruthValue::N || b == TruthValue::N {
        return Err(KernelError::NonAdmissibleValue(TruthValue::N));
    }
    let has_one = !a.contains_one() || !b.contains_zero() || (a.contains_zero() && b.contains_one());
    let has_zero = (a.contains_one() || a.contains_zero()) && (b.contains_one() || b.contains_zero());
    Ok(TruthValue::from_membership(has_one, has_zero))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("unknown connective `{0}`")]
    UnknownConnective(String),
    #[error("connective `{connective}` expects {expected} argument(s), got {got}")]
    ArityMismatch { connective: String, expected: usize, got: usize },
    #[error("value {0} is not admissible in this logic")]
    NonAdmissibleValue(TruthValue),
    #[error("unknown truth value name `{0}` (expected one of T, B, N, F)")]
    UnknownValueName(String),
    #[error("a logic needs at least one admissible value")]
    EmptyValueSet,
    #[error("duplicate admissible value {0}")]
    DuplicateValue(TruthValue),
    #[error("designated value {0} is not admissible")]
    DesignatedNotAdmissible(TruthValue),
    #[error("connective names and symbols must be nonempty")]
    EmptyConnectiveName,
    #[error("duplicate connective name `{0}`")]
    DuplicateConnective(String),
    #[error("duplicate connective symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("table of `{0}` is not total and closed over the admissible values")]
    TableNotClosed(String),
}
