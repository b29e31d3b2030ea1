//! Formula and schema ASTs, a signature-driven parser, and a canonical
//! pretty-printer.
//!
//! Grammar, briefly: atoms are identifiers; prefix connectives bind
//! tightest; conjunction-level operators bind tighter than disjunction-level
//! ones, which bind tighter than conditionals; conditionals and
//! biconditionals are non-associative, so chaining them needs parentheses.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

mod parse;
mod print;

pub use parse::parse;
pub use print::{print, print_schema};

/// A propositional formula over some signature: atoms and connective
/// applications.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Apply(String, Vec<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn unary(connective: &str, arg: Formula) -> Formula {
        Formula::Apply(connective.to_string(), vec![arg])
    }

    pub fn binary(connective: &str, lhs: Formula, rhs: Formula) -> Formula {
        Formula::Apply(connective.to_string(), vec![lhs, rhs])
    }

    /// The finite atom set, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Apply(_, children) => {
                for c in children {
                    c.collect_atoms(out);
                }
            }
        }
    }
}

/// A formula shape over metavariables instead of atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Schema {
    Metavar(String),
    Apply(String, Vec<Schema>),
}

impl Schema {
    pub fn metavar(name: &str) -> Schema {
        Schema::Metavar(name.to_string())
    }

    pub fn unary(connective: &str, arg: Schema) -> Schema {
        Schema::Apply(connective.to_string(), vec![arg])
    }

    pub fn binary(connective: &str, lhs: Schema, rhs: Schema) -> Schema {
        Schema::Apply(connective.to_string(), vec![lhs, rhs])
    }

    pub fn metavariables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_metavars(&mut out);
        out
    }

    fn collect_metavars(&self, out: &mut BTreeSet<String>) {
        match self {
            Schema::Metavar(m) => {
                out.insert(m.clone());
            }
            Schema::Apply(_, children) => {
                for c in children {
                    c.collect_metavars(out);
                }
            }
        }
    }

    /// The instance mapping every metavariable to a same-named fresh atom.
    /// In a truth-functional logic a schema is valid exactly when this
    /// instance is.
    pub fn atomic_instance(&self) -> Formula {
        match self {
            Schema::Metavar(m) => Formula::Atom(m.clone()),
            Schema::Apply(c, children) => {
                Formula::Apply(c.clone(), children.iter().map(Schema::atomic_instance).collect())
            }
        }
    }
}

/// Homomorphic substitution of formulas for metavariables. The mapping must
/// cover every metavariable of the schema.
pub fn instantiate(
    schema: &Schema,
    mapping: &BTreeMap<String, Formula>,
) -> Result<Formula, SyntaxError> {
    match schema {
        Schema::Metavar(m) => mapping
            .get(m)
            .cloned()
            .ok_or_else(|| SyntaxError::UnboundMetavariable(m.clone())),
        Schema::Apply(c, children) => {
            let children = children
                .iter()
                .map(|s| instantiate(s, mapping))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Formula::Apply(c.clone(), children))
        }
    }
}

/// Premises and a conclusion over one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Sequent {
        Sequent { premises, conclusion }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for p in &self.premises {
            p.collect_atoms(&mut out);
        }
        self.conclusion.collect_atoms(&mut out);
        out
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("unknown symbol `{symbol}` at column {column}")]
    UnknownSymbol { symbol: String, column: usize },
    #[error("unexpected token `{token}` at column {column}")]
    UnexpectedToken { token: String, column: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unbalanced parenthesis at column {column}")]
    UnbalancedParen { column: usize },
    #[error("`{symbol}` at column {column} is non-associative; parenthesize the chain")]
    NonAssociativeChain { symbol: String, column: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("no binding for metavariable `{0}`")]
    UnboundMetavariable(String),
}
