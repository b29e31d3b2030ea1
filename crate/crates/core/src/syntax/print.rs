//! Canonical minimal-parentheses printer. `parse(print(f)) == f` for any
//! formula over the logic's signature.

use crate::kernel::{Assoc, Fixity, Logic};

use super::{Formula, Schema};

// Effective binding strength of a rendered node, used to decide whether a
// child needs parentheses. Atoms and prefix applications never do.
const ATOM_PREC: u8 = u8::MAX;

enum Node<'a> {
    Leaf(&'a str),
    Apply(&'a str, Vec<&'a dyn Render>),
}

trait Render {
    fn node(&self) -> Node<'_>;
}

impl Render for Formula {
    fn node(&self) -> Node<'_> {
        match self {
            Formula::Atom(a) => Node::Leaf(a),
            Formula::Apply(c, children) => {
                Node::Apply(c, children.iter().map(|x| x as &dyn Render).collect())
            }
        }
    }
}

impl Render for Schema {
    fn node(&self) -> Node<'_> {
        match self {
            Schema::Metavar(m) => Node::Leaf(m),
            Schema::Apply(c, children) => {
                Node::Apply(c, children.iter().map(|x| x as &dyn Render).collect())
            }
        }
    }
}

fn precedence_of(logic: &Logic, connective: &str) -> (String, u8, Assoc, bool) {
    match logic.connective(connective) {
        Some(c) => match c.fixity() {
            Fixity::Prefix => (c.symbol().to_string(), ATOM_PREC, Assoc::None, true),
            Fixity::Infix { precedence, assoc } => (c.symbol().to_string(), precedence, assoc, false),
        },
        // Foreign connective: fall back to a functional rendering.
        None => (connective.to_string(), ATOM_PREC, Assoc::None, false),
    }
}

fn render(logic: &Logic, node: &dyn Render, out: &mut String) -> u8 {
    match node.node() {
        Node::Leaf(name) => {
            out.push_str(name);
            ATOM_PREC
        }
        Node::Apply(conn, children) => match logic.connective(conn) {
            Some(c) if c.arity() == 1 && children.len() == 1 => {
                let symbol = c.symbol();
                out.push_str(symbol);
                let mut inner = String::new();
                let child_prec = render(logic, children[0], &mut inner);
                if child_prec < ATOM_PREC {
                    out.push('(');
                    out.push_str(&inner);
                    out.push(')');
                } else {
                    // Letter symbols need a separator before a letter child.
                    let needs_space = symbol
                        .chars()
                        .last()
                        .is_some_and(|l| l.is_ascii_alphanumeric() || l == '_')
                        && inner
                            .chars()
                            .next()
                            .is_some_and(|f| f.is_ascii_alphanumeric() || f == '_');
                    if needs_space {
                        out.push(' ');
                    }
                    out.push_str(&inner);
                }
                ATOM_PREC
            }
            Some(c) if c.arity() == 2 && children.len() == 2 => {
                let (symbol, prec, assoc, _) = precedence_of(logic, conn);
                let mut lhs = String::new();
                let lhs_prec = render(logic, children[0], &mut lhs);
                let mut rhs = String::new();
                let rhs_prec = render(logic, children[1], &mut rhs);
                // Left children keep their rendering when they bind at least
                // as tightly; right children must bind strictly tighter so
                // reparsing rebuilds the same shape (left-associative chains)
                // or is legal at all (non-associative conditionals).
                let lhs_parens = match assoc {
                    Assoc::Left => lhs_prec < prec,
                    Assoc::None => lhs_prec <= prec,
                };
                let rhs_parens = rhs_prec <= prec;
                if lhs_parens {
                    out.push('(');
                    out.push_str(&lhs);
                    out.push(')');
                } else {
                    out.push_str(&lhs);
                }
                out.push(' ');
                out.push_str(&symbol);
                out.push(' ');
                if rhs_parens {
                    out.push('(');
                    out.push_str(&rhs);
                    out.push(')');
                } else {
                    out.push_str(&rhs);
                }
                prec
            }
            // Unknown or arity-mismatched application: functional form.
            _ => {
                out.push_str(conn);
                out.push('(');
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    render(logic, *child, out);
                }
                out.push(')');
                ATOM_PREC
            }
        },
    }
}

/// Render a formula in canonical form with minimal parentheses.
pub fn print(logic: &Logic, formula: &Formula) -> String {
    let mut out = String::new();
    render(logic, formula, &mut out);
    out
}

/// Render a schema the same way; metavariables print like atoms.
pub fn print_schema(logic: &Logic, schema: &Schema) -> String {
    let mut out = String::new();
    render(logic, schema, &mut out);
    out
}
