//! Independent reference semantics used as a test oracle.
//!
//! Tables are spelled as string rows and evaluation is a direct recursive
//! walk with its own assignment enumeration. Nothing here goes through the
//! kernel's table storage, the engine's valuation iterator, or the verdict
//! classifier, so agreement between the two is meaningful evidence.

use mvlab::kernel::TruthValue;
use mvlab::syntax::Formula;

pub type Table1 = [char; 3];
pub type Table2 = [[char; 3]; 3];

/// Row order T, B, F throughout.
pub struct OracleLogic {
    pub designated: [char; 2],
    pub unary: Vec<(&'static str, Table1)>,
    pub binary: Vec<(&'static str, Table2)>,
}

fn row(s: &str) -> [char; 3] {
    let v: Vec<char> = s.chars().collect();
    [v[0], v[1], v[2]]
}

fn grid(a: &str, b: &str, c: &str) -> Table2 {
    [row(a), row(b), row(c)]
}

pub fn m3v() -> OracleLogic {
    OracleLogic {
        designated: ['T', 'B'],
        unary: vec![("sim", row("FBT"))],
        binary: vec![
            ("and", grid("TBF", "BBF", "FFF")),
            ("or", grid("TTT", "TBB", "TBF")),
            ("to_e", grid("BFF", "BBF", "BBB")),
            ("iff_e", grid("BFF", "FBF", "FFB")),
        ],
    }
}

pub fn ccsl3() -> OracleLogic {
    OracleLogic {
        designated: ['T', 'B'],
        unary: vec![("neg", row("FTT"))],
        binary: vec![
            ("and", grid("TBF", "BBF", "FFF")),
            ("or", grid("TTT", "TBB", "TBF")),
            ("to_e", grid("BFF", "BBF", "BBB")),
            ("iff_e", grid("BFF", "FBF", "FFB")),
        ],
    }
}

pub fn csl3() -> OracleLogic {
    OracleLogic {
        designated: ['T', 'B'],
        unary: vec![("neg", row("FTT"))],
        binary: vec![("and", grid("TBF", "BBF", "FFF")), ("or", grid("TTT", "TBB", "TBF"))],
    }
}

pub fn cp2() -> OracleLogic {
    OracleLogic {
        designated: ['T', 'B'],
        unary: vec![("sim", row("FBT"))],
        binary: vec![
            ("and", grid("TTF", "TTF", "FFF")),
            ("or", grid("TTT", "TTT", "TTF")),
            ("to_e", grid("BFF", "BBF", "BBB")),
            ("iff_e", grid("TFF", "FTF", "FFT")),
        ],
    }
}

pub fn lp() -> OracleLogic {
    OracleLogic {
        designated: ['T', 'B'],
        unary: vec![("sim", row("FBT"))],
        binary: vec![
            ("and", grid("TBF", "BBF", "FFF")),
            ("or", grid("TTT", "TBB", "TBF")),
            ("mat", grid("TBF", "TBB", "TTT")),
        ],
    }
}

fn pos(v: char) -> usize {
    match v {
        'T' => 0,
        'B' => 1,
        'F' => 2,
        other => panic!("oracle value {other}"),
    }
}

impl OracleLogic {
    pub fn eval(&self, assignment: &[(String, char)], formula: &Formula) -> char {
        match formula {
            Formula::Atom(a) => {
                assignment
                    .iter()
                    .find(|(name, _)| name == a)
                    .unwrap_or_else(|| panic!("oracle: unbound atom {a}"))
                    .1
            }
            Formula::Apply(c, children) => {
                if let Some((_, t)) = self.unary.iter().find(|(n, _)| n == c) {
                    t[pos(self.eval(assignment, &children[0]))]
                } else if let Some((_, t)) = self.binary.iter().find(|(n, _)| n == c) {
                    t[pos(self.eval(assignment, &children[0]))][pos(self.eval(assignment, &children[1]))]
                } else {
                    panic!("oracle: unknown connective {c}")
                }
            }
        }
    }

    fn is_designated(&self, v: char) -> bool {
        self.designated.contains(&v)
    }

    /// Brute-force three-way validity by direct assignment recursion,
    /// returning the status name and the first witness in T, B, F order.
    pub fn validity(&self, formula: &Formula) -> (&'static str, Option<Vec<(String, char)>>) {
        let atoms: Vec<String> = formula.atoms().into_iter().collect();
        let mut falsity: Option<Vec<(String, char)>> = None;
        let mut stack = vec![Vec::new()];
        while let Some(partial) = stack.pop() {
            if partial.len() == atoms.len() {
                let v = self.eval(&partial, formula);
                if !self.is_designated(v) {
                    return ("invalid", Some(partial));
                }
                if (v == 'B' || v == 'F') && falsity.is_none() {
                    falsity = Some(partial);
                }
                continue;
            }
            // Push in reverse so T is explored first.
            for value in ['F', 'B', 'T'] {
                let mut next = partial.clone();
                next.push((atoms[partial.len()].clone(), value));
                stack.push(next);
            }
        }
        match falsity {
            Some(w) => ("valid-sometimes-false", Some(w)),
            None => ("valid-just-true", None),
        }
    }

    /// Brute-force truth-preservation consequence.
    pub fn consequence(
        &self,
        premises: &[Formula],
        conclusion: &Formula,
    ) -> (&'static str, Option<Vec<(String, char)>>) {
        let mut atom_set = conclusion.atoms();
        for p in premises {
            atom_set.extend(p.atoms());
        }
        let atoms: Vec<String> = atom_set.into_iter().collect();
        let mut stack = vec![Vec::new()];
        while let Some(partial) = stack.pop() {
            if partial.len() == atoms.len() {
                let premises_hold =
                    premises.iter().all(|p| self.is_designated(self.eval(&partial, p)));
                if premises_hold && !self.is_designated(self.eval(&partial, conclusion)) {
                    return ("invalid", Some(partial));
                }
                continue;
            }
            for value in ['F', 'B', 'T'] {
                let mut next = partial.clone();
                next.push((atoms[partial.len()].clone(), value));
                stack.push(next);
            }
        }
        ("valid-just-true", None)
    }
}

/// Bridge an oracle assignment to a kernel valuation.
pub fn to_valuation(assignment: &[(String, char)]) -> mvlab::kernel::Valuation {
    mvlab::kernel::Valuation::from_pairs(assignment.iter().map(|(a, v)| {
        let value = match v {
            'T' => TruthValue::T,
            'B' => TruthValue::B,
            'F' => TruthValue::F,
            other => panic!("oracle value {other}"),
        };
        (a.as_str(), value)
    }))
}
