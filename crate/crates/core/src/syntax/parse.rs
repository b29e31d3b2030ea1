//! Signature-driven formula parser.

use crate::kernel::{Assoc, Fixity, Logic};

use super::{Formula, SyntaxError};

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Ident(String),
    Op(String),
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    column: usize,
}

/// Tokenize against the logic's signature. Identifiers are
/// `[A-Za-z_][A-Za-z0-9_]*` and become connective tokens when they exactly
/// match a letter symbol (like `o`); operator symbols are matched longest
/// first, so `>w` wins over `>`.
fn lex(logic: &Logic, text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut symbols: Vec<&str> = logic.connectives().iter().map(|c| c.symbol()).collect();
    symbols.sort_by_key(|s| std::cmp::Reverse(s.len()));

    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            tokens.push(Token { kind: TokenKind::LParen, column });
            i += 1;
        } else if c == ')' {
            tokens.push(Token { kind: TokenKind::RParen, column });
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if symbols.contains(&word.as_str()) {
                tokens.push(Token { kind: TokenKind::Op(word), column });
            } else {
                tokens.push(Token { kind: TokenKind::Ident(word), column });
            }
        } else {
            let rest: String = chars[i..].iter().collect();
            let matched = symbols
                .iter()
                .find(|s| !s.chars().next().is_some_and(|f| f.is_ascii_alphanumeric() || f == '_') && rest.starts_with(**s));
            match matched {
                Some(s) => {
                    tokens.push(Token { kind: TokenKind::Op(s.to_string()), column });
                    i += s.chars().count();
                }
                None => {
                    return Err(SyntaxError::UnknownSymbol { symbol: c.to_string(), column });
                }
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    logic: &'a Logic,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    /// Fixity of the connective behind an operator token. Symbols are
    /// unique within a signature, so this cannot be ambiguous.
    fn fixity_of(&self, symbol: &str) -> Fixity {
        self.logic
            .connective(symbol)
            .expect("lexer only emits signature symbols")
            .fixity()
    }

    fn name_of(&self, symbol: &str) -> String {
        self.logic.connective(symbol).expect("signature symbol").name().to_string()
    }

    fn parse_formula(&mut self) -> Result<Formula, SyntaxError> {
        self.parse_infix(0)
    }

    fn parse_infix(&mut self, min_prec: u8) -> Result<Formula, SyntaxError> {
        let mut lhs = self.parse_prefix()?;
        while let Some(tok) = self.peek() {
            let (symbol, column) = match &tok.kind {
                TokenKind::Op(s) => (s.clone(), tok.column),
                _ => break,
            };
            let (prec, assoc) = match self.fixity_of(&symbol) {
                Fixity::Infix { precedence, assoc } => (precedence, assoc),
                Fixity::Prefix => {
                    return Err(SyntaxError::UnexpectedToken { token: symbol, column });
                }
            };
            if prec < min_prec {
                break;
            }
            self.advance();
            let rhs = self.parse_infix(prec + 1)?;
            lhs = Formula::Apply(self.name_of(&symbol), vec![lhs, rhs]);
            if assoc == Assoc::None {
                // A second operator at the same level without parentheses is
                // a chained non-associative conditional.
                if let Some(next) = self.peek() {
                    if let TokenKind::Op(s) = &next.kind {
                        if let Fixity::Infix { precedence, .. } = self.fixity_of(s) {
                            if precedence == prec {
                                return Err(SyntaxError::NonAssociativeChain {
                                    symbol: s.clone(),
                                    column: next.column,
                                });
                            }
                        }
                    }
                }
                break;
            }
        }
        Ok(lhs)
    }

    fn parse_prefix(&mut self) -> Result<Formula, SyntaxError> {
        let tok = self.peek().cloned().ok_or(SyntaxError::UnexpectedEnd)?;
        match tok.kind {
            TokenKind::Op(symbol) => match self.fixity_of(&symbol) {
                Fixity::Prefix => {
                    self.advance();
                    let arg = self.parse_prefix()?;
                    Ok(Formula::Apply(self.name_of(&symbol), vec![arg]))
                }
                Fixity::Infix { .. } => {
                    Err(SyntaxError::UnexpectedToken { token: symbol, column: tok.column })
                }
            },
            TokenKind::Ident(name) => {
                self.advance();
                Ok(Formula::Atom(name))
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.parse_formula()?;
                match self.advance() {
                    Some(Token { kind: TokenKind::RParen, .. }) => Ok(inner),
                    Some(t) => Err(SyntaxError::UnbalancedParen { column: t.column }),
                    None => Err(SyntaxError::UnbalancedParen { column: tok.column }),
                }
            }
            TokenKind::RParen => Err(SyntaxError::UnbalancedParen { column: tok.column }),
        }
    }
}

/// Parse `text` as a formula over the signature of `logic`.
pub fn parse(logic: &Logic, text: &str) -> Result<Formula, SyntaxError> {
    let tokens = lex(logic, text)?;
    if tokens.is_empty() {
        return Err(SyntaxError::EmptyInput);
    }
    let mut parser = Parser { logic, tokens, pos: 0 };
    let formula = parser.parse_formula()?;
    if let Some(extra) = parser.peek() {
        let token = match &extra.kind {
            TokenKind::Ident(s) | TokenKind::Op(s) => s.clone(),
            TokenKind::LParen => "(".to_string(),
            TokenKind::RParen => ")".to_string(),
        };
        return Err(SyntaxError::UnexpectedToken { token, column: extra.column });
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::builtin_logic;

    fn atom(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn aristotle_in_m3v() {
        let m3v = builtin_logic("M3V").unwrap();
        let got = parse(&m3v, "~(A > ~A)").unwrap();
        let want = Formula::unary(
            "sim",
            Formula::binary("to_e", atom("A"), Formula::unary("sim", atom("A"))),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn negated_conditional_in_ccsl3() {
        let ccsl3 = builtin_logic("cCSL3").unwrap();
        let got = parse(&ccsl3, "-(A > B)").unwrap();
        let want = Formula::unary("neg", Formula::binary("to_e", atom("A"), atom("B")));
        assert_eq!(got, want);
    }

    #[test]
    fn chained_conditional_requires_parens() {
        let m3v = builtin_logic("M3V").unwrap();
        assert_eq!(
            parse(&m3v, "A > B > C"),
            Err(SyntaxError::NonAssociativeChain { symbol: ">".into(), column: 7 })
        );
        assert!(parse(&m3v, "(A > B) > C").is_ok());
        assert!(parse(&m3v, "A > (B > C)").is_ok());
        // Mixing conditional-level operators is chaining too.
        assert_eq!(
            parse(&m3v, "A > B <> C"),
            Err(SyntaxError::NonAssociativeChain { symbol: "<>".into(), column: 7 })
        );
    }

    #[test]
    fn precedence_layers() {
        let m3v = builtin_logic("M3V").unwrap();
        let got = parse(&m3v, "A & B > C").unwrap();
        let want = Formula::binary("to_e", Formula::binary("and", atom("A"), atom("B")), atom("C"));
        assert_eq!(got, want);
        let got = parse(&m3v, "~A | B & C").unwrap();
        let want = Formula::binary(
            "or",
            Formula::unary("sim", atom("A")),
            Formula::binary("and", atom("B"), atom("C")),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn conjunction_chains_left() {
        let m3v = builtin_logic("M3V").unwrap();
        let got = parse(&m3v, "A & B & C").unwrap();
        let want = Formula::binary("and", Formula::binary("and", atom("A"), atom("B")), atom("C"));
        assert_eq!(got, want);
    }

    #[test]
    fn unknown_symbol_reports_position() {
        let ccsl3 = builtin_logic("cCSL3").unwrap();
        assert_eq!(
            parse(&ccsl3, "-(A > ~A)"),
            Err(SyntaxError::UnknownSymbol { symbol: "~".into(), column: 7 })
        );
    }

    #[test]
    fn letter_symbols_are_connectives_not_atoms() {
        let toolbox = builtin_logic("toolbox").unwrap();
        let got = parse(&toolbox, "o A").unwrap();
        assert_eq!(got, Formula::unary("circ", atom("A")));
        let got = parse(&toolbox, "o(A)").unwrap();
        assert_eq!(got, Formula::unary("circ", atom("A")));
        // Maximal munch keeps longer identifiers atomic.
        let got = parse(&toolbox, "oA").unwrap();
        assert_eq!(got, atom("oA"));
        // Multi-character operator symbols.
        let got = parse(&toolbox, "A >w B").unwrap();
        assert_eq!(got, Formula::binary("to_w", atom("A"), atom("B")));
        let got = parse(&toolbox, "A >bl B").unwrap();
        assert_eq!(got, Formula::binary("to_bl", atom("A"), atom("B")));
    }

    #[test]
    fn paren_and_end_errors() {
        let m3v = builtin_logic("M3V").unwrap();
        assert_eq!(parse(&m3v, "(A > B"), Err(SyntaxError::UnbalancedParen { column: 1 }));
        assert_eq!(parse(&m3v, "A)"), Err(SyntaxError::UnexpectedToken { token: ")".into(), column: 2 }));
        assert_eq!(parse(&m3v, "A >"), Err(SyntaxError::UnexpectedEnd));
        assert_eq!(parse(&m3v, ""), Err(SyntaxError::EmptyInput));
        assert_eq!(parse(&m3v, "   "), Err(SyntaxError::EmptyInput));
        assert_eq!(parse(&m3v, "> A"), Err(SyntaxError::UnexpectedToken { token: ">".into(), column: 1 }));
        assert_eq!(parse(&m3v, "A B"), Err(SyntaxError::UnexpectedToken { token: "B".into(), column: 3 }));
    }
}
