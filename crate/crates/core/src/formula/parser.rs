//! Recursive-descent parser for the theory syntax.
//!
//! ```text
//! theory  := formula ( ("." | NEWLINE) formula )*     trailing separators allowed
//! formula := iff
//! iff     := impl ( "<->" impl )*                     left-associative
//! impl    := disj ( "->" impl )?                      right-associative
//! disj    := conj ( "|" conj )*
//! conj    := unary ( "&" unary )*
//! unary   := ("not" | "-" | "!") unary | "bot" | "false" | atom | "(" formula ")"
//! atom    := [a-z][A-Za-z0-9_]*
//! ```
//!
//! `%` starts a comment running to the end of the line. A newline ends a
//! formula only outside parentheses and only where a formula may end; after
//! a binary connective or inside `( ... )` it is ordinary whitespace.

use std::fmt;

use super::{Atom, Formula, Theory};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    Bot,
    And,
    Or,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    Dot,
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "atom `{s}`"),
            Tok::Not => f.write_str("negation"),
            Tok::Bot => f.write_str("`bot`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::DoubleArrow => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Newline => f.write_str("newline"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);

    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        let mut push = |tok: Tok, len: usize, i: &mut usize, col: &mut usize| {
            tokens.push(Token {
                tok,
                line: start.0,
                column: start.1,
            });
            *i += len;
            *col += len;
        };
        match c {
            '\n' => {
                push(Tok::Newline, 1, &mut i, &mut col);
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                    col += 1;
                }
            }
            '&' => push(Tok::And, 1, &mut i, &mut col),
            '|' => push(Tok::Or, 1, &mut i, &mut col),
            '(' => push(Tok::LParen, 1, &mut i, &mut col),
            ')' => push(Tok::RParen, 1, &mut i, &mut col),
            '.' => push(Tok::Dot, 1, &mut i, &mut col),
            '!' => push(Tok::Not, 1, &mut i, &mut col),
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Arrow, 2, &mut i, &mut col),
            '-' => push(Tok::Not, 1, &mut i, &mut col),
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                push(Tok::DoubleArrow, 3, &mut i, &mut col)
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_')
                {
                    end += 1;
                }
                let word: String = chars[i..end].iter().collect();
                if !c.is_ascii_lowercase() {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        expected: "atom starting with a lowercase letter".into(),
                        found: format!("`{word}`"),
                    });
                }
                let tok = match word.as_str() {
                    "not" => Tok::Not,
                    "bot" | "false" => Tok::Bot,
                    _ => Tok::Ident(word),
                };
                let len = end - i;
                push(tok, len, &mut i, &mut col);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    expected: "formula".into(),
                    found: format!("character `{other}`"),
                })
            }
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            tokens: lex(text)?,
            pos: 0,
            depth: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.pos].tok.clone();
        if tok != Tok::Eof {
            self.pos += 1;
        }
        tok
    }

    fn skip_newlines(&mut self) {
        while *self.peek() == Tok::Newline {
            self.pos += 1;
        }
    }

    /// Next token that could continue a formula. Inside parentheses
    /// newlines are whitespace.
    fn peek_operator(&mut self) -> &Tok {
        if self.depth > 0 {
            self.skip_newlines();
        }
        self.peek()
    }

    fn error(&self, expected: &str) -> Error {
        let token = &self.tokens[self.pos];
        Error::Parse {
            line: token.line,
            column: token.column,
            expected: expected.to_string(),
            found: token.tok.to_string(),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut left = self.implication()?;
        while *self.peek_operator() == Tok::DoubleArrow {
            self.bump();
            let right = self.implication()?;
            left = Formula::iff(left, right);
        }
        Ok(left)
    }

    fn implication(&mut self) -> Result<Formula> {
        let antecedent = self.disjunction()?;
        if *self.peek_operator() == Tok::Arrow {
            self.bump();
            let consequent = self.implication()?;
            return Ok(Formula::implies(antecedent, consequent));
        }
        Ok(antecedent)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut left = self.conjunction()?;
        while *self.peek_operator() == Tok::Or {
            self.bump();
            left = Formula::or(left, self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while *self.peek_operator() == Tok::And {
            self.bump();
            left = Formula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        self.skip_newlines();
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(Atom::new_unchecked(&name)))
            }
            Tok::LParen => {
                self.bump();
                self.depth += 1;
                let inner = self.formula()?;
                self.skip_newlines();
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.depth -= 1;
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("formula")),
        }
    }

    fn at_separator(&self) -> bool {
        matches!(self.peek(), Tok::Dot | Tok::Newline)
    }

    fn skip_separators(&mut self) {
        while self.at_separator() {
            self.pos += 1;
        }
    }

    fn theory(&mut self) -> Result<Theory> {
        let mut theory = Theory::default();
        self.skip_separators();
        while *self.peek() != Tok::Eof {
            theory.push(self.formula()?);
            if !self.at_separator() && *self.peek() != Tok::Eof {
                return Err(self.error("`.`, newline or end of input"));
            }
            self.skip_separators();
        }
        Ok(theory)
    }
}

/// Parses a single formula. Surrounding separators are ignored.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut parser = Parser::new(text)?;
    parser.skip_separators();
    let f = parser.formula()?;
    parser.skip_separators();
    if *parser.peek() != Tok::Eof {
        return Err(parser.error("end of input"));
    }
    Ok(f)
}

/// Parses a theory: formulas separated by `.` or newlines, in input order.
pub fn parse_theory(text: &str) -> Result<Theory> {
    Parser::new(text)?.theory()
}
