//! Recursive-descent parser for the concrete syntax.
//!
//! Precedence, tightest first: unary (`X N G F !`), `W`/`U`, `&`, `|`,
//! `->`, `<->`. `W`, `U`, `->` and `<->` associate to the right, `&` and
//! `|` to the left.

use std::fmt;

use thiserror::Error;

use super::encode;
use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: expected ", self.position)?;
        match self.expected.as_slice() {
            [] => f.write_str("nothing")?,
            [one] => f.write_str(one)?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    End,
    Next,
    WkNext,
    Always,
    Eventually,
    Not,
    WeakUntil,
    Until,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.text()),
        }
    }

    fn text(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "identifier",
            Tok::True => "true",
            Tok::False => "false",
            Tok::End => "end",
            Tok::Next => "X",
            Tok::WkNext => "N",
            Tok::Always => "G",
            Tok::Eventually => "F",
            Tok::Not => "!",
            Tok::WeakUntil => "W",
            Tok::Until => "U",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Implies => "->",
            Tok::Iff => "<->",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Eof => "end of input",
        }
    }
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "true" => Tok::True,
        "false" => Tok::False,
        "end" => Tok::End,
        "X" => Tok::Next,
        "N" => Tok::WkNext,
        "G" => Tok::Always,
        "F" => Tok::Eventually,
        "W" => Tok::WeakUntil,
        "U" => Tok::Until,
        _ => return None,
    })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'!' => {
                i += 1;
                Tok::Not
            }
            b'&' => {
                i += 1;
                Tok::And
            }
            b'|' => {
                i += 1;
                Tok::Or
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Implies
            }
            b'<' if bytes[i..].starts_with(b"<->") => {
                i += 3;
                Tok::Iff
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                keyword(word).unwrap_or_else(|| Tok::Ident(word.to_string()))
            }
            _ => {
                let found = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    position: start,
                    expected: vec!["a formula token".to_string()],
                    found: format!("`{found}`"),
                });
            }
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    at: usize,
}

const OPERAND: &[&str] = &[
    "identifier",
    "`true`",
    "`false`",
    "`end`",
    "`(`",
    "`X`",
    "`N`",
    "`G`",
    "`F`",
    "`!`",
];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.at].1.clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        tok
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (position, tok) = &self.tokens[self.at];
        ParseError {
            position: *position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.iff()?;
            return Ok(encode::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            acc = encode::or(acc, rhs);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.until()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.until()?;
            acc = encode::and(acc, rhs);
        }
        Ok(acc)
    }

    fn until(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        match self.peek() {
            Tok::WeakUntil => {
                self.bump();
                let rhs = self.until()?;
                Ok(Formula::weak_until(lhs, rhs))
            }
            Tok::Until => {
                self.bump();
                let rhs = self.until()?;
                Ok(encode::until(lhs, rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let wrap: fn(Formula) -> Formula = match self.peek() {
            Tok::Next => Formula::next,
            Tok::WkNext => encode::wk_next,
            Tok::Always => encode::always,
            Tok::Eventually => encode::eventually,
            Tok::Not => encode::neg,
            _ => return self.atom(),
        };
        self.bump();
        Ok(wrap(self.unary()?))
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::var(name))
            }
            Tok::True => {
                self.bump();
                Ok(encode::top())
            }
            Tok::False => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::End => {
                self.bump();
                Ok(encode::end())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`)`", "a binary operator"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(OPERAND)),
        }
    }
}

/// Parses concrete syntax into a core formula, expanding all sugar.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        at: 0,
    };
    let f = parser.iff()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.error(&["end of input", "a binary operator"]));
    }
    Ok(f)
}
