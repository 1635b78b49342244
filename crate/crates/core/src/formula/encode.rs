//! Derived connectives, each expanded into the five core constructors.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::Formula;

/// Tags for the derived connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Encoding {
    Neg,
    Top,
    Or,
    And,
    /// Biconditional, `(φ -> ψ) & (ψ -> φ)`.
    Iff,
    End,
    WkNext,
    Always,
    Eventually,
    Until,
}

impl Encoding {
    pub const ALL: [Encoding; 10] = [
        Encoding::Neg,
        Encoding::Top,
        Encoding::Or,
        Encoding::And,
        Encoding::Iff,
        Encoding::End,
        Encoding::WkNext,
        Encoding::Always,
        Encoding::Eventually,
        Encoding::Until,
    ];

    pub fn arity(self) -> usize {
        match self {
            Encoding::Top | Encoding::End => 0,
            Encoding::Neg | Encoding::WkNext | Encoding::Always | Encoding::Eventually => 1,
            Encoding::Or | Encoding::And | Encoding::Iff | Encoding::Until => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Encoding::Neg => "neg",
            Encoding::Top => "top",
            Encoding::Or => "or",
            Encoding::And => "and",
            Encoding::Iff => "iff",
            Encoding::End => "end",
            Encoding::WkNext => "wknext",
            Encoding::Always => "always",
            Encoding::Eventually => "eventually",
            Encoding::Until => "until",
        }
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Encoding {
    type Err = EncodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Encoding::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| EncodeError::UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("`{tag}` takes {expected} argument(s), got {got}")]
    Arity {
        tag: Encoding,
        expected: usize,
        got: usize,
    },
    #[error("unknown encoding `{0}`")]
    UnknownTag(String),
}

/// Expands the derived connective `tag` applied to `args`.
pub fn encode(tag: Encoding, args: &[Formula]) -> Result<Formula, EncodeError> {
    if args.len() != tag.arity() {
        return Err(EncodeError::Arity {
            tag,
            expected: tag.arity(),
            got: args.len(),
        });
    }
    let arg = |i: usize| args[i].clone();
    Ok(match tag {
        Encoding::Neg => neg(arg(0)),
        Encoding::Top => top(),
        Encoding::Or => or(arg(0), arg(1)),
        Encoding::And => and(arg(0), arg(1)),
        Encoding::Iff => iff(arg(0), arg(1)),
        Encoding::End => end(),
        Encoding::WkNext => wk_next(arg(0)),
        Encoding::Always => always(arg(0)),
        Encoding::Eventually => eventually(arg(0)),
        Encoding::Until => until(arg(0), arg(1)),
    })
}

/// `¬φ = φ ⟹ ⊥`
pub fn neg(f: Formula) -> Formula {
    Formula::implies(f, Formula::Bottom)
}

/// `⊤ = ¬⊥`
pub fn top() -> Formula {
    neg(Formula::Bottom)
}

/// `φ ∨ ψ = ¬φ ⟹ ψ`
pub fn or(lhs: Formula, rhs: Formula) -> Formula {
    Formula::implies(neg(lhs), rhs)
}

/// `φ ∧ ψ = ¬(¬φ ∨ ¬ψ)`
pub fn and(lhs: Formula, rhs: Formula) -> Formula {
    neg(or(neg(lhs), neg(rhs)))
}

pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
    and(
        Formula::implies(lhs.clone(), rhs.clone()),
        Formula::implies(rhs, lhs),
    )
}

/// `X⊤`, true exactly where a next state exists.
pub fn next_top() -> Formula {
    Formula::next(top())
}

/// `end = ¬X⊤`
pub fn end() -> Formula {
    neg(next_top())
}

/// `•φ = ¬X¬φ`
pub fn wk_next(f: Formula) -> Formula {
    neg(Formula::next(neg(f)))
}

/// `□φ = φ W ⊥`
pub fn always(f: Formula) -> Formula {
    Formula::weak_until(f, Formula::Bottom)
}

/// `◊φ = ¬□¬φ`
pub fn eventually(f: Formula) -> Formula {
    neg(always(neg(f)))
}

/// `φ U ψ = (φ W ψ) ∧ ◊ψ`
pub fn until(lhs: Formula, rhs: Formula) -> Formula {
    and(Formula::weak_until(lhs, rhs.clone()), eventually(rhs))
}

/// `◊end`, the finiteness formula injected at tableau roots.
pub fn eventually_end() -> Formula {
    eventually(end())
}

/// Conjunction of all formulae in order, `⊤` when empty.
pub fn conjoin<I>(formulae: I) -> Formula
where
    I: IntoIterator<Item = Formula>,
{
    let mut iter = formulae.into_iter();
    match iter.next() {
        None => top(),
        Some(first) => iter.fold(first, and),
    }
}
