//! Finite traces and the interpretation of formulae over them.
//!
//! Positions are 1-based at the public surface: a trace of length `n`
//! has positions `1..=n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("a trace needs at least one state")]
    EmptyTrace,
    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("malformed trace JSON: {0}")]
    Json(String),
}

/// The variables true in one state; everything else is false.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Valuation(BTreeSet<String>);

impl Valuation {
    pub fn new<I, S>(true_vars: I) -> Valuation
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Valuation(true_vars.into_iter().map(Into::into).collect())
    }

    pub fn holds(&self, var: &str) -> bool {
        self.0.contains(var)
    }

    pub fn true_vars(&self) -> &BTreeSet<String> {
        &self.0
    }
}

/// A finite, non-empty sequence of valuations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Trace {
    states: Vec<Valuation>,
}

impl Trace {
    pub fn new(states: Vec<Valuation>) -> Result<Trace, SemanticsError> {
        if states.is_empty() {
            return Err(SemanticsError::EmptyTrace);
        }
        Ok(Trace { states })
    }

    /// Builds a trace from per-state lists of true variables.
    pub fn from_sets<I, S, V>(states: I) -> Result<Trace, SemanticsError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = V>,
        V: Into<String>,
    {
        Trace::new(states.into_iter().map(Valuation::new).collect())
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[Valuation] {
        &self.states
    }

    /// The valuation at 1-based `position`.
    pub fn state(&self, position: usize) -> Option<&Valuation> {
        position.checked_sub(1).and_then(|i| self.states.get(i))
    }

    /// Parses the JSON trace format: an array of arrays of variable names.
    /// Duplicate names within a state collapse.
    pub fn from_json(text: &str) -> Result<Trace, SemanticsError> {
        let raw: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| SemanticsError::Json(e.to_string()))?;
        Trace::from_sets(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialization cannot fail")
    }
}

impl<'de> Deserialize<'de> for Trace {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let states = Vec::<Valuation>::deserialize(de)?;
        Trace::new(states).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Truth value of `f` at every position of `trace`, index 0 being
/// position 1.
///
/// Weak until is computed backwards from the last state, which is
/// equivalent to the quantified clause but linear in the trace length.
pub fn eval_all(trace: &Trace, f: &Formula) -> Vec<bool> {
    let n = trace.len();
    match f {
        Formula::Var(name) => trace.states.iter().map(|s| s.holds(name)).collect(),
        Formula::Bottom => vec![false; n],
        Formula::Implies(lhs, rhs) => {
            let a = eval_all(trace, lhs);
            let b = eval_all(trace, rhs);
            a.into_iter().zip(b).map(|(a, b)| !a || b).collect()
        }
        Formula::Next(body) => {
            let inner = eval_all(trace, body);
            let mut out: Vec<bool> = inner[1..].to_vec();
            out.push(false);
            out
        }
        Formula::WeakUntil(lhs, rhs) => {
            let a = eval_all(trace, lhs);
            let b = eval_all(trace, rhs);
            let mut out = vec![false; n];
            let mut later = true; // past the last state the obligation is discharged
            for i in (0..n).rev() {
                out[i] = b[i] || (a[i] && later);
                later = out[i];
            }
            out
        }
    }
}

/// Truth value of `f` at 1-based `position`.
pub fn eval(trace: &Trace, position: usize, f: &Formula) -> Result<bool, SemanticsError> {
    if position == 0 || position > trace.len() {
        return Err(SemanticsError::PositionOutOfRange {
            position,
            len: trace.len(),
        });
    }
    Ok(eval_all(trace, f)[position - 1])
}

/// `f` holds at the first position.
pub fn models(trace: &Trace, f: &Formula) -> bool {
    eval_all(trace, f)[0]
}

/// `f` holds at every position.
pub fn satisfies(trace: &Trace, f: &Formula) -> bool {
    eval_all(trace, f).into_iter().all(|b| b)
}
