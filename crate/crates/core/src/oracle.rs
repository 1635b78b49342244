//! Exhaustive bounded-model search.
//!
//! Every question is answered by enumerating all traces up to a length
//! bound and evaluating directly, with no reference to the tableau. This
//! is the ground truth the decision procedure is tested against.

use std::collections::BTreeSet;

use crate::formula::{self, Formula};
use crate::semantics::{self, Trace, Valuation};

/// Iterator over all traces of length `1..=max_len` over a variable set,
/// shorter traces first and lexicographic within a length.
#[derive(Debug, Clone)]
pub struct TraceEnumerator {
    valuations: Vec<Valuation>,
    max_len: usize,
    digits: Vec<usize>,
    done: bool,
}

impl TraceEnumerator {
    fn advance(&mut self) {
        let base = self.valuations.len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                return;
            }
            *d = 0;
        }
        // every digit wrapped: move to the next length
        if self.digits.len() == self.max_len {
            self.done = true;
        } else {
            self.digits.push(0);
        }
    }
}

impl Iterator for TraceEnumerator {
    type Item = Trace;

    fn next(&mut self) -> Option<Trace> {
        if self.done {
            return None;
        }
        let states = self
            .digits
            .iter()
            .map(|&d| self.valuations[d].clone())
            .collect();
        let trace = Trace::new(states).expect("enumerated traces are non-empty");
        self.advance();
        Some(trace)
    }
}

/// All valuations over `vars`, ordered by the binary counter whose bit
/// `j` is the `j`-th variable in sorted order.
fn valuations(vars: &BTreeSet<String>) -> Vec<Valuation> {
    let vars: Vec<&String> = vars.iter().collect();
    (0..1usize << vars.len())
        .map(|mask| {
            Valuation::new(
                vars.iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .map(|(_, v)| v.to_string()),
            )
        })
        .collect()
}

/// Every trace over `vars` of length `1..=max_len`.
///
/// # Panics
///
/// If `max_len` is zero.
pub fn enumerate_traces(vars: &BTreeSet<String>, max_len: usize) -> TraceEnumerator {
    assert!(max_len >= 1, "max_len must be positive");
    TraceEnumerator {
        valuations: valuations(vars),
        max_len,
        digits: vec![0],
        done: false,
    }
}

/// Σ_{n=1..max_len} (2^|vars|)^n, saturating.
pub fn trace_count(var_count: usize, max_len: usize) -> u128 {
    let base = 1u128.checked_shl(var_count as u32).unwrap_or(u128::MAX);
    let mut total = 0u128;
    let mut power = 1u128;
    for _ in 0..max_len {
        power = power.saturating_mul(base);
        total = total.saturating_add(power);
    }
    total
}

/// First (hence shortest) trace that models `f`, if any within the bound.
pub fn brute_force_sat(f: &Formula, max_len: usize) -> Option<Trace> {
    enumerate_traces(&formula::free_vars(f), max_len).find(|t| semantics::models(t, f))
}

/// First trace with a position falsifying `f`, or `None` if `f` holds
/// everywhere on every trace within the bound.
pub fn brute_force_valid(f: &Formula, max_len: usize) -> Option<Trace> {
    enumerate_traces(&formula::free_vars(f), max_len).find(|t| !semantics::satisfies(t, f))
}

/// Bounded check of `premises ⊨ conclusion` over the given variables: the
/// first trace satisfying every premise everywhere but not the
/// conclusion everywhere.
pub fn bounded_entailment(
    premises: &[Formula],
    conclusion: &Formula,
    vars: &BTreeSet<String>,
    max_len: usize,
) -> Option<Trace> {
    enumerate_traces(vars, max_len).find(|t| {
        premises.iter().all(|p| semantics::satisfies(t, p)) && !semantics::satisfies(t, conclusion)
    })
}

/// Small-model bound: a satisfiable formula has a model no longer than
/// this.
///
/// Truth of every subformula at a position is fixed by the truth of the
/// variables, strong-next and weak-until subformulae there, so a model
/// with two positions of equal type can be shortened by cutting the
/// segment between them. Saturates at `usize::MAX`.
pub fn small_model_bound(f: &Formula) -> usize {
    let elementary = formula::subformulae(f)
        .into_iter()
        .filter(|g| !matches!(g, Formula::Implies(..) | Formula::Bottom))
        .count();
    1usize.checked_shl(elementary as u32).unwrap_or(usize::MAX)
}
