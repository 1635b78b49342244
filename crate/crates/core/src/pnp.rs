//! Positive-negative pairs: tableau nodes assigning formulae to the
//! "holds now" and "fails now" sides.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::encode::{self, next_top};
use crate::formula::{closure_of, render, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PnpError {
    #[error("PNP is not complete: {missing} closure formula(e) unassigned")]
    Incomplete { missing: usize },
}

/// A pair of finite formula sets. Sets are ordered structurally, so two
/// pairs with the same contents compare and hash equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pnp {
    pub pos: BTreeSet<Formula>,
    pub neg: BTreeSet<Formula>,
}

impl Pnp {
    pub fn new<P, N>(pos: P, neg: N) -> Pnp
    where
        P: IntoIterator<Item = Formula>,
        N: IntoIterator<Item = Formula>,
    {
        Pnp {
            pos: pos.into_iter().collect(),
            neg: neg.into_iter().collect(),
        }
    }

    /// `({f}, {})`
    pub fn asserting(f: Formula) -> Pnp {
        Pnp::new([f], [])
    }

    /// All formulae mentioned on either side.
    pub fn formulae(&self) -> BTreeSet<Formula> {
        self.pos.union(&self.neg).cloned().collect()
    }

    pub fn closure(&self) -> BTreeSet<Formula> {
        closure_of(self.pos.iter().chain(&self.neg))
    }

    pub fn is_complete(&self) -> bool {
        self.closure().len() == self.formulae().len()
    }

    /// `X⊤` is on the negative side: this node is a last state.
    pub fn is_terminal(&self) -> bool {
        self.neg.contains(&next_top())
    }

    /// The conjunction of the positive formulae and the negated negative
    /// ones, in canonical order; `⊤` for the empty pair.
    pub fn literal_interpretation(&self) -> Formula {
        encode::conjoin(
            self.pos
                .iter()
                .cloned()
                .chain(self.neg.iter().cloned().map(encode::neg)),
        )
    }

    /// Obligations this node places on the next state.
    pub fn step(&self) -> Pnp {
        let mut next = Pnp::default();
        for f in &self.pos {
            match f {
                Formula::Next(body) => {
                    next.pos.insert(body.as_ref().clone());
                }
                Formula::WeakUntil(_, rhs) if self.neg.contains(rhs) => {
                    next.pos.insert(f.clone());
                }
                _ => {}
            }
        }
        for f in &self.neg {
            match f {
                Formula::Next(body) => {
                    next.neg.insert(body.as_ref().clone());
                }
                Formula::WeakUntil(lhs, _) if self.pos.contains(lhs) => {
                    next.neg.insert(f.clone());
                }
                _ => {}
            }
        }
        next
    }

    /// `self ⪯ other`: both sides are subsets.
    pub fn extended_by(&self, other: &Pnp) -> bool {
        self.pos.is_subset(&other.pos) && self.neg.is_subset(&other.neg)
    }

    /// Syntactic consistency of a complete pair.
    ///
    /// Rejects pairs that are contradictory on their face: a formula on
    /// both sides, `⊥` positive, an implication placed against its
    /// operands, a weak until placed against its unrolling, or, at a last
    /// state, a positive strong next or a weak until not reduced to the
    /// disjunction of its operands.
    pub fn locally_consistent(&self) -> Result<bool, PnpError> {
        let closure = self.closure();
        let assigned = self.formulae();
        if closure.len() != assigned.len() {
            return Err(PnpError::Incomplete {
                missing: closure.len() - assigned.len(),
            });
        }
        if !self.pos.is_disjoint(&self.neg) || self.pos.contains(&Formula::Bottom) {
            return Ok(false);
        }
        let terminal = self.is_terminal();
        let holds = |f: &Formula| self.pos.contains(f);
        for f in &closure {
            let ok = match f {
                Formula::Implies(lhs, rhs) => holds(f) == (!holds(lhs) || holds(rhs)),
                Formula::WeakUntil(lhs, rhs) => {
                    let lower = holds(rhs) || (terminal && holds(lhs));
                    let upper = holds(rhs) || holds(lhs);
                    // lower ⟹ f ⟹ upper
                    (!lower || holds(f)) && (!holds(f) || upper)
                }
                Formula::Next(_) => !(terminal && holds(f)),
                Formula::Var(_) | Formula::Bottom => true,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All complete, locally consistent extensions over this pair's
    /// closure, in canonical order.
    pub fn completions(&self) -> BTreeSet<Pnp> {
        let mut out = BTreeSet::new();
        if !self.pos.is_disjoint(&self.neg) {
            return out;
        }
        let mut order: Vec<Formula> = self.closure().into_iter().collect();
        // operands before the formulae built from them
        order.sort_by_cached_key(|f| f.size());
        let next_top = next_top();
        let ends = if order.contains(&next_top) {
            vec![false, true]
        } else {
            vec![false]
        };
        for terminal in ends {
            let mut search = CompletionSearch {
                seed: self,
                order: &order,
                terminal,
                next_top: &next_top,
                pos: BTreeSet::new(),
                out: &mut out,
            };
            search.extend(0);
        }
        out
    }
}

struct CompletionSearch<'a> {
    seed: &'a Pnp,
    order: &'a [Formula],
    terminal: bool,
    next_top: &'a Formula,
    pos: BTreeSet<Formula>,
    out: &'a mut BTreeSet<Pnp>,
}

impl CompletionSearch<'_> {
    /// Allowed truth values for `f`, given everything smaller is placed.
    fn choices(&self, f: &Formula) -> (bool, bool) {
        let holds = |g: &Formula| self.pos.contains(g);
        let (can_false, can_true) = match f {
            Formula::Var(_) => (true, true),
            Formula::Bottom => (true, false),
            Formula::Implies(lhs, rhs) => {
                let v = !holds(lhs) || holds(rhs);
                (!v, v)
            }
            Formula::Next(_) if f == self.next_top => (self.terminal, !self.terminal),
            Formula::Next(_) => (true, !self.terminal),
            Formula::WeakUntil(lhs, rhs) => {
                if holds(rhs) {
                    (false, true)
                } else if !holds(lhs) {
                    (true, false)
                } else if self.terminal {
                    (false, true)
                } else {
                    (true, true)
                }
            }
        };
        (
            can_false && !self.seed.pos.contains(f),
            can_true && !self.seed.neg.contains(f),
        )
    }

    fn extend(&mut self, at: usize) {
        let Some(f) = self.order.get(at) else {
            let pos = self.pos.clone();
            let neg = self
                .order
                .iter()
                .filter(|f| !pos.contains(*f))
                .cloned()
                .collect();
            self.out.insert(Pnp { pos, neg });
            return;
        };
        let (can_false, can_true) = self.choices(f);
        if can_false {
            self.extend(at + 1);
        }
        if can_true {
            self.pos.insert(f.clone());
            self.extend(at + 1);
            self.pos.remove(f);
        }
    }
}

impl fmt::Debug for Pnp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Pnp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |set: &BTreeSet<Formula>| set.iter().map(render).collect::<Vec<_>>().join(", ");
        write!(f, "({{{}}}, {{{}}})", side(&self.pos), side(&self.neg))
    }
}

/// Reference implementation of [`Pnp::completions`]: enumerate every
/// two-way assignment of the unplaced closure formulae and filter.
/// Exponential in the closure size; for cross-checking only.
pub fn completions_by_enumeration(seed: &Pnp) -> BTreeSet<Pnp> {
    let closure = seed.closure();
    let free: Vec<&Formula> = closure
        .iter()
        .filter(|f| !seed.pos.contains(*f) && !seed.neg.contains(*f))
        .collect();
    assert!(free.len() < 24, "closure too large to enumerate");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << free.len()) {
        let mut candidate = seed.clone();
        for (j, f) in free.iter().enumerate() {
            if mask & (1 << j) != 0 {
                candidate.pos.insert((*f).clone());
            } else {
                candidate.neg.insert((*f).clone());
            }
        }
        if candidate.locally_consistent() == Ok(true) {
            out.insert(candidate);
        }
    }
    out
}
