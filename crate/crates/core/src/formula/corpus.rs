//! Axiom and derived-theorem schemes of the finite-trace proof system,
//! instantiated into concrete formulae for validity testing.
//!
//! Inference rules (weak-next stepping, induction, always-necessitation)
//! are not formulae and do not appear here.

use super::encode::*;
use super::Formula;

struct Scheme {
    name: &'static str,
    arity: usize,
    build: fn(&[Formula]) -> Formula,
}

const SCHEMES: &[Scheme] = &[
    // Propositional tautologies, via a complete Hilbert basis.
    Scheme {
        name: "TautWeaken",
        arity: 2,
        build: |m| Formula::implies(m[0].clone(), Formula::implies(m[1].clone(), m[0].clone())),
    },
    Scheme {
        name: "TautDistrib",
        arity: 3,
        build: |m| {
            let (a, b, c) = (&m[0], &m[1], &m[2]);
            Formula::implies(
                Formula::implies(a.clone(), Formula::implies(b.clone(), c.clone())),
                Formula::implies(
                    Formula::implies(a.clone(), b.clone()),
                    Formula::implies(a.clone(), c.clone()),
                ),
            )
        },
    },
    Scheme {
        name: "TautContra",
        arity: 2,
        build: |m| {
            Formula::implies(
                Formula::implies(neg(m[0].clone()), neg(m[1].clone())),
                Formula::implies(m[1].clone(), m[0].clone()),
            )
        },
    },
    Scheme {
        name: "WkNextDistr",
        arity: 2,
        build: |m| {
            iff(
                wk_next(Formula::implies(m[0].clone(), m[1].clone())),
                Formula::implies(wk_next(m[0].clone()), wk_next(m[1].clone())),
            )
        },
    },
    Scheme {
        name: "EndNextContra",
        arity: 1,
        build: |m| Formula::implies(end(), neg(Formula::next(m[0].clone()))),
    },
    Scheme {
        name: "Finite",
        arity: 0,
        build: |_| eventually_end(),
    },
    Scheme {
        name: "WkUntilUnroll",
        arity: 2,
        build: |m| {
            let w = Formula::weak_until(m[0].clone(), m[1].clone());
            iff(w.clone(), or(m[1].clone(), and(m[0].clone(), wk_next(w))))
        },
    },
    Scheme {
        name: "NextContra",
        arity: 0,
        build: |_| neg(and(next_top(), Formula::next(Formula::Bottom))),
    },
    Scheme {
        name: "CommNegNext",
        arity: 1,
        build: |m| {
            iff(
                neg(Formula::next(m[0].clone())),
                or(end(), Formula::next(neg(m[0].clone()))),
            )
        },
    },
    Scheme {
        name: "NextWkNext",
        arity: 1,
        build: |m| {
            iff(
                wk_next(m[0].clone()),
                or(Formula::next(m[0].clone()), end()),
            )
        },
    },
    Scheme {
        name: "WkNextNegEnd",
        arity: 1,
        build: |m| {
            Formula::implies(
                and(neg(end()), wk_next(neg(m[0].clone()))),
                neg(wk_next(m[0].clone())),
            )
        },
    },
    Scheme {
        name: "WkNextDistConj",
        arity: 2,
        build: |m| {
            iff(
                wk_next(and(m[0].clone(), m[1].clone())),
                and(wk_next(m[0].clone()), wk_next(m[1].clone())),
            )
        },
    },
    Scheme {
        name: "WkNextNeg",
        arity: 1,
        build: |m| Formula::implies(neg(wk_next(m[0].clone())), wk_next(neg(m[0].clone()))),
    },
    Scheme {
        name: "AlwaysUnroll",
        arity: 1,
        build: |m| {
            iff(
                always(m[0].clone()),
                and(m[0].clone(), wk_next(always(m[0].clone()))),
            )
        },
    },
];

/// Instantiates every scheme at every choice, with repetition, of
/// `instantiations` for its metavariables.
///
/// Closed schemes appear exactly once. With an empty instantiation list
/// only the closed schemes are produced.
pub fn axiom_corpus(instantiations: &[Formula]) -> Vec<(String, Formula)> {
    let mut out = Vec::new();
    for scheme in SCHEMES {
        if scheme.arity > 0 && instantiations.is_empty() {
            continue;
        }
        let mut choice = vec![0usize; scheme.arity];
        loop {
            let args: Vec<Formula> = choice.iter().map(|&i| instantiations[i].clone()).collect();
            out.push((scheme.name.to_string(), (scheme.build)(&args)));
            // odometer increment
            let mut slot = 0;
            loop {
                if slot == choice.len() {
                    break;
                }
                choice[slot] += 1;
                if choice[slot] < instantiations.len() {
                    break;
                }
                choice[slot] = 0;
                slot += 1;
            }
            if slot == choice.len() {
                break;
            }
        }
    }
    out
}
