//! Linear temporal logic over finite traces.
//!
//! * [`formula`]: the five-constructor core syntax, concrete-syntax parser
//!   and printer, derived connectives and the axiom corpus.
//! * [`semantics`]: finite traces and formula evaluation.
//! * [`oracle`]: exhaustive bounded-model search, used as ground truth.
//! * [`pnp`]: positive-negative pairs, their step and completions.
//! * [`tableau`]: the proof-graph decision procedure for satisfiability
//!   and validity, with witness extraction and DOT output.
//! * [`cli`]: the `ltlf` command-line front end.

pub mod cli;
pub mod formula;
pub mod generate;
pub mod oracle;
pub mod pnp;
pub mod semantics;
pub mod tableau;

pub use formula::{parse, render, Formula};
pub use pnp::Pnp;
pub use semantics::{Trace, Valuation};
pub use tableau::{decide_sat, decide_valid, SatVerdict, ValidityVerdict};
