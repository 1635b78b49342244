//! Formulae of linear temporal logic over finite traces.
//!
//! Only five constructors exist: variables, falsum, implication, strong
//! next and weak until. Every other connective (negation, conjunction,
//! `end`, weak next, always, eventually, strong until, ...) is an encoding
//! into these five and is expanded as soon as it is built, see
//! [`encode`].

mod corpus;
pub mod encode;
mod parser;
mod render;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use corpus::axiom_corpus;
pub use encode::{encode, EncodeError, Encoding};
pub use parser::{parse, ParseError};

/// A core formula.
///
/// Children are reference counted so that formulae can be shared freely
/// between tableau nodes and threads.
#[derive(Clone)]
pub enum Formula {
    Var(Arc<str>),
    Bottom,
    Implies(Arc<Formula>, Arc<Formula>),
    /// Strong next: false at the last state.
    Next(Arc<Formula>),
    WeakUntil(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn var(name: impl AsRef<str>) -> Formula {
        Formula::Var(Arc::from(name.as_ref()))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Arc::new(lhs), Arc::new(rhs))
    }

    pub fn next(body: Formula) -> Formula {
        Formula::Next(Arc::new(body))
    }

    pub fn weak_until(lhs: Formula, rhs: Formula) -> Formula {
        Formula::WeakUntil(Arc::new(lhs), Arc::new(rhs))
    }

    /// Number of constructor nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bottom => 1,
            Formula::Next(body) => 1 + body.size(),
            Formula::Implies(lhs, rhs) | Formula::WeakUntil(lhs, rhs) => {
                1 + lhs.size() + rhs.size()
            }
        }
    }

    /// Longest root-to-leaf path, counting constructors.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bottom => 1,
            Formula::Next(body) => 1 + body.depth(),
            Formula::Implies(lhs, rhs) | Formula::WeakUntil(lhs, rhs) => {
                1 + lhs.depth().max(rhs.depth())
            }
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Formula::Var(_) => 0,
            Formula::Bottom => 1,
            Formula::Implies(..) => 2,
            Formula::Next(_) => 3,
            Formula::WeakUntil(..) => 4,
        }
    }
}

fn cmp_shared(a: &Arc<Formula>, b: &Arc<Formula>) -> Ordering {
    if Arc::ptr_eq(a, b) {
        Ordering::Equal
    } else {
        a.as_ref().cmp(b.as_ref())
    }
}

impl Ord for Formula {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Formula::Var(a), Formula::Var(b)) => a.cmp(b),
            (Formula::Bottom, Formula::Bottom) => Ordering::Equal,
            (Formula::Next(a), Formula::Next(b)) => cmp_shared(a, b),
            (Formula::Implies(a1, b1), Formula::Implies(a2, b2))
            | (Formula::WeakUntil(a1, b1), Formula::WeakUntil(a2, b2)) => {
                cmp_shared(a1, a2).then_with(|| cmp_shared(b1, b2))
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank().hash(state);
        match self {
            Formula::Var(name) => name.hash(state),
            Formula::Bottom => {}
            Formula::Next(body) => body.hash(state),
            Formula::Implies(lhs, rhs) | Formula::WeakUntil(lhs, rhs) => {
                lhs.hash(state);
                rhs.hash(state);
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render::render(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::render(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Renders the core constructors with minimal parentheses.
///
/// The output never re-sugars: `⊤` comes back as `false -> false`.
pub fn render(f: &Formula) -> String {
    render::render(f)
}

/// Subformulae relevant at the current instant. Does not descend under
/// strong next.
pub fn closure(f: &Formula) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    extend_closure(f, &mut out);
    out
}

/// Pointwise union of [`closure`] over a set of formulae.
pub fn closure_of<'a, I>(formulae: I) -> BTreeSet<Formula>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut out = BTreeSet::new();
    for f in formulae {
        extend_closure(f, &mut out);
    }
    out
}

fn extend_closure(f: &Formula, out: &mut BTreeSet<Formula>) {
    if !out.insert(f.clone()) {
        // already present, and so are its closure members
        return;
    }
    match f {
        Formula::Var(_) | Formula::Bottom | Formula::Next(_) => {}
        Formula::Implies(lhs, rhs) | Formula::WeakUntil(lhs, rhs) => {
            extend_closure(lhs, out);
            extend_closure(rhs, out);
        }
    }
}

/// All variable names occurring anywhere in `f`, under next included.
pub fn free_vars(f: &Formula) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    collect_vars(f, &mut out);
    out
}

fn collect_vars(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Var(name) => {
            out.insert(name.to_string());
        }
        Formula::Bottom => {}
        Formula::Next(body) => collect_vars(body, out),
        Formula::Implies(lhs, rhs) | Formula::WeakUntil(lhs, rhs) => {
            collect_vars(lhs, out);
            collect_vars(rhs, out);
        }
    }
}

/// Every distinct subformula, including those under next.
pub fn subformulae(f: &Formula) -> BTreeSet<Formula> {
    fn go(f: &Formula, out: &mut BTreeSet<Formula>) {
        if !out.insert(f.clone()) {
            return;
        }
        match f {
            Formula::Var(_) | Formula::Bottom => {}
            Formula::Next(body) => go(body, out),
            Formula::Implies(lhs, rhs) | Formula::WeakUntil(lhs, rhs) => {
                go(lhs, out);
                go(rhs, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(f, &mut out);
    out
}
