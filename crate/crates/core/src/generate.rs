//! Seeded random formulae for differential testing.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::formula::encode;
use crate::formula::Formula;

/// Random formula source over a fixed variable set.
///
/// Formulae are drawn over the surface connectives (negation, `&`, `|`,
/// `->`, `X`, `N`, `G`, `F`, `W`, `U`, `true`, `false`, `end`) and
/// expanded into the core. `max_depth` bounds the surface nesting depth.
pub struct FormulaGenerator {
    rng: ChaCha8Rng,
    vars: Vec<String>,
    max_depth: usize,
}

impl FormulaGenerator {
    pub fn new(seed: u64, vars: &[&str], max_depth: usize) -> FormulaGenerator {
        assert!(!vars.is_empty(), "need at least one variable");
        FormulaGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            max_depth: max_depth.max(1),
        }
    }

    fn leaf(&mut self) -> Formula {
        match self.rng.gen_range(0..10) {
            0 => encode::top(),
            1 => Formula::Bottom,
            2 => encode::end(),
            _ => {
                let i = self.rng.gen_range(0..self.vars.len());
                Formula::var(&self.vars[i])
            }
        }
    }

    fn gen(&mut self, depth: usize) -> Formula {
        if depth <= 1 || self.rng.gen_bool(0.2) {
            return self.leaf();
        }
        let d = depth - 1;
        match self.rng.gen_range(0..11) {
            0 => encode::neg(self.gen(d)),
            1 => Formula::next(self.gen(d)),
            2 => encode::wk_next(self.gen(d)),
            3 => encode::always(self.gen(d)),
            4 => encode::eventually(self.gen(d)),
            5 => encode::and(self.gen(d), self.gen(d)),
            6 => encode::or(self.gen(d), self.gen(d)),
            7 => Formula::implies(self.gen(d), self.gen(d)),
            8 | 9 => Formula::weak_until(self.gen(d), self.gen(d)),
            _ => encode::until(self.gen(d), self.gen(d)),
        }
    }

    pub fn formula(&mut self) -> Formula {
        let depth = self.max_depth;
        self.gen(depth)
    }
}

impl Iterator for FormulaGenerator {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        Some(self.formula())
    }
}
