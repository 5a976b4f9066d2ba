//! Atkinson's (r,s)-stack: push the next input entry into any of the top `r`
//! positions, pop any of the top `s` entries.

use crate::error::Error;
use crate::hash::FastSet;
use crate::perm::Permutation;
use crate::Result;

use super::{check_key_capacity, StateKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsStack {
    r: usize,
    s: usize,
}

impl RsStack {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::Parse("r and s must be at least 1".into()));
        }
        Ok(RsStack { r, s })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Can the stack transform `input` into `target`?
    pub fn transforms(
        &self,
        input: &Permutation,
        target: &Permutation,
        budget: usize,
    ) -> Result<bool> {
        if input.len() != target.len() {
            return Err(Error::LengthMismatch {
                left: input.len(),
                right: target.len(),
            });
        }
        check_key_capacity(input.len(), input.len() + 1)?;
        let mut search = Search {
            r: self.r,
            s: self.s,
            input: input.values(),
            target: target.values(),
            budget,
            seen: FastSet::default(),
            stack: Vec::with_capacity(input.len()),
        };
        search.dfs(0)
    }

    pub fn sorts(&self, pi: &Permutation, budget: usize) -> Result<bool> {
        self.transforms(pi, &Permutation::identity(pi.len()), budget)
    }

    pub fn generates(&self, pi: &Permutation, budget: usize) -> Result<bool> {
        self.transforms(&Permutation::identity(pi.len()), pi, budget)
    }
}

struct Search<'a> {
    r: usize,
    s: usize,
    input: &'a [u16],
    target: &'a [u16],
    budget: usize,
    seen: FastSet<u128>,
    /// Stack contents, top first.
    stack: Vec<u16>,
}

impl Search<'_> {
    fn key(&self, pos: usize) -> u128 {
        let mut key = StateKey::new(pos);
        for &v in &self.stack {
            key.push_value(v);
        }
        key.finish()
    }

    fn dfs(&mut self, pos: usize) -> Result<bool> {
        let out = pos - self.stack.len();
        if out == self.target.len() {
            return Ok(true);
        }
        if !self.seen.insert(self.key(pos)) {
            return Ok(false);
        }
        if self.seen.len() > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        // pop: some entry among the top s equals the next target entry.
        // Popping commutes ahead of any interleaved moves (positions of the
        // other entries only improve), so the move is committed: if the
        // subtree fails, no delayed schedule could have succeeded either.
        let needed = self.target[out];
        let window = self.s.min(self.stack.len());
        if let Some(i) = self.stack[..window].iter().position(|&v| v == needed) {
            let v = self.stack.remove(i);
            let found = self.dfs(pos)?;
            self.stack.insert(i, v);
            return Ok(found);
        }
        // push: next input entry into any of the top r positions
        if pos < self.input.len() {
            let v = self.input[pos];
            let slots = self.r.min(self.stack.len() + 1);
            for i in 0..slots {
                self.stack.insert(i, v);
                if self.dfs(pos + 1)? {
                    return Ok(true);
                }
                self.stack.remove(i);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::{SeriesMachine, DEFAULT_BUDGET};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn rs(r: usize, s: usize) -> RsStack {
        RsStack::new(r, s).unwrap()
    }

    #[test]
    fn one_one_is_the_ordinary_stack() {
        let single = SeriesMachine::plain(1).unwrap();
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                assert_eq!(
                    rs(1, 1).sorts(&perm, DEFAULT_BUDGET).unwrap(),
                    single.sorts(&perm, DEFAULT_BUDGET).unwrap(),
                    "{perm}"
                );
            }
        }
    }

    #[test]
    fn two_two_counts() {
        let mut counts = Vec::new();
        for n in 1..=6 {
            let c = Permutation::all(n)
                .filter(|perm| rs(2, 2).sorts(perm, DEFAULT_BUDGET).unwrap())
                .count();
            counts.push(c);
        }
        assert_eq!(counts, vec![1, 2, 6, 24, 116, 628]);
    }

    #[test]
    fn theorem_basis_elements_unsortable() {
        for b in [
            "23451", "23541", "32451", "32541", "245163", "246153", "425163", "426153",
        ] {
            assert!(!rs(2, 2).sorts(&p(b), DEFAULT_BUDGET).unwrap(), "{b}");
        }
    }

    #[test]
    fn wide_enough_sorts_everything() {
        for n in 0..=5 {
            for perm in Permutation::all(n) {
                assert!(rs(n.max(1), 1).sorts(&perm, DEFAULT_BUDGET).unwrap());
            }
        }
    }

    #[test]
    fn rs_duality_via_sorting_dual() {
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                for r in 1..=3 {
                    for s in 1..=3 {
                        assert_eq!(
                            rs(r, s).sorts(&perm, DEFAULT_BUDGET).unwrap(),
                            rs(s, r).sorts(&perm.sorting_dual(), DEFAULT_BUDGET).unwrap(),
                            "{perm} r={r} s={s}"
                        );
                    }
                }
            }
        }
    }
}
