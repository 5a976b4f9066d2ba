//! Restricted containers: the container's contents must stay
//! order-isomorphic to a member of a class Av(B) at all times. Pops take any
//! of the leftmost `s` entries; a bypass sends the next input entry straight
//! to the output. The machine is not symbol oblivious, so the container
//! stores actual values.

use crate::classes::{enumerate_av, enumerate_class_by_oracle, ClassSpec};
use crate::error::Error;
use crate::hash::FastSet;
use crate::perm::{contains_values, Permutation};
use crate::Result;

use super::{check_key_capacity, StateKey};

/// An Av(B)-container with `pop_width`-wide pops.
#[derive(Debug, Clone)]
pub struct CMachine {
    container: ClassSpec,
    pop_width: usize,
}

impl CMachine {
    pub fn new(container: ClassSpec, pop_width: usize) -> Result<Self> {
        if pop_width == 0 {
            return Err(Error::Parse("pop width must be at least 1".into()));
        }
        Ok(CMachine {
            container,
            pop_width,
        })
    }

    pub fn container(&self) -> &ClassSpec {
        &self.container
    }

    pub fn pop_width(&self) -> usize {
        self.pop_width
    }

    /// Can the machine transform `input` into `target`?
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
        check_key_capacity(input.len(), input.len())?;
        let mut search = Search {
            machine: self,
            input: input.values(),
            target: target.values(),
            budget,
            seen: FastSet::default(),
            container: Vec::with_capacity(input.len()),
        };
        search.dfs(0)
    }

    /// Generation: identity in, `π` out. This is the machine use the basis
    /// theorem speaks about.
    pub fn generates(&self, pi: &Permutation, budget: usize) -> Result<bool> {
        self.transforms(&Permutation::identity(pi.len()), pi, budget)
    }

    pub fn sorts(&self, pi: &Permutation, budget: usize) -> Result<bool> {
        self.transforms(pi, &Permutation::identity(pi.len()), budget)
    }
}

struct Search<'a> {
    machine: &'a CMachine,
    input: &'a [u16],
    target: &'a [u16],
    budget: usize,
    seen: FastSet<u128>,
    /// Container contents, leftmost first.
    container: Vec<u16>,
}

impl Search<'_> {
    fn key(&self, pos: usize) -> u128 {
        let mut key = StateKey::new(pos);
        for &v in &self.container {
            key.push_value(v);
        }
        key.finish()
    }

    fn dfs(&mut self, pos: usize) -> Result<bool> {
        let out = pos - self.container.len();
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
        let needed = self.target[out];

        // Emitting the needed entry is committed when possible: the move
        // commutes ahead of interleaved pushes (the container only shrinks,
        // and the class is closed downward), so a failing subtree rules out
        // every delayed schedule too. At most one emission applies, since
        // the needed value sits either in the container or in the input.
        let window = self.machine.pop_width.min(self.container.len());
        if let Some(i) = self.container[..window].iter().position(|&v| v == needed) {
            let v = self.container.remove(i);
            let found = self.dfs(pos)?;
            self.container.insert(i, v);
            return Ok(found);
        }
        if pos < self.input.len() && self.input[pos] == needed {
            return self.dfs(pos + 1); // bypass
        }

        if pos < self.input.len() {
            let v = self.input[pos];
            // push anywhere that keeps the container inside its class
            for i in 0..=self.container.len() {
                self.container.insert(i, v);
                if self.container_legal() && self.dfs(pos + 1)? {
                    return Ok(true);
                }
                self.container.remove(i);
            }
        }
        Ok(false)
    }

    fn container_legal(&self) -> bool {
        self.machine
            .container()
            .basis()
            .iter()
            .all(|b| !contains_values(b.values(), &self.container))
    }
}

/// The per-length generatable sets of a (C, s)-machine, enumerated by
/// one-point extensions with the machine search as the membership oracle
/// (generatable sets of these machines are closed downward).
///
/// For `s = 1` the result must coincide with Av(1 ⊖ B); for `s ≥ 2` the
/// search is the only route.
pub fn c_machine_class(
    basis: &ClassSpec,
    pop_width: usize,
    n_max: usize,
    budget: usize,
) -> Result<Vec<Vec<Permutation>>> {
    let machine = CMachine::new(basis.clone(), pop_width)?;
    enumerate_class_by_oracle(|p| machine.generates(p, budget), n_max)
}

/// The class Av(1 ⊖ B): what the basis theorem says the Av(B)-machine
/// (with single pops) generates.
pub fn one_skew_basis_class(basis: &ClassSpec) -> ClassSpec {
    let one = Permutation::identity(1);
    ClassSpec::new(
        basis
            .basis()
            .iter()
            .map(|b| one.skew_sum(b))
            .collect(),
    )
}

/// Convenience: members of Av(1 ⊖ B) by length.
pub fn basis_theorem_class(basis: &ClassSpec, n_max: usize) -> Result<Vec<Vec<Permutation>>> {
    enumerate_av(&one_skew_basis_class(basis), n_max)
}
