//! Sorting machines: greedy stack sort and West iteration, stacks in series,
//! Atkinson's (r,s)-stacks, restricted containers, and bounded priority
//! queues.
//!
//! Every reachability search here memoizes packed machine states and carries
//! an explicit node budget; blowing the budget is a reported outcome
//! ([`crate::Error::BudgetExceeded`]), never a silent wrong answer.

mod cmachine;
mod constructions;
mod pq;
mod rs;
mod series;
mod stack;

pub use cmachine::{basis_theorem_class, c_machine_class, one_skew_basis_class, CMachine};
pub use constructions::{
    amr_ordered_basis_instance, knuth_horizontal, murphy_unsortable, murphy_vertical,
    two_ordered_stacks_report, OrderedStacksReport,
};
pub use pq::{bounded_pq_sortable, pq_pairs_count, pq_transformable};
pub use rs::RsStack;
pub use series::{sorting_generating_bridge, BridgeReport, SeriesMachine};
pub use stack::{avoids_barred_35241, greedy_stack_sort, west_sortable};

use std::fmt;

use crate::classes::ClassSpec;
use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

/// Default per-search node budget.
pub const DEFAULT_BUDGET: usize = 4_000_000;

/// The machine models handled here.
#[derive(Debug, Clone)]
pub enum MachineSpec {
    /// `t ≥ 1` unrestricted stacks in series.
    StackSeries { stacks: usize },
    /// Stacks in series whose contents must stay increasing top to bottom.
    OrderedStackSeries { stacks: usize },
    /// Push into any of the top `r` positions, pop any of the top `s`.
    RsStack { r: usize, s: usize },
    /// Container constrained to the class Av(B), popping any of the
    /// leftmost `pop_width` entries, with bypass.
    CMachine {
        basis: ClassSpec,
        pop_width: usize,
    },
    /// Priority queue holding at most `capacity` entries.
    BoundedPq { capacity: usize },
}

impl MachineSpec {
    /// Can the machine transform `π` into the identity?
    pub fn can_sort(&self, pi: &Permutation, budget: usize) -> Result<bool> {
        match self {
            MachineSpec::StackSeries { stacks } => {
                SeriesMachine::plain(*stacks)?.sorts(pi, budget)
            }
            MachineSpec::OrderedStackSeries { stacks } => {
                SeriesMachine::ordered(*stacks)?.sorts(pi, budget)
            }
            MachineSpec::RsStack { r, s } => RsStack::new(*r, *s)?.sorts(pi, budget),
            MachineSpec::CMachine { basis, pop_width } => {
                CMachine::new(basis.clone(), *pop_width)?.sorts(pi, budget)
            }
            MachineSpec::BoundedPq { capacity } => {
                if *capacity == 0 {
                    return Err(Error::Parse("capacity must be at least 1".into()));
                }
                Ok(bounded_pq_sortable(pi, *capacity))
            }
        }
    }

    /// Can the machine transform the identity into `π`?
    pub fn can_generate(&self, pi: &Permutation, budget: usize) -> Result<bool> {
        match self {
            MachineSpec::StackSeries { stacks } => {
                SeriesMachine::plain(*stacks)?.generates(pi, budget)
            }
            MachineSpec::OrderedStackSeries { stacks } => {
                SeriesMachine::ordered(*stacks)?.generates(pi, budget)
            }
            MachineSpec::RsStack { r, s } => RsStack::new(*r, *s)?.generates(pi, budget),
            MachineSpec::CMachine { basis, pop_width } => {
                CMachine::new(basis.clone(), *pop_width)?.generates(pi, budget)
            }
            MachineSpec::BoundedPq { .. } => Err(Error::Parse(
                "generation with a bounded priority queue is not modeled".into(),
            )),
        }
    }
}

/// One atomic machine move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Take the next input entry and push it into container `container`
    /// (1-based).
    Push { container: usize },
    /// Pop the entry at `position` (1-based from the top/left) of container
    /// `container`; it moves to the next container, or to the output if this
    /// is the last one.
    Pop { container: usize, position: usize },
    /// Next input entry straight to the output.
    Bypass,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Push { container } => write!(f, "push {container}"),
            Move::Pop {
                container,
                position,
            } => write!(f, "pop {container} {position}"),
            Move::Bypass => write!(f, "bypass"),
        }
    }
}

/// A replayable list of machine moves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OperationSequence {
    pub moves: Vec<Move>,
}

impl OperationSequence {
    /// One move per line, `push k` / `pop k p` / `bypass`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for m in &self.moves {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut moves = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("bad move {line:?}"));
            let mv = match fields[0] {
                "push" if fields.len() == 2 => Move::Push {
                    container: fields[1].parse().map_err(|_| bad())?,
                },
                "pop" if fields.len() == 3 => Move::Pop {
                    container: fields[1].parse().map_err(|_| bad())?,
                    position: fields[2].parse().map_err(|_| bad())?,
                },
                "bypass" if fields.len() == 1 => Move::Bypass,
                _ => return Err(bad()),
            };
            moves.push(mv);
        }
        Ok(OperationSequence { moves })
    }

    /// Replays the moves on `t` stacks in series fed with `input`, checking
    /// legality of every step, and returns the output permutation.
    pub fn replay_series(
        &self,
        input: &Permutation,
        t: usize,
        ordered: bool,
    ) -> Result<Permutation> {
        let n = input.len();
        let mut stacks: Vec<Vec<u16>> = vec![Vec::new(); t];
        let mut output: Vec<u16> = Vec::new();
        let mut pos = 0usize;
        let illegal = |msg: String| Error::Parse(format!("illegal replay: {msg}"));
        for mv in &self.moves {
            match *mv {
                Move::Push { container } => {
                    if container != 1 {
                        return Err(illegal("series machines push only to stack 1".into()));
                    }
                    if pos >= n {
                        return Err(illegal("input exhausted".into()));
                    }
                    let v = input.values()[pos];
                    if ordered && stacks[0].last().is_some_and(|&top| v > top) {
                        return Err(illegal(format!("push {v} breaks ordering")));
                    }
                    stacks[0].push(v);
                    pos += 1;
                }
                Move::Pop {
                    container,
                    position,
                } => {
                    if position != 1 {
                        return Err(illegal("stacks pop only from the top".into()));
                    }
                    if container == 0 || container > t {
                        return Err(illegal(format!("no stack {container}")));
                    }
                    let v = stacks[container - 1]
                        .pop()
                        .ok_or_else(|| illegal(format!("stack {container} is empty")))?;
                    if container == t {
                        output.push(v);
                    } else {
                        if ordered && stacks[container].last().is_some_and(|&top| v > top) {
                            return Err(illegal(format!("transfer of {v} breaks ordering")));
                        }
                        stacks[container].push(v);
                    }
                }
                Move::Bypass => {
                    return Err(illegal("series machines have no bypass".into()));
                }
            }
        }
        if pos < n || stacks.iter().any(|s| !s.is_empty()) {
            return Err(illegal("machine did not drain".into()));
        }
        Permutation::new(output)
    }
}

/// Packs a machine state into a `u128` key: a tag field followed by 5-bit
/// symbols (values `1..=30`, separator 31). Errors out early when a state
/// could not fit.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StateKey {
    bits: u128,
    shift: u32,
}

pub(crate) const KEY_SEPARATOR: u128 = 31;

impl StateKey {
    pub(crate) fn new(tag: usize) -> Self {
        StateKey {
            bits: tag as u128,
            shift: 8,
        }
    }

    #[inline]
    pub(crate) fn push_value(&mut self, v: u16) {
        debug_assert!((1..=30).contains(&v));
        self.bits |= (v as u128) << self.shift;
        self.shift += 5;
    }

    #[inline]
    pub(crate) fn push_separator(&mut self) {
        self.bits |= KEY_SEPARATOR << self.shift;
        self.shift += 5;
    }

    #[inline]
    pub(crate) fn finish(self) -> u128 {
        self.bits
    }
}

/// Checks that states of a machine run will fit the packed key: tag byte
/// plus `symbols` 5-bit fields.
pub(crate) fn check_key_capacity(n: usize, symbols: usize) -> Result<()> {
    if n > 30 || 8 + 5 * symbols > 128 {
        return Err(Error::BoundExceeded {
            what: "machine state encoding",
            requested: n.max(symbols),
            limit: 24,
        });
    }
    Ok(())
}
