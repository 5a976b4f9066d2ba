//! Downsets and intervals in the pattern containment order, compositions
//! under two orders, Young's lattice downsets, and shape predicates on
//! integer sequences.

mod composition;
mod partition;

pub use composition::{
    comp_contains, comp_downset_enumerate, comp_downset_rank, composition_to_layered,
    layered_to_composition, sagan_polynomial, survey_composition_subword, Composition,
    CompositionOrder,
};
pub use partition::{partition_downset_rank, Partition};

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Error;
use crate::hash::FastSet;
use crate::perm::{contains, Permutation};
use crate::Result;

/// Number of elements at each rank of a ranked poset, indexed from rank 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSequence {
    counts: Vec<BigUint>,
}

impl RankSequence {
    pub fn new(counts: Vec<BigUint>) -> Self {
        RankSequence { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        RankSequence {
            counts: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn as_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| u64::try_from(c).ok()).collect()
    }

    pub fn profile(&self) -> ShapeProfile {
        shape_profile(&self.counts)
    }
}

impl fmt::Display for RankSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Shape predicates of a nonnegative integer sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeProfile {
    /// Weakly increases to a maximum, then weakly decreases.
    pub unimodal: bool,
    /// `a_k² ≥ a_{k−1}·a_{k+1}` across the positive support (false if a zero
    /// sits between positive entries).
    pub log_concave: bool,
    /// `a_n² ≤ a_{n−1}·a_{n+1}` for all `n ≥ 1`.
    pub log_convex_from_1: bool,
    /// Weakly increasing through index `⌈(len−1)/2⌉` (the "first half").
    pub first_half_increasing: bool,
}

pub fn shape_profile(seq: &[BigUint]) -> ShapeProfile {
    ShapeProfile {
        unimodal: is_unimodal(seq),
        log_concave: is_log_concave(seq),
        log_convex_from_1: is_log_convex(seq),
        first_half_increasing: is_first_half_increasing(seq),
    }
}

/// Convenience entry point for plain integer slices.
pub fn shape_profile_u64(seq: &[u64]) -> ShapeProfile {
    let big: Vec<BigUint> = seq.iter().map(|&x| BigUint::from(x)).collect();
    shape_profile(&big)
}

fn is_unimodal(seq: &[BigUint]) -> bool {
    let mut descending = false;
    for w in seq.windows(2) {
        if w[1] > w[0] {
            if descending {
                return false;
            }
        } else if w[1] < w[0] {
            descending = true;
        }
    }
    true
}

fn is_log_concave(seq: &[BigUint]) -> bool {
    let first = seq.iter().position(|x| !x.is_zero());
    let last = seq.iter().rposition(|x| !x.is_zero());
    let (Some(first), Some(last)) = (first, last) else {
        return true; // all zero
    };
    if seq[first..=last].iter().any(|x| x.is_zero()) {
        return false; // internal zero
    }
    seq[first..=last]
        .windows(3)
        .all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

fn is_log_convex(seq: &[BigUint]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] <= &w[0] * &w[2])
}

fn is_first_half_increasing(seq: &[BigUint]) -> bool {
    if seq.is_empty() {
        return true;
    }
    // weakly increasing through the middle rank ⌈(len−1)/2⌉
    let mid = (seq.len() - 1).div_ceil(2);
    seq.windows(2).take(mid).all(|w| w[0] <= w[1])
}

/// Largest permutation length accepted by the downset enumerations. Downsets
/// near this bound run to millions of patterns, so the guard is a memory
/// guard.
pub const DOWNSET_LENGTH_BOUND: usize = 20;

/// The principal downset of `π`: for each `0 ≤ k ≤ |π|`, the distinct
/// patterns of length `k` contained in `π`, sorted.
///
/// Level `k` is obtained by one-point deletions of level `k+1`, so the cost
/// is proportional to the downset size rather than to `2^ن`.
pub fn pattern_downset(pi: &Permutation) -> Result<Vec<Vec<Permutation>>> {
    let n = pi.len();
    if n > DOWNSET_LENGTH_BOUND {
        return Err(Error::BoundExceeded {
            what: "pattern downset length",
            requested: n,
            limit: DOWNSET_LENGTH_BOUND,
        });
    }
    let mut levels: Vec<Vec<Permutation>> = vec![Vec::new(); n + 1];
    levels[n] = vec![pi.clone()];
    for k in (0..n).rev() {
        let mut set: FastSet<Permutation> = FastSet::default();
        for parent in &levels[k + 1] {
            for i in 0..parent.len() {
                set.insert(parent.delete(i));
            }
        }
        let mut level: Vec<Permutation> = set.into_iter().collect();
        level.sort();
        levels[k] = level;
    }
    Ok(levels)
}

/// Rank sequence of the principal downset of `π` (counts only).
///
/// This walks all `2^n` subsequences with an O(1) incremental encoding of
/// each pattern, so it is fast enough to survey every permutation of a given
/// length. Requires `|π| ≤ 14` for the packed encoding; longer permutations
/// fall back to the set-based enumeration.
pub fn pattern_downset_ranks(pi: &Permutation) -> Result<RankSequence> {
    let n = pi.len();
    if n > DOWNSET_LENGTH_BOUND {
        return Err(Error::BoundExceeded {
            what: "pattern downset length",
            requested: n,
            limit: DOWNSET_LENGTH_BOUND,
        });
    }
    if n > 14 {
        let levels = pattern_downset(pi)?;
        return Ok(RankSequence::new(
            levels.iter().map(|l| BigUint::from(l.len())).collect(),
        ));
    }
    let mut scratch = DownsetScratch::default();
    let counts = downset_rank_counts(pi.values(), &mut scratch);
    Ok(RankSequence::new(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

/// Reusable buffers for the packed rank counting; the survey loop runs it
/// millions of times.
#[derive(Default)]
pub struct DownsetScratch {
    code: Vec<u64>,
    vmask: Vec<u32>,
    buckets: Vec<Vec<u64>>,
}

/// Counts distinct patterns of each length inside `values` (`n ≤ 14`).
///
/// Each subset of positions is encoded by the sequence of insertion ranks of
/// its entries read left to right; two subsets carry the same pattern exactly
/// when their rank sequences agree, so deduplication is a sort over packed
/// `u64` words.
fn downset_rank_counts(values: &[u16], scratch: &mut DownsetScratch) -> Vec<u64> {
    let n = values.len();
    debug_assert!(n <= 14);
    let total = 1usize << n;
    scratch.code.resize(total, 0);
    scratch.vmask.resize(total, 0);
    if scratch.buckets.len() < n + 1 {
        scratch.buckets.resize_with(n + 1, Vec::new);
    }
    for b in scratch.buckets.iter_mut() {
        b.clear();
    }
    scratch.code[0] = 0;
    scratch.vmask[0] = 0;
    for s in 1..total {
        let h = (usize::BITS - 1 - s.leading_zeros()) as usize;
        let rest = s & !(1 << h);
        let vbit = 1u32 << (values[h] - 1);
        let below = scratch.vmask[rest] & (vbit - 1);
        let r = below.count_ones() as u64;
        let k = (s as u32).count_ones() as usize;
        scratch.vmask[s] = scratch.vmask[rest] | vbit;
        scratch.code[s] = scratch.code[rest] | (r << (4 * (k - 1)));
        scratch.buckets[k].push(scratch.code[s]);
    }
    let mut counts = Vec::with_capacity(n + 1);
    counts.push(1); // the empty pattern
    for k in 1..=n {
        let bucket = &mut scratch.buckets[k];
        bucket.sort_unstable();
        bucket.dedup();
        counts.push(bucket.len() as u64);
    }
    counts
}

/// Rank sequence of the interval `[σ, π]`: the number of `τ` with
/// `σ ≤ τ ≤ π` at each length from `|σ|` to `|π|`.
pub fn interval_rank_sequence(sigma: &Permutation, pi: &Permutation) -> Result<RankSequence> {
    if !contains(sigma, pi) {
        return Err(Error::NotComparable);
    }
    let levels = pattern_downset(pi)?;
    let counts = levels[sigma.len()..]
        .iter()
        .map(|level| {
            BigUint::from(
                level
                    .iter()
                    .filter(|tau| contains(sigma, tau))
                    .count(),
            )
        })
        .collect();
    Ok(RankSequence::new(counts))
}

/// One counterexample candidate found by a survey.
#[derive(Debug, Clone)]
pub struct DownsetCounterexample {
    pub permutation: Permutation,
    pub ranks: RankSequence,
}

/// Outcome of a downset-unimodality survey.
#[derive(Debug, Clone)]
pub struct DownsetSurvey {
    pub scanned: u64,
    /// Non-unimodal rank sequences: candidate refutations of the
    /// conjecture, to be reported rather than asserted away.
    pub counterexamples: Vec<DownsetCounterexample>,
    /// Rank sequences that fail to increase through the middle rank. That
    /// much is a theorem, so anything here is an implementation bug.
    pub first_half_violations: Vec<DownsetCounterexample>,
}

/// Scans every permutation of length `≤ max_len` and reports any
/// non-unimodal downset rank sequence. Finding one would be a discovery, not
/// an error, so nothing here asserts. Permutations are processed in parallel
/// batches; the batch size only affects speed.
pub fn survey_downset_unimodality(max_len: usize) -> Result<DownsetSurvey> {
    if max_len > 12 {
        return Err(Error::BoundExceeded {
            what: "downset unimodality survey length",
            requested: max_len,
            limit: 12,
        });
    }
    const BATCH: usize = 1 << 14;
    let mut scanned = 0u64;
    let mut counterexamples = Vec::new();
    let mut first_half_violations = Vec::new();
    for n in 0..=max_len {
        let mut iter = Permutation::all(n);
        loop {
            let batch: Vec<Permutation> = iter.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            scanned += batch.len() as u64;
            let mut found: Vec<(bool, DownsetCounterexample)> = batch
                .par_iter()
                .map_init(DownsetScratch::default, |scratch, p| {
                    let counts = downset_rank_counts(p.values(), scratch);
                    let profile = shape_profile_u64(&counts);
                    if profile.unimodal && profile.first_half_increasing {
                        None
                    } else {
                        Some((
                            profile.unimodal,
                            DownsetCounterexample {
                                permutation: p.clone(),
                                ranks: RankSequence::from_u64(&counts),
                            },
                        ))
                    }
                })
                .flatten()
                .collect();
            for (unimodal, case) in found.drain(..) {
                if unimodal {
                    first_half_violations.push(case);
                } else {
                    counterexamples.push(case);
                }
            }
        }
    }
    Ok(DownsetSurvey {
        scanned,
        counterexamples,
        first_half_violations,
    })
}

/// Same check over a deterministic pseudo-random sample of permutations of
/// one fixed length.
pub fn survey_downset_unimodality_sampled(
    len: usize,
    sample: usize,
    seed: u64,
) -> Result<DownsetSurvey> {
    if len > 14 {
        return Err(Error::BoundExceeded {
            what: "downset unimodality survey length",
            requested: len,
            limit: 14,
        });
    }
    let mut state = seed | 1;
    let mut next = move || {
        // xorshift64*
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state.wrapping_mul(0x2545_f491_4f6c_dd1d)
    };
    let perms: Vec<Permutation> = (0..sample)
        .map(|_| {
            let mut values: Vec<u16> = (1..=len as u16).collect();
            for i in (1..values.len()).rev() {
                let j = (next() % (i as u64 + 1)) as usize;
                values.swap(i, j);
            }
            Permutation::new(values).unwrap()
        })
        .collect();
    let flagged: Vec<(bool, DownsetCounterexample)> = perms
        .par_iter()
        .map_init(DownsetScratch::default, |scratch, p| {
            let counts = downset_rank_counts(p.values(), scratch);
            let profile = shape_profile_u64(&counts);
            if profile.unimodal && profile.first_half_increasing {
                None
            } else {
                Some((
                    profile.unimodal,
                    DownsetCounterexample {
                        permutation: p.clone(),
                        ranks: RankSequence::from_u64(&counts),
                    },
                ))
            }
        })
        .flatten()
        .collect();
    let mut counterexamples = Vec::new();
    let mut first_half_violations = Vec::new();
    for (unimodal, case) in flagged {
        if unimodal {
            first_half_violations.push(case);
        } else {
            counterexamples.push(case);
        }
    }
    Ok(DownsetSurvey {
        scanned: sample as u64,
        counterexamples,
        first_half_violations,
    })
}
