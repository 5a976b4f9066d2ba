//! Compositions under the subword and componentwise orders, their downset
//! rank sequences, and the bijection with layered permutations.
//!
//! The rank of a composition is its sum (not its number of parts), matching
//! the length of the corresponding layered permutation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{shape_profile_u64, RankSequence};
use crate::error::Error;
use crate::perm::{contains, Permutation};
use crate::poly::IntPolynomial;
use crate::Result;

/// A composition: a finite sequence of positive integer parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "e" {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in composition")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Composition::new(parts)
    }
}

/// The two containment orders on compositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionOrder {
    /// `u ≤ w` iff there are indices `i_1 < ⋯ < i_k` with `u(j) ≤ w(i_j)`.
    /// This is the image of pattern containment under the layered bijection.
    Subword,
    /// `u ≤ w` iff `u` is at most as long and `u(i) ≤ w(i)` positionwise.
    Componentwise,
}

impl CompositionOrder {
    pub fn name(self) -> &'static str {
        match self {
            CompositionOrder::Subword => "subword",
            CompositionOrder::Componentwise => "componentwise",
        }
    }
}

impl FromStr for CompositionOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<CompositionOrder> {
        match s {
            "subword" => Ok(CompositionOrder::Subword),
            "componentwise" => Ok(CompositionOrder::Componentwise),
            _ => Err(Error::Parse(format!("unknown composition order {s:?}"))),
        }
    }
}

/// Containment of `u` in `w` under the chosen order.
pub fn comp_contains(u: &Composition, w: &Composition, order: CompositionOrder) -> bool {
    match order {
        CompositionOrder::Componentwise => {
            u.len() <= w.len() && u.parts.iter().zip(&w.parts).all(|(a, b)| a <= b)
        }
        CompositionOrder::Subword => {
            // greedy embedding is leftmost-optimal
            let mut i = 0;
            for &part in &u.parts {
                while i < w.len() && w.parts[i] < part {
                    i += 1;
                }
                if i == w.len() {
                    return false;
                }
                i += 1;
            }
            true
        }
    }
}

/// Sum bound for the downset rank computations; matches the range the
/// subword-order conjecture has been machine-verified over.
pub const COMPOSITION_SUM_BOUND: u32 = 34;

/// Rank sequence (by sum) of the principal downset of `w` under the chosen
/// order, counting distinct contained compositions.
pub fn comp_downset_rank(w: &Composition, order: CompositionOrder) -> Result<RankSequence> {
    let total = w.sum();
    if total > COMPOSITION_SUM_BOUND {
        return Err(Error::BoundExceeded {
            what: "composition downset sum",
            requested: total as usize,
            limit: COMPOSITION_SUM_BOUND as usize,
        });
    }
    let counts = match order {
        CompositionOrder::Componentwise => componentwise_rank_counts(w),
        CompositionOrder::Subword => subword_rank_counts(w),
    };
    Ok(RankSequence::new(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

/// Componentwise downsets are prefix products: a contained composition is any
/// `u(1)⋯u(k)` with `k ≤ ℓ` and `u(i) ≤ w(i)`, so distinctness is automatic.
fn componentwise_rank_counts(w: &Composition) -> Vec<u64> {
    let total = w.sum() as usize;
    let mut counts = vec![0u64; total + 1];
    counts[0] = 1;
    let mut prefix = vec![0u64; total + 1];
    prefix[0] = 1;
    for &part in &w.parts {
        let mut next = vec![0u64; total + 1];
        for (s, &c) in prefix.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for v in 1..=part as usize {
                next[s + v] += c;
            }
        }
        for (s, &c) in next.iter().enumerate() {
            counts[s] += c;
        }
        prefix = next;
    }
    counts
}

/// Distinct subwords graded by sum, via canonical leftmost embeddings.
///
/// Each contained composition has a unique greedy (leftmost) embedding, and
/// an embedding `i_1 < ⋯ < i_k` of values `u(1), …, u(k)` is greedy exactly
/// when no position strictly between `i_{j−1}` and `i_j` could host `u(j)`.
/// The DP therefore counts (composition, greedy embedding) pairs, which is a
/// bijection with the downset.
fn subword_rank_counts(w: &Composition) -> Vec<u64> {
    let total = w.sum() as usize;
    let ell = w.len();
    let mut counts = vec![0u64; total + 1];
    counts[0] = 1; // the empty composition
    // ending[i][s]: compositions with greedy embedding ending at position i
    let mut ending: Vec<Vec<u64>> = vec![vec![0u64; total + 1]; ell];
    let mut prefix_max = 0u32;
    for i in 0..ell {
        let wi = w.parts[i];
        // start here: a single part v, legal iff no earlier position fits it
        for v in (prefix_max + 1)..=wi {
            ending[i][v as usize] += 1;
        }
        // extend a composition whose embedding ends at i' < i by a part v at
        // i; greedy iff v exceeds every part strictly between i' and i
        let mut gap_max = 0u32;
        for ip in (0..i).rev() {
            if gap_max >= wi {
                break; // gap_max only grows as ip moves left
            }
            for v in (gap_max + 1)..=wi {
                for s in 0..=total.saturating_sub(v as usize) {
                    let c = ending[ip][s];
                    if c != 0 {
                        ending[i][s + v as usize] += c;
                    }
                }
            }
            gap_max = gap_max.max(w.parts[ip]);
        }
        for (s, &c) in ending[i].iter().enumerate() {
            counts[s] += c;
        }
        prefix_max = prefix_max.max(wi);
    }
    counts
}

/// Brute-force downset enumeration for both orders: every contained
/// composition, grouped by sum. Exponential; guarded to small sums. Kept as
/// the independent reference for the rank DPs and for listing members.
pub fn comp_downset_enumerate(
    w: &Composition,
    order: CompositionOrder,
) -> Result<Vec<Vec<Composition>>> {
    let total = w.sum();
    if total > 18 {
        return Err(Error::BoundExceeded {
            what: "composition downset enumeration sum",
            requested: total as usize,
            limit: 18,
        });
    }
    let mut by_sum: Vec<Vec<Composition>> = vec![Vec::new(); total as usize + 1];
    let mut stack = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        let sum: u32 = cur.iter().sum();
        for part in 1..=(total - sum) {
            let mut next = cur.clone();
            next.push(part);
            let cand = Composition { parts: next.clone() };
            if comp_contains(&cand, w, order) {
                stack.push(next);
            }
        }
        by_sum[sum as usize].push(Composition { parts: cur });
    }
    for level in &mut by_sum {
        level.sort();
        level.dedup();
    }
    Ok(by_sum)
}

/// Rank-generating polynomial of the componentwise downset, by the
/// head-plus-tail recurrence `f_w = 1 + (x + ⋯ + x^{w(1)}) · f_{w(2)⋯w(ℓ)}`.
pub fn sagan_polynomial(w: &Composition) -> IntPolynomial {
    let mut f = IntPolynomial::one();
    for &part in w.parts.iter().rev() {
        let run = IntPolynomial::new(
            std::iter::once(num_bigint::BigInt::zero())
                .chain((0..part).map(|_| num_bigint::BigInt::one()))
                .collect(),
        );
        f = IntPolynomial::one().add(&run.mul(&f));
    }
    f
}

/// The layered permutation with consecutive decreasing layers of the given
/// lengths.
pub fn composition_to_layered(c: &Composition) -> Permutation {
    let mut values: Vec<u16> = Vec::with_capacity(c.sum() as usize);
    let mut base = 0u16;
    for &part in &c.parts {
        let part = part as u16;
        values.extend((base + 1..=base + part).rev());
        base += part;
    }
    Permutation::new(values).expect("layer construction yields a bijection")
}

/// Inverse of [`composition_to_layered`]: the layer lengths of a layered
/// permutation, or an error if the permutation is not layered (layered means
/// avoiding both 231 and 312).
pub fn layered_to_composition(pi: &Permutation) -> Result<Composition> {
    let p231: Permutation = "231".parse().unwrap();
    let p312: Permutation = "312".parse().unwrap();
    if contains(&p231, pi) || contains(&p312, pi) {
        return Err(Error::NotLayered);
    }
    // maximal decreasing runs are the layers
    let mut parts = Vec::new();
    let mut run = 0u32;
    let values = pi.values();
    for i in 0..values.len() {
        run += 1;
        if i + 1 == values.len() || values[i + 1] > values[i] {
            parts.push(run);
            run = 0;
        }
    }
    Ok(Composition { parts })
}

/// Scans every composition with sum `≤ max_sum` for a non-unimodal subword
/// downset rank sequence. Reports candidates rather than asserting.
#[derive(Debug, Clone)]
pub struct CompositionSurvey {
    pub scanned: u64,
    pub counterexamples: Vec<(Composition, RankSequence)>,
}

pub fn survey_composition_subword(max_sum: u32) -> Result<CompositionSurvey> {
    if max_sum > 22 {
        return Err(Error::BoundExceeded {
            what: "composition subword survey sum",
            requested: max_sum as usize,
            limit: 22,
        });
    }
    use rayon::prelude::*;
    let comps = compositions_of_sum_at_most(max_sum);
    let scanned = comps.len() as u64;
    let counterexamples: Vec<(Composition, RankSequence)> = comps
        .par_iter()
        .filter_map(|w| {
            let counts = subword_rank_counts(w);
            if shape_profile_u64(&counts).unimodal {
                None
            } else {
                Some((w.clone(), RankSequence::from_u64(&counts)))
            }
        })
        .collect();
    Ok(CompositionSurvey {
        scanned,
        counterexamples,
    })
}

fn compositions_of_sum_at_most(max_sum: u32) -> Vec<Composition> {
    let mut out = vec![Composition::empty()];
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        let sum: u32 = cur.iter().sum();
        for part in 1..=(max_sum - sum) {
            let mut next = cur.clone();
            next.push(part);
            out.push(Composition { parts: next.clone() });
            stack.push(next);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_orders_differ() {
        // (2) embeds into (1,2) as a subword but not componentwise
        assert!(comp_contains(&c("2"), &c("1,2"), CompositionOrder::Subword));
        assert!(!comp_contains(&c("2"), &c("1,2"), CompositionOrder::Componentwise));
        assert!(comp_contains(&Composition::empty(), &c("3,1"), CompositionOrder::Subword));
        assert!(comp_contains(
            &Composition::empty(),
            &Composition::empty(),
            CompositionOrder::Componentwise
        ));
    }

    #[test]
    fn rank_examples() {
        let r = comp_downset_rank(&c("1,1"), CompositionOrder::Subword).unwrap();
        assert_eq!(r.as_u64().unwrap(), vec![1, 1, 1]);
        for order in [CompositionOrder::Subword, CompositionOrder::Componentwise] {
            let r = comp_downset_rank(&c("2"), order).unwrap();
            assert_eq!(r.as_u64().unwrap(), vec![1, 1, 1]);
        }
        // (1,2): the two orders disagree
        let sub = comp_downset_rank(&c("1,2"), CompositionOrder::Subword).unwrap();
        let comp = comp_downset_rank(&c("1,2"), CompositionOrder::Componentwise).unwrap();
        assert_eq!(sub.as_u64().unwrap(), vec![1, 1, 2, 1]);
        assert_eq!(comp.as_u64().unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn rank_dps_match_enumeration() {
        // every composition of sum <= 9, both orders
        for w in compositions_of_sum_at_most(9) {
            for order in [CompositionOrder::Subword, CompositionOrder::Componentwise] {
                let dp = comp_downset_rank(&w, order).unwrap();
                let brute = comp_downset_enumerate(&w, order).unwrap();
                let brute_counts: Vec<u64> = brute.iter().map(|l| l.len() as u64).collect();
                assert_eq!(dp.as_u64().unwrap(), brute_counts, "w={w} {:?}", order.name());
            }
        }
        // a spread of larger compositions where the greedy-embedding DP has
        // to dedup seriously
        for w in [
            "2,3,2,3,2", "4,1,4,1,4", "1,2,3,4,2", "3,3,3,3", "2,2,2,2,2,2", "5,2,5",
            "1,1,4,1,1,4", "2,4,2,4,2",
        ] {
            let w: Composition = w.parse().unwrap();
            let dp = comp_downset_rank(&w, CompositionOrder::Subword).unwrap();
            let brute = comp_downset_enumerate(&w, CompositionOrder::Subword).unwrap();
            let brute_counts: Vec<u64> = brute.iter().map(|l| l.len() as u64).collect();
            assert_eq!(dp.as_u64().unwrap(), brute_counts, "w={w}");
        }
    }

    #[test]
    fn monotone_parts_relate_the_orders() {
        // weakly decreasing: the two downsets coincide; weakly increasing:
        // the subword ranks match the reversed composition componentwise
        for w in compositions_of_sum_at_most(14) {
            if w.is_weakly_decreasing() {
                assert_eq!(
                    comp_downset_rank(&w, CompositionOrder::Subword).unwrap(),
                    comp_downset_rank(&w, CompositionOrder::Componentwise).unwrap(),
                    "w={w}"
                );
            }
            if w.is_weakly_increasing() {
                assert_eq!(
                    comp_downset_rank(&w, CompositionOrder::Subword).unwrap(),
                    comp_downset_rank(&w.reversed(), CompositionOrder::Componentwise).unwrap(),
                    "w={w}"
                );
            }
        }
    }

    #[test]
    fn sagan_matches_componentwise_ranks() {
        assert_eq!(sagan_polynomial(&Composition::empty()), IntPolynomial::one());
        assert_eq!(sagan_polynomial(&c("2")), IntPolynomial::from_i64(&[1, 1, 1]));
        assert_eq!(sagan_polynomial(&c("1,1")), IntPolynomial::from_i64(&[1, 1, 1]));
        for w in compositions_of_sum_at_most(14) {
            let poly = sagan_polynomial(&w);
            let ranks = comp_downset_rank(&w, CompositionOrder::Componentwise).unwrap();
            let mut counts = ranks.as_u64().unwrap();
            while counts.len() > 1 && counts.last() == Some(&0) {
                counts.pop();
            }
            let coeffs: Vec<u64> = poly
                .coeffs()
                .iter()
                .map(|b| u64::try_from(b).unwrap())
                .collect();
            assert_eq!(coeffs, counts, "w={w}");
        }
    }

    #[test]
    fn layered_bridge_examples() {
        assert_eq!(composition_to_layered(&c("3,1,4")), p("32148765"));
        assert_eq!(composition_to_layered(&c("1")), p("1"));
        assert_eq!(composition_to_layered(&c("2,2")), p("2143"));
        assert_eq!(layered_to_composition(&p("32148765")).unwrap(), c("3,1,4"));
        assert_eq!(layered_to_composition(&Permutation::empty()).unwrap(), Composition::empty());
        assert!(layered_to_composition(&p("231")).is_err());
        assert!(layered_to_composition(&p("312")).is_err());
    }

    #[test]
    fn layered_bridge_roundtrips() {
        for w in compositions_of_sum_at_most(8) {
            let pi = composition_to_layered(&w);
            assert_eq!(layered_to_composition(&pi).unwrap(), w);
        }
    }

    #[test]
    fn layered_downset_ranks_match_subword_ranks() {
        use crate::order::pattern_downset_ranks;
        for w in compositions_of_sum_at_most(9) {
            let pi = composition_to_layered(&w);
            let perm_ranks = pattern_downset_ranks(&pi).unwrap();
            let comp_ranks = comp_downset_rank(&w, CompositionOrder::Subword).unwrap();
            assert_eq!(perm_ranks, comp_ranks, "w={w}");
        }
    }

    #[test]
    fn subword_survey_runs_clean() {
        let survey = survey_composition_subword(12).unwrap();
        assert!(survey.counterexamples.is_empty());
        assert_eq!(survey.scanned, 1 << 12); // compositions of sum ≤ 12
    }

    #[test]
    fn sum_bound_guard() {
        let w = Composition::new(vec![35]).unwrap();
        assert!(matches!(
            comp_downset_rank(&w, CompositionOrder::Subword),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
