//! Integer partitions and principal downsets in Young's lattice.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::RankSequence;
use crate::error::Error;
use crate::Result;

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The `m × n` rectangle `(m, m, …, m)` with `n` parts.
    pub fn rectangle(m: u32, n: usize) -> Self {
        Partition {
            parts: vec![m; if m == 0 { 0 } else { n }],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn cells(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Componentwise containment `μ ≤ λ` (Young's lattice order).
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "e" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// Cell-count bound for the downset computation.
pub const PARTITION_CELL_BOUND: u32 = 60;

/// Rank sequence of the principal downset of `λ` in Young's lattice: the
/// number of partitions `μ ≤ λ`, graded by `|μ|`.
pub fn partition_downset_rank(lambda: &Partition) -> Result<RankSequence> {
    let total = lambda.cells();
    if total > PARTITION_CELL_BOUND {
        return Err(Error::BoundExceeded {
            what: "partition downset cells",
            requested: total as usize,
            limit: PARTITION_CELL_BOUND as usize,
        });
    }
    // tail[i][cap] counts (μ_{i+1}, μ_{i+2}, …) graded by sum, with
    // cap ≥ μ_{i+1} ≥ μ_{i+2} ≥ … and μ_j ≤ λ_j throughout
    let rows = lambda.parts.len();
    let total = total as usize;
    let cap_max = lambda.parts.first().copied().unwrap_or(0) as usize;
    let zero_poly = || vec![BigUint::zero(); total + 1];
    let mut tail: Vec<Vec<BigUint>> = (0..=cap_max)
        .map(|_| {
            let mut p = zero_poly();
            p[0] = BigUint::one();
            p
        })
        .collect();
    for i in (0..rows).rev() {
        let lam_i = lambda.parts[i] as usize;
        let mut next: Vec<Vec<BigUint>> = Vec::with_capacity(cap_max + 1);
        for cap in 0..=cap_max {
            let hi = cap.min(lam_i);
            let mut p = zero_poly();
            p[0] = BigUint::one(); // μ_i = 0 ends the partition
            for m in 1..=hi {
                for (s, c) in tail[m].iter().enumerate() {
                    if !c.is_zero() && s + m <= total {
                        p[s + m] += c;
                    }
                }
            }
            next.push(p);
        }
        tail = next;
    }
    Ok(RankSequence::new(tail[cap_max].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn stanton_partition_is_not_rank_unimodal() {
        let ranks = partition_downset_rank(&lam("8,8,4,4")).unwrap();
        assert_eq!(
            ranks.as_u64().unwrap(),
            vec![
                1, 1, 2, 3, 5, 6, 9, 11, 15, 17, 21, 23, 27, 28, 31, 30, 31, 27, 24, 18, 14, 8,
                5, 2, 1
            ]
        );
        let profile = ranks.profile();
        assert!(!profile.unimodal);
        assert!(profile.first_half_increasing);
    }

    #[test]
    fn tiny_downsets() {
        assert_eq!(
            partition_downset_rank(&lam("1")).unwrap().as_u64().unwrap(),
            vec![1, 1]
        );
        assert_eq!(
            partition_downset_rank(&Partition::empty()).unwrap().as_u64().unwrap(),
            vec![1]
        );
        // Gaussian binomial [4 choose 2]: downset of the 2×2 rectangle
        assert_eq!(
            partition_downset_rank(&Partition::rectangle(2, 2))
                .unwrap()
                .as_u64()
                .unwrap(),
            vec![1, 1, 2, 1, 1]
        );
    }

    #[test]
    fn matches_direct_enumeration() {
        // directly enumerate contained partitions for a few shapes
        fn brute(lambda: &Partition) -> Vec<u64> {
            let total = lambda.cells() as usize;
            let mut counts = vec![0u64; total + 1];
            let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
            while let Some(cur) = stack.pop() {
                let sum: u32 = cur.iter().sum();
                counts[sum as usize] += 1;
                let row = cur.len();
                if row < lambda.parts.len() {
                    let hi = lambda.parts[row].min(cur.last().copied().unwrap_or(u32::MAX));
                    for m in 1..=hi {
                        let mut next = cur.clone();
                        next.push(m);
                        stack.push(next);
                    }
                }
            }
            counts
        }
        for shape in ["3,2,1", "4,4", "5,3,3,1", "2,2,2,2", "6,1,1"] {
            let l = lam(shape);
            assert_eq!(
                partition_downset_rank(&l).unwrap().as_u64().unwrap(),
                brute(&l),
                "λ={l}"
            );
        }
    }

    #[test]
    fn rectangles_are_rank_unimodal() {
        for m in 1..=4u32 {
            for n in 1..=4usize {
                let ranks = partition_downset_rank(&Partition::rectangle(m, n)).unwrap();
                assert!(ranks.profile().unimodal, "{m}×{n}: {ranks}");
            }
        }
    }

    #[test]
    fn cell_bound_guard() {
        assert!(matches!(
            partition_downset_rank(&Partition::rectangle(8, 8)),
            Err(Error::BoundExceeded { .. })
        ));
        assert!("1,2".parse::<Partition>().is_err());
    }
}
