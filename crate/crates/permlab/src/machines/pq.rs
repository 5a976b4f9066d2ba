//! Priority queues: unbounded transformability between permutation pairs,
//! and sorting with bounded capacity.
//!
//! A priority queue pushes the next input entry or pops its current minimum.
//! Pops are forced: the popped minimum must be the next entry of the target,
//! and popping early never hurts (it can be commuted ahead of any pushes),
//! so the greedy schedule below decides transformability exactly.

use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

/// Can an unbounded priority queue transform `π` into `σ`?
pub fn pq_transformable(pi: &Permutation, sigma: &Permutation) -> bool {
    if pi.len() != sigma.len() {
        return false;
    }
    run_pq(pi.values(), sigma.values(), usize::MAX)
}

/// Can a priority queue holding at most `capacity` entries sort `π`?
pub fn bounded_pq_sortable(pi: &Permutation, capacity: usize) -> bool {
    let target: Vec<u16> = (1..=pi.len() as u16).collect();
    run_pq(pi.values(), &target, capacity)
}

fn run_pq(input: &[u16], target: &[u16], capacity: usize) -> bool {
    // heap kept as a sorted-descending vec: min at the back
    let mut heap: Vec<u16> = Vec::new();
    let mut pos = 0;
    for &want in target {
        while heap.last() != Some(&want) {
            if pos >= input.len() || heap.len() >= capacity {
                return false;
            }
            let v = input[pos];
            pos += 1;
            let at = heap.partition_point(|&x| x > v);
            heap.insert(at, v);
        }
        heap.pop();
    }
    true
}

/// The number of pairs `(π, σ)` of length-`n` permutations a priority queue
/// can transform into one another.
pub fn pq_pairs_count(n: usize) -> Result<u64> {
    if n > 6 {
        return Err(Error::BoundExceeded {
            what: "priority queue pair counting (scans S_n × S_n)",
            requested: n,
            limit: 6,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut count = 0;
    for pi in &perms {
        for sigma in &perms {
            if pq_transformable(pi, sigma) {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn pair_counts_follow_cayley_formula() {
        // (n+1)^{n−1}
        assert_eq!(pq_pairs_count(1).unwrap(), 1);
        assert_eq!(pq_pairs_count(2).unwrap(), 3);
        assert_eq!(pq_pairs_count(3).unwrap(), 16);
        assert_eq!(pq_pairs_count(4).unwrap(), 125);
        assert_eq!(pq_pairs_count(5).unwrap(), 1296);
    }

    #[test]
    fn transform_examples() {
        assert!(pq_transformable(&p("21"), &p("21")));
        assert!(pq_transformable(&p("21"), &p("12")));
        assert!(!pq_transformable(&p("12"), &p("21")));
        assert!(pq_transformable(&Permutation::empty(), &Permutation::empty()));
    }

    #[test]
    fn unbounded_capacity_sorts_everything() {
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                assert!(bounded_pq_sortable(&perm, n.max(1)));
            }
        }
    }

    #[test]
    fn bounded_capacity_is_max_drop() {
        for n in 0..=7 {
            for perm in Permutation::all(n) {
                let drop = perm.statistics().max_drop;
                for k in 1..=4usize {
                    assert_eq!(
                        bounded_pq_sortable(&perm, k + 1),
                        drop <= k,
                        "{perm} capacity {}",
                        k + 1
                    );
                }
            }
        }
    }

    #[test]
    fn bounded_matches_avoidance_of_skewed_full_row() {
        // capacity k+1 sorts Av(S_{k+1} ⊖ 1): every pattern of length k+2
        // ending in its minimum
        let k = 2;
        let basis: Vec<Permutation> = Permutation::all(k + 1)
            .map(|q| q.skew_sum(&Permutation::identity(1)))
            .collect();
        let spec = crate::classes::ClassSpec::new(basis);
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                assert_eq!(
                    bounded_pq_sortable(&perm, k + 1),
                    spec.avoids(&perm),
                    "{perm}"
                );
            }
        }
    }
}
