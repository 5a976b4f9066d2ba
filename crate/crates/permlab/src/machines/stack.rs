//! The greedy one-pass stack sort, West iteration, and the barred-pattern
//! characterization of West-2-stack-sortable permutations.

use crate::perm::Permutation;

/// One pass of greedy stack sorting: pop while the top is smaller than the
/// next input entry, then push; drain at the end.
pub fn greedy_stack_sort(pi: &Permutation) -> Permutation {
    let mut out: Vec<u16> = Vec::with_capacity(pi.len());
    let mut stack: Vec<u16> = Vec::new();
    for &x in pi.values() {
        while stack.last().is_some_and(|&top| top < x) {
            out.push(stack.pop().unwrap());
        }
        stack.push(x);
    }
    while let Some(v) = stack.pop() {
        out.push(v);
    }
    Permutation::new(out).expect("stack sorting permutes the entries")
}

/// Is `s^t(π)` the identity?
pub fn west_sortable(pi: &Permutation, t: usize) -> bool {
    let mut q = pi.clone();
    for _ in 0..t {
        if q.is_identity() {
            return true;
        }
        q = greedy_stack_sort(&q);
    }
    q.is_identity()
}

/// Avoidance of the barred pattern 3̄5 241 (bar on the 5): every occurrence
/// of 3241 must extend to an occurrence of 35241, i.e. some entry larger
/// than all four sits between the first two.
pub fn avoids_barred_35241(pi: &Permutation) -> bool {
    let v = pi.values();
    let n = v.len();
    if n < 4 {
        return true;
    }
    // scan all index quadruples forming 3241: v[d] < v[b] < v[a] < v[c]
    for a in 0..n {
        for b in a + 1..n {
            if v[b] >= v[a] {
                continue;
            }
            // largest entry strictly between positions a and b
            let between_max = v[a + 1..b].iter().copied().max().unwrap_or(0);
            for c in b + 1..n {
                if v[c] <= v[a] {
                    continue;
                }
                // the extension entry must beat the whole occurrence, and
                // v[c] is its maximum
                if between_max > v[c] {
                    continue; // every occurrence through (a, b, c, ·) extends
                }
                for d in c + 1..n {
                    if v[d] < v[b] {
                        return false; // bare 3241 with no room for the 5
                    }
                }
            }
        }
    }
    true
}
