//! Structural constructions around stack sorting: the horizontal and
//! vertical juxtapositions, the inflation that builds unsortable
//! permutations from smaller ones, and the basis family for two ordered
//! stacks in series.

use num_bigint::BigUint;

use crate::classes::{count_av, ClassSpec};
use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

use super::SeriesMachine;

/// Canonical horizontal juxtaposition `[ρ∘π | σ]`: the first `|π|` entries
/// are order-isomorphic to the complement of `π` and sit above the last
/// `|σ|` entries, which are order-isomorphic to `σ`. When `π` and `σ` are
/// sortable by `t` stacks in series, this is sortable by `t+1`.
pub fn knuth_horizontal(pi: &Permutation, sigma: &Permutation) -> Permutation {
    pi.complement().skew_sum(sigma)
}

/// Canonical vertical juxtaposition: the greatest `|π|` values form the
/// reverse of `π`, the smallest `|σ|` values form `σ`. The sorting dual of
/// [`knuth_horizontal`] applied to sorting duals.
pub fn murphy_vertical(pi: &Permutation, sigma: &Permutation) -> Permutation {
    pi.reverse().skew_sum(sigma)
}

/// The inflation `β[β^r, …, β^r, 1]` (with `|β| − 1` copies of the reversed
/// block): if `β` defeats `t` stacks in series, the result defeats `t+1`.
/// Its length is `|β|² − |β| + 1`.
pub fn murphy_unsortable(beta: &Permutation) -> Permutation {
    let k = beta.len();
    if k == 0 {
        return Permutation::empty();
    }
    let reversed = beta.reverse();
    let mut blocks = vec![reversed; k - 1];
    blocks.push(Permutation::identity(1));
    let result = beta.inflate(&blocks).expect("block count matches skeleton");
    debug_assert_eq!(result.len(), k * k - k + 1);
    result
}

/// The length-`2k` member of the basis family for the class sortable by two
/// ordered stacks in series: `2, (2k−1), 4, 1, 6, 3, …, (2k), (2k−3)`, i.e.
/// the pairs `(2j, 2j−3)` for `j = 2..=k` after the opening pair.
pub fn amr_ordered_basis_instance(k: usize) -> Result<Permutation> {
    if k < 2 {
        return Err(Error::Parse("the family starts at k = 2".into()));
    }
    let mut values: Vec<u16> = Vec::with_capacity(2 * k);
    values.push(2);
    values.push(2 * k as u16 - 1);
    for j in 2..=k as u16 {
        values.push(2 * j);
        values.push(2 * j - 3);
    }
    Permutation::new(values)
}

/// Comparison of the two-ordered-stacks sortable counts against the
/// 1342-avoiding counts, per length.
#[derive(Debug, Clone)]
pub struct OrderedStacksReport {
    /// `(n, sortable count, |Av_n(1342)|)`.
    pub counts: Vec<(usize, u64, BigUint)>,
    pub all_match: bool,
}

/// Counts permutations sortable by two ordered stacks in series for each
/// `n ≤ n_max` and lines them up against `|Av_n(1342)|` (a Wilf
/// equivalence, not a symmetry: the sortable class has an infinite basis).
pub fn two_ordered_stacks_report(n_max: usize, budget: usize) -> Result<OrderedStacksReport> {
    if n_max > 9 {
        return Err(Error::BoundExceeded {
            what: "ordered-stacks comparison length (scans S_n)",
            requested: n_max,
            limit: 9,
        });
    }
    use rayon::prelude::*;
    let machine = SeriesMachine::ordered(2)?;
    let av1342 = count_av(&ClassSpec::single("1342".parse().unwrap()), n_max)?;
    let mut counts = Vec::with_capacity(n_max);
    let mut all_match = true;
    for n in 1..=n_max {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let sortable = perms
            .par_iter()
            .map(|p| machine.sorts(p, budget).map(u64::from))
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        let reference = av1342.terms()[n].clone();
        if BigUint::from(sortable) != reference {
            all_match = false;
        }
        counts.push((n, sortable, reference));
    }
    Ok(OrderedStacksReport { counts, all_match })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::DEFAULT_BUDGET;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn juxtaposition_shapes() {
        // σ = ε: just the complement of π
        assert_eq!(knuth_horizontal(&p("231"), &Permutation::empty()), p("213"));
        assert_eq!(murphy_vertical(&p("231"), &Permutation::empty()), p("132"));
        let h = knuth_horizontal(&p("21"), &p("12"));
        // first block order-isomorphic to 12 on top of a 12 block
        assert_eq!(h, p("3412"));
    }

    #[test]
    fn juxtapositions_are_sorting_duals() {
        for m in 0..=3 {
            for pi in Permutation::all(m) {
                for sigma in Permutation::all(3) {
                    let lhs = knuth_horizontal(&pi, &sigma).sorting_dual();
                    let rhs = murphy_vertical(&pi.sorting_dual(), &sigma.sorting_dual());
                    assert_eq!(lhs, rhs, "π={pi} σ={sigma}");
                }
            }
        }
    }

    #[test]
    fn juxtapositions_of_sortables_are_sortable() {
        // π, σ ∈ Av(231) (1-stack sortable) ⟹ both juxtapositions are
        // 2-stack sortable
        let two = SeriesMachine::plain(2).unwrap();
        let spec = ClassSpec::single(p("231"));
        let small: Vec<Permutation> = (0..=3)
            .flat_map(Permutation::all)
            .filter(|q| spec.avoids(q))
            .collect();
        for pi in &small {
            for sigma in &small {
                let h = knuth_horizontal(pi, sigma);
                let v = murphy_vertical(pi, sigma);
                assert!(two.sorts(&h, DEFAULT_BUDGET).unwrap(), "h {pi} {sigma}");
                assert!(two.sorts(&v, DEFAULT_BUDGET).unwrap(), "v {pi} {sigma}");
            }
        }
    }

    #[test]
    fn murphy_inflation() {
        assert_eq!(murphy_unsortable(&p("21")), p("231"));
        assert_eq!(murphy_unsortable(&p("1")), p("1"));
        let beta = p("2435761");
        let big = murphy_unsortable(&beta);
        assert_eq!(big.len(), 43); // 7² − 7 + 1
    }

    #[test]
    fn family_instances() {
        assert_eq!(amr_ordered_basis_instance(2).unwrap(), p("2341"));
        assert_eq!(amr_ordered_basis_instance(3).unwrap(), p("254163"));
        assert_eq!(amr_ordered_basis_instance(4).unwrap(), p("27416385"));
        assert!(amr_ordered_basis_instance(1).is_err());
    }

    #[test]
    fn family_members_defeat_the_machine() {
        let ordered = SeriesMachine::ordered(2).unwrap();
        for k in 2..=3 {
            let member = amr_ordered_basis_instance(k).unwrap();
            assert!(!ordered.sorts(&member, DEFAULT_BUDGET).unwrap(), "k={k}");
            // minimality: every one-point deletion is sortable
            for i in 0..member.len() {
                assert!(
                    ordered.sorts(&member.delete(i), DEFAULT_BUDGET).unwrap(),
                    "k={k} delete {i}"
                );
            }
        }
    }

    #[test]
    fn ordered_counts_match_av1342_small() {
        let report = two_ordered_stacks_report(6, DEFAULT_BUDGET).unwrap();
        assert!(report.all_match);
        let counts: Vec<u64> = report.counts.iter().map(|&(_, c, _)| c).collect();
        assert_eq!(counts, vec![1, 2, 6, 23, 103, 512]);
    }
}
