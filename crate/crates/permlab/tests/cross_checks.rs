//! Cross-module consistency: the same quantity computed through independent
//! routes must agree.

use num_bigint::BigUint;
use permlab::classes::{class_compose_members, count_av, minimal_basis, ClassSpec};
use permlab::derange::derangement_counts;
use permlab::machines::{west_sortable, RsStack, SeriesMachine, DEFAULT_BUDGET};
use permlab::order::{
    interval_rank_sequence, pattern_downset, comp_downset_rank, composition_to_layered,
    layered_to_composition, pattern_downset_ranks, CompositionOrder,
};
use permlab::perm::{contains, Permutation};
use permlab::series::{fine_catalan_check, CountingSequence};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn two_stack_search_equals_composition_of_catalan_classes() {
    let two = SeriesMachine::plain(2).unwrap();
    let av231 = ClassSpec::single(p("231"));
    for n in 0..=6 {
        let composed = class_compose_members(&av231, &av231, n).unwrap();
        let searched: Vec<Permutation> = Permutation::all(n)
            .filter(|q| two.sorts(q, DEFAULT_BUDGET).unwrap())
            .collect();
        assert_eq!(composed, searched, "length {n}");
    }
}

#[test]
fn west_one_pass_is_the_single_stack_machine() {
    let one = SeriesMachine::plain(1).unwrap();
    for n in 0..=7 {
        for q in Permutation::all(n) {
            assert_eq!(
                west_sortable(&q, 1),
                one.sorts(&q, DEFAULT_BUDGET).unwrap(),
                "{q}"
            );
        }
    }
}

#[test]
fn minimal_basis_of_west_class_would_differ_from_series() {
    // West 2-sortability is not a class: 35241 is sortable, its pattern
    // 3241 is not. The series machine, by contrast, is closed downward.
    assert!(west_sortable(&p("35241"), 2));
    assert!(!west_sortable(&p("3241"), 2));
    let two = SeriesMachine::plain(2).unwrap();
    assert!(two.sorts(&p("35241"), DEFAULT_BUDGET).unwrap());
    assert!(two.sorts(&p("3241"), DEFAULT_BUDGET).unwrap());
}

#[test]
fn rs_one_one_and_series_one_agree_with_av231_counts() {
    let rs = RsStack::new(1, 1).unwrap();
    let catalan = CountingSequence::catalan(7);
    for n in 0..=6 {
        let count = Permutation::all(n)
            .filter(|q| rs.sorts(q, DEFAULT_BUDGET).unwrap())
            .count();
        assert_eq!(BigUint::from(count), catalan.terms()[n], "length {n}");
    }
}

#[test]
fn layered_permutation_downsets_match_subword_composition_downsets() {
    use rayon::prelude::*;
    // scan all compositions of sum ≤ 14 through the bijection
    fn comps(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for part in 1..=rem {
            cur.push(part);
            comps(rem - part, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    comps(14, &mut Vec::new(), &mut all);
    all.par_iter().for_each(|parts| {
        let w = permlab::order::Composition::new(parts.clone()).unwrap();
        let layered = composition_to_layered(&w);
        assert_eq!(layered_to_composition(&layered).unwrap(), w);
        assert_eq!(
            pattern_downset_ranks(&layered).unwrap(),
            comp_downset_rank(&w, CompositionOrder::Subword).unwrap(),
            "w={w}"
        );
    });
}

#[test]
fn intervals_of_small_permutations_are_rank_unimodal() {
    // conjecture probe on a small exhaustive range: a failure here would be
    // a discovery worth reporting, not a bug
    for n in 1..=6 {
        for pi in Permutation::all(n) {
            let downset = pattern_downset(&pi).unwrap();
            for level in &downset {
                for sigma in level {
                    let ranks = interval_rank_sequence(sigma, &pi).unwrap();
                    assert!(
                        ranks.profile().unimodal,
                        "interval [{sigma}, {pi}] has ranks {ranks}"
                    );
                }
            }
        }
    }
}

#[test]
fn separable_dp_reaches_the_listed_horizon() {
    // the displacement DP against the full stored listings through length 12
    let report = permlab::derange::separable_displacement_dp(12).unwrap();
    assert_eq!(
        report.totals.as_u64().unwrap(),
        vec![1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446]
    );
    assert_eq!(
        report.derangements.as_u64().unwrap(),
        vec![1, 0, 1, 2, 7, 30, 124, 560, 2610, 12470, 60955, 302930, 1528621]
    );
}

#[test]
fn derangement_fine_identity_from_enumeration() {
    let fine = derangement_counts(&ClassSpec::single(p("132")), 9).unwrap();
    let catalan = count_av(&ClassSpec::single(p("132")), 9).unwrap();
    assert!(fine_catalan_check(&fine, &catalan, 9).unwrap());
}

#[test]
fn basis_extraction_recovers_declared_bases() {
    for basis in ["231", "321", "2413/3142", "132/4321"] {
        let spec = ClassSpec::parse(basis).unwrap();
        let recovered = minimal_basis(|q| Ok(spec.avoids(q)), 5, true).unwrap();
        let flat: Vec<Permutation> = recovered.into_iter().flatten().collect();
        assert_eq!(flat, spec.basis(), "{basis}");
    }
}

#[test]
fn single_stack_classes_to_length_eight() {
    use rayon::prelude::*;
    let one = SeriesMachine::plain(1).unwrap();
    let p231 = p("231");
    let p312 = p("312");
    for n in 7..=8 {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        perms.par_iter().for_each(|q| {
            assert_eq!(
                one.sorts(q, DEFAULT_BUDGET).unwrap(),
                !contains(&p231, q),
                "sort {q}"
            );
            assert_eq!(
                one.generates(q, DEFAULT_BUDGET).unwrap(),
                !contains(&p312, q),
                "generate {q}"
            );
        });
    }
}

#[test]
fn frp_containment_matches_deletion_oracle_at_six_columns() {
    use permlab::boards::{frp_contains, frp_contains_by_deletion, frps, FerrersShape};
    use rayon::prelude::*;
    let patterns: Vec<Permutation> = (1..=3).flat_map(Permutation::all).collect();
    let shapes = FerrersShape::admissible(6);
    shapes.par_iter().for_each(|sh| {
        for placement in frps(sh).unwrap() {
            for sigma in &patterns {
                assert_eq!(
                    frp_contains(&placement, sigma),
                    frp_contains_by_deletion(&placement, sigma),
                    "{placement} σ={sigma}"
                );
            }
        }
    });
}

#[test]
fn avoidance_counts_weakly_increase_to_nine() {
    use rayon::prelude::*;
    let betas: Vec<Permutation> = (2..=4).flat_map(Permutation::all).collect();
    betas.par_iter().for_each(|beta| {
        let counts = count_av(&ClassSpec::single(beta.clone()), 9)
            .unwrap()
            .as_u64()
            .unwrap();
        assert!(
            counts.windows(2).skip(1).all(|w| w[0] <= w[1]),
            "β={beta}: {counts:?}"
        );
    });
}

#[test]
fn ordered_stacks_match_av1342_to_eight() {
    let report =
        permlab::machines::two_ordered_stacks_report(8, DEFAULT_BUDGET).unwrap();
    assert!(report.all_match);
    assert_eq!(report.counts.last().unwrap().1, 15485);
}

#[test]
fn container_sorting_is_bounded_priority_queue_sorting() {
    // a container limited to Av(123) holds identities only up to length 2,
    // so sorting with it is sorting with a 3-bounded priority queue:
    // exactly the permutations of maximum drop ≤ 2
    use permlab::machines::{bounded_pq_sortable, CMachine};
    let machine = CMachine::new(ClassSpec::single(p("123")), 1).unwrap();
    for n in 0..=6 {
        for q in Permutation::all(n) {
            let by_container = machine.sorts(&q, DEFAULT_BUDGET).unwrap();
            assert_eq!(by_container, bounded_pq_sortable(&q, 3), "{q}");
            assert_eq!(by_container, q.statistics().max_drop <= 2, "{q}");
        }
    }
}

#[test]
fn rs_generation_is_sorting_the_inverse() {
    // (r,s)-stacks are symbol oblivious
    for r in 1..=2 {
        for s in 1..=2 {
            let rs = RsStack::new(r, s).unwrap();
            for n in 0..=5 {
                for q in Permutation::all(n) {
                    assert_eq!(
                        rs.generates(&q, DEFAULT_BUDGET).unwrap(),
                        rs.sorts(&q.inverse(), DEFAULT_BUDGET).unwrap(),
                        "r={r} s={s} {q}"
                    );
                }
            }
        }
    }
}

#[test]
fn mixed_length_container_bases_follow_the_basis_theorem() {
    use permlab::machines::{basis_theorem_class, c_machine_class};
    for basis in ["1", "12/21", "21/123", "1/321", "12/321"] {
        let container = ClassSpec::parse(basis).unwrap();
        let searched = c_machine_class(&container, 1, 7, DEFAULT_BUDGET).unwrap();
        let predicted = basis_theorem_class(&container, 7).unwrap();
        assert_eq!(searched, predicted, "basis {basis}");
    }
}

#[test]
fn symmetric_patterns_have_equal_avoidance_and_containment_counts() {
    // |Av_n(β)| = |Av_n(Φβ)| realized through independent enumerations
    for beta in Permutation::all(4) {
        let base = count_av(&ClassSpec::single(beta.clone()), 6).unwrap();
        for sym in permlab::perm::Symmetry::ALL {
            let image = beta.apply_symmetry(sym);
            assert_eq!(
                base,
                count_av(&ClassSpec::single(image.clone()), 6).unwrap(),
                "β={beta} Φ={sym:?}"
            );
        }
        // complements: containment counts match too
        let direct = Permutation::all(5)
            .filter(|q| contains(&beta, q))
            .count();
        let reversed = Permutation::all(5)
            .filter(|q| contains(&beta.reverse(), q))
            .count();
        assert_eq!(direct, reversed);
    }
}
