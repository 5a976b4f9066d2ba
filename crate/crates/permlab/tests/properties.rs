//! Randomized property tests for the structural invariants.

use proptest::prelude::*;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use permlab::perm::{contains, contains_naive, occurrences, Permutation, Symmetry};
use permlab::series::{cf_to_series, hankel_report, stieltjes_cf, CountingSequence, StieltjesCf};

fn arb_perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| {
            let values: Vec<u16> = (1..=n as u16).collect();
            Just(values).prop_shuffle()
        })
        .prop_map(|values| Permutation::new(values).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn backtracking_matches_naive_containment(
        pattern in arb_perm(4),
        host in arb_perm(8),
    ) {
        prop_assert_eq!(contains(&pattern, &host), contains_naive(&pattern, &host));
    }

    #[test]
    fn containment_is_a_symmetry_invariant(
        pattern in arb_perm(4),
        host in arb_perm(6),
        sym_idx in 0usize..8,
    ) {
        let sym = Symmetry::ALL[sym_idx];
        prop_assert_eq!(
            contains(&pattern, &host),
            contains(&pattern.apply_symmetry(sym), &host.apply_symmetry(sym)),
        );
    }

    #[test]
    fn occurrence_lists_are_sound_and_ordered(
        pattern in arb_perm(3),
        host in arb_perm(7),
    ) {
        let occs = occurrences(&pattern, &host);
        prop_assert_eq!(!occs.is_empty(), contains(&pattern, &host));
        for pair in occs.windows(2) {
            prop_assert!(pair[0] < pair[1], "lexicographic order");
        }
        for occ in &occs {
            let zero_based: Vec<usize> = occ.iter().map(|&i| i - 1).collect();
            prop_assert_eq!(&host.pattern_at(&zero_based), &pattern);
        }
    }

    #[test]
    fn symmetries_compose_like_the_dihedral_group(perm in arb_perm(7)) {
        let r90 = |q: &Permutation| q.apply_symmetry(Symmetry::Rotate90);
        prop_assert_eq!(r90(&r90(&r90(&r90(&perm)))), perm.clone());
        prop_assert_eq!(
            r90(&r90(&perm)),
            perm.apply_symmetry(Symmetry::Rotate180)
        );
        // the displayed reverse/inverse/complement identity
        prop_assert_eq!(perm.reverse().inverse(), perm.inverse().complement());
    }

    #[test]
    fn direct_sum_displacements_union(a in arb_perm(5), b in arb_perm(5)) {
        let mut expected = a.statistics().displacement_set;
        expected.extend(b.statistics().displacement_set);
        prop_assert_eq!(a.direct_sum(&b).statistics().displacement_set, expected);
    }

    #[test]
    fn cf_extraction_reconstructs_its_input(
        terms in proptest::collection::vec(0u64..50, 1..10),
        first in 1u64..20,
    ) {
        let mut seq = vec![first];
        seq.extend(terms);
        let counting = CountingSequence::from_u64(&seq);
        let cf = stieltjes_cf(&counting).unwrap();
        let order = if cf.breakdown_index.is_some() {
            // reconstruction is meaningful only up to the breakdown
            cf.alphas.len().saturating_sub(1)
        } else {
            seq.len()
        };
        let back = cf_to_series(&cf, order);
        for (i, coeff) in back.iter().enumerate() {
            prop_assert_eq!(
                coeff.clone(),
                BigRational::from_integer(seq[i].into()),
                "term {}", i
            );
        }
    }

    #[test]
    fn nonnegative_alphas_give_nonnegative_hankel_minors(
        alphas in proptest::collection::vec(0u64..4, 1..9),
        scale in 1u64..4,
    ) {
        // build a moment sequence from a nonnegative continued fraction and
        // check total nonnegativity of the leading minors
        let cf = StieltjesCf {
            alphas: std::iter::once(BigRational::from_integer(scale.into()))
                .chain(alphas.iter().map(|&a| BigRational::from_integer(a.into())))
                .collect(),
            breakdown_index: None,
        };
        let series = cf_to_series(&cf, 12);
        let terms: Vec<BigUint> = series
            .iter()
            .map(|r| {
                assert!(r.is_integer() && !r.is_negative());
                r.to_integer().to_biguint().unwrap()
            })
            .collect();
        let report = hankel_report(&CountingSequence::new(terms), 6).unwrap();
        prop_assert!(report.all_nonnegative());
    }

    #[test]
    fn rank_sequences_start_at_one(perm in arb_perm(8)) {
        let ranks = permlab::order::pattern_downset_ranks(&perm).unwrap();
        prop_assert_eq!(&ranks.counts()[0], &BigUint::one());
        prop_assert!(ranks.counts().iter().all(|c| !c.is_zero()));
        prop_assert!(ranks.profile().first_half_increasing);
    }
}
