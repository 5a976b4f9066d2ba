//! Reference values the verification suite checks against.
//!
//! Every sequence here is a stored constant with its OEIS identifier (where
//! one exists), so the suite runs hermetically: no network fetch, no
//! recomputation of expectations.

/// A named reference sequence with its citation.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceSequence {
    pub name: &'static str,
    pub citation: &'static str,
    /// Length of the first listed term (sequences indexed by permutation
    /// length unless noted).
    pub first_index: usize,
    pub terms: &'static [u64],
}

/// Fine numbers: derangements avoiding any one of 132, 213, 321.
pub const FINE: ReferenceSequence = ReferenceSequence {
    name: "fine",
    citation: "A000957 (shifted): 132-avoiding derangements by length",
    first_index: 1,
    terms: &[0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724, 91144],
};

/// Derangements avoiding 231 (equivalently 312).
pub const DER_231: ReferenceSequence = ReferenceSequence {
    name: "der231",
    citation: "A258041: 231-avoiding derangements by length",
    first_index: 1,
    terms: &[0, 1, 1, 4, 10, 31, 94, 303, 986, 3284, 11099, 38024],
};

/// Derangements avoiding 123.
pub const DER_123: ReferenceSequence = ReferenceSequence {
    name: "der123",
    citation: "A318232: 123-avoiding derangements by length",
    first_index: 1,
    terms: &[0, 1, 2, 7, 20, 66, 218, 725, 2538, 8646, 31118, 108430],
};

/// Large Schröder numbers: separable permutations by length.
pub const SCHROEDER: ReferenceSequence = ReferenceSequence {
    name: "schroeder",
    citation: "A006318: separable permutations by length",
    first_index: 1,
    terms: &[
        1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446,
    ],
};

/// Separable derangements.
pub const SEPARABLE_DERANGEMENTS: ReferenceSequence = ReferenceSequence {
    name: "separable_derangements",
    citation: "A393394: separable derangements by length",
    first_index: 1,
    terms: &[0, 1, 2, 7, 30, 124, 560, 2610, 12470, 60955, 302930, 1528621],
};

/// Permutations sortable by a (2,2)-stack.
pub const STACK22_SORTABLE: ReferenceSequence = ReferenceSequence {
    name: "stack22_sortable",
    citation: "A393395: (2,2)-stack-sortable permutations by length",
    first_index: 1,
    terms: &[
        1, 2, 6, 24, 116, 628, 3636, 21956, 136428, 865700, 5583580, 36490740,
    ],
};

/// Basis sizes for two stacks in series, by length from 7.
pub const TWO_STACK_BASIS_SIZES: ReferenceSequence = ReferenceSequence {
    name: "two_stack_basis_sizes",
    citation: "A111576: basis elements of the two-stack-sortable class",
    first_index: 7,
    terms: &[22, 51, 146, 604],
};

/// Symmetry classes of S_n under the dihedral action.
pub const SYMMETRY_CLASSES: ReferenceSequence = ReferenceSequence {
    name: "symmetry_classes",
    citation: "A000903: symmetry classes of permutations",
    first_index: 1,
    terms: &[1, 1, 2, 7, 23, 115, 694],
};

/// Wilf-equivalence classes of single patterns.
pub const WILF_CLASSES: ReferenceSequence = ReferenceSequence {
    name: "wilf_classes",
    citation: "A099952: Wilf classes of permutations",
    first_index: 1,
    terms: &[1, 1, 1, 3, 16, 91, 595],
};

/// Rank sequence of the principal downset of the partition (8,8,4,4) in
/// Young's lattice; the classical non-unimodal example.
pub const STANTON_RANKS: ReferenceSequence = ReferenceSequence {
    name: "stanton_ranks",
    citation: "downset rank sequence of the partition (8,8,4,4)",
    first_index: 0,
    terms: &[
        1, 1, 2, 3, 5, 6, 9, 11, 15, 17, 21, 23, 27, 28, 31, 30, 31, 27, 24, 18, 14, 8, 5, 2, 1,
    ],
};

/// The waisted downset rank sequence of one permutation of length 17,
/// recorded as a shape fixture (the permutation itself is not known here).
pub const WAISTED_17_RANKS: ReferenceSequence = ReferenceSequence {
    name: "waisted_17_ranks",
    citation: "downset rank sequence of a length-17 permutation",
    first_index: 0,
    terms: &[
        1, 1, 2, 5, 14, 36, 87, 210, 486, 927, 1315, 1348, 1005, 549, 218, 61, 11, 1,
    ],
};

/// The minimal basis of the (2,2)-stack-sortable class, paired with sorting
/// duals: 23541 ↔ 32451 and 246153 ↔ 425163; the other four are self-dual.
pub const STACK22_BASIS: &[&str] = &[
    "23451", "23541", "32451", "32541", "245163", "246153", "425163", "426153",
];

/// All stored reference sequences.
pub fn all_sequences() -> Vec<ReferenceSequence> {
    vec![
        FINE,
        DER_231,
        DER_123,
        SCHROEDER,
        SEPARABLE_DERANGEMENTS,
        STACK22_SORTABLE,
        TWO_STACK_BASIS_SIZES,
        SYMMETRY_CLASSES,
        WILF_CLASSES,
        STANTON_RANKS,
        WAISTED_17_RANKS,
    ]
}

/// Spot values of derangement proportions, rendered to nine decimal places.
pub const PROPORTION_SPOTS: &[(&str, usize, &str)] = &[
    ("231", 3, "0.200000000"),
    ("231", 4, "0.285714286"),
    ("132", 3, "0.400000000"),
    ("132", 4, "0.428571429"),
    ("123", 7, "0.508158508"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_well_formed() {
        for seq in all_sequences() {
            assert!(!seq.terms.is_empty(), "{}", seq.name);
            assert!(!seq.citation.is_empty());
        }
        assert_eq!(STACK22_BASIS.len(), 8);
        assert_eq!(STANTON_RANKS.terms.len(), 25);
        assert_eq!(WAISTED_17_RANKS.terms.len(), 18);
    }

    #[test]
    fn stack22_basis_dual_pairing_is_as_documented() {
        use permlab::perm::Permutation;
        let dual = |s: &str| -> String {
            s.parse::<Permutation>().unwrap().sorting_dual().to_string()
        };
        for self_dual in ["23451", "32541", "245163", "426153"] {
            assert_eq!(dual(self_dual), self_dual);
        }
        assert_eq!(dual("23541"), "32451");
        assert_eq!(dual("32451"), "23541");
        assert_eq!(dual("246153"), "425163");
        assert_eq!(dual("425163"), "246153");
    }
}
