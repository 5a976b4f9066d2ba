//! Derangements inside permutation classes: counting sequences, joint
//! fixed-point/excedance distributions, the excedance polynomial over
//! 123-avoiding derangements, and the displacement-set dynamic program for
//! separable permutations.
//!
//! Convention: the empty permutation has no fixed point, so it counts as a
//! derangement and every derangement sequence here starts `1, 0, …` at
//! lengths 0 and 1.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::classes::{count_av, enumerate_av, ClassSpec};
use crate::error::Error;
use crate::hash::FastMap;
use crate::perm::Permutation;
use crate::poly::IntPolynomial;
use crate::series::{ratio_profile, CountingSequence};
use crate::Result;

/// Per-length counts of derangements (members with no fixed point) in a
/// class.
pub fn derangement_counts(spec: &ClassSpec, n_max: usize) -> Result<CountingSequence> {
    let levels = enumerate_av(spec, n_max)?;
    Ok(CountingSequence::new(
        levels
            .iter()
            .map(|level| BigUint::from(level.iter().filter(|p| p.is_derangement()).count()))
            .collect(),
    ))
}

/// Joint distribution of (fixed points, excedances) over the members of a
/// class, per length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixExcDistribution {
    /// `table[n]` maps `(fixed_points, excedances)` to a count; entries with
    /// count zero are absent.
    pub table: Vec<BTreeMap<(usize, usize), BigUint>>,
}

impl FixExcDistribution {
    /// Total count at one length (sanity: equals the class count there).
    pub fn total_at(&self, n: usize) -> BigUint {
        self.table[n].values().sum()
    }
}

pub fn fix_exc_distribution(spec: &ClassSpec, n_max: usize) -> Result<FixExcDistribution> {
    let levels = enumerate_av(spec, n_max)?;
    let table = levels
        .iter()
        .map(|level| {
            let mut map: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
            for p in level {
                let stats = p.statistics();
                *map.entry((stats.fixed_point_count, stats.excedance_count))
                    .or_default() += BigUint::one();
            }
            map
        })
        .collect();
    Ok(FixExcDistribution { table })
}

/// The excedance generating polynomial `G_n(t) = Σ t^{exc π}` over the
/// 123-avoiding derangements of length `n`, for every `n ≤ n_max`.
pub fn g_polynomials_123(n_max: usize) -> Result<Vec<IntPolynomial>> {
    let spec = ClassSpec::single("123".parse().unwrap());
    let levels = enumerate_av(&spec, n_max)?;
    Ok(levels
        .iter()
        .map(|level| {
            let mut coeffs: Vec<BigInt> = Vec::new();
            for p in level {
                if !p.is_derangement() {
                    continue;
                }
                let e = p.statistics().excedance_count;
                if coeffs.len() <= e {
                    coeffs.resize(e + 1, BigInt::zero());
                }
                coeffs[e] += 1;
            }
            IntPolynomial::new(coeffs)
        })
        .collect())
}

pub fn g_polynomial_123(n: usize) -> Result<IntPolynomial> {
    Ok(g_polynomials_123(n)?.pop().unwrap())
}

/// Exact per-length proportions of derangements in a class.
pub fn derangement_proportions(spec: &ClassSpec, n_max: usize) -> Result<Vec<BigRational>> {
    let ders = derangement_counts(spec, n_max)?;
    let all = count_av(spec, n_max)?;
    ratio_profile(&ders, &all)
}

/// Report of the sign survey of `G_n(−1)`.
#[derive(Debug, Clone)]
pub struct GnMinusOneSurvey {
    /// `values[n] = G_n(−1)`.
    pub values: Vec<BigInt>,
    /// Every odd `n ≥ 1` in range had `G_n(−1) = 0`.
    pub odd_all_zero: bool,
    /// For even `n ≥ 2`: `(n, sign of G_n(−1))` with sign in {−1, 0, 1}.
    pub even_signs: Vec<(usize, i8)>,
}

impl GnMinusOneSurvey {
    /// Does the observed data match the conjectured pattern
    /// `sign G_n(−1) = (−1)^{n/2}` for even `n`?
    pub fn even_signs_alternate(&self) -> bool {
        self.even_signs
            .iter()
            .all(|&(n, s)| s == if (n / 2) % 2 == 0 { 1 } else { -1 })
    }
}

/// Evaluates `G_n(−1)` for all `n ≤ n_max`. The odd-`n` vanishing is a
/// theorem; the even-`n` sign pattern is a conjecture probe, so both are
/// reported rather than asserted.
pub fn survey_gn_minus_one(n_max: usize) -> Result<GnMinusOneSurvey> {
    let polys = g_polynomials_123(n_max)?;
    let minus_one = BigInt::from(-1);
    let values: Vec<BigInt> = polys.iter().map(|g| g.eval(&minus_one)).collect();
    let odd_all_zero = values
        .iter()
        .enumerate()
        .skip(1)
        .step_by(2)
        .all(|(_, v)| v.is_zero());
    let even_signs = values
        .iter()
        .enumerate()
        .skip(2)
        .step_by(2)
        .map(|(n, v)| {
            let s = match v.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            };
            (n, s)
        })
        .collect();
    Ok(GnMinusOneSurvey {
        values,
        odd_all_zero,
        even_signs,
    })
}

/// A displacement set `D(π) = {π(i) − i}` packed into a bitmask.
/// Supports displacements in `[−32, 31]`, i.e. lengths up to 32.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DispSet(u64);

const DISP_OFFSET: i64 = 32;

impl DispSet {
    pub fn empty() -> Self {
        DispSet(0)
    }

    pub fn of(perm: &Permutation) -> Self {
        let mut bits = 0u64;
        for (idx, &v) in perm.values().iter().enumerate() {
            let d = v as i64 - (idx as i64 + 1);
            bits |= 1 << (d + DISP_OFFSET);
        }
        DispSet(bits)
    }

    pub fn from_elements(elements: &[i64]) -> Self {
        let mut bits = 0u64;
        for &d in elements {
            assert!((-DISP_OFFSET..DISP_OFFSET).contains(&d));
            bits |= 1 << (d + DISP_OFFSET);
        }
        DispSet(bits)
    }

    pub fn contains_zero(self) -> bool {
        self.0 & (1 << DISP_OFFSET) != 0
    }

    pub fn union(self, other: DispSet) -> DispSet {
        DispSet(self.0 | other.0)
    }

    /// The set `D + k` (every element shifted up by `k`).
    pub fn shift_up(self, k: usize) -> DispSet {
        DispSet(self.0 << k)
    }

    /// The set `D − k`.
    pub fn shift_down(self, k: usize) -> DispSet {
        DispSet(self.0 >> k)
    }

    pub fn elements(self) -> Vec<i64> {
        (0..64)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b - DISP_OFFSET)
            .collect()
    }
}

impl fmt::Display for DispSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Counts of separable permutations realizing one displacement set at one
/// length, split by decomposition type.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeparableCounts {
    pub total: u64,
    pub sum_indecomposable: u64,
    pub skew_indecomposable: u64,
}

/// Output of the separable displacement DP.
#[derive(Debug, Clone)]
pub struct SeparableDpReport {
    /// `profile[n]`, sorted by packed set, zero-count entries pruned.
    pub profile: Vec<Vec<(DispSet, SeparableCounts)>>,
    /// Row sums: the Schröder numbers.
    pub totals: CountingSequence,
    /// Sums over sets not containing 0.
    pub derangements: CountingSequence,
}

/// Length guard: the profile width grows quickly with `n`.
pub const SEPARABLE_DP_BOUND: usize = 14;

/// Tracks, for each length, how many separable permutations realize each
/// displacement set, and derives the separable derangement counts.
///
/// Double counting is avoided through the canonical decomposition: a
/// separable permutation of length ≥ 2 is exactly one of
///
/// - a direct sum of ≥ 2 sum-indecomposable separables (its displacement set
///   is the union of the components' sets), or
/// - a skew sum of ≥ 2 skew-indecomposable separables (the left block's set
///   shifts up by the right length, the right block's down by the left
///   length).
pub fn separable_displacement_dp(n_max: usize) -> Result<SeparableDpReport> {
    if n_max > SEPARABLE_DP_BOUND {
        return Err(Error::BoundExceeded {
            what: "separable displacement DP length",
            requested: n_max,
            limit: SEPARABLE_DP_BOUND,
        });
    }
    use rayon::prelude::*;
    type Layer = FastMap<DispSet, u64>;
    fn point() -> Layer {
        let mut m = Layer::default();
        m.insert(DispSet::from_elements(&[0]), 1);
        m
    }
    fn merge(a: Layer, b: Layer) -> Layer {
        let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        for (d, c) in small {
            *big.entry(d).or_default() += c;
        }
        big
    }
    /// Leading block of length `m` combined with any remaining separable of
    /// length `n − m`: union of sets for ⊕, shifted union for ⊖.
    fn conv_split(blocks: &Layer, rest: &Layer, m: usize, r: usize, skew: bool) -> Layer {
        let mut out = Layer::default();
        for (&d1, &c1) in blocks {
            let left = if skew { d1.shift_up(r) } else { d1 };
            for (&d2, &c2) in rest {
                let d = if skew {
                    left.union(d2.shift_down(m))
                } else {
                    left.union(d2)
                };
                *out.entry(d).or_default() += c1 * c2;
            }
        }
        out
    }

    // Indecomposables of each kind per length, plus the full profile of all
    // separables per length. A nonempty ⊕-sequence of sum-indecomposables
    // is the maximal decomposition of a unique separable (and dually for
    // ⊖), so "the rest of the sequence" below is just a shorter separable.
    let mut sum_indec: Vec<Layer> = vec![Layer::default()];
    let mut skew_indec: Vec<Layer> = vec![Layer::default()];
    let mut all_by_len: Vec<Layer> = vec![Layer::default()];

    for n in 1..=n_max {
        let (si, ki) = if n == 1 {
            (point(), point())
        } else {
            let sum_dec = (1..n)
                .into_par_iter()
                .map(|m| conv_split(&sum_indec[m], &all_by_len[n - m], m, n - m, false))
                .reduce(Layer::default, merge);
            let skew_dec = (1..n)
                .into_par_iter()
                .map(|m| conv_split(&skew_indec[m], &all_by_len[n - m], m, n - m, true))
                .reduce(Layer::default, merge);
            // at length ≥ 2: sum-indecomposable ⟺ skew-decomposable
            (skew_dec, sum_dec)
        };
        let all = if n == 1 {
            point()
        } else {
            merge(si.clone(), ki.clone())
        };
        sum_indec.push(si);
        skew_indec.push(ki);
        all_by_len.push(all);
    }

    let mut profile: Vec<Vec<(DispSet, SeparableCounts)>> = Vec::with_capacity(n_max + 1);
    profile.push(vec![(
        DispSet::empty(),
        SeparableCounts {
            total: 1,
            sum_indecomposable: 0,
            skew_indecomposable: 0,
        },
    )]);
    for n in 1..=n_max {
        let mut merged: BTreeMap<DispSet, SeparableCounts> = BTreeMap::new();
        for (&d, &c) in &sum_indec[n] {
            let e = merged.entry(d).or_default();
            e.sum_indecomposable += c;
            e.total += c;
        }
        for (&d, &c) in &skew_indec[n] {
            let e = merged.entry(d).or_default();
            e.skew_indecomposable += c;
            // the single point at n = 1 is indecomposable both ways but is
            // still one permutation; for n ≥ 2 the kinds are disjoint
            if n >= 2 {
                e.total += c;
            }
        }
        profile.push(merged.into_iter().collect());
    }

    let totals = CountingSequence::new(
        profile
            .iter()
            .map(|layer| BigUint::from(layer.iter().map(|(_, c)| c.total).sum::<u64>()))
            .collect(),
    );
    let derangements = CountingSequence::new(
        profile
            .iter()
            .map(|layer| {
                BigUint::from(
                    layer
                        .iter()
                        .filter(|(d, _)| !d.contains_zero())
                        .map(|(_, c)| c.total)
                        .sum::<u64>(),
                )
            })
            .collect(),
    );
    Ok(SeparableDpReport {
        profile,
        totals,
        derangements,
    })
}

/// Brute-force displacement profile of the separable permutations, for
/// cross-checking the DP at small lengths.
pub fn separable_profile_brute(n_max: usize) -> Result<Vec<BTreeMap<DispSet, u64>>> {
    let spec = ClassSpec::parse("2413/3142")?;
    let levels = enumerate_av(&spec, n_max)?;
    Ok(levels
        .iter()
        .map(|level| {
            let mut map: BTreeMap<DispSet, u64> = BTreeMap::new();
            for p in level {
                *map.entry(DispSet::of(p)).or_default() += 1;
            }
            map
        })
        .collect())
}
