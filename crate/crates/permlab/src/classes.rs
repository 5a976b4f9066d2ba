//! Avoidance classes Av(B): enumeration, counting, symmetry and Wilf
//! classification, the `g_k` statistics, and minimal bases extracted from
//! downward-closed membership oracles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::Error;
use crate::hash::FastSet;
use crate::perm::{contains, Permutation};
use crate::series::CountingSequence;
use crate::Result;

/// Hard ceiling on enumeration length; classes near this length run to many
/// millions of members.
pub const ENUM_LENGTH_BOUND: usize = 16;

/// A finite basis describing the class Av(B). Construction removes
/// non-minimal elements and duplicates, so the stored basis is an antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    basis: Vec<Permutation>,
}

impl ClassSpec {
    pub fn new(elements: Vec<Permutation>) -> Self {
        let mut sorted = elements;
        sorted.sort_by_key(|p| (p.len(), p.values().to_vec()));
        sorted.dedup();
        let mut basis: Vec<Permutation> = Vec::new();
        for cand in sorted {
            if !basis.iter().any(|b| contains(b, &cand)) {
                basis.push(cand);
            }
        }
        ClassSpec { basis }
    }

    pub fn single(beta: Permutation) -> Self {
        ClassSpec { basis: vec![beta] }
    }

    /// Parses a slash-separated basis, e.g. `"2413/3142"`.
    pub fn parse(s: &str) -> Result<Self> {
        let elements = s
            .split('/')
            .map(|t| t.trim().parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassSpec::new(elements))
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    /// Class membership: avoids every basis element.
    pub fn avoids(&self, p: &Permutation) -> bool {
        self.basis.iter().all(|b| !contains(b, p))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        write!(f, "Av({})", parts.join(", "))
    }
}

fn check_enum_bound(n_max: usize) -> Result<()> {
    if n_max > ENUM_LENGTH_BOUND {
        return Err(Error::BoundExceeded {
            what: "avoidance enumeration length",
            requested: n_max,
            limit: ENUM_LENGTH_BOUND,
        });
    }
    Ok(())
}

fn extend_level(spec: &ClassSpec, parents: &[Permutation], n: usize) -> Vec<Permutation> {
    if parents.len() > 256 {
        parents
            .par_iter()
            .flat_map_iter(|p| {
                (0..n)
                    .map(|gap| p.insert_max(gap))
                    .filter(|child| spec.avoids(child))
                    .collect::<Vec<_>>()
            })
            .collect()
    } else {
        parents
            .iter()
            .flat_map(|p| (0..n).map(|gap| p.insert_max(gap)))
            .filter(|child| spec.avoids(child))
            .collect()
    }
}

/// All members of Av(B) by length, `0 ≤ n ≤ n_max`.
///
/// Members of length `n+1` are generated by inserting the new maximum into
/// each gap of each member of length `n`; downward closure makes this
/// complete, and each child arises from exactly one parent, so no
/// deduplication is needed.
pub fn enumerate_av(spec: &ClassSpec, n_max: usize) -> Result<Vec<Vec<Permutation>>> {
    check_enum_bound(n_max)?;
    let mut levels = Vec::with_capacity(n_max + 1);
    levels.push(if spec.avoids(&Permutation::empty()) {
        vec![Permutation::empty()]
    } else {
        Vec::new() // only possible when ε itself is in the basis
    });
    for n in 1..=n_max {
        let children = extend_level(spec, &levels[n - 1], n);
        levels.push(children);
    }
    Ok(levels)
}

/// Per-length counts of Av(B). Streams level by level, keeping only one
/// generation of members in memory.
pub fn count_av(spec: &ClassSpec, n_max: usize) -> Result<CountingSequence> {
    check_enum_bound(n_max)?;
    let mut terms: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    let empty_in = spec.avoids(&Permutation::empty());
    terms.push(if empty_in { BigUint::one() } else { BigUint::ZERO });
    let mut frontier = if empty_in {
        vec![Permutation::empty()]
    } else {
        Vec::new()
    };
    for n in 1..=n_max {
        let children = extend_level(spec, &frontier, n);
        terms.push(BigUint::from(children.len()));
        frontier = children;
    }
    Ok(CountingSequence::new(terms))
}

/// Enumerates any permutation class given a membership oracle, by one-point
/// extensions from the previous level. Correct exactly when the oracle's
/// class is downward closed. The oracle is called once per candidate child;
/// calls are dispatched in parallel and results assembled deterministically.
pub fn enumerate_class_by_oracle<F>(oracle: F, n_max: usize) -> Result<Vec<Vec<Permutation>>>
where
    F: Fn(&Permutation) -> Result<bool> + Sync,
{
    check_enum_bound(n_max)?;
    let mut levels = Vec::with_capacity(n_max + 1);
    levels.push(if oracle(&Permutation::empty())? {
        vec![Permutation::empty()]
    } else {
        Vec::new()
    });
    for n in 1..=n_max {
        let candidates: Vec<Permutation> = levels[n - 1]
            .iter()
            .flat_map(|p| (0..n).map(|gap| p.insert_max(gap)))
            .collect();
        let verdicts: Vec<Result<bool>> =
            candidates.par_iter().map(&oracle).collect();
        let mut level = Vec::new();
        for (child, verdict) in candidates.into_iter().zip(verdicts) {
            if verdict? {
                level.push(child);
            }
        }
        levels.push(level);
    }
    Ok(levels)
}

/// Streaming variant of [`enumerate_class_by_oracle`]: per-length counts
/// only, holding one generation of members at a time.
pub fn count_class_by_oracle<F>(oracle: F, n_max: usize) -> Result<CountingSequence>
where
    F: Fn(&Permutation) -> Result<bool> + Sync,
{
    check_enum_bound(n_max)?;
    let mut terms: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    let empty_in = oracle(&Permutation::empty())?;
    terms.push(if empty_in { BigUint::one() } else { BigUint::ZERO });
    let mut frontier = if empty_in {
        vec![Permutation::empty()]
    } else {
        Vec::new()
    };
    for n in 1..=n_max {
        let candidates: Vec<Permutation> = frontier
            .iter()
            .flat_map(|p| (0..n).map(|gap| p.insert_max(gap)))
            .collect();
        let verdicts: Vec<Result<bool>> =
            candidates.par_iter().map(&oracle).collect();
        let mut level = Vec::new();
        for (child, verdict) in candidates.into_iter().zip(verdicts) {
            if verdict? {
                level.push(child);
            }
        }
        terms.push(BigUint::from(level.len()));
        frontier = level;
    }
    Ok(CountingSequence::new(terms))
}

/// Orbits of `S_n` under the eight plot symmetries, each orbit sorted, orbits
/// ordered by their least element.
pub fn symmetry_classes(n: usize) -> Result<Vec<Vec<Permutation>>> {
    if n > 10 {
        return Err(Error::BoundExceeded {
            what: "symmetry class length",
            requested: n,
            limit: 10,
        });
    }
    let mut seen: FastSet<Permutation> = FastSet::default();
    let mut orbits = Vec::new();
    for p in Permutation::all(n) {
        if seen.contains(&p) {
            continue;
        }
        let orbit = p.symmetry_orbit();
        for q in &orbit {
            seen.insert(q.clone());
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Candidate Wilf classification of `S_n`: symmetry classes grouped by the
/// counting sequence of Av(β) up to length `depth`.
///
/// Equality of counts through `depth` is necessary for Wilf equivalence but
/// not sufficient, so the output is labeled a candidate classification with
/// the depth recorded.
#[derive(Debug, Clone)]
pub struct WilfClassification {
    pub n: usize,
    pub depth: usize,
    /// Each candidate class lists the minimal representative of every
    /// symmetry class it absorbs, together with the shared counting sequence.
    pub classes: Vec<(Vec<Permutation>, CountingSequence)>,
}

pub fn wilf_classify(n: usize, depth: usize) -> Result<WilfClassification> {
    check_enum_bound(depth)?;
    let orbits = symmetry_classes(n)?;
    let reps: Vec<Permutation> = orbits.into_iter().map(|o| o[0].clone()).collect();
    let sequences: Vec<CountingSequence> = reps
        .par_iter()
        .map(|rep| count_av(&ClassSpec::single(rep.clone()), depth))
        .collect::<Result<_>>()?;
    let mut grouped: BTreeMap<Vec<BigUint>, Vec<Permutation>> = BTreeMap::new();
    for (rep, seq) in reps.into_iter().zip(&sequences) {
        grouped.entry(seq.terms().to_vec()).or_default().push(rep);
    }
    let classes = grouped
        .into_iter()
        .map(|(terms, mut members)| {
            members.sort();
            (members, CountingSequence::new(terms))
        })
        .collect();
    Ok(WilfClassification { n, depth, classes })
}

/// `g_k(β)`: the number of permutations of length `|β| + k` containing `β`,
/// computed as `(m+k)! − |Av_{m+k}(β)|`.
pub fn g_k(beta: &Permutation, k: usize) -> Result<BigUint> {
    let m = beta.len();
    let n = m + k;
    check_enum_bound(n)?;
    let avoiders = count_av(&ClassSpec::single(beta.clone()), n)?;
    let factorial = CountingSequence::factorials(n + 1);
    Ok(factorial.terms()[n].clone() - &avoiders.terms()[n])
}

/// Recovers the integer `j` from `g_2(β) = (m⁴ + 2m³ + m² + 4m + 4 − 2j)/2`.
/// A value outside `[0, m−1]` would mean the enumeration and the formula
/// disagree, which is an implementation bug, so it is a hard error.
pub fn ray_west_j(beta: &Permutation) -> Result<BigUint> {
    let m = beta.len() as u64;
    if m == 0 {
        return Err(Error::Internal("Ray–West j needs a nonempty pattern".into()));
    }
    let g2 = g_k(beta, 2)?;
    let numerator = BigUint::from(m * m * m * m + 2 * m * m * m + m * m + 4 * m + 4);
    let doubled = BigUint::from(2u32) * &g2;
    if doubled > numerator {
        return Err(Error::Internal(format!(
            "g_2({beta}) = {g2} exceeds the Ray–West cap"
        )));
    }
    let twice_j = numerator - doubled;
    let j = &twice_j / 2u32;
    if &twice_j % 2u32 != BigUint::ZERO || j > BigUint::from(m - 1) {
        return Err(Error::Internal(format!(
            "Ray–West j = {twice_j}/2 for β = {beta} falls outside [0, {}]",
            m - 1
        )));
    }
    Ok(j)
}

/// Minimal basis elements, per length, of the class defined by a membership
/// oracle: the non-members all of whose one-point deletions are members.
///
/// With `verify_closure` set, every member found has its deletions checked
/// for membership too, and a violation is reported as an error (the oracle
/// was supposed to describe a downward-closed set).
pub fn minimal_basis<F>(
    oracle: F,
    n_max: usize,
    verify_closure: bool,
) -> Result<Vec<Vec<Permutation>>>
where
    F: Fn(&Permutation) -> Result<bool> + Sync,
{
    if n_max > 9 {
        return Err(Error::BoundExceeded {
            what: "minimal basis length (scans all of S_n)",
            requested: n_max,
            limit: 9,
        });
    }
    let mut result = Vec::with_capacity(n_max + 1);
    let mut previous_members: FastSet<Permutation> = FastSet::default();
    for n in 0..=n_max {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let verdicts: Vec<Result<bool>> = perms.par_iter().map(&oracle).collect();
        let mut members: FastSet<Permutation> = FastSet::default();
        let mut basis_here = Vec::new();
        for (p, verdict) in perms.into_iter().zip(verdicts) {
            let is_member = verdict?;
            if is_member {
                if verify_closure && n > 0 {
                    for i in 0..n {
                        let d = p.delete(i);
                        if !previous_members.contains(&d) {
                            return Err(Error::ClosureViolation {
                                member: p.to_string(),
                                deletion: d.to_string(),
                            });
                        }
                    }
                }
                members.insert(p);
            } else {
                let minimal =
                    n == 0 || (0..n).all(|i| previous_members.contains(&p.delete(i)));
                if minimal {
                    basis_here.push(p);
                }
            }
        }
        basis_here.sort();
        result.push(basis_here);
        previous_members = members;
    }
    Ok(result)
}

/// `{α ∘ τ : α ∈ A_n, τ ∈ B_n}`, the length-`n` members of a composition of
/// classes, sorted.
pub fn class_compose_members(a: &ClassSpec, b: &ClassSpec, n: usize) -> Result<Vec<Permutation>> {
    check_enum_bound(n)?;
    let left = enumerate_av(a, n)?.pop().unwrap();
    let right = enumerate_av(b, n)?.pop().unwrap();
    let mut out: FastSet<Permutation> = FastSet::default();
    for alpha in &left {
        for tau in &right {
            out.insert(alpha.compose(tau).expect("members have equal length"));
        }
    }
    let mut v: Vec<Permutation> = out.into_iter().collect();
    v.sort();
    Ok(v)
}
