//! Permutations, the eight plot symmetries, structural operations, pattern
//! containment, and entry statistics.
//!
//! A permutation of length `n` is stored in one-line notation as the values
//! `π(1), …, π(n)`, each in `1..=n`. The empty permutation is a first-class
//! value. All operations are pure; a [`Permutation`] never changes after
//! construction.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::Result;

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u16>,
}

impl Permutation {
    /// Builds a permutation from one-line values, checking that they form a
    /// bijection on `1..=n`.
    pub fn new(values: Vec<u16>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::Parse(format!(
                    "values are not a bijection on 1..={n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// The identity `12⋯n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u16).collect(),
        }
    }

    /// The decreasing permutation `ρ = n(n−1)⋯21`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u16).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    /// `π(i)` with `i` 1-based.
    pub fn at(&self, i: usize) -> u16 {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Functional inverse.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u16 + 1;
        }
        Permutation { values: inv }
    }

    /// Reverse `π^r`: the values read right to left.
    pub fn reverse(&self) -> Self {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    /// Complement `π^c`: each value `v` replaced by `n+1−v`.
    pub fn complement(&self) -> Self {
        let n = self.len() as u16;
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Reflection about the anti-diagonal, `ρ∘π⁻¹∘ρ`. Also called the
    /// sorting dual: it preserves sortability for every symbol-oblivious
    /// reversible machine.
    pub fn sorting_dual(&self) -> Self {
        self.reverse().complement().inverse()
    }

    /// Functional composition `(π∘σ)(i) = π(σ(i))`; requires equal lengths.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            values: other
                .values
                .iter()
                .map(|&v| self.values[v as usize - 1])
                .collect(),
        })
    }

    /// Direct sum `π ⊕ σ`: the plot of `σ` placed above and to the right.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let m = self.len() as u16;
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + m));
        Permutation { values }
    }

    /// Skew sum `π ⊖ σ`: the plot of `σ` placed below and to the right.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let n = other.len() as u16;
        let mut values: Vec<u16> = self.values.iter().map(|&v| v + n).collect();
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    /// Inflation `skeleton[b_1, …, b_k]`: each entry of the skeleton replaced
    /// by an interval copy of the corresponding block. Blocks must be
    /// nonempty and there must be exactly one per skeleton entry.
    pub fn inflate(&self, blocks: &[Permutation]) -> Result<Self> {
        if blocks.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: blocks.len(),
            });
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::EmptyBlock);
        }
        // Value offset of block i: total size of blocks at skeleton entries
        // with smaller value.
        let n = self.len();
        let mut offsets = vec![0u16; n];
        let mut by_value: Vec<usize> = (0..n).collect();
        by_value.sort_by_key(|&i| self.values[i]);
        let mut acc = 0u16;
        for &i in &by_value {
            offsets[i] = acc;
            acc += blocks[i].len() as u16;
        }
        let mut values = Vec::with_capacity(acc as usize);
        for (i, block) in blocks.iter().enumerate() {
            values.extend(block.values.iter().map(|&v| v + offsets[i]));
        }
        Ok(Permutation { values })
    }

    /// Applies one of the eight plot symmetries.
    pub fn apply_symmetry(&self, sym: Symmetry) -> Self {
        match sym {
            Symmetry::Identity => self.clone(),
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
            Symmetry::Rotate90 => self.complement().inverse(),
            Symmetry::Rotate180 => self.reverse().complement(),
            Symmetry::Rotate270 => self.reverse().inverse(),
            Symmetry::Antidiagonal => self.sorting_dual(),
        }
    }

    /// The orbit of this permutation under the eight symmetries, deduplicated
    /// and sorted.
    pub fn symmetry_orbit(&self) -> Vec<Permutation> {
        let mut orbit: Vec<Permutation> = Symmetry::ALL
            .iter()
            .map(|&s| self.apply_symmetry(s))
            .collect();
        orbit.sort();
        orbit.dedup();
        orbit
    }

    /// The lexicographically least element of the symmetry orbit.
    pub fn symmetry_representative(&self) -> Permutation {
        self.symmetry_orbit().into_iter().next().unwrap()
    }

    /// The pattern of the subsequence at the given 0-based positions (which
    /// must be strictly increasing).
    pub fn pattern_at(&self, positions: &[usize]) -> Permutation {
        pattern_of_values(positions.iter().map(|&i| self.values[i]))
    }

    /// One-point deletion: remove the entry at 0-based position `i` and
    /// renormalize.
    pub fn delete(&self, i: usize) -> Permutation {
        pattern_of_values(
            self.values
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v),
        )
    }

    /// Inserts the new maximum `n+1` before 0-based position `gap`
    /// (`gap == n` appends). This is the one-point extension used by the
    /// avoidance enumerations.
    pub fn insert_max(&self, gap: usize) -> Permutation {
        let n = self.len();
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&self.values[..gap]);
        values.push(n as u16 + 1);
        values.extend_from_slice(&self.values[gap..]);
        Permutation { values }
    }

    /// Entry statistics: fixed points, excedances, displacement set, maximum
    /// drop, left-to-right maxima.
    pub fn statistics(&self) -> EntryStatistics {
        let mut fixed = 0;
        let mut exc = 0;
        let mut disp = BTreeSet::new();
        let mut max_drop = 0i64;
        let mut lr_maxima = Vec::new();
        let mut best = 0u16;
        for (idx, &v) in self.values.iter().enumerate() {
            let i = idx as i64 + 1;
            let d = v as i64 - i;
            disp.insert(d);
            if d == 0 {
                fixed += 1;
            } else if d > 0 {
                exc += 1;
            }
            max_drop = max_drop.max(-d);
            if v > best {
                best = v;
                lr_maxima.push(idx + 1);
            }
        }
        EntryStatistics {
            fixed_point_count: fixed,
            excedance_count: exc,
            displacement_set: disp,
            max_drop: max_drop.max(0) as usize,
            lr_maxima_positions: lr_maxima,
        }
    }

    pub fn is_derangement(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize != i + 1)
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> LexPermutations {
        LexPermutations {
            next: Some(Permutation::identity(n)),
        }
    }
}

/// Normalizes a sequence of distinct values to the permutation with the same
/// relative order.
pub fn pattern_of_values<I: IntoIterator<Item = u16>>(values: I) -> Permutation {
    let vals: Vec<u16> = values.into_iter().collect();
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by_key(|&i| vals[i]);
    let mut out = vec![0u16; vals.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u16 + 1;
    }
    Permutation { values: out }
}

/// Lexicographic iterator over all of `S_n`.
pub struct LexPermutations {
    next: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut v = current.values.clone();
        let n = v.len();
        // standard next-permutation step
        let advanced = (|| {
            if n < 2 {
                return false;
            }
            let mut i = n - 1;
            while i > 0 && v[i - 1] >= v[i] {
                i -= 1;
            }
            if i == 0 {
                return false;
            }
            let mut j = n - 1;
            while v[j] <= v[i - 1] {
                j -= 1;
            }
            v.swap(i - 1, j);
            v[i..].reverse();
            true
        })();
        if advanced {
            self.next = Some(Permutation { values: v });
        }
        Some(current)
    }
}

/// The eight symmetries of the square acting on permutation plots. They form
/// a dihedral group of order eight; reverse, complement, and inverse are the
/// reflections usually taken as generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Reverse,
    Complement,
    Inverse,
    Rotate90,
    Rotate180,
    Rotate270,
    Antidiagonal,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::Inverse,
        Symmetry::Rotate90,
        Symmetry::Rotate180,
        Symmetry::Rotate270,
        Symmetry::Antidiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Identity => "identity",
            Symmetry::Reverse => "reverse",
            Symmetry::Complement => "complement",
            Symmetry::Inverse => "inverse",
            Symmetry::Rotate90 => "rotate90",
            Symmetry::Rotate180 => "rotate180",
            Symmetry::Rotate270 => "rotate270",
            Symmetry::Antidiagonal => "antidiagonal",
        }
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symmetry> {
        Symmetry::ALL
            .iter()
            .copied()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown symmetry {s:?}")))
    }
}

/// Pointwise statistics of a permutation's entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryStatistics {
    /// Number of `i` with `π(i) = i`.
    pub fixed_point_count: usize,
    /// Number of `i` with `π(i) > i`.
    pub excedance_count: usize,
    /// `D(π) = {π(i) − i : i ∈ [n]}`.
    pub displacement_set: BTreeSet<i64>,
    /// `max(0, max{i − π(i)})`.
    pub max_drop: usize,
    /// 1-based positions of the left-to-right maxima, increasing.
    pub lr_maxima_positions: Vec<usize>,
}

/// Does `host` contain `pattern`? True iff some subsequence of `host` is
/// order-isomorphic to `pattern`. The empty pattern is contained in
/// everything.
///
/// `host` may be any sequence of distinct values, not necessarily
/// `1..=n`; only relative order matters.
pub fn contains(pattern: &Permutation, host: &Permutation) -> bool {
    contains_values(&pattern.values, &host.values)
}

pub fn contains_values(pattern: &[u16], host: &[u16]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > host.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(k);
    search_occurrence(pattern, host, 0, &mut chosen, &mut |_| true)
}

/// All occurrences of `pattern` in `host`, as strictly increasing 1-based
/// index tuples, in lexicographic order.
pub fn occurrences(pattern: &Permutation, host: &Permutation) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if pattern.len() > host.len() {
        return out;
    }
    if pattern.is_empty() {
        out.push(Vec::new());
        return out;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    search_occurrence(&pattern.values, &host.values, 0, &mut chosen, &mut |occ| {
        out.push(occ.iter().map(|&i| i + 1).collect());
        false // keep searching
    });
    out
}

/// Backtracking matcher. Visits occurrences in lexicographic order of index
/// tuples; `found` returns true to stop the search.
fn search_occurrence(
    pattern: &[u16],
    host: &[u16],
    start: usize,
    chosen: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return found(chosen);
    }
    let remaining = pattern.len() - j;
    let pj = pattern[j];
    for i in start..=host.len().saturating_sub(remaining) {
        let v = host[i];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(jj, &idx)| (pattern[jj] < pj) == (host[idx] < v));
        if consistent {
            chosen.push(i);
            if search_occurrence(pattern, host, i + 1, chosen, found) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Naive containment oracle: tests every subsequence of the host. Exists as
/// an independent reference for the backtracking matcher; only usable for
/// small hosts.
pub fn contains_naive(pattern: &Permutation, host: &Permutation) -> bool {
    let k = pattern.len();
    let n = host.len();
    if k > n {
        return false;
    }
    subsets_of_size(n, k).any(|subset| host.pattern_at(&subset) == *pattern)
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = Some((0..k).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        if k > 0 && out[0] != n - k {
            let mut next = out.clone();
            // advance the rightmost index that can move
            let mut i = k - 1;
            loop {
                if next[i] < n - (k - i) {
                    next[i] += 1;
                    for j in i + 1..k {
                        next[j] = next[j - 1] + 1;
                    }
                    break;
                }
                i -= 1;
            }
            current = Some(next);
        } else if k == 0 {
            current = None;
        }
        Some(out)
    })
}

impl fmt::Display for Permutation {
    /// One-line text form: space-free digits for `n ≤ 9`, comma-separated
    /// values otherwise. The empty permutation prints as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts both text forms: `"362957184"` and `"10,3,1,..."`. The empty
    /// string and `"ε"` parse as the empty permutation.
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "e" {
            return Ok(Permutation::empty());
        }
        let values: Vec<u16> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u16>()
                        .map_err(|_| Error::Parse(format!("bad value {t:?} in permutation")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .map(|d| d as u16)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in permutation")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_paper_examples() {
        // 32514 occurs in 362957184 as the subsequence 32918
        assert!(contains(&p("32514"), &p("362957184")));
        // no decreasing subsequence of length four
        assert!(!contains(&p("4321"), &p("362957184")));
        assert!(!contains(&p("21"), &p("12")));
        assert!(contains(&p(""), &p("1")));
        assert!(contains(&p(""), &p("")));
    }

    #[test]
    fn occurrence_lists() {
        let occ = occurrences(&p("12"), &p("123"));
        assert_eq!(occ, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let occ = occurrences(&p("21"), &p("231"));
        assert_eq!(occ, vec![vec![1, 3], vec![2, 3]]);
        assert!(occurrences(&p("21"), &p("12")).is_empty());
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(p("231").apply_symmetry(Symmetry::Reverse), p("132"));
        // antidiagonal image of 231 is 231 itself: evaluate ρ∘π⁻¹∘ρ pointwise
        assert_eq!(p("231").apply_symmetry(Symmetry::Antidiagonal), p("231"));
        assert_eq!(p("312").apply_symmetry(Symmetry::Inverse), p("231"));
    }

    #[test]
    fn symmetry_group_laws() {
        for n in 0..=7 {
            for perm in Permutation::all(n) {
                let r90 = perm.apply_symmetry(Symmetry::Rotate90);
                let r180 = r90.apply_symmetry(Symmetry::Rotate90);
                let r270 = r180.apply_symmetry(Symmetry::Rotate90);
                let r360 = r270.apply_symmetry(Symmetry::Rotate90);
                assert_eq!(r360, perm);
                assert_eq!(r180, perm.apply_symmetry(Symmetry::Rotate180));
                assert_eq!(r270, perm.apply_symmetry(Symmetry::Rotate270));
                for refl in [
                    Symmetry::Reverse,
                    Symmetry::Complement,
                    Symmetry::Inverse,
                    Symmetry::Antidiagonal,
                ] {
                    assert_eq!(perm.apply_symmetry(refl).apply_symmetry(refl), perm);
                }
                // (π^r)⁻¹ = (π⁻¹)^c
                assert_eq!(perm.reverse().inverse(), perm.inverse().complement());
            }
        }
    }

    #[test]
    fn containment_is_symmetry_invariant() {
        for n in 0..=5 {
            for host in Permutation::all(n) {
                for sigma in Permutation::all(3) {
                    for &sym in &Symmetry::ALL {
                        assert_eq!(
                            contains(&sigma, &host),
                            contains(&sigma.apply_symmetry(sym), &host.apply_symmetry(sym)),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sums_and_composition() {
        assert_eq!(p("321").direct_sum(&p("1")), p("3214"));
        assert_eq!(Permutation::empty().direct_sum(&p("21")), p("21"));
        // layered permutation 321 4 8765 from §-style building blocks
        let layered = p("321").direct_sum(&p("1")).direct_sum(&p("4321"));
        assert_eq!(layered, p("32148765"));

        assert_eq!(p("1").skew_sum(&p("12")), p("312"));
        assert_eq!(p("1").skew_sum(&p("21")), p("321"));
        assert_eq!(p("1").skew_sum(&p("231")), p("4231"));

        assert_eq!(p("321").compose(&p("231")).unwrap(), p("213"));
        assert_eq!(p("312").compose(&p("231")).unwrap(), p("123"));
        let pi = p("35241");
        assert_eq!(pi.compose(&Permutation::identity(5)).unwrap(), pi);
        assert!(p("12").compose(&p("123")).is_err());
    }

    #[test]
    fn inflation() {
        assert_eq!(p("21").inflate(&[p("1"), p("1")]).unwrap(), p("21"));
        assert_eq!(p("12").inflate(&[p("21"), p("1")]).unwrap(), p("213"));
        assert!(p("12").inflate(&[p("1")]).is_err());
        assert!(p("12").inflate(&[p("1"), Permutation::empty()]).is_err());
    }

    #[test]
    fn statistics_examples() {
        let s = p("123").statistics();
        assert_eq!(s.fixed_point_count, 3);
        assert_eq!(s.excedance_count, 0);
        assert_eq!(s.displacement_set, BTreeSet::from([0]));
        assert_eq!(s.max_drop, 0);

        let s = p("231").statistics();
        assert_eq!(s.fixed_point_count, 0);
        assert_eq!(s.excedance_count, 2);
        assert_eq!(s.displacement_set, BTreeSet::from([1, -2]));
        assert_eq!(s.max_drop, 2);

        let s = p("321").statistics();
        assert_eq!(s.fixed_point_count, 1);
        assert_eq!(s.excedance_count, 1);
        assert_eq!(s.lr_maxima_positions, vec![1]);
    }

    #[test]
    fn displacement_of_direct_sum_is_union() {
        for m in 0..=5 {
            for pi in Permutation::all(m) {
                for sigma in Permutation::all(5 - m) {
                    let mut want = pi.statistics().displacement_set;
                    want.extend(sigma.statistics().displacement_set);
                    if pi.len() + sigma.len() == 0 {
                        continue;
                    }
                    assert_eq!(pi.direct_sum(&sigma).statistics().displacement_set, want);
                }
            }
        }
    }

    #[test]
    fn contains_matches_naive_oracle() {
        // exhaustive over small sizes, patterns up to length 4
        for n in 0..=6 {
            for host in Permutation::all(n) {
                for k in 0..=4usize.min(n + 1) {
                    for pat in Permutation::all(k) {
                        assert_eq!(
                            contains(&pat, &host),
                            contains_naive(&pat, &host),
                            "pattern {pat} host {host}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("362957184").to_string(), "362957184");
        let long: Permutation = "10,3,1,2,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(long.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(long.len(), 10);
        assert_eq!(p("").len(), 0);
        assert!("102".parse::<Permutation>().is_err());
        assert!("11".parse::<Permutation>().is_err());
        assert!("1,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn lex_iteration() {
        let all: Vec<_> = Permutation::all(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], p("123"));
        assert_eq!(all[5], p("321"));
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
    }

    #[test]
    fn insert_and_delete_roundtrip() {
        let base = p("2314");
        for gap in 0..=4 {
            let child = base.insert_max(gap);
            assert_eq!(child.len(), 5);
            assert_eq!(child.delete(gap), base);
        }
    }
}
