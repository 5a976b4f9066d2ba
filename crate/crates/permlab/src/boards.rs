//! Ferrers boards, full rook placements, pattern-avoiding placement counts,
//! and shape-Wilf equivalence probing.
//!
//! Orientation: columns run left to right, rows bottom to top, and the board
//! is the SW-closed region under the height profile. Heights are weakly
//! decreasing, so the square-fitting condition in pattern containment
//! reduces to one comparison against the height of the last chosen column.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::classes::{count_av, ClassSpec};
use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;

/// A Ferrers board: weakly decreasing positive column heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersShape {
    heights: Vec<u16>,
}

impl FerrersShape {
    pub fn new(heights: Vec<u16>) -> Result<Self> {
        if heights.contains(&0) {
            return Err(Error::Parse("heights must be positive".into()));
        }
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("heights must be weakly decreasing".into()));
        }
        Ok(FerrersShape { heights })
    }

    pub fn square(n: usize) -> Self {
        FerrersShape {
            heights: vec![n as u16; n],
        }
    }

    pub fn heights(&self) -> &[u16] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    /// A full rook placement needs one rook in each of `n` rows and `n`
    /// columns, which exists exactly when `h_i ≥ n−i+1` for every column and
    /// no column pokes above row `n`.
    pub fn admits_full_placement(&self) -> bool {
        let n = self.heights.len() as u16;
        self.heights.first().is_none_or(|&h| h <= n)
            && self
                .heights
                .iter()
                .enumerate()
                .all(|(i, &h)| h >= n - i as u16)
    }

    /// All frp-admissible shapes with `n` columns, in lexicographic order of
    /// their height vectors. There are Catalan-many of them.
    pub fn admissible(n: usize) -> Vec<FerrersShape> {
        fn rec(n: usize, heights: &mut Vec<u16>, out: &mut Vec<FerrersShape>) {
            let i = heights.len();
            if i == n {
                out.push(FerrersShape {
                    heights: heights.clone(),
                });
                return;
            }
            let lo = (n - i) as u16; // h_{i+1} ≥ n − i
            let hi = heights.last().copied().unwrap_or(n as u16);
            for h in lo..=hi {
                heights.push(h);
                rec(n, heights, out);
                heights.pop();
            }
        }
        let mut out = Vec::new();
        let mut heights: Vec<u16> = Vec::with_capacity(n);
        rec(n, &mut heights, &mut out);
        out
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.heights.iter().map(|h| h.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FerrersShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<FerrersShape> {
        let heights = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad height {t:?} in shape")))
            })
            .collect::<Result<Vec<u16>>>()?;
        FerrersShape::new(heights)
    }
}

/// A full rook placement: one rook per row and per column, every rook inside
/// the board. `rows[i]` is the 1-based row of the rook in column `i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRookPlacement {
    shape: FerrersShape,
    rows: Vec<u16>,
}

impl FullRookPlacement {
    pub fn new(shape: FerrersShape, rows: Vec<u16>) -> Result<Self> {
        if rows.len() != shape.columns() {
            return Err(Error::LengthMismatch {
                left: rows.len(),
                right: shape.columns(),
            });
        }
        Permutation::new(rows.clone())
            .map_err(|_| Error::Parse("rook rows must hit each row exactly once".into()))?;
        if rows.iter().zip(shape.heights()).any(|(&r, &h)| r > h) {
            return Err(Error::Parse("rook outside the board".into()));
        }
        Ok(FullRookPlacement { shape, rows })
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows
    }

    /// The permutation read off the rook rows (the same placement on the
    /// square board).
    pub fn as_permutation(&self) -> Permutation {
        Permutation::new(self.rows.clone()).expect("rows form a bijection")
    }
}

impl fmt::Display for FullRookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.as_permutation(), self.shape)
    }
}

/// Full-enumeration guard: placements grow like `n!`.
pub const FRP_ENUMERATION_BOUND: usize = 9;

/// All full rook placements of the shape, lexicographic by rook rows.
pub fn frps(shape: &FerrersShape) -> Result<Vec<FullRookPlacement>> {
    fn rec(
        shape: &FerrersShape,
        rows: &mut Vec<u16>,
        used: &mut [bool],
        out: &mut Vec<FullRookPlacement>,
    ) {
        let col = rows.len();
        if col == shape.columns() {
            out.push(FullRookPlacement {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 1..=shape.heights()[col] {
            if !used[r as usize] {
                used[r as usize] = true;
                rows.push(r);
                rec(shape, rows, used, out);
                rows.pop();
                used[r as usize] = false;
            }
        }
    }
    if !shape.admits_full_placement() {
        return Err(Error::InadmissibleShape);
    }
    let n = shape.columns();
    if n > FRP_ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "full rook placement enumeration",
            requested: n,
            limit: FRP_ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut rows: Vec<u16> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    rec(shape, &mut rows, &mut used, &mut out);
    Ok(out)
}

/// Does the placement contain the pattern `σ`?
///
/// Containment asks for columns `i_1 < ⋯ < i_k` whose rooks are
/// order-isomorphic to `σ` *and* whose bounding square sits inside the
/// board. With SW-closed shapes the square fits exactly when the chosen
/// rows all lie at or below the height of the last chosen column, so the
/// matcher carries a running maximum and prunes against the current column
/// height (heights only shrink to the right).
pub fn frp_contains(placement: &FullRookPlacement, sigma: &Permutation) -> bool {
    let rows = placement.rows();
    let heights = placement.shape().heights();
    if sigma.is_empty() {
        return true;
    }
    if sigma.len() > rows.len() {
        return false;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(sigma.len());
    occurrence_with_corner(sigma.values(), rows, heights, 0, &mut chosen)
}

fn occurrence_with_corner(
    sigma: &[u16],
    rows: &[u16],
    heights: &[u16],
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    if j == sigma.len() {
        return true;
    }
    let remaining = sigma.len() - j;
    for c in start..=rows.len().saturating_sub(remaining) {
        let v = rows[c];
        // order consistency with the pattern so far
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(jj, &cc)| (sigma[jj] < sigma[j]) == (rows[cc] < v));
        if !consistent {
            continue;
        }
        // every chosen row must stay within the current column's height;
        // heights only decrease, so a violation here can never recover
        let max_row = chosen.iter().map(|&cc| rows[cc]).fold(v, u16::max);
        if max_row > heights[c] {
            continue;
        }
        chosen.push(c);
        if occurrence_with_corner(sigma, rows, heights, c + 1, chosen) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Brute-force containment reference: delete column/row pairs and test
/// whether the induced sub-board is exactly the `k×k` square carrying `σ`.
pub fn frp_contains_by_deletion(placement: &FullRookPlacement, sigma: &Permutation) -> bool {
    let n = placement.rows().len();
    let k = sigma.len();
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let rows = placement.rows();
    let heights = placement.shape().heights();
    let mut cols: Vec<usize> = (0..k).collect();
    loop {
        // keep columns in `cols` and exactly their rook rows
        let kept_rows: Vec<u16> = cols.iter().map(|&c| rows[c]).collect();
        let mut sorted_rows = kept_rows.clone();
        sorted_rows.sort_unstable();
        // induced height of a kept column = number of kept rows under it
        let square = cols.iter().all(|&c| {
            let induced = sorted_rows.iter().filter(|&&r| r <= heights[c]).count();
            induced == k
        });
        if square {
            let pattern = crate::perm::pattern_of_values(kept_rows.iter().copied());
            if pattern == *sigma {
                return true;
            }
        }
        // next k-combination of columns
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if cols[i] != i + n - k {
                cols[i] += 1;
                for j in i + 1..k {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The number of `β`-avoiding full rook placements of the shape, by
/// column-by-column backtracking.
///
/// After placing the rook of column `c`, any occurrence of `β` whose last
/// column is `c` has its corner condition settled (later columns are lower),
/// so the branch is pruned exactly when such an occurrence exists.
pub fn count_avoiding_frps(shape: &FerrersShape, beta: &Permutation) -> Result<BigUint> {
    if !shape.admits_full_placement() {
        return Err(Error::InadmissibleShape);
    }
    let n = shape.columns();
    if beta.is_empty() {
        return Ok(BigUint::ZERO); // every placement contains the empty pattern
    }
    let mut rows: Vec<u16> = Vec::with_capacity(n);
    let mut used = vec![false; n + 2];
    let count = count_rec(shape.heights(), beta.values(), &mut rows, &mut used);
    Ok(BigUint::from(count))
}

fn count_rec(heights: &[u16], beta: &[u16], rows: &mut Vec<u16>, used: &mut [bool]) -> u64 {
    let col = rows.len();
    if col == heights.len() {
        return 1;
    }
    let mut total = 0;
    for r in 1..=heights[col] {
        if used[r as usize] {
            continue;
        }
        rows.push(r);
        if !completes_occurrence(beta, rows, heights) {
            used[r as usize] = true;
            total += count_rec(heights, beta, rows, used);
            used[r as usize] = false;
        }
        rows.pop();
    }
    total
}

/// Is there an occurrence of `beta` among the placed columns ending at the
/// newest one? All chosen rows must fit under the newest column's height
/// (the corner condition for an occurrence ending here).
fn completes_occurrence(beta: &[u16], rows: &[u16], heights: &[u16]) -> bool {
    fn rec(
        beta: &[u16],
        rows: &[u16],
        cap: u16,
        last_val: u16,
        c: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let j = chosen.len();
        if j == beta.len() - 1 {
            return true;
        }
        let start = chosen.last().map_or(0, |&x| x + 1);
        let remaining = beta.len() - 1 - j;
        if c < remaining {
            return false;
        }
        for x in start..=(c - remaining) {
            let v = rows[x];
            if v > cap {
                continue;
            }
            if (beta[j] < beta[beta.len() - 1]) != (v < last_val) {
                continue;
            }
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(jj, &cc)| (beta[jj] < beta[j]) == (rows[cc] < v));
            if !consistent {
                continue;
            }
            chosen.push(x);
            if rec(beta, rows, cap, last_val, c, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
        false
    }
    let k = beta.len();
    if k > rows.len() {
        return false;
    }
    let c = rows.len() - 1;
    let cap = heights[c];
    if rows[c] > cap {
        return false;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k - 1);
    rec(beta, rows, cap, rows[c], c, &mut chosen)
}

/// Result of scanning all admissible shapes for a count disagreement
/// between two patterns.
#[derive(Debug, Clone)]
pub struct ShapeWilfProbe {
    pub equivalent_so_far: bool,
    pub shapes_checked: u64,
    /// First shape (in column-count, then lexicographic order) where the
    /// avoiding-placement counts differ, with both counts.
    pub separating_shape: Option<(FerrersShape, BigUint, BigUint)>,
}

/// Probes shape-Wilf equivalence of `β` and `γ` over every admissible shape
/// with at most `n_max` columns.
pub fn shape_wilf_probe(
    beta: &Permutation,
    gamma: &Permutation,
    n_max: usize,
) -> Result<ShapeWilfProbe> {
    if n_max > 8 {
        return Err(Error::BoundExceeded {
            what: "shape-Wilf probe columns",
            requested: n_max,
            limit: 8,
        });
    }
    let mut checked = 0u64;
    for n in 1..=n_max {
        let shapes = FerrersShape::admissible(n);
        checked += shapes.len() as u64;
        let counts: Vec<(BigUint, BigUint)> = shapes
            .par_iter()
            .map(|shape| {
                let b = count_avoiding_frps(shape, beta).expect("admissible by construction");
                let g = count_avoiding_frps(shape, gamma).expect("admissible by construction");
                (b, g)
            })
            .collect();
        for (shape, (b, g)) in shapes.into_iter().zip(counts) {
            if b != g {
                return Ok(ShapeWilfProbe {
                    equivalent_so_far: false,
                    shapes_checked: checked,
                    separating_shape: Some((shape, b, g)),
                });
            }
        }
    }
    Ok(ShapeWilfProbe {
        equivalent_so_far: true,
        shapes_checked: checked,
        separating_shape: None,
    })
}

/// Counts of 132-, 321-, and 231-avoiding placements on one shape, with the
/// dominance comparison `132 ≥ 321 ≥ 231`.
#[derive(Debug, Clone)]
pub struct StankovaReport {
    pub count_132: BigUint,
    pub count_321: BigUint,
    pub count_231: BigUint,
    pub dominance_holds: bool,
}

pub fn stankova_dominance(shape: &FerrersShape) -> Result<StankovaReport> {
    let count_132 = count_avoiding_frps(shape, &"132".parse().unwrap())?;
    let count_321 = count_avoiding_frps(shape, &"321".parse().unwrap())?;
    let count_231 = count_avoiding_frps(shape, &"231".parse().unwrap())?;
    let dominance_holds = count_132 >= count_321 && count_321 >= count_231;
    Ok(StankovaReport {
        count_132,
        count_321,
        count_231,
        dominance_holds,
    })
}

/// Least `n ≤ n_max` at which `|Av_n(β⊕1)| ≠ |Av_n(γ⊕1)|`, if any. A
/// separation certifies that `β` and `γ` are not shape-Wilf-equivalent.
pub fn oplus_one_separator(
    beta: &Permutation,
    gamma: &Permutation,
    n_max: usize,
) -> Result<Option<usize>> {
    let one = Permutation::identity(1);
    let b1 = ClassSpec::single(beta.direct_sum(&one));
    let g1 = ClassSpec::single(gamma.direct_sum(&one));
    let cb = count_av(&b1, n_max)?;
    let cg = count_av(&g1, n_max)?;
    Ok((0..=n_max).find(|&n| cb.terms()[n] != cg.terms()[n]))
}
