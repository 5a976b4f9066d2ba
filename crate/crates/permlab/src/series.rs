//! Exact diagnostics on counting sequences: Hankel determinants, Stieltjes
//! continued fractions, ratio profiles, and algebraic-equation residuals.
//!
//! Nothing in this module uses floating point. Determinants are computed by
//! fraction-free elimination over big integers, continued fractions by series
//! manipulation over big rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::BivariatePoly;
use crate::Result;

/// An exact integer sequence indexed by length from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingSequence {
    terms: Vec<BigUint>,
}

impl CountingSequence {
    pub fn new(terms: Vec<BigUint>) -> Self {
        CountingSequence { terms }
    }

    pub fn from_u64(terms: &[u64]) -> Self {
        CountingSequence {
            terms: terms.iter().map(|&t| BigUint::from(t)).collect(),
        }
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, n: usize) -> Option<&BigUint> {
        self.terms.get(n)
    }

    /// The terms as `u64`, when they fit. Handy in tests.
    pub fn as_u64(&self) -> Option<Vec<u64>> {
        self.terms.iter().map(|t| u64::try_from(t).ok()).collect()
    }

    /// Catalan numbers `C_0..C_{count-1}`.
    pub fn catalan(count: usize) -> Self {
        let mut terms = Vec::with_capacity(count);
        let mut c = BigUint::one();
        for n in 0..count {
            terms.push(c.clone());
            // C_{n+1} = C_n * 2(2n+1)/(n+2)
            c = c * BigUint::from(2 * (2 * n as u64 + 1)) / BigUint::from(n as u64 + 2);
        }
        CountingSequence { terms }
    }

    /// Factorials `0!..(count-1)!`.
    pub fn factorials(count: usize) -> Self {
        let mut terms = Vec::with_capacity(count);
        let mut f = BigUint::one();
        for n in 0..count {
            if n > 0 {
                f *= BigUint::from(n as u64);
            }
            terms.push(f.clone());
        }
        CountingSequence { terms }
    }

    /// Parses the sequence file format: one integer per line, `#` starts a
    /// comment, blank lines ignored, index from 0.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let t = BigUint::from_str(line)
                .map_err(|_| Error::Parse(format!("line {}: bad integer {line:?}", lineno + 1)))?;
            terms.push(t);
        }
        Ok(CountingSequence { terms })
    }

    /// Renders in the sequence file format.
    pub fn to_file(&self) -> String {
        let mut out = String::new();
        for t in &self.terms {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CountingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Exact leading principal minors of the Hankel matrix `[a_{i+j}]` and of the
/// once-shifted Hankel matrix `[a_{i+j+1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelReport {
    /// Determinants of the leading `m×m` minors, `m = 1..=max_order`.
    pub determinants: Vec<BigInt>,
    /// The same for the once-shifted matrix.
    pub shifted_determinants: Vec<BigInt>,
    /// Index (1-based order) of the first negative determinant in either
    /// list, if any.
    pub first_negative_order: Option<usize>,
}

impl HankelReport {
    pub fn all_nonnegative(&self) -> bool {
        self.first_negative_order.is_none()
    }
}

/// Computes the Hankel report to the given order. Requires `2·max_order − 1`
/// terms (so that the shifted matrix of the largest order is filled).
pub fn hankel_report(seq: &CountingSequence, max_order: usize) -> Result<HankelReport> {
    let needed = 2 * max_order;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            available: seq.len(),
        });
    }
    let entries: Vec<BigInt> = seq.terms().iter().map(|t| BigInt::from(t.clone())).collect();
    let mut determinants = Vec::with_capacity(max_order);
    let mut shifted = Vec::with_capacity(max_order);
    for m in 1..=max_order {
        determinants.push(hankel_minor(&entries, 0, m));
        shifted.push(hankel_minor(&entries, 1, m));
    }
    let first_negative_order = (1..=max_order).find(|&m| {
        determinants[m - 1].is_negative() || shifted[m - 1].is_negative()
    });
    Ok(HankelReport {
        determinants,
        shifted_determinants: shifted,
        first_negative_order,
    })
}

/// Determinant of the `m×m` matrix `[a_{i+j+shift}]` by Bareiss fraction-free
/// elimination.
fn hankel_minor(entries: &[BigInt], shift: usize, m: usize) -> BigInt {
    let mut mat: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| entries[i + j + shift].clone()).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..m {
        if mat[k][k].is_zero() {
            let swap = (k + 1..m).find(|&r| !mat[r][k].is_zero());
            match swap {
                Some(r) => {
                    mat.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = num / &prev; // exact division in Bareiss
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[m - 1][m - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Coefficients of the Stieltjes-type continued fraction
/// `α_0 / (1 − α_1 x / (1 − α_2 x / (1 − ⋯)))` fitted to the series.
///
/// A zero pivot with a nonzero tail means the expansion does not exist in
/// this form; that is reported through `breakdown_index`, not as an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StieltjesCf {
    pub alphas: Vec<BigRational>,
    pub breakdown_index: Option<usize>,
}

impl StieltjesCf {
    pub fn all_nonnegative(&self) -> bool {
        self.breakdown_index.is_none() && self.alphas.iter().all(|a| !a.is_negative())
    }
}

/// Extracts continued-fraction coefficients from a counting sequence.
/// With `t` terms available, up to `t − 1` coefficients past `α_0` can be
/// computed. Requires `seq[0] ≠ 0`.
pub fn stieltjes_cf(seq: &CountingSequence) -> Result<StieltjesCf> {
    if seq.is_empty() || seq.terms()[0].is_zero() {
        return Err(Error::InsufficientTerms {
            needed: 1,
            available: 0,
        });
    }
    let mut f: Vec<BigRational> = seq
        .terms()
        .iter()
        .map(|t| BigRational::from(BigInt::from(t.clone())))
        .collect();
    let a0 = f[0].clone();
    let mut alphas = vec![a0.clone()];
    for c in f.iter_mut() {
        *c /= &a0;
    }
    loop {
        // peel one level: f = 1/(1 − α x g) with g again of constant term 1,
        // so α x g = (1 − 1/f)/1 and we read α off the x-coefficient.
        if f.len() < 2 {
            break;
        }
        let inv = series_inverse(&f);
        let mut h: Vec<BigRational> = inv.into_iter().map(|c| -c).collect();
        h[0] += BigRational::one();
        h.remove(0); // h was divisible by x: (1 − 1/f)/x
        if h.is_empty() {
            break;
        }
        let alpha = h[0].clone();
        if alpha.is_zero() {
            if h.iter().any(|c| !c.is_zero()) {
                let idx = alphas.len();
                alphas.push(alpha);
                return Ok(StieltjesCf {
                    alphas,
                    breakdown_index: Some(idx),
                });
            }
            // the series terminates: remaining coefficients are all zero
            alphas.push(alpha);
            break;
        }
        for c in h.iter_mut() {
            *c /= &alpha;
        }
        alphas.push(alpha);
        f = h;
    }
    Ok(StieltjesCf {
        alphas,
        breakdown_index: None,
    })
}

/// Re-expands a truncated continued fraction back into a power series with
/// `order` terms. Used to check that the extraction reproduces its input.
pub fn cf_to_series(cf: &StieltjesCf, order: usize) -> Vec<BigRational> {
    // innermost convergent is the constant series 1
    let mut g = vec![BigRational::one()];
    g.resize(order, BigRational::zero());
    for alpha in cf.alphas.iter().skip(1).rev() {
        // g := 1/(1 − α x g)
        let mut denom = vec![BigRational::one()];
        denom.resize(order, BigRational::zero());
        for i in 1..order {
            denom[i] = -(alpha * &g[i - 1]);
        }
        g = series_inverse(&denom);
    }
    g.iter().map(|c| c * &cf.alphas[0]).collect()
}

/// Multiplicative inverse of a power series with nonzero constant term, to
/// the same truncation order.
fn series_inverse(f: &[BigRational]) -> Vec<BigRational> {
    let n = f.len();
    let mut inv = vec![BigRational::zero(); n];
    inv[0] = BigRational::one() / &f[0];
    for i in 1..n {
        let mut acc = BigRational::zero();
        for j in 1..=i {
            acc += &f[j] * &inv[i - j];
        }
        inv[i] = -acc / &f[0];
    }
    inv
}

/// Exact termwise ratios `numer[n] / denom[n]`. Index 0 is skipped when the
/// denominator there is zero (ratios are reported from index 0 otherwise);
/// a zero denominator beyond index 0 is an error carrying the offending
/// index.
pub fn ratio_profile(
    numer: &CountingSequence,
    denom: &CountingSequence,
) -> Result<Vec<BigRational>> {
    let n = numer.len().min(denom.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let d = &denom.terms()[i];
        if d.is_zero() {
            if i == 0 {
                out.push(BigRational::zero());
                continue;
            }
            return Err(Error::DivisionByZero { index: i });
        }
        out.push(BigRational::new(
            BigInt::from(numer.terms()[i].clone()),
            BigInt::from(d.clone()),
        ));
    }
    Ok(out)
}

/// Renders an exact rational as a decimal string with the given number of
/// digits after the point, rounded half-up. Output-only; no floats.
pub fn rational_decimal(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().abs();
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = &num * &scale;
    let mut q = &scaled / &den;
    let rem = &scaled % &den;
    if BigInt::from(2) * rem >= den {
        q += 1;
    }
    let int = &q / &scale;
    let frac = &q % &scale;
    let mut out = String::new();
    if neg && !q.is_zero() {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    out
}

/// Outcome of substituting a truncated counting series into a bivariate
/// polynomial equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    /// Lowest degree with a nonzero coefficient, or `None` if the residual
    /// vanishes through `checked_through`.
    pub first_nonzero_order: Option<usize>,
    /// Orders `0..=checked_through` were examined.
    pub checked_through: usize,
}

/// Substitutes `f(x) = Σ seq[n] xⁿ` into `poly(x, f)` truncated at the length
/// of the sequence and reports the lowest order with a nonzero coefficient.
pub fn algebraic_residual(poly: &BivariatePoly, seq: &CountingSequence) -> Result<ResidualReport> {
    if seq.is_empty() {
        return Err(Error::InsufficientTerms {
            needed: 1,
            available: 0,
        });
    }
    if poly.is_zero() {
        return Err(Error::Parse("polynomial must be nonzero".into()));
    }
    let order = seq.len();
    let f: Vec<BigInt> = seq.terms().iter().map(|t| BigInt::from(t.clone())).collect();

    let max_fpow = poly.terms().iter().map(|&(_, _, b)| b).max().unwrap_or(0);
    // powers of f, truncated
    let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(max_fpow as usize + 1);
    let mut one = vec![BigInt::zero(); order];
    one[0] = BigInt::one();
    powers.push(one);
    for _ in 0..max_fpow {
        let prev = powers.last().unwrap();
        powers.push(truncated_mul(prev, &f, order));
    }

    let mut residual = vec![BigInt::zero(); order];
    for (c, xe, fe) in poly.terms() {
        let base = &powers[*fe as usize];
        for k in 0..order {
            let shifted = k + *xe as usize;
            if shifted >= order {
                break;
            }
            residual[shifted] += c * &base[k];
        }
    }
    Ok(ResidualReport {
        first_nonzero_order: residual.iter().position(|c| !c.is_zero()),
        checked_through: order - 1,
    })
}

fn truncated_mul(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= order {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Checks the identity `C_n = 2·F_n + F_{n−1}` between the Catalan numbers
/// and a Fine-type sequence, for `1 ≤ n < min(len)`.
///
/// Index alignment: both sequences are indexed by permutation length with
/// `F_0 = 1` (the empty permutation has no fixed point, so it is counted as a
/// derangement) and `F_1 = 0`. With that convention the identity holds for
/// every `n ≥ 1`.
pub fn fine_catalan_check(
    fine: &CountingSequence,
    catalan: &CountingSequence,
    n_max: usize,
) -> Result<bool> {
    let have = fine.len().min(catalan.len());
    if n_max + 1 > have {
        return Err(Error::InsufficientTerms {
            needed: n_max + 1,
            available: have,
        });
    }
    for n in 1..=n_max {
        let lhs = catalan.terms()[n].clone();
        let rhs = BigUint::from(2u32) * &fine.terms()[n] + &fine.terms()[n - 1];
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(terms: &[u64]) -> CountingSequence {
        CountingSequence::from_u64(terms)
    }

    #[test]
    fn catalan_constructor() {
        assert_eq!(
            CountingSequence::catalan(10).as_u64().unwrap(),
            vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
        );
    }

    #[test]
    fn hankel_catalan_all_ones() {
        let cat = CountingSequence::catalan(12);
        let report = hankel_report(&cat, 5).unwrap();
        assert!(report.determinants.iter().all(|d| *d == BigInt::one()));
        assert!(report.shifted_determinants.iter().all(|d| *d == BigInt::one()));
        assert!(report.all_nonnegative());
    }

    #[test]
    fn hankel_constant_sequence_degenerates() {
        let ones = seq(&[1, 1, 1, 1, 1, 1, 1, 1]);
        let report = hankel_report(&ones, 3).unwrap();
        assert_eq!(report.determinants, vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn hankel_fibonacci_negative() {
        // Cassini: shifted determinants alternate 1, −1
        let fib = seq(&[1, 1, 2, 3, 5, 8, 13, 21]);
        let report = hankel_report(&fib, 3).unwrap();
        assert_eq!(report.shifted_determinants[1], BigInt::from(-1));
        assert_eq!(report.first_negative_order, Some(2));
    }

    #[test]
    fn hankel_insufficient_terms() {
        assert!(matches!(
            hankel_report(&seq(&[1, 1, 2]), 3),
            Err(Error::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn stieltjes_catalan_all_ones() {
        let cat = CountingSequence::catalan(13);
        let cf = stieltjes_cf(&cat).unwrap();
        assert!(cf.breakdown_index.is_none());
        assert!(cf.alphas.len() >= 11);
        for a in cf.alphas.iter().take(11) {
            assert_eq!(*a, BigRational::one());
        }
    }

    #[test]
    fn stieltjes_geometric() {
        let geo = seq(&[1, 3, 9, 27, 81, 243]);
        let cf = stieltjes_cf(&geo).unwrap();
        assert!(cf.breakdown_index.is_none());
        assert_eq!(cf.alphas[0], BigRational::one());
        assert_eq!(cf.alphas[1], BigRational::from(BigInt::from(3)));
        for a in &cf.alphas[2..] {
            assert!(a.is_zero());
        }
    }

    #[test]
    fn stieltjes_fibonacci_not_a_moment_sequence() {
        let fib = seq(&[1, 1, 2, 3, 5, 8, 13, 21]);
        let cf = stieltjes_cf(&fib).unwrap();
        // frozen from the quotient-difference run: 1, 1, 1, −1, …
        assert_eq!(cf.alphas[3], -BigRational::one());
        assert!(!cf.all_nonnegative());
    }

    #[test]
    fn cf_reconstruction_roundtrip() {
        for terms in [
            vec![1u64, 1, 2, 5, 14, 42, 132],
            vec![2, 6, 22, 90, 394, 1806],
            vec![1, 3, 9, 27, 81],
            vec![5, 0, 0, 0],
        ] {
            let s = seq(&terms);
            let cf = stieltjes_cf(&s).unwrap();
            if cf.breakdown_index.is_some() {
                continue;
            }
            let back = cf_to_series(&cf, terms.len());
            for (i, t) in terms.iter().enumerate() {
                assert_eq!(back[i], BigRational::from(BigInt::from(*t)), "at {i} of {terms:?}");
            }
        }
    }

    #[test]
    fn ratio_profiles() {
        let fine = seq(&[1, 0, 1, 2, 6]);
        let cat = CountingSequence::catalan(5);
        let ratios = ratio_profile(&fine, &cat).unwrap();
        assert_eq!(ratios[3], BigRational::new(BigInt::from(2), BigInt::from(5)));
        assert_eq!(rational_decimal(&ratios[3], 9), "0.400000000");
        let same = ratio_profile(&cat, &cat).unwrap();
        assert!(same.iter().all(|r| r.is_one()));
        let bad = ratio_profile(&seq(&[1, 1]), &seq(&[1, 0]));
        assert_eq!(bad, Err(Error::DivisionByZero { index: 1 }));
    }

    #[test]
    fn residual_of_trivial_equation() {
        // (1−x)f − 1 on the all-ones series
        let poly = BivariatePoly::from_i64(&[(1, 0, 1), (-1, 1, 1), (-1, 0, 0)]);
        let ones = seq(&[1; 12]);
        let rep = algebraic_residual(&poly, &ones).unwrap();
        assert_eq!(rep.first_nonzero_order, None);
        assert_eq!(rep.checked_through, 11);
    }

    #[test]
    fn residual_on_catalan_fails_early() {
        // The (2,2)-stack minimal polynomial does not annihilate Catalan:
        // first nonzero coefficient is at x^3 (value −1 by direct expansion).
        let rep = algebraic_residual(&BivariatePoly::stack22_minimal(), &CountingSequence::catalan(8)).unwrap();
        assert_eq!(rep.first_nonzero_order, Some(3));
    }

    #[test]
    fn fine_catalan_identity() {
        let fine = seq(&[1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724]);
        let cat = CountingSequence::catalan(12);
        assert!(fine_catalan_check(&fine, &cat, 11).unwrap());
        let mut bad = fine.terms().to_vec();
        bad[5] += 1u32;
        let bad = CountingSequence::new(bad);
        assert!(!fine_catalan_check(&bad, &cat, 11).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        // pseudo-random Hankel matrices, exact determinants both ways
        fn naive_det(m: &[Vec<BigInt>]) -> BigInt {
            let n = m.len();
            if n == 0 {
                return BigInt::one();
            }
            let mut det = BigInt::from(0);
            for (j, lead) in m[0].iter().enumerate() {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = lead * naive_det(&minor);
                if j % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % 10
        };
        for _ in 0..40 {
            let terms: Vec<BigInt> = (0..9).map(|_| BigInt::from(next())).collect();
            for m in 1..=4usize {
                for shift in 0..2usize {
                    let matrix: Vec<Vec<BigInt>> = (0..m)
                        .map(|i| (0..m).map(|j| terms[i + j + shift].clone()).collect())
                        .collect();
                    assert_eq!(
                        hankel_minor(&terms, shift, m),
                        naive_det(&matrix),
                        "terms {terms:?} shift {shift} order {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn sequence_file_roundtrip() {
        let text = "# Fine numbers\n1\n0\n1\n2\n\n6 # n = 4\n";
        let s = CountingSequence::parse_file(text).unwrap();
        assert_eq!(s.as_u64().unwrap(), vec![1, 0, 1, 2, 6]);
        let round = CountingSequence::parse_file(&s.to_file()).unwrap();
        assert_eq!(round, s);
    }
}
