//! Integer polynomials in one variable, and the little bivariate form needed
//! for algebraic-series residual checks.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial with big-integer coefficients, stored in ascending degree
/// with no trailing zero (the zero polynomial is an empty list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in `x` and `f`, kept as a bag of terms `c · x^a · f^b`.
/// Used to test whether a counting series satisfies a given algebraic
/// equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: Vec<(BigInt, u32, u32)>,
}

impl BivariatePoly {
    pub fn new(terms: Vec<(BigInt, u32, u32)>) -> Self {
        BivariatePoly { terms }
    }

    pub fn from_i64(terms: &[(i64, u32, u32)]) -> Self {
        BivariatePoly {
            terms: terms
                .iter()
                .map(|&(c, a, b)| (BigInt::from(c), a, b))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(BigInt, u32, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(c, _, _)| c.is_zero())
    }

    /// The minimal polynomial of the generating function for permutations
    /// sortable by a (2,2)-stack: `2xf³ − (2x+3)f² − (x−7)f − 4`, with the
    /// series including the constant term 1 for the empty permutation.
    pub fn stack22_minimal() -> Self {
        BivariatePoly::from_i64(&[
            (2, 1, 3),
            (-2, 1, 2),
            (-3, 0, 2),
            (-1, 1, 1),
            (7, 0, 1),
            (-4, 0, 0),
        ])
    }

    /// Parses a semicolon-separated list of `coef,xexp,fexp` triples,
    /// e.g. `2,1,3;-2,1,2;-3,0,2;-1,1,1;7,0,1;-4,0,0`.
    pub fn parse_triples(s: &str) -> crate::Result<Self> {
        let mut terms = Vec::new();
        for part in s.split(';') {
            let fields: Vec<&str> = part.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(crate::Error::Parse(format!(
                    "expected coef,xexp,fexp but got {part:?}"
                )));
            }
            let c: BigInt = fields[0]
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad coefficient {:?}", fields[0])))?;
            let a: u32 = fields[1]
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad x exponent {:?}", fields[1])))?;
            let b: u32 = fields[2]
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad f exponent {:?}", fields[2])))?;
            terms.push((c, a, b));
        }
        Ok(BivariatePoly { terms })
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, a, b)| {
                let mut s = c.to_string();
                match a {
                    0 => {}
                    1 => s.push_str("*x"),
                    _ => s.push_str(&format!("*x^{a}")),
                }
                match b {
                    0 => {}
                    1 => s.push_str("*f"),
                    _ => s.push_str(&format!("*f^{b}")),
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
