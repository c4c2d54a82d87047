use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LinalgError};

/// Integer polynomial, coefficients stored in ascending degree order.
///
/// Invariant: `coeffs` is non-empty and has no trailing zero beyond degree 0,
/// so the leading coefficient is nonzero unless the polynomial is the zero
/// polynomial (represented as the single coefficient 0).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![BigInt::zero()] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly { coeffs: vec![c] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().unwrap().is_one()
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Exact division: returns `self / divisor` when the remainder is zero and
    /// every division step is exact over the integers, `None` otherwise.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.leading();
        let qdeg = self.degree() - dd;
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return None;
            }
            let q = &top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Evaluates the polynomial at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if m.rows() != m.cols() {
            return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?;
            for i in 0..n {
                let e = acc.get(i, i) + c;
                acc.set(i, i, e);
            }
        }
        Ok(acc)
    }

    /// Substitutes a linear form: returns `p(a*x + b)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> IntPoly {
        let linear = IntPoly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&IntPoly::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    /// Descending-degree rendering with explicit signs, e.g.
    /// `x^6 - 6*x^4 + 9*x^2 - 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn display_descending_with_signs() {
        assert_eq!(p(&[-4, 0, 9, 0, -6, 0, 1]).to_string(), "x^6 - 6*x^4 + 9*x^2 - 4");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[5]).to_string(), "5");
        assert_eq!(p(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(p(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3*x - 2");
    }

    #[test]
    fn trims_trailing_zeros() {
        let q = IntPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), 1);
        assert_eq!(q, p(&[1, 2]));
        assert!(IntPoly::from_coeffs(vec![]).is_zero());
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-1, 4]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[-1, 2, 5, 12]));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&p(&[7, 1])), None);
        assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn compose_linear_matches_expansion() {
        // p(x) = x^2 + 1 composed with -x - 1 gives x^2 + 2x + 2.
        let q = p(&[1, 0, 1]);
        let r = q.compose_linear(&BigInt::from(-1), &BigInt::from(-1));
        assert_eq!(r, p(&[2, 2, 1]));
    }

    #[test]
    fn eval_int_horner() {
        let q = p(&[-2, -3, 0, 1]); // x^3 - 3x - 2
        assert_eq!(q.eval_int(&BigInt::from(2)), BigInt::from(0));
        assert_eq!(q.eval_int(&BigInt::from(3)), BigInt::from(16));
    }
}
