//! Exact integer and rational linear algebra at desk scale.
//!
//! All determinants, inverses, and polynomial extractions are exact: integer
//! matrices use fraction-free (Bareiss) elimination, rational matrices use
//! auto-normalizing big rationals. No floating point is involved anywhere.

mod poly;

pub use poly::IntPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch { left_rows: usize, left_cols: usize, right_rows: usize, right_cols: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Dense big-integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// The all-ones matrix J.
    pub fn all_ones(n: usize) -> Self {
        IntMatrix { rows: n, cols: n, entries: vec![BigInt::one(); n * n] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    /// Convenience constructor from machine-integer rows; panics if the rows
    /// are ragged.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    /// Entrywise sum; panics on shape mismatch (internal plumbing).
    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// Entrywise difference; panics on shape mismatch (internal plumbing).
    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Trace; panics if not square (internal plumbing).
    pub fn trace(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let e = out.get(i, j) + a * b;
                    out.set(i, j, e);
                }
            }
        }
        Ok(out)
    }

    /// Exact matrix power by repeated squaring. `m^0` is the identity.
    pub fn pow(&self, exp: usize) -> Result<IntMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Matrix-vector product; panics on shape mismatch (internal plumbing).
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. Every interior division is exact by construction.
    pub fn det(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Characteristic polynomial det(xI - m) by the Faddeev–LeVerrier
    /// recurrence. All interior divisions are exact, and the result is a
    /// monic integer polynomial of degree n.
    pub fn char_poly(&self) -> Result<IntPoly, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m_prev = IntMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&m_prev)?;
            let t = am.trace();
            let c = exact_div(-t, &BigInt::from(k));
            coeffs[n - k] = c.clone();
            if k < n {
                m_prev = am;
                for i in 0..n {
                    let e = m_prev.get(i, i) + &c;
                    m_prev.set(i, i, e);
                }
            }
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Minimal polynomial: the least-degree monic integer polynomial
    /// annihilating the matrix, found by exact rank tests on the stacked
    /// vectorized powers I, m, m², …
    pub fn min_poly(&self) -> Result<IntPoly, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            // The 0x0 matrix is annihilated by the empty product.
            return Ok(IntPoly::one());
        }
        // Echelon basis over the rationals, each row carrying the coefficients
        // that express it in terms of the original powers.
        let dim = n * n;
        let mut basis: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        let mut power = IntMatrix::identity(n);
        for k in 0..=n {
            let mut v: Vec<BigRational> =
                power.entries.iter().map(|e| BigRational::from(e.clone())).collect();
            let mut combo = vec![BigRational::zero(); k + 1];
            combo[k] = BigRational::one();
            for (pivot, row, row_combo) in &basis {
                if v[*pivot].is_zero() {
                    continue;
                }
                let f = v[*pivot].clone();
                for j in 0..dim {
                    let delta = &f * &row[j];
                    v[j] -= delta;
                }
                for (j, rc) in row_combo.iter().enumerate() {
                    let delta = &f * rc;
                    combo[j] -= delta;
                }
            }
            match v.iter().position(|e| !e.is_zero()) {
                None => {
                    // combo expresses the zero matrix: sum combo[j] * m^j = 0,
                    // with combo[k] = 1, so this is the monic minimal polynomial.
                    let coeffs: Vec<BigInt> = combo
                        .iter()
                        .map(|c| {
                            debug_assert!(c.is_integer(), "minimal polynomial must be integer");
                            c.to_integer()
                        })
                        .collect();
                    return Ok(IntPoly::from_coeffs(coeffs));
                }
                Some(pivot) => {
                    let inv = v[pivot].clone();
                    let v: Vec<BigRational> = v.into_iter().map(|e| e / &inv).collect();
                    let combo: Vec<BigRational> = combo.into_iter().map(|e| e / &inv).collect();
                    basis.push((pivot, v, combo));
                }
            }
            if k < n {
                power = power.mul(self)?;
            }
        }
        unreachable!("the characteristic polynomial annihilates the matrix by degree n")
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| BigRational::from(e.clone())).collect(),
        }
    }

    /// Row-major decimal strings, the interchange form for reports.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

fn exact_div(n: BigInt, d: &BigInt) -> BigInt {
    debug_assert!((&n % d).is_zero(), "division must be exact");
    n / d
}

/// Dense big-rational matrix, row-major. Entries normalize automatically
/// (reduced fractions, positive denominators).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let e = out.get(i, j) + a * b;
                    out.set(i, j, e);
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant: rows are cleared to integers (scaling by the lcm of
    /// their denominators), then fraction-free elimination runs over the
    /// integers and the scaling is divided back out.
    pub fn det(&self) -> Result<BigRational, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut lifted = IntMatrix::zeros(n, n);
        for i in 0..n {
            let mut l = BigInt::one();
            for j in 0..n {
                l = num_integer::lcm(l, self.get(i, j).denom().clone());
            }
            for j in 0..n {
                let e = self.get(i, j) * BigRational::from(l.clone());
                debug_assert!(e.is_integer());
                lifted.set(i, j, e.to_integer());
            }
            scale *= l;
        }
        Ok(BigRational::new(lifted.det()?, scale))
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(LinalgError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let x = a.get(pivot, j).clone();
                    let y = a.get(col, j).clone();
                    a.set(pivot, j, y);
                    a.set(col, j, x);
                    let x = inv.get(pivot, j).clone();
                    let y = inv.get(col, j).clone();
                    inv.set(pivot, j, y);
                    inv.set(col, j, x);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let e = a.get(col, j) / &p;
                a.set(col, j, e);
                let e = inv.get(col, j) / &p;
                inv.set(col, j, e);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let e = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, e);
                    let e = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, e);
                }
            }
        }
        Ok(inv)
    }

    /// If this is exactly a 0/1 permutation matrix, returns the map sending
    /// each row index to the column index of its single 1.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let one = BigRational::one();
        let mut map = vec![usize::MAX; n];
        let mut col_used = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if *e != one || map[i] != usize::MAX || col_used[j] {
                    return None;
                }
                map[i] = j;
                col_used[j] = true;
            }
            if map[i] == usize::MAX {
                return None;
            }
        }
        Some(map)
    }

    /// Row-major strings (`"n"` or `"n/d"`), the interchange form for reports.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}
