//! Exact integer and rational matrix arithmetic.
//!
//! Everything here is arbitrary precision. Integer matrices are carried as
//! [`RatMatrix`] values whose entries happen to have denominator one; the
//! integer-only algorithms (Bareiss determinant, Smith normal form, Hermite
//! reduction) check that on entry.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(int_to_rat).collect())
                .collect(),
        )
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[BigRational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Integer entries, or the first offending position.
    pub fn to_int_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_integer() {
                    return Err(Error::NonIntegral {
                        row: i,
                        col: j,
                        value: v.clone(),
                    });
                }
                row.push(v.to_integer());
            }
            out.push(row);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// `self · gram · selfᵀ`, the Gram matrix of the rows of `self`.
    pub fn congruence(&self, gram: &RatMatrix) -> Result<RatMatrix> {
        self.mul(gram)?.mul(&self.transpose())
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn require_square(m: &RatMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        })
    }
}

/// Exact determinant. Integer input goes through Bareiss fraction-free
/// elimination; anything else through Gaussian elimination over Q.
pub fn det_exact(m: &RatMatrix) -> Result<BigRational> {
    require_square(m)?;
    if m.is_integral() {
        Ok(int_to_rat(&bareiss_det(m.to_int_rows()?)))
    } else {
        Ok(gaussian_det(m))
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn gaussian_det(m: &RatMatrix) -> BigRational {
    let n = m.rows;
    let mut a = m.to_rows();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if piv != k {
            a.swap(k, piv);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
        }
    }
    det
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(a: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut a = m.to_rows();
    rref(&mut a, m.cols).len()
}

pub fn inverse(m: &RatMatrix) -> Result<RatMatrix> {
    require_square(m)?;
    let n = m.rows;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { rat(1) } else { rat(0) }));
            row
        })
        .collect();
    let pivots = rref(&mut a, n);
    if pivots.len() < n {
        return Err(Error::Singular);
    }
    RatMatrix::from_rows(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Some rational solution of `m·x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_rational(m: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    if b.len() != m.rows {
        return None;
    }
    let mut a: Vec<Vec<BigRational>> = (0..m.rows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut a, m.cols + 1);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][m.cols].clone();
    }
    Some(x)
}

/// Smith normal form `left · m · right = diag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// `min(rows, cols)` entries, nonnegative, each dividing the next;
    /// zeros trail.
    pub diag: Vec<BigInt>,
    pub left: RatMatrix,
    pub right: RatMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nontrivial invariant factors (those > 1).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }
}

type IntRows = Vec<Vec<BigInt>>;

fn int_identity(n: usize) -> IntRows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(a: &mut IntRows, dst: usize, src: usize, q: &BigInt) {
    // row[dst] -= q * row[src]
    let src_row = a[src].clone();
    for (x, y) in a[dst].iter_mut().zip(&src_row) {
        *x -= q * y;
    }
}

fn col_axpy(a: &mut IntRows, dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let v = q * &row[src];
        row[dst] -= v;
    }
}

fn col_swap(a: &mut IntRows, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

pub fn smith_normal_form(m: &RatMatrix) -> Result<SnfResult> {
    let mut a = m.to_int_rows()?;
    let (rows, cols) = (m.rows, m.cols);
    let mut u = int_identity(rows);
    let mut v = int_identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()));
            let Some((pi, pj)) = pivot else {
                // remaining block is zero
                return finish_snf(a, u, v, rows, cols);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut a, t, pj);
            col_swap(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
            });
            match bad {
                Some(i) => {
                    // pull the offending row up; the next pass shrinks the pivot
                    let neg = -BigInt::one();
                    row_axpy(&mut a, t, i, &neg);
                    row_axpy(&mut u, t, i, &neg);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    finish_snf(a, u, v, rows, cols)
}

fn finish_snf(a: IntRows, u: IntRows, v: IntRows, rows: usize, cols: usize) -> Result<SnfResult> {
    let diag = (0..rows.min(cols)).map(|i| a[i][i].abs()).collect();
    Ok(SnfResult {
        diag,
        left: RatMatrix::from_int_rows(&u)?,
        right: RatMatrix::from_int_rows(&v)?,
    })
}

/// Row-style Hermite normal form of the integer row span: nonzero rows only,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: IntRows = rows.to_vec();
    let n = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        if r == a.len() {
            break;
        }
        // gcd-combine column c into row r
        loop {
            let nonzero: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let &best = nonzero
                .iter()
                .min_by(|&&i, &&j| a[i][c].abs().cmp(&a[j][c].abs()))
                .expect("nonempty");
            a.swap(r, best);
            let mut done = true;
            for i in r + 1..a.len() {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    row_axpy(&mut a, i, r, &q);
                    done &= a[i][c].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                row_axpy(&mut a, i, r, &q);
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Z-basis of the integer kernel `{v ∈ Zⁿ : m·v = 0}`, read off the right
/// transform of the Smith normal form and put in Hermite form.
pub fn integer_kernel(m: &RatMatrix) -> Result<Vec<Vec<BigInt>>> {
    let snf = smith_normal_form(m)?;
    let r = snf.rank();
    let right = snf.right.to_int_rows()?;
    let basis: Vec<Vec<BigInt>> = (r..m.cols)
        .map(|j| right.iter().map(|row| row[j].clone()).collect())
        .collect();
    Ok(hermite_rows(&basis))
}

/// Coefficients `c₀ … c_{n−1}` of the unique polynomial of degree `< n`
/// through `n` points with distinct abscissae.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Vec<BigRational>> {
    let n = points.len();
    let mut vander = RatMatrix::zeros(n, n);
    for (i, (x, _)) in points.iter().enumerate() {
        let mut pow = rat(1);
        for j in 0..n {
            vander.set(i, j, pow.clone());
            pow *= x;
        }
    }
    let ys: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    if rank(&vander) < n {
        return Err(Error::InvalidParameter("repeated interpolation nodes".into()));
    }
    solve_rational(&vander, &ys).ok_or(Error::Singular)
}

pub fn eval_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}
