//! Exact integer and rational linear algebra: Smith normal form, kernels and
//! the inertia of symmetric rational forms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of big integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())).finish()
    }
}

use alloc::string::ToString;

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> BigInt>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows of machine integers; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self::from_fn(rows.len(), cols, |r, c| BigInt::from(rows[r][c])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `[self | rhs]`.
    pub fn hconcat(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.rows });
        }
        let cols = self.cols + rhs.cols;
        Ok(Self::from_fn(self.rows, cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        self.row_iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= f · row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, f: &BigInt) {
        for c in 0..self.cols {
            let v = f * &self.data[src * self.cols + c];
            self.data[dst * self.cols + c] -= v;
        }
    }

    /// col[dst] -= f · col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, f: &BigInt) {
        for r in 0..self.rows {
            let v = f * &self.data[r * self.cols + src];
            self.data[r * self.cols + dst] -= v;
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

/// Elementary divisors `d_1 | d_2 | ⋯` of `m`, nonnegative, of length
/// `min(rows, cols)`; zeros (the free part of the cokernel) come last.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let n = a.rows.min(a.cols);
    let mut divisors = Vec::with_capacity(n);
    for t in 0..n {
        // minimal nonzero |entry| in the trailing block
        let Some((pr, pc)) = min_abs_entry(&a, t) else {
            divisors.resize(n, BigInt::zero());
            return divisors;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..a.rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let qt = a.get(r, t).div_floor(a.get(t, t));
                a.row_axpy(r, t, &qt);
                if !a.get(r, t).is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..a.cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let qt = a.get(t, c).div_floor(a.get(t, t));
                a.col_axpy(c, t, &qt);
                if !a.get(t, c).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pr, pc) = min_abs_entry_cross(&a, t);
                a.swap_rows(t, pr);
                a.swap_cols(t, pc);
                continue;
            }
            // the pivot must divide the whole trailing block
            let piv = a.get(t, t).clone();
            let offender = (t + 1..a.rows).find(|&r| (t + 1..a.cols).any(|c| !a.get(r, c).is_multiple_of(&piv)));
            match offender {
                Some(r) => {
                    let minus_one = -BigInt::one();
                    a.row_axpy(t, r, &minus_one);
                }
                None => break,
            }
        }
        divisors.push(a.get(t, t).abs());
    }
    divisors
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            if best.map_or(true, |(br, bc)| v.abs() < a.get(br, bc).abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

// smallest nonzero among pivot row and pivot column after a reduction pass
fn min_abs_entry_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cand = (t..a.rows).map(|r| (r, t)).chain((t + 1..a.cols).map(|c| (t, c)));
    for (r, c) in cand {
        let v = a.get(r, c);
        if v.is_zero() {
            continue;
        }
        let b = a.get(best.0, best.1);
        if b.is_zero() || v.abs() < b.abs() {
            best = (r, c);
        }
    }
    best
}

/// Rank over `Q`.
pub fn rank(m: &IntMatrix) -> usize {
    echelon(m).1.len()
}

// Fraction-free reduced echelon form: each pivot column is zero outside its
// pivot row. Rows are kept primitive to bound entry growth.
fn echelon(m: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(pr) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, pr);
        for r in 0..a.rows {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let piv = a.get(row, col).clone();
            let x = a.get(r, col).clone();
            let g = piv.gcd(&x);
            let (fp, fx) = (&piv / &g, &x / &g);
            for c in 0..a.cols {
                let v = &fp * a.get(r, c) - &fx * a.get(row, c);
                a.set(r, c, v);
            }
            make_primitive(&mut a, r);
        }
        make_primitive(&mut a, row);
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

fn make_primitive(a: &mut IntMatrix, r: usize) {
    let g = a.row(r).iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for c in 0..a.cols {
            let v = a.get(r, c) / &g;
            a.set(r, c, v);
        }
    }
}

/// Basis of the right kernel of an integer matrix, as primitive integer
/// vectors. The count is `cols − rank`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (e, pivots) = echelon(m);
    let mut is_pivot = vec![None; m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let lcm = pivots.iter().enumerate().fold(BigInt::one(), |l, (r, &c)| l.lcm(e.get(r, c)));
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![BigInt::zero(); m.cols];
        v[free] = lcm.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            let coeff = e.get(r, free);
            if !coeff.is_zero() {
                v[pc] = -(coeff * &lcm) / e.get(r, pc);
            }
        }
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for x in &mut v {
            *x /= &g;
        }
        basis.push(v);
    }
    basis
}

/// Right kernel of a rational matrix; rows are cleared of denominators and
/// the integer routine does the work.
pub fn rational_kernel_basis(rows: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
    }
    let mut m = IntMatrix::zeros(rows.len(), cols);
    for (r, row) in rows.iter().enumerate() {
        let den = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        for (c, x) in row.iter().enumerate() {
            m.set(r, c, x.numer() * (&den / x.denom()));
        }
    }
    Ok(kernel_basis(&m)
        .into_iter()
        .map(|v| v.into_iter().map(BigRational::from_integer).collect())
        .collect())
}

/// A square rational matrix equal to its transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSymmetricMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalSymmetricMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let data: Vec<BigRational> = rows.into_iter().flatten().collect();
        for r in 0..n {
            for c in r + 1..n {
                if data[r * n + c] != data[c * n + r] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(RationalSymmetricMatrix { n, data })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
    }

    /// `S + Sᵀ` of an arbitrary square integer matrix.
    pub fn symmetrize(m: &IntMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        let n = m.rows();
        let data = (0..n * n)
            .map(|k| {
                let (r, c) = (k / n, k % n);
                BigRational::from_integer(m.get(r, c) + m.get(c, r))
            })
            .collect();
        Ok(RationalSymmetricMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.n + c]
    }

    /// `Pᵀ S P`.
    pub fn congruent(&self, p: &[Vec<BigRational>]) -> Result<Self> {
        let n = self.n;
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        let mut sp = vec![BigRational::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let s = self.get(r, k);
                if s.is_zero() {
                    continue;
                }
                for c in 0..n {
                    sp[r * n + c] += s * &p[k][c];
                }
            }
        }
        let mut out = vec![BigRational::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let pt = &p[k][r];
                if pt.is_zero() {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] += pt * &sp[k * n + c];
                }
            }
        }
        Ok(RationalSymmetricMatrix { n, data: out })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia by symmetric Gaussian congruence. A nonzero diagonal pivot splits
/// off a 1×1 block; when the whole remaining diagonal vanishes, a nonzero
/// off-diagonal pair splits off a hyperbolic 2×2 block.
pub fn symmetric_signature(s: &RationalSymmetricMatrix) -> Inertia {
    let mut n = s.n;
    let mut a: Vec<Vec<BigRational>> = (0..n).map(|r| s.data[r * n..(r + 1) * n].to_vec()).collect();
    let mut inertia = Inertia::default();
    let swap = |a: &mut Vec<Vec<BigRational>>, i: usize, j: usize| {
        if i != j {
            a.swap(i, j);
            for row in a.iter_mut() {
                row.swap(i, j);
            }
        }
    };
    while n > 0 {
        let last = n - 1;
        if let Some(d) = (0..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, d, last);
            let piv = a[last][last].clone();
            if piv.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            for i in 0..last {
                if a[i][last].is_zero() {
                    continue;
                }
                let f = &a[i][last] / &piv;
                for j in 0..last {
                    let v = &f * &a[last][j];
                    a[i][j] -= v;
                }
            }
            n -= 1;
            a.truncate(n);
            for row in a.iter_mut() {
                row.truncate(n);
            }
            continue;
        }
        let pair = (0..n).find_map(|i| (i + 1..n).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)));
        match pair {
            None => {
                inertia.zero += n;
                n = 0;
            }
            Some((i, j)) => {
                // move the block to the last two slots
                swap(&mut a, j, last);
                let i = if i == last { j } else { i };
                swap(&mut a, i, last - 1);
                let k = last - 1;
                let b = a[k][last].clone();
                inertia.positive += 1;
                inertia.negative += 1;
                // Schur complement with E = [[0, b], [b, 0]]
                for r in 0..k {
                    for c in 0..k {
                        let t = (&a[r][k] * &a[last][c] + &a[r][last] * &a[k][c]) / &b;
                        a[r][c] -= t;
                    }
                }
                n -= 2;
                a.truncate(n);
                for row in a.iter_mut() {
                    row.truncate(n);
                }
            }
        }
    }
    inertia
}
