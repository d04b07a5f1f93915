//! Dense integer matrices over `BigInt` with the normal forms needed for
//! finitely generated abelian group presentations: Smith normal form with
//! unimodular transforms, row Hermite form, and integer kernels.
//!
//! Sizes here are small (cones and relation matrices of fans), so the
//! implementations favor clarity and exactness over asymptotics. Pivots are
//! chosen by minimal absolute value to keep coefficients from blowing up.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-major dense matrix over `BigInt`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<R, C>(rows: impl IntoIterator<Item = R>) -> Self
    where
        R: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let data: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let nrows = data.len();
        let ncols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == ncols), "ragged rows");
        IntMat {
            rows: nrows,
            cols: ncols,
            data: data.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (a_idx, b_idx) = (a * self.cols + j, b * self.cols + j);
            self.data.swap(a_idx, b_idx);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = c * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = c * &self[(i, src)];
            self[(i, dst)] += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination; exact.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form decomposition: `d = u * a * v` with `u`, `v`
/// unimodular and `d` diagonal, nonnegative, each entry dividing the next.
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|k| self.d[(k, k)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form over the integers, pivoting on minimal absolute value.
pub fn smith_normal_form(a: &IntMat) -> SmithForm {
    let (nr, nc) = (a.nrows(), a.ncols());
    let mut d = a.clone();
    let mut u = IntMat::identity(nr);
    let mut v = IntMat::identity(nc);

    for k in 0..nr.min(nc) {
        'pivot: loop {
            // minimal nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in k..nr {
                for j in k..nc {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some(b) => d[(i, j)].abs() < d[b].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                // trailing block is zero; done
                return SmithForm { u, d, v };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..nr {
                if !d[(i, k)].is_zero() {
                    let q = -(&d[(i, k)] / &d[(k, k)]);
                    d.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                    if !d[(i, k)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..nc {
                if !d[(k, j)].is_zero() {
                    let q = -(&d[(k, j)] / &d[(k, k)]);
                    d.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                    if !d[(k, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }
            // divisibility fix-up: fold in a row whose entries the pivot
            // does not divide, then re-reduce
            for i in k + 1..nr {
                for j in k + 1..nc {
                    if !(&d[(i, j)] % &d[(k, k)]).is_zero() {
                        d.add_row_multiple(k, i, &BigInt::one());
                        u.add_row_multiple(k, i, &BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithForm { u, d, v }
}

/// Row Hermite normal form: `h = u * a` with `u` unimodular, `h` in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Canonical for the row lattice of `a`.
pub fn row_hermite_form(a: &IntMat) -> (IntMat, IntMat) {
    let (nr, nc) = (a.nrows(), a.ncols());
    let mut h = a.clone();
    let mut u = IntMat::identity(nr);
    let mut pivot_row = 0usize;
    for col in 0..nc {
        if pivot_row == nr {
            break;
        }
        // gcd out the column below pivot_row
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..nr {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => h[(i, col)].abs() < h[(b, col)].abs(),
                };
                if better {
                    best = Some(i);
                }
            }
            let Some(pi) = best else {
                // column is zero below; move to next column
                break;
            };
            h.swap_rows(pivot_row, pi);
            u.swap_rows(pivot_row, pi);
            let mut done = true;
            for i in pivot_row + 1..nr {
                if !h[(i, col)].is_zero() {
                    let q = -(&h[(i, col)] / &h[(pivot_row, col)]);
                    h.add_row_multiple(i, pivot_row, &q);
                    u.add_row_multiple(i, pivot_row, &q);
                    if !h[(i, col)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                if h[(pivot_row, col)].is_negative() {
                    h.negate_row(pivot_row);
                    u.negate_row(pivot_row);
                }
                // reduce entries above the pivot into [0, pivot)
                for i in 0..pivot_row {
                    let q = -h[(i, col)].div_floor(&h[(pivot_row, col)]);
                    h.add_row_multiple(i, pivot_row, &q);
                    u.add_row_multiple(i, pivot_row, &q);
                }
                pivot_row += 1;
                break;
            }
        }
    }
    (u, h)
}

/// Basis of the integer kernel `{x : a * x = 0}`, saturated (a basis of the
/// full kernel lattice), as the columns of the returned matrix.
pub fn integer_kernel(a: &IntMat) -> IntMat {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let n = a.ncols();
    let mut out = IntMat::zeros(n, n - r);
    for j in r..n {
        for i in 0..n {
            out[(i, j - r)] = snf.v[(i, j)].clone();
        }
    }
    out
}
