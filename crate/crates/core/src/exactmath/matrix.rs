//! Exact dense matrices over any `CoeffField`: arithmetic, determinants,
//! inverses, kernels, and symmetric congruence diagonalization (the
//! workhorse behind signature computations). Also row-style Hermite normal
//! form for integer matrices, used when comparing module bases.

use super::field::{CoeffField, OrderedField};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<K: CoeffField> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<K>,
}

impl<K: CoeffField> Mat<K> {
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        assert!(!rows.is_empty());
        let nrows = rows.len();
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        let data = rows.into_iter().flatten().collect();
        Mat { rows: nrows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, witness: &K) -> Self {
        Mat { rows, cols, data: vec![witness.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, witness: &K) -> Self {
        let mut m = Mat::zeros(n, n, witness);
        for i in 0..n {
            *m.at_mut(i, i) = witness.one_like();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut K {
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<K> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn witness(&self) -> &K {
        &self.data[0]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    pub fn neg(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).neg())
    }

    pub fn scale(&self, k: &K) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).mul(k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let z = self.witness().zero_like();
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = z.clone();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        let z = self.witness().zero_like();
        (0..self.rows)
            .map(|i| {
                let mut acc = z.clone();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn map<L: CoeffField>(&self, f: impl Fn(&K) -> L) -> Mat<L> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let one = self.witness().one_like();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j {
                    if *e != one {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Direct sum along the diagonal.
    pub fn block_diag(blocks: &[Mat<K>]) -> Self {
        assert!(!blocks.is_empty());
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(n, m, blocks[0].witness());
        let mut ri = 0;
        let mut ci = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    *out.at_mut(ri + i, ci + j) = b.at(i, j).clone();
                }
            }
            ri += b.rows;
            ci += b.cols;
        }
        out
    }

    /// Determinant by Gaussian elimination with exact field arithmetic.
    pub fn det(&self) -> K {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.witness().one_like();
        for i in 0..n {
            let mut piv = None;
            for r in i..n {
                if !a.at(r, i).is_zero() {
                    piv = Some(r);
                    break;
                }
            }
            let piv = match piv {
                None => return self.witness().zero_like(),
                Some(r) => r,
            };
            if piv != i {
                a.swap_rows(piv, i);
                det = det.neg();
            }
            let p = a.at(i, i).clone();
            det = det.mul(&p);
            let pinv = p.inv().unwrap();
            for r in i + 1..n {
                if a.at(r, i).is_zero() {
                    continue;
                }
                let factor = a.at(r, i).mul(&pinv);
                for c in i..n {
                    let sub = factor.mul(a.at(i, c));
                    let v = a.at(r, c).sub(&sub);
                    *a.at_mut(r, c) = v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut b = Mat::identity(n, self.witness());
        for i in 0..n {
            let piv = (i..n).find(|&r| !a.at(r, i).is_zero())?;
            a.swap_rows(piv, i);
            b.swap_rows(piv, i);
            let pinv = a.at(i, i).inv()?;
            for c in 0..n {
                *a.at_mut(i, c) = a.at(i, c).mul(&pinv);
                *b.at_mut(i, c) = b.at(i, c).mul(&pinv);
            }
            for r in 0..n {
                if r == i || a.at(r, i).is_zero() {
                    continue;
                }
                let factor = a.at(r, i).clone();
                for c in 0..n {
                    let s = factor.mul(a.at(i, c));
                    *a.at_mut(r, c) = a.at(r, c).sub(&s);
                    let s = factor.mul(b.at(i, c));
                    *b.at_mut(r, c) = b.at(r, c).sub(&s);
                }
            }
        }
        Some(b)
    }

    /// Solve self * x = rhs for a single right-hand side.
    pub fn solve(&self, rhs: &[K]) -> Option<Vec<K>> {
        assert_eq!(self.rows, rhs.len());
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        let mut b = rhs.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..m {
            if r == n {
                break;
            }
            let piv = (r..n).find(|&rr| !a.at(rr, c).is_zero());
            let piv = match piv {
                None => continue,
                Some(p) => p,
            };
            a.swap_rows(piv, r);
            b.swap(piv, r);
            let pinv = a.at(r, c).inv().unwrap();
            for cc in 0..m {
                *a.at_mut(r, cc) = a.at(r, cc).mul(&pinv);
            }
            b[r] = b[r].mul(&pinv);
            for rr in 0..n {
                if rr == r || a.at(rr, c).is_zero() {
                    continue;
                }
                let factor = a.at(rr, c).clone();
                for cc in 0..m {
                    let s = factor.mul(a.at(r, cc));
                    *a.at_mut(rr, cc) = a.at(rr, cc).sub(&s);
                }
                let s = factor.mul(&b[r]);
                b[rr] = b[rr].sub(&s);
            }
            pivots.push((r, c));
            r += 1;
        }
        // consistency: zero rows must have zero rhs
        for rr in r..n {
            if !b[rr].is_zero() {
                return None;
            }
        }
        let z = self.witness().zero_like();
        let mut x = vec![z; m];
        for &(rr, cc) in &pivots {
            x[cc] = b[rr].clone();
        }
        Some(x)
    }

    /// Basis of the right kernel {x : self * x = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..m {
            if r == n {
                break;
            }
            let piv = (r..n).find(|&rr| !a.at(rr, c).is_zero());
            let piv = match piv {
                None => continue,
                Some(p) => p,
            };
            a.swap_rows(piv, r);
            let pinv = a.at(r, c).inv().unwrap();
            for cc in 0..m {
                *a.at_mut(r, cc) = a.at(r, cc).mul(&pinv);
            }
            for rr in 0..n {
                if rr == r || a.at(rr, c).is_zero() {
                    continue;
                }
                let factor = a.at(rr, c).clone();
                for cc in 0..m {
                    let s = factor.mul(a.at(r, cc));
                    *a.at_mut(rr, cc) = a.at(rr, cc).sub(&s);
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
        }
        let pivot_set: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
        let z = self.witness().zero_like();
        let one = self.witness().one_like();
        let mut basis = Vec::new();
        for free in 0..m {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![z.clone(); m];
            v[free] = one.clone();
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = a.at(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.cols - self.kernel_basis().len()
    }

    /// For symmetric G (char != 2): find P with P^T G P diagonal; returns
    /// (diagonal entries, P).
    pub fn congruent_diagonalize(&self) -> (Vec<K>, Mat<K>) {
        assert!(self.is_symmetric(), "congruent_diagonalize needs a symmetric matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut p = Mat::identity(n, self.witness());
        for i in 0..n {
            if a.at(i, i).is_zero() {
                // try to swap in a nonzero diagonal entry
                if let Some(j) = (i + 1..n).find(|&j| !a.at(j, j).is_zero()) {
                    a.sym_swap(i, j);
                    p.swap_cols(i, j);
                } else if let Some(j) = (i + 1..n).find(|&j| !a.at(i, j).is_zero()) {
                    // A[i][i] = A[j][j] = 0, A[i][j] != 0:
                    // add row/col j into i, giving diagonal 2*A[i][j]
                    a.sym_add(i, j);
                    p.col_add(i, j);
                } else {
                    continue; // entire row/col zero from here: diagonal 0
                }
            }
            let pivot = a.at(i, i).clone();
            let pinv = pivot.inv().unwrap();
            for j in i + 1..n {
                if a.at(j, i).is_zero() {
                    continue;
                }
                let factor = a.at(j, i).mul(&pinv);
                // row_j -= factor*row_i ; col_j -= factor*col_i
                for c in 0..n {
                    let s = factor.mul(a.at(i, c));
                    *a.at_mut(j, c) = a.at(j, c).sub(&s);
                }
                for r in 0..n {
                    let s = factor.mul(a.at(r, i));
                    *a.at_mut(r, j) = a.at(r, j).sub(&s);
                }
                // P -= factor * (col i) into col j
                for r in 0..n {
                    let s = factor.mul(p.at(r, i));
                    *p.at_mut(r, j) = p.at(r, j).sub(&s);
                }
            }
        }
        let diag = (0..n).map(|i| a.at(i, i).clone()).collect();
        (diag, p)
    }

    fn sym_swap(&mut self, i: usize, j: usize) {
        self.swap_rows(i, j);
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += row_j and col_i += col_j (symmetric pair).
    fn sym_add(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let v = self.at(i, c).add(self.at(j, c));
            *self.at_mut(i, c) = v;
        }
        for r in 0..self.rows {
            let v = self.at(r, i).add(self.at(r, j));
            *self.at_mut(r, i) = v;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// col_i += col_j.
    fn col_add(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            let v = self.at(r, i).add(self.at(r, j));
            *self.at_mut(r, i) = v;
        }
    }
}

/// Signature of a diagonalized form: (positive, negative, zero) counts.
pub fn diag_signature<K: OrderedField>(diag: &[K]) -> (usize, usize, usize) {
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for d in diag {
        match d.sign() {
            1 => pos += 1,
            -1 => neg += 1,
            _ => zero += 1,
        }
    }
    (pos, neg, zero)
}

// ---------------------------------------------------------------------------
// Integer matrices: Hermite normal form (row style)
// ---------------------------------------------------------------------------

/// Row-style Hermite normal form of the lattice spanned by the input rows:
/// zero rows dropped, pivots positive, entries above each pivot reduced to
/// [0, pivot). Two row sets span the same lattice iff their HNFs agree.
pub fn hnf_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let m = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == m));
    let mut top = 0usize;
    for col in 0..m {
        loop {
            // find the row (>= top) with smallest nonzero |entry| in col
            let mut best: Option<usize> = None;
            for (idx, row) in rows.iter().enumerate().skip(top) {
                if row[col].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(idx),
                    Some(b) => {
                        if rows[idx][col].abs() < rows[b][col].abs() {
                            Some(idx)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let b = match best {
                None => break, // column clear
                Some(b) => b,
            };
            rows.swap(top, b);
            let mut others = false;
            for idx in top + 1..rows.len() {
                if rows[idx][col].is_zero() {
                    continue;
                }
                let q = div_floor_big(&rows[idx][col], &rows[top][col]);
                if !q.is_zero() {
                    for c in 0..m {
                        let s = &q * &rows[top][c];
                        rows[idx][c] = &rows[idx][c] - s;
                    }
                }
                if !rows[idx][col].is_zero() {
                    others = true;
                }
            }
            if !others {
                // unique pivot in this column
                if rows[top][col].is_negative() {
                    for c in 0..m {
                        rows[top][c] = -rows[top][c].clone();
                    }
                }
                // reduce entries above the pivot
                let pivot = rows[top][col].clone();
                for idx in 0..top {
                    let q = div_floor_big(&rows[idx][col], &pivot);
                    if !q.is_zero() {
                        for c in 0..m {
                            let s = &q * &rows[top][c];
                            rows[idx][c] = &rows[idx][c] - s;
                        }
                    }
                }
                top += 1;
                break;
            }
        }
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    rows
}

fn div_floor_big(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}
