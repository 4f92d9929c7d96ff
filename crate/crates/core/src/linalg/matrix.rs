use super::{Field, LinalgError, Subspace};

/// Dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row-echelon form together with its rank profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; zero rows are kept at the bottom.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Consistent {
        /// One column per right-hand side column.
        particular: Matrix,
        kernel: Subspace,
    },
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<u32>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (r, &x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let p = f.p() as u64;
        let n = other.cols;
        let mut acc = vec![0u64; n];
        let mut out = Self::zeros(self.rows, n);
        // accumulate up to 4 products (< 2^64 for p < 2^31) between reductions
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0;
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b as u64;
                }
                pending += 1;
                if pending == 3 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (dst, &x) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = (x % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, f: Field, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let p = f.p() as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (k, (&a, &b)) in self.row(r).iter().zip(v).enumerate() {
                    acc += a as u64 * b as u64;
                    if k % 3 == 2 {
                        acc %= p;
                    }
                }
                (acc % p) as u32
            })
            .collect()
    }

    pub fn add(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: Field, s: u32) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, f: Field, s: u32, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, s, b);
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn rref(&self, f: Field) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("nonzero pivot");
            for x in m.row_mut(row) {
                *x = f.mul(*x, inv);
            }
            let pivot_row: Vec<u32> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for (x, &y) in m.row_mut(r).iter_mut().zip(&pivot_row).skip(col) {
                    *x = f.mul_add(*x, neg, y);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self, f: Field) -> usize {
        self.rref(f).rank
    }

    /// Right kernel `{x : M x = 0}` as a subspace of `F_p^cols`.
    pub fn kernel(&self, f: Field) -> Subspace {
        let Rref { matrix: r, pivots, .. } = self.rref(f);
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, n, &basis)
    }

    /// Solve `M X = rhs`.
    pub fn solve(&self, f: Field, rhs: &Matrix) -> Result<Solution, LinalgError> {
        if rhs.rows != self.rows {
            return Err(LinalgError::DimensionMismatch(self.rows, rhs.rows));
        }
        let n = self.cols;
        let k = rhs.cols;
        let mut aug = Matrix::zeros(self.rows, n + k);
        for r in 0..self.rows {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.row_mut(r)[n..].copy_from_slice(rhs.row(r));
        }
        let red = aug.rref(f);
        if red.pivots.iter().any(|&c| c >= n) {
            return Ok(Solution::Inconsistent);
        }
        let mut particular = Matrix::zeros(n, k);
        for (i, &pc) in red.pivots.iter().enumerate() {
            for j in 0..k {
                particular.set(pc, j, red.matrix.get(i, n + j));
            }
        }
        Ok(Solution::Consistent { particular, kernel: self.kernel(f) })
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self, f: Field) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        match self.solve(f, &Matrix::identity(self.rows)).ok()? {
            Solution::Consistent { particular, kernel } if kernel.dim() == 0 => Some(particular),
            _ => None,
        }
    }

    /// Evaluate a polynomial (coefficients low degree first) at a square matrix.
    pub fn eval_poly(&self, f: Field, coeffs: &[u32]) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(f, self);
            for i in 0..n {
                let d = acc.get(i, i);
                acc.set(i, i, f.add(d, c));
            }
        }
        acc
    }

    /// Characteristic polynomial `det(xI - M)`, monic, low degree first.
    ///
    /// Reduces to upper Hessenberg form by similarity, then runs the standard
    /// determinant recurrence on the leading principal minors.
    pub fn charpoly(&self, f: Field) -> Vec<u32> {
        assert_eq!(self.rows, self.cols, "charpoly of non-square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
                continue;
            };
            if i != j + 1 {
                for c in 0..n {
                    h.data.swap(i * n + c, (j + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + j + 1);
                }
            }
            let inv = f.inv(h.get(j + 1, j)).unwrap();
            for k in j + 2..n {
                let u = f.mul(h.get(k, j), inv);
                if u == 0 {
                    continue;
                }
                // row_k -= u * row_{j+1}
                let nu = f.neg(u);
                for c in 0..n {
                    let y = h.get(j + 1, c);
                    let x = h.get(k, c);
                    h.set(k, c, f.mul_add(x, nu, y));
                }
                // col_{j+1} += u * col_k
                for r in 0..n {
                    let y = h.get(r, k);
                    let x = h.get(r, j + 1);
                    h.set(r, j + 1, f.mul_add(x, u, y));
                }
            }
        }
        // polys[m] = charpoly of leading m x m block
        let mut polys: Vec<Vec<u32>> = vec![vec![1]];
        for m in 0..n {
            // (x - h_mm) p_m
            let prev = &polys[m];
            let mut next = vec![0u32; m + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(c, h.get(m, m)));
            }
            let mut prod = 1u32;
            for i in 1..=m {
                // prod = h[m][m-1] * ... * h[m-i+1][m-i]
                prod = f.mul(prod, h.get(m - i + 1, m - i));
                if prod == 0 {
                    break;
                }
                let coef = f.mul(prod, h.get(m - i, m));
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}
