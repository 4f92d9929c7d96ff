use std::cmp::Ordering;

use super::{Field, LinalgError, Matrix};

/// A subspace of `F_p^n` held in canonical form: the reduced row-echelon basis
/// with zero rows dropped. Two subspaces are equal iff their bases are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(f: Field, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        Self::from_rows(f, &Matrix::from_rows(vectors, ambient))
    }

    /// Row space of a matrix.
    pub fn from_rows(f: Field, m: &Matrix) -> Self {
        let r = m.rref(f);
        let ambient = m.cols();
        let mut basis = Matrix::zeros(r.rank, ambient);
        for i in 0..r.rank {
            basis.row_mut(i).copy_from_slice(r.matrix.row(i));
        }
        Subspace { ambient, basis, pivots: r.pivots }
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec())
    }

    /// Coordinates that are not pivots; the standard vectors at these positions
    /// complete the basis to one of the ambient space.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along the basis, eliminating every pivot coordinate.
    /// The result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, f: Field, v: &[u32]) -> Vec<u32> {
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in out.iter_mut().zip(self.basis.row(i)).skip(pc) {
                *x = f.mul_add(*x, neg, b);
            }
        }
        out
    }

    pub fn contains(&self, f: Field, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(f, v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the subspace.
    /// In RREF these are just the entries of `v` at the pivot columns.
    pub fn coordinates(&self, f: Field, v: &[u32]) -> Option<Vec<u32>> {
        if self.contains(f, v) {
            Some(self.pivots.iter().map(|&c| v[c]).collect())
        } else {
            None
        }
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, f: Field, coords: &[u32]) -> Vec<u32> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![0u32; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (x, &b) in out.iter_mut().zip(self.basis.row(i)) {
                *x = f.mul_add(*x, c, b);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, f: Field, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.vectors().all(|v| other.contains(f, &v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, f: Field, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::from_rows(f, &self.basis.stack(&other.basis)))
    }

    /// Intersection through the kernel of the stacked bases: solutions of
    /// `x U = y V` give exactly the vectors `x U` in both spaces.
    pub fn intersect(&self, f: Field, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let neg_other = other.basis.scale(f, f.neg(1));
        let stacked_t = self.basis.stack(&neg_other).transpose();
        let ker = stacked_t.kernel(f);
        let vectors: Vec<Vec<u32>> =
            ker.vectors().map(|x| self.combine(f, &x[..k1])).collect();
        Ok(Subspace::span(f, self.ambient, &vectors))
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, f: Field, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient);
        let vectors: Vec<Vec<u32>> = self.vectors().map(|v| map.mul_vec(f, &v)).collect();
        Subspace::span(f, map.rows(), &vectors)
    }
}

/// Incrementally grown echelon basis, used for saturation loops (ideal closure,
/// spinning vectors into submodules). Each stored row is zero at the pivots of
/// all earlier rows, so reducing in insertion order clears every pivot.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: Field, ambient: usize) -> Self {
        EchelonBasis { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in out.iter_mut().zip(row) {
                *x = f.mul_add(*x, neg, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent; returns whether it was new.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[pc]).unwrap();
        r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        self.rows.push(r);
        self.pivots.push(pc);
        true
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.rows)
    }
}

/// Lexicographic on (dimension, basis entries); used to make report orderings canonical.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.data().cmp(other.basis.data()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
