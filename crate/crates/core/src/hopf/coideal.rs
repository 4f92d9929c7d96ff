use super::{character::enumerate_characters, BialgebraData, HopfError};
use crate::linalg::{Matrix, Subspace};

/// A unital subalgebra `A ⊆ B` verified to satisfy `Δ(A) ⊆ A ⊗ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    subspace: Subspace,
}

impl CoidealSubalgebra {
    pub fn new(b: &BialgebraData, subspace: Subspace) -> Result<Self, HopfError> {
        if !is_right_coideal(b, &subspace)? {
            return Err(HopfError::NotACoideal);
        }
        Ok(CoidealSubalgebra { subspace })
    }

    /// The scalars `F·1`, always a right coideal subalgebra.
    pub fn scalars(b: &BialgebraData) -> Self {
        CoidealSubalgebra { subspace: Subspace::span(b.field(), b.dim(), &[b.alg().unit().to_vec()]) }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_central(&self, b: &BialgebraData) -> bool {
        self.subspace.is_subspace_of(b.field(), &b.alg().center())
    }

    /// `A⁺ = A ∩ ker ε`.
    pub fn augmentation(&self, b: &BialgebraData) -> Subspace {
        let eps: Vec<u32> = self.subspace.vectors().map(|v| b.counit_of(&v)).collect();
        self.kernel_of(b, &eps)
    }

    /// Kernel inside `A` of the functional taking value `values[r]` on the
    /// `r`-th canonical basis vector of `A`.
    pub fn kernel_of(&self, b: &BialgebraData, values: &[u32]) -> Subspace {
        let f = b.field();
        let row = Matrix::from_vec(1, values.len(), values.to_vec());
        let vectors: Vec<Vec<u32>> = row.kernel(f).vectors().map(|x| self.subspace.combine(f, &x)).collect();
        Subspace::span(f, b.dim(), &vectors)
    }

    /// Values of `ε` on the canonical basis of `A`.
    pub fn counit_values(&self, b: &BialgebraData) -> Vec<u32> {
        self.subspace.vectors().map(|v| b.counit_of(&v)).collect()
    }

    /// Characters of `A` itself, as value vectors on its canonical basis.
    pub fn characters(&self, b: &BialgebraData, seed: u64) -> Result<Vec<Vec<u32>>, HopfError> {
        let sub = b.alg().subalgebra(&self.subspace)?;
        Ok(enumerate_characters(&sub, seed)?.into_iter().map(|c| c.values().to_vec()).collect())
    }
}

/// Whether every column `Δ(a)[·][k]` of the coefficient matrix lies in `A`,
/// i.e. `Δ(a) ∈ A ⊗ B`, for each spanning vector `a`.
pub fn is_right_coideal(b: &BialgebraData, a: &Subspace) -> Result<bool, HopfError> {
    b.alg().check_subalgebra(a)?;
    let f = b.field();
    Ok(a.vectors().all(|v| {
        let t = b.comul_of(&v);
        (0..b.dim()).all(|k| a.contains(f, &t.column(k)))
    }))
}

/// `Δ(A) ⊆ A ⊗ A` and `S(A) ⊆ A`.
pub fn is_hopf_subalgebra(b: &BialgebraData, a: &Subspace) -> Result<bool, HopfError> {
    b.alg().check_subalgebra(a)?;
    let s = b.require_antipode()?;
    let f = b.field();
    Ok(a.vectors().all(|v| {
        let t = b.comul_of(&v);
        (0..b.dim()).all(|k| a.contains(f, &t.column(k)) && a.contains(f, t.row(k)))
            && a.contains(f, &s.mul_vec(f, &v))
    }))
}
