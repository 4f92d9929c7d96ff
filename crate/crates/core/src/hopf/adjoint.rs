use super::{BialgebraData, Character, HopfError, Side};
use crate::linalg::{Matrix, Subspace};
use crate::repn::ModuleRep;

/// The adjoint module `ad(h) v = Σ h₁ · v · S(h₂)` of a bimodule given by
/// left and right action matrices (one per basis element of `b`).
pub fn adjoint_module(b: &BialgebraData, left: &[Matrix], right: &[Matrix]) -> Result<ModuleRep, HopfError> {
    let s = b.require_antipode()?;
    let f = b.field();
    let n = b.dim();
    let gens = b.alg().generators();
    for &g in gens {
        for &h in gens {
            if left[g].mul(f, &right[h]) != right[h].mul(f, &left[g]) {
                return Err(HopfError::NotABimodule);
            }
        }
    }
    let d = left[0].rows();
    // right action of S(e_k), for every k
    let right_s: Vec<Matrix> = (0..n)
        .map(|k| {
            let mut m = Matrix::zeros(d, d);
            for (idx, &x) in s.column(k).iter().enumerate() {
                m.add_scaled(f, x, &right[idx]);
            }
            m
        })
        .collect();
    let ad = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(d, d);
            for &(j, k, c) in b.comul(i) {
                m.add_scaled(f, c, &left[j].mul(f, &right_s[k]));
            }
            m
        })
        .collect();
    Ok(ModuleRep::new(b.alg(), ad)?)
}

/// Adjoint action on the regular bimodule `B`.
pub fn adjoint_regular(b: &BialgebraData) -> Result<ModuleRep, HopfError> {
    let alg = b.alg();
    let left: Vec<Matrix> = (0..alg.dim()).map(|i| alg.left_mult_matrix(i)).collect();
    let right: Vec<Matrix> = (0..alg.dim()).map(|i| alg.right_mult_matrix(i)).collect();
    adjoint_module(b, &left, &right)
}

/// Elements `n` of the regular bimodule with `ad(h) n = χ(h) n` for all `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdEigenspace {
    pub character: Character,
    pub space: Subspace,
}

impl AdEigenspace {
    /// Checks `h · n = n · σ_χ(h)` for every basis element `h` and every
    /// basis vector `n` of the eigenspace.
    pub fn satisfies_winding_identity(&self, b: &BialgebraData) -> bool {
        let alg = b.alg();
        let sigma = b.winding(&self.character, Side::Right);
        self.space.vectors().all(|v| {
            (0..alg.dim()).all(|h| alg.mul(&alg.basis_vector(h), &v) == alg.mul(&v, &sigma.column(h)))
        })
    }
}

/// Nonzero joint eigenspaces of the adjoint action on `B`, one per character
/// with a nonzero eigenspace. Every one-dimensional ad-submodule lies in one.
pub fn ad_eigenspaces(b: &BialgebraData, characters: &[Character]) -> Result<Vec<AdEigenspace>, HopfError> {
    let ad = adjoint_regular(b)?;
    let f = b.field();
    let n = b.dim();
    let mut out = Vec::new();
    for chi in characters {
        let mut stacked = Matrix::zeros(0, n);
        for &g in ad.generators() {
            let shifted = ad.action()[g].sub(f, &Matrix::identity(n).scale(f, chi.values()[g]));
            stacked = stacked.stack(&shifted);
        }
        let space = if stacked.rows() == 0 { Subspace::full(n) } else { stacked.kernel(f) };
        if space.dim() > 0 {
            out.push(AdEigenspace { character: chi.clone(), space });
        }
    }
    Ok(out)
}
