use super::{BialgebraData, CoidealSubalgebra, HopfError};
use crate::algebra::Quotient;
use crate::linalg::{Matrix, Subspace};

/// The algebra `B / BK` for `K = ker ξ ⊆ A`, with the induced Hopf structure
/// when `ξ` is the counit and `BK` turns out to be a Hopf ideal.
#[derive(Debug, Clone)]
pub struct FiberQuotient {
    pub quotient: Quotient,
    pub kernel: Subspace,
    pub hopf: Option<BialgebraData>,
}

impl FiberQuotient {
    pub fn dim(&self) -> usize {
        self.quotient.algebra.dim()
    }

    pub fn ideal(&self) -> &Subspace {
        &self.quotient.ideal
    }

    /// `n × m` matrix whose columns are the chosen representatives of the quotient basis.
    pub fn lift_matrix(&self) -> Matrix {
        let n = self.quotient.projection.cols();
        let m = self.dim();
        let mut l = Matrix::zeros(n, m);
        for (a, &c) in self.quotient.lift_columns.iter().enumerate() {
            l.set(c, a, 1);
        }
        l
    }

    /// The map induced on the quotient by an endomorphism of `B` preserving `BK`.
    pub fn induced_map(&self, b: &BialgebraData, map: &Matrix) -> Result<Matrix, HopfError> {
        let f = b.field();
        if self.ideal().image(f, map) != *self.ideal() {
            return Err(HopfError::WindingDoesNotDescend);
        }
        Ok(self.quotient.projection.mul(f, &map.mul(f, &self.lift_matrix())))
    }
}

/// Quotient of `b` by the ideal generated by `K = ker ξ ⊆ A`, where `xi` lists
/// the values of a character of `A` on the canonical basis of `A`.
pub fn fiber_quotient(b: &BialgebraData, a: &CoidealSubalgebra, xi: &[u32]) -> Result<FiberQuotient, HopfError> {
    let f = b.field();
    let alg = b.alg();
    let n = b.dim();
    if !a.is_central(b) {
        return Err(HopfError::NotCentral);
    }
    let a_basis: Vec<Vec<u32>> = a.subspace().vectors().collect();
    if xi.len() != a_basis.len() {
        return Err(HopfError::NotACharacter("wrong number of values on A".into()));
    }
    let xi_of = |v: &[u32]| {
        let coords = a.subspace().coordinates(f, v).expect("element of A");
        super::dot(f, &coords, xi)
    };
    if xi_of(alg.unit()) != 1 {
        return Err(HopfError::NotACharacter("ξ(1) ≠ 1".into()));
    }
    for u in &a_basis {
        for v in &a_basis {
            if xi_of(&alg.mul(u, v)) != f.mul(xi_of(u), xi_of(v)) {
                return Err(HopfError::NotACharacter("ξ is not multiplicative on A".into()));
            }
        }
    }

    let kernel = a.kernel_of(b, xi);
    let mut left_products = Vec::new();
    let mut right_products = Vec::new();
    for k in kernel.vectors() {
        for i in 0..n {
            let e = alg.basis_vector(i);
            left_products.push(alg.mul(&e, &k));
            right_products.push(alg.mul(&k, &e));
        }
    }
    let bk = Subspace::span(f, n, &left_products);
    if bk != Subspace::span(f, n, &right_products) {
        return Err(HopfError::Inconsistent("BK ≠ KB".into()));
    }
    if bk.contains(f, alg.unit()) {
        return Err(HopfError::ImproperIdeal);
    }
    let quotient = alg.quotient(&bk)?;
    let mut fq = FiberQuotient { quotient, kernel, hopf: None };
    if xi == a.counit_values(b).as_slice() {
        fq.hopf = induced_hopf(b, &fq)?;
    }
    Ok(fq)
}

/// Structure maps on `B / I` when `I` is a coideal stable under the antipode;
/// `None` if those checks fail.
fn induced_hopf(b: &BialgebraData, fq: &FiberQuotient) -> Result<Option<BialgebraData>, HopfError> {
    let f = b.field();
    let p = &fq.quotient.projection;
    let pt = p.transpose();
    let image_tensor = |t: &Matrix| p.mul(f, &t.mul(f, &pt));
    for x in fq.ideal().vectors() {
        if !image_tensor(&b.comul_of(&x)).is_zero() || b.counit_of(&x) != 0 {
            return Ok(None);
        }
        if let Some(s) = b.antipode() {
            if !p.mul_vec(f, &s.mul_vec(f, &x)).iter().all(|&c| c == 0) {
                return Ok(None);
            }
        }
    }
    let m = fq.dim();
    let mut comul = Vec::new();
    for (a, &c) in fq.quotient.lift_columns.iter().enumerate() {
        let t = image_tensor(&b.comul_of(&b.alg().basis_vector(c)));
        for r in 0..m {
            for s in 0..m {
                if t.get(r, s) != 0 {
                    comul.push((a, r, s, t.get(r, s)));
                }
            }
        }
    }
    let counit = fq.quotient.lift_columns.iter().map(|&c| b.counit()[c]).collect();
    let antipode = b.antipode().map(|s| p.mul(f, &s.mul(f, &fq.lift_matrix())));
    Ok(Some(BialgebraData::checked(fq.quotient.algebra.clone(), &comul, counit, antipode)?))
}
