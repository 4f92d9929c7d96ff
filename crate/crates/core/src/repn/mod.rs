//! Left modules over structure-constant algebras, composition factors, simples.

mod meataxe;

pub use meataxe::{chop, chop_with_rng, simples, SimpleRecord, ATTEMPT_BUDGET};

use thiserror::Error;

use crate::algebra::StructureConstantAlgebra;
use crate::linalg::{EchelonBasis, Field, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepnError {
    #[error("action is not a module structure: ρ(e{0}·e{1}) ≠ ρ(e{0})ρ(e{1})")]
    NotAModule(usize, usize),
    #[error("unit does not act as the identity")]
    UnitNotIdentity,
    #[error("expected {expected} action matrices of size {dim}×{dim}")]
    BadShape { expected: usize, dim: usize },
    #[error("modules are over different algebras")]
    DifferentAlgebras,
    #[error("no decision for a {dim}-dimensional module after {attempts} random elements")]
    BudgetExceeded { dim: usize, attempts: usize },
    #[error("{dim}-dimensional irreducible module is not absolutely irreducible (endomorphism ring of dimension {endo_dim})")]
    NotSplit { dim: usize, endo_dim: usize },
}

/// A finite-dimensional left module, stored as one action matrix per algebra
/// basis element (columns are images of module basis vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    field: Field,
    dim: usize,
    action: Vec<Matrix>,
    generators: Vec<usize>,
}

impl ModuleRep {
    /// Checks that the unit acts as the identity and that
    /// `ρ(e_i e_g) = ρ(e_i) ρ(e_g)` for every basis element and algebra generator,
    /// which is enough for a homomorphism since the generators generate.
    pub fn new(alg: &StructureConstantAlgebra, action: Vec<Matrix>) -> Result<Self, RepnError> {
        let f = alg.field();
        let dim = action.first().map_or(0, |m| m.rows());
        if action.len() != alg.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(RepnError::BadShape { expected: alg.dim(), dim });
        }
        let module = Self::trusted(alg, action);
        if module.act(alg.unit()) != Matrix::identity(dim) {
            return Err(RepnError::UnitNotIdentity);
        }
        for i in 0..alg.dim() {
            for &g in alg.generators() {
                let lhs = module.act(&crate::algebra::densify(alg.basis_product(i, g), alg.dim()));
                let rhs = module.action[i].mul(f, &module.action[g]);
                if lhs != rhs {
                    return Err(RepnError::NotAModule(i, g));
                }
            }
        }
        Ok(module)
    }

    pub(crate) fn trusted(alg: &StructureConstantAlgebra, action: Vec<Matrix>) -> Self {
        let dim = action.first().map_or(0, |m| m.rows());
        ModuleRep { field: alg.field(), dim, action, generators: alg.generators().to_vec() }
    }

    /// The left regular module.
    pub fn regular(alg: &StructureConstantAlgebra) -> Self {
        Self::trusted(alg, alg.regular_action())
    }

    /// The one-dimensional module on which `e_i` acts by `values[i]`.
    pub fn from_character(alg: &StructureConstantAlgebra, values: &[u32]) -> Result<Self, RepnError> {
        let action = values.iter().map(|&v| Matrix::from_vec(1, 1, vec![v])).collect();
        Self::new(alg, action)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, h: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, &c) in h.iter().enumerate() {
            m.add_scaled(self.field, c, &self.action[i]);
        }
        m
    }

    /// For a one-dimensional module, the scalar by which each basis element acts.
    pub fn character_values(&self) -> Option<Vec<u32>> {
        (self.dim == 1).then(|| self.action.iter().map(|m| m.get(0, 0)).collect())
    }

    /// The module `M^σ` on which `h` acts as `σ(h)` did on `M`.
    /// `sigma` is the matrix of an algebra endomorphism (column `i` is `σ(e_i)`).
    pub fn twist(&self, sigma: &Matrix) -> ModuleRep {
        let action = (0..self.action.len()).map(|i| self.act(&sigma.column(i))).collect();
        ModuleRep { action, ..self.clone() }
    }

    /// Kernel of `h ↦ ρ(h)`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.action.len();
        let d2 = self.dim * self.dim;
        let mut m = Matrix::zeros(d2, n);
        for (i, a) in self.action.iter().enumerate() {
            for (r, &x) in a.data().iter().enumerate() {
                m.set(r, i, x);
            }
        }
        m.kernel(self.field)
    }

    /// Submodule generated by `v` under the algebra generators.
    pub fn spin(&self, v: &[u32]) -> Subspace {
        spin_under(self.field, &self.generator_matrices(), v)
    }

    pub(crate) fn generator_matrices(&self) -> Vec<&Matrix> {
        self.generators.iter().map(|&g| &self.action[g]).collect()
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        let f = self.field;
        u.vectors().all(|v| self.generators.iter().all(|&g| u.contains(f, &self.action[g].mul_vec(f, &v))))
    }

    /// Action on an invariant subspace, in the coordinates of its canonical basis.
    pub fn submodule(&self, u: &Subspace) -> ModuleRep {
        let f = self.field;
        let basis_t = u.basis().transpose();
        let action = self
            .action
            .iter()
            .map(|a| {
                let images = a.mul(f, &basis_t);
                let rows: Vec<Vec<u32>> = u.pivots().iter().map(|&pc| images.row(pc).to_vec()).collect();
                Matrix::from_rows(&rows, u.dim())
            })
            .collect();
        ModuleRep { field: f, dim: u.dim(), action, generators: self.generators.clone() }
    }

    /// Action on `M/U`, with basis the classes of the standard vectors at the
    /// non-pivot columns of `U`.
    pub fn quotient(&self, u: &Subspace) -> ModuleRep {
        let f = self.field;
        let keep = u.complement_columns();
        let action = self
            .action
            .iter()
            .map(|a| {
                let mut q = Matrix::zeros(keep.len(), keep.len());
                for (b, &cb) in keep.iter().enumerate() {
                    let reduced = u.reduce(f, &a.column(cb));
                    for (r, &cr) in keep.iter().enumerate() {
                        q.set(r, b, reduced[cr]);
                    }
                }
                q
            })
            .collect();
        ModuleRep { field: f, dim: keep.len(), action, generators: self.generators.clone() }
    }

    /// Transposed generator matrices; spinning under them gives submodules of the dual.
    pub(crate) fn transposed_generators(&self) -> Vec<Matrix> {
        self.generators.iter().map(|&g| self.action[g].transpose()).collect()
    }

    fn check_same_algebra(&self, other: &ModuleRep) -> Result<(), RepnError> {
        if self.field != other.field
            || self.action.len() != other.action.len()
            || self.generators != other.generators
        {
            return Err(RepnError::DifferentAlgebras);
        }
        Ok(())
    }

    /// Space of module maps `T: self → other`, as vectors `vec(T)` in row-major order.
    pub fn intertwiners(&self, other: &ModuleRep) -> Result<Subspace, RepnError> {
        self.check_same_algebra(other)?;
        let f = self.field;
        let (dm, dn) = (self.dim, other.dim);
        let unknowns = dm * dn;
        let gens = &self.generators;
        let mut sys = Matrix::zeros(gens.len() * unknowns, unknowns);
        for (gi, &g) in gens.iter().enumerate() {
            let a = &self.action[g];
            let b = &other.action[g];
            for r in 0..dn {
                for c in 0..dm {
                    let row = gi * unknowns + r * dm + c;
                    // (T A - B T)[r][c]
                    for k in 0..dm {
                        let x = sys.get(row, r * dm + k);
                        sys.set(row, r * dm + k, f.add(x, a.get(k, c)));
                    }
                    for k in 0..dn {
                        let x = sys.get(row, k * dm + c);
                        sys.set(row, k * dm + c, f.sub(x, b.get(r, k)));
                    }
                }
            }
        }
        Ok(sys.kernel(f))
    }

    pub fn endomorphism_dim(&self) -> usize {
        self.intertwiners(self).expect("same algebra").dim()
    }
}

/// Whether two simple modules are isomorphic: a nonzero intertwiner exists
/// (and by Schur's lemma is then invertible).
pub fn iso_simple(m: &ModuleRep, n: &ModuleRep) -> Result<bool, RepnError> {
    m.check_same_algebra(n)?;
    if m.dim != n.dim {
        return Ok(false);
    }
    Ok(m.intertwiners(n)?.dim() > 0)
}

pub(crate) fn spin_under(f: Field, gens: &[impl std::borrow::Borrow<Matrix>], v: &[u32]) -> Subspace {
    let mut span = EchelonBasis::new(f, v.len());
    let mut queue = Vec::new();
    if span.insert(v) {
        queue.push(v.to_vec());
    }
    while let Some(w) = queue.pop() {
        for g in gens {
            let gw = g.borrow().mul_vec(f, &w);
            if span.insert(&gw) {
                queue.push(gw);
            }
        }
        if span.dim() == v.len() {
            break;
        }
    }
    span.to_subspace()
}
