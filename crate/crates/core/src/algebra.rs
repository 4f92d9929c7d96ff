//! Finite-dimensional associative unital algebras given by structure constants.

use std::sync::OnceLock;

use thiserror::Error;

use crate::linalg::{EchelonBasis, Field, LinalgError, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("multiplication is not associative: (e{0}·e{1})·e{2} ≠ e{0}·(e{1}·e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit axiom fails on basis element e{0}")]
    UnitAxiomFails(usize),
    #[error("invalid structure data: {0}")]
    BadEntry(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("ideal contains the unit")]
    ImproperIdeal,
    #[error("subspace is not a unital subalgebra")]
    NotASubalgebra,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Sparse vector as sorted `(index, nonzero coefficient)` pairs.
pub type SparseVec = Vec<(usize, u32)>;

/// `e_i · e_j` contains `c · e_k`.
pub type MulEntry = (usize, usize, usize, u32);

#[derive(Debug, Clone)]
pub struct StructureConstantAlgebra {
    field: Field,
    labels: Vec<String>,
    unit: Vec<u32>,
    /// `table[i * dim + j]` is the product `e_i e_j`.
    table: Vec<SparseVec>,
    generators: OnceLock<Vec<usize>>,
}

impl PartialEq for StructureConstantAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.unit == other.unit
            && self.table == other.table
    }
}

impl Eq for StructureConstantAlgebra {}

/// Result of [`StructureConstantAlgebra::quotient`].
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: StructureConstantAlgebra,
    /// `(dim - dim I) × dim`, maps an element to its class.
    pub projection: Matrix,
    /// The quotient basis element `a` is the class of `e_{lift_columns[a]}`.
    pub lift_columns: Vec<usize>,
    pub ideal: Subspace,
}

impl StructureConstantAlgebra {
    /// Builds and verifies an algebra: associativity on all basis triples and the
    /// unit laws on all basis elements.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        unit: Vec<u32>,
        entries: &[MulEntry],
    ) -> Result<Self, AlgebraError> {
        let alg = Self::new_unchecked(field, labels, unit, entries)?;
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Builds the tables after range checks only; axioms are not verified.
    pub fn new_unchecked(
        field: Field,
        labels: Vec<String>,
        unit: Vec<u32>,
        entries: &[MulEntry],
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::BadEntry("zero-dimensional algebra".into()));
        }
        if unit.len() != n {
            return Err(AlgebraError::BadEntry(format!("unit has length {} != {n}", unit.len())));
        }
        if let Some(&c) = unit.iter().find(|&&c| c >= field.p()) {
            return Err(AlgebraError::BadEntry(format!("unit coefficient {c} not reduced")));
        }
        let mut dense: Vec<Vec<u32>> = Vec::new();
        let mut touched = vec![false; n * n];
        dense.resize(n * n, Vec::new());
        for &(i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(AlgebraError::BadEntry(format!("index out of range in ({i},{j},{k})")));
            }
            if c >= field.p() {
                return Err(AlgebraError::BadEntry(format!("coefficient {c} not reduced mod {}", field.p())));
            }
            let slot = &mut dense[i * n + j];
            if !touched[i * n + j] {
                slot.resize(n, 0);
                touched[i * n + j] = true;
            }
            slot[k] = field.add(slot[k], c);
        }
        let table = dense.into_iter().map(|v| to_sparse(&v)).collect();
        Ok(StructureConstantAlgebra { field, labels, unit, table, generators: OnceLock::new() })
    }

    pub(crate) fn from_table(
        field: Field,
        labels: Vec<String>,
        unit: Vec<u32>,
        table: Vec<SparseVec>,
    ) -> Self {
        StructureConstantAlgebra { field, labels, unit, table, generators: OnceLock::new() }
    }

    pub fn check_associativity(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul_sparse_basis(ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_basis_sparse(i, jk);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_unit(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim() {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::UnitAxiomFails(i));
            }
        }
        Ok(())
    }

    pub fn check_axioms(&self) -> Result<(), AlgebraError> {
        self.check_unit()?;
        self.check_associativity()
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// All structure constants, sorted lexicographically.
    pub fn entries(&self) -> Vec<MulEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for &(k, c) in self.basis_product(i, j) {
                    out.push((i, j, k, c));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    fn mul_sparse_basis(&self, a: &SparseVec, k: usize) -> SparseVec {
        let f = self.field;
        let mut acc = vec![0u32; self.dim()];
        for &(i, c) in a {
            for &(m, d) in self.basis_product(i, k) {
                acc[m] = f.mul_add(acc[m], c, d);
            }
        }
        to_sparse(&acc)
    }

    fn mul_basis_sparse(&self, i: usize, b: &SparseVec) -> SparseVec {
        let f = self.field;
        let mut acc = vec![0u32; self.dim()];
        for &(j, c) in b {
            for &(m, d) in self.basis_product(i, j) {
                acc[m] = f.mul_add(acc[m], c, d);
            }
        }
        to_sparse(&acc)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim();
        let mut acc = vec![0u32; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = f.mul(x, y);
                for &(k, c) in self.basis_product(i, j) {
                    acc[k] = f.mul_add(acc[k], xy, c);
                }
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Matrix of `v ↦ e_i v`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for &(k, c) in self.basis_product(i, j) {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Matrix of `v ↦ v e_i`.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for &(k, c) in self.basis_product(j, i) {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, a: &[u32]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                m.add_scaled(self.field, x, &self.left_mult_matrix(i));
            }
        }
        m
    }

    /// Left regular representation: `L_{e_i}` for every basis element.
    pub fn regular_action(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.left_mult_matrix(i)).collect()
    }

    /// Basis indices generating the algebra, chosen greedily in basis order:
    /// `e_i` is taken whenever it is not in the subalgebra generated so far.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut span = self.generated_subalgebra(&gens);
            for i in 0..self.dim() {
                if span.dim() == self.dim() {
                    break;
                }
                if !span.contains(&self.basis_vector(i)) {
                    gens.push(i);
                    span = self.generated_subalgebra(&gens);
                }
            }
            gens
        })
    }

    fn generated_subalgebra(&self, gens: &[usize]) -> EchelonBasis {
        let mut span = EchelonBasis::new(self.field, self.dim());
        span.insert(&self.unit);
        let mut queue = vec![self.unit.clone()];
        while let Some(v) = queue.pop() {
            for &g in gens {
                let w = self.mul(&v, &self.basis_vector(g));
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    }

    /// Smallest two-sided ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        assert_eq!(seed.ambient(), self.dim());
        let mut span = EchelonBasis::new(self.field, self.dim());
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in seed.vectors() {
            if span.insert(&v) {
                queue.push(v);
            }
        }
        let gens: Vec<Vec<u32>> = self.generators().iter().map(|&g| self.basis_vector(g)).collect();
        while let Some(v) = queue.pop() {
            for g in &gens {
                for w in [self.mul(g, &v), self.mul(&v, g)] {
                    if span.insert(&w) {
                        queue.push(w);
                    }
                }
            }
        }
        span.to_subspace()
    }

    pub fn is_two_sided_ideal(&self, ideal: &Subspace) -> bool {
        let f = self.field;
        ideal.vectors().all(|v| {
            self.generators().iter().all(|&g| {
                let e = self.basis_vector(g);
                ideal.contains(f, &self.mul(&e, &v)) && ideal.contains(f, &self.mul(&v, &e))
            })
        })
    }

    /// Quotient by a proper two-sided ideal. The quotient basis is the set of
    /// standard vectors at the non-pivot columns of the ideal's canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
        let f = self.field;
        if ideal.ambient() != self.dim() {
            return Err(LinalgError::DimensionMismatch(ideal.ambient(), self.dim()).into());
        }
        if !self.is_two_sided_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        if ideal.contains(f, &self.unit) {
            return Err(AlgebraError::ImproperIdeal);
        }
        let lift = ideal.complement_columns();
        let m = lift.len();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = ideal.reduce(f, v);
            lift.iter().map(|&c| r[c]).collect()
        };
        let mut projection = Matrix::zeros(m, self.dim());
        for j in 0..self.dim() {
            for (a, x) in project(&self.basis_vector(j)).into_iter().enumerate() {
                projection.set(a, j, x);
            }
        }
        let mut table = Vec::with_capacity(m * m);
        for &ca in &lift {
            for &cb in &lift {
                let prod = densify(self.basis_product(ca, cb), self.dim());
                table.push(to_sparse(&project(&prod)));
            }
        }
        let labels = lift.iter().map(|&c| self.labels[c].clone()).collect();
        let algebra = Self::from_table(f, labels, project(&self.unit), table);
        Ok(Quotient { algebra, projection, lift_columns: lift, ideal: ideal.clone() })
    }

    /// Center, as the joint kernel of `v ↦ e_g v - v e_g` over algebra generators.
    pub fn center(&self) -> Subspace {
        let f = self.field;
        let n = self.dim();
        let gens = self.generators();
        if gens.is_empty() {
            return Subspace::full(n);
        }
        let mut stacked = Matrix::zeros(0, n);
        for &g in gens {
            let comm = self.left_mult_matrix(g).sub(f, &self.right_mult_matrix(g));
            stacked = stacked.stack(&comm);
        }
        stacked.kernel(f)
    }

    /// Checks that `sub` contains the unit and is closed under multiplication.
    pub fn check_subalgebra(&self, sub: &Subspace) -> Result<(), AlgebraError> {
        let f = self.field;
        if sub.ambient() != self.dim() || !sub.contains(f, &self.unit) {
            return Err(AlgebraError::NotASubalgebra);
        }
        let basis: Vec<Vec<u32>> = sub.vectors().collect();
        for a in &basis {
            for b in &basis {
                if !sub.contains(f, &self.mul(a, b)) {
                    return Err(AlgebraError::NotASubalgebra);
                }
            }
        }
        Ok(())
    }

    pub fn is_central_subalgebra(&self, sub: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subalgebra(sub)?;
        Ok(sub.is_subspace_of(self.field, &self.center()))
    }

    /// The subalgebra `sub` as an algebra in its own right, on its canonical basis.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<StructureConstantAlgebra, AlgebraError> {
        self.check_subalgebra(sub)?;
        let f = self.field;
        let basis: Vec<Vec<u32>> = sub.vectors().collect();
        let coords = |v: &[u32]| sub.coordinates(f, v).expect("closed under products");
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for a in &basis {
            for b in &basis {
                table.push(to_sparse(&coords(&self.mul(a, b))));
            }
        }
        let labels = basis.iter().map(|v| self.format_element(v)).collect();
        Ok(Self::from_table(f, labels, coords(&self.unit), table))
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, v: &[u32]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { self.labels[i].clone() } else { format!("{c}·{}", self.labels[i]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub(crate) fn to_sparse(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

pub(crate) fn densify(v: &SparseVec, n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for &(i, c) in v {
        out[i] = c;
    }
    out
}
