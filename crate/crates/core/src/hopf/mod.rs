//! Bialgebra and Hopf structure on a structure-constant algebra.

mod adjoint;
mod character;
mod coideal;
mod fiber;

pub use adjoint::{adjoint_module, adjoint_regular, ad_eigenspaces, AdEigenspace};
pub use character::{character_group_x, enumerate_characters, Character, CharacterGroup, Side};
pub use coideal::{is_hopf_subalgebra, is_right_coideal, CoidealSubalgebra};
pub use fiber::{fiber_quotient, FiberQuotient};

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{densify, AlgebraError, StructureConstantAlgebra};
use crate::linalg::{Field, Matrix};
use crate::repn::RepnError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("no antipode")]
    NoAntipode,
    #[error("subspace is not a right coideal")]
    NotACoideal,
    #[error("subalgebra is not central")]
    NotCentral,
    #[error("subalgebra is not a Hopf subalgebra")]
    NotAHopfSubalgebra,
    #[error("left and right actions do not commute")]
    NotABimodule,
    #[error("functional is not a character: {0}")]
    NotACharacter(String),
    #[error("ideal B·K is the whole algebra")]
    ImproperIdeal,
    #[error("structure check failed: {axiom} at {witness:?}")]
    StructureCheckFailed { axiom: Axiom, witness: Vec<usize> },
    #[error("winding map does not preserve the ideal")]
    WindingDoesNotDescend,
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Repn(#[from] RepnError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Unit,
    ComulMultiplicative,
    CounitMultiplicative,
    Coassociativity,
    Counit,
    AntipodeLeft,
    AntipodeRight,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComulMultiplicative => "comul_multiplicative",
            Axiom::CounitMultiplicative => "counit_multiplicative",
            Axiom::AntipodeLeft => "antipode_left",
            Axiom::AntipodeRight => "antipode_right",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    /// Basis indices of a failing instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| !r.passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

/// `Δ(e_i)` as sorted `(j, k, c)` terms meaning `c · e_j ⊗ e_k`.
pub type TensorTerms = Vec<(usize, usize, u32)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraData {
    alg: StructureConstantAlgebra,
    comul: Vec<TensorTerms>,
    counit: Vec<u32>,
    /// Column `i` is `S(e_i)`.
    antipode: Option<Matrix>,
    hopf: bool,
}

impl BialgebraData {
    /// Assembles structure data without verifying axioms. Entries are
    /// `(i, j, k, c)` meaning `Δ(e_i)` contains `c · e_j ⊗ e_k`; repeated entries add.
    pub fn new(
        alg: StructureConstantAlgebra,
        comul_entries: &[(usize, usize, usize, u32)],
        counit: Vec<u32>,
        antipode: Option<Matrix>,
    ) -> Result<Self, HopfError> {
        let n = alg.dim();
        let f = alg.field();
        let bad = |msg: String| HopfError::Algebra(AlgebraError::BadEntry(msg));
        if counit.len() != n || counit.iter().any(|&c| c >= f.p()) {
            return Err(bad("counit has wrong length or unreduced entries".into()));
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n || s.data().iter().any(|&c| c >= f.p()) {
                return Err(bad("antipode has wrong shape or unreduced entries".into()));
            }
        }
        let mut acc: Vec<HashMap<(usize, usize), u32>> = vec![HashMap::new(); n];
        for &(i, j, k, c) in comul_entries {
            if i >= n || j >= n || k >= n || c >= f.p() {
                return Err(bad(format!("comultiplication entry ({i},{j},{k},{c}) out of range")));
            }
            let e = acc[i].entry((j, k)).or_insert(0);
            *e = f.add(*e, c);
        }
        let comul = acc.into_iter().map(sorted_terms).collect();
        Ok(BialgebraData { alg, comul, counit, antipode, hopf: false })
    }

    /// Assembles and verifies; the Hopf flag is set when an antipode is present
    /// and every axiom holds.
    pub fn checked(
        alg: StructureConstantAlgebra,
        comul_entries: &[(usize, usize, usize, u32)],
        counit: Vec<u32>,
        antipode: Option<Matrix>,
    ) -> Result<Self, HopfError> {
        Self::new(alg, comul_entries, counit, antipode)?.verified()
    }

    /// Runs [`verify_structure`](Self::verify_structure) and fails on the first broken axiom.
    pub fn verified(mut self) -> Result<Self, HopfError> {
        let report = self.verify_structure();
        if let Some(r) = report.first_failure() {
            return Err(HopfError::StructureCheckFailed {
                axiom: r.axiom,
                witness: r.witness.clone().unwrap_or_default(),
            });
        }
        self.hopf = self.antipode.is_some();
        Ok(self)
    }

    pub fn alg(&self) -> &StructureConstantAlgebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn comul(&self, i: usize) -> &TensorTerms {
        &self.comul[i]
    }

    pub fn counit(&self) -> &[u32] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    /// True when an antipode is present and all axioms have been verified.
    pub fn is_hopf(&self) -> bool {
        self.hopf
    }

    pub fn require_antipode(&self) -> Result<&Matrix, HopfError> {
        self.antipode.as_ref().ok_or(HopfError::NoAntipode)
    }

    /// All comultiplication entries `(i, j, k, c)`, sorted.
    pub fn comul_entries(&self) -> Vec<(usize, usize, usize, u32)> {
        let mut out = Vec::new();
        for (i, terms) in self.comul.iter().enumerate() {
            out.extend(terms.iter().map(|&(j, k, c)| (i, j, k, c)));
        }
        out
    }

    /// `Δ(v)` as a dense `n × n` coefficient matrix (row `j`, column `k`).
    pub fn comul_of(&self, v: &[u32]) -> Matrix {
        let f = self.field();
        let n = self.dim();
        let mut t = Matrix::zeros(n, n);
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(j, k, c) in &self.comul[i] {
                t.set(j, k, f.mul_add(t.get(j, k), x, c));
            }
        }
        t
    }

    pub fn counit_of(&self, v: &[u32]) -> u32 {
        dot(self.field(), &self.counit, v)
    }

    pub fn verify_structure(&self) -> AxiomReport {
        let mut results = Vec::new();
        let mut push = |axiom, witness: Option<Vec<usize>>| {
            results.push(AxiomResult { axiom, passed: witness.is_none(), witness })
        };
        push(
            Axiom::Associativity,
            match self.alg.check_associativity() {
                Err(AlgebraError::NotAssociative(i, j, k)) => Some(vec![i, j, k]),
                _ => None,
            },
        );
        push(
            Axiom::Unit,
            match self.alg.check_unit() {
                Err(AlgebraError::UnitAxiomFails(i)) => Some(vec![i]),
                _ => None,
            },
        );
        push(Axiom::ComulMultiplicative, self.comul_multiplicative_witness());
        push(Axiom::CounitMultiplicative, self.counit_multiplicative_witness());
        push(Axiom::Coassociativity, self.coassociativity_witness());
        push(Axiom::Counit, self.counit_witness());
        if self.antipode.is_some() {
            push(Axiom::AntipodeLeft, self.antipode_witness(true));
            push(Axiom::AntipodeRight, self.antipode_witness(false));
        }
        AxiomReport { results }
    }

    fn coassociativity_witness(&self) -> Option<Vec<usize>> {
        let f = self.field();
        let n = self.dim() as u64;
        let key = |a: usize, b: usize, c: usize| (a as u64 * n + b as u64) * n + c as u64;
        for i in 0..self.dim() {
            let mut left: HashMap<u64, u32> = HashMap::new();
            let mut right: HashMap<u64, u32> = HashMap::new();
            for &(j, k, c) in &self.comul[i] {
                for &(a, b, d) in &self.comul[j] {
                    let e = left.entry(key(a, b, k)).or_insert(0);
                    *e = f.mul_add(*e, c, d);
                }
                for &(a, b, d) in &self.comul[k] {
                    let e = right.entry(key(j, a, b)).or_insert(0);
                    *e = f.mul_add(*e, c, d);
                }
            }
            left.retain(|_, v| *v != 0);
            right.retain(|_, v| *v != 0);
            if left != right {
                return Some(vec![i]);
            }
        }
        None
    }

    fn counit_witness(&self) -> Option<Vec<usize>> {
        let f = self.field();
        let n = self.dim();
        (0..n)
            .find(|&i| {
                let mut l = vec![0u32; n];
                let mut r = vec![0u32; n];
                for &(j, k, c) in &self.comul[i] {
                    l[k] = f.mul_add(l[k], c, self.counit[j]);
                    r[j] = f.mul_add(r[j], c, self.counit[k]);
                }
                let e = self.alg.basis_vector(i);
                l != e || r != e
            })
            .map(|i| vec![i])
    }

    /// `Δ(1) = 1⊗1` (witness: empty) and `Δ(e_i e_g) = Δ(e_i)Δ(e_g)` for
    /// basis elements `e_i` and algebra generators `e_g` (witness `[i, g]`).
    fn comul_multiplicative_witness(&self) -> Option<Vec<usize>> {
        let f = self.field();
        let n = self.dim();
        let unit = self.alg.unit();
        let mut one_one = Matrix::zeros(n, n);
        for (j, &x) in unit.iter().enumerate() {
            for (k, &y) in unit.iter().enumerate() {
                one_one.set(j, k, f.mul(x, y));
            }
        }
        if self.comul_of(unit) != one_one {
            return Some(vec![]);
        }
        for i in 0..n {
            for &g in self.alg.generators() {
                let lhs = self.comul_of(&densify(self.alg.basis_product(i, g), n));
                let mut rhs = Matrix::zeros(n, n);
                for &(j, k, c) in &self.comul[i] {
                    for &(j2, k2, c2) in &self.comul[g] {
                        let cc = f.mul(c, c2);
                        for &(a, x) in self.alg.basis_product(j, j2) {
                            let cx = f.mul(cc, x);
                            for &(b, y) in self.alg.basis_product(k, k2) {
                                rhs.set(a, b, f.mul_add(rhs.get(a, b), cx, y));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Some(vec![i, g]);
                }
            }
        }
        None
    }

    fn counit_multiplicative_witness(&self) -> Option<Vec<usize>> {
        let f = self.field();
        let n = self.dim();
        if self.counit_of(self.alg.unit()) != 1 {
            return Some(vec![]);
        }
        for i in 0..n {
            for &g in self.alg.generators() {
                let lhs = self.counit_of(&densify(self.alg.basis_product(i, g), n));
                if lhs != f.mul(self.counit[i], self.counit[g]) {
                    return Some(vec![i, g]);
                }
            }
        }
        None
    }

    /// Left: `Σ S(b₁) b₂ = ε(b) 1`; right: `Σ b₁ S(b₂) = ε(b) 1`.
    fn antipode_witness(&self, left: bool) -> Option<Vec<usize>> {
        let f = self.field();
        let n = self.dim();
        let s = self.antipode.as_ref()?;
        let unit = self.alg.unit();
        for i in 0..n {
            let mut acc = vec![0u32; n];
            for &(j, k, c) in &self.comul[i] {
                let prod = if left {
                    self.alg.mul(&s.column(j), &self.alg.basis_vector(k))
                } else {
                    self.alg.mul(&self.alg.basis_vector(j), &s.column(k))
                };
                for (a, &x) in acc.iter_mut().zip(&prod) {
                    *a = f.mul_add(*a, c, x);
                }
            }
            let expected: Vec<u32> = unit.iter().map(|&u| f.mul(u, self.counit[i])).collect();
            if acc != expected {
                return Some(vec![i]);
            }
        }
        None
    }
}

pub(crate) fn dot(f: Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.mul_add(acc, x, y))
}

fn sorted_terms(m: HashMap<(usize, usize), u32>) -> TensorTerms {
    let mut v: TensorTerms = m.into_iter().filter(|&(_, c)| c != 0).map(|((j, k), c)| (j, k, c)).collect();
    v.sort_unstable();
    v
}

/// Whether `m` (column `i` = image of `e_i`) is a unital algebra endomorphism;
/// checked on basis elements times algebra generators.
pub fn is_algebra_endomorphism(alg: &StructureConstantAlgebra, m: &Matrix) -> bool {
    let f = alg.field();
    let n = alg.dim();
    if m.mul_vec(f, alg.unit()) != alg.unit() {
        return false;
    }
    let cols: Vec<Vec<u32>> = (0..n).map(|i| m.column(i)).collect();
    (0..n).all(|i| {
        alg.generators().iter().all(|&g| {
            let lhs = m.mul_vec(f, &densify(alg.basis_product(i, g), n));
            lhs == alg.mul(&cols[i], &cols[g])
        })
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::MulEntry;

    /// Group algebra from a Cayley table, with group-like Hopf structure.
    pub(crate) fn group_hopf(p: u64, table: &[Vec<usize>]) -> BialgebraData {
        let f = Field::new(p).unwrap();
        let n = table.len();
        let e = (0..n).find(|&i| (0..n).all(|j| table[i][j] == j)).unwrap();
        let entries: Vec<MulEntry> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j, table[i][j], 1))).collect();
        let mut unit = vec![0; n];
        unit[e] = 1;
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let alg = StructureConstantAlgebra::new(f, labels, unit, &entries).unwrap();
        let comul: Vec<_> = (0..n).map(|i| (i, i, i, 1)).collect();
        let mut s = Matrix::zeros(n, n);
        for i in 0..n {
            let inv = (0..n).find(|&j| table[i][j] == e).unwrap();
            s.set(inv, i, 1);
        }
        BialgebraData::checked(alg, &comul, vec![1; n], Some(s)).unwrap()
    }

    pub(crate) fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn cyclic_group_algebra_is_hopf() {
        let b = group_hopf(7, &cyclic_table(3));
        assert!(b.is_hopf());
        assert!(b.verify_structure().all_passed());
    }

    #[test]
    fn perturbed_comultiplication_breaks_coassociativity() {
        let b = group_hopf(7, &cyclic_table(3));
        let mut entries = b.comul_entries();
        entries.push((1, 2, 2, 1)); // Δ(g1) gains g2⊗g2
        let bad = BialgebraData::new(b.alg().clone(), &entries, b.counit().to_vec(), b.antipode().cloned()).unwrap();
        let report = bad.verify_structure();
        let r = report.get(Axiom::Coassociativity).unwrap();
        assert!(!r.passed);
        assert_eq!(r.witness, Some(vec![1]));
    }

    #[test]
    fn wrong_antipode_detected() {
        let b = group_hopf(7, &cyclic_table(3));
        let bad = BialgebraData::new(b.alg().clone(), &b.comul_entries(), b.counit().to_vec(), Some(Matrix::identity(3)))
            .unwrap();
        let report = bad.verify_structure();
        assert_eq!(report.get(Axiom::AntipodeLeft).unwrap().witness, Some(vec![1]));
        assert!(matches!(bad.verified(), Err(HopfError::StructureCheckFailed { axiom: Axiom::AntipodeLeft, .. })));
    }
}
