use serde::{Deserialize, Serialize};

use super::{dot, BialgebraData, CoidealSubalgebra, HopfError};
use crate::algebra::{densify, StructureConstantAlgebra};
use crate::linalg::{Field, Matrix};
use crate::repn;

/// A unital algebra map onto the base field, stored by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character {
    values: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `b ↦ Σ χ(b₁) b₂`
    Right,
    /// `b ↦ Σ b₁ χ(b₂)`
    Left,
}

impl Character {
    /// Checks `χ(1) = 1` and multiplicativity on basis elements times generators.
    pub fn new(alg: &StructureConstantAlgebra, values: Vec<u32>) -> Result<Self, HopfError> {
        let f = alg.field();
        let n = alg.dim();
        if values.len() != n || values.iter().any(|&v| v >= f.p()) {
            return Err(HopfError::NotACharacter("wrong length or unreduced values".into()));
        }
        let chi = Character { values };
        if chi.eval(f, alg.unit()) != 1 {
            return Err(HopfError::NotACharacter("χ(1) ≠ 1".into()));
        }
        for i in 0..n {
            for &g in alg.generators() {
                let lhs = chi.eval(f, &densify(alg.basis_product(i, g), n));
                if lhs != f.mul(chi.values[i], chi.values[g]) {
                    return Err(HopfError::NotACharacter(format!("χ(e{i}·e{g}) ≠ χ(e{i})χ(e{g})")));
                }
            }
        }
        Ok(chi)
    }

    pub fn counit(b: &BialgebraData) -> Self {
        Character { values: b.counit().to_vec() }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn eval(&self, f: Field, v: &[u32]) -> u32 {
        dot(f, &self.values, v)
    }
}

/// All characters of `alg`, read off from the one-dimensional composition
/// factors of the regular module, sorted by value vector.
pub fn enumerate_characters(alg: &StructureConstantAlgebra, seed: u64) -> Result<Vec<Character>, HopfError> {
    let mut out: Vec<Character> = repn::simples(alg, seed)?
        .iter()
        .filter_map(|r| r.module.character_values())
        .map(|values| Character { values })
        .collect();
    out.sort();
    Ok(out)
}

impl BialgebraData {
    /// `(χ ∗ χ′)(b) = Σ χ(b₁) χ′(b₂)`.
    pub fn convolve(&self, chi: &Character, chi2: &Character) -> Result<Character, HopfError> {
        let f = self.field();
        let values = (0..self.dim())
            .map(|i| {
                self.comul(i)
                    .iter()
                    .fold(0, |acc, &(j, k, c)| f.mul_add(acc, c, f.mul(chi.values[j], chi2.values[k])))
            })
            .collect();
        Character::new(self.alg(), values)
    }

    /// `χ ∘ S`.
    pub fn convolution_inverse(&self, chi: &Character) -> Result<Character, HopfError> {
        let f = self.field();
        let s = self.require_antipode()?;
        let values = (0..self.dim()).map(|i| chi.eval(f, &s.column(i))).collect();
        Character::new(self.alg(), values)
    }

    /// Matrix of the winding map of `chi` (column `i` is the image of `e_i`).
    pub fn winding(&self, chi: &Character, side: Side) -> Matrix {
        let f = self.field();
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for &(j, k, c) in self.comul(i) {
                let (weight, target) = match side {
                    Side::Right => (chi.values[j], k),
                    Side::Left => (chi.values[k], j),
                };
                let x = m.get(target, i);
                m.set(target, i, f.mul_add(x, c, weight));
            }
        }
        m
    }
}

/// The group `X` of characters restricting to the counit on a right coideal
/// subalgebra, with its convolution table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterGroup {
    pub elements: Vec<Character>,
    /// `table[a][b]` is the index of `elements[a] ∗ elements[b]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl CharacterGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        self.elements.binary_search(chi).ok()
    }

    /// Multiplicative order of each element, in element order.
    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order())
            .map(|a| {
                let mut k = 1;
                let mut cur = a;
                while cur != self.identity {
                    cur = self.table[cur][a];
                    k += 1;
                }
                k
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// Selects `X` from the full character list of `b` and verifies the group
/// structure. Also checks, for every supplied character, that its right
/// winding map fixes `A` pointwise exactly when it lies in `X`.
pub fn character_group_x(
    b: &BialgebraData,
    a: &CoidealSubalgebra,
    characters: &[Character],
) -> Result<CharacterGroup, HopfError> {
    b.require_antipode()?;
    let f = b.field();
    let eps = Character::counit(b);
    let a_basis: Vec<Vec<u32>> = a.subspace().vectors().collect();
    let restricts_to_counit =
        |chi: &Character| a_basis.iter().all(|v| chi.eval(f, v) == eps.eval(f, v));
    let mut elements: Vec<Character> = Vec::new();
    for chi in characters {
        let in_x = restricts_to_counit(chi);
        let sigma = b.winding(chi, Side::Right);
        let fixes_a = a_basis.iter().all(|v| sigma.mul_vec(f, v) == *v);
        if in_x != fixes_a {
            return Err(HopfError::Inconsistent(format!(
                "character {:?}: restricts to counit = {in_x}, winding fixes A = {fixes_a}",
                chi.values()
            )));
        }
        if in_x {
            elements.push(chi.clone());
        }
    }
    elements.sort();
    elements.dedup();
    let find = |chi: &Character, what: &str| {
        elements
            .binary_search(chi)
            .map_err(|_| HopfError::Inconsistent(format!("X is not closed under {what}")))
    };
    let identity = find(&eps, "identity")?;
    let mut table = Vec::with_capacity(elements.len());
    for x in &elements {
        let row = elements
            .iter()
            .map(|y| find(&b.convolve(x, y)?, "convolution"))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    let inverse = elements
        .iter()
        .map(|x| find(&b.convolution_inverse(x)?, "inverses"))
        .collect::<Result<Vec<_>, _>>()?;
    for (i, &j) in inverse.iter().enumerate() {
        if table[i][j] != identity || table[j][i] != identity {
            return Err(HopfError::Inconsistent("χ ∗ (χ ∘ S) ≠ ε".into()));
        }
    }
    Ok(CharacterGroup { elements, table, identity, inverse })
}
