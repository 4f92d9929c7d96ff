//! Example pairs `A ⊆ H`: group algebras over central subgroups and three
//! quantum families at roots of unity.

mod groups;
mod mutation;
mod quantum;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use groups::GroupTable;
pub use mutation::{mutation_fixtures, Mutation, Target};
pub use quantum::{qm2_presentation, qsl2_presentation, usl2_presentation};

use crate::algebra::{AlgebraError, StructureConstantAlgebra};
use crate::hopf::{BialgebraData, CoidealSubalgebra, HopfError};
use crate::linalg::{Field, Matrix, Subspace};
use crate::rewrite::{extract_bialgebra, GeneratorData, Presentation, RewriteError};
use crate::specmap::Sides;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("Z is not a subgroup")]
    NotASubgroup,
    #[error("Z is not central")]
    NotCentral,
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub params: BTreeMap<String, String>,
}

impl Provenance {
    fn new(family: &str, params: &[(&str, String)]) -> Self {
        Provenance {
            family: family.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }
}

/// Expected outcomes for a shipped instance. Partition sizes are sorted in
/// decreasing order, simple dimensions in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub dim: usize,
    pub characters: usize,
    pub x_order: usize,
    pub fiber_sizes: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub fiber_algebra_simple_dims: Vec<usize>,
    /// Common truth value of all applicable conditions.
    pub conditions: bool,
    #[serde(default)]
    pub experiment: bool,
}

/// Expectation records keyed by shipped instance name.
pub fn expectations() -> BTreeMap<String, Expectation> {
    serde_json::from_str(include_str!("../../fixtures/expectations.json")).expect("bundled expectations parse")
}

#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub name: String,
    pub hopf: BialgebraData,
    pub a: CoidealSubalgebra,
    pub provenance: Provenance,
    /// Winding sides used for orbits; two-sided for bialgebras without antipode.
    pub sides: Sides,
    pub expected: Option<Expectation>,
}

impl CorpusInstance {
    /// Validates that `a` is a central right coideal subalgebra of `hopf`.
    pub fn new(
        name: &str,
        hopf: BialgebraData,
        a: Subspace,
        provenance: Provenance,
        sides: Sides,
    ) -> Result<Self, CorpusError> {
        let a = CoidealSubalgebra::new(&hopf, a)?;
        if !hopf.alg().is_central_subalgebra(a.subspace())? {
            return Err(CorpusError::NotCentral);
        }
        Ok(CorpusInstance { name: name.into(), hopf, a, provenance, sides, expected: None })
    }
}

fn field(p: u64) -> Result<Field, CorpusError> {
    Field::new(p).map_err(|e| CorpusError::BadParameters(e.to_string()))
}

/// `F_p[G]` with every group element group-like.
pub fn group_algebra(f: Field, g: &GroupTable) -> Result<BialgebraData, CorpusError> {
    let n = g.order();
    let mut entries = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            entries.push((x, y, g.mul(x, y), 1));
        }
    }
    let mut unit = vec![0; n];
    unit[g.identity()] = 1;
    let alg = StructureConstantAlgebra::new(f, g.labels.clone(), unit, &entries)?;
    let comul: Vec<_> = (0..n).map(|x| (x, x, x, 1)).collect();
    let mut s = Matrix::zeros(n, n);
    for x in 0..n {
        s.set(g.inverse(x), x, 1);
    }
    Ok(BialgebraData::checked(alg, &comul, vec![1; n], Some(s))?)
}

/// `A = F_p[Z] ⊆ H = F_p[G]` for a central subgroup `Z`.
pub fn group_algebra_pair(f: Field, g: &GroupTable, z: &[usize]) -> Result<CorpusInstance, CorpusError> {
    if !g.is_subgroup(z) {
        return Err(CorpusError::NotASubgroup);
    }
    let center = g.center();
    if !z.iter().all(|x| center.contains(x)) {
        return Err(CorpusError::NotCentral);
    }
    if (g.order() as u64).is_multiple_of(f.p() as u64) {
        log::warn!("p = {} divides |G| = {}; the group algebra is not semisimple", f.p(), g.order());
    }
    let hopf = group_algebra(f, g)?;
    let a: Vec<Vec<u32>> = z.iter().map(|&x| hopf.alg().basis_vector(x)).collect();
    let a = Subspace::span(f, g.order(), &a);
    let zs: Vec<String> = z.iter().map(|x| x.to_string()).collect();
    let prov = Provenance::new(
        "group",
        &[("p", f.p().to_string()), ("order", g.order().to_string()), ("central_subgroup", zs.join(","))],
    );
    CorpusInstance::new("group", hopf, a, prov, Sides::Right)
}

fn from_presentation(
    name: &str,
    (pres, data): (Presentation, GeneratorData),
    params: &[(&str, String)],
    sides: Sides,
) -> Result<CorpusInstance, CorpusError> {
    let hopf = extract_bialgebra(&pres, &data)?.bialgebra;
    let a = CoidealSubalgebra::scalars(&hopf).subspace().clone();
    CorpusInstance::new(name, hopf, a, Provenance::new(name, params), sides)
}

/// Frobenius kernel of quantum `SL₂` at a primitive `ℓ`-th root of unity, over `A = F_p·1`.
pub fn quantum_sl2_kernel(ell: u64, p: u64) -> Result<CorpusInstance, CorpusError> {
    let params = [("ell", ell.to_string()), ("p", p.to_string())];
    from_presentation("qsl2", qsl2_presentation(ell, p)?, &params, Sides::Right)
}

/// Small quantum group `u_ε(sl₂)` over `A = F_p·1`.
pub fn small_quantum_sl2(ell: u64, p: u64) -> Result<CorpusInstance, CorpusError> {
    let params = [("ell", ell.to_string()), ("p", p.to_string())];
    from_presentation("usl2", usl2_presentation(ell, p)?, &params, Sides::Right)
}

/// Frobenius kernel of quantum `2 × 2` matrices; a bialgebra, with two-sided winding.
pub fn quantum_m2_kernel(t: u64, p: u64) -> Result<CorpusInstance, CorpusError> {
    let params = [("t", t.to_string()), ("p", p.to_string())];
    from_presentation("qm2", qm2_presentation(t, p)?, &params, Sides::Both)
}

/// Names of the shipped instances, in a fixed order.
pub const SHIPPED: [&str; 7] = ["c3", "c4c2", "q8", "s3c2", "qsl2", "usl2", "qm2"];

/// Builds one shipped instance by name, with its expectation record attached.
pub fn shipped_instance(name: &str) -> Result<CorpusInstance, CorpusError> {
    let group = |p: u64, g: GroupTable, z: Vec<usize>, gname: &str| -> Result<CorpusInstance, CorpusError> {
        let mut inst = group_algebra_pair(field(p)?, &g, &z)?;
        inst.provenance.params.insert("group".into(), gname.into());
        Ok(inst)
    };
    let mut inst = match name {
        "c3" => group(7, GroupTable::cyclic(3), vec![0], "c3")?,
        "c4c2" => group(5, GroupTable::cyclic(4), vec![0, 2], "c4")?,
        "q8" => {
            let g = GroupTable::quaternion();
            let z = g.center();
            group(7, g, z, "q8")?
        }
        "s3c2" => {
            let g = GroupTable::named("s3c2")?;
            let z = g.center();
            group(7, g, z, "s3c2")?
        }
        "qsl2" => quantum_sl2_kernel(3, 7)?,
        "usl2" => small_quantum_sl2(3, 7)?,
        "qm2" => quantum_m2_kernel(3, 7)?,
        other => return Err(CorpusError::BadParameters(format!("no shipped instance {other:?}"))),
    };
    inst.name = name.into();
    inst.expected = expectations().remove(name);
    Ok(inst)
}

pub fn shipped() -> Result<Vec<CorpusInstance>, CorpusError> {
    SHIPPED.iter().map(|n| shipped_instance(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::enumerate_characters;

    #[test]
    fn group_pairs_validate_inputs() {
        let f = Field::new(7).unwrap();
        let s3 = GroupTable::symmetric3();
        assert!(matches!(group_algebra_pair(f, &s3, &[0, 2]), Err(CorpusError::NotCentral)));
        assert!(matches!(group_algebra_pair(f, &s3, &[0, 1, 2]), Err(CorpusError::NotASubgroup)));
        let q8 = group_algebra_pair(f, &GroupTable::quaternion(), &[0, 1]).unwrap();
        assert_eq!(q8.hopf.dim(), 8);
        assert_eq!(q8.a.dim(), 2);
    }

    #[test]
    fn qsl2_kernel_dimension_and_characters() {
        let inst = quantum_sl2_kernel(3, 7).unwrap();
        assert_eq!(inst.hopf.dim(), 27);
        assert!(inst.hopf.is_hopf());
        assert_eq!(enumerate_characters(inst.hopf.alg(), 0).unwrap().len(), 3);
    }

    #[test]
    fn usl2_has_one_character() {
        let inst = small_quantum_sl2(3, 7).unwrap();
        assert_eq!(inst.hopf.dim(), 27);
        assert!(inst.hopf.verify_structure().all_passed());
        assert_eq!(enumerate_characters(inst.hopf.alg(), 0).unwrap().len(), 1);
    }

    #[test]
    fn qm2_kernel_is_a_bialgebra() {
        let inst = quantum_m2_kernel(3, 7).unwrap();
        assert_eq!(inst.hopf.dim(), 81);
        assert!(!inst.hopf.is_hopf());
        assert_eq!(inst.sides, Sides::Both);
    }

    #[test]
    fn expectations_cover_every_shipped_instance() {
        let e = expectations();
        for name in SHIPPED {
            assert!(e.contains_key(name), "{name}");
        }
        assert_eq!(e.len(), SHIPPED.len());
    }
}
