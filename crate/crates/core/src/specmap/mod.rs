//! Primitive ideals, their contractions to a central subalgebra, winding
//! orbits, and the comparison between fibers and orbits.

mod verdict;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use verdict::{remark_check, verify_theorem, Mode, RemarkEntry, RemarkReport, Summary, Verdict, Witnesses};

use crate::algebra::{AlgebraError, StructureConstantAlgebra};
use crate::hopf::{BialgebraData, Character, HopfError, Side};
use crate::linalg::{Field, Matrix, Subspace};
use crate::repn::{self, RepnError};

#[derive(Debug, Error)]
pub enum SpecmapError {
    #[error("winding map {map} sends primitive ideal {prim} outside the list")]
    NotAPermutation { map: usize, prim: usize },
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Repn(#[from] RepnError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Which winding maps generate the orbit action.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sides {
    #[default]
    Right,
    Left,
    Both,
}

/// A primitive ideal, given as the annihilator of a simple module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimItem {
    pub annihilator: Subspace,
    pub simple_dim: usize,
    pub character: Option<Character>,
}

/// Primitive ideals ordered by simple dimension, then annihilator.
pub fn prim_enumerate(alg: &StructureConstantAlgebra, seed: u64) -> Result<Vec<PrimItem>, SpecmapError> {
    let mut out: Vec<PrimItem> = repn::simples(alg, seed)?
        .into_iter()
        .map(|r| {
            Ok(PrimItem {
                character: r.module.character_values().map(|v| Character::new(alg, v)).transpose()?,
                simple_dim: r.dim(),
                annihilator: r.annihilator,
            })
        })
        .collect::<Result<_, HopfError>>()?;
    out.sort_by(|a, b| (a.simple_dim, &a.annihilator).cmp(&(b.simple_dim, &b.annihilator)));
    Ok(out)
}

/// `P ∩ A`.
pub fn contract(f: Field, prim: &PrimItem, a: &Subspace) -> Subspace {
    prim.annihilator.intersect(f, a).expect("same ambient space")
}

/// Whether `A / C` is a field, for a commutative subalgebra `A` and an ideal
/// `C ⊆ A`: the `p`-power map on the quotient must be injective with a
/// one-dimensional fixed space.
pub fn is_maximal_in(alg: &StructureConstantAlgebra, a: &Subspace, contraction: &Subspace) -> Result<bool, SpecmapError> {
    let f = alg.field();
    let sub = alg.subalgebra(a)?;
    if !sub.is_commutative() {
        return Err(SpecmapError::Inconsistent("A is not commutative".into()));
    }
    let coords: Vec<Vec<u32>> = contraction
        .vectors()
        .map(|v| a.coordinates(f, &v).ok_or_else(|| SpecmapError::Inconsistent("contraction not inside A".into())))
        .collect::<Result<_, _>>()?;
    let q = sub.quotient(&Subspace::span(f, sub.dim(), &coords))?;
    let qa = &q.algebra;
    let m = qa.dim();
    let frob_cols: Vec<Vec<u32>> = (0..m)
        .map(|i| {
            let e = qa.basis_vector(i);
            let mut acc = qa.unit().to_vec();
            for _ in 0..f.p() {
                acc = qa.mul(&acc, &e);
            }
            acc
        })
        .collect();
    let frob = Matrix::from_columns(&frob_cols, m);
    let mut iterated = Matrix::identity(m);
    for _ in 0..m {
        iterated = iterated.mul(f, &frob);
    }
    let nilradical_zero = iterated.kernel(f).dim() == 0;
    let fixed = frob.sub(f, &Matrix::identity(m)).kernel(f).dim();
    Ok(nilradical_zero && fixed == 1)
}

/// Grouping of primitive ideals by contraction; blocks ordered by their
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPartition {
    pub blocks: Vec<Vec<usize>>,
    pub labels: Vec<Subspace>,
}

impl FiberPartition {
    pub fn block_of_label(&self, label: &Subspace) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn sizes(&self) -> Vec<usize> {
        sorted_sizes(&self.blocks)
    }
}

pub fn fibers(f: Field, prims: &[PrimItem], a: &Subspace) -> FiberPartition {
    let mut labels: Vec<Subspace> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, p) in prims.iter().enumerate() {
        let c = contract(f, p, a);
        match labels.iter().position(|l| *l == c) {
            Some(b) => blocks[b].push(i),
            None => {
                labels.push(c);
                blocks.push(vec![i]);
            }
        }
    }
    FiberPartition { blocks, labels }
}

/// Orbits of the group generated by the winding maps; blocks ordered by
/// their smallest member, which is also the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        sorted_sizes(&self.blocks)
    }
}

fn sorted_sizes(blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut s: Vec<usize> = blocks.iter().map(Vec::len).collect();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// The permutation of `prims` induced by `P ↦ σ(P)` for each map.
pub fn permutations(f: Field, prims: &[PrimItem], maps: &[Matrix]) -> Result<Vec<Vec<usize>>, SpecmapError> {
    let index: BTreeMap<&Subspace, usize> = prims.iter().enumerate().map(|(i, p)| (&p.annihilator, i)).collect();
    maps.iter()
        .enumerate()
        .map(|(mi, m)| {
            let perm = prims
                .iter()
                .enumerate()
                .map(|(pi, p)| {
                    index
                        .get(&p.annihilator.image(f, m))
                        .copied()
                        .ok_or(SpecmapError::NotAPermutation { map: mi, prim: pi })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut seen = vec![false; prims.len()];
            for (pi, &t) in perm.iter().enumerate() {
                if std::mem::replace(&mut seen[t], true) {
                    return Err(SpecmapError::NotAPermutation { map: mi, prim: pi });
                }
            }
            Ok(perm)
        })
        .collect()
}

pub fn orbits(f: Field, prims: &[PrimItem], maps: &[Matrix]) -> Result<OrbitPartition, SpecmapError> {
    let perms = permutations(f, prims, maps)?;
    let n = prims.len();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        let b = blocks.len();
        let mut block = vec![start];
        block_of[start] = b;
        let mut i = 0;
        while i < block.len() {
            let x = block[i];
            for perm in &perms {
                let y = perm[x];
                if block_of[y] == usize::MAX {
                    block_of[y] = b;
                    block.push(y);
                }
            }
            i += 1;
        }
        block.sort_unstable();
        blocks.push(block);
    }
    let representatives = blocks.iter().map(|b| b[0]).collect();
    Ok(OrbitPartition { blocks, representatives })
}

/// Every orbit lies inside one fiber.
pub fn refines(orbits: &OrbitPartition, fibers: &FiberPartition) -> bool {
    orbits.blocks.iter().all(|o| fibers.blocks.iter().any(|fb| o.iter().all(|x| fb.contains(x))))
}

/// The two partitions have exactly the same blocks.
pub fn same_partition(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let norm = |p: &[Vec<usize>]| {
        let mut v: Vec<Vec<usize>> = p.iter().map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        }).collect();
        v.sort();
        v
    };
    norm(a) == norm(b)
}

/// Winding matrices of the given characters on the selected sides.
pub fn winding_maps(b: &BialgebraData, characters: &[Character], sides: Sides) -> Vec<Matrix> {
    let mut out = Vec::new();
    for chi in characters {
        if matches!(sides, Sides::Right | Sides::Both) {
            out.push(b.winding(chi, Side::Right));
        }
        if matches!(sides, Sides::Left | Sides::Both) {
            out.push(b.winding(chi, Side::Left));
        }
    }
    out
}
