//! Randomized composition-factor search (Holt–Rees style) with Norton's
//! irreducibility test.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{spin_under, ModuleRep, RepnError};
use crate::algebra::StructureConstantAlgebra;
use crate::linalg::{poly, Matrix, Subspace};

/// Random elements tried per module before giving up.
pub const ATTEMPT_BUDGET: usize = 256;

/// One isomorphism class of composition factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleRecord {
    pub module: ModuleRep,
    pub annihilator: Subspace,
    pub multiplicity: usize,
}

impl SimpleRecord {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

enum Outcome {
    Split(Subspace),
    Irreducible,
}

/// Composition factors of `m`, grouped by isomorphism class and sorted by
/// (dimension, annihilator). Simple modules over a finite-dimensional algebra
/// are determined by their annihilators, so classes are keyed by them.
pub fn chop(m: &ModuleRep, seed: u64) -> Result<Vec<SimpleRecord>, RepnError> {
    chop_with_rng(m, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn chop_with_rng<R: Rng>(m: &ModuleRep, rng: &mut R) -> Result<Vec<SimpleRecord>, RepnError> {
    let mut classes: BTreeMap<(usize, Subspace), SimpleRecord> = BTreeMap::new();
    let mut stack = vec![m.clone()];
    while let Some(cur) = stack.pop() {
        if cur.dim() == 0 {
            continue;
        }
        let outcome = if cur.dim() == 1 { Outcome::Irreducible } else { split_or_certify(&cur, rng)? };
        match outcome {
            Outcome::Split(u) => {
                log::trace!("split {} = {} + {}", cur.dim(), u.dim(), u.codim());
                stack.push(cur.quotient(&u));
                stack.push(cur.submodule(&u));
            }
            Outcome::Irreducible => {
                let ann = cur.annihilator();
                classes
                    .entry((cur.dim(), ann.clone()))
                    .and_modify(|r| r.multiplicity += 1)
                    .or_insert(SimpleRecord { module: cur, annihilator: ann, multiplicity: 1 });
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// All simple modules of `alg`, found as composition factors of the regular
/// module; multiplicities are those in the regular module.
pub fn simples(alg: &StructureConstantAlgebra, seed: u64) -> Result<Vec<SimpleRecord>, RepnError> {
    chop(&ModuleRep::regular(alg), seed)
}

fn split_or_certify<R: Rng>(m: &ModuleRep, rng: &mut R) -> Result<Outcome, RepnError> {
    let f = m.field();
    let d = m.dim();
    let p = f.p();
    let gens = m.generator_matrices();
    let mut gens_t: Option<Vec<Matrix>> = None;
    let pick = |u: &Subspace, rng: &mut R| loop {
        let coords: Vec<u32> = (0..u.dim()).map(|_| rng.gen_range(0..p)).collect();
        if coords.iter().any(|&c| c != 0) {
            return u.combine(f, &coords);
        }
    };
    for attempt in 0..ATTEMPT_BUDGET {
        let mut theta = Matrix::zeros(d, d);
        for a in m.action() {
            theta.add_scaled(f, rng.gen_range(0..p), a);
        }
        let cp = theta.charpoly(f);
        for (fac, _) in poly::factor(f, &cp, rng) {
            let deg = fac.len() - 1;
            let f_theta = theta.eval_poly(f, &fac);
            let null = f_theta.kernel(f);
            let u = spin_under(f, &gens, &pick(&null, rng));
            if u.dim() < d {
                return Ok(Outcome::Split(u));
            }
            let null_t = f_theta.transpose().kernel(f);
            let gt = gens_t.get_or_insert_with(|| m.transposed_generators());
            let w = spin_under(f, gt, &pick(&null_t, rng));
            if w.dim() < d {
                // the annihilator of a proper dual submodule is a proper submodule
                return Ok(Outcome::Split(w.basis().kernel(f)));
            }
            if null.dim() == deg {
                if deg > 1 {
                    let endo_dim = m.endomorphism_dim();
                    if endo_dim != 1 {
                        return Err(RepnError::NotSplit { dim: d, endo_dim });
                    }
                }
                log::trace!("certified irreducible of dim {d} after {} attempts", attempt + 1);
                return Ok(Outcome::Irreducible);
            }
        }
    }
    Err(RepnError::BudgetExceeded { dim: d, attempts: ATTEMPT_BUDGET })
}
