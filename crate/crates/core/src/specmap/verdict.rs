use serde::{Deserialize, Serialize};

use super::{
    fibers, orbits, prim_enumerate, refines, same_partition, winding_maps, PrimItem, Sides, SpecmapError,
};
use crate::corpus::CorpusInstance;
use crate::hopf::{
    character_group_x, enumerate_characters, fiber_quotient, is_hopf_subalgebra, BialgebraData, Character,
    CoidealSubalgebra, FiberQuotient, HopfError, Side,
};
use crate::repn;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Work inside the fiber algebra `H/HA⁺` with its own characters and windings.
    Local,
    /// Work on all of `prim H`.
    Global,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub dim: usize,
    pub characters: usize,
    pub x_order: usize,
    pub prim_dims: Vec<usize>,
    pub fiber_sizes: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub fiber_algebra_dim: usize,
    pub fiber_algebra_simple_dims: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// Dimensions of simple `H/HA⁺`-modules of dimension above one.
    pub nonlinear_simple_dims: Vec<usize>,
    /// A fiber that is not a single orbit, with the orbits it splits into
    /// (indices into the primitive-ideal list the partitions were taken on).
    pub split_fiber: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub mode: Mode,
    /// Bialgebra without antipode: two-sided orbits, only `cond_iii` reported.
    pub experiment: bool,
    pub cond_i: Option<bool>,
    pub cond_ii: Option<bool>,
    pub cond_iii: Option<bool>,
    pub cond_iv: Option<bool>,
    pub agree: bool,
    pub refines: bool,
    pub fiber_blocks: Vec<Vec<usize>>,
    pub orbit_blocks: Vec<Vec<usize>>,
    pub summary: Summary,
    pub witnesses: Witnesses,
}

impl Verdict {
    fn conditions(&self) -> Vec<bool> {
        [self.cond_i, self.cond_ii, self.cond_iii, self.cond_iv].into_iter().flatten().collect()
    }
}

fn simple_dims(prims: &[PrimItem]) -> Vec<usize> {
    prims.iter().map(|p| p.simple_dim).collect()
}

fn characters_of(prims: &[PrimItem]) -> Vec<Character> {
    let mut c: Vec<Character> = prims.iter().filter_map(|p| p.character.clone()).collect();
    c.sort();
    c
}

/// The fiber over `A⁺` splitting into several orbits, or else the first fiber that does.
fn split_fiber_witness(
    fiber_blocks: &[Vec<usize>],
    preferred: Option<usize>,
    orbit_blocks: &[Vec<usize>],
) -> Option<Vec<Vec<usize>>> {
    let split = |fb: &Vec<usize>| -> Option<Vec<Vec<usize>>> {
        let parts: Vec<Vec<usize>> = orbit_blocks.iter().filter(|o| o.iter().any(|x| fb.contains(x))).cloned().collect();
        (parts.len() > 1).then_some(parts)
    };
    preferred
        .and_then(|i| split(&fiber_blocks[i]))
        .or_else(|| fiber_blocks.iter().find_map(split))
}

/// Checks the fiber/orbit conditions on `instance`. Without an antipode the
/// check runs as an experiment with the instance's configured winding sides.
pub fn verify_theorem(instance: &CorpusInstance, mode: Mode, seed: u64) -> Result<Verdict, SpecmapError> {
    let b = &instance.hopf;
    let a = &instance.a;
    if !b.is_hopf() {
        return experiment(instance, mode, seed);
    }
    let fq = fiber_quotient(b, a, &a.counit_values(b))?;
    let q = fq
        .hopf
        .clone()
        .ok_or_else(|| SpecmapError::Inconsistent("HA⁺ is not a Hopf ideal".into()))?;
    match mode {
        Mode::Global => global(b, a, &fq, &q, seed),
        Mode::Local => local(b, a, &fq, &q, seed),
    }
}

fn global(
    b: &BialgebraData,
    a: &CoidealSubalgebra,
    fq: &FiberQuotient,
    q: &BialgebraData,
    seed: u64,
) -> Result<Verdict, SpecmapError> {
    let f = b.field();
    let prims = prim_enumerate(b.alg(), seed)?;
    let chars = characters_of(&prims);
    let x = character_group_x(b, a, &chars)?;
    let maps = winding_maps(b, &x.elements, Sides::Right);
    let fib = fibers(f, &prims, a.subspace());
    let orb = orbits(f, &prims, &maps)?;
    let refined = refines(&orb, &fib);
    if !refined {
        return Err(SpecmapError::Inconsistent("an X-orbit meets two fibers".into()));
    }
    for (oi, block) in orb.blocks.iter().enumerate() {
        let label = super::contract(f, &prims[block[0]], a.subspace());
        if block.iter().any(|&i| super::contract(f, &prims[i], a.subspace()) != label) {
            return Err(SpecmapError::Inconsistent(format!("contraction not constant on orbit {oi}")));
        }
    }

    let q_prims = prim_enumerate(q.alg(), seed)?;
    let induced = maps.iter().map(|m| fq.induced_map(b, m)).collect::<Result<Vec<_>, HopfError>>()?;
    let q_orb = orbits(f, &q_prims, &induced)?;
    let aug = fib
        .block_of_label(&a.augmentation(b))
        .ok_or_else(|| SpecmapError::Inconsistent("no primitive ideal contracts to A⁺".into()))?;
    if fib.blocks[aug].len() != q_prims.len() {
        return Err(SpecmapError::Inconsistent(format!(
            "fiber over A⁺ has {} members but H/HA⁺ has {} primitive ideals",
            fib.blocks[aug].len(),
            q_prims.len()
        )));
    }

    let q_dims = simple_dims(&q_prims);
    let cond_i = q_dims.iter().all(|&d| d == 1);
    let cond_ii = q_orb.blocks.len() == 1;
    let cond_iii = same_partition(&fib.blocks, &orb.blocks);
    let witnesses = Witnesses {
        nonlinear_simple_dims: q_dims.iter().copied().filter(|&d| d > 1).collect(),
        split_fiber: split_fiber_witness(&fib.blocks, Some(aug), &orb.blocks),
    };
    finish(Verdict {
        mode: Mode::Global,
        experiment: false,
        cond_i: Some(cond_i),
        cond_ii: Some(cond_ii),
        cond_iii: Some(cond_iii),
        cond_iv: Some(cond_iii),
        agree: false,
        refines: refined,
        summary: Summary {
            dim: b.dim(),
            characters: chars.len(),
            x_order: x.order(),
            prim_dims: simple_dims(&prims),
            fiber_sizes: fib.sizes(),
            orbit_sizes: orb.sizes(),
            fiber_algebra_dim: q.dim(),
            fiber_algebra_simple_dims: q_dims,
        },
        fiber_blocks: fib.blocks,
        orbit_blocks: orb.blocks,
        witnesses,
    })
}

fn local(
    b: &BialgebraData,
    a: &CoidealSubalgebra,
    fq: &FiberQuotient,
    q: &BialgebraData,
    seed: u64,
) -> Result<Verdict, SpecmapError> {
    let f = b.field();
    let chars = enumerate_characters(b.alg(), seed)?;
    let x = character_group_x(b, a, &chars)?;
    let q_chars = enumerate_characters(q.alg(), seed)?;

    // X descends to the characters of the fiber algebra, bijectively, and
    // each winding map descends to the fiber algebra's own winding map
    let mut descended: Vec<Character> = Vec::with_capacity(x.order());
    for chi in &x.elements {
        let values = fq.quotient.lift_columns.iter().map(|&c| chi.values()[c]).collect();
        let psi = Character::new(q.alg(), values)?;
        if fq.induced_map(b, &b.winding(chi, Side::Right))? != q.winding(&psi, Side::Right) {
            return Err(HopfError::WindingDoesNotDescend.into());
        }
        descended.push(psi);
    }
    descended.sort();
    descended.dedup();
    if descended != q_chars {
        return Err(SpecmapError::Inconsistent(format!(
            "X has {} elements but the fiber algebra has {} characters",
            x.order(),
            q_chars.len()
        )));
    }

    let q_prims = prim_enumerate(q.alg(), seed)?;
    let q_orb = orbits(f, &q_prims, &winding_maps(q, &q_chars, Sides::Right))?;
    let q_dims = simple_dims(&q_prims);
    let all: Vec<Vec<usize>> = vec![(0..q_prims.len()).collect()];
    let witnesses = Witnesses {
        nonlinear_simple_dims: q_dims.iter().copied().filter(|&d| d > 1).collect(),
        split_fiber: split_fiber_witness(&all, Some(0), &q_orb.blocks),
    };
    finish(Verdict {
        mode: Mode::Local,
        experiment: false,
        cond_i: Some(q_dims.iter().all(|&d| d == 1)),
        cond_ii: Some(q_orb.blocks.len() == 1),
        cond_iii: None,
        cond_iv: None,
        agree: false,
        refines: true,
        summary: Summary {
            dim: b.dim(),
            characters: chars.len(),
            x_order: x.order(),
            prim_dims: q_dims.clone(),
            fiber_sizes: vec![q_prims.len()],
            orbit_sizes: q_orb.sizes(),
            fiber_algebra_dim: q.dim(),
            fiber_algebra_simple_dims: q_dims,
        },
        fiber_blocks: all,
        orbit_blocks: q_orb.blocks,
        witnesses,
    })
}

fn experiment(instance: &CorpusInstance, mode: Mode, seed: u64) -> Result<Verdict, SpecmapError> {
    let b = &instance.hopf;
    let a = &instance.a;
    let f = b.field();
    let prims = prim_enumerate(b.alg(), seed)?;
    let chars = characters_of(&prims);
    let eps = Character::counit(b);
    let a_basis: Vec<Vec<u32>> = a.subspace().vectors().collect();
    let x: Vec<Character> = chars
        .iter()
        .filter(|chi| a_basis.iter().all(|v| chi.eval(f, v) == eps.eval(f, v)))
        .cloned()
        .collect();
    for chi in &x {
        for psi in &x {
            if x.binary_search(&b.convolve(chi, psi)?).is_err() {
                return Err(SpecmapError::Inconsistent("X is not closed under convolution".into()));
            }
        }
    }
    let maps = winding_maps(b, &x, instance.sides);
    let fib = fibers(f, &prims, a.subspace());
    let orb = orbits(f, &prims, &maps)?;
    let aug = fib.block_of_label(&a.augmentation(b));
    let fiber_dims: Vec<usize> = aug.map(|i| fib.blocks[i].iter().map(|&p| prims[p].simple_dim).collect()).unwrap_or_default();
    let fiber_algebra_dim = fiber_quotient(b, a, &a.counit_values(b))?.dim();
    let cond_iii = same_partition(&fib.blocks, &orb.blocks);
    let witnesses = Witnesses {
        nonlinear_simple_dims: fiber_dims.iter().copied().filter(|&d| d > 1).collect(),
        split_fiber: split_fiber_witness(&fib.blocks, aug, &orb.blocks),
    };
    log::info!("no antipode: running the two-sided orbit experiment");
    finish(Verdict {
        mode,
        experiment: true,
        cond_i: None,
        cond_ii: None,
        cond_iii: Some(cond_iii),
        cond_iv: None,
        agree: false,
        refines: refines(&orb, &fib),
        summary: Summary {
            dim: b.dim(),
            characters: chars.len(),
            x_order: x.len(),
            prim_dims: simple_dims(&prims),
            fiber_sizes: fib.sizes(),
            orbit_sizes: orb.sizes(),
            fiber_algebra_dim,
            fiber_algebra_simple_dims: fiber_dims,
        },
        fiber_blocks: fib.blocks,
        orbit_blocks: orb.blocks,
        witnesses,
    })
}

fn finish(mut v: Verdict) -> Result<Verdict, SpecmapError> {
    let c = v.conditions();
    v.agree = c.windows(2).all(|w| w[0] == w[1]);
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkEntry {
    /// Values of `ξ` on the canonical basis of `A`.
    pub xi: Vec<u32>,
    /// Some character of `H` restricts to `ξ`.
    pub extends: bool,
    pub quotient_dim: usize,
    pub simple_dims: Vec<usize>,
    pub all_linear: bool,
    /// For extending `ξ`: the right winding of an extension maps `HK` onto `HA⁺`.
    pub winding_maps_ideal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkReport {
    pub entries: Vec<RemarkEntry>,
    /// All extending `ξ` give the same verdict as the counit, and every
    /// extension's winding carries `HK` onto `HA⁺`.
    pub consistent: bool,
}

/// Per-character comparison of the quotients `H/HK`, `K = ker ξ`, for a
/// central Hopf subalgebra `A`.
pub fn remark_check(instance: &CorpusInstance, seed: u64) -> Result<RemarkReport, SpecmapError> {
    let b = &instance.hopf;
    let a = &instance.a;
    let f = b.field();
    if !is_hopf_subalgebra(b, a.subspace())? {
        return Err(HopfError::NotAHopfSubalgebra.into());
    }
    let h_chars = enumerate_characters(b.alg(), seed)?;
    let a_basis: Vec<Vec<u32>> = a.subspace().vectors().collect();
    let eps_values = a.counit_values(b);
    let counit_ideal = fiber_quotient(b, a, &eps_values)?.ideal().clone();
    let mut entries = Vec::new();
    for xi in a.characters(b, seed)? {
        let extension = h_chars.iter().find(|chi| a_basis.iter().map(|v| chi.eval(f, v)).eq(xi.iter().copied()));
        let (quotient_dim, simple_dims, ideal) = match fiber_quotient(b, a, &xi) {
            Ok(fq) => {
                let dims = repn::simples(&fq.quotient.algebra, seed)?.iter().map(|r| r.dim()).collect();
                (fq.dim(), dims, Some(fq.ideal().clone()))
            }
            Err(HopfError::ImproperIdeal) => (0, Vec::new(), None),
            Err(e) => return Err(e.into()),
        };
        let winding_maps_ideal = match (extension, &ideal) {
            (Some(chi), Some(ideal)) => Some(ideal.image(f, &b.winding(chi, Side::Right)) == counit_ideal),
            (Some(_), None) => Some(false),
            (None, _) => None,
        };
        entries.push(RemarkEntry {
            xi,
            extends: extension.is_some(),
            quotient_dim,
            all_linear: simple_dims.iter().all(|&d| d == 1),
            simple_dims,
            winding_maps_ideal,
        });
    }
    let counit_verdict = entries
        .iter()
        .find(|e| e.xi == eps_values)
        .map(|e| e.all_linear)
        .ok_or_else(|| SpecmapError::Inconsistent("counit missing from the characters of A".into()))?;
    let consistent = entries
        .iter()
        .filter(|e| e.extends)
        .all(|e| e.all_linear == counit_verdict && e.winding_maps_ideal == Some(true));
    Ok(RemarkReport { entries, consistent })
}
