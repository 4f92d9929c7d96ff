mod common;

use hopf_fiber::corpus::{group_algebra, quantum_sl2_kernel, shipped, shipped_instance, small_quantum_sl2, GroupTable};
use hopf_fiber::hopf::enumerate_characters;
use hopf_fiber::linalg::{EchelonBasis, Field, Matrix};
use hopf_fiber::repn::{iso_simple, simples, ModuleRep, RepnError};
use hopf_fiber::specmap::{verify_theorem, Mode};

use common::{brute_force_characters, fiber_matches_quotient_group};

fn group_hopf(p: u64, name: &str) -> hopf_fiber::hopf::BialgebraData {
    group_algebra(Field::new(p).unwrap(), &GroupTable::named(name).unwrap()).unwrap()
}

fn chop_characters(alg: &hopf_fiber::algebra::StructureConstantAlgebra) -> Vec<Vec<u32>> {
    enumerate_characters(alg, 0).unwrap().iter().map(|c| c.values().to_vec()).collect()
}

#[test]
fn characters_match_exhaustive_search_off_the_corpus() {
    for (p, g) in [(2, "s3"), (3, "s3"), (7, "s3"), (2, "c2c2"), (3, "c2c2"), (3, "q8"), (5, "c4"), (11, "c5")] {
        let b = group_hopf(p, g);
        assert_eq!(chop_characters(b.alg()), brute_force_characters(b.alg()), "{g} over F_{p}");
    }
    for inst in [quantum_sl2_kernel(3, 13).unwrap(), small_quantum_sl2(3, 13).unwrap()] {
        let alg = inst.hopf.alg();
        assert_eq!(chop_characters(alg), brute_force_characters(alg), "{}", inst.name);
    }
}

#[test]
fn character_counts_of_abelian_group_algebras() {
    // a split abelian group algebra has one character per element
    for (p, g, n) in [(7, "c3", 3), (5, "c4", 4), (3, "c2c2", 4), (13, "c6", 6)] {
        assert_eq!(brute_force_characters(group_hopf(p, g).alg()).len(), n, "{g} over F_{p}");
    }
    // in characteristic p the p-part of the group is invisible
    assert_eq!(brute_force_characters(group_hopf(3, "c3").alg()).len(), 1);
    assert_eq!(brute_force_characters(group_hopf(2, "c4").alg()).len(), 1);
}

/// Every nonzero vector generates the whole module.
fn irreducible_by_exhaustion(m: &ModuleRep) -> bool {
    let f = m.field();
    let d = m.dim();
    let total = (f.p() as u64).pow(d as u32);
    (1..total).all(|mut code| {
        let mut v = vec![0u32; d];
        for x in v.iter_mut() {
            *x = (code % f.p() as u64) as u32;
            code /= f.p() as u64;
        }
        let mut span = EchelonBasis::new(f, d);
        span.insert(&v);
        let mut frontier = vec![v];
        while let Some(w) = frontier.pop() {
            for a in m.action() {
                let img = a.mul_vec(f, &w);
                if span.insert(&img) {
                    frontier.push(img);
                }
            }
        }
        span.dim() == d
    })
}

#[test]
fn simples_are_irreducible() {
    let mut certified = 0;
    let mut algebras: Vec<_> = shipped().unwrap().into_iter().map(|i| i.hopf).collect();
    algebras.push(group_hopf(3, "q8"));
    algebras.push(group_hopf(2, "s3"));
    for b in &algebras {
        for r in simples(b.alg(), 0).unwrap() {
            assert!(r.dim() <= 4, "simple of dimension {}", r.dim());
            assert!(irreducible_by_exhaustion(&r.module));
            certified += 1;
        }
    }
    assert_eq!(certified, 40);
}

#[test]
fn wedderburn_dimension_count() {
    let sum = |b: &hopf_fiber::hopf::BialgebraData| -> usize {
        simples(b.alg(), 0).unwrap().iter().map(|r| r.dim() * r.dim() / r.module.endomorphism_dim()).sum()
    };
    for name in ["c3", "c4c2", "q8", "s3c2"] {
        let b = shipped_instance(name).unwrap().hopf;
        assert_eq!(sum(&b), b.dim(), "{name}");
    }
    for (p, g) in [(3, "q8"), (5, "s3"), (11, "s3c2")] {
        let b = group_hopf(p, g);
        assert_eq!(sum(&b), b.dim(), "{g} over F_{p}");
    }
    for (p, g) in [(3, "s3"), (2, "q8")] {
        let b = group_hopf(p, g);
        assert!(sum(&b) < b.dim(), "{g} over F_{p} is not semisimple");
    }
    // F_3[C4] has a two-dimensional simple with endomorphism field F_9
    assert!(matches!(simples(group_hopf(3, "c4").alg(), 0), Err(RepnError::NotSplit { dim: 2, endo_dim: 2 })));
}

#[test]
fn group_pair_fiber_algebras_are_quotient_group_algebras() {
    let q8 = GroupTable::quaternion();
    let s3c2 = GroupTable::named("s3c2").unwrap();
    for (name, g, z) in [
        ("c3", GroupTable::cyclic(3), vec![0]),
        ("c4c2", GroupTable::cyclic(4), vec![0, 2]),
        ("q8", q8.clone(), q8.center()),
        ("s3c2", s3c2.clone(), s3c2.center()),
    ] {
        let inst = shipped_instance(name).unwrap();
        fiber_matches_quotient_group(&inst, &g, &z).unwrap();
    }
}

/// The simple `u_ε(sl₂)`-module of dimension `ℓ = 3` with highest weight
/// `ε^{ℓ-1}`, written down directly from the relations.
#[test]
fn usl2_three_dimensional_simple() {
    let inst = shipped_instance("usl2").unwrap();
    let alg = inst.hopf.alg();
    let f = alg.field();
    // ε = 2, so K·F = ε⁻²F·K with ε⁻² = 2 and E·F − F·E = (K − K⁻¹)/(ε − ε⁻¹) = 3K + 4K²
    let k = Matrix::from_rows(&[vec![4, 0, 0], vec![0, 1, 0], vec![0, 0, 2]], 3);
    let fm = Matrix::from_rows(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]], 3);
    let e = Matrix::from_rows(&[vec![0, 6, 0], vec![0, 0, 6], vec![0, 0, 0]], 3);
    let k2 = k.mul(f, &k);
    assert_eq!(k.mul(f, &fm), fm.mul(f, &k).scale(f, 2));
    assert_eq!(e.mul(f, &k), k.mul(f, &e).scale(f, 2));
    assert_eq!(e.mul(f, &fm), fm.mul(f, &e).add(f, &k.scale(f, 3)).add(f, &k2.scale(f, 4)));
    assert_eq!(k2.mul(f, &k), Matrix::identity(3));
    let gens = [("F", &fm), ("K", &k), ("E", &e)];
    let action: Vec<Matrix> = alg
        .labels()
        .iter()
        .map(|label| {
            if label == "1" {
                return Matrix::identity(3);
            }
            label.split('*').fold(Matrix::identity(3), |acc, g| {
                let m = gens.iter().find(|(name, _)| *name == g).unwrap().1;
                acc.mul(f, m)
            })
        })
        .collect();
    let module = ModuleRep::new(alg, action).unwrap();
    assert!(irreducible_by_exhaustion(&module));
    let found: Vec<_> = simples(alg, 0).unwrap().into_iter().filter(|r| r.dim() == 3).collect();
    assert_eq!(found.len(), 1);
    assert!(iso_simple(&module, &found[0].module).unwrap());
}

#[test]
fn verdicts_do_not_depend_on_the_seed() {
    for inst in shipped().unwrap() {
        let base = verify_theorem(&inst, Mode::Global, 0).unwrap();
        let again = verify_theorem(&inst, Mode::Global, 0).unwrap();
        assert_eq!(serde_json::to_string(&base).unwrap(), serde_json::to_string(&again).unwrap());
        for seed in [1, 17, 0xdead_beef] {
            let v = verify_theorem(&inst, Mode::Global, seed).unwrap();
            let conds = |v: &hopf_fiber::specmap::Verdict| (v.cond_i, v.cond_ii, v.cond_iii, v.cond_iv, v.agree);
            assert_eq!(conds(&v), conds(&base), "{} seed {seed}", inst.name);
            assert_eq!(v.summary, base.summary, "{} seed {seed}", inst.name);
        }
    }
}
