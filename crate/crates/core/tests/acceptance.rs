//! Acceptance suite: ten criteria, one PASS/FAIL line each. Runs as a plain
//! binary so every line is printed even when earlier criteria fail.

mod common;

use std::fmt::Display;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopf_fiber::corpus::{mutation_fixtures, shipped, shipped_instance, CorpusInstance, GroupTable};
use hopf_fiber::hopf::{ad_eigenspaces, character_group_x, enumerate_characters, fiber_quotient, Character, Side};
use hopf_fiber::linalg::Matrix;
use hopf_fiber::repn::{chop, simples, ModuleRep};
use hopf_fiber::specmap::{fibers, prim_enumerate, verify_theorem, Mode, Verdict};

use common::{axiom_fails_at, brute_force_characters, fiber_matches_quotient_group, Dense, DenseCoalg};

const SEED: u64 = 0;

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

fn instance(name: &str) -> Result<CorpusInstance, String> {
    shipped_instance(name).map_err(err)
}

fn hopf_instances() -> Result<Vec<CorpusInstance>, String> {
    Ok(shipped().map_err(err)?.into_iter().filter(|i| i.hopf.is_hopf()).collect())
}

fn expectation(inst: &CorpusInstance) -> Result<&hopf_fiber::corpus::Expectation, String> {
    inst.expected.as_ref().ok_or_else(|| format!("{}: no expectation record", inst.name))
}

fn conditions(v: &Verdict) -> [Option<bool>; 4] {
    [v.cond_i, v.cond_ii, v.cond_iii, v.cond_iv]
}

fn axiom_suite() -> Outcome {
    let instances = shipped().map_err(err)?;
    for inst in &instances {
        let report = inst.hopf.verify_structure();
        check!(report.all_passed(), "{}: {:?}", inst.name, report.first_failure());
        let expected_checks = if inst.hopf.is_hopf() { 8 } else { 6 };
        check!(report.results.len() == expected_checks, "{}: {} axioms checked", inst.name, report.results.len());
    }
    let mutations = mutation_fixtures();
    for m in &mutations {
        let original = instance(m.instance)?.hopf;
        let mutated = m.apply(&original).map_err(err)?;
        let report = mutated.verify_structure();
        let first = report.first_failure().ok_or_else(|| format!("{}: mutation not detected", m.name))?;
        check!(first.axiom == m.expected, "{}: first failure {} instead of {}", m.name, first.axiom, m.expected);
        let w = first.witness.as_deref().ok_or_else(|| format!("{}: no witness", m.name))?;
        check!(axiom_fails_at(&mutated, first.axiom, w), "{}: witness {w:?} does not exhibit a failure", m.name);
        check!(!axiom_fails_at(&original, first.axiom, w), "{}: witness {w:?} fails before mutation", m.name);
    }
    Ok(format!("{} instances pass, {} mutations caught with genuine witnesses", instances.len(), mutations.len()))
}

fn winding_group_law() -> Outcome {
    let mut pairs = 0;
    for inst in hopf_instances()? {
        let b = &inst.hopf;
        let f = b.field();
        let chars = enumerate_characters(b.alg(), SEED).map_err(err)?;
        for side in [Side::Right, Side::Left] {
            let maps: Vec<Matrix> = chars.iter().map(|c| b.winding(c, side)).collect();
            for (i, x) in chars.iter().enumerate() {
                for (j, y) in chars.iter().enumerate() {
                    let conv = match side {
                        Side::Right => b.convolve(y, x),
                        Side::Left => b.convolve(x, y),
                    }
                    .map_err(err)?;
                    check!(
                        maps[i].mul(f, &maps[j]) == b.winding(&conv, side),
                        "{}: composition law fails for characters {i}, {j} ({side:?})",
                        inst.name
                    );
                    pairs += 1;
                }
            }
        }
        let eps = Character::counit(b);
        let a_basis: Vec<Vec<u32>> = inst.a.subspace().vectors().collect();
        let mut in_x = 0;
        for chi in &chars {
            let restricts = a_basis.iter().all(|v| chi.eval(f, v) == eps.eval(f, v));
            let sigma = b.winding(chi, Side::Right);
            let fixes = a_basis.iter().all(|v| sigma.mul_vec(f, v) == *v);
            check!(restricts == fixes, "{}: character {:?} restricts {restricts}, fixes {fixes}", inst.name, chi.values());
            in_x += restricts as usize;
        }
        let x = character_group_x(b, &inst.a, &chars).map_err(err)?;
        let exp = expectation(&inst)?;
        check!(x.order() == in_x && in_x == exp.x_order, "{}: |X| = {}, {in_x}, expected {}", inst.name, x.order(), exp.x_order);
    }
    Ok(format!("{pairs} ordered pairs composed on both sides"))
}

fn adjoint_identity() -> Outcome {
    let mut vectors = 0;
    for inst in hopf_instances()? {
        let b = &inst.hopf;
        let f = b.field();
        let d = Dense::of(b.alg());
        let c = DenseCoalg::of(b);
        let s = c.antipode.as_ref().expect("Hopf instance");
        let n = d.n;
        let chars = enumerate_characters(b.alg(), SEED).map_err(err)?;
        let spaces = ad_eigenspaces(b, &chars).map_err(err)?;
        check!(
            spaces.iter().any(|sp| sp.character == Character::counit(b)),
            "{}: no ad-invariants found",
            inst.name
        );
        for sp in &spaces {
            let chi = sp.character.values();
            for v in sp.space.vectors() {
                for h in 0..n {
                    let mut ad = vec![0u32; n];
                    let mut sigma = vec![0u32; n];
                    for j in 0..n {
                        for k in 0..n {
                            let x = c.comul[h][j][k];
                            if x == 0 {
                                continue;
                            }
                            let term = d.mul(&d.mul(&d.e(j), &v), &s[k]);
                            for (a, &y) in ad.iter_mut().zip(&term) {
                                *a = f.mul_add(*a, x, y);
                            }
                            sigma[k] = f.mul_add(sigma[k], x, chi[j]);
                        }
                    }
                    let scaled: Vec<u32> = v.iter().map(|&y| f.mul(chi[h], y)).collect();
                    check!(ad == scaled, "{}: not an ad-eigenvector at basis element {h}", inst.name);
                    check!(d.mul(&d.e(h), &v) == d.mul(&v, &sigma), "{}: h·n ≠ n·σ(h) at basis element {h}", inst.name);
                }
                vectors += 1;
            }
        }
    }
    Ok(format!("{vectors} eigenvectors satisfy the identity on every basis element"))
}

fn q8_positive() -> Outcome {
    let inst = instance("q8")?;
    let exp = expectation(&inst)?;
    let v = verify_theorem(&inst, Mode::Global, SEED).map_err(err)?;
    check!(conditions(&v) == [Some(true); 4], "conditions {:?}", conditions(&v));
    check!(v.agree && v.refines, "agree {}, refines {}", v.agree, v.refines);
    check!(v.summary.fiber_sizes == exp.fiber_sizes, "fiber sizes {:?}", v.summary.fiber_sizes);
    check!(v.summary.orbit_sizes == exp.orbit_sizes, "orbit sizes {:?}", v.summary.orbit_sizes);
    check!(v.summary.x_order == exp.x_order, "|X| = {}", v.summary.x_order);
    check!(v.summary.dim == exp.dim && v.summary.characters == exp.characters, "summary {:?}", v.summary);
    Ok(format!(
        "all conditions true, fibers {:?}, orbits {:?}, |X| = {}",
        v.summary.fiber_sizes, v.summary.orbit_sizes, v.summary.x_order
    ))
}

fn s3c2_negative() -> Outcome {
    let inst = instance("s3c2")?;
    let exp = expectation(&inst)?;
    let b = &inst.hopf;
    let f = b.field();
    let v = verify_theorem(&inst, Mode::Global, SEED).map_err(err)?;
    check!(conditions(&v) == [Some(false); 4], "conditions {:?}", conditions(&v));
    check!(v.agree, "conditions disagree");
    check!(v.summary.fiber_sizes == exp.fiber_sizes, "fiber sizes {:?}", v.summary.fiber_sizes);
    check!(v.witnesses.nonlinear_simple_dims.contains(&2), "nonlinear simples {:?}", v.witnesses.nonlinear_simple_dims);
    let q = fiber_quotient(b, &inst.a, &inst.a.counit_values(b)).map_err(err)?;
    let dims: Vec<usize> = simples(&q.quotient.algebra, SEED).map_err(err)?.iter().map(|r| r.dim()).collect();
    check!(dims.contains(&2), "fiber algebra simples {dims:?}");
    let split = v.witnesses.split_fiber.clone().ok_or("no split fiber")?;
    let mut sizes: Vec<usize> = split.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    check!(sizes == [1, 2], "split into {split:?}");
    let prims = prim_enumerate(b.alg(), SEED).map_err(err)?;
    let fib = fibers(f, &prims, inst.a.subspace());
    let over_counit = fib.block_of_label(&inst.a.augmentation(b)).ok_or("no fiber over the augmentation ideal")?;
    let mut union: Vec<usize> = split.concat();
    union.sort_unstable();
    check!(union == fib.blocks[over_counit], "split fiber {union:?} is not the fiber over A⁺");
    Ok(format!("all conditions false, 2-dim simple in H/HA⁺ {dims:?}, fiber over A⁺ splits as {split:?}"))
}

fn qsl2_positive() -> Outcome {
    let inst = instance("qsl2")?;
    let exp = expectation(&inst)?;
    let v = verify_theorem(&inst, Mode::Local, SEED).map_err(err)?;
    let s = &v.summary;
    check!(s.dim == 27 && s.dim == exp.dim, "dim {}", s.dim);
    check!(s.fiber_algebra_simple_dims == [1, 1, 1], "simples {:?}", s.fiber_algebra_simple_dims);
    check!(s.fiber_algebra_simple_dims == exp.fiber_algebra_simple_dims, "differs from record");
    check!(v.orbit_blocks.len() == 1 && s.orbit_sizes == exp.orbit_sizes, "orbits {:?}", v.orbit_blocks);
    check!(s.x_order == 3 && s.x_order == exp.x_order, "|X| = {}", s.x_order);
    check!(v.cond_i == Some(true) && v.cond_ii == Some(true), "cond_i {:?}, cond_ii {:?}", v.cond_i, v.cond_ii);
    check!(v.agree, "conditions disagree");
    Ok(format!("dim 27, simples {:?}, one orbit, |X| = 3", s.fiber_algebra_simple_dims))
}

fn usl2_negative() -> Outcome {
    let inst = instance("usl2")?;
    let exp = expectation(&inst)?;
    let v = verify_theorem(&inst, Mode::Local, SEED).map_err(err)?;
    let s = &v.summary;
    check!(s.fiber_algebra_simple_dims.contains(&3), "simples {:?}", s.fiber_algebra_simple_dims);
    check!(s.fiber_algebra_simple_dims == exp.fiber_algebra_simple_dims, "differs from record");
    check!(s.x_order == 1 && s.x_order == exp.x_order, "|X| = {}", s.x_order);
    check!(v.fiber_blocks.len() == 1 && v.orbit_blocks.len() > 1, "fibers {:?}, orbits {:?}", v.fiber_blocks, v.orbit_blocks);
    check!(v.cond_i == Some(false) && v.cond_ii == Some(false), "cond_i {:?}, cond_ii {:?}", v.cond_i, v.cond_ii);
    check!(v.agree, "conditions disagree");
    Ok(format!("simples {:?}, |X| = 1, fiber splits into {} orbits", s.fiber_algebra_simple_dims, v.orbit_blocks.len()))
}

fn refinement() -> Outcome {
    let mut checked = Vec::new();
    for inst in hopf_instances()? {
        let v = verify_theorem(&inst, Mode::Global, SEED).map_err(err)?;
        let mut all_f: Vec<usize> = v.fiber_blocks.concat();
        let mut all_o: Vec<usize> = v.orbit_blocks.concat();
        all_f.sort_unstable();
        all_o.sort_unstable();
        check!(all_f == all_o && all_f.windows(2).all(|w| w[0] < w[1]), "{}: blocks do not partition one set", inst.name);
        for fb in &v.fiber_blocks {
            check!(!fb.is_empty(), "{}: empty fiber", inst.name);
            let mut union: Vec<usize> =
                v.orbit_blocks.iter().filter(|o| o.iter().any(|x| fb.contains(x))).flatten().copied().collect();
            union.sort_unstable();
            let mut sorted = fb.clone();
            sorted.sort_unstable();
            check!(union == sorted, "{}: fiber {fb:?} is not a union of orbits", inst.name);
        }
        checked.push(inst.name.clone());
    }
    Ok(format!("fibers are unions of orbits on {}", checked.join(", ")))
}

fn oracles() -> Outcome {
    let instances = shipped().map_err(err)?;
    let mut brute = 0;
    for inst in instances.iter().filter(|i| i.hopf.dim() <= 30) {
        let alg = inst.hopf.alg();
        let chop_chars: Vec<Vec<u32>> =
            enumerate_characters(alg, SEED).map_err(err)?.iter().map(|c| c.values().to_vec()).collect();
        let brute_chars = brute_force_characters(alg);
        check!(chop_chars == brute_chars, "{}: {} characters by chop, {} by search", inst.name, chop_chars.len(), brute_chars.len());
        check!(chop_chars.len() == expectation(inst)?.characters, "{}: character count", inst.name);
        brute += 1;
    }

    let q8 = instances.iter().find(|i| i.name == "q8").ok_or("q8 missing")?;
    let g = GroupTable::quaternion();
    let identity = fiber_matches_quotient_group(q8, &g, &g.center())?;

    for inst in &instances {
        let alg = inst.hopf.alg();
        let regular = ModuleRep::regular(alg);
        let mut classes = Vec::new();
        for seed in 0..3 {
            let factors = chop(&regular, seed).map_err(err)?;
            let total: usize = factors.iter().map(|r| r.dim() * r.multiplicity).sum();
            check!(total == alg.dim(), "{} seed {seed}: factors add up to {total}", inst.name);
            classes.push(factors.into_iter().map(|r| (r.dim(), r.annihilator, r.multiplicity)).collect::<Vec<_>>());
        }
        check!(classes.windows(2).all(|w| w[0] == w[1]), "{}: composition factors depend on the seed", inst.name);
    }
    Ok(format!(
        "characters agree on {brute} instances, q8 fiber algebra = F_7[Q8/Z]{}, chop consistent over 3 seeds on {} instances",
        if identity { " (same basis order)" } else { " (after relabeling)" },
        instances.len()
    ))
}

fn qm2_experiment() -> Outcome {
    let inst = instance("qm2")?;
    let exp = expectation(&inst)?;
    check!(!inst.hopf.is_hopf(), "qm2 unexpectedly has an antipode");
    check!(inst.hopf.verify_structure().all_passed(), "bialgebra axioms fail");
    let v = verify_theorem(&inst, Mode::Global, SEED).map_err(err)?;
    let s = &v.summary;
    check!(v.experiment && exp.experiment, "not reported as an experiment");
    check!(s.dim == 81 && s.dim == exp.dim, "dim {}", s.dim);
    check!(s.x_order == 9 && s.x_order == exp.x_order, "|X| = {}", s.x_order);
    check!(v.orbit_blocks.len() == 1 && s.orbit_sizes == exp.orbit_sizes, "orbits {:?}", s.orbit_sizes);
    check!(s.fiber_sizes == exp.fiber_sizes, "fibers {:?}", s.fiber_sizes);
    check!(v.cond_iii == Some(true), "cond_iii {:?}", v.cond_iii);
    check!(v.cond_i.is_none() && v.cond_ii.is_none() && v.cond_iv.is_none(), "theorem conditions reported");
    Ok(format!("dim 81, |X| = 9, {} primitive ideals in one two-sided orbit (experiment)", s.prim_dims.len()))
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .map_or_else(|| "panicked".into(), |m| format!("panicked: {m}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("axiom suite", 5, axiom_suite),
        ("winding group law", 5, winding_group_law),
        ("adjoint identity", 10, adjoint_identity),
        ("q8 positive case", 10, q8_positive),
        ("s3c2 negative case", 10, s3c2_negative),
        ("qsl2 positive case", 30, qsl2_positive),
        ("usl2 negative case", 30, usl2_negative),
        ("refinement", 10, refinement),
        ("oracle equivalences", 60, oracles),
        ("quantum matrices experiment", 120, qm2_experiment),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(run).unwrap_or_else(|p| Err(panic_message(p)));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > Duration::from_secs(budget) {
                Err(format!("took {:.1}s, budget {budget}s", elapsed.as_secs_f64()))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!("[PASS] {:>2}. {name} ({:.2}s): {detail}", i + 1, elapsed.as_secs_f64()),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name} ({:.2}s): {reason}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
