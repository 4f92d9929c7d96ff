//! Brute-force reference computations used to cross-check the library.
//! Everything here works from the raw structure-constant lists.

#![allow(dead_code)]

use hopf_fiber::algebra::StructureConstantAlgebra;
use hopf_fiber::corpus::{group_algebra, CorpusInstance, GroupTable};
use hopf_fiber::hopf::{fiber_quotient, Axiom, BialgebraData};
use hopf_fiber::linalg::{Field, Matrix, Solution};

/// Dense multiplication table: `table[i][j]` is `e_i e_j`.
pub struct Dense {
    pub f: Field,
    pub n: usize,
    pub table: Vec<Vec<Vec<u32>>>,
    pub unit: Vec<u32>,
}

impl Dense {
    pub fn of(alg: &StructureConstantAlgebra) -> Self {
        let f = alg.field();
        let n = alg.dim();
        let mut table = vec![vec![vec![0u32; n]; n]; n];
        for (i, j, k, c) in alg.entries() {
            table[i][j][k] = f.add(table[i][j][k], c);
        }
        Dense { f, n, table, unit: alg.unit().to_vec() }
    }

    pub fn e(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.f;
        let mut out = vec![0u32; self.n];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = f.mul(a, b);
                for (o, &c) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = f.mul_add(*o, ab, c);
                }
            }
        }
        out
    }
}

/// Dense coalgebra data: `comul[i]` is the `n × n` coefficient array of `Δ(e_i)`.
pub struct DenseCoalg {
    pub comul: Vec<Vec<Vec<u32>>>,
    pub counit: Vec<u32>,
    /// `antipode[i]` is `S(e_i)`.
    pub antipode: Option<Vec<Vec<u32>>>,
}

impl DenseCoalg {
    pub fn of(b: &BialgebraData) -> Self {
        let f = b.field();
        let n = b.dim();
        let mut comul = vec![vec![vec![0u32; n]; n]; n];
        for (i, j, k, c) in b.comul_entries() {
            comul[i][j][k] = f.add(comul[i][j][k], c);
        }
        let antipode = b.antipode().map(|s| (0..n).map(|i| s.column(i)).collect());
        DenseCoalg { comul, counit: b.counit().to_vec(), antipode }
    }
}

fn comul_of(d: &Dense, c: &DenseCoalg, v: &[u32]) -> Vec<Vec<u32>> {
    let f = d.f;
    let mut t = vec![vec![0u32; d.n]; d.n];
    for (i, &x) in v.iter().enumerate().filter(|(_, &x)| x != 0) {
        for j in 0..d.n {
            for k in 0..d.n {
                t[j][k] = f.mul_add(t[j][k], x, c.comul[i][j][k]);
            }
        }
    }
    t
}

fn tensor_mul(d: &Dense, s: &[Vec<u32>], t: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let f = d.f;
    let n = d.n;
    let mut out = vec![vec![0u32; n]; n];
    for j in 0..n {
        for k in 0..n {
            if s[j][k] == 0 {
                continue;
            }
            for j2 in 0..n {
                for k2 in 0..n {
                    if t[j2][k2] == 0 {
                        continue;
                    }
                    let c = f.mul(s[j][k], t[j2][k2]);
                    for (a, &x) in d.table[j][j2].iter().enumerate().filter(|(_, &x)| x != 0) {
                        for (bb, &y) in d.table[k][k2].iter().enumerate().filter(|(_, &y)| y != 0) {
                            out[a][bb] = f.mul_add(out[a][bb], c, f.mul(x, y));
                        }
                    }
                }
            }
        }
    }
    out
}

fn counit_of(d: &Dense, c: &DenseCoalg, v: &[u32]) -> u32 {
    v.iter().zip(&c.counit).fold(0, |acc, (&x, &y)| d.f.mul_add(acc, x, y))
}

/// Whether `axiom` genuinely fails at the basis indices in `witness`.
pub fn axiom_fails_at(b: &BialgebraData, axiom: Axiom, witness: &[usize]) -> bool {
    let d = Dense::of(b.alg());
    let c = DenseCoalg::of(b);
    let f = d.f;
    let n = d.n;
    match (axiom, witness) {
        (Axiom::Associativity, &[i, j, k]) => {
            d.mul(&d.mul(&d.e(i), &d.e(j)), &d.e(k)) != d.mul(&d.e(i), &d.mul(&d.e(j), &d.e(k)))
        }
        (Axiom::Unit, &[i]) => d.mul(&d.unit, &d.e(i)) != d.e(i) || d.mul(&d.e(i), &d.unit) != d.e(i),
        (Axiom::ComulMultiplicative, &[]) => {
            let one = comul_of(&d, &c, &d.unit);
            (0..n).any(|j| (0..n).any(|k| one[j][k] != f.mul(d.unit[j], d.unit[k])))
        }
        (Axiom::ComulMultiplicative, &[i, g]) => {
            let lhs = comul_of(&d, &c, &d.mul(&d.e(i), &d.e(g)));
            lhs != tensor_mul(&d, &c.comul[i], &c.comul[g])
        }
        (Axiom::CounitMultiplicative, &[]) => counit_of(&d, &c, &d.unit) != 1,
        (Axiom::CounitMultiplicative, &[i, g]) => {
            counit_of(&d, &c, &d.mul(&d.e(i), &d.e(g))) != f.mul(c.counit[i], c.counit[g])
        }
        (Axiom::Coassociativity, &[i]) => {
            let mut left = vec![0u32; n * n * n];
            let mut right = vec![0u32; n * n * n];
            for j in 0..n {
                for k in 0..n {
                    let x = c.comul[i][j][k];
                    if x == 0 {
                        continue;
                    }
                    for a in 0..n {
                        for bb in 0..n {
                            let l = &mut left[(a * n + bb) * n + k];
                            *l = f.mul_add(*l, x, c.comul[j][a][bb]);
                            let r = &mut right[(j * n + a) * n + bb];
                            *r = f.mul_add(*r, x, c.comul[k][a][bb]);
                        }
                    }
                }
            }
            left != right
        }
        (Axiom::Counit, &[i]) => {
            let mut l = vec![0u32; n];
            let mut r = vec![0u32; n];
            for j in 0..n {
                for k in 0..n {
                    l[k] = f.mul_add(l[k], c.comul[i][j][k], c.counit[j]);
                    r[j] = f.mul_add(r[j], c.comul[i][j][k], c.counit[k]);
                }
            }
            l != d.e(i) || r != d.e(i)
        }
        (Axiom::AntipodeLeft | Axiom::AntipodeRight, &[i]) => {
            let Some(s) = &c.antipode else { return false };
            let mut acc = vec![0u32; n];
            for j in 0..n {
                for k in 0..n {
                    let x = c.comul[i][j][k];
                    if x == 0 {
                        continue;
                    }
                    let prod = if axiom == Axiom::AntipodeLeft { d.mul(&s[j], &d.e(k)) } else { d.mul(&d.e(j), &s[k]) };
                    for (a, &y) in acc.iter_mut().zip(&prod) {
                        *a = f.mul_add(*a, x, y);
                    }
                }
            }
            let expected: Vec<u32> = d.unit.iter().map(|&u| f.mul(u, c.counit[i])).collect();
            acc != expected
        }
        _ => false,
    }
}

/// All characters of `alg`, found by trying every assignment of values to
/// the algebra generators. Each assignment determines at most one linear
/// functional through `χ(x g) = χ(x) χ(g)` and `χ(1) = 1`; survivors are
/// checked for multiplicativity on every pair of basis elements.
pub fn brute_force_characters(alg: &StructureConstantAlgebra) -> Vec<Vec<u32>> {
    let d = Dense::of(alg);
    let gens = alg.generators().to_vec();
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(gens.len());
    search(&d, &gens, &mut values, &mut out);
    out.sort();
    out
}

fn search(d: &Dense, gens: &[usize], values: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if values.len() == gens.len() {
        if let Some(chi) = solve_for(d, gens, values) {
            out.push(chi);
        }
        return;
    }
    for v in 0..d.f.p() {
        values.push(v);
        search(d, gens, values, out);
        values.pop();
    }
}

fn solve_for(d: &Dense, gens: &[usize], values: &[u32]) -> Option<Vec<u32>> {
    let f = d.f;
    let n = d.n;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for (&g, &v) in gens.iter().zip(values) {
            let mut row = d.table[i][g].clone();
            row[i] = f.sub(row[i], v);
            rows.push(row);
            rhs.push(vec![0]);
        }
    }
    rows.push(d.unit.clone());
    rhs.push(vec![1]);
    let a = Matrix::from_rows(&rows, n);
    let sol = a.solve(f, &Matrix::from_rows(&rhs, 1)).expect("shapes agree");
    let chi = match sol {
        Solution::Inconsistent => return None,
        Solution::Consistent { particular, kernel } => {
            assert_eq!(kernel.dim(), 0, "generators do not determine characters");
            particular.column(0)
        }
    };
    for (&g, &v) in gens.iter().zip(values) {
        assert_eq!(chi[g], v);
    }
    let dot = |x: &[u32]| x.iter().zip(&chi).fold(0, |acc, (&a, &b)| f.mul_add(acc, a, b));
    let multiplicative =
        (0..n).all(|i| (0..n).all(|j| dot(&d.table[i][j]) == f.mul(chi[i], chi[j])));
    multiplicative.then_some(chi)
}

/// Compares the fiber algebra `H/HA⁺` of a group pair with `F_p[G/Z]` built
/// from the quotient Cayley table, matching quotient basis elements to
/// cosets through their representatives. Returns whether the two bases
/// already come in the same order.
pub fn fiber_matches_quotient_group(inst: &CorpusInstance, g: &GroupTable, z: &[usize]) -> Result<bool, String> {
    let b = &inst.hopf;
    let q = fiber_quotient(b, &inst.a, &inst.a.counit_values(b)).map_err(|e| e.to_string())?;
    let (quot, coset_of) = g.quotient(z).map_err(|e| e.to_string())?;
    let reference = group_algebra(b.field(), &quot).map_err(|e| e.to_string())?;
    let relabel: Vec<usize> = q.quotient.lift_columns.iter().map(|&c| coset_of[c]).collect();
    let mut seen = relabel.clone();
    seen.sort_unstable();
    if seen != (0..quot.order()).collect::<Vec<_>>() {
        return Err(format!("{}: quotient basis does not match the cosets", inst.name));
    }
    let relabeled = |entries: Vec<(usize, usize, usize, u32)>| {
        let mut v: Vec<_> = entries.into_iter().map(|(i, j, k, c)| (relabel[i], relabel[j], relabel[k], c)).collect();
        v.sort_unstable();
        v
    };
    let sorted = |mut v: Vec<(usize, usize, usize, u32)>| {
        v.sort_unstable();
        v
    };
    if relabeled(q.quotient.algebra.entries()) != sorted(reference.alg().entries()) {
        return Err(format!("{}: fiber algebra structure constants differ from F_p[G/Z]", inst.name));
    }
    let hopf = q.hopf.as_ref().ok_or_else(|| format!("{}: no induced Hopf structure", inst.name))?;
    if relabeled(hopf.comul_entries()) != sorted(reference.comul_entries()) {
        return Err(format!("{}: fiber coalgebra differs from F_p[G/Z]", inst.name));
    }
    Ok(relabel.iter().enumerate().all(|(i, &r)| i == r))
}
