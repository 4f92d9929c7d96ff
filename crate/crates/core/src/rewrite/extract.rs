use std::collections::HashMap;

use super::{NormalPoly, Poly, Presentation, RewriteError, Word};
use crate::algebra::{MulEntry, StructureConstantAlgebra};
use crate::hopf::BialgebraData;
use crate::linalg::Matrix;

/// `Σ c · u ⊗ v` over pairs of words.
pub type TensorPoly = Vec<(Word, Word, u32)>;

/// Structure maps on the generators, extended to all words: `Δ` and `ε`
/// multiplicatively, `S` anti-multiplicatively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorData {
    pub comul: Vec<TensorPoly>,
    pub counit: Vec<u32>,
    pub antipode: Option<Vec<Poly>>,
}

/// An algebra read off from a confluent presentation, basis = irreducible words.
#[derive(Debug, Clone)]
pub struct Extracted {
    pub bialgebra: BialgebraData,
    pub basis: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Extracted {
    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinate vector of a polynomial after normalization.
    pub fn vector(&self, pres: &Presentation, poly: &Poly) -> Result<Vec<u32>, RewriteError> {
        let f = pres.field();
        let mut v = vec![0u32; self.basis.len()];
        for (w, c) in pres.normalize(poly)? {
            let i = self.index[&w];
            v[i] = f.add(v[i], c);
        }
        Ok(v)
    }
}

/// Normalizes all products of irreducible words into structure constants,
/// extends the generator data, and runs the full axiom check.
pub fn extract_bialgebra(pres: &Presentation, data: &GeneratorData) -> Result<Extracted, RewriteError> {
    let f = pres.field();
    let g = pres.generators().len();
    if data.comul.len() != g || data.counit.len() != g || data.antipode.as_ref().is_some_and(|s| s.len() != g) {
        return Err(RewriteError::Invalid("generator data must give one image per generator".into()));
    }
    let report = pres.complete_check()?;
    if !report.is_confluent() {
        return Err(RewriteError::NotConfluent(report.unresolved.len()));
    }
    let basis = pres.enumerate_basis()?;
    let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = basis.len();
    let mut nz = pres.normalizer(Default::default());
    let to_vector = |p: &NormalPoly| {
        let mut v = vec![0u32; n];
        for (w, &c) in p {
            v[index[w]] = c;
        }
        v
    };

    let mut entries: Vec<MulEntry> = Vec::new();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            for (w, c) in nz.normalize_word(&uv)? {
                entries.push((i, j, index[&w], c));
            }
        }
    }
    let mut unit = vec![0u32; n];
    unit[index[&Vec::new()]] = 1;
    let labels = basis.iter().map(|w| pres.format_word(w)).collect();
    let alg = StructureConstantAlgebra::new(f, labels, unit.clone(), &entries)?;

    // images of generators in basis coordinates
    let mut gen_comul: Vec<HashMap<(usize, usize), u32>> = Vec::with_capacity(g);
    for t in &data.comul {
        let mut acc = HashMap::new();
        for (u, v, c) in t {
            let nu = nz.normalize_word(u)?;
            let nv = nz.normalize_word(v)?;
            for (a, &x) in &nu {
                for (b, &y) in &nv {
                    let e = acc.entry((index[a], index[b])).or_insert(0);
                    *e = f.add(*e, f.mul(*c, f.mul(x, y)));
                }
            }
        }
        gen_comul.push(acc);
    }
    let gen_antipode: Option<Vec<Vec<u32>>> = match &data.antipode {
        Some(s) => Some(s.iter().map(|p| nz.normalize(p).map(|q| to_vector(&q))).collect::<Result<_, _>>()?),
        None => None,
    };

    // basis words are sorted, so each word's prefix has already been handled
    let mut comul: Vec<HashMap<(usize, usize), u32>> = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode_cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    for w in &basis {
        match w.split_last() {
            None => {
                comul.push(HashMap::from([((index[w], index[w]), 1)]));
                counit.push(1);
                antipode_cols.push(unit.clone());
            }
            Some((&last, prefix)) => {
                let p = index[prefix];
                let last = last as usize;
                comul.push(tensor_mul(&alg, &comul[p], &gen_comul[last]));
                counit.push(f.mul(counit[p], data.counit[last]));
                if let Some(s) = &gen_antipode {
                    antipode_cols.push(alg.mul(&s[last], &antipode_cols[p]));
                }
            }
        }
    }
    let comul_entries: Vec<(usize, usize, usize, u32)> = comul
        .iter()
        .enumerate()
        .flat_map(|(i, t)| t.iter().filter(|(_, &c)| c != 0).map(move |(&(j, k), &c)| (i, j, k, c)))
        .collect();
    let antipode = gen_antipode.map(|_| Matrix::from_columns(&antipode_cols, n));
    let bialgebra = BialgebraData::checked(alg, &comul_entries, counit, antipode)?;
    Ok(Extracted { bialgebra, basis, index })
}

fn tensor_mul(
    alg: &StructureConstantAlgebra,
    x: &HashMap<(usize, usize), u32>,
    y: &HashMap<(usize, usize), u32>,
) -> HashMap<(usize, usize), u32> {
    let f = alg.field();
    let mut out: HashMap<(usize, usize), u32> = HashMap::new();
    for (&(j, k), &c) in x {
        for (&(j2, k2), &d) in y {
            let cd = f.mul(c, d);
            for &(a, s) in alg.basis_product(j, j2) {
                let cds = f.mul(cd, s);
                for &(b, t) in alg.basis_product(k, k2) {
                    let e = out.entry((a, b)).or_insert(0);
                    *e = f.mul_add(*e, cds, t);
                }
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}
