use super::CorpusError;
use crate::linalg::Field;
use crate::rewrite::{GeneratorData, Poly, Presentation, TensorPoly, Word};

fn check_params(name: &str, ell: u64, p: u64) -> Result<Field, CorpusError> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(CorpusError::BadParameters(format!("{name} must be odd and at least 3, got {ell}")));
    }
    let f = Field::new(p).map_err(|e| CorpusError::BadParameters(e.to_string()))?;
    if !(p - 1).is_multiple_of(ell) {
        return Err(CorpusError::BadParameters(format!("{name} = {ell} does not divide p - 1 = {}", p - 1)));
    }
    Ok(f)
}

fn power(g: &str, k: u64) -> String {
    if k == 0 {
        "1".into()
    } else {
        vec![g; k as usize].join("*")
    }
}

/// Large enough for every intermediate word met while multiplying basis words.
fn bound(gens: usize, ell: u64) -> usize {
    2 * gens * (ell * ell) as usize
}

fn w(pres: &Presentation, s: &str) -> Word {
    pres.word(s).expect("generator names are fixed")
}

fn poly(pres: &Presentation, terms: &[(&str, u32)]) -> Poly {
    terms.iter().map(|&(s, c)| (w(pres, s), c)).collect()
}

fn tensor(pres: &Presentation, terms: &[(&str, &str, u32)]) -> TensorPoly {
    terms.iter().map(|&(u, v, c)| (w(pres, u), w(pres, v), c)).collect()
}

/// Frobenius kernel of quantum `SL₂` on generators `a < b < c`, with
/// `d = a^{ℓ-1}(1 + q·bc)` eliminated via the quantum determinant.
pub fn qsl2_presentation(ell: u64, p: u64) -> Result<(Presentation, GeneratorData), CorpusError> {
    let f = check_params("ell", ell, p)?;
    let q = f.find_root_of_unity(ell).map_err(|e| CorpusError::BadParameters(e.to_string()))?;
    let qi = f.inv(q).unwrap();
    let text = format!(
        "# quantum SL2 Frobenius kernel, l = {ell}, q = {q}\n\
         field {p}\ngenerators a b c\nbound {}\n\
         b*a -> {qi} a*b\nc*a -> {qi} a*c\nc*b -> b*c\n\
         {} -> 1\n{} -> 0\n{} -> 0\n",
        bound(3, ell),
        power("a", ell),
        power("b", ell),
        power("c", ell),
    );
    let pres = Presentation::parse(&text)?;
    let a_top = power("a", ell - 1);
    let a_top_bc = format!("{a_top}*b*c");
    let d: [(&str, u32); 2] = [(a_top.as_str(), 1), (a_top_bc.as_str(), q)];
    let mut db = vec![("a", "b", 1)];
    let mut dc = vec![("c", "a", 1)];
    for &(t, c) in &d {
        db.push(("b", t, c));
        dc.push((t, "c", c));
    }
    let data = GeneratorData {
        comul: vec![tensor(&pres, &[("a", "a", 1), ("b", "c", 1)]), tensor(&pres, &db), tensor(&pres, &dc)],
        counit: vec![1, 0, 0],
        antipode: Some(vec![poly(&pres, &d), poly(&pres, &[("b", f.neg(qi))]), poly(&pres, &[("c", f.neg(q))])]),
    };
    Ok((pres, data))
}

/// Small quantum group `u_ε(sl₂)` on generators `F < K < E` with weights
/// `ℓ, 1, ℓ`, so the PBW basis is `F^i K^j E^k`.
pub fn usl2_presentation(ell: u64, p: u64) -> Result<(Presentation, GeneratorData), CorpusError> {
    let f = check_params("ell", ell, p)?;
    let e = f.find_root_of_unity(ell).map_err(|e| CorpusError::BadParameters(e.to_string()))?;
    let ei = f.inv(e).unwrap();
    let e2i = f.mul(ei, ei);
    let c0 = f
        .inv(f.sub(e, ei))
        .ok_or_else(|| CorpusError::BadParameters("ε − ε⁻¹ is not invertible".into()))?;
    let k_inv = power("K", ell - 1);
    let text = format!(
        "# small quantum sl2, l = {ell}, epsilon = {e}\n\
         field {p}\ngenerators F K E\nweights {ell} 1 {ell}\nbound {}\n\
         K*F -> {e2i} F*K\nE*K -> {e2i} K*E\nE*F -> F*E + {c0} K + {} {k_inv}\n\
         {} -> 1\n{} -> 0\n{} -> 0\n",
        bound(3, ell),
        f.neg(c0),
        power("K", ell),
        power("E", ell),
        power("F", ell),
    );
    let pres = Presentation::parse(&text)?;
    let k_inv_e = format!("{k_inv}*E");
    let m1 = f.neg(1);
    let data = GeneratorData {
        comul: vec![
            tensor(&pres, &[("F", &k_inv, 1), ("1", "F", 1)]),
            tensor(&pres, &[("K", "K", 1)]),
            tensor(&pres, &[("E", "1", 1), ("K", "E", 1)]),
        ],
        counit: vec![0, 1, 0],
        antipode: Some(vec![
            poly(&pres, &[("F*K", m1)]),
            poly(&pres, &[(&k_inv, 1)]),
            poly(&pres, &[(&k_inv_e, m1)]),
        ]),
    };
    Ok((pres, data))
}

/// Frobenius kernel of quantum `2 × 2` matrices on generators `a < b < c < d`,
/// with the matrix coproduct and no antipode.
pub fn qm2_presentation(t: u64, p: u64) -> Result<(Presentation, GeneratorData), CorpusError> {
    let f = check_params("t", t, p)?;
    let q = f.find_root_of_unity(t).map_err(|e| CorpusError::BadParameters(e.to_string()))?;
    let qi = f.inv(q).unwrap();
    let text = format!(
        "# quantum 2x2 matrices Frobenius kernel, t = {t}, q = {q}\n\
         field {p}\ngenerators a b c d\nbound {}\n\
         b*a -> {qi} a*b\nc*a -> {qi} a*c\nd*b -> {qi} b*d\nd*c -> {qi} c*d\nc*b -> b*c\n\
         d*a -> a*d + {} b*c\n\
         {} -> 1\n{} -> 0\n{} -> 0\n{} -> 1\n",
        bound(4, t),
        f.neg(f.sub(q, qi)),
        power("a", t),
        power("b", t),
        power("c", t),
        power("d", t),
    );
    let pres = Presentation::parse(&text)?;
    let data = GeneratorData {
        comul: vec![
            tensor(&pres, &[("a", "a", 1), ("b", "c", 1)]),
            tensor(&pres, &[("a", "b", 1), ("b", "d", 1)]),
            tensor(&pres, &[("c", "a", 1), ("d", "c", 1)]),
            tensor(&pres, &[("c", "b", 1), ("d", "d", 1)]),
        ],
        counit: vec![1, 0, 0, 1],
        antipode: None,
    };
    Ok((pres, data))
}
