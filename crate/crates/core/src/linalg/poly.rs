//! Dense univariate polynomials over `F_p` (coefficients low degree first,
//! no trailing zeros) and factorization into irreducibles.

use rand::Rng;

use super::Field;

pub type Poly = Vec<u32>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn is_one(a: &[u32]) -> bool {
    a.len() == 1 && a[0] == 1
}

pub fn add(f: Field, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

pub fn sub(f: Field, a: &[u32], b: &[u32]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

pub fn mul(f: Field, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(out[i + j], x, y);
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem(f: Field, a: &[u32], b: &[u32]) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let mut r = trim(a.to_vec());
    let inv_lead = f.inv(b[db]).unwrap();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(r[dr], inv_lead);
        q[dr - db] = c;
        let nc = f.neg(c);
        for (i, &y) in b.iter().enumerate() {
            r[dr - db + i] = f.mul_add(r[dr - db + i], nc, y);
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: Field, a: &[u32], b: &[u32]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: Field, a: &[u32]) -> Poly {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = f.inv(a[d]).unwrap();
            a[..=d].iter().map(|&c| f.mul(c, inv)).collect()
        }
    }
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd(f: Field, a: &[u32], b: &[u32]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn derivative(f: Field, a: &[u32]) -> Poly {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, (i as u64 % f.p() as u64) as u32))
        .collect();
    trim(out)
}

pub fn mulmod(f: Field, a: &[u32], b: &[u32], m: &[u32]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: Field, base: &[u32], mut exp: u64, m: &[u32]) -> Poly {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        exp >>= 1;
    }
    acc
}

/// `a(x) = g(x^p)` ↦ `g`, valid since every element of `F_p` is its own p-th root.
fn pth_root(f: Field, a: &[u32]) -> Poly {
    let p = f.p() as usize;
    trim(a.iter().step_by(p).copied().collect())
}

/// Square-free decomposition: pairs `(g, m)` with `a = lead · Π g^m`, each `g` monic square-free.
pub fn squarefree(f: Field, a: &[u32]) -> Vec<(Poly, usize)> {
    let a = monic(f, a);
    let mut out = Vec::new();
    if degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    let da = derivative(f, &a);
    if da.is_empty() {
        for (g, m) in squarefree(f, &pth_root(f, &a)) {
            out.push((g, m * f.p() as usize));
        }
        return out;
    }
    let mut c = gcd(f, &a, &da);
    let mut w = divrem(f, &a, &c).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(f, &w, &c);
        let z = divrem(f, &w, &y).0;
        if !is_one(&z) {
            out.push((monic(f, &z), i));
        }
        i += 1;
        w = y;
        c = divrem(f, &c, &w).0;
    }
    if !is_one(&c) {
        for (g, m) in squarefree(f, &pth_root(f, &c)) {
            out.push((g, m * f.p() as usize));
        }
    }
    out
}

/// Splits a monic square-free polynomial into products of irreducibles of equal degree.
pub fn distinct_degree(f: Field, a: &[u32]) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = monic(f, a);
    let x = vec![0u32, 1];
    let mut h = x.clone();
    let mut d = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(f, &h, f.p() as u64, &rest);
        let g = gcd(f, &rest, &sub(f, &h, &x));
        if !is_one(&g) {
            out.push((g.clone(), d));
            rest = divrem(f, &rest, &g).0;
            h = rem(f, &h, &rest);
        }
    }
    if degree(&rest).unwrap_or(0) > 0 {
        let dr = degree(&rest).unwrap();
        out.push((rest, dr));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
pub fn equal_degree<R: Rng>(f: Field, a: &[u32], d: usize, rng: &mut R) -> Vec<Poly> {
    let a = monic(f, a);
    let n = degree(&a).unwrap_or(0);
    if n == d {
        return vec![a];
    }
    loop {
        let r: Poly = trim((0..n).map(|_| rng.gen_range(0..f.p())).collect());
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let g = if f.p() == 2 {
            // trace map r + r^2 + ... + r^(2^(d-1))
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..d {
                t = mulmod(f, &t, &t, &a);
                acc = add(f, &acc, &t);
            }
            gcd(f, &a, &acc)
        } else {
            // r^((p^d - 1)/2) = (r^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut frob = rem(f, &r, &a);
            let mut norm = frob.clone();
            for _ in 1..d {
                frob = powmod(f, &frob, f.p() as u64, &a);
                norm = mulmod(f, &norm, &frob, &a);
            }
            let b = powmod(f, &norm, (f.p() as u64 - 1) / 2, &a);
            gcd(f, &a, &sub(f, &b, &[1]))
        };
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(f, &a, &g).0;
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &h, d, rng));
            return out;
        }
    }
}

/// Distinct monic irreducible factors with multiplicities, sorted by (degree, coefficients).
pub fn factor<R: Rng>(f: Field, a: &[u32], rng: &mut R) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree(f, a) {
        for (h, d) in distinct_degree(f, &g) {
            for irr in equal_degree(f, &h, d, rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    // irreducibility oracle: no monic factor of degree <= deg/2 by exhaustive division
    fn brute_irreducible(f: Field, a: &[u32]) -> bool {
        let n = degree(a).unwrap();
        let p = f.p() as u64;
        for d in 1..=n / 2 {
            for code in 0..p.pow(d as u32) {
                let mut g = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    g.push((c % p) as u32);
                    c /= p;
                }
                g.push(1);
                if rem(f, a, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factors_reconstruct_and_are_irreducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [2u64, 3, 5, 7] {
            let f = Field::new(p).unwrap();
            for trial in 0..40 {
                let deg = 1 + trial % 7;
                let mut a: Poly = (0..deg).map(|_| rng.gen_range(0..f.p())).collect();
                a.push(1);
                // square a factor now and then to exercise multiplicities
                if trial % 3 == 0 {
                    a = mul(f, &a, &[1, 1]);
                    a = mul(f, &a, &[1, 1]);
                }
                let facs = factor(f, &a, &mut rng);
                let mut prod = vec![1u32];
                for (g, m) in &facs {
                    assert!(brute_irreducible(f, g), "p={p} {g:?} reducible");
                    for _ in 0..*m {
                        prod = mul(f, &prod, g);
                    }
                }
                assert_eq!(prod, a, "p={p}");
            }
        }
    }

    #[test]
    fn pure_pth_power() {
        let f = Field::new(3).unwrap();
        // (x + 1)^3 = x^3 + 1 over F_3
        let facs = factor(f, &[1, 0, 0, 1], &mut ChaCha8Rng::seed_from_u64(0));
        assert_eq!(facs, vec![(vec![1, 1], 3)]);
    }

    #[test]
    fn division_identity() {
        let f = Field::new(7).unwrap();
        let a = vec![3, 0, 5, 1, 6];
        let b = vec![2, 1, 4];
        let (q, r) = divrem(f, &a, &b);
        assert_eq!(add(f, &mul(f, &q, &b), &r), a);
        assert!(degree(&r).unwrap_or(0) < 2);
    }
}
