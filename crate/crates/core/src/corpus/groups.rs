use serde::{Deserialize, Serialize};

use super::CorpusError;

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub labels: Vec<String>,
    pub cayley: Vec<Vec<usize>>,
    #[serde(skip)]
    identity: usize,
    #[serde(skip)]
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and inverses exhaustively.
    pub fn new(labels: Vec<String>, cayley: Vec<Vec<usize>>) -> Result<Self, CorpusError> {
        let n = cayley.len();
        let bad = |m: &str| CorpusError::NotAGroup(m.into());
        if n == 0 || labels.len() != n || cayley.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table must be square with entries in range"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| bad("no identity"))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n).find(|&y| cayley[x][y] == identity).ok_or_else(|| bad("missing inverse"))?;
            if cayley[y][x] != identity {
                return Err(bad("left and right inverses differ"));
            }
            inverse.push(y);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(GroupTable { labels, cayley, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cayley[x][y]
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&z| (0..n).all(|x| self.mul(z, x) == self.mul(x, z))).collect()
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        !s.is_empty()
            && s.iter().all(|&x| x < self.order())
            && s.contains(&self.identity)
            && s.iter().all(|&x| s.iter().all(|&y| s.contains(&self.mul(x, self.inverse(y)))))
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("g^{i}")).collect();
        let cayley = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::new(labels, cayley).expect("cyclic group")
    }

    /// Quaternion group with elements `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // unit index u in {1, i, j, k}, sign bit s; element 2u + s
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let cayley = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (u, neg) = unit_mul(x / 2, y / 2);
                        2 * u + ((x % 2 == 1) ^ (y % 2 == 1) ^ neg) as usize
                    })
                    .collect()
            })
            .collect();
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        Self::new(labels, cayley).expect("quaternion group")
    }

    /// Permutations of three points in lexicographic order of one-line notation,
    /// multiplied as composition of maps (`(στ)(x) = σ(τ(x))`).
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let cayley = perms
            .iter()
            .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        Self::new(labels, cayley).expect("symmetric group")
    }

    /// `G × H` with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let m = h.order();
        let n = g.order() * m;
        let cayley = (0..n)
            .map(|x| (0..n).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        let labels = (0..n).map(|x| format!("({},{})", g.labels[x / m], h.labels[x % m])).collect();
        Self::new(labels, cayley).expect("direct product")
    }

    /// Built-in groups by name: `c<n>`, `q8`, `s3`, `s3c2`, `c2c2`.
    pub fn named(name: &str) -> Result<Self, CorpusError> {
        match name {
            "q8" => Ok(Self::quaternion()),
            "s3" => Ok(Self::symmetric3()),
            "s3c2" => Ok(Self::direct_product(&Self::symmetric3(), &Self::cyclic(2))),
            "c2c2" => Ok(Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))),
            _ => match name.strip_prefix('c').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n >= 1 => Ok(Self::cyclic(n)),
                _ => Err(CorpusError::BadParameters(format!("unknown group {name:?}"))),
            },
        }
    }

    /// Cosets of a normal subgroup `z`, ordered by their largest element, and
    /// the quotient table on them. Returns the quotient and the coset index of
    /// each element.
    pub fn quotient(&self, z: &[usize]) -> Result<(GroupTable, Vec<usize>), CorpusError> {
        if !self.is_subgroup(z) {
            return Err(CorpusError::NotASubgroup);
        }
        let n = self.order();
        let normal = (0..n).all(|g| z.iter().all(|&x| z.contains(&self.mul(self.mul(g, x), self.inverse(g)))));
        if !normal {
            return Err(CorpusError::BadParameters("subgroup is not normal".into()));
        }
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            let mut c: Vec<usize> = z.iter().map(|&x| self.mul(g, x)).collect();
            c.sort_unstable();
            if !cosets.contains(&c) {
                cosets.push(c);
            }
        }
        cosets.sort_by_key(|c| *c.last().unwrap());
        let mut which = vec![0; n];
        for (ci, c) in cosets.iter().enumerate() {
            for &g in c {
                which[g] = ci;
            }
        }
        let cayley = cosets
            .iter()
            .map(|c| cosets.iter().map(|d| which[self.mul(c[0], d[0])]).collect())
            .collect();
        let labels = cosets.iter().map(|c| format!("{}Z", self.labels[c[0]])).collect();
        Ok((GroupTable::new(labels, cayley)?, which))
    }

    /// Reconstructs cached data after deserialization.
    pub fn revalidated(self) -> Result<Self, CorpusError> {
        Self::new(self.labels, self.cayley)
    }
}
