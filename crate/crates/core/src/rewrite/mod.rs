//! Noncommutative rewriting: normal forms, critical-pair confluence checks,
//! basis enumeration, and extraction of structure constants.

mod extract;
mod text;

pub use extract::{extract_bialgebra, Extracted, GeneratorData, TensorPoly};

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::hopf::{Axiom, HopfError};
use crate::linalg::Field;

/// A word as a sequence of generator indices.
pub type Word = Vec<u8>;
/// Linear combination of words, not necessarily reduced.
pub type Poly = Vec<(Word, u32)>;
/// Reduced linear combination: only irreducible words, no zero coefficients.
pub type NormalPoly = BTreeMap<Word, u32>;

/// Default step budget for a single normalizer.
pub const DEFAULT_FUEL: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("two rules share the leading word {0}")]
    DuplicateLeadingWord(String),
    #[error("rule {0}: right side is not smaller than the leading word")]
    NotDecreasing(usize),
    #[error("rule {0} has an empty leading word")]
    EmptyLeadingWord(usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("word of length {len} exceeds bound {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("rewriting ran out of fuel")]
    FuelExhausted,
    #[error("generator {0} has no power rule, so the irreducible words are infinite")]
    InfiniteBasis(String),
    #[error("presentation is not confluent: {0} unresolved critical pairs")]
    NotConfluent(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("structure check failed: {axiom} at {witness:?}")]
    StructureCheckFailed { axiom: Axiom, witness: Vec<usize> },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hopf(HopfError),
}

impl From<HopfError> for RewriteError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::StructureCheckFailed { axiom, witness } => RewriteError::StructureCheckFailed { axiom, witness },
            HopfError::Algebra(a) => RewriteError::Algebra(a),
            other => RewriteError::Hopf(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Rewrite the leftmost occurrence of any leading word.
    #[default]
    Leftmost,
    /// Rewrite the rightmost occurrence.
    Rightmost,
}

/// Finitely presented algebra with rewriting rules oriented by a weighted
/// degree-lexicographic order: words compare by total weight, then
/// lexicographically by generator index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    field: Field,
    generators: Vec<String>,
    weights: Vec<u32>,
    rules: Vec<Rule>,
    word_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub word: Word,
    pub first: NormalPoly,
    pub second: NormalPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub pairs_checked: usize,
    pub unresolved: Vec<CriticalPair>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

impl Presentation {
    /// Validates the rules: nonempty and pairwise distinct leading words,
    /// reduced coefficients, and every right-hand word strictly below its leading word.
    /// `weights` defaults to all ones (plain deglex).
    pub fn new(
        field: Field,
        generators: Vec<String>,
        weights: Option<Vec<u32>>,
        rules: Vec<Rule>,
        word_bound: usize,
    ) -> Result<Self, RewriteError> {
        let g = generators.len();
        if g == 0 || g > u8::MAX as usize {
            return Err(RewriteError::Invalid(format!("{g} generators")));
        }
        let weights = weights.unwrap_or_else(|| vec![1; g]);
        if weights.len() != g || weights.contains(&0) {
            return Err(RewriteError::Invalid("weights must be positive, one per generator".into()));
        }
        let mut pres = Presentation { field, generators, weights, rules: Vec::new(), word_bound };
        let mut seen = HashMap::new();
        for (idx, mut rule) in rules.into_iter().enumerate() {
            if rule.lhs.is_empty() {
                return Err(RewriteError::EmptyLeadingWord(idx));
            }
            let all_words = std::iter::once(&rule.lhs).chain(rule.rhs.iter().map(|(w, _)| w));
            if all_words.flatten().any(|&x| x as usize >= g) {
                return Err(RewriteError::Invalid(format!("rule {idx} uses an unknown generator")));
            }
            if seen.insert(rule.lhs.clone(), idx).is_some() {
                return Err(RewriteError::DuplicateLeadingWord(pres.format_word(&rule.lhs)));
            }
            rule.rhs = combine(field, rule.rhs)?;
            rule.rhs.sort_by(|a, b| pres.cmp_words(&b.0, &a.0));
            if rule.rhs.iter().any(|(w, _)| pres.cmp_words(w, &rule.lhs) != Ordering::Less) {
                return Err(RewriteError::NotDecreasing(idx));
            }
            pres.rules.push(rule);
        }
        Ok(pres)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn word_bound(&self) -> usize {
        self.word_bound
    }

    pub fn weight(&self, w: &[u8]) -> u64 {
        w.iter().map(|&x| self.weights[x as usize] as u64).sum()
    }

    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.cmp(b))
    }

    /// Parses `a*b*c`; `1` is the empty word.
    pub fn word(&self, s: &str) -> Result<Word, RewriteError> {
        let s = s.trim();
        if s == "1" {
            return Ok(Vec::new());
        }
        s.split('*')
            .map(|name| {
                let name = name.trim();
                self.generators
                    .iter()
                    .position(|g| g == name)
                    .map(|i| i as u8)
                    .ok_or_else(|| RewriteError::UnknownGenerator(name.to_string()))
            })
            .collect()
    }

    pub fn format_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&x| self.generators[x as usize].as_str()).collect::<Vec<_>>().join("*")
    }

    /// Human-readable polynomial, largest word first.
    pub fn format_poly(&self, p: &NormalPoly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<(&Word, &u32)> = p.iter().collect();
        terms.sort_by(|a, b| self.cmp_words(b.0, a.0));
        terms
            .into_iter()
            .map(|(w, &c)| if c == 1 { self.format_word(w) } else { format!("{c} {}", self.format_word(w)) })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn find_match(&self, w: &[u8], strategy: Strategy) -> Option<(usize, usize)> {
        let matches_at = |pos: usize| {
            self.rules.iter().position(|r| w.len() - pos >= r.lhs.len() && w[pos..pos + r.lhs.len()] == r.lhs[..])
        };
        match strategy {
            Strategy::Leftmost => (0..w.len()).find_map(|pos| matches_at(pos).map(|r| (pos, r))),
            Strategy::Rightmost => (0..w.len()).rev().find_map(|pos| matches_at(pos).map(|r| (pos, r))),
        }
    }

    pub fn is_irreducible(&self, w: &[u8]) -> bool {
        self.find_match(w, Strategy::Leftmost).is_none()
    }

    pub fn normalizer(&self, strategy: Strategy) -> Normalizer<'_> {
        Normalizer { pres: self, strategy, memo: HashMap::new(), fuel: DEFAULT_FUEL }
    }

    /// Normal form with the default strategy and a fresh cache.
    pub fn normalize(&self, poly: &Poly) -> Result<NormalPoly, RewriteError> {
        self.normalizer(Strategy::default()).normalize(poly)
    }

    /// Resolves every overlap and inclusion ambiguity between rules.
    pub fn complete_check(&self) -> Result<ConfluenceReport, RewriteError> {
        let mut nz = self.normalizer(Strategy::Leftmost);
        let mut pairs_checked = 0;
        let mut unresolved = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // suffix of l1 equal to a prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let mut word = l1.clone();
                    word.extend_from_slice(&l2[k..]);
                    let first = substitute(&[], &r1.rhs, &l2[k..]);
                    let second = substitute(&l1[..l1.len() - k], &r2.rhs, &[]);
                    pairs_checked += 1;
                    check_pair(&mut nz, word, &first, &second, &mut unresolved)?;
                }
                // l2 strictly inside l1
                if i != j && l2.len() <= l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] != l2[..] {
                            continue;
                        }
                        let first = r1.rhs.clone();
                        let second = substitute(&l1[..pos], &r2.rhs, &l1[pos + l2.len()..]);
                        pairs_checked += 1;
                        check_pair(&mut nz, l1.clone(), &first, &second, &mut unresolved)?;
                    }
                }
            }
        }
        Ok(ConfluenceReport { pairs_checked, unresolved })
    }

    /// Irreducible words in increasing order. Irreducible words are closed
    /// under taking subwords, so they are grown letter by letter.
    pub fn enumerate_basis(&self) -> Result<Vec<Word>, RewriteError> {
        for (g, name) in self.generators.iter().enumerate() {
            let power = vec![g as u8; self.word_bound.max(1)];
            if self.is_irreducible(&power) {
                return Err(RewriteError::InfiniteBasis(name.clone()));
            }
        }
        let mut basis: Vec<Word> = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.generators.len() as u8 {
                    let mut x = w.clone();
                    x.push(g);
                    // only the new suffixes can contain a leading word
                    if self.rules.iter().all(|r| !x.ends_with(&r.lhs)) {
                        next.push(x);
                    }
                }
            }
            if let Some(w) = next.first() {
                if w.len() > self.word_bound {
                    return Err(RewriteError::BoundExceeded { len: w.len(), bound: self.word_bound });
                }
            }
            basis.extend(next.iter().cloned());
            layer = next;
        }
        basis.sort_by(|a, b| self.cmp_words(a, b));
        Ok(basis)
    }
}

fn check_pair(
    nz: &mut Normalizer<'_>,
    word: Word,
    first: &Poly,
    second: &Poly,
    unresolved: &mut Vec<CriticalPair>,
) -> Result<(), RewriteError> {
    let a = nz.normalize(first)?;
    let b = nz.normalize(second)?;
    if a != b {
        unresolved.push(CriticalPair { word, first: a, second: b });
    }
    Ok(())
}

fn substitute(prefix: &[u8], rhs: &Poly, suffix: &[u8]) -> Poly {
    rhs.iter()
        .map(|(w, c)| {
            let mut x = prefix.to_vec();
            x.extend_from_slice(w);
            x.extend_from_slice(suffix);
            (x, *c)
        })
        .collect()
}

fn combine(f: Field, poly: Poly) -> Result<Poly, RewriteError> {
    let mut acc: NormalPoly = BTreeMap::new();
    for (w, c) in poly {
        if c >= f.p() {
            return Err(RewriteError::Invalid(format!("coefficient {c} not reduced mod {}", f.p())));
        }
        add_term(f, &mut acc, w, c);
    }
    Ok(acc.into_iter().collect())
}

pub(crate) fn add_term(f: Field, acc: &mut NormalPoly, w: Word, c: u32) {
    if c == 0 {
        return;
    }
    match acc.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = f.add(*o.get(), c);
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Normal-form computation with a per-word cache and a step budget.
pub struct Normalizer<'a> {
    pres: &'a Presentation,
    strategy: Strategy,
    memo: HashMap<Word, NormalPoly>,
    fuel: u64,
}

impl Normalizer<'_> {
    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn normalize(&mut self, poly: &Poly) -> Result<NormalPoly, RewriteError> {
        let f = self.pres.field;
        let mut out = NormalPoly::new();
        for (w, c) in poly {
            if *c == 0 {
                continue;
            }
            for (x, d) in self.normalize_word(w)? {
                add_term(f, &mut out, x, f.mul(*c, d));
            }
        }
        Ok(out)
    }

    pub fn normalize_word(&mut self, w: &[u8]) -> Result<NormalPoly, RewriteError> {
        if let Some(p) = self.memo.get(w) {
            return Ok(p.clone());
        }
        let bound = self.pres.word_bound;
        if w.len() > bound {
            return Err(RewriteError::BoundExceeded { len: w.len(), bound });
        }
        let result = match self.pres.find_match(w, self.strategy) {
            None => NormalPoly::from([(w.to_vec(), 1)]),
            Some((pos, r)) => {
                if self.fuel == 0 {
                    return Err(RewriteError::FuelExhausted);
                }
                self.fuel -= 1;
                let rule = &self.pres.rules[r];
                let f = self.pres.field;
                let mut acc = NormalPoly::new();
                for (x, c) in substitute(&w[..pos], &rule.rhs, &w[pos + rule.lhs.len()..]) {
                    debug_assert_eq!(self.pres.cmp_words(&x, w), Ordering::Less);
                    for (y, d) in self.normalize_word(&x)? {
                        add_term(f, &mut acc, y, f.mul(c, d));
                    }
                }
                acc
            }
        };
        self.memo.insert(w.to_vec(), result.clone());
        Ok(result)
    }
}
