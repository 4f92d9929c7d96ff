use super::{shipped_instance, CorpusError};
use crate::algebra::StructureConstantAlgebra;
use crate::hopf::{Axiom, BialgebraData};

/// One structure coefficient, addressed by basis labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Coefficient of `e_k` in `e_i e_j`.
    Mul(&'static str, &'static str, &'static str),
    /// Coefficient of `e_i` in the unit.
    Unit(&'static str),
    /// Coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    Comul(&'static str, &'static str, &'static str),
    Counit(&'static str),
    /// Coefficient of `e_j` in `S(e_i)`.
    Antipode(&'static str, &'static str),
}

/// A shipped instance with one coefficient shifted by `delta`, and the first
/// axiom expected to fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub name: &'static str,
    pub instance: &'static str,
    pub target: Target,
    pub delta: u32,
    pub expected: Axiom,
}

pub fn mutation_fixtures() -> Vec<Mutation> {
    use Axiom::{AntipodeLeft, Associativity, ComulMultiplicative, CounitMultiplicative};
    use Target::{Antipode, Comul, Counit, Mul};
    let m = |name, instance, target, expected| Mutation { name, instance, target, delta: 1, expected };
    vec![
        m("c3-mul", "c3", Mul("g^1", "g^1", "g^2"), Associativity),
        m("c3-unit", "c3", Target::Unit("g^1"), Axiom::Unit),
        m("c3-comul", "c3", Comul("g^1", "g^1", "g^1"), ComulMultiplicative),
        m("c3-counit", "c3", Counit("g^1"), CounitMultiplicative),
        m("c3-antipode", "c3", Antipode("g^1", "g^0"), AntipodeLeft),
        m("q8-mul", "q8", Mul("i", "j", "k"), Associativity),
        m("q8-comul", "q8", Comul("i", "i", "i"), ComulMultiplicative),
        m("s3c2-antipode", "s3c2", Antipode("(120,g^1)", "(012,g^0)"), AntipodeLeft),
        m("qsl2-counit", "qsl2", Counit("a"), CounitMultiplicative),
        m("usl2-comul", "usl2", Comul("E", "E", "1"), ComulMultiplicative),
    ]
}

impl Mutation {
    /// The mutated structure, assembled without any axiom check.
    pub fn apply(&self, b: &BialgebraData) -> Result<BialgebraData, CorpusError> {
        let alg = b.alg();
        let f = b.field();
        let idx = |label: &str| {
            alg.labels()
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| CorpusError::BadParameters(format!("no basis element {label:?}")))
        };
        let mut mul = alg.entries();
        let mut unit = alg.unit().to_vec();
        let mut comul = b.comul_entries();
        let mut counit = b.counit().to_vec();
        let mut antipode = b.antipode().cloned();
        match self.target {
            Target::Mul(i, j, k) => mul.push((idx(i)?, idx(j)?, idx(k)?, self.delta)),
            Target::Unit(i) => {
                let i = idx(i)?;
                unit[i] = f.add(unit[i], self.delta);
            }
            Target::Comul(i, j, k) => comul.push((idx(i)?, idx(j)?, idx(k)?, self.delta)),
            Target::Counit(i) => {
                let i = idx(i)?;
                counit[i] = f.add(counit[i], self.delta);
            }
            Target::Antipode(i, j) => {
                let s = antipode.as_mut().ok_or_else(|| CorpusError::BadParameters("no antipode".into()))?;
                let (i, j) = (idx(i)?, idx(j)?);
                s.set(j, i, f.add(s.get(j, i), self.delta));
            }
        }
        let alg = StructureConstantAlgebra::new_unchecked(f, alg.labels().to_vec(), unit, &mul)?;
        Ok(BialgebraData::new(alg, &comul, counit, antipode)?)
    }

    pub fn build(&self) -> Result<BialgebraData, CorpusError> {
        self.apply(&shipped_instance(self.instance)?.hopf)
    }
}
