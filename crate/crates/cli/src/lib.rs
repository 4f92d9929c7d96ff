//! JSON interchange formats for the `hopf-fiber` command-line tool.
//!
//! Every file carries `"schema": 1`. Coefficients are integers in `[0, p)`
//! and sparse entry lists are sorted lexicographically, so a file written by
//! [`AlgebraFile::to_json`] is in canonical form and round-trips byte for byte.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use hopf_fiber::algebra::StructureConstantAlgebra;
use hopf_fiber::corpus::{CorpusError, CorpusInstance, Expectation, Provenance};
use hopf_fiber::hopf::{BialgebraData, CoidealSubalgebra, HopfError};
use hopf_fiber::linalg::{Field, Matrix, Subspace};
use hopf_fiber::specmap::Sides;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {0}")]
    Schema(u32),
    #[error("invalid file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraSpec {
    pub basis_vectors: Vec<Vec<u32>>,
}

/// A finite-dimensional bialgebra with an optional subalgebra `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<u32>,
    /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` on `e_k`.
    pub mul: Vec<(usize, usize, usize, u32)>,
    /// `[i, j, k, c]`: `Δ(e_i)` has coefficient `c` on `e_j ⊗ e_k`.
    pub comul: Vec<(usize, usize, usize, u32)>,
    pub counit: Vec<u32>,
    /// `[i, j, c]`: `S(e_i)` has coefficient `c` on `e_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, u32)>>,
    #[serde(rename = "subalgebra_A", default, skip_serializing_if = "Option::is_none")]
    pub subalgebra_a: Option<SubalgebraSpec>,
    #[serde(default)]
    pub winding_sides: Sides,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expectation>,
}

impl AlgebraFile {
    pub fn from_bialgebra(b: &BialgebraData) -> Self {
        let alg = b.alg();
        let mut mul = alg.entries();
        mul.sort_unstable();
        let mut comul = b.comul_entries();
        comul.sort_unstable();
        let antipode = b.antipode().map(|s| {
            let n = b.dim();
            let mut v = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if s.get(j, i) != 0 {
                        v.push((i, j, s.get(j, i)));
                    }
                }
            }
            v
        });
        AlgebraFile {
            schema: SCHEMA,
            name: None,
            field: FieldSpec { p: b.field().p() },
            dim: b.dim(),
            basis: alg.labels().to_vec(),
            unit: alg.unit().to_vec(),
            mul,
            comul,
            counit: b.counit().to_vec(),
            antipode,
            subalgebra_a: None,
            winding_sides: Sides::Right,
            provenance: None,
            expected: None,
        }
    }

    pub fn from_instance(inst: &CorpusInstance) -> Self {
        let mut file = Self::from_bialgebra(&inst.hopf);
        file.name = Some(inst.name.clone());
        file.subalgebra_a = Some(SubalgebraSpec { basis_vectors: inst.a.subspace().vectors().collect() });
        file.winding_sides = inst.sides;
        file.provenance = Some(inst.provenance.clone());
        file.expected = inst.expected.clone();
        file
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        if file.schema != SCHEMA {
            return Err(FormatError::Schema(file.schema));
        }
        Ok(file)
    }

    /// Compact canonical JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn field(&self) -> Result<Field, FormatError> {
        Field::new(self.field.p as u64).map_err(|e| FormatError::Invalid(e.to_string()))
    }

    /// The structure maps after range checks only, so that a broken file can
    /// still be inspected axiom by axiom.
    pub fn to_bialgebra_unchecked(&self) -> Result<BialgebraData, FormatError> {
        let f = self.field()?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(FormatError::Invalid(format!("{} basis labels for dimension {n}", self.basis.len())));
        }
        let alg = StructureConstantAlgebra::new_unchecked(f, self.basis.clone(), self.unit.clone(), &self.mul)
            .map_err(HopfError::from)?;
        let antipode = match &self.antipode {
            None => None,
            Some(entries) => {
                let mut s = Matrix::zeros(n, n);
                for &(i, j, c) in entries {
                    if i >= n || j >= n || c >= f.p() {
                        return Err(FormatError::Invalid(format!("antipode entry ({i},{j},{c}) out of range")));
                    }
                    s.set(j, i, f.add(s.get(j, i), c));
                }
                Some(s)
            }
        };
        Ok(BialgebraData::new(alg, &self.comul, self.counit.clone(), antipode)?)
    }

    /// Fully verified instance; `A` defaults to the scalars.
    pub fn to_instance(&self) -> Result<CorpusInstance, FormatError> {
        let b = self.to_bialgebra_unchecked()?.verified()?;
        let f = b.field();
        let a = match &self.subalgebra_a {
            Some(spec) => {
                if spec.basis_vectors.iter().any(|v| v.len() != self.dim || v.iter().any(|&c| c >= f.p())) {
                    return Err(FormatError::Invalid("subalgebra_A vector has wrong length or unreduced entries".into()));
                }
                Subspace::span(f, self.dim, &spec.basis_vectors)
            }
            None => CoidealSubalgebra::scalars(&b).subspace().clone(),
        };
        let provenance = self.provenance.clone().unwrap_or(Provenance { family: "file".into(), params: Default::default() });
        let mut inst = CorpusInstance::new(
            self.name.as_deref().unwrap_or("input"),
            b,
            a,
            provenance,
            self.winding_sides,
        )?;
        inst.expected = self.expected.clone();
        Ok(inst)
    }
}

/// Output of one command; deterministic for a fixed input, seed and command.
#[derive(Debug, Clone, Serialize)]
pub struct ReportFile<R: Serialize> {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    /// SHA-256 of the input file bytes, hex encoded.
    pub input_digest: String,
    pub seed: u64,
    pub command: String,
    pub results: R,
}

impl<R: Serialize> ReportFile<R> {
    pub fn new(input: &[u8], seed: u64, command: &str, results: R) -> Self {
        ReportFile {
            schema: SCHEMA,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            input_digest: hex::encode(Sha256::digest(input)),
            seed,
            command: command.into(),
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
