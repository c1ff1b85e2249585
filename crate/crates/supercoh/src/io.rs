//! JSON document schemas for algebras, subalgebras, and modules, plus the
//! canonical serialization used for deterministic reports and input hashing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{
    BasisVector, EvenSubalgebra, LieSuperalgebra, Parity, Representation, SchemaError,
};
use crate::linalg::RationalMatrix;
use crate::rational::{format_rat, parse_rat, Rat};

/// Algebra document: `{"basis":[{"name","parity"}...],
/// "brackets":[{"i","j","coeffs":{"k":"p/q"}}...]}` with optional `name`
/// and `classical` fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    #[serde(default)]
    pub name: Option<String>,
    pub basis: Vec<BasisEntry>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub classical: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub parity: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// Sparse coefficient vector: basis index (as a decimal string key,
    /// keeping JSON object form) to rational "p/q".
    pub coeffs: BTreeMap<String, String>,
}

/// Subalgebra document: `{"indices":[...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubalgebraDoc {
    pub indices: Vec<usize>,
}

/// Module document: `{"carrier":[even,odd], "matrices":[[["p/q"...]...]...]}`
/// with one carrier-square matrix per algebra basis vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub carrier: [usize; 2],
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<LieSuperalgebra, SchemaError> {
        let dim = self.basis.len();
        let basis: Vec<BasisVector> = self
            .basis
            .iter()
            .map(|b| {
                Ok(BasisVector {
                    name: b.name.clone(),
                    parity: Parity::from_u8(b.parity).map_err(SchemaError::Malformed)?,
                })
            })
            .collect::<Result<_, SchemaError>>()?;
        let mut brackets = BTreeMap::new();
        for e in &self.brackets {
            let mut v = vec![Rat::from_integer(0.into()); dim];
            for (k, s) in &e.coeffs {
                let k: usize = k
                    .parse()
                    .map_err(|_| SchemaError::Malformed(format!("bad coefficient key {k:?}")))?;
                if k >= dim {
                    return Err(SchemaError::IndexOutOfRange(k));
                }
                v[k] = parse_rat(s).map_err(SchemaError::Malformed)?;
            }
            brackets.insert((e.i, e.j), v);
        }
        LieSuperalgebra::new(
            self.name.clone().unwrap_or_else(|| "custom".into()),
            basis,
            brackets,
            self.classical,
        )
    }

    pub fn from_algebra(alg: &LieSuperalgebra) -> AlgebraDoc {
        let basis = alg
            .basis()
            .iter()
            .map(|b| BasisEntry {
                name: b.name.clone(),
                parity: b.parity.as_u8(),
            })
            .collect();
        let mut brackets = Vec::new();
        for i in 0..alg.dim() {
            for j in i..alg.dim() {
                let c = alg.bracket(i, j);
                let coeffs: BTreeMap<String, String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                    .map(|(k, v)| (k.to_string(), format_rat(v)))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        AlgebraDoc {
            name: Some(alg.name.clone()),
            basis,
            brackets,
            classical: alg.classical,
        }
    }
}

impl SubalgebraDoc {
    pub fn to_subalgebra(&self, alg: &LieSuperalgebra) -> Result<EvenSubalgebra, SchemaError> {
        EvenSubalgebra::from_indices(alg, &self.indices)
            .map_err(|e| SchemaError::Malformed(e.to_string()))
    }
}

impl ModuleDoc {
    pub fn to_representation(
        &self,
        alg: &LieSuperalgebra,
        name: &str,
    ) -> Result<Representation, SchemaError> {
        let d = self.carrier[0] + self.carrier[1];
        if self.matrices.len() != alg.dim() {
            return Err(SchemaError::Malformed(format!(
                "module has {} matrices for an algebra of dimension {}",
                self.matrices.len(),
                alg.dim()
            )));
        }
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for rows in &self.matrices {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(SchemaError::Malformed(format!(
                    "module matrices must be {d} x {d}"
                )));
            }
            let mut m = RationalMatrix::zero(d, d);
            for (i, row) in rows.iter().enumerate() {
                for (j, s) in row.iter().enumerate() {
                    let v = parse_rat(s).map_err(SchemaError::Malformed)?;
                    m.set(i, j, v);
                }
            }
            matrices.push(m);
        }
        Ok(Representation {
            name: name.into(),
            even_dim: self.carrier[0],
            odd_dim: self.carrier[1],
            matrices,
        })
    }

    pub fn from_representation(rep: &Representation) -> ModuleDoc {
        let d = rep.carrier_dim();
        let matrices = rep
            .matrices
            .iter()
            .map(|m| {
                (0..d)
                    .map(|i| (0..d).map(|j| format_rat(&m.get(i, j))).collect())
                    .collect()
            })
            .collect();
        ModuleDoc {
            carrier: [rep.even_dim, rep.odd_dim],
            matrices,
        }
    }
}

/// Canonical JSON bytes of a serializable document (sorted object keys are
/// the serde_json default here), used for hashing and byte-stable output.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable document")
}

/// Hex SHA-256 of canonical JSON; reports embed this so results are
/// traceable to their exact inputs.
pub fn sha256_hex<T: Serialize>(value: &T) -> String {
    let mut h = Sha256::new();
    h.update(canonical_json(value).as_bytes());
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
