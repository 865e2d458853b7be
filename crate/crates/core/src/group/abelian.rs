use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::IntegerMatrix;
use super::presentation::Presentation;
use super::smith::{smith_normal_form, SmithForm};

/// `Z^free_rank + Z/t_1 + ... + Z/t_m` with `t_1 | t_2 | ... | t_m`, every
/// `t_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_factors")]
    pub torsion: Vec<BigInt>,
}

fn serialize_factors<S: serde::Serializer>(factors: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(factors.len()))?;
    for f in factors {
        // invariant factors of desk-scale presentations fit comfortably
        match i64::try_from(f) {
            Ok(v) => seq.serialize_element(&v)?,
            Err(_) => seq.serialize_element(&f.to_string())?,
        }
    }
    seq.end()
}

impl AbelianInvariants {
    /// Reads the group off a Smith form of a relation matrix with `generators`
    /// columns.
    pub fn from_smith(smith: &SmithForm, generators: usize) -> Self {
        let nonzero = smith.diagonal.iter().filter(|d| !d.is_zero()).count();
        let torsion = smith
            .diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        AbelianInvariants {
            free_rank: generators - nonzero,
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Exponent sums: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(p.relators().len(), p.generator_count());
    for (i, word) in p.relators().iter().enumerate() {
        for letter in word {
            let delta = if letter.inverse {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            m[(i, letter.generator)] += delta;
        }
    }
    m
}

/// Abelianization together with the Smith form it was computed from.
pub fn abelianization_with_smith(
    p: &Presentation,
) -> (AbelianInvariants, IntegerMatrix, SmithForm) {
    let m = relation_matrix(p);
    let smith = smith_normal_form(&m);
    let inv = AbelianInvariants::from_smith(&smith, p.generator_count());
    (inv, m, smith)
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    abelianization_with_smith(p).0
}
