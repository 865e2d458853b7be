use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::{is_transitive, Permutation};
use super::CoverError;
use crate::rational::ExactRational;
use crate::signature::Signature;

/// A degree-`n` permutation representation of the orbifold group certifying
/// a manifold cover.
///
/// Every cycle of a cone image having length exactly the cone order means
/// each local group acts freely on the fiber, so the cover has trivial local
/// groups: it is a closed surface of genus `cover_genus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWitness {
    pub degree: usize,
    pub handle_images: Vec<(Permutation, Permutation)>,
    pub cone_images: Vec<Permutation>,
    pub cover_euler: ExactRational,
    pub cover_genus: u64,
}

impl CoverWitness {
    /// Fills in the Euler bookkeeping for a set of images.
    pub fn new(
        sig: &Signature,
        handle_images: Vec<(Permutation, Permutation)>,
        cone_images: Vec<Permutation>,
    ) -> Self {
        let degree = cone_images
            .first()
            .or(handle_images.first().map(|(a, _)| a))
            .map_or(1, Permutation::degree);
        let cover_euler = sig.orbifold_euler().scale(degree as i64);
        let cover_genus = cover_euler
            .to_i64()
            .filter(|chi| chi % 2 == 0 && *chi <= 2)
            .map_or(0, |chi| ((2 - chi) / 2) as u64);
        CoverWitness {
            degree,
            handle_images,
            cone_images,
            cover_euler,
            cover_genus,
        }
    }

    fn all_images(&self) -> impl Iterator<Item = &Permutation> {
        self.handle_images
            .iter()
            .flat_map(|(a, b)| [a, b])
            .chain(&self.cone_images)
    }

    /// `[A_1,B_1]...[A_g,B_g] X_1...X_k`
    pub fn long_relator_image(&self) -> Permutation {
        let id = Permutation::identity(self.degree);
        let handles = self
            .handle_images
            .iter()
            .fold(id, |acc, (a, b)| acc.then(&Permutation::commutator(a, b)));
        self.cone_images.iter().fold(handles, |acc, x| acc.then(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WitnessFailure {
    #[error(
        "cone image X{index} has cycle type {cycle_type:?}, expected all cycles of length {order}"
    )]
    CycleType {
        index: usize,
        order: u32,
        cycle_type: Vec<usize>,
    },
    #[error("long relator evaluates to {0}, not the identity")]
    Relator(String),
    #[error("images generate an intransitive group")]
    Transitivity,
    #[error(
        "cover Euler characteristic {claimed} with genus {genus} does not match n*chi = {expected}"
    )]
    Euler {
        claimed: ExactRational,
        genus: u64,
        expected: ExactRational,
    },
}

/// Outcome of [`verify_witness`]: valid, or the first failed invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub failure: Option<WitnessFailure>,
}

impl WitnessVerdict {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for WitnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("valid"),
            Some(e) => write!(f, "invalid: {e}"),
        }
    }
}

/// Checks a witness independently of how it was found.
///
/// Invariants are checked in the order: cycle types, long relator,
/// transitivity, Euler characteristic.
pub fn verify_witness(sig: &Signature, w: &CoverWitness) -> Result<WitnessVerdict, CoverError> {
    if !sig.is_reduced() {
        return Err(CoverError::NotReduced(Box::new(sig.clone())));
    }
    if w.handle_images.len() != sig.genus() as usize || w.cone_images.len() != sig.cones().len() {
        return Err(CoverError::ShapeMismatch {
            handles: w.handle_images.len(),
            cones: w.cone_images.len(),
            signature: Box::new(sig.clone()),
        });
    }
    if w.degree == 0 {
        return Err(CoverError::DegreeMismatch {
            expected: 0,
            found: 0,
        });
    }
    if let Some(p) = w.all_images().find(|p| p.degree() != w.degree) {
        return Err(CoverError::DegreeMismatch {
            expected: w.degree,
            found: p.degree(),
        });
    }
    let fail = |f| Ok(WitnessVerdict { failure: Some(f) });

    for (index, (x, &order)) in w.cone_images.iter().zip(sig.cones()).enumerate() {
        if !x.has_uniform_cycles(order as usize) {
            return fail(WitnessFailure::CycleType {
                index: index + 1,
                order,
                cycle_type: x.cycle_type(),
            });
        }
    }
    let relator = w.long_relator_image();
    if !relator.is_identity() {
        return fail(WitnessFailure::Relator(relator.to_string()));
    }
    let gens: Vec<&Permutation> = w.all_images().collect();
    if !is_transitive(w.degree, &gens) {
        return fail(WitnessFailure::Transitivity);
    }
    let expected = sig.orbifold_euler().scale(w.degree as i64);
    let genus_euler = ExactRational::from_integer(2 - 2 * w.cover_genus as i64);
    if w.cover_euler != expected || genus_euler != expected {
        return fail(WitnessFailure::Euler {
            claimed: w.cover_euler.clone(),
            genus: w.cover_genus,
            expected,
        });
    }
    Ok(WitnessVerdict { failure: None })
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    degree: usize,
    handles: Vec<[Vec<Vec<u32>>; 2]>,
    cones: Vec<Vec<Vec<u32>>>,
    cover_euler: ExactRational,
    cover_genus: u64,
}

impl Serialize for CoverWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WitnessJson {
            degree: self.degree,
            handles: self
                .handle_images
                .iter()
                .map(|(a, b)| [a.nontrivial_cycles(), b.nontrivial_cycles()])
                .collect(),
            cones: self
                .cone_images
                .iter()
                .map(Permutation::nontrivial_cycles)
                .collect(),
            cover_euler: self.cover_euler.clone(),
            cover_genus: self.cover_genus,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoverWitness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = WitnessJson::deserialize(d)?;
        let n = raw.degree;
        let perm =
            |cycles: &[Vec<u32>]| Permutation::from_cycles(n, cycles).map_err(D::Error::custom);
        let handle_images = raw
            .handles
            .iter()
            .map(|[a, b]| Ok((perm(a)?, perm(b)?)))
            .collect::<Result<_, D::Error>>()?;
        let cone_images = raw
            .cones
            .iter()
            .map(|c| perm(c))
            .collect::<Result<_, _>>()?;
        Ok(CoverWitness {
            degree: n,
            handle_images,
            cone_images,
            cover_euler: raw.cover_euler,
            cover_genus: raw.cover_genus,
        })
    }
}
