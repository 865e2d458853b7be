//! Combinatorial signatures of finite-type 2-orbifolds.
//!
//! A signature records the underlying surface (orientability, genus,
//! punctures, boundary circles) together with the singular data: cone points
//! in the interior and corner reflectors on mirror boundary circles.
//!
//! Signatures are always held in canonical form, so structural equality is
//! orbifold equality at the level of signatures.

use std::fmt;
use std::str::FromStr;

use crate::parse::{self, ParseError};
use crate::rational::ExactRational;

/// A boundary circle of the underlying surface.
///
/// `Manifold` circles carry no singular set. `Mirror` circles are reflector
/// lines whose corner reflectors are listed in cyclic order.
///
/// The derived ordering puts manifold circles first and orders mirror
/// circles by their corner sequences, which is the canonical boundary order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryCircle {
    Manifold,
    Mirror { corners: Vec<u32> },
}

impl BoundaryCircle {
    pub fn mirror(corners: impl Into<Vec<u32>>) -> Self {
        let mut circle = BoundaryCircle::Mirror {
            corners: corners.into(),
        };
        circle.canonicalize();
        circle
    }

    pub fn is_mirror(&self) -> bool {
        matches!(self, BoundaryCircle::Mirror { .. })
    }

    pub fn corners(&self) -> &[u32] {
        match self {
            BoundaryCircle::Manifold => &[],
            BoundaryCircle::Mirror { corners } => corners,
        }
    }

    /// Rotates the corner sequence to its lexicographically minimal rotation.
    fn canonicalize(&mut self) {
        if let BoundaryCircle::Mirror { corners } = self {
            *corners = minimal_rotation(corners);
        }
    }
}

impl fmt::Display for BoundaryCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryCircle::Manifold => f.write_str("m"),
            BoundaryCircle::Mirror { corners } => {
                f.write_str("r(")?;
                write_list(f, corners)?;
                f.write_str(")")
            }
        }
    }
}

fn minimal_rotation(seq: &[u32]) -> Vec<u32> {
    (0..seq.len().max(1))
        .map(|k| {
            seq.iter()
                .cycle()
                .skip(k)
                .take(seq.len())
                .copied()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[u32]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("cone order {0} is less than 2")]
    ConeOrder(u32),
    #[error("corner order {0} is less than 2")]
    CornerOrder(u32),
    #[error("a non-orientable surface needs at least one crosscap (genus >= 1)")]
    NonOrientableGenusZero,
}

/// A finite-type 2-orbifold.
///
/// `genus` is the orientable genus when `orientable` is set and the number
/// of crosscaps otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    orientable: bool,
    genus: u32,
    punctures: u32,
    boundary: Vec<BoundaryCircle>,
    cones: Vec<u32>,
}

impl Signature {
    /// Validates and canonicalizes.
    pub fn new(
        orientable: bool,
        genus: u32,
        punctures: u32,
        boundary: Vec<BoundaryCircle>,
        cones: Vec<u32>,
    ) -> Result<Self, SignatureError> {
        if !orientable && genus == 0 {
            return Err(SignatureError::NonOrientableGenusZero);
        }
        if let Some(&p) = cones.iter().find(|&&p| p < 2) {
            return Err(SignatureError::ConeOrder(p));
        }
        if let Some(&n) = boundary.iter().flat_map(|c| c.corners()).find(|&&n| n < 2) {
            return Err(SignatureError::CornerOrder(n));
        }
        let mut sig = Signature {
            orientable,
            genus,
            punctures,
            boundary,
            cones,
        };
        sig.canonicalize();
        Ok(sig)
    }

    /// A closed orientable surface of genus `genus` with cone points.
    pub fn closed_orientable(genus: u32, cones: Vec<u32>) -> Result<Self, SignatureError> {
        Signature::new(true, genus, 0, Vec::new(), cones)
    }

    fn canonicalize(&mut self) {
        self.cones.sort_unstable();
        for circle in &mut self.boundary {
            circle.canonicalize();
        }
        self.boundary.sort();
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn boundary(&self) -> &[BoundaryCircle] {
        &self.boundary
    }

    /// Cone orders, ascending.
    pub fn cones(&self) -> &[u32] {
        &self.cones
    }

    pub fn manifold_circles(&self) -> usize {
        self.boundary.iter().filter(|c| !c.is_mirror()).count()
    }

    pub fn mirror_circles(&self) -> usize {
        self.boundary.iter().filter(|c| c.is_mirror()).count()
    }

    /// All corner reflector orders, circle by circle.
    pub fn corners(&self) -> impl Iterator<Item = u32> + '_ {
        self.boundary
            .iter()
            .flat_map(|c| c.corners().iter().copied())
    }

    /// No boundary circles of either kind and no punctures.
    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty() && self.punctures == 0
    }

    /// Has punctures or manifold boundary circles.
    pub fn has_manifold_ends(&self) -> bool {
        self.punctures > 0 || self.manifold_circles() > 0
    }

    /// Closed, orientable and with cone points as its only singularities.
    pub fn is_reduced(&self) -> bool {
        self.orientable && self.is_closed()
    }

    /// Euler characteristic of the underlying surface with punctures and
    /// boundary circles removed.
    pub fn underlying_euler(&self) -> i64 {
        let closed = if self.orientable {
            2 - 2 * i64::from(self.genus)
        } else {
            2 - i64::from(self.genus)
        };
        closed - self.boundary.len() as i64 - i64::from(self.punctures)
    }

    /// The orbifold Euler characteristic.
    pub fn orbifold_euler(&self) -> ExactRational {
        self.orbifold_euler_fixed_width()
            .unwrap_or_else(|| self.orbifold_euler_big())
    }

    // Common-denominator evaluation: with L the lcm of all cone and corner
    // orders, 2L * chi is an integer. `None` on overflow.
    fn orbifold_euler_fixed_width(&self) -> Option<ExactRational> {
        let mut orders = self
            .cones
            .iter()
            .chain(self.boundary.iter().flat_map(|c| c.corners()));
        let lcm = orders.try_fold(1i128, |acc, &p| {
            let p = i128::from(p);
            (acc / num_integer::gcd(acc, p)).checked_mul(p)
        })?;
        let denom = lcm.checked_mul(2)?;
        let mut numer = i128::from(self.underlying_euler()).checked_mul(denom)?;
        for &p in &self.cones {
            numer = numer.checked_sub(denom - denom / i128::from(p))?;
        }
        for n in self.corners() {
            numer = numer.checked_sub(lcm - lcm / i128::from(n))?;
        }
        Some(ExactRational::from_i128_ratio(numer, denom))
    }

    fn orbifold_euler_big(&self) -> ExactRational {
        let cone_defect = self.cones.iter().fold(ExactRational::zero(), |acc, &p| {
            acc + ExactRational::defect(p)
        });
        let corner_defect = self.corners().fold(ExactRational::zero(), |acc, n| {
            acc + ExactRational::defect(n)
        });
        ExactRational::from_integer(self.underlying_euler())
            - cone_defect
            - corner_defect * ExactRational::new(1, 2)
    }

    /// Least common multiple of the cone orders (1 when there are none).
    pub fn cone_lcm(&self) -> u64 {
        self.cones
            .iter()
            .fold(1u64, |acc, &p| num_integer::lcm(acc, u64::from(p)))
    }

    // Builders used by the reduction transforms; inputs are already valid so
    // only canonicalization is needed.
    pub(crate) fn from_parts(
        orientable: bool,
        genus: u32,
        punctures: u32,
        boundary: Vec<BoundaryCircle>,
        cones: Vec<u32>,
    ) -> Self {
        let mut sig = Signature {
            orientable,
            genus,
            punctures,
            boundary,
            cones,
        };
        sig.canonicalize();
        sig
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};g={}",
            if self.orientable { 'O' } else { 'N' },
            self.genus
        )?;
        if self.punctures > 0 {
            write!(f, ";pun={}", self.punctures)?;
        }
        if !self.cones.is_empty() {
            f.write_str(";cones=")?;
            write_list(f, &self.cones)?;
        }
        if !self.boundary.is_empty() {
            f.write_str(";bdry=")?;
            for (i, circle) in self.boundary.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{circle}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_signature(s)
    }
}

impl serde::Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Signature {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical text of a signature.
pub fn format_signature(sig: &Signature) -> String {
    sig.to_string()
}
