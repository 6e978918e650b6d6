use std::hash::Hash;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::duality::HPoint;
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::QVector;

/// An enumerated point list split into parts numbered 1, 2, …
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointAssignment<P> {
    points: Vec<P>,
    parts: Vec<usize>,
}

#[derive(Deserialize)]
struct RawAssignment<P> {
    points: Vec<P>,
    parts: Vec<usize>,
}

impl<'de, P: Deserialize<'de>> Deserialize<'de> for PointAssignment<P> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawAssignment::<P>::deserialize(d)?;
        PointAssignment::new(raw.points, raw.parts).map_err(serde::de::Error::custom)
    }
}

impl<P> PointAssignment<P> {
    /// `parts[i]` is the part (≥ 1) of `points[i]`; every part from 1 to the
    /// largest index must be used.
    pub fn new(points: Vec<P>, parts: Vec<usize>) -> Result<Self> {
        if points.len() != parts.len() {
            return Err(Error::DimensionMismatch {
                expected: points.len(),
                got: parts.len(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::Invalid("part indices start at 1".into()));
        }
        let n = parts.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; n];
        for &p in &parts {
            used[p - 1] = true;
        }
        if let Some(gap) = used.iter().position(|u| !u) {
            return Err(Error::Invalid(format!("part {} is empty", gap + 1)));
        }
        Ok(PointAssignment { points, parts })
    }

    pub fn empty() -> Self {
        PointAssignment {
            points: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub(crate) fn from_parts_unchecked(points: Vec<P>, parts: Vec<usize>) -> Self {
        PointAssignment { points, parts }
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    /// Part index (1-based) of every point.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn part_count(&self) -> usize {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// Points of part `k` (1-based), in enumeration order.
    pub fn part(&self, k: usize) -> impl Iterator<Item = &P> {
        self.points
            .iter()
            .zip(&self.parts)
            .filter(move |(_, &p)| p == k)
            .map(|(x, _)| x)
    }

    pub fn map_points<Q>(&self, f: impl FnMut(&P) -> Q) -> PointAssignment<Q> {
        PointAssignment {
            points: self.points.iter().map(f).collect(),
            parts: self.parts.clone(),
        }
    }
}

/// Side of the base hyperplane x_d = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// (base, ±√height_sq) with height_sq ≥ 0; points of the base hyperplane
/// are always stored on the upper side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LiftedPoint {
    pub base: QVector,
    #[serde(with = "rational")]
    pub height_sq: Rational,
    pub side: Side,
}

impl LiftedPoint {
    pub fn new(base: QVector, height_sq: Rational, side: Side) -> Result<Self> {
        if height_sq.is_negative() {
            return Err(Error::Invalid("height_sq must be nonnegative".into()));
        }
        let side = if height_sq.is_zero() {
            Side::Upper
        } else {
            side
        };
        Ok(LiftedPoint {
            base,
            height_sq,
            side,
        })
    }

    /// Mirror image through the base hyperplane.
    pub fn reflected(&self) -> LiftedPoint {
        let side = match (self.height_sq.is_zero(), self.side) {
            (true, _) | (false, Side::Lower) => Side::Upper,
            (false, Side::Upper) => Side::Lower,
        };
        LiftedPoint {
            side,
            ..self.clone()
        }
    }
}

impl From<HPoint> for LiftedPoint {
    fn from(x: HPoint) -> Self {
        LiftedPoint {
            base: x.base().clone(),
            height_sq: x.height_sq().clone(),
            side: Side::Upper,
        }
    }
}

/// Points whose squared distance to a center is an exact rational.
pub trait SprayPoint: Clone + Eq + Hash + Send + Sync {
    fn quadrance_to(&self, center: &QVector) -> Result<Rational>;
}

impl SprayPoint for QVector {
    fn quadrance_to(&self, center: &QVector) -> Result<Rational> {
        if center.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: center.dim(),
            });
        }
        Ok(self.dist_sq(center))
    }
}

fn base_center(base: &QVector, center: &QVector) -> Result<QVector> {
    if center.dim() != base.dim() + 1 {
        return Err(Error::DimensionMismatch {
            expected: base.dim() + 1,
            got: center.dim(),
        });
    }
    if !center.last().is_zero() {
        return Err(Error::NotOnBaseHyperplane);
    }
    Ok(center.truncate_last())
}

impl SprayPoint for HPoint {
    fn quadrance_to(&self, center: &QVector) -> Result<Rational> {
        let c = base_center(self.base(), center)?;
        Ok(self.base().dist_sq(&c) + self.height_sq())
    }
}

impl SprayPoint for LiftedPoint {
    fn quadrance_to(&self, center: &QVector) -> Result<Rational> {
        let c = base_center(&self.base, center)?;
        Ok(self.base.dist_sq(&c) + &self.height_sq)
    }
}
