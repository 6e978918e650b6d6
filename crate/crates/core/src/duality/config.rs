use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::position::points_violation;
use crate::exact::rational::{self, Rational};
use crate::exact::{AffineSubspace, QMatrix, QVector};

/// d centers c₁..c_d on the base hyperplane x_d = 0, in general position
/// there, plus any number of extra centers on the same hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterConfig {
    d: usize,
    basis_centers: Vec<QVector>,
    extra_centers: Vec<QVector>,
    // p_i: the basis centers with the last coordinate dropped
    feet: Vec<QVector>,
    // inverse of the difference system used by Φ⁻¹
    diff_inverse: QMatrix,
}

#[derive(Serialize, Deserialize)]
struct RawConfig {
    d: usize,
    basis_centers: Vec<QVector>,
    #[serde(default)]
    extra_centers: Vec<QVector>,
}

impl Serialize for CenterConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawConfig {
            d: self.d,
            basis_centers: self.basis_centers.clone(),
            extra_centers: self.extra_centers.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CenterConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawConfig::deserialize(d)?;
        CenterConfig::new(raw.d, raw.basis_centers, raw.extra_centers)
            .map_err(serde::de::Error::custom)
    }
}

/// Accepts a point of ℚ^{d−1} or a point of ℚ^d with last coordinate 0.
pub(crate) fn on_base(d: usize, p: QVector) -> Result<QVector> {
    if p.dim() == d - 1 {
        return Ok(p.extended(rational::zero()));
    }
    if p.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: p.dim(),
        });
    }
    if !p.last().is_zero() {
        return Err(Error::NotOnBaseHyperplane);
    }
    Ok(p)
}

impl CenterConfig {
    pub fn new(d: usize, basis_centers: Vec<QVector>, extra_centers: Vec<QVector>) -> Result<Self> {
        if d < 2 {
            return Err(Error::Invalid("center configurations need d >= 2".into()));
        }
        if basis_centers.len() != d {
            return Err(Error::Invalid(format!(
                "expected {d} basis centers, got {}",
                basis_centers.len()
            )));
        }
        let basis_centers = basis_centers
            .into_iter()
            .map(|p| on_base(d, p))
            .collect::<Result<Vec<_>>>()?;
        let extra_centers = extra_centers
            .into_iter()
            .map(|p| on_base(d, p))
            .collect::<Result<Vec<_>>>()?;
        let all: Vec<QVector> = basis_centers
            .iter()
            .chain(&extra_centers)
            .cloned()
            .collect();
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                if all[i] == all[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        let feet: Vec<QVector> = basis_centers.iter().map(QVector::truncate_last).collect();
        if points_violation(&feet, &AffineSubspace::full(d - 1))?.is_some() {
            return Err(Error::CentersNotWellPlaced);
        }
        let two = rational::int(2);
        let rows = feet[1..]
            .iter()
            .map(|p| (p - &feet[0]).scale(&-two.clone()))
            .collect();
        let diff_inverse = QMatrix::from_rows(rows)?
            .inverse()
            .map_err(|_| Error::CentersNotWellPlaced)?;
        Ok(CenterConfig {
            d,
            basis_centers,
            extra_centers,
            feet,
            diff_inverse,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn basis_centers(&self) -> &[QVector] {
        &self.basis_centers
    }

    pub fn extra_centers(&self) -> &[QVector] {
        &self.extra_centers
    }

    /// p_i ∈ ℚ^{d−1}.
    pub fn feet(&self) -> &[QVector] {
        &self.feet
    }

    pub(crate) fn diff_inverse(&self) -> &QMatrix {
        &self.diff_inverse
    }

    /// The same basis with a different list of extra centers.
    pub fn with_extras(&self, extra_centers: Vec<QVector>) -> Result<Self> {
        CenterConfig::new(self.d, self.basis_centers.clone(), extra_centers)
    }
}

/// A point (base, √height_sq) of the open upper half-space ℍ^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HPoint {
    base: QVector,
    #[serde(with = "rational")]
    height_sq: Rational,
}

#[derive(Deserialize)]
struct RawHPoint {
    base: QVector,
    #[serde(with = "rational")]
    height_sq: Rational,
}

impl<'de> Deserialize<'de> for HPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawHPoint::deserialize(d)?;
        HPoint::new(raw.base, raw.height_sq).map_err(serde::de::Error::custom)
    }
}

impl HPoint {
    pub fn new(base: QVector, height_sq: Rational) -> Result<Self> {
        if !height_sq.is_positive() {
            return Err(Error::Invalid("height_sq must be positive".into()));
        }
        Ok(HPoint { base, height_sq })
    }

    pub fn base(&self) -> &QVector {
        &self.base
    }

    pub fn height_sq(&self) -> &Rational {
        &self.height_sq
    }

    /// ‖x − c‖² for a point c of the base hyperplane (given in ℚ^d).
    pub fn dist_sq_to_base_point(&self, c: &QVector) -> Rational {
        debug_assert!(c.last().is_zero());
        self.base.dist_sq(&c.truncate_last()) + &self.height_sq
    }
}

/// Φ(x) ∈ E^d: squared distances to the d basis centers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RadiiVector(pub QVector);

impl RadiiVector {
    pub fn r(&self) -> &QVector {
        &self.0
    }
}
