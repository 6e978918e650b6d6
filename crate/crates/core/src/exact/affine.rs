use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::QMatrix;
use super::rational::{self, Rational};
use super::vector::QVector;
use crate::error::{Error, Result};

/// Something points can be orthogonally projected onto.
pub trait Flat {
    fn ambient_dim(&self) -> usize;
    fn contains(&self, x: &QVector) -> bool;
    /// The closest point of the flat to `x`.
    fn project(&self, x: &QVector) -> QVector;
}

/// `base + Span(directions)` with independent directions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AffineSubspace {
    base: QVector,
    directions: Vec<QVector>,
}

#[derive(Deserialize)]
struct RawAffine {
    base: QVector,
    #[serde(default)]
    directions: Vec<QVector>,
}

impl<'de> Deserialize<'de> for AffineSubspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawAffine::deserialize(d)?;
        AffineSubspace::new(raw.base, raw.directions).map_err(serde::de::Error::custom)
    }
}

impl AffineSubspace {
    pub fn new(base: QVector, directions: Vec<QVector>) -> Result<Self> {
        for v in &directions {
            if v.dim() != base.dim() {
                return Err(Error::DimensionMismatch {
                    expected: base.dim(),
                    got: v.dim(),
                });
            }
        }
        if !directions.is_empty()
            && QMatrix::from_rows(directions.clone())?.rank() != directions.len()
        {
            return Err(Error::DependentDirections);
        }
        Ok(AffineSubspace { base, directions })
    }

    /// All of ℚ^d with the standard basis as directions.
    pub fn full(d: usize) -> Self {
        AffineSubspace {
            base: QVector::zeros(d),
            directions: (0..d).map(|i| QVector::basis(d, i)).collect(),
        }
    }

    pub fn point(p: QVector) -> Self {
        AffineSubspace {
            base: p,
            directions: Vec::new(),
        }
    }

    pub fn base(&self) -> &QVector {
        &self.base
    }

    pub fn directions(&self) -> &[QVector] {
        &self.directions
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.base.dim()
    }

    /// Coordinates `a` with `Σ aᵢ·directionsᵢ` the projection of `v` onto the
    /// direction space (solves the Gram system).
    fn direction_coords(&self, v: &QVector) -> QVector {
        let k = self.dim();
        let gram = QMatrix::from_rows(
            (0..k)
                .map(|i| {
                    QVector::new(
                        (0..k)
                            .map(|j| self.directions[i].dot(&self.directions[j]))
                            .collect(),
                    )
                })
                .collect(),
        )
        .expect("square");
        let rhs = QVector::new(self.directions.iter().map(|w| w.dot(v)).collect());
        gram.solve(&rhs)
            .expect("Gram matrix of independent directions is invertible")
            .particular()
            .clone()
    }

    /// Orthogonal projection of a vector onto the direction space.
    pub fn project_direction(&self, v: &QVector) -> QVector {
        if self.is_full() {
            return v.clone();
        }
        let a = self.direction_coords(v);
        self.combine(&a)
    }

    fn combine(&self, a: &QVector) -> QVector {
        let mut out = QVector::zeros(self.base.dim());
        for (ai, w) in a.coords().iter().zip(&self.directions) {
            out = out.add_scaled(ai, w);
        }
        out
    }

    /// Is `v` in the direction space?
    pub fn contains_direction(&self, v: &QVector) -> bool {
        self.project_direction(v) == *v
    }

    /// Normals spanning the orthogonal complement of the direction space.
    pub fn normals(&self) -> Vec<QVector> {
        if self.directions.is_empty() {
            return (0..self.base.dim())
                .map(|i| QVector::basis(self.base.dim(), i))
                .collect();
        }
        QMatrix::from_rows(self.directions.clone())
            .expect("rectangular")
            .null_space()
    }

    /// Intersection with a hyperplane that cuts this flat in a flat of one
    /// lower dimension.
    pub fn cut(&self, h: &Hyperplane) -> Result<AffineSubspace> {
        if h.normal.dim() != self.base.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.base.dim(),
                got: h.normal.dim(),
            });
        }
        let coeffs = QVector::new(self.directions.iter().map(|w| h.normal.dot(w)).collect());
        if coeffs.is_zero() {
            return Err(Error::NotAHyperplaneOfAmbient);
        }
        // base + Σ aᵢwᵢ lies on h iff coeffs·a = offset − n·base
        let gap = &h.offset - h.normal.dot(&self.base);
        let row = QMatrix::from_rows(vec![coeffs]).expect("one row");
        let sol = row
            .solve(&QVector::new(vec![gap]))
            .expect("nonzero row is consistent");
        let base = &self.base + &self.combine(sol.particular());
        let directions = row.null_space().iter().map(|a| self.combine(a)).collect();
        AffineSubspace::new(base, directions)
    }

    /// Re-bases at `p`, which must lie in the flat.
    pub fn with_base(&self, p: QVector) -> Result<AffineSubspace> {
        if !self.contains(&p) {
            return Err(Error::PointOutsideAmbient(0));
        }
        Ok(AffineSubspace {
            base: p,
            directions: self.directions.clone(),
        })
    }

    /// Same point set, regardless of base and direction basis.
    pub fn same_set(&self, other: &AffineSubspace) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() == other.dim()
            && self.contains(&other.base)
            && other.directions.iter().all(|w| self.contains_direction(w))
    }

    /// Are the direction spaces orthogonal?
    pub fn is_orthogonal_to(&self, other: &AffineSubspace) -> bool {
        self.directions
            .iter()
            .all(|a| other.directions.iter().all(|b| a.dot(b).is_zero()))
    }

    /// Unique common point when the direction spaces are complementary.
    pub fn intersection_point(&self, other: &AffineSubspace) -> Option<QVector> {
        // base₁ + Σaᵢwᵢ = base₂ + Σbⱼw'ⱼ
        let mut cols: Vec<QVector> = self.directions.clone();
        cols.extend(other.directions.iter().map(|w| -w));
        if cols.is_empty() {
            return (self.base == other.base).then(|| self.base.clone());
        }
        let m = QMatrix::from_columns(&cols).ok()?;
        match m.solve(&(&other.base - &self.base)).ok()? {
            super::LinearSolution::Unique(ab) => {
                let a = QVector::new(ab.coords()[..self.dim()].to_vec());
                Some(&self.base + &self.combine(&a))
            }
            _ => None,
        }
    }
}

impl Flat for AffineSubspace {
    fn ambient_dim(&self) -> usize {
        self.base.dim()
    }

    fn contains(&self, x: &QVector) -> bool {
        x.dim() == self.base.dim() && self.contains_direction(&(x - &self.base))
    }

    fn project(&self, x: &QVector) -> QVector {
        &self.base + &self.project_direction(&(x - &self.base))
    }
}

/// `{x : normal·x = offset}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Hyperplane {
    normal: QVector,
    #[serde(with = "rational")]
    offset: Rational,
}

#[derive(Deserialize)]
struct RawHyperplane {
    normal: QVector,
    #[serde(with = "rational")]
    offset: Rational,
}

impl<'de> Deserialize<'de> for Hyperplane {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawHyperplane::deserialize(d)?;
        Hyperplane::new(raw.normal, raw.offset).map_err(serde::de::Error::custom)
    }
}

impl Hyperplane {
    pub fn new(normal: QVector, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroVector(0));
        }
        Ok(Hyperplane { normal, offset })
    }

    /// H_u(p): orthogonal to `u` through `p`.
    pub fn through(u: QVector, p: &QVector) -> Result<Self> {
        let offset = u.dot(p);
        Self::new(u, offset)
    }

    /// `{x : x_i = value}` (0-based axis).
    pub fn axis(d: usize, i: usize, value: Rational) -> Self {
        Hyperplane {
            normal: QVector::basis(d, i),
            offset: value,
        }
    }

    pub fn normal(&self) -> &QVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal·x − offset`; zero exactly on the hyperplane.
    pub fn eval(&self, x: &QVector) -> Rational {
        self.normal.dot(x) - &self.offset
    }

    /// Squared distance from `x`.
    pub fn dist_sq(&self, x: &QVector) -> Rational {
        let e = self.eval(x);
        &e * &e / self.normal.norm_sq()
    }

    /// Scaled so the first nonzero normal coordinate is 1.
    pub fn normalized(&self) -> Hyperplane {
        let lead = self
            .normal
            .coords()
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero normal")
            .recip();
        Hyperplane {
            normal: self.normal.scale(&lead),
            offset: &self.offset * &lead,
        }
    }

    pub fn as_subspace(&self) -> AffineSubspace {
        AffineSubspace::full(self.normal.dim())
            .cut(self)
            .expect("a hyperplane cuts the full space")
    }

    /// Same point set (normals parallel and offsets consistent).
    pub fn same_as(&self, other: &Hyperplane) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Flat for Hyperplane {
    fn ambient_dim(&self) -> usize {
        self.normal.dim()
    }

    fn contains(&self, x: &QVector) -> bool {
        self.eval(x).is_zero()
    }

    fn project(&self, x: &QVector) -> QVector {
        let lambda = -self.eval(x) / self.normal.norm_sq();
        x.add_scaled(&lambda, &self.normal)
    }
}

/// `p₁ + Span{q − p₁}`, with an independent direction basis extracted from
/// the differences.
pub fn affine_span(ps: &[QVector]) -> Result<AffineSubspace> {
    let first = ps.first().ok_or(Error::EmptyInput)?;
    for p in ps {
        if p.dim() != first.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                got: p.dim(),
            });
        }
    }
    let mut directions: Vec<QVector> = Vec::new();
    for q in &ps[1..] {
        let v = q - first;
        if v.is_zero() {
            continue;
        }
        let mut trial = directions.clone();
        trial.push(v);
        if QMatrix::from_rows(trial.clone())?.rank() == trial.len() {
            directions = trial;
        }
    }
    AffineSubspace::new(first.clone(), directions)
}
