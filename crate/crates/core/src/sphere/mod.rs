//! Spheres with signed quadrance and their intersection calculus.
//!
//! A sphere never stores a radius. The quadrance `q` is the squared radius,
//! with `q < 0` standing for the empty sphere and `q = 0` for a single point,
//! so every case split stays inside ℚ.

mod chain;
mod kernel;
mod mesh;
mod witness;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{AffineSubspace, Flat, QVector};

pub use chain::{enclose_from_dependent_center, intersect_chain, make_nondegenerate_chain};
pub use kernel::{common_intersection, intersect_pair, intersect_sphere_hyperplane};
pub use mesh::{mesh_of_family, MeshReport, SphereFamily, TupleEntry};
pub use witness::{independent_prefix, infinite_intersection_witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Empty,
    Point,
    PairOfPoints,
    Infinite,
}

impl Kind {
    pub fn is_finite(self) -> bool {
        self != Kind::Infinite
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// 𝕊(E; c, √q): points of the flat `ambient` at squared distance `quadrance`
/// from `center`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sphere {
    ambient: AffineSubspace,
    center: QVector,
    #[serde(with = "rational")]
    quadrance: Rational,
}

#[derive(Deserialize)]
struct RawSphere {
    ambient: Option<AffineSubspace>,
    center: QVector,
    #[serde(with = "rational")]
    quadrance: Rational,
}

impl<'de> Deserialize<'de> for Sphere {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSphere::deserialize(d)?;
        let ambient = raw
            .ambient
            .unwrap_or_else(|| AffineSubspace::full(raw.center.dim()));
        Sphere::new(ambient, raw.center, raw.quadrance).map_err(serde::de::Error::custom)
    }
}

impl Sphere {
    pub fn new(ambient: AffineSubspace, center: QVector, quadrance: Rational) -> Result<Self> {
        if !ambient.contains(&center) {
            return Err(Error::PointOutsideAmbient(0));
        }
        Ok(Sphere {
            ambient,
            center,
            quadrance,
        })
    }

    /// A sphere in the whole space ℚ^d.
    pub fn in_space(center: QVector, quadrance: Rational) -> Self {
        Sphere {
            ambient: AffineSubspace::full(center.dim()),
            center,
            quadrance,
        }
    }

    pub(crate) fn from_parts(
        ambient: AffineSubspace,
        center: QVector,
        quadrance: Rational,
    ) -> Self {
        debug_assert!(ambient.contains(&center));
        Sphere {
            ambient,
            center,
            quadrance,
        }
    }

    pub fn ambient(&self) -> &AffineSubspace {
        &self.ambient
    }

    pub fn center(&self) -> &QVector {
        &self.center
    }

    pub fn quadrance(&self) -> &Rational {
        &self.quadrance
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn classify(&self) -> Kind {
        if self.quadrance.is_negative() {
            Kind::Empty
        } else if self.quadrance.is_zero() {
            Kind::Point
        } else if self.ambient.dim() == 0 {
            // a positive radius inside a point flat has no points
            Kind::Empty
        } else if self.ambient.dim() == 1 {
            Kind::PairOfPoints
        } else {
            Kind::Infinite
        }
    }

    /// Exact membership of a rational point.
    pub fn contains(&self, x: &QVector) -> bool {
        self.ambient.contains(x) && x.dist_sq(&self.center) == self.quadrance
    }

    /// Exact membership of a point with one quadratic surd coordinate.
    pub fn contains_surd(&self, x: &SurdPoint) -> bool {
        x.in_flat(&self.ambient) && x.dist_sq_equals(&self.center, &self.quadrance)
    }

    /// The same sphere with a different quadrance.
    pub fn with_quadrance(&self, q: Rational) -> Sphere {
        Sphere {
            quadrance: q,
            ..self.clone()
        }
    }

    /// Sample points of the sphere of the form `center ± √σ·w` for the given
    /// rational directions `w` of the ambient.
    pub fn surd_points(&self, directions: &[QVector]) -> Vec<SurdPoint> {
        if !self.quadrance.is_positive() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for w in directions {
            if w.is_zero() || !self.ambient.contains_direction(w) {
                continue;
            }
            let sigma = &self.quadrance / w.norm_sq();
            for sign in [1, -1] {
                out.push(SurdPoint {
                    rational: self.center.clone(),
                    direction: w.scale(&rational::int(sign)),
                    sigma: sigma.clone(),
                });
            }
        }
        out
    }
}

/// The point `rational + √sigma · direction`, with `sigma ≥ 0` rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdPoint {
    pub rational: QVector,
    pub direction: QVector,
    pub sigma: Rational,
}

impl SurdPoint {
    pub fn exact(p: QVector) -> Self {
        let d = p.dim();
        SurdPoint {
            rational: p,
            direction: QVector::zeros(d),
            sigma: rational::zero(),
        }
    }

    /// `‖x − e‖² = a + b·√σ`; returns `(a, b)`.
    pub fn dist_sq_parts(&self, e: &QVector) -> (Rational, Rational) {
        let off = &self.rational - e;
        let a = off.norm_sq() + &self.sigma * self.direction.norm_sq();
        let b = rational::int(2) * self.direction.dot(&off);
        (a, b)
    }

    pub fn dist_sq_equals(&self, e: &QVector, q: &Rational) -> bool {
        let (a, b) = self.dist_sq_parts(e);
        if b.is_zero() {
            return &a == q;
        }
        // a + b√σ = q forces √σ = (q − a)/b, which must then be an exact root
        let root = (q - &a) / &b;
        !root.is_negative() && &root * &root == self.sigma
    }

    pub fn in_flat(&self, f: &AffineSubspace) -> bool {
        f.contains(&self.rational)
            && (self.sigma.is_zero() || f.contains_direction(&self.direction))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};
    use crate::qv;

    #[test]
    fn classify_examples() {
        assert_eq!(Sphere::in_space(qv![0, 0], int(-1)).classify(), Kind::Empty);
        assert_eq!(Sphere::in_space(qv![0, 0], int(0)).classify(), Kind::Point);
        let line = AffineSubspace::new(qv![0, 0, 0], vec![qv![1, 2, 3]]).unwrap();
        let s = Sphere::new(line, qv![0, 0, 0], ratio(1, 2)).unwrap();
        assert_eq!(s.classify(), Kind::PairOfPoints);
        assert_eq!(
            Sphere::in_space(qv![0, 0], int(1)).classify(),
            Kind::Infinite
        );
    }

    #[test]
    fn json_defaults_to_full_space() {
        let s: Sphere =
            serde_json::from_str(r#"{"center": ["0", "1/2"], "quadrance": "3"}"#).unwrap();
        assert_eq!(
            s,
            Sphere::in_space(QVector::new(vec![int(0), ratio(1, 2)]), int(3))
        );
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.starts_with(r#"{"ambient":{"base":["0","0"],"directions""#));
        assert_eq!(serde_json::from_str::<Sphere>(&text).unwrap(), s);
    }

    #[test]
    fn surd_membership() {
        // (1/2, 1/2, ±√(1/2)) is at squared distance 5 from (2, −1, 0)
        let p = SurdPoint {
            rational: QVector::new(vec![ratio(1, 2), ratio(1, 2), int(0)]),
            direction: qv![0, 0, 1],
            sigma: ratio(1, 2),
        };
        assert!(p.dist_sq_equals(&qv![2, -1, 0], &int(5)));
        assert!(!p.dist_sq_equals(&qv![2, -1, 1], &int(5)));
        // a rational root is recognised: (0,0) + √4·(1,0) is (2,0)
        let q = SurdPoint {
            rational: qv![0, 0],
            direction: qv![1, 0],
            sigma: int(4),
        };
        assert!(q.dist_sq_equals(&qv![3, 0], &int(1)));
    }
}
