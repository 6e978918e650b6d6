//! General-position and well-placed predicates.
//!
//! All checks enumerate subsets, so they are meant for desk-scale inputs.
//! Generators that grow a configuration one point at a time should use
//! [`IncrementalPosition`], which only checks subsets containing the newest
//! point.

use itertools::Itertools;
use serde::Serialize;

use super::affine::{affine_span, AffineSubspace, Flat, Hyperplane};
use super::matrix::QMatrix;
use super::vector::QVector;
use crate::error::{Error, Result};

fn independent(vs: &[&QVector]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let m = QMatrix::from_rows(vs.iter().map(|v| (*v).clone()).collect()).expect("equal dims");
    m.rank() == vs.len()
}

fn affinely_independent(ps: &[&QVector]) -> bool {
    match ps.split_first() {
        None => true,
        Some((first, rest)) => {
            let diffs: Vec<QVector> = rest.iter().map(|p| *p - *first).collect();
            independent(&diffs.iter().collect::<Vec<_>>())
        }
    }
}

fn check_dims(vs: &[QVector], d: usize) -> Result<()> {
    for v in vs {
        if v.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.dim(),
            });
        }
    }
    Ok(())
}

fn check_distinct(ps: &[QVector]) -> Result<()> {
    for (i, j) in (0..ps.len()).tuple_combinations() {
        if ps[i] == ps[j] {
            return Err(Error::DuplicatePoint(i, j));
        }
    }
    Ok(())
}

/// First subset of size `min(|vs|, d)` that is linearly dependent.
pub fn vectors_violation(vs: &[QVector], d: usize) -> Result<Option<Vec<usize>>> {
    check_dims(vs, d)?;
    if let Some(i) = vs.iter().position(QVector::is_zero) {
        return Err(Error::ZeroVector(i));
    }
    let k = vs.len().min(d);
    Ok((0..vs.len())
        .combinations(k)
        .find(|idx| !independent(&idx.iter().map(|&i| &vs[i]).collect::<Vec<_>>())))
}

/// Every subset of size at most `d` is linearly independent.
pub fn is_general_position_vectors(vs: &[QVector], d: usize) -> Result<bool> {
    Ok(vectors_violation(vs, d)?.is_none())
}

/// First subset of size `min(|ps|, dim+1)` that is affinely dependent.
pub fn points_violation(ps: &[QVector], ambient: &AffineSubspace) -> Result<Option<Vec<usize>>> {
    check_dims(ps, ambient.ambient_dim())?;
    if let Some(i) = ps.iter().position(|p| !ambient.contains(p)) {
        return Err(Error::PointOutsideAmbient(i));
    }
    check_distinct(ps)?;
    let k = ps.len().min(ambient.dim() + 1);
    Ok((0..ps.len())
        .combinations(k)
        .find(|idx| !affinely_independent(&idx.iter().map(|&i| &ps[i]).collect::<Vec<_>>())))
}

/// Every subset of size k+1 ≤ dim(ambient)+1 spans a k-dimensional flat.
pub fn is_general_position_points(ps: &[QVector], ambient: &AffineSubspace) -> Result<bool> {
    Ok(points_violation(ps, ambient)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellPlaced {
    pub well_placed: bool,
    /// The common hyperplane; present when it is unique (|ps| ≥ d).
    pub hyperplane: Option<Hyperplane>,
    /// Offending point indices when not well placed.
    pub violation: Option<Vec<usize>>,
}

/// The unique hyperplane containing a flat of codimension one.
pub fn hyperplane_of(flat: &AffineSubspace) -> Option<Hyperplane> {
    if flat.dim() + 1 != flat.ambient_dim() {
        return None;
    }
    let n = flat.normals().pop()?.normalized_leading();
    Some(
        Hyperplane::through(n, flat.base())
            .expect("nonzero normal")
            .normalized(),
    )
}

/// All points on one hyperplane H and in general position inside H.
pub fn is_well_placed(ps: &[QVector], d: usize) -> Result<WellPlaced> {
    check_dims(ps, d)?;
    check_distinct(ps)?;
    if ps.is_empty() {
        return Ok(WellPlaced {
            well_placed: true,
            hyperplane: None,
            violation: None,
        });
    }
    let span = affine_span(ps)?;
    if span.dim() == d {
        // not on any hyperplane; the first d+1 affinely independent points witness it
        let idx = (0..ps.len())
            .combinations(d + 1)
            .find(|idx| affinely_independent(&idx.iter().map(|&i| &ps[i]).collect::<Vec<_>>()))
            .expect("full-dimensional span has an independent (d+1)-subset");
        return Ok(WellPlaced {
            well_placed: false,
            hyperplane: None,
            violation: Some(idx),
        });
    }
    let hyperplane = hyperplane_of(&span);
    // General position inside a (d−1)-flat: subsets of size min(n, d).
    let k = ps.len().min(d);
    let violation = (0..ps.len())
        .combinations(k)
        .find(|idx| !affinely_independent(&idx.iter().map(|&i| &ps[i]).collect::<Vec<_>>()));
    Ok(WellPlaced {
        well_placed: violation.is_none(),
        hyperplane: if ps.len() >= d { hyperplane } else { None },
        violation,
    })
}

/// Grows a point set while maintaining general position in an ambient flat;
/// each insertion checks only the subsets that contain the new point.
#[derive(Clone, Debug)]
pub struct IncrementalPosition {
    ambient: AffineSubspace,
    points: Vec<QVector>,
}

impl IncrementalPosition {
    pub fn new(ambient: AffineSubspace) -> Self {
        IncrementalPosition {
            ambient,
            points: Vec::new(),
        }
    }

    pub fn points(&self) -> &[QVector] {
        &self.points
    }

    pub fn into_points(self) -> Vec<QVector> {
        self.points
    }

    /// Would adding `p` keep the set in general position?
    pub fn accepts(&self, p: &QVector) -> bool {
        if !self.ambient.contains(p) || self.points.contains(p) {
            return false;
        }
        let k = (self.points.len() + 1).min(self.ambient.dim() + 1);
        (0..self.points.len()).combinations(k - 1).all(|idx| {
            let mut sub: Vec<&QVector> = idx.iter().map(|&i| &self.points[i]).collect();
            sub.push(p);
            affinely_independent(&sub)
        })
    }

    /// Adds `p` if it keeps general position; reports whether it was added.
    pub fn push(&mut self, p: QVector) -> bool {
        let ok = self.accepts(&p);
        if ok {
            self.points.push(p);
        }
        ok
    }
}
