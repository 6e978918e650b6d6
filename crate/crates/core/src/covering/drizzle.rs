use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exact::position::vectors_violation;
use crate::exact::rational::{self, Rational};
use crate::exact::QVector;

use super::assignment::PointAssignment;

/// An endless (or explicitly finite) supply of directions u₁, u₂, … in
/// general position.
#[derive(Clone, Debug)]
pub enum DirectionStream {
    /// uₙ = (1, tₙ, tₙ², …, tₙ^{d−1}) with tₙ = n − 1.
    MomentCurve {
        d: usize,
    },
    Explicit {
        d: usize,
        dirs: Vec<QVector>,
    },
}

impl DirectionStream {
    pub fn moment_curve(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        Ok(DirectionStream::MomentCurve { d })
    }

    /// Validates the whole list with the general-position predicate.
    pub fn explicit(d: usize, dirs: Vec<QVector>) -> Result<Self> {
        if vectors_violation(&dirs, d)?.is_some() {
            return Err(Error::Invalid(
                "directions are not in general position".into(),
            ));
        }
        Ok(DirectionStream::Explicit { d, dirs })
    }

    pub fn d(&self) -> usize {
        match self {
            DirectionStream::MomentCurve { d } | DirectionStream::Explicit { d, .. } => *d,
        }
    }

    /// The n-th direction, 1-based.
    pub fn get(&self, n: usize) -> Result<QVector> {
        assert!(n >= 1, "direction indices start at 1");
        match self {
            DirectionStream::MomentCurve { d } => {
                Ok(moment_point(*d, &rational::int(n as i64 - 1)))
            }
            DirectionStream::Explicit { dirs, .. } => {
                dirs.get(n - 1).cloned().ok_or(Error::StreamExhausted(n))
            }
        }
    }

    pub fn prefix(&self, n: usize) -> Result<Vec<QVector>> {
        (1..=n).map(|k| self.get(k)).collect()
    }
}

pub fn moment_point(d: usize, t: &Rational) -> QVector {
    let mut c = Vec::with_capacity(d);
    let mut x = rational::one();
    for _ in 0..d {
        c.push(x.clone());
        x *= t;
    }
    QVector::new(c)
}

/// Largest part index the greedy assignment can reach on m points.
pub fn drizzle_index_bound(m: usize, d: usize) -> usize {
    m.saturating_sub(1) * d.saturating_sub(1) + 1
}

/// Each point joins the least part k whose hyperplane uₖ·x = uₖ·p holds no
/// earlier point of that part.
pub fn greedy_drizzle_assign(
    points: &[QVector],
    dirs: &DirectionStream,
) -> Result<(PointAssignment<QVector>, Vec<QVector>)> {
    let d = dirs.d();
    let mut seen: HashMap<&QVector, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: p.dim(),
            });
        }
        if let Some(j) = seen.insert(p, i) {
            return Err(Error::DuplicatePoint(j, i));
        }
    }

    let mut used: Vec<QVector> = Vec::new();
    let mut offsets: Vec<HashSet<Rational>> = Vec::new();
    let mut parts = Vec::with_capacity(points.len());
    for p in points {
        let mut k = 0;
        loop {
            if k == used.len() {
                used.push(dirs.get(k + 1)?);
                offsets.push(HashSet::new());
            }
            let o = used[k].dot(p);
            if !offsets[k].contains(&o) {
                offsets[k].insert(o);
                break;
            }
            k += 1;
        }
        parts.push(k + 1);
    }

    let top = parts.iter().copied().max().unwrap_or(0);
    if top > drizzle_index_bound(points.len(), d) {
        return Err(Error::Internal(format!(
            "greedy used part {top} on {} points",
            points.len()
        )));
    }
    Ok((
        PointAssignment::from_parts_unchecked(points.to_vec(), parts),
        used,
    ))
}
