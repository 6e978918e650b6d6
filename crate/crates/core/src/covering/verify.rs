use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::QVector;

use super::assignment::{PointAssignment, SprayPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    /// Groups by the offset uᵢ·p.
    Hyperplane,
    /// Groups by the quadrance ‖p − cᵢ‖².
    Spray,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartReport {
    pub part: usize,
    pub point_count: usize,
    pub max_multiplicity: usize,
    /// multiplicity → number of groups with that many points
    pub histogram: BTreeMap<usize, usize>,
    /// Offset or quadrance of the largest group, smallest value on ties.
    #[serde(
        with = "rational::opt",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub worst: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub kind: CoverKind,
    pub parts: Vec<PartReport>,
}

impl CoverReport {
    pub fn max_multiplicity(&self) -> usize {
        self.parts
            .iter()
            .map(|p| p.max_multiplicity)
            .max()
            .unwrap_or(0)
    }

    /// True when every part meets each of its level sets at most `t` times.
    pub fn within(&self, t: usize) -> bool {
        self.max_multiplicity() <= t
    }

    pub fn part(&self, k: usize) -> Option<&PartReport> {
        self.parts.get(k.checked_sub(1)?)
    }
}

fn part_report(part: usize, keys: Vec<Rational>) -> PartReport {
    let mut groups: HashMap<Rational, usize> = HashMap::new();
    for k in keys {
        *groups.entry(k).or_default() += 1;
    }
    let mut histogram = BTreeMap::new();
    let mut worst: Option<(usize, Rational)> = None;
    let mut point_count = 0;
    for (key, n) in groups {
        point_count += n;
        *histogram.entry(n).or_default() += 1;
        let better = match &worst {
            None => true,
            Some((m, w)) => n > *m || (n == *m && key < *w),
        };
        if better {
            worst = Some((n, key));
        }
    }
    PartReport {
        part,
        point_count,
        max_multiplicity: worst.as_ref().map_or(0, |w| w.0),
        histogram,
        worst: worst.map(|w| w.1),
    }
}

fn distinct_by_part<P: SprayPoint>(a: &PointAssignment<P>, n: usize) -> Vec<Vec<&P>> {
    let mut by_part: Vec<Vec<&P>> = vec![Vec::new(); n];
    let mut seen: Vec<HashSet<&P>> = vec![HashSet::new(); n];
    for (p, &k) in a.points().iter().zip(a.parts()) {
        if seen[k - 1].insert(p) {
            by_part[k - 1].push(p);
        }
    }
    by_part
}

/// Audits how many points of each part lie on one hyperplane orthogonal to
/// the part's direction. Repeated points count once.
pub fn verify_hyperplane_cover(
    a: &PointAssignment<QVector>,
    dirs: &[QVector],
) -> Result<CoverReport> {
    let n = a.part_count().max(dirs.len());
    if dirs.len() < a.part_count() {
        return Err(Error::DimensionMismatch {
            expected: a.part_count(),
            got: dirs.len(),
        });
    }
    for (i, u) in dirs.iter().enumerate() {
        if u.is_zero() {
            return Err(Error::ZeroVector(i));
        }
    }
    let by_part = distinct_by_part(a, n);
    let parts = by_part
        .into_par_iter()
        .enumerate()
        .map(|(i, pts)| {
            let keys = pts
                .iter()
                .map(|p| {
                    if p.dim() != dirs[i].dim() {
                        return Err(Error::DimensionMismatch {
                            expected: dirs[i].dim(),
                            got: p.dim(),
                        });
                    }
                    Ok(dirs[i].dot(p))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(part_report(i + 1, keys))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoverReport {
        kind: CoverKind::Hyperplane,
        parts,
    })
}

/// Audits how many points of each part lie on one sphere around the part's
/// center.
pub fn verify_spray_cover<P: SprayPoint>(
    a: &PointAssignment<P>,
    centers: &[QVector],
) -> Result<CoverReport> {
    if centers.len() < a.part_count() {
        return Err(Error::DimensionMismatch {
            expected: a.part_count(),
            got: centers.len(),
        });
    }
    let by_part = distinct_by_part(a, centers.len());
    let parts = by_part
        .into_par_iter()
        .enumerate()
        .map(|(i, pts)| {
            let keys = pts
                .iter()
                .map(|p| p.quadrance_to(&centers[i]))
                .collect::<Result<Vec<_>>>()?;
            Ok(part_report(i + 1, keys))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoverReport {
        kind: CoverKind::Spray,
        parts,
    })
}
