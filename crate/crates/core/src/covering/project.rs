use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Flat, Hyperplane, QVector};

use super::assignment::PointAssignment;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedAssignment {
    /// Every point projected into h, parts renumbered by `part_map`.
    pub assignment: PointAssignment<QVector>,
    /// Projected center of each new part.
    pub centers: Vec<QVector>,
    /// New part of each old part (old part k at index k − 1).
    pub part_map: Vec<usize>,
    /// Indices of the points that already lay in h.
    pub restricted: Vec<usize>,
}

impl ProjectedAssignment {
    /// Only the points that were in h to begin with.
    pub fn restriction(&self) -> PointAssignment<QVector> {
        let points = self
            .restricted
            .iter()
            .map(|&i| self.assignment.points()[i].clone())
            .collect::<Vec<_>>();
        let parts = self
            .restricted
            .iter()
            .map(|&i| self.assignment.parts()[i])
            .collect();
        PointAssignment::from_parts_unchecked(points, parts)
    }
}

/// Orthogonal projection of a spray-style assignment and its centers into
/// h. With `glue`, parts whose centers project to the same point are merged
/// and the parts renumbered in order of first appearance.
pub fn project_assignment(
    a: &PointAssignment<QVector>,
    centers: &[QVector],
    h: &Hyperplane,
    glue: bool,
) -> Result<ProjectedAssignment> {
    if centers.len() < a.part_count() {
        return Err(Error::DimensionMismatch {
            expected: a.part_count(),
            got: centers.len(),
        });
    }
    let d = h.normal().dim();
    for x in a.points().iter().chain(centers) {
        if x.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: x.dim(),
            });
        }
    }
    let projected: Vec<QVector> = centers.iter().map(|c| h.project(c)).collect();
    let mut new_centers: Vec<QVector> = Vec::new();
    let mut part_map = Vec::with_capacity(centers.len());
    for c in &projected {
        let slot = if glue {
            new_centers.iter().position(|x| x == c)
        } else {
            None
        };
        match slot {
            Some(k) => part_map.push(k + 1),
            None => {
                new_centers.push(c.clone());
                part_map.push(new_centers.len());
            }
        }
    }
    let restricted = a
        .points()
        .iter()
        .enumerate()
        .filter(|(_, p)| h.contains(p))
        .map(|(i, _)| i)
        .collect();
    let points = a.points().iter().map(|p| h.project(p)).collect();
    let parts = a.parts().iter().map(|&k| part_map[k - 1]).collect();
    Ok(ProjectedAssignment {
        assignment: PointAssignment::from_parts_unchecked(points, parts),
        centers: new_centers,
        part_map,
        restricted,
    })
}
