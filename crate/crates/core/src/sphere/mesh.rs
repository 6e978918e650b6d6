use itertools::Itertools;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kernel::common_intersection;
use super::{Kind, Sphere};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::QVector;

/// Finitely many concentric spheres.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereFamily {
    pub center: QVector,
    #[serde(with = "rational::seq")]
    pub quadrances: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleEntry {
    pub family: usize,
    #[serde(with = "rational")]
    pub quadrance: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshReport {
    pub mesh: usize,
    /// A choice of r − 1 spheres from distinct families with infinite
    /// intersection; `None` only when no such choice exists (r = 2 in
    /// dimension 1).
    pub witness_tuple_for_r_minus_1: Option<Vec<TupleEntry>>,
}

fn validate(families: &[SphereFamily], d: usize) -> Result<()> {
    if families.len() < 2 {
        return Err(Error::Invalid("mesh needs at least two families".into()));
    }
    for (i, f) in families.iter().enumerate() {
        if f.center.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: f.center.dim(),
            });
        }
        if f.quadrances.is_empty() || f.quadrances.iter().any(|q| !q.is_positive()) {
            return Err(Error::Invalid(format!(
                "family {i} needs positive quadrances"
            )));
        }
        if f.quadrances.iter().duplicates().next().is_some() {
            return Err(Error::Invalid(format!("family {i} repeats a quadrance")));
        }
    }
    for (i, j) in (0..families.len()).tuple_combinations() {
        if families[i].center == families[j].center {
            return Err(Error::DuplicatePoint(i, j));
        }
    }
    Ok(())
}

fn tuple_spheres(families: &[SphereFamily], choice: &[(usize, usize)]) -> Vec<Sphere> {
    choice
        .iter()
        .map(|&(f, q)| {
            Sphere::in_space(
                families[f].center.clone(),
                families[f].quadrances[q].clone(),
            )
        })
        .collect()
}

fn is_infinite(spheres: &[Sphere]) -> bool {
    matches!(common_intersection(spheres), Ok(Some(s)) if s.classify() == Kind::Infinite)
}

/// First r-tuple (families in lexicographic order, then quadrance indices)
/// with infinite intersection.
fn first_infinite(families: &[SphereFamily], r: usize) -> Option<Vec<(usize, usize)>> {
    let tuples: Vec<Vec<(usize, usize)>> = (0..families.len())
        .combinations(r)
        .flat_map(|fs| {
            fs.iter()
                .map(|&f| (0..families[f].quadrances.len()).map(move |q| (f, q)))
                .multi_cartesian_product()
        })
        .collect();
    tuples
        .into_par_iter()
        .find_first(|choice| is_infinite(&tuple_spheres(families, choice)))
}

/// Least r ≥ 2 such that every r spheres from r distinct families have a
/// finite intersection, by exhaustive enumeration.
pub fn mesh_of_family(families: &[SphereFamily], d: usize) -> Result<MeshReport> {
    validate(families, d)?;
    let witness_of = |choice: Vec<(usize, usize)>| {
        choice
            .into_iter()
            .map(|(f, q)| TupleEntry {
                family: f,
                quadrance: families[f].quadrances[q].clone(),
            })
            .collect::<Vec<_>>()
    };
    let mut previous = (0..families.len())
        .flat_map(|f| (0..families[f].quadrances.len()).map(move |q| vec![(f, q)]))
        .find(|c| is_infinite(&tuple_spheres(families, c)));
    for r in 2..=families.len() {
        match first_infinite(families, r) {
            None => {
                return Ok(MeshReport {
                    mesh: r,
                    witness_tuple_for_r_minus_1: previous.map(witness_of),
                })
            }
            Some(t) => previous = Some(t),
        }
    }
    Err(Error::NoFiniteMesh(families.len()))
}
