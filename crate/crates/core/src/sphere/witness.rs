use super::chain::{enclose_from_dependent_center, make_nondegenerate_chain};
use super::Sphere;
use crate::error::{Error, Result};
use crate::exact::position::points_violation;
use crate::exact::rational;
use crate::exact::{affine_span, AffineSubspace, QVector};

/// d+1 spheres centered at the given points of ℚ^d whose common
/// intersection is infinite.
///
/// With K the affine span of the points and k = dim K, a chain on k+1
/// independent centers is made nondegenerate and the remaining spheres
/// enclose it. The chain sphere has dimension d − k, so this only works for
/// k ≤ d − 2; when k = d − 1 any d independent centers already force a finite
/// intersection and the result is [`Error::WitnessUnsatisfiable`].
pub fn infinite_intersection_witness(centers: &[QVector]) -> Result<Vec<Sphere>> {
    let first = centers.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    if d < 2 {
        return Err(Error::Invalid("witness needs dimension at least 2".into()));
    }
    if centers.len() != d + 1 {
        return Err(Error::Invalid(format!(
            "witness needs exactly d + 1 = {} centers, got {}",
            d + 1,
            centers.len()
        )));
    }
    if points_violation(centers, &AffineSubspace::full(d))?.is_none() {
        return Err(Error::PointsActuallyInGeneralPosition);
    }
    let span = affine_span(centers)?;
    let k = span.dim();
    if k + 2 > d {
        return Err(Error::WitnessUnsatisfiable {
            span_dim: k,
            dim: d,
        });
    }
    let chain_idx = independent_prefix(centers);
    debug_assert_eq!(chain_idx.len(), k + 1);
    let chain_centers: Vec<QVector> = chain_idx.iter().map(|&i| centers[i].clone()).collect();
    let seed = rational::one();
    let mut qs = make_nondegenerate_chain(&chain_centers, &seed)?;
    qs.push(seed);
    let chain: Vec<Sphere> = chain_centers
        .into_iter()
        .zip(qs)
        .map(|(c, q)| Sphere::in_space(c, q))
        .collect();
    centers
        .iter()
        .enumerate()
        .map(|(i, c)| match chain_idx.iter().position(|&j| j == i) {
            Some(pos) => Ok(chain[pos].clone()),
            None => enclose_from_dependent_center(&chain, c),
        })
        .collect()
}

/// Greedy maximal affinely independent subset, in input order.
pub fn independent_prefix(points: &[QVector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        let mut trial: Vec<QVector> = chosen.iter().map(|&j| points[j].clone()).collect();
        trial.push(points[i].clone());
        if affine_span(&trial)
            .map(|s| s.dim() + 1 == trial.len())
            .unwrap_or(false)
        {
            chosen.push(i);
        }
    }
    chosen
}
