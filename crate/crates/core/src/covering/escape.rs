use std::collections::{HashMap, HashSet};

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::QVector;

use super::assignment::PointAssignment;
use super::zset::ZSet;

/// Axis-aligned box of points lo + step·k with 0 ≤ kᵢ < countsᵢ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub lo: QVector,
    #[serde(with = "rational")]
    pub step: Rational,
    pub counts: Vec<usize>,
}

impl Grid {
    pub fn new(lo: QVector, step: Rational, counts: Vec<usize>) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::Invalid("grid step must be positive".into()));
        }
        if counts.len() != lo.dim() {
            return Err(Error::DimensionMismatch {
                expected: lo.dim(),
                got: counts.len(),
            });
        }
        Ok(Grid { lo, step, counts })
    }

    /// Integer cube {0, …, n−1}^d.
    pub fn cube(d: usize, n: usize) -> Self {
        Grid {
            lo: QVector::zeros(d),
            step: rational::one(),
            counts: vec![n; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn len(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, x: &QVector) -> bool {
        x.dim() == self.dim()
            && x.coords()
                .iter()
                .zip(self.lo.coords())
                .zip(&self.counts)
                .all(|((xi, li), &n)| {
                    let k = (xi - li) / &self.step;
                    k.is_integer()
                        && !k.is_negative()
                        && k.to_integer().to_usize().is_some_and(|k| k < n)
                })
    }

    /// Every grid point, last coordinate varying fastest.
    pub fn points(&self) -> Vec<QVector> {
        let mut out = vec![Vec::new()];
        for (li, &n) in self.lo.coords().iter().zip(&self.counts) {
            let mut next = Vec::with_capacity(out.len() * n);
            for prefix in &out {
                for k in 0..n {
                    let mut p = prefix.clone();
                    p.push(li + &self.step * rational::int(k as i64));
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(QVector::new).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum EscapeOutcome {
    Witness {
        /// Position of the translate in the input list.
        translate_index: usize,
        translate: QVector,
        /// Index of the uncovered point within the Z-set.
        z_index: usize,
        point: QVector,
    },
    Exhausted {
        translates_checked: usize,
    },
}

impl EscapeOutcome {
    pub fn is_witness(&self) -> bool {
        matches!(self, EscapeOutcome::Witness { .. })
    }
}

/// First translate p for which some p + z lies in the grid but in no part.
/// Points of p + Z outside the grid are ignored.
pub fn escape_search(
    a: &PointAssignment<QVector>,
    grid: &Grid,
    dirs: &[QVector],
    z: &ZSet,
    translates: &[QVector],
) -> Result<EscapeOutcome> {
    if dirs.len() < a.part_count() {
        return Err(Error::DimensionMismatch {
            expected: a.part_count(),
            got: dirs.len(),
        });
    }
    let covered: HashSet<&QVector> = a.points().iter().collect();
    let found = translates
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            z.points().iter().enumerate().find_map(|(j, zp)| {
                let q = p + zp;
                (grid.contains(&q) && !covered.contains(&q)).then_some((i, j, q))
            })
        })
        .find_first(Option::is_some)
        .flatten();
    match found {
        Some((i, j, q)) => {
            if !grid.contains(&q) || a.points().contains(&q) {
                return Err(Error::Internal(
                    "escape witness failed re-verification".into(),
                ));
            }
            Ok(EscapeOutcome::Witness {
                translate_index: i,
                translate: translates[i].clone(),
                z_index: j,
                point: q,
            })
        }
        None => Ok(EscapeOutcome::Exhausted {
            translates_checked: translates.len(),
        }),
    }
}

/// Independent check of a witness against the raw inputs.
pub fn witness_is_valid(
    outcome: &EscapeOutcome,
    a: &PointAssignment<QVector>,
    grid: &Grid,
    z: &ZSet,
    translates: &[QVector],
) -> bool {
    match outcome {
        EscapeOutcome::Exhausted { .. } => false,
        EscapeOutcome::Witness {
            translate_index,
            translate,
            z_index,
            point,
        } => {
            translates.get(*translate_index) == Some(translate)
                && z.points()
                    .get(*z_index)
                    .is_some_and(|zp| &(translate + zp) == point)
                && grid.contains(point)
                && a.points().iter().all(|x| x != point)
        }
    }
}

/// Greedy adversary: each point joins the first direction whose
/// hyperplane through it already holds fewer than t points of that part.
/// Returns the assignment, the directions actually used (part k uses entry
/// k − 1) and the points no part could take.
pub fn capacity_cover(
    points: &[QVector],
    dirs: &[QVector],
    t: usize,
) -> (PointAssignment<QVector>, Vec<QVector>, Vec<QVector>) {
    let mut load: Vec<HashMap<Rational, usize>> = vec![HashMap::new(); dirs.len()];
    let mut kept = Vec::new();
    let mut slots = Vec::new();
    let mut left = Vec::new();
    for p in points {
        let slot =
            (0..dirs.len()).find(|&k| load[k].get(&dirs[k].dot(p)).copied().unwrap_or(0) < t);
        match slot {
            Some(k) => {
                *load[k].entry(dirs[k].dot(p)).or_default() += 1;
                kept.push(p.clone());
                slots.push(k);
            }
            None => left.push(p.clone()),
        }
    }
    let mut used = slots.clone();
    used.sort_unstable();
    used.dedup();
    let parts = slots
        .into_iter()
        .map(|k| used.binary_search(&k).expect("present") + 1)
        .collect();
    let used_dirs = used.into_iter().map(|k| dirs[k].clone()).collect();
    (
        PointAssignment::from_parts_unchecked(kept, parts),
        used_dirs,
        left,
    )
}
