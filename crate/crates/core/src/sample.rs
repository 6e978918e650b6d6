//! Seeded random instances for tests, examples and synthetic CLI runs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::duality::HPoint;
use crate::exact::rational::{self, Rational};
use crate::exact::{affine_span, AffineSubspace, IncrementalPosition, QVector};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Value range and denominator cap for generated rationals.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_abs: i64,
    pub max_den: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_abs: 10,
            max_den: 6,
        }
    }
}

/// Uniform numerator over a random denominator, so |q| ≤ max_abs.
pub fn rational<R: Rng>(rng: &mut R, b: Bounds) -> Rational {
    let den = rng.gen_range(1..=b.max_den);
    let num = rng.gen_range(-b.max_abs * den..=b.max_abs * den);
    rational::ratio(num, den)
}

/// 0 < q ≤ max_abs.
pub fn positive_rational<R: Rng>(rng: &mut R, b: Bounds) -> Rational {
    let den = rng.gen_range(1..=b.max_den);
    let num = rng.gen_range(1..=b.max_abs * den);
    rational::ratio(num, den)
}

pub fn vector<R: Rng>(rng: &mut R, d: usize, b: Bounds) -> QVector {
    QVector::new((0..d).map(|_| rational(rng, b)).collect())
}

pub fn distinct_points<R: Rng>(rng: &mut R, d: usize, n: usize, b: Bounds) -> Vec<QVector> {
    let mut seen = std::collections::HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = vector(rng, d, b);
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// n points of `ambient` in general position, by rejection.
pub fn general_position_in<R: Rng>(
    rng: &mut R,
    ambient: &AffineSubspace,
    n: usize,
    b: Bounds,
) -> Vec<QVector> {
    let mut inc = IncrementalPosition::new(ambient.clone());
    while inc.points().len() < n {
        let mut p = ambient.base().clone();
        for dir in ambient.directions() {
            p = p.add_scaled(&rational(rng, b), dir);
        }
        inc.push(p);
    }
    inc.into_points()
}

pub fn general_position_points<R: Rng>(rng: &mut R, d: usize, n: usize, b: Bounds) -> Vec<QVector> {
    general_position_in(rng, &AffineSubspace::full(d), n, b)
}

/// n points of the base hyperplane x_d = 0 in general position within it.
pub fn well_placed_points<R: Rng>(rng: &mut R, d: usize, n: usize, b: Bounds) -> Vec<QVector> {
    general_position_points(rng, d - 1, n, b)
        .into_iter()
        .map(|p| p.extended(rational::zero()))
        .collect()
}

/// n distinct points of ℚ^d whose affine span has dimension exactly `span`.
pub fn spanning_points<R: Rng>(
    rng: &mut R,
    d: usize,
    span: usize,
    n: usize,
    b: Bounds,
) -> Vec<QVector> {
    assert!(
        span <= d && n > span,
        "cannot span {span} dimensions with {n} points"
    );
    loop {
        let base = vector(rng, d, b);
        let dirs: Vec<QVector> = (0..span).map(|_| vector(rng, d, b)).collect();
        let Ok(flat) = AffineSubspace::new(base, dirs) else {
            continue;
        };
        let pts = distinct_in(rng, &flat, n, b);
        if affine_span(&pts).map(|s| s.dim()) == Ok(span) {
            return pts;
        }
    }
}

fn distinct_in<R: Rng>(rng: &mut R, flat: &AffineSubspace, n: usize, b: Bounds) -> Vec<QVector> {
    let mut out: Vec<QVector> = Vec::with_capacity(n);
    while out.len() < n {
        let mut p = flat.base().clone();
        for dir in flat.directions() {
            p = p.add_scaled(&rational(rng, b), dir);
        }
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

pub fn hpoint<R: Rng>(rng: &mut R, d: usize, b: Bounds) -> HPoint {
    HPoint::new(vector(rng, d - 1, b), positive_rational(rng, b)).expect("positive height")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::is_general_position_points;

    #[test]
    fn seeded_runs_repeat() {
        let a = distinct_points(&mut rng(7), 3, 20, Bounds::default());
        let b = distinct_points(&mut rng(7), 3, 20, Bounds::default());
        assert_eq!(a, b);
    }

    #[test]
    fn generated_configurations_have_their_shape() {
        let mut r = rng(1);
        let b = Bounds::default();
        let gp = general_position_points(&mut r, 3, 6, b);
        assert!(is_general_position_points(&gp, &AffineSubspace::full(3)).unwrap());
        let wp = well_placed_points(&mut r, 4, 6, b);
        assert!(crate::exact::is_well_placed(&wp, 4).unwrap().well_placed);
        let flat = spanning_points(&mut r, 4, 2, 5, b);
        assert_eq!(affine_span(&flat).unwrap().dim(), 2);
    }
}
