use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::duality::{center_of_direction, phi_inverse_closed, CenterConfig, RadiiVector};
use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::exact::QVector;

use super::assignment::{LiftedPoint, PointAssignment, Side};
use super::verify::{verify_spray_cover, CoverReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SprayCover {
    pub assignment: PointAssignment<LiftedPoint>,
    /// Center of part k at index k − 1, on the base hyperplane.
    pub centers: Vec<QVector>,
    pub report: CoverReport,
}

/// The sphere of quadrance k around the center of u corresponds to the
/// hyperplane u·r = −(b·k + c); this inverts that relation for an offset.
pub fn quadrance_for_offset(b: &Rational, c: &Rational, offset: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DirectionWithoutCenter);
    }
    Ok(-(offset + c) / b)
}

/// Carries a hyperplane cover of E^d back to the half-space picture: part k
/// becomes a drizzle centered at the center of its direction, odd parts
/// mirrored below the base hyperplane.
///
/// Points whose preimage lies on the base hyperplane are accepted and kept
/// there.
pub fn pullback_drizzle_cover(
    cfg: &CenterConfig,
    a: &PointAssignment<QVector>,
    dirs: &[QVector],
) -> Result<SprayCover> {
    if dirs.len() < a.part_count() {
        return Err(Error::DimensionMismatch {
            expected: a.part_count(),
            got: dirs.len(),
        });
    }
    let centers = dirs[..a.part_count()]
        .iter()
        .map(|u| center_of_direction(cfg, u))
        .collect::<Result<Vec<_>>>()?;
    let mut points = Vec::with_capacity(a.len());
    for (r, &k) in a.points().iter().zip(a.parts()) {
        if r.coords()
            .iter()
            .any(|x| !num_traits::Signed::is_positive(x))
        {
            return Err(Error::NotInE);
        }
        let (base, height_sq) = phi_inverse_closed(cfg, &RadiiVector(r.clone()))?;
        let side = if k % 2 == 1 { Side::Lower } else { Side::Upper };
        points.push(LiftedPoint::new(base, height_sq, side)?);
    }
    let assignment = PointAssignment::from_parts_unchecked(points, a.parts().to_vec());
    let report = verify_spray_cover(&assignment, &centers)?;
    Ok(SprayCover {
        assignment,
        centers,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::drizzle::{greedy_drizzle_assign, DirectionStream};
    use crate::duality::{ivan_coefficients, phi, HPoint};
    use crate::exact::rational::{int, ratio};
    use crate::qv;

    fn cfg() -> CenterConfig {
        CenterConfig::new(3, vec![qv![0, 0], qv![1, 0], qv![0, 1]], vec![]).unwrap()
    }

    #[test]
    fn empty_and_singleton_covers() {
        let s = pullback_drizzle_cover(&cfg(), &PointAssignment::empty(), &[]).unwrap();
        assert!(s.assignment.is_empty());
        assert_eq!(s.report.max_multiplicity(), 0);

        let r = phi(&cfg(), &HPoint::new(qv![0, 0], int(1)).unwrap())
            .unwrap()
            .0;
        let a = PointAssignment::new(vec![r], vec![1]).unwrap();
        let s = pullback_drizzle_cover(&cfg(), &a, &[qv![1, 0, 0]]).unwrap();
        assert_eq!(s.assignment.points()[0].side, Side::Lower);
        assert_eq!(s.centers, vec![qv![0, 0, 0]]);
        assert_eq!(s.report.max_multiplicity(), 1);
    }

    #[test]
    fn points_outside_e_are_rejected() {
        let a = PointAssignment::new(vec![qv![1, 2, 100]], vec![1]).unwrap();
        assert_eq!(
            pullback_drizzle_cover(&cfg(), &a, &[qv![1, 0, 0]]),
            Err(Error::NotInE)
        );
    }

    #[test]
    fn greedy_cover_pulls_back_to_drizzles() {
        let mut pts = Vec::new();
        for i in 1..6 {
            for j in 1..6 {
                let x = HPoint::new(
                    QVector::new(vec![ratio(i, 3), ratio(j - 2, 5)]),
                    ratio(i * j, 7),
                )
                .unwrap();
                pts.push(phi(&cfg(), &x).unwrap().0);
            }
        }
        let stream = DirectionStream::moment_curve(3).unwrap();
        let (a, used) = greedy_drizzle_assign(&pts, &stream).unwrap();
        let s = pullback_drizzle_cover(&cfg(), &a, &used).unwrap();
        assert!(s.report.within(1));
        for (k, u) in used.iter().enumerate() {
            let q = &s.centers[k];
            let dd = ivan_coefficients(&cfg(), q, u).unwrap();
            for (p, x) in a.part(k + 1).zip(s.assignment.part(k + 1)) {
                let quad = quadrance_for_offset(&dd.b, &dd.c, &u.dot(p)).unwrap();
                assert_eq!(
                    crate::covering::SprayPoint::quadrance_to(x, q).unwrap(),
                    quad
                );
            }
        }
    }
}
