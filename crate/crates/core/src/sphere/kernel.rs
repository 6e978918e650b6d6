use num_traits::{Signed, Zero};

use super::Sphere;
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{AffineSubspace, Flat, Hyperplane, QMatrix, QVector};

/// 𝕊(E; c, √q) ∩ H as a sphere of the flat E ∩ H: center π(c) and quadrance
/// q − ‖c − π(c)‖².
pub fn intersect_sphere_hyperplane(s: &Sphere, h: &Hyperplane) -> Result<Sphere> {
    let cut = s.ambient.cut(h)?;
    let foot = cut.project(&s.center);
    let q = &s.quadrance - s.center.dist_sq(&foot);
    let ambient = cut.with_base(foot.clone())?;
    Ok(Sphere::from_parts(ambient, foot, q))
}

/// Cuts a sphere by a hyperplane whose normal already lies in the sphere's
/// direction space, so the foot point is a single step along the normal.
pub(crate) fn cut_along_normal(
    s: &Sphere,
    normal: &QVector,
    offset: &Rational,
    normal_sq: &Rational,
    ambient: &AffineSubspace,
) -> Sphere {
    let gap = normal.dot(&s.center) - offset;
    let lambda = -(&gap / normal_sq);
    let foot = s.center.add_scaled(&lambda, normal);
    let q = &s.quadrance - &gap * &gap / normal_sq;
    Sphere::from_parts(ambient.clone(), foot, q)
}

/// The radical hyperplane of two spheres and their intersection inside it.
///
/// With D = ‖c₁ − c₂‖² and t = (D + q₁ − q₂)/(2D) the result is the sphere
/// in H centered at c = c₁ + t(c₂ − c₁) with quadrance q₁ − t²D. A negative
/// result quadrance is the correct (empty) intersection.
pub fn intersect_pair(s1: &Sphere, s2: &Sphere) -> Result<(Hyperplane, Sphere)> {
    if !s1.ambient.same_set(&s2.ambient) {
        return Err(Error::AmbientMismatch);
    }
    if s1.ambient.dim() == 0 {
        return Err(Error::Invalid(
            "spheres in a point flat cannot be paired".into(),
        ));
    }
    if s1.quadrance.is_negative() || s2.quadrance.is_negative() {
        return Err(Error::NegativeQuadrance);
    }
    let n = &s2.center - &s1.center;
    if n.is_zero() {
        return Err(Error::ConcentricError);
    }
    let d = n.norm_sq();
    let t = (&d + &s1.quadrance - &s2.quadrance) / (rational::int(2) * &d);
    let c = s1.center.add_scaled(&t, &n);
    let q = &s1.quadrance - &t * &t * &d;
    let h = Hyperplane::through(n, &c)?;
    let ambient = s1.ambient.cut(&h)?.with_base(c.clone())?;
    Ok((h, Sphere::from_parts(ambient, c, q)))
}

/// Intersection of any number of spheres sharing an ambient, computed
/// independently of the chain scheme: subtracting the first sphere equation
/// from the others leaves a linear system whose solution flat L is cut with
/// the first sphere. Returns `None` when the linear system is inconsistent.
///
/// Works for arbitrary (also dependent or repeated) centers; concentric
/// spheres with different quadrances give `None`, equal ones collapse.
pub fn common_intersection(spheres: &[Sphere]) -> Result<Option<Sphere>> {
    let Some((first, rest)) = spheres.split_first() else {
        return Err(Error::EmptyInput);
    };
    for s in rest {
        if !first.ambient.same_set(&s.ambient) {
            return Err(Error::AmbientMismatch);
        }
    }
    // In coordinates x = base + W·a of the ambient:
    //   ‖x − cᵢ‖² − qᵢ − (‖x − c₁‖² − q₁) = 2(c₁ − cᵢ)·x + ‖cᵢ‖² − ‖c₁‖² − qᵢ + q₁
    let amb = &first.ambient;
    let dirs = amb.directions();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for s in rest {
        let n = (&first.center - &s.center).scale(&rational::int(2));
        let konst = s.center.norm_sq() - first.center.norm_sq() - &s.quadrance + &first.quadrance;
        // n·(base + W a) + konst = 0
        rows.push(QVector::new(dirs.iter().map(|w| n.dot(w)).collect()));
        rhs.push(-(konst + n.dot(amb.base())));
    }
    let flat = if rows.is_empty() || dirs.is_empty() {
        if rhs.iter().any(|r| !r.is_zero()) {
            return Ok(None);
        }
        amb.clone()
    } else {
        let m = QMatrix::from_rows(rows)?;
        let sol = match m.solve(&QVector::new(rhs)) {
            Ok(sol) => sol,
            Err(Error::NoSolution) => return Ok(None),
            Err(e) => return Err(e),
        };
        let combine = |a: &QVector| {
            a.coords()
                .iter()
                .zip(dirs)
                .fold(QVector::zeros(amb.ambient_dim()), |acc, (ai, w)| {
                    acc.add_scaled(ai, w)
                })
        };
        let base = amb.base() + &combine(sol.particular());
        let directions = match &sol {
            crate::exact::LinearSolution::Unique(_) => Vec::new(),
            crate::exact::LinearSolution::Family { null_basis, .. } => {
                null_basis.iter().map(combine).collect()
            }
        };
        AffineSubspace::new(base, directions)?
    };
    let foot = flat.project(&first.center);
    let q = &first.quadrance - first.center.dist_sq(&foot);
    let flat = flat.with_base(foot.clone())?;
    Ok(Some(Sphere::from_parts(flat, foot, q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};
    use crate::qv;
    use crate::sphere::Kind;

    #[test]
    fn sphere_hyperplane_examples() {
        let unit = Sphere::in_space(qv![0, 0, 0], int(1));
        let eq = intersect_sphere_hyperplane(&unit, &Hyperplane::axis(3, 2, int(0))).unwrap();
        assert_eq!(
            (eq.center(), eq.quadrance(), eq.dim()),
            (&qv![0, 0, 0], &int(1), 2)
        );
        let tangent = intersect_sphere_hyperplane(&unit, &Hyperplane::axis(3, 2, int(1))).unwrap();
        assert_eq!(tangent.classify(), Kind::Point);
        assert_eq!(tangent.center(), &qv![0, 0, 1]);
        let nine = Sphere::in_space(qv![0, 0, 0], int(9));
        let c = intersect_sphere_hyperplane(&nine, &Hyperplane::axis(3, 2, int(2))).unwrap();
        assert_eq!((c.center(), c.quadrance()), (&qv![0, 0, 2], &int(5)));
        // substitution: x² + y² = 5, z = 2 solves x² + y² + z² = 9
        assert!(nine.contains(&qv![1, 2, 2]) && c.contains(&qv![1, 2, 2]));
    }

    #[test]
    fn pair_examples() {
        let (h, s) = intersect_pair(
            &Sphere::in_space(qv![0, 0, 0], int(9)),
            &Sphere::in_space(qv![5, 0, 0], int(16)),
        )
        .unwrap();
        assert!(h.same_as(&Hyperplane::axis(3, 0, ratio(9, 5))));
        assert_eq!(s.center(), &QVector::new(vec![ratio(9, 5), int(0), int(0)]));
        assert_eq!(s.quadrance(), &ratio(144, 25));
        let p = QVector::new(vec![ratio(9, 5), ratio(12, 5), int(0)]);
        assert!(s.contains(&p));
        assert_eq!(p.norm_sq(), int(9));
        assert_eq!(p.dist_sq(&qv![5, 0, 0]), int(16));

        let (_, tangent) = intersect_pair(
            &Sphere::in_space(qv![0, 0], int(1)),
            &Sphere::in_space(qv![2, 0], int(1)),
        )
        .unwrap();
        assert_eq!(
            (tangent.center(), tangent.quadrance()),
            (&qv![1, 0], &int(0))
        );
        let (_, far) = intersect_pair(
            &Sphere::in_space(qv![0, 0], int(1)),
            &Sphere::in_space(qv![10, 0], int(1)),
        )
        .unwrap();
        assert_eq!(far.quadrance(), &int(-24));
        assert_eq!(far.classify(), Kind::Empty);
    }

    #[test]
    fn pair_errors() {
        let a = Sphere::in_space(qv![1, 1], int(1));
        assert_eq!(
            intersect_pair(&a, &a.with_quadrance(int(2))),
            Err(Error::ConcentricError)
        );
        let neg = Sphere::in_space(qv![0, 0], int(-1));
        assert_eq!(intersect_pair(&a, &neg), Err(Error::NegativeQuadrance));
    }

    #[test]
    fn common_intersection_agrees_on_pair() {
        let s1 = Sphere::in_space(qv![0, 0, 0], int(9));
        let s2 = Sphere::in_space(qv![5, 0, 0], int(16));
        let (_, pair) = intersect_pair(&s1, &s2).unwrap();
        let all = common_intersection(&[s1, s2]).unwrap().unwrap();
        assert!(all.ambient().same_set(pair.ambient()));
        assert_eq!(
            (all.center(), all.quadrance()),
            (pair.center(), pair.quadrance())
        );
    }

    #[test]
    fn common_intersection_of_concentric() {
        let a = Sphere::in_space(qv![1, 1], int(1));
        assert_eq!(
            common_intersection(&[a.clone(), a.with_quadrance(int(2))]).unwrap(),
            None
        );
        let same = common_intersection(&[a.clone(), a.clone()])
            .unwrap()
            .unwrap();
        assert!(same.ambient().same_set(a.ambient()));
        assert_eq!(
            (same.center(), same.quadrance()),
            (a.center(), a.quadrance())
        );
    }
}
