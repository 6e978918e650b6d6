//! Worked examples recomputed without the library's own algorithms: hand
//! substitution, brute-force minors, explicit enumeration.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use num_traits::{Signed, Zero};

use spraylab::covering::{
    difference_avoiding_set, drizzle_index_bound, escape_search, greedy_drizzle_assign,
    moment_point, project_assignment, verify_hyperplane_cover, verify_spray_cover, z_set_base,
    z_set_inductive, DirectionStream, EscapeOutcome, Grid, PointAssignment,
};
use spraylab::duality::{
    basis_change, center_of_direction, directions_from_centers, ivan_coefficients, phi,
    phi_inverse, solve_radii, sphere_image_basis, u_space, CenterConfig, HPoint, RadiiVector,
};
use spraylab::exact::rational::{int, ratio, Rational};
use spraylab::exact::{
    affine_span, is_general_position_points, is_general_position_vectors, is_well_placed,
    AffineSubspace, Flat, Hyperplane, QMatrix, QVector,
};
use spraylab::fixtures::{compare_all, golden_dir, Status};
use spraylab::qv;
use spraylab::sample::{self, Bounds};
use spraylab::sphere::{
    enclose_from_dependent_center, intersect_chain, intersect_pair, intersect_sphere_hyperplane,
    make_nondegenerate_chain, mesh_of_family, Kind, Sphere, SphereFamily,
};
use spraylab::Error;

fn q(n: i64, d: i64) -> Rational {
    ratio(n, d)
}

/// Laplace expansion; fine for the tiny matrices below.
fn det(m: &[Vec<Rational>]) -> Rational {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            sign * &m[0][j] * det(&minor)
        })
        .fold(int(0), |a, b| a + b)
}

/// Largest r with a nonzero r×r minor.
fn rank_by_minors(rows: &[Vec<Rational>]) -> usize {
    let (n, m) = (rows.len(), rows[0].len());
    (1..=n.min(m))
        .rev()
        .find(|&r| {
            (0..n).combinations(r).any(|ri| {
                (0..m).combinations(r).any(|ci| {
                    let sub: Vec<Vec<Rational>> = ri
                        .iter()
                        .map(|&i| ci.iter().map(|&j| rows[i][j].clone()).collect())
                        .collect();
                    !det(&sub).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect()
}

fn cfg3() -> CenterConfig {
    CenterConfig::new(3, vec![qv![0, 0], qv![1, 0], qv![0, 1]], vec![qv![1, 1]]).unwrap()
}

#[test]
fn rank_of_dependent_rows() {
    let rows: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]];
    assert_eq!(QMatrix::from_ints(rows).rank(), 2);
    assert_eq!(rank_by_minors(&ints(rows)), 2);
}

#[test]
fn null_space_of_the_u_system() {
    let m = QMatrix::from_ints(&[&[-1, 0, -1], &[-1, -1, 0]]);
    let basis = m.null_space();
    assert_eq!(basis.len(), 1);
    assert!(basis[0].is_parallel(&qv![1, -1, -1]));
    for row in [[-1, 0, -1], [-1, -1, 0]] {
        assert!(qv![row[0], row[1], row[2]].dot(&qv![1, -1, -1]).is_zero());
    }
}

#[test]
fn solve_by_substitution() {
    let x = QMatrix::from_ints(&[&[-2, 0], &[0, -2]])
        .solve(&qv![1, 1])
        .unwrap();
    let p = x.particular();
    assert_eq!(p, &QVector::new(vec![q(-1, 2), q(-1, 2)]));
    assert_eq!(int(-2) * &p[0], int(1));
    assert_eq!(int(-2) * &p[1], int(1));
}

#[test]
fn moment_curve_vandermonde() {
    let ts = [0i64, 1, 2, 3];
    let vs: Vec<QVector> = ts.iter().map(|&t| qv![1, t, t * t]).collect();
    assert!(is_general_position_vectors(&vs, 3).unwrap());
    for sub in ts.iter().combinations(3) {
        let expected: i64 = sub
            .iter()
            .tuple_combinations()
            .map(|(a, b)| *b - *a)
            .product();
        let m: Vec<Vec<Rational>> = sub
            .iter()
            .map(|&&t| vec![int(1), int(t), int(t * t)])
            .collect();
        assert_eq!(det(&m), int(expected));
        assert_ne!(expected, 0);
    }
}

#[test]
fn square_has_no_collinear_triple() {
    let ps = vec![qv![0, 0], qv![1, 0], qv![0, 1], qv![1, 1]];
    assert!(is_general_position_points(&ps, &AffineSubspace::full(2)).unwrap());
    for t in ps.iter().combinations(3) {
        let (a, b) = (t[1] - t[0], t[2] - t[0]);
        assert!(!(&a[0] * &b[1] - &a[1] * &b[0]).is_zero());
    }
    let line = vec![qv![0, 0], qv![1, 0], qv![2, 0]];
    assert!(!is_general_position_points(&line, &AffineSubspace::full(2)).unwrap());
}

#[test]
fn coplanar_square_is_well_placed() {
    let ps = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]];
    let w = is_well_placed(&ps, 3).unwrap();
    assert!(w.well_placed);
    let h = w.hyperplane.unwrap();
    assert!(ps.iter().all(|p| h.contains(p)));
    assert!(h.normal().is_parallel(&qv![0, 0, 1]));
    assert!(
        !is_well_placed(&[qv![0, 0, 0], qv![1, 0, 0], qv![2, 0, 0]], 3)
            .unwrap()
            .well_placed
    );
}

#[test]
fn d_points_spanning_a_hyperplane_are_well_placed() {
    let mut rng = sample::rng(61);
    for d in 2..=5 {
        let ps = sample::general_position_points(&mut rng, d, d, Bounds::default());
        assert!(is_well_placed(&ps, d).unwrap().well_placed, "d = {d}");
    }
}

#[test]
fn projection_minimizes_distance() {
    let line = AffineSubspace::new(qv![0, 0], vec![qv![1, 1]]).unwrap();
    let x = qv![1, 0];
    let p = line.project(&x);
    assert_eq!(p, QVector::new(vec![q(1, 2), q(1, 2)]));
    // f(s) = ‖x − (s, s)‖² = 2s² − 2s + 1
    let f = |s: &Rational| int(2) * s * s - int(2) * s + int(1);
    for k in 1..20 {
        let delta = q(1, k);
        assert!(f(&(q(1, 2) + &delta)) > f(&q(1, 2)));
        assert!(f(&(q(1, 2) - &delta)) > f(&q(1, 2)));
    }
    let h = Hyperplane::new(qv![1, 1], int(1)).unwrap();
    assert_eq!(h.project(&qv![1, 1]), QVector::new(vec![q(1, 2), q(1, 2)]));
}

#[test]
fn span_of_three_points_is_the_plane_z_zero() {
    let ps = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0]];
    let s = affine_span(&ps).unwrap();
    assert_eq!(s.dim(), 2);
    let diffs = ints(&[&[1, 0, 0], &[0, 1, 0]]);
    assert_eq!(rank_by_minors(&diffs), 2);
    assert!(s.contains(&qv![5, -3, 0]));
    assert!(!s.contains(&qv![0, 0, 1]));
}

#[test]
fn circle_from_a_sphere_and_a_plane() {
    let s = Sphere::in_space(qv![0, 0, 0], int(9));
    let c =
        intersect_sphere_hyperplane(&s, &Hyperplane::new(qv![0, 0, 1], int(2)).unwrap()).unwrap();
    assert_eq!(c.center(), &qv![0, 0, 2]);
    assert_eq!(c.quadrance(), &int(5));
    // x² + y² = 5 at z = 2: (1, 2, 2) and (2, 1, 2) lie on both
    for p in [qv![1, 2, 2], qv![2, 1, 2], qv![-2, 1, 2]] {
        assert_eq!(p.norm_sq(), int(9));
        assert!(c.contains(&p));
    }
}

#[test]
fn three_four_five_pair() {
    let a = Sphere::in_space(qv![0, 0, 0], int(9));
    let b = Sphere::in_space(qv![5, 0, 0], int(16));
    let (h, s) = intersect_pair(&a, &b).unwrap();
    assert!(h.contains(&QVector::new(vec![q(9, 5), int(7), int(-3)])));
    assert_eq!(s.center(), &QVector::new(vec![q(9, 5), int(0), int(0)]));
    assert_eq!(s.quadrance(), &q(144, 25));
    let p = QVector::new(vec![q(9, 5), q(12, 5), int(0)]);
    assert_eq!(&p[0] * &p[0] + &p[1] * &p[1], int(9));
    assert_eq!((&p[0] - int(5)) * (&p[0] - int(5)) + &p[1] * &p[1], int(16));
    assert!(s.contains(&p));
}

#[test]
fn two_dimensional_pairs() {
    let t = intersect_pair(
        &Sphere::in_space(qv![0, 0], int(1)),
        &Sphere::in_space(qv![2, 0], int(1)),
    )
    .unwrap()
    .1;
    assert_eq!(
        (t.center(), t.quadrance(), t.classify()),
        (&qv![1, 0], &int(0), Kind::Point)
    );
    let e = intersect_pair(
        &Sphere::in_space(qv![0, 0], int(1)),
        &Sphere::in_space(qv![10, 0], int(1)),
    )
    .unwrap()
    .1;
    assert_eq!((e.quadrance(), e.classify()), (&int(-24), Kind::Empty));
}

#[test]
fn half_quadrance_on_a_line_is_two_points() {
    let line = AffineSubspace::new(qv![0, 0, 0], vec![qv![1, 2, 2]]).unwrap();
    let s = Sphere::new(line, qv![0, 0, 0], q(1, 2)).unwrap();
    assert_eq!(s.classify(), Kind::PairOfPoints);
}

#[test]
fn three_unit_spheres() {
    let ss: Vec<Sphere> = [qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0]]
        .into_iter()
        .map(|c| Sphere::in_space(c, int(1)))
        .collect();
    let s = intersect_chain(&ss).unwrap();
    // subtracting the equations gives x = y = 1/2, then z² = 1/2
    assert_eq!(s.center(), &QVector::new(vec![q(1, 2), q(1, 2), int(0)]));
    assert_eq!(s.quadrance(), &q(1, 2));
    assert_eq!(s.dim(), 1);
    assert!(s.ambient().directions()[0].is_parallel(&qv![0, 0, 1]));
    assert_eq!(s.classify(), Kind::PairOfPoints);
    let z_sq = q(1, 2);
    assert_eq!(q(1, 4) + q(1, 4) + &z_sq, int(1));

    let two = intersect_chain(&ss[..2]).unwrap();
    assert_eq!(two.center(), &QVector::new(vec![q(1, 2), int(0), int(0)]));
    assert_eq!(two.quadrance(), &q(3, 4));
    assert_eq!(two.classify(), Kind::Infinite);

    let enc = enclose_from_dependent_center(&ss, &qv![2, -1, 0]).unwrap();
    // (1/2 − 2)² + (1/2 + 1)² + z² = 9/4 + 9/4 + 1/2
    assert_eq!(enc.quadrance(), &(q(9, 4) + q(9, 4) + z_sq));
    assert_eq!(enc.quadrance(), &int(5));
}

#[test]
fn nondegenerate_pair() {
    let cs = [qv![0, 0, 0], qv![1, 0, 0]];
    let qs = make_nondegenerate_chain(&cs, &int(1)).unwrap();
    assert_eq!(qs, vec![int(2)]);
    let (h, s) = intersect_pair(
        &Sphere::in_space(cs[0].clone(), int(2)),
        &Sphere::in_space(cs[1].clone(), int(1)),
    )
    .unwrap();
    // t = (1 + 2 − 1)/2 = 1
    assert!(h.contains(&qv![1, 7, -4]));
    assert_eq!(
        (s.center(), s.quadrance(), s.classify()),
        (&qv![1, 0, 0], &int(1), Kind::Infinite)
    );
    assert!(make_nondegenerate_chain(&cs[..1], &int(1))
        .unwrap()
        .is_empty());
}

#[test]
fn coplanar_centers_have_no_infinite_witness() {
    let cs = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]];
    assert!(matches!(
        spraylab::sphere::infinite_intersection_witness(&cs),
        Err(Error::WitnessUnsatisfiable {
            span_dim: 2,
            dim: 3
        })
    ));
    // any three of them are affinely independent: with any quadrances the
    // first three spheres already meet in at most two points
    let mut rng = sample::rng(62);
    for _ in 0..50 {
        let ss: Vec<Sphere> = cs[..3]
            .iter()
            .map(|c| {
                Sphere::in_space(
                    c.clone(),
                    sample::positive_rational(&mut rng, Bounds::default()),
                )
            })
            .collect();
        assert!(intersect_chain(&ss).unwrap().classify().is_finite());
    }
}

#[test]
fn mesh_examples() {
    let fam = |c: QVector| SphereFamily {
        center: c,
        quadrances: (1..=8).map(int).collect(),
    };
    let coplanar: Vec<SphereFamily> = [qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]]
        .into_iter()
        .map(fam)
        .collect();
    let r = mesh_of_family(&coplanar, 3).unwrap();
    assert_eq!(r.mesh, 3);
    let w = r.witness_tuple_for_r_minus_1.unwrap();
    let ss: Vec<Sphere> = w
        .iter()
        .map(|e| Sphere::in_space(coplanar[e.family].center.clone(), e.quadrance.clone()))
        .collect();
    assert_eq!(intersect_chain(&ss).unwrap().classify(), Kind::Infinite);

    let circles = vec![fam(qv![0, 0]), fam(qv![3, 1])];
    assert_eq!(mesh_of_family(&circles, 2).unwrap().mesh, 2);
}

#[test]
fn u_space_examples() {
    let cfg = cfg3();
    let b = u_space(&cfg, &qv![1, 1]).unwrap();
    assert_eq!(b, vec![qv![1, -1, -1]]);
    // Σ uᵢ(pᵢ − q) by hand
    let feet = [qv![0, 0], qv![1, 0], qv![0, 1]];
    let s = feet
        .iter()
        .zip(b[0].coords())
        .fold(QVector::zeros(2), |acc, (p, u)| {
            acc.add_scaled(u, &(p - &qv![1, 1]))
        });
    assert!(s.is_zero());
    let at_p1 = u_space(&cfg, &qv![0, 0]).unwrap();
    assert_eq!(at_p1.len(), 1);
    assert!(at_p1[0].is_parallel(&qv![1, 0, 0]));
}

#[test]
fn ivan_by_substitution() {
    let cfg = cfg3();
    let dd = ivan_coefficients(&cfg, &qv![1, 1], &qv![1, -1, -1]).unwrap();
    assert_eq!((dd.b.clone(), dd.c.clone()), (int(1), int(0)));
    let feet = [qv![0, 0], qv![1, 0], qv![0, 1]];
    for x in [qv![0, 0], qv![3, -2], QVector::new(vec![q(1, 7), q(-5, 3)])] {
        let lhs =
            x.dist_sq(&feet[0]) - x.dist_sq(&feet[1]) - x.dist_sq(&feet[2]) + x.dist_sq(&qv![1, 1]);
        assert!(lhs.is_zero());
    }
    // at x = (0,0): 1·0 − 1·1 − 1·1 + 1·2 + 0
    assert_eq!(int(0) - int(1) - int(1) + int(2), int(0));
}

#[test]
fn phi_and_its_inverse() {
    let cfg = cfg3();
    let x = HPoint::new(qv![0, 0], int(1)).unwrap();
    let r = phi(&cfg, &x).unwrap();
    // distances² from (0,0,1) to (0,0,0), (1,0,0), (0,1,0)
    assert_eq!(r.r(), &qv![1, 2, 2]);
    assert_eq!(phi_inverse(&cfg, &r).unwrap(), x);

    let above = HPoint::new(qv![1, 0], q(7, 3)).unwrap();
    assert_eq!(phi(&cfg, &above).unwrap().r()[1], q(7, 3));

    // w₁ − w₂ = 2x₁ − 1 and w₁ − w₃ = 2x₂ − 1, then h² = w₁ − ‖x‖²
    let far = RadiiVector(qv![1, 2, 100]);
    let (x1, x2) = (
        (int(1) - int(2) + int(1)) / int(2),
        (int(1) - int(100) + int(1)) / int(2),
    );
    let h_sq = int(1) - &x1 * &x1 - &x2 * &x2;
    assert!(h_sq.is_negative());
    assert_eq!(
        solve_radii(&cfg, &far).unwrap(),
        (QVector::new(vec![x1, x2]), h_sq)
    );
    assert!(matches!(phi_inverse(&cfg, &far), Err(Error::NotInE)));
}

#[test]
fn basis_sphere_image() {
    let cfg = cfg3();
    let h = sphere_image_basis(&cfg, 0, &int(1)).unwrap();
    assert!(h.contains(&qv![1, 2, 2]));
    assert!(!h.contains(&qv![2, 2, 2]));
    let h2 = sphere_image_basis(&cfg, 0, &int(2)).unwrap();
    assert!(h.normal().is_parallel(h2.normal()) && !h.same_as(&h2));
}

#[test]
fn off_sphere_points_leave_the_image() {
    let cfg = cfg3();
    let dd = ivan_coefficients(&cfg, &qv![1, 1], &qv![1, -1, -1]).unwrap();
    let k = int(4);
    let l = Hyperplane::new(dd.u.clone(), -(&dd.b * &k + &dd.c)).unwrap();
    let mut rng = sample::rng(63);
    for _ in 0..100 {
        let x = sample::hpoint(&mut rng, 3, Bounds::default());
        let on = x.dist_sq_to_base_point(&qv![1, 1, 0]) == k;
        assert_eq!(l.contains(phi(&cfg, &x).unwrap().r()), on);
    }
}

#[test]
fn basis_change_product() {
    let m = basis_change(&[qv![1, 2], qv![0, 1]]).unwrap();
    assert_eq!(m, QMatrix::from_ints(&[&[1, 2], &[0, 1]]));
    let p = qv![2, -1];
    assert!(qv![1, 2].dot(&p).is_zero());
    assert_eq!(m.mul_vec(&p), qv![0, -1]);
}

#[test]
fn directions_for_one_extra_center() {
    let dirs = directions_from_centers(&cfg3()).unwrap();
    assert_eq!(
        dirs,
        vec![qv![1, 0, 0], qv![0, 1, 0], qv![0, 0, 1], qv![-1, 1, 1]]
    );
    for sub in dirs.iter().combinations(3) {
        let m: Vec<Vec<Rational>> = sub.iter().map(|v| v.coords().to_vec()).collect();
        assert!(!det(&m).is_zero());
    }
    assert_eq!(
        center_of_direction(&cfg3(), &dirs[3]).unwrap(),
        qv![1, 1, 0]
    );
}

#[test]
fn moment_curve_center_stream() {
    let mut cs: Vec<QVector> = (0..14).map(|t| qv![t, t * t, t * t * t, 0]).collect();
    let extras = cs.split_off(4);
    let cfg = CenterConfig::new(4, cs, extras).unwrap();
    let dirs = directions_from_centers(&cfg).unwrap();
    assert_eq!(dirs.len(), 14);
    for sub in dirs.iter().combinations(4) {
        let rows: Vec<Vec<Rational>> = sub.iter().map(|v| v.coords().to_vec()).collect();
        assert!(!det(&rows).is_zero());
    }
}

#[test]
fn no_extra_centers_gives_the_standard_basis() {
    let cfg = CenterConfig::new(3, vec![qv![0, 0], qv![1, 0], qv![0, 1]], vec![]).unwrap();
    let dirs = directions_from_centers(&cfg).unwrap();
    assert_eq!(dirs, vec![qv![1, 0, 0], qv![0, 1, 0], qv![0, 0, 1]]);
}

#[test]
fn greedy_index_bound_by_blocking_count() {
    let mut rng = sample::rng(64);
    for (d, m) in [(2, 40), (3, 60), (4, 30)] {
        let pts = sample::distinct_points(
            &mut rng,
            d,
            m,
            Bounds {
                max_abs: 2,
                max_den: 3,
            },
        );
        let stream = DirectionStream::moment_curve(d).unwrap();
        let (a, dirs) = greedy_drizzle_assign(&pts, &stream).unwrap();
        for (i, p) in pts.iter().enumerate() {
            let k = a.parts()[i];
            // each earlier point blocks at most d − 1 indices
            assert!(k <= (i * (d - 1)) + 1);
            // every smaller index was blocked by a point on the same hyperplane
            for j in 1..k {
                let u = moment_point(d, &int(j as i64 - 1));
                assert!(pts[..i]
                    .iter()
                    .zip(a.parts())
                    .any(|(o, &kk)| kk == j && u.dot(o) == u.dot(p)));
            }
        }
        assert!(a.part_count() <= drizzle_index_bound(m, d));
        assert_eq!(dirs.len(), a.part_count());
    }
}

#[test]
fn difference_set_examples() {
    let s = difference_avoiding_set(&[int(0), int(1)], &int(1), 3).unwrap();
    assert_eq!(s, vec![int(0), q(1, 3), q(2, 3)]);
    let diffs: HashSet<Rational> = s
        .iter()
        .cartesian_product(&s)
        .map(|(a, b)| a - b)
        .filter(|x| !x.is_zero())
        .collect();
    assert_eq!(
        diffs,
        [q(1, 3), q(2, 3), q(-1, 3), q(-2, 3)].into_iter().collect()
    );
    assert!(!diffs.contains(&int(1)) && !diffs.contains(&int(-1)));

    let any = difference_avoiding_set(&[int(0)], &int(2), 3).unwrap();
    assert_eq!(any.iter().unique().count(), 3);
    assert!(any.iter().all(|x| x.abs() < int(2)));
}

fn zero_one() -> Vec<Rational> {
    vec![int(0), int(1)]
}

#[test]
fn z_set_enumeration() {
    let base = z_set_base(3, qv![1, 1, 0], vec![int(0), q(1, 3)], vec![zero_one(); 3]).unwrap();
    let mut by_hand = HashSet::new();
    for s in [int(0), q(1, 3)] {
        for (a, b, c) in itertools::iproduct!(zero_one(), zero_one(), zero_one()) {
            by_hand.insert(QVector::new(vec![&s + a, &s + b, c]));
        }
    }
    assert_eq!(by_hand.len(), 16);
    assert_eq!(
        base.points().iter().cloned().collect::<HashSet<_>>(),
        by_hand
    );

    let r = [int(0), q(1, 2), q(1, 4)];
    let ind = z_set_inductive(base.clone(), qv![0, 0, 1], r.to_vec()).unwrap();
    let lifted: HashSet<QVector> = by_hand
        .iter()
        .cartesian_product(&r)
        .map(|(p, t)| p.add_scaled(t, &qv![0, 0, 1]))
        .collect();
    assert_eq!(lifted.len(), 48);
    assert_eq!(ind.len(), 48);
    assert_eq!(ind.points().iter().cloned().collect::<HashSet<_>>(), lifted);

    let only_zero = z_set_base(3, qv![1, 2, 0], vec![int(0)], vec![zero_one(); 3]).unwrap();
    assert_eq!(only_zero.len(), 8);
    assert!(matches!(
        z_set_base(3, qv![1, 1, 0], zero_one(), vec![zero_one(); 3]),
        Err(Error::DisjointnessPreconditionFailed(_))
    ));
    assert_eq!(
        z_set_inductive(base.clone(), qv![0, 0, 1], vec![int(0)])
            .unwrap()
            .points(),
        base.points()
    );
}

fn small_z() -> spraylab::covering::ZSet {
    z_set_base(3, qv![1, 2, 0], vec![int(0)], vec![zero_one(); 3]).unwrap()
}

#[test]
fn escape_on_empty_and_full_covers() {
    let grid = Grid::cube(3, 4);
    let z = small_z();
    let translates = vec![qv![1, 1, 1], qv![0, 0, 0]];
    let empty = PointAssignment::empty();
    match escape_search(&empty, &grid, &[], &z, &translates).unwrap() {
        EscapeOutcome::Witness {
            translate_index,
            z_index,
            point,
            ..
        } => {
            assert_eq!((translate_index, z_index), (0, 0));
            assert_eq!(point, &translates[0] + &z.points()[0]);
        }
        other => panic!("expected a witness, got {other:?}"),
    }
    let all = PointAssignment::new(grid.points(), vec![1; grid.len()]).unwrap();
    let out = escape_search(&all, &grid, &[qv![1, 0, 0]], &z, &translates).unwrap();
    assert!(matches!(out, EscapeOutcome::Exhausted { .. }));
}

#[test]
fn escape_witness_is_uncovered() {
    let inst = spraylab::fixtures::adversarial_escape_instance(7);
    let out = escape_search(
        &inst.assignment,
        &inst.grid,
        &inst.used_dirs,
        &inst.z,
        &inst.translates,
    )
    .unwrap();
    let EscapeOutcome::Witness { point, .. } = out else {
        panic!("no witness")
    };
    assert!(!inst.assignment.points().contains(&point));
    let lo_hi = point
        .coords()
        .iter()
        .all(|c| !c.is_negative() && c < &int(20));
    assert!(lo_hi);
}

#[test]
fn hand_built_violations() {
    let a = PointAssignment::new(vec![qv![0, 1], qv![0, 2], qv![1, 5]], vec![1, 1, 2]).unwrap();
    let r = verify_hyperplane_cover(&a, &[qv![1, 0], qv![0, 1]]).unwrap();
    assert_eq!(r.max_multiplicity(), 2);
    assert_eq!(r.part(1).unwrap().worst, Some(int(0)));

    let sym = PointAssignment::new(vec![qv![1, 0], qv![-1, 0], qv![0, 3]], vec![1, 1, 2]).unwrap();
    let s = verify_spray_cover(&sym, &[qv![0, 0], qv![0, 0]]).unwrap();
    assert_eq!(s.part(1).unwrap().max_multiplicity, 2);
    assert_eq!(s.part(1).unwrap().worst, Some(int(1)));

    let singles = PointAssignment::new(vec![qv![1, 0], qv![2, 0]], vec![1, 2]).unwrap();
    assert_eq!(
        verify_spray_cover(&singles, &[qv![0, 0], qv![0, 0]])
            .unwrap()
            .max_multiplicity(),
        1
    );
}

#[test]
fn glueing_symmetric_centers() {
    let h = Hyperplane::new(qv![0, 0, 1], int(0)).unwrap();
    let centers = vec![qv![1, 2, 3], qv![1, 2, -3]];
    let a = PointAssignment::new(vec![qv![0, 0, 1], qv![5, 5, -1]], vec![1, 2]).unwrap();
    let plain = project_assignment(&a, &centers, &h, false).unwrap();
    assert_eq!(plain.centers[0], plain.centers[1]);
    assert_eq!(plain.assignment.part_count(), 2);
    let glued = project_assignment(&a, &centers, &h, true).unwrap();
    assert_eq!(glued.assignment.part_count(), 1);
    assert_eq!(glued.centers, vec![qv![1, 2, 0]]);

    let inside = PointAssignment::new(vec![qv![4, 4, 0], qv![1, 0, 0]], vec![1, 2]).unwrap();
    let same = project_assignment(&inside, &centers, &h, false).unwrap();
    assert_eq!(same.assignment.points(), inside.points());
}

#[test]
fn projected_quadrances_recomputed_in_h() {
    let mut rng = sample::rng(65);
    let pts = sample::distinct_points(
        &mut rng,
        3,
        30,
        Bounds {
            max_abs: 3,
            max_den: 1,
        },
    );
    let parts: Vec<usize> = (0..30).map(|i| i % 3 + 1).collect();
    let centers = sample::distinct_points(
        &mut rng,
        3,
        3,
        Bounds {
            max_abs: 3,
            max_den: 1,
        },
    );
    let a = PointAssignment::new(pts, parts).unwrap();
    let h = Hyperplane::new(qv![1, -1, 2], int(1)).unwrap();
    let proj = project_assignment(&a, &centers, &h, false).unwrap();
    let report = verify_spray_cover(&proj.assignment, &proj.centers).unwrap();
    let mut groups: HashMap<(usize, Rational), usize> = HashMap::new();
    for (p, &k) in proj.assignment.points().iter().zip(proj.assignment.parts()) {
        assert!(h.contains(p));
        *groups
            .entry((k, p.dist_sq(&proj.centers[k - 1])))
            .or_default() += 1;
    }
    assert_eq!(
        report.max_multiplicity(),
        groups.values().copied().max().unwrap()
    );
}

#[test]
fn golden_files_are_current() {
    let bad: Vec<_> = compare_all(&golden_dir())
        .into_iter()
        .filter(|s| s.status != Status::Match)
        .collect();
    assert!(bad.is_empty(), "stale golden files: {bad:?}");
}
