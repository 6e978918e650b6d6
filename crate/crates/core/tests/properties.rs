use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use spraylab::covering::{
    difference_avoiding_set, drizzle_index_bound, greedy_drizzle_assign, is_difference_avoiding,
    pullback_drizzle_cover, verify_hyperplane_cover, z_set_base, DirectionStream,
};
use spraylab::duality::{
    basis_change, directions_from_centers, dual_directions, ivan_residual_h, phi, phi_inverse,
    CenterConfig,
};
use spraylab::exact::rational::{self as rat, ratio, Rational};
use spraylab::exact::{
    affine_span, is_general_position_points, is_general_position_vectors, is_well_placed,
    AffineSubspace, Flat, Hyperplane, QMatrix, QVector,
};
use spraylab::sample::{self, Bounds};
use spraylab::sphere::{intersect_chain, intersect_pair, Kind, Sphere};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn vector(d: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(rational(), d).prop_map(QVector::new)
}

fn matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..5, 1usize..5)
        .prop_flat_map(|(r, c)| prop::collection::vec(vector(c), r))
        .prop_map(|rows| QMatrix::from_rows(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_strings_roundtrip(x in rational()) {
        let s = rat::to_canonical(&x);
        prop_assert_eq!(rat::parse(&s).unwrap(), x.clone());
        prop_assert_eq!(x.is_zero(), s == "0");
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= m.nrows().min(m.ncols()));
    }

    #[test]
    fn null_space_is_the_kernel(m in matrix()) {
        let basis = m.null_space();
        prop_assert_eq!(basis.len(), m.ncols() - m.rank());
        for v in &basis {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn solutions_satisfy_their_system(m in matrix(), x in vector(4)) {
        let x = QVector::new(x.coords()[..m.ncols()].to_vec());
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).unwrap();
        prop_assert_eq!(m.mul_vec(sol.particular()), b);
    }

    #[test]
    fn inverses_invert(m in matrix()) {
        if m.nrows() == m.ncols() && m.rank() == m.nrows() {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(m.nrows()));
        }
    }

    #[test]
    fn projection_is_idempotent_and_orthogonal(base in vector(4), dirs in prop::collection::vec(vector(4), 1..4), x in vector(4)) {
        if let Ok(f) = AffineSubspace::new(base, dirs) {
            let p = f.project(&x);
            prop_assert_eq!(f.project(&p), p.clone());
            prop_assert!(f.contains(&p));
            let r = &x - &p;
            for w in f.directions() {
                prop_assert!(r.dot(w).is_zero());
            }
        }
    }

    #[test]
    fn general_position_persists_downward(seed in any::<u64>(), d in 2usize..5, n in 3usize..8) {
        let mut rng = sample::rng(seed);
        let s = sample::general_position_points(&mut rng, d, n, Bounds::default());
        let full = AffineSubspace::full(d);
        for k in 1..n {
            for sub in s.iter().cloned().combinations(k) {
                prop_assert!(is_general_position_points(&sub, &full).unwrap());
            }
        }
        let wp = sample::well_placed_points(&mut rng, d + 1, n, Bounds::default());
        for sub in wp.iter().cloned().combinations(n - 1) {
            prop_assert!(is_well_placed(&sub, d + 1).unwrap().well_placed);
        }
    }

    #[test]
    fn subsets_span_their_full_dimension(seed in any::<u64>(), d in 2usize..6, n in 2usize..9) {
        let mut rng = sample::rng(seed);
        let s = sample::general_position_points(&mut rng, d, n, Bounds::default());
        for k in 1..=d.min(n - 1) {
            for sub in s.iter().cloned().combinations(k + 1) {
                prop_assert_eq!(affine_span(&sub).unwrap().dim(), k);
            }
        }
    }

    #[test]
    fn pair_intersection_is_exact(c1 in vector(3), c2 in vector(3), q1 in rational(), q2 in rational(), xs in prop::collection::vec(vector(3), 200)) {
        prop_assume!(c1 != c2);
        let (a, b) = (Sphere::in_space(c1.clone(), q1.abs()), Sphere::in_space(c2.clone(), q2.abs()));
        if let Ok((h, s)) = intersect_pair(&a, &b) {
            for x in &xs {
                let both = a.contains(x) && b.contains(x);
                prop_assert_eq!(both, h.contains(x) && x.dist_sq(s.center()) == *s.quadrance());
            }
            // points constructed on both spheres: a rational point x of H;
            // re-centre b so that x lies on it
            let x = h.project(&xs[0]);
            let a2 = Sphere::in_space(c1.clone(), x.dist_sq(&c1));
            let b2 = Sphere::in_space(c2.clone(), x.dist_sq(&c2));
            let (_, s2) = intersect_pair(&a2, &b2).unwrap();
            prop_assert!(s2.contains(&x));
        }
    }

    #[test]
    fn chains_are_order_independent_as_sets(seed in any::<u64>(), d in 2usize..5) {
        let mut rng = sample::rng(seed);
        let k = d;
        let cs = sample::general_position_points(&mut rng, d, k, Bounds::default());
        let x = sample::vector(&mut rng, d, Bounds::default());
        // spheres through a common rational point
        let ss: Vec<Sphere> = cs.iter().map(|c| Sphere::in_space(c.clone(), x.dist_sq(c))).collect();
        let fwd = intersect_chain(&ss).unwrap();
        let rev: Vec<Sphere> = ss.iter().rev().cloned().collect();
        let bwd = intersect_chain(&rev).unwrap();
        prop_assert!(fwd.ambient().same_set(bwd.ambient()));
        prop_assert_eq!(fwd.center(), bwd.center());
        prop_assert_eq!(fwd.quadrance(), bwd.quadrance());
        prop_assert!(fwd.contains(&x));
        prop_assert!(fwd.classify() != Kind::Empty && fwd.classify().is_finite());
    }

    #[test]
    fn projection_along_an_edge_keeps_general_position(seed in any::<u64>(), d in 3usize..6) {
        let mut rng = sample::rng(seed);
        let k = d - 1;
        let cs = sample::general_position_points(&mut rng, d, k + 1, Bounds::default());
        let u = &cs[k - 1] - &cs[k];
        let h = Hyperplane::through(u, &cs[0]).unwrap();
        let projected: Vec<QVector> = cs.iter().map(|c| h.project(c)).unique().collect();
        prop_assert_eq!(projected.len(), k);
        prop_assert!(is_general_position_points(&projected, &h.as_subspace()).unwrap());
    }

    #[test]
    fn phi_roundtrips_and_is_injective(seed in any::<u64>(), d in 3usize..5) {
        let mut rng = sample::rng(seed);
        let mut pts = sample::well_placed_points(&mut rng, d, d + 2, Bounds::default());
        let extras = pts.split_off(d);
        let cfg = CenterConfig::new(d, pts, extras).unwrap();
        let mut images = HashMap::new();
        for _ in 0..50 {
            let x = sample::hpoint(&mut rng, d, Bounds::default());
            let r = phi(&cfg, &x).unwrap();
            prop_assert_eq!(&phi_inverse(&cfg, &r).unwrap(), &x);
            prop_assert_eq!(&phi(&cfg, &phi_inverse(&cfg, &r).unwrap()).unwrap(), &r);
            if let Some(prev) = images.insert(r, x.clone()) {
                prop_assert_eq!(prev, x);
            }
        }
        for (j, dd) in dual_directions(&cfg).unwrap().iter().enumerate() {
            for _ in 0..20 {
                let x = sample::hpoint(&mut rng, d, Bounds::default());
                prop_assert!(ivan_residual_h(&cfg, &cfg.extra_centers()[j], dd, &x).is_zero());
            }
        }
        prop_assert!(is_general_position_vectors(&directions_from_centers(&cfg).unwrap(), d).unwrap());
    }

    #[test]
    fn basis_change_sends_hyperplanes_to_coordinate_levels(seed in any::<u64>(), d in 2usize..5) {
        let mut rng = sample::rng(seed);
        let us = sample::general_position_points(&mut rng, d, d + 1, Bounds::default());
        let us: Vec<QVector> = us[1..].iter().map(|p| p - &us[0]).collect();
        let Ok(m) = basis_change(&us) else { return Ok(()) };
        prop_assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), QMatrix::identity(d));
        let p = sample::vector(&mut rng, d, Bounds::default());
        for (i, u) in us.iter().enumerate() {
            // any x with u·x = u·p lands on w_i = (Mp)_i
            let w = sample::vector(&mut rng, d, Bounds::default());
            let x = (&p + &w).add_scaled(&-(u.dot(&w) / u.norm_sq()), u);
            prop_assert_eq!(u.dot(&x), u.dot(&p));
            prop_assert_eq!(&m.mul_vec(&x)[i], &m.mul_vec(&p)[i]);
        }
    }

    #[test]
    fn greedy_covers_are_drizzles(seed in any::<u64>(), d in 2usize..5, m in 1usize..120) {
        let mut rng = sample::rng(seed);
        let pts = sample::distinct_points(&mut rng, d, m, Bounds { max_abs: 3, max_den: 2 });
        let stream = DirectionStream::moment_curve(d).unwrap();
        let (a, dirs) = greedy_drizzle_assign(&pts, &stream).unwrap();
        let mut seen = HashSet::new();
        for (p, &k) in a.points().iter().zip(a.parts()) {
            prop_assert!(seen.insert((k, dirs[k - 1].dot(p))));
        }
        prop_assert!(a.part_count() <= drizzle_index_bound(m, d));
        // same input, same answer
        prop_assert_eq!(greedy_drizzle_assign(&pts, &stream).unwrap().0, a);
    }

    #[test]
    fn pulled_back_covers_are_sprays(seed in any::<u64>(), m in 1usize..80) {
        let mut rng = sample::rng(seed);
        let mut pts = sample::well_placed_points(&mut rng, 3, 3, Bounds::default());
        let cfg = CenterConfig::new(3, std::mem::take(&mut pts), vec![]).unwrap();
        let mut seen = HashSet::new();
        let pts: Vec<QVector> = (0..m)
            .map(|_| phi(&cfg, &sample::hpoint(&mut rng, 3, Bounds::default())).unwrap().0)
            .filter(|r| seen.insert(r.clone()))
            .collect();
        let (a, dirs) = greedy_drizzle_assign(&pts, &DirectionStream::moment_curve(3).unwrap()).unwrap();
        prop_assert_eq!(verify_hyperplane_cover(&a, &dirs).unwrap().max_multiplicity(), 1);
        let spray = pullback_drizzle_cover(&cfg, &a, &dirs).unwrap();
        prop_assert!(spray.report.max_multiplicity() <= 1);
        let mut groups = HashSet::new();
        for (p, &k) in spray.assignment.points().iter().zip(spray.assignment.parts()) {
            let c = spray.centers[k - 1].truncate_last();
            prop_assert!(groups.insert((k, p.base.dist_sq(&c) + &p.height_sq)));
        }
    }

    #[test]
    fn difference_avoiding_sets_avoid(xs in prop::collection::vec(rational(), 0..7), eps in (1i64..20, 1i64..5), m in 1usize..9) {
        let eps = ratio(eps.0, eps.1);
        let s = difference_avoiding_set(&xs, &eps, m).unwrap();
        prop_assert_eq!(s.len(), m);
        prop_assert!(is_difference_avoiding(&s, &xs, &eps));
    }

    #[test]
    fn z_sets_have_product_cardinality(a2 in rational(), tail in rational(), x in prop::collection::vec(prop::collection::hash_set(rational(), 1..3), 4), m in 1usize..4) {
        prop_assume!(!a2.is_zero());
        let v = QVector::new(vec![rat::one(), a2.clone(), tail, rat::zero()]);
        let x: Vec<Vec<Rational>> = x.into_iter().map(|s| s.into_iter().sorted().collect()).collect();
        let scaled: Vec<Rational> = x[1].iter().map(|t| t / &a2).collect();
        let s = difference_avoiding_set(&scaled, &rat::one(), m).unwrap();
        let z = z_set_base(4, v, s.clone(), x.clone()).unwrap();
        let expected = s.len() * x.iter().map(Vec::len).product::<usize>();
        prop_assert_eq!(z.len(), expected);
        prop_assert_eq!(z.product_formula(), expected);
        prop_assert_eq!(z.points().iter().collect::<HashSet<_>>().len(), expected);
    }
}
