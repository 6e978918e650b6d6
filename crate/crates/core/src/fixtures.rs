//! Worked examples regenerated from scratch and compared byte-for-byte with
//! the committed files under `fixtures/golden/`.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cli::{run_in_memory, sha256_hex};
use crate::covering::{
    base_sizes, capacity_cover, difference_avoiding_set, escape_search, greedy_drizzle_assign,
    is_difference_avoiding, project_assignment, pullback_drizzle_cover, verify_hyperplane_cover,
    verify_spray_cover, z_set_base, z_set_inductive, DirectionStream, Grid, PointAssignment, ZSet,
};
use crate::duality::{
    basis_change, center_of_direction, directions_from_centers, ivan_coefficients, ivan_residual,
    ivan_residual_h, phi, phi_inverse, solve_radii, sphere_image_basis, sphere_image_extra,
    u_space, CenterConfig, HPoint, RadiiVector,
};
use crate::error::Error;
use crate::exact::position::{hyperplane_of, points_violation, vectors_violation};
use crate::exact::rational::{int, ratio, to_canonical, Rational};
use crate::exact::{
    affine_span, is_well_placed, AffineSubspace, Flat, Hyperplane, QMatrix, QVector,
};
use crate::qv;
use crate::sample::{self, Bounds};
use crate::sphere::{
    enclose_from_dependent_center, infinite_intersection_witness, intersect_chain, intersect_pair,
    intersect_sphere_hyperplane, make_nondegenerate_chain, mesh_of_family, Kind, Sphere,
    SphereFamily,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub input: Value,
    pub output: Value,
}

impl Fixture {
    fn new(name: &str, description: &str, input: Value, output: Value) -> Self {
        Fixture {
            name: name.to_string(),
            description: description.to_string(),
            input,
            output,
        }
    }

    /// File contents: pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixtures serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Missing,
    Written,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureStatus {
    pub name: String,
    pub status: Status,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join("golden")
}

pub fn write_all(dir: &Path) -> std::io::Result<Vec<FixtureStatus>> {
    std::fs::create_dir_all(dir)?;
    generate()
        .into_iter()
        .map(|f| {
            std::fs::write(dir.join(format!("{}.json", f.name)), f.render())?;
            Ok(FixtureStatus {
                name: f.name,
                status: Status::Written,
            })
        })
        .collect()
}

pub fn compare_all(dir: &Path) -> Vec<FixtureStatus> {
    generate()
        .into_iter()
        .map(|f| {
            let status = match std::fs::read_to_string(dir.join(format!("{}.json", f.name))) {
                Ok(text) if text == f.render() => Status::Match,
                Ok(_) => Status::Mismatch,
                Err(_) => Status::Missing,
            };
            FixtureStatus {
                name: f.name,
                status,
            }
        })
        .collect()
}

fn j<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("fixture values serialize")
}

fn q(r: &Rational) -> Value {
    json!(to_canonical(r))
}

fn err(e: &Error) -> Value {
    json!({ "error": e.kind(), "message": e.to_string() })
}

fn sphere(s: &Sphere) -> Value {
    json!({
        "ambient": j(s.ambient()),
        "center": j(s.center()),
        "quadrance": q(s.quadrance()),
        "dim": s.dim(),
        "classify": s.classify(),
    })
}

fn unit_cfg() -> CenterConfig {
    CenterConfig::new(
        3,
        vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0]],
        vec![qv![1, 1, 0]],
    )
    .expect("valid configuration")
}

/// Every fixture, in a fixed order.
pub fn generate() -> Vec<Fixture> {
    let mut out = Vec::new();
    exact_core(&mut out);
    spheres(&mut out);
    duality(&mut out);
    covering(&mut out);
    cli(&mut out);
    out
}

fn exact_core(out: &mut Vec<Fixture>) {
    let m = QMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
    out.push(Fixture::new(
        "exact_rank",
        "rank of rows (1,0,0), (0,1,0), (1,1,0)",
        j(&m),
        json!({ "rank": m.rank() }),
    ));

    let m = QMatrix::from_ints(&[&[-1, 0, -1], &[-1, -1, 0]]);
    out.push(Fixture::new(
        "exact_null_space",
        "null space of rows (-1,0,-1), (-1,-1,0)",
        j(&m),
        json!({ "basis": j(&m.null_space()) }),
    ));

    let m = QMatrix::from_ints(&[&[-2, 0], &[0, -2]]);
    let b = qv![1, 1];
    let x = m.solve(&b).expect("consistent");
    out.push(Fixture::new(
        "exact_solve",
        "solve rows (-2,0), (0,-2) against (1,1)",
        json!({ "matrix": j(&m), "rhs": j(&b) }),
        json!({ "unique": x.is_unique(), "solution": j(x.particular()) }),
    ));

    let vs: Vec<QVector> = (0..4).map(|t| qv![1, t, t * t]).collect();
    out.push(Fixture::new(
        "exact_gp_vectors_moment_curve",
        "moment-curve vectors (1,t,t^2) at t = 0..3",
        j(&vs),
        json!({ "general_position": vectors_violation(&vs, 3).unwrap().is_none() }),
    ));

    let ps = vec![qv![0, 0], qv![1, 0], qv![0, 1], qv![1, 1]];
    out.push(Fixture::new(
        "exact_gp_points_square",
        "unit square corners in the plane",
        j(&ps),
        json!({ "general_position": points_violation(&ps, &AffineSubspace::full(2)).unwrap().is_none() }),
    ));

    let ps = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]];
    let w = is_well_placed(&ps, 3).unwrap();
    out.push(Fixture::new(
        "exact_well_placed_square",
        "unit square corners in the plane z = 0 of 3-space",
        j(&ps),
        j(&w),
    ));

    let diag = AffineSubspace::new(qv![0, 0], vec![qv![1, 1]]).unwrap();
    let anti = Hyperplane::new(qv![1, 1], int(1)).unwrap();
    out.push(Fixture::new(
        "exact_projection",
        "project (1,0) onto y = x and (1,1) onto x + y = 1",
        json!({ "line": j(&diag), "hyperplane": j(&anti) }),
        json!({
            "onto_line": j(&diag.project(&qv![1, 0])),
            "onto_hyperplane": j(&anti.project(&qv![1, 1])),
        }),
    ));

    let ps = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0]];
    let span = affine_span(&ps).unwrap();
    out.push(Fixture::new(
        "exact_affine_span",
        "affine span of three points of the plane z = 0",
        j(&ps),
        json!({ "span": j(&span), "dim": span.dim(), "hyperplane": j(&hyperplane_of(&span).map(|h| h.normalized())) }),
    ));
}

fn spheres(out: &mut Vec<Fixture>) {
    let s = Sphere::in_space(qv![0, 0, 0], int(9));
    let h = Hyperplane::new(qv![0, 0, 1], int(2)).unwrap();
    out.push(Fixture::new(
        "sphere_hyperplane_circle",
        "quadrance 9 about the origin cut by z = 2",
        json!({ "sphere": sphere(&s), "hyperplane": j(&h) }),
        sphere(&intersect_sphere_hyperplane(&s, &h).unwrap()),
    ));

    let a = Sphere::in_space(qv![0, 0, 0], int(9));
    let b = Sphere::in_space(qv![5, 0, 0], int(16));
    let (plane, meet) = intersect_pair(&a, &b).unwrap();
    let p = QVector::new(vec![ratio(9, 5), ratio(12, 5), int(0)]);
    out.push(Fixture::new(
        "sphere_pair_345",
        "spheres of quadrance 9 and 16 with centers 5 apart",
        json!({ "spheres": [sphere(&a), sphere(&b)] }),
        json!({
            "hyperplane": j(&plane.normalized()),
            "sphere": sphere(&meet),
            "point": j(&p),
            "point_on_both": a.contains(&p) && b.contains(&p) && meet.contains(&p),
        }),
    ));

    let three: Vec<Sphere> = [qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0]]
        .into_iter()
        .map(|c| Sphere::in_space(c, int(1)))
        .collect();
    let chain3 = intersect_chain(&three).unwrap();
    out.push(Fixture::new(
        "sphere_chain_three_unit",
        "three unit spheres centered at 0, e1, e2",
        json!({ "spheres": three.iter().map(sphere).collect::<Vec<_>>() }),
        sphere(&chain3),
    ));

    let two = &three[..2];
    out.push(Fixture::new(
        "sphere_chain_two_unit",
        "two unit spheres centered at 0, e1",
        json!({ "spheres": two.iter().map(sphere).collect::<Vec<_>>() }),
        sphere(&intersect_chain(two).unwrap()),
    ));

    let extra = qv![2, -1, 0];
    let enc = enclose_from_dependent_center(&three, &extra).unwrap();
    let dirs = chain3.ambient().directions().to_vec();
    let pts = chain3.surd_points(&dirs);
    out.push(Fixture::new(
        "sphere_enclose_two_points",
        "sphere about (2,-1,0) through the two-point chain intersection",
        json!({ "spheres": three.iter().map(sphere).collect::<Vec<_>>(), "extra_center": j(&extra) }),
        json!({
            "sphere": sphere(&enc),
            "chain_points_on_sphere": pts.iter().map(|p| enc.contains_surd(p)).collect::<Vec<_>>(),
        }),
    ));

    let centers = vec![qv![0, 0, 0], qv![1, 0, 0]];
    let seed = int(1);
    let mut qs = make_nondegenerate_chain(&centers, &seed).unwrap();
    qs.push(seed);
    let chain: Vec<Sphere> = centers
        .iter()
        .zip(&qs)
        .map(|(c, q)| Sphere::in_space(c.clone(), q.clone()))
        .collect();
    out.push(Fixture::new(
        "sphere_nondegenerate_chain_pair",
        "two centers, last quadrance 1",
        json!({ "centers": j(&centers), "seed": "1" }),
        json!({
            "quadrances": qs.iter().map(q).collect::<Vec<_>>(),
            "intersection": sphere(&intersect_chain(&chain).unwrap()),
        }),
    ));

    let mut rng = sample::rng(218);
    let mut runs = Vec::new();
    for d in 3..=5 {
        for k in 1..d {
            let mut infinite = 0;
            for _ in 0..10 {
                let cs = sample::general_position_points(&mut rng, d, k, Bounds::default());
                let seed = sample::positive_rational(&mut rng, Bounds::default());
                let mut qs = make_nondegenerate_chain(&cs, &seed).unwrap();
                qs.push(seed);
                let ss: Vec<Sphere> = cs
                    .into_iter()
                    .zip(qs)
                    .map(|(c, q)| Sphere::in_space(c, q))
                    .collect();
                if intersect_chain(&ss).unwrap().classify() == Kind::Infinite {
                    infinite += 1;
                }
            }
            runs.push(json!({ "d": d, "k": k, "instances": 10, "infinite": infinite }));
        }
    }
    out.push(Fixture::new(
        "sphere_nondegenerate_chain_random",
        "seeded random chains: every constructed chain is Infinite",
        json!({ "seed": 218 }),
        json!(runs),
    ));

    let coplanar = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]];
    let verdict = infinite_intersection_witness(&coplanar)
        .map(|_| ())
        .unwrap_err();
    // any choice of quadrances: the first three spheres already meet finitely
    let probe: Vec<Sphere> = coplanar[..3]
        .iter()
        .zip([int(1), int(2), int(3)])
        .map(|(c, q)| Sphere::in_space(c.clone(), q))
        .collect();
    out.push(Fixture::new(
        "sphere_witness_four_coplanar",
        "four coplanar points of 3-space: span 2 = d - 1, no infinite witness exists",
        json!({ "centers": j(&coplanar) }),
        json!({
            "result": err(&verdict),
            "sample_chain_of_three": sphere(&intersect_chain(&probe).unwrap()),
        }),
    ));

    let mut rng = sample::rng(227);
    let generic = sample::spanning_points(&mut rng, 3, 2, 4, Bounds::default());
    let low = sample::spanning_points(&mut rng, 4, 2, 5, Bounds::default());
    let low_report = crate::cli::witness_report(&low).unwrap();
    out.push(Fixture::new(
        "sphere_witness_random",
        "seeded non-general-position tuples: span d - 1 has no witness, span d - 2 does",
        json!({ "seed": 227, "span_d_minus_1": j(&generic), "span_d_minus_2": j(&low) }),
        json!({
            "span_d_minus_1": err(&infinite_intersection_witness(&generic).unwrap_err()),
            "span_d_minus_2": low_report,
        }),
    ));

    let families: Vec<SphereFamily> = coplanar
        .iter()
        .map(|c| SphereFamily {
            center: c.clone(),
            quadrances: (1..=8).map(int).collect(),
        })
        .collect();
    out.push(Fixture::new(
        "sphere_mesh_coplanar",
        "families of quadrances 1..8 at the four coplanar centers",
        json!({ "families": j(&families) }),
        j(&mesh_of_family(&families, 3).unwrap()),
    ));
}

fn duality(out: &mut Vec<Fixture>) {
    let cfg = unit_cfg();
    let qx = qv![1, 1];
    out.push(Fixture::new(
        "duality_u_space",
        "U(q) for q = (1,1) and centers 0, e1, e2",
        json!({ "config": j(&cfg), "q": j(&qx) }),
        json!({ "basis": j(&u_space(&cfg, &qx).unwrap()) }),
    ));

    let u = qv![1, -1, -1];
    let dd = ivan_coefficients(&cfg, &qx, &u).unwrap();
    let xs = [
        qv![0, 0],
        qv![3, -2],
        QVector::new(vec![ratio(1, 7), ratio(-5, 3)]),
    ];
    out.push(Fixture::new(
        "duality_ivan",
        "coefficients b, c for u = (1,-1,-1) and residuals at three points",
        json!({ "config": j(&cfg), "q": j(&qx), "u": j(&u), "x": j(&xs) }),
        json!({
            "dual": j(&dd),
            "residuals": xs.iter().map(|x| q(&ivan_residual(&cfg, &qx, &dd, x))).collect::<Vec<_>>(),
        }),
    ));

    let mut rng = sample::rng(302);
    let mut zero = 0;
    for _ in 0..100 {
        let x = sample::vector(&mut rng, 2, Bounds::default());
        if ivan_residual(&cfg, &qx, &dd, &x) == int(0) {
            zero += 1;
        }
    }
    out.push(Fixture::new(
        "duality_ivan_random",
        "residual at 100 seeded random points",
        json!({ "seed": 302 }),
        json!({ "points": 100, "exactly_zero": zero }),
    ));

    let x = HPoint::new(qv![0, 0], int(1)).unwrap();
    let r = phi(&cfg, &x).unwrap();
    out.push(Fixture::new(
        "duality_phi",
        "squared distances from (0,0,1) to the three basis centers",
        json!({ "config": j(&cfg), "x": j(&x) }),
        j(&r),
    ));

    out.push(Fixture::new(
        "duality_phi_inverse",
        "preimage of (1,2,2)",
        json!({ "r": j(&r) }),
        j(&phi_inverse(&cfg, &r).unwrap()),
    ));

    let far = RadiiVector(qv![1, 2, 100]);
    let (base, h2) = solve_radii(&cfg, &far).unwrap();
    out.push(Fixture::new(
        "duality_phi_inverse_outside",
        "(1,2,100) has negative squared height",
        json!({ "r": j(&far) }),
        json!({
            "result": err(&phi_inverse(&cfg, &far).unwrap_err()),
            "base": j(&base),
            "height_sq": q(&h2),
        }),
    ));

    let h1 = sphere_image_basis(&cfg, 0, &int(1)).unwrap();
    out.push(Fixture::new(
        "duality_image_basis",
        "image of the unit sphere about the first center",
        json!({ "i": 1, "rho": "1" }),
        json!({ "hyperplane": j(&h1), "contains_phi_of_x": h1.contains(r.r()) }),
    ));

    let y = HPoint::new(qv![1, 1], int(4)).unwrap();
    let ry = phi(&cfg, &y).unwrap();
    let l = sphere_image_extra(&cfg, 0, &dd, &int(4)).unwrap();
    out.push(Fixture::new(
        "duality_image_extra",
        "x = ((1,1), height^2 4) on the quadrance-4 sphere about the extra center",
        json!({ "x": j(&y), "k": "4" }),
        json!({
            "phi": j(&ry),
            "hyperplane": j(&l),
            "residual": q(&(dd.u.dot(ry.r()) + &dd.b * int(4) + &dd.c)),
            "contains": l.contains(ry.r()),
        }),
    ));

    let perturbed: Vec<HPoint> = [(1, 1, 5), (2, 1, 4), (1, 0, 4)]
        .into_iter()
        .map(|(a, b, h)| HPoint::new(qv![a, b], int(h)).unwrap())
        .collect();
    out.push(Fixture::new(
        "duality_image_extra_off",
        "points off that sphere leave the hyperplane",
        j(&perturbed),
        json!(perturbed
            .iter()
            .map(|p| {
                let k = p.dist_sq_to_base_point(&qv![1, 1, 0]);
                json!({
                    "quadrance": q(&k),
                    "residual_at_k4": q(&(dd.u.dot(phi(&cfg, p).unwrap().r()) + &dd.b * int(4) + &dd.c)),
                    "identity_at_own_k": q(&ivan_residual_h(&cfg, &qv![1, 1], &dd, p)),
                })
            })
            .collect::<Vec<_>>()),
    ));

    let m = basis_change(&[qv![1, 2], qv![0, 1]]).unwrap();
    out.push(Fixture::new(
        "duality_basis_change",
        "M with rows (1,2), (0,1) applied to (2,-1)",
        json!({ "directions": [["1", "2"], ["0", "1"]], "point": ["2", "-1"] }),
        json!({ "matrix": j(&m), "image": j(&m.mul_vec(&qv![2, -1])) }),
    ));

    let dirs = directions_from_centers(&cfg).unwrap();
    let dets: Vec<Value> = (0..4)
        .combinations(3)
        .map(|c| {
            q(
                &QMatrix::from_rows(c.iter().map(|&i| dirs[i].clone()).collect())
                    .unwrap()
                    .det()
                    .unwrap(),
            )
        })
        .collect();
    out.push(Fixture::new(
        "duality_directions",
        "directions for basis centers 0, e1, e2 and extra (1,1,0)",
        json!({ "config": j(&cfg) }),
        json!({ "directions": j(&dirs), "triple_determinants": dets }),
    ));

    let mut centers: Vec<QVector> = (0..14).map(|t| qv![t, t * t, t * t * t, 0]).collect();
    let extras = centers.split_off(4);
    let basis = centers;
    let cfg4 = CenterConfig::new(4, basis, extras).unwrap();
    let dirs4 = directions_from_centers(&cfg4).unwrap();
    out.push(Fixture::new(
        "duality_directions_stream",
        "centers (t, t^2, t^3, 0): t = 0..3 as basis, ten extra t = 4..13",
        json!({ "config": j(&cfg4) }),
        json!({
            "count": dirs4.len(),
            "general_position": vectors_violation(&dirs4, 4).unwrap().is_none(),
            "directions": j(&dirs4),
        }),
    ));
}

/// Instance for the escape search: a Z-set sized for multiplicity 1, four
/// directions, and a greedy capacity-1 cover that serves the translates of Z
/// first.
pub struct EscapeInstance {
    pub grid: Grid,
    pub dirs: Vec<QVector>,
    pub z: ZSet,
    pub translates: Vec<QVector>,
    pub assignment: PointAssignment<QVector>,
    pub used_dirs: Vec<QVector>,
}

pub fn adversarial_escape_instance(seed: u64) -> EscapeInstance {
    let mut rng = sample::rng(seed);
    let grid = Grid::cube(3, 20);
    let a2: i64 = *[2, 3, -2].choose(&mut rng).unwrap();
    let v = qv![1, a2, 0];
    let alpha: i64 = *[1, -1, 2].choose(&mut rng).unwrap();
    let beta: i64 = rng.gen_range(1..=3);
    let u4 = qv![a2 * alpha, -alpha, beta];
    let dirs = vec![qv![1, 0, 0], qv![0, 1, 0], qv![0, 0, 1], u4];

    let (x1, xi, ns) = base_sizes(3, 1, 1);
    let x = vec![
        (0..x1 as i64).map(int).collect(),
        (0..xi as i64).map(int).collect(),
        (0..xi as i64).map(int).collect(),
    ];
    // a₂⁻¹X₂ − a₂⁻¹X₂ = {0, ±1/a₂}, so integers are safe
    let s: Vec<Rational> = (0..ns as i64).map(int).collect();
    let z = z_set_base(3, v, s, x).expect("integer Z-set");

    let ext: Vec<i64> = (0..3)
        .map(|i| {
            let lo = z.points().iter().map(|p| p[i].clone()).min().unwrap();
            lo.to_integer().try_into().unwrap()
        })
        .collect();
    let hi: Vec<i64> = (0..3)
        .map(|i| {
            let top = z.points().iter().map(|p| p[i].clone()).max().unwrap();
            top.to_integer().try_into().unwrap()
        })
        .collect();
    let translates: Vec<QVector> = (0..8)
        .map(|_| {
            QVector::new(
                (0..3)
                    .map(|i| int(rng.gen_range(-ext[i]..=19 - hi[i])))
                    .collect(),
            )
        })
        .collect();

    let mut order: Vec<QVector> = Vec::new();
    let mut seen = HashSet::new();
    for p in &translates {
        for zp in z.points() {
            let pt = p + zp;
            if seen.insert(pt.clone()) {
                order.push(pt);
            }
        }
    }
    let mut rest: Vec<QVector> = grid
        .points()
        .into_iter()
        .filter(|p| !seen.contains(p))
        .collect();
    rest.shuffle(&mut rng);
    order.extend(rest);
    let (assignment, used_dirs, _) = capacity_cover(&order, &dirs, 1);
    EscapeInstance {
        grid,
        dirs,
        z,
        translates,
        assignment,
        used_dirs,
    }
}

fn covering(out: &mut Vec<Fixture>) {
    let mut rng = sample::rng(410);
    let stream = DirectionStream::moment_curve(2).unwrap();
    let mut counts = [0usize; 3];
    for _ in 0..200 {
        let p = sample::vector(
            &mut rng,
            2,
            Bounds {
                max_abs: 3,
                max_den: 2,
            },
        );
        let mut qq = sample::vector(
            &mut rng,
            2,
            Bounds {
                max_abs: 3,
                max_den: 2,
            },
        );
        while qq == p {
            qq = sample::vector(
                &mut rng,
                2,
                Bounds {
                    max_abs: 3,
                    max_den: 2,
                },
            );
        }
        let (a, _) = greedy_drizzle_assign(&[p, qq], &stream).unwrap();
        counts[a.parts()[1]] += 1;
    }
    out.push(Fixture::new(
        "cover_drizzle_pairs",
        "200 seeded planar pairs: where the second point lands",
        json!({ "seed": 410 }),
        json!({ "part_1": counts[1], "part_2": counts[2] }),
    ));

    let mut rng = sample::rng(411);
    let mut rows = Vec::new();
    for (d, m) in [(2, 50), (3, 200), (4, 100)] {
        let pts = sample::distinct_points(
            &mut rng,
            d,
            m,
            Bounds {
                max_abs: 2,
                max_den: 2,
            },
        );
        let (a, _) =
            greedy_drizzle_assign(&pts, &DirectionStream::moment_curve(d).unwrap()).unwrap();
        rows.push(json!({
            "d": d,
            "m": m,
            "max_part": a.part_count(),
            "bound": crate::covering::drizzle_index_bound(m, d),
        }));
    }
    out.push(Fixture::new(
        "cover_drizzle_index_bound",
        "largest part used against (m - 1)(d - 1) + 1 on seeded point sets",
        json!({ "seed": 411 }),
        json!(rows),
    ));

    let cfg = unit_cfg().with_extras(vec![]).unwrap();
    let mut rng = sample::rng(420);
    let pts: Vec<QVector> = (0..1000)
        .map(|_| {
            phi(&cfg, &sample::hpoint(&mut rng, 3, Bounds::default()))
                .unwrap()
                .0
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .sorted()
        .collect();
    let (a, used) =
        greedy_drizzle_assign(&pts, &DirectionStream::moment_curve(3).unwrap()).unwrap();
    let hyper = verify_hyperplane_cover(&a, &used).unwrap();
    let spray = pullback_drizzle_cover(&cfg, &a, &used).unwrap();
    let spray_check = verify_spray_cover(&spray.assignment, &spray.centers).unwrap();
    out.push(Fixture::new(
        "cover_pullback_1000",
        "greedy cover of Phi-images of 1000 seeded half-space points, pulled back",
        json!({ "seed": 420, "points": pts.len() }),
        json!({
            "parts": a.part_count(),
            "hyperplane_max_multiplicity": hyper.max_multiplicity(),
            "spray_max_multiplicity": spray.report.max_multiplicity(),
            "reverified_spray_max_multiplicity": spray_check.max_multiplicity(),
            "centers": j(&spray.centers),
        }),
    ));

    let xs = [int(0), int(1)];
    let s = difference_avoiding_set(&xs, &int(1), 3).unwrap();
    out.push(Fixture::new(
        "cover_difference_set",
        "X = {0, 1}, epsilon = 1, m = 3",
        json!({ "x": ["0", "1"], "epsilon": "1", "m": 3 }),
        json!({ "s": s.iter().map(q).collect::<Vec<_>>(), "avoids": is_difference_avoiding(&s, &xs, &int(1)) }),
    ));

    let mut rng = sample::rng(429);
    let mut good = 0;
    for _ in 0..50 {
        let n = rng.gen_range(1..6);
        let xs: Vec<Rational> = (0..n)
            .map(|_| sample::rational(&mut rng, Bounds::default()))
            .collect();
        let eps = sample::positive_rational(&mut rng, Bounds::default());
        let m = rng.gen_range(1..8);
        let s = difference_avoiding_set(&xs, &eps, m).unwrap();
        if s.len() == m && is_difference_avoiding(&s, &xs, &eps) {
            good += 1;
        }
    }
    out.push(Fixture::new(
        "cover_difference_set_random",
        "50 seeded constructions checked exhaustively",
        json!({ "seed": 429 }),
        json!({ "runs": 50, "valid": good }),
    ));

    let zero_one = vec![int(0), int(1)];
    let base = z_set_base(
        3,
        qv![1, 1, 0],
        vec![int(0), ratio(1, 3)],
        vec![zero_one; 3],
    )
    .unwrap();
    let distinct: HashSet<&QVector> = base.points().iter().collect();
    out.push(Fixture::new(
        "cover_zset_base",
        "v = (1,1,0), S = {0, 1/3}, X_i = {0, 1}",
        json!({ "tree": j(base.tree()) }),
        json!({ "size": base.len(), "distinct": distinct.len(), "product_formula": base.product_formula() }),
    ));

    let ind = z_set_inductive(
        base.clone(),
        qv![0, 0, 1],
        vec![int(0), ratio(1, 2), ratio(1, 4)],
    )
    .unwrap();
    let distinct: HashSet<&QVector> = ind.points().iter().collect();
    out.push(Fixture::new(
        "cover_zset_inductive",
        "the 16-point base set shifted by {0, 1/2, 1/4}·(0,0,1)",
        json!({ "tree": j(ind.tree()) }),
        json!({ "size": ind.len(), "distinct": distinct.len(), "product_formula": ind.product_formula() }),
    ));

    let rejected: Vec<Value> = [vec![int(0), int(1)], vec![int(0), ratio(1, 2), int(-1)]]
        .into_iter()
        .map(|s| {
            let e = z_set_inductive(base.clone(), qv![0, 0, 1], s.clone()).unwrap_err();
            json!({ "s": s.iter().map(q).collect::<Vec<_>>(), "result": err(&e) })
        })
        .collect();
    out.push(Fixture::new(
        "cover_zset_precondition",
        "shifts along (0,0,1) that collide with differences of the base set",
        json!({ "inner": "cover_zset_base" }),
        json!(rejected),
    ));

    let inst = adversarial_escape_instance(456);
    let found = escape_search(
        &inst.assignment,
        &inst.grid,
        &inst.used_dirs,
        &inst.z,
        &inst.translates,
    )
    .unwrap();
    let cover = verify_hyperplane_cover(&inst.assignment, &inst.used_dirs).unwrap();
    out.push(Fixture::new(
        "cover_escape_adversarial",
        "capacity-1 greedy cover of the 20^3 grid serving translates of Z first",
        json!({ "seed": 456, "directions": j(&inst.dirs), "zset_size": inst.z.len(), "translates": j(&inst.translates) }),
        json!({
            "cover_max_multiplicity": cover.max_multiplicity(),
            "covered_points": inst.assignment.len(),
            "outcome": j(&found),
            "verified": crate::covering::witness_is_valid(&found, &inst.assignment, &inst.grid, &inst.z, &inst.translates),
        }),
    ));

    out.push(Fixture::new(
        "cover_verify_drizzle",
        "audit of the 1000-point greedy cover",
        json!({ "source": "cover_pullback_1000" }),
        json!({
            "per_part_max": hyper.parts.iter().map(|p| p.max_multiplicity).collect::<Vec<_>>(),
        }),
    ));

    out.push(Fixture::new(
        "cover_verify_spray",
        "audit of the pulled-back 1000-point cover grouped by quadrance",
        json!({ "source": "cover_pullback_1000" }),
        json!({
            "per_part_max": spray_check.parts.iter().map(|p| p.max_multiplicity).collect::<Vec<_>>(),
            "centers_match_directions": used.iter().zip(&spray.centers).all(|(u, c)| center_of_direction(&cfg, u).as_ref() == Ok(c)),
        }),
    ));

    let mut rng = sample::rng(483);
    let pts = sample::distinct_points(
        &mut rng,
        3,
        40,
        Bounds {
            max_abs: 3,
            max_den: 1,
        },
    );
    let parts: Vec<usize> = (0..40).map(|i| i % 4 + 1).collect();
    let centers = sample::distinct_points(
        &mut rng,
        3,
        4,
        Bounds {
            max_abs: 3,
            max_den: 1,
        },
    );
    let a = PointAssignment::new(pts, parts).unwrap();
    let h = Hyperplane::new(qv![1, 1, 1], int(1)).unwrap();
    let proj = project_assignment(&a, &centers, &h, false).unwrap();
    let rep = verify_spray_cover(&proj.assignment, &proj.centers).unwrap();
    // recompute each quadrance in h by hand
    let recomputed = proj
        .assignment
        .points()
        .iter()
        .zip(proj.assignment.parts())
        .all(|(p, &k)| h.contains(p) && h.contains(&proj.centers[k - 1]));
    out.push(Fixture::new(
        "cover_project_random",
        "40 seeded points in 4 parts projected into x + y + z = 1",
        json!({ "seed": 483 }),
        json!({
            "report": j(&rep),
            "all_in_h": recomputed,
            "restricted": proj.restricted.len(),
        }),
    ));
}

fn cli_case(
    name: &str,
    description: &str,
    args: &[&str],
    files: &[(&str, &str)],
    summarize: bool,
) -> Fixture {
    let run = run_in_memory(args, files);
    let stdout: Value = if run.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&run.stdout).expect("reports are JSON")
    };
    let shown = if summarize {
        let r = &stdout["result"];
        json!({
            "stdout_sha256": sha256_hex(run.stdout.as_bytes()),
            "point_count": r["point_count"],
            "part_count": r["part_count"],
            "index_bound": r["index_bound"],
            "max_multiplicity": r["max_multiplicity"],
        })
    } else {
        stdout
    };
    let inputs: Vec<Value> = files
        .iter()
        .map(|(n, body)| json!({ "name": n, "body": serde_json::from_str::<Value>(body).expect("fixture input is JSON") }))
        .collect();
    Fixture::new(
        name,
        description,
        json!({ "args": args, "files": inputs }),
        json!({ "exit": run.code, "stdout": shown }),
    )
}

const CFG: &str =
    r#"{"d": 3, "basis_centers": [[0,0,0],[1,0,0],[0,1,0]], "extra_centers": [[1,1,0]]}"#;

fn cli(out: &mut Vec<Fixture>) {
    out.push(cli_case(
        "cli_gp_check_well_placed",
        "four coplanar points, mode well-placed",
        &["gp-check", "--mode", "well-placed", "pts.json"],
        &[("pts.json", r#"[[0,0,0],[1,0,0],[0,1,0],[1,1,0]]"#)],
        false,
    ));
    out.push(cli_case(
        "cli_spheres_chain",
        "chain of three unit spheres",
        &["spheres", "chain", "chain.json"],
        &[(
            "chain.json",
            r#"{"spheres": [{"center": [0,0,0], "quadrance": 1}, {"center": [1,0,0], "quadrance": 1}, {"center": [0,1,0], "quadrance": 1}]}"#,
        )],
        false,
    ));
    out.push(cli_case(
        "cli_duality_phi",
        "phi of (0,0,1)",
        &["duality", "--config", "cfg.json", "phi", "x.json"],
        &[
            ("cfg.json", CFG),
            ("x.json", r#"{"base": [0,0], "height_sq": 1}"#),
        ],
        false,
    ));
    out.push(cli_case(
        "cli_duality_phi_inv_outside",
        "phi-inv of (1,2,100)",
        &["duality", "--config", "cfg.json", "phi-inv", "r.json"],
        &[("cfg.json", CFG), ("r.json", r#"[1,2,100]"#)],
        false,
    ));
    out.push(cli_case(
        "cli_duality_ivan",
        "ivan at q = (1,1)",
        &["duality", "--config", "cfg.json", "ivan", "q.json"],
        &[("cfg.json", CFG), ("q.json", r#"{"q": [1,1]}"#)],
        false,
    ));
    out.push(cli_case(
        "cli_cover_drizzle_random",
        "1000 random rational points in dimension 3, seed 553",
        &[
            "cover", "drizzle", "--random", "1000", "--dim", "3", "--seed", "553",
        ],
        &[],
        true,
    ));
}
