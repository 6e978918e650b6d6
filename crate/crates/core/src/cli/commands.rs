use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{
    Command, CoverCmd, Ctx, DrizzleArgs, DualityArgs, DualityCmd, FixturesArgs, GpCheckArgs,
    GpMode, Outcome, SpheresCmd,
};
use crate::covering::{
    escape_search, escape_zset, greedy_drizzle_assign, project_assignment, pullback_drizzle_cover,
    verify_hyperplane_cover, verify_spray_cover, DirectionStream, EscapeOutcome, Grid, LiftedPoint,
    PointAssignment, ZNode, ZSet,
};
use crate::duality::{
    basis_change, directions_from_centers, dual_directions, ivan_coefficients, phi, phi_inverse,
    u_space, CenterConfig, HPoint, RadiiVector,
};
use crate::error::{Error, Result};
use crate::exact::position::{points_violation, vectors_violation};
use crate::exact::rational::{self, Rational};
use crate::exact::{is_well_placed, AffineSubspace, Hyperplane, QVector};
use crate::sample;
use crate::sphere::{
    enclose_from_dependent_center, infinite_intersection_witness, intersect_chain, intersect_pair,
    intersect_sphere_hyperplane, mesh_of_family, Sphere, SphereFamily,
};

fn parse<T: DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn ok(v: Value) -> Outcome {
    Ok((v, false))
}

/// A sphere with its dimension and classification.
pub(crate) fn sphere_json(s: &Sphere) -> Value {
    let mut v = to_json(s);
    let obj = v.as_object_mut().expect("sphere is an object");
    obj.insert("dim".into(), json!(s.dim()));
    obj.insert("classify".into(), json!(s.classify()));
    v
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    Many(Vec<T>),
    One(T),
}

impl<T> OneOrMany<T> {
    fn map<U>(self, f: impl FnMut(T) -> Result<U>) -> Result<OneOrMany<U>> {
        Ok(match self {
            OneOrMany::Many(v) => OneOrMany::Many(v.into_iter().map(f).collect::<Result<_>>()?),
            OneOrMany::One(x) => OneOrMany::One(std::iter::once(x).map(f).next().unwrap()?),
        })
    }
}

impl<T: Serialize> OneOrMany<T> {
    fn json(&self) -> Value {
        match self {
            OneOrMany::Many(v) => to_json(v),
            OneOrMany::One(x) => to_json(x),
        }
    }
}

pub(crate) fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Outcome {
    match cmd {
        Command::GpCheck(a) => gp_check(a, ctx),
        Command::Spheres(s) => spheres(s, ctx),
        Command::Duality(d) => duality(d, ctx),
        Command::Cover(c) => cover(c, ctx),
        Command::Fixtures(f) => fixtures(f),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointList {
    Bare(Vec<QVector>),
    Points { points: Vec<QVector> },
    Vectors { vectors: Vec<QVector> },
}

fn gp_check(a: &GpCheckArgs, ctx: &mut Ctx) -> Outcome {
    let list = match parse::<PointList>(ctx.load(&a.input.input)?)? {
        PointList::Bare(v)
        | PointList::Points { points: v }
        | PointList::Vectors { vectors: v } => v,
    };
    let d = match (a.ambient_dim, list.first()) {
        (_, None) => return Err(Error::EmptyInput),
        (Some(d), _) => d,
        (None, Some(p)) => p.dim(),
    };
    let (verdict, violation, hyperplane) = match a.mode {
        GpMode::Vectors => {
            let v = vectors_violation(&list, d)?;
            (v.is_none(), v, None)
        }
        GpMode::Points => {
            if let Some(i) = list.iter().position(|p| p.dim() != d) {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: list[i].dim(),
                });
            }
            let v = points_violation(&list, &AffineSubspace::full(d))?;
            (v.is_none(), v, None)
        }
        GpMode::WellPlaced => {
            let w = is_well_placed(&list, d)?;
            (w.well_placed, w.violation, w.hyperplane)
        }
    };
    let subset = violation
        .as_ref()
        .map(|idx| idx.iter().map(|&i| list[i].clone()).collect::<Vec<_>>());
    let mut out = json!({
        "mode": match a.mode {
            GpMode::Points => "points",
            GpMode::Vectors => "vectors",
            GpMode::WellPlaced => "well-placed",
        },
        "ambient_dim": d,
        "verdict": verdict,
        "violation": violation,
        "violating_subset": subset,
    });
    if let Some(h) = hyperplane {
        out["hyperplane"] = to_json(&h);
    }
    ok(out)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntersectInput {
    Pair {
        spheres: Vec<Sphere>,
    },
    WithPlane {
        sphere: Sphere,
        hyperplane: Hyperplane,
    },
}

#[derive(Deserialize)]
struct SpheresInput {
    spheres: Vec<Sphere>,
}

#[derive(Deserialize)]
struct EncloseInput {
    spheres: Vec<Sphere>,
    extra_center: QVector,
}

#[derive(Deserialize)]
struct CentersInput {
    centers: Vec<QVector>,
}

#[derive(Deserialize)]
struct MeshInput {
    families: Vec<SphereFamily>,
    #[serde(default)]
    d: Option<usize>,
}

fn spheres(cmd: &SpheresCmd, ctx: &mut Ctx) -> Outcome {
    match cmd {
        SpheresCmd::Intersect(i) => match parse::<IntersectInput>(ctx.load(&i.input)?)? {
            IntersectInput::Pair { spheres } => {
                let [a, b] = <[Sphere; 2]>::try_from(spheres)
                    .map_err(|_| Error::Invalid("intersect takes exactly two spheres".into()))?;
                let (h, s) = intersect_pair(&a, &b)?;
                ok(json!({ "hyperplane": to_json(&h), "sphere": sphere_json(&s) }))
            }
            IntersectInput::WithPlane { sphere, hyperplane } => {
                let s = intersect_sphere_hyperplane(&sphere, &hyperplane)?;
                ok(json!({ "sphere": sphere_json(&s) }))
            }
        },
        SpheresCmd::Chain(i) => {
            let input: SpheresInput = parse(ctx.load(&i.input)?)?;
            ok(sphere_json(&intersect_chain(&input.spheres)?))
        }
        SpheresCmd::Enclose(i) => {
            let input: EncloseInput = parse(ctx.load(&i.input)?)?;
            ok(sphere_json(&enclose_from_dependent_center(
                &input.spheres,
                &input.extra_center,
            )?))
        }
        SpheresCmd::Witness(i) => {
            let input: CentersInput = parse(ctx.load(&i.input)?)?;
            ok(witness_report(&input.centers)?)
        }
        SpheresCmd::Mesh(i) => {
            let input: MeshInput = parse(ctx.load(&i.input)?)?;
            let d = input
                .d
                .or_else(|| input.families.first().map(|f| f.center.dim()))
                .ok_or(Error::EmptyInput)?;
            ok(to_json(&mesh_of_family(&input.families, d)?))
        }
    }
}

/// The witness spheres, their chained intersection over an independent
/// subset of centers, and whether each remaining sphere contains it.
pub(crate) fn witness_report(centers: &[QVector]) -> Result<Value> {
    let spheres = infinite_intersection_witness(centers)?;
    let chain_idx = crate::sphere::independent_prefix(centers);
    let chain: Vec<Sphere> = chain_idx.iter().map(|&i| spheres[i].clone()).collect();
    let meet = intersect_chain(&chain)?;
    let enclosed: Vec<Value> = (0..centers.len())
        .filter(|i| !chain_idx.contains(i))
        .map(|i| {
            let s = &spheres[i];
            let q = s.center().dist_sq(meet.center()) + meet.quadrance();
            json!({ "index": i, "contains_intersection": &q == s.quadrance() })
        })
        .collect();
    Ok(json!({
        "spheres": spheres.iter().map(sphere_json).collect::<Vec<_>>(),
        "chain_indices": chain_idx,
        "intersection": sphere_json(&meet),
        "enclosing": enclosed,
    }))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum UspaceInput {
    Q { q: QVector },
    Bare(QVector),
}

#[derive(Deserialize)]
struct IvanInput {
    q: QVector,
    #[serde(default)]
    u: Option<QVector>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DirectionsInput {
    Wrapped { directions: Vec<QVector> },
    Bare(Vec<QVector>),
}

impl DirectionsInput {
    fn into_vec(self) -> Vec<QVector> {
        match self {
            DirectionsInput::Wrapped { directions } | DirectionsInput::Bare(directions) => {
                directions
            }
        }
    }
}

fn config(path: &Option<String>, ctx: &mut Ctx) -> Result<CenterConfig> {
    let p = path
        .as_deref()
        .ok_or_else(|| Error::Invalid("this operation needs --config".into()))?;
    parse(ctx.load(p)?)
}

fn duality(a: &DualityArgs, ctx: &mut Ctx) -> Outcome {
    match &a.op {
        DualityCmd::Phi(i) => {
            let cfg = config(&a.config, ctx)?;
            let xs: OneOrMany<HPoint> = parse(ctx.load(&i.input)?)?;
            ok(xs.map(|x| phi(&cfg, &x))?.json())
        }
        DualityCmd::PhiInv(i) => {
            let cfg = config(&a.config, ctx)?;
            let rs: OneOrMany<QVector> = parse(ctx.load(&i.input)?)?;
            ok(rs.map(|r| phi_inverse(&cfg, &RadiiVector(r)))?.json())
        }
        DualityCmd::Uspace(i) => {
            let cfg = config(&a.config, ctx)?;
            let q = match parse::<UspaceInput>(ctx.load(&i.input)?)? {
                UspaceInput::Q { q } | UspaceInput::Bare(q) => q,
            };
            ok(json!({ "q": to_json(&q), "basis": to_json(&u_space(&cfg, &q)?) }))
        }
        DualityCmd::Ivan(i) => {
            let cfg = config(&a.config, ctx)?;
            let input: IvanInput = parse(ctx.load(&i.input)?)?;
            let u = match input.u {
                Some(u) => u,
                None => u_space(&cfg, &input.q)?
                    .into_iter()
                    .next()
                    .ok_or(Error::NotInUSpace)?
                    .normalized_leading(),
            };
            ok(to_json(&ivan_coefficients(&cfg, &input.q, &u)?))
        }
        DualityCmd::Dualize => {
            let cfg = config(&a.config, ctx)?;
            ok(json!({
                "directions": to_json(&directions_from_centers(&cfg)?),
                "dual": to_json(&dual_directions(&cfg)?),
            }))
        }
        DualityCmd::BasisChange(i) => {
            let us = parse::<DirectionsInput>(ctx.load(&i.input)?)?.into_vec();
            let m = basis_change(&us)?;
            ok(json!({ "matrix": to_json(&m), "inverse": to_json(&m.inverse()?) }))
        }
    }
}

#[derive(Deserialize)]
struct DrizzleInput {
    points: Vec<QVector>,
    #[serde(default)]
    directions: Option<Vec<QVector>>,
}

#[derive(Deserialize)]
struct HyperplaneCoverInput {
    points: Vec<QVector>,
    parts: Vec<usize>,
    directions: Vec<QVector>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VerifyInput {
    Hyperplane {
        points: Vec<QVector>,
        parts: Vec<usize>,
        directions: Vec<QVector>,
    },
    SprayPlain {
        points: Vec<QVector>,
        parts: Vec<usize>,
        centers: Vec<QVector>,
    },
    SprayLifted {
        points: Vec<LiftedPoint>,
        parts: Vec<usize>,
        centers: Vec<QVector>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ZsetInput {
    Plan {
        directions: Vec<QVector>,
        #[serde(with = "rational")]
        epsilon: Rational,
        t: usize,
    },
    Tree {
        tree: ZNode,
    },
}

#[derive(Deserialize)]
struct EscapeInput {
    points: Vec<QVector>,
    parts: Vec<usize>,
    directions: Vec<QVector>,
    grid: Grid,
    zset: ZSet,
    translates: Vec<QVector>,
}

#[derive(Deserialize)]
struct ProjectInput {
    points: Vec<QVector>,
    parts: Vec<usize>,
    centers: Vec<QVector>,
    hyperplane: Hyperplane,
}

/// Greedy cover with its audit, as reported by `cover drizzle`.
pub(crate) fn drizzle_report(points: &[QVector], stream: &DirectionStream) -> Result<Value> {
    let (a, used) = greedy_drizzle_assign(points, stream)?;
    let report = verify_hyperplane_cover(&a, &used)?;
    Ok(json!({
        "point_count": a.len(),
        "part_count": a.part_count(),
        "index_bound": crate::covering::drizzle_index_bound(a.len(), stream.d()),
        "max_multiplicity": report.max_multiplicity(),
        "assignment": to_json(&a),
        "directions": to_json(&used),
        "report": to_json(&report),
    }))
}

fn drizzle(a: &DrizzleArgs, ctx: &mut Ctx) -> Outcome {
    let (points, stream) = match (a.random, &a.input) {
        (Some(n), _) => {
            let mut rng = sample::rng(ctx.seed);
            let pts = sample::distinct_points(&mut rng, a.dim, n, sample::Bounds::default());
            (pts, DirectionStream::moment_curve(a.dim)?)
        }
        (None, input) => {
            let name = input.as_deref().unwrap_or("-");
            let input: DrizzleInput = parse(ctx.load(name)?)?;
            let d = input
                .points
                .first()
                .map(QVector::dim)
                .ok_or(Error::EmptyInput)?;
            let stream = match input.directions {
                Some(dirs) => DirectionStream::explicit(d, dirs)?,
                None => DirectionStream::moment_curve(d)?,
            };
            (input.points, stream)
        }
    };
    ok(drizzle_report(&points, &stream)?)
}

fn cover(cmd: &CoverCmd, ctx: &mut Ctx) -> Outcome {
    match cmd {
        CoverCmd::Drizzle(a) => drizzle(a, ctx),
        CoverCmd::Pullback(a) => {
            let cfg: CenterConfig = parse(ctx.load(&a.config)?)?;
            let input: HyperplaneCoverInput = parse(ctx.load(&a.input.input)?)?;
            let assignment = PointAssignment::new(input.points, input.parts)?;
            ok(to_json(&pullback_drizzle_cover(
                &cfg,
                &assignment,
                &input.directions,
            )?))
        }
        CoverCmd::Verify(i) => {
            let report = match parse::<VerifyInput>(ctx.load(&i.input)?)? {
                VerifyInput::Hyperplane {
                    points,
                    parts,
                    directions,
                } => verify_hyperplane_cover(&PointAssignment::new(points, parts)?, &directions)?,
                VerifyInput::SprayPlain {
                    points,
                    parts,
                    centers,
                } => verify_spray_cover(&PointAssignment::new(points, parts)?, &centers)?,
                VerifyInput::SprayLifted {
                    points,
                    parts,
                    centers,
                } => verify_spray_cover(&PointAssignment::new(points, parts)?, &centers)?,
            };
            ok(json!({
                "max_multiplicity": report.max_multiplicity(),
                "report": to_json(&report),
            }))
        }
        CoverCmd::Zset(i) => {
            let z = match parse::<ZsetInput>(ctx.load(&i.input)?)? {
                ZsetInput::Plan {
                    directions,
                    epsilon,
                    t,
                } => escape_zset(&directions, &epsilon, t)?,
                ZsetInput::Tree { tree } => ZSet::from_tree(tree)?,
            };
            ok(json!({
                "size": z.len(),
                "product_formula": z.product_formula(),
                "linf_radius": rational::to_canonical(&z.linf_radius()),
                "zset": to_json(&z),
            }))
        }
        CoverCmd::Escape(i) => {
            let input: EscapeInput = parse(ctx.load(&i.input)?)?;
            let a = PointAssignment::new(input.points, input.parts)?;
            let out = escape_search(
                &a,
                &input.grid,
                &input.directions,
                &input.zset,
                &input.translates,
            )?;
            let negative = matches!(out, EscapeOutcome::Exhausted { .. });
            Ok((to_json(&out), negative))
        }
        CoverCmd::Project(p) => {
            let input: ProjectInput = parse(ctx.load(&p.input.input)?)?;
            let a = PointAssignment::new(input.points, input.parts)?;
            let proj = project_assignment(&a, &input.centers, &input.hyperplane, p.glue)?;
            let projected = verify_spray_cover(&proj.assignment, &proj.centers)?;
            let restricted = verify_spray_cover(&proj.restriction(), &proj.centers)?;
            ok(json!({
                "projection": to_json(&proj),
                "projected_report": to_json(&projected),
                "restricted_report": to_json(&restricted),
            }))
        }
    }
}

fn fixtures(f: &FixturesArgs) -> Outcome {
    let dir = f.dir.clone().unwrap_or_else(crate::fixtures::golden_dir);
    let statuses = if f.update {
        crate::fixtures::write_all(&dir).map_err(|e| Error::Invalid(e.to_string()))?
    } else {
        crate::fixtures::compare_all(&dir)
    };
    let failed = statuses.iter().any(|s| {
        s.status != crate::fixtures::Status::Match && s.status != crate::fixtures::Status::Written
    });
    let total = statuses.len();
    Ok((
        json!({ "total": total, "fixtures": to_json(&statuses) }),
        failed,
    ))
}
