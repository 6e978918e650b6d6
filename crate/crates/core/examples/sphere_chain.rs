//! Chained sphere intersections in 3-space, with quadrances instead of radii.

use spraylab::exact::rational::int;
use spraylab::qv;
use spraylab::sphere::{enclose_from_dependent_center, intersect_chain, intersect_pair, Sphere};

fn show(label: &str, s: &Sphere) {
    println!(
        "{label}: center {:?} quadrance {} in a {}-flat, {:?}",
        s.center()
            .coords()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        s.quadrance(),
        s.dim(),
        s.classify()
    );
}

fn main() -> spraylab::Result<()> {
    let a = Sphere::in_space(qv![0, 0, 0], int(9));
    let b = Sphere::in_space(qv![5, 0, 0], int(16));
    let (plane, circle) = intersect_pair(&a, &b)?;
    println!(
        "radical plane: {}·x = {}",
        serde_json::to_string(plane.normal()).unwrap(),
        plane.offset()
    );
    show("3-4-5 circle", &circle);

    let unit: Vec<Sphere> = [qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0]]
        .into_iter()
        .map(|c| Sphere::in_space(c, int(1)))
        .collect();
    show("two unit spheres", &intersect_chain(&unit[..2])?);
    show("three unit spheres", &intersect_chain(&unit)?);
    show(
        "through both points",
        &enclose_from_dependent_center(&unit, &qv![2, -1, 0])?,
    );
    Ok(())
}
