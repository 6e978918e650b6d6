//! Infinite-intersection witnesses for centers that are not in general
//! position, and the case where none can exist.

use spraylab::qv;
use spraylab::sphere::{
    independent_prefix, infinite_intersection_witness, intersect_chain, Sphere,
};

fn main() -> spraylab::Result<()> {
    // four collinear centers in 3-space: span 1 ≤ d − 2
    let line = vec![qv![0, 0, 0], qv![1, 0, 0], qv![3, 0, 0], qv![4, 0, 0]];
    let spheres = infinite_intersection_witness(&line)?;
    for s in &spheres {
        println!(
            "sphere at {:?} with quadrance {}",
            s.center()
                .coords()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            s.quadrance()
        );
    }
    let chain: Vec<Sphere> = independent_prefix(&line)
        .into_iter()
        .map(|i| spheres[i].clone())
        .collect();
    let meet = intersect_chain(&chain)?;
    println!(
        "common intersection: {:?} of dimension {}",
        meet.classify(),
        meet.dim() - 1
    );
    println!(
        "all four contain it: {}",
        spheres
            .iter()
            .all(|s| &(s.center().dist_sq(meet.center()) + meet.quadrance()) == s.quadrance())
    );

    // four coplanar centers in 3-space: three of them already pin the
    // intersection down to at most two points
    let plane = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]];
    match infinite_intersection_witness(&plane) {
        Ok(_) => println!("unexpected witness"),
        Err(e) => println!("coplanar centers: {e}"),
    }
    Ok(())
}
