//! Projecting a spray assignment into a hyperplane, with and without glueing.

use spraylab::covering::{project_assignment, verify_spray_cover, PointAssignment};
use spraylab::exact::rational::int;
use spraylab::exact::Hyperplane;
use spraylab::qv;

fn main() -> spraylab::Result<()> {
    let h = Hyperplane::new(qv![0, 0, 1], int(0))?;
    let centers = vec![qv![1, 2, 3], qv![1, 2, -3], qv![0, 0, 1]];
    let a = PointAssignment::new(
        vec![
            qv![0, 0, 1],
            qv![2, 4, 5],
            qv![5, 5, -1],
            qv![3, 0, 2],
            qv![-1, 2, 0],
        ],
        vec![1, 1, 2, 3, 3],
    )?;
    for glue in [false, true] {
        let p = project_assignment(&a, &centers, &h, glue)?;
        let r = verify_spray_cover(&p.assignment, &p.centers)?;
        println!(
            "glue = {glue}: {} parts, part map {:?}",
            p.assignment.part_count(),
            p.part_map
        );
        for part in &r.parts {
            println!(
                "  part {}: {} points, at most {} per sphere",
                part.part, part.point_count, part.max_multiplicity
            );
        }
    }
    Ok(())
}
