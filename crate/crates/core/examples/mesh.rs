//! Mesh of finite sphere families at well-placed and coplanar centers.

use spraylab::exact::rational::int;
use spraylab::qv;
use spraylab::sample::{self, Bounds};
use spraylab::sphere::{mesh_of_family, SphereFamily};

fn main() -> spraylab::Result<()> {
    for d in 2..=4 {
        let centers =
            sample::well_placed_points(&mut sample::rng(d as u64), d, d, Bounds::default());
        let families: Vec<SphereFamily> = centers
            .into_iter()
            .map(|center| SphereFamily {
                center,
                quadrances: (1..=8).map(int).collect(),
            })
            .collect();
        let r = mesh_of_family(&families, d)?;
        println!(
            "d = {d}: mesh {}, witness {}",
            r.mesh,
            serde_json::to_string(&r.witness_tuple_for_r_minus_1).unwrap()
        );
    }
    let coplanar: Vec<SphereFamily> = [qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]]
        .into_iter()
        .map(|center| SphereFamily {
            center,
            quadrances: (1..=8).map(int).collect(),
        })
        .collect();
    println!(
        "four coplanar centers in 3-space: mesh {}",
        mesh_of_family(&coplanar, 3)?.mesh
    );
    Ok(())
}
