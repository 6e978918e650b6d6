//! Φ sends spheres around centers on the base hyperplane to hyperplanes.

use spraylab::duality::{
    dual_directions, phi, phi_inverse, sphere_image_basis, sphere_image_extra, CenterConfig, HPoint,
};
use spraylab::exact::rational::int;
use spraylab::exact::Flat;
use spraylab::qv;

fn main() -> spraylab::Result<()> {
    let cfg = CenterConfig::new(3, vec![qv![0, 0], qv![1, 0], qv![0, 1]], vec![qv![1, 1]])?;
    let x = HPoint::new(qv![0, 0], int(1))?;
    let r = phi(&cfg, &x)?;
    println!(
        "phi((0,0), h² = 1) = {}",
        serde_json::to_string(&r).unwrap()
    );
    println!(
        "and back: {}",
        serde_json::to_string(&phi_inverse(&cfg, &r)?).unwrap()
    );

    let h = sphere_image_basis(&cfg, 0, &int(1))?;
    println!(
        "unit sphere around the first center -> w1 = 1, contains phi(x): {}",
        h.contains(r.r())
    );

    let dd = &dual_directions(&cfg)?[0];
    println!(
        "extra center (1,1): u = {}, b = {}, c = {}",
        serde_json::to_string(&dd.u).unwrap(),
        dd.b,
        dd.c
    );
    let y = HPoint::new(qv![1, 1], int(4))?;
    let l = sphere_image_extra(&cfg, 0, dd, &int(4))?;
    println!(
        "point 2 above (1,1) lands on L(u, 4): {}",
        l.contains(phi(&cfg, &y)?.r())
    );

    match phi_inverse(&cfg, &spraylab::duality::RadiiVector(qv![1, 2, 100])) {
        Ok(p) => println!("unexpected preimage {p:?}"),
        Err(e) => println!("(1, 2, 100): {e}"),
    }
    Ok(())
}
