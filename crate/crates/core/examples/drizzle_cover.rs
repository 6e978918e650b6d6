//! Greedy drizzle cover of random points and its pullback to a spray cover.

use std::collections::HashSet;

use spraylab::covering::{
    greedy_drizzle_assign, pullback_drizzle_cover, verify_hyperplane_cover, DirectionStream,
};
use spraylab::duality::{phi, CenterConfig};
use spraylab::qv;
use spraylab::sample::{self, Bounds};

fn main() -> spraylab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2000);
    let cfg = CenterConfig::new(3, vec![qv![0, 0], qv![1, 0], qv![0, 1]], vec![])?;
    let mut rng = sample::rng(7);
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let r = phi(&cfg, &sample::hpoint(&mut rng, 3, Bounds::default()))?.0;
        if seen.insert(r.clone()) {
            points.push(r);
        }
    }

    let (a, dirs) = greedy_drizzle_assign(&points, &DirectionStream::moment_curve(3)?)?;
    let report = verify_hyperplane_cover(&a, &dirs)?;
    println!(
        "{n} points in {} parts (bound {})",
        a.part_count(),
        spraylab::covering::drizzle_index_bound(n, 3)
    );
    for p in &report.parts {
        println!(
            "  part {}: {} points, at most {} per hyperplane",
            p.part, p.point_count, p.max_multiplicity
        );
    }

    let spray = pullback_drizzle_cover(&cfg, &a, &dirs)?;
    println!(
        "pulled back: max points per sphere {}",
        spray.report.max_multiplicity()
    );
    for (k, c) in spray.centers.iter().enumerate() {
        println!(
            "  part {} centered at {}",
            k + 1,
            serde_json::to_string(c).unwrap()
        );
    }
    Ok(())
}
