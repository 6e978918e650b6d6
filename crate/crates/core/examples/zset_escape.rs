//! A Z-set sized against multiplicity-1 covers, and a verified escape point
//! from a greedy cover that targets its translates.

use spraylab::covering::{escape_search, escape_zset, witness_is_valid, EscapeOutcome};
use spraylab::exact::rational::ratio;
use spraylab::fixtures::adversarial_escape_instance;
use spraylab::qv;

fn main() -> spraylab::Result<()> {
    let dirs = vec![qv![1, 0, 0], qv![0, 1, 0], qv![0, 0, 1], qv![1, 1, 1]];
    let z = escape_zset(&dirs, &ratio(1, 2), 1)?;
    println!(
        "planned Z-set: {} points, product formula {}, radius {}",
        z.len(),
        z.product_formula(),
        z.linf_radius()
    );

    let inst = adversarial_escape_instance(3);
    println!(
        "grid of {} points, |Z| = {}, cover holds {} points",
        inst.grid.len(),
        inst.z.len(),
        inst.assignment.len()
    );
    let out = escape_search(
        &inst.assignment,
        &inst.grid,
        &inst.used_dirs,
        &inst.z,
        &inst.translates,
    )?;
    match &out {
        EscapeOutcome::Witness {
            translate, point, ..
        } => println!(
            "uncovered point {} in the translate by {}",
            serde_json::to_string(point).unwrap(),
            serde_json::to_string(translate).unwrap()
        ),
        EscapeOutcome::Exhausted { translates_checked } => {
            println!("all {translates_checked} translates covered")
        }
    }
    println!(
        "re-verified: {}",
        witness_is_valid(
            &out,
            &inst.assignment,
            &inst.grid,
            &inst.z,
            &inst.translates
        )
    );
    Ok(())
}
