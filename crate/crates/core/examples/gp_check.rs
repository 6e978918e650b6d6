//! General position and well-placedness of a few small configurations.

use spraylab::exact::position::points_violation;
use spraylab::exact::{is_general_position_vectors, is_well_placed, AffineSubspace};
use spraylab::qv;

fn main() -> spraylab::Result<()> {
    let square = vec![qv![0, 0], qv![1, 0], qv![0, 1], qv![1, 1]];
    println!(
        "square in the plane: {:?}",
        points_violation(&square, &AffineSubspace::full(2))?
    );

    let line = vec![qv![0, 0], qv![1, 0], qv![2, 0]];
    println!(
        "collinear triple: violating indices {:?}",
        points_violation(&line, &AffineSubspace::full(2))?
    );

    let moment: Vec<_> = (0..4).map(|t| qv![1, t, t * t]).collect();
    println!(
        "(1, t, t^2) for t = 0..3 in general position: {}",
        is_general_position_vectors(&moment, 3)?
    );

    let lifted = vec![qv![0, 0, 0], qv![1, 0, 0], qv![0, 1, 0], qv![1, 1, 0]];
    let w = is_well_placed(&lifted, 3)?;
    println!(
        "square at z = 0 well placed: {} in {}",
        w.well_placed,
        serde_json::to_string(&w.hyperplane).unwrap()
    );
    Ok(())
}
