//! Constraint propagation on the circle/parabola intersection.
//!
//! The system { x^2 + y^2 = 1, y = x^2 } is decomposed into primitive
//! constraints over shared variables and contracted to a fixpoint. With
//! no further information the result is the box x in [-1,1], y in [0,1],
//! which contains both intersection points.
//!
//! Run with `cargo run --example circle_parabola`.

use paradigms::{circle_parabola_system, PropagationStatus};

fn main() {
    let (mut store, x, y) = circle_parabola_system(false);

    println!("constraints: x^2 = x_sq, y^2 = y_sq, x_sq + y_sq = 1, y = x_sq");
    println!("start:       every variable in {}", store.value(x));

    let outcome = store.propagate_round_robin(1000);
    assert_eq!(outcome.status, PropagationStatus::Fixpoint);

    println!("\nfixpoint after {} sweeps:", outcome.rounds_used);
    println!("x: {}", store.value(x));
    println!("y: {}", store.value(y));

    // the same fixpoint, reached with fewer contraction calls by only
    // revisiting constraints whose variables changed
    let (mut store2, x2, y2) = circle_parabola_system(false);
    let outcome2 = store2.propagate_worklist();
    assert_eq!(store.value(x), store2.value(x2));
    assert_eq!(store.value(y), store2.value(y2));
    println!(
        "\nworklist propagation: same box in {} contraction calls",
        outcome2.rounds_used
    );
}
