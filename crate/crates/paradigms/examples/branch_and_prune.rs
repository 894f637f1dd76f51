//! Isolating solutions with branch-and-prune search.
//!
//! Propagation alone leaves a box containing both intersection points of
//! the circle and the parabola. Adding 0.5 <= x keeps only the right-hand
//! point, and `solve` encloses it in a box as narrow as asked for;
//! without the extra constraint, `solve` splits and returns enclosures
//! for both points.
//!
//! Run with `cargo run --example branch_and_prune`.

use paradigms::circle_parabola_system;

fn main() {
    let (mut store, x, y) = circle_parabola_system(true);
    let boxes = store.solve(&[x, y], 1e-12).expect("positive tolerance");
    println!("with 0.5 <= x, eps 1e-12: {} box(es)", boxes.len());
    for b in &boxes {
        println!("  x: {}", b[0]);
        println!("  y: {}", b[1]);
    }
    let y_exact = (5.0f64.sqrt() - 1.0) / 2.0;
    println!("  (y is the golden ratio conjugate {y_exact:.16e})");

    // coarser tolerances give wider but still sound enclosures
    let (mut store, x, y) = circle_parabola_system(true);
    let boxes = store.solve(&[x, y], 1e-3).unwrap();
    println!(
        "\nsame system at eps 1e-3: {} box(es), first x width {:.3e}",
        boxes.len(),
        boxes[0][0].width()
    );

    // without the sign constraint both solutions come back
    let (mut store, x, y) = circle_parabola_system(false);
    let boxes = store.solve(&[x, y], 1e-9).unwrap();
    println!("\nno sign constraint, eps 1e-9: {} box(es)", boxes.len());
    for b in &boxes {
        let (xl, xu) = b[0].bounds().unwrap();
        println!("  x in [{xl:+.6}, {xu:+.6}], y in {}", b[1]);
    }
}
