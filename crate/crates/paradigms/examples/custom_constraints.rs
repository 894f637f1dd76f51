//! Building a constraint system of your own: where does the line
//! x + y = 1 cross the unit circle?
//!
//! Complex relations are decomposed into the primitive repertoire
//! (<=, =, sum, product, square) with auxiliary variables. The circle
//! x^2 + y^2 = 1 becomes { x^2 = xx, y^2 = yy, xx + yy = 1 }; the line
//! is a single sum constraint. The two crossing points are (0,1) and
//! (1,0).
//!
//! Run with `cargo run --example custom_constraints`.

use paradigms::{Constraint, ConstraintStore, Interval};

fn main() {
    let mut store = ConstraintStore::new();
    let x = store.named_var("x", Interval::entire());
    let y = store.named_var("y", Interval::entire());
    let xx = store.var(Interval::entire());
    let yy = store.var(Interval::entire());
    let one = store.var(Interval::point(1.0).unwrap());

    store.post(Constraint::Square(x, xx));
    store.post(Constraint::Square(y, yy));
    store.post(Constraint::Sum(xx, yy, one)); // on the circle
    store.post(Constraint::Sum(x, y, one)); // on the line

    let boxes = store.solve(&[x, y], 1e-10).expect("positive tolerance");
    println!("{} solution box(es):", boxes.len());
    for b in &boxes {
        println!("  {}: {}", store.name(x).unwrap(), b[0]);
        println!("  {}: {}", store.name(y).unwrap(), b[1]);
    }

    // sanity: both known crossings are covered
    for (sx, sy) in [(0.0, 1.0), (1.0, 0.0)] {
        let covered = boxes.iter().any(|b| b[0].contains(sx) && b[1].contains(sy));
        println!("covers ({sx}, {sy}): {covered}");
    }
}
