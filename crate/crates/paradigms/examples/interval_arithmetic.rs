//! The representation layer: closed real intervals with outward-rounded
//! arithmetic.
//!
//! Run with `cargo run --example interval_arithmetic`.

use paradigms::Interval;

fn main() {
    // a real number is represented by an interval known to contain it
    let third = Interval::new(1.0 / 3.0, 1.0 / 3.0).unwrap();

    // arithmetic rounds outward, so results always contain the exact
    // real value; 1/3 + 1/3 + 1/3 encloses 1 even though 1/3 is not a
    // float
    let sum = third.add_out(third).add_out(third);
    println!("1/3 + 1/3 + 1/3 = {sum}");
    println!(
        "  width {:.3e}, contains 1: {}",
        sum.width(),
        sum.contains(1.0)
    );

    // unknown values start as the whole line and shrink by intersection
    let anything = Interval::entire();
    println!("\nno information:  {anything}");
    println!(
        "intersect [0,2]: {}",
        anything.intersect(Interval::new(0.0, 2.0).unwrap())
    );

    // inverted bounds denote the empty set, which is absorbing
    let empty = Interval::new(2.0, 1.0).unwrap();
    println!(
        "\n[2,1] is {empty}; [0,1] * [2,1] is {}",
        Interval::new(0.0, 1.0).unwrap().mul_out(empty)
    );

    // squares and square roots respect signs and domains
    let x = Interval::new(-2.0, 3.0).unwrap();
    println!("\nx = {x}");
    println!("x^2      = {}", x.sqr_out());
    println!("sqrt(x)  = {} (negative part clipped)", x.sqrt_out());
    println!(
        "sqrt of an all-negative interval: {}",
        Interval::new(-4.0, -1.0).unwrap().sqrt_out()
    );

    // exact operations stay exact; inexact ones lose at most one float
    // step per bound
    let exact = Interval::new(3.0, 4.0)
        .unwrap()
        .mul_out(Interval::point(5.0).unwrap());
    println!("\n[3,4] * 5 = {exact} (exact)");
    let tight = Interval::point(0.1)
        .unwrap()
        .add_out(Interval::point(0.2).unwrap());
    println!("0.1 + 0.2 in {tight}");
}
