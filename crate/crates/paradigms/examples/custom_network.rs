//! Wiring a dataflow network by hand: powers of two from a one-node
//! feedback loop.
//!
//! The stream satisfies `x = 1 followed by 2x`. A probe forwards the
//! stream from `x1` to `x2` while recording it, and a times node feeds
//! `2 * x2` back into `x1`. The seed item 1 starts the loop.
//!
//! Run with `cargo run --example custom_network`.

use paradigms::NetworkBuilder;

fn main() {
    let mut b = NetworkBuilder::new();
    let x1 = b.seeded_pipe("x1", 4, [1]);
    let x2 = b.pipe("x2", 4);
    b.probe("out", x1, x2);
    b.times("double", 2, x2, x1);
    let mut net = b.build().expect("wiring is valid");

    net.run_round_robin(60);

    println!("powers of two from a two-node loop:");
    println!("{:?}", net.observations("out").unwrap());
}
