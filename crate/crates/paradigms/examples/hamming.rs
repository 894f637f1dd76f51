//! The classic dataflow program: print the integers whose only prime
//! factors are 2, 3 and 5, in increasing order.
//!
//! Run with `cargo run --example hamming`.

use paradigms::build_hamming;

fn main() {
    // Eight nodes, ten pipes of capacity 10, and a single 1 seeded into
    // the probe's input pipe. The wiring realizes
    //   x = 1 followed by merge(merge(2x, 3x), 5x)
    let mut net = build_hamming(10).expect("valid capacity");

    // Sweeping the node list is all the control flow there is: each node
    // fires when its pipes allow and does nothing otherwise.
    net.run_round_robin(50);

    let observed = net.observations("p").expect("probe p exists");
    println!("after 50 sweeps the probe saw {} numbers:", observed.len());
    for v in observed {
        print!("{v} ");
    }
    println!();
}
