//! The classic dataflow network that enumerates Hamming numbers: the
//! positive integers with no prime factor other than 2, 3 and 5, in
//! increasing order.
//!
//! The stream satisfies `x = 1 followed by merge(merge(2x, 3x), 5x)`.
//! Three `times` nodes scale the stream, two `merge` nodes recombine it,
//! two `split` nodes fan the feedback out, and a probe forwards the
//! stream while recording it. The leading 1 is the seed item placed in
//! the probe's input pipe.

use super::network::{Network, NetworkBuilder, NetworkError};

/// Builds the eight-node Hamming network with every pipe at the given
/// capacity and the value 1 seeded into the probe's input pipe `x1`.
/// The probe is named `"p"`.
pub fn build_hamming(capacity: usize) -> Result<Network, NetworkError> {
    let mut b = NetworkBuilder::new();
    let a = b.pipe("a", capacity);
    let bb = b.pipe("b", capacity);
    let c = b.pipe("c", capacity);
    let d = b.pipe("d", capacity);
    let x1 = b.seeded_pipe("x1", capacity, [1]);
    let x2 = b.pipe("x2", capacity);
    let f = b.pipe("f", capacity);
    let g = b.pipe("g", capacity);
    let h = b.pipe("h", capacity);
    let i = b.pipe("i", capacity);
    b.merge("m1", a, bb, c);
    b.merge("m2", c, d, x1);
    b.times("t2", 2, f, a);
    b.times("t3", 3, g, bb);
    b.times("t5", 5, h, d);
    b.split("sp1", x2, h, i);
    b.split("sp2", i, f, g);
    b.probe("p", x1, x2);
    b.build()
}
