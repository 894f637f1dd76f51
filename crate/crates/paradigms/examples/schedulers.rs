//! Scheduling order does not change what flows through a network.
//!
//! The same Hamming network is run with the node list forward, reversed,
//! and under the blocked-set scheduler; the probe records the same stream
//! every time. The blocked-set run also shows its bookkeeping: far fewer
//! wasted attempts than blind sweeping.
//!
//! Run with `cargo run --example schedulers`.

use paradigms::build_hamming;

fn main() {
    let mut forward = build_hamming(10).unwrap();
    let sweep_stats = forward.run_round_robin(50);
    let reference = forward.observations("p").unwrap().to_vec();
    println!(
        "round-robin, builder order:  {} firings / {} attempts",
        sweep_stats.firings, sweep_stats.attempts
    );

    let mut reversed = build_hamming(10).unwrap();
    reversed.permute_nodes(&[7, 6, 5, 4, 3, 2, 1, 0]);
    reversed.run_round_robin(50);
    let rev = reversed.observations("p").unwrap();
    let n = rev.len().min(reference.len());
    assert_eq!(&rev[..n], &reference[..n]);
    println!("round-robin, reversed order: same stream ({n} items compared)");

    let mut blocked = build_hamming(10).unwrap();
    let stats = blocked.run_blocked_set(sweep_stats.firings);
    let bs = blocked.observations("p").unwrap();
    let n = bs.len().min(reference.len());
    assert_eq!(&bs[..n], &reference[..n]);
    println!(
        "blocked-set:                 same stream, {} firings / {} attempts ({} re-readies)",
        stats.firings, stats.attempts, stats.rereadies
    );

    println!("\nfirst items: {:?}", &reference[..15.min(reference.len())]);
}
