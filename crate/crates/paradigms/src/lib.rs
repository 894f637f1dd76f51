//! Two small programming paradigms packaged as ordinary library types:
//! dataflow networks and interval constraint solving.
//!
//! Neither paradigm needs a language of its own. Each is a handful of
//! cooperating types plus a generic driver, and programs are written by
//! composing values:
//!
//! * [`dataflow`] — networks of firing nodes connected by bounded FIFO
//!   pipes. Wire a [`Network`] with a [`NetworkBuilder`] (or load one
//!   from JSON with [`dataflow::parse_network`]), then drive it with a
//!   round-robin or blocked-set scheduler. Item streams are independent
//!   of scheduling order.
//! * [`constraint`] — real unknowns tracked as intervals, narrowed by the
//!   contraction operators of primitive relations (`<=`, `=`, sum,
//!   product, square) posted on a [`ConstraintStore`]. Propagate to a
//!   fixpoint, or enclose solutions with branch-and-prune
//!   [`ConstraintStore::solve`].
//! * [`interval`] — the representation layer underneath: closed real
//!   intervals with outward-rounded arithmetic, so no solution is ever
//!   lost to floating-point rounding.
//!
//! # Examples
//!
//! Each capability has a runnable example:
//!
//! ```bash
//! cargo run --example hamming                # the classic dataflow demo
//! cargo run --example schedulers             # round-robin vs blocked-set
//! cargo run --example custom_network         # wiring a feedback loop by hand
//! cargo run --example network_from_json      # the JSON network format
//! cargo run --example interval_arithmetic    # outward-rounded interval ops
//! cargo run --example circle_parabola        # propagation to a fixpoint
//! cargo run --example branch_and_prune       # solving to a tolerance
//! cargo run --example custom_constraints     # building your own system
//! ```
//!
//! The `paradigms` binary wraps the two classic demos and a generic
//! network runner; see the README for the command-line interface.

pub mod constraint;
pub mod dataflow;
pub mod interval;

pub use constraint::{
    circle_parabola_system, Constraint, ConstraintStore, PropagationOutcome, PropagationStatus,
    RealVar, SolveError,
};
pub use dataflow::{build_hamming, Network, NetworkBuilder, NetworkError, Pipe, PipeId, RunStats};
pub use interval::Interval;
