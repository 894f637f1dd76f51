//! Dataflow networks: bounded pipes, firing nodes, schedulers.
//!
//! Computation happens in a [`Network`] of nodes connected by
//! unidirectional bounded FIFO [`Pipe`]s. Run the network by calling
//! [`Network::run_round_robin`] or [`Network::run_blocked_set`]; either
//! way each pipe carries the same item sequence, so results do not depend
//! on scheduling order.

mod hamming;
mod netfile;
mod network;
mod pipe;

pub use hamming::build_hamming;
pub use netfile::{load_network, parse_network, NetFileError};
pub use network::{Network, NetworkBuilder, NetworkError, PipeId, RunStats};
pub use pipe::Pipe;
