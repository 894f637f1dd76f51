//! Nodes, networks, and the two schedulers.
//!
//! A [`Network`] is an ordered list of firing nodes wired together by
//! bounded [`Pipe`]s. A node fires only when every input pipe has an item
//! and every output pipe has room; one `run` performs at most one firing.
//! Because pipe endpoints are exclusive (at most one reader node and one
//! writer node per pipe), the sequence of items flowing through each pipe
//! does not depend on the order in which nodes are run.

use std::collections::VecDeque;
use std::fmt;

use super::pipe::Pipe;

/// Identity of a pipe inside a [`Network`] (and the [`NetworkBuilder`]
/// that created it).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PipeId(pub(crate) usize);

#[derive(Clone, Debug)]
enum NodeKind {
    /// Multiplies each input item by a constant.
    Times {
        factor: i64,
        input: PipeId,
        output: PipeId,
    },
    /// Merges two sorted streams into one sorted stream, dropping
    /// duplicates.
    Merge {
        left: PipeId,
        right: PipeId,
        output: PipeId,
    },
    /// Copies each input item to both outputs.
    Split {
        input: PipeId,
        out_a: PipeId,
        out_b: PipeId,
    },
    /// Forwards items unchanged while recording them.
    Probe {
        input: PipeId,
        output: PipeId,
        observed: Vec<i64>,
    },
}

impl NodeKind {
    fn inputs(&self) -> ([PipeId; 2], usize) {
        match *self {
            NodeKind::Times { input, .. }
            | NodeKind::Split { input, .. }
            | NodeKind::Probe { input, .. } => ([input, input], 1),
            NodeKind::Merge { left, right, .. } => ([left, right], 2),
        }
    }

    fn outputs(&self) -> ([PipeId; 2], usize) {
        match *self {
            NodeKind::Times { output, .. }
            | NodeKind::Merge { output, .. }
            | NodeKind::Probe { output, .. } => ([output, output], 1),
            NodeKind::Split { out_a, out_b, .. } => ([out_a, out_b], 2),
        }
    }
}

#[derive(Clone, Debug)]
struct Node {
    name: String,
    kind: NodeKind,
}

/// Counters reported by a scheduler run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RunStats {
    /// `run` calls made.
    pub attempts: u64,
    /// `run` calls that fired (changed some pipe).
    pub firings: u64,
    /// Times a parked node was made ready again by a pipe change,
    /// including the initial seeding of the ready queue. Zero for the
    /// round-robin scheduler, which does not track readiness.
    pub rereadies: u64,
}

/// An immutable wiring of nodes and pipes, ready to run.
#[derive(Debug)]
pub struct Network {
    nodes: Vec<Node>,
    pipes: Vec<Pipe>,
    pipe_names: Vec<String>,
}

impl Network {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn pipe_count(&self) -> usize {
        self.pipes.len()
    }

    pub fn node_names(&self) -> impl Iterator<Item = &str> {
        self.nodes.iter().map(|n| n.name.as_str())
    }

    pub fn pipe_names(&self) -> impl Iterator<Item = &str> {
        self.pipe_names.iter().map(|n| n.as_str())
    }

    /// The pipe with the given name, for inspection.
    pub fn pipe(&self, name: &str) -> Option<&Pipe> {
        let i = self.pipe_names.iter().position(|n| n == name)?;
        Some(&self.pipes[i])
    }

    /// Names of all probe nodes, in node order.
    pub fn probe_names(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter(|n| matches!(n.kind, NodeKind::Probe { .. }))
            .map(|n| n.name.as_str())
            .collect()
    }

    /// Everything the named probe has observed so far.
    pub fn observations(&self, probe: &str) -> Option<&[i64]> {
        self.nodes.iter().find_map(|n| match &n.kind {
            NodeKind::Probe { observed, .. } if n.name == probe => Some(observed.as_slice()),
            _ => None,
        })
    }

    /// Reorders the node list; `order[k]` is the old index of the node
    /// that becomes the `k`-th. The wiring is untouched, only the order
    /// in which schedulers visit the nodes changes.
    pub fn permute_nodes(&mut self, order: &[usize]) {
        let mut sorted: Vec<usize> = order.to_vec();
        sorted.sort_unstable();
        assert!(
            sorted == (0..self.nodes.len()).collect::<Vec<_>>(),
            "order must be a permutation of 0..{}",
            self.nodes.len()
        );
        self.nodes = order.iter().map(|&i| self.nodes[i].clone()).collect();
    }

    /// Runs node `index` once. Returns `true` iff the node fired: a
    /// blocked node (an empty input or a full output) does nothing and
    /// returns `false`.
    pub fn run_node(&mut self, index: usize) -> bool {
        let Network { nodes, pipes, .. } = self;
        match &mut nodes[index].kind {
            NodeKind::Times {
                factor,
                input,
                output,
            } => {
                if pipes[input.0].is_empty() || pipes[output.0].is_full() {
                    return false;
                }
                let v = pipes[input.0].take();
                let out = factor
                    .checked_mul(v)
                    .expect("times output exceeds the 64-bit item range");
                pipes[output.0].put(out);
                true
            }
            NodeKind::Merge {
                left,
                right,
                output,
            } => {
                if pipes[left.0].is_empty()
                    || pipes[right.0].is_empty()
                    || pipes[output.0].is_full()
                {
                    return false;
                }
                let a = pipes[left.0].peek();
                let b = pipes[right.0].peek();
                let v = match a.cmp(&b) {
                    std::cmp::Ordering::Less => pipes[left.0].take(),
                    std::cmp::Ordering::Greater => pipes[right.0].take(),
                    std::cmp::Ordering::Equal => {
                        // equal heads: consume both, emit one
                        pipes[left.0].take();
                        pipes[right.0].take()
                    }
                };
                pipes[output.0].put(v);
                true
            }
            NodeKind::Split {
                input,
                out_a,
                out_b,
            } => {
                if pipes[input.0].is_empty() || pipes[out_a.0].is_full() || pipes[out_b.0].is_full()
                {
                    return false;
                }
                let v = pipes[input.0].take();
                pipes[out_a.0].put(v);
                pipes[out_b.0].put(v);
                true
            }
            NodeKind::Probe {
                input,
                output,
                observed,
            } => {
                if pipes[input.0].is_empty() || pipes[output.0].is_full() {
                    return false;
                }
                let v = pipes[input.0].take();
                observed.push(v);
                pipes[output.0].put(v);
                true
            }
        }
    }

    /// Makes `sweeps` passes over the node list in order, running each
    /// node once per pass.
    pub fn run_round_robin(&mut self, sweeps: u64) -> RunStats {
        let mut stats = RunStats::default();
        for _ in 0..sweeps {
            for i in 0..self.nodes.len() {
                stats.attempts += 1;
                if self.run_node(i) {
                    stats.firings += 1;
                }
            }
        }
        stats
    }

    /// Runs nodes from a ready queue until it drains or `max_firings`
    /// firings happened. A node that fails to fire is parked; any pipe
    /// whose content changes re-readies the nodes attached to it, and a
    /// node that fired stays ready. Produces the same pipe and probe
    /// sequences as round-robin sweeping run to the same point.
    pub fn run_blocked_set(&mut self, max_firings: u64) -> RunStats {
        let n = self.nodes.len();
        let mut attached: Vec<Vec<usize>> = vec![Vec::new(); self.pipes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            let (ins, ni) = node.kind.inputs();
            let (outs, no) = node.kind.outputs();
            for p in ins.iter().take(ni).chain(outs.iter().take(no)) {
                if !attached[p.0].contains(&i) {
                    attached[p.0].push(i);
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).collect();
        let mut queued = vec![true; n];
        let mut stats = RunStats {
            rereadies: n as u64,
            ..RunStats::default()
        };
        while stats.firings < max_firings {
            let Some(i) = queue.pop_front() else { break };
            queued[i] = false;
            stats.attempts += 1;

            let (ins, ni) = self.nodes[i].kind.inputs();
            let (outs, no) = self.nodes[i].kind.outputs();
            let involved: Vec<PipeId> = ins
                .iter()
                .take(ni)
                .chain(outs.iter().take(no))
                .copied()
                .collect();
            let before: Vec<usize> = involved.iter().map(|p| self.pipes[p.0].len()).collect();

            if !self.run_node(i) {
                continue;
            }
            stats.firings += 1;
            // a node that fired remains a candidate until it blocks
            if !queued[i] {
                queued[i] = true;
                queue.push_back(i);
            }
            for (p, &len_before) in involved.iter().zip(&before) {
                if self.pipes[p.0].len() != len_before {
                    for &j in &attached[p.0] {
                        if !queued[j] {
                            queued[j] = true;
                            queue.push_back(j);
                            stats.rereadies += 1;
                        }
                    }
                }
            }
        }
        stats
    }
}

/// Violations detected while assembling a [`Network`].
#[derive(Debug)]
pub enum NetworkError {
    ZeroCapacity {
        pipe: String,
    },
    SeedOverflow {
        pipe: String,
        seeded: usize,
        capacity: usize,
    },
    DuplicatePipeName {
        name: String,
    },
    DuplicateNodeName {
        name: String,
    },
    ForeignPipe {
        node: String,
    },
    RepeatedEndpoint {
        node: String,
        pipe: String,
    },
    TwoReaders {
        pipe: String,
        first: String,
        second: String,
    },
    TwoWriters {
        pipe: String,
        first: String,
        second: String,
    },
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkError::ZeroCapacity { pipe } => {
                write!(f, "pipe '{pipe}' must have capacity at least 1")
            }
            NetworkError::SeedOverflow { pipe, seeded, capacity } => write!(
                f,
                "pipe '{pipe}' is seeded with {seeded} items but holds only {capacity}"
            ),
            NetworkError::DuplicatePipeName { name } => {
                write!(f, "pipe name '{name}' is used more than once")
            }
            NetworkError::DuplicateNodeName { name } => {
                write!(f, "node name '{name}' is used more than once")
            }
            NetworkError::ForeignPipe { node } => {
                write!(f, "node '{node}' references a pipe from another builder")
            }
            NetworkError::RepeatedEndpoint { node, pipe } => write!(
                f,
                "node '{node}' uses pipe '{pipe}' for more than one endpoint of the same direction"
            ),
            NetworkError::TwoReaders { pipe, first, second } => write!(
                f,
                "pipe '{pipe}' is read by both '{first}' and '{second}'; each pipe has one reader"
            ),
            NetworkError::TwoWriters { pipe, first, second } => write!(
                f,
                "pipe '{pipe}' is written by both '{first}' and '{second}'; each pipe has one writer"
            ),
        }
    }
}

impl std::error::Error for NetworkError {}

struct PipeSpec {
    name: String,
    capacity: usize,
    seed: Vec<i64>,
}

/// Declarative assembly of a [`Network`]. Pipes and nodes are recorded in
/// order; [`NetworkBuilder::build`] validates the wiring and reports the
/// first violation by name.
#[derive(Default)]
pub struct NetworkBuilder {
    pipes: Vec<PipeSpec>,
    nodes: Vec<Node>,
}

impl NetworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares an empty pipe.
    pub fn pipe(&mut self, name: &str, capacity: usize) -> PipeId {
        self.seeded_pipe(name, capacity, [])
    }

    /// Declares a pipe holding the given items at startup.
    pub fn seeded_pipe(
        &mut self,
        name: &str,
        capacity: usize,
        seed: impl IntoIterator<Item = i64>,
    ) -> PipeId {
        self.pipes.push(PipeSpec {
            name: name.to_owned(),
            capacity,
            seed: seed.into_iter().collect(),
        });
        PipeId(self.pipes.len() - 1)
    }

    pub fn times(&mut self, name: &str, factor: i64, input: PipeId, output: PipeId) {
        self.nodes.push(Node {
            name: name.to_owned(),
            kind: NodeKind::Times {
                factor,
                input,
                output,
            },
        });
    }

    pub fn merge(&mut self, name: &str, left: PipeId, right: PipeId, output: PipeId) {
        self.nodes.push(Node {
            name: name.to_owned(),
            kind: NodeKind::Merge {
                left,
                right,
                output,
            },
        });
    }

    pub fn split(&mut self, name: &str, input: PipeId, out_a: PipeId, out_b: PipeId) {
        self.nodes.push(Node {
            name: name.to_owned(),
            kind: NodeKind::Split {
                input,
                out_a,
                out_b,
            },
        });
    }

    pub fn probe(&mut self, name: &str, input: PipeId, output: PipeId) {
        self.nodes.push(Node {
            name: name.to_owned(),
            kind: NodeKind::Probe {
                input,
                output,
                observed: Vec::new(),
            },
        });
    }

    /// Validates the wiring and produces the runnable network.
    pub fn build(self) -> Result<Network, NetworkError> {
        for (i, p) in self.pipes.iter().enumerate() {
            if p.capacity == 0 {
                return Err(NetworkError::ZeroCapacity {
                    pipe: p.name.clone(),
                });
            }
            if p.seed.len() > p.capacity {
                return Err(NetworkError::SeedOverflow {
                    pipe: p.name.clone(),
                    seeded: p.seed.len(),
                    capacity: p.capacity,
                });
            }
            if self.pipes[..i].iter().any(|q| q.name == p.name) {
                return Err(NetworkError::DuplicatePipeName {
                    name: p.name.clone(),
                });
            }
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if self.nodes[..i].iter().any(|m| m.name == n.name) {
                return Err(NetworkError::DuplicateNodeName {
                    name: n.name.clone(),
                });
            }
        }

        let mut reader: Vec<Option<usize>> = vec![None; self.pipes.len()];
        let mut writer: Vec<Option<usize>> = vec![None; self.pipes.len()];
        for (ni, node) in self.nodes.iter().enumerate() {
            let (ins, n_in) = node.kind.inputs();
            let ins = &ins[..n_in];
            let (outs, n_out) = node.kind.outputs();
            let outs = &outs[..n_out];
            for p in ins.iter().chain(outs) {
                if p.0 >= self.pipes.len() {
                    return Err(NetworkError::ForeignPipe {
                        node: node.name.clone(),
                    });
                }
            }
            for (k, p) in ins.iter().enumerate() {
                if ins[..k].contains(p) {
                    return Err(NetworkError::RepeatedEndpoint {
                        node: node.name.clone(),
                        pipe: self.pipes[p.0].name.clone(),
                    });
                }
                if let Some(prev) = reader[p.0] {
                    return Err(NetworkError::TwoReaders {
                        pipe: self.pipes[p.0].name.clone(),
                        first: self.nodes[prev].name.clone(),
                        second: node.name.clone(),
                    });
                }
                reader[p.0] = Some(ni);
            }
            for (k, p) in outs.iter().enumerate() {
                if outs[..k].contains(p) {
                    return Err(NetworkError::RepeatedEndpoint {
                        node: node.name.clone(),
                        pipe: self.pipes[p.0].name.clone(),
                    });
                }
                if let Some(prev) = writer[p.0] {
                    return Err(NetworkError::TwoWriters {
                        pipe: self.pipes[p.0].name.clone(),
                        first: self.nodes[prev].name.clone(),
                        second: node.name.clone(),
                    });
                }
                writer[p.0] = Some(ni);
            }
        }

        let mut pipes = Vec::with_capacity(self.pipes.len());
        let mut pipe_names = Vec::with_capacity(self.pipes.len());
        for spec in self.pipes {
            let mut pipe = Pipe::new(spec.capacity);
            for v in spec.seed {
                pipe.put(v);
            }
            pipes.push(pipe);
            pipe_names.push(spec.name);
        }
        Ok(Network {
            nodes: self.nodes,
            pipes,
            pipe_names,
        })
    }
}
