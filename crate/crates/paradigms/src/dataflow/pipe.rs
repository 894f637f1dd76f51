//! Bounded FIFO pipes carrying 64-bit integer items.

use std::collections::VecDeque;

/// A unidirectional datapipe: a queue with a fixed capacity.
///
/// `put` on a full pipe and `take`/`peek` on an empty pipe are contract
/// violations and panic; node firing rules check first, which makes those
/// states unreachable in a valid run.
#[derive(Debug, Clone)]
pub struct Pipe {
    items: VecDeque<i64>,
    capacity: usize,
}

impl Pipe {
    /// An empty pipe holding at most `capacity` items.
    pub fn new(capacity: usize) -> Self {
        assert!(capacity >= 1, "pipe capacity must be at least 1");
        Pipe {
            items: VecDeque::with_capacity(capacity),
            capacity,
        }
    }

    /// Appends an item at the input end.
    pub fn put(&mut self, v: i64) {
        assert!(!self.is_full(), "put on a full pipe");
        self.items.push_back(v);
    }

    /// The item at the output end, without consuming it.
    pub fn peek(&self) -> i64 {
        *self.items.front().expect("peek on an empty pipe")
    }

    /// Removes and returns the item at the output end.
    pub fn take(&mut self) -> i64 {
        self.items.pop_front().expect("take on an empty pipe")
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.items.len() == self.capacity
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }
}
