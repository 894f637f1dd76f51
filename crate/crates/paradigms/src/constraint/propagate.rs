//! Propagation: contraction operators applied until nothing changes.

use std::collections::VecDeque;

use super::ConstraintStore;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PropagationStatus {
    /// A full pass changed no interval bound.
    Fixpoint,
    /// Some variable's domain became empty: the system has no solution.
    Inconsistent,
    /// The round budget ran out before a fixpoint was reached.
    BudgetExhausted,
}

/// What a propagation run did.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PropagationOutcome {
    pub status: PropagationStatus,
    /// Sweeps performed by [`ConstraintStore::propagate_round_robin`],
    /// contraction calls performed by
    /// [`ConstraintStore::propagate_worklist`].
    pub rounds_used: u64,
}

impl ConstraintStore {
    /// Sweeps the constraint list in order, contracting each constraint,
    /// until a sweep changes nothing (fixpoint), a domain empties
    /// (inconsistent) or `max_rounds` sweeps have run. Bound changes are
    /// detected by exact float comparison; narrowing is monotone, so this
    /// always terminates when given the budget to.
    pub fn propagate_round_robin(&mut self, max_rounds: u64) -> PropagationOutcome {
        assert!(max_rounds >= 1, "at least one sweep is required");
        let mut changed_vars = Vec::new();
        let mut rounds = 0;
        loop {
            rounds += 1;
            changed_vars.clear();
            for i in 0..self.constraints.len() {
                let c = self.constraints[i];
                if !self.contract_tracked(c, &mut changed_vars) {
                    return PropagationOutcome {
                        status: PropagationStatus::Inconsistent,
                        rounds_used: rounds,
                    };
                }
            }
            if changed_vars.is_empty() {
                return PropagationOutcome {
                    status: PropagationStatus::Fixpoint,
                    rounds_used: rounds,
                };
            }
            if rounds == max_rounds {
                return PropagationOutcome {
                    status: PropagationStatus::BudgetExhausted,
                    rounds_used: rounds,
                };
            }
        }
    }

    /// Worklist propagation: every constraint starts queued; whenever a
    /// contraction changes a variable, every constraint referencing that
    /// variable is requeued. Reaches the same fixpoint as round-robin
    /// sweeping (the operators are monotone), usually with fewer
    /// contraction calls.
    pub fn propagate_worklist(&mut self) -> PropagationOutcome {
        let n = self.constraints.len();
        let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); self.vars.len()];
        for (i, c) in self.constraints.iter().enumerate() {
            for v in c.vars() {
                if !watchers[v.0].contains(&i) {
                    watchers[v.0].push(i);
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).collect();
        let mut queued = vec![true; n];
        let mut changed_vars = Vec::new();
        let mut calls = 0;
        while let Some(i) = queue.pop_front() {
            queued[i] = false;
            calls += 1;
            changed_vars.clear();
            if !self.contract_tracked(self.constraints[i], &mut changed_vars) {
                return PropagationOutcome {
                    status: PropagationStatus::Inconsistent,
                    rounds_used: calls,
                };
            }
            for v in &changed_vars {
                for &j in &watchers[v.0] {
                    if !queued[j] {
                        queued[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        PropagationOutcome {
            status: PropagationStatus::Fixpoint,
            rounds_used: calls,
        }
    }
}
