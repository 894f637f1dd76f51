//! Branch-and-prune search: propagate, then split the widest target
//! variable and recurse until every target interval is narrow enough.

use std::fmt;

use super::{ConstraintStore, PropagationStatus, RealVar};
use crate::interval::Interval;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolveError {
    /// The tolerance must be a positive number.
    InvalidTolerance(f64),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::InvalidTolerance(eps) => {
                write!(f, "tolerance must be a positive number, got {eps}")
            }
        }
    }
}

impl std::error::Error for SolveError {}

impl ConstraintStore {
    /// Encloses every solution of the store in boxes whose target
    /// intervals are at most `eps` wide.
    ///
    /// Each branch is propagated to a fixpoint; inconsistent branches are
    /// discarded, narrow-enough branches are emitted as one box (the
    /// target intervals, in target order), and any other branch is split
    /// at the midpoint of its widest target variable, left half first.
    /// The union of the returned boxes contains every real solution, and
    /// neighbouring boxes at most touch at a split point.
    ///
    /// The variable domains are left as they were before the call.
    pub fn solve(
        &mut self,
        targets: &[RealVar],
        eps: f64,
    ) -> Result<Vec<Vec<Interval>>, SolveError> {
        if !(eps > 0.0) {
            return Err(SolveError::InvalidTolerance(eps));
        }
        let initial = self.snapshot();
        let mut boxes = Vec::new();
        let mut pending = vec![initial.clone()];
        while let Some(state) = pending.pop() {
            self.restore(&state);
            match self.propagate_worklist().status {
                PropagationStatus::Inconsistent => continue,
                PropagationStatus::Fixpoint => {}
                PropagationStatus::BudgetExhausted => {
                    unreachable!("worklist propagation has no budget")
                }
            }
            let widest = targets
                .iter()
                .map(|&v| self.value(v).width())
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(&b.1));
            let split = match widest {
                Some((i, w)) if w > eps => split_point(self.value(targets[i])).map(|m| (i, m)),
                _ => None,
            };
            match split {
                None => {
                    // narrow enough, or an atomic interval that cannot split
                    boxes.push(targets.iter().map(|&v| self.value(v)).collect());
                }
                Some((i, mid)) => {
                    let v = targets[i];
                    let (lb, ub) = self
                        .value(v)
                        .bounds()
                        .expect("consistent after propagation");
                    let narrowed = self.snapshot();
                    let mut right = narrowed.clone();
                    right[v.0] = Interval::from_bounds(mid, ub);
                    let mut left = narrowed;
                    left[v.0] = Interval::from_bounds(lb, mid);
                    pending.push(right);
                    pending.push(left); // popped first: left-to-right order
                }
            }
        }
        self.restore(&initial);
        Ok(boxes)
    }
}

/// A split point strictly inside the interval, or `None` when no float
/// lies strictly between the bounds. Finite intervals split at the
/// midpoint; intervals with an infinite bound split at 0 or +-2^52 when
/// those are interior, else by doubling the finite bound.
fn split_point(iv: Interval) -> Option<f64> {
    const BIG: f64 = 4_503_599_627_370_496.0; // 2^52
    let (lb, ub) = iv.bounds()?;
    if lb == f64::NEG_INFINITY && ub == f64::INFINITY {
        return Some(0.0);
    }
    if lb == f64::NEG_INFINITY {
        if ub > 0.0 {
            return Some(0.0);
        }
        if ub > -BIG {
            return Some(-BIG);
        }
        let c = (ub * 2.0).max(f64::MIN);
        return (c < ub).then_some(c);
    }
    if ub == f64::INFINITY {
        if lb < 0.0 {
            return Some(0.0);
        }
        if lb < BIG {
            return Some(BIG);
        }
        let c = (lb * 2.0).min(f64::MAX);
        return (c > lb).then_some(c);
    }
    let mid = lb / 2.0 + ub / 2.0;
    if lb < mid && mid < ub {
        return Some(mid);
    }
    let mid = lb + (ub - lb) / 2.0;
    (lb < mid && mid < ub).then_some(mid)
}
