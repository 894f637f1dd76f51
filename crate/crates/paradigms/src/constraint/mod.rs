//! Interval constraints: shared real variables, primitive relations with
//! contraction operators, propagation to fixpoint and branch-and-prune
//! search.
//!
//! A [`ConstraintStore`] owns the variables and the constraints posted
//! over them. Each variable is a named cell holding the interval of still
//! possible values; constraints reference variables by [`RealVar`]
//! identity, so relations sharing an unknown see each other's narrowing.
//! Solver operations only ever shrink a variable's interval.

mod propagate;
mod solve;

pub use propagate::{PropagationOutcome, PropagationStatus};
pub use solve::SolveError;

use crate::interval::Interval;

/// Identity of one real unknown inside a [`ConstraintStore`].
///
/// Two constraints built from the same `RealVar` constrain the same
/// number, not copies of it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RealVar(pub(crate) usize);

/// A primitive relation over 2 or 3 variables. The variant fixes both the
/// relation and the arity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Constraint {
    /// `x <= y`
    Leq(RealVar, RealVar),
    /// `x = y`
    Eq(RealVar, RealVar),
    /// `x + y = z`
    Sum(RealVar, RealVar, RealVar),
    /// `x * y = z`
    Prod(RealVar, RealVar, RealVar),
    /// `x^2 = y`
    Square(RealVar, RealVar),
}

impl Constraint {
    /// The referenced variables, in declared order.
    pub fn vars(self) -> impl Iterator<Item = RealVar> {
        let (arr, n) = match self {
            Constraint::Leq(x, y) | Constraint::Eq(x, y) | Constraint::Square(x, y) => {
                ([x, y, y], 2)
            }
            Constraint::Sum(x, y, z) | Constraint::Prod(x, y, z) => ([x, y, z], 3),
        };
        arr.into_iter().take(n)
    }
}

#[derive(Clone)]
struct VarCell {
    current: Interval,
    name: Option<String>,
}

/// The variables of a problem together with the constraints over them.
#[derive(Clone, Default)]
pub struct ConstraintStore {
    vars: Vec<VarCell>,
    constraints: Vec<Constraint>,
}

enum Meet {
    Unchanged,
    Narrowed,
    Emptied,
}

impl ConstraintStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Creates a fresh unknown with the given initial domain.
    pub fn var(&mut self, initial: Interval) -> RealVar {
        self.vars.push(VarCell {
            current: initial,
            name: None,
        });
        RealVar(self.vars.len() - 1)
    }

    /// Creates a fresh unknown with a label used when printing solutions.
    pub fn named_var(&mut self, name: &str, initial: Interval) -> RealVar {
        let v = self.var(initial);
        self.vars[v.0].name = Some(name.to_owned());
        v
    }

    /// The interval of still possible values for `v`.
    pub fn value(&self, v: RealVar) -> Interval {
        self.vars[v.0].current
    }

    /// Replaces the domain of `v`, e.g. to reset between solver runs.
    pub fn set_value(&mut self, v: RealVar, value: Interval) {
        self.vars[v.0].current = value;
    }

    pub fn name(&self, v: RealVar) -> Option<&str> {
        self.vars[v.0].name.as_deref()
    }

    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> impl Iterator<Item = RealVar> {
        (0..self.vars.len()).map(RealVar)
    }

    /// Adds a constraint to the store.
    pub fn post(&mut self, c: Constraint) {
        for v in c.vars() {
            assert!(
                v.0 < self.vars.len(),
                "constraint references a variable from another store"
            );
        }
        self.constraints.push(c);
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// All current domains, in variable order.
    pub fn snapshot(&self) -> Vec<Interval> {
        self.vars.iter().map(|c| c.current).collect()
    }

    pub fn restore(&mut self, domains: &[Interval]) {
        assert_eq!(
            domains.len(),
            self.vars.len(),
            "snapshot from another store"
        );
        for (cell, &d) in self.vars.iter_mut().zip(domains) {
            cell.current = d;
        }
    }

    /// Applies the contraction operator of `c`: every referenced variable
    /// is intersected with the projection of the relation onto it, using
    /// peers already updated by earlier projections of the same call.
    /// Returns `false` iff a variable's interval became (or already was)
    /// empty; later projections of the call are then skipped.
    pub fn contract(&mut self, c: Constraint) -> bool {
        self.contract_tracked(c, &mut Vec::new())
    }

    /// `contract`, recording every variable whose interval changed.
    pub(crate) fn contract_tracked(&mut self, c: Constraint, changed: &mut Vec<RealVar>) -> bool {
        for v in c.vars() {
            if self.value(v).is_empty() {
                return false;
            }
        }
        match c {
            Constraint::Leq(x, y) => {
                let (_, yu) = self.value(y).bounds().expect("non-empty");
                if !self.meet_track(x, Interval::from_bounds(f64::NEG_INFINITY, yu), changed) {
                    return false;
                }
                let (xl, _) = self.value(x).bounds().expect("non-empty");
                self.meet_track(y, Interval::from_bounds(xl, f64::INFINITY), changed)
            }
            Constraint::Eq(x, y) => {
                // one shared projection, written to both sides even when
                // it is empty
                let m = self.value(x).intersect(self.value(y));
                let ok = !m.is_empty();
                self.meet_track(x, m, changed);
                self.meet_track(y, m, changed);
                ok
            }
            Constraint::Sum(x, y, z) => {
                let p = self.value(z).sub_out(self.value(y));
                if !self.meet_track(x, p, changed) {
                    return false;
                }
                let p = self.value(z).sub_out(self.value(x));
                if !self.meet_track(y, p, changed) {
                    return false;
                }
                let p = self.value(x).add_out(self.value(y));
                self.meet_track(z, p, changed)
            }
            Constraint::Prod(x, y, z) => {
                let p = self.value(z).div_rel(self.value(y));
                if !self.meet_track(x, p, changed) {
                    return false;
                }
                let p = self.value(z).div_rel(self.value(x));
                if !self.meet_track(y, p, changed) {
                    return false;
                }
                let p = self.value(x).mul_out(self.value(y));
                self.meet_track(z, p, changed)
            }
            Constraint::Square(x, y) => {
                // project through the sqrt branch the current domain of x
                // already selects; the two-branch hull is only needed when
                // x still straddles zero
                let root = self.value(y).sqrt_out();
                let proj = match self.value(x).bounds() {
                    Some((lb, _)) if lb >= 0.0 => root,
                    Some((_, ub)) if ub <= 0.0 => root.neg(),
                    _ => root.hull(root.neg()),
                };
                if !self.meet_track(x, proj, changed) {
                    return false;
                }
                let p = self.value(x).sqr_out();
                self.meet_track(y, p, changed)
            }
        }
    }

    /// Intersects the domain of `v` with `with`; reports whether the
    /// domain is still non-empty and logs a change when one happened.
    fn meet_track(&mut self, v: RealVar, with: Interval, changed: &mut Vec<RealVar>) -> bool {
        let alive = match self.meet(v, with) {
            Meet::Unchanged => return true,
            Meet::Narrowed => true,
            Meet::Emptied => false,
        };
        if !changed.contains(&v) {
            changed.push(v);
        }
        alive
    }

    fn meet(&mut self, v: RealVar, with: Interval) -> Meet {
        let old = self.vars[v.0].current;
        let new = old.intersect(with);
        if new == old {
            return Meet::Unchanged;
        }
        self.vars[v.0].current = new;
        if new.is_empty() {
            Meet::Emptied
        } else {
            Meet::Narrowed
        }
    }
}

/// The intersection of the unit circle `x^2 + y^2 = 1` with the parabola
/// `y = x^2`, decomposed into primitive constraints over shared
/// variables. With `positive_x` an extra `0.5 <= x` constraint keeps only
/// the right-hand intersection point.
///
/// Returns the store and the `x` and `y` variables.
pub fn circle_parabola_system(positive_x: bool) -> (ConstraintStore, RealVar, RealVar) {
    let mut store = ConstraintStore::new();
    let x = store.named_var("x", Interval::entire());
    let y = store.named_var("y", Interval::entire());
    let x_sq = store.named_var("x_sq", Interval::entire());
    let y_sq = store.named_var("y_sq", Interval::entire());
    let one = store.named_var("one", Interval::point(1.0).unwrap());
    store.post(Constraint::Square(x, x_sq));
    store.post(Constraint::Square(y, y_sq));
    store.post(Constraint::Sum(x_sq, y_sq, one));
    store.post(Constraint::Eq(y, x_sq));
    if positive_x {
        let half = store.named_var("half", Interval::point(0.5).unwrap());
        store.post(Constraint::Leq(half, x));
    }
    (store, x, y)
}
