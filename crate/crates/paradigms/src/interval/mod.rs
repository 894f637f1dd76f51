//! Closed real intervals with outward-rounded arithmetic.
//!
//! An [`Interval`] is a set of real numbers `[lb, ub]`. Bounds at
//! `-inf`/`+inf` mean "unbounded on that side", so `[-inf,+inf]` is the
//! whole real line and a bound is never NaN. The empty set is a distinct
//! canonical value rather than an inverted pair of bounds, and no
//! constructor lets an inverted pair escape.
//!
//! Every arithmetic operation rounds outward: the returned interval
//! contains the exact image of the operand sets under the real operation,
//! and each finite bound is at worst one ulp beyond the correctly rounded
//! one (exact in the normal range, see [`round`]).

mod round;

use std::fmt;

/// A closed, possibly empty, possibly unbounded set of reals.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval(Repr);

#[derive(Clone, Copy, PartialEq)]
enum Repr {
    Empty,
    Bounds { lb: f64, ub: f64 },
}

/// Error returned by constructors given a NaN bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NanBound;

impl fmt::Display for NanBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "interval bounds must not be NaN")
    }
}

impl std::error::Error for NanBound {}

impl Interval {
    /// The empty set.
    pub const fn empty() -> Self {
        Interval(Repr::Empty)
    }

    /// The whole real line, `[-inf,+inf]`.
    pub const fn entire() -> Self {
        Interval(Repr::Bounds {
            lb: f64::NEG_INFINITY,
            ub: f64::INFINITY,
        })
    }

    /// `[lb, ub]` when `lb <= ub`, the empty set otherwise.
    pub fn new(lb: f64, ub: f64) -> Result<Self, NanBound> {
        if lb.is_nan() || ub.is_nan() {
            return Err(NanBound);
        }
        Ok(Self::from_bounds(lb, ub))
    }

    /// The singleton `[v, v]`.
    pub fn point(v: f64) -> Result<Self, NanBound> {
        Self::new(v, v)
    }

    /// Internal constructor for bounds already known not to be NaN.
    /// Canonicalizes: `lb > ub` becomes the empty set, an all-infinite
    /// pair on one side (which contains no reals) becomes the empty set,
    /// and `-0.0` bounds become `+0.0` so equal sets compare equal.
    pub(crate) fn from_bounds(lb: f64, ub: f64) -> Self {
        debug_assert!(!lb.is_nan() && !ub.is_nan());
        if lb > ub || lb == f64::INFINITY || ub == f64::NEG_INFINITY {
            return Self::empty();
        }
        let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
        Interval(Repr::Bounds {
            lb: clean(lb),
            ub: clean(ub),
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.0, Repr::Empty)
    }

    pub fn is_entire(&self) -> bool {
        matches!(
            self.0,
            Repr::Bounds { lb, ub } if lb == f64::NEG_INFINITY && ub == f64::INFINITY
        )
    }

    /// `(lb, ub)` of a non-empty interval.
    pub fn bounds(&self) -> Option<(f64, f64)> {
        match self.0 {
            Repr::Empty => None,
            Repr::Bounds { lb, ub } => Some((lb, ub)),
        }
    }

    pub fn lb(&self) -> Option<f64> {
        self.bounds().map(|(lb, _)| lb)
    }

    pub fn ub(&self) -> Option<f64> {
        self.bounds().map(|(_, ub)| ub)
    }

    /// `ub - lb`; zero for the empty set, infinite for unbounded sets.
    pub fn width(&self) -> f64 {
        match self.0 {
            Repr::Empty => 0.0,
            Repr::Bounds { lb, ub } => ub - lb,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        match self.0 {
            Repr::Empty => false,
            Repr::Bounds { lb, ub } => lb <= x && x <= ub,
        }
    }

    pub fn is_subset(&self, other: &Interval) -> bool {
        match (self.bounds(), other.bounds()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((al, au)), Some((bl, bu))) => bl <= al && au <= bu,
        }
    }

    /// Set intersection; empty when the operands are disjoint.
    pub fn intersect(self, other: Self) -> Self {
        let (Some((al, au)), Some((bl, bu))) = (self.bounds(), other.bounds()) else {
            return Self::empty();
        };
        Self::from_bounds(al.max(bl), au.min(bu))
    }

    /// Smallest interval containing both operands.
    pub fn hull(self, other: Self) -> Self {
        match (self.bounds(), other.bounds()) {
            (None, _) => other,
            (_, None) => self,
            (Some((al, au)), Some((bl, bu))) => Self::from_bounds(al.min(bl), au.max(bu)),
        }
    }

    /// Mirror image `[-ub, -lb]`; exact.
    pub fn neg(self) -> Self {
        match self.0 {
            Repr::Empty => self,
            Repr::Bounds { lb, ub } => Self::from_bounds(-ub, -lb),
        }
    }

    /// Outward-rounded sum of the two sets.
    pub fn add_out(self, other: Self) -> Self {
        let (Some((al, au)), Some((bl, bu))) = (self.bounds(), other.bounds()) else {
            return Self::empty();
        };
        Self::from_bounds(round::add_down(al, bl), round::add_up(au, bu))
    }

    /// Outward-rounded difference of the two sets.
    pub fn sub_out(self, other: Self) -> Self {
        let (Some((al, au)), Some((bl, bu))) = (self.bounds(), other.bounds()) else {
            return Self::empty();
        };
        Self::from_bounds(round::sub_down(al, bu), round::sub_up(au, bl))
    }

    /// Outward-rounded product of the two sets. `0 * inf` corner products
    /// resolve to 0, so the whole line stays usable as an operand.
    pub fn mul_out(self, other: Self) -> Self {
        let (Some((al, au)), Some((bl, bu))) = (self.bounds(), other.bounds()) else {
            return Self::empty();
        };
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (x, y) in [(al, bl), (al, bu), (au, bl), (au, bu)] {
            lo = lo.min(mul_corner(x, y, round::mul_down));
            hi = hi.max(mul_corner(x, y, round::mul_up));
        }
        Self::from_bounds(lo, hi)
    }

    /// Outward-rounded image of `x^2`.
    pub fn sqr_out(self) -> Self {
        let Some((lb, ub)) = self.bounds() else {
            return Self::empty();
        };
        if lb >= 0.0 {
            Self::from_bounds(round::mul_down(lb, lb), round::mul_up(ub, ub))
        } else if ub <= 0.0 {
            Self::from_bounds(round::mul_down(ub, ub), round::mul_up(lb, lb))
        } else {
            let hi = round::mul_up(lb, lb).max(round::mul_up(ub, ub));
            Self::from_bounds(0.0, hi)
        }
    }

    /// Outward-rounded square root of the non-negative part of the set;
    /// empty when the set is entirely negative.
    pub fn sqrt_out(self) -> Self {
        let clipped = self.intersect(Self::from_bounds(0.0, f64::INFINITY));
        let Some((lb, ub)) = clipped.bounds() else {
            return Self::empty();
        };
        Self::from_bounds(round::sqrt_down(lb), round::sqrt_up(ub))
    }

    /// Hull of `{ x : x * d = n, n in self, d in divisor }`, the inverse
    /// image used by the product contraction. When the divisor straddles
    /// zero the two-sided quotient set collapses to its hull, which may be
    /// the whole line.
    pub(crate) fn div_rel(self, divisor: Self) -> Self {
        let (Some((nl, nu)), Some((dl, du))) = (self.bounds(), divisor.bounds()) else {
            return Self::empty();
        };
        if dl <= 0.0 && du >= 0.0 {
            if nl <= 0.0 && nu >= 0.0 {
                // 0 * anything = 0: no information
                return Self::entire();
            }
            if dl == 0.0 && du == 0.0 {
                // x * 0 = n has no solution for n != 0
                return Self::empty();
            }
            if dl < 0.0 && du > 0.0 {
                // hull of two opposite rays
                return Self::entire();
            }
            return if du == 0.0 {
                // divisor in [dl, 0)
                if nu < 0.0 {
                    Self::from_bounds(round::div_down(nu, dl), f64::INFINITY)
                } else {
                    Self::from_bounds(f64::NEG_INFINITY, round::div_up(nl, dl))
                }
            } else {
                // divisor in (0, du]
                if nu < 0.0 {
                    Self::from_bounds(f64::NEG_INFINITY, round::div_up(nu, du))
                } else {
                    Self::from_bounds(round::div_down(nl, du), f64::INFINITY)
                }
            };
        }
        // divisor bounded away from zero: a plain quotient of sets
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (n, d) in [(nl, dl), (nl, du), (nu, dl), (nu, du)] {
            if n.is_infinite() && d.is_infinite() {
                // path-dependent corner; always dominated by the others
                continue;
            }
            lo = lo.min(round::div_down(n, d));
            hi = hi.max(round::div_up(n, d));
        }
        Self::from_bounds(lo, hi)
    }
}

fn mul_corner(x: f64, y: f64, rounded: fn(f64, f64) -> f64) -> f64 {
    if (x == 0.0 && y.is_infinite()) || (y == 0.0 && x.is_infinite()) {
        0.0
    } else {
        rounded(x, y)
    }
}

impl fmt::Display for Interval {
    /// `[<lb>,<ub>]` with 17 significant digits per bound, or `[empty]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Empty => write!(f, "[empty]"),
            Repr::Bounds { lb, ub } => write!(f, "[{:.16e},{:.16e}]", lb, ub),
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
