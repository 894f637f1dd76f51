//! Directed rounding for bound arithmetic.
//!
//! Hardware `f64` arithmetic rounds to nearest. The helpers here return
//! bounds guaranteed to lie on the requested side of the exact real
//! result. In the normal exponent range the bounds are correctly rounded:
//! the rounding error of the nearest result is recovered exactly (two-sum
//! for addition, FMA residuals for multiplication, division and square
//! root) and the result is stepped one float outward only when the error
//! term says the true value lies beyond it. Outside that range the result
//! is stepped outward unconditionally, which costs at most one ulp of
//! tightness.

/// FMA residuals are exact only while the magnitudes involved stay well
/// above the subnormal range, where the error term itself could underflow.
const RESIDUAL_SAFE: f64 = 1e-280;

/// Exact rounding error of `s = a + b` by Knuth's two-sum, or `None` when
/// an intermediate overflows.
fn add_error(a: f64, b: f64, s: f64) -> Option<f64> {
    let bv = s - a;
    let av = s - bv;
    if !bv.is_finite() || !av.is_finite() {
        return None;
    }
    Some((a - av) + (b - bv))
}

pub fn add_down(a: f64, b: f64) -> f64 {
    debug_assert!(!a.is_nan() && !b.is_nan());
    let s = a + b;
    if !s.is_finite() {
        if s == f64::INFINITY && a.is_finite() && b.is_finite() {
            // overflow: the exact sum is finite but above f64::MAX
            return f64::MAX;
        }
        return s;
    }
    match add_error(a, b, s) {
        Some(e) if e >= 0.0 => s,
        _ => s.next_down(),
    }
}

pub fn add_up(a: f64, b: f64) -> f64 {
    debug_assert!(!a.is_nan() && !b.is_nan());
    let s = a + b;
    if !s.is_finite() {
        if s == f64::NEG_INFINITY && a.is_finite() && b.is_finite() {
            return f64::MIN;
        }
        return s;
    }
    match add_error(a, b, s) {
        Some(e) if e <= 0.0 => s,
        _ => s.next_up(),
    }
}

pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

pub fn mul_down(a: f64, b: f64) -> f64 {
    debug_assert!(!a.is_nan() && !b.is_nan());
    let p = a * b;
    debug_assert!(!p.is_nan(), "0 * inf must be resolved by the caller");
    if !p.is_finite() {
        if p == f64::INFINITY && a.is_finite() && b.is_finite() {
            return f64::MAX;
        }
        return p;
    }
    if p == 0.0 {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        // underflow: the exact product is a nonzero value of known sign
        return if (a > 0.0) == (b > 0.0) {
            0.0
        } else {
            (-0.0f64).next_down()
        };
    }
    if p.abs() < RESIDUAL_SAFE {
        return p.next_down();
    }
    let e = a.mul_add(b, -p);
    if e >= 0.0 {
        p
    } else {
        p.next_down()
    }
}

pub fn mul_up(a: f64, b: f64) -> f64 {
    debug_assert!(!a.is_nan() && !b.is_nan());
    let p = a * b;
    debug_assert!(!p.is_nan(), "0 * inf must be resolved by the caller");
    if !p.is_finite() {
        if p == f64::NEG_INFINITY && a.is_finite() && b.is_finite() {
            return f64::MIN;
        }
        return p;
    }
    if p == 0.0 {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        return if (a > 0.0) == (b > 0.0) {
            0.0f64.next_up()
        } else {
            0.0
        };
    }
    if p.abs() < RESIDUAL_SAFE {
        return p.next_up();
    }
    let e = a.mul_add(b, -p);
    if e <= 0.0 {
        p
    } else {
        p.next_up()
    }
}

pub fn div_down(a: f64, b: f64) -> f64 {
    debug_assert!(!a.is_nan() && !b.is_nan() && b != 0.0);
    let q = a / b;
    debug_assert!(!q.is_nan(), "inf/inf must be filtered by the caller");
    if !q.is_finite() {
        if q == f64::INFINITY && a.is_finite() {
            return f64::MAX;
        }
        return q;
    }
    if b.is_infinite() {
        // finite / infinite: the closure of the quotient set reaches 0
        return 0.0;
    }
    if q == 0.0 {
        if a == 0.0 {
            return 0.0;
        }
        return if (a > 0.0) == (b > 0.0) {
            0.0
        } else {
            (-0.0f64).next_down()
        };
    }
    if q.abs() < RESIDUAL_SAFE || a.abs() < RESIDUAL_SAFE {
        return q.next_down();
    }
    let r = q.mul_add(b, -a); // exact q*b - a
    if r == 0.0 {
        return q;
    }
    // the exact quotient lies below q iff r and b share a sign
    if (r > 0.0) == (b > 0.0) {
        q.next_down()
    } else {
        q
    }
}

pub fn div_up(a: f64, b: f64) -> f64 {
    debug_assert!(!a.is_nan() && !b.is_nan() && b != 0.0);
    let q = a / b;
    debug_assert!(!q.is_nan(), "inf/inf must be filtered by the caller");
    if !q.is_finite() {
        if q == f64::NEG_INFINITY && a.is_finite() {
            return f64::MIN;
        }
        return q;
    }
    if b.is_infinite() {
        return 0.0;
    }
    if q == 0.0 {
        if a == 0.0 {
            return 0.0;
        }
        return if (a > 0.0) == (b > 0.0) {
            0.0f64.next_up()
        } else {
            0.0
        };
    }
    if q.abs() < RESIDUAL_SAFE || a.abs() < RESIDUAL_SAFE {
        return q.next_up();
    }
    let r = q.mul_add(b, -a);
    if r == 0.0 {
        return q;
    }
    // the exact quotient lies above q iff r and b have opposite signs
    if (r > 0.0) == (b > 0.0) {
        q
    } else {
        q.next_up()
    }
}

pub fn sqrt_down(y: f64) -> f64 {
    debug_assert!(y >= 0.0);
    if y == 0.0 {
        return 0.0;
    }
    if y == f64::INFINITY {
        return f64::INFINITY;
    }
    let r = y.sqrt();
    if y < RESIDUAL_SAFE {
        return r.next_down();
    }
    let e = r.mul_add(r, -y); // exact r^2 - y
    if e > 0.0 {
        r.next_down()
    } else {
        r
    }
}

pub fn sqrt_up(y: f64) -> f64 {
    debug_assert!(y >= 0.0);
    if y == 0.0 {
        return 0.0;
    }
    if y == f64::INFINITY {
        return f64::INFINITY;
    }
    let r = y.sqrt();
    if y < RESIDUAL_SAFE {
        return r.next_up();
    }
    let e = r.mul_add(r, -y);
    if e < 0.0 {
        r.next_up()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn rat(x: f64) -> BigRational {
        BigRational::from_float(x).expect("finite")
    }

    /// The largest float at or below / the smallest at or above a rational.
    fn assert_correctly_rounded(down: f64, up: f64, exact: &BigRational) {
        if down.is_finite() {
            assert!(&rat(down) <= exact, "down bound {down:e} above exact value");
        }
        if up.is_finite() {
            assert!(&rat(up) >= exact, "up bound {up:e} below exact value");
        }
        // tightness: stepping once past the bound must cross the exact value
        if down.is_finite() && down.next_up().is_finite() {
            assert!(
                &rat(down.next_up()) > exact,
                "down bound {down:e} not tight"
            );
        }
        if up.is_finite() && up.next_down().is_finite() {
            assert!(&rat(up.next_down()) < exact, "up bound {up:e} not tight");
        }
    }

    #[test]
    fn add_exact_integers() {
        assert_eq!(add_down(1.0, 2.0), 3.0);
        assert_eq!(add_up(1.0, 2.0), 3.0);
        assert_eq!(sub_down(5.0, 3.0), 2.0);
        assert_eq!(sub_up(5.0, 3.0), 2.0);
    }

    #[test]
    fn add_inexact_brackets() {
        let exact = rat(0.1) + rat(0.2);
        assert_correctly_rounded(add_down(0.1, 0.2), add_up(0.1, 0.2), &exact);
        let exact = rat(1.0) + rat(1e-30);
        assert_correctly_rounded(add_down(1.0, 1e-30), add_up(1.0, 1e-30), &exact);
    }

    #[test]
    fn add_overflow_clamps() {
        assert_eq!(add_down(f64::MAX, f64::MAX), f64::MAX);
        assert_eq!(add_up(f64::MAX, f64::MAX), f64::INFINITY);
        assert_eq!(add_down(f64::MIN, f64::MIN), f64::NEG_INFINITY);
        assert_eq!(add_up(f64::MIN, f64::MIN), f64::MIN);
    }

    #[test]
    fn add_with_infinite_operand() {
        assert_eq!(add_down(f64::NEG_INFINITY, 1.0), f64::NEG_INFINITY);
        assert_eq!(add_up(f64::INFINITY, -1.0), f64::INFINITY);
    }

    #[test]
    fn mul_exact_and_inexact() {
        assert_eq!(mul_down(3.0, 4.0), 12.0);
        assert_eq!(mul_up(3.0, 4.0), 12.0);
        assert_eq!(mul_down(-3.0, 4.0), -12.0);
        let exact = rat(0.1) * rat(0.3);
        assert_correctly_rounded(mul_down(0.1, 0.3), mul_up(0.1, 0.3), &exact);
    }

    #[test]
    fn mul_underflow_keeps_sign_side() {
        let tiny = 1e-200;
        assert_eq!(mul_down(tiny, tiny), 0.0);
        assert!(mul_up(tiny, tiny) > 0.0);
        assert!(mul_down(-tiny, tiny) < 0.0);
        assert_eq!(mul_up(-tiny, tiny), 0.0);
    }

    #[test]
    fn div_exact_and_inexact() {
        assert_eq!(div_down(6.0, 3.0), 2.0);
        assert_eq!(div_up(6.0, 3.0), 2.0);
        let exact = rat(1.0) / rat(3.0);
        assert_correctly_rounded(div_down(1.0, 3.0), div_up(1.0, 3.0), &exact);
        let exact = rat(-1.0) / rat(7.0);
        assert_correctly_rounded(div_down(-1.0, 7.0), div_up(-1.0, 7.0), &exact);
    }

    #[test]
    fn div_by_infinite_reaches_zero() {
        assert_eq!(div_down(5.0, f64::INFINITY), 0.0);
        assert_eq!(div_up(5.0, f64::INFINITY), 0.0);
        assert_eq!(div_down(5.0, f64::NEG_INFINITY), 0.0);
    }

    #[test]
    fn sqrt_exact_squares() {
        assert_eq!(sqrt_down(4.0), 2.0);
        assert_eq!(sqrt_up(4.0), 2.0);
        assert_eq!(sqrt_down(1.0), 1.0);
        assert_eq!(sqrt_down(0.0), 0.0);
        assert_eq!(sqrt_up(f64::INFINITY), f64::INFINITY);
    }

    #[test]
    fn sqrt_inexact_brackets() {
        for y in [2.0, 3.0, 0.5, 10.0, 1e10, 1e-10] {
            let d = sqrt_down(y);
            let u = sqrt_up(y);
            assert!(rat(d) * rat(d) <= rat(y), "sqrt_down({y}) too high");
            assert!(rat(u) * rat(u) >= rat(y), "sqrt_up({y}) too low");
            let d2 = d.next_up();
            assert!(rat(d2) * rat(d2) > rat(y), "sqrt_down({y}) not tight");
            let u2 = u.next_down();
            assert!(rat(u2) * rat(u2) < rat(y), "sqrt_up({y}) not tight");
        }
    }

    fn finite_f64() -> impl Strategy<Value = f64> {
        prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO
    }

    proptest! {
        #[test]
        fn prop_add_brackets_exact(a in finite_f64(), b in finite_f64()) {
            let d = add_down(a, b);
            let u = add_up(a, b);
            let exact = rat(a) + rat(b);
            if d.is_finite() {
                prop_assert!(rat(d) <= exact);
            }
            if u.is_finite() {
                prop_assert!(rat(u) >= exact);
            }
            prop_assert!(d <= u);
        }

        #[test]
        fn prop_mul_brackets_exact(a in finite_f64(), b in finite_f64()) {
            let d = mul_down(a, b);
            let u = mul_up(a, b);
            let exact = rat(a) * rat(b);
            if d.is_finite() {
                prop_assert!(rat(d) <= exact);
            }
            if u.is_finite() {
                prop_assert!(rat(u) >= exact);
            }
            prop_assert!(d <= u);
        }

        #[test]
        fn prop_div_brackets_exact(a in finite_f64(), b in finite_f64()) {
            prop_assume!(b != 0.0);
            let d = div_down(a, b);
            let u = div_up(a, b);
            let exact = rat(a) / rat(b);
            if d.is_finite() {
                prop_assert!(rat(d) <= exact);
            }
            if u.is_finite() {
                prop_assert!(rat(u) >= exact);
            }
            prop_assert!(d <= u);
        }

        #[test]
        fn prop_sqrt_brackets_exact(y in finite_f64().prop_map(f64::abs)) {
            let d = sqrt_down(y);
            let u = sqrt_up(y);
            prop_assert!(d >= 0.0);
            prop_assert!(rat(d) * rat(d) <= rat(y));
            if u.is_finite() {
                prop_assert!(rat(u) * rat(u) >= rat(y));
            }
            prop_assert!(d <= u);
        }

        #[test]
        fn prop_bounds_within_one_ulp(a in finite_f64(), b in finite_f64()) {
            let s = a + b;
            if s.is_finite() {
                prop_assert!(add_down(a, b) >= s.next_down());
                prop_assert!(add_up(a, b) <= s.next_up());
            }
            let p = a * b;
            if p.is_finite() && p != 0.0 {
                prop_assert!(mul_down(a, b) >= p.next_down());
                prop_assert!(mul_up(a, b) <= p.next_up());
            }
        }
    }
}
