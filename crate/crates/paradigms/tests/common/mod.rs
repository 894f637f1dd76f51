//! Shared generators for the randomized suites.
//!
//! Everything numeric lives on a coarse dyadic grid (multiples of 2^-7 in
//! [-32, 32]) so that sums, products and squares of sampled values are
//! exact in `f64`: a sampled tuple that satisfies a relation satisfies it
//! as a statement about real numbers, and "no solution is ever lost" can
//! be asserted with zero tolerance.

use paradigms::{Constraint, ConstraintStore, Interval, RealVar};
use rand::rngs::StdRng;
use rand::Rng;

/// Grid step 2^-7.
pub const STEP: f64 = 0.0078125;
/// Bound on grid indices: values stay within [-32, 32].
pub const KMAX: i64 = 4096;

pub fn grid(k: i64) -> f64 {
    k as f64 * STEP
}

/// Grid indices covered by a non-empty interval.
pub fn grid_range(iv: Interval) -> Option<(i64, i64)> {
    let (lb, ub) = iv.bounds()?;
    let klo = (lb / STEP).ceil() as i64;
    let khi = (ub / STEP).floor() as i64;
    (klo <= khi).then_some((klo, khi))
}

/// A grid point of the interval, uniformly at random.
pub fn sample_in(rng: &mut StdRng, iv: Interval) -> Option<f64> {
    let (klo, khi) = grid_range(iv)?;
    Some(grid(rng.gen_range(klo..=khi)))
}

/// A grid-aligned box around `v`, with up to `spread` steps on each side,
/// clamped to the grid range. Uses floor/ceil so the box contains `v`
/// even when `v` sits between grid points (products do).
pub fn box_around(rng: &mut StdRng, v: f64, spread: i64) -> Interval {
    let lo = ((v / STEP).floor() as i64 - rng.gen_range(0..=spread)).max(-KMAX);
    let hi = ((v / STEP).ceil() as i64 + rng.gen_range(0..=spread)).min(KMAX);
    Interval::new(grid(lo), grid(hi)).unwrap()
}

/// Values are kept on a 2^-14 grid within [-16, 16]; sums, products and
/// squares of such values that pass this test are again exact in `f64`,
/// so seeded assignments satisfy their constraints exactly.
pub fn on_fine_grid(v: f64) -> bool {
    v.abs() <= 16.0 && (v * 16384.0).fract() == 0.0
}

/// One random constraint over fresh variables, seeded with a known
/// solution tuple so that the instance is satisfiable and sampling near
/// the solution succeeds.
///
/// Returns the store (constraint already posted), the constraint, and the
/// seeded solution as `(var, value)` pairs.
pub fn seeded_constraint(rng: &mut StdRng) -> (ConstraintStore, Constraint, Vec<(RealVar, f64)>) {
    let mut store = ConstraintStore::new();
    let val = |rng: &mut StdRng| grid(rng.gen_range(-512..=512)); // within [-4, 4]
    let (c, tuple) = match rng.gen_range(0..5) {
        0 => {
            let (a, b) = (val(rng), val(rng));
            let (xv, yv) = (a.min(b), a.max(b));
            let x = store.var(box_around(rng, xv, 256));
            let y = store.var(box_around(rng, yv, 256));
            (Constraint::Leq(x, y), vec![(x, xv), (y, yv)])
        }
        1 => {
            let v = val(rng);
            let x = store.var(box_around(rng, v, 256));
            let y = store.var(box_around(rng, v, 256));
            (Constraint::Eq(x, y), vec![(x, v), (y, v)])
        }
        2 => {
            let (xv, yv) = (val(rng), val(rng));
            let zv = xv + yv;
            let x = store.var(box_around(rng, xv, 256));
            let y = store.var(box_around(rng, yv, 256));
            let z = store.var(box_around(rng, zv, 256));
            (Constraint::Sum(x, y, z), vec![(x, xv), (y, yv), (z, zv)])
        }
        3 => {
            let (xv, yv) = (val(rng), val(rng));
            let zv = xv * yv; // exact: 12-bit mantissas
            let x = store.var(box_around(rng, xv, 256));
            let y = store.var(box_around(rng, yv, 256));
            let z = store.var(box_around(rng, zv, 256));
            (Constraint::Prod(x, y, z), vec![(x, xv), (y, yv), (z, zv)])
        }
        _ => {
            let xv = val(rng);
            let yv = xv * xv;
            let x = store.var(box_around(rng, xv, 256));
            let y = store.var(box_around(rng, yv, 256));
            (Constraint::Square(x, y), vec![(x, xv), (y, yv)])
        }
    };
    store.post(c);
    (store, c, tuple)
}

/// Rejection-samples up to `attempts` grid tuples inside the current box
/// of `store` that satisfy `c` exactly.
pub fn sample_solutions(
    rng: &mut StdRng,
    store: &ConstraintStore,
    c: Constraint,
    attempts: usize,
) -> Vec<Vec<(RealVar, f64)>> {
    let mut found = Vec::new();
    for _ in 0..attempts {
        let tuple = match c {
            Constraint::Leq(x, y) => {
                let (Some(gx), Some(gy)) = (
                    sample_in(rng, store.value(x)),
                    sample_in(rng, store.value(y)),
                ) else {
                    continue;
                };
                if gx <= gy {
                    Some(vec![(x, gx), (y, gy)])
                } else {
                    None
                }
            }
            Constraint::Eq(x, y) => {
                let both = store.value(x).intersect(store.value(y));
                sample_in(rng, both).map(|g| vec![(x, g), (y, g)])
            }
            Constraint::Sum(x, y, z) => {
                let (Some(gx), Some(gy)) = (
                    sample_in(rng, store.value(x)),
                    sample_in(rng, store.value(y)),
                ) else {
                    continue;
                };
                let gz = gx + gy;
                store
                    .value(z)
                    .contains(gz)
                    .then(|| vec![(x, gx), (y, gy), (z, gz)])
            }
            Constraint::Prod(x, y, z) => {
                let (Some(gx), Some(gy)) = (
                    sample_in(rng, store.value(x)),
                    sample_in(rng, store.value(y)),
                ) else {
                    continue;
                };
                let gz = gx * gy;
                store
                    .value(z)
                    .contains(gz)
                    .then(|| vec![(x, gx), (y, gy), (z, gz)])
            }
            Constraint::Square(x, y) => {
                let Some(gx) = sample_in(rng, store.value(x)) else {
                    continue;
                };
                let gy = gx * gx;
                store.value(y).contains(gy).then(|| vec![(x, gx), (y, gy)])
            }
        };
        if let Some(t) = tuple {
            found.push(t);
        }
    }
    found
}

/// A store of up to `max_constraints` random constraints seeded with a
/// joint solution: every constraint is satisfied by the seeded assignment,
/// so the store is consistent by construction.
///
/// Returns the store and the assignment.
pub fn seeded_store(
    rng: &mut StdRng,
    max_constraints: usize,
) -> (ConstraintStore, Vec<(RealVar, f64)>) {
    let mut store = ConstraintStore::new();
    let mut pool: Vec<(RealVar, f64)> = Vec::new();
    for _ in 0..rng.gen_range(2..=4) {
        let v = grid(rng.gen_range(-384..=384)); // within [-3, 3]
        let var = store.var(Interval::entire()); // box set at the end
        pool.push((var, v));
    }
    let n = rng.gen_range(1..=max_constraints);
    for _ in 0..n {
        let pick =
            |rng: &mut StdRng, pool: &Vec<(RealVar, f64)>| pool[rng.gen_range(0..pool.len())];
        match rng.gen_range(0..5) {
            0 => {
                let (a, av) = pick(rng, &pool);
                let (b, bv) = pick(rng, &pool);
                let c = if av <= bv {
                    Constraint::Leq(a, b)
                } else {
                    Constraint::Leq(b, a)
                };
                store.post(c);
            }
            1 => {
                let (a, av) = pick(rng, &pool);
                let b = store.var(Interval::entire());
                pool.push((b, av));
                store.post(Constraint::Eq(a, b));
            }
            2 => {
                let (a, av) = pick(rng, &pool);
                let (b, bv) = pick(rng, &pool);
                let zv = av + bv;
                if !on_fine_grid(zv) {
                    continue;
                }
                let z = result_var(rng, &mut store, &mut pool, zv);
                store.post(Constraint::Sum(a, b, z));
            }
            3 => {
                let (a, av) = pick(rng, &pool);
                let (b, bv) = pick(rng, &pool);
                let zv = av * bv;
                if !on_fine_grid(zv) {
                    continue;
                }
                let z = result_var(rng, &mut store, &mut pool, zv);
                store.post(Constraint::Prod(a, b, z));
            }
            _ => {
                let (a, av) = pick(rng, &pool);
                let yv = av * av;
                if !on_fine_grid(yv) {
                    continue;
                }
                let y = result_var(rng, &mut store, &mut pool, yv);
                store.post(Constraint::Square(a, y));
            }
        }
    }
    for &(var, v) in &pool {
        store.set_value(var, box_around(rng, v, 512));
    }
    (store, pool)
}

/// A variable holding `v`: sometimes an existing pool variable with the
/// same value (sharing), otherwise a fresh one.
fn result_var(
    rng: &mut StdRng,
    store: &mut ConstraintStore,
    pool: &mut Vec<(RealVar, f64)>,
    v: f64,
) -> RealVar {
    if rng.gen_bool(0.5) {
        if let Some(&(var, _)) = pool.iter().find(|&&(_, pv)| pv == v) {
            return var;
        }
    }
    let var = store.var(Interval::entire());
    pool.push((var, v));
    var
}
