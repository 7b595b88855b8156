//! Checkers for the sums-of-products family `S_{N,n}^{(p)}`: agreement of
//! the three computation routes, the explicit low-order formulas obtained
//! by unrolling the level recurrence, and the subset closed form.
//!
//! Brute-force enumeration grows like `C(n+p-1, p-1)`, so the enumeration
//! comparisons cap the degree at 20; the recurrence/closed-form
//! comparisons sweep the full grid range.

use crate::bernoulli::HbTable;
use crate::rational::{format_rational, rat_int};
use crate::sums::{self, PointVector};

use super::{IdentityId, IdentityReport, ParamGrid, Recorder};

const BRUTEFORCE_DEGREE_CAP: i64 = 20;

/// Brute-force enumeration vs the level recurrence, including invariance
/// under redistributing the points at fixed coordinate sum.
pub(super) fn recurrence_check(grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let top = grid.degrees.1.min(BRUTEFORCE_DEGREE_CAP);
    if grid.degrees.1 > BRUTEFORCE_DEGREE_CAP {
        rec.note(format!(
            "enumeration comparisons capped at degree {BRUTEFORCE_DEGREE_CAP}"
        ));
    }
    for n_order in grid.n_order_range() {
        for p in grid.factor_range() {
            let pts = grid.panel_points(p as usize);
            let xs = PointVector::new(pts.clone());
            let z = xs.sum();
            let shifted = (p >= 2).then(|| {
                let mut moved = pts.clone();
                moved[0] = &moved[0] + rat_int(1);
                moved[1] = &moved[1] - rat_int(1);
                PointVector::new(moved)
            });
            for n in grid.degrees.0.max(0)..=top {
                let direct = sums::bruteforce(table, n_order, n, &xs);
                let by_recurrence = sums::recurrence(table, n_order, n, p, &z);
                rec.check(
                    || format!("N={n_order} p={p} n={n} z={}", format_rational(&z)),
                    direct.clone(),
                    by_recurrence,
                );
                if let Some(ys) = &shifted {
                    let redistributed = sums::bruteforce(table, n_order, n, ys);
                    rec.check(
                        || format!("N={n_order} p={p} n={n} (redistributed points)"),
                        direct,
                        redistributed,
                    );
                }
            }
        }
    }
    rec.finish(IdentityId::SopRecurrenceCheck, grid)
}

/// Unrolled formula for `p = 2`:
/// `S^{(2)}_{N,n} = [(N-n) B_{N,n}(z) + n (z-1) B_{N,n-1}(z)] / N`.
pub(super) fn example_p2(grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let zs = grid.panel_points(3);
    for n_order in grid.n_order_range() {
        let nn = rat_int(i64::from(n_order));
        for z in &zs {
            for n in grid.degree_range() {
                if n < 0 {
                    continue;
                }
                let lhs = sums::recurrence(table, n_order, n, 2, z);
                let rhs = ((&nn - rat_int(n)) * table.value(n_order, n, z)
                    + rat_int(n) * (z - rat_int(1)) * table.value(n_order, n - 1, z))
                    / &nn;
                rec.check(
                    || format!("N={n_order} n={n} z={}", format_rational(z)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    rec.finish(IdentityId::SopExampleP2, grid)
}

/// Unrolled formula for `p = 3`:
/// `S^{(3)}_{N,n} = [(N-n)(2N-n) B_{N,n}(z)
///   + ((2N-n) n (z-1) + n (z-2)(N-n+1)) B_{N,n-1}(z)
///   + n (n-1)(z-1)(z-2) B_{N,n-2}(z)] / (2 N^2)`.
pub(super) fn example_p3(grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let zs = grid.panel_points(3);
    for n_order in grid.n_order_range() {
        let nn = rat_int(i64::from(n_order));
        let scale = rat_int(2) * &nn * &nn;
        for z in &zs {
            for n in grid.degree_range() {
                if n < 0 {
                    continue;
                }
                let lhs = sums::recurrence(table, n_order, n, 3, z);
                let n_rat = rat_int(n);
                let head = (&nn - &n_rat) * (rat_int(2) * &nn - &n_rat)
                    * table.value(n_order, n, z);
                let mid = ((rat_int(2) * &nn - &n_rat) * &n_rat * (z - rat_int(1))
                    + &n_rat * (z - rat_int(2)) * (&nn - &n_rat + rat_int(1)))
                    * table.value(n_order, n - 1, z);
                let tail = &n_rat
                    * (&n_rat - rat_int(1))
                    * (z - rat_int(1))
                    * (z - rat_int(2))
                    * table.value(n_order, n - 2, z);
                let rhs = (head + mid + tail) / &scale;
                rec.check(
                    || format!("N={n_order} n={n} z={}", format_rational(z)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    rec.finish(IdentityId::SopExampleP3, grid)
}

/// The subset closed form vs the level recurrence over the full grid.
pub(super) fn closed_form_check(grid: &ParamGrid, table: &mut HbTable) -> IdentityReport {
    let mut rec = Recorder::new();
    let zs = grid.panel_points(3);
    for n_order in grid.n_order_range() {
        for p in grid.factor_range() {
            for z in &zs {
                for n in grid.degree_range() {
                    if n < 0 {
                        continue;
                    }
                    let lhs = sums::closed_form(table, n_order, n, p, z);
                    let rhs = sums::recurrence(table, n_order, n, p, z);
                    rec.check(
                        || format!("N={n_order} p={p} n={n} z={}", format_rational(z)),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    rec.finish(IdentityId::SopClosedFormCheck, grid)
}
