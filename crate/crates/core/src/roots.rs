//! Bracketing root refinement.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Refines a sign change of `f` on `[lo, hi]` by bisection until the bracket
/// is narrower than `tol` (or can no longer shrink). Returns the final bracket.
pub fn bisect_sign<T: Real>(mut f: impl FnMut(T) -> T, lo: T, hi: T, tol: T) -> Result<(T, T)> {
    let (mut a, mut b) = (lo, hi);
    let fa = f(a);
    let fb = f(b);
    if fa == T::zero() {
        return Ok((a, a));
    }
    if fb == T::zero() {
        return Ok((b, b));
    }
    if (fa > T::zero()) == (fb > T::zero()) || fa.is_nan() || fb.is_nan() {
        return Err(Error::BracketNotFound {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    let a_positive = fa > T::zero();
    while (b - a).abs() > tol {
        let mid = a + (b - a) / T::of(2.0);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == T::zero() {
            return Ok((mid, mid));
        }
        if (fm > T::zero()) == a_positive {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((a, b))
}

/// Locates the switch point of a predicate with `pred(inside) != pred(outside)`.
/// Returns the bracket `(near_inside, near_outside)` narrower than `tol`.
pub fn bisect_predicate<T: Real>(
    mut pred: impl FnMut(T) -> bool,
    inside: T,
    outside: T,
    tol: T,
) -> (T, T) {
    let target = pred(inside);
    let (mut a, mut b) = (inside, outside);
    while (b - a).abs() > tol {
        let mid = a + (b - a) / T::of(2.0);
        if mid == a || mid == b {
            break;
        }
        if pred(mid) == target {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}
