use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticeParams;
use crate::roots::bisect_sign;
use crate::scalar::Real;

use super::curves::EdgeCurve;
use super::LatticeFamily;

/// Position and slope of a traced edge at one value of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeLimit<T> {
    pub t: T,
    pub k: T,
    pub dk_dt: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointSlopes<T> {
    pub at_zero: EdgeLimit<T>,
    pub at_one: EdgeLimit<T>,
}

/// Bracket in `h = kℓ/2` holding the `m`-th root of a curve.
fn branch<T: Real>(curve: EdgeCurve, m: usize, gamma_negative: bool) -> Result<(T, T)> {
    let pi = T::PI();
    let m = T::of_usize(m);
    let half = T::of(0.5);
    let (lo, hi) = match (curve, gamma_negative) {
        (EdgeCurve::CotgPlusTan, true) => ((m - T::one()) * pi, (m - half) * pi),
        (EdgeCurve::CotgPlusTan, false) => ((m - half) * pi, m * pi),
        (EdgeCurve::CotgMinusCot, true) => ((m - half) * pi, m * pi),
        (EdgeCurve::CotgMinusCot, false) => (m * pi, (m + half) * pi),
        (EdgeCurve::Cot2MinusTan2 | EdgeCurve::Cot2MinusCot2, _) => ((m - T::one()) * pi * half, m * pi * half),
        (EdgeCurve::KcotCotgPlusOne, true) => ((m - T::one()) * pi * half, (m - half) * pi * half),
        (EdgeCurve::KcotCotgPlusOne, false) => ((m - half) * pi * half, m * pi * half),
        _ => return Err(Error::invalid("curve", format!("{curve} is not traced in t"))),
    };
    Ok((lo, hi))
}

/// Smooth signed form of the curve on its branch with partial derivatives,
/// `(F, ∂F/∂t, ∂F/∂k)`. `signs = (sign cos h, sign sin h)` on the branch.
fn smooth_form<T: Real>(curve: EdgeCurve, lp: &LatticeParams<T>, k: T, signs: (T, T)) -> (T, T, T) {
    let two = T::of(2.0);
    let s = lp.delta_phase();
    let ds = -lp.gamma().value() / two;
    let (cs, ss) = (s.cos(), s.sin());
    let r = lp.rotation_phase();
    let dr = T::FRAC_PI_4();
    let (cr, sr) = (r.cos(), r.sin());
    let l2 = lp.ell / two;
    let h = k * l2;
    let (ch, sh) = (h.cos(), h.sin());
    let (a, b) = signs;
    match curve {
        EdgeCurve::CotgPlusTan => (
            k * cs * ch + ss * sh,
            ds * (-k * ss * ch + cs * sh),
            cs * ch + l2 * (-k * cs * sh + ss * ch),
        ),
        EdgeCurve::CotgMinusCot => (
            k * cs * sh - ss * ch,
            ds * (-k * ss * sh - cs * ch),
            cs * sh + l2 * (k * cs * ch + ss * sh),
        ),
        EdgeCurve::Cot2MinusTan2 => (
            a * cr * ch - b * k * sr * sh,
            dr * (-a * sr * ch - b * k * cr * sh),
            -a * cr * sh * l2 - b * sr * sh - b * k * sr * ch * l2,
        ),
        EdgeCurve::Cot2MinusCot2 => (
            b * cr * sh - a * k * sr * ch,
            dr * (-b * sr * sh - a * k * cr * ch),
            b * cr * ch * l2 - a * sr * ch + a * k * sr * sh * l2,
        ),
        _ => {
            let kl = k * lp.ell;
            let (c2, s2) = (kl.cos(), kl.sin());
            (
                k * cs * c2 + ss * s2,
                ds * (-k * ss * c2 + cs * s2),
                cs * c2 + lp.ell * (-k * cs * s2 + ss * c2),
            )
        }
    }
}

fn branch_signs<T: Real>(lo: T, hi: T) -> (T, T) {
    let mid = (lo + hi) / T::of(2.0);
    (mid.cos().signum(), mid.sin().signum())
}

fn check_curve<T: Real>(curve: EdgeCurve, family: &LatticeFamily<T>) -> Result<()> {
    if curve.is_hyperbolic() {
        return Err(Error::invalid("curve", format!("{curve} is not traced in t")));
    }
    if curve.depends_on_alpha() && family.alpha == T::zero() {
        return Err(Error::invalid("alpha", "slope of a coupling-dependent curve needs alpha != 0"));
    }
    if family.alpha.is_nan() {
        return Err(Error::invalid("alpha", "not a number"));
    }
    Ok(())
}

/// Momentum of the `m`-th branch of `curve` at `t`.
pub fn trace_edge<T: Real>(curve: EdgeCurve, m: usize, family: &LatticeFamily<T>, t: T) -> Result<T> {
    check_curve(curve, family)?;
    if m == 0 {
        return Err(Error::invalid("m", "branch index starts at 1"));
    }
    let lp = family.at(t)?;
    let (h_lo, h_hi) = branch::<T>(curve, m, family.alpha < T::zero())?;
    let signs = branch_signs(h_lo, h_hi);
    let to_k = |h: T| h * T::of(2.0) / lp.ell;
    let (mut lo, hi) = (to_k(h_lo), to_k(h_hi));
    if lo == T::zero() {
        lo = hi * T::of(1e-12);
    }
    let f = |k: T| smooth_form(curve, &lp, k, signs).0;
    let tiny = T::of(1e-13);
    for end in [lo, hi] {
        if f(end).abs() <= tiny * (T::one() + end) {
            return Ok(end);
        }
    }
    let (a, b) = bisect_sign(f, lo, hi, T::epsilon() * hi * T::of(4.0))?;
    Ok((a + b) / T::of(2.0))
}

fn limit_at<T: Real>(curve: EdgeCurve, m: usize, family: &LatticeFamily<T>, t: T) -> Result<EdgeLimit<T>> {
    let k = trace_edge(curve, m, family, t)?;
    let lp = family.at(t)?;
    let (h_lo, h_hi) = branch::<T>(curve, m, family.alpha < T::zero())?;
    let (_, ft, fk) = smooth_form(curve, &lp, k, branch_signs(h_lo, h_hi));
    Ok(EdgeLimit { t, k, dk_dt: -ft / fk })
}

/// Limits of the `m`-th branch of `curve` as `t → 0` and `t → 1`, with the
/// implicit-function slope `dk/dt = -F_t/F_k`. For `cotg_plus_tan` the edge
/// tends to `(2m-1)π/ℓ` at `t = 1` with slope `-γ/((2m-1)π)`, and at `t = 0`
/// to a band edge of the pure δ lattice.
pub fn edge_slope_at_endpoints<T: Real>(
    curve: EdgeCurve,
    m: usize,
    family: &LatticeFamily<T>,
) -> Result<EndpointSlopes<T>> {
    Ok(EndpointSlopes {
        at_zero: limit_at(curve, m, family, T::zero())?,
        at_one: limit_at(curve, m, family, T::one())?,
    })
}

/// `dk/dt` along `cot((1-t)γ/2) + tan(kℓ/2)/k = 0`, differentiating the
/// factor itself; defined for `t < 1` away from the poles of `tan(kℓ/2)`.
pub fn factor_form_slope<T: Real>(family: &LatticeFamily<T>, t: T, k: T) -> Result<T> {
    let lp = family.at(t)?;
    let s = lp.delta_phase();
    if s == T::zero() {
        return Err(Error::invalid("t", "factor form is singular at t = 1 or alpha = 0"));
    }
    let g = lp.gamma().value();
    let h = k * lp.ell / T::of(2.0);
    let f_t = g / (T::of(2.0) * s.sin().powi(2));
    let f_k = lp.ell / (T::of(2.0) * k * h.cos().powi(2)) - h.tan() / (k * k);
    Ok(-f_t / f_k)
}
