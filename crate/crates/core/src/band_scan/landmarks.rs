use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{membership_negative, membership_positive, LatticeParams};
use crate::roots::bisect_predicate;
use crate::scalar::Real;

use super::LatticeFamily;

/// Collapse of the `m`-th positive band of the Kirchhoff lattice to the
/// single energy `k²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlatBandPoint<T> {
    pub m: usize,
    pub t: T,
    pub k: T,
}

/// `k = (m-½)π/ℓ` and `t = (4/π)·arccot(k)` for `m = 1..=m_max`; collapses
/// that would need `t > 1` (`k < 1`) are skipped.
pub fn flat_band_points<T: Real>(ell: T, m_max: usize) -> Vec<FlatBandPoint<T>> {
    (1..=m_max)
        .filter_map(|m| {
            let k = (T::of_usize(m) - T::of(0.5)) * T::PI() / ell;
            let t = T::of(4.0) / T::PI() * (T::one() / k).atan();
            (t <= T::one()).then_some(FlatBandPoint { m, t, k })
        })
        .collect()
}

/// Large-`m` width of the gap around `k = mπ/ℓ` for `α = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapWidth<T> {
    /// `(4/(mπ))·cot(πt/4)`
    pub k_width: T,
    /// `(8/ℓ)·cot(πt/4)`
    pub e_width: T,
}

pub fn gap_width_asymptotic<T: Real>(m: usize, t: T, ell: T) -> GapWidth<T> {
    let c = T::one() / (T::PI() * t / T::of(4.0)).tan();
    GapWidth {
        k_width: T::of(4.0) / (T::of_usize(m) * T::PI()) * c,
        e_width: T::of(8.0) / ell * c,
    }
}

/// Measured gap around a Dirichlet momentum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapMeasurement<T> {
    pub m: usize,
    /// Upper edge of the band below.
    pub k_lo: T,
    /// Lower edge of the band above.
    pub k_hi: T,
}

impl<T: Real> GapMeasurement<T> {
    pub fn k_width(&self) -> T {
        self.k_hi - self.k_lo
    }

    pub fn e_width(&self) -> T {
        self.k_hi * self.k_hi - self.k_lo * self.k_lo
    }
}

/// Edges of the gap containing `k = mπ/ℓ`, located by bisection of the band
/// predicate from the midpoints `(m ± ½)π/ℓ` to full working precision.
pub fn measure_gap<T: Real>(family: &LatticeFamily<T>, t: T, m: usize) -> Result<GapMeasurement<T>> {
    if m == 0 {
        return Err(Error::invalid("m", "gap index starts at 1"));
    }
    let lp = family.at(t)?;
    let pred = |k: T| membership_positive(k, &lp);
    let center = T::of_usize(m) * T::PI() / lp.ell;
    let below = (T::of_usize(m) - T::of(0.5)) * T::PI() / lp.ell;
    let above = (T::of_usize(m) + T::of(0.5)) * T::PI() / lp.ell;
    if pred(center) || !pred(below) || !pred(above) {
        return Err(Error::BracketNotFound {
            lo: below.to_f64().unwrap_or(f64::NAN),
            hi: above.to_f64().unwrap_or(f64::NAN),
        });
    }
    let tol = T::epsilon() * center * T::of(4.0);
    let (k_lo, _) = bisect_predicate(pred, below, center, tol);
    let (k_hi, _) = bisect_predicate(pred, above, center, tol);
    Ok(GapMeasurement { m, k_lo, k_hi })
}

/// Spectral behaviour around `E = 0` in the Kirchhoff lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroNeighborhood {
    BandRightGapLeft,
    BandLeftGapRight,
    Interior,
}

impl ZeroNeighborhood {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroNeighborhood::BandRightGapLeft => "band_right_gap_left",
            ZeroNeighborhood::BandLeftGapRight => "band_left_gap_right",
            ZeroNeighborhood::Interior => "interior",
        }
    }
}

/// `t* = (4/π)·arctan(ℓ/2)`: the band passes from `E > 0` to `E < 0` here.
pub fn zero_crossing_threshold<T: Real>(ell: T) -> T {
    T::of(4.0) / T::PI() * (ell / T::of(2.0)).atan()
}

pub fn zero_neighborhood_class<T: Real>(lp: &LatticeParams<T>) -> Result<ZeroNeighborhood> {
    if lp.alpha != T::zero() {
        return Err(Error::invalid("alpha", "classification holds for alpha = 0 only"));
    }
    let threshold = zero_crossing_threshold(lp.ell);
    Ok(if lp.t < threshold {
        ZeroNeighborhood::BandRightGapLeft
    } else if lp.t > threshold {
        ZeroNeighborhood::BandLeftGapRight
    } else {
        ZeroNeighborhood::Interior
    })
}

/// Locates the zero-crossing threshold from the band predicates alone: the
/// `t` at which energies just below zero (`κ = probe`) enter the spectrum
/// and those just above (`k = probe`) leave it.
pub fn locate_zero_threshold<T: Real>(ell: T, probe: T, tol: T) -> Result<T> {
    let family = LatticeFamily::new(ell, T::zero())?;
    let negative_side = |t: T| family.at(t).map(|lp| membership_negative(probe, &lp)).unwrap_or(false);
    let positive_side = |t: T| family.at(t).map(|lp| membership_positive(probe, &lp)).unwrap_or(false);
    let (lo, hi) = (T::zero(), T::one());
    if negative_side(lo) || !negative_side(hi) {
        return Err(Error::BracketNotFound { lo: 0.0, hi: 1.0 });
    }
    let (a, b) = bisect_predicate(negative_side, lo, hi, tol);
    let neg = (a + b) / T::of(2.0);
    let (a, b) = bisect_predicate(positive_side, lo, hi, tol);
    let pos = (a + b) / T::of(2.0);
    if (neg - pos).abs() > tol * T::of(4.0) + probe {
        return Err(Error::BracketNotFound {
            lo: neg.to_f64().unwrap_or(f64::NAN),
            hi: pos.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok((neg + pos) / T::of(2.0))
}
