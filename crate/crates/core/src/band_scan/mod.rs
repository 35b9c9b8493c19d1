//! Band structure from pointwise membership: interval scanning with labelled
//! edges, flat bands, gap asymptotics, the behaviour around `E = 0`, edge
//! slopes at the ends of the interpolation, and full `(t, E)` diagrams.

mod curves;
mod diagram;
mod landmarks;
mod scan;
mod slopes;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticeParams;
use crate::scalar::Real;

pub use curves::{identify_edge, EdgeCurve, EdgeLabel};
pub use diagram::{build_diagram, uniform_t_grid, DiagramRow, SpectralDiagram};
pub use landmarks::{
    flat_band_points, gap_width_asymptotic, locate_zero_threshold, measure_gap,
    zero_crossing_threshold, zero_neighborhood_class, FlatBandPoint, GapMeasurement, GapWidth, ZeroNeighborhood,
};
pub use scan::{default_resolution, max_resolution, scan_bands};
pub use slopes::{edge_slope_at_endpoints, factor_form_slope, trace_edge, EdgeLimit, EndpointSlopes};

/// Lattice parameters with the interpolation parameter left free.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeFamily<T> {
    pub ell: T,
    pub alpha: T,
}

impl<T: Real> LatticeFamily<T> {
    pub fn new(ell: T, alpha: T) -> Result<Self> {
        LatticeParams::new(ell, alpha, T::zero())?;
        Ok(Self { ell, alpha })
    }

    pub fn at(&self, t: T) -> Result<LatticeParams<T>> {
        LatticeParams::new(self.ell, self.alpha, t)
    }
}

/// Closed energy window `[e_min, e_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyWindow<T> {
    pub e_min: T,
    pub e_max: T,
}

impl<T: Real> EnergyWindow<T> {
    pub fn new(e_min: T, e_max: T) -> Result<Self> {
        if !(e_min.is_finite() && e_max.is_finite()) {
            return Err(Error::invalid("e_range", "energy bounds must be finite"));
        }
        if e_min >= e_max {
            return Err(Error::invalid("e_range", format!("e_min = {e_min} must be below e_max = {e_max}")));
        }
        Ok(Self { e_min, e_max })
    }

    pub fn contains(&self, e: T) -> bool {
        self.e_min <= e && e <= self.e_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalKind {
    Band,
    DirichletPoint,
}

impl IntervalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            IntervalKind::Band => "band",
            IntervalKind::DirichletPoint => "dirichlet_point",
        }
    }
}

/// A maximal spectral interval `[e_lo, e_hi]` in energy, with what bounds it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandInterval<T> {
    pub e_lo: T,
    pub e_hi: T,
    pub edge_lo: EdgeLabel,
    pub edge_hi: EdgeLabel,
    pub kind: IntervalKind,
}

impl<T: Real> BandInterval<T> {
    pub fn width(&self) -> T {
        self.e_hi - self.e_lo
    }

    pub fn contains(&self, e: T) -> bool {
        self.e_lo <= e && e <= self.e_hi
    }

    /// Width in momentum, for intervals on the positive side.
    pub fn k_width(&self) -> T {
        self.e_hi.max(T::zero()).sqrt() - self.e_lo.max(T::zero()).sqrt()
    }
}
