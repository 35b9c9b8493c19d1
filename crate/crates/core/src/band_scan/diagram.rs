use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::curves::EdgeLabel;
use super::scan::scan_bands;
use super::{BandInterval, EnergyWindow, IntervalKind, LatticeFamily};

/// Spectral intervals over a grid of interpolation parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralDiagram<T> {
    pub params: LatticeFamily<T>,
    pub t_grid: Vec<T>,
    pub bands: Vec<Vec<BandInterval<T>>>,
}

/// One flattened output row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagramRow<T> {
    pub t: T,
    pub e_lo: T,
    pub e_hi: T,
    pub edge_lo: EdgeLabel,
    pub edge_hi: EdgeLabel,
    pub kind: IntervalKind,
}

impl<T: Real> SpectralDiagram<T> {
    pub fn rows(&self) -> Vec<DiagramRow<T>> {
        self.t_grid
            .iter()
            .zip(&self.bands)
            .flat_map(|(&t, bands)| {
                bands.iter().map(move |b| DiagramRow {
                    t,
                    e_lo: b.e_lo,
                    e_hi: b.e_hi,
                    edge_lo: b.edge_lo,
                    edge_hi: b.edge_hi,
                    kind: b.kind,
                })
            })
            .collect()
    }

    /// Inverse of [`rows`](Self::rows). `t_grid` is needed because values of
    /// `t` with an empty spectrum leave no rows.
    pub fn from_rows(params: LatticeFamily<T>, t_grid: Vec<T>, rows: &[DiagramRow<T>]) -> Result<Self> {
        let mut bands = vec![Vec::new(); t_grid.len()];
        let mut slot = 0;
        for row in rows {
            while slot < t_grid.len() && t_grid[slot] != row.t {
                slot += 1;
            }
            let Some(list) = bands.get_mut(slot) else {
                return Err(Error::invalid("rows", format!("t = {} not on the grid or out of order", row.t)));
            };
            list.push(BandInterval {
                e_lo: row.e_lo,
                e_hi: row.e_hi,
                edge_lo: row.edge_lo,
                edge_hi: row.edge_hi,
                kind: row.kind,
            });
        }
        Ok(Self { params, t_grid, bands })
    }

    /// Applies `f` to every stored number.
    pub fn map_values(&self, f: impl Fn(T) -> T) -> Self {
        Self {
            params: LatticeFamily {
                ell: f(self.params.ell),
                alpha: f(self.params.alpha),
            },
            t_grid: self.t_grid.iter().map(|&t| f(t)).collect(),
            bands: self
                .bands
                .iter()
                .map(|list| {
                    list.iter()
                        .map(|b| BandInterval {
                            e_lo: f(b.e_lo),
                            e_hi: f(b.e_hi),
                            ..*b
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// `steps` equally spaced values from `t_min` to `t_max` (just `t_min` when
/// `steps == 1`).
pub fn uniform_t_grid<T: Real>(t_min: T, t_max: T, steps: usize) -> Result<Vec<T>> {
    if steps == 0 {
        return Err(Error::invalid("t_steps", "must be at least 1"));
    }
    if !(T::zero() <= t_min && t_min <= t_max && t_max <= T::one()) {
        return Err(Error::invalid("t_range", format!("need 0 <= t_min <= t_max <= 1, got [{t_min}, {t_max}]")));
    }
    if steps == 1 {
        return Ok(vec![t_min]);
    }
    let last = T::of_usize(steps - 1);
    Ok((0..steps)
        .map(|i| {
            if i + 1 == steps {
                t_max
            } else {
                t_min + (t_max - t_min) * T::of_usize(i) / last
            }
        })
        .collect())
}

/// Runs [`scan_bands`] for every `t` of the grid, in parallel, keeping grid
/// order.
pub fn build_diagram<T: Real>(
    family: &LatticeFamily<T>,
    t_grid: &[T],
    window: &EnergyWindow<T>,
    resolution: T,
) -> Result<SpectralDiagram<T>> {
    let bands = t_grid
        .par_iter()
        .map(|&t| scan_bands(family, t, window, resolution))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralDiagram {
        params: *family,
        t_grid: t_grid.to_vec(),
        bands,
    })
}
