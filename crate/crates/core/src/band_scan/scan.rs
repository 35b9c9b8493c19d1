use crate::error::{Error, Result};
use crate::lattice::{is_dirichlet_point, membership_negative, membership_positive, LatticeParams};
use crate::roots::bisect_predicate;
use crate::scalar::Real;

use super::curves::{identify_edge, EdgeLabel};
use super::{BandInterval, EnergyWindow, IntervalKind, LatticeFamily};

/// Edge refinement tolerance in `k` (or `κ`).
const EDGE_TOL: f64 = 1e-10;
/// Radius within which a factor curve must vanish to be credited with an edge.
const MATCH_RADIUS: f64 = 1e-8;

/// Coarsest accepted grid step; a band cannot hide between grid points.
pub fn max_resolution<T: Real>(ell: T) -> T {
    T::FRAC_PI_4() / ell
}

/// `10⁻³·π/ℓ`.
pub fn default_resolution<T: Real>(ell: T) -> T {
    T::of(1e-3) * T::PI() / ell
}

#[derive(Debug, Clone, Copy)]
enum End<T> {
    Edge(T),
    Zero,
    Window(T),
}

#[derive(Debug, Clone, Copy)]
struct Run<T> {
    lo: End<T>,
    hi: End<T>,
}

/// Scans `pred` on a uniform grid over `[lo, hi]` (plus `seeds`) and returns
/// the maximal runs, with edges refined by bisection. With `lo = 0` the
/// grid starts just above zero and a run reaching it ends at [`End::Zero`].
fn scan_side<T: Real>(pred: impl Fn(T) -> bool, lo: T, hi: T, step: T, seeds: &[T]) -> Vec<Run<T>> {
    let from_zero = lo == T::zero();
    let start = if from_zero { (step * T::of(1e-6)).min(hi) } else { lo };
    let count = ((hi - start) / step).ceil().to_usize().unwrap_or(0);
    let mut grid: Vec<T> = (0..count).map(|i| start + step * T::of_usize(i)).collect();
    grid.push(hi);
    grid.extend(seeds.iter().copied().filter(|&s| s > start && s < hi));
    grid.sort_by(|a, b| a.partial_cmp(b).expect("finite grid"));
    grid.dedup();

    let inside: Vec<bool> = grid.iter().map(|&q| pred(q)).collect();
    let tol = T::of(EDGE_TOL);
    let mut runs = Vec::new();
    let mut open: Option<End<T>> = None;
    for i in 0..grid.len() {
        if inside[i] && open.is_none() {
            open = Some(if i == 0 {
                if from_zero {
                    End::Zero
                } else {
                    End::Window(grid[0])
                }
            } else {
                End::Edge(bisect_predicate(&pred, grid[i], grid[i - 1], tol).0)
            });
        }
        if inside[i] {
            let last = i + 1 == grid.len();
            if last || !inside[i + 1] {
                let hi_end = if last {
                    End::Window(grid[i])
                } else {
                    End::Edge(bisect_predicate(&pred, grid[i], grid[i + 1], tol).0)
                };
                runs.push(Run {
                    lo: open.take().expect("run is open"),
                    hi: hi_end,
                });
            }
        }
    }
    runs
}

fn label_edge<T: Real>(q: T, negative_side: bool, lp: &LatticeParams<T>) -> EdgeLabel {
    let radius = T::of(MATCH_RADIUS);
    if let Some(c) = identify_edge(q, radius, negative_side, lp) {
        EdgeLabel::Curve(c)
    } else if !negative_side && is_dirichlet_point(q, lp.ell, radius) {
        EdgeLabel::DirichletPoint
    } else {
        EdgeLabel::ScanResolution
    }
}

fn resolve<T: Real>(end: End<T>, negative_side: bool, lp: &LatticeParams<T>) -> (T, EdgeLabel) {
    match end {
        End::Edge(q) => (q, label_edge(q, negative_side, lp)),
        End::Zero => (T::zero(), EdgeLabel::ZeroEnergy),
        End::Window(q) => (q, EdgeLabel::ScanRange),
    }
}

/// Window ends are reported exactly rather than through `√E²`.
fn energy<T: Real>(e: T, label: EdgeLabel, window_end: T) -> T {
    if label == EdgeLabel::ScanRange {
        window_end
    } else {
        e
    }
}

/// Spectral intervals of the lattice at one value of `t` inside `window`.
///
/// Membership is sampled on uniform grids of step `resolution` in `k`
/// (positive energies) and `κ` (negative energies), maximal runs become
/// intervals and their edges are refined by bisection to `10⁻¹⁰`. Each edge
/// is labelled by the factor curve vanishing there. Dirichlet energies lying
/// in gaps are reported as zero-width `DirichletPoint` intervals. Bands
/// touching `E = 0` from both sides are merged.
pub fn scan_bands<T: Real>(
    family: &LatticeFamily<T>,
    t: T,
    window: &EnergyWindow<T>,
    resolution: T,
) -> Result<Vec<BandInterval<T>>> {
    let lp = family.at(t)?;
    EnergyWindow::new(window.e_min, window.e_max)?;
    if !(resolution > T::zero() && resolution.is_finite()) {
        return Err(Error::invalid("resolution", "must be positive"));
    }
    if resolution > max_resolution(lp.ell) {
        return Err(Error::invalid(
            "resolution",
            format!("{resolution} exceeds pi/(4 ell) = {}", max_resolution(lp.ell)),
        ));
    }

    let mut negative = Vec::new();
    if window.e_min < T::zero() {
        let lo = (-window.e_max).max(T::zero()).sqrt();
        let hi = (-window.e_min).sqrt();
        // exponentially narrow bands sit at these points
        let seeds = [lp.cot_rotation(), -lp.delta_phase().tan()];
        for run in scan_side(|q| membership_negative(q, &lp), lo, hi, resolution, &seeds) {
            let (k_lo, lab_lo) = resolve(run.lo, true, &lp);
            let (k_hi, lab_hi) = resolve(run.hi, true, &lp);
            negative.push(BandInterval {
                e_lo: energy(-(k_hi * k_hi), lab_hi, window.e_min),
                e_hi: energy(-(k_lo * k_lo), lab_lo, window.e_max),
                edge_lo: lab_hi,
                edge_hi: lab_lo,
                kind: IntervalKind::Band,
            });
        }
        negative.reverse();
    }

    let mut positive = Vec::new();
    if window.e_max > T::zero() {
        let lo = window.e_min.max(T::zero()).sqrt();
        let hi = window.e_max.sqrt();
        let seeds: Vec<T> = (1..)
            .map(|m| (T::of_usize(m) - T::of(0.5)) * T::PI() / lp.ell)
            .take_while(|&k| k < hi)
            .collect();
        for run in scan_side(|q| membership_positive(q, &lp), lo, hi, resolution, &seeds) {
            let (k_lo, lab_lo) = resolve(run.lo, false, &lp);
            let (k_hi, lab_hi) = resolve(run.hi, false, &lp);
            positive.push(BandInterval {
                e_lo: energy(k_lo * k_lo, lab_lo, window.e_min),
                e_hi: energy(k_hi * k_hi, lab_hi, window.e_max),
                edge_lo: lab_lo,
                edge_hi: lab_hi,
                kind: IntervalKind::Band,
            });
        }
    }

    if let (Some(neg), Some(pos)) = (negative.last().copied(), positive.first().copied()) {
        if neg.edge_hi == EdgeLabel::ZeroEnergy && pos.edge_lo == EdgeLabel::ZeroEnergy {
            negative.pop();
            positive[0] = BandInterval {
                e_lo: neg.e_lo,
                edge_lo: neg.edge_lo,
                ..pos
            };
        }
    }

    let mut out = negative;
    out.extend(positive);
    let dirichlet: Vec<T> = (1..)
        .map(|m| (T::of_usize(m) * T::PI() / lp.ell).powi(2))
        .take_while(|&e| e <= window.e_max)
        .filter(|&e| e >= window.e_min && !out.iter().any(|b| b.contains(e)))
        .collect();
    out.extend(dirichlet.into_iter().map(|e| BandInterval {
        e_lo: e,
        e_hi: e,
        edge_lo: EdgeLabel::DirichletPoint,
        edge_hi: EdgeLabel::DirichletPoint,
        kind: IntervalKind::DirichletPoint,
    }));
    out.sort_by(|a, b| a.e_lo.partial_cmp(&b.e_lo).expect("finite energies"));
    Ok(out)
}
