//! Negative point spectrum of the star graph: `n` half-lines joined at one
//! vertex with coupling `U(t)`.
//!
//! Bound states `ψ_j(x) = b_j e^{-κx}` exist iff
//! `det[(U-I) - iκ(U+I)] = 0`, i.e. `κ = -i(λ_j-1)/(λ_j+1)` for some
//! eigenvalue of `U(t)`. Two families survive with `κ > 0`:
//! `κ = -tan((1-t)γ/2)` for `α < 0, t ≠ 1`, and
//! `κ = -cot((j/n - 1/2)πt)` for `n ≥ 3`, `1 ≤ j < n/2`.
//! The essential spectrum is `[0, ∞)` for every coupling.

use serde::{Deserialize, Serialize};

use crate::circulant::CirculantUnitary;
use crate::coupling::CouplingParams;
use crate::error::Result;
use crate::linalg::CMatrix;
use crate::roots::bisect_sign;
use crate::scalar::{cot, Real, C};

/// Lower end of the essential spectrum; it covers `[0, ∞)`.
pub const ESSENTIAL_SPECTRUM_START: f64 = 0.0;

/// Which eigenvalue of `U(t)` produced a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StarBranch {
    /// From `λ_0(t)`; present for attractive δ strength.
    Delta,
    /// From `λ_j(t)`, `1 ≤ j < n/2`.
    Rotational { j: usize },
}

impl StarBranch {
    pub fn label(&self) -> String {
        match self {
            StarBranch::Delta => "kappa0".to_string(),
            StarBranch::Rotational { j } => format!("kappa1-{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarEigenvalue<T> {
    /// `E = -κ²`.
    pub energy: T,
    pub kappa: T,
    /// Branches merged into this level; its length is the multiplicity.
    pub branches: Vec<StarBranch>,
}

impl<T> StarEigenvalue<T> {
    pub fn multiplicity(&self) -> usize {
        self.branches.len()
    }
}

/// Negative eigenvalues sorted by increasing energy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarSpectrum<T> {
    pub eigenvalues: Vec<StarEigenvalue<T>>,
}

impl<T: Real> StarSpectrum<T> {
    /// Number of eigenvalues counted with multiplicity.
    pub fn count(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity()).sum()
    }

    pub fn energies(&self) -> Vec<T> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat(e.energy).take(e.multiplicity()))
            .collect()
    }

    pub fn kappas(&self) -> Vec<T> {
        self.eigenvalues.iter().map(|e| e.kappa).collect()
    }

    pub fn branch_energy(&self, branch: StarBranch) -> Option<T> {
        self.eigenvalues
            .iter()
            .find(|e| e.branches.contains(&branch))
            .map(|e| e.energy)
    }
}

/// `κ = -tan((1-t)γ/2)` when it is positive.
pub fn delta_kappa<T: Real>(p: &CouplingParams<T>) -> Option<T> {
    if p.alpha < T::zero() && p.t < T::one() {
        let k = -((T::one() - p.t) * p.gamma().value() / T::of(2.0)).tan();
        (k > T::zero()).then_some(k)
    } else {
        None
    }
}

/// `κ_j = -cot((j/n - 1/2)πt)` for `1 ≤ j < n/2`; empty when `n < 3` or `t = 0`.
pub fn rotational_kappas<T: Real>(p: &CouplingParams<T>) -> Vec<(usize, T)> {
    if p.n < 3 || p.t <= T::zero() {
        return Vec::new();
    }
    let n = T::of_usize(p.n);
    (1..)
        .take_while(|j| 2 * j < p.n)
        .map(|j| {
            let arg = (T::of_usize(2 * j) - n) / (T::of(2.0) * n) * T::PI() * p.t;
            (j, -cot(arg))
        })
        .collect()
}

/// All negative eigenvalues of the star graph with coupling `U(t)`.
pub fn negative_eigenvalues<T: Real>(p: &CouplingParams<T>) -> StarSpectrum<T> {
    let mut raw: Vec<(T, StarBranch)> = Vec::new();
    if let Some(k) = delta_kappa(p) {
        raw.push((k, StarBranch::Delta));
    }
    raw.extend(
        rotational_kappas(p)
            .into_iter()
            .map(|(j, k)| (k, StarBranch::Rotational { j })),
    );
    StarSpectrum {
        eigenvalues: merge_levels(raw),
    }
}

fn merge_levels<T: Real>(mut raw: Vec<(T, StarBranch)>) -> Vec<StarEigenvalue<T>> {
    // largest κ first, i.e. lowest energy first
    raw.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(std::cmp::Ordering::Equal));

    let merge_tol = T::default_tol();
    let mut eigenvalues: Vec<StarEigenvalue<T>> = Vec::new();
    for (kappa, branch) in raw {
        match eigenvalues.last_mut() {
            Some(last) if (last.kappa - kappa).abs() <= merge_tol * kappa.max(T::one()) => {
                last.branches.push(branch)
            }
            _ => eigenvalues.push(StarEigenvalue {
                energy: -kappa * kappa,
                kappa,
                branches: vec![branch],
            }),
        }
    }
    eigenvalues
}

/// `det[(U-I) - iκ(U+I)]` from the assembled coupling matrix.
pub fn secular_determinant<T: Real>(kappa: T, u: &CirculantUnitary<T>) -> C<T> {
    secular_matrix(kappa, &u.matrix()).determinant()
}

fn secular_matrix<T: Real>(kappa: T, m: &CMatrix<T>) -> CMatrix<T> {
    let n = m.rows();
    let i_kappa = C::new(T::zero(), kappa);
    let one = C::new(T::one(), T::zero());
    CMatrix::from_fn(n, n, |r, c| {
        let id = if r == c { one } else { C::new(T::zero(), T::zero()) };
        (m[(r, c)] - id) - i_kappa * (m[(r, c)] + id)
    })
}

/// Scans `det[(U-I) - iκ(U+I)]` on `points` log-spaced values of
/// `κ ∈ [lo, hi]` and refines every sign change to within `tol`.
///
/// For real `κ` the determinant is a fixed complex phase times a real
/// polynomial in `κ`, so its projection onto a reference value changes sign
/// exactly at simple roots.
pub fn secular_roots_scan<T: Real>(
    u: &CirculantUnitary<T>,
    lo: T,
    hi: T,
    points: usize,
    tol: T,
) -> Result<Vec<T>> {
    let m = u.matrix();
    let det = |k: T| secular_matrix(k, &m).determinant();
    let (log_lo, log_hi) = (lo.ln(), hi.ln());
    let steps = T::of_usize(points.max(2) - 1);
    let grid: Vec<T> = (0..points.max(2))
        .map(|i| (log_lo + (log_hi - log_lo) * T::of_usize(i) / steps).exp())
        .collect();
    let values: Vec<C<T>> = grid.iter().map(|&k| det(k)).collect();
    let reference = values
        .iter()
        .copied()
        .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap_or(std::cmp::Ordering::Equal))
        .unwrap_or(C::new(T::one(), T::zero()));
    let phase = reference.conj() / reference.norm();
    let project = |z: C<T>| (z * phase).re;

    let mut roots = Vec::new();
    for w in 0..grid.len() - 1 {
        let (a, b) = (project(values[w]), project(values[w + 1]));
        if a == T::zero() {
            roots.push(grid[w]);
            continue;
        }
        if (a > T::zero()) != (b > T::zero()) && b != T::zero() {
            let (x, y) = bisect_sign(|k| project(det(k)), grid[w], grid[w + 1], tol)?;
            roots.push((x + y) / T::of(2.0));
        }
    }
    if let Some(&last) = values.last() {
        if project(last) == T::zero() {
            roots.push(hi);
        }
    }
    Ok(roots)
}

/// Which end of the interpolation interval a limit report approaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitSide {
    /// `t → 0+`, the δ coupling.
    Delta,
    /// `t → 1-`, the cyclic-shift coupling.
    Rotational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitPoint<T> {
    pub t: T,
    pub spectrum: StarSpectrum<T>,
}

/// Numeric trajectory of the bound states toward an endpoint of `[0, 1]`,
/// together with the analytic limits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitReport<T> {
    pub side: LimitSide,
    pub trajectory: Vec<LimitPoint<T>>,
    /// `-α²/n²` for `α < 0` as `t → 0+`; `0` as `t → 1-`.
    pub delta_limit: Option<T>,
    /// Limits of the rotational branches: divergent (`None`) as `t → 0+`,
    /// `-tan²(jπ/n)` as `t → 1-`.
    pub rotational_limits: Vec<(usize, Option<T>)>,
}

/// Builds the trajectory on `t = 10^{-d}` (or `1 - 10^{-d}`), `d = 1..=decades`.
pub fn limit_behavior<T: Real>(
    n: usize,
    alpha: T,
    side: LimitSide,
    decades: u32,
) -> Result<LimitReport<T>> {
    let base = CouplingParams::new(n, alpha, T::zero())?;
    let mut trajectory = Vec::with_capacity(decades as usize);
    for d in 1..=decades {
        let offset = T::of(10f64.powi(-(d as i32)));
        let t = match side {
            LimitSide::Delta => offset,
            LimitSide::Rotational => T::one() - offset,
        };
        let p = base.with_t(t)?;
        trajectory.push(LimitPoint {
            t,
            spectrum: negative_eigenvalues(&p),
        });
    }
    let n_t = T::of_usize(n);
    let delta_limit = match side {
        LimitSide::Delta => (alpha < T::zero()).then(|| -(alpha * alpha) / (n_t * n_t)),
        LimitSide::Rotational => (alpha < T::zero()).then(T::zero),
    };
    let rotational_limits = (1..)
        .take_while(|j| 2 * j < n)
        .map(|j| {
            let lim = match side {
                LimitSide::Delta => None,
                LimitSide::Rotational => {
                    let tan = (T::of_usize(j) * T::PI() / n_t).tan();
                    Some(-(tan * tan))
                }
            };
            (j, lim)
        })
        .collect();
    Ok(LimitReport {
        side,
        trajectory,
        delta_limit,
        rotational_limits,
    })
}
