//! The interpolating family `U(t)` between the δ coupling (`t = 0`) and the
//! cyclic-shift coupling `R` (`t = 1`).
//!
//! The path is defined on eigenvalues: `λ_0(t) = e^{-i(1-t)γ}` and
//! `λ_k(t) = -e^{iπt(2k/n-1)}` for `k ≥ 1`, with `γ = 2·arctan(α/n)`. Every
//! `λ_k(t)` has unit modulus, so each `U(t)` is a unitary circulant.

use serde::{Deserialize, Serialize};

use crate::circulant::{CirculantUnitary, EigenvalueVector, Generator};
use crate::error::{Error, Result};
use crate::scalar::{cis, root_of_unity, Real, C};

/// Below this distance from `t ∈ {0, 1}` the closed-form generator is
/// replaced by the direct sum (its denominator vanishes at the endpoints).
pub const T_EPS: f64 = 1e-9;

/// Vertex degree, δ strength and interpolation parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingParams<T> {
    pub n: usize,
    pub alpha: T,
    pub t: T,
}

impl<T: Real> CouplingParams<T> {
    pub fn new(n: usize, alpha: T, t: T) -> Result<Self> {
        let p = Self { n, alpha, t };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::invalid("n", format!("vertex degree must be >= 2, got {}", self.n)));
        }
        if !self.alpha.is_finite() {
            return Err(Error::invalid("alpha", "must be finite"));
        }
        if !(self.t >= T::zero() && self.t <= T::one()) {
            return Err(Error::invalid("t", format!("must lie in [0, 1], got {}", self.t)));
        }
        Ok(())
    }

    pub fn gamma(&self) -> GammaAngle<T> {
        gamma(self.n, self.alpha)
    }

    pub fn with_t(&self, t: T) -> Result<Self> {
        Self::new(self.n, self.alpha, t)
    }
}

/// `γ = arg((n+iα)/(n-iα)) ∈ (-π, π)`, with the sign of `α`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct GammaAngle<T>(pub T);

impl<T: Real> GammaAngle<T> {
    pub fn value(self) -> T {
        self.0
    }

    /// `tan(γ/2) = α/n`.
    pub fn half_tan(self) -> T {
        (self.0 / T::of(2.0)).tan()
    }

    pub fn is_zero(self) -> bool {
        self.0 == T::zero()
    }
}

/// `γ = 2·arctan(α/n)`; equals the principal argument of `(n+iα)/(n-iα)`.
pub fn gamma<T: Real>(n: usize, alpha: T) -> GammaAngle<T> {
    GammaAngle(T::of(2.0) * (alpha / T::of_usize(n)).atan())
}

/// The eigenvalue path `Λ(t)`.
pub fn interpolated_eigenvalues<T: Real>(p: &CouplingParams<T>) -> EigenvalueVector<T> {
    let n = p.n;
    let g = p.gamma().value();
    let pi_t = T::PI() * p.t;
    let mut values = Vec::with_capacity(n);
    values.push(cis(-(T::one() - p.t) * g));
    for k in 1..n {
        // π t (2k/n - 1) = π t (2k - n)/n
        let phase = pi_t * (T::of_usize(2 * k) - T::of_usize(n)) / T::of_usize(n);
        values.push(-cis(phase));
    }
    EigenvalueVector::new(values).expect("n >= 2 validated")
}

/// Generator of the δ coupling `-I + 2/(n+iα) J`.
pub fn delta_generator<T: Real>(n: usize, alpha: T) -> Result<Generator<T>> {
    if n < 2 {
        return Err(Error::invalid("n", format!("vertex degree must be >= 2, got {n}")));
    }
    let d = C::new(T::of(2.0), T::zero()) / C::new(T::of_usize(n), alpha);
    let mut e = vec![d; n];
    e[0] = d - T::one();
    Generator::new(e)
}

/// `c_j(t) = (1/n)(e^{-i(1-t)γ} - Σ_{k≥1} e^{iπt(2k/n-1)} ω^{-kj})`, summed term by term.
pub fn generator_by_sum<T: Real>(p: &CouplingParams<T>) -> Generator<T> {
    let n = p.n;
    let lam = interpolated_eigenvalues(p);
    let inv_n = T::one() / T::of_usize(n);
    let entries = (0..n)
        .map(|j| {
            let tail = (1..n).fold(C::new(T::zero(), T::zero()), |acc, k| {
                acc + (-lam.values()[k]) * root_of_unity::<T>(-((k * j) as i64), n)
            });
            (lam.values()[0] - tail) * inv_n
        })
        .collect();
    Generator::new(entries).expect("n >= 2 validated")
}

/// Geometric-series form of the generator, valid for `t ∈ (0, 1)`:
/// `c_j = (1/n)(e^{-i(1-t)γ} + e^{-iπt} - (e^{iπt}-e^{-iπt})/(e^{2πi(t-j)/n}-1))`.
///
/// The quotient is evaluated as `sin(πt)/sin(φ/2)·e^{-iφ/2}` with
/// `φ = 2π(t-j)/n`, which is the same expression without cancellation.
pub fn generator_closed_form<T: Real>(p: &CouplingParams<T>) -> Result<Generator<T>> {
    if !(p.t > T::zero() && p.t < T::one()) {
        return Err(Error::invalid("t", "closed form requires t in (0, 1)"));
    }
    let n = p.n;
    let inv_n = T::one() / T::of_usize(n);
    let lam0 = cis(-(T::one() - p.t) * p.gamma().value());
    let pi_t = T::PI() * p.t;
    let head = lam0 + cis(-pi_t);
    let entries = (0..n)
        .map(|j| {
            let phi = T::TAU() * (p.t - T::of_usize(j)) / T::of_usize(n);
            let half = phi / T::of(2.0);
            let quotient = cis(-half) * (pi_t.sin() / half.sin());
            (head - quotient) * inv_n
        })
        .collect();
    Generator::new(entries)
}

/// Generator of `U(t)`: exact endpoint matrices at `t = 0` and `t = 1`, the
/// closed form on `(T_EPS, 1 - T_EPS)` and the direct sum elsewhere.
pub fn interpolated_generator<T: Real>(p: &CouplingParams<T>) -> Generator<T> {
    let eps = T::of(T_EPS);
    if p.t == T::zero() {
        delta_generator(p.n, p.alpha).expect("n >= 2 validated")
    } else if p.t == T::one() {
        Generator::rotation(p.n).expect("n >= 2 validated")
    } else if p.t > eps && p.t < T::one() - eps {
        generator_closed_form(p).expect("t in open interval")
    } else {
        generator_by_sum(p)
    }
}

/// `U(t)` as a unitary circulant carrying both its generator and `Λ(t)`.
pub fn coupling_matrix<T: Real>(p: &CouplingParams<T>) -> Result<CirculantUnitary<T>> {
    p.validate()?;
    let tol = T::default_tol() * T::of(10.0);
    CirculantUnitary::from_parts(interpolated_generator(p), interpolated_eigenvalues(p), tol)
}
