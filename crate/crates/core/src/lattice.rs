//! Spectral membership for the square lattice of edge length `ℓ` whose
//! vertices carry the degree-4 coupling `U(t)`.
//!
//! Bloch–Floquet reduction with quasimomenta `(θ_1, θ_2)` turns the
//! spectral problem into the vanishing of a 4×4 determinant, which equals
//! `512·e^{i(θ_1+θ_2)}·e^{-i(1-t)γ/2}·(V_3k³ + V_2k² + V_1k + V_0)`. The
//! cubic depends on the phases only through `x = cos θ_1`, `y = cos θ_2` and
//! is bilinear in `(x, y)`, so `E = k²` lies in the spectrum iff the cubic
//! has a zero on `[-1, 1]²`.
//!
//! Several routes decide membership:
//! - [`corner_oracle`]: sign test of the cubic at the four corners of the
//!   box (a bilinear function attains its extrema there);
//! - [`membership_positive`] / [`membership_negative`]: the factorized
//!   inequalities obtained by eliminating the phases;
//! - [`membership_kirchhoff`] for `α = 0` and [`kronig_penney_band`] for
//!   `t = 0`.
//!
//! Negative energies `E = -κ²` are handled by substituting `k = iκ`.
//!
//! The band predicates describe the band part of the spectrum. The Dirichlet
//! energies `k = mπ/ℓ` belong to the spectrum for every `t` and `α`; where
//! they sit inside a gap (`α = 0` or `t = 1`) the band predicates return
//! `false` there and [`in_spectrum`] adds them back.

use serde::{Deserialize, Serialize};

use crate::circulant::dft_matrix;
use crate::coupling::{gamma, interpolated_eigenvalues, CouplingParams, GammaAngle};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::{cis, clamp_unit, cot, Real, C};

/// Square lattice parameters; the vertex degree is fixed to 4.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeParams<T> {
    pub ell: T,
    pub alpha: T,
    pub t: T,
}

impl<T: Real> LatticeParams<T> {
    pub fn new(ell: T, alpha: T, t: T) -> Result<Self> {
        let lp = Self { ell, alpha, t };
        lp.validate()?;
        Ok(lp)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.ell > T::zero() && self.ell.is_finite()) {
            return Err(Error::invalid("ell", format!("edge length must be positive, got {}", self.ell)));
        }
        self.coupling().validate()
    }

    pub fn coupling(&self) -> CouplingParams<T> {
        CouplingParams {
            n: 4,
            alpha: self.alpha,
            t: self.t,
        }
    }

    pub fn gamma(&self) -> GammaAngle<T> {
        gamma(4, self.alpha)
    }

    pub fn with_t(&self, t: T) -> Result<Self> {
        Self::new(self.ell, self.alpha, t)
    }

    pub fn with_alpha(&self, alpha: T) -> Result<Self> {
        Self::new(self.ell, alpha, self.t)
    }

    /// `(1-t)γ/2`.
    pub fn delta_phase(&self) -> T {
        (T::one() - self.t) * self.gamma().value() / T::of(2.0)
    }

    /// `πt/4`.
    pub fn rotation_phase(&self) -> T {
        T::PI() * self.t / T::of(4.0)
    }

    /// `cot(πt/4)`, infinite at `t = 0`.
    pub fn cot_rotation(&self) -> T {
        if self.t == T::zero() {
            T::infinity()
        } else {
            cot(self.rotation_phase())
        }
    }

    /// `cot((1-t)γ/2)`, signed infinity at `σ = 0` taken as the `t → 1-` limit.
    pub fn cot_delta(&self) -> T {
        let s = self.delta_phase();
        if s == T::zero() {
            if self.gamma().value() < T::zero() {
                T::neg_infinity()
            } else {
                T::infinity()
            }
        } else {
            cot(s)
        }
    }
}

/// Quasimomenta, normalized to `[-π, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochPhase<T> {
    pub theta1: T,
    pub theta2: T,
}

impl<T: Real> BlochPhase<T> {
    pub fn new(theta1: T, theta2: T) -> Self {
        Self {
            theta1: wrap_phase(theta1),
            theta2: wrap_phase(theta2),
        }
    }

    pub fn cosines(&self) -> (T, T) {
        (self.theta1.cos(), self.theta2.cos())
    }
}

fn wrap_phase<T: Real>(theta: T) -> T {
    let tau = T::TAU();
    let mut w = (theta + T::PI()) % tau;
    if w < T::zero() {
        w = w + tau;
    }
    let w = w - T::PI();
    if w >= T::PI() {
        -T::PI()
    } else {
        w
    }
}

/// A spectral point: `E = k²` (positive) or `E = -κ²` (negative).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum LatticePoint<T> {
    Momentum(T),
    Decay(T),
}

impl<T: Real> LatticePoint<T> {
    pub fn from_energy(e: T) -> Self {
        if e >= T::zero() {
            LatticePoint::Momentum(e.sqrt())
        } else {
            LatticePoint::Decay((-e).sqrt())
        }
    }

    pub fn energy(self) -> T {
        match self {
            LatticePoint::Momentum(k) => k * k,
            LatticePoint::Decay(kappa) => -(kappa * kappa),
        }
    }

    /// The complex momentum `k` (`iκ` on the negative side).
    pub fn momentum(self) -> C<T> {
        match self {
            LatticePoint::Momentum(k) => C::new(k, T::zero()),
            LatticePoint::Decay(kappa) => C::new(T::zero(), kappa),
        }
    }
}

/// Coefficients of the spectral cubic `V_3k³ + V_2k² + V_1k + V_0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VCoefficients<T> {
    pub v3: T,
    pub v2: T,
    pub v1: T,
    pub v0: T,
}

impl<T: Real> VCoefficients<T> {
    pub fn cubic(&self, k: T) -> T {
        ((self.v3 * k + self.v2) * k + self.v1) * k + self.v0
    }
}

/// `V_0..V_3` at real momentum `k` for phases with cosines `(x, y)`.
pub fn v_coefficients_cos<T: Real>(k: T, x: T, y: T, lp: &LatticeParams<T>) -> VCoefficients<T> {
    let two = T::of(2.0);
    let s = lp.delta_phase();
    let (cs, ss) = (s.cos(), s.sin());
    let r = lp.rotation_phase();
    let (sr2, cr2) = (r.sin().powi(2), r.cos().powi(2));
    let kl = k * lp.ell;
    let (sk, ck) = (clamp_unit(kl.sin()), clamp_unit(kl.cos()));
    VCoefficients {
        v3: -cs * sr2 * sk * (x + y + two * ck),
        v2: two * ss * sr2 * (x + ck) * (y + ck),
        v1: cs * cr2 * sk * (x + y - two * ck),
        v0: -two * ss * cr2 * sk * sk,
    }
}

/// `V_0..V_3` at real momentum `k` and quasimomenta `bp`.
pub fn v_coefficients<T: Real>(k: T, bp: &BlochPhase<T>, lp: &LatticeParams<T>) -> VCoefficients<T> {
    let (x, y) = bp.cosines();
    v_coefficients_cos(k, x, y, lp)
}

/// The cubic at complex momentum `k`, with `x = cos θ_1`, `y = cos θ_2`.
pub fn v_cubic_complex<T: Real>(k: C<T>, x: T, y: T, lp: &LatticeParams<T>) -> C<T> {
    let two = T::of(2.0);
    let s = lp.delta_phase();
    let (cs, ss) = (s.cos(), s.sin());
    let r = lp.rotation_phase();
    let (sr2, cr2) = (r.sin().powi(2), r.cos().powi(2));
    let kl = k * lp.ell;
    let (sk, ck) = (kl.sin(), kl.cos());
    let v3 = (ck * two + x + y) * sk * (-cs * sr2);
    let v2 = (ck + x) * (ck + y) * (two * ss * sr2);
    let v1 = (ck * (-two) + x + y) * sk * (cs * cr2);
    let v0 = sk * sk * (-two * ss * cr2);
    ((v3 * k + v2) * k + v1) * k + v0
}

/// The cubic at `k = iκ`; real-valued:
/// `-cσ s²(πt/4) sinh(κℓ)(x+y+2cosh)κ³ - 2sσ s²(x+cosh)(y+cosh)κ²
///  - cσ c²(πt/4) sinh(κℓ)(x+y-2cosh)κ + 2sσ c² sinh²(κℓ)`.
pub fn v_cubic_imaginary<T: Real>(kappa: T, x: T, y: T, lp: &LatticeParams<T>) -> T {
    let two = T::of(2.0);
    let s = lp.delta_phase();
    let (cs, ss) = (s.cos(), s.sin());
    let r = lp.rotation_phase();
    let (sr2, cr2) = (r.sin().powi(2), r.cos().powi(2));
    let kl = kappa * lp.ell;
    let (sh, ch) = (kl.sinh(), kl.cosh());
    let k2 = kappa * kappa;
    -cs * sr2 * sh * (x + y + two * ch) * k2 * kappa - two * ss * sr2 * (x + ch) * (y + ch) * k2
        - cs * cr2 * sh * (x + y - two * ch) * kappa
        + two * ss * cr2 * sh * sh
}

/// Cubic value at a spectral point, real on both sides of zero energy.
pub fn spectral_cubic<T: Real>(point: LatticePoint<T>, x: T, y: T, lp: &LatticeParams<T>) -> T {
    match point {
        LatticePoint::Momentum(k) => v_coefficients_cos(k, x, y, lp).cubic(k),
        LatticePoint::Decay(kappa) => v_cubic_imaginary(kappa, x, y, lp),
    }
}

/// `512·e^{i(θ_1+θ_2)}·e^{-i(1-t)γ/2}`.
pub fn det_prefactor<T: Real>(bp: &BlochPhase<T>, lp: &LatticeParams<T>) -> C<T> {
    cis(bp.theta1 + bp.theta2 - lp.delta_phase()) * T::of(512.0)
}

/// `det[(D-I)F*M - k(D+I)F*N]` at complex momentum `k`.
pub fn det_condition_complex<T: Real>(k: C<T>, bp: &BlochPhase<T>, lp: &LatticeParams<T>) -> C<T> {
    let one = C::new(T::one(), T::zero());
    let zero = C::new(T::zero(), T::zero());
    let i = C::new(T::zero(), T::one());
    let kl = k * lp.ell;
    let a1m = (i * (-kl + bp.theta1)).exp();
    let a1p = (i * (kl + bp.theta1)).exp();
    let a2m = (i * (-kl + bp.theta2)).exp();
    let a2p = (i * (kl + bp.theta2)).exp();
    #[rustfmt::skip]
    let m_rows = [
        [a1m, a1p, zero, zero],
        [zero, zero, a2m, a2p],
        [one, one, zero, zero],
        [zero, zero, one, one],
    ];
    #[rustfmt::skip]
    let n_rows = [
        [a1m, -a1p, zero, zero],
        [zero, zero, a2m, -a2p],
        [-one, one, zero, zero],
        [zero, zero, -one, one],
    ];
    let m = CMatrix::from_fn(4, 4, |r, c| m_rows[r][c]);
    let n = CMatrix::from_fn(4, 4, |r, c| n_rows[r][c]);
    let lam = interpolated_eigenvalues(&lp.coupling());
    let d_minus: Vec<C<T>> = lam.values().iter().map(|&l| l - one).collect();
    let d_plus: Vec<C<T>> = lam.values().iter().map(|&l| (l + one) * k).collect();
    let f_adj = dft_matrix::<T>(4).adjoint();
    let lhs = &(&CMatrix::diagonal(&d_minus) * &f_adj) * &m;
    let rhs = &(&CMatrix::diagonal(&d_plus) * &f_adj) * &n;
    (&lhs - &rhs).determinant()
}

/// Determinant spectral condition at real momentum `k`.
pub fn det_condition<T: Real>(k: T, bp: &BlochPhase<T>, lp: &LatticeParams<T>) -> C<T> {
    det_condition_complex(C::new(k, T::zero()), bp, lp)
}

/// `A`, `B` of the reduced condition `cos θ_1 cos θ_2 + A(cos θ_1 + cos θ_2) + B = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ABCoefficients<T> {
    pub a: T,
    pub b: T,
}

impl<T: Real> ABCoefficients<T> {
    /// `xy + A(x+y) + B`.
    pub fn reduced(&self, x: T, y: T) -> T {
        x * y + self.a * (x + y) + self.b
    }
}

fn check_reducible<T: Real>(k: T, lp: &LatticeParams<T>) -> Result<()> {
    if !(lp.t > T::zero() && lp.t < T::one()) {
        return Err(Error::ReductionUndefined("requires 0 < t < 1"));
    }
    if lp.gamma().is_zero() {
        return Err(Error::ReductionUndefined("requires alpha != 0"));
    }
    if k == T::zero() {
        return Err(Error::ReductionUndefined("requires k != 0"));
    }
    Ok(())
}

pub fn ab_coefficients<T: Real>(k: T, lp: &LatticeParams<T>) -> Result<ABCoefficients<T>> {
    check_reducible(k, lp)?;
    let half = T::of(0.5);
    let cg = cot(lp.delta_phase());
    let c2 = cot(lp.rotation_phase()).powi(2);
    let kl = k * lp.ell;
    let (sk, ck) = (kl.sin(), kl.cos());
    let a = -half * cg * (k - c2 / k) * sk + ck;
    let b = -cg * (k + c2 / k) * ck * sk + ck * ck - c2 / (k * k) * sk * sk;
    Ok(ABCoefficients { a, b })
}

/// Factorized closed forms of `B+1-2A`, `B+1+2A` and `B-1`.
pub fn ab_factorizations<T: Real>(k: T, lp: &LatticeParams<T>) -> Result<(T, T, T)> {
    check_reducible(k, lp)?;
    let f = Factors::new(k, lp);
    let p = -f.sin_kl / k * (T::one() + f.cos_kl) * f.f_tan * f.g_tan;
    let q = f.sin_kl / k * (T::one() - f.cos_kl) * f.f_cot * f.g_cot;
    let r = -f.sin_kl * f.sin_kl * f.b_minus_one * (f.cot_rot2 / (k * k) + T::one());
    Ok((p, q, r))
}

/// The factors appearing in the reduced positive-energy conditions.
struct Factors<T> {
    sin_kl: T,
    cos_kl: T,
    cot_rot2: T,
    /// `cot((1-t)γ/2) + tan(kℓ/2)/k`
    f_tan: T,
    /// `cot((1-t)γ/2) - cot(kℓ/2)/k`
    f_cot: T,
    /// `cot²(πt/4) - k²tan²(kℓ/2)`
    g_tan: T,
    /// `cot²(πt/4) - k²cot²(kℓ/2)`
    g_cot: T,
    /// `k cot(kℓ) cot((1-t)γ/2) + 1`
    b_minus_one: T,
}

impl<T: Real> Factors<T> {
    fn new(k: T, lp: &LatticeParams<T>) -> Self {
        let cg = cot(lp.delta_phase());
        let cot_rot2 = cot(lp.rotation_phase()).powi(2);
        let kl = k * lp.ell;
        let h = kl / T::of(2.0);
        let (tan_h, cot_h) = (h.tan(), cot(h));
        Self {
            sin_kl: clamp_unit(kl.sin()),
            cos_kl: clamp_unit(kl.cos()),
            cot_rot2,
            f_tan: cg + tan_h / k,
            f_cot: cg - cot_h / k,
            g_tan: cot_rot2 - k * k * tan_h * tan_h,
            g_cot: cot_rot2 - k * k * cot_h * cot_h,
            b_minus_one: k * cot(kl) * cg + T::one(),
        }
    }
}

fn sgn<T: Real>(x: T) -> i8 {
    if x > T::zero() {
        1
    } else if x < T::zero() {
        -1
    } else {
        0
    }
}

/// `k = mπ/ℓ` for some positive integer `m`, to within `tol` in `k`.
pub fn is_dirichlet_point<T: Real>(k: T, ell: T, tol: T) -> bool {
    if k <= T::zero() {
        return false;
    }
    let m = (k * ell / T::PI()).round();
    m >= T::one() && (k - m * T::PI() / ell).abs() <= tol
}

/// Band condition for `E = k² > 0`.
///
/// Dispatches to [`kronig_penney_band`] at `t = 0` and to the Kirchhoff
/// condition when `α = 0` or `t = 1` (where `U(1) = R` does not depend on
/// `α`); otherwise evaluates the factorized inequalities. Band edges are
/// included.
pub fn membership_positive<T: Real>(k: T, lp: &LatticeParams<T>) -> bool {
    if !(k > T::zero()) {
        return false;
    }
    if lp.t == T::zero() {
        return kronig_penney_band(k, lp);
    }
    if lp.gamma().is_zero() || lp.t == T::one() {
        return kirchhoff_positive(k, lp);
    }
    let f = Factors::new(k, lp);
    if f.sin_kl == T::zero() {
        return true;
    }
    let (f1, f2, g1, g2) = (sgn(f.f_tan), sgn(f.f_cot), sgn(f.g_tan), sgn(f.g_cot));
    let product_condition = f1 * f2 * g1 * g2 >= 0;
    if product_condition {
        return true;
    }
    let s = sgn(f.sin_kl);
    let line1 = s * sgn(T::one() + f.cos_kl) * f1 * g1 <= 0;
    let line2 = s * sgn(T::one() - f.cos_kl) * f2 * g2 >= 0;
    let line3 = sgn(f.b_minus_one) >= 0;
    line1 && line2 && line3
}

/// Band condition for `E = -κ² < 0`.
pub fn membership_negative<T: Real>(kappa: T, lp: &LatticeParams<T>) -> bool {
    if !(kappa > T::zero()) {
        return false;
    }
    if lp.t == T::zero() {
        return kronig_penney_negative(kappa, lp);
    }
    let g = lp.gamma().value();
    if g >= T::zero() || lp.t == T::one() {
        return kirchhoff_negative(kappa, lp);
    }
    let c = lp.cot_rotation();
    let m = -cot(lp.delta_phase());
    let half = kappa * lp.ell / T::of(2.0);
    let th = half.tanh();
    let coth = T::one() / th;
    let th_full = (kappa * lp.ell).tanh();
    let lower = kappa * th;
    let upper = kappa * coth;

    let kirchhoff_band = lower <= c && c <= upper;
    let band1 = kirchhoff_band && (m <= th / kappa || m >= coth / kappa);
    let band2 = th / kappa <= m && m <= coth / kappa && (c <= lower || c >= upper);
    let band3 = lower <= c && c <= kappa && th_full / kappa <= m && m <= coth / kappa;
    let band4 = kappa <= c && c <= upper && th / kappa <= m && m <= th_full / kappa;
    band1 || band2 || band3 || band4
}

fn kirchhoff_positive<T: Real>(k: T, lp: &LatticeParams<T>) -> bool {
    if lp.t == T::zero() {
        return true;
    }
    // (k|tan h| - c)(k|cot h| - c) ≥ 0 multiplied by |sin kℓ|(1 + |sin kℓ|);
    // exact at the collapse points k = c, |sin kℓ| = 1
    let c = lp.cot_rotation();
    let kl = k * lp.ell;
    let s = clamp_unit(kl.sin()).abs();
    let mut co = clamp_unit(kl.cos());
    // cos kℓ is only known to ε·kℓ; (m-½)π/ℓ lies in the band for every t
    if co.abs() <= T::epsilon() * (T::one() + kl) {
        co = T::zero();
    }
    let d = k - c;
    d * d * s * (T::one() + s) >= T::of(2.0) * c * k * co * co
}

fn kirchhoff_negative<T: Real>(kappa: T, lp: &LatticeParams<T>) -> bool {
    let c = lp.cot_rotation();
    let th = (kappa * lp.ell / T::of(2.0)).tanh();
    kappa * th <= c && c <= kappa / th
}

/// Band condition of the `α = 0` lattice: for `k > 0`
/// `(k|tan(kℓ/2)| - cot(πt/4))(k|cot(kℓ/2)| - cot(πt/4)) ≥ 0`, for `κ > 0`
/// `κ tanh(κℓ/2) ≤ cot(πt/4) ≤ κ coth(κℓ/2)`. The `α` in `lp` is ignored.
pub fn membership_kirchhoff<T: Real>(point: LatticePoint<T>, lp: &LatticeParams<T>) -> bool {
    match point {
        LatticePoint::Momentum(k) => k > T::zero() && kirchhoff_positive(k, lp),
        LatticePoint::Decay(kappa) => kappa > T::zero() && kirchhoff_negative(kappa, lp),
    }
}

/// Pure δ lattice (`t = 0`): `|cos kℓ + (tan(γ/2)/k) sin kℓ| ≤ 1`.
pub fn kronig_penney_band<T: Real>(k: T, lp: &LatticeParams<T>) -> bool {
    if !(k > T::zero()) {
        return false;
    }
    let tau = lp.gamma().half_tan();
    let kl = k * lp.ell;
    (clamp_unit(kl.cos()) + tau / k * clamp_unit(kl.sin())).abs() <= T::one()
}

/// Negative-energy counterpart: `|cosh κℓ + (tan(γ/2)/κ) sinh κℓ| ≤ 1`.
pub fn kronig_penney_negative<T: Real>(kappa: T, lp: &LatticeParams<T>) -> bool {
    if !(kappa > T::zero()) {
        return false;
    }
    let tau = lp.gamma().half_tan();
    if tau >= T::zero() {
        return false;
    }
    let kl = kappa * lp.ell;
    (kl.cosh() + tau / kappa * kl.sinh()).abs() <= T::one()
}

/// Band membership at any spectral point, dispatching by sign of energy.
pub fn membership<T: Real>(point: LatticePoint<T>, lp: &LatticeParams<T>) -> bool {
    match point {
        LatticePoint::Momentum(k) => membership_positive(k, lp),
        LatticePoint::Decay(kappa) => membership_negative(kappa, lp),
    }
}

/// Full spectrum: band membership or a Dirichlet energy.
pub fn in_spectrum<T: Real>(point: LatticePoint<T>, lp: &LatticeParams<T>) -> bool {
    membership(point, lp)
        || matches!(point, LatticePoint::Momentum(k) if is_dirichlet_point(k, lp.ell, T::default_tol()))
}

/// Independent membership test: the cubic is bilinear in `(cos θ_1, cos θ_2)`,
/// so it vanishes somewhere on `[-1, 1]²` iff its four corner values are not
/// all of one strict sign.
pub fn corner_oracle<T: Real>(point: LatticePoint<T>, lp: &LatticeParams<T>) -> bool {
    let one = T::one();
    let corners = [(one, one), (one, -one), (-one, one), (-one, -one)];
    let values = corners.map(|(x, y)| spectral_cubic(point, x, y, lp));
    let all_pos = values.iter().all(|&v| v > T::zero());
    let all_neg = values.iter().all(|&v| v < T::zero());
    !(all_pos || all_neg)
}

/// Slower oracle: sign range of the cubic over an `n × n` grid of phases
/// spanning `[-π, π]` (which contains the corners `θ ∈ {0, ±π}` for odd `n`).
pub fn theta_grid_oracle<T: Real>(point: LatticePoint<T>, lp: &LatticeParams<T>, n: usize) -> bool {
    let n = n.max(2);
    let theta = |i: usize| -T::PI() + T::TAU() * T::of_usize(i) / T::of_usize(n - 1);
    let cosines: Vec<T> = (0..n).map(|i| theta(i).cos()).collect();
    let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
    for &x in &cosines {
        for &y in &cosines {
            let v = spectral_cubic(point, x, y, lp);
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    lo <= T::zero() && T::zero() <= hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn lp(ell: f64, alpha: f64, t: f64) -> LatticeParams<f64> {
        LatticeParams::new(ell, alpha, t).unwrap()
    }

    const WEAK: f64 = -1.656_854_249_492_380_2; // -4(√2-1)
    const STRONG: f64 = -9.656_854_249_492_381; // -4(√2+1)

    #[test]
    fn v2_v0_vanish_for_kirchhoff_and_rotation() {
        let bp = BlochPhase::new(0.3, -2.0);
        for k in [0.4, 2.2, 7.9] {
            let v = v_coefficients(k, &bp, &lp(1.0, 0.0, 0.6));
            assert_eq!((v.v2, v.v0), (0.0, 0.0));
            let v = v_coefficients(k, &bp, &lp(1.3, -3.0, 1.0));
            assert!(v.v2.abs() < 1e-300 && v.v0.abs() < 1e-300);
        }
    }

    #[test]
    fn cubic_vanishes_at_dirichlet_with_matching_phase() {
        for m in 1..5 {
            let ell = 1.7;
            let k = m as f64 * PI / ell;
            let c = (k * ell).cos();
            let v = v_coefficients_cos(k, -c, -c, &lp(ell, 2.0, 0.4));
            assert!(v.cubic(k).abs() < 1e-12, "{}", v.cubic(k));
        }
    }

    #[test]
    fn determinant_identity_at_rotation_point() {
        let p = lp(1.0, 0.0, 1.0);
        let bp = BlochPhase::new(0.0, 0.0);
        let k = PI;
        let ratio = det_condition(k, &bp, &p) / det_prefactor(&bp, &p);
        let cubic = v_coefficients(k, &bp, &p).cubic(k);
        assert!((ratio - C::new(cubic, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn determinant_identity_complex_momentum() {
        let p = lp(1.2, -2.0, 0.4);
        let bp = BlochPhase::new(0.4, -1.1);
        let (x, y) = bp.cosines();
        let kappa = 1.3;
        let ratio = det_condition_complex(C::new(0.0, kappa), &bp, &p) / det_prefactor(&bp, &p);
        let cubic = v_cubic_imaginary(kappa, x, y, &p);
        assert!((ratio - C::new(cubic, 0.0)).norm() < 1e-9 * cubic.abs().max(1.0));
        let general = v_cubic_complex(C::new(0.0, kappa), x, y, &p);
        assert!((general - C::new(cubic, 0.0)).norm() < 1e-10 * cubic.abs().max(1.0));
    }

    #[test]
    fn ab_reduction_requires_interior_parameters() {
        assert!(ab_coefficients(1.0, &lp(1.0, 0.0, 0.5)).is_err());
        assert!(ab_coefficients(1.0, &lp(1.0, -1.0, 0.0)).is_err());
        assert!(ab_coefficients(1.0, &lp(1.0, -1.0, 1.0)).is_err());
        assert!(ab_coefficients(0.0, &lp(1.0, -1.0, 0.5)).is_err());
    }

    #[test]
    fn ab_factorizations_match_direct_forms() {
        for (k, ell, alpha, t) in [(0.7, 1.0, WEAK, 0.3), (3.3, 2.0, 4.0, 0.8), (9.1, 0.6, STRONG, 0.55)] {
            let p = lp(ell, alpha, t);
            let ab = ab_coefficients(k, &p).unwrap();
            let (pp, qq, rr) = ab_factorizations(k, &p).unwrap();
            let scale = 1.0 + ab.a.abs() + ab.b.abs();
            assert!((pp - (ab.b + 1.0 - 2.0 * ab.a)).abs() < 1e-10 * scale);
            assert!((qq - (ab.b + 1.0 + 2.0 * ab.a)).abs() < 1e-10 * scale);
            assert!((rr - (ab.b - 1.0)).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn kirchhoff_landmarks() {
        let p0 = lp(1.0, 0.0, 0.0);
        for k in [0.01, 1.0, PI, 17.0] {
            assert!(membership_kirchhoff(LatticePoint::Momentum(k), &p0));
        }
        for t in [0.2, 0.7, 1.0] {
            let p = lp(1.0, 0.0, t);
            for m in 1..6 {
                let k = (m as f64 - 0.5) * PI;
                assert!(membership_kirchhoff(LatticePoint::Momentum(k), &p));
            }
        }
        assert!(!membership_kirchhoff(LatticePoint::Momentum(PI), &lp(1.0, 0.0, 1.0)));
        // the band straddles κ = cot(πt/4)
        let p = lp(1.0, 0.0, 0.3);
        let c = 1.0 / (PI * 0.3 / 4.0).tan();
        assert!(membership_kirchhoff(LatticePoint::Decay(c), &p));
    }

    #[test]
    fn dirichlet_points_always_in_spectrum() {
        for (alpha, t) in [(WEAK, 0.3), (STRONG, 0.7), (3.0, 0.5), (-0.2, 0.05)] {
            let p = lp(1.0, alpha, t);
            for m in 1..8 {
                let k = m as f64 * PI;
                assert!(in_spectrum(LatticePoint::Momentum(k), &p));
            }
        }
        assert!(!membership_positive(PI, &lp(1.0, WEAK, 1.0)));
        assert!(in_spectrum(LatticePoint::Momentum(PI), &lp(1.0, WEAK, 1.0)));
    }

    #[test]
    fn repulsive_negative_side_equals_kirchhoff() {
        let a = lp(1.0, 5.0, 0.4);
        let b = lp(1.0, 0.0, 0.4);
        for i in 1..2000 {
            let kappa = i as f64 * 0.005;
            assert_eq!(membership_negative(kappa, &a), membership_negative(kappa, &b));
        }
    }

    #[test]
    fn kronig_penney_at_t_zero() {
        let p = lp(1.0, 0.0, 0.0);
        assert!((1..500).all(|i| kronig_penney_band(i as f64 * 0.05, &p)));
        // γ < 0: the high-energy gap sits just below mπ/ℓ
        let p = lp(1.0, -2.0, 0.0);
        let m = 30.0;
        assert!(!kronig_penney_band(m * PI - 0.5 / (m * PI), &p));
        assert!(kronig_penney_band(m * PI + 0.5 / (m * PI), &p));
        let p = lp(1.0, 2.0, 0.0);
        assert!(kronig_penney_band(m * PI - 0.5 / (m * PI), &p));
        assert!(!kronig_penney_band(m * PI + 0.5 / (m * PI), &p));
    }

    #[test]
    fn phases_wrap_into_half_open_interval() {
        let bp = BlochPhase::new(PI, -3.0 * PI);
        assert_eq!(bp.theta1, -PI);
        assert!((bp.theta2 + PI).abs() < 1e-15);
        let bp = BlochPhase::new(7.0, 0.25);
        assert!((bp.theta1 - (7.0 - 2.0 * PI)).abs() < 1e-15);
        assert_eq!(bp.theta2, 0.25);
    }

    #[test]
    fn grid_oracle_agrees_with_corner_oracle() {
        let p = lp(1.0, WEAK, 0.45);
        for i in 1..400 {
            let e = -20.0 + i as f64 * 0.3;
            let pt = LatticePoint::from_energy(e);
            assert_eq!(theta_grid_oracle(pt, &p, 101), corner_oracle(pt, &p), "E = {e}");
        }
    }

    #[test]
    fn lattice_params_validation() {
        assert!(LatticeParams::new(0.0, 0.0, 0.5).is_err());
        assert!(LatticeParams::new(1.0, 0.0, 1.2).is_err());
        assert!(LatticeParams::new(f64::INFINITY, 0.0, 0.5).is_err());
    }
}
