//! Factor curves bounding the bands.
//!
//! Each curve is stored in a bounded form: the factor multiplied through by
//! the denominators it carries, so it stays finite at `t ∈ {0, 1}` and at the
//! poles of `tan(kℓ/2)`, `cot(kℓ/2)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lattice::LatticeParams;
use crate::scalar::Real;

/// Zero set of one factor of the band conditions, as a function of `(t, k)`
/// or `(t, κ)` on the negative side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeCurve {
    /// `cot((1-t)γ/2) + tan(kℓ/2)/k`
    CotgPlusTan,
    /// `cot((1-t)γ/2) - cot(kℓ/2)/k`
    CotgMinusCot,
    /// `cot²(πt/4) - k²tan²(kℓ/2)`
    Cot2MinusTan2,
    /// `cot²(πt/4) - k²cot²(kℓ/2)`
    Cot2MinusCot2,
    /// `k cot(kℓ) cot((1-t)γ/2) + 1`
    KcotCotgPlusOne,
    /// `cot((1-t)γ/2) + tanh(κℓ/2)/κ`
    CotgPlusTanh,
    /// `cot((1-t)γ/2) + coth(κℓ/2)/κ`
    CotgPlusCoth,
    /// `cot((1-t)γ/2) + tanh(κℓ)/κ`
    KcothCotgPlusOne,
    /// `cot(πt/4) - κ tanh(κℓ/2)`
    CotMinusTanh,
    /// `cot(πt/4) - κ coth(κℓ/2)`
    CotMinusCoth,
    /// `cot(πt/4) - κ`
    CotMinusKappa,
}

impl EdgeCurve {
    pub const POSITIVE: [EdgeCurve; 5] = [
        EdgeCurve::CotgPlusTan,
        EdgeCurve::CotgMinusCot,
        EdgeCurve::Cot2MinusTan2,
        EdgeCurve::Cot2MinusCot2,
        EdgeCurve::KcotCotgPlusOne,
    ];

    pub const NEGATIVE: [EdgeCurve; 6] = [
        EdgeCurve::CotgPlusTanh,
        EdgeCurve::CotgPlusCoth,
        EdgeCurve::KcothCotgPlusOne,
        EdgeCurve::CotMinusTanh,
        EdgeCurve::CotMinusCoth,
        EdgeCurve::CotMinusKappa,
    ];

    pub fn id(self) -> &'static str {
        match self {
            EdgeCurve::CotgPlusTan => "cotg_plus_tan",
            EdgeCurve::CotgMinusCot => "cotg_minus_cot",
            EdgeCurve::Cot2MinusTan2 => "cot2_minus_tan2",
            EdgeCurve::Cot2MinusCot2 => "cot2_minus_cot2",
            EdgeCurve::KcotCotgPlusOne => "kcot_cotg_plus_one",
            EdgeCurve::CotgPlusTanh => "cotg_plus_tanh",
            EdgeCurve::CotgPlusCoth => "cotg_plus_coth",
            EdgeCurve::KcothCotgPlusOne => "kcoth_cotg_plus_one",
            EdgeCurve::CotMinusTanh => "cot_minus_tanh",
            EdgeCurve::CotMinusCoth => "cot_minus_coth",
            EdgeCurve::CotMinusKappa => "cot_minus_kappa",
        }
    }

    /// Whether the curve lives on the negative-energy side (argument `κ`).
    pub fn is_hyperbolic(self) -> bool {
        EdgeCurve::NEGATIVE.contains(&self)
    }

    /// Whether the curve depends on the coupling strength.
    pub fn depends_on_alpha(self) -> bool {
        !matches!(
            self,
            EdgeCurve::Cot2MinusTan2
                | EdgeCurve::Cot2MinusCot2
                | EdgeCurve::CotMinusTanh
                | EdgeCurve::CotMinusCoth
                | EdgeCurve::CotMinusKappa
        )
    }

    /// Bounded form of the factor at `k` (or `κ`); same zero set as the factor
    /// away from its poles.
    pub fn eval<T: Real>(self, q: T, lp: &LatticeParams<T>) -> T {
        let s = lp.delta_phase();
        let (cs, ss) = (s.cos(), s.sin());
        let r = lp.rotation_phase();
        let (cr, sr) = (r.cos(), r.sin());
        let h = q * lp.ell / T::of(2.0);
        match self {
            EdgeCurve::CotgPlusTan => q * cs * h.cos() + ss * h.sin(),
            EdgeCurve::CotgMinusCot => q * cs * h.sin() - ss * h.cos(),
            EdgeCurve::Cot2MinusTan2 => cr * h.cos().abs() - q * sr * h.sin().abs(),
            EdgeCurve::Cot2MinusCot2 => cr * h.sin().abs() - q * sr * h.cos().abs(),
            EdgeCurve::KcotCotgPlusOne => {
                let kl = q * lp.ell;
                q * cs * kl.cos() + ss * kl.sin()
            }
            EdgeCurve::CotgPlusTanh => q * cs + ss * h.tanh(),
            EdgeCurve::CotgPlusCoth => q * cs * h.tanh() + ss,
            EdgeCurve::KcothCotgPlusOne => q * cs + ss * (q * lp.ell).tanh(),
            EdgeCurve::CotMinusTanh => cr - q * sr * h.tanh(),
            EdgeCurve::CotMinusCoth => cr * h.tanh() - q * sr,
            EdgeCurve::CotMinusKappa => cr - q * sr,
        }
    }

    /// Whether the curve changes sign (or vanishes) within `q ± radius`.
    pub fn vanishes_near<T: Real>(self, q: T, radius: T, lp: &LatticeParams<T>) -> bool {
        let lo = (q - radius).max(T::zero());
        let a = self.eval(lo, lp);
        let b = self.eval(q + radius, lp);
        let m = self.eval(q, lp);
        a == T::zero() || b == T::zero() || m == T::zero() || (a > T::zero()) != (b > T::zero())
    }
}

impl fmt::Display for EdgeCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for EdgeCurve {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EdgeCurve::POSITIVE
            .iter()
            .chain(EdgeCurve::NEGATIVE.iter())
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| format!("unknown edge curve `{s}`"))
    }
}

/// What terminates a band interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum EdgeLabel {
    Curve(EdgeCurve),
    /// Isolated Dirichlet energy `(mπ/ℓ)²`.
    DirichletPoint,
    /// The band meets `E = 0` from one side only.
    ZeroEnergy,
    /// The band runs past the scanned window.
    ScanRange,
    /// No factor curve could be matched to the refined edge.
    ScanResolution,
}

impl EdgeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            EdgeLabel::Curve(c) => c.id(),
            EdgeLabel::DirichletPoint => "dirichlet-point",
            EdgeLabel::ZeroEnergy => "zero-energy",
            EdgeLabel::ScanRange => "scan-range",
            EdgeLabel::ScanResolution => "scan-resolution",
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EdgeLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dirichlet-point" => Ok(EdgeLabel::DirichletPoint),
            "zero-energy" => Ok(EdgeLabel::ZeroEnergy),
            "scan-range" => Ok(EdgeLabel::ScanRange),
            "scan-resolution" => Ok(EdgeLabel::ScanResolution),
            other => other.parse().map(EdgeLabel::Curve),
        }
    }
}

impl TryFrom<String> for EdgeLabel {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<EdgeLabel> for String {
    fn from(l: EdgeLabel) -> Self {
        l.as_str().to_owned()
    }
}

/// Picks the curve responsible for an edge at `q`: among the candidates that
/// change sign within `radius`, the one of smallest `|F|`; ties go to the
/// earlier curve.
pub fn identify_edge<T: Real>(q: T, radius: T, negative_side: bool, lp: &LatticeParams<T>) -> Option<EdgeCurve> {
    let candidates: &[EdgeCurve] = if negative_side {
        &EdgeCurve::NEGATIVE
    } else {
        &EdgeCurve::POSITIVE
    };
    let mut best: Option<(EdgeCurve, T)> = None;
    for &c in candidates {
        if !c.vanishes_near(q, radius, lp) {
            continue;
        }
        let v = c.eval(q, lp).abs();
        if best.is_none_or(|(_, b)| v < b) {
            best = Some((c, v));
        }
    }
    best.map(|(c, _)| c)
}
