//! Spectra of quantum graphs with circulant vertex couplings.
//!
//! The crate follows the family `U(t)`, `t ∈ [0, 1]`, of unitary circulant
//! couplings joining the δ coupling of strength `α` (`t = 0`) to the cyclic
//! shift `R` (`t = 1`), and computes
//!
//! - the coupling itself ([`coupling`], on top of [`circulant`]),
//! - the negative spectrum of the star graph ([`star`]),
//! - the on-shell scattering matrix ([`scattering`]),
//! - band membership for the square lattice ([`lattice`]) and its band
//!   structure over `(t, E)` ([`band_scan`]).
//!
//! All numerics are generic over [`Real`] (`f32`, `f64`); the aliases below
//! fix the scalar to `f64`, and the [`single`] module fixes it to `f32`.

pub mod band_scan;
pub mod circulant;
pub mod coupling;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod roots;
pub mod scalar;
pub mod scattering;
pub mod star;

pub use error::{Error, Result};
pub use scalar::{Real, C};

pub type Complex64 = C<f64>;
pub type Generator = circulant::Generator<f64>;
pub type EigenvalueVector = circulant::EigenvalueVector<f64>;
pub type CirculantUnitary = circulant::CirculantUnitary<f64>;
pub type CMatrix = linalg::CMatrix<f64>;
pub type CouplingParams = coupling::CouplingParams<f64>;
pub type StarSpectrum = star::StarSpectrum<f64>;
pub type SMatrix = scattering::SMatrix<f64>;
pub type LatticeParams = lattice::LatticeParams<f64>;
pub type LatticeFamily = band_scan::LatticeFamily<f64>;
pub type EnergyWindow = band_scan::EnergyWindow<f64>;
pub type BandInterval = band_scan::BandInterval<f64>;
pub type SpectralDiagram = band_scan::SpectralDiagram<f64>;

/// Single-precision aliases.
pub mod single {
    use super::*;

    pub type Complex32 = C<f32>;
    pub type Generator = circulant::Generator<f32>;
    pub type EigenvalueVector = circulant::EigenvalueVector<f32>;
    pub type CirculantUnitary = circulant::CirculantUnitary<f32>;
    pub type CMatrix = linalg::CMatrix<f32>;
    pub type CouplingParams = coupling::CouplingParams<f32>;
    pub type StarSpectrum = star::StarSpectrum<f32>;
    pub type SMatrix = scattering::SMatrix<f32>;
    pub type LatticeParams = lattice::LatticeParams<f32>;
    pub type LatticeFamily = band_scan::LatticeFamily<f32>;
    pub type EnergyWindow = band_scan::EnergyWindow<f32>;
    pub type BandInterval = band_scan::BandInterval<f32>;
    pub type SpectralDiagram = band_scan::SpectralDiagram<f32>;
}
