//! On-shell scattering matrix of a single vertex.
//!
//! `S(k) = ((k+1)I + (k-1)U)⁻¹((k-1)I + (k+1)U)`. For circulant `U` the
//! S-matrix is circulant too, with eigenvalues
//! `μ_j = (k-1+(k+1)λ_j)/(k+1+(k-1)λ_j)`.

use crate::circulant::{assemble_matrix, generator_from_eigenvalues, EigenvalueVector, Generator};
use crate::coupling::{CouplingParams, GammaAngle};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::{Real, C};

#[derive(Debug, Clone, PartialEq)]
pub struct SMatrix<T> {
    pub k: T,
    pub matrix: CMatrix<T>,
    /// Eigenvalues in Fourier order; known when built from a circulant.
    pub mu: Option<EigenvalueVector<T>>,
}

impl<T: Real> SMatrix<T> {
    /// First row, i.e. the generator when the S-matrix is circulant.
    pub fn first_row(&self) -> Generator<T> {
        Generator::new(self.matrix.row(0).to_vec()).expect("order >= 2")
    }

    pub fn unitarity_residual(&self) -> T {
        self.matrix.unitarity_residual()
    }
}

fn check_momentum<T: Real>(k: T) -> Result<()> {
    if !(k > T::zero() && k.is_finite()) {
        return Err(Error::invalid("k", format!("momentum must be positive and finite, got {k}")));
    }
    Ok(())
}

/// Dense evaluation for an arbitrary unitary coupling matrix.
pub fn s_matrix_general<T: Real>(k: T, u: &CMatrix<T>) -> Result<SMatrix<T>> {
    check_momentum(k)?;
    if !u.is_square() || u.rows() < 2 {
        return Err(Error::invalid("U", "coupling matrix must be square of order >= 2"));
    }
    let n = u.rows();
    let id = CMatrix::identity(n);
    let kp = C::new(k + T::one(), T::zero());
    let km = C::new(k - T::one(), T::zero());
    let lhs = &id.scale(kp) + &u.scale(km);
    let rhs = &id.scale(km) + &u.scale(kp);
    let matrix = lhs
        .solve(&rhs, T::epsilon() * T::of(64.0))
        .ok_or(Error::SingularResolvent {
            k: k.to_f64().unwrap_or(f64::NAN),
        })?;
    Ok(SMatrix { k, matrix, mu: None })
}

/// `μ = (k-1+(k+1)λ)/(k+1+(k-1)λ)`.
pub fn s_eigenvalue<T: Real>(k: T, lambda: C<T>) -> Option<C<T>> {
    let num = lambda * (k + T::one()) + (k - T::one());
    let den = lambda * (k - T::one()) + (k + T::one());
    (den.norm() > T::zero()).then(|| num / den)
}

/// Fast path for a circulant coupling given by its eigenvalues.
pub fn s_matrix_circulant<T: Real>(k: T, lambdas: &EigenvalueVector<T>) -> Result<SMatrix<T>> {
    check_momentum(k)?;
    let mu = lambdas
        .values()
        .iter()
        .map(|&l| {
            s_eigenvalue(k, l).ok_or(Error::SingularResolvent {
                k: k.to_f64().unwrap_or(f64::NAN),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mu = EigenvalueVector::new(mu)?;
    let matrix = assemble_matrix(&generator_from_eigenvalues(&mu));
    Ok(SMatrix {
        k,
        matrix,
        mu: Some(mu),
    })
}

/// Generator of `lim_{k→∞} S(k)` for the interpolating coupling `U(t)`.
///
/// Each `μ_j` tends to `-1` if `λ_j = -1` and to `1` otherwise. For
/// `t ∈ (0, 1]` only `j = n/2` (even `n`) has `λ_j = -1`, giving the identity
/// for odd `n` and `(1-2/n, 2/n, -2/n, …, 2/n)` for even `n`. At `t = 0`
/// every `j ≥ 1` has `λ_j = -1`.
pub fn high_energy_limit<T: Real>(p: &CouplingParams<T>) -> Result<Generator<T>> {
    p.validate()?;
    let n = p.n;
    let one = C::new(T::one(), T::zero());
    let mu = (0..n)
        .map(|j| {
            let reflects = j >= 1 && (p.t == T::zero() || 2 * j == n);
            if reflects {
                -one
            } else {
                one
            }
        })
        .collect();
    Ok(generator_from_eigenvalues(&EigenvalueVector::new(mu)?))
}

/// Closed-form generator entries `[S(k)]_{00..03}` of the degree-4 coupling.
pub fn n4_generator_entries<T: Real>(k: T, t: T, gamma: GammaAngle<T>) -> Result<Generator<T>> {
    check_momentum(k)?;
    let two = T::of(2.0);
    let tau = ((T::one() - t) * gamma.value() / two).tan();
    let s = k * (T::PI() * t / T::of(4.0)).tan();
    // 1 / (2(1 + (i/k) tan((1-t)γ/2)))
    let half = C::new(T::one(), T::zero()) / C::new(two, two * tau / k);
    let lor = T::one() / (T::one() + s * s);
    let odd = s * lor;
    let re = |x: T| C::new(x, T::zero());
    Generator::new(vec![
        half - re(lor),
        half + re(odd),
        half + re(lor - T::one()),
        half - re(odd),
    ])
}
