//! Circulant matrices: generator ↔ eigenvalue duality, dense assembly and
//! symmetry-class predicates.
//!
//! A circulant matrix of order `n` is fixed by its first row, the generator
//! `(c_0, …, c_{n-1})`; entry `(i, j)` equals `c_{(j-i) mod n}`. Its
//! eigenvectors are the Fourier vectors with components `ω^{jk}`,
//! `ω = e^{2πi/n}`, and the matching eigenvalues are
//! `λ_k = Σ_j c_j ω^{jk}`. The inverse map is `c_j = (1/n) Σ_k λ_k ω^{-jk}`.
//! Both directions are evaluated by direct summation; orders stay small.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::{root_of_unity, Real, C};

/// Default tolerance for unitarity and round-trip checks.
pub const DEFAULT_TOL: f64 = 1e-12;

/// First row of a circulant matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Generator<T> {
    entries: Vec<C<T>>,
}

/// Eigenvalues `λ_k` of a circulant matrix, indexed by Fourier mode `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueVector<T> {
    values: Vec<C<T>>,
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("n", format!("order must be at least 2, got {n}")));
    }
    Ok(())
}

impl<T: Real> Generator<T> {
    pub fn new(entries: Vec<C<T>>) -> Result<Self> {
        check_order(entries.len())?;
        Ok(Self { entries })
    }

    /// Generator with real entries.
    pub fn from_real(entries: &[T]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| C::new(x, T::zero())).collect())
    }

    /// Generator of the identity matrix.
    pub fn identity(n: usize) -> Result<Self> {
        check_order(n)?;
        let mut e = vec![C::zero(); n];
        e[0] = C::new(T::one(), T::zero());
        Ok(Self { entries: e })
    }

    /// Generator of the cyclic shift `R` (ones on the superdiagonal and in
    /// the bottom-left corner).
    pub fn rotation(n: usize) -> Result<Self> {
        check_order(n)?;
        let mut e = vec![C::zero(); n];
        e[1] = C::new(T::one(), T::zero());
        Ok(Self { entries: e })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.entries
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.order(), other.order());
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm()))
    }
}

impl<T: Real> EigenvalueVector<T> {
    pub fn new(values: Vec<C<T>>) -> Result<Self> {
        check_order(values.len())?;
        Ok(Self { values })
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[C<T>] {
        &self.values
    }

    /// `max_k ||λ_k| - 1|`.
    pub fn unit_modulus_residual(&self) -> T {
        self.values
            .iter()
            .fold(T::zero(), |acc, z| acc.max((z.norm() - T::one()).abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.order(), other.order());
        self.values
            .iter()
            .zip(&other.values)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm()))
    }
}

/// `λ_k = Σ_j c_j ω^{jk}`.
pub fn eigenvalues_from_generator<T: Real>(g: &Generator<T>) -> EigenvalueVector<T> {
    let n = g.order();
    let values = (0..n)
        .map(|k| {
            g.entries
                .iter()
                .enumerate()
                .fold(C::zero(), |acc, (j, &c)| {
                    acc + c * root_of_unity::<T>((j * k) as i64, n)
                })
        })
        .collect();
    EigenvalueVector { values }
}

/// `c_j = (1/n) Σ_k λ_k ω^{-jk}`.
pub fn generator_from_eigenvalues<T: Real>(e: &EigenvalueVector<T>) -> Generator<T> {
    let n = e.order();
    let inv_n = T::one() / T::of_usize(n);
    let entries = (0..n)
        .map(|j| {
            e.values
                .iter()
                .enumerate()
                .fold(C::zero(), |acc, (k, &lam)| {
                    acc + lam * root_of_unity::<T>(-((j * k) as i64), n)
                })
                * inv_n
        })
        .collect();
    Generator { entries }
}

/// Dense circulant matrix with entry `(i, j) = c_{(j-i) mod n}`.
pub fn assemble_matrix<T: Real>(g: &Generator<T>) -> CMatrix<T> {
    let n = g.order();
    CMatrix::from_fn(n, n, |i, j| g.entries[(j + n - i) % n])
}

/// The Fourier matrix `F` with `F_{jk} = ω^{jk}`; `F* C F / n` is diagonal.
pub fn dft_matrix<T: Real>(n: usize) -> CMatrix<T> {
    CMatrix::from_fn(n, n, |j, k| root_of_unity((j * k) as i64, n))
}

/// True iff every eigenvalue lies on the unit circle within `tol`.
pub fn is_unitary<T: Real>(g: &Generator<T>, tol: T) -> bool {
    eigenvalues_from_generator(g).unit_modulus_residual() <= tol
}

/// `max |A M A - M|` with `A` the anti-diagonal exchange matrix.
pub fn mirror_residual<T: Real>(m: &CMatrix<T>) -> T {
    let a = CMatrix::exchange(m.rows());
    (&(&a * m) * &a).max_abs_diff(m)
}

/// `max |Mᵀ - M|`.
pub fn time_reversal_residual<T: Real>(m: &CMatrix<T>) -> T {
    m.transpose().max_abs_diff(m)
}

/// `max |R⁻¹ M R - M|`, zero exactly for circulant `M`.
pub fn rotation_residual<T: Real>(m: &CMatrix<T>) -> T {
    let r = assemble_matrix(&Generator::<T>::rotation(m.rows()).expect("order >= 2"));
    (m * &r).max_abs_diff(&(&r * m))
}

/// Symmetry classes a coupling matrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryClass {
    pub mirror_symmetric: bool,
    pub time_reversal: bool,
    pub permutation_invariant: bool,
}

/// Classifies a unitary circulant by its mirror, time-reversal and
/// permutation symmetries. Permutation invariance is the `aI + bJ` pattern,
/// i.e. all off-diagonal generator entries equal.
pub fn symmetry_classify<T: Real>(g: &Generator<T>, tol: T) -> Result<SymmetryClass> {
    let residual = eigenvalues_from_generator(g).unit_modulus_residual();
    if residual > tol {
        return Err(Error::NotUnitary {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    let m = assemble_matrix(g);
    let off = &g.entries[1..];
    let permutation_invariant = off.iter().all(|&c| (c - off[0]).norm() <= tol);
    Ok(SymmetryClass {
        mirror_symmetric: mirror_residual(&m) <= tol,
        time_reversal: time_reversal_residual(&m) <= tol,
        permutation_invariant,
    })
}

/// A unitary circulant held as its generator together with its eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CirculantUnitary<T> {
    generator: Generator<T>,
    eigenvalues: EigenvalueVector<T>,
}

impl<T: Real> CirculantUnitary<T> {
    pub fn from_generator(generator: Generator<T>, tol: T) -> Result<Self> {
        let eigenvalues = eigenvalues_from_generator(&generator);
        Self::checked(generator, eigenvalues, tol)
    }

    pub fn from_eigenvalues(eigenvalues: EigenvalueVector<T>, tol: T) -> Result<Self> {
        let generator = generator_from_eigenvalues(&eigenvalues);
        Self::checked(generator, eigenvalues, tol)
    }

    /// Pairs a generator with eigenvalues known in closed form; both must be
    /// consistent with each other to within `tol`.
    pub fn from_parts(generator: Generator<T>, eigenvalues: EigenvalueVector<T>, tol: T) -> Result<Self> {
        if generator.order() != eigenvalues.order() {
            return Err(Error::invalid("eigenvalues", "order differs from generator"));
        }
        let recon = generator_from_eigenvalues(&eigenvalues);
        let diff = recon.max_abs_diff(&generator);
        if diff > tol {
            return Err(Error::invalid(
                "eigenvalues",
                format!("inconsistent with generator (max deviation {diff})"),
            ));
        }
        Self::checked(generator, eigenvalues, tol)
    }

    fn checked(generator: Generator<T>, eigenvalues: EigenvalueVector<T>, tol: T) -> Result<Self> {
        let residual = eigenvalues.unit_modulus_residual();
        if residual > tol {
            return Err(Error::NotUnitary {
                residual: residual.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            generator,
            eigenvalues,
        })
    }

    pub fn order(&self) -> usize {
        self.generator.order()
    }

    pub fn generator(&self) -> &Generator<T> {
        &self.generator
    }

    pub fn eigenvalues(&self) -> &EigenvalueVector<T> {
        &self.eigenvalues
    }

    pub fn matrix(&self) -> CMatrix<T> {
        assemble_matrix(&self.generator)
    }

    pub fn symmetry(&self, tol: T) -> Result<SymmetryClass> {
        symmetry_classify(&self.generator, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: &[f64]) -> Generator<f64> {
        Generator::from_real(v).unwrap()
    }

    fn close(a: &[C<f64>], b: &[(f64, f64)], tol: f64) -> bool {
        a.len() == b.len()
            && a.iter().zip(b).all(|(z, &(re, im))| (z - C::new(re, im)).norm() <= tol)
    }

    #[test]
    fn eigenvalues_of_identity_rotation_and_kirchhoff() {
        let e = eigenvalues_from_generator(&real(&[1.0, 0.0, 0.0, 0.0]));
        assert!(close(e.values(), &[(1.0, 0.0); 4], 1e-15));

        let e = eigenvalues_from_generator(&real(&[0.0, 1.0, 0.0, 0.0]));
        assert!(close(e.values(), &[(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)], 1e-15));

        let e = eigenvalues_from_generator(&real(&[-0.5, 0.5, 0.5, 0.5]));
        assert!(close(e.values(), &[(1.0, 0.0), (-1.0, 0.0), (-1.0, 0.0), (-1.0, 0.0)], 1e-15));
    }

    #[test]
    fn generator_from_known_eigenvalues() {
        let ones = EigenvalueVector::new(vec![C::new(1.0, 0.0); 4]).unwrap();
        assert!(close(generator_from_eigenvalues(&ones).entries(), &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)], 1e-15));

        let rot = EigenvalueVector::new(vec![
            C::new(1.0, 0.0),
            C::new(0.0, 1.0),
            C::new(-1.0, 0.0),
            C::new(0.0, -1.0),
        ])
        .unwrap();
        assert!(close(generator_from_eigenvalues(&rot).entries(), &[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)], 1e-15));
    }

    #[test]
    fn assembly_is_cyclic_shift_of_first_row() {
        let m = assemble_matrix(&real(&[0.0, 1.0]));
        assert_eq!(m[(0, 1)], C::new(1.0, 0.0));
        assert_eq!(m[(1, 0)], C::new(1.0, 0.0));
        assert_eq!(m[(0, 0)], C::new(0.0, 0.0));

        let g = Generator::new(vec![C::new(1.0, 0.0), C::new(2.0, 0.5), C::new(3.0, -1.0)]).unwrap();
        let m = assemble_matrix(&g);
        assert_eq!(m.row(0), g.entries());
        assert_eq!(m.row(1), &[g.entries()[2], g.entries()[0], g.entries()[1]]);

        // R of order 4: ones on the superdiagonal and in the bottom-left corner
        let r = assemble_matrix(&Generator::<f64>::rotation(4).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                let want = if j == (i + 1) % 4 { 1.0 } else { 0.0 };
                assert_eq!(r[(i, j)], C::new(want, 0.0));
            }
        }
    }

    #[test]
    fn unitarity_predicate() {
        assert!(is_unitary(&real(&[0.0, 1.0, 0.0, 0.0]), 1e-12));
        assert!(!is_unitary(&real(&[0.0, 2.0, 0.0, 0.0]), 1e-12));
        // δ coupling generator for n = 4, α = 7: -I + 2/(n + iα) J
        let d = C::new(2.0, 0.0) / C::new(4.0, 7.0);
        let g = Generator::new(vec![d - 1.0, d, d, d]).unwrap();
        assert!(is_unitary(&g, 1e-12));
    }

    #[test]
    fn symmetry_of_delta_and_rotation() {
        for n in 2..=7 {
            for alpha in [-3.0, 0.0, 2.5] {
                let d = C::new(2.0, 0.0) / C::new(n as f64, alpha);
                let mut e = vec![d; n];
                e[0] = d - 1.0;
                let s = symmetry_classify(&Generator::new(e).unwrap(), 1e-12).unwrap();
                assert!(s.mirror_symmetric && s.time_reversal && s.permutation_invariant);
            }
            let s = symmetry_classify(&Generator::<f64>::rotation(n).unwrap(), 1e-12).unwrap();
            assert_eq!(s.mirror_symmetric, n == 2);
            assert_eq!(s.time_reversal, n == 2);
        }
    }

    #[test]
    fn classify_rejects_non_unitary() {
        let err = symmetry_classify(&real(&[0.0, 2.0, 0.0]), 1e-12).unwrap_err();
        assert!(matches!(err, Error::NotUnitary { .. }));
    }

    #[test]
    fn order_below_two_rejected() {
        assert!(Generator::<f64>::from_real(&[1.0]).is_err());
        assert!(EigenvalueVector::<f64>::new(vec![]).is_err());
    }

    #[test]
    fn circulant_unitary_checks_consistency() {
        let g = Generator::<f64>::rotation(5).unwrap();
        let u = CirculantUnitary::from_generator(g.clone(), 1e-12).unwrap();
        assert!(u.generator().max_abs_diff(&g) == 0.0);
        let back = CirculantUnitary::from_eigenvalues(u.eigenvalues().clone(), 1e-12).unwrap();
        assert!(back.generator().max_abs_diff(&g) < 1e-14);
        let wrong = EigenvalueVector::new(vec![C::new(1.0, 0.0); 5]).unwrap();
        assert!(CirculantUnitary::from_parts(g, wrong, 1e-12).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let g = Generator::<f32>::rotation(4).unwrap();
        let e = eigenvalues_from_generator(&g);
        let back = generator_from_eigenvalues(&e);
        assert!(back.max_abs_diff(&g) < 1e-6);
    }
}
