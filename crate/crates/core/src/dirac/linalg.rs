//! Dense complex linear algebra on the 4-dimensional spinor space.
//!
//! Everything the Dirac layer needs fits in hand-rolled 4×4 complex
//! matrices: products, adjoints, expectation values, and a cyclic Jacobi
//! eigensolver for Hermitian matrices.  The eigensolver is what lets
//! operator functions of a Hamiltonian (1/H, exp(−iHt)) be formed
//! spectrally, and it deliberately shares no code with the closed-form
//! projector algebra elsewhere in this crate, so the two routes can be
//! checked against each other.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::{lit, Real};
use crate::Result;

/// Complex literal helper for building constant matrices.
pub(crate) fn cx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(lit(re), lit(im))
}

/// Four-component complex spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor4<T>(pub [Complex<T>; 4]);

impl<T: Real> Spinor4<T> {
    pub fn zero() -> Self {
        Self([Complex::new(T::zero(), T::zero()); 4])
    }

    /// Spinor with real components.
    pub fn from_reals(v: [T; 4]) -> Self {
        Self([
            Complex::new(v[0], T::zero()),
            Complex::new(v[1], T::zero()),
            Complex::new(v[2], T::zero()),
            Complex::new(v[3], T::zero()),
        ])
    }

    /// Hermitian inner product ⟨self|other⟩ (conjugate-linear in `self`).
    pub fn dot(&self, other: &Self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 0..4 {
            acc += self.0[k].conj() * other.0[k];
        }
        acc
    }

    pub fn norm_sqr(&self) -> T {
        let mut acc = T::zero();
        for k in 0..4 {
            acc += self.0[k].norm_sqr();
        }
        acc
    }

    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Unit-norm copy; a numerically zero spinor is a domain error.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if !n.is_finite() || n <= T::zero() {
            return Err(Error::domain(
                "spinor norm",
                "must be finite and positive",
                format!("{n}"),
            ));
        }
        let inv = n.recip();
        Ok(*self * inv)
    }

    /// Raw matrix element ⟨self|m|self⟩ (not divided by the norm).
    pub fn expectation(&self, m: &Matrix4<T>) -> Complex<T> {
        self.dot(&(*m * *self))
    }
}

impl<T: Real> Add for Spinor4<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for k in 0..4 {
            out.0[k] += rhs.0[k];
        }
        out
    }
}

impl<T: Real> Sub for Spinor4<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for k in 0..4 {
            out.0[k] -= rhs.0[k];
        }
        out
    }
}

impl<T: Real> Mul<Complex<T>> for Spinor4<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        let mut out = self;
        for k in 0..4 {
            out.0[k] *= rhs;
        }
        out
    }
}

impl<T: Real> Mul<T> for Spinor4<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        let mut out = self;
        for k in 0..4 {
            out.0[k] = out.0[k].scale(rhs);
        }
        out
    }
}

/// Dense 4×4 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4<T>(pub [[Complex<T>; 4]; 4]);

impl<T: Real> Matrix4<T> {
    pub fn zero() -> Self {
        Self([[Complex::new(T::zero(), T::zero()); 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.0[k][k] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Diagonal matrix with real entries.
    pub fn diag_re(d: [T; 4]) -> Self {
        let mut m = Self::zero();
        for k in 0..4 {
            m.0[k][k] = Complex::new(d[k], T::zero());
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex<T> {
        self.0[0][0] + self.0[1][1] + self.0[2][2] + self.0[3][3]
    }

    /// Largest entry modulus (max norm).
    pub fn max_abs(&self) -> T {
        let mut best = T::zero();
        for row in &self.0 {
            for z in row {
                let a = z.norm();
                if a > best {
                    best = a;
                }
            }
        }
        best
    }

    /// Rank-one product |u⟩⟨v|.
    pub fn outer(u: &Spinor4<T>, v: &Spinor4<T>) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = u.0[i] * v.0[j].conj();
            }
        }
        m
    }

    /// Column `j` as a spinor.
    pub fn column(&self, j: usize) -> Spinor4<T> {
        Spinor4([self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]])
    }
}

impl<T: Real> Add for Matrix4<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl<T: Real> Sub for Matrix4<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

impl<T: Real> Neg for Matrix4<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = -out.0[i][j];
            }
        }
        out
    }
}

impl<T: Real> Mul for Matrix4<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.0[i][k];
                for j in 0..4 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl<T: Real> Mul<Complex<T>> for Matrix4<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] *= rhs;
            }
        }
        out
    }
}

impl<T: Real> Mul<T> for Matrix4<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = out.0[i][j].scale(rhs);
            }
        }
        out
    }
}

impl<T: Real> Mul<Spinor4<T>> for Matrix4<T> {
    type Output = Spinor4<T>;
    fn mul(self, rhs: Spinor4<T>) -> Spinor4<T> {
        let mut out = Spinor4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i] += self.0[i][j] * rhs.0[j];
            }
        }
        out
    }
}

/// Eigendecomposition of a Hermitian 4×4 matrix: `values` ascending,
/// `vectors` holding the matching orthonormal eigenvectors as columns.
#[derive(Clone, Copy, Debug)]
pub struct HermitianEigen<T> {
    pub values: [T; 4],
    pub vectors: Matrix4<T>,
}

const MAX_JACOBI_SWEEPS: usize = 48;

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is symmetrized as (M + M†)/2 first, so tiny departures from
/// exact Hermiticity cannot push the iteration off the real spectrum.
/// Convergence for a 4×4 matrix is quadratic and takes a handful of
/// sweeps; the sweep cap is far above anything observed.
pub fn eigen_hermitian<T: Real>(m: &Matrix4<T>) -> HermitianEigen<T> {
    let half = lit::<T>(0.5);
    let adj = m.adjoint();
    let mut a = (*m + adj) * half;
    let mut v = Matrix4::<T>::identity();

    let scale = a.max_abs().max(T::one());
    // Off-diagonal level at which an entry is treated as already zero.
    let tiny = scale * T::epsilon() * lit::<T>(1e-3);

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let mut off = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    off = off.max(a.0[i][j].norm());
                }
            }
        }
        if off <= tiny {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                jacobi_rotate(&mut a, &mut v, p, q, tiny);
            }
        }
    }

    // Diagonal of the converged matrix is the (real) spectrum.
    let mut order = [0usize, 1, 2, 3];
    let diag = [a.0[0][0].re, a.0[1][1].re, a.0[2][2].re, a.0[3][3].re];
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("real spectrum"));

    let mut values = [T::zero(); 4];
    let mut vectors = Matrix4::<T>::zero();
    for (slot, &k) in order.iter().enumerate() {
        values[slot] = diag[k];
        for row in 0..4 {
            vectors.0[row][slot] = v.0[row][k];
        }
    }
    HermitianEigen { values, vectors }
}

/// One complex Jacobi rotation zeroing the (p, q) entry of `a`, with the
/// same unitary accumulated into the columns of `v`.
///
/// Writing a[p][q] = |z|·u, the plane rotation is the unitary
/// J = [[c, s], [−s·u*, c·u*]] (restricted to rows/columns p, q) with the
/// classic real-Jacobi angle built from θ = (a_qq − a_pp)/(2|z|):
/// t = sgn(θ)/(|θ| + √(θ² + 1)), c = 1/√(t² + 1), s = t·c.
fn jacobi_rotate<T: Real>(a: &mut Matrix4<T>, v: &mut Matrix4<T>, p: usize, q: usize, tiny: T) {
    let z = a.0[p][q];
    let zn = z.norm();
    if zn <= tiny {
        return;
    }
    let app = a.0[p][p].re;
    let aqq = a.0[q][q].re;

    let theta = (aqq - app) / (zn + zn);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let c = (t * t + T::one()).sqrt().recip();
    let s = t * c;
    let u = z.unscale(zn);
    let uc = u.conj();

    // Columns: A ← A·J and V ← V·J.
    for i in 0..4 {
        let aip = a.0[i][p];
        let aiq = a.0[i][q];
        a.0[i][p] = aip.scale(c) - (aiq * uc).scale(s);
        a.0[i][q] = aip.scale(s) + (aiq * uc).scale(c);

        let vip = v.0[i][p];
        let viq = v.0[i][q];
        v.0[i][p] = vip.scale(c) - (viq * uc).scale(s);
        v.0[i][q] = vip.scale(s) + (viq * uc).scale(c);
    }
    // Rows: A ← J†·A.
    for i in 0..4 {
        let api = a.0[p][i];
        let aqi = a.0[q][i];
        a.0[p][i] = api.scale(c) - (aqi * u).scale(s);
        a.0[q][i] = api.scale(s) + (aqi * u).scale(c);
    }
    // The rotation annihilates (p, q) analytically; pin it and keep the
    // diagonal exactly real so rounding cannot accumulate there.
    a.0[p][q] = Complex::new(T::zero(), T::zero());
    a.0[q][p] = Complex::new(T::zero(), T::zero());
    a.0[p][p] = Complex::new(a.0[p][p].re, T::zero());
    a.0[q][q] = Complex::new(a.0[q][q].re, T::zero());
}

/// Spectral evaluation of a matrix function: f(M) = Σ f(λₖ)·|vₖ⟩⟨vₖ| for a
/// Hermitian M.  `f` maps each real eigenvalue to a complex factor.
pub fn hermitian_function<T: Real>(
    m: &Matrix4<T>,
    f: impl Fn(T) -> Complex<T>,
) -> Matrix4<T> {
    let eig = eigen_hermitian(m);
    let mut out = Matrix4::<T>::zero();
    for k in 0..4 {
        let vk = eig.vectors.column(k);
        out = out + Matrix4::outer(&vk, &vk) * f(eig.values[k]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type C64 = Complex<f64>;

    fn hermitian_sample() -> Matrix4<f64> {
        // Hand-picked Hermitian matrix with non-trivial complex structure.
        Matrix4([
            [cx(2.0, 0.0), cx(0.3, -0.4), cx(0.0, 0.9), cx(1.0, 0.2)],
            [cx(0.3, 0.4), cx(-1.0, 0.0), cx(0.5, 0.0), cx(0.0, -0.7)],
            [cx(0.0, -0.9), cx(0.5, 0.0), cx(0.25, 0.0), cx(0.1, 0.1)],
            [cx(1.0, -0.2), cx(0.0, 0.7), cx(0.1, -0.1), cx(3.5, 0.0)],
        ])
    }

    #[test]
    fn spinor_inner_product_is_conjugate_linear() {
        let a = Spinor4::<f64>([cx(1.0, 2.0), cx(0.0, -1.0), cx(0.5, 0.0), cx(0.0, 0.0)]);
        let b = Spinor4([cx(0.0, 1.0), cx(2.0, 0.0), cx(0.0, 0.0), cx(1.0, -1.0)]);
        let ab = a.dot(&b);
        let ba = b.dot(&a);
        assert_eq!(ab, ba.conj());
        assert!((a.dot(&a).im).abs() < 1e-15);
        assert!((a.norm_sqr() - 6.25).abs() < 1e-15);
    }

    #[test]
    fn normalization_rejects_zero_spinor() {
        assert!(Spinor4::<f64>::zero().normalized().is_err());
        let s = Spinor4::<f64>::from_reals([3.0, 0.0, 4.0, 0.0]).normalized().unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn matrix_product_against_hand_computed_entry() {
        let m = hermitian_sample();
        let mm = m * m;
        // (M²)[0][0] = Σ_k M[0][k]·M[k][0] for a Hermitian M is Σ |M[0][k]|².
        let expect: f64 = (0..4).map(|k| m.0[0][k].norm_sqr()).sum();
        assert!((mm.0[0][0].re - expect).abs() < 1e-14);
        assert!(mm.0[0][0].im.abs() < 1e-14);
    }

    #[test]
    fn adjoint_of_product_reverses_factors() {
        let m = hermitian_sample();
        let n = m * cx(0.0, 1.0) + Matrix4::identity();
        let lhs = (m * n).adjoint();
        let rhs = n.adjoint() * m.adjoint();
        assert!((lhs - rhs).max_abs() < 1e-14);
    }

    #[test]
    fn jacobi_reconstructs_the_matrix() {
        let m = hermitian_sample();
        let eig = eigen_hermitian(&m);

        // Ascending order.
        for k in 0..3 {
            assert!(eig.values[k] <= eig.values[k + 1]);
        }
        // Orthonormal eigenvectors.
        let vtv = eig.vectors.adjoint() * eig.vectors;
        assert!((vtv - Matrix4::identity()).max_abs() < 1e-14);
        // Residual ‖M·vₖ − λₖ·vₖ‖ per eigenpair.
        for k in 0..4 {
            let vk = eig.vectors.column(k);
            let resid = m * vk - vk * eig.values[k];
            assert!(resid.norm() < 1e-13);
        }
        // Full reconstruction V·Λ·V†.
        let recon = eig.vectors * Matrix4::diag_re(eig.values) * eig.vectors.adjoint();
        assert!((recon - m).max_abs() < 1e-13);
    }

    #[test]
    fn jacobi_handles_degenerate_spectra() {
        // diag(1, 1, −1, −1) with a basis rotation hiding the degeneracy.
        let beta = Matrix4::diag_re([1.0, 1.0, -1.0, -1.0]);
        let eig = eigen_hermitian(&beta);
        assert_eq!(eig.values, [-1.0, -1.0, 1.0, 1.0]);
        let recon = eig.vectors * Matrix4::diag_re(eig.values) * eig.vectors.adjoint();
        assert!((recon - beta).max_abs() < 1e-14);
    }

    #[test]
    fn hermitian_function_matches_elementwise_exponential_on_diagonals() {
        let tau = 0.73_f64;
        let beta = Matrix4::diag_re([1.0, 1.0, -1.0, -1.0]);
        let u = hermitian_function(&beta, |lam| C64::from_polar(1.0, -lam * tau));
        let expect = Matrix4([
            [C64::from_polar(1.0, -tau), cx(0.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.0), C64::from_polar(1.0, -tau), cx(0.0, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.0), cx(0.0, 0.0), C64::from_polar(1.0, tau), cx(0.0, 0.0)],
            [cx(0.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0), C64::from_polar(1.0, tau)],
        ]);
        assert!((u - expect).max_abs() < 1e-15);
    }

    #[test]
    fn hermitian_function_identity_recovers_input() {
        let m = hermitian_sample();
        let back = hermitian_function(&m, |lam| Complex::new(lam, 0.0));
        assert!((back - m).max_abs() < 1e-13);
    }

    #[test]
    fn eigensolver_works_at_f32() {
        let m = Matrix4([
            [cx::<f32>(1.0, 0.0), cx(0.0, -0.5), cx(0.0, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.5), cx(-1.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.0), cx(0.0, 0.0), cx(2.0, 0.0), cx(0.25, 0.0)],
            [cx(0.0, 0.0), cx(0.0, 0.0), cx(0.25, 0.0), cx(2.0, 0.0)],
        ]);
        let eig = eigen_hermitian(&m);
        let recon = eig.vectors * Matrix4::diag_re(eig.values) * eig.vectors.adjoint();
        assert!((recon - m).max_abs() < 1e-5);
    }
}
