//! The Dirac matrices, mode Hamiltonians, and energy projectors.
//!
//! The standard (Dirac–Pauli) representation is used throughout:
//!
//! ```text
//! β = diag(1, 1, −1, −1),     α_k = [[0, σ_k], [σ_k, 0]]
//! ```
//!
//! with σ_k the Pauli matrices.  All assertions made elsewhere are
//! representation-covariant, but tests pin this basis so that spinor
//! components and expectation values are bit-stable.
//!
//! Two unit conventions appear side by side.  The public [`hamiltonian`]
//! carries MeV: H = cα·p + βm₀c² for p in MeV/c.  The `reduced_*` helpers
//! used by the dynamics code work in natural units (energies in m₀c²,
//! momenta as p̃ = pc/m₀c²), where H̃ = α·p̃ + β and E = √(1 + |p̃|²).

use crate::error::{ensure_finite, ensure_positive};
use crate::scalar::Real;
use crate::Result;

use super::linalg::{cx, Matrix4};

/// The four Dirac matrices of the standard representation.
#[derive(Clone, Copy, Debug)]
pub struct DiracMatrices<T> {
    /// α_x, α_y, α_z.
    pub alpha: [Matrix4<T>; 3],
    /// β.
    pub beta: Matrix4<T>,
}

/// Builds α_x, α_y, α_z, β in the standard representation.
pub fn dirac_matrices<T: Real>() -> DiracMatrices<T> {
    let o = || cx::<T>(0.0, 0.0);
    let alpha_x = Matrix4([
        [o(), o(), o(), cx(1.0, 0.0)],
        [o(), o(), cx(1.0, 0.0), o()],
        [o(), cx(1.0, 0.0), o(), o()],
        [cx(1.0, 0.0), o(), o(), o()],
    ]);
    let alpha_y = Matrix4([
        [o(), o(), o(), cx(0.0, -1.0)],
        [o(), o(), cx(0.0, 1.0), o()],
        [o(), cx(0.0, -1.0), o(), o()],
        [cx(0.0, 1.0), o(), o(), o()],
    ]);
    let alpha_z = Matrix4([
        [o(), o(), cx(1.0, 0.0), o()],
        [o(), o(), o(), cx(-1.0, 0.0)],
        [cx(1.0, 0.0), o(), o(), o()],
        [o(), cx(-1.0, 0.0), o(), o()],
    ]);
    let beta = Matrix4::diag_re([T::one(), T::one(), -T::one(), -T::one()]);
    DiracMatrices { alpha: [alpha_x, alpha_y, alpha_z], beta }
}

fn ensure_momentum<T: Real>(p: [T; 3]) -> Result<()> {
    for (axis, &component) in ["p_x", "p_y", "p_z"].iter().zip(p.iter()) {
        ensure_finite(axis, component)?;
    }
    Ok(())
}

fn ensure_rest_energy<T: Real>(m0c2: T) -> Result<()> {
    ensure_positive("m0c2", m0c2)
}

/// Free Hamiltonian H = cα·p + βm₀c² in MeV, for p in MeV/c.
pub fn hamiltonian<T: Real>(p: [T; 3], m0c2: T) -> Result<Matrix4<T>> {
    ensure_momentum(p)?;
    ensure_rest_energy(m0c2)?;
    let d = dirac_matrices::<T>();
    let mut h = d.beta * m0c2;
    for k in 0..3 {
        h = h + d.alpha[k] * p[k];
    }
    Ok(h)
}

/// Mode energy E_p = √((pc)² + (m₀c²)²) in MeV.
pub fn mode_energy<T: Real>(p: [T; 3], m0c2: T) -> Result<T> {
    ensure_momentum(p)?;
    ensure_rest_energy(m0c2)?;
    let p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    Ok((p2 + m0c2 * m0c2).sqrt())
}

/// Energy-sign projectors P± = (I ± H/E_p)/2.
///
/// Both are Hermitian, idempotent, mutually orthogonal, and complete,
/// and satisfy H·P± = ±E_p·P±.
pub fn energy_projectors<T: Real>(p: [T; 3], m0c2: T) -> Result<(Matrix4<T>, Matrix4<T>)> {
    let h = hamiltonian(p, m0c2)?;
    let e = mode_energy(p, m0c2)?;
    let half = (T::one() + T::one()).recip();
    let h_over_e = h * (e.recip() * half);
    let id_half = Matrix4::identity() * half;
    Ok((id_half + h_over_e, id_half - h_over_e))
}

/// Natural-units Hamiltonian H̃ = α·p̃ + β for reduced momentum p̃ = pc/m₀c².
pub(crate) fn reduced_hamiltonian<T: Real>(p_reduced: [T; 3]) -> Matrix4<T> {
    let d = dirac_matrices::<T>();
    let mut h = d.beta;
    for k in 0..3 {
        h = h + d.alpha[k] * p_reduced[k];
    }
    h
}

/// Natural-units mode energy E = √(1 + |p̃|²), in units of m₀c².
pub(crate) fn reduced_energy<T: Real>(p_reduced: [T; 3]) -> T {
    let p2 = p_reduced[0] * p_reduced[0]
        + p_reduced[1] * p_reduced[1]
        + p_reduced[2] * p_reduced[2];
    (T::one() + p2).sqrt()
}

/// Natural-units projectors P± = (I ± H̃/E)/2.
pub(crate) fn reduced_projectors<T: Real>(p_reduced: [T; 3]) -> (Matrix4<T>, Matrix4<T>) {
    let h = reduced_hamiltonian(p_reduced);
    let e = reduced_energy(p_reduced);
    let half = (T::one() + T::one()).recip();
    let h_over_e = h * (e.recip() * half);
    let id_half = Matrix4::<T>::identity() * half;
    (id_half + h_over_e, id_half - h_over_e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::linalg::eigen_hermitian;

    fn anticommutator(a: Matrix4<f64>, b: Matrix4<f64>) -> Matrix4<f64> {
        a * b + b * a
    }

    #[test]
    fn clifford_relations_hold_exactly() {
        let d = dirac_matrices::<f64>();
        let id = Matrix4::<f64>::identity();
        let two = cx::<f64>(2.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                let anti = anticommutator(d.alpha[i], d.alpha[j]);
                let expect = if i == j { id * two } else { Matrix4::zero() };
                assert_eq!((anti - expect).max_abs(), 0.0, "{{α_{i}, α_{j}}}");
            }
            assert_eq!(anticommutator(d.alpha[i], d.beta).max_abs(), 0.0);
        }
        assert_eq!((d.beta * d.beta - id).max_abs(), 0.0);
    }

    #[test]
    fn dirac_matrices_are_traceless_and_hermitian() {
        let d = dirac_matrices::<f64>();
        for m in d.alpha.iter().chain(std::iter::once(&d.beta)) {
            assert_eq!(m.trace().norm(), 0.0);
            assert_eq!((*m - m.adjoint()).max_abs(), 0.0);
        }
    }

    #[test]
    fn rest_frame_hamiltonian_is_beta_scaled() {
        let m0c2 = 0.511_f64;
        let h = hamiltonian([0.0, 0.0, 0.0], m0c2).unwrap();
        let d = dirac_matrices::<f64>();
        assert_eq!((h - d.beta * m0c2).max_abs(), 0.0);
    }

    #[test]
    fn lightlike_momentum_gives_sqrt_two_spectrum() {
        let m0c2 = 0.511_f64;
        let h = hamiltonian([0.0, m0c2, 0.0], m0c2).unwrap();
        let eig = eigen_hermitian(&h);
        let e = std::f64::consts::SQRT_2 * m0c2;
        let expect = [-e, -e, e, e];
        for k in 0..4 {
            assert!(
                (eig.values[k] - expect[k]).abs() < 1e-14 * e,
                "eigenvalue {k}: {} vs {}",
                eig.values[k],
                expect[k]
            );
        }
    }

    #[test]
    fn projectors_are_idempotent_orthogonal_complete() {
        let p = [0.3_f64, -1.7, 0.9];
        let m0c2 = 0.511_f64;
        let (pp, pm) = energy_projectors(p, m0c2).unwrap();
        let id = Matrix4::<f64>::identity();

        assert!((pp * pp - pp).max_abs() < 1e-15);
        assert!((pm * pm - pm).max_abs() < 1e-15);
        assert!((pp * pm).max_abs() < 1e-15);
        assert!((pp + pm - id).max_abs() < 1e-15);
        assert!((pp - pp.adjoint()).max_abs() < 1e-16);
        assert!((pp.trace().re - 2.0).abs() < 1e-14);
        assert!(pp.trace().im.abs() < 1e-16);

        let h = hamiltonian(p, m0c2).unwrap();
        let e = mode_energy(p, m0c2).unwrap();
        assert!((h * pp - pp * e).max_abs() < 1e-15 * e);
        assert!((h * pm - pm * (-e)).max_abs() < 1e-15 * e);
    }

    #[test]
    fn rest_frame_projector_selects_upper_components() {
        let (pp, _) = energy_projectors([0.0_f64; 3], 1.0).unwrap();
        let expect = Matrix4::diag_re([1.0, 1.0, 0.0, 0.0]);
        assert_eq!((pp - expect).max_abs(), 0.0);
    }

    #[test]
    fn reduced_forms_match_mev_forms() {
        let m0c2 = 0.511_f64;
        let p = [0.1_f64, 0.0, -2.0];
        let p_red = [p[0] / m0c2, p[1] / m0c2, p[2] / m0c2];
        let h = hamiltonian(p, m0c2).unwrap();
        let h_red = reduced_hamiltonian(p_red);
        assert!((h - h_red * m0c2).max_abs() < 1e-15);
        let e = mode_energy(p, m0c2).unwrap();
        assert!((e - reduced_energy(p_red) * m0c2).abs() < 1e-15);
    }

    #[test]
    fn invalid_inputs_are_domain_errors() {
        assert!(hamiltonian([f64::NAN, 0.0, 0.0], 1.0).is_err());
        assert!(hamiltonian([0.0; 3], 0.0).is_err());
        assert!(hamiltonian([0.0; 3], -1.0).is_err());
        assert!(mode_energy([f64::INFINITY, 0.0, 0.0], 1.0).is_err());
    }
}
