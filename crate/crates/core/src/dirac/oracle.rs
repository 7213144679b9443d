//! Brute-force unitary evolution, used as an independent cross-check.
//!
//! The closed forms in [`super::dynamics`] manipulate projectors
//! analytically.  Here the same physics is computed the blunt way: build
//! H̃, eigendecompose it with the cyclic Jacobi solver, exponentiate the
//! spectrum, and push the spinor through U(t) = exp(−iH̃t).  The two
//! routes share no intermediate algebra beyond the Dirac matrices
//! themselves, which is what makes agreement between them evidence rather
//! than tautology.
//!
//! The same machinery powers [`symmetry_check`]: U(τ) commutes with H̃ for
//! every τ, and in the rest frame it degenerates to the pure phase factor
//! diag(e^{−iτ}, e^{−iτ}, e^{+iτ}, e^{+iτ}) — the internal-clock rotation
//! with angular frequency m₀c²/ħ on each energy branch.

use num_complex::Complex;

use crate::error::{ensure_finite, ensure_positive, Error};
use crate::scalar::Real;
use crate::Result;

use super::algebra::{dirac_matrices, reduced_hamiltonian};
use super::linalg::{hermitian_function, Matrix4, Spinor4};
use super::packet::MomentumMode;

/// State and expectations returned by [`evolve_oracle`].
#[derive(Clone, Copy, Debug)]
pub struct OracleSample<T> {
    /// U(t)·amplitude — same norm as the input amplitude.
    pub spinor: Spinor4<T>,
    /// Velocity expectation ⟨α⟩(t) in units of c, normalized by ‖amplitude‖².
    pub alpha_expect: [T; 3],
    /// ⟨β⟩(t), normalized by ‖amplitude‖².
    pub beta_expect: T,
}

/// Result of [`symmetry_check`].
#[derive(Clone, Copy, Debug)]
pub struct SymmetryCheck<T> {
    /// ‖U(τ)·H̃ − H̃·U(τ)‖_max.
    pub commutator_norm: T,
    /// Rest frame only (p = 0): max elementwise deviation of U(τ) from
    /// diag(e^{−iτ}, e^{−iτ}, e^{+iτ}, e^{+iτ}).  `None` for p ≠ 0.
    pub phase_factor_error: Option<T>,
}

/// U(t) = exp(−i·H̃·t) for reduced momentum p̃ = pc/m₀c² and natural time
/// t, formed spectrally from the Jacobi eigendecomposition of H̃.
pub fn evolution_operator<T: Real>(p_reduced: [T; 3], t: T) -> Matrix4<T> {
    let h = reduced_hamiltonian(p_reduced);
    hermitian_function(&h, |lam| Complex::from_polar(T::one(), -lam * t))
}

/// Evolves `mode.amplitude` to natural time `t` (units ħ/m₀c²) and reports
/// the velocity and β expectations of the evolved state.
pub fn evolve_oracle<T: Real>(
    mode: &MomentumMode<T>,
    m0c2: T,
    t: T,
) -> Result<OracleSample<T>> {
    ensure_positive("m0c2", m0c2)?;
    ensure_finite("t", t)?;
    let norm_sqr = mode.amplitude.norm_sqr();
    if !(norm_sqr.is_finite() && norm_sqr > T::zero()) {
        return Err(Error::domain(
            "mode amplitude",
            "a nonzero finite spinor",
            norm_sqr,
        ));
    }
    let inv_m = m0c2.recip();
    let p_red = [
        mode.p[0] * inv_m,
        mode.p[1] * inv_m,
        mode.p[2] * inv_m,
    ];
    let u = evolution_operator(p_red, t);
    let spinor = u * mode.amplitude;

    let dm = dirac_matrices::<T>();
    let inv_n = norm_sqr.recip();
    let alpha_expect = [
        spinor.expectation(&dm.alpha[0]).re * inv_n,
        spinor.expectation(&dm.alpha[1]).re * inv_n,
        spinor.expectation(&dm.alpha[2]).re * inv_n,
    ];
    let beta_expect = spinor.expectation(&dm.beta).re * inv_n;
    Ok(OracleSample {
        spinor,
        alpha_expect,
        beta_expect,
    })
}

/// Verifies that U(τ) = exp(−iH̃τ) behaves as a symmetry operation: it
/// commutes with H̃ for any momentum, and at p = 0 it reduces to the pure
/// two-branch phase factor.  `tau` is a natural time (ħ/m₀c²); `p` is in
/// MeV/c.
pub fn symmetry_check<T: Real>(tau: T, p: [T; 3], m0c2: T) -> Result<SymmetryCheck<T>> {
    ensure_finite("tau", tau)?;
    ensure_positive("m0c2", m0c2)?;
    for (axis, &component) in ["p_x", "p_y", "p_z"].iter().zip(p.iter()) {
        ensure_finite(axis, component)?;
    }
    let inv_m = m0c2.recip();
    let p_red = [p[0] * inv_m, p[1] * inv_m, p[2] * inv_m];
    let h = reduced_hamiltonian(p_red);
    let u = evolution_operator(p_red, tau);
    let commutator_norm = (u * h - h * u).max_abs();

    let at_rest = p.iter().all(|&c| c == T::zero());
    let phase_factor_error = if at_rest {
        let minus = Complex::from_polar(T::one(), -tau);
        let plus = Complex::from_polar(T::one(), tau);
        let mut expected = Matrix4::<T>::zero();
        expected.0[0][0] = minus;
        expected.0[1][1] = minus;
        expected.0[2][2] = plus;
        expected.0[3][3] = plus;
        Some((u - expected).max_abs())
    } else {
        None
    };
    Ok(SymmetryCheck {
        commutator_norm,
        phase_factor_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::dynamics::trajectory_expectation;
    use crate::dirac::packet::{build_packet, PacketSpec};

    fn rest_mix_mode() -> MomentumMode<f64> {
        MomentumMode {
            p: [0.0; 3],
            amplitude: Spinor4::from_reals([0.5, 0.5, 0.5, 0.5]),
            weight: 1.0,
        }
    }

    #[test]
    fn zero_time_evolution_is_the_identity() {
        let mode = rest_mix_mode();
        let s = evolve_oracle(&mode, 1.0, 0.0).unwrap();
        assert!((s.spinor - mode.amplitude).norm() < 1e-15);
    }

    #[test]
    fn evolution_preserves_the_norm() {
        let mode = MomentumMode {
            p: [0.3, -0.9, 1.4],
            amplitude: Spinor4([
                Complex::new(0.6, 0.1),
                Complex::new(-0.2, 0.4),
                Complex::new(0.0, 0.3),
                Complex::new(0.5, -0.2),
            ]),
            weight: 1.0,
        };
        let n0 = mode.amplitude.norm();
        for step in 0..25 {
            let t = 0.37 * step as f64;
            let s = evolve_oracle(&mode, 0.511, t).unwrap();
            assert!((s.spinor.norm() - n0).abs() < 1e-13, "t = {t}");
        }
    }

    #[test]
    fn rest_frame_velocity_expectation_trembles_at_twice_the_rest_frequency() {
        let mode = rest_mix_mode();
        for step in 0..60 {
            let t = 0.09 * step as f64;
            let s = evolve_oracle(&mode, 1.0, t).unwrap();
            // d/dt [sin(2t)/2] = cos(2t): full-amplitude velocity trembling.
            assert!((s.alpha_expect[0] - (2.0 * t).cos()).abs() < 1e-13);
            assert!(s.alpha_expect[1].abs() < 1e-13);
            assert!(s.alpha_expect[2].abs() < 1e-13);
            // β stays frozen in the rest frame.
            assert!(s.beta_expect.abs() < 1e-13);
        }
    }

    #[test]
    fn oracle_beta_agrees_with_the_closed_form_for_a_boosted_mode() {
        let packet = build_packet(&PacketSpec {
            p_center: [0.4, 0.0, 1.1],
            p_spread: 0.0,
            n_modes: 1,
            neg_fraction: 0.3,
            m0c2: 0.511,
        })
        .unwrap();
        let mode = &packet.modes()[0];
        for step in 0..40 {
            let t = 0.13 * step as f64;
            let oracle = evolve_oracle(mode, packet.m0c2(), t).unwrap();
            let closed = trajectory_expectation(&packet, t).unwrap();
            assert!(
                (oracle.beta_expect - closed.beta_expect).abs() < 1e-12,
                "t = {t}"
            );
        }
    }

    #[test]
    fn u_commutes_with_the_hamiltonian() {
        let checks = [
            (0.0, [0.0, 0.0, 0.0]),
            (1.7, [0.2, -0.4, 0.9]),
            (-3.2, [2.0, 0.0, 0.0]),
            (12.5, [0.0, 41.3, 0.0]),
        ];
        for (tau, p) in checks {
            let sc = symmetry_check(tau, p, 0.511).unwrap();
            let h_scale: f64 = crate::dirac::algebra::hamiltonian(p, 0.511)
                .unwrap()
                .max_abs()
                / 0.511;
            assert!(
                sc.commutator_norm < 1e-12 * h_scale.max(1.0),
                "tau = {tau}, p = {p:?}"
            );
        }
    }

    #[test]
    fn rest_frame_u_is_the_internal_clock_phase() {
        // Generic τ: U(τ) = diag(e^{−iτ}, e^{−iτ}, e^{iτ}, e^{iτ}).
        let sc = symmetry_check(0.83, [0.0; 3], 0.511).unwrap();
        assert!(sc.phase_factor_error.unwrap() < 1e-12);
        // Full revolution τ = 2π: U = 1.
        let u = evolution_operator([0.0; 3], 2.0 * std::f64::consts::PI);
        assert!((u - Matrix4::identity()).max_abs() < 1e-12);
        // Off rest frame there is no elementwise phase factor to compare.
        let sc = symmetry_check(0.83, [1.0, 0.0, 0.0], 0.511).unwrap();
        assert!(sc.phase_factor_error.is_none());
    }

    #[test]
    fn zero_amplitude_is_rejected() {
        let mode = MomentumMode {
            p: [0.0; 3],
            amplitude: Spinor4::zero(),
            weight: 1.0,
        };
        assert!(evolve_oracle(&mode, 1.0, 0.5).is_err());
    }
}
