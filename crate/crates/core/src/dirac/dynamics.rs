//! Closed-form Heisenberg-picture expectations for free Dirac packets.
//!
//! For a single momentum mode with reduced momentum p̃ and energy
//! E = √(1 + |p̃|²) (natural units: ħ = c = 1, energies in m₀c²), the
//! position operator evolves as
//!
//! ```text
//! r(t) = r(0) + (p̃/H̃)·t + M(t)·F,        F = α − p̃·H̃/E²,
//! M(t) = (e^{2iH̃t} − 1)/(2iH̃) = φ₊(t)·P₊ + φ₋(t)·P₋,
//! φ₊(t) = (e^{2iEt} − 1)/(2iE),           φ₋ = φ₊*,
//! ```
//!
//! and the β matrix as
//!
//! ```text
//! β(t) = H̃/E² + e^{2iH̃t}·G,              G = β − H̃/E².
//! ```
//!
//! F and G anticommute with H̃ (they are the "odd" parts of α and β), which
//! makes M(t)·F and e^{2iH̃t}·G Hermitian, kills the oscillation between
//! states of the same energy sign (P₊FP₊ = 0), and produces the familiar
//! trembling at angular frequency 2E when both signs are populated.  The
//! accumulated internal phase is ⟨φ(t)⟩ = ⟨β(t)⟩·t in natural units.
//!
//! All operator functions of H̃ are evaluated through the projector
//! decomposition — exact for a 4×4 free Hamiltonian, no series expansions.
//! Packet expectations are weighted sums over modes, accumulated in
//! mode-list order so results are bit-reproducible.

use num_complex::Complex;

use crate::consts::PhysicalConstants;
use crate::error::{ensure_finite, ensure_positive, Error};
use crate::scalar::Real;
use crate::Result;

use super::algebra::{dirac_matrices, reduced_energy, reduced_hamiltonian, reduced_projectors};
use super::packet::WavePacket;

/// Expectation values of one trajectory sample.
///
/// Times are in ħ/m₀c², lengths in reduced Compton wavelengths ħc/m₀c².
/// `r_expect` is the displacement of the position expectation from its
/// (undefined for plane waves, hence zero by convention) starting point;
/// `r_uniform` is the uniform-motion reference ⟨p̃/H̃⟩·t; `beta_expect` is
/// ⟨β(t)⟩ and `phase` the accumulated internal phase ⟨β(t)⟩·t in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectorySample<T> {
    pub t: T,
    pub r_expect: [T; 3],
    pub r_uniform: [T; 3],
    pub beta_expect: T,
    pub phase: T,
}

/// Evaluates position, velocity-reference, ⟨β(t)⟩, and phase expectations
/// for `packet` at natural time `t`.
///
/// At t = 0 the oscillatory factors φ± vanish identically, so
/// `r_expect == r_uniform == 0` holds exactly, not just to rounding.
pub fn trajectory_expectation<T: Real>(
    packet: &WavePacket<T>,
    t: T,
) -> Result<TrajectorySample<T>> {
    ensure_finite("t", t)?;
    let two = T::one() + T::one();
    let inv_m = packet.m0c2().recip();
    let dm = dirac_matrices::<T>();

    let mut velocity = [T::zero(); 3];
    let mut zitter = [T::zero(); 3];
    let mut beta_expect = T::zero();

    for mode in packet.modes() {
        let p_red = [
            mode.p[0] * inv_m,
            mode.p[1] * inv_m,
            mode.p[2] * inv_m,
        ];
        let h = reduced_hamiltonian(p_red);
        let e = reduced_energy(p_red);
        let inv_e2 = (e * e).recip();
        let (proj_plus, proj_minus) = reduced_projectors(p_red);
        let psi = &mode.amplitude;
        let w = mode.weight;

        // ⟨H̃⟩ is real (Hermitian operator); the raw sandwich is correct
        // because packet normalization is Σ weight·‖amplitude‖² = 1.
        let h_expect = psi.expectation(&h).re;

        let angle = two * e * t;
        let (sin_a, cos_a) = angle.sin_cos();
        let inv_2e = (two * e).recip();
        // φ₊ = (e^{2iEt} − 1)/(2iE), written out so φ₊(0) is exactly 0.
        let phi_plus = Complex::new(sin_a * inv_2e, (T::one() - cos_a) * inv_2e);
        let m_op = proj_plus * phi_plus + proj_minus * phi_plus.conj();

        for k in 0..3 {
            velocity[k] += w * p_red[k] * h_expect * inv_e2;
            let f_k = dm.alpha[k] - h * (p_red[k] * inv_e2);
            // M(t)·F_k is Hermitian (F_k is odd), so the sandwich is real.
            zitter[k] += w * psi.expectation(&(m_op * f_k)).re;
        }

        let exp_2iht = proj_plus * Complex::new(cos_a, sin_a)
            + proj_minus * Complex::new(cos_a, -sin_a);
        let g = dm.beta - h * inv_e2;
        beta_expect += w * (h_expect * inv_e2 + psi.expectation(&(exp_2iht * g)).re);
    }

    let r_uniform = [velocity[0] * t, velocity[1] * t, velocity[2] * t];
    let r_expect = [
        r_uniform[0] + zitter[0],
        r_uniform[1] + zitter[1],
        r_uniform[2] + zitter[2],
    ];
    Ok(TrajectorySample {
        t,
        r_expect,
        r_uniform,
        beta_expect,
        phase: beta_expect * t,
    })
}

/// Weighted mean of the (positive) mode energies E = √(1 + |p̃|²), in units
/// of m₀c².  This sets the trembling frequency scale 2E and is the natural
/// energy to hand to [`coincidence_times`] for a packet.
pub fn mean_mode_energy<T: Real>(packet: &WavePacket<T>) -> T {
    let inv_m = packet.m0c2().recip();
    let mut acc = T::zero();
    for mode in packet.modes() {
        let p_red = [
            mode.p[0] * inv_m,
            mode.p[1] * inv_m,
            mode.p[2] * inv_m,
        ];
        acc += mode.weight * mode.amplitude.norm_sqr() * reduced_energy(p_red);
    }
    acc
}

/// Times at which the position expectation rejoins the uniform-motion
/// line: tₙ = n·πħ/E for n = 1..n_max, in seconds, for `energy_mev` in
/// MeV.  Consecutive times are spaced by h/2E.
pub fn coincidence_times<T: Real>(
    energy_mev: T,
    n_max: usize,
    consts: &PhysicalConstants<T>,
) -> Result<Vec<T>> {
    ensure_positive("energy", energy_mev)?;
    if n_max == 0 {
        return Err(Error::domain("n_max", ">= 1", n_max));
    }
    let base = T::PI() * consts.hbar_t / energy_mev;
    Ok((1..=n_max)
        .map(|n| base * T::from_usize(n).expect("small count"))
        .collect())
}

/// Natural-units variant of [`coincidence_times`]: tₙ = n·π/E for E in
/// m₀c² units, times in ħ/m₀c².
pub fn coincidence_times_natural<T: Real>(energy: T, n_max: usize) -> Result<Vec<T>> {
    ensure_positive("energy", energy)?;
    if n_max == 0 {
        return Err(Error::domain("n_max", ">= 1", n_max));
    }
    let base = T::PI() / energy;
    Ok((1..=n_max)
        .map(|n| base * T::from_usize(n).expect("small count"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::packet::{build_packet, PacketSpec};

    fn rest_mix() -> WavePacket<f64> {
        build_packet(&PacketSpec {
            p_center: [0.0; 3],
            p_spread: 0.0,
            n_modes: 1,
            neg_fraction: 0.5,
            m0c2: 1.0,
        })
        .unwrap()
    }

    #[test]
    fn at_time_zero_everything_vanishes_exactly() {
        let packet = build_packet(&PacketSpec {
            p_center: [0.0, 0.0, 40.0],
            p_spread: 0.5,
            n_modes: 5,
            neg_fraction: 0.3,
            m0c2: 0.511,
        })
        .unwrap();
        let s = trajectory_expectation(&packet, 0.0).unwrap();
        assert_eq!(s.r_expect, s.r_uniform);
        assert_eq!(s.r_expect, [0.0; 3]);
        assert_eq!(s.phase, 0.0);
    }

    #[test]
    fn positive_energy_packet_rides_the_uniform_line() {
        let packet = build_packet(&PacketSpec {
            p_center: [0.0, 0.0, 2.0],
            p_spread: 0.1,
            n_modes: 7,
            neg_fraction: 0.0,
            m0c2: 0.511,
        })
        .unwrap();
        for step in 0..50 {
            let t = 0.07 * step as f64;
            let s = trajectory_expectation(&packet, t).unwrap();
            for k in 0..3 {
                assert!(
                    (s.r_expect[k] - s.r_uniform[k]).abs() < 1e-12,
                    "t = {t}, axis {k}"
                );
            }
        }
    }

    #[test]
    fn rest_frame_equal_mix_trembles_as_half_sine() {
        let packet = rest_mix();
        for step in 1..40 {
            let t = 0.11 * step as f64;
            let s = trajectory_expectation(&packet, t).unwrap();
            // Rest frame: no drift, oscillation along x with amplitude 1/2.
            assert!((s.r_expect[0] - 0.5 * (2.0 * t).sin()).abs() < 1e-14);
            assert!(s.r_expect[1].abs() < 1e-14);
            assert!(s.r_expect[2].abs() < 1e-14);
            assert_eq!(s.r_uniform, [0.0; 3]);
            // β commutes with the rest Hamiltonian: ⟨β(t)⟩ stays ⟨β(0)⟩ = 0.
            assert!(s.beta_expect.abs() < 1e-14);
            assert!(s.phase.abs() < 1e-14);
        }
    }

    #[test]
    fn coincidence_rejoins_and_beta_recurs_for_a_boosted_mixed_mode() {
        let packet = build_packet(&PacketSpec::<f64> {
            p_center: [0.0, 0.0, 1.3],
            p_spread: 0.0,
            n_modes: 1,
            neg_fraction: 0.35,
            m0c2: 0.511,
        })
        .unwrap();
        let e = mean_mode_energy(&packet);
        let beta0 = trajectory_expectation(&packet, 0.0).unwrap().beta_expect;
        for t in coincidence_times_natural(e, 6).unwrap() {
            let s = trajectory_expectation(&packet, t).unwrap();
            for k in 0..3 {
                assert!((s.r_expect[k] - s.r_uniform[k]).abs() < 1e-10);
            }
            assert!((s.beta_expect - beta0).abs() < 1e-10);
        }
    }

    #[test]
    fn mean_mode_energy_matches_the_single_mode_value() {
        let packet = build_packet(&PacketSpec {
            p_center: [0.0, 0.0, 1.3],
            p_spread: 0.0,
            n_modes: 1,
            neg_fraction: 0.2,
            m0c2: 0.511,
        })
        .unwrap();
        let p_red: f64 = 1.3 / 0.511;
        assert!((mean_mode_energy(&packet) - (1.0 + p_red * p_red).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn coincidence_spacing_is_half_the_de_broglie_period() {
        let consts = PhysicalConstants::<f64>::codata2018();
        let times = coincidence_times(0.511, 4, &consts).unwrap();
        assert_eq!(times.len(), 4);
        let spacing = times[1] - times[0];
        assert!((spacing - consts.h_t() / (2.0 * 0.511)).abs() < 1e-30);
        // h/(2·0.511 MeV) ≈ 4.0466e−21 s.
        assert!((spacing - 4.0466e-21).abs() / spacing < 1e-4);

        let resonant = coincidence_times(80.876, 1, &consts).unwrap();
        let spacing_res = consts.h_t() / (2.0 * 80.876);
        assert!((resonant[0] - spacing_res).abs() / spacing_res < 1e-12);
        assert!((spacing_res - 2.557e-23).abs() / spacing_res < 1e-3);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let consts = PhysicalConstants::<f64>::codata2018();
        assert!(coincidence_times(0.0, 3, &consts).is_err());
        assert!(coincidence_times(1.0, 0, &consts).is_err());
        assert!(coincidence_times_natural(-1.0, 3).is_err());
        let packet = rest_mix();
        assert!(trajectory_expectation(&packet, f64::NAN).is_err());
    }
}
