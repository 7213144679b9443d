//! Momentum modes and wave packets.
//!
//! A packet is an ordered list of discrete momentum modes, each carrying a
//! 4-spinor amplitude and a non-negative weight, normalized so that
//! Σ weight·‖amplitude‖² = 1.  Expectation values over the packet are
//! weighted sums of per-mode expectations: the free Hamiltonian is block
//! diagonal over momentum, so each mode evolves independently and all the
//! interesting operators reduce to 4×4 algebra per mode.
//!
//! [`build_packet`] places modes on a 1-D momentum grid along the beam
//! axis with Gaussian weights and mixes positive- and negative-energy
//! components in a controlled ratio.  Negative-energy content is an input
//! here, not something derived: it is exactly the knob that switches the
//! position-expectation oscillation on and off.

use num_complex::Complex;

use crate::error::{ensure_finite, ensure_positive, Error};
use crate::scalar::{lit, Real};
use crate::Result;

use super::algebra::energy_projectors;
use super::linalg::Spinor4;

/// One plane-wave component of a packet.
#[derive(Clone, Copy, Debug)]
pub struct MomentumMode<T> {
    /// Momentum in MeV/c.
    pub p: [T; 3],
    /// 4-spinor amplitude (unit norm for modes built by [`build_packet`]).
    pub amplitude: Spinor4<T>,
    /// Non-negative statistical weight.
    pub weight: T,
}

/// An ordered, normalized collection of momentum modes sharing one rest
/// energy.
///
/// Immutable after construction; construction enforces the normalization
/// invariant so downstream expectation code never has to re-check it.
#[derive(Clone, Debug)]
pub struct WavePacket<T> {
    modes: Vec<MomentumMode<T>>,
    m0c2: T,
}

impl<T: Real> WavePacket<T> {
    /// Wraps pre-normalized modes, validating Σ weight·‖amplitude‖² = 1.
    ///
    /// The tolerance is 1e−12 for `f64`, widened to a few epsilon at lower
    /// precision so the invariant stays meaningful for `f32`.
    pub fn new(modes: Vec<MomentumMode<T>>, m0c2: T) -> Result<Self> {
        let norm = Self::validate(&modes, m0c2)?;
        let tol = lit::<T>(1e-12).max(T::epsilon() * lit::<T>(64.0));
        if (norm - T::one()).abs() > tol {
            return Err(Error::NotNormalized {
                norm: norm.to_string(),
            });
        }
        Ok(Self { modes, m0c2 })
    }

    /// Wraps modes after rescaling the weights so the packet is normalized.
    pub fn normalized(modes: Vec<MomentumMode<T>>, m0c2: T) -> Result<Self> {
        let norm = Self::validate(&modes, m0c2)?;
        if norm <= T::zero() || !norm.is_finite() {
            return Err(Error::NotNormalized {
                norm: norm.to_string(),
            });
        }
        let inv = norm.recip();
        let modes = modes
            .into_iter()
            .map(|mut m| {
                m.weight *= inv;
                m
            })
            .collect();
        Ok(Self { modes, m0c2 })
    }

    fn validate(modes: &[MomentumMode<T>], m0c2: T) -> Result<T> {
        ensure_positive("m0c2", m0c2)?;
        if modes.is_empty() {
            return Err(Error::TooFewEntries {
                what: "momentum modes",
                min: 1,
                got: 0,
            });
        }
        let mut norm = T::zero();
        for mode in modes {
            for (axis, &component) in ["p_x", "p_y", "p_z"].iter().zip(mode.p.iter()) {
                ensure_finite(axis, component)?;
            }
            if !(mode.weight.is_finite() && mode.weight >= T::zero()) {
                return Err(Error::domain("mode weight", "finite and >= 0", mode.weight));
            }
            let amp2 = mode.amplitude.norm_sqr();
            ensure_finite("amplitude norm", amp2)?;
            norm += mode.weight * amp2;
        }
        Ok(norm)
    }

    pub fn modes(&self) -> &[MomentumMode<T>] {
        &self.modes
    }

    pub fn m0c2(&self) -> T {
        self.m0c2
    }

    /// Σ weight·‖amplitude‖², 1 by construction (useful in tests).
    pub fn norm(&self) -> T {
        let mut acc = T::zero();
        for m in &self.modes {
            acc += m.weight * m.amplitude.norm_sqr();
        }
        acc
    }
}

/// Recipe for [`build_packet`].
#[derive(Clone, Copy, Debug)]
pub struct PacketSpec<T> {
    /// Central momentum in MeV/c; its direction is the grid axis (x̂ when
    /// the vector is zero).
    pub p_center: [T; 3],
    /// Gaussian momentum spread in MeV/c (≥ 0).
    pub p_spread: T,
    /// Number of grid modes (≥ 1).
    pub n_modes: usize,
    /// Negative-energy fraction in [0, 1].
    pub neg_fraction: T,
    /// Rest energy in MeV.
    pub m0c2: T,
}

/// Reference spinor fed through the energy projectors: an equal-weight mix
/// of all four components, (1, 1, 1, 1)/2.  Its projections onto both
/// energy signs are nonzero for every momentum (the positive/negative
/// overlap is (1 ± p̃ₓ/E)/2 at worst, and |p̃| < E always), so the
/// construction below never divides by zero.
fn reference_spinor<T: Real>() -> Spinor4<T> {
    let half = lit::<T>(0.5);
    Spinor4::from_reals([half, half, half, half])
}

/// Builds a packet of `n_modes` plane waves on a uniform momentum grid
/// spanning |p_center| ± 3·p_spread along the p_center direction, with
/// Gaussian weights exp(−(s − |p_center|)²/2·p_spread²).
///
/// Each mode's amplitude is √(1−f)·u₊ + √f·u₋, where u± are the
/// unit-normalized projections of the reference spinor onto the two energy
/// signs at that momentum and f is `neg_fraction`.  Since u₊ ⊥ u₋, every
/// amplitude has unit norm, and the weights are rescaled so the packet
/// satisfies Σ weight·‖amplitude‖² = 1.
pub fn build_packet<T: Real>(spec: &PacketSpec<T>) -> Result<WavePacket<T>> {
    ensure_positive("m0c2", spec.m0c2)?;
    if spec.n_modes == 0 {
        return Err(Error::TooFewEntries {
            what: "packet modes",
            min: 1,
            got: 0,
        });
    }
    if !(spec.p_spread.is_finite() && spec.p_spread >= T::zero()) {
        return Err(Error::domain("p_spread", "finite and >= 0", spec.p_spread));
    }
    let f = spec.neg_fraction;
    if !(f.is_finite() && f >= T::zero() && f <= T::one()) {
        return Err(Error::domain("neg_fraction", "within [0, 1]", f));
    }
    for (axis, &component) in ["p_x", "p_y", "p_z"].iter().zip(spec.p_center.iter()) {
        ensure_finite(axis, component)?;
    }

    let p_center_mag = (spec.p_center[0] * spec.p_center[0]
        + spec.p_center[1] * spec.p_center[1]
        + spec.p_center[2] * spec.p_center[2])
        .sqrt();
    let axis = if p_center_mag > T::zero() {
        let inv = p_center_mag.recip();
        [
            spec.p_center[0] * inv,
            spec.p_center[1] * inv,
            spec.p_center[2] * inv,
        ]
    } else {
        [T::one(), T::zero(), T::zero()]
    };

    let half = lit::<T>(0.5);
    let co_plus = Complex::new((T::one() - f).sqrt(), T::zero());
    let co_minus = Complex::new(f.sqrt(), T::zero());
    let chi = reference_spinor::<T>();

    let mut modes = Vec::with_capacity(spec.n_modes);
    let span = lit::<T>(6.0) * spec.p_spread;
    for i in 0..spec.n_modes {
        // Scalar momentum along the axis: uniform over ±3 spreads.
        let s = if spec.n_modes == 1 {
            p_center_mag
        } else {
            let frac = lit::<T>(i as f64) / lit::<T>((spec.n_modes - 1) as f64);
            p_center_mag + (frac - half) * span
        };
        let p = [s * axis[0], s * axis[1], s * axis[2]];

        let (proj_plus, proj_minus) = energy_projectors(p, spec.m0c2)?;
        let u_plus = (proj_plus * chi).normalized()?;
        let u_minus = (proj_minus * chi).normalized()?;
        let amplitude = u_plus * co_plus + u_minus * co_minus;

        let weight = if spec.p_spread > T::zero() {
            let x = (s - p_center_mag) / spec.p_spread;
            (-(x * x) * half).exp()
        } else {
            T::one()
        };
        modes.push(MomentumMode {
            p,
            amplitude,
            weight,
        });
    }
    WavePacket::normalized(modes, spec.m0c2)
}
