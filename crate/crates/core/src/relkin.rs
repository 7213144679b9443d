//! Relativistic kinematics of the internal-clock resonance.
//!
//! A particle whose internal phase advances at the frequency ν = m₀c²/h
//! traverses one clock period in a lab-frame distance L·γβ... the quantity
//! everything here revolves around is the dimensionless ratio
//!
//! ```text
//! α = L · m₀c² / (h·c)
//! ```
//!
//! where L is the lattice advance per internal period. Requiring the clock
//! period (lab frame, time-dilated) to match the time needed to advance one
//! lattice spacing pins the velocity: β²/(1 − β²) = α², i.e.
//!
//! ```text
//! β = α / √(1 + α²),   γ = √(1 + α²),   E = γ·m₀c² ≈ α·m₀c²  (α ≫ 1)
//! ```
//!
//! The module also supplies the three lab-frame periods (internal clock,
//! de Broglie phase wave, position oscillation at 2E/ħ), the per-coincidence
//! phase shift ⟨β₀⟩·π/γ picked up between consecutive returns of the
//! oscillation to its mean path, and the effective-mass ratio
//! m*/m₀ = √(E_exp/E_theo) used to express a measured resonance energy as a
//! mass shift.
//!
//! Everything is analytic; the only state is [`PhysicalConstants`].

use crate::consts::PhysicalConstants;
use crate::error::{ensure_finite, ensure_positive, Error, Result};
use crate::scalar::{lit, Real};

/// Geometry and mass scaling for one resonance evaluation.
///
/// `d` is the lattice spacing along the beam (fm). `advance_per_period` is
/// the distance the particle advances during one internal-clock period —
/// the resonance of interest has it equal to `d`, harmonics use multiples.
/// `mass_scale` rescales the rest energy (m₀c² → mass_scale·m₀c²) so that
/// effective-mass hypotheses can be driven through the same formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceSetup<T> {
    /// Lattice spacing d, fm.
    pub d: T,
    /// Advance per internal-clock period L, fm.
    pub advance_per_period: T,
    /// Dimensionless rest-energy scale factor.
    pub mass_scale: T,
}

impl<T: Real> ResonanceSetup<T> {
    pub fn new(d: T, advance_per_period: T, mass_scale: T) -> Result<Self> {
        let setup = Self {
            d,
            advance_per_period,
            mass_scale,
        };
        setup.validate()?;
        Ok(setup)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_positive("d", self.d)?;
        ensure_positive("advance_per_period", self.advance_per_period)?;
        ensure_positive("mass_scale", self.mass_scale)?;
        Ok(())
    }
}

/// Full kinematic record for one resonance condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceResult<T> {
    /// Dimensionless resonance parameter α.
    pub alpha: T,
    /// Velocity in units of c.
    pub beta: T,
    /// Lorentz factor.
    pub gamma: T,
    /// Exact total energy γ·m₀c²·mass_scale, MeV.
    pub energy_total: T,
    /// Large-α approximation α·m₀c²·mass_scale, MeV.
    pub energy_approx: T,
    /// Lab-frame internal-clock period h·γ/(m₀c²·mass_scale), s.
    pub t_clock_lab: T,
    /// Lab-frame phase-wave period h/(γ·m₀c²·mass_scale), s.
    pub t_wave: T,
    /// Lab-frame position-oscillation period h/(2·γ·m₀c²·mass_scale), s.
    pub t_zb_lab: T,
}

/// The three lab-frame periods, seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabPeriods<T> {
    /// Internal-clock period, time-dilated: h·γ/(m₀c²·mass_scale).
    pub t_clock_lab: T,
    /// De Broglie phase-wave period: h/E = h/(γ·m₀c²·mass_scale).
    pub t_wave: T,
    /// Position-oscillation period: h/2E, half the phase-wave period.
    pub t_zb_lab: T,
}

/// The worked reference beam: an electron advancing one silicon ⟨110⟩ row
/// spacing, d = 3.84 Å = 3.84×10⁵ fm, per internal-clock period at unit
/// mass scale.  Default parameter sets elsewhere in the crate (and in the
/// command-line front end) are anchored to this setup.
pub fn reference_setup<T: Real>() -> ResonanceSetup<T> {
    ResonanceSetup::new(lit(3.84e5), lit(3.84e5), T::one())
        .expect("reference setup is valid by construction")
}

/// α = advance_per_period · (m₀c²·mass_scale) / (h·c).
///
/// The advance enters linearly, so doubling it doubles α exactly (the
/// factor 2 is a power of two and IEEE multiplication by it is exact).
pub fn alpha_parameter<T: Real>(
    setup: &ResonanceSetup<T>,
    consts: &PhysicalConstants<T>,
) -> Result<T> {
    setup.validate()?;
    consts.validate()?;
    Ok(setup.advance_per_period * (consts.m0c2 * setup.mass_scale) / consts.h_c())
}

/// Solves β²/(1 − β²) = α² for β ∈ [0, 1): returns (β, γ).
///
/// Closed form: β = α/√(1 + α²), γ = √(1 + α²). For α ≫ 1 the velocity
/// approaches light speed as β ≈ 1 − 1/(2α²).
pub fn solve_beta_gamma<T: Real>(alpha: T) -> Result<(T, T)> {
    ensure_finite("alpha", alpha)?;
    if alpha <= T::zero() {
        return Err(Error::domain("alpha", "finite and > 0", alpha));
    }
    let gamma = (T::one() + alpha * alpha).sqrt();
    let beta = alpha / gamma;
    Ok((beta, gamma))
}

/// Lab-frame periods for a particle of Lorentz factor γ and rest energy
/// m₀c²·mass_scale.
pub fn lab_periods<T: Real>(
    gamma: T,
    mass_scale: T,
    consts: &PhysicalConstants<T>,
) -> Result<LabPeriods<T>> {
    ensure_finite("gamma", gamma)?;
    if gamma < T::one() {
        return Err(Error::domain("gamma", ">= 1", gamma));
    }
    ensure_positive("mass_scale", mass_scale)?;
    consts.validate()?;
    let rest = consts.m0c2 * mass_scale;
    let h = consts.h_t();
    let t_wave = h / (gamma * rest);
    Ok(LabPeriods {
        t_clock_lab: h * gamma / rest,
        t_wave,
        t_zb_lab: t_wave / lit(2.0),
    })
}

/// Exact and approximate resonance energy plus the associated periods.
pub fn resonance_energy<T: Real>(
    setup: &ResonanceSetup<T>,
    consts: &PhysicalConstants<T>,
) -> Result<ResonanceResult<T>> {
    let alpha = alpha_parameter(setup, consts)?;
    let (beta, gamma) = solve_beta_gamma(alpha)?;
    let rest = consts.m0c2 * setup.mass_scale;
    let periods = lab_periods(gamma, setup.mass_scale, consts)?;
    Ok(ResonanceResult {
        alpha,
        beta,
        gamma,
        energy_total: gamma * rest,
        energy_approx: alpha * rest,
        t_clock_lab: periods.t_clock_lab,
        t_wave: periods.t_wave,
        t_zb_lab: periods.t_zb_lab,
    })
}

/// Phase shift ⟨β₀⟩·π/γ accumulated between consecutive coincidence times
/// (returns of the position oscillation to the uniform path).
pub fn coincidence_phase_shift<T: Real>(beta0_expect: T, gamma: T) -> Result<T> {
    ensure_finite("beta0_expect", beta0_expect)?;
    if beta0_expect.abs() > T::one() {
        return Err(Error::domain("beta0_expect", "in [-1, 1]", beta0_expect));
    }
    ensure_finite("gamma", gamma)?;
    if gamma < T::one() {
        return Err(Error::domain("gamma", ">= 1", gamma));
    }
    Ok(beta0_expect * T::PI() / gamma)
}

/// m*/m₀ = √(E_experimental / E_theoretical).
///
/// The approximate resonance energy scales as the square of the rest mass
/// (both α and the rest energy carry one factor), so a shifted measured
/// energy maps to a mass ratio by a square root.
pub fn effective_mass_ratio<T: Real>(e_experimental: T, e_theoretical: T) -> Result<T> {
    ensure_positive("e_experimental", e_experimental)?;
    ensure_positive("e_theoretical", e_theoretical)?;
    Ok((e_experimental / e_theoretical).sqrt())
}
