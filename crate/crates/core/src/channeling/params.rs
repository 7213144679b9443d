//! Run parameters for the transmission Monte Carlo.

use std::fmt;
use std::str::FromStr;

use crate::consts::PhysicalConstants;
use crate::error::{ensure_finite, ensure_positive, Error, Result};
use crate::relkin::{alpha_parameter, reference_setup, solve_beta_gamma};
use crate::scalar::{lit, Real};

/// Default deflection strength, fixed by the calibration run documented in
/// the project README: the most negative rung of the sweep that keeps the
/// zero-tilt transmission resolvable at default statistics while the dip
/// stays deep and symmetric. Negative sign = restoring (the row attracts),
/// which is the regime that produces a transmission dip at zero tilt.
pub const DEFAULT_COUPLING: f64 = -48.0;

/// Default number of deflection steps per trajectory.
pub const DEFAULT_N_STEPS: usize = 1000;

/// Default number of trajectories per tilt angle.
pub const DEFAULT_N_TRAJ: usize = 2000;

/// Default half-width of the exit-angle acceptance window (radians).
pub const DEFAULT_THETA_ACCEPTANCE: f64 = 5.0e-4;

/// Default tilt-scan half-range (radians); the scan covers ±this value.
pub const DEFAULT_TILT_MAX: f64 = 2.0e-3;

/// Default number of tilt angles in a scan grid.
pub const DEFAULT_N_TILTS: usize = 41;

/// Default RNG seed.
pub const DEFAULT_SEED: u64 = 1;

/// How the longitudinal offset z evolves from one deflection step to the
/// next. z enters the kick quadratically, so its distribution along the
/// row is what couples the Gaussian range parameter σ to the dynamics.
///
/// `Walk` (the default) treats z as the running offset between the particle
/// and the nearest lattice site: each step adds a centered Gaussian of
/// width σ and wraps the result back into one cell, [−d/2, d/2]. The
/// stationary distribution of that wrapped walk is uniform over the cell,
/// so the mean-square offset ⟨z²⟩ = d²/12 is independent of σ; σ only sets
/// how fast successive offsets decorrelate. That separation is what lets σ
/// move the dip amplitude while leaving its angular width alone — under an
/// independent redraw every step, trajectories depend on the coupling K and
/// σ only through the product K·σ², so a σ that changes the amplitude would
/// necessarily change the width too.
///
/// `Redraw` is the literal independent reading: z ~ Gaussian(0, σ) fresh at
/// every step, no memory. Kept as a runnable alternative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OffsetModel {
    /// Wrapped Gaussian random walk within one lattice cell.
    #[default]
    Walk,
    /// Independent Gaussian draw at every step.
    Redraw,
}

impl OffsetModel {
    /// Canonical lowercase name, as used in config files and output headers.
    pub fn as_str(self) -> &'static str {
        match self {
            OffsetModel::Walk => "walk",
            OffsetModel::Redraw => "redraw",
        }
    }
}

impl fmt::Display for OffsetModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OffsetModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "walk" => Ok(OffsetModel::Walk),
            "redraw" => Ok(OffsetModel::Redraw),
            other => Err(Error::domain(
                "offset_model",
                "one of: walk, redraw",
                other,
            )),
        }
    }
}

/// How the transverse coordinates entering the kick relate to the
/// particle's position.
///
/// `Periodic` (the default) models a crystal: atomic rows tile the
/// transverse plane with period d, and the kick is evaluated at the offset
/// from the *nearest* row, i.e. at the position wrapped into one cell.
/// Kicks are then bounded, and a tilted beam sweeping across many cells
/// picks up sign-alternating, diffusion-like deflections while an aligned
/// beam stays coherently trapped — the contrast that produces the
/// transmission dip.
///
/// `Single` is an isolated row at the origin: the kick is evaluated at the
/// raw position. Because the quartic potential then grows without bound in
/// the transverse distance, any tilt (which walks the beam away from the
/// axis) strictly increases the scattering, and the scan produces a
/// central peak rather than a dip. Kept as a runnable alternative reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RowLattice {
    /// d-periodic lattice of rows; kick offsets wrap to the nearest row.
    #[default]
    Periodic,
    /// One isolated row at the origin; kick offsets are raw positions.
    Single,
}

impl RowLattice {
    /// Canonical lowercase name, as used in config files and output headers.
    pub fn as_str(self) -> &'static str {
        match self {
            RowLattice::Periodic => "periodic",
            RowLattice::Single => "single",
        }
    }
}

impl fmt::Display for RowLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RowLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "periodic" => Ok(RowLattice::Periodic),
            "single" => Ok(RowLattice::Single),
            other => Err(Error::domain(
                "row_lattice",
                "one of: periodic, single",
                other,
            )),
        }
    }
}

/// Parameters of one transmission run.
///
/// The model is a lattice of atomic rows along the beam axis (z) — or a
/// single row, per [`RowLattice`] — with transverse confining potential of
/// strength `coupling`; a trajectory advances in `n_steps` deflection
/// steps of length `step_length`, each applying the quartic kick of
/// [`step_deflection`](crate::channeling::step_deflection) at the current
/// transverse offset and a longitudinal offset drawn per [`OffsetModel`].
/// Lengths are in units of the lattice spacing by default
/// (`lattice_spacing = 1`); angles are radians throughout.
///
/// `coupling` is a single dimensionless number absorbing the 2dK/m scale of
/// the kick law; its default is the calibrated [`DEFAULT_COUPLING`]. The
/// `mass` parameter defaults to the Lorentz factor γ of the reference beam
/// (relativistic transverse dynamics: m → γm₀), and is exposed because the
/// choice between m₀ and γm₀ is a modeling convention, not a derivation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams<T> {
    /// Lattice spacing d: the unit cell length along the row.
    pub lattice_spacing: T,
    /// Step length L between successive deflection kicks (default d).
    pub step_length: T,
    /// Deflection strength K. Sign-free: negative is restoring.
    pub coupling: T,
    /// Gaussian range σ of the per-step longitudinal offset (default L/4).
    pub sigma: T,
    /// Mass parameter m in the kick denominator (default γ of the
    /// reference beam, ≈ 158.27).
    pub mass: T,
    /// Deflection steps per trajectory.
    pub n_steps: usize,
    /// Trajectories per tilt angle.
    pub n_traj: usize,
    /// Entry positions are sampled uniformly over
    /// [−cell_half_width, +cell_half_width]² (default d/2).
    pub cell_half_width: T,
    /// Half-width of the exit-angle acceptance window (radians).
    pub theta_acceptance: T,
    /// Base RNG seed; per-trajectory substreams derive from
    /// (seed, tilt index, trajectory index).
    pub seed: u64,
    /// Longitudinal-offset evolution model.
    pub offset_model: OffsetModel,
    /// Transverse arrangement of the rows.
    pub row_lattice: RowLattice,
}

impl<T: Real> Default for ChannelParams<T> {
    fn default() -> Self {
        let d = T::one();
        ChannelParams {
            lattice_spacing: d,
            step_length: d,
            coupling: lit(DEFAULT_COUPLING),
            sigma: d / lit(4.0),
            mass: default_mass(),
            n_steps: DEFAULT_N_STEPS,
            n_traj: DEFAULT_N_TRAJ,
            cell_half_width: d / lit(2.0),
            theta_acceptance: lit(DEFAULT_THETA_ACCEPTANCE),
            seed: DEFAULT_SEED,
            offset_model: OffsetModel::default(),
            row_lattice: RowLattice::default(),
        }
    }
}

impl<T: Real> ChannelParams<T> {
    /// Checks every invariant: d, L, σ, m, θ_acc strictly positive and
    /// finite; K finite (any sign); cell_half_width finite and ≥ 0;
    /// n_steps, n_traj ≥ 1.
    pub fn validate(&self) -> Result<()> {
        ensure_positive("lattice_spacing", self.lattice_spacing)?;
        ensure_positive("step_length", self.step_length)?;
        ensure_finite("coupling", self.coupling)?;
        ensure_positive("sigma", self.sigma)?;
        ensure_positive("mass", self.mass)?;
        ensure_positive("theta_acceptance", self.theta_acceptance)?;
        ensure_finite("cell_half_width", self.cell_half_width)?;
        if self.cell_half_width < T::zero() {
            return Err(Error::domain(
                "cell_half_width",
                "finite and ≥ 0",
                self.cell_half_width,
            ));
        }
        if self.n_steps == 0 {
            return Err(Error::domain("n_steps", "≥ 1", self.n_steps));
        }
        if self.n_traj == 0 {
            return Err(Error::domain("n_traj", "≥ 1", self.n_traj));
        }
        Ok(())
    }
}

/// Default mass parameter: the Lorentz factor of the reference beam at unit
/// mass scale (≈ 158.27), from the resonance kinematics.
pub fn default_mass<T: Real>() -> T {
    let consts = PhysicalConstants::textbook();
    let alpha = alpha_parameter(&reference_setup::<T>(), &consts)
        .expect("reference setup and textbook constants are valid");
    let (_beta, gamma) = solve_beta_gamma(alpha).expect("alpha > 0 by construction");
    gamma
}

/// Collapses a step-length multiple back onto L = d, compensating with the
/// coupling and the Gaussian range.
///
/// The kick depends on L and K only through the product L·K, so a run at
/// step length `l_multiplier·d` is algebraically identical (kick for kick)
/// to one at L = d with K scaled by `l_multiplier`. The range parameter
/// follows the σ = L/4 convention of the pre-collapse step length, hence
/// σ ← l_multiplier·(d/4). The multiplier must be finite and > 0; the
/// returned set is revalidated.
pub fn rescaled_params<T: Real>(
    params: &ChannelParams<T>,
    l_multiplier: T,
) -> Result<ChannelParams<T>> {
    if !(l_multiplier.is_finite() && l_multiplier > T::zero()) {
        return Err(Error::domain("l_multiplier", "finite and > 0", l_multiplier));
    }
    let mut out = *params;
    out.step_length = params.lattice_spacing;
    out.coupling = l_multiplier * params.coupling;
    out.sigma = l_multiplier * (params.lattice_spacing / lit(4.0));
    out.validate()?;
    Ok(out)
}
