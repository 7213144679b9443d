//! Trajectory transport: the deflection kick, the step loop, and the
//! tilt-angle transmission scan.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use super::params::{ChannelParams, OffsetModel, RowLattice};
use super::rng::substream_rng;
use super::stats::TransmissionPoint;
use crate::error::{ensure_finite, Error, Result};
use crate::scalar::{lit, Real};

/// Transverse state of one trajectory between deflection steps.
///
/// Positions are in the run's length unit (the lattice spacing by
/// default), angles in radians. `lost` marks a trajectory that diverged —
/// non-finite state or transverse excursion beyond five lattice spacings —
/// and is deterministically not transmitted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryState<T> {
    pub x: T,
    pub y: T,
    pub theta_x: T,
    pub theta_y: T,
    /// Number of deflection steps applied so far.
    pub step_index: usize,
    /// Set when the trajectory diverged; propagation stops at that step.
    pub lost: bool,
}

impl<T: Real> TrajectoryState<T> {
    /// Entry state: position (x, y), beam tilted by `tilt` in the x-plane.
    pub fn entry(x: T, y: T, tilt: T) -> Self {
        TrajectoryState {
            x,
            y,
            theta_x: tilt,
            theta_y: T::zero(),
            step_index: 0,
            lost: false,
        }
    }

    fn is_finite(&self) -> bool {
        self.x.is_finite()
            && self.y.is_finite()
            && self.theta_x.is_finite()
            && self.theta_y.is_finite()
    }
}

/// One deflection step as seen by an observer: the transverse offsets the
/// kick was evaluated at (wrapped to the nearest row under the periodic
/// lattice, raw position for a single row), the longitudinal offset drawn
/// for the step, and the resulting angular kick.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KickRecord<T> {
    /// Zero-based step number.
    pub step: usize,
    /// Transverse offset at which the kick was evaluated.
    pub x: T,
    /// Transverse offset at which the kick was evaluated.
    pub y: T,
    /// Longitudinal offset used in the kick.
    pub z: T,
    pub d_theta_x: T,
    pub d_theta_y: T,
}

/// The angular kick of one deflection step:
///
/// ```text
/// dθ_x = 2·L·K·y²·z²·x / m,      dθ_y = 2·L·K·x²·z²·y / m
/// ```
///
/// — the transverse gradient of the quartic row potential K·x²y²z²,
/// integrated over one step of length L, with the y-form following from
/// the x↔y symmetry of the potential.
///
/// L and K enter only through the product L·K, and the common coefficient
/// is evaluated as `(2·L)·K/m` so the identity is exact in floating point,
/// not merely algebraic: when L carries a power-of-two multiple of the
/// lattice spacing and K the inverse multiple (step length 2d at strength
/// K versus d at 2K), both groupings round the same real number at every
/// intermediate, and the outputs agree bit for bit.
pub fn step_deflection<T: Real>(x: T, y: T, z: T, params: &ChannelParams<T>) -> (T, T) {
    let two = T::one() + T::one();
    let coeff = (two * params.step_length) * params.coupling / params.mass;
    let zz = z * z;
    let d_theta_x = coeff * (y * y) * zz * x;
    let d_theta_y = coeff * (x * x) * zz * y;
    (d_theta_x, d_theta_y)
}

/// Wraps `v` into the centered cell [−d/2, d/2].
fn wrap_half<T: Real>(v: T, d: T) -> T {
    v - d * (v / d).round()
}

/// Runs the step loop and reports every kick to `observe`.
///
/// Per step: evolve the longitudinal offset z (wrapped Gaussian walk or
/// independent redraw, per `params.offset_model`), evaluate
/// [`step_deflection`] at the current transverse offsets and z — under the
/// periodic lattice the offsets are the position wrapped to the nearest
/// row, under a single row the raw position — add the kick to the angles,
/// then drift x += L·θ_x, y += L·θ_y. A non-finite state or a transverse
/// excursion beyond 5·d marks the trajectory lost and stops the loop (the
/// cap exists for the single-row reading, whose kick grows without bound
/// in the excursion; periodic-lattice kicks are bounded and at default
/// tilts the drift never reaches it).
///
/// Draw order from `rng` is fixed: one uniform for the initial offset
/// (walk model only), then one standard normal per step. The observer sees
/// the offsets the kick was computed from, so a recorded sequence can be
/// replayed through [`step_deflection`] under a different parameter set —
/// that is how the L·K invariance is checked kick by kick, since positions
/// themselves advance differently through the L factor in the drift.
pub fn propagate_observed<T, R, F>(
    entry: TrajectoryState<T>,
    params: &ChannelParams<T>,
    rng: &mut R,
    mut observe: F,
) -> Result<TrajectoryState<T>>
where
    T: Real,
    R: Rng + ?Sized,
    F: FnMut(&KickRecord<T>),
{
    params.validate()?;
    if !entry.is_finite() {
        return Err(Error::domain(
            "entry",
            "finite position and angles",
            "non-finite trajectory state",
        ));
    }

    let d = params.lattice_spacing;
    let cap = lit::<T>(5.0) * d;
    let half = lit::<T>(0.5);

    let mut state = entry;
    let mut z = match params.offset_model {
        OffsetModel::Walk => (lit::<T>(rng.gen::<f64>()) - half) * d,
        OffsetModel::Redraw => T::zero(),
    };

    for step in 0..params.n_steps {
        let g: f64 = rng.sample(StandardNormal);
        let dz = params.sigma * lit::<T>(g);
        z = match params.offset_model {
            OffsetModel::Walk => wrap_half(z + dz, d),
            OffsetModel::Redraw => dz,
        };

        let (x_kick, y_kick) = match params.row_lattice {
            RowLattice::Periodic => (wrap_half(state.x, d), wrap_half(state.y, d)),
            RowLattice::Single => (state.x, state.y),
        };
        let (d_theta_x, d_theta_y) = step_deflection(x_kick, y_kick, z, params);
        observe(&KickRecord {
            step,
            x: x_kick,
            y: y_kick,
            z,
            d_theta_x,
            d_theta_y,
        });

        state.theta_x = state.theta_x + d_theta_x;
        state.theta_y = state.theta_y + d_theta_y;
        state.x = state.x + params.step_length * state.theta_x;
        state.y = state.y + params.step_length * state.theta_y;
        state.step_index = step + 1;

        if !state.is_finite() || state.x.abs() > cap || state.y.abs() > cap {
            state.lost = true;
            break;
        }
    }
    Ok(state)
}

/// [`propagate_observed`] without an observer: entry state in, exit state
/// out.
pub fn propagate_trajectory<T, R>(
    entry: TrajectoryState<T>,
    params: &ChannelParams<T>,
    rng: &mut R,
) -> Result<TrajectoryState<T>>
where
    T: Real,
    R: Rng + ?Sized,
{
    propagate_observed(entry, params, rng, |_| {})
}

/// Detector acceptance: a trajectory is transmitted when it was not lost
/// and its exit angles sit within ±θ_acceptance of the incoming beam
/// direction (tilt in the x-plane, zero in the y-plane).
pub fn is_transmitted<T: Real>(
    exit: &TrajectoryState<T>,
    tilt: T,
    params: &ChannelParams<T>,
) -> bool {
    !exit.lost
        && (exit.theta_x - tilt).abs() <= params.theta_acceptance
        && exit.theta_y.abs() <= params.theta_acceptance
}

/// A tilt grid of `n` angles spanning [−max_abs, +max_abs], mirror-exact:
/// grid[i] == −grid[n−1−i] bit for bit (the integer numerators are exact
/// negatives, and IEEE division and multiplication preserve negation).
/// Odd `n` places one point exactly at zero.
pub fn symmetric_tilt_grid<T: Real>(n: usize, max_abs: T) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::domain("n_tilts", "≥ 1", n));
    }
    ensure_finite("tilt_max", max_abs)?;
    if max_abs < T::zero() {
        return Err(Error::domain("tilt_max", "finite and ≥ 0", max_abs));
    }
    if n == 1 {
        return Ok(vec![T::zero()]);
    }
    let k = (n - 1) as i64;
    Ok((0..n)
        .map(|i| {
            // The ratio is computed first so that the endpoints are exactly
            // ±1 (integer self-division) before the single scale by max_abs.
            let numerator = 2 * i as i64 - k;
            max_abs * lit::<T>(numerator as f64 / k as f64)
        })
        .collect())
}

/// Scans transmission over a tilt grid: `n_traj` trajectories per tilt,
/// entry (x, y) uniform over [−cell_half_width, +cell_half_width]², beam
/// tilted in the x-plane.
///
/// Each trajectory runs on its own RNG substream keyed by (seed, tilt
/// index, trajectory index), and the per-tilt reduction is a count, so the
/// result is bit-identical for any thread count. The per-substream draw
/// order is: two uniforms for the entry position, then the propagation
/// draws of [`propagate_observed`].
pub fn transmission_scan<T: Real>(
    tilt_grid: &[T],
    params: &ChannelParams<T>,
) -> Result<Vec<TransmissionPoint<T>>> {
    params.validate()?;
    if tilt_grid.is_empty() {
        return Err(Error::TooFewEntries {
            what: "tilt grid",
            min: 1,
            got: 0,
        });
    }
    for &tilt in tilt_grid {
        ensure_finite("tilt", tilt)?;
    }

    let mut profile = Vec::with_capacity(tilt_grid.len());
    for (tilt_index, &tilt) in tilt_grid.iter().enumerate() {
        let n_transmitted = (0..params.n_traj)
            .into_par_iter()
            .map(|trajectory_index| {
                let mut rng =
                    substream_rng(params.seed, tilt_index as u64, trajectory_index as u64);
                let ux: f64 = rng.gen();
                let uy: f64 = rng.gen();
                let x = lit::<T>(2.0 * ux - 1.0) * params.cell_half_width;
                let y = lit::<T>(2.0 * uy - 1.0) * params.cell_half_width;
                let entry = TrajectoryState::entry(x, y, tilt);
                let exit = propagate_trajectory(entry, params, &mut rng)
                    .expect("params validated before the scan");
                u64::from(is_transmitted(&exit, tilt, params))
            })
            .sum();
        profile.push(TransmissionPoint::from_counts(
            tilt,
            n_transmitted,
            params.n_traj as u64,
        ));
    }
    Ok(profile)
}
