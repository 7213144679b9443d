//! Monte Carlo transmission through axially aligned atomic rows.
//!
//! A semi-classical multiple-deflection model of electron transmission
//! near axial alignment: the beam advances along the rows in steps of
//! length L, and at each step picks up the transverse kick
//!
//! ```text
//! dθ_x = 2·L·K·y²·z²·x / m,      dθ_y = 2·L·K·x²·z²·y / m
//! ```
//!
//! — the gradient of a quartic row potential K·x²y²z² — where (x, y, z)
//! are the offsets from the nearest lattice site: transversely the
//! position wrapped to the nearest row of the d-periodic lattice (or the
//! raw position for an isolated row, see [`RowLattice`]), longitudinally a
//! per-step fluctuation with Gaussian range σ (see [`OffsetModel`] for the
//! two readings of that fluctuation). Scanning the beam tilt and counting
//! trajectories whose exit angles stay within an acceptance window yields
//! the transmission-versus-tilt profile; with a restoring (negative)
//! coupling the aligned beam is coherently trapped and over-deflected
//! while tilted beams cross cells and merely diffuse, so the profile
//! develops the characteristic dip at zero tilt, which [`dip_statistics`]
//! reduces to a depth, width, and center.
//!
//! Two structural facts drive the test suite and are worth knowing up
//! front:
//!
//! * the kick depends on L and K only through L·K, so collapsing a run
//!   from step length 2d onto d while doubling K ([`rescaled_params`])
//!   reproduces every kick exactly;
//! * every trajectory draws from its own RNG substream keyed by
//!   (seed, tilt index, trajectory index), so scans are bit-reproducible
//!   at any thread count.
//!
//! Everything runs in model units: lengths in lattice spacings, angles in
//! radians.

mod params;
mod rng;
mod stats;
mod transport;

pub use params::{
    default_mass, rescaled_params, ChannelParams, OffsetModel, RowLattice, DEFAULT_COUPLING,
    DEFAULT_N_STEPS, DEFAULT_N_TILTS, DEFAULT_N_TRAJ, DEFAULT_SEED, DEFAULT_THETA_ACCEPTANCE,
    DEFAULT_TILT_MAX,
};
pub use rng::substream_rng;
pub use stats::{dip_statistics, DipStats, TransmissionPoint};
pub use transport::{
    is_transmitted, propagate_observed, propagate_trajectory, step_deflection,
    symmetric_tilt_grid, transmission_scan, KickRecord, TrajectoryState,
};
