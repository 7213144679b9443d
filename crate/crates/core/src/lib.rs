//! Kinematics and transport for electrons channeling along an atomic row.
//!
//! The crate has three layers, one per physical question:
//!
//! * [`relkin`] — special-relativistic bookkeeping for a particle whose
//!   internal phase advances at ν = m₀c²/h: the dimensionless resonance
//!   parameter α for a given lattice advance, the (β, γ) pair it implies,
//!   the lab-frame periods, and the effective-mass ratio used to compare a
//!   measured resonance energy against the predicted one.
//! * [`dirac`] — free-particle Dirac dynamics in the Dirac–Pauli
//!   representation. Heisenberg-picture expectation values (position,
//!   ⟨β⟩, accumulated phase) evaluated in closed form per momentum mode,
//!   plus an independent brute-force evolution oracle used to cross-check
//!   them.
//! * [`channeling`] — a minimal Monte Carlo model of transmission through
//!   an aligned atomic row: quartic deflection kicks, tilt scans, and dip
//!   statistics (depth, width, significance).
//!
//! All numerical code is generic over the floating-point scalar via
//! [`scalar::Real`]; `f64` aliases for the main types are exported at the
//! crate root. The command-line front end uses the `f64` instantiations.

pub mod channeling;
pub mod consts;
pub mod dirac;
pub mod error;
pub mod relkin;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` instantiations of the core types.
pub type PhysicalConstants64 = consts::PhysicalConstants<f64>;
pub type ResonanceSetup64 = relkin::ResonanceSetup<f64>;
pub type ResonanceResult64 = relkin::ResonanceResult<f64>;
pub type LabPeriods64 = relkin::LabPeriods<f64>;
pub type Matrix4c64 = dirac::Matrix4<f64>;
pub type Spinor4c64 = dirac::Spinor4<f64>;
pub type MomentumMode64 = dirac::MomentumMode<f64>;
pub type WavePacket64 = dirac::WavePacket<f64>;
pub type PacketSpec64 = dirac::PacketSpec<f64>;
pub type TrajectorySample64 = dirac::TrajectorySample<f64>;
pub type ChannelParams64 = channeling::ChannelParams<f64>;
pub type TrajectoryState64 = channeling::TrajectoryState<f64>;
pub type TransmissionPoint64 = channeling::TransmissionPoint<f64>;
pub type DipStats64 = channeling::DipStats<f64>;
