//! Free-particle Dirac dynamics in the standard (Dirac–Pauli) representation.
//!
//! Internally the module works in natural units: ħ = c = 1 with energies
//! measured in units of the rest energy m₀c².  Momenta enter as p̃ = pc/m₀c²,
//! times are in ħ/m₀c², and lengths in reduced Compton wavelengths ħc/m₀c².
//! Conversions to seconds and femtometres happen only at boundaries that
//! explicitly take a [`crate::consts::PhysicalConstants`].
//!
//! Layers:
//!
//! * [`linalg`] — 4×4 complex matrices and spinors, plus a cyclic Jacobi
//!   eigensolver for Hermitian matrices.
//! * [`algebra`] — the Dirac matrices, mode Hamiltonians, and energy
//!   projectors.
//! * [`packet`] — momentum modes and wave packets with a controllable
//!   negative-energy admixture.
//! * [`dynamics`] — closed-form Heisenberg-picture position, velocity, and
//!   phase expectations, and the coincidence times at which the position
//!   expectation rejoins the uniform-motion line.
//! * [`oracle`] — direct unitary evolution used to cross-check the closed
//!   forms, plus diagnostics for the exp(−iHτ) symmetry operation.

pub mod algebra;
pub mod dynamics;
pub mod linalg;
pub mod oracle;
pub mod packet;

pub use algebra::{dirac_matrices, energy_projectors, hamiltonian, mode_energy, DiracMatrices};
pub use dynamics::{
    coincidence_times, coincidence_times_natural, mean_mode_energy, trajectory_expectation,
    TrajectorySample,
};
pub use linalg::{eigen_hermitian, hermitian_function, HermitianEigen, Matrix4, Spinor4};
pub use oracle::{evolution_operator, evolve_oracle, symmetry_check, OracleSample, SymmetryCheck};
pub use packet::{build_packet, MomentumMode, PacketSpec, WavePacket};
