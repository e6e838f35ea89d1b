//! Spectral analysis, modal dynamics, and actuator-placement certification for
//! a simply supported Euler–Bernoulli beam carrying a spring–mass shaker at an
//! interior point and a set of distributed piezo actuators under velocity
//! feedback.
//!
//! The crate is `no_std` (with `alloc`): it contains the numerical model only.
//! Configuration files, CSV export, and the command-line front end live in the
//! companion `flexbeam` crate.
//!
//! Organization:
//! - [`model`]: physical parameters, validation, actuator profiles, quadrature;
//! - [`spectral`]: frequency equations, root scanning, mode shapes, counting
//!   diagnostics;
//! - [`dynamics`]: closed-loop modal assembly, implicit-midpoint integration,
//!   spectral abscissa;
//! - [`cert`]: Lyapunov energy, placement certification, and numeric oracles
//!   for the analytic side results (determinant sign, Poincaré inequality,
//!   counting bound).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub use nalgebra;

pub mod cert;
pub mod dynamics;
pub mod model;
pub mod spectral;

mod linalg;

pub use cert::{
    certify_placement, decay_rate_estimate, det_k_check, lemma3_bound_check, lyapunov_v_modal,
    lyapunov_v_physical, midpoint_dissipation, poincare_check, CertificationReport, DecayFit,
    DetKCheck, Lemma3Check, ModeRecord, PoincareCheck,
};
pub use dynamics::{
    assemble, feedback, project_profile, simulate, spectral_abscissa, ClosedLoopSystem,
    ModalState, Projection, Propagator, SpectralAbscissa, Trajectory,
};
pub use model::{
    actuator_profile, integrate, validate_system, Actuator, BeamSystem, QuadratureRule,
    ValidationReport, Violation,
};
pub use spectral::{
    counting_function, eigenvalue_growth_check, find_roots, find_roots_with, mode_shape,
    period_phi0, phi0, phi_full, window_count, GrowthFit, ModalBasis, ModeShape, RootScan,
    RootScanOptions,
};

/// Library-level error type shared by fallible operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Parameters violate a model constraint (validation report attached as text).
    InvalidSystem(alloc::string::String),
    /// A root passed to mode construction does not solve the frequency equation.
    NotARoot { mu: f64, residual: f64 },
    /// Two smallest singular values both below tolerance: suspected multiple root.
    NearMultipleRoot { mu: f64 },
    /// Requested more modes than the scan produced.
    NotEnoughModes { requested: usize, available: usize },
    /// Basis failed the generalized-orthogonality self test.
    BasisNotOrthogonal { max_deviation: f64 },
    /// Linear solve failed inside the integrator (singular step matrix).
    SingularStep,
    /// Eigenvalue iteration failed to converge.
    EigenFailed,
    /// Degenerate input to the period formula (2·p1 == p2, i.e. l0 = l/2).
    DegeneratePeriod,
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::InvalidSystem(msg) => write!(f, "invalid system: {msg}"),
            Error::NotARoot { mu, residual } => {
                write!(f, "mu = {mu} is not a root (residual {residual:e})")
            }
            Error::NearMultipleRoot { mu } => {
                write!(f, "suspected multiple root near mu = {mu}")
            }
            Error::NotEnoughModes {
                requested,
                available,
            } => write!(f, "requested {requested} modes, scan found {available}"),
            Error::BasisNotOrthogonal { max_deviation } => {
                write!(f, "basis orthogonality deviation {max_deviation:e} exceeds tolerance")
            }
            Error::SingularStep => write!(f, "singular linear system in integrator step"),
            Error::EigenFailed => write!(f, "eigenvalue iteration did not converge"),
            Error::DegeneratePeriod => {
                write!(f, "period formula degenerate: 2*p1 == p2 (l0 = l/2)")
            }
        }
    }
}

impl core::error::Error for Error {}
