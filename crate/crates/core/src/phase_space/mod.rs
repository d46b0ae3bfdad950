//! Complex-form phase-space data model.
//!
//! States are stored through their independent blocks only: the displacement
//! `d̃` (N entries) and the covariance blocks `X` (Hermitian) and `Y`
//! (symmetric). The full 2N vectors and 2N×2N matrices are assembled on
//! demand, so the conjugate-pair structure holds exactly by construction.
//!
//! Conventions: vacuum covariance is the identity, ladder ordering is
//! `(a_1..a_N, a_1†..a_N†)`, and the real form uses `(x_1..x_N, p_1..p_N)`.

mod json;
mod real_form;
mod state;
mod symplectic;

pub use real_form::{complex_to_real, real_to_complex, symplectic_to_real, RealMoments};
pub use state::{
    make_k, mean_photon_number, validate_moments, validate_state, validate_state_with,
    GaussianState, KMatrix, Tolerances, ValidationReport, Violation,
};
pub use symplectic::{GeneratorW, SymplecticMatrix, WilliamsonForm};
