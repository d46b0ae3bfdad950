//! Symplectic engine: `S = e^{iKW}`, the displacement integral `b`,
//! Williamson decomposition and Euler composition.

mod displacement;
mod euler;
mod expm;
mod williamson;

pub use displacement::{displacement_shift, displacement_shift_closed_form, displacement_shift_series};
pub use euler::{euler_compose, EulerFactors};
pub use expm::{exp_generator, expm_pade13, expm_reference};
pub use williamson::{williamson, williamson_state};
