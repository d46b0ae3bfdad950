//! Quantum Fisher information of Gaussian probe states under Gaussian
//! unitary channels, in the complex (ladder-operator) phase-space form.

pub mod error;
pub mod exec;
pub mod linalg;
pub mod phase_space;
pub mod engine;
pub mod channel;
pub mod probe;
pub mod qfi;
pub mod closed_forms;
pub mod optimize;
pub mod fock;
pub mod validate;

pub use error::{Error, Result};
pub use exec::Exec;
