//! Named Gaussian unitary channels as per-unit generators and as explicit
//! symplectic matrices.

mod catalog;
mod config;
pub mod matrices;

pub use catalog::{
    channel_symplectic, channel_symplectic_generic, combined_channel, custom_channel, mix_channel,
    phase_channel, squeeze_channel, squeeze_on_mode_channel, twomode_squeeze_channel, ChannelKind,
    ChannelSpec,
};
pub use config::ChannelConfig;
