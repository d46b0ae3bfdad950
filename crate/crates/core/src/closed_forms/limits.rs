use serde::Serialize;

/// Channels with tabulated limits: `R`, `S`, `B`, `S_T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LimitChannel {
    Phase,
    Squeeze,
    Mix,
    TwoModeSqueeze,
}

impl LimitChannel {
    pub const ALL: [LimitChannel; 4] =
        [LimitChannel::Phase, LimitChannel::Squeeze, LimitChannel::Mix, LimitChannel::TwoModeSqueeze];

    pub fn label(self) -> &'static str {
        match self {
            LimitChannel::Phase => "R",
            LimitChannel::Squeeze => "S",
            LimitChannel::Mix => "B",
            LimitChannel::TwoModeSqueeze => "S_T",
        }
    }
}

/// Heisenberg and shot-noise scalings of one channel.
#[derive(Debug, Clone, Copy)]
pub struct LimitTable {
    pub channel: LimitChannel,
    pub heisenberg: fn(f64) -> f64,
    pub shotnoise: fn(f64) -> f64,
}

pub fn limit_table(channel: LimitChannel) -> LimitTable {
    let (heisenberg, shotnoise): (fn(f64) -> f64, fn(f64) -> f64) = match channel {
        LimitChannel::Phase => (|n| 8.0 * n * (n + 1.0), |n| 4.0 * n),
        LimitChannel::Squeeze => (|n| 2.0 * (2.0 * n + 1.0).powi(2), |n| 2.0 * (2.0 * n + 1.0)),
        LimitChannel::Mix => (|n| 4.0 * n * (n + 2.0), |n| 4.0 * n),
        LimitChannel::TwoModeSqueeze => (|n| 4.0 * (n + 1.0).powi(2), |n| 4.0 * (n + 1.0)),
    };
    LimitTable { channel, heisenberg, shotnoise }
}
