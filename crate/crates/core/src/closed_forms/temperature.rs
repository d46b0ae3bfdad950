use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemperatureChannel {
    Phase,
    Squeeze,
}

/// Left minus right side of the stationarity condition in `λ₁` for the
/// optimally oriented probe: `λ³/(λ²+1)² − |d|² e^{2r} / (2 h²(2r))`, with
/// `h = sinh` for the phase channel and `cosh` for squeezing.
pub fn optimal_temperature_residual(channel: TemperatureChannel, lambda1: f64, r: f64, d_mag: f64) -> Result<f64> {
    if !(lambda1 >= 1.0) {
        return Err(Error::InvalidInput(format!("λ₁ = {lambda1} < 1")));
    }
    let h = match channel {
        TemperatureChannel::Phase => {
            if r == 0.0 {
                return Err(Error::InvalidInput("phase-channel condition needs r ≠ 0".into()));
            }
            (2.0 * r).sinh()
        }
        TemperatureChannel::Squeeze => (2.0 * r).cosh(),
    };
    let lhs = lambda1.powi(3) / (lambda1 * lambda1 + 1.0).powi(2);
    Ok(lhs - d_mag * d_mag * (2.0 * r).exp() / (2.0 * h * h))
}

const BRACKET: (f64, f64) = (1.0, 1e3);
const SCAN_POINTS: usize = 4096;

/// Every sign change of the residual on `[1, 10³]`, refined by bisection.
pub fn optimal_temperature_roots(channel: TemperatureChannel, r: f64, d_mag: f64) -> Result<Vec<f64>> {
    let f = |l: f64| optimal_temperature_residual(channel, l, r, d_mag);
    let (lo, hi) = BRACKET;
    let grid: Vec<f64> =
        (0..=SCAN_POINTS).map(|i| lo * (hi / lo).powf(i as f64 / SCAN_POINTS as f64)).collect();
    let mut roots = Vec::new();
    let mut prev = (grid[0], f(grid[0])?);
    for &x in &grid[1..] {
        let fx = f(x)?;
        if prev.1 == 0.0 {
            roots.push(prev.0);
        } else if prev.1.signum() != fx.signum() && fx != 0.0 {
            let (mut a, mut b, mut fa) = (prev.0, x, prev.1);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                let fm = f(m)?;
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
                if b - a <= 4.0 * f64::EPSILON * m {
                    break;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev = (x, fx);
    }
    if roots.is_empty() {
        return Err(Error::NoInteriorOptimum { lo, hi });
    }
    Ok(roots)
}
