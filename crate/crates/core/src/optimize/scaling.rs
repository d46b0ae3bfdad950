//! Scaling-exponent fits and the all-into-squeezing evidence report.

use serde::{Deserialize, Serialize};

use super::{optimize_probe, Constraint, EnergyBudget, Family, ModeSplit, OptimizerConfig};
use crate::channel::ChannelSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    OptimalSqueezing,
    CoherentOnly,
}

impl Strategy {
    fn constraint(self) -> Constraint {
        match self {
            Strategy::OptimalSqueezing => Constraint::SqueezingOnly,
            Strategy::CoherentOnly => Constraint::CoherentOnly,
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "optimal-squeezing" => Ok(Strategy::OptimalSqueezing),
            "coherent-only" => Ok(Strategy::CoherentOnly),
            _ => Err(Error::InvalidInput(format!("unknown strategy '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingFit {
    pub exponent: f64,
    pub prefactor: f64,
    /// `(n, H)` over the whole grid, ascending in `n`.
    pub points: Vec<(f64, f64)>,
    /// Number of largest-`n` points used in the fit.
    pub fit_points: usize,
}

fn check_grid(n_grid: &[f64]) -> Result<Vec<f64>> {
    let mut g = n_grid.to_vec();
    if g.iter().any(|n| !n.is_finite() || *n <= 0.0) {
        return Err(Error::DegenerateBudget("grid photon numbers must be positive".into()));
    }
    g.sort_by(f64::total_cmp);
    g.dedup();
    Ok(g)
}

/// Least-squares slope of `ln H` against `ln n` over the upper half of the grid.
pub fn scaling_exponent(
    channel: &ChannelSpec,
    family: Family,
    strategy: Strategy,
    n_grid: &[f64],
    config: &OptimizerConfig,
) -> Result<ScalingFit> {
    let grid = check_grid(n_grid)?;
    if grid.len() < 4 || grid[grid.len() - 1] < 10.0 * grid[0] {
        return Err(Error::InvalidInput("grid needs at least 4 points spanning a decade".into()));
    }
    let budget = |n: f64| EnergyBudget::new(n).with_constraint(strategy.constraint());
    let hs = config
        .exec
        .map(&grid, |&n| optimize_probe(channel, family, &budget(n), config).map(|r| r.best_qfi));
    let mut points = Vec::with_capacity(grid.len());
    for (n, h) in grid.iter().zip(hs) {
        let h = h?;
        if !(h > 0.0) {
            return Err(Error::InvalidFamily(format!("QFI {h} at n = {n} is not positive")));
        }
        points.push((*n, h));
    }
    let tail = &points[points.len() / 2..];
    let m = tail.len() as f64;
    let xs: Vec<f64> = tail.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = tail.iter().map(|p| p.1.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / m, ys.iter().sum::<f64>() / m);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let exponent = sxy / sxx;
    let fit_points = tail.len();
    Ok(ScalingFit { exponent, prefactor: (my - exponent * mx).exp(), points, fit_points })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: f64,
    pub best_qfi: f64,
    pub splits: Vec<ModeSplit>,
    /// Some mode keeps more than `threshold` of its energy outside squeezing.
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub threshold: f64,
    pub rows: Vec<ConjectureRow>,
    pub flagged: usize,
    pub note: String,
}

/// Records where the free optimizer puts the energy at each `n`.
pub fn conjecture_probe(
    channel: &ChannelSpec,
    family: Family,
    n_grid: &[f64],
    config: &OptimizerConfig,
) -> Result<ConjectureReport> {
    let grid = check_grid(n_grid)?;
    let threshold = 1e-3;
    let mut rows = Vec::with_capacity(grid.len());
    for &n in &grid {
        let r = optimize_probe(channel, family, &EnergyBudget::new(n), config)?;
        let flagged = r.splits.iter().any(|s| s.f_d > threshold || s.f_th > threshold);
        rows.push(ConjectureRow { n, best_qfi: r.best_qfi, splits: r.splits, flagged });
    }
    let flagged = rows.iter().filter(|r| r.flagged).count();
    let note = if flagged == 0 {
        "no counterexample found on this grid; numerical evidence only".to_string()
    } else {
        format!("{flagged} grid point(s) keep energy outside squeezing at the best point found")
    };
    Ok(ConjectureReport { threshold, rows, flagged, note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{mix_channel, phase_channel};

    fn cfg() -> OptimizerConfig {
        OptimizerConfig { restarts: 4, ..OptimizerConfig::default() }
    }

    #[test]
    fn phase_exponents() {
        let grid: Vec<f64> = (1..=64).map(f64::from).collect();
        let sq = scaling_exponent(&phase_channel(), Family::OneMode, Strategy::OptimalSqueezing, &grid, &cfg()).unwrap();
        assert!((sq.exponent - 2.0).abs() < 0.05, "{}", sq.exponent);
        let co = scaling_exponent(&phase_channel(), Family::OneMode, Strategy::CoherentOnly, &grid, &cfg()).unwrap();
        assert!((co.exponent - 1.0).abs() < 0.05, "{}", co.exponent);
    }

    #[test]
    fn grid_validation() {
        let e = scaling_exponent(&phase_channel(), Family::OneMode, Strategy::CoherentOnly, &[1.0, 2.0, 3.0, 4.0], &cfg());
        assert!(matches!(e, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn conjecture_rows() {
        let rep = conjecture_probe(&phase_channel(), Family::OneMode, &[0.5, 1.0, 2.0, 4.0], &cfg()).unwrap();
        assert_eq!(rep.flagged, 0);
        let rep = conjecture_probe(&mix_channel(0.2), Family::TwoModeSeparable, &[2.0], &cfg()).unwrap();
        assert_eq!(rep.flagged, 0);
        assert!((rep.rows[0].best_qfi - 32.0).abs() < 1e-6);
    }
}
