//! Scale parameters: every checker states the truncation it ran at.

use serde::{Deserialize, Serialize};

use crate::errors::{DynError, DynResult};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleConfig {
    /// Orbit length bound N.
    pub horizon: u32,
    /// Resolution for candidate points and cover bases.
    pub grid: Rational,
    /// Separation thresholds, strictly decreasing.
    pub delta_sweep: Vec<Rational>,
    /// Neighborhood radii, strictly decreasing.
    pub epsilon_list: Vec<Rational>,
    /// Radius of the ball basis used by transitivity checks.
    pub basis_radius: Rational,
    /// Largest period searched by the periodic-density checker.
    pub max_period: u32,
    /// Seed for pseudo-orbit and perturbation generation.
    pub seed: u64,
    /// Sampled pseudo-orbits per strategy and delta.
    pub pseudo_orbits_per_strategy: u32,
    /// Perturbations sampled per delta by the stability checkers.
    pub perturbation_budget: u32,
    /// Two-sided window half-length for stability tracing.
    pub window: u32,
    /// Cap on interval-list length in trace computations.
    pub interval_cap: usize,
    /// Cap on iterate breakpoint growth.
    pub breakpoint_cap: usize,
}

impl Default for ScaleConfig {
    fn default() -> Self {
        ScaleConfig {
            horizon: 200,
            grid: Rational::pow2(-12),
            delta_sweep: vec![
                Rational::pow2(-2),
                Rational::pow2(-4),
                Rational::pow2(-6),
                Rational::pow2(-8),
                Rational::pow2(-10),
            ],
            epsilon_list: (3..=8).map(|j| Rational::pow2(-j)).collect(),
            basis_radius: Rational::pow2(-5),
            max_period: 12,
            seed: 0x0bea_7ab1e,
            pseudo_orbits_per_strategy: 4,
            perturbation_budget: 32,
            window: 100,
            interval_cap: 4096,
            breakpoint_cap: 1_000_000,
        }
    }
}

impl ScaleConfig {
    pub fn validate(&self) -> DynResult<()> {
        if self.horizon < 1 {
            return Err(DynError::Domain("horizon must be at least 1".into()));
        }
        if !self.grid.is_positive() {
            return Err(DynError::Domain("grid must be positive".into()));
        }
        for list in [&self.delta_sweep, &self.epsilon_list] {
            if list.is_empty() {
                return Err(DynError::Domain("empty threshold list".into()));
            }
            for w in list.windows(2) {
                if w[0] <= w[1] {
                    return Err(DynError::Domain(
                        "threshold lists must strictly decrease".into(),
                    ));
                }
            }
            if !list[list.len() - 1].is_positive() {
                return Err(DynError::Domain("thresholds must be positive".into()));
            }
        }
        Ok(())
    }

    pub fn max_delta(&self) -> &Rational {
        &self.delta_sweep[0]
    }

    pub fn min_epsilon(&self) -> &Rational {
        &self.epsilon_list[self.epsilon_list.len() - 1]
    }

    pub fn max_epsilon(&self) -> &Rational {
        &self.epsilon_list[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        ScaleConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_unsorted_sweep() {
        let mut cfg = ScaleConfig::default();
        cfg.delta_sweep.reverse();
        assert!(cfg.validate().is_err());
    }
}
