//! Mode adjustment and linear fitness scaling.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::objectives::Mode;

/// Fitness transform applied before selection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FitnessScaling {
    None,
    /// Classic linear scaling with target best-to-average ratio `c_mult`.
    Linear { c_mult: f64 },
}

impl FitnessScaling {
    pub const DEFAULT_C_MULT: f64 = 2.0;

    pub fn linear() -> Self {
        FitnessScaling::Linear {
            c_mult: Self::DEFAULT_C_MULT,
        }
    }
}

impl fmt::Display for FitnessScaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitnessScaling::None => f.write_str("none"),
            FitnessScaling::Linear { c_mult } => write!(f, "linear:{c_mult}"),
        }
    }
}

impl FromStr for FitnessScaling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "none" {
            return Ok(FitnessScaling::None);
        }
        if s == "linear" {
            return Ok(FitnessScaling::linear());
        }
        if let Some(c) = s.strip_prefix("linear:") {
            if let Ok(c_mult) = c.parse::<f64>() {
                return Ok(FitnessScaling::Linear { c_mult });
            }
        }
        Err(Error::UnknownOperator {
            name: s.to_string(),
            valid: "none, linear[:<c>]".to_string(),
        })
    }
}

/// Turn raw objective values into fitness where larger is always better:
/// identity for maximization, negation for minimization.
pub fn adjust_fitness(raw: &[f64], mode: Mode) -> Vec<f64> {
    match mode {
        Mode::Maximum => raw.to_vec(),
        Mode::Minimum => raw.iter().map(|&v| -v).collect(),
    }
}

/// Classic linear fitness scaling: an affine map that keeps the average and
/// stretches the best to `c_mult` times the average; when that would push the
/// minimum below zero, the map is recomputed to pin the minimum at zero while
/// still keeping the average. All outputs are nonnegative and the argmax is
/// preserved.
///
/// All-equal input degenerates to the common value (or to ones when that
/// value is not positive). Inputs with a non-positive mean are first
/// translated so their minimum is zero; proportional-selection weights are
/// only meaningful up to that baseline anyway.
pub fn linear_scale(fitness: &[f64], c_mult: f64) -> Vec<f64> {
    assert!(c_mult > 1.0, "c_mult must exceed 1");
    assert!(!fitness.is_empty());
    let n = fitness.len() as f64;
    let avg = fitness.iter().sum::<f64>() / n;
    let max = fitness.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = fitness.iter().copied().fold(f64::INFINITY, f64::min);

    if max == min {
        return if avg > 0.0 {
            vec![avg; fitness.len()]
        } else {
            vec![1.0; fitness.len()]
        };
    }
    if avg <= 0.0 {
        let shifted: Vec<f64> = fitness.iter().map(|&v| v - min).collect();
        return linear_scale(&shifted, c_mult);
    }

    let mut a = (c_mult - 1.0) * avg / (max - avg);
    let mut b = avg * (1.0 - a);
    if a * min + b < 0.0 {
        a = avg / (avg - min);
        b = -a * min;
    }
    fitness.iter().map(|&v| a * v + b).collect()
}
