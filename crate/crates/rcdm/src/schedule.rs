//! Diffusion time discretization and per-step coefficients.
//!
//! A [`NoiseSchedule`] owns the β_t / α_t / ᾱ_t / σ_t tables that drive the
//! forward noising process, the reverse samplers, and the propagation
//! analysis. Steps are indexed 1..=T to match the usual recurrence
//! x_t = √ᾱ_t x₀ + √(1−ᾱ_t) ε; ᾱ_0 is defined as 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Construction parameters for a linear schedule. This is the only part of a
/// schedule that is ever persisted; the derived tables are always recomputed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleParams {
    /// Number of diffusion steps T.
    #[serde(rename = "T")]
    pub steps: usize,
    pub beta_start: f64,
    pub beta_end: f64,
}

impl ScheduleParams {
    pub fn build(&self) -> Result<NoiseSchedule> {
        NoiseSchedule::linear(self.steps, self.beta_start, self.beta_end)
    }
}

impl Default for ScheduleParams {
    /// T = 200, β from 1e-4 to 0.02: enough steps for bias amplification to
    /// be visible while keeping experiments desk-scale.
    fn default() -> Self {
        Self {
            steps: 200,
            beta_start: 1e-4,
            beta_end: 0.02,
        }
    }
}

/// Per-step noise tables. Immutable after construction; cheap to share.
///
/// Invariants enforced at construction:
/// - 0 < β_t < 1 and β non-decreasing (so α non-increasing),
/// - ᾱ_t = ᾱ_{t−1}·α_t strictly decreasing, ᾱ_T ∈ (0,1),
/// - σ_t = √β_t (variances of forward and reverse kept synchronized).
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSchedule {
    params: ScheduleParams,
    beta: Vec<f64>,
    alpha: Vec<f64>,
    alpha_bar: Vec<f64>,
    sigma: Vec<f64>,
}

impl NoiseSchedule {
    /// Linear β schedule from `beta_start` to `beta_end` inclusive over `steps`
    /// steps. With `steps == 1` the single β is `beta_start`.
    pub fn linear(steps: usize, beta_start: f64, beta_end: f64) -> Result<Self> {
        if steps == 0 {
            return Err(Error::InvalidSchedule("step count must be >= 1".into()));
        }
        if !(beta_start.is_finite() && beta_end.is_finite()) {
            return Err(Error::InvalidSchedule("betas must be finite".into()));
        }
        if beta_start <= 0.0 || beta_end >= 1.0 {
            return Err(Error::InvalidSchedule(format!(
                "betas must satisfy 0 < beta_start <= beta_end < 1, got [{beta_start}, {beta_end}]"
            )));
        }
        if beta_start > beta_end {
            return Err(Error::InvalidSchedule(format!(
                "beta_start {beta_start} > beta_end {beta_end}"
            )));
        }

        let beta: Vec<f64> = if steps == 1 {
            vec![beta_start]
        } else {
            (0..steps)
                .map(|i| beta_start + (beta_end - beta_start) * i as f64 / (steps - 1) as f64)
                .collect()
        };
        let alpha: Vec<f64> = beta.iter().map(|b| 1.0 - b).collect();
        let mut alpha_bar = Vec::with_capacity(steps);
        let mut prod = 1.0;
        for a in &alpha {
            prod *= a;
            alpha_bar.push(prod);
        }
        let sigma: Vec<f64> = beta.iter().map(|b| b.sqrt()).collect();

        let s = Self {
            params: ScheduleParams {
                steps,
                beta_start,
                beta_end,
            },
            beta,
            alpha,
            alpha_bar,
            sigma,
        };
        s.check_invariants()?;
        Ok(s)
    }

    fn check_invariants(&self) -> Result<()> {
        for w in self.beta.windows(2) {
            if w[1] < w[0] {
                return Err(Error::InvalidSchedule("beta must be non-decreasing".into()));
            }
        }
        for w in self.alpha_bar.windows(2) {
            if w[1] >= w[0] {
                return Err(Error::InvalidSchedule(
                    "alpha_bar must be strictly decreasing".into(),
                ));
            }
        }
        let last = *self.alpha_bar.last().expect("non-empty");
        if !(0.0 < last && last < 1.0) {
            return Err(Error::InvalidSchedule(format!(
                "alpha_bar[T] = {last} escaped (0,1)"
            )));
        }
        Ok(())
    }

    pub fn params(&self) -> ScheduleParams {
        self.params
    }

    /// Number of steps T.
    pub fn steps(&self) -> usize {
        self.beta.len()
    }

    fn idx(&self, t: usize) -> usize {
        assert!(
            t >= 1 && t <= self.steps(),
            "step index {t} out of range 1..={}",
            self.steps()
        );
        t - 1
    }

    pub fn beta(&self, t: usize) -> f64 {
        self.beta[self.idx(t)]
    }

    pub fn alpha(&self, t: usize) -> f64 {
        self.alpha[self.idx(t)]
    }

    /// ᾱ_t = ∏_{s<=t} α_s, with ᾱ_0 ≡ 1.
    pub fn alpha_bar(&self, t: usize) -> f64 {
        if t == 0 {
            1.0
        } else {
            self.alpha_bar[self.idx(t)]
        }
    }

    /// Reverse-step noise scale σ_t = √β_t.
    pub fn sigma(&self, t: usize) -> f64 {
        self.sigma[self.idx(t)]
    }

    /// √(1 − ᾱ_t), the standard deviation of the noise term in the forward
    /// marginal.
    pub fn beta_bar(&self, t: usize) -> f64 {
        (1.0 - self.alpha_bar(t)).sqrt()
    }

    fn check_step(&self, t: usize) -> Result<()> {
        if t < 1 || t > self.steps() {
            return Err(Error::StepOutOfRange {
                t,
                t_max: self.steps(),
            });
        }
        Ok(())
    }

    /// Forward marginal draw: √ᾱ_t·x0 + √(1−ᾱ_t)·eps, elementwise.
    pub fn forward_sample(&self, x0: &[f64], t: usize, eps: &[f64]) -> Result<Vec<f64>> {
        self.check_step(t)?;
        if x0.len() != eps.len() {
            return Err(Error::DimensionMismatch {
                left: x0.len(),
                right: eps.len(),
            });
        }
        let signal = self.alpha_bar(t).sqrt();
        let noise = self.beta_bar(t);
        Ok(x0
            .iter()
            .zip(eps)
            .map(|(x, e)| signal * x + noise * e)
            .collect())
    }
}
