//! Runtime-selectable dephasing-rate models.
//!
//! Each temperature regime of the rate computation sits behind the common
//! [`RateModel`] trait and is registered under a stable name, so front ends
//! can pick the evaluation route from configuration. The underlying
//! functions in [`crate::dephasing`] stay directly callable; this layer only
//! adds the name-keyed dispatch.

use std::fmt;
use std::sync::Arc;

use crate::dephasing::{
    gamma_finite_t_exact, gamma_high_t, gamma_low_t, gamma_low_t_quadratic, gamma_zero_t,
    gamma_zero_t_oracle, DephasingOutcome, RegimeTag,
};
use crate::error::{Error, Result};
use crate::mathkern::QuadratureSpec;

/// A strategy for evaluating the dephasing exponent at `(s, tau, T)`.
pub trait RateModel: Send + Sync {
    /// Registry key; also the CLI spelling.
    fn name(&self) -> &'static str;

    /// One-line human description for listings.
    fn describe(&self) -> &'static str;

    /// Whether the model is meaningful at this temperature.
    fn supports_temperature(&self, temperature: f64) -> bool;

    fn evaluate(&self, s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome>;
}

struct ZeroTempClosedForm;

impl RateModel for ZeroTempClosedForm {
    fn name(&self) -> &'static str {
        "zero-t"
    }

    fn describe(&self) -> &'static str {
        "closed form of the zero-temperature exponent"
    }

    fn supports_temperature(&self, temperature: f64) -> bool {
        temperature == 0.0
    }

    fn evaluate(&self, s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
        if temperature != 0.0 {
            return Err(Error::domain(
                "rate model zero-t",
                format!("closed form only covers T = 0, got T = {temperature}"),
            ));
        }
        gamma_zero_t(s, tau)
    }
}

struct ExactQuadrature {
    spec: QuadratureSpec,
}

impl RateModel for ExactQuadrature {
    fn name(&self) -> &'static str {
        "exact"
    }

    fn describe(&self) -> &'static str {
        "adaptive quadrature of the thermal integrand (any T >= 0)"
    }

    fn supports_temperature(&self, _temperature: f64) -> bool {
        true
    }

    fn evaluate(&self, s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
        if temperature == 0.0 {
            let gamma = gamma_zero_t_oracle(s, tau, &self.spec)?;
            let h = 1e-5;
            let up = gamma_zero_t_oracle(s + h, tau, &self.spec)?;
            let down = gamma_zero_t_oracle(s - h, tau, &self.spec)?;
            return Ok(DephasingOutcome {
                gamma,
                dgamma_ds: (up - down) / (2.0 * h),
                regime_tag: RegimeTag::ExactQuadrature,
            });
        }
        gamma_finite_t_exact(s, tau, temperature, &self.spec)
    }
}

struct LowTempTwoTerm;

impl RateModel for LowTempTwoTerm {
    fn name(&self) -> &'static str {
        "low-t"
    }

    fn describe(&self) -> &'static str {
        "two-term low-temperature expansion"
    }

    fn supports_temperature(&self, temperature: f64) -> bool {
        temperature > 0.0
    }

    fn evaluate(&self, s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
        gamma_low_t(s, tau, temperature)
    }
}

struct LowTempQuadratic;

impl RateModel for LowTempQuadratic {
    fn name(&self) -> &'static str {
        "low-t-quadratic"
    }

    fn describe(&self) -> &'static str {
        "low-temperature expansion with quadratic-in-time correction"
    }

    fn supports_temperature(&self, temperature: f64) -> bool {
        temperature >= 0.0
    }

    fn evaluate(&self, s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
        gamma_low_t_quadratic(s, tau, temperature)
    }
}

struct HighTempLeading;

impl RateModel for HighTempLeading {
    fn name(&self) -> &'static str {
        "high-t"
    }

    fn describe(&self) -> &'static str {
        "leading high-temperature form 2T * gamma at spectral index s - 1"
    }

    fn supports_temperature(&self, temperature: f64) -> bool {
        temperature > 0.0
    }

    fn evaluate(&self, s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
        gamma_high_t(s, tau, temperature)
    }
}

/// Name-keyed collection of the built-in rate models.
pub struct RateRegistry {
    models: Vec<Arc<dyn RateModel>>,
}

impl RateRegistry {
    /// All built-in models.
    pub fn builtin() -> Self {
        RateRegistry {
            models: vec![
                Arc::new(ZeroTempClosedForm),
                Arc::new(ExactQuadrature {
                    spec: QuadratureSpec::default(),
                }),
                Arc::new(LowTempTwoTerm),
                Arc::new(LowTempQuadratic),
                Arc::new(HighTempLeading),
            ],
        }
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn RateModel>> {
        self.models
            .iter()
            .find(|m| m.name() == name)
            .cloned()
            .ok_or_else(|| Error::UnknownRateModel {
                name: name.to_string(),
                available: self.names().collect::<Vec<_>>().join(", "),
            })
    }

    /// Resolve a model name, where `"auto"` picks the exact route for the
    /// given temperature: the closed form at T = 0, quadrature otherwise.
    pub fn resolve(&self, name: &str, temperature: f64) -> Result<Arc<dyn RateModel>> {
        if name == "auto" {
            let target = if temperature == 0.0 {
                "zero-t"
            } else {
                "exact"
            };
            return self.get(target);
        }
        self.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.models.iter().map(|m| m.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn RateModel>> {
        self.models.iter()
    }
}

impl Default for RateRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl fmt::Debug for RateRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RateRegistry")
            .field("models", &self.names().collect::<Vec<_>>())
            .finish()
    }
}
