//! Dephasing exponents for the Ohmic-like bath in all temperature regimes,
//! plus the pure-dephasing channel on a d-level probe.
//!
//! The spectral density is a power law with exponent `s` under an exponential
//! cutoff; time `tau` and temperature `T` are dimensionless (units of the
//! inverse cutoff frequency and the cutoff frequency respectively).

mod channel;

pub use channel::{
    apply_dephasing, coherence, residual_coherence_equispaced, ProbeState, QubitPreparation,
};

use crate::error::{Error, Result};
use crate::mathkern::{self, integrate_semi_infinite_with_breaks, ln_gamma, QuadratureSpec};

/// Ohmicity class of the bath spectral density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OhmicRegime {
    SubOhmic,
    Ohmic,
    SuperOhmic,
}

/// Bath parameters: spectral exponent and temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathModel {
    s: f64,
    temperature: f64,
}

impl BathModel {
    pub fn new(s: f64, temperature: f64) -> Result<Self> {
        if !s.is_finite() || s <= 0.0 {
            return Err(Error::domain(
                "BathModel",
                format!("s must be > 0, got {s}"),
            ));
        }
        if !temperature.is_finite() || temperature < 0.0 {
            return Err(Error::domain(
                "BathModel",
                format!("temperature must be >= 0, got {temperature}"),
            ));
        }
        Ok(BathModel { s, temperature })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn regime(&self) -> OhmicRegime {
        if self.s < 1.0 {
            OhmicRegime::SubOhmic
        } else if self.s == 1.0 {
            OhmicRegime::Ohmic
        } else {
            OhmicRegime::SuperOhmic
        }
    }
}

/// Which evaluation route produced a [`DephasingOutcome`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeTag {
    ExactClosedForm,
    ExactQuadrature,
    LowTempApprox,
    LowTempQuadratic,
    HighTempApprox,
}

impl RegimeTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeTag::ExactClosedForm => "exact_closed_form",
            RegimeTag::ExactQuadrature => "exact_quadrature",
            RegimeTag::LowTempApprox => "low_T_approx",
            RegimeTag::LowTempQuadratic => "low_T_quadratic",
            RegimeTag::HighTempApprox => "high_T_approx",
        }
    }
}

/// Dephasing exponent together with its sensitivity to the spectral exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingOutcome {
    pub gamma: f64,
    pub dgamma_ds: f64,
    pub regime_tag: RegimeTag,
}

/// Long-time limit of the dephasing exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RateAsymptote {
    Finite(f64),
    Divergent,
}

fn check_s(op: &'static str, s: f64) -> Result<()> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(op, format!("s must be > 0, got {s}")));
    }
    Ok(())
}

fn check_tau(op: &'static str, tau: f64) -> Result<()> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::domain(op, format!("tau must be >= 0, got {tau}")));
    }
    Ok(())
}

fn check_temperature(op: &'static str, t: f64) -> Result<()> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::domain(op, format!("T must be > 0, got {t}")));
    }
    Ok(())
}

/// Gamma(w - 1) through the recurrence Gamma(w+1) / (w (w-1)), valid on
/// w > -1 away from the poles at w = 0 and w = 1.
pub(crate) fn gamma_shifted(w: f64) -> f64 {
    mathkern::gamma_pos(w + 1.0) / (w * (w - 1.0))
}

/// digamma(w - 1) through the recurrence, same domain as [`gamma_shifted`].
pub(crate) fn digamma_shifted(w: f64) -> f64 {
    mathkern::digamma_unchecked(w + 1.0) - 1.0 / w - 1.0 / (w - 1.0)
}

/// Zero-temperature dephasing exponent at spectral index `w`, valid for
/// `w > -1` including the removable singularities at w = 0 and w = 1.
///
/// Two algebraically identical factorisations of the closed form are used so
/// that the cancellations near w = 0 and w = 1 happen inside `expm1`/`sin`
/// instead of between O(1) terms.
pub(crate) fn gamma_index(w: f64, tau: f64) -> f64 {
    if tau == 0.0 {
        return 0.0;
    }
    let a = tau.atan();
    let log_scale = 0.5 * (tau * tau).ln_1p();

    if (w - 1.0).abs() <= 1e-12 {
        return log_scale;
    }
    if w.abs() <= 1e-12 {
        return tau * a - log_scale;
    }

    let bracket = if w >= 0.5 {
        let eps = w - 1.0;
        let damp = (-eps * log_scale).exp();
        -(-eps * log_scale).exp_m1() + damp * 2.0 * (0.5 * eps * a).sin().powi(2)
    } else {
        let damp = (-w * log_scale).exp();
        -(-w * log_scale).exp_m1() + damp * 2.0 * (0.5 * w * a).sin().powi(2)
            - tau * damp * (w * a).sin()
    };
    bracket * gamma_shifted(w)
}

/// d/dw of [`gamma_index`]; switches to a centred finite difference within
/// 1e-4 of the removable singularities where the analytic form cancels.
pub(crate) fn dgamma_index(w: f64, tau: f64) -> f64 {
    if tau == 0.0 {
        return 0.0;
    }
    if (w - 1.0).abs() < 1e-4 || w.abs() < 1e-4 {
        let h = 1e-5;
        return (gamma_index(w + h, tau) - gamma_index(w - h, tau)) / (2.0 * h);
    }
    let a = tau.atan();
    let log_scale = 0.5 * (tau * tau).ln_1p();

    let (bracket, dbracket) = if w >= 0.5 {
        let eps = w - 1.0;
        let damp = (-eps * log_scale).exp();
        let b = -(-eps * log_scale).exp_m1() + damp * 2.0 * (0.5 * eps * a).sin().powi(2);
        let db = damp * (a * (eps * a).sin() + log_scale * (eps * a).cos());
        (b, db)
    } else {
        let damp = (-w * log_scale).exp();
        let b = -(-w * log_scale).exp_m1() + damp * 2.0 * (0.5 * w * a).sin().powi(2)
            - tau * damp * (w * a).sin();
        let db = damp
            * (log_scale * ((w * a).cos() + tau * (w * a).sin()) + a * (w * a).sin()
                - tau * a * (w * a).cos());
        (b, db)
    };
    gamma_shifted(w) * (dbracket + bracket * digamma_shifted(w))
}

/// Dephasing exponent of the zero-temperature bath and its s-derivative.
pub fn gamma_zero_t(s: f64, tau: f64) -> Result<DephasingOutcome> {
    check_s("gamma_zero_t", s)?;
    check_tau("gamma_zero_t", tau)?;
    Ok(DephasingOutcome {
        gamma: gamma_index(s, tau),
        dgamma_ds: dgamma_index(s, tau),
        regime_tag: RegimeTag::ExactClosedForm,
    })
}

/// d/ds of the zero-temperature dephasing exponent.
pub fn dgamma_ds_zero_t(s: f64, tau: f64) -> Result<f64> {
    check_s("dgamma_ds_zero_t", s)?;
    check_tau("dgamma_ds_zero_t", tau)?;
    Ok(dgamma_index(s, tau))
}

/// Breakpoints that keep panels no wider than a quarter oscillation period.
fn oscillation_breaks(tau: f64, upper: f64) -> Vec<f64> {
    if tau <= 1.0 {
        return Vec::new();
    }
    // Oscillation matters only where e^-x has not extinguished the integrand.
    let reach = upper.min(46.0);
    let step = std::f64::consts::FRAC_PI_2 / tau;
    let n = (reach / step).ceil() as usize;
    (1..n).map(|k| k as f64 * step).collect()
}

/// Independent quadrature route for the zero-temperature exponent.
pub fn gamma_zero_t_oracle(s: f64, tau: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_s("gamma_zero_t_oracle", s)?;
    check_tau("gamma_zero_t_oracle", tau)?;
    if tau == 0.0 {
        return Ok(0.0);
    }
    let breaks = oscillation_breaks(tau, spec.upper_cutoff);
    integrate_semi_infinite_with_breaks(
        |x| {
            let osc = 2.0 * (0.5 * x * tau).sin().powi(2);
            osc * x.powf(s - 2.0) * (-x).exp()
        },
        spec,
        &breaks,
    )
}

/// Short-time expansion of the dephasing exponent: quadratic in `tau`.
pub fn gamma_short_time(s: f64, tau: f64) -> Result<f64> {
    check_s("gamma_short_time", s)?;
    check_tau("gamma_short_time", tau)?;
    Ok(0.5 * tau * tau * mathkern::gamma_pos(1.0 + s))
}

/// Long-time limit: finite for super-Ohmic baths, divergent otherwise.
pub fn gamma_asymptote(s: f64) -> Result<RateAsymptote> {
    check_s("gamma_asymptote", s)?;
    if s > 1.0 {
        Ok(RateAsymptote::Finite(ln_gamma(s - 1.0)?.exp()))
    } else {
        Ok(RateAsymptote::Divergent)
    }
}

/// Finite-temperature dephasing exponent by direct quadrature of the thermal
/// integrand; the s-derivative is a centred finite difference (step 1e-5).
pub fn gamma_finite_t_exact(
    s: f64,
    tau: f64,
    temperature: f64,
    spec: &QuadratureSpec,
) -> Result<DephasingOutcome> {
    check_s("gamma_finite_t_exact", s)?;
    check_tau("gamma_finite_t_exact", tau)?;
    check_temperature("gamma_finite_t_exact", temperature)?;
    let gamma = gamma_finite_t_quadrature(s, tau, temperature, spec)?;
    let h = 1e-5;
    let up = gamma_finite_t_quadrature(s + h, tau, temperature, spec)?;
    let down = gamma_finite_t_quadrature(s - h, tau, temperature, spec)?;
    Ok(DephasingOutcome {
        gamma,
        dgamma_ds: (up - down) / (2.0 * h),
        regime_tag: RegimeTag::ExactQuadrature,
    })
}

fn gamma_finite_t_quadrature(
    s: f64,
    tau: f64,
    temperature: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if tau == 0.0 {
        return Ok(0.0);
    }
    let breaks = oscillation_breaks(tau, spec.upper_cutoff);
    integrate_semi_infinite_with_breaks(
        |x| {
            let osc = 2.0 * (0.5 * x * tau).sin().powi(2);
            let coth = 1.0 / (x / (2.0 * temperature)).tanh();
            osc * x.powf(s - 2.0) * (-x).exp() * coth
        },
        spec,
        &breaks,
    )
}

/// Low-temperature two-term approximation: the zero-temperature exponent plus
/// a rescaled copy of itself at the thermally contracted time.
pub fn gamma_low_t(s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
    check_s("gamma_low_t", s)?;
    check_tau("gamma_low_t", tau)?;
    check_temperature("gamma_low_t", temperature)?;
    let t = temperature;
    let scale = ((1.0 + t) / t).powf(1.0 - s);
    let tau_thermal = t * tau / (1.0 + t);
    let gamma = gamma_index(s, tau) + 2.0 * scale * gamma_index(s, tau_thermal);
    let dgamma = dgamma_index(s, tau)
        + 2.0
            * scale
            * (dgamma_index(s, tau_thermal) - ((1.0 + t) / t).ln() * gamma_index(s, tau_thermal));
    Ok(DephasingOutcome {
        gamma,
        dgamma_ds: dgamma,
        regime_tag: RegimeTag::LowTempApprox,
    })
}

/// Low-temperature approximation with the thermal correction reduced to its
/// quadratic-in-`tau` form; fully analytic including the s-derivative.
pub fn gamma_low_t_quadratic(s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
    check_s("gamma_low_t_quadratic", s)?;
    check_tau("gamma_low_t_quadratic", tau)?;
    if !temperature.is_finite() || temperature < 0.0 {
        return Err(Error::domain(
            "gamma_low_t_quadratic",
            format!("T must be >= 0, got {temperature}"),
        ));
    }
    let t = temperature;
    let zero = gamma_index(s, tau);
    let dzero = dgamma_index(s, tau);
    if t == 0.0 {
        return Ok(DephasingOutcome {
            gamma: zero,
            dgamma_ds: dzero,
            regime_tag: RegimeTag::LowTempQuadratic,
        });
    }
    let coeff = t.powf(1.0 + s) * (1.0 - t) / (1.0 + t).powf(s);
    let correction = coeff * tau * tau * mathkern::gamma_pos(1.0 + s);
    let dcorrection = correction * (t.ln() - (1.0 + t).ln() + mathkern::digamma_unchecked(1.0 + s));
    Ok(DephasingOutcome {
        gamma: zero + correction,
        dgamma_ds: dzero + dcorrection,
        regime_tag: RegimeTag::LowTempQuadratic,
    })
}

/// Leading high-temperature form of the dephasing exponent: the thermal
/// factor reduces to `2T / x` under the integral, which shifts the spectral
/// index down by one and scales the exponent by `2T`.
pub fn gamma_high_t(s: f64, tau: f64, temperature: f64) -> Result<DephasingOutcome> {
    check_s("gamma_high_t", s)?;
    check_tau("gamma_high_t", tau)?;
    check_temperature("gamma_high_t", temperature)?;
    Ok(DephasingOutcome {
        gamma: 2.0 * temperature * gamma_index(s - 1.0, tau),
        dgamma_ds: 2.0 * temperature * dgamma_index(s - 1.0, tau),
        regime_tag: RegimeTag::HighTempApprox,
    })
}
