//! Fisher information, quantum Fisher information, and measurement
//! statistics for the dephasing probe.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::dephasing::{self, gamma_low_t_quadratic, gamma_zero_t, ProbeState};
use crate::error::{Error, Result};
use crate::mathkern;

/// Bloch direction of a two-outcome projective measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAxis {
    b: [f64; 3],
}

impl MeasurementAxis {
    pub fn new(b1: f64, b2: f64, b3: f64) -> Result<Self> {
        let norm = (b1 * b1 + b2 * b2 + b3 * b3).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidAxis(format!(
                "Bloch vector must be unit length, |b| = {norm}"
            )));
        }
        Ok(MeasurementAxis { b: [b1, b2, b3] })
    }

    /// Axis with the requested x-component, remainder along y.
    pub fn from_b1(b1: f64) -> Result<Self> {
        if !b1.is_finite() || b1.abs() > 1.0 {
            return Err(Error::InvalidAxis(format!(
                "b1 must lie in [-1, 1], got {b1}"
            )));
        }
        Ok(MeasurementAxis {
            b: [b1, (1.0 - b1 * b1).max(0.0).sqrt(), 0.0],
        })
    }

    pub fn x() -> Self {
        MeasurementAxis { b: [1.0, 0.0, 0.0] }
    }

    pub fn y() -> Self {
        MeasurementAxis { b: [0.0, 1.0, 0.0] }
    }

    pub fn z() -> Self {
        MeasurementAxis { b: [0.0, 0.0, 1.0] }
    }

    pub fn b1(&self) -> f64 {
        self.b[0]
    }

    pub fn components(&self) -> [f64; 3] {
        self.b
    }
}

/// Quantum Fisher information of the spectral exponent at one working point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QfiPoint {
    pub s: f64,
    pub tau: f64,
    pub temperature: f64,
    pub qfi: f64,
    pub qsnr: f64,
    pub gamma: f64,
    pub dgamma_ds: f64,
}

/// QFI functional of a dephasing exponent and its parameter derivative:
/// `dgamma^2 / (e^{2 gamma} - 1)`, with the `tau -> 0` limit pinned to 0.
fn qfi_from_rate(gamma: f64, dgamma: f64) -> f64 {
    if gamma == 0.0 || dgamma == 0.0 {
        return 0.0;
    }
    let denom = (2.0 * gamma).exp_m1();
    if denom.is_infinite() {
        return 0.0;
    }
    dgamma * dgamma / denom
}

/// Compact qubit QFI in terms of initial and residual coherence.
pub fn qfi_qubit_closed_form(
    c0: f64,
    c_lambda: f64,
    omega: f64,
    dgamma_dlambda: f64,
) -> Result<f64> {
    if !(c0 > 0.0 && c0 <= 1.0) {
        return Err(Error::domain(
            "qfi_qubit_closed_form",
            format!("initial coherence must lie in (0, 1], got {c0}"),
        ));
    }
    if !(c_lambda > 0.0 && c_lambda < c0) {
        return Err(Error::domain(
            "qfi_qubit_closed_form",
            format!("residual coherence must lie strictly inside (0, {c0}), got {c_lambda}"),
        ));
    }
    if !(omega > 0.0) {
        return Err(Error::domain(
            "qfi_qubit_closed_form",
            format!("omega must be > 0, got {omega}"),
        ));
    }
    if !dgamma_dlambda.is_finite() {
        return Err(Error::domain(
            "qfi_qubit_closed_form",
            "susceptibility must be finite",
        ));
    }
    if dgamma_dlambda == 0.0 {
        return Ok(0.0);
    }
    let c0sq = c0 * c0;
    let clsq = c_lambda * c_lambda;
    Ok(omega.powi(4) * dgamma_dlambda * dgamma_dlambda * c0sq * clsq / (c0sq - clsq))
}

const NULL_SUBSPACE_TOL: f64 = 1e-14;
const DEGENERACY_TOL: f64 = 1e-12;

/// Spectral-decomposition QFI for an arbitrary probe state and a
/// caller-supplied derivative of the density matrix.
///
/// Eigenvalue derivatives come from first-order perturbation theory;
/// near-degenerate off-diagonal pairs and the null subspace are dropped
/// (their contributions vanish while the perturbative overlaps degrade).
pub fn qfi_spectral(rho: &ProbeState, drho_dlambda: &DMatrix<Complex64>) -> Result<f64> {
    let d = rho.dimension();
    if drho_dlambda.nrows() != d || drho_dlambda.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: drho_dlambda.nrows(),
        });
    }
    let mut trace = Complex64::default();
    for n in 0..d {
        trace += drho_dlambda[(n, n)];
        for k in 0..d {
            let delta = drho_dlambda[(n, k)] - drho_dlambda[(k, n)].conj();
            if delta.norm() > 1e-10 {
                return Err(Error::domain(
                    "qfi_spectral",
                    format!("derivative matrix not Hermitian at ({n},{k})"),
                ));
            }
        }
    }
    if trace.norm() > 1e-10 {
        return Err(Error::domain(
            "qfi_spectral",
            format!("derivative matrix must be traceless, trace = {trace}"),
        ));
    }

    let eigen = SymmetricEigen::new(rho.rho().clone());
    let evals = &eigen.eigenvalues;
    let vecs = &eigen.eigenvectors;
    // derivative in the eigenbasis
    let m = vecs.adjoint() * drho_dlambda * vecs;

    let mut qfi = 0.0;
    for n in 0..d {
        let pn = evals[n].max(0.0);
        if 2.0 * pn >= NULL_SUBSPACE_TOL {
            let dp = m[(n, n)].re;
            qfi += dp * dp / pn;
        }
        for k in 0..d {
            if n == k {
                continue;
            }
            let pk = evals[k].max(0.0);
            if pn + pk < NULL_SUBSPACE_TOL || (pn - pk).abs() < DEGENERACY_TOL {
                continue;
            }
            qfi += 2.0 * m[(n, k)].norm_sqr() / (pn + pk);
        }
    }
    Ok(qfi.max(0.0))
}

/// QFI for estimating the spectral exponent with the zero-temperature bath.
pub fn qfi_ohmicity(s: f64, tau: f64) -> Result<QfiPoint> {
    let rate = gamma_zero_t(s, tau)?;
    let qfi = qfi_from_rate(rate.gamma, rate.dgamma_ds);
    Ok(QfiPoint {
        s,
        tau,
        temperature: 0.0,
        qfi,
        qsnr: s * s * qfi,
        gamma: rate.gamma,
        dgamma_ds: rate.dgamma_ds,
    })
}

/// Analytic low-temperature QFI built on the quadratic thermal correction.
pub fn qfi_low_t(s: f64, tau: f64, temperature: f64) -> Result<QfiPoint> {
    let rate = gamma_low_t_quadratic(s, tau, temperature)?;
    let qfi = qfi_from_rate(rate.gamma, rate.dgamma_ds);
    Ok(QfiPoint {
        s,
        tau,
        temperature,
        qfi,
        qsnr: s * s * qfi,
        gamma: rate.gamma,
        dgamma_ds: rate.dgamma_ds,
    })
}

/// Quadratic coefficient of the short-time QFI: `H ~ tau^2 g_s`.
///
/// Uses the regular form `Gamma(1+s) psi(1+s)^2 / 4`, which is finite for all
/// `s > 0`; see [`qfi_short_time_coeff_literal`] for the pole-ridden
/// factorisation it is algebraically equal to.
pub fn qfi_short_time_coeff(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(
            "qfi_short_time_coeff",
            format!("s must be > 0, got {s}"),
        ));
    }
    let psi = mathkern::digamma_unchecked(1.0 + s);
    Ok(mathkern::gamma_pos(1.0 + s) * psi * psi / 4.0)
}

/// The literal factorisation of the short-time coefficient through
/// `Gamma(s-1)` and `psi(s-1)`; defined away from `s = 1`.
pub fn qfi_short_time_coeff_literal(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(
            "qfi_short_time_coeff_literal",
            format!("s must be > 0, got {s}"),
        ));
    }
    if (s - 1.0).abs() < 1e-12 {
        return Err(Error::domain(
            "qfi_short_time_coeff_literal",
            "the literal factorisation is singular at s = 1",
        ));
    }
    let bracket = 2.0 * s - 1.0 + s * (s - 1.0) * dephasing::digamma_shifted(s);
    Ok(dephasing::gamma_shifted(s) / (4.0 * s * (s - 1.0)) * bracket * bracket)
}

/// Long-time limit of the QFI: zero up to the Ohmic point, finite above it.
pub fn qfi_asymptote(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(
            "qfi_asymptote",
            format!("s must be > 0, got {s}"),
        ));
    }
    if s <= 1.0 {
        return Ok(0.0);
    }
    let gamma_inf = mathkern::gamma_pos(s - 1.0);
    let dgamma_inf = gamma_inf * mathkern::digamma_unchecked(s - 1.0);
    Ok(qfi_from_rate(gamma_inf, dgamma_inf))
}

/// Outcome probabilities of a projective measurement on the dephased `|+>`
/// qubit: `p_pm = (1 pm b1 e^{-gamma}) / 2`.
pub fn measurement_probabilities(gamma: f64, axis: &MeasurementAxis) -> Result<(f64, f64)> {
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::domain(
            "measurement_probabilities",
            format!("gamma must be >= 0, got {gamma}"),
        ));
    }
    let signal = axis.b1() * (-gamma).exp();
    Ok((0.5 * (1.0 + signal), 0.5 * (1.0 - signal)))
}

/// Fisher information of the projective measurement along `axis` for the
/// dephased `|+>` qubit probe; equals the QFI when `|b1| = 1`.
pub fn fisher_info_projective(s: f64, tau: f64, axis: &MeasurementAxis) -> Result<f64> {
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::domain(
            "fisher_info_projective",
            format!("tau must be > 0, got {tau}"),
        ));
    }
    let rate = gamma_zero_t(s, tau)?;
    let b1 = axis.b1();
    if b1 == 0.0 {
        return Ok(0.0);
    }
    let b1sq = b1 * b1;
    let damp = (-2.0 * rate.gamma).exp();
    // 1 - b1^2 e^{-2 gamma}, assembled without cancellation
    let denom = (1.0 - b1sq) - b1sq * (-2.0 * rate.gamma).exp_m1();
    Ok(b1sq * rate.dgamma_ds * rate.dgamma_ds * damp / denom)
}

/// Difference between the finite-temperature QFI (quadratic low-T form) and
/// the zero-temperature QFI; positive where temperature helps.
pub fn excess_qfi(s: f64, tau: f64, temperature: f64) -> Result<f64> {
    if !temperature.is_finite() || temperature <= 0.0 {
        return Err(Error::domain(
            "excess_qfi",
            format!("T must be > 0, got {temperature}"),
        ));
    }
    Ok(qfi_low_t(s, tau, temperature)?.qfi - qfi_ohmicity(s, tau)?.qfi)
}

/// High-temperature QFI: the leading form `H_{1+s}(tau, 0) / T`.
pub fn qfi_high_t(s: f64, tau: f64, temperature: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::domain(
            "qfi_high_t",
            format!("s must be > 0, got {s}"),
        ));
    }
    if !(temperature >= 10.0) {
        return Err(Error::domain(
            "qfi_high_t",
            format!("the high-temperature form requires T >= 10, got {temperature}"),
        ));
    }
    Ok(qfi_ohmicity(1.0 + s, tau)?.qfi / temperature)
}
