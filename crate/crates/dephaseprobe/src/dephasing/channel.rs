//! Probe states and the pure-dephasing channel.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

const HERMITICITY_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const POSITIVITY_TOL: f64 = -1e-10;

/// A d-level probe: energy levels plus a density matrix in the energy basis.
///
/// Valid by construction: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeState {
    energies: Vec<f64>,
    rho: DMatrix<Complex64>,
}

impl ProbeState {
    /// Validates all state invariants; energies must be ascending (equal
    /// neighbouring levels are allowed and are simply untouched by dephasing).
    pub fn new(energies: Vec<f64>, rho: DMatrix<Complex64>) -> Result<Self> {
        let d = energies.len();
        if d < 2 {
            return Err(Error::InvalidState(format!(
                "probe dimension must be >= 2, got {d}"
            )));
        }
        if rho.nrows() != d || rho.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: rho.nrows(),
            });
        }
        if energies.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidState("non-finite energy level".into()));
        }
        if energies.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidState("energies must be ascending".into()));
        }
        for n in 0..d {
            for k in 0..d {
                let delta = rho[(n, k)] - rho[(k, n)].conj();
                if delta.norm() > HERMITICITY_TOL {
                    return Err(Error::InvalidState(format!(
                        "density matrix not Hermitian at ({n},{k}): residue {:.3e}",
                        delta.norm()
                    )));
                }
            }
        }
        let trace: Complex64 = (0..d).map(|n| rho[(n, n)]).sum();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace must be 1, got {trace}")));
        }
        let eigen = SymmetricEigen::new(rho.clone());
        if eigen.eigenvalues.iter().any(|&e| e < POSITIVITY_TOL) {
            let min = eigen
                .eigenvalues
                .iter()
                .cloned()
                .fold(f64::INFINITY, f64::min);
            return Err(Error::InvalidState(format!(
                "density matrix not positive semidefinite: min eigenvalue {min:.3e}"
            )));
        }
        Ok(ProbeState { energies, rho })
    }

    pub fn dimension(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn rho(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    /// Equal-weight superposition of all levels, levels spaced by `omega`.
    pub fn maximally_coherent(d: usize, omega: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidState(format!(
                "probe dimension must be >= 2, got {d}"
            )));
        }
        if !(omega > 0.0) {
            return Err(Error::InvalidState(format!(
                "level spacing must be > 0, got {omega}"
            )));
        }
        let amp = Complex64::new(1.0 / d as f64, 0.0);
        let rho = DMatrix::from_element(d, d, amp);
        let energies = (0..d).map(|n| n as f64 * omega).collect();
        Self::new(energies, rho)
    }

    /// The `|+>` eigenstate of a qubit with splitting `omega`.
    pub fn qubit_plus(omega: f64) -> Result<Self> {
        QubitPreparation::new(std::f64::consts::FRAC_PI_4, omega)?.state()
    }
}

/// Pure qubit preparation `cos(phi)|e1> + sin(phi)|e2>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitPreparation {
    phi: f64,
    omega: f64,
}

impl QubitPreparation {
    pub fn new(phi: f64, omega: f64) -> Result<Self> {
        if !phi.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&phi) {
            return Err(Error::domain(
                "QubitPreparation",
                format!("phi must lie in [0, pi/2], got {phi}"),
            ));
        }
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::domain(
                "QubitPreparation",
                format!("omega must be > 0, got {omega}"),
            ));
        }
        Ok(QubitPreparation { phi, omega })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Initial coherence sin(2 phi).
    pub fn initial_coherence(&self) -> f64 {
        (2.0 * self.phi).sin()
    }

    pub fn state(&self) -> Result<ProbeState> {
        let (sin, cos) = self.phi.sin_cos();
        let rho = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(cos * cos, 0.0),
                Complex64::new(cos * sin, 0.0),
                Complex64::new(cos * sin, 0.0),
                Complex64::new(sin * sin, 0.0),
            ],
        );
        ProbeState::new(vec![0.0, self.omega], rho)
    }
}

/// Apply the dephasing channel with exponent `gamma`: each off-diagonal
/// element is damped by `exp(-gamma (E_n - E_k)^2)`, diagonals are untouched.
pub fn apply_dephasing(state: &ProbeState, gamma: f64) -> Result<ProbeState> {
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::domain(
            "apply_dephasing",
            format!("gamma must be >= 0, got {gamma}"),
        ));
    }
    let d = state.dimension();
    let mut rho = state.rho.clone();
    for n in 0..d {
        for k in 0..d {
            if n == k {
                continue;
            }
            let omega_nk = state.energies[n] - state.energies[k];
            rho[(n, k)] *= (-gamma * omega_nk * omega_nk).exp();
        }
    }
    ProbeState::new(state.energies.clone(), rho)
}

/// l1 coherence: sum of the moduli of all off-diagonal elements.
pub fn coherence(state: &ProbeState) -> f64 {
    let d = state.dimension();
    let mut sum = 0.0;
    for n in 0..d {
        for k in (n + 1)..d {
            sum += state.rho[(n, k)].norm();
        }
    }
    2.0 * sum
}

/// Residual coherence of the equi-spaced maximally coherent probe after
/// dephasing, as the single sum `(2/d) sum_j exp(-j^2 gamma omega^2)` over
/// the level separations `j = 1..d-1`.
pub fn residual_coherence_equispaced(d: usize, gamma: f64, omega: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::domain(
            "residual_coherence_equispaced",
            format!("dimension must be >= 2, got {d}"),
        ));
    }
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::domain(
            "residual_coherence_equispaced",
            format!("gamma must be >= 0, got {gamma}"),
        ));
    }
    let sum: f64 = (1..d)
        .map(|j| {
            let jf = j as f64;
            (-jf * jf * gamma * omega * omega).exp()
        })
        .sum();
    Ok(2.0 / d as f64 * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn plus_state_has_unit_coherence() {
        let plus = ProbeState::qubit_plus(1.0).unwrap();
        assert_relative_eq!(coherence(&plus), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn preparation_angle_sets_coherence() {
        let prep = QubitPreparation::new(std::f64::consts::FRAC_PI_6, 1.0).unwrap();
        assert_relative_eq!(
            prep.initial_coherence(),
            (std::f64::consts::FRAC_PI_3).sin()
        );
        let state = prep.state().unwrap();
        assert_relative_eq!(coherence(&state), 0.8660254037844386, epsilon = 1e-12);
    }

    #[test]
    fn maximally_mixed_has_zero_coherence() {
        let rho = DMatrix::from_diagonal_element(3, 3, Complex64::new(1.0 / 3.0, 0.0));
        let state = ProbeState::new(vec![0.0, 1.0, 2.0], rho).unwrap();
        assert_eq!(coherence(&state), 0.0);
    }

    #[test]
    fn zero_gamma_is_identity() {
        let state = ProbeState::maximally_coherent(3, 1.0).unwrap();
        let out = apply_dephasing(&state, 0.0).unwrap();
        assert_eq!(out.rho(), state.rho());
    }

    #[test]
    fn qubit_off_diagonals_damp() {
        let plus = ProbeState::qubit_plus(1.0).unwrap();
        let out = apply_dephasing(&plus, std::f64::consts::LN_2).unwrap();
        assert_relative_eq!(out.rho()[(0, 1)].re, 0.25, epsilon = 1e-14);
        assert_relative_eq!(out.rho()[(0, 0)].re, 0.5, epsilon = 1e-14);
    }

    #[test]
    fn qutrit_elements_scale_by_level_distance() {
        let state = ProbeState::maximally_coherent(3, 1.0).unwrap();
        let gamma = 0.1;
        let out = apply_dephasing(&state, gamma).unwrap();
        let third = 1.0 / 3.0;
        assert_relative_eq!(
            out.rho()[(0, 2)].re,
            third * (-0.4_f64).exp(),
            epsilon = 1e-14
        );
        assert_relative_eq!(
            out.rho()[(0, 1)].re,
            third * (-0.1_f64).exp(),
            epsilon = 1e-14
        );
        assert_relative_eq!(
            out.rho()[(1, 2)].re,
            third * (-0.1_f64).exp(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn degenerate_levels_are_untouched() {
        let rho = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.4, 0.1),
                Complex64::new(0.4, -0.1),
                Complex64::new(0.5, 0.0),
            ],
        );
        let state = ProbeState::new(vec![1.0, 1.0], rho).unwrap();
        let out = apply_dephasing(&state, 5.0).unwrap();
        assert_eq!(out.rho()[(0, 1)], state.rho()[(0, 1)]);
    }

    #[test]
    fn invalid_states_are_rejected() {
        // trace != 1
        let rho = DMatrix::from_diagonal_element(2, 2, Complex64::new(1.0, 0.0));
        assert!(ProbeState::new(vec![0.0, 1.0], rho).is_err());
        // not Hermitian
        let rho = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.1, 0.0),
                Complex64::new(0.5, 0.0),
            ],
        );
        assert!(ProbeState::new(vec![0.0, 1.0], rho).is_err());
        // negative eigenvalue
        let rho = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.9, 0.0),
                Complex64::new(0.9, 0.0),
                Complex64::new(0.5, 0.0),
            ],
        );
        assert!(ProbeState::new(vec![0.0, 1.0], rho).is_err());
    }

    #[test]
    fn residual_coherence_matches_direct_sum() {
        assert_relative_eq!(
            residual_coherence_equispaced(2, 0.0, 1.0).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            residual_coherence_equispaced(2, std::f64::consts::LN_2, 1.0).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        let expected = 0.5 * ((-0.3_f64).exp() + (-1.2_f64).exp() + (-2.7_f64).exp());
        assert_relative_eq!(
            residual_coherence_equispaced(4, 0.3, 1.0).unwrap(),
            expected,
            epsilon = 1e-15
        );
    }

    #[test]
    fn residual_coherence_matches_channel_for_qubits() {
        // For d = 2 the single-sum form coincides with the l1 coherence of the
        // dephased maximally coherent state.
        for gamma in [0.0, 0.1, 0.7, 2.5] {
            let state = ProbeState::maximally_coherent(2, 1.0).unwrap();
            let out = apply_dephasing(&state, gamma).unwrap();
            assert_relative_eq!(
                coherence(&out),
                residual_coherence_equispaced(2, gamma, 1.0).unwrap(),
                epsilon = 1e-14
            );
        }
    }
}
