//! Shared helpers for the integration suites.

use dephaseprobe::dephasing::ProbeState;
use dephaseprobe::metrology::MeasurementAxis;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

/// Random full-rank density matrix (Ginibre construction) with ascending
/// random energy levels.
pub fn random_probe_state<R: Rng>(d: usize, rng: &mut R) -> ProbeState {
    let a = DMatrix::from_fn(d, d, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let gram = &a * a.adjoint();
    let trace: f64 = (0..d).map(|n| gram[(n, n)].re).sum();
    let rho = gram.map(|z| z / trace);
    let mut energies: Vec<f64> = (0..d).map(|_| rng.gen_range(0.0..d as f64)).collect();
    energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ProbeState::new(energies, rho).expect("Ginibre state is valid")
}

/// Uniformly random Bloch axis.
pub fn random_axis<R: Rng>(rng: &mut R) -> MeasurementAxis {
    loop {
        let v = [
            rng.gen_range(-1.0..1.0_f64),
            rng.gen_range(-1.0..1.0_f64),
            rng.gen_range(-1.0..1.0_f64),
        ];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 1e-3 && norm <= 1.0 {
            if let Ok(axis) = MeasurementAxis::new(v[0] / norm, v[1] / norm, v[2] / norm) {
                return axis;
            }
        }
    }
}
