use super::channels::{apply_jittered_zz90, apply_t1, apply_t2, apply_y90, apply_z90, init_state};
use super::DensityMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_DT_SINGLE: f64 = 25e-9;
pub const DEFAULT_DT_TWO: f64 = 45e-9;

/// Noise model for one run. Times are in seconds; `f64::INFINITY` switches
/// a decay channel off.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseParams {
    pub t1: Vec<f64>,
    pub t2: f64,
    /// Raised-cosine jitter width of the ZZ90 step, radians.
    pub jitter_width: f64,
    /// Probability of each qubit starting excited.
    pub init_error: Vec<f64>,
    pub dt_single: f64,
    pub dt_two: f64,
}

impl NoiseParams {
    pub fn ideal(n: usize) -> Self {
        NoiseParams {
            t1: vec![f64::INFINITY; n],
            t2: f64::INFINITY,
            jitter_width: 0.0,
            init_error: vec![0.0; n],
            dt_single: DEFAULT_DT_SINGLE,
            dt_two: DEFAULT_DT_TWO,
        }
    }

    pub fn uniform(n: usize, t1: f64, t2: f64, jitter_width: f64, init_error: f64) -> Self {
        NoiseParams {
            t1: vec![t1; n],
            t2,
            jitter_width,
            init_error: vec![init_error; n],
            ..NoiseParams::ideal(n)
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.t1.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.init_error.len() != self.t1.len() {
            return Err(Error::Dimension {
                expected: self.t1.len(),
                got: self.init_error.len(),
            });
        }
        let times = self
            .t1
            .iter()
            .chain([&self.t2, &self.dt_single, &self.dt_two]);
        for t in times {
            if !(*t > 0.0) {
                return Err(Error::input(format!("time {t} must be positive")));
            }
        }
        if let Some(p) = self.init_error.iter().find(|p| !(0.0..0.5).contains(*p)) {
            return Err(Error::input(format!(
                "initialisation error {p} outside [0, 0.5)"
            )));
        }
        if !(0.0..std::f64::consts::PI).contains(&self.jitter_width) {
            return Err(Error::input(format!(
                "jitter width {} outside [0, π)",
                self.jitter_width
            )));
        }
        Ok(())
    }

    fn check_for(&self, n: usize) -> Result<()> {
        if self.n_qubits() != n {
            return Err(Error::Dimension {
                expected: n,
                got: self.n_qubits(),
            });
        }
        self.validate()
    }
}

/// Relaxation then dephasing for one layer of duration `dt`, on every qubit
/// whether or not it was gated.
pub fn decohere(rho: &mut DensityMatrix, dt: f64, noise: &NoiseParams) -> Result<()> {
    apply_t1(rho, dt, &noise.t1)?;
    apply_t2(rho, dt, noise.t2)
}

/// Controlled-Z as `[exp(iZπ/4) ⊗ exp(iZπ/4)]·ZZ90` with the ZZ step jittered.
pub fn apply_noisy_cz(rho: &mut DensityMatrix, pair: (usize, usize), w: f64) -> Result<()> {
    apply_jittered_zz90(rho, pair, w)?;
    apply_z90(rho, pair.0)?;
    apply_z90(rho, pair.1)
}

/// Nearest-neighbour pairs starting at `first` with stride 2.
fn cz_layer(n: usize, first: usize) -> Vec<(usize, usize)> {
    (first..n.saturating_sub(1))
        .step_by(2)
        .map(|a| (a, a + 1))
        .collect()
}

/// Linear cluster state from the three preparation layers: Y90 on every
/// qubit, CZ on pairs (1,2),(3,4),…, then CZ on (2,3),(4,5),…. Each layer is
/// followed by T1 then T2 decay for its gate time; layers with no gates are
/// skipped.
pub fn prepare_cluster(n: usize, noise: &NoiseParams) -> Result<DensityMatrix> {
    if n < 2 {
        return Err(Error::input("a cluster needs at least two qubits"));
    }
    noise.check_for(n)?;
    let mut rho = init_state(n, &noise.init_error)?;
    for q in 0..n {
        apply_y90(&mut rho, q)?;
    }
    decohere(&mut rho, noise.dt_single, noise)?;
    for first in [0, 1] {
        let pairs = cz_layer(n, first);
        if pairs.is_empty() {
            continue;
        }
        for pair in pairs {
            apply_noisy_cz(&mut rho, pair, noise.jitter_width)?;
        }
        decohere(&mut rho, noise.dt_two, noise)?;
    }
    Ok(rho)
}
