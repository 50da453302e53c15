use super::circuit::{decohere, prepare_cluster, NoiseParams};
use super::measure::{
    parity_expectation, readout_mask, rotate_to_z_basis, sample_parity, MeasureMode,
};
use super::DensityMatrix;
use crate::error::Result;
use crate::id::{target_fidelity, CorrelatorReport, IdTable};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkResult {
    /// `Tr(ρ O_i)` per setting, unsigned rows.
    pub row_expectations: Vec<f64>,
    pub alpha: f64,
    pub score: f64,
    pub fid_bound: f64,
    /// `Tr(ρ Π)` of the prepared state before any measurement layer.
    pub true_fidelity: f64,
    pub noise: NoiseParams,
}

impl BenchmarkResult {
    pub fn m(&self) -> usize {
        self.row_expectations.len()
    }
}

/// One setting: rotate into the Z basis, let the rotation layer decohere for
/// the single-qubit gate time, then read out.
fn measured_row(
    prepared: &DensityMatrix,
    table: &IdTable,
    i: usize,
    noise: &NoiseParams,
    mode: MeasureMode,
) -> Result<f64> {
    let row = &table.rows()[i];
    let mut rho = prepared.clone();
    rotate_to_z_basis(&mut rho, row)?;
    decohere(&mut rho, noise.dt_single, noise)?;
    let mask = readout_mask(row);
    match mode {
        MeasureMode::Exact => Ok(parity_expectation(&rho, mask)),
        MeasureMode::Shots { count, seed } => {
            sample_parity(&rho, mask, count, seed.wrapping_add(i as u64))
        }
    }
}

/// Runs all `M` settings of `table` on the noisy cluster-state circuit and
/// assembles the correlator, score, fidelity bound and true fidelity.
///
/// The preparation is deterministic in the density-matrix picture, so it is
/// simulated once and copied for each setting.
pub fn run_benchmark(
    table: &IdTable,
    noise: &NoiseParams,
    mode: MeasureMode,
) -> Result<BenchmarkResult> {
    table.ensure_valid()?;
    let prepared = prepare_cluster(table.n_qubits(), noise)?;
    let row_expectations = (0..table.n_rows())
        .map(|i| measured_row(&prepared, table, i, noise, mode))
        .collect::<Result<Vec<_>>>()?;
    let alpha: f64 = row_expectations
        .iter()
        .zip(table.eigenvalues())
        .map(|(e, &l)| f64::from(l) * e)
        .sum();
    let report = CorrelatorReport::from_expectation(alpha, table.n_rows());
    Ok(BenchmarkResult {
        row_expectations,
        alpha,
        score: report.score,
        fid_bound: report.fid_bound,
        true_fidelity: target_fidelity(table, &prepared)?,
        noise: noise.clone(),
    })
}
