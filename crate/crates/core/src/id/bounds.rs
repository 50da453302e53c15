use nalgebra::DMatrix;
use num_complex::Complex64;

use super::IdTable;
use crate::error::{Error, Result};
use crate::pauli::{PauliString, DEFAULT_DENSE_CAP};
use crate::sim::DensityMatrix;

/// Correlator expectation with every bound and score derived from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelatorReport {
    pub expectation: f64,
    pub m: usize,
    /// Quantum maximum, `M`.
    pub beta_qm: f64,
    /// Local hidden-variable maximum, `M − 2`.
    pub beta_lhvt: f64,
    /// Biseparable maximum, `M − 2`.
    pub beta_bisep: f64,
    pub score: f64,
    pub fid_bound: f64,
}

impl CorrelatorReport {
    pub fn from_expectation(expectation: f64, m: usize) -> Self {
        let mf = m as f64;
        CorrelatorReport {
            expectation,
            m,
            beta_qm: mf,
            beta_lhvt: mf - 2.0,
            beta_bisep: mf - 2.0,
            score: benchmark_score(expectation, m),
            fid_bound: fidelity_lower_bound(expectation, m),
        }
    }
}

/// `(⟨α⟩ − M + 2) / 2`.
pub fn benchmark_score(alpha: f64, m: usize) -> f64 {
    (alpha - m as f64 + 2.0) / 2.0
}

/// `(⟨α⟩ − M + 4) / 4`, equal to `(B + 1) / 2`.
pub fn fidelity_lower_bound(alpha: f64, m: usize) -> f64 {
    (alpha - m as f64 + 4.0) / 4.0
}

fn check_dim(table: &IdTable, rho: &DensityMatrix) -> Result<()> {
    if rho.n_qubits() != table.n_qubits() {
        return Err(Error::Dimension {
            expected: table.n_qubits(),
            got: rho.n_qubits(),
        });
    }
    Ok(())
}

/// `⟨α⟩ = Σ_i λ_i Tr(ρ O_i)`.
pub fn correlator_expectation(table: &IdTable, rho: &DensityMatrix) -> Result<CorrelatorReport> {
    table.ensure_valid()?;
    check_dim(table, rho)?;
    let mut alpha = 0.0;
    for (row, &lambda) in table.rows().iter().zip(table.eigenvalues()) {
        alpha += f64::from(lambda) * rho.expectation(row)?;
    }
    Ok(CorrelatorReport::from_expectation(alpha, table.n_rows()))
}

/// Largest row count accepted by the `2^M`-term projector expansion.
const MAX_EXPANSION_ROWS: usize = 24;

/// `F = Tr(ρ Π)` using the Pauli expansion of `Π = ∏_i (I + λ_i O_i)/2`,
/// so no dense projector is formed.
pub fn target_fidelity(table: &IdTable, rho: &DensityMatrix) -> Result<f64> {
    table.ensure_valid()?;
    check_dim(table, rho)?;
    let m = table.n_rows();
    if m > MAX_EXPANSION_ROWS {
        return Err(Error::Resource {
            what: "projector expansion row count",
            value: m,
            cap: MAX_EXPANSION_ROWS,
        });
    }
    let signed: Vec<PauliString> = (0..m).map(|i| table.signed_row(i)).collect();
    // Gray-code walk over subsets, one multiplication per step.
    let mut term = PauliString::identity(table.n_qubits());
    let mut acc = Complex64::new(0.0, 0.0);
    acc += rho.expectation_complex(&term)?;
    for k in 1u64..(1u64 << m) {
        let flip = k.trailing_zeros() as usize;
        term = term.multiply(&signed[flip])?;
        acc += rho.expectation_complex(&term)?;
    }
    Ok(acc.re / (1u64 << m) as f64)
}

pub fn eigenspace_projector(table: &IdTable) -> Result<DMatrix<Complex64>> {
    eigenspace_projector_capped(table, DEFAULT_DENSE_CAP)
}

/// Dense `Π = ∏_i (I + λ_i O_i)/2`.
pub fn eigenspace_projector_capped(table: &IdTable, cap: usize) -> Result<DMatrix<Complex64>> {
    table.ensure_valid()?;
    let n = table.n_qubits();
    if n > cap {
        return Err(Error::Resource {
            what: "dense projector qubit count",
            value: n,
            cap,
        });
    }
    let dim = 1usize << n;
    let id = DMatrix::<Complex64>::identity(dim, dim);
    let mut pi = id.clone();
    for i in 0..table.n_rows() {
        let o = table.signed_row(i).to_matrix_capped(cap)?;
        let factor = (&id + o).scale(0.5);
        pi *= factor;
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::id::IdTable;

    fn fig1() -> IdTable {
        IdTable::from_signed(&["-YXY", "+YYZ", "+ZXZ", "+ZYY"]).unwrap()
    }

    #[test]
    fn score_and_fidelity_bound_values() {
        assert_eq!(benchmark_score(4.0, 4), 1.0);
        assert_eq!(benchmark_score(2.0, 4), 0.0);
        assert_eq!(benchmark_score(0.0, 4), -1.0);
        assert_eq!(fidelity_lower_bound(4.0, 4), 1.0);
        assert_eq!(fidelity_lower_bound(2.0, 4), 0.5);
        assert_eq!(fidelity_lower_bound(0.0, 4), 0.0);
        for a in [-3.0, 0.3, 2.7, 4.0] {
            let r = CorrelatorReport::from_expectation(a, 4);
            assert!((r.fid_bound - (r.score + 1.0) / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn projector_of_fig1_is_rank_one_and_saturates() {
        let t = fig1();
        let pi = eigenspace_projector(&t).unwrap();
        let tr = pi.trace();
        assert!((tr.re - 1.0).abs() < 1e-12 && tr.im.abs() < 1e-12);
        assert!((&pi * &pi - &pi).norm() < 1e-12);
        let rho = DensityMatrix::from_matrix(pi.clone()).unwrap();
        let r = correlator_expectation(&t, &rho).unwrap();
        assert!((r.expectation - 4.0).abs() < 1e-12);
        assert!((target_fidelity(&t, &rho).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn maximally_mixed_state() {
        let t = fig1();
        let rho = DensityMatrix::maximally_mixed(3);
        let r = correlator_expectation(&t, &rho).unwrap();
        assert!(r.expectation.abs() < 1e-12);
        assert!((r.score + 1.0).abs() < 1e-12);
        // Π has rank 1 in dimension 8.
        assert!((target_fidelity(&t, &rho).unwrap() - 0.125).abs() < 1e-12);
    }

    #[test]
    fn flipped_pair_eigenstate_scores_m_minus_four() {
        let t = fig1();
        let flipped = t.with_flipped_pair(1, 3).unwrap();
        let pi = eigenspace_projector(&flipped).unwrap();
        let rank = pi.trace().re;
        let rho = DensityMatrix::from_matrix(pi.unscale(rank)).unwrap();
        let r = correlator_expectation(&t, &rho).unwrap();
        assert!((r.expectation - 0.0).abs() < 1e-12, "M - 4 = 0");
        assert!(target_fidelity(&t, &rho).unwrap().abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert!(matches!(
            correlator_expectation(&fig1(), &rho),
            Err(Error::Dimension { .. })
        ));
    }
}
