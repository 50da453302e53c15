use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureMode {
    /// Dense trace.
    Exact,
    /// Bitstrings sampled from the rotated state's populations.
    Shots { count: u64, seed: u64 },
}

/// Unitary `U` with `U† Z U` equal to the letter, applied before a Z-basis
/// readout. X uses `exp(iπY/4)`, Y uses `exp(−iπX/4)`.
pub fn basis_change(letter: Letter) -> Option<[[Complex64; 2]; 2]> {
    let s = FRAC_1_SQRT_2;
    let c = Complex64::new;
    match letter {
        Letter::I | Letter::Z => None,
        Letter::X => Some([[c(s, 0.0), c(s, 0.0)], [c(-s, 0.0), c(s, 0.0)]]),
        Letter::Y => Some([[c(s, 0.0), c(0.0, -s)], [c(0.0, -s), c(s, 0.0)]]),
    }
}

/// Rotates every non-Z, non-I site of `row` into the Z basis.
pub fn rotate_to_z_basis(rho: &mut DensityMatrix, row: &PauliString) -> Result<()> {
    for j in 0..row.n_qubits() {
        if let Some(u) = basis_change(row.letter(j)) {
            rho.apply_single_qubit(&u, j)?;
        }
    }
    Ok(())
}

/// Basis-index mask of the sites that take part in the readout parity.
pub fn readout_mask(row: &PauliString) -> usize {
    let n = row.n_qubits();
    (0..n)
        .filter(|&j| row.letter(j) != Letter::I)
        .fold(0, |m, j| m | 1 << (n - 1 - j))
}

fn row_sign(row: &PauliString) -> Result<f64> {
    row.sign()
        .map(f64::from)
        .ok_or_else(|| Error::input(format!("{row} is not Hermitian")))
}

/// Exact `⟨∏_{j∈mask} Z_j⟩` from the populations.
pub fn parity_expectation(rho: &DensityMatrix, mask: usize) -> f64 {
    rho.diagonal()
        .iter()
        .enumerate()
        .map(|(a, p)| {
            if (a & mask).count_ones().is_multiple_of(2) {
                *p
            } else {
                -*p
            }
        })
        .sum()
}

/// Sample mean of the parity over `count` bitstrings.
pub fn sample_parity(rho: &DensityMatrix, mask: usize, count: u64, seed: u64) -> Result<f64> {
    if count == 0 {
        return Err(Error::input("shot count must be positive"));
    }
    // First-order T1 can leave populations a hair below zero.
    let weights: Vec<f64> = rho.diagonal().iter().map(|p| p.max(0.0)).collect();
    let dist = WeightedIndex::new(&weights).map_err(|e| Error::input(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum: i64 = 0;
    for _ in 0..count {
        let a = dist.sample(&mut rng);
        sum += if (a & mask).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        };
    }
    Ok(sum as f64 / count as f64)
}

/// Expectation of one measurement setting on `rho`, with ideal basis
/// rotations.
pub fn measure_setting(rho: &DensityMatrix, row: &PauliString, mode: MeasureMode) -> Result<f64> {
    if row.n_qubits() != rho.n_qubits() {
        return Err(Error::Dimension {
            expected: rho.n_qubits(),
            got: row.n_qubits(),
        });
    }
    let sign = row_sign(row)?;
    match mode {
        MeasureMode::Exact => Ok(sign * rho.expectation(&row.unsigned())?),
        MeasureMode::Shots { count, seed } => {
            let mut r = rho.clone();
            rotate_to_z_basis(&mut r, row)?;
            Ok(sign * sample_parity(&r, readout_mask(row), count, seed)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{prepare_cluster, NoiseParams};

    fn to_dense(u: &[[Complex64; 2]; 2]) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_row_slice(2, 2, &[u[0][0], u[0][1], u[1][0], u[1][1]])
    }

    #[test]
    fn basis_changes_map_z_to_the_letter() {
        let z = PauliString::from_letter_str("Z")
            .unwrap()
            .to_matrix()
            .unwrap();
        for l in [Letter::X, Letter::Y] {
            let u = to_dense(&basis_change(l).unwrap());
            let got = u.adjoint() * &z * &u;
            let want = PauliString::single(1, 0, l).to_matrix().unwrap();
            assert!((got - want).norm() < 1e-15, "{l:?}");
        }
    }

    #[test]
    fn identity_row_reads_one() {
        let rho = DensityMatrix::maximally_mixed(3);
        let id = PauliString::identity(3);
        assert_eq!(measure_setting(&rho, &id, MeasureMode::Exact).unwrap(), 1.0);
        let shots = MeasureMode::Shots {
            count: 100,
            seed: 1,
        };
        assert_eq!(measure_setting(&rho, &id, shots).unwrap(), 1.0);
    }

    #[test]
    fn ideal_cluster_settings() {
        let rho = prepare_cluster(3, &NoiseParams::ideal(3)).unwrap();
        let zxz: PauliString = "+ZXZ".parse().unwrap();
        let yxy: PauliString = "-YXY".parse().unwrap();
        for mode in [
            MeasureMode::Exact,
            MeasureMode::Shots {
                count: 1000,
                seed: 7,
            },
        ] {
            assert!((measure_setting(&rho, &zxz, mode).unwrap() - 1.0).abs() < 1e-12);
            assert!((measure_setting(&rho, &yxy, mode).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rotated_parity_equals_pauli_trace() {
        let mut noise = NoiseParams::uniform(3, 20e-6, 8e-6, 0.3, 0.03);
        noise.dt_two = 60e-9;
        let rho = prepare_cluster(3, &noise).unwrap();
        for s in ["YXY", "XIZ", "ZYX", "IYI"] {
            let p: PauliString = s.parse().unwrap();
            let mut r = rho.clone();
            rotate_to_z_basis(&mut r, &p).unwrap();
            let a = parity_expectation(&r, readout_mask(&p));
            let b = rho.expectation(&p).unwrap();
            assert!((a - b).abs() < 1e-12, "{s}: {a} vs {b}");
        }
    }

    #[test]
    fn non_hermitian_row_rejected() {
        let rho = DensityMatrix::maximally_mixed(1);
        let p: PauliString = "+iX".parse().unwrap();
        assert!(measure_setting(&rho, &p, MeasureMode::Exact).is_err());
    }
}
