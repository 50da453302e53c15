//! Random test states.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::DensityMatrix;
use crate::error::Result;

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state amplitudes on `n` qubits.
pub fn random_amplitudes<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..1usize << n).map(|_| gaussian_complex(rng)).collect();
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|c| c / norm).collect()
}

pub fn random_pure<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<DensityMatrix> {
    DensityMatrix::from_pure(&random_amplitudes(n, rng))
}

/// `G G† / Tr(G G†)` with a `2^n × rank` Ginibre matrix `G`.
pub fn random_mixed<R: Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> Result<DensityMatrix> {
    let d = 1usize << n;
    let g = DMatrix::from_fn(d, rank.max(1), |_, _| gaussian_complex(rng));
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::from_matrix(m.unscale(tr))
}

/// Tensor product of independent random pure single-qubit states.
pub fn random_product<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<DensityMatrix> {
    let mut rho = random_pure(1, rng)?;
    for _ in 1..n {
        rho = rho.kron(&random_pure(1, rng)?)?;
    }
    Ok(rho)
}

/// Random pure states on consecutive blocks of the given sizes, tensored
/// together: separable across every block boundary.
pub fn random_block_product<R: Rng + ?Sized>(
    blocks: &[usize],
    rng: &mut R,
) -> Result<DensityMatrix> {
    let mut it = blocks.iter();
    let first = it.next().copied().unwrap_or(1);
    let mut rho = random_pure(first, rng)?;
    for &b in it {
        rho = rho.kron(&random_pure(b, rng)?)?;
    }
    Ok(rho)
}
