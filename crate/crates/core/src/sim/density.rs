use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{BasisMasks, PauliString};

/// Dense `2^N × 2^N` density matrix. Qubit `j` (0-based, left to right) is
/// bit `N − 1 − j` of a basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    m: DMatrix<Complex64>,
}

/// Largest qubit count the simulator will allocate.
pub const MAX_SIM_QUBITS: usize = 12;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::input("a register needs at least one qubit"));
    }
    if n > MAX_SIM_QUBITS {
        return Err(Error::Resource {
            what: "simulated qubit count",
            value: n,
            cap: MAX_SIM_QUBITS,
        });
    }
    Ok(())
}

impl DensityMatrix {
    /// `|0…0⟩⟨0…0|`.
    pub fn ground(n: usize) -> Result<Self> {
        check_n(n)?;
        let dim = 1 << n;
        let mut m = DMatrix::zeros(dim, dim);
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        Ok(DensityMatrix { n, m })
    }

    pub fn maximally_mixed(n: usize) -> Self {
        check_n(n).expect("qubit count within the simulator cap");
        let dim = 1 << n;
        DensityMatrix {
            n,
            m: DMatrix::identity(dim, dim).unscale(dim as f64),
        }
    }

    /// Wraps a matrix; the dimension must be a power of two. Physical
    /// validity is not checked here.
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        let dim = m.nrows();
        if m.ncols() != dim || !dim.is_power_of_two() || dim < 2 {
            return Err(Error::input(format!(
                "{}×{} is not a 2^N square matrix",
                m.nrows(),
                m.ncols()
            )));
        }
        let n = dim.trailing_zeros() as usize;
        check_n(n)?;
        Ok(DensityMatrix { n, m })
    }

    /// `|ψ⟩⟨ψ|` for a normalised amplitude vector.
    pub fn from_pure(amps: &[Complex64]) -> Result<Self> {
        let v = nalgebra::DVector::from_column_slice(amps);
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::input("zero state vector"));
        }
        let v = v.unscale(norm);
        DensityMatrix::from_matrix(&v * v.adjoint())
    }

    /// Tensor product `self ⊗ other` (self holds the leading qubits).
    pub fn kron(&self, other: &DensityMatrix) -> Result<Self> {
        check_n(self.n + other.n)?;
        Ok(DensityMatrix {
            n: self.n + other.n,
            m: self.m.kronecker(&other.m),
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.m
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        self.m.as_mut_slice()
    }

    pub(crate) fn data(&self) -> &[Complex64] {
        self.m.as_slice()
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    pub fn purity(&self) -> f64 {
        // Tr(ρ²) = Σ |ρ_ab|² for Hermitian ρ
        self.m.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest `|ρ − ρ†|` entry.
    pub fn hermiticity_error(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for c in 0..d {
            for r in 0..=c {
                worst = worst.max((self.m[(r, c)] - self.m[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let h = (&self.m + self.m.adjoint()).scale(0.5);
        h.symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// Populations of the computational basis states.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|a| self.m[(a, a)].re).collect()
    }

    /// `Tr(ρ P)` including any imaginary part.
    pub fn expectation_complex(&self, p: &PauliString) -> Result<Complex64> {
        if p.n_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: p.n_qubits(),
            });
        }
        let masks = BasisMasks::of(p);
        let d = self.dim();
        let data = self.data();
        // Tr(ρP) = Σ_c ρ[c, c⊕x] · f(c), with P|c⟩ = f(c)|c⊕x⟩; column-major storage.
        let mut acc = Complex64::new(0.0, 0.0);
        for c in 0..d {
            acc += data[(c ^ masks.x) * d + c] * masks.column_factor(c);
        }
        Ok(acc)
    }

    /// Real part of `Tr(ρ P)`; exact for Hermitian `P` on Hermitian `ρ`.
    pub fn expectation(&self, p: &PauliString) -> Result<f64> {
        Ok(self.expectation_complex(p)?.re)
    }

    /// `ρ → U ρ U†` for a 2×2 unitary acting on `qubit`.
    pub fn apply_single_qubit(&mut self, u: &[[Complex64; 2]; 2], qubit: usize) -> Result<()> {
        if qubit >= self.n {
            return Err(Error::input(format!("qubit {qubit} out of range")));
        }
        let d = self.dim();
        let bit = 1usize << (self.n - 1 - qubit);
        let data = self.m.as_mut_slice();
        // Left multiply: mix rows r0, r1 in every column.
        for c in 0..d {
            let col = c * d;
            for r0 in (0..d).filter(|r| r & bit == 0) {
                let r1 = r0 | bit;
                let (a, b) = (data[col + r0], data[col + r1]);
                data[col + r0] = u[0][0] * a + u[0][1] * b;
                data[col + r1] = u[1][0] * a + u[1][1] * b;
            }
        }
        // Right multiply by U†: mix columns c0, c1.
        let (v00, v01, v10, v11) = (
            u[0][0].conj(),
            u[0][1].conj(),
            u[1][0].conj(),
            u[1][1].conj(),
        );
        for c0 in (0..d).filter(|c| c & bit == 0) {
            let c1 = c0 | bit;
            for r in 0..d {
                let (a, b) = (data[c0 * d + r], data[c1 * d + r]);
                // (ρU†)[r,c0] = ρ[r,c0]·conj(U[0,0]) + ρ[r,c1]·conj(U[0,1])
                data[c0 * d + r] = a * v00 + b * v01;
                data[c1 * d + r] = a * v10 + b * v11;
            }
        }
        Ok(())
    }

    /// `ρ → D ρ D†` for a diagonal unitary `D = diag(phases)`.
    pub fn apply_diagonal(&mut self, phases: &[Complex64]) -> Result<()> {
        let d = self.dim();
        if phases.len() != d {
            return Err(Error::Dimension {
                expected: d,
                got: phases.len(),
            });
        }
        let data = self.m.as_mut_slice();
        for c in 0..d {
            let pc = phases[c].conj();
            for r in 0..d {
                data[c * d + r] *= phases[r] * pc;
            }
        }
        Ok(())
    }
}
