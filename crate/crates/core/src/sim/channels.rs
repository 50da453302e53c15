//! Gates and noise channels acting in place on a [`DensityMatrix`].

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use super::DensityMatrix;
use crate::error::{Error, Result};

/// Largest `Δt/T1` for which the first-order relaxation update is trusted
/// without a warning.
pub const T1_FIRST_ORDER_LIMIT: f64 = 0.05;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `exp(−iYπ/4)`, the Hadamard substitute.
pub fn y90_matrix() -> [[Complex64; 2]; 2] {
    let s = FRAC_1_SQRT_2;
    [[c(s, 0.0), c(-s, 0.0)], [c(s, 0.0), c(s, 0.0)]]
}

/// Single-qubit mixed initial state populations.
pub fn init_state(n: usize, excited: &[f64]) -> Result<DensityMatrix> {
    if excited.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: excited.len(),
        });
    }
    if let Some(p) = excited.iter().find(|p| !(0.0..0.5).contains(*p)) {
        return Err(Error::input(format!(
            "initialisation error {p} outside [0, 0.5)"
        )));
    }
    let mut rho = DensityMatrix::ground(n)?;
    let d = rho.dim();
    let data = rho.data_mut();
    data[0] = c(0.0, 0.0);
    for a in 0..d {
        let pop: f64 = (0..n)
            .map(|j| {
                if a >> (n - 1 - j) & 1 == 1 {
                    excited[j]
                } else {
                    1.0 - excited[j]
                }
            })
            .product();
        data[a * d + a] = c(pop, 0.0);
    }
    Ok(rho)
}

pub fn apply_y90(rho: &mut DensityMatrix, qubit: usize) -> Result<()> {
    rho.apply_single_qubit(&y90_matrix(), qubit)
}

/// `exp(iZπ/4)`.
pub fn apply_z90(rho: &mut DensityMatrix, qubit: usize) -> Result<()> {
    let n = rho.n_qubits();
    if qubit >= n {
        return Err(Error::input(format!("qubit {qubit} out of range")));
    }
    let bit = 1usize << (n - 1 - qubit);
    let plus = Complex64::from_polar(1.0, FRAC_PI_4);
    let minus = plus.conj();
    let phases: Vec<Complex64> = (0..rho.dim())
        .map(|a| if a & bit == 0 { plus } else { minus })
        .collect();
    rho.apply_diagonal(&phases)
}

fn pair_bits(rho: &DensityMatrix, pair: (usize, usize)) -> Result<(usize, usize)> {
    let n = rho.n_qubits();
    let (a, b) = pair;
    if a >= n || b >= n {
        return Err(Error::input(format!(
            "pair ({a}, {b}) out of range for {n} qubits"
        )));
    }
    if a.abs_diff(b) != 1 {
        return Err(Error::Topology(a, b));
    }
    Ok((1 << (n - 1 - a), 1 << (n - 1 - b)))
}

/// Shared kernel: the average of `exp(−iζθ/2)·ρ·exp(iζθ/2)` over
/// `θ = π/2 + δφ` with `E[cos δφ] = coherence` and `E[sin δφ] = 0`.
/// Entries where the ZZ parities agree are untouched; the others pick up
/// `−i·ζ_a·coherence`.
fn zz_quarter_turn(rho: &mut DensityMatrix, pair: (usize, usize), coherence: f64) -> Result<()> {
    let (b1, b2) = pair_bits(rho, pair)?;
    let d = rho.dim();
    let parity = |a: usize| ((a & b1 != 0) as u8) ^ ((a & b2 != 0) as u8);
    let even = c(0.0, -coherence); // ζ_a = +1
    let odd = c(0.0, coherence); // ζ_a = −1
    let data = rho.data_mut();
    for col in 0..d {
        let pc = parity(col);
        for row in 0..d {
            let pr = parity(row);
            if pr != pc {
                data[col * d + row] *= if pr == 0 { even } else { odd };
            }
        }
    }
    Ok(())
}

/// `exp(−iZZπ/4)` on a nearest-neighbour pair.
pub fn apply_zz90(rho: &mut DensityMatrix, pair: (usize, usize)) -> Result<()> {
    zz_quarter_turn(rho, pair, 1.0)
}

/// Mean of `cos δφ` under the raised-cosine density `[1 + cos(πδφ/w)]/(2w)`
/// on `[−w, w]`.
pub fn jitter_coherence(w: f64) -> f64 {
    if w == 0.0 {
        return 1.0;
    }
    let s = w.sin();
    s / w - s / (2.0 * (w + PI)) - s / (2.0 * (w - PI))
}

/// ZZ90 with raised-cosine angular jitter of width `w`, averaged exactly:
/// `ρ → ½[ρ + ζρζ − i·c(w)·(ζρ − ρζ)]`.
pub fn apply_jittered_zz90(rho: &mut DensityMatrix, pair: (usize, usize), w: f64) -> Result<()> {
    if !(0.0..PI).contains(&w) {
        return Err(Error::input(format!("jitter width {w} outside [0, π)")));
    }
    zz_quarter_turn(rho, pair, jitter_coherence(w))
}

/// First-order amplitude damping on every qubit, corrections accumulated
/// from the same input state:
/// `Δρ_i = (σ⁻ρσ⁺ − ½{σ⁺σ⁻, ρ})·Δt/T1_i`.
pub fn apply_t1(rho: &mut DensityMatrix, dt: f64, t1: &[f64]) -> Result<()> {
    let n = rho.n_qubits();
    if t1.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: t1.len(),
        });
    }
    if let Some(t) = t1.iter().find(|t| !(**t > 0.0)) {
        return Err(Error::input(format!("T1 = {t} must be positive")));
    }
    let gammas: Vec<f64> = t1.iter().map(|t| dt / t).collect();
    if gammas.iter().any(|g| *g > T1_FIRST_ORDER_LIMIT) {
        log::warn!("Δt/T1 above {T1_FIRST_ORDER_LIMIT}; first-order relaxation is inaccurate");
    }
    if gammas.iter().all(|g| *g == 0.0) {
        return Ok(());
    }
    let d = rho.dim();
    let old = rho.data().to_vec();
    let data = rho.data_mut();
    for (j, &g) in gammas.iter().enumerate() {
        if g == 0.0 {
            continue;
        }
        let bit = 1usize << (n - 1 - j);
        for col in 0..d {
            let cb = col & bit != 0;
            for row in 0..d {
                let rb = row & bit != 0;
                let idx = col * d + row;
                let mut delta = -0.5 * g * (f64::from(rb as u8) + f64::from(cb as u8)) * old[idx];
                if !rb && !cb {
                    delta += g * old[(col | bit) * d + (row | bit)];
                }
                data[idx] += delta;
            }
        }
    }
    Ok(())
}

/// Element-wise dephasing `ρ → ρ ∘ D`, `D = [[1, e^{−Δt/T2}], [e^{−Δt/T2}, 1]]^{⊗N}`.
pub fn apply_t2(rho: &mut DensityMatrix, dt: f64, t2: f64) -> Result<()> {
    if !(t2 > 0.0) {
        return Err(Error::input(format!("T2 = {t2} must be positive")));
    }
    let n = rho.n_qubits();
    let e = (-dt / t2).exp();
    if e == 1.0 {
        return Ok(());
    }
    let powers: Vec<f64> = (0..=n as i32).map(|k| e.powi(k)).collect();
    let d = rho.dim();
    let data = rho.data_mut();
    for col in 0..d {
        for row in 0..d {
            data[col * d + row] *= powers[(row ^ col).count_ones() as usize];
        }
    }
    Ok(())
}
