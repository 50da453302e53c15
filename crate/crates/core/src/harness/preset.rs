/// Per-qubit T1 and initialisation error of a 9-qubit chip.
#[derive(Debug, Clone, PartialEq)]
pub struct ChipPreset {
    pub name: &'static str,
    pub t1_us: [f64; 9],
    pub pe_percent: [f64; 9],
}

/// Reported values of the 9-qubit superconducting chip used throughout.
pub const CHIP: ChipPreset = ChipPreset {
    name: "chip",
    t1_us: [18.6, 28.1, 22.0, 19.1, 41.1, 21.3, 39.2, 24.7, 26.3],
    pe_percent: [1.8, 1.1, 1.7, 1.3, 4.8, 0.7, 6.7, 0.4, 1.5],
};

/// Median dephasing time used for the fixed-T2 curves, µs.
pub const MEDIAN_T2_US: f64 = 10.0;
/// Median jitter width used for the fixed-w curves, rad.
pub const MEDIAN_W_RAD: f64 = 0.275;

fn median(v: &[f64]) -> f64 {
    let mut s = v.to_vec();
    s.sort_by(f64::total_cmp);
    let k = s.len();
    if k % 2 == 1 {
        s[k / 2]
    } else {
        0.5 * (s[k / 2 - 1] + s[k / 2])
    }
}

impl ChipPreset {
    pub fn by_name(name: &str) -> Option<&'static ChipPreset> {
        (name == CHIP.name).then_some(&CHIP)
    }

    /// T1 in seconds for an `n`-qubit array built from the last `n` chip
    /// qubits.
    pub fn t1_seconds(&self, n: usize) -> Vec<f64> {
        self.t1_us[9 - n.min(9)..]
            .iter()
            .map(|t| t * 1e-6)
            .collect()
    }

    /// Initialisation error probabilities for the last `n` chip qubits.
    pub fn init_error(&self, n: usize) -> Vec<f64> {
        self.pe_percent[9 - n.min(9)..]
            .iter()
            .map(|p| p / 100.0)
            .collect()
    }

    pub fn median_t1_us(&self) -> f64 {
        median(&self.t1_us)
    }

    pub fn median_pe(&self) -> f64 {
        median(&self.pe_percent) / 100.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn last_n_qubits() {
        let t1 = CHIP.t1_seconds(3);
        assert_eq!(t1.len(), 3);
        assert!((t1[0] - 39.2e-6).abs() < 1e-18);
        assert!((t1[2] - 26.3e-6).abs() < 1e-18);
        assert_eq!(CHIP.init_error(2), vec![0.004, 0.015]);
        assert_eq!(CHIP.init_error(9).len(), 9);
    }

    #[test]
    fn medians() {
        assert_eq!(CHIP.median_t1_us(), 24.7);
        assert_eq!(CHIP.median_pe(), 0.015);
        assert!(ChipPreset::by_name("chip").is_some());
        assert!(ChipPreset::by_name("other").is_none());
    }
}
