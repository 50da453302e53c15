//! Signed N-qubit Pauli strings in symplectic form.
//!
//! A string is stored as x- and z-bit vectors plus a power of `i`. The
//! operator represented is `i^phase · ⊗_j σ(x_j, z_j)` where
//! `σ(0,0) = I`, `σ(1,0) = X`, `σ(0,1) = Z` and `σ(1,1) = Y` (the Hermitian
//! Y, not `XZ`), so a string built from letters has phase 0.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest qubit count for which dense `2^N × 2^N` matrices are built.
pub const DEFAULT_DENSE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    /// The 2×2 matrix of this letter.
    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            Letter::I => [[l, o], [o, l]],
            Letter::X => [[o, l], [l, o]],
            Letter::Y => [[o, -i], [i, o]],
            Letter::Z => [[l, o], [o, -l]],
        }
    }
}

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// `i^k` for `k` taken mod 4.
pub fn i_pow(k: u8) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "a Pauli string needs at least one qubit");
        let w = words_for(n);
        PauliString {
            n,
            x: vec![0; w],
            z: vec![0; w],
            phase: 0,
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::input("empty Pauli string"));
        }
        let mut p = PauliString::identity(letters.len());
        for (j, &l) in letters.iter().enumerate() {
            p.set_letter(j, l);
        }
        Ok(p)
    }

    /// Parses letters only (no sign token).
    pub fn from_letter_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::input(format!("invalid Pauli letter {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PauliString::from_letters(&letters)
    }

    pub fn single(n: usize, qubit: usize, letter: Letter) -> Self {
        let mut p = PauliString::identity(n);
        p.set_letter(qubit, letter);
        p
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// Exponent `k` of the overall `i^k` factor.
    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(mut self, k: u8) -> Self {
        self.phase = k % 4;
        self
    }

    /// `Some(±1)` when the phase is real.
    pub fn sign(&self) -> Option<i8> {
        match self.phase {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn negated(&self) -> Self {
        self.clone().with_phase(self.phase + 2)
    }

    /// The same letters with phase 0.
    pub fn unsigned(&self) -> Self {
        self.clone().with_phase(0)
    }

    pub fn letter(&self, j: usize) -> Letter {
        let (w, b) = (j / WORD, j % WORD);
        Letter::from_bits(self.x[w] >> b & 1 == 1, self.z[w] >> b & 1 == 1)
    }

    pub fn set_letter(&mut self, j: usize, l: Letter) {
        assert!(j < self.n, "qubit {j} out of range for {} qubits", self.n);
        let (w, b) = (j / WORD, j % WORD);
        let (x, z) = l.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | (u64::from(x) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | (u64::from(z) << b);
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n).map(|j| self.letter(j)).collect()
    }

    pub fn to_letters(&self) -> String {
        (0..self.n).map(|j| self.letter(j).as_char()).collect()
    }

    pub fn x_bits(&self) -> &[u64] {
        &self.x
    }

    pub fn z_bits(&self) -> &[u64] {
        &self.z
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn is_identity_letters(&self) -> bool {
        self.weight() == 0
    }

    /// Letters in reverse qubit order, phase kept.
    pub fn reversed(&self) -> Self {
        let mut p = PauliString::identity(self.n).with_phase(self.phase);
        for j in 0..self.n {
            p.set_letter(self.n - 1 - j, self.letter(j));
        }
        p
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut exp = i64::from(self.phase) + i64::from(other.phase);
        let mut x = Vec::with_capacity(self.x.len());
        let mut z = Vec::with_capacity(self.z.len());
        for w in 0..self.x.len() {
            let (x1, z1, x2, z2) = (self.x[w], self.z[w], other.x[w], other.z[w]);
            let (x3, z3) = (x1 ^ x2, z1 ^ z2);
            // σ(a)σ(b) = i^{x1z1 + x2z2 + 2 z1x2 - x3z3} σ(a⊕b)
            exp += i64::from((x1 & z1).count_ones())
                + i64::from((x2 & z2).count_ones())
                + 2 * i64::from((z1 & x2).count_ones())
                - i64::from((x3 & z3).count_ones());
            x.push(x3);
            z.push(z3);
        }
        Ok(PauliString {
            n: self.n,
            x,
            z,
            phase: exp.rem_euclid(4) as u8,
        })
    }

    /// Bit mask (per word) of the sites where the two strings anticommute.
    pub fn anticommuting_sites(&self, other: &Self) -> Result<Vec<u64>> {
        self.check_len(other)?;
        Ok((0..self.x.len())
            .map(|w| (self.x[w] & other.z[w]) ^ (self.z[w] & other.x[w]))
            .collect())
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        let sites = self.anticommuting_sites(other)?;
        Ok(sites.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 0)
    }

    /// Dense matrix under the default cap.
    pub fn to_matrix(&self) -> Result<DMatrix<Complex64>> {
        self.to_matrix_capped(DEFAULT_DENSE_CAP)
    }

    /// Kronecker product of the letters, first letter as the most significant
    /// tensor factor, times `i^phase`.
    pub fn to_matrix_capped(&self, cap: usize) -> Result<DMatrix<Complex64>> {
        if self.n > cap {
            return Err(Error::Resource {
                what: "dense matrix qubit count",
                value: self.n,
                cap,
            });
        }
        let masks = BasisMasks::of(self);
        let dim = 1usize << self.n;
        let mut m = DMatrix::zeros(dim, dim);
        for c in 0..dim {
            m[(c ^ masks.x, c)] = masks.column_factor(c);
        }
        Ok(m)
    }
}

/// A Pauli string projected onto computational-basis indices, where qubit `j`
/// of an `n`-qubit register is bit `n - 1 - j` of the index.
///
/// `P|c⟩ = column_factor(c) · |c ⊕ x⟩`.
#[derive(Debug, Clone, Copy)]
pub struct BasisMasks {
    pub x: usize,
    pub z: usize,
    /// Exponent of the `i` factor from the phase and the Y letters.
    pub base_phase: u8,
}

impl BasisMasks {
    pub fn of(p: &PauliString) -> Self {
        assert!(
            p.n < usize::BITS as usize,
            "too many qubits for basis masks"
        );
        let (mut x, mut z, mut ny) = (0usize, 0usize, 0u32);
        for j in 0..p.n {
            let bit = 1usize << (p.n - 1 - j);
            let (xb, zb) = p.letter(j).bits();
            if xb {
                x |= bit;
            }
            if zb {
                z |= bit;
            }
            if xb && zb {
                ny += 1;
            }
        }
        BasisMasks {
            x,
            z,
            base_phase: ((u32::from(p.phase) + ny) % 4) as u8,
        }
    }

    #[inline]
    pub fn column_factor(&self, c: usize) -> Complex64 {
        let sign = if (c & self.z).count_ones() % 2 == 1 {
            2
        } else {
            0
        };
        i_pow(self.base_phase + sign)
    }
}

/// Basis-index mask of qubit `j` in an `n`-qubit register.
#[inline]
pub fn qubit_bit(n: usize, j: usize) -> usize {
    1usize << (n - 1 - j)
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{token}{}", self.to_letters())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Accepts an optional `+`, `-`, `+i`, `-i` (or bare `i`) token followed
    /// by letters, e.g. `-YXY`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else {
            (0, s)
        };
        Ok(PauliString::from_letter_str(rest)?.with_phase(phase))
    }
}
