//! Identity products ("IDs"): sets of mutually commuting Pauli strings whose
//! product is `±I`, together with a choice of eigenvalue per row.

mod bounds;
mod format;
mod lhvt;

pub use bounds::{
    benchmark_score, correlator_expectation, eigenspace_projector, fidelity_lower_bound,
    target_fidelity, CorrelatorReport,
};
pub use format::{parse_catalog, write_catalog};
pub use lhvt::{lhvt_max_brute, lhvt_max_brute_capped, DEFAULT_LHVT_EXPONENT_CAP};

use crate::error::{Error, IdFailure, Result};
use crate::pauli::{Letter, PauliString};

/// Largest qubit count for the `2^(N-1)` bipartition scan.
pub const DEFAULT_BIPARTITION_CAP: usize = 20;

/// An `M × N` table of Pauli letters with a declared overall sign and one
/// eigenvalue per row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdTable {
    rows: Vec<PauliString>,
    eigenvalues: Vec<i8>,
    sign: i8,
}

impl IdTable {
    /// Builds a table without checking the algebraic ID properties; use
    /// [`validate_id`] for that. Rows must be bare (phase 0) and of equal
    /// length, eigenvalues and sign must be ±1.
    pub fn new(rows: Vec<PauliString>, eigenvalues: Vec<i8>, sign: i8) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::input("an ID needs at least one row"));
        };
        let n = first.n_qubits();
        if let Some(r) = rows.iter().find(|r| r.n_qubits() != n) {
            return Err(Error::Dimension {
                expected: n,
                got: r.n_qubits(),
            });
        }
        if rows.iter().any(|r| r.phase_exp() != 0) {
            return Err(Error::input("ID rows must be unsigned letter strings"));
        }
        if eigenvalues.len() != rows.len() {
            return Err(Error::Dimension {
                expected: rows.len(),
                got: eigenvalues.len(),
            });
        }
        if eigenvalues
            .iter()
            .chain([&sign])
            .any(|&v| v != 1 && v != -1)
        {
            return Err(Error::input("eigenvalues and sign must be +1 or -1"));
        }
        Ok(IdTable {
            rows,
            eigenvalues,
            sign,
        })
    }

    /// Builds a table whose sign is the computed row product.
    pub fn from_rows(rows: Vec<PauliString>, eigenvalues: Vec<i8>) -> Result<Self> {
        let mut t = IdTable::new(rows, eigenvalues, 1)?;
        let prod = t.row_product();
        if !prod.is_identity_letters() {
            return Err(Error::InvalidId(vec![IdFailure::ProductNotIdentity]));
        }
        t.sign = prod
            .sign()
            .ok_or_else(|| Error::InvalidId(vec![IdFailure::ImaginaryProductPhase]))?;
        Ok(t)
    }

    /// Parses rows written as signed strings, e.g. `["-YXY", "+YYZ"]`; the
    /// sign of each string becomes its eigenvalue.
    pub fn from_signed(rows: &[&str]) -> Result<Self> {
        let mut bare = Vec::with_capacity(rows.len());
        let mut eig = Vec::with_capacity(rows.len());
        for s in rows {
            let p: PauliString = s.parse()?;
            eig.push(
                p.sign()
                    .ok_or_else(|| Error::input(format!("eigenvalue of {s} is not real")))?,
            );
            bare.push(p.unsigned());
        }
        IdTable::from_rows(bare, eig)
    }

    pub fn n_qubits(&self) -> usize {
        self.rows[0].n_qubits()
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    pub fn eigenvalues(&self) -> &[i8] {
        &self.eigenvalues
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn letter(&self, i: usize, j: usize) -> Letter {
        self.rows[i].letter(j)
    }

    /// Row `i` with its eigenvalue applied as a sign.
    pub fn signed_row(&self, i: usize) -> PauliString {
        if self.eigenvalues[i] < 0 {
            self.rows[i].negated()
        } else {
            self.rows[i].clone()
        }
    }

    pub fn row_product(&self) -> PauliString {
        self.rows
            .iter()
            .skip(1)
            .fold(self.rows[0].clone(), |acc, r| {
                acc.multiply(r).expect("rows share a length")
            })
    }

    /// Total number of non-identity entries.
    pub fn weight(&self) -> usize {
        self.rows.iter().map(PauliString::weight).sum()
    }

    /// The same ID targeting the eigenspace with eigenvalues `i` and `j`
    /// flipped; the product of eigenvalues is unchanged.
    pub fn with_flipped_pair(&self, i: usize, j: usize) -> Result<Self> {
        let m = self.n_rows();
        if i == j || i >= m || j >= m {
            return Err(Error::input(format!(
                "cannot flip row pair ({i}, {j}) of {m}"
            )));
        }
        let mut t = self.clone();
        t.eigenvalues[i] = -t.eigenvalues[i];
        t.eigenvalues[j] = -t.eigenvalues[j];
        Ok(t)
    }

    /// Qubit order reversed.
    pub fn reversed(&self) -> Self {
        IdTable {
            rows: self.rows.iter().map(PauliString::reversed).collect(),
            eigenvalues: self.eigenvalues.clone(),
            sign: self.sign,
        }
    }

    /// Rows sorted by letters (I < X < Y < Z), keeping eigenvalues attached.
    pub fn sorted_rows(&self) -> Self {
        let mut pairs: Vec<_> = self
            .rows
            .iter()
            .cloned()
            .zip(self.eigenvalues.iter().copied())
            .collect();
        pairs.sort_by_key(|(r, _)| r.letters());
        let (rows, eigenvalues) = pairs.into_iter().unzip();
        IdTable {
            rows,
            eigenvalues,
            sign: self.sign,
        }
    }

    /// Canonical representative under row reordering and qubit reversal.
    pub fn canonical(&self) -> Self {
        let a = self.sorted_rows();
        let b = self.reversed().sorted_rows();
        if b.sort_key() < a.sort_key() {
            b
        } else {
            a
        }
    }

    fn sort_key(&self) -> Vec<(Vec<Letter>, i8)> {
        self.rows
            .iter()
            .map(PauliString::letters)
            .zip(self.eigenvalues.iter().copied())
            .collect()
    }

    /// Fails with [`Error::InvalidId`] unless [`validate_id`] passes.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = validate_id(self);
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidId(report.failures))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Sign of the row product when it is `±I`.
    pub computed_sign: Option<i8>,
    pub failures: Vec<IdFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_id(table: &IdTable) -> ValidationReport {
    let mut failures = Vec::new();
    let rows = table.rows();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if !rows[i].commutes(&rows[j]).expect("rows share a length") {
                failures.push(IdFailure::NonCommuting(i, j));
            }
        }
    }

    let prod = table.row_product();
    let mut computed_sign = None;
    if !prod.is_identity_letters() {
        failures.push(IdFailure::ProductNotIdentity);
    } else if let Some(s) = prod.sign() {
        computed_sign = Some(s);
        if s != table.sign() {
            failures.push(IdFailure::SignMismatch {
                declared: table.sign(),
                computed: s,
            });
        }
    } else {
        failures.push(IdFailure::ImaginaryProductPhase);
    }

    let eig_product: i8 = table.eigenvalues().iter().product();
    if eig_product != table.sign() {
        failures.push(IdFailure::EigenvalueProduct {
            product: eig_product,
            sign: table.sign(),
        });
    }

    for j in 0..table.n_qubits() {
        if (0..table.n_rows()).all(|i| table.letter(i, j) == Letter::I) {
            failures.push(IdFailure::IdentityColumn(j));
        }
    }

    ValidationReport {
        computed_sign,
        failures,
    }
}

/// Per-qubit counts of (X, Y, Z) entries.
pub fn column_letter_counts(table: &IdTable) -> Vec<[usize; 3]> {
    (0..table.n_qubits())
        .map(|j| {
            let mut c = [0; 3];
            for i in 0..table.n_rows() {
                match table.letter(i, j) {
                    Letter::X => c[0] += 1,
                    Letter::Y => c[1] += 1,
                    Letter::Z => c[2] += 1,
                    Letter::I => {}
                }
            }
            c
        })
        .collect()
}

/// Sign −1 and an even number of each of X, Y, Z in every column: the ID
/// then admits no consistent local hidden-variable assignment.
pub fn ghz_parity_check(table: &IdTable) -> Result<bool> {
    table.ensure_valid()?;
    Ok(table.sign() == -1
        && column_letter_counts(table)
            .iter()
            .all(|c| c.iter().all(|k| k % 2 == 0)))
}

pub fn is_maximally_entangled(table: &IdTable) -> Result<bool> {
    is_maximally_entangled_capped(table, DEFAULT_BIPARTITION_CAP)
}

/// True iff every nontrivial bipartition of the qubits has some row pair
/// whose restrictions to one side anticommute.
pub fn is_maximally_entangled_capped(table: &IdTable, cap: usize) -> Result<bool> {
    table.ensure_valid()?;
    let n = table.n_qubits();
    if n > cap {
        return Err(Error::Resource {
            what: "bipartition scan qubit count",
            value: n,
            cap,
        });
    }
    if n < 2 {
        return Ok(false);
    }
    // Anticommuting-site masks of every row pair, packed into one word.
    let rows = table.rows();
    let mut pair_masks = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let sites = rows[i].anticommuting_sites(&rows[j])?;
            if sites[0] != 0 {
                pair_masks.push(sites[0]);
            }
        }
    }
    // Side A always contains the last qubit; A = everything is trivial.
    let last = 1u64 << (n - 1);
    let full = (1u64 << n) - 1;
    for rest in 0..(1u64 << (n - 1)) {
        let a = rest | last;
        if a == full {
            continue;
        }
        let separable = pair_masks
            .iter()
            .all(|m| (m & a).count_ones().is_multiple_of(2));
        if separable {
            return Ok(false);
        }
    }
    Ok(true)
}
