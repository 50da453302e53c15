//! The linear-cluster stabilizer group and the benchmark IDs drawn from it.

mod search;

use std::collections::BTreeMap;

pub use search::{search_ids, SearchConstraints};

use crate::error::{Error, Result};
use crate::id::{parse_catalog, IdTable};
use crate::pauli::{Letter, PauliString};

/// Largest array for which the `2^N` group elements may be enumerated.
pub const GROUP_CAP: usize = 24;

/// Stabilizer group of the linear cluster state on `N` qubits, generated by
/// `K_j = Z_{j−1} X_j Z_{j+1}`. Element `g` (a bit mask over generators) is
/// `∏_{j ∈ g} K_j`, carrying its sign.
#[derive(Debug, Clone)]
pub struct ClusterGroup {
    n: usize,
    generators: Vec<PauliString>,
}

impl ClusterGroup {
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn len(&self) -> u64 {
        1u64 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, mask: u64) -> PauliString {
        let mut p = PauliString::identity(self.n);
        for (j, k) in self.generators.iter().enumerate() {
            if mask >> j & 1 == 1 {
                p = p.multiply(k).expect("same length");
            }
        }
        p
    }

    pub fn iter(&self) -> impl Iterator<Item = PauliString> + '_ {
        (0..self.len()).map(|g| self.element(g))
    }

    /// Eigenvalue of the cluster state for the letters of `p` (its phase is
    /// ignored), if `±p` is a group element.
    pub fn eigenvalue_of(&self, p: &PauliString) -> Option<i8> {
        if p.n_qubits() != self.n {
            return None;
        }
        // The X part of an element equals its generator mask.
        let mask = (0..self.n).fold(0u64, |m, j| {
            let (x, _) = p.letter(j).bits();
            m | u64::from(x) << j
        });
        let e = self.element(mask);
        if e.letters() == p.letters() {
            e.sign()
        } else {
            None
        }
    }

    pub fn contains(&self, signed: &PauliString) -> bool {
        self.eigenvalue_of(&signed.unsigned()) == signed.sign()
    }
}

pub fn cluster_stabilizer_group(n: usize) -> Result<ClusterGroup> {
    if n < 2 {
        return Err(Error::input("a linear cluster needs at least two qubits"));
    }
    if n > GROUP_CAP {
        return Err(Error::Resource {
            what: "cluster group qubit count",
            value: n,
            cap: GROUP_CAP,
        });
    }
    let generators = (0..n)
        .map(|j| {
            let mut k = PauliString::single(n, j, Letter::X);
            if j > 0 {
                k.set_letter(j - 1, Letter::Z);
            }
            if j + 1 < n {
                k.set_letter(j + 1, Letter::Z);
            }
            k
        })
        .collect();
    Ok(ClusterGroup { n, generators })
}

/// Smallest `M` with `N ≤ (M − 2)(M − 1)/2`.
pub fn minimal_m(n: usize) -> usize {
    let mut m = 3;
    while (m - 2) * (m - 1) / 2 < n {
        m += 1;
    }
    m
}

const FROZEN_CATALOG: &str = include_str!("../../data/catalog.txt");

/// Frozen benchmark IDs for `N = 3…9`, keyed by `N`.
pub fn builtin_catalog() -> BTreeMap<usize, IdTable> {
    parse_catalog(FROZEN_CATALOG)
        .expect("frozen catalog parses")
        .into_iter()
        .map(|t| (t.n_qubits(), t))
        .collect()
}

/// The catalog as committed, in file form.
pub fn builtin_catalog_text() -> &'static str {
    FROZEN_CATALOG
}

/// The three-qubit ID with the eigenvalues of the cluster state.
pub fn three_qubit_id() -> IdTable {
    IdTable::from_signed(&["-YXY", "+YYZ", "+ZXZ", "+ZYY"]).expect("valid ID")
}

/// Re-derives the catalog entry for `n`: the lightest (fewest non-identity
/// entries, then canonical order) ID at `minimal_m(n)` with every predicate
/// on, falling back to `M + 1` if none exists. `N = 3` is the hand-written
/// table.
pub fn derive_catalog_entry(n: usize) -> Result<IdTable> {
    if n == 3 {
        return Ok(three_qubit_id());
    }
    let m0 = minimal_m(n);
    for m in m0..=n + 1 {
        let c = SearchConstraints {
            lightest_only: true,
            ..SearchConstraints::benchmark(m)
        };
        if let Some(best) = search_ids(n, &c)?.into_iter().next() {
            if m != m0 {
                log::warn!("no minimal ID with M={m0} for N={n}; using M={m}");
            }
            return Ok(best);
        }
    }
    Err(Error::input(format!("no benchmark ID found for N={n}")))
}
