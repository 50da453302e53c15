//! Search for benchmark IDs inside the linear-cluster stabilizer group.
//!
//! An ID of `M` group elements is an `M × N` bit matrix `G` whose row `r` is
//! the generator mask of element `r`. Because `K_j` only touches qubits
//! `j−1, j, j+1`, the letter of row `r` at qubit `j` is fixed by column bits
//! `G[r][j−1], G[r][j], G[r][j+1]`: `x = G[r][j]`, `z = G[r][j−1] ⊕ G[r][j+1]`.
//! The search therefore walks the columns of `G` left to right and checks
//! each qubit's letter counts as soon as its right neighbour column is set.
//!
//! * Every column has even weight, so the masks XOR to zero and the rows
//!   multiply to `±I`.
//! * Rows are kept in strictly increasing lexicographic order, which removes
//!   the `M!` row permutations and forces rows to be distinct.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{cluster_stabilizer_group, ClusterGroup, GROUP_CAP};
use crate::error::{Error, Result};
use crate::id::{is_maximally_entangled, IdTable};
use crate::pauli::{Letter, PauliString};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConstraints {
    pub m: usize,
    pub require_ghz: bool,
    pub require_maxent: bool,
    pub max_results: Option<usize>,
    pub canonical_dedup: bool,
    /// Keep only IDs with the fewest non-identity entries (pruned search).
    pub lightest_only: bool,
}

impl SearchConstraints {
    /// Every predicate on, no limit, deduplicated.
    pub fn benchmark(m: usize) -> Self {
        SearchConstraints {
            m,
            require_ghz: true,
            require_maxent: true,
            max_results: None,
            canonical_dedup: true,
            lightest_only: false,
        }
    }
}

struct Walker<'a> {
    n: usize,
    m: usize,
    full: u32,
    ghz: bool,
    maxent: bool,
    limit: usize,
    lightest: bool,
    /// Weight of the lightest ID found so far, shared across chunks.
    bound: &'a AtomicUsize,
    group: &'a ClusterGroup,
    /// Even-weight column patterns.
    patterns: Vec<u32>,
    found: Vec<IdTable>,
}

impl Walker<'_> {
    fn column_weight(&self, left: u32, mid: u32, right: u32) -> usize {
        ((mid | (left ^ right)) & self.full).count_ones() as usize
    }

    /// Checks qubit `j`'s column given its neighbours' columns.
    fn column_ok(&self, left: u32, mid: u32, right: u32) -> bool {
        let zc = left ^ right;
        if mid | zc == 0 {
            return false;
        }
        if !self.ghz {
            return true;
        }
        let xs = mid & !zc;
        let ys = mid & zc;
        let zs = !mid & zc & self.full;
        xs.count_ones().is_multiple_of(2)
            && ys.count_ones().is_multiple_of(2)
            && zs.count_ones().is_multiple_of(2)
    }

    fn walk(&mut self, cols: &mut Vec<u32>, tied: u32, weight: usize) {
        if self.found.len() >= self.limit || weight > self.bound.load(Ordering::Relaxed) {
            return;
        }
        let j = cols.len();
        if j == self.n {
            let left = if j >= 2 { cols[j - 2] } else { 0 };
            if tied == 0 && self.column_ok(left, cols[j - 1], 0) {
                let total = weight + self.column_weight(left, cols[j - 1], 0);
                if total <= self.bound.load(Ordering::Relaxed) {
                    self.leaf(cols, total);
                }
            }
            return;
        }
        for k in 0..self.patterns.len() {
            let c = self.patterns[k];
            // A tied pair (r, r+1) may not get 1 above 0.
            if c & !(c >> 1) & tied != 0 {
                continue;
            }
            let mut w = weight;
            if j >= 1 {
                let left = if j >= 2 { cols[j - 2] } else { 0 };
                if !self.column_ok(left, cols[j - 1], c) {
                    continue;
                }
                w += self.column_weight(left, cols[j - 1], c);
            }
            let still_tied = tied & !(!c & (c >> 1));
            cols.push(c);
            self.walk(cols, still_tied, w);
            cols.pop();
        }
    }

    fn leaf(&mut self, cols: &[u32], weight: usize) {
        let masks: Vec<u64> = (0..self.m)
            .map(|r| {
                cols.iter()
                    .enumerate()
                    .fold(0u64, |g, (j, c)| g | u64::from(c >> r & 1) << j)
            })
            .collect();
        if masks.contains(&0) || gf2_rank(&masks) != self.m - 1 {
            return;
        }
        let signed: Vec<PauliString> = masks.iter().map(|&g| self.group.element(g)).collect();
        let eig: Vec<i8> = signed
            .iter()
            .map(|p| p.sign().expect("real sign"))
            .collect();
        let bare: Vec<PauliString> = signed.iter().map(PauliString::unsigned).collect();
        let Ok(table) = IdTable::from_rows(bare, eig) else {
            return;
        };
        if table.sign() != -1 {
            return;
        }
        if self.maxent && !is_maximally_entangled(&table).unwrap_or(false) {
            return;
        }
        if self.lightest {
            self.bound.fetch_min(weight, Ordering::Relaxed);
            self.found.retain(|t| t.weight() <= weight);
        }
        self.found.push(table);
    }
}

fn gf2_rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// IDs made of cluster-group elements (eigenvalues are the group signs) with
/// sign −1, no all-`I` column, `M − 1` independent rows and the requested
/// predicates. Results are sorted by canonical form; with `canonical_dedup`
/// a table and its qubit reversal count once.
pub fn search_ids(n: usize, constraints: &SearchConstraints) -> Result<Vec<IdTable>> {
    let m = constraints.m;
    if m < 3 || m > n + 1 {
        return Err(Error::input(format!("M={m} outside [3, N+1] for N={n}")));
    }
    if n > GROUP_CAP {
        return Err(Error::Resource {
            what: "cluster group qubit count",
            value: n,
            cap: GROUP_CAP,
        });
    }
    let group = cluster_stabilizer_group(n)?;
    let full = ((1u64 << m) - 1) as u32;
    let patterns: Vec<u32> = (0..=full).filter(|c| c.count_ones() % 2 == 0).collect();
    let all_tied = full >> 1;
    let per_chunk = constraints
        .max_results
        .map_or(usize::MAX, |k| k.saturating_mul(2));

    let bound = AtomicUsize::new(usize::MAX);
    // Split on the first column; chunks are merged in pattern order.
    let chunks: Vec<Vec<IdTable>> = patterns
        .par_iter()
        .filter(|&&c| c & !(c >> 1) & all_tied == 0)
        .map(|&c| {
            let mut w = Walker {
                n,
                m,
                full,
                ghz: constraints.require_ghz,
                maxent: constraints.require_maxent,
                limit: per_chunk,
                lightest: constraints.lightest_only,
                bound: &bound,
                group: &group,
                patterns: patterns.clone(),
                found: Vec::new(),
            };
            let mut cols = vec![c];
            w.walk(&mut cols, all_tied & !(!c & (c >> 1)), 0);
            w.found
        })
        .collect();
    let mut chunks: Vec<IdTable> = chunks.into_iter().flatten().collect();
    if constraints.lightest_only {
        let min = chunks.iter().map(IdTable::weight).min().unwrap_or(0);
        chunks.retain(|t| t.weight() == min);
    }

    let mut out: BTreeMap<Vec<(Vec<Letter>, i8)>, IdTable> = BTreeMap::new();
    for t in chunks {
        let t = if constraints.canonical_dedup {
            t.canonical()
        } else {
            t.sorted_rows()
        };
        out.entry(key(&t)).or_insert(t);
    }
    let mut v: Vec<IdTable> = out.into_values().collect();
    if let Some(k) = constraints.max_results {
        v.truncate(k);
    }
    Ok(v)
}

fn key(t: &IdTable) -> Vec<(Vec<Letter>, i8)> {
    t.rows()
        .iter()
        .map(PauliString::letters)
        .zip(t.eigenvalues().iter().copied())
        .collect()
}
