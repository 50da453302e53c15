use rayon::prelude::*;

use super::IdTable;
use crate::error::{Error, Result};
use crate::pauli::Letter;

/// Default cap on the number of hidden variables enumerated (`2^18`
/// assignments).
pub const DEFAULT_LHVT_EXPONENT_CAP: usize = 18;

pub fn lhvt_max_brute(table: &IdTable) -> Result<i64> {
    lhvt_max_brute_capped(table, DEFAULT_LHVT_EXPONENT_CAP)
}

/// Exact maximum of `Σ_i λ_i ∏_j v(O_ij, j)` over all ±1 assignments of
/// local hidden variables. Only letters that occur in a column get a
/// variable.
pub fn lhvt_max_brute_capped(table: &IdTable, cap: usize) -> Result<i64> {
    table.ensure_valid()?;
    let n = table.n_qubits();
    let mut var_of = vec![[usize::MAX; 3]; n];
    let mut n_vars = 0;
    for (j, vars) in var_of.iter_mut().enumerate() {
        for i in 0..table.n_rows() {
            let slot = match table.letter(i, j) {
                Letter::I => continue,
                Letter::X => 0,
                Letter::Y => 1,
                Letter::Z => 2,
            };
            if vars[slot] == usize::MAX {
                vars[slot] = n_vars;
                n_vars += 1;
            }
        }
    }
    if n_vars > cap.min(63) {
        return Err(Error::Resource {
            what: "hidden-variable count (reduce per column or raise the cap)",
            value: n_vars,
            cap,
        });
    }

    let rows: Vec<(u64, i64)> = (0..table.n_rows())
        .map(|i| {
            let mask = (0..n).fold(0u64, |m, j| match table.letter(i, j) {
                Letter::I => m,
                Letter::X => m | 1 << var_of[j][0],
                Letter::Y => m | 1 << var_of[j][1],
                Letter::Z => m | 1 << var_of[j][2],
            });
            (mask, i64::from(table.eigenvalues()[i]))
        })
        .collect();

    let value = |assign: u64| -> i64 {
        rows.iter()
            .map(|&(mask, lambda)| {
                if (assign & mask).count_ones().is_multiple_of(2) {
                    lambda
                } else {
                    -lambda
                }
            })
            .sum()
    };

    // A set bit encodes the outcome −1.
    let total = 1u64 << n_vars;
    const CHUNK: u64 = 1 << 12;
    let best = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(total);
            (lo..hi).map(value).max().unwrap_or(i64::MIN)
        })
        .max()
        .unwrap_or(i64::MIN);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive oracle with all three variables per qubit, no reduction.
    fn full_enumeration(t: &IdTable) -> i64 {
        let n = t.n_qubits();
        let mut best = i64::MIN;
        for a in 0u64..(1 << (3 * n)) {
            let v = |j: usize, l: Letter| -> i64 {
                let k = match l {
                    Letter::I => return 1,
                    Letter::X => 0,
                    Letter::Y => 1,
                    Letter::Z => 2,
                };
                if a >> (3 * j + k) & 1 == 1 {
                    -1
                } else {
                    1
                }
            };
            let s: i64 = (0..t.n_rows())
                .map(|i| {
                    i64::from(t.eigenvalues()[i])
                        * (0..n).map(|j| v(j, t.letter(i, j))).product::<i64>()
                })
                .sum();
            best = best.max(s);
        }
        best
    }

    #[test]
    fn fig1_classical_maximum_is_two() {
        let t = IdTable::from_signed(&["-YXY", "+YYZ", "+ZXZ", "+ZYY"]).unwrap();
        assert_eq!(full_enumeration(&t), 2);
        assert_eq!(lhvt_max_brute(&t).unwrap(), 2);
    }

    #[test]
    fn non_ghz_id_can_be_classical() {
        // XX, ZZ, YY with eigenvalues (+,+,−): columns have odd counts, so a
        // local assignment reaches the quantum value.
        let t = IdTable::from_signed(&["+XX", "+ZZ", "-YY"]).unwrap();
        assert_eq!(full_enumeration(&t), lhvt_max_brute(&t).unwrap());
        assert_eq!(lhvt_max_brute(&t).unwrap(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let t = IdTable::from_signed(&["-YXY", "+YYZ", "+ZXZ", "+ZYY"]).unwrap();
        assert!(matches!(
            lhvt_max_brute_capped(&t, 5),
            Err(Error::Resource { .. })
        ));
    }
}
