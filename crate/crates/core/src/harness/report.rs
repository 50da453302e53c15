//! Plot-ready data files derived from a sweep table.

use std::fmt::Write as _;
use std::str::FromStr;

use super::preset::{CHIP, MEDIAN_T2_US, MEDIAN_W_RAD};
use super::sweep::SweepRow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    /// `n b_min b_median b_max`
    BVsN,
    /// `n t2_us b_score` at the median T1 and w.
    BVsT2,
    /// `n t1_us b_score` at the median T2 and w.
    BVsT1,
    /// `n w_rad b_score` at the median T1 and T2.
    BVsW,
    /// `n f_true f_id` for every row.
    FidScatter,
}

impl FromStr for ReportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "b_vs_n" => ReportKind::BVsN,
            "b_vs_t2" => ReportKind::BVsT2,
            "b_vs_t1" => ReportKind::BVsT1,
            "b_vs_w" => ReportKind::BVsW,
            "fid_scatter" => ReportKind::FidScatter,
            _ => {
                return Err(Error::input(format!(
                    "unknown report kind {s:?} (b_vs_n, b_vs_t2, b_vs_t1, b_vs_w, fid_scatter)"
                )))
            }
        })
    }
}

/// Grid value in `values` closest to `target` (infinite values match an
/// infinite target only).
fn nearest(values: impl Iterator<Item = f64>, target: f64) -> Option<f64> {
    values.min_by(|a, b| {
        let da = if *a == target {
            0.0
        } else {
            (a - target).abs()
        };
        let db = if *b == target {
            0.0
        } else {
            (b - target).abs()
        };
        da.total_cmp(&db)
    })
}

fn median_sorted(v: &[f64]) -> f64 {
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        0.5 * (v[k / 2 - 1] + v[k / 2])
    }
}

/// Rows whose T1 sits at the median (preset rows always do).
fn at_median_t1(rows: &[SweepRow]) -> Vec<&SweepRow> {
    let t1 = nearest(rows.iter().filter_map(SweepRow::t1_us), CHIP.median_t1_us());
    rows.iter()
        .filter(|r| r.t1_us().is_none() || r.t1_us() == t1)
        .collect()
}

fn at_median_t2(rows: Vec<&SweepRow>) -> Vec<&SweepRow> {
    let t2 = nearest(rows.iter().map(|r| r.t2_us), MEDIAN_T2_US);
    rows.into_iter().filter(|r| Some(r.t2_us) == t2).collect()
}

fn at_median_w(rows: Vec<&SweepRow>) -> Vec<&SweepRow> {
    let w = nearest(rows.iter().map(|r| r.w_rad), MEDIAN_W_RAD);
    rows.into_iter().filter(|r| Some(r.w_rad) == w).collect()
}

/// When several initialisation-error sources are present, the first one in
/// table order is kept.
fn single_pe(rows: &[SweepRow]) -> Vec<SweepRow> {
    match rows.first() {
        Some(first) => rows
            .iter()
            .filter(|r| r.pe_source == first.pe_source)
            .cloned()
            .collect(),
        None => Vec::new(),
    }
}

/// Renders the requested view as whitespace-separated columns with a
/// one-line header.
pub fn report(rows: &[SweepRow], kind: ReportKind) -> Result<String> {
    let mut out = String::new();
    let pe_rows = single_pe(rows);
    let selected: Vec<&SweepRow> = match kind {
        ReportKind::BVsN | ReportKind::FidScatter => rows.iter().collect(),
        ReportKind::BVsT2 => at_median_w(at_median_t1(&pe_rows)),
        ReportKind::BVsT1 => at_median_w(at_median_t2(pe_rows.iter().collect())),
        ReportKind::BVsW => at_median_t2(at_median_t1(&pe_rows)),
    };
    if selected.is_empty() {
        return Err(Error::input("report selection is empty"));
    }
    match kind {
        ReportKind::BVsN => {
            out.push_str("n b_min b_median b_max\n");
            let mut ns: Vec<usize> = selected.iter().map(|r| r.n).collect();
            ns.sort_unstable();
            ns.dedup();
            for n in ns {
                let mut b: Vec<f64> = selected
                    .iter()
                    .filter(|r| r.n == n)
                    .map(|r| r.b_score)
                    .collect();
                b.sort_by(f64::total_cmp);
                let _ = writeln!(out, "{n} {} {} {}", b[0], median_sorted(&b), b[b.len() - 1]);
            }
        }
        ReportKind::BVsT2 | ReportKind::BVsT1 | ReportKind::BVsW => {
            let (name, value): (&str, fn(&SweepRow) -> f64) = match kind {
                ReportKind::BVsT2 => ("t2_us", |r| r.t2_us),
                ReportKind::BVsT1 => ("t1_us", |r| r.t1_us().unwrap_or(f64::NAN)),
                _ => ("w_rad", |r| r.w_rad),
            };
            if kind == ReportKind::BVsT1 && selected.iter().all(|r| r.t1_us().is_none()) {
                return Err(Error::input("b_vs_t1 needs a numeric T1 axis"));
            }
            let _ = writeln!(out, "n {name} b_score");
            let mut pts: Vec<(usize, f64, f64)> = selected
                .iter()
                .filter(|r| !value(r).is_nan())
                .map(|r| (r.n, value(r), r.b_score))
                .collect();
            pts.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
            for (n, x, b) in pts {
                let _ = writeln!(out, "{n} {x} {b}");
            }
        }
        ReportKind::FidScatter => {
            out.push_str("n f_true f_id\n");
            for r in selected {
                let _ = writeln!(out, "{} {} {}", r.n, r.f_true, r.f_id);
            }
        }
    }
    Ok(out)
}
