//! Parameter sweeps over the noise model and their CSV form.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;

use rayon::prelude::*;

use super::preset::ChipPreset;
use crate::error::{Error, Result};
use crate::id::IdTable;
use crate::sim::{run_benchmark, BenchmarkResult, MeasureMode, NoiseParams};

/// One swept quantity: a single value or an inclusive linear range sampled
/// at `points_per_axis` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Axis {
    Value(f64),
    Range { min: f64, max: f64 },
}

impl Axis {
    fn points(&self, count: usize) -> Vec<f64> {
        match *self {
            Axis::Value(v) => vec![v],
            Axis::Range { min, max } => {
                if count == 1 {
                    return vec![0.5 * (min + max)];
                }
                (0..count)
                    .map(|k| min + (max - min) * k as f64 / (count - 1) as f64)
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum T1Source {
    Preset(&'static ChipPreset),
    /// Same T1 for every qubit, µs.
    Uniform(Axis),
}

#[derive(Debug, Clone, PartialEq)]
pub enum PeSource {
    Preset(&'static ChipPreset),
    Uniform(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n_list: Vec<usize>,
    pub t1: T1Source,
    /// µs
    pub t2: Axis,
    /// rad
    pub w: Axis,
    pub pe: PeSource,
    pub points_per_axis: usize,
    pub mode: MeasureMode,
    pub out: Option<PathBuf>,
}

pub const DEFAULT_POINTS_PER_AXIS: usize = 10;

impl SweepSpec {
    /// The noiseless limit for the given sizes.
    pub fn ideal(n_list: Vec<usize>) -> Self {
        SweepSpec {
            n_list,
            t1: T1Source::Uniform(Axis::Value(f64::INFINITY)),
            t2: Axis::Value(f64::INFINITY),
            w: Axis::Value(0.0),
            pe: PeSource::Uniform(0.0),
            points_per_axis: DEFAULT_POINTS_PER_AXIS,
            mode: MeasureMode::Exact,
            out: None,
        }
    }

    /// Parses the line-oriented `key=value` spec format. Blank lines and
    /// `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut kv: BTreeMap<String, (usize, String)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.split('#').next().unwrap_or("").trim();
            if s.is_empty() {
                continue;
            }
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| Error::parse(line, format!("expected key=value, found {s:?}")))?;
            if kv
                .insert(k.trim().to_string(), (line, v.trim().to_string()))
                .is_some()
            {
                return Err(Error::parse(line, format!("duplicate key {:?}", k.trim())));
            }
        }

        const KNOWN: [&str; 14] = [
            "n_list",
            "t1_preset",
            "t1_range",
            "t1_value",
            "t2_range",
            "t2_value",
            "w_range",
            "w_value",
            "pe_preset",
            "pe_value",
            "points_per_axis",
            "mode",
            "seed",
            "out",
        ];
        if let Some((k, (line, _))) = kv.iter().find(|(k, _)| !KNOWN.contains(&k.as_str())) {
            return Err(Error::parse(*line, format!("unknown key {k:?}")));
        }

        let take = |k: &str| kv.get(k).map(|(l, v)| (*l, v.as_str()));
        let num = |line: usize, s: &str| -> Result<f64> {
            match s {
                "inf" | "infinity" => Ok(f64::INFINITY),
                _ => s
                    .parse::<f64>()
                    .map_err(|_| Error::parse(line, format!("bad number {s:?}"))),
            }
        };
        let range = |line: usize, s: &str| -> Result<Axis> {
            let (a, b) = s
                .split_once(',')
                .ok_or_else(|| Error::parse(line, "range needs \"min,max\""))?;
            let (min, max) = (num(line, a.trim())?, num(line, b.trim())?);
            if !(min <= max) {
                return Err(Error::parse(line, "range min exceeds max"));
            }
            Ok(Axis::Range { min, max })
        };
        let axis = |name: &str| -> Result<Option<Axis>> {
            let r = take(&format!("{name}_range"));
            let v = take(&format!("{name}_value"));
            match (r, v) {
                (Some((l, _)), Some(_)) => Err(Error::parse(
                    l,
                    format!("both {name}_range and {name}_value"),
                )),
                (Some((l, s)), None) => range(l, s).map(Some),
                (None, Some((l, s))) => Ok(Some(Axis::Value(num(l, s)?))),
                (None, None) => Ok(None),
            }
        };
        let preset = |line: usize, s: &str| -> Result<&'static ChipPreset> {
            ChipPreset::by_name(s)
                .ok_or_else(|| Error::parse(line, format!("unknown preset {s:?}")))
        };

        let (line, s) = take("n_list").ok_or_else(|| Error::input("spec needs n_list"))?;
        let n_list = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("bad qubit count {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;

        let t1 = match (take("t1_preset"), axis("t1")?) {
            (Some((l, _)), Some(_)) => {
                return Err(Error::parse(
                    l,
                    "t1_preset conflicts with t1_range/t1_value",
                ))
            }
            (Some((l, s)), None) => T1Source::Preset(preset(l, s)?),
            (None, Some(a)) => T1Source::Uniform(a),
            (None, None) => T1Source::Uniform(Axis::Value(f64::INFINITY)),
        };
        let pe = match (take("pe_preset"), take("pe_value")) {
            (Some((l, _)), Some(_)) => {
                return Err(Error::parse(l, "pe_preset conflicts with pe_value"))
            }
            (Some((l, s)), None) => PeSource::Preset(preset(l, s)?),
            (None, Some((l, s))) => PeSource::Uniform(num(l, s)?),
            (None, None) => PeSource::Uniform(0.0),
        };
        let t2 = axis("t2")?.unwrap_or(Axis::Value(f64::INFINITY));
        let w = axis("w")?.unwrap_or(Axis::Value(0.0));
        let points_per_axis = match take("points_per_axis") {
            Some((l, s)) => s
                .parse()
                .map_err(|_| Error::parse(l, format!("bad points_per_axis {s:?}")))?,
            None => DEFAULT_POINTS_PER_AXIS,
        };
        let seed = match take("seed") {
            Some((l, s)) => s
                .parse()
                .map_err(|_| Error::parse(l, format!("bad seed {s:?}")))?,
            None => 0,
        };
        let mode = match take("mode") {
            None => MeasureMode::Exact,
            Some((_, "exact")) => MeasureMode::Exact,
            Some((l, s)) => {
                let count = s
                    .strip_prefix("shots:")
                    .and_then(|c| c.parse().ok())
                    .ok_or_else(|| {
                        Error::parse(l, format!("mode must be exact or shots:<count>, got {s:?}"))
                    })?;
                MeasureMode::Shots { count, seed }
            }
        };
        let out = take("out").map(|(_, s)| PathBuf::from(s));

        let spec = SweepSpec {
            n_list,
            t1,
            t2,
            w,
            pe,
            points_per_axis,
            mode,
            out,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() || self.points_per_axis == 0 {
            return Err(Error::input("empty sweep grid"));
        }
        if let Some(n) = self.n_list.iter().find(|n| !(2..=9).contains(*n)) {
            return Err(Error::input(format!("N={n} outside the 9-qubit array")));
        }
        let positive = |a: &Axis| match *a {
            Axis::Value(v) => v > 0.0,
            Axis::Range { min, .. } => min > 0.0,
        };
        if let T1Source::Uniform(a) = &self.t1 {
            if !positive(a) {
                return Err(Error::input("T1 must be positive"));
            }
        }
        if !positive(&self.t2) {
            return Err(Error::input("T2 must be positive"));
        }
        let w_max = match self.w {
            Axis::Value(v) => v,
            Axis::Range { max, .. } => max,
        };
        let w_min = match self.w {
            Axis::Value(v) => v,
            Axis::Range { min, .. } => min,
        };
        if !(w_min >= 0.0 && w_max < std::f64::consts::PI) {
            return Err(Error::input("jitter width outside [0, π)"));
        }
        if let PeSource::Uniform(p) = self.pe {
            if !(0.0..0.5).contains(&p) {
                return Err(Error::input("initialisation error outside [0, 0.5)"));
            }
        }
        Ok(())
    }

    fn t1_points(&self) -> Vec<Option<f64>> {
        match &self.t1 {
            T1Source::Preset(_) => vec![None],
            T1Source::Uniform(a) => a
                .points(self.points_per_axis)
                .into_iter()
                .map(Some)
                .collect(),
        }
    }

    /// Number of rows the sweep produces.
    pub fn grid_size(&self) -> usize {
        self.n_list.len()
            * self.t1_points().len()
            * self.t2.points(self.points_per_axis).len()
            * self.w.points(self.points_per_axis).len()
    }
}

/// A grid point with its result.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub t2_us: f64,
    pub w_rad: f64,
    /// Preset name or uniform T1 in µs.
    pub t1_source: String,
    /// Preset name or uniform probability.
    pub pe_source: String,
    pub alpha: f64,
    pub b_score: f64,
    pub f_id: f64,
    pub f_true: f64,
    pub row_expectations: Vec<f64>,
}

impl SweepRow {
    pub fn t1_us(&self) -> Option<f64> {
        parse_num(&self.t1_source)
    }
}

fn fmt_num(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{v}")
    }
}

fn parse_num(s: &str) -> Option<f64> {
    match s {
        "inf" => Some(f64::INFINITY),
        "-inf" => Some(f64::NEG_INFINITY),
        _ => s.parse().ok(),
    }
}

struct GridPoint {
    n: usize,
    t1_us: Option<f64>,
    t2_us: f64,
    w: f64,
}

/// Runs every grid point (in parallel) and returns rows in grid order:
/// `N`, then T1, then T2, then w.
pub fn run_sweep(spec: &SweepSpec, catalog: &BTreeMap<usize, IdTable>) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    for n in &spec.n_list {
        if !catalog.contains_key(n) {
            return Err(Error::input(format!("catalog has no ID for N={n}")));
        }
    }
    let mut grid = Vec::with_capacity(spec.grid_size());
    for &n in &spec.n_list {
        for t1 in spec.t1_points() {
            for t2 in spec.t2.points(spec.points_per_axis) {
                for w in spec.w.points(spec.points_per_axis) {
                    grid.push(GridPoint {
                        n,
                        t1_us: t1,
                        t2_us: t2,
                        w,
                    });
                }
            }
        }
    }
    grid.par_iter()
        .enumerate()
        .map(|(k, p)| run_point(spec, catalog, k, p))
        .collect()
}

fn run_point(
    spec: &SweepSpec,
    catalog: &BTreeMap<usize, IdTable>,
    index: usize,
    p: &GridPoint,
) -> Result<SweepRow> {
    let table = &catalog[&p.n];
    let mut noise = NoiseParams::ideal(p.n);
    let t1_source = match (&spec.t1, p.t1_us) {
        (T1Source::Preset(c), _) => {
            noise.t1 = c.t1_seconds(p.n);
            c.name.to_string()
        }
        (_, Some(t1)) => {
            noise.t1 = vec![t1 * 1e-6; p.n];
            fmt_num(t1)
        }
        (T1Source::Uniform(_), None) => unreachable!("uniform T1 always has a grid value"),
    };
    let pe_source = match spec.pe {
        PeSource::Preset(c) => {
            noise.init_error = c.init_error(p.n);
            c.name.to_string()
        }
        PeSource::Uniform(v) => {
            noise.init_error = vec![v; p.n];
            fmt_num(v)
        }
    };
    noise.t2 = p.t2_us * 1e-6;
    noise.jitter_width = p.w;
    let mode = match spec.mode {
        MeasureMode::Shots { count, seed } => MeasureMode::Shots {
            count,
            seed: seed.wrapping_add((index as u64) << 16),
        },
        m => m,
    };
    let r: BenchmarkResult = run_benchmark(table, &noise, mode).map_err(|e| {
        Error::input(format!(
            "grid point N={} T1={} T2={}us w={} pe={}: {e}",
            p.n, t1_source, p.t2_us, p.w, pe_source
        ))
    })?;
    Ok(SweepRow {
        n: p.n,
        m: table.n_rows(),
        t2_us: p.t2_us,
        w_rad: p.w,
        t1_source,
        pe_source,
        alpha: r.alpha,
        b_score: r.score,
        f_id: r.fid_bound,
        f_true: r.true_fidelity,
        row_expectations: r.row_expectations,
    })
}

const FIXED_COLUMNS: [&str; 10] = [
    "n",
    "m",
    "t2_us",
    "w_rad",
    "t1_source",
    "pe_source",
    "alpha",
    "b_score",
    "f_id",
    "f_true",
];

/// Writes rows as CSV; expectation columns `o_1…o_K` are padded to the
/// largest `M` present.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let width = rows.iter().map(|r| r.m).max().unwrap_or(0);
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = FIXED_COLUMNS.iter().map(|s| s.to_string()).collect();
    header.extend((1..=width).map(|i| format!("o_{i}")));
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![
            r.n.to_string(),
            r.m.to_string(),
            fmt_num(r.t2_us),
            fmt_num(r.w_rad),
            r.t1_source.clone(),
            r.pe_source.clone(),
            fmt_num(r.alpha),
            fmt_num(r.b_score),
            fmt_num(r.f_id),
            fmt_num(r.f_true),
        ];
        rec.extend((0..width).map(|i| {
            r.row_expectations
                .get(i)
                .map_or(String::new(), |v| fmt_num(*v))
        }));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRow>> {
    let mut rd = csv::Reader::from_reader(input);
    let headers = rd.headers()?.clone();
    if headers.len() < FIXED_COLUMNS.len()
        || headers.iter().zip(FIXED_COLUMNS).any(|(h, want)| h != want)
    {
        return Err(Error::input("CSV header does not match the sweep schema"));
    }
    let mut rows = Vec::new();
    for (k, rec) in rd.records().enumerate() {
        let rec = rec?;
        let line = k + 2;
        let f = |i: usize| -> Result<f64> {
            parse_num(&rec[i])
                .ok_or_else(|| Error::parse(line, format!("bad number {:?}", &rec[i])))
        };
        let u = |i: usize| -> Result<usize> {
            rec[i]
                .parse()
                .map_err(|_| Error::parse(line, format!("bad integer {:?}", &rec[i])))
        };
        let m = u(1)?;
        let row_expectations = (0..m)
            .map(|i| f(FIXED_COLUMNS.len() + i))
            .collect::<Result<_>>()?;
        rows.push(SweepRow {
            n: u(0)?,
            m,
            t2_us: f(2)?,
            w_rad: f(3)?,
            t1_source: rec[4].to_string(),
            pe_source: rec[5].to_string(),
            alpha: f(6)?,
            b_score: f(7)?,
            f_id: f(8)?,
            f_true: f(9)?,
            row_expectations,
        });
    }
    Ok(rows)
}
