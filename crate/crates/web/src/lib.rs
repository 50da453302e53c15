//! wasm-bindgen exports for the browser demo in `www/`.
//!
//! Every export returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use idbench_core::catalog::builtin_catalog;
use idbench_core::harness::CHIP;
use idbench_core::id::write_catalog;
use idbench_core::sim::{run_benchmark, MeasureMode, NoiseParams};
use idbench_core::{IdTable, Result};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn table_for(n: usize) -> Result<IdTable> {
    builtin_catalog()
        .remove(&n)
        .ok_or_else(|| idbench_core::Error::Input(format!("no ID for N={n}")))
}

fn chip_noise(n: usize, t2_us: f64, w_rad: f64, pe_scale: f64) -> NoiseParams {
    let mut noise = NoiseParams::ideal(n);
    noise.t1 = CHIP.t1_seconds(n);
    noise.init_error = CHIP.init_error(n).iter().map(|p| p * pe_scale).collect();
    noise.t2 = t2_us * 1e-6;
    noise.jitter_width = w_rad;
    noise
}

fn render(v: Result<Value>) -> String {
    match v {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// One exact benchmark run on the chip preset with the given T2 (µs), jitter
/// width (rad) and a multiplier on the chip's initialisation errors.
#[wasm_bindgen]
pub fn benchmark(n: usize, t2_us: f64, w_rad: f64, pe_scale: f64) -> String {
    render((|| {
        let table = table_for(n)?;
        let r = run_benchmark(
            &table,
            &chip_noise(n, t2_us, w_rad, pe_scale),
            MeasureMode::Exact,
        )?;
        let rows: Vec<String> = (0..table.n_rows())
            .map(|i| table.signed_row(i).to_string())
            .collect();
        Ok(json!({
            "n": n,
            "m": table.n_rows(),
            "rows": rows,
            "expectations": r.row_expectations,
            "alpha": r.alpha,
            "b": r.score,
            "f_id": r.fid_bound,
            "f": r.true_fidelity,
        }))
    })())
}

/// `B` against T2 for `points` values spread over `[t2_min, t2_max]` µs.
#[wasm_bindgen]
pub fn b_vs_t2(
    n: usize,
    w_rad: f64,
    pe_scale: f64,
    t2_min: f64,
    t2_max: f64,
    points: usize,
) -> String {
    render((|| {
        let table = table_for(n)?;
        let points = points.clamp(2, 200);
        let mut t2s = Vec::with_capacity(points);
        let mut bs = Vec::with_capacity(points);
        for k in 0..points {
            let t2 = t2_min + (t2_max - t2_min) * k as f64 / (points - 1) as f64;
            let r = run_benchmark(
                &table,
                &chip_noise(n, t2, w_rad, pe_scale),
                MeasureMode::Exact,
            )?;
            t2s.push(t2);
            bs.push(r.score);
        }
        Ok(json!({ "n": n, "t2_us": t2s, "b": bs }))
    })())
}

/// The built-in ID for `n` qubits in catalog text form.
#[wasm_bindgen]
pub fn catalog_entry(n: usize) -> String {
    render(table_for(n).map(|t| json!({ "text": write_catalog(&[t]) })))
}
