//! Sweeps, chip presets and report files.

mod preset;
mod report;
mod sweep;

pub use preset::{ChipPreset, CHIP, MEDIAN_T2_US, MEDIAN_W_RAD};
pub use report::{report, ReportKind};
pub use sweep::{
    read_csv, run_sweep, write_csv, Axis, PeSource, SweepRow, SweepSpec, T1Source,
    DEFAULT_POINTS_PER_AXIS,
};
