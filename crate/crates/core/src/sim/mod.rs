//! Dense density-matrix simulation of the depth-4 prepare-and-measure
//! circuits under initialisation error, T1, T2 and CZ angular jitter.

mod benchmark;
pub mod channels;
mod circuit;
mod density;
mod measure;
pub mod states;

pub use benchmark::{run_benchmark, BenchmarkResult};
pub use channels::{
    apply_jittered_zz90, apply_t1, apply_t2, apply_y90, apply_z90, apply_zz90, init_state,
    jitter_coherence,
};
pub use circuit::{
    apply_noisy_cz, decohere, prepare_cluster, NoiseParams, DEFAULT_DT_SINGLE, DEFAULT_DT_TWO,
};
pub use density::{DensityMatrix, MAX_SIM_QUBITS};
pub use measure::{
    basis_change, measure_setting, parity_expectation, readout_mask, rotate_to_z_basis,
    sample_parity, MeasureMode,
};
