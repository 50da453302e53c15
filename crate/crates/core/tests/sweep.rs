use idbench_core::catalog::builtin_catalog;
use idbench_core::harness::{read_csv, report, run_sweep, write_csv, ReportKind, SweepSpec};

fn csv_of(spec: &SweepSpec) -> Vec<u8> {
    let rows = run_sweep(spec, &builtin_catalog()).unwrap();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    buf
}

const GRID: &str = "n_list=3,5\nt1_range=5,50\nt2_range=1,19\nw_range=0.05,0.5\npe_value=0.02\npoints_per_axis=3\n";

#[test]
fn row_count_and_order() {
    let spec = SweepSpec::parse(GRID).unwrap();
    let rows = run_sweep(&spec, &builtin_catalog()).unwrap();
    assert_eq!(rows.len(), spec.grid_size());
    assert_eq!(rows.len(), 2 * 27);
    // N outermost, then T1, T2, w
    assert!(rows[..27].iter().all(|r| r.n == 3));
    assert_eq!(rows[0].t1_source, "5");
    assert_eq!((rows[0].t2_us, rows[0].w_rad), (1.0, 0.05));
    assert_eq!((rows[1].t2_us, rows[1].w_rad), (1.0, 0.275));
    assert_eq!(rows[3].t2_us, 10.0);
    assert_eq!(rows[9].t1_source, "27.5");
}

#[test]
fn exact_mode_is_byte_identical() {
    let spec = SweepSpec::parse(GRID).unwrap();
    assert_eq!(csv_of(&spec), csv_of(&spec));
}

#[test]
fn shots_mode_is_reproducible() {
    let spec = SweepSpec::parse(&format!("{GRID}mode=shots:200\nseed=4\n")).unwrap();
    let a = csv_of(&spec);
    assert_eq!(a, csv_of(&spec));
    let other = SweepSpec::parse(&format!("{GRID}mode=shots:200\nseed=5\n")).unwrap();
    assert_ne!(a, csv_of(&other));
}

#[test]
fn csv_reads_back_exactly() {
    let spec = SweepSpec::parse(GRID).unwrap();
    let rows = run_sweep(&spec, &builtin_catalog()).unwrap();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    assert_eq!(read_csv(&buf[..]).unwrap(), rows);
}

#[test]
fn fidelity_bound_across_the_three_qubit_grid() {
    let spec = SweepSpec::parse(
        "n_list=3\nt1_range=5,50\nt2_range=1,19\nw_range=0.05,0.5\npe_preset=chip\npoints_per_axis=4\n",
    )
    .unwrap();
    for r in run_sweep(&spec, &builtin_catalog()).unwrap() {
        assert!(r.f_id <= r.f_true + 1e-9, "{r:?}");
    }
}

#[test]
fn score_grows_with_t2_at_median_noise() {
    let spec = SweepSpec::parse(
        "n_list=3,4,5,6\nt1_preset=chip\npe_preset=chip\nt2_range=1,19\nw_value=0.275\npoints_per_axis=7\n",
    )
    .unwrap();
    let rows = run_sweep(&spec, &builtin_catalog()).unwrap();
    let text = report(&rows, ReportKind::BVsT2).unwrap();
    let pts: Vec<(usize, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(pts.len(), 4 * 7);
    for w in pts.windows(2) {
        if w[0].0 == w[1].0 {
            assert!(w[1].1 >= w[0].1, "{w:?}");
        }
    }
}

#[test]
fn ideal_envelope_is_flat() {
    let rows = run_sweep(&SweepSpec::ideal((3..=7).collect()), &builtin_catalog()).unwrap();
    let text = report(&rows, ReportKind::BVsN).unwrap();
    for line in text.lines().skip(1) {
        let f: Vec<f64> = line
            .split_whitespace()
            .skip(1)
            .map(|x| x.parse().unwrap())
            .collect();
        assert!(f.iter().all(|b| (b - 1.0).abs() < 1e-9), "{line}");
    }
}

#[test]
fn scatter_has_one_point_per_row() {
    let spec = SweepSpec::parse(GRID).unwrap();
    let rows = run_sweep(&spec, &builtin_catalog()).unwrap();
    let text = report(&rows, ReportKind::FidScatter).unwrap();
    assert_eq!(text.lines().count(), rows.len() + 1);
    assert_eq!(text.lines().next(), Some("n f_true f_id"));
}

#[test]
fn bundled_specs_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("specs");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let spec = SweepSpec::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert!(spec.grid_size() > 0, "{}", path.display());
        count += 1;
    }
    assert!(count >= 3);
}
