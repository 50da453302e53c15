use idbench_web::{b_vs_t2, benchmark, catalog_entry};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn noiseless_limit_saturates() {
    let v = parse(&benchmark(3, f64::INFINITY, 0.0, 0.0));
    // T1 from the chip is still active, so B is just below 1.
    let b = v["b"].as_f64().unwrap();
    assert!(b > 0.9 && b < 1.0, "{v}");
    assert_eq!(v["m"], 4);
    assert_eq!(v["rows"][0], "-YXY");
}

#[test]
fn curve_has_requested_points() {
    let v = parse(&b_vs_t2(4, 0.275, 1.0, 1.0, 19.0, 5));
    let b: Vec<f64> = v["b"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(b.len(), 5);
    assert!(b.windows(2).all(|w| w[1] >= w[0] - 1e-12), "{b:?}");
}

#[test]
fn errors_are_json() {
    assert!(parse(&benchmark(12, 10.0, 0.2, 1.0))["error"].is_string());
    assert!(parse(&catalog_entry(2))["error"].is_string());
    assert!(parse(&catalog_entry(3))["text"]
        .as_str()
        .unwrap()
        .starts_with("ID N=3 M=4"));
}
