use std::collections::BTreeSet;

use idbench_core::catalog::{
    builtin_catalog, builtin_catalog_text, cluster_stabilizer_group, derive_catalog_entry,
    minimal_m, search_ids, SearchConstraints,
};
use idbench_core::id::{
    eigenspace_projector, ghz_parity_check, is_maximally_entangled, parse_catalog, validate_id,
    write_catalog, IdTable,
};

#[test]
fn frozen_catalog_round_trips_bit_exactly() {
    let tables = parse_catalog(builtin_catalog_text()).unwrap();
    assert_eq!(write_catalog(&tables), builtin_catalog_text());
    assert_eq!(tables.len(), 7);
}

#[test]
fn frozen_entries_match_a_fresh_derivation() {
    let cat = builtin_catalog();
    for n in 3..=7 {
        assert_eq!(derive_catalog_entry(n).unwrap(), cat[&n], "N={n}");
    }
}

#[test]
fn catalog_sizes_are_minimal() {
    for (n, t) in builtin_catalog() {
        assert_eq!(t.n_rows(), minimal_m(n), "N={n}");
    }
}

#[test]
fn every_entry_is_a_cluster_benchmark() {
    for (n, t) in builtin_catalog() {
        assert!(validate_id(&t).is_valid(), "N={n}");
        assert_eq!(t.sign(), -1);
        assert!(ghz_parity_check(&t).unwrap());
        assert!(is_maximally_entangled(&t).unwrap());
        let g = cluster_stabilizer_group(n).unwrap();
        for i in 0..t.n_rows() {
            assert!(g.contains(&t.signed_row(i)), "N={n} row {i}");
        }
    }
}

#[test]
fn projector_rank_for_small_entries() {
    for (n, t) in builtin_catalog().into_iter().filter(|(n, _)| *n <= 6) {
        let p = eigenspace_projector(&t).unwrap();
        let rank = p.trace().re.round() as usize;
        assert_eq!(rank, 1 << (n + 1 - t.n_rows()), "N={n}");
        assert!(((&p * &p) - &p).iter().all(|z| z.norm() < 1e-10));
    }
}

#[test]
fn five_qubit_search_contains_the_known_row() {
    let found = search_ids(5, &SearchConstraints::benchmark(5)).unwrap();
    let has = found.iter().any(|t| {
        t.rows()
            .iter()
            .any(|r| matches!(r.to_letters().as_str(), "ZYYZI" | "IZYYZ"))
    });
    assert!(has);
}

fn key_set(tables: &[IdTable]) -> BTreeSet<String> {
    tables
        .iter()
        .map(|t| write_catalog(&[t.sorted_rows()]))
        .collect()
}

#[test]
fn search_results_are_closed_under_reversal() {
    for (n, m) in [(4, 5), (5, 5), (5, 6)] {
        let c = SearchConstraints {
            canonical_dedup: false,
            ..SearchConstraints::benchmark(m)
        };
        let found = search_ids(n, &c).unwrap();
        let reversed: Vec<IdTable> = found.iter().map(IdTable::reversed).collect();
        assert_eq!(key_set(&found), key_set(&reversed), "N={n} M={m}");
    }
}

#[test]
fn relaxed_search_is_a_superset() {
    let strict = search_ids(4, &SearchConstraints::benchmark(5)).unwrap();
    let loose = search_ids(
        4,
        &SearchConstraints {
            require_ghz: false,
            require_maxent: false,
            ..SearchConstraints::benchmark(5)
        },
    )
    .unwrap();
    let loose_keys = key_set(&loose);
    assert!(loose.len() > strict.len());
    assert!(key_set(&strict).is_subset(&loose_keys));
}

#[test]
fn limit_truncates() {
    let c = SearchConstraints {
        max_results: Some(2),
        ..SearchConstraints::benchmark(5)
    };
    assert_eq!(search_ids(5, &c).unwrap().len(), 2);
}

#[test]
#[ignore = "takes several minutes; run with --ignored"]
fn large_frozen_entries_match_a_fresh_derivation() {
    let cat = builtin_catalog();
    for n in 8..=9 {
        assert_eq!(derive_catalog_entry(n).unwrap(), cat[&n], "N={n}");
    }
}
