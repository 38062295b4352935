//! Catalog output pinned against checked-in fixtures.
//!
//! Regenerate with `UPDATE_GOLDEN=1 cargo test --test golden` after an
//! intended format change, and review the diff.

use std::path::PathBuf;

use colorgraph::catalog::{build_catalog, from_json, to_json, CatalogOptions, IsometricStatus};

fn fixture(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/fixtures/catalog-{n}.json"))
}

#[test]
fn catalogs_match_fixtures() {
    for n in 6..=8 {
        let got = to_json(&build_catalog(n, &CatalogOptions::default()).unwrap());
        let path = fixture(n);
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap();
        assert!(got == want, "catalog-{n}.json differs from the fixture");
    }
}

#[test]
fn fixtures_carry_known_values() {
    let cat = from_json(&std::fs::read_to_string(fixture(8)).unwrap()).unwrap();
    assert_eq!(cat.entries.len(), 26);
    let get = |id: &str| cat.entries.iter().find(|e| e.class_id == id).unwrap();

    let t = get("8-T");
    assert_eq!((t.order, t.diameter), (20, Some(9)));
    assert_eq!(t.vine.as_ref().map(|v| (v.p, v.q)), Some((3, 3)));
    for id in ["8-I", "8-N", "8-P", "8-R"] {
        assert_eq!(get(id).diameter, Some(10), "{id}");
    }
    for e in &cat.entries {
        let negative = ["8-U", "8-V", "8-W", "8-X", "8-Y", "8-Z"].contains(&e.class_id.as_str());
        let status = e.partial_cube.status;
        assert_eq!(status == IsometricStatus::NotPartialCube, negative, "{}", e.class_id);
        assert!(e.hypercube.within_bound && e.hypercube.bound == 8);
        assert!(e.lattice.dimension.is_some_and(|d| d <= 3), "{}", e.class_id);
    }
    assert_eq!(get("8-F").isomorphism_group, "8-E");

    let hex = from_json(&std::fs::read_to_string(fixture(6)).unwrap()).unwrap();
    let five = hex.entries.iter().find(|e| e.class_id == "6-5").unwrap();
    assert_eq!(five.isomorphism_group, "6-3");
}
