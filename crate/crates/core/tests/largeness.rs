//! The largeness conditions, exercised on a synthetic window shaped like the
//! illustrated k = 5, l = 2 configuration and on the degenerate case.

use arqkit_core::arquiver::{TranslationQuiver, Vertex};
use arqkit_core::fixtures;
use arqkit_core::sectional::{inner_modules, is_large_between, PathInQuiver};

/// Two paths of length 7 from Z to Y, the Z-path failing sectionality at
/// index 2 and the Y-path at index 5, with the tau identities of the
/// definition wired in.
fn illustration_window() -> TranslationQuiver {
    let mut w = TranslationQuiver::new();
    let ids = [
        "x", "z", "z1", "z2", "z3", "z4", "z5", "z6", "y", "y1", "y2", "y3", "y4", "y5", "y6",
        "tz4", "tz5", "tz6", "ty",
    ];
    for id in ids {
        let mut v = Vertex::new(id, id);
        v.mesh_complete = false; // synthetic shape, meshes not modelled
        w.add_vertex(v).unwrap();
    }
    for (s, d) in [
        ("x", "z"),
        ("z", "z1"),
        ("z1", "z2"),
        ("z2", "z3"),
        ("z3", "z4"),
        ("z4", "z5"),
        ("z5", "z6"),
        ("z6", "y"),
        ("z", "y1"),
        ("y1", "y2"),
        ("y2", "y3"),
        ("y3", "y4"),
        ("y4", "y5"),
        ("y5", "y6"),
        ("y6", "y"),
    ] {
        w.add_arrow(s, d, 1).unwrap();
    }
    for (z, t) in [
        ("z3", "z1"),
        ("y6", "y4"),
        ("y1", "x"),
        ("z4", "tz4"),
        ("tz4", "z"),
        ("z5", "tz5"),
        ("tz5", "y1"),
        ("z6", "tz6"),
        ("tz6", "y2"),
        ("y", "ty"),
        ("ty", "y3"),
    ] {
        w.set_tau(z, t).unwrap();
    }
    w
}

#[test]
fn illustrated_configuration_is_large() {
    let w = illustration_window();
    let gz = PathInQuiver::from_ids(&w, &["z", "z1", "z2", "z3", "z4", "z5", "z6", "y"]).unwrap();
    let gy = PathInQuiver::from_ids(&w, &["z", "y1", "y2", "y3", "y4", "y5", "y6", "y"]).unwrap();
    let x = w.vertex_idx("x").unwrap();
    let y = w.vertex_idx("y").unwrap();
    assert!(is_large_between(&w, x, y, &gz, Some(&gy)).unwrap());

    let inner = inner_modules(&w, x, y, &gz, Some(&gy)).unwrap();
    let names: Vec<&str> = inner.iter().map(|&v| w.vertex(v).id.as_str()).collect();
    // the index ranges produce the marked set plus the common start Z
    let expected = [
        "z", "z3", "z4", "z5", "z6", "y", "y1", "y2", "y3", "y4", "y5", "y6", "tz4", "tz5", "tz6",
        "ty",
    ];
    assert_eq!(inner.len(), 16, "{names:?}");
    for id in expected {
        assert!(names.contains(&id), "missing {id} in {names:?}");
    }
}

#[test]
fn broken_tau_identity_is_not_large() {
    let mut w = illustration_window();
    // destroy condition 1 on the Z-path: tau(Z3) no longer hits Z1
    let z3 = w.vertex_idx("z3").unwrap();
    {
        // rebuild without that tau pair
        let mut fresh = TranslationQuiver::new();
        for v in w.vertices() {
            fresh.add_vertex(v.clone()).unwrap();
        }
        for a in w.arrows() {
            fresh
                .add_arrow(&w.vertex(a.source).id, &w.vertex(a.target).id, a.valuation)
                .unwrap();
        }
        for (z, img) in (0..w.vertex_count()).filter_map(|z| w.tau(z).map(|t| (z, t))) {
            if z != z3 {
                fresh.set_tau(&w.vertex(z).id, &w.vertex(img).id).unwrap();
            }
        }
        w = fresh;
    }
    let gz = PathInQuiver::from_ids(&w, &["z", "z1", "z2", "z3", "z4", "z5", "z6", "y"]).unwrap();
    let gy = PathInQuiver::from_ids(&w, &["z", "y1", "y2", "y3", "y4", "y5", "y6", "y"]).unwrap();
    let x = w.vertex_idx("x").unwrap();
    let y = w.vertex_idx("y").unwrap();
    assert!(!is_large_between(&w, x, y, &gz, Some(&gy)).unwrap());
}

#[test]
fn degenerate_sectional_case() {
    // in the A3 window: Z = P2 is a successor of X = P3, and the one-step
    // sectional path Z -> S2 = tau^{-1}(X) satisfies the l = 0 clause
    let w = fixtures::load_window("a3.ar", None).unwrap();
    let x = w.vertex_idx("p3").unwrap();
    let y = w.vertex_idx("s2").unwrap();
    let gz = PathInQuiver::from_ids(&w, &["p2", "s2"]).unwrap();
    assert!(is_large_between(&w, x, y, &gz, None).unwrap());
    let inner = inner_modules(&w, x, y, &gz, None).unwrap();
    assert_eq!(inner.len(), 1);
    assert!(inner.contains(&y));

    // a path whose second vertex is not the translate-inverse of X fails
    let y2 = w.vertex_idx("p1").unwrap();
    let gz2 = PathInQuiver::from_ids(&w, &["p2", "p1"]).unwrap();
    assert!(!is_large_between(&w, x, y2, &gz2, None).unwrap());
}
