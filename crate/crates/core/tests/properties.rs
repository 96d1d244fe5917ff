//! Property tests for the structural invariants: interchange round-trips on
//! generated windows, relabeling invariance of the classifier, sectional
//! implies pre-sectional, and the Coxeter inverse pairing.

use arqkit_core::arquiver::{parse_ar_quiver, validate, TranslationQuiver, Vertex};
use arqkit_core::coxeter::{coxeter, inverse_coxeter_combinatorial};
use arqkit_core::diagram::{classify, template, DiagramFamily, UndirectedGraph};
use arqkit_core::matrix::IntMatrix;
use arqkit_core::quiver::Quiver;
use arqkit_core::sectional::{is_presectional, is_sectional, PathInQuiver};
use proptest::prelude::*;
use std::collections::BTreeMap;

/// Random structurally well-formed window: a layered acyclic 1-arrow graph
/// with injective tau pairs that never land on projectives.
fn window_strategy() -> impl Strategy<Value = TranslationQuiver> {
    (2usize..9, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = arqkit_core::rng::SplitMix64::new(seed);
        let mut tq = TranslationQuiver::new();
        for i in 0..n {
            let mut v = Vertex::new(format!("v{i}"), format!("m{}", rng.below(4)));
            if rng.chance(1, 8) {
                v.dim_vector = Some(vec![1 + rng.below(3) as i64, rng.below(3) as i64]);
            }
            v.is_projective = rng.chance(1, 6);
            v.is_ext_injective = rng.chance(1, 6);
            v.mesh_complete = rng.chance(1, 2);
            tq.add_vertex(v).unwrap();
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.chance(1, 3) {
                    tq.add_arrow_idx(i, j, 1 + rng.below(2) as u32);
                }
            }
        }
        // a partial injective tau avoiding projectives
        let mut used = vec![false; n];
        for z in 0..n {
            if tq.vertex(z).is_projective || !rng.chance(1, 2) {
                continue;
            }
            let t = rng.below(n as u64) as usize;
            if !used[t] {
                used[t] = true;
                tq.set_tau_idx(z, t).unwrap();
            }
        }
        tq
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn interchange_roundtrip_is_identity(window in window_strategy()) {
        let text = window.to_interchange();
        let again = parse_ar_quiver(&text).unwrap();
        prop_assert_eq!(again.to_interchange(), text);
    }

    #[test]
    fn classify_is_relabeling_invariant(seed in any::<u64>()) {
        let mut rng = arqkit_core::rng::SplitMix64::new(seed);
        let families = [
            DiagramFamily::A(1 + rng.below(9) as u32),
            DiagramFamily::D(4 + rng.below(5) as u32),
            DiagramFamily::E7,
            DiagramFamily::ATilde(1 + rng.below(6) as u32),
            DiagramFamily::DTilde(4 + rng.below(4) as u32),
            DiagramFamily::E8Tilde,
        ];
        let family = families[rng.below(families.len() as u64) as usize];
        let g = template(family).unwrap();
        // random permutation of labels
        let ids = g.vertex_ids().to_vec();
        let mut order: Vec<usize> = (0..ids.len()).collect();
        for i in (1..order.len()).rev() {
            let j = rng.below((i + 1) as u64) as usize;
            order.swap(i, j);
        }
        let renames: BTreeMap<&String, String> =
            ids.iter().enumerate().map(|(i, id)| (id, format!("r{}", order[i]))).collect();
        let mut renamed = UndirectedGraph::new();
        for id in &ids {
            renamed.add_vertex(renames[id].clone());
        }
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                let mult = g.multiplicity(i, j);
                if mult > 0 {
                    renamed.add_edge_mult(&renames[&ids[i]], &renames[&ids[j]], mult);
                }
            }
        }
        prop_assert_eq!(classify(&renamed).family, family);
    }

    #[test]
    fn sectional_paths_are_presectional(seed in any::<u64>()) {
        // the implication presumes the mesh property, so the walk runs on
        // mesh-consistent windows: the corpus plus generated tubes
        let mut rng = arqkit_core::rng::SplitMix64::new(seed);
        let mut windows: Vec<TranslationQuiver> =
            arqkit_core::fixtures::all_windows().into_iter().map(|(_, w)| w).collect();
        windows.push(arqkit_core::tubes::stable_tube(1 + rng.below(3) as usize, 6));
        let window = &windows[rng.below(windows.len() as u64) as usize];
        let n = window.vertex_count();
        let mut path = vec![rng.below(n as u64) as usize];
        for _ in 0..6 {
            let cur = *path.last().unwrap();
            let succs = window.successors(cur);
            if succs.is_empty() {
                break;
            }
            let (next, _) = succs[rng.below(succs.len() as u64) as usize];
            path.push(next);
        }
        let path = PathInQuiver::new(window, path).unwrap();
        if is_sectional(window, &path) {
            prop_assert!(is_presectional(window, &path));
        }
    }

    #[test]
    fn parser_never_panics(text in "[ -~\n]{0,200}") {
        let _ = parse_ar_quiver(&text);
        let _ = arqkit_core::quiver::parse_quiver(&text);
    }

    #[test]
    fn coxeter_inverse_pairing(seed in any::<u64>()) {
        let mut rng = arqkit_core::rng::SplitMix64::new(seed);
        let q = arqkit_core::rng::random_acyclic_quiver(&mut rng, 7);
        let pair = coxeter(&q).unwrap();
        let comb = inverse_coxeter_combinatorial(&q).unwrap();
        prop_assert_eq!(&comb, &pair.c_inv);
        prop_assert_eq!(pair.c.checked_mul(&pair.c_inv).unwrap(), IntMatrix::identity(q.vertex_count()));
    }

    #[test]
    fn knitted_windows_validate(seed in any::<u64>()) {
        let mut rng = arqkit_core::rng::SplitMix64::new(seed);
        let q = arqkit_core::rng::random_acyclic_quiver(&mut rng, 5);
        if q.has_loop() {
            return Ok(());
        }
        let window = arqkit_core::knitting::knit_hereditary(
            &q,
            arqkit_core::knitting::KnitDirection::RightFromProjectives,
            24,
        )
        .unwrap();
        let report = validate(&window);
        prop_assert!(report.errors().next().is_none(), "{}", report);
    }
}

#[test]
fn mesh_multiset_equality_on_fixtures() {
    // for every non-projective z with a complete mesh, the multiset of
    // (predecessors of z, valuations) equals (successors of tau z, valuations)
    for (name, window) in arqkit_core::fixtures::all_windows() {
        for z in 0..window.vertex_count() {
            if window.vertex(z).is_projective || !window.vertex(z).mesh_complete {
                continue;
            }
            let Some(t) = window.tau(z) else { continue };
            let preds: Vec<(usize, u32)> = window.predecessors(z);
            let succs: Vec<(usize, u32)> = window.successors(t);
            assert_eq!(preds, succs, "{name}: mesh at {}", window.vertex(z).id);
        }
    }
}

#[test]
fn quiver_reversal_duality() {
    let q = {
        let mut q = Quiver::new();
        for id in ["a", "b", "c"] {
            q.add_vertex(id, id).unwrap();
        }
        q.add_arrow("f", "a", "b").unwrap();
        q.add_arrow("g", "b", "c").unwrap();
        q
    };
    let rev = q.reversed();
    let counts = q.path_counts().unwrap();
    let rcounts = rev.path_counts().unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(counts[i][j], rcounts[j][i]);
        }
    }
}
