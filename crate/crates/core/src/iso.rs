//! Isomorphism testing for small translation-quiver windows by backtracking
//! over attribute-compatible vertex assignments. Intended for fixture-sized
//! inputs.

use crate::arquiver::TranslationQuiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoOptions {
    /// Require equal labels on matched vertices.
    pub match_labels: bool,
    /// Require equal dimension vectors on matched vertices.
    pub match_dims: bool,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            match_labels: true,
            match_dims: true,
        }
    }
}

/// Structure-only comparison: arrows with valuations, tau, and the
/// projective / Ext-injective flags.
pub fn isomorphic_structurally(a: &TranslationQuiver, b: &TranslationQuiver) -> bool {
    find_isomorphism(
        a,
        b,
        IsoOptions {
            match_labels: false,
            match_dims: false,
        },
    )
    .is_some()
}

/// Label- and dimension-respecting comparison.
pub fn isomorphic_labelled(a: &TranslationQuiver, b: &TranslationQuiver) -> bool {
    find_isomorphism(a, b, IsoOptions::default()).is_some()
}

/// Returns a vertex map a -> b when one exists.
pub fn find_isomorphism(
    a: &TranslationQuiver,
    b: &TranslationQuiver,
    opts: IsoOptions,
) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.arrows().len() != b.arrows().len() {
        return None;
    }

    let signature = |tq: &TranslationQuiver, v: usize| {
        let vert = tq.vertex(v);
        let mut preds: Vec<u32> = tq.predecessors(v).iter().map(|&(_, val)| val).collect();
        let mut succs: Vec<u32> = tq.successors(v).iter().map(|&(_, val)| val).collect();
        preds.sort_unstable();
        succs.sort_unstable();
        (
            vert.is_projective,
            vert.is_ext_injective,
            vert.mesh_complete,
            tq.tau(v).is_some(),
            tq.tau_inv(v).is_some(),
            preds,
            succs,
            if opts.match_labels {
                vert.label.clone()
            } else {
                String::new()
            },
            if opts.match_dims {
                vert.dim_vector.clone()
            } else {
                None
            },
        )
    };
    let sig_a: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    // order the search by candidate-set size
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| sig_b.iter().filter(|s| **s == sig_a[v]).count());

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn compatible(
        a: &TranslationQuiver,
        b: &TranslationQuiver,
        mapping: &[usize],
        v: usize,
        w: usize,
    ) -> bool {
        // arrows and tau against already-mapped vertices, both directions
        for (p, val) in a.predecessors(v) {
            if mapping[p] != usize::MAX {
                match b.arrow_between(mapping[p], w) {
                    Some(arr) if arr.valuation == val => {}
                    _ => return false,
                }
            }
        }
        for (s, val) in a.successors(v) {
            if mapping[s] != usize::MAX {
                match b.arrow_between(w, mapping[s]) {
                    Some(arr) if arr.valuation == val => {}
                    _ => return false,
                }
            }
        }
        if let Some(t) = a.tau(v) {
            if mapping[t] != usize::MAX && b.tau(w) != Some(mapping[t]) {
                return false;
            }
        }
        if let Some(z) = a.tau_inv(v) {
            if mapping[z] != usize::MAX && b.tau(mapping[z]) != Some(w) {
                return false;
            }
        }
        // degree counts must agree exactly
        a.predecessors(v).len() == b.predecessors(w).len()
            && a.successors(v).len() == b.successors(w).len()
    }

    #[allow(clippy::too_many_arguments)]
    fn search<S: PartialEq>(
        a: &TranslationQuiver,
        b: &TranslationQuiver,
        order: &[usize],
        sig_a: &[S],
        sig_b: &[S],
        depth: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..b.vertex_count() {
            if used[w] || sig_b[w] != sig_a[v] {
                continue;
            }
            if !compatible(a, b, mapping, v, w) {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if search(a, b, order, sig_a, sig_b, depth + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    if search(a, b, &order, &sig_a, &sig_b, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}
