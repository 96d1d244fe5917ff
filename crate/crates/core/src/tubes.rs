//! Riedtmann coverings ZB and their tau-power quotients, stable tubes,
//! coray and ray insertions, tree types, and tube recognition.

use crate::arquiver::{TranslationQuiver, Vertex};
use crate::diagram::UndirectedGraph;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::sectional::{is_helical, tau_orbits, OrbitClass};
use std::collections::{BTreeMap, BTreeSet};

/// Parameters of a recognized tube: the rank of the underlying stable tube
/// and the sizes of the coray insertions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeParams {
    pub rank: usize,
    pub insertions: Vec<usize>,
}

/// Window of the translation quiver ZB over a directed tree. Vertices are
/// (n, x) for n in the range; arrows (n,x) -> (n,y) and (n,y) -> (n-1,x) for
/// each tree arrow x -> y; tau(n, x) = (n+1, x). Boundary meshes (where the
/// translate leaves the range) are flagged incomplete.
pub fn zb_window(b: &Quiver, n_range: std::ops::RangeInclusive<i64>) -> Result<TranslationQuiver> {
    if n_range.is_empty() {
        return Err(Error::EmptyRange);
    }
    if b.has_loop() || !b.is_acyclic() {
        return Err(Error::NotTranslationQuiver(
            "the base must be a directed tree".into(),
        ));
    }
    for i in 0..b.vertex_count() {
        for j in 0..b.vertex_count() {
            if i != j && b.arrow_multiplicity(i, j) > 1 {
                return Err(Error::NotTranslationQuiver(
                    "multiple arrows in the base".into(),
                ));
            }
        }
    }
    let (lo, hi) = (*n_range.start(), *n_range.end());
    let mut tq = TranslationQuiver::new();
    let id_of = |n: i64, x: usize| format!("n{n}_{}", b.vertices[x].id);
    for n in lo..=hi {
        for x in 0..b.vertex_count() {
            let mut v = Vertex::new(id_of(n, x), id_of(n, x));
            v.mesh_complete = n < hi;
            tq.add_vertex(v)?;
        }
    }
    for n in lo..=hi {
        for a in &b.arrows {
            tq.add_arrow(&id_of(n, a.source), &id_of(n, a.target), 1)?;
            if n > lo {
                tq.add_arrow(&id_of(n, a.target), &id_of(n - 1, a.source), 1)?;
            }
        }
    }
    for n in lo..=hi {
        if n < hi {
            for x in 0..b.vertex_count() {
                tq.set_tau(&id_of(n, x), &id_of(n + 1, x))?;
            }
        }
    }
    Ok(tq)
}

/// Finite quotient ZB / tau^k: n runs modulo k, everything is periodic and
/// every mesh is complete.
pub fn zb_quotient(b: &Quiver, k: usize) -> Result<TranslationQuiver> {
    if k == 0 {
        return Err(Error::EmptyRange);
    }
    if b.has_loop() || !b.is_acyclic() {
        return Err(Error::NotTranslationQuiver(
            "the base must be a directed tree".into(),
        ));
    }
    let k = k as i64;
    let mut tq = TranslationQuiver::new();
    let id_of = |n: i64, x: usize| format!("n{}_{}", n.rem_euclid(k), b.vertices[x].id);
    for n in 0..k {
        for x in 0..b.vertex_count() {
            tq.add_vertex(Vertex::new(id_of(n, x), id_of(n, x)))?;
        }
    }
    for n in 0..k {
        for a in &b.arrows {
            tq.add_arrow(&id_of(n, a.source), &id_of(n, a.target), 1)?;
            tq.add_arrow(&id_of(n, a.target), &id_of(n - 1, a.source), 1)?;
        }
    }
    for n in 0..k {
        for x in 0..b.vertex_count() {
            tq.set_tau(&id_of(n, x), &id_of(n + 1, x))?;
        }
    }
    Ok(tq)
}

/// Stable tube window: ZA-infinity / tau^rank up to the given quasi-length.
/// Vertices are (orbit, quasi-length); the quasi-length doubles as a
/// one-entry dimension vector, which is additive on interior meshes.
pub fn stable_tube(rank: usize, height: usize) -> TranslationQuiver {
    assert!(rank >= 1 && height >= 1);
    let mut tq = TranslationQuiver::new();
    let id_of = |n: usize, j: usize| format!("t{}q{j}", n % rank);
    for j in 1..=height {
        for n in 0..rank {
            let mut v = Vertex::new(id_of(n, j), id_of(n, j));
            v.dim_vector = Some(vec![j as i64]);
            v.mesh_complete = j < height;
            tq.add_vertex(v).unwrap();
        }
    }
    for j in 1..=height {
        for n in 0..rank {
            if j < height {
                tq.add_arrow(&id_of(n, j), &id_of(n, j + 1), 1).unwrap();
                tq.add_arrow(&id_of(n, j + 1), &id_of(n + rank - 1, j), 1)
                    .unwrap();
            }
        }
    }
    for j in 1..=height {
        for n in 0..rank {
            tq.set_tau(&id_of(n, j), &id_of(n + 1, j)).unwrap();
        }
    }
    tq
}

/// The coray ending at `x`: the unique maximal sectional path into x, as
/// x_1 = x, x_2, ... (each x_{i+1} the unique sectional predecessor).
/// Uniqueness is checked within the window, tolerating the open boundary.
pub fn coray_through(window: &TranslationQuiver, x: usize) -> Result<Vec<usize>> {
    let mut coray = vec![x];
    loop {
        let cur = *coray.last().unwrap();
        let prev = coray.len().checked_sub(2).map(|i| coray[i]);
        let mut candidates = Vec::new();
        for (p, _) in window.predecessors(cur) {
            // extending the sectional path backwards: tau(prev) != p fails
            // sectionality going forward p -> cur -> prev
            match prev {
                Some(q) if window.tau(q) == Some(p) => continue,
                _ => candidates.push(p),
            }
        }
        match candidates.len() {
            0 => break,
            1 => coray.push(candidates[0]),
            _ => {
                return Err(Error::NotCorayVertex(format!(
                    "`{}` admits two sectional paths of length {}",
                    window.vertex(x).id,
                    coray.len()
                )))
            }
        }
    }
    Ok(coray)
}

/// Coray insertion Gamma[x, n] following the construction rules: new
/// vertices (i, j), redirected arrows into the coray, and the adjusted
/// translation. Quasi-length-style dimension vectors extend additively when
/// the input carries them.
pub fn coray_insertion(g: &TranslationQuiver, x: &str, n: usize) -> Result<TranslationQuiver> {
    if n < 1 {
        return Err(Error::Precondition(
            "insertion size must be positive".into(),
        ));
    }
    let xi = g
        .vertex_idx(x)
        .ok_or_else(|| Error::UnknownVertex(x.to_string()))?;
    let coray = coray_through(g, xi)?;
    if coray.len() < 2 {
        return Err(Error::WindowTooSmall(
            "coray too short to apply the insertion rules".into(),
        ));
    }
    let imax = coray.len();
    let on_coray = |v: usize| coray.iter().position(|&c| c == v); // 0-based i-1

    let mut tq = TranslationQuiver::new();
    // old vertices keep ids; new vertices (i, j) for 1 <= i <= imax, 1 <= j <= n.
    // Iterated insertions need fresh ids, so the prefix bumps a generation
    // counter until no planned id collides.
    for v in g.vertices() {
        tq.add_vertex(v.clone())?;
    }
    let prefix = {
        let mut generation = 0usize;
        loop {
            let prefix = if generation == 0 {
                "c".to_string()
            } else {
                format!("c{generation}_")
            };
            let collision = (1..=imax)
                .any(|i| (1..=n).any(|j| g.vertex_idx(&format!("{prefix}{i}j{j}")).is_some()));
            if !collision {
                break prefix;
            }
            generation += 1;
        }
    };
    let new_id = |i: usize, j: usize| format!("{prefix}{i}j{j}");
    for i in 1..=imax {
        for j in 1..=n {
            let mut v = Vertex::new(new_id(i, j), new_id(i, j));
            if g.vertex(coray[i - 1]).dim_vector.as_ref().map(|d| d.len()) == Some(1) {
                v.dim_vector = Some(vec![i as i64]);
            }
            // (1,1)..(n,1) are not images of the adjusted translation
            if j == 1 && i <= n {
                v.is_ext_injective = true;
            }
            tq.add_vertex(v)?;
        }
    }
    // old arrows, excluding those ending at x_i other than x_{i+1} -> x_i
    for a in g.arrows() {
        let keep = match on_coray(a.target) {
            Some(ti) => on_coray(a.source) == Some(ti + 1),
            None => true,
        };
        if keep {
            tq.add_arrow(&g.vertex(a.source).id, &g.vertex(a.target).id, a.valuation)?;
        }
    }
    // rule 1: (i+1, j) -> (i, j)
    for i in 1..imax {
        for j in 1..=n {
            tq.add_arrow(&new_id(i + 1, j), &new_id(i, j), 1)?;
        }
    }
    // rule 2: (i, j+1) -> (i+1, j)
    for i in 1..imax {
        for j in 1..n {
            tq.add_arrow(&new_id(i, j + 1), &new_id(i + 1, j), 1)?;
        }
    }
    // rule 3: (n + i - 1, 1) -> x_i
    for i in 1..=imax {
        let col = n + i - 1;
        if col <= imax {
            tq.add_arrow(&new_id(col, 1), &g.vertex(coray[i - 1]).id, 1)?;
        }
    }
    // rule 4: y -> (i, n) for dropped arrows y -> x_i
    for a in g.arrows() {
        if let Some(ti) = on_coray(a.target) {
            if on_coray(a.source) != Some(ti + 1) {
                tq.add_arrow(&g.vertex(a.source).id, &new_id(ti + 1, n), a.valuation)?;
            }
        }
    }
    // translation: tau'(z) = tau(z) off the coray; tau'(x_i) = (n + i, 1);
    // tau'(i, j) = (i, j+1) for j < n; tau'(i, n) = tau(x_i)
    for (z, img) in (0..g.vertex_count()).filter_map(|z| g.tau(z).map(|t| (z, t))) {
        if on_coray(z).is_none() {
            tq.set_tau(&g.vertex(z).id, &g.vertex(img).id)?;
        }
    }
    for i in 1..=imax {
        let col = n + i;
        if col <= imax {
            tq.set_tau(&g.vertex(coray[i - 1]).id, &new_id(col, 1))?;
        }
    }
    for i in 1..=imax {
        for j in 1..n {
            tq.set_tau(&new_id(i, j), &new_id(i, j + 1))?;
        }
        if let Some(t) = g.tau(coray[i - 1]) {
            tq.set_tau(&new_id(i, n), &g.vertex(t).id)?;
        }
    }
    // meshes at the tail of the insertion grid are truncated by the window:
    // a new vertex (i, j) needs the (i+1, ...) column, and a coray vertex
    // now receives its mesh from the insertion grid
    for i in 1..=imax {
        for j in 1..=n {
            let idx = tq.vertex_idx(&new_id(i, j)).unwrap();
            let complete = if j < n {
                i < imax
            } else {
                g.tau(coray[i - 1]).is_some() && i < imax
            };
            tq.vertex_mut(idx).mesh_complete = complete;
        }
    }
    for i in 1..=imax {
        let idx = tq.vertex_idx(&g.vertex(coray[i - 1]).id).unwrap();
        let complete = n + i <= imax;
        tq.vertex_mut(idx).mesh_complete = complete;
    }
    Ok(tq)
}

/// Ray insertion: the exact dual, implemented by reversing, inserting along
/// the dual coray, and reversing back.
pub fn ray_insertion(g: &TranslationQuiver, x: &str, n: usize) -> Result<TranslationQuiver> {
    let reversed = g.reversed();
    let inserted = coray_insertion(&reversed, x, n).map_err(|e| match e {
        Error::NotCorayVertex(v) => Error::NotRayVertex(v),
        other => other,
    })?;
    Ok(inserted.reversed())
}

/// Tree type of a stable window: the directed tree of sectional paths
/// starting at `base`, with arrows given by one-step extension. Construction
/// truncates at `cap` or at the window boundary.
#[derive(Debug, Clone)]
pub struct TreeType {
    pub tree: Quiver,
    pub underlying: UndirectedGraph,
    pub truncated: bool,
}

pub fn tree_type(window: &TranslationQuiver, base: usize, cap: usize) -> Result<TreeType> {
    for a in window.arrows() {
        if a.source == a.target {
            return Err(Error::NotTranslationQuiver("loop present".into()));
        }
        if a.valuation >= 2 {
            return Err(Error::NotTranslationQuiver(
                "multiple arrows present".into(),
            ));
        }
    }
    let mut tree = Quiver::new();
    let mut underlying = UndirectedGraph::new();
    let mut truncated = false;
    // nodes are sectional paths from the base
    let mut paths: Vec<Vec<usize>> = vec![vec![base]];
    let mut names: Vec<String> = vec!["b0".into()];
    tree.add_vertex("b0", &window.vertex(base).id)?;
    underlying.add_vertex("b0");
    let mut head = 0usize;
    let mut serial = 1usize;
    while head < paths.len() {
        let path = paths[head].clone();
        let name = names[head].clone();
        head += 1;
        if path.len() > cap {
            truncated = true;
            continue;
        }
        let last = *path.last().unwrap();
        if window.is_boundary(last) {
            truncated = true;
        }
        for (next, _) in window.successors(last) {
            if path.len() >= 2 && window.tau(next) == Some(path[path.len() - 2]) {
                continue;
            }
            let mut ext = path.clone();
            ext.push(next);
            let node = format!("b{serial}");
            serial += 1;
            tree.add_vertex(&node, &window.vertex(next).id)?;
            tree.add_arrow(&format!("e{node}"), &name, &node)?;
            underlying.add_edge(&name, &node);
            names.push(node);
            paths.push(ext);
        }
    }
    Ok(TreeType {
        tree,
        underlying,
        truncated,
    })
}

/// Recognize stable tubes and coray tubes on a window.
///
/// A stable, everywhere-periodic window with an open top is reported as a
/// stable tube with the mouth-orbit period as rank. A helical left-stable
/// window is unwound via the Ext-injective offsets along the mouth coray.
pub fn recognize_tube(window: &TranslationQuiver) -> Option<TubeParams> {
    let orbits = tau_orbits(window);
    if window.vertex_count() == 0 {
        return None;
    }
    let all_periodic = orbits
        .orbits
        .iter()
        .all(|o| o.class == OrbitClass::Periodic);
    if all_periodic {
        // boundary-open top is the in-window evidence of an infinite tube
        let has_open = (0..window.vertex_count()).any(|v| window.is_boundary(v));
        if !has_open {
            return None;
        }
        // the mouth: vertices with exactly one immediate predecessor
        let mouth: Vec<usize> = (0..window.vertex_count())
            .filter(|&v| window.predecessors(v).len() == 1 && !window.is_boundary(v))
            .collect();
        let mouth_vertex = *mouth.first()?;
        // reject when a mouth coray cannot be followed uniquely
        coray_through(window, mouth_vertex).ok()?;
        let rank = orbits.orbits[orbits.orbit_of[mouth_vertex]].period?;
        return Some(TubeParams {
            rank,
            insertions: Vec::new(),
        });
    }
    if !is_helical(window) {
        return None;
    }
    // the mouth of a coray tube: the Ext-injective vertex with exactly one
    // immediate predecessor and no translate-inverse
    let mouth = (0..window.vertex_count()).find(|&v| {
        window.vertex(v).is_ext_injective
            && window.tau_inv(v).is_none()
            && window.predecessors(v).len() == 1
    })?;
    let coray = coray_through(window, mouth).ok()?;
    // positions along tau'-orbits: pos increases by one per translate
    let (orbit_id, pos) = orbit_positions(window);
    // walk the coray until the starting orbit repeats
    let start_orbit = orbit_id[mouth];
    let mut s = None;
    for (steps, &c) in coray.iter().enumerate().skip(1) {
        if orbit_id[c] == start_orbit {
            s = Some((steps, pos[c] - pos[mouth]));
            break;
        }
    }
    let (s, r) = s?;
    if r <= s as i64 {
        return None;
    }
    let rank = (r as usize) - s;
    // Ext-injective offset for each of the s orbits met by the coray
    let mut offsets: Vec<i64> = Vec::new();
    for &c in coray.iter().take(s) {
        let oid = orbit_id[c];
        let inj = (0..window.vertex_count()).find(|&v| {
            orbit_id[v] == oid && window.vertex(v).is_ext_injective && window.tau_inv(v).is_none()
        })?;
        offsets.push(pos[c] - pos[inj]);
    }
    offsets.sort_unstable();
    let mut insertions = Vec::new();
    let mut i = 0;
    while i < offsets.len() {
        let mut j = i;
        while j < offsets.len() && offsets[j] == offsets[i] {
            j += 1;
        }
        insertions.push(j - i);
        i = j;
    }
    Some(TubeParams { rank, insertions })
}

/// Orbit ids plus integer positions along each orbit (pos(tau'(v)) = pos(v) + 1).
fn orbit_positions(window: &TranslationQuiver) -> (Vec<usize>, Vec<i64>) {
    let n = window.vertex_count();
    let mut orbit_id = vec![usize::MAX; n];
    let mut pos = vec![0i64; n];
    let mut next = 0usize;
    for v in 0..n {
        if orbit_id[v] != usize::MAX {
            continue;
        }
        // walk to the tau-inverse end
        let mut head = v;
        let mut seen = BTreeSet::from([head]);
        while let Some(p) = window.tau_inv(head) {
            if !seen.insert(p) {
                break;
            }
            head = p;
        }
        let mut cur = head;
        let mut k = 0i64;
        loop {
            orbit_id[cur] = next;
            pos[cur] = k;
            match window.tau(cur) {
                Some(t) if orbit_id[t] == usize::MAX => {
                    cur = t;
                    k += 1;
                }
                _ => break,
            }
        }
        next += 1;
    }
    (orbit_id, pos)
}

/// Iterated insertions Gamma[x0, n0][x1, n1]...; each coray vertex is
/// re-verified at its own stage.
pub fn coray_insertions(
    g: &TranslationQuiver,
    steps: &[(String, usize)],
) -> Result<TranslationQuiver> {
    let mut cur = g.clone();
    for (x, n) in steps {
        cur = coray_insertion(&cur, x, *n)?;
    }
    Ok(cur)
}

/// Convenience: label map from ids for relabelled comparisons.
pub fn relabel(mut tq: TranslationQuiver, map: &BTreeMap<String, String>) -> TranslationQuiver {
    for v in 0..tq.vertex_count() {
        if let Some(newlab) = map.get(&tq.vertex(v).id) {
            tq.vertex_mut(v).label = newlab.clone();
        }
    }
    tq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::validate;
    use crate::quiver::parse_quiver;

    #[test]
    fn zb_single_vertex() {
        let b = parse_quiver("vertices x").unwrap();
        let w = zb_window(&b, 0..=2).unwrap();
        assert_eq!(w.vertex_count(), 3);
        assert_eq!(w.arrows().len(), 0);
        assert_eq!((0..3).filter(|&v| w.tau(v).is_some()).count(), 2);
    }

    #[test]
    fn zb_a2_range() {
        let b = parse_quiver("vertices x y; arrows a:x->y").unwrap();
        let w = zb_window(&b, 0..=1).unwrap();
        assert_eq!(w.vertex_count(), 4);
        // (0,x)->(0,y), (1,x)->(1,y), (1,y)->(0,x); the out-of-range
        // (0,y)->(-1,x) is dropped
        assert_eq!(w.arrows().len(), 3);
        assert!(w
            .arrow_between(w.vertex_idx("n1_y").unwrap(), w.vertex_idx("n0_x").unwrap())
            .is_some());
    }

    #[test]
    fn zb_d4_window_validates() {
        let b = parse_quiver("vertices c a b d; arrows p:c->a q:c->b r:c->d").unwrap();
        let w = zb_window(&b, 0..=3).unwrap();
        assert_eq!(w.vertex_count(), 16);
        assert!(validate(&w).is_clean(), "{}", validate(&w));
    }

    #[test]
    fn empty_range_rejected() {
        let b = parse_quiver("vertices x").unwrap();
        assert!(matches!(zb_window(&b, 1..=0), Err(Error::EmptyRange)));
    }

    #[test]
    fn stable_tube_shapes() {
        let t = stable_tube(1, 1);
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.arrows().len(), 0);
        assert_eq!(t.tau(0), Some(0));

        let t = stable_tube(3, 4);
        assert_eq!(t.vertex_count(), 12);
        assert!(validate(&t).is_clean(), "{}", validate(&t));
        let orbits = tau_orbits(&t);
        assert!(orbits
            .orbits
            .iter()
            .all(|o| o.class == OrbitClass::Periodic && o.period == Some(3)));

        let t = stable_tube(2, 2);
        assert!(validate(&t).is_clean());
        let orbits = tau_orbits(&t);
        assert!(orbits
            .orbits
            .iter()
            .all(|o| o.class == OrbitClass::Periodic));
    }

    #[test]
    fn recognize_plain_tubes() {
        for (r, h) in [(1, 4), (2, 5), (3, 6), (4, 7)] {
            let t = stable_tube(r, h);
            let params = recognize_tube(&t).expect("tube recognized");
            assert_eq!(
                params,
                TubeParams {
                    rank: r,
                    insertions: vec![]
                }
            );
        }
    }

    #[test]
    fn closed_quotients_are_not_tubes() {
        let b = parse_quiver("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5").unwrap();
        let w = zb_quotient(&b, 5).unwrap();
        assert!(validate(&w).is_clean());
        assert!(recognize_tube(&w).is_none());
    }

    #[test]
    fn coray_insertion_roundtrip_small() {
        let t = stable_tube(2, 6);
        let mouth = "t0q1";
        let inserted = coray_insertion(&t, mouth, 1).unwrap();
        assert!(validate(&inserted).is_clean(), "{}", validate(&inserted));
        let params = recognize_tube(&inserted).expect("coray tube recognized");
        assert_eq!(
            params,
            TubeParams {
                rank: 2,
                insertions: vec![1]
            }
        );
    }

    #[test]
    fn helical_equals_coray_tube() {
        let t = stable_tube(1, 6);
        let inserted = coray_insertion(&t, "t0q1", 1).unwrap();
        assert!(is_helical(&inserted));
        // every interior vertex reachable from an Ext-injective vertex
        let ext: Vec<usize> = (0..inserted.vertex_count())
            .filter(|&v| inserted.vertex(v).is_ext_injective)
            .collect();
        assert!(!ext.is_empty());
    }

    #[test]
    fn insertion_size_two_has_tau_chain() {
        let t = stable_tube(1, 7);
        let inserted = coray_insertion(&t, "t0q1", 2).unwrap();
        assert!(validate(&inserted).is_clean(), "{}", validate(&inserted));
        // tau'(i, 1) = (i, 2)
        let c11 = inserted.vertex_idx("c1j1").unwrap();
        let c12 = inserted.vertex_idx("c1j2").unwrap();
        assert_eq!(inserted.tau(c11), Some(c12));
        let params = recognize_tube(&inserted).expect("recognized");
        assert_eq!(
            params,
            TubeParams {
                rank: 1,
                insertions: vec![2]
            }
        );
    }

    #[test]
    fn ray_insertion_is_dual() {
        // each case mirrors a coray insertion through reversal
        for (rank, n, height) in [(2, 1, 6), (1, 1, 6), (1, 2, 7)] {
            let t = stable_tube(rank, height);
            let inserted = ray_insertion(&t, "t0q1", n).unwrap();
            assert!(validate(&inserted).is_clean(), "{}", validate(&inserted));
            let params = recognize_tube(&inserted.reversed()).expect("dual recognized");
            assert_eq!(
                params,
                TubeParams {
                    rank,
                    insertions: vec![n]
                }
            );
        }
    }

    #[test]
    fn iterated_insertions_fold_and_recognize() {
        // a second insertion at the fresh mouth is re-verified at its own
        // stage and shows up as a second insertion group
        let t = stable_tube(1, 8);
        let folded = coray_insertions(&t, &[("t0q1".into(), 1), ("c1j1".into(), 1)]).unwrap();
        assert!(validate(&folded).is_clean(), "{}", validate(&folded));
        let params = recognize_tube(&folded).expect("recognized");
        assert_eq!(
            params,
            TubeParams {
                rank: 1,
                insertions: vec![1, 1]
            }
        );
    }

    #[test]
    fn tree_type_of_za5_quotient() {
        let b = parse_quiver("vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5").unwrap();
        let w = zb_quotient(&b, 5).unwrap();
        for base in [0, 3, 7] {
            let tt = tree_type(&w, base, 32).unwrap();
            assert!(!tt.truncated);
            assert_eq!(
                crate::diagram::classify(&tt.underlying).family,
                crate::diagram::DiagramFamily::A(5)
            );
        }
    }

    #[test]
    fn tree_type_rejects_multiple_arrows() {
        let mut w = TranslationQuiver::new();
        w.add_vertex(Vertex::new("a", "a")).unwrap();
        w.add_vertex(Vertex::new("b", "b")).unwrap();
        w.add_arrow("a", "b", 2).unwrap();
        assert!(matches!(
            tree_type(&w, 0, 8),
            Err(Error::NotTranslationQuiver(_))
        ));
    }

    #[test]
    fn tube_mouth_tree_type_is_open_chain() {
        let t = stable_tube(3, 5);
        let mouth = t.vertex_idx("t0q1").unwrap();
        let tt = tree_type(&t, mouth, 16).unwrap();
        assert!(tt.truncated);
        assert_eq!(
            crate::diagram::classify(&tt.underlying).family,
            crate::diagram::DiagramFamily::A(5)
        );
    }
}
