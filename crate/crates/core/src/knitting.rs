//! Mesh completion and component knitting with dimension vectors, plus the
//! numeric bounds used by the finiteness arguments.

use crate::arquiver::{DimVec, TranslationQuiver, Vertex};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::sectional::{full_sectional_subgraph, subgraph_type, tau_orbits, OrbitClass};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Outcome of one mesh-completion step: either the missing dimension vector
/// or the signal that the mesh closes (an entry would go negative, or the
/// candidate vanishes entirely).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeshOutcome {
    Completed(DimVec),
    Closes,
}

/// Solve dim(unknown) = sum of valuation-weighted middles - dim(known).
pub fn complete_mesh(middles: &[(DimVec, u32)], known: &DimVec) -> Result<MeshOutcome> {
    let dim = known.len();
    let mut sum = vec![0i64; dim];
    for (d, val) in middles {
        if d.len() != dim {
            return Err(Error::Dimension(format!(
                "middle has {} entries, expected {dim}",
                d.len()
            )));
        }
        for (s, x) in sum.iter_mut().zip(d.iter()) {
            *s = s
                .checked_add(i64::from(*val).checked_mul(*x).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
    }
    let mut out = Vec::with_capacity(dim);
    for (s, k) in sum.iter().zip(known.iter()) {
        let v = s.checked_sub(*k).ok_or(Error::Overflow)?;
        out.push(v);
    }
    if out.iter().any(|&v| v < 0) || out.iter().all(|&v| v == 0) {
        return Ok(MeshOutcome::Closes);
    }
    Ok(MeshOutcome::Completed(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnitDirection {
    RightFromProjectives,
    LeftFromInjectives,
}

/// Default cap on mesh-completion attempts per knit.
pub const DEFAULT_SLICE_CAP: usize = 64;

/// Knit the AR quiver of a hereditary path algebra. Rightward starts at the
/// projective slice with path-count dimension vectors and repeatedly
/// completes meshes; a vertex whose mesh arithmetic closes is marked
/// Ext-injective and not translated. Leftward is the arrow-reversed dual.
/// Reaching the cap truncates the window and flags the frontier incomplete.
pub fn knit_hereditary(
    q: &Quiver,
    direction: KnitDirection,
    slice_cap: usize,
) -> Result<TranslationQuiver> {
    match direction {
        KnitDirection::RightFromProjectives => knit_right(q, slice_cap),
        KnitDirection::LeftFromInjectives => {
            let reversed = q.reversed();
            Ok(knit_right(&reversed, slice_cap)?.reversed())
        }
    }
}

fn knit_right(q: &Quiver, slice_cap: usize) -> Result<TranslationQuiver> {
    if q.has_loop() {
        return Err(Error::LoopPresent);
    }
    let counts = q.path_counts()?;
    let n = q.vertex_count();
    let mut tq = TranslationQuiver::new();
    // projective vertices with path-count dimension vectors
    let mut ids: Vec<usize> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = Vertex::new(
            format!("P_{}", q.vertices[j].id),
            format!("P{}", q.vertices[j].id),
        );
        v.dim_vector = Some((0..n).map(|i| counts[j][i] as i64).collect());
        v.is_projective = true;
        v.mesh_complete = true;
        ids.push(tq.add_vertex(v)?);
    }
    // arrow e_s -> e_t in q yields the irreducible map P_t -> P_s
    let mut arrow_mult: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for a in &q.arrows {
        *arrow_mult
            .entry((ids[a.target], ids[a.source]))
            .or_insert(0) += 1;
    }
    for (&(s, t), &m) in &arrow_mult {
        tq.add_arrow_idx(s, t, m);
    }
    knit_closure(&mut tq, slice_cap)?;
    Ok(tq)
}

/// A scheduled projective insertion: the projective enters as soon as every
/// radical summand exists in the window. Summands are referenced by label,
/// or by a comma-separated dimension vector for knitted vertices whose
/// labels are synthetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveInsertion {
    pub label: String,
    pub dim_vector: DimVec,
    /// Also flag the inserted vertex Ext-injective (projective-injectives).
    pub ext_injective: bool,
    pub radical_summands: Vec<String>,
}

fn summand_matches(v: &Vertex, spec: &str) -> bool {
    if v.label == spec {
        return true;
    }
    match &v.dim_vector {
        Some(d) => {
            let rendered: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            rendered.join(",") == spec
        }
        None => false,
    }
}

/// Rightward closure of a seed window: repeatedly translate every vertex
/// whose predecessors are settled, inserting scheduled projectives whose
/// radical summands exist. Deterministic: smallest vertex id first.
pub fn knit_from_seeds(
    seeds: &TranslationQuiver,
    schedule: &[ProjectiveInsertion],
    cap: usize,
) -> Result<TranslationQuiver> {
    let report = crate::arquiver::validate(seeds);
    if !report.is_clean() {
        return Err(Error::InconsistentSeeds(
            report.to_string().trim().to_string(),
        ));
    }
    let mut tq = seeds.clone();
    let mut sched: BTreeMap<String, ProjectiveInsertion> = BTreeMap::new();
    for ins in schedule {
        if sched.insert(ins.label.clone(), ins.clone()).is_some() {
            return Err(Error::DuplicateId(ins.label.clone()));
        }
    }
    knit_closure_with_schedule(&mut tq, &mut sched, cap)?;
    if let Some(label) = sched.keys().next() {
        return Err(Error::UnknownScheduleLabel(label.clone()));
    }
    Ok(tq)
}

fn knit_closure(tq: &mut TranslationQuiver, cap: usize) -> Result<()> {
    let mut empty = BTreeMap::new();
    knit_closure_with_schedule(tq, &mut empty, cap)
}

fn knit_closure_with_schedule(
    tq: &mut TranslationQuiver,
    schedule: &mut BTreeMap<String, ProjectiveInsertion>,
    cap: usize,
) -> Result<()> {
    // processed = translated rightward or recognized Ext-injective
    let mut processed: Vec<bool> = (0..tq.vertex_count())
        .map(|v| tq.tau_inv(v).is_some())
        .collect();
    let mut steps = 0usize;
    let mut serial = 0usize;
    loop {
        // insert scheduled projectives whose radical summands all exist
        let ready_labels: Vec<String> = schedule
            .iter()
            .filter(|(_, ins)| {
                ins.radical_summands
                    .iter()
                    .all(|spec| tq.vertices().iter().any(|v| summand_matches(v, spec)))
            })
            .map(|(label, _)| label.clone())
            .collect();
        for label in ready_labels {
            let ins = schedule.remove(&label).unwrap();
            let mut v = Vertex::new(format!("ins_{label}"), ins.label.clone());
            v.dim_vector = Some(ins.dim_vector.clone());
            v.is_projective = true;
            v.is_ext_injective = ins.ext_injective;
            v.mesh_complete = true;
            let pi = tq.add_vertex(v)?;
            processed.push(false);
            for spec in &ins.radical_summands {
                let r = tq
                    .vertices()
                    .iter()
                    .position(|v| summand_matches(v, spec))
                    .ok_or_else(|| Error::UnknownScheduleLabel(spec.clone()))?;
                tq.add_arrow_idx(r, pi, 1);
            }
        }

        if steps >= cap {
            // truncation: frontier vertices keep incomplete marks (see below)
            break;
        }
        // a vertex is ready when every predecessor is processed; ties are
        // broken by id so the closure is independent of insertion order
        let ready = (0..tq.vertex_count())
            .filter(|&v| !processed[v] && tq.predecessors(v).iter().all(|&(p, _)| processed[p]))
            .min_by(|&a, &b| tq.vertex(a).id.cmp(&tq.vertex(b).id));
        let Some(v) = ready else { break };
        // Ext-injective flag discovered earlier stops translation
        if tq.vertex(v).is_ext_injective {
            processed[v] = true;
            continue;
        }
        // successors of v: tau^{-1} of its predecessors (skipping the
        // Ext-injective ones) with inherited valuations, plus arrows already
        // recorded (schedule insertions)
        let mut middles: Vec<(DimVec, u32)> = Vec::new();
        let mut succ_targets: Vec<(usize, u32)> = Vec::new();
        let mut incomplete = false;
        for (p, val) in tq.predecessors(v) {
            if tq.vertex(p).is_ext_injective && tq.tau_inv(p).is_none() {
                continue;
            }
            match tq.tau_inv(p) {
                Some(w) => {
                    succ_targets.push((w, val));
                }
                None => {
                    incomplete = true;
                }
            }
        }
        if incomplete {
            processed[v] = true;
            continue;
        }
        for (w, val) in tq.successors(v) {
            if !succ_targets.contains(&(w, val)) {
                succ_targets.push((w, val));
            }
        }
        let dims_known = tq.vertex(v).dim_vector.is_some()
            && succ_targets
                .iter()
                .all(|&(w, _)| tq.vertex(w).dim_vector.is_some());
        if !dims_known {
            return Err(Error::Precondition(format!(
                "vertex `{}` lacks dimension data for knitting",
                tq.vertex(v).id
            )));
        }
        for &(w, val) in &succ_targets {
            middles.push((tq.vertex(w).dim_vector.clone().unwrap(), val));
        }
        let known = tq.vertex(v).dim_vector.clone().unwrap();
        match complete_mesh(&middles, &known)? {
            MeshOutcome::Closes => {
                tq.vertex_mut(v).is_ext_injective = true;
                processed[v] = true;
                steps += 1;
            }
            MeshOutcome::Completed(dims) => {
                let mut nv = Vertex::new(format!("k{serial}"), format!("k{serial}"));
                serial += 1;
                nv.label = dim_label(&dims);
                nv.dim_vector = Some(dims);
                nv.mesh_complete = true;
                let wi = tq.add_vertex(nv)?;
                processed.push(false);
                for &(w, val) in &succ_targets {
                    if tq.arrow_between(v, w).is_none() {
                        tq.add_arrow_idx(v, w, val);
                    }
                    tq.add_arrow_idx(w, wi, val);
                }
                tq.set_tau_idx(wi, v)?;
                processed[v] = true;
                steps += 1;
            }
        }
    }
    Ok(())
}

fn dim_label(dims: &[i64]) -> String {
    let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("d{}", parts.join("_"))
}

/// Parse a seeds document: interchange records plus `project` lines of the
/// form `project <label> <dims> <I|-> <rad-spec>[,<rad-spec>...]`, where a
/// rad-spec is a vertex label or a comma-free dimension vector written with
/// `.` separators (e.g. `1.1.0.0`).
pub fn parse_seed_file(text: &str) -> Result<(TranslationQuiver, Vec<ProjectiveInsertion>)> {
    let mut interchange_lines = Vec::new();
    let mut schedule = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if let Some(rest) = line.strip_prefix("project ") {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(Error::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("project record needs 4 fields, got {}", fields.len()),
                });
            }
            let dims: std::result::Result<Vec<i64>, _> =
                fields[1].split(',').map(|x| x.parse::<i64>()).collect();
            let dims = dims.map_err(|_| Error::Syntax {
                line: lineno + 1,
                col: 1,
                msg: format!("bad dimension vector `{}`", fields[1]),
            })?;
            let ext_injective = match fields[2] {
                "I" => true,
                "-" => false,
                other => {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("bad flag `{other}` (expected I or -)"),
                    })
                }
            };
            let radical_summands: Vec<String> = fields[3]
                .split(',')
                .map(|spec| spec.replace('.', ","))
                .collect();
            schedule.push(ProjectiveInsertion {
                label: fields[0].to_string(),
                dim_vector: dims,
                ext_injective,
                radical_summands,
            });
        } else {
            interchange_lines.push(raw);
        }
    }
    let seeds = crate::arquiver::parse_ar_quiver(&interchange_lines.join(
        "
",
    ))?;
    Ok((seeds, schedule))
}

/// Harada-Sai bound: composites of 2^n - 1 non-isomorphisms between
/// indecomposables of length at most n vanish.
pub fn harada_sai_bound(n: u32) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    Ok((BigInt::from(1) << n) - 1)
}

/// The length-bound constants m, s and the derived p = s(1 + m^2) - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub m: i64,
    pub s: i64,
}

impl Bounds {
    pub fn new(m: i64, s: i64) -> Result<Self> {
        if m < 1 || s < 1 {
            return Err(Error::Precondition(
                "bound constants must be positive".into(),
            ));
        }
        Ok(Bounds { m, s })
    }

    pub fn p(&self) -> i64 {
        self.s * (1 + self.m * self.m) - 1
    }
}

/// Interval for l(X) given an irreducible morphism between X and Y:
/// [max(1, l_Y - l_Y p), l_Y (1 + p)].
pub fn length_bounds(b: Bounds, l_y: i64) -> (i64, i64) {
    let p = b.p();
    ((l_y - l_y * p).max(1), l_y * (1 + p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthRule {
    MultipleArrows,
    EuclideanSubgraph,
    AInftyInftySubgraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthVerdict {
    GrowingEvidence(GrowthRule),
    BoundedEvidence,
    Undetermined,
}

#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub verdict: GrowthVerdict,
    /// Per-orbit length sequences along the tau-direction.
    pub orbit_trends: Vec<Vec<i64>>,
}

impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            GrowthVerdict::GrowingEvidence(rule) => write!(f, "growing-evidence ({rule:?})")?,
            GrowthVerdict::BoundedEvidence => write!(f, "bounded-evidence")?,
            GrowthVerdict::Undetermined => write!(f, "undetermined")?,
        }
        for trend in &self.orbit_trends {
            write!(f, "; orbit lengths {trend:?}")?;
        }
        Ok(())
    }
}

/// Which growth rule fires on a window with dimension data, plus the
/// observed per-orbit length trend.
pub fn growth_analysis(window: &TranslationQuiver) -> GrowthReport {
    let orbits = tau_orbits(window);
    let orbit_trends: Vec<Vec<i64>> = orbits
        .orbits
        .iter()
        .map(|o| {
            o.members
                .iter()
                .filter_map(|&v| window.vertex(v).jh_length())
                .collect()
        })
        .collect();

    // multiple arrows between non-finite orbits
    for a in window.arrows() {
        if a.valuation >= 2 {
            let sc = orbits.orbits[orbits.orbit_of[a.source]].class;
            let dc = orbits.orbits[orbits.orbit_of[a.target]].class;
            if sc != OrbitClass::Finite && dc != OrbitClass::Finite {
                return GrowthReport {
                    verdict: GrowthVerdict::GrowingEvidence(GrowthRule::MultipleArrows),
                    orbit_trends,
                };
            }
        }
    }
    // Euclidean or A-double-infinity sectional subgraph
    for seed in 0..window.vertex_count() {
        let sigma = full_sectional_subgraph(window, seed);
        if !sigma.full {
            continue;
        }
        if let Ok(ty) = subgraph_type(window, &sigma) {
            if ty.family.is_euclidean() {
                return GrowthReport {
                    verdict: GrowthVerdict::GrowingEvidence(GrowthRule::EuclideanSubgraph),
                    orbit_trends,
                };
            }
            if ty.family == crate::diagram::DiagramFamily::AInftyInfty {
                return GrowthReport {
                    verdict: GrowthVerdict::GrowingEvidence(GrowthRule::AInftyInftySubgraph),
                    orbit_trends,
                };
            }
        }
    }
    // closed windows carry genuinely bounded data
    let closed = (0..window.vertex_count()).all(|v| !window.is_boundary(v));
    if closed {
        return GrowthReport {
            verdict: GrowthVerdict::BoundedEvidence,
            orbit_trends,
        };
    }
    GrowthReport {
        verdict: GrowthVerdict::Undetermined,
        orbit_trends,
    }
}
