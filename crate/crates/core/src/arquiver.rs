//! Translation-quiver windows: the biquiver data model, the interchange
//! format, structural validation, DOT export and connected components.
//!
//! A window is a finite excerpt of a (usually infinite) Auslander-Reiten
//! quiver. Vertices are identities, not isomorphism classes: the same label
//! may occur at several vertices. Every structural invariant is gated on the
//! per-vertex `mesh_complete` flag so that boundary meshes never raise false
//! errors.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type DimVec = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub label: String,
    pub dim_vector: Option<DimVec>,
    pub length: Option<i64>,
    pub is_projective: bool,
    pub is_ext_injective: bool,
    /// The mesh ending at this vertex lies fully inside the window.
    pub mesh_complete: bool,
}

impl Vertex {
    pub fn new(id: impl Into<String>, label: impl Into<String>) -> Self {
        Vertex {
            id: id.into(),
            label: label.into(),
            dim_vector: None,
            length: None,
            is_projective: false,
            is_ext_injective: false,
            mesh_complete: true,
        }
    }

    /// Jordan-Hölder length: the explicit field if present, otherwise the
    /// entry sum of the dimension vector.
    pub fn jh_length(&self) -> Option<i64> {
        self.length
            .or_else(|| self.dim_vector.as_ref().map(|d| d.iter().sum()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub valuation: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationQuiver {
    vertices: Vec<Vertex>,
    index: BTreeMap<String, usize>,
    arrows: Vec<Arrow>,
    /// tau[v] = image of the translation, drawn target-of-sequence -> tau of it.
    tau: Vec<Option<usize>>,
}

impl TranslationQuiver {
    pub fn new() -> Self {
        TranslationQuiver {
            vertices: Vec::new(),
            index: BTreeMap::new(),
            arrows: Vec::new(),
            tau: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, v: Vertex) -> Result<usize> {
        if self.index.contains_key(&v.id) {
            return Err(Error::DuplicateId(v.id.clone()));
        }
        let idx = self.vertices.len();
        self.index.insert(v.id.clone(), idx);
        self.vertices.push(v);
        self.tau.push(None);
        Ok(idx)
    }

    pub fn add_arrow(&mut self, src: &str, dst: &str, valuation: u32) -> Result<()> {
        let source = self.resolve(src)?;
        let target = self.resolve(dst)?;
        if self
            .arrows
            .iter()
            .any(|a| a.source == source && a.target == target)
        {
            return Err(Error::DuplicateArrow(src.to_string(), dst.to_string()));
        }
        self.arrows.push(Arrow {
            source,
            target,
            valuation,
        });
        Ok(())
    }

    pub fn add_arrow_idx(&mut self, source: usize, target: usize, valuation: u32) {
        debug_assert!(!self
            .arrows
            .iter()
            .any(|a| a.source == source && a.target == target));
        self.arrows.push(Arrow {
            source,
            target,
            valuation,
        });
    }

    /// Record tau(z) = t. Rejected when `z` is flagged projective.
    pub fn set_tau(&mut self, z: &str, t: &str) -> Result<()> {
        let zi = self.resolve(z)?;
        let ti = self.resolve(t)?;
        self.set_tau_idx(zi, ti)
    }

    pub fn set_tau_idx(&mut self, zi: usize, ti: usize) -> Result<()> {
        if self.vertices[zi].is_projective {
            return Err(Error::TauOnProjective(self.vertices[zi].id.clone()));
        }
        if self.tau.contains(&Some(ti)) {
            return Err(Error::TauNotInjective(self.vertices[ti].id.clone()));
        }
        self.tau[zi] = Some(ti);
        Ok(())
    }

    fn resolve(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn vertex_idx(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn vertex(&self, idx: usize) -> &Vertex {
        &self.vertices[idx]
    }

    pub fn vertex_mut(&mut self, idx: usize) -> &mut Vertex {
        &mut self.vertices[idx]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn tau(&self, v: usize) -> Option<usize> {
        self.tau[v]
    }

    pub fn tau_inv(&self, v: usize) -> Option<usize> {
        self.tau.iter().position(|img| *img == Some(v))
    }

    /// tau^k for k >= 0, tau^{-|k|} for k < 0; None if the orbit leaves the window.
    pub fn tau_power(&self, v: usize, k: i64) -> Option<usize> {
        let mut cur = v;
        if k >= 0 {
            for _ in 0..k {
                cur = self.tau(cur)?;
            }
        } else {
            for _ in 0..(-k) {
                cur = self.tau_inv(cur)?;
            }
        }
        Some(cur)
    }

    /// Immediate predecessors with valuations, sorted by vertex index.
    pub fn predecessors(&self, v: usize) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = self
            .arrows
            .iter()
            .filter(|a| a.target == v)
            .map(|a| (a.source, a.valuation))
            .collect();
        out.sort_unstable();
        out
    }

    /// Immediate successors with valuations, sorted by vertex index.
    pub fn successors(&self, v: usize) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = self
            .arrows
            .iter()
            .filter(|a| a.source == v)
            .map(|a| (a.target, a.valuation))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn arrow_between(&self, src: usize, dst: usize) -> Option<&Arrow> {
        self.arrows
            .iter()
            .find(|a| a.source == src && a.target == dst)
    }

    /// A vertex at the window boundary: its neighbourhood may be truncated,
    /// so analyses must not draw conclusions from absence of structure there.
    pub fn is_boundary(&self, v: usize) -> bool {
        let vert = &self.vertices[v];
        if !vert.mesh_complete {
            return true;
        }
        if self.tau(v).is_none() && !vert.is_projective {
            return true;
        }
        match self.tau_inv(v) {
            None => {
                if !vert.is_ext_injective {
                    return true;
                }
            }
            Some(w) => {
                if !self.vertices[w].mesh_complete {
                    return true;
                }
            }
        }
        false
    }

    /// The same window with all 1-arrows reversed, tau inverted and the
    /// projective / Ext-injective roles swapped.
    pub fn reversed(&self) -> TranslationQuiver {
        let mut out = TranslationQuiver::new();
        for v in &self.vertices {
            let mut w = v.clone();
            std::mem::swap(&mut w.is_projective, &mut w.is_ext_injective);
            // completeness of the mesh ending at v becomes completeness of the
            // mesh starting there; recomputed below.
            w.mesh_complete = true;
            out.add_vertex(w).expect("ids unique");
        }
        for a in &self.arrows {
            out.arrows.push(Arrow {
                source: a.target,
                target: a.source,
                valuation: a.valuation,
            });
        }
        for (z, img) in self.tau.iter().enumerate() {
            if let Some(t) = *img {
                out.tau[t] = Some(z);
            }
        }
        // mesh completeness transfers along tau: the mesh ending at z in the
        // reversed window is the mesh starting at z here, i.e. the one ending
        // at tau^{-1}(z). Vertices without a reversed mesh keep the vacuous
        // default.
        for z in 0..out.vertices.len() {
            let complete = match self.tau_inv(z) {
                Some(w) => self.vertices[w].mesh_complete,
                None => true,
            };
            out.vertices[z].mesh_complete = complete;
        }
        out
    }

    /// Partition by walks over 1-arrows and 2-arrows, either direction.
    pub fn connected_components(&self) -> Vec<TranslationQuiver> {
        let n = self.vertices.len();
        if n == 0 {
            return Vec::new();
        }
        let mut comp = vec![usize::MAX; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for a in &self.arrows {
            adj[a.source].push(a.target);
            adj[a.target].push(a.source);
        }
        for (z, img) in self.tau.iter().enumerate() {
            if let Some(t) = *img {
                adj[z].push(t);
                adj[t].push(z);
            }
        }
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![TranslationQuiver::new(); count];
        for (i, v) in self.vertices.iter().enumerate() {
            out[comp[i]].add_vertex(v.clone()).expect("ids unique");
        }
        for a in &self.arrows {
            let c = comp[a.source];
            let src = &self.vertices[a.source].id;
            let dst = &self.vertices[a.target].id;
            out[c].add_arrow(src, dst, a.valuation).expect("fresh");
        }
        for (z, img) in self.tau.iter().enumerate() {
            if let Some(t) = *img {
                let c = comp[z];
                out[c]
                    .set_tau(&self.vertices[z].id, &self.vertices[t].id)
                    .expect("fresh");
            }
        }
        out
    }

    /// Canonical interchange rendering: vertices sorted by id, arrows by
    /// (src, dst), tau records by source. Parsing this text reproduces the
    /// window exactly.
    pub fn to_interchange(&self) -> String {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].id.cmp(&self.vertices[b].id));
        let mut s = String::from("arquiver\n");
        for &i in &order {
            let v = &self.vertices[i];
            let dims = match &v.dim_vector {
                Some(d) => d
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                None => "-".to_string(),
            };
            let len = match v.length {
                Some(l) => l.to_string(),
                None => "-".to_string(),
            };
            let mut flags = String::new();
            if v.is_projective {
                flags.push('P');
            }
            if v.is_ext_injective {
                flags.push('I');
            }
            if v.mesh_complete {
                flags.push('M');
            }
            if flags.is_empty() {
                flags.push('-');
            }
            s.push_str(&format!(
                "vertex {} {} {} {} {}\n",
                v.id, v.label, dims, len, flags
            ));
        }
        let mut arrows: Vec<(String, String, u32)> = self
            .arrows
            .iter()
            .map(|a| {
                (
                    self.vertices[a.source].id.clone(),
                    self.vertices[a.target].id.clone(),
                    a.valuation,
                )
            })
            .collect();
        arrows.sort();
        for (src, dst, val) in arrows {
            s.push_str(&format!("arrow {src} {dst} {val}\n"));
        }
        let mut taus: Vec<(String, String)> = self
            .tau
            .iter()
            .enumerate()
            .filter_map(|(z, img)| {
                img.map(|t| (self.vertices[z].id.clone(), self.vertices[t].id.clone()))
            })
            .collect();
        taus.sort();
        for (z, t) in taus {
            s.push_str(&format!("tau {z} {t}\n"));
        }
        s
    }

    /// DOT rendering: solid 1-arrows (`xlabel` for valuation > 1), dotted
    /// 2-arrows from z to tau(z), bracket marks on projective and
    /// Ext-injective labels.
    pub fn to_dot(&self) -> String {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| self.vertices[a].id.cmp(&self.vertices[b].id));
        let mut s = String::from("digraph ar {\n");
        for &i in &order {
            let v = &self.vertices[i];
            let mut label = v.label.clone();
            if v.is_projective {
                label = format!("[{label}");
            }
            if v.is_ext_injective {
                label = format!("{label}]");
            }
            s.push_str(&format!("  \"{}\" [label=\"{}\"];\n", v.id, label));
        }
        let mut arrows: Vec<(String, String, u32)> = self
            .arrows
            .iter()
            .map(|a| {
                (
                    self.vertices[a.source].id.clone(),
                    self.vertices[a.target].id.clone(),
                    a.valuation,
                )
            })
            .collect();
        arrows.sort();
        for (src, dst, val) in arrows {
            if val > 1 {
                s.push_str(&format!("  \"{src}\" -> \"{dst}\" [xlabel=\"{val}\"];\n"));
            } else {
                s.push_str(&format!("  \"{src}\" -> \"{dst}\";\n"));
            }
        }
        let mut taus: Vec<(String, String)> = self
            .tau
            .iter()
            .enumerate()
            .filter_map(|(z, img)| {
                img.map(|t| (self.vertices[z].id.clone(), self.vertices[t].id.clone()))
            })
            .collect();
        taus.sort();
        for (z, t) in taus {
            s.push_str(&format!("  \"{z}\" -> \"{t}\" [style=dotted];\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl Default for TranslationQuiver {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for TranslationQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ar-window with {} vertices, {} arrows",
            self.vertices.len(),
            self.arrows.len()
        )
    }
}

/// Parse the AR interchange format. Structure only; `validate` checks the
/// mathematical invariants.
pub fn parse_ar_quiver(text: &str) -> Result<TranslationQuiver> {
    let mut tq = TranslationQuiver::new();
    let mut pending_arrows: Vec<(usize, String, String, u32)> = Vec::new();
    let mut pending_taus: Vec<(usize, String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() || line == "arquiver" {
            continue;
        }
        let mut it = line.split_whitespace();
        let kind = it.next().unwrap();
        let fields: Vec<&str> = it.collect();
        match kind {
            "vertex" => {
                if fields.len() != 5 {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("vertex record needs 5 fields, got {}", fields.len()),
                    });
                }
                let mut v = Vertex::new(fields[0], fields[1]);
                if fields[2] != "-" {
                    let dims: std::result::Result<Vec<i64>, _> =
                        fields[2].split(',').map(|x| x.parse::<i64>()).collect();
                    v.dim_vector = Some(dims.map_err(|_| Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("bad dimension vector `{}`", fields[2]),
                    })?);
                }
                if fields[3] != "-" {
                    v.length = Some(fields[3].parse::<i64>().map_err(|_| Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("bad length `{}`", fields[3]),
                    })?);
                }
                v.mesh_complete = false;
                if fields[4] != "-" {
                    for c in fields[4].chars() {
                        match c {
                            'P' => v.is_projective = true,
                            'I' => v.is_ext_injective = true,
                            'M' => v.mesh_complete = true,
                            other => {
                                return Err(Error::Syntax {
                                    line: lineno + 1,
                                    col: 1,
                                    msg: format!("unknown flag `{other}`"),
                                })
                            }
                        }
                    }
                }
                tq.add_vertex(v)?;
            }
            "arrow" => {
                if fields.len() != 3 {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("arrow record needs 3 fields, got {}", fields.len()),
                    });
                }
                let val: u32 = fields[2].parse().map_err(|_| Error::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("bad valuation `{}`", fields[2]),
                })?;
                if val < 1 {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: "valuation must be >= 1".into(),
                    });
                }
                pending_arrows.push((
                    lineno + 1,
                    fields[0].to_string(),
                    fields[1].to_string(),
                    val,
                ));
            }
            "tau" => {
                if fields.len() != 2 {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("tau record needs 2 fields, got {}", fields.len()),
                    });
                }
                pending_taus.push((lineno + 1, fields[0].to_string(), fields[1].to_string()));
            }
            other => {
                return Err(Error::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("unknown record kind `{other}`"),
                });
            }
        }
    }
    for (_, src, dst, val) in pending_arrows {
        tq.add_arrow(&src, &dst, val)?;
    }
    for (_, z, t) in pending_taus {
        tq.set_tau(&z, &t)?;
    }
    Ok(tq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub severity: Severity,
    pub rule: &'static str,
    pub subjects: Vec<String>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Error)
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.findings.iter().any(|f| f.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.findings.is_empty() {
            return write!(f, "ok: no findings");
        }
        for finding in &self.findings {
            let sev = match finding.severity {
                Severity::Error => "error",
                Severity::Warning => "warning",
            };
            writeln!(
                f,
                "{sev} [{}] {}: {}",
                finding.rule,
                finding.subjects.join(","),
                finding.message
            )?;
        }
        Ok(())
    }
}

/// Structural validation of a window.
///
/// Errors: `tau-on-projective`, `mesh` (predecessor/successor multisets with
/// valuations disagree across a complete mesh), `additivity` (dimension
/// vectors break mesh additivity), `length` (length field differs from the
/// dimension-vector entry sum).
///
/// Warnings: `w1-sectional-cycle` (a sectional cycle carrying neither a
/// projective nor an Ext-injective vertex), `w2-loop` (a loop on a vertex
/// that is neither projective nor Ext-injective without tau(X) = X).
pub fn validate(tq: &TranslationQuiver) -> ValidationReport {
    let mut findings = Vec::new();
    let n = tq.vertex_count();

    for z in 0..n {
        let vz = tq.vertex(z);
        if vz.is_projective && tq.tau(z).is_some() {
            findings.push(Finding {
                severity: Severity::Error,
                rule: "tau-on-projective",
                subjects: vec![vz.id.clone()],
                message: "translation defined on a projective vertex".into(),
            });
        }
        if let (Some(len), Some(dims)) = (vz.length, vz.dim_vector.as_ref()) {
            if len != dims.iter().sum::<i64>() {
                findings.push(Finding {
                    severity: Severity::Error,
                    rule: "length",
                    subjects: vec![vz.id.clone()],
                    message: format!("length {len} differs from dimension-vector sum"),
                });
            }
        }
        // mesh checks, gated on the target's completeness flag
        if !vz.mesh_complete {
            continue;
        }
        let Some(t) = tq.tau(z) else { continue };
        let preds: BTreeMap<usize, u32> = tq.predecessors(z).into_iter().collect();
        let succs: BTreeMap<usize, u32> = tq.successors(t).into_iter().collect();
        if preds != succs {
            findings.push(Finding {
                severity: Severity::Error,
                rule: "mesh",
                subjects: vec![vz.id.clone(), tq.vertex(t).id.clone()],
                message: "predecessors of the vertex and successors of its translate disagree"
                    .into(),
            });
            continue;
        }
        let all_dims = vz.dim_vector.is_some()
            && tq.vertex(t).dim_vector.is_some()
            && preds.keys().all(|&y| tq.vertex(y).dim_vector.is_some());
        if all_dims {
            let dim_z = vz.dim_vector.as_ref().unwrap();
            let dim_t = tq.vertex(t).dim_vector.as_ref().unwrap();
            if dim_z.len() == dim_t.len()
                && preds
                    .keys()
                    .all(|&y| tq.vertex(y).dim_vector.as_ref().unwrap().len() == dim_z.len())
            {
                let mut sum = vec![0i64; dim_z.len()];
                for (&y, &val) in &preds {
                    for (s, d) in sum
                        .iter_mut()
                        .zip(tq.vertex(y).dim_vector.as_ref().unwrap())
                    {
                        *s += i64::from(val) * d;
                    }
                }
                let lhs: Vec<i64> = dim_z.iter().zip(dim_t.iter()).map(|(a, b)| a + b).collect();
                if lhs != sum {
                    findings.push(Finding {
                        severity: Severity::Error,
                        rule: "additivity",
                        subjects: vec![vz.id.clone(), tq.vertex(t).id.clone()],
                        message:
                            "dim tau(z) + dim z differs from the valuation-weighted middle-term sum"
                                .into(),
                    });
                }
            } else {
                findings.push(Finding {
                    severity: Severity::Error,
                    rule: "additivity",
                    subjects: vec![vz.id.clone()],
                    message: "dimension vectors in one mesh have different lengths".into(),
                });
            }
        }
    }

    // w2: loops
    for a in tq.arrows() {
        if a.source == a.target {
            let v = tq.vertex(a.source);
            let tau_fixed = tq.tau(a.source) == Some(a.source);
            if !v.is_projective && !v.is_ext_injective && !tau_fixed {
                findings.push(Finding {
                    severity: Severity::Warning,
                    rule: "w2-loop",
                    subjects: vec![v.id.clone()],
                    message: "loop on a vertex that is neither projective nor Ext-injective and not tau-fixed".into(),
                });
            }
        }
    }

    // w1: sectional cycles without a projective or Ext-injective member
    for cycle in sectional_cycles(tq, 12) {
        let marked = cycle
            .iter()
            .any(|&v| tq.vertex(v).is_projective || tq.vertex(v).is_ext_injective);
        if !marked {
            findings.push(Finding {
                severity: Severity::Warning,
                rule: "w1-sectional-cycle",
                subjects: cycle.iter().map(|&v| tq.vertex(v).id.clone()).collect(),
                message: "sectional cycle with neither a projective nor an Ext-injective vertex"
                    .into(),
            });
        }
    }

    ValidationReport { findings }
}

/// Enumerate sectional cycles up to `cap` length. A cycle is sectional when
/// its composition with itself stays sectional, i.e. the condition also
/// holds across the wrap-around. Rotations are deduplicated.
pub fn sectional_cycles(tq: &TranslationQuiver, cap: usize) -> Vec<Vec<usize>> {
    let n = tq.vertex_count();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    // DFS from each minimal start vertex
    for start in 0..n {
        let mut stack: Vec<Vec<usize>> = vec![vec![start]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            for (next, _) in tq.successors(last) {
                // keep cycles canonical: never walk below the start vertex
                if next < start {
                    continue;
                }
                // the step must keep the path sectional
                if path.len() >= 2 {
                    let prev2 = path[path.len() - 2];
                    if tq.tau(next) == Some(prev2) {
                        continue;
                    }
                }
                if next == start {
                    if path.len() < 2 {
                        continue; // a loop; handled by w2
                    }
                    // wrap-around sectionality of the doubled path
                    let m = path.len();
                    let ok = tq.tau(path[0]) != Some(path[m - 2])
                        && tq.tau(path[1]) != Some(path[m - 1]);
                    if ok {
                        let mut canon = path.clone();
                        let minpos = canon
                            .iter()
                            .enumerate()
                            .min_by_key(|(_, &v)| v)
                            .map(|(i, _)| i)
                            .unwrap();
                        canon.rotate_left(minpos);
                        found.insert(canon);
                    }
                    continue;
                }
                if path.contains(&next) || path.len() >= cap {
                    continue;
                }
                let mut ext = path.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mini_window() -> TranslationQuiver {
        let mut tq = TranslationQuiver::new();
        let mut x = Vertex::new("x", "X");
        x.is_projective = true;
        x.dim_vector = Some(vec![1, 0]);
        tq.add_vertex(x).unwrap();
        let mut y = Vertex::new("y", "Y");
        y.dim_vector = Some(vec![1, 1]);
        tq.add_vertex(y).unwrap();
        let mut z = Vertex::new("z", "Z");
        z.dim_vector = Some(vec![0, 1]);
        tq.add_vertex(z).unwrap();
        tq.add_arrow("x", "y", 1).unwrap();
        tq.add_arrow("y", "z", 1).unwrap();
        tq.set_tau("z", "x").unwrap();
        tq
    }

    #[test]
    fn empty_window_parses() {
        let tq = parse_ar_quiver("").unwrap();
        assert_eq!(tq.vertex_count(), 0);
        assert!(validate(&tq).is_clean());
    }

    #[test]
    fn tau_on_projective_rejected_at_parse() {
        let doc = "vertex p P2 - - PM\nvertex q Q - - M\ntau p q\n";
        let err = parse_ar_quiver(doc).unwrap_err();
        assert_eq!(err, Error::TauOnProjective("p".into()));
    }

    #[test]
    fn roundtrip_is_identity() {
        let tq = mini_window();
        let text = tq.to_interchange();
        let again = parse_ar_quiver(&text).unwrap();
        assert_eq!(again.to_interchange(), text);
    }

    #[test]
    fn mesh_and_additivity() {
        let tq = mini_window();
        let report = validate(&tq);
        assert!(report.is_clean(), "{report}");

        // corrupt one entry: additivity must fire
        let mut bad = mini_window();
        let i = bad.vertex_idx("y").unwrap();
        bad.vertex_mut(i).dim_vector = Some(vec![2, 1]);
        let report = validate(&bad);
        assert!(report.has_rule("additivity"));
    }

    #[test]
    fn dot_export_counts() {
        let tq = mini_window();
        let dot = tq.to_dot();
        assert_eq!(dot.matches("style=dotted").count(), 1);
        assert_eq!(dot.matches("->").count(), 3);
        let empty = TranslationQuiver::new();
        assert_eq!(empty.to_dot(), "digraph ar {\n}\n");
    }

    #[test]
    fn dot_valuation_label() {
        let tq = crate::fixtures::load_window("kronecker-fd.ar", None).unwrap();
        let dot = tq.to_dot();
        assert!(dot.contains("xlabel=\"2\""), "{dot}");
    }

    #[test]
    fn a3_dot_counts() {
        let tq = crate::fixtures::load_window("a3.ar", None).unwrap();
        let dot = tq.to_dot();
        assert_eq!(dot.matches("label=").count(), 6);
        assert_eq!(dot.matches("style=dotted").count(), 3);
        assert_eq!(dot.matches("->").count(), 9); // six solid plus three dotted
    }

    #[test]
    fn single_mesh_dot() {
        let mut tq = TranslationQuiver::new();
        tq.add_vertex(Vertex::new("x", "X")).unwrap();
        tq.add_vertex(Vertex::new("y", "Y")).unwrap();
        tq.add_arrow("x", "y", 1).unwrap();
        tq.set_tau("y", "x").unwrap();
        let dot = tq.to_dot();
        assert_eq!(dot.matches("style=dotted").count(), 1);
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn components_split() {
        let mut tq = mini_window();
        tq.add_vertex(Vertex::new("lonely", "L")).unwrap();
        let comps = tq.connected_components();
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn w1_fires_on_unmarked_sectional_cycle() {
        // triangle x -> y -> z -> x with tau fixing each vertex, so every
        // length-2 subpath is sectional and no vertex is marked
        let mut tq = TranslationQuiver::new();
        for id in ["x", "y", "z"] {
            tq.add_vertex(Vertex::new(id, id)).unwrap();
        }
        tq.add_arrow("x", "y", 1).unwrap();
        tq.add_arrow("y", "z", 1).unwrap();
        tq.add_arrow("z", "x", 1).unwrap();
        tq.set_tau("x", "x").unwrap();
        tq.set_tau("y", "y").unwrap();
        tq.set_tau("z", "z").unwrap();
        let report = validate(&tq);
        assert!(report.has_rule("w1-sectional-cycle"), "{report}");
    }

    #[test]
    fn reversal_preserves_structure() {
        let tq = mini_window();
        let rev = tq.reversed();
        assert!(validate(&rev).is_clean(), "{}", validate(&rev));
        let twice = rev.reversed();
        assert_eq!(twice.arrows(), tq.arrows());
        for v in 0..tq.vertex_count() {
            assert_eq!(twice.tau(v), tq.tau(v));
            assert_eq!(twice.vertex(v).is_projective, tq.vertex(v).is_projective);
            assert_eq!(
                twice.vertex(v).is_ext_injective,
                tq.vertex(v).is_ext_injective
            );
        }
    }
}
