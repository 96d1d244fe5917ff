//! Quivers as presentations of path algebras: a finite directed multigraph
//! with optional formal relations. Relations are parsed and kept verbatim;
//! they are never evaluated.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverVertex {
    pub id: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverArrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// One summand of a relation: an integer coefficient and a composable chain
/// of arrow ids, written source-to-target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTerm {
    pub coefficient: i64,
    pub arrows: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
    pub source_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<QuiverVertex>,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<Relation>,
    vertex_index: BTreeMap<String, usize>,
    arrow_index: BTreeMap<String, usize>,
}

impl Quiver {
    pub fn new() -> Self {
        Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            relations: Vec::new(),
            vertex_index: BTreeMap::new(),
            arrow_index: BTreeMap::new(),
        }
    }

    pub fn add_vertex(&mut self, id: &str, label: &str) -> Result<usize> {
        if self.vertex_index.contains_key(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        let idx = self.vertices.len();
        self.vertices.push(QuiverVertex {
            id: id.to_string(),
            label: label.to_string(),
        });
        self.vertex_index.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn add_arrow(&mut self, id: &str, src: &str, dst: &str) -> Result<usize> {
        if self.arrow_index.contains_key(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        let source = *self
            .vertex_index
            .get(src)
            .ok_or_else(|| Error::UnknownVertex(src.to_string()))?;
        let target = *self
            .vertex_index
            .get(dst)
            .ok_or_else(|| Error::UnknownVertex(dst.to_string()))?;
        let idx = self.arrows.len();
        self.arrows.push(QuiverArrow {
            id: id.to_string(),
            source,
            target,
            label: id.to_string(),
        });
        self.arrow_index.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn vertex_idx(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arrow_idx(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Arrow multiplicity between an ordered pair of vertices.
    pub fn arrow_multiplicity(&self, src: usize, dst: usize) -> u32 {
        self.arrows
            .iter()
            .filter(|a| a.source == src && a.target == dst)
            .count() as u32
    }

    pub fn has_loop(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn's algorithm; ties broken by vertex index for determinism.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().min() {
            ready.retain(|&w| w != v);
            order.push(v);
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        ready.push(a.target);
                    }
                }
            }
        }
        if order.len() == n {
            Some(order)
        } else {
            None
        }
    }

    /// Path counts between all ordered pairs, including the trivial path.
    /// Requires acyclicity; multiplicities multiply along a path.
    pub fn path_counts(&self) -> Result<Vec<Vec<u64>>> {
        let order = self.topological_order().ok_or(Error::CyclicQuiver)?;
        let n = self.vertices.len();
        let mut counts = vec![vec![0u64; n]; n];
        for v in 0..n {
            counts[v][v] = 1;
        }
        // process targets in topological order so counts into them are final
        for &v in &order {
            for a in &self.arrows {
                if a.target == v {
                    for s in 0..n {
                        let add = counts[s][a.source];
                        counts[s][v] += add;
                    }
                }
            }
        }
        Ok(counts)
    }

    /// The opposite quiver: all arrows reversed.
    pub fn reversed(&self) -> Quiver {
        let mut q = Quiver::new();
        for v in &self.vertices {
            q.add_vertex(&v.id, &v.label).expect("ids unique");
        }
        for a in &self.arrows {
            q.add_arrow(
                &a.id,
                &self.vertices[a.target].id,
                &self.vertices[a.source].id,
            )
            .expect("ids unique");
        }
        q
    }

    /// Underlying undirected graph with edge multiplicities.
    pub fn underlying_graph(&self) -> crate::diagram::UndirectedGraph {
        let mut g = crate::diagram::UndirectedGraph::new();
        for v in &self.vertices {
            g.add_vertex(v.id.clone());
        }
        for a in &self.arrows {
            g.add_edge_mult(&self.vertices[a.source].id, &self.vertices[a.target].id, 1);
        }
        g
    }
}

impl Default for Quiver {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "quiver with {} vertices, {} arrows, {} relations",
            self.vertices.len(),
            self.arrows.len(),
            self.relations.len()
        )
    }
}

/// Parse the line-oriented quiver grammar:
///
/// ```text
/// vertices <id>[:<label>] ...
/// arrows <id>:<src>-><dst> ...
/// relations <expr>[, <expr> ...]
/// ```
///
/// Sections may be separated by `;` or newlines; `#` starts a comment.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut quiver = Quiver::new();
    let mut pending_relations: Vec<(usize, usize, String)> = Vec::new();

    #[derive(PartialEq)]
    enum Section {
        None,
        Vertices,
        Arrows,
        Relations,
    }
    let mut section = Section::None;

    for (lineno, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        for (segno, segment) in line.split(';').enumerate() {
            let col_base = raw_line.find(segment.trim()).unwrap_or(0) + 1;
            let _ = segno;
            let mut rest = segment.trim();
            if rest.is_empty() {
                continue;
            }
            loop {
                if let Some(r) = rest.strip_prefix("vertices") {
                    section = Section::Vertices;
                    rest = r.trim_start();
                } else if let Some(r) = rest.strip_prefix("arrows") {
                    section = Section::Arrows;
                    rest = r.trim_start();
                } else if let Some(r) = rest.strip_prefix("relations") {
                    section = Section::Relations;
                    rest = r.trim_start();
                } else {
                    break;
                }
            }
            if rest.is_empty() {
                continue;
            }
            match section {
                Section::None => {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: col_base,
                        msg: format!("expected a section keyword before `{rest}`"),
                    });
                }
                Section::Vertices => {
                    for tok in rest.split_whitespace() {
                        let (id, label) = match tok.split_once(':') {
                            Some((id, label)) => (id, label),
                            None => (tok, tok),
                        };
                        check_token(id, lineno, col_base)?;
                        quiver.add_vertex(id, label)?;
                    }
                }
                Section::Arrows => {
                    for tok in rest.split_whitespace() {
                        let (id, spec) = tok.split_once(':').ok_or_else(|| Error::Syntax {
                            line: lineno + 1,
                            col: col_base,
                            msg: format!("arrow `{tok}` must look like id:src->dst"),
                        })?;
                        let (src, dst) = spec.split_once("->").ok_or_else(|| Error::Syntax {
                            line: lineno + 1,
                            col: col_base,
                            msg: format!("arrow `{tok}` must look like id:src->dst"),
                        })?;
                        check_token(id, lineno, col_base)?;
                        quiver.add_arrow(id, src.trim(), dst.trim())?;
                    }
                }
                Section::Relations => {
                    for expr in rest.split(',') {
                        let expr = expr.trim();
                        if !expr.is_empty() {
                            pending_relations.push((lineno + 1, col_base, expr.to_string()));
                        }
                    }
                }
            }
        }
    }

    for (line, col, expr) in pending_relations {
        let relation = parse_relation(&quiver, &expr, line, col)?;
        quiver.relations.push(relation);
    }
    Ok(quiver)
}

fn check_token(tok: &str, line: usize, col: usize) -> Result<()> {
    if tok.is_empty() || !tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::Syntax {
            line: line + 1,
            col,
            msg: format!("bad identifier `{tok}`"),
        });
    }
    Ok(())
}

/// `<term> (('+'|'-') <term>)*` with `term = [int] path` and
/// `path = arrow ('*' arrow)*`, arrows composing left to right.
fn parse_relation(quiver: &Quiver, expr: &str, line: usize, col: usize) -> Result<Relation> {
    let mut terms = Vec::new();
    let normalized = expr.replace('-', " - ").replace('+', " + ");
    let mut sign = 1i64;
    let mut current = String::new();
    let mut chunks: Vec<(i64, String)> = Vec::new();
    for tok in normalized.split_whitespace() {
        match tok {
            "+" | "-" => {
                if !current.is_empty() {
                    chunks.push((sign, std::mem::take(&mut current)));
                }
                sign = if tok == "-" { -1 } else { 1 };
            }
            other => {
                if !current.is_empty() {
                    return Err(Error::Syntax {
                        line,
                        col,
                        msg: format!("unexpected token `{other}` in relation `{expr}`"),
                    });
                }
                current = other.to_string();
            }
        }
    }
    if !current.is_empty() {
        chunks.push((sign, current));
    }
    if chunks.is_empty() {
        return Err(Error::Syntax {
            line,
            col,
            msg: format!("empty relation `{expr}`"),
        });
    }
    for (sign, chunk) in chunks {
        let mut coefficient = sign;
        let mut arrows = Vec::new();
        for (i, part) in chunk.split('*').enumerate() {
            let part = part.trim();
            if i == 0 {
                if let Ok(c) = part.parse::<i64>() {
                    coefficient *= c;
                    continue;
                }
            }
            if quiver.arrow_idx(part).is_none() {
                return Err(Error::Syntax {
                    line,
                    col,
                    msg: format!("unknown arrow `{part}` in relation `{expr}`"),
                });
            }
            arrows.push(part.to_string());
        }
        if arrows.is_empty() {
            return Err(Error::Syntax {
                line,
                col,
                msg: format!("relation term `{chunk}` has no arrows"),
            });
        }
        // composability: target of each arrow is the source of the next
        for pair in arrows.windows(2) {
            let a = &quiver.arrows[quiver.arrow_idx(&pair[0]).unwrap()];
            let b = &quiver.arrows[quiver.arrow_idx(&pair[1]).unwrap()];
            if a.target != b.source {
                return Err(Error::NonComposable(format!(
                    "{} then {} in `{expr}`",
                    pair[0], pair[1]
                )));
            }
        }
        terms.push(RelationTerm {
            coefficient,
            arrows,
        });
    }
    Ok(Relation {
        terms,
        source_text: expr.to_string(),
    })
}
