//! Undirected diagram classification: Dynkin and Euclidean families,
//! Cartan matrices, subadditive functions.

use crate::error::{Error, Result};
use crate::matrix::{primitive_integer_vector, IntMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Finite undirected multigraph. Vertices are kept in insertion order;
/// classification is independent of the ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertices: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Unordered pairs (i <= j) with multiplicity.
    edges: BTreeMap<(usize, usize), u32>,
}

impl UndirectedGraph {
    pub fn new() -> Self {
        UndirectedGraph {
            vertices: Vec::new(),
            index: BTreeMap::new(),
            edges: BTreeMap::new(),
        }
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> usize {
        let id = id.into();
        if let Some(&i) = self.index.get(&id) {
            return i;
        }
        let i = self.vertices.len();
        self.index.insert(id.clone(), i);
        self.vertices.push(id);
        i
    }

    pub fn add_edge(&mut self, a: &str, b: &str) {
        self.add_edge_mult(a, b, 1);
    }

    pub fn add_edge_mult(&mut self, a: &str, b: &str, mult: u32) {
        let i = self.add_vertex(a);
        let j = self.add_vertex(b);
        let key = (i.min(j), i.max(j));
        *self.edges.entry(key).or_insert(0) += mult;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_count_with_multiplicity(&self) -> u32 {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        *self.edges.get(&(i.min(j), i.max(j))).unwrap_or(&0)
    }

    pub fn has_loop(&self) -> bool {
        self.edges.keys().any(|&(a, b)| a == b)
    }

    fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in self.edges.keys() {
            if a == i && b != i {
                out.push(b);
            } else if b == i && a != i {
                out.push(a);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Degree counting multiplicities; a loop adds 2.
    fn degree(&self, i: usize) -> u32 {
        let mut d = 0;
        for (&(a, b), &m) in &self.edges {
            if a == i && b == i {
                d += 2 * m;
            } else if a == i || b == i {
                d += m;
            }
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn connected_components(&self) -> Vec<UndirectedGraph> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            comp[start] = count;
            while let Some(v) = queue.pop_front() {
                for w in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![UndirectedGraph::new(); count];
        for (i, id) in self.vertices.iter().enumerate() {
            out[comp[i]].add_vertex(id.clone());
        }
        for (&(a, b), &m) in &self.edges {
            out[comp[a]].add_edge_mult(&self.vertices[a], &self.vertices[b], m);
        }
        out
    }

    /// Induced subgraph on a vertex subset, with all edges between them.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for &i in keep {
            g.add_vertex(self.vertices[i].clone());
        }
        for (&(a, b), &m) in &self.edges {
            if keep.contains(&a) && keep.contains(&b) {
                g.add_edge_mult(&self.vertices[a], &self.vertices[b], m);
            }
        }
        g
    }
}

impl Default for UndirectedGraph {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramFamily {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
    ATilde(u32),
    DTilde(u32),
    E6Tilde,
    E7Tilde,
    E8Tilde,
    AInfty,
    DInfty,
    AInftyInfty,
    Other,
}

impl DiagramFamily {
    pub fn is_dynkin(&self) -> bool {
        matches!(
            self,
            DiagramFamily::A(_)
                | DiagramFamily::D(_)
                | DiagramFamily::E6
                | DiagramFamily::E7
                | DiagramFamily::E8
        )
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(
            self,
            DiagramFamily::ATilde(_)
                | DiagramFamily::DTilde(_)
                | DiagramFamily::E6Tilde
                | DiagramFamily::E7Tilde
                | DiagramFamily::E8Tilde
        )
    }

    pub fn is_infinite(&self) -> bool {
        matches!(
            self,
            DiagramFamily::AInfty | DiagramFamily::DInfty | DiagramFamily::AInftyInfty
        )
    }
}

impl fmt::Display for DiagramFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramFamily::A(n) => write!(f, "A({n})"),
            DiagramFamily::D(n) => write!(f, "D({n})"),
            DiagramFamily::E6 => write!(f, "E6"),
            DiagramFamily::E7 => write!(f, "E7"),
            DiagramFamily::E8 => write!(f, "E8"),
            DiagramFamily::ATilde(n) => write!(f, "Ã({n})"),
            DiagramFamily::DTilde(n) => write!(f, "D̃({n})"),
            DiagramFamily::E6Tilde => write!(f, "Ẽ6"),
            DiagramFamily::E7Tilde => write!(f, "Ẽ7"),
            DiagramFamily::E8Tilde => write!(f, "Ẽ8"),
            DiagramFamily::AInfty => write!(f, "A∞"),
            DiagramFamily::DInfty => write!(f, "D∞"),
            DiagramFamily::AInftyInfty => write!(f, "A∞∞"),
            DiagramFamily::Other => write!(f, "Other"),
        }
    }
}

/// Classification value plus the window qualifier. `boundary_open` is only
/// meaningful when the value was produced from a window; `classify` on a
/// plain finite graph always reports it closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagramType {
    pub family: DiagramFamily,
    pub boundary_open: bool,
}

impl DiagramType {
    pub fn closed(family: DiagramFamily) -> Self {
        DiagramType {
            family,
            boundary_open: false,
        }
    }

    pub fn open(family: DiagramFamily) -> Self {
        DiagramType {
            family,
            boundary_open: true,
        }
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boundary_open {
            write!(f, "{} (open at window boundary)", self.family)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

/// Exact catalog match. Disconnected input, loops, and anything outside the
/// catalog classify as `Other`. Only finite tags are produced here; the
/// infinite tags are reserved for window-aware callers.
pub fn classify(g: &UndirectedGraph) -> DiagramType {
    DiagramType::closed(classify_family(g))
}

fn classify_family(g: &UndirectedGraph) -> DiagramFamily {
    let n = g.vertex_count();
    if n == 0 {
        return DiagramFamily::Other;
    }
    if g.has_loop() || !g.is_connected() {
        return DiagramFamily::Other;
    }
    let max_mult = g.edges.values().copied().max().unwrap_or(0);
    if max_mult >= 2 {
        // the Kronecker shape: two vertices joined by a double edge
        if n == 2 && g.edges.len() == 1 && max_mult == 2 {
            return DiagramFamily::ATilde(1);
        }
        return DiagramFamily::Other;
    }
    let edge_count = g.edge_count_with_multiplicity() as usize;
    let degrees: Vec<u32> = (0..n).map(|i| g.degree(i)).collect();
    if n == 1 {
        return DiagramFamily::A(1);
    }
    if edge_count == n && degrees.iter().all(|&d| d == 2) {
        // simple cycle on n vertices
        return DiagramFamily::ATilde(n as u32 - 1);
    }
    if edge_count != n - 1 {
        return DiagramFamily::Other;
    }
    // a tree from here on
    let deg3: Vec<usize> = (0..n).filter(|&i| degrees[i] == 3).collect();
    let deg4: Vec<usize> = (0..n).filter(|&i| degrees[i] >= 4).collect();
    if deg4.len() == 1 && deg3.is_empty() {
        if degrees[deg4[0]] == 4 && n == 5 {
            return DiagramFamily::DTilde(4);
        }
        return DiagramFamily::Other;
    }
    if !deg4.is_empty() {
        return DiagramFamily::Other;
    }
    match deg3.len() {
        0 => DiagramFamily::A(n as u32),
        1 => {
            let mut legs = leg_lengths(g, deg3[0]);
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, c] => DiagramFamily::D(*c as u32 + 3),
                [1, 2, 2] => DiagramFamily::E6,
                [1, 2, 3] => DiagramFamily::E7,
                [1, 2, 4] => DiagramFamily::E8,
                [2, 2, 2] => DiagramFamily::E6Tilde,
                [1, 3, 3] => DiagramFamily::E7Tilde,
                [1, 2, 5] => DiagramFamily::E8Tilde,
                _ => DiagramFamily::Other,
            }
        }
        2 => {
            // two branch vertices, each with two pendant leaves: D̃(n)
            let (u, v) = (deg3[0], deg3[1]);
            let leaves_ok =
                |b: usize| g.neighbours(b).iter().filter(|&&w| degrees[w] == 1).count() == 2;
            if leaves_ok(u) && leaves_ok(v) {
                DiagramFamily::DTilde(n as u32 - 1)
            } else {
                DiagramFamily::Other
            }
        }
        _ => DiagramFamily::Other,
    }
}

/// Path lengths (in edges) of the branches hanging off `center` in a tree.
fn leg_lengths(g: &UndirectedGraph, center: usize) -> Vec<usize> {
    let mut legs = Vec::new();
    for start in g.neighbours(center) {
        let mut len = 1;
        let mut prev = center;
        let mut cur = start;
        loop {
            let next: Vec<usize> = g
                .neighbours(cur)
                .into_iter()
                .filter(|&w| w != prev)
                .collect();
            match next.as_slice() {
                [w] => {
                    prev = cur;
                    cur = *w;
                    len += 1;
                }
                [] => break,
                _ => break, // another branch vertex; caller rejects via degree census
            }
        }
        legs.push(len);
    }
    legs
}

/// Answer plus embedded witness for "contains a Euclidean diagram".
#[derive(Debug, Clone)]
pub struct EuclideanWitness {
    pub family: DiagramFamily,
    pub subgraph: UndirectedGraph,
}

/// A loop-free graph contains a Euclidean diagram iff some connected
/// component is not Dynkin. The witness is found constructively.
pub fn contains_euclidean(g: &UndirectedGraph) -> Result<Option<EuclideanWitness>> {
    if g.has_loop() {
        return Err(Error::LoopPresent);
    }
    for comp in g.connected_components() {
        if classify(&comp).family.is_dynkin() {
            continue;
        }
        return Ok(Some(find_witness(&comp)));
    }
    Ok(None)
}

fn find_witness(g: &UndirectedGraph) -> EuclideanWitness {
    // double edge -> Ã(1)
    for (&(a, b), &m) in &g.edges {
        if a != b && m >= 2 {
            let mut w = UndirectedGraph::new();
            w.add_edge_mult(&g.vertices[a], &g.vertices[b], 2);
            return EuclideanWitness {
                family: DiagramFamily::ATilde(1),
                subgraph: w,
            };
        }
    }
    // cycle -> Ã(len-1)
    if let Some(cycle) = shortest_cycle(g) {
        let mut w = UndirectedGraph::new();
        for k in 0..cycle.len() {
            w.add_edge(
                &g.vertices[cycle[k]],
                &g.vertices[cycle[(k + 1) % cycle.len()]],
            );
        }
        return EuclideanWitness {
            family: DiagramFamily::ATilde(cycle.len() as u32 - 1),
            subgraph: w,
        };
    }
    // tree cases
    let n = g.vertex_count();
    let degrees: Vec<u32> = (0..n).map(|i| g.degree(i)).collect();
    if let Some(c) = (0..n).find(|&i| degrees[i] >= 4) {
        let mut w = UndirectedGraph::new();
        for b in g.neighbours(c).into_iter().take(4) {
            w.add_edge(&g.vertices[c], &g.vertices[b]);
        }
        return EuclideanWitness {
            family: DiagramFamily::DTilde(4),
            subgraph: w,
        };
    }
    let branch: Vec<usize> = (0..n).filter(|&i| degrees[i] == 3).collect();
    if branch.len() >= 2 {
        // D̃: the path between two branch vertices plus two legs at each end
        let (u, v) = (branch[0], branch[1]);
        let path = tree_path(g, u, v);
        let mut w = UndirectedGraph::new();
        for win in path.windows(2) {
            w.add_edge(&g.vertices[win[0]], &g.vertices[win[1]]);
        }
        for (end, inner) in [(u, path[1]), (v, path[path.len() - 2])] {
            for b in g
                .neighbours(end)
                .into_iter()
                .filter(|&b| b != inner)
                .take(2)
            {
                w.add_edge(&g.vertices[end], &g.vertices[b]);
            }
        }
        let size = w.vertex_count() as u32;
        return EuclideanWitness {
            family: DiagramFamily::DTilde(size - 1),
            subgraph: w,
        };
    }
    // single branch vertex with legs too long for Dynkin
    let c = branch[0];
    let mut legs: Vec<Vec<usize>> = leg_paths(g, c);
    legs.sort_by_key(|l| l.len());
    let take = |legs: &[Vec<usize>], sizes: [usize; 3]| {
        let mut w = UndirectedGraph::new();
        for (leg, &s) in legs.iter().zip(sizes.iter()) {
            let mut prev = c;
            for &v in leg.iter().take(s) {
                w.add_edge(&g.vertices[prev], &g.vertices[v]);
                prev = v;
            }
        }
        w
    };
    let l: Vec<usize> = legs.iter().map(|p| p.len()).collect();
    let (family, sizes) = if l[0] >= 2 && l[1] >= 2 && l[2] >= 2 {
        (DiagramFamily::E6Tilde, [2, 2, 2])
    } else if l[1] >= 3 && l[2] >= 3 {
        (DiagramFamily::E7Tilde, [1, 3, 3])
    } else {
        (DiagramFamily::E8Tilde, [1, 2, 5])
    };
    EuclideanWitness {
        family,
        subgraph: take(&legs, sizes),
    }
}

fn shortest_cycle(g: &UndirectedGraph) -> Option<Vec<usize>> {
    // BFS from each vertex; fine at the scales handled here.
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbours(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    // found a cycle through v-w
                    let mut pv = vec![v];
                    let mut pw = vec![w];
                    let (mut a, mut b) = (v, w);
                    while depth[a] > depth[b] {
                        a = parent[a];
                        pv.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        pw.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        pv.push(a);
                        pw.push(b);
                    }
                    pw.pop();
                    pw.reverse();
                    pv.extend(pw);
                    if best.as_ref().is_none_or(|c| pv.len() < c.len()) {
                        best = Some(pv);
                    }
                }
            }
        }
    }
    best
}

fn tree_path(g: &UndirectedGraph, from: usize, to: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn leg_paths(g: &UndirectedGraph, center: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for start in g.neighbours(center) {
        let mut path = vec![start];
        let mut prev = center;
        let mut cur = start;
        loop {
            let next: Vec<usize> = g
                .neighbours(cur)
                .into_iter()
                .filter(|&w| w != prev)
                .collect();
            match next.as_slice() {
                [w] => {
                    prev = cur;
                    cur = *w;
                    path.push(cur);
                }
                _ => break,
            }
        }
        out.push(path);
    }
    out
}

/// Cartan matrix of a graph: 2 on the diagonal, minus the edge multiplicity
/// off it. Indexed by the graph's vertex order.
pub fn cartan(g: &UndirectedGraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = IntMatrix::zero(n, n);
    for i in 0..n {
        m.set(
            i,
            i,
            BigInt::from(2) - BigInt::from(2 * g.multiplicity(i, i)),
        );
        for j in 0..n {
            if i != j {
                m.set(i, j, -BigInt::from(g.multiplicity(i, j)));
            }
        }
    }
    m
}

#[derive(Debug, Clone)]
pub struct SubadditivityReport {
    /// Per-vertex slack sum_x c_xy n_x, in vertex order.
    pub slacks: Vec<BigRational>,
    pub subadditive: bool,
    pub additive: bool,
}

/// Evaluate a candidate function against the Cartan matrix.
pub fn check_subadditive(
    g: &UndirectedGraph,
    values: &[BigRational],
) -> Result<SubadditivityReport> {
    let n = g.vertex_count();
    if values.len() != n {
        return Err(Error::Dimension(format!(
            "{} values for {} vertices",
            values.len(),
            n
        )));
    }
    let c = cartan(g);
    let mut slacks = Vec::with_capacity(n);
    for y in 0..n {
        let mut s = BigRational::zero();
        for x in 0..n {
            s += BigRational::from(c.get(x, y).clone()) * &values[x];
        }
        slacks.push(s);
    }
    let subadditive = slacks.iter().all(|s| !s.is_negative());
    let additive = slacks.iter().all(|s| s.is_zero());
    Ok(SubadditivityReport {
        slacks,
        subadditive,
        additive,
    })
}

pub fn check_subadditive_ints(g: &UndirectedGraph, values: &[i64]) -> Result<SubadditivityReport> {
    let v: Vec<BigRational> = values
        .iter()
        .map(|&x| BigRational::from(BigInt::from(x)))
        .collect();
    check_subadditive(g, &v)
}

/// Verdict of the additive-function criterion on a finite connected graph.
#[derive(Debug, Clone)]
pub enum AdditiveDynkinVerdict {
    /// The graph is Dynkin; a positive subadditive function that is not
    /// additive is attached as the certificate.
    ExistsSubadditiveNonAdditive { example: Vec<BigRational> },
    /// The graph is Euclidean; the positive additive radical generator
    /// certifies that no subadditive function can fail to be additive
    /// while staying positive.
    NoneEuclideanRadical { radical: Vec<BigInt> },
    /// The graph strictly contains a Euclidean diagram.
    NoneContainsEuclidean { witness: EuclideanWitness },
}

pub fn additive_dynkin_verdict(g: &UndirectedGraph) -> Result<AdditiveDynkinVerdict> {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(Error::Disconnected);
    }
    let ty = classify(g);
    if ty.family.is_dynkin() {
        // x = C^{-1} * 1 is positive with slack vector exactly 1 everywhere.
        let c = cartan(g).to_rational();
        let inv = c.inverse()?;
        let n = g.vertex_count();
        let mut example = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = BigRational::zero();
            for j in 0..n {
                s += inv.get(i, j).clone();
            }
            example.push(s);
        }
        return Ok(AdditiveDynkinVerdict::ExistsSubadditiveNonAdditive { example });
    }
    if ty.family.is_euclidean() {
        let ns = cartan(g).to_rational().null_space();
        let radical = primitive_integer_vector(&ns[0]);
        return Ok(AdditiveDynkinVerdict::NoneEuclideanRadical { radical });
    }
    let witness =
        contains_euclidean(g)?.expect("non-Dynkin connected graph contains a Euclidean diagram");
    Ok(AdditiveDynkinVerdict::NoneContainsEuclidean { witness })
}

/// Programmatic catalog templates, used by tests and the acceptance suite.
pub fn template(family: DiagramFamily) -> Option<UndirectedGraph> {
    let mut g = UndirectedGraph::new();
    let chain = |g: &mut UndirectedGraph, ids: &[String]| {
        for w in ids.windows(2) {
            g.add_edge(&w[0], &w[1]);
        }
    };
    let names = |n: usize| -> Vec<String> { (1..=n).map(|i| format!("v{i}")).collect() };
    match family {
        DiagramFamily::A(n) if n >= 1 => {
            let ids = names(n as usize);
            for id in &ids {
                g.add_vertex(id.clone());
            }
            chain(&mut g, &ids);
        }
        DiagramFamily::D(n) if n >= 4 => {
            let ids = names(n as usize - 1);
            for id in &ids {
                g.add_vertex(id.clone());
            }
            chain(&mut g, &ids);
            g.add_edge("fork", &ids[1]);
        }
        DiagramFamily::E6 | DiagramFamily::E7 | DiagramFamily::E8 => {
            let (len, at) = match family {
                DiagramFamily::E6 => (5, 2),
                DiagramFamily::E7 => (6, 3),
                _ => (7, 4),
            };
            let ids = names(len);
            for id in &ids {
                g.add_vertex(id.clone());
            }
            chain(&mut g, &ids);
            g.add_edge("fork", &ids[at]);
        }
        DiagramFamily::ATilde(n) if n >= 1 => {
            if n == 1 {
                g.add_edge_mult("v1", "v2", 2);
            } else {
                let ids = names(n as usize + 1);
                for id in &ids {
                    g.add_vertex(id.clone());
                }
                chain(&mut g, &ids);
                g.add_edge(&ids[0], &ids[n as usize]);
            }
        }
        DiagramFamily::DTilde(n) if n >= 4 => {
            if n == 4 {
                for leaf in ["a", "b", "c", "d"] {
                    g.add_edge("center", leaf);
                }
            } else {
                let ids = names(n as usize - 3);
                for id in &ids {
                    g.add_vertex(id.clone());
                }
                chain(&mut g, &ids);
                g.add_edge("a", &ids[0]);
                g.add_edge("b", &ids[0]);
                g.add_edge("c", &ids[ids.len() - 1]);
                g.add_edge("d", &ids[ids.len() - 1]);
            }
        }
        DiagramFamily::E6Tilde => {
            let ids = names(5);
            for id in &ids {
                g.add_vertex(id.clone());
            }
            chain(&mut g, &ids);
            g.add_edge("f1", &ids[2]);
            g.add_edge("f2", "f1");
        }
        DiagramFamily::E7Tilde => {
            let ids = names(7);
            for id in &ids {
                g.add_vertex(id.clone());
            }
            chain(&mut g, &ids);
            g.add_edge("fork", &ids[3]);
        }
        DiagramFamily::E8Tilde => {
            let ids = names(8);
            for id in &ids {
                g.add_vertex(id.clone());
            }
            chain(&mut g, &ids);
            g.add_edge("fork", &ids[5]);
        }
        _ => return None,
    }
    Some(g)
}

/// All catalog entries with at most `max_vertices` vertices.
pub fn catalog(max_vertices: u32) -> Vec<(DiagramFamily, UndirectedGraph)> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        out.push(DiagramFamily::A(n));
    }
    for n in 4..=max_vertices {
        out.push(DiagramFamily::D(n));
    }
    out.extend([DiagramFamily::E6, DiagramFamily::E7, DiagramFamily::E8]);
    for n in 1..max_vertices {
        out.push(DiagramFamily::ATilde(n));
    }
    for n in 4..max_vertices {
        out.push(DiagramFamily::DTilde(n));
    }
    out.extend([
        DiagramFamily::E6Tilde,
        DiagramFamily::E7Tilde,
        DiagramFamily::E8Tilde,
    ]);
    out.into_iter()
        .filter_map(|f| template(f).map(|g| (f, g)))
        .filter(|(_, g)| g.vertex_count() as u32 <= max_vertices)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_paths_and_cycles() {
        let mut p3 = UndirectedGraph::new();
        p3.add_edge("a", "b");
        p3.add_edge("b", "c");
        assert_eq!(classify(&p3).family, DiagramFamily::A(3));

        let mut c3 = UndirectedGraph::new();
        c3.add_edge("a", "b");
        c3.add_edge("b", "c");
        c3.add_edge("c", "a");
        assert_eq!(classify(&c3).family, DiagramFamily::ATilde(2));

        let mut star4 = UndirectedGraph::new();
        for leaf in ["a", "b", "c", "d"] {
            star4.add_edge("z", leaf);
        }
        assert_eq!(classify(&star4).family, DiagramFamily::DTilde(4));

        // 4-leg star with one leg of length 2: contains D̃(4), classifies Other
        let mut s = star4.clone();
        s.add_edge("d", "e");
        assert_eq!(classify(&s).family, DiagramFamily::Other);
        let w = contains_euclidean(&s).unwrap().unwrap();
        assert_eq!(w.family, DiagramFamily::DTilde(4));
    }

    #[test]
    fn catalog_is_self_consistent() {
        for (family, g) in catalog(12) {
            assert_eq!(classify(&g).family, family, "catalog template for {family}");
        }
    }

    #[test]
    fn classify_is_relabeling_invariant() {
        // permute labels of E8 deterministically
        let g = template(DiagramFamily::E8).unwrap();
        let ids = g.vertex_ids().to_vec();
        let mut renamed = UndirectedGraph::new();
        let rot: BTreeMap<&String, String> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id, format!("w{}", (i * 5 + 3) % ids.len())))
            .collect();
        for id in &ids {
            renamed.add_vertex(rot[id].clone());
        }
        for (&(a, b), &m) in &g.edges {
            renamed.add_edge_mult(&rot[&g.vertices[a]], &rot[&g.vertices[b]], m);
        }
        assert_eq!(classify(&renamed).family, DiagramFamily::E8);
    }

    #[test]
    fn euclidean_witness_for_decorated_e8() {
        // pendant at the long end of E8
        let mut g = template(DiagramFamily::E8).unwrap();
        g.add_edge("v1", "extra");
        let w = contains_euclidean(&g).unwrap().unwrap();
        assert_eq!(w.family, DiagramFamily::E8Tilde);
        assert_eq!(classify(&w.subgraph).family, DiagramFamily::E8Tilde);
    }

    #[test]
    fn dynkin_implies_no_euclidean() {
        for (family, g) in catalog(9) {
            let found = contains_euclidean(&g).unwrap();
            assert_eq!(found.is_none(), family.is_dynkin(), "{family}");
        }
    }

    #[test]
    fn cartan_examples() {
        let a2 = template(DiagramFamily::A(2)).unwrap();
        assert_eq!(
            cartan(&a2),
            IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]])
        );
        let a1 = template(DiagramFamily::A(1)).unwrap();
        assert_eq!(cartan(&a1), IntMatrix::from_rows(&[vec![2]]));
        let kron = template(DiagramFamily::ATilde(1)).unwrap();
        assert_eq!(
            cartan(&kron),
            IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]])
        );
    }

    #[test]
    fn subadditive_examples() {
        let cyc = template(DiagramFamily::ATilde(2)).unwrap();
        let rep = check_subadditive_ints(&cyc, &[1, 1, 1]).unwrap();
        assert!(rep.subadditive && rep.additive);

        let a2 = template(DiagramFamily::A(2)).unwrap();
        let rep = check_subadditive_ints(&a2, &[1, 1]).unwrap();
        assert!(rep.subadditive && !rep.additive);

        // radical generator of D̃(4): 1 on leaves, 2 on the center
        let d4t = template(DiagramFamily::DTilde(4)).unwrap();
        let values: Vec<i64> = d4t
            .vertex_ids()
            .iter()
            .map(|id| if id == "center" { 2 } else { 1 })
            .collect();
        let rep = check_subadditive_ints(&d4t, &values).unwrap();
        assert!(rep.additive);
    }

    #[test]
    fn additive_dynkin_verdicts() {
        let a3 = template(DiagramFamily::A(3)).unwrap();
        match additive_dynkin_verdict(&a3).unwrap() {
            AdditiveDynkinVerdict::ExistsSubadditiveNonAdditive { example } => {
                let rep = check_subadditive(&a3, &example).unwrap();
                assert!(rep.subadditive && !rep.additive);
                assert!(example.iter().all(|x| x.is_positive()));
            }
            other => panic!("expected Dynkin verdict, got {other:?}"),
        }
        let e6t = template(DiagramFamily::E6Tilde).unwrap();
        match additive_dynkin_verdict(&e6t).unwrap() {
            AdditiveDynkinVerdict::NoneEuclideanRadical { radical } => {
                assert!(radical.iter().all(|x| x.is_positive()));
                let vals: Vec<BigRational> = radical
                    .iter()
                    .map(|x| BigRational::from(x.clone()))
                    .collect();
                let rep = check_subadditive(&e6t, &vals).unwrap();
                assert!(rep.additive);
            }
            other => panic!("expected Euclidean verdict, got {other:?}"),
        }
        let mut other = template(DiagramFamily::ATilde(1)).unwrap();
        other.add_edge("v2", "v3");
        match additive_dynkin_verdict(&other).unwrap() {
            AdditiveDynkinVerdict::NoneContainsEuclidean { witness } => {
                assert_eq!(witness.family, DiagramFamily::ATilde(1));
            }
            other => panic!("expected containment verdict, got {other:?}"),
        }
    }
}
