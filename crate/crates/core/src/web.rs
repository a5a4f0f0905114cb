// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Digraphs and webs.
//!
//! Vertices are opaque string tokens. A [`Digraph`] stores them sorted, so the
//! numeric [`Vertex`] order used by every algorithm in this crate coincides
//! with the lexicographic order of the tokens.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Index of a vertex inside a [`Digraph`]'s sorted vertex table.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(u32);

impl Vertex {
    pub fn new(index: usize) -> Self {
        Vertex(u32::try_from(index).expect("vertex index overflows u32"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A directed edge `tail -> head`.
pub type Edge = (Vertex, Vertex);

/// Unchecked digraph description by token. Loops and antiparallel pairs are
/// representable here; [`Digraph::from_raw`] rejects them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDigraph {
    pub vertices: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
}

impl RawDigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_edges<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S)>,
    ) -> Self {
        RawDigraph {
            vertices: vertices.into_iter().map(Into::into).collect(),
            edges: edges.into_iter().map(|(u, v)| (u.into(), v.into())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WebViolation {
    #[error("loop edge {0} -> {0}")]
    LoopEdge(String),
    #[error("antiparallel pair {0} -> {1} and {1} -> {0}")]
    AntiparallelPair(String, String),
    #[error("source {vertex} has in-edge from {from}")]
    SourceHasInEdge { vertex: String, from: String },
    #[error("sink {vertex} has out-edge to {to}")]
    SinkHasOutEdge { vertex: String, to: String },
    #[error("edge {tail} -> {head} has undeclared endpoint {missing}")]
    DanglingEndpoint {
        tail: String,
        head: String,
        missing: String,
    },
    #[error("{role} {vertex} is not a declared vertex")]
    UnknownTerminal { role: &'static str, vertex: String },
}

impl WebViolation {
    /// Short machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            WebViolation::LoopEdge(_) => "LoopEdge",
            WebViolation::AntiparallelPair(..) => "AntiparallelPair",
            WebViolation::SourceHasInEdge { .. } => "SourceHasInEdge",
            WebViolation::SinkHasOutEdge { .. } => "SinkHasOutEdge",
            WebViolation::DanglingEndpoint { .. } => "DanglingEndpoint",
            WebViolation::UnknownTerminal { .. } => "UnknownTerminal",
        }
    }
}

/// Non-empty list of violations found by a validator.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct Violations(pub Vec<WebViolation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A finite digraph without loops and without antiparallel pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    names: Arc<[String]>,
    succ: Vec<Vec<Vertex>>,
    pred: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Digraph {
    pub fn from_raw(raw: &RawDigraph) -> Result<Digraph, Violations> {
        let names: Arc<[String]> = raw.vertices.iter().cloned().collect();
        let lookup = |name: &str| names.binary_search_by(|n| n.as_str().cmp(name)).ok();
        let mut violations = Vec::new();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (u, v) in &raw.edges {
            if u == v {
                violations.push(WebViolation::LoopEdge(u.clone()));
                continue;
            }
            match (lookup(u), lookup(v)) {
                (Some(a), Some(b)) => edges.push((Vertex::new(a), Vertex::new(b))),
                (iu, _) => violations.push(WebViolation::DanglingEndpoint {
                    tail: u.clone(),
                    head: v.clone(),
                    missing: if iu.is_none() { u.clone() } else { v.clone() },
                }),
            }
            if u < v && raw.edges.contains(&(v.clone(), u.clone())) {
                violations.push(WebViolation::AntiparallelPair(u.clone(), v.clone()));
            }
        }
        if !violations.is_empty() {
            return Err(Violations(violations));
        }
        Ok(Self::build(names, edges))
    }

    /// Builds a digraph over an already sorted, duplicate-free name table.
    pub fn from_indexed(names: Arc<[String]>, edges: &[Edge]) -> Result<Digraph, Violations> {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]), "names must be sorted");
        let n = names.len();
        let mut violations = Vec::new();
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u.index() >= n || v.index() >= n {
                violations.push(WebViolation::DanglingEndpoint {
                    tail: format!("#{}", u.index()),
                    head: format!("#{}", v.index()),
                    missing: format!("#{}", u.index().max(v.index())),
                });
                continue;
            }
            if u == v {
                violations.push(WebViolation::LoopEdge(names[u.index()].clone()));
            } else if seen.contains(&(v, u)) {
                violations.push(WebViolation::AntiparallelPair(
                    names[v.index()].clone(),
                    names[u.index()].clone(),
                ));
            }
            seen.insert((u, v));
        }
        if !violations.is_empty() {
            return Err(Violations(violations));
        }
        Ok(Self::build(names, seen.into_iter().collect()))
    }

    fn build(names: Arc<[String]>, edges: Vec<Edge>) -> Digraph {
        let n = names.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(u, v) in &edges {
            succ[u.index()].push(v);
            pred[v.index()].push(u);
        }
        for list in succ.iter_mut().chain(pred.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = succ.iter().map(Vec::len).sum();
        Digraph {
            names,
            succ,
            pred,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len()).map(Vertex::new)
    }

    /// Edges in lexicographic `(tail, head)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (Vertex::new(u), v)))
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(Vertex::new)
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[v.index()]
    }

    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.pred[v.index()]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.succ[u.index()].binary_search(&v).is_ok()
    }

    pub fn to_raw(&self) -> RawDigraph {
        RawDigraph {
            vertices: self.names.iter().cloned().collect(),
            edges: self
                .edges()
                .map(|(u, v)| (self.name(u).to_owned(), self.name(v).to_owned()))
                .collect(),
        }
    }

    /// Same vertex table, with every edge leaving a vertex in `tails` removed.
    pub fn without_out_edges(&self, tails: &BTreeSet<Vertex>) -> Digraph {
        let edges: Vec<Edge> = self.edges().filter(|(u, _)| !tails.contains(u)).collect();
        Self::build(self.names.clone(), edges)
    }

    /// Same vertex table, with every edge touching `removed` dropped.
    pub fn without_incident_edges(&self, removed: &BTreeSet<Vertex>) -> Digraph {
        let edges: Vec<Edge> = self
            .edges()
            .filter(|(u, v)| !removed.contains(u) && !removed.contains(v))
            .collect();
        Self::build(self.names.clone(), edges)
    }

    pub fn render_vertices<'a>(&self, vs: impl IntoIterator<Item = &'a Vertex>) -> String {
        let mut out = String::new();
        for (i, v) in vs.into_iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.name(*v));
        }
        out
    }

    /// Returns an `XY`-path avoiding `separator`, if one exists.
    ///
    /// A vertex of `X ∩ Y` outside the separator is returned as a trivial path.
    pub fn unseparated_path(
        &self,
        from: &BTreeSet<Vertex>,
        to: &BTreeSet<Vertex>,
        separator: &BTreeSet<Vertex>,
    ) -> Option<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut parent: Vec<Option<Vertex>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &x in from {
            if !separator.contains(&x) && !seen[x.index()] {
                seen[x.index()] = true;
                queue.push_back(x);
            }
        }
        while let Some(u) = queue.pop_front() {
            if to.contains(&u) {
                let mut walk = vec![u];
                let mut cur = u;
                while let Some(p) = parent[cur.index()] {
                    walk.push(p);
                    cur = p;
                }
                walk.reverse();
                // cut down to a genuine XY-path: last X-vertex before the first Y-vertex
                let first_y = walk.iter().position(|v| to.contains(v)).unwrap_or(walk.len() - 1);
                walk.truncate(first_y + 1);
                let last_x = walk.iter().rposition(|v| from.contains(v)).unwrap_or(0);
                return Some(walk.split_off(last_x));
            }
            for &v in self.successors(u) {
                if !seen[v.index()] && !separator.contains(&v) {
                    seen[v.index()] = true;
                    parent[v.index()] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// True iff `separator` meets every `XY`-path of this digraph.
    pub fn separates(&self, from: &BTreeSet<Vertex>, to: &BTreeSet<Vertex>, separator: &BTreeSet<Vertex>) -> bool {
        self.unseparated_path(from, to, separator).is_none()
    }
}

/// A digraph with a source set `A` (no in-edges) and a sink set `B`
/// (no out-edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Web {
    digraph: Digraph,
    sources: BTreeSet<Vertex>,
    sinks: BTreeSet<Vertex>,
}

impl Web {
    pub fn new(digraph: Digraph, sources: BTreeSet<Vertex>, sinks: BTreeSet<Vertex>) -> Result<Web, Violations> {
        let mut violations = Vec::new();
        let n = digraph.vertex_count();
        for (role, set) in [("source", &sources), ("sink", &sinks)] {
            for v in set.iter().filter(|v| v.index() >= n) {
                violations.push(WebViolation::UnknownTerminal {
                    role,
                    vertex: format!("#{}", v.index()),
                });
            }
        }
        if !violations.is_empty() {
            return Err(Violations(violations));
        }
        for &a in &sources {
            for &u in digraph.predecessors(a) {
                violations.push(WebViolation::SourceHasInEdge {
                    vertex: digraph.name(a).to_owned(),
                    from: digraph.name(u).to_owned(),
                });
            }
        }
        for &b in &sinks {
            for &w in digraph.successors(b) {
                violations.push(WebViolation::SinkHasOutEdge {
                    vertex: digraph.name(b).to_owned(),
                    to: digraph.name(w).to_owned(),
                });
            }
        }
        if !violations.is_empty() {
            return Err(Violations(violations));
        }
        Ok(Web {
            digraph,
            sources,
            sinks,
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn sources(&self) -> &BTreeSet<Vertex> {
        &self.sources
    }

    pub fn sinks(&self) -> &BTreeSet<Vertex> {
        &self.sinks
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.sources.contains(&v)
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.sinks.contains(&v)
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.digraph.vertex(name)
    }

    pub fn name(&self, v: Vertex) -> &str {
        self.digraph.name(v)
    }

    /// Looks up a set of tokens; `None` if any token is unknown.
    pub fn vertex_set<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Option<BTreeSet<Vertex>> {
        names.into_iter().map(|n| self.vertex(n)).collect()
    }

    /// Replaces the digraph and sink set, keeping the sources.
    pub fn with_digraph_and_sinks(&self, digraph: Digraph, sinks: BTreeSet<Vertex>) -> Result<Web, Violations> {
        Web::new(digraph, self.sources.clone(), sinks)
    }
}

/// Validates raw parts into a [`Web`], collecting every violation.
pub fn validate_web(raw: &RawDigraph, sources: &BTreeSet<String>, sinks: &BTreeSet<String>) -> Result<Web, Violations> {
    let mut violations = match Digraph::from_raw(raw) {
        Ok(digraph) => {
            let mut unknown = Vec::new();
            let mut resolve = |role, set: &BTreeSet<String>| -> BTreeSet<Vertex> {
                set.iter()
                    .filter_map(|name| {
                        let v = digraph.vertex(name);
                        if v.is_none() {
                            unknown.push(WebViolation::UnknownTerminal {
                                role,
                                vertex: name.clone(),
                            });
                        }
                        v
                    })
                    .collect()
            };
            let a = resolve("source", sources);
            let b = resolve("sink", sinks);
            if unknown.is_empty() {
                return Web::new(digraph, a, b);
            }
            unknown
        }
        Err(Violations(v)) => v,
    };
    // degree conditions are still worth reporting on a malformed digraph
    for (u, v) in &raw.edges {
        if sources.contains(v) {
            violations.push(WebViolation::SourceHasInEdge {
                vertex: v.clone(),
                from: u.clone(),
            });
        }
        if sinks.contains(u) {
            violations.push(WebViolation::SinkHasOutEdge {
                vertex: u.clone(),
                to: v.clone(),
            });
        }
    }
    Err(Violations(violations))
}

/// Replaces every edge `u -> v` by `u -> m -> v` through a fresh vertex `m`.
///
/// Antiparallel pairs are allowed in the input; loops are not. Fresh vertices
/// are named `u>v`, primed until the name is unused.
pub fn normalize_subdivide(raw: &RawDigraph) -> Result<Digraph, Violations> {
    let loops: Vec<WebViolation> = raw
        .edges
        .iter()
        .filter(|(u, v)| u == v)
        .map(|(u, _)| WebViolation::LoopEdge(u.clone()))
        .collect();
    if !loops.is_empty() {
        return Err(Violations(loops));
    }
    let mut out = RawDigraph {
        vertices: raw.vertices.clone(),
        edges: BTreeSet::new(),
    };
    for (u, v) in &raw.edges {
        let mut mid = format!("{u}>{v}");
        while raw.vertices.contains(&mid) || out.vertices.contains(&mid) {
            mid.push('\'');
        }
        out.vertices.insert(mid.clone());
        out.edges.insert((u.clone(), mid.clone()));
        out.edges.insert((mid, v.clone()));
    }
    Digraph::from_raw(&out)
}

/// Subdivides the digraph of `raw` and carries sources and sinks along.
pub fn subdivide_web(
    raw: &RawDigraph,
    sources: &BTreeSet<String>,
    sinks: &BTreeSet<String>,
) -> Result<Web, Violations> {
    let digraph = normalize_subdivide(raw)?;
    validate_web(&digraph.to_raw(), sources, sinks)
}

/// True iff every `XY`-path of the web's digraph contains a vertex of `S`.
pub fn is_separator(web: &Web, from: &BTreeSet<Vertex>, to: &BTreeSet<Vertex>, separator: &BTreeSet<Vertex>) -> bool {
    web.digraph.separates(from, to, separator)
}
