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

//! Trails and paths as vertex sequences.

use std::collections::BTreeSet;

use crate::web::{Digraph, Edge, Vertex};

/// A trail given by its vertex sequence `v0 v1 ... vn`.
///
/// A single vertex is the trivial trail. Non-trivial trails never repeat an
/// edge; that condition is checked by the consumers that care about which
/// edge set the trail lives in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trail(Vec<Vertex>);

impl Trail {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        assert!(!vertices.is_empty(), "a trail has at least one vertex");
        Trail(vertices)
    }

    pub fn trivial(v: Vertex) -> Self {
        Trail(vec![v])
    }

    pub fn from_names(digraph: &Digraph, names: &[&str]) -> Option<Self> {
        if names.is_empty() {
            return None;
        }
        names
            .iter()
            .map(|n| digraph.vertex(n))
            .collect::<Option<Vec<_>>>()
            .map(Trail)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn initial(&self) -> Vertex {
        self.0[0]
    }

    pub fn terminal(&self) -> Vertex {
        *self.0.last().expect("non-empty")
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.0.iter().copied().collect()
    }

    pub fn render(&self, digraph: &Digraph) -> String {
        digraph.render_vertices(&self.0)
    }
}

/// A trail that does not repeat vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        Path(vertices)
    }

    pub fn trivial(v: Vertex) -> Self {
        Path(vec![v])
    }

    pub fn from_names(digraph: &Digraph, names: &[&str]) -> Option<Self> {
        Trail::from_names(digraph, names).map(|t| Path(t.0))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn initial(&self) -> Vertex {
        self.0[0]
    }

    pub fn terminal(&self) -> Vertex {
        *self.0.last().expect("non-empty")
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    /// The initial segment ending at index `end` (inclusive).
    pub fn prefix(&self, end: usize) -> Path {
        Path(self.0[..=end].to_vec())
    }

    pub fn has_repeated_vertex(&self) -> bool {
        let mut seen = BTreeSet::new();
        !self.0.iter().all(|v| seen.insert(*v))
    }

    pub fn render(&self, digraph: &Digraph) -> String {
        digraph.render_vertices(&self.0)
    }
}

impl From<Path> for Trail {
    fn from(p: Path) -> Trail {
        Trail(p.0)
    }
}

/// Why a vertex sequence fails to be an `XY`-path of a digraph.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PathDefect {
    MissingEdge(Vertex, Vertex),
    RepeatedVertex(Vertex),
    BadInitial,
    BadTerminal,
    InteriorInEndSets(Vertex),
    TrivialNotInBoth,
}

/// Checks that `path` is an `XY`-path of `digraph`: trivial and in `X ∩ Y`, or
/// non-trivial with initial vertex in `X`, terminal in `Y`, interior outside
/// `X ∪ Y`.
pub fn check_xy_path(
    digraph: &Digraph,
    path: &Path,
    in_x: impl Fn(Vertex) -> bool,
    in_y: impl Fn(Vertex) -> bool,
) -> Result<(), PathDefect> {
    let vs = path.vertices();
    if path.is_trivial() {
        return if in_x(vs[0]) && in_y(vs[0]) {
            Ok(())
        } else {
            Err(PathDefect::TrivialNotInBoth)
        };
    }
    if let Some((u, v)) = path.edges().find(|&(u, v)| !digraph.has_edge(u, v)) {
        return Err(PathDefect::MissingEdge(u, v));
    }
    let mut seen = BTreeSet::new();
    if let Some(v) = vs.iter().find(|v| !seen.insert(**v)) {
        return Err(PathDefect::RepeatedVertex(*v));
    }
    if !in_x(vs[0]) {
        return Err(PathDefect::BadInitial);
    }
    if !in_y(path.terminal()) {
        return Err(PathDefect::BadTerminal);
    }
    if let Some(v) = vs[1..vs.len() - 1].iter().find(|&&v| in_x(v) || in_y(v)) {
        return Err(PathDefect::InteriorInEndSets(*v));
    }
    Ok(())
}

impl PathDefect {
    pub fn describe(&self, digraph: &Digraph) -> String {
        match *self {
            PathDefect::MissingEdge(u, v) => {
                format!("edge {} -> {} not in digraph", digraph.name(u), digraph.name(v))
            }
            PathDefect::RepeatedVertex(v) => format!("repeats vertex {}", digraph.name(v)),
            PathDefect::BadInitial => "initial vertex not in the start set".into(),
            PathDefect::BadTerminal => "terminal vertex not in the end set".into(),
            PathDefect::InteriorInEndSets(v) => {
                format!("interior vertex {} lies in an end set", digraph.name(v))
            }
            PathDefect::TrivialNotInBoth => "trivial path outside the intersection of the end sets".into(),
        }
    }
}
