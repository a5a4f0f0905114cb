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

//! Partial linkages and partially linked webs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::path::{check_xy_path, Path, PathDefect};
use crate::web::{Vertex, Web};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinkageError {
    #[error("{path} is not an AB-path: {reason}")]
    NotAnABPath { path: String, reason: String },
    #[error("paths share vertex {0}")]
    PathsShareVertex(String),
    #[error("edge {0} -> {1} is not in the digraph")]
    EdgeNotInDigraph(String, String),
}

impl LinkageError {
    pub fn code(&self) -> &'static str {
        match self {
            LinkageError::NotAnABPath { .. } => "NotAnABPath",
            LinkageError::PathsShareVertex(_) => "PathsShareVertex",
            LinkageError::EdgeNotInDigraph(..) => "EdgeNotInDigraph",
        }
    }
}

/// A web together with a set of disjoint `AB`-paths.
///
/// Paths are kept sorted by initial vertex. `Â` and `B̂` (unused sources and
/// sinks) are derived on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedWeb {
    web: Web,
    paths: Vec<Path>,
    location: Vec<Option<(u32, u32)>>,
    a_hat: BTreeSet<Vertex>,
    b_hat: BTreeSet<Vertex>,
}

/// Deficiency sets of a linkage and whether it is wasteful (`|Â| > |B̂|`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deficiency {
    pub a_hat: BTreeSet<Vertex>,
    pub b_hat: BTreeSet<Vertex>,
    pub wasteful: bool,
}

pub fn validate_partial_linkage(web: &Web, paths: Vec<Path>) -> Result<LinkedWeb, LinkageError> {
    LinkedWeb::new(web.clone(), paths)
}

pub fn deficiency(lw: &LinkedWeb) -> Deficiency {
    Deficiency {
        a_hat: lw.a_hat.clone(),
        b_hat: lw.b_hat.clone(),
        wasteful: lw.is_wasteful(),
    }
}

impl LinkedWeb {
    pub fn new(web: Web, mut paths: Vec<Path>) -> Result<LinkedWeb, LinkageError> {
        let d = web.digraph();
        for p in &paths {
            if let Err(defect) = check_xy_path(d, p, |v| web.is_source(v), |v| web.is_sink(v)) {
                return Err(match defect {
                    PathDefect::MissingEdge(u, v) => {
                        LinkageError::EdgeNotInDigraph(d.name(u).to_owned(), d.name(v).to_owned())
                    }
                    other => LinkageError::NotAnABPath {
                        path: p.render(d),
                        reason: other.describe(d),
                    },
                });
            }
        }
        paths.sort();
        let mut location = vec![None; d.vertex_count()];
        for (i, p) in paths.iter().enumerate() {
            for (j, &v) in p.vertices().iter().enumerate() {
                if location[v.index()].is_some() {
                    return Err(LinkageError::PathsShareVertex(d.name(v).to_owned()));
                }
                location[v.index()] = Some((i as u32, j as u32));
            }
        }
        let a_hat = web
            .sources()
            .iter()
            .copied()
            .filter(|a| location[a.index()].is_none())
            .collect();
        let terminals: BTreeSet<Vertex> = paths.iter().map(Path::terminal).collect();
        let b_hat = web.sinks().iter().copied().filter(|b| !terminals.contains(b)).collect();
        Ok(LinkedWeb {
            web,
            paths,
            location,
            a_hat,
            b_hat,
        })
    }

    /// Same web, different linkage.
    pub fn relink(&self, paths: Vec<Path>) -> Result<LinkedWeb, LinkageError> {
        LinkedWeb::new(self.web.clone(), paths)
    }

    pub fn web(&self) -> &Web {
        &self.web
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    pub fn a_hat(&self) -> &BTreeSet<Vertex> {
        &self.a_hat
    }

    pub fn b_hat(&self) -> &BTreeSet<Vertex> {
        &self.b_hat
    }

    pub fn is_wasteful(&self) -> bool {
        self.a_hat.len() > self.b_hat.len()
    }

    pub fn initials(&self) -> BTreeSet<Vertex> {
        self.paths.iter().map(Path::initial).collect()
    }

    pub fn terminals(&self) -> BTreeSet<Vertex> {
        self.paths.iter().map(Path::terminal).collect()
    }

    /// `V(P)`.
    pub fn linked_vertices(&self) -> BTreeSet<Vertex> {
        self.paths.iter().flat_map(|p| p.vertices().iter().copied()).collect()
    }

    /// `(path index, position)` of `v` on the linkage.
    #[inline]
    pub fn location(&self, v: Vertex) -> Option<(usize, usize)> {
        self.location[v.index()].map(|(p, i)| (p as usize, i as usize))
    }

    #[inline]
    pub fn is_linked(&self, v: Vertex) -> bool {
        self.location[v.index()].is_some()
    }

    /// The vertex preceding `v` on its linkage path.
    #[inline]
    pub fn path_predecessor(&self, v: Vertex) -> Option<Vertex> {
        match self.location(v) {
            Some((p, i)) if i > 0 => Some(self.paths[p].vertices()[i - 1]),
            _ => None,
        }
    }

    /// True iff `u -> v` is an edge of some linkage path.
    #[inline]
    pub fn is_path_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.path_predecessor(v) == Some(u)
    }

    pub fn path_edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.paths.iter().flat_map(|p| p.edges()).collect()
    }
}
