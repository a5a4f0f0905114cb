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

//! Hindrance certificates.
//!
//! A hindrance is an `AB`-separator `S` together with disjoint `AS`-paths that
//! link a proper subset of `A` onto `S`. The degenerate certificate `S = ∅`,
//! `H = ∅` is valid exactly when `A` is non-empty and no `AB`-path exists.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::path::{check_xy_path, Path};
use crate::web::{Vertex, Web};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HindranceCertificate {
    pub separator: BTreeSet<Vertex>,
    pub paths: Vec<Path>,
}

impl HindranceCertificate {
    pub fn initials(&self) -> BTreeSet<Vertex> {
        self.paths.iter().map(Path::initial).collect()
    }

    pub fn terminals(&self) -> BTreeSet<Vertex> {
        self.paths.iter().map(Path::terminal).collect()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.paths.iter().flat_map(|p| p.vertices().iter().copied()).collect()
    }
}

/// First clause of the hindrance definition that a certificate fails.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HindranceDefect {
    #[error("{path} is not an AS-path: {reason}")]
    NotAnASPath { path: String, reason: String },
    #[error("paths share vertex {0}")]
    PathsShareVertex(String),
    #[error("terminals of the paths differ from the separator (missing: {missing}; extra: {extra})")]
    TerminalsNotSeparator { missing: String, extra: String },
    #[error("initial vertices cover all of A")]
    NotProperSubset,
    #[error("separator misses the AB-path {0}")]
    NotSeparator(String),
    #[error("vertex index {0} is not in the digraph")]
    UnknownVertex(usize),
}

impl HindranceDefect {
    pub fn code(&self) -> &'static str {
        match self {
            HindranceDefect::NotAnASPath { .. } => "NotAnASPath",
            HindranceDefect::PathsShareVertex(_) => "PathsShareVertex",
            HindranceDefect::TerminalsNotSeparator { .. } => "TerminalsNotSeparator",
            HindranceDefect::NotProperSubset => "NotProperSubset",
            HindranceDefect::NotSeparator(_) => "NotSeparator",
            HindranceDefect::UnknownVertex(_) => "UnknownVertex",
        }
    }
}

pub fn validate_hindrance(web: &Web, cert: &HindranceCertificate) -> Result<(), HindranceDefect> {
    let d = web.digraph();
    let s = &cert.separator;
    // certificates built against another web
    let n = d.vertex_count();
    if let Some(v) = s
        .iter()
        .chain(cert.paths.iter().flat_map(|p| p.vertices()))
        .find(|v| v.index() >= n)
    {
        return Err(HindranceDefect::UnknownVertex(v.index()));
    }
    for p in &cert.paths {
        check_xy_path(d, p, |v| web.is_source(v), |v| s.contains(&v)).map_err(|defect| {
            HindranceDefect::NotAnASPath {
                path: p.render(d),
                reason: defect.describe(d),
            }
        })?;
    }
    let mut seen = BTreeSet::new();
    for v in cert.paths.iter().flat_map(|p| p.vertices()) {
        if !seen.insert(*v) {
            return Err(HindranceDefect::PathsShareVertex(d.name(*v).to_owned()));
        }
    }
    let ter = cert.terminals();
    if &ter != s {
        return Err(HindranceDefect::TerminalsNotSeparator {
            missing: d.render_vertices(s.difference(&ter)),
            extra: d.render_vertices(ter.difference(s)),
        });
    }
    if cert.initials() == *web.sources() {
        return Err(HindranceDefect::NotProperSubset);
    }
    if let Some(p) = d.unseparated_path(web.sources(), web.sinks(), s) {
        return Err(HindranceDefect::NotSeparator(d.render_vertices(&p)));
    }
    Ok(())
}
