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

//! Deficient matchings in bipartite graphs and hindered sets.
//!
//! Orienting every edge from the left side to the right side turns a bipartite
//! graph into a web whose vertex covers are exactly its separators. A matching
//! becomes a linkage of one-edge paths, and a hindrance of that web yields a
//! left set `X` whose neighbourhood is matched into a proper subset of `X`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::certificate::{validate_hindrance, HindranceCertificate};
use crate::linkage::LinkedWeb;
use crate::path::Path;
use crate::web::{validate_web, RawDigraph, Web};

/// Edges are stored as `(left, right)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: BTreeSet<String>,
    right: BTreeSet<String>,
    edges: BTreeSet<(String, String)>,
}

pub type Matching = BTreeSet<(String, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HinderedSet {
    /// Sorted.
    pub x: Vec<String>,
    /// Sorted `(left, right)` pairs matching `N(X)` into `X`.
    pub matching: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("{0} is on both sides")]
    SidesOverlap(String),
    #[error("edge {0} {1} does not go from the left side to the right side")]
    EdgeOutsideSides(String, String),
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

impl BipartiteError {
    pub fn code(&self) -> &'static str {
        match self {
            BipartiteError::SidesOverlap(_) => "SidesOverlap",
            BipartiteError::EdgeOutsideSides(..) => "EdgeOutsideSides",
            BipartiteError::NotAMatching(_) => "NotAMatching",
            BipartiteError::InvalidCertificate(_) => "InvalidCertificate",
        }
    }
}

impl BipartiteGraph {
    pub fn new(
        left: BTreeSet<String>,
        right: BTreeSet<String>,
        edges: BTreeSet<(String, String)>,
    ) -> Result<Self, BipartiteError> {
        if let Some(v) = left.intersection(&right).next() {
            return Err(BipartiteError::SidesOverlap(v.clone()));
        }
        if let Some((a, b)) = edges.iter().find(|(a, b)| !left.contains(a) || !right.contains(b)) {
            return Err(BipartiteError::EdgeOutsideSides(a.clone(), b.clone()));
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn left(&self) -> &BTreeSet<String> {
        &self.left
    }

    pub fn right(&self) -> &BTreeSet<String> {
        &self.right
    }

    pub fn edges(&self) -> &BTreeSet<(String, String)> {
        &self.edges
    }

    pub fn neighbourhood<'a>(&self, xs: impl IntoIterator<Item = &'a String>) -> BTreeSet<String> {
        let xs: BTreeSet<&String> = xs.into_iter().collect();
        self.edges
            .iter()
            .filter(|(a, _)| xs.contains(a))
            .map(|(_, b)| b.clone())
            .collect()
    }

    /// Checks that `m` consists of edges of the graph with distinct endpoints.
    pub fn check_matching(&self, m: &Matching) -> Result<(), BipartiteError> {
        let mut seen = BTreeSet::new();
        for (a, b) in m {
            if !self.edges.contains(&(a.clone(), b.clone())) {
                return Err(BipartiteError::NotAMatching(format!("{a} {b} is not an edge")));
            }
            for v in [a, b] {
                if !seen.insert(v) {
                    return Err(BipartiteError::NotAMatching(format!("{v} is matched twice")));
                }
            }
        }
        Ok(())
    }
}

/// Every edge `{a, b}` becomes `a → b`; sources are the left side and sinks
/// the right side.
pub fn orient_bipartite(g: &BipartiteGraph) -> Web {
    let raw = RawDigraph {
        vertices: g.left.union(&g.right).cloned().collect(),
        edges: g.edges.clone(),
    };
    validate_web(&raw, &g.left, &g.right).expect("an oriented bipartite graph is a web")
}

pub fn matching_to_linkage(g: &BipartiteGraph, m: &Matching) -> Result<LinkedWeb, BipartiteError> {
    g.check_matching(m)?;
    let web = orient_bipartite(g);
    let paths = m
        .iter()
        .map(|(a, b)| Path::from_names(web.digraph(), &[a, b]).expect("matching edge is a web edge"))
        .collect();
    Ok(LinkedWeb::new(web, paths).expect("matching edges are disjoint AB-paths"))
}

/// `X = in(H') ∪ (A \ V(H))` where `H'` are the non-trivial hindrance paths.
pub fn hindered_set_from_hindrance(
    g: &BipartiteGraph,
    cert: &HindranceCertificate,
) -> Result<HinderedSet, BipartiteError> {
    let web = orient_bipartite(g);
    validate_hindrance(&web, cert).map_err(|e| BipartiteError::InvalidCertificate(e.to_string()))?;
    let d = web.digraph();
    let nontrivial: Vec<&Path> = cert.paths.iter().filter(|p| !p.is_trivial()).collect();
    // right vertices have no out-edges, so an AS-path stops after one edge
    assert!(
        nontrivial.iter().all(|p| p.len() == 1),
        "hindrance paths in a bipartite web have one edge"
    );
    let covered = cert.vertices();
    let mut x: BTreeSet<String> = nontrivial.iter().map(|p| d.name(p.initial()).to_owned()).collect();
    x.extend(
        web.sources()
            .iter()
            .filter(|v| !covered.contains(v))
            .map(|&v| d.name(v).to_owned()),
    );
    let matching = nontrivial
        .iter()
        .map(|p| (d.name(p.initial()).to_owned(), d.name(p.terminal()).to_owned()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let h = HinderedSet {
        x: x.into_iter().collect(),
        matching,
    };
    debug_assert!(verify_hindered_set(g, &h));
    Ok(h)
}

/// Checks `X ⊆ A` and that the matching covers exactly `N(X)` with left
/// endpoints forming a proper subset of `X`.
pub fn verify_hindered_set(g: &BipartiteGraph, h: &HinderedSet) -> bool {
    let x: BTreeSet<&String> = h.x.iter().collect();
    if !x.iter().all(|a| g.left.contains(*a)) {
        return false;
    }
    let m: Matching = h.matching.iter().cloned().collect();
    if m.len() != h.matching.len() || g.check_matching(&m).is_err() {
        return false;
    }
    let image: BTreeSet<&String> = m.iter().map(|(a, _)| a).collect();
    let covered: BTreeSet<String> = m.iter().map(|(_, b)| b.clone()).collect();
    covered == g.neighbourhood(x.iter().copied()) && image.is_subset(&x) && image.len() < x.len()
}

/// Every matching that cannot be extended by another edge.
pub fn maximal_matchings(g: &BipartiteGraph) -> Vec<Matching> {
    let edges: Vec<&(String, String)> = g.edges.iter().collect();
    let mut out = Vec::new();
    let mut used: BTreeSet<&String> = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec<'a>(
        edges: &[&'a (String, String)],
        i: usize,
        used: &mut BTreeSet<&'a String>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Matching>,
    ) {
        if i == edges.len() {
            let maximal = edges.iter().all(|(a, b)| used.contains(a) || used.contains(b));
            if maximal {
                out.push(chosen.iter().map(|&j| edges[j].clone()).collect());
            }
            return;
        }
        let (a, b) = edges[i];
        if !used.contains(a) && !used.contains(b) {
            used.insert(a);
            used.insert(b);
            chosen.push(i);
            rec(edges, i + 1, used, chosen, out);
            chosen.pop();
            used.remove(a);
            used.remove(b);
        }
        rec(edges, i + 1, used, chosen, out);
    }
    rec(&edges, 0, &mut used, &mut chosen, &mut out);
    out
}
