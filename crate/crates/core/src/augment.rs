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

//! Growing a linkage along strongly disjoint augmenting trails.
//!
//! The new edge set is the linkage edge set with every reversed trail edge
//! removed and every forward trail edge added. Each vertex then has in- and
//! out-degree at most one, so the new paths are read off by walking forward
//! from the old and new initial vertices. Edges left over after that walk
//! form directed cycles and are dropped.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::alternating::{
    check_alternating_trail, find_augmenting_trail, residual_direction, strongly_disjoint, Direction,
};
use crate::linkage::LinkedWeb;
use crate::path::{Path, Trail};
use crate::web::{Edge, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AugmentError {
    #[error("trail {0} is not an augmenting trail")]
    NotAugmenting(usize),
    #[error("trails {0} and {1} are not strongly disjoint")]
    NotStronglyDisjoint(usize, usize),
    #[error("inconsistent augmentation: {0}")]
    Inconsistent(String),
}

/// `E(P)` with the trails' reversed edges removed and forward edges added.
pub fn rerouted_edges(lw: &LinkedWeb, trails: &[Trail]) -> BTreeSet<Edge> {
    let mut edges = lw.path_edges();
    for t in trails {
        for (u, v) in t.edges() {
            match residual_direction(lw, u, v) {
                Some(Direction::Forward) => {
                    edges.insert((u, v));
                }
                Some(Direction::Reversed) => {
                    edges.remove(&(v, u));
                }
                None => {}
            }
        }
    }
    edges
}

/// Builds the linkage `Q` with `in(Q) = in(P) ∪ in(T)` and
/// `ter(Q) = ter(P) ∪ ter(T)`.
pub fn apply_augmenting_set(lw: &LinkedWeb, trails: &[Trail]) -> Result<Vec<Path>, AugmentError> {
    for (i, t) in trails.iter().enumerate() {
        if !lw.b_hat().contains(&t.terminal()) || check_alternating_trail(lw, t).is_err() {
            return Err(AugmentError::NotAugmenting(i));
        }
    }
    for i in 0..trails.len() {
        for j in i + 1..trails.len() {
            if !strongly_disjoint(lw, &trails[i], &trails[j]) {
                return Err(AugmentError::NotStronglyDisjoint(i, j));
            }
        }
    }
    if trails.is_empty() {
        return Ok(lw.paths().to_vec());
    }
    let d = lw.web().digraph();
    let edges = rerouted_edges(lw, trails);
    let mut next: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for &(u, v) in &edges {
        if next.insert(u, v).is_some() {
            return Err(AugmentError::Inconsistent(format!("{} branches", d.name(u))));
        }
    }
    let mut paths = Vec::with_capacity(lw.paths().len() + trails.len());
    let mut taken = vec![false; d.vertex_count()];
    let starts = lw
        .paths()
        .iter()
        .map(Path::initial)
        .chain(trails.iter().map(Trail::initial));
    for start in starts {
        let mut walk = vec![start];
        let mut cur = start;
        taken[start.index()] = true;
        while let Some(&v) = next.get(&cur) {
            if taken[v.index()] {
                return Err(AugmentError::Inconsistent(format!("{} reached twice", d.name(v))));
            }
            taken[v.index()] = true;
            walk.push(v);
            cur = v;
        }
        paths.push(Path::new(walk));
    }
    let q = lw
        .relink(paths)
        .map_err(|e| AugmentError::Inconsistent(e.to_string()))?;
    let mut want_in = lw.initials();
    want_in.extend(trails.iter().map(Trail::initial));
    let mut want_ter = lw.terminals();
    want_ter.extend(trails.iter().map(Trail::terminal));
    if q.initials() != want_in || q.terminals() != want_ter || q.paths().len() != lw.paths().len() + trails.len() {
        return Err(AugmentError::Inconsistent("endpoints of the new linkage".into()));
    }
    Ok(q.into_paths())
}

/// Augments along one augmenting trail, if there is one.
pub fn augment_once(lw: &LinkedWeb) -> Option<LinkedWeb> {
    augment_once_with_trail(lw).map(|(_, next)| next)
}

/// Like [`augment_once`], also returning the trail used.
pub fn augment_once_with_trail(lw: &LinkedWeb) -> Option<(Trail, LinkedWeb)> {
    let trail = find_augmenting_trail(lw)?;
    let paths =
        apply_augmenting_set(lw, std::slice::from_ref(&trail)).expect("a found augmenting trail always applies");
    let next = lw.relink(paths).expect("augmented linkage is valid");
    Some((trail, next))
}
