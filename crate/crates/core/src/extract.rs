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

//! Hindrances from linkages that cannot be augmented.
//!
//! For each linkage path `P`, `v_P` is the last vertex of `P` at which some
//! alternating trail terminates (`in(P)` if there is none). With no augmenting
//! trail, `{v_P}` separates `A` from `B` and the initial segments of the paths
//! up to `v_P` link `in(P)` onto it.

use thiserror::Error;

use crate::alternating::{find_augmenting_trail, TerminalReach};
use crate::certificate::{validate_hindrance, HindranceCertificate, HindranceDefect};
use crate::linkage::LinkedWeb;
use crate::web::Vertex;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("an augmenting trail exists")]
    HasAugmentingTrail,
    #[error("every source is linked")]
    EmptyADeficiency,
    #[error("extracted certificate is invalid: {0}")]
    Postcondition(HindranceDefect),
}

/// `v_P` for every linkage path, in the order of `lw.paths()`.
pub fn last_reachable_vertices(lw: &LinkedWeb) -> Vec<Vertex> {
    let reach = TerminalReach::new(lw);
    lw.paths()
        .iter()
        .map(|p| {
            p.vertices()
                .iter()
                .rev()
                .find(|&&v| reach.reaches(v))
                .copied()
                .unwrap_or_else(|| p.initial())
        })
        .collect()
}

/// The certificate `S = {v_P}`, `H = {P up to v_P}`, without any checks.
pub(crate) fn initial_segments(lw: &LinkedWeb) -> HindranceCertificate {
    let cut = last_reachable_vertices(lw);
    let paths = lw
        .paths()
        .iter()
        .zip(&cut)
        .map(|(p, &v)| p.prefix(p.position(v).expect("v_P lies on P")))
        .collect();
    HindranceCertificate {
        separator: cut.into_iter().collect(),
        paths,
    }
}

pub fn extract_hindrance(lw: &LinkedWeb) -> Result<HindranceCertificate, ExtractError> {
    if lw.a_hat().is_empty() {
        return Err(ExtractError::EmptyADeficiency);
    }
    if find_augmenting_trail(lw).is_some() {
        return Err(ExtractError::HasAugmentingTrail);
    }
    let cert = initial_segments(lw);
    validate_hindrance(lw.web(), &cert).map_err(ExtractError::Postcondition)?;
    Ok(cert)
}
