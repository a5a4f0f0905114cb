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

//! Drivers: maximum linkages with a matching separator, and hindrances from
//! wasteful linkages.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::augment::augment_once_with_trail;
use crate::certificate::{validate_hindrance, HindranceCertificate};
use crate::extract::{extract_hindrance, initial_segments, ExtractError};
use crate::linkage::LinkedWeb;
use crate::path::{Path, Trail};
use crate::web::{Vertex, Web};

/// Hooks into the solver loops; every method defaults to doing nothing.
pub trait SolveObserver {
    fn augmented(&mut self, _before: &LinkedWeb, _trail: &Trail, _after: &LinkedWeb) {}
    fn extracted(&mut self, _lw: &LinkedWeb, _cert: &HindranceCertificate) {}
}

impl SolveObserver for () {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("linkage is not wasteful: |Â| = {a_hat}, |B̂| = {b_hat}")]
    NotWasteful { a_hat: usize, b_hat: usize },
    #[error("cannot trim {requested} sources: at most {allowed} keep the linkage wasteful")]
    TrimTooLarge { requested: usize, allowed: usize },
    #[error(transparent)]
    Extract(#[from] ExtractError),
}

impl SolveError {
    pub fn code(&self) -> &'static str {
        match self {
            SolveError::NotWasteful { .. } => "NotWasteful",
            SolveError::TrimTooLarge { .. } => "TrimTooLarge",
            SolveError::Extract(_) => "ExtractFailed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxLinkage {
    pub linkage: LinkedWeb,
    pub separator: BTreeSet<Vertex>,
}

/// A maximum partial linkage together with an `AB`-separator of equal size.
pub fn max_linkage(web: &Web) -> MaxLinkage {
    let empty = LinkedWeb::new(web.clone(), Vec::new()).expect("empty linkage is valid");
    maximize(empty, &mut ())
}

/// Augments `lw` until no augmenting trail remains.
pub fn maximize(mut lw: LinkedWeb, observer: &mut impl SolveObserver) -> MaxLinkage {
    while let Some((trail, next)) = augment_once_with_trail(&lw) {
        observer.augmented(&lw, &trail, &next);
        lw = next;
    }
    let separator = if lw.a_hat().is_empty() {
        // every source is linked; ter(P) is preferred when it separates,
        // otherwise the v_P construction (here: in(P) = A) applies
        let ter = lw.terminals();
        if lw.web().digraph().separates(lw.web().sources(), lw.web().sinks(), &ter) {
            ter
        } else {
            initial_segments(&lw).separator
        }
    } else {
        let cert = extract_hindrance(&lw).expect("no augmenting trail is left");
        observer.extracted(&lw, &cert);
        cert.separator
    };
    debug_assert_eq!(separator.len(), lw.paths().len());
    MaxLinkage { linkage: lw, separator }
}

/// A hindrance for the web of a wasteful linkage.
pub fn hinder_from_wasteful(lw: &LinkedWeb) -> Result<HindranceCertificate, SolveError> {
    hinder_from_wasteful_observed(lw, &mut ())
}

/// Induction on `|B̂|`: with `B̂ = ∅` the linkage itself is a hindrance onto
/// `ter(P) = B`; otherwise augment (both deficiencies drop by one) or, when no
/// augmenting trail exists, extract the `v_P` hindrance.
pub fn hinder_from_wasteful_observed(
    lw: &LinkedWeb,
    observer: &mut impl SolveObserver,
) -> Result<HindranceCertificate, SolveError> {
    let not_wasteful = |lw: &LinkedWeb| SolveError::NotWasteful {
        a_hat: lw.a_hat().len(),
        b_hat: lw.b_hat().len(),
    };
    if !lw.is_wasteful() {
        return Err(not_wasteful(lw));
    }
    let mut current = lw.clone();
    loop {
        if current.b_hat().is_empty() {
            return Ok(HindranceCertificate {
                separator: current.terminals(),
                paths: current.paths().to_vec(),
            });
        }
        match augment_once_with_trail(&current) {
            Some((trail, next)) => {
                observer.augmented(&current, &trail, &next);
                if !next.is_wasteful() {
                    return Err(not_wasteful(&next));
                }
                current = next;
            }
            None => {
                let cert = extract_hindrance(&current)?;
                observer.extracted(&current, &cert);
                return Ok(cert);
            }
        }
    }
}

/// Deletes the last `trim` unused sources, solves the smaller web and adds
/// the deleted sources back as trivial hindrance paths.
pub fn hinder_with_trimmed_sources(lw: &LinkedWeb, trim: usize) -> Result<HindranceCertificate, SolveError> {
    let a_hat = lw.a_hat().len();
    let b_hat = lw.b_hat().len();
    if a_hat <= b_hat {
        return Err(SolveError::NotWasteful { a_hat, b_hat });
    }
    let allowed = a_hat - b_hat - 1;
    if trim > allowed {
        return Err(SolveError::TrimTooLarge {
            requested: trim,
            allowed,
        });
    }
    let removed: BTreeSet<Vertex> = lw.a_hat().iter().rev().take(trim).copied().collect();
    let web = lw.web();
    let sources: BTreeSet<Vertex> = web.sources().difference(&removed).copied().collect();
    let smaller = Web::new(
        web.digraph().without_incident_edges(&removed),
        sources,
        web.sinks().difference(&removed).copied().collect(),
    )
    .expect("deleting sources keeps the web valid");
    let trimmed = LinkedWeb::new(smaller, lw.paths().to_vec()).expect("linkage avoids unused sources");
    let mut cert = hinder_from_wasteful(&trimmed)?;
    for &r in &removed {
        cert.separator.insert(r);
        cert.paths.push(Path::trivial(r));
    }
    cert.paths.sort();
    debug_assert_eq!(validate_hindrance(web, &cert), Ok(()));
    Ok(cert)
}
