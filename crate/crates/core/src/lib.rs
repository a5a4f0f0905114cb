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

//! Certificate-producing algorithms for finite webs.
//!
//! A *web* is a digraph with a set `A` of sources and a set `B` of sinks. A
//! *partial linkage* is a set of disjoint `AB`-paths; it is *wasteful* when it
//! leaves more sources unused than sinks. Every web with a wasteful partial
//! linkage carries a *hindrance*: an `AB`-separator `S` together with disjoint
//! paths linking a proper subset of `A` onto `S`.
//!
//! The crate provides the alternating-trail calculus behind that statement,
//! the linkage augmentation and hindrance extraction it rests on, Menger-style
//! maximum linkages, the bipartite-matching specialisation, a finite
//! simulation of the unpopular-sink elimination process, and brute-force
//! oracles for all of it.

pub mod alternating;
pub mod augment;
pub mod bipartite;
pub mod certificate;
pub mod elimination;
pub mod extract;
pub mod fixtures;
pub mod format;
pub mod linkage;
pub mod oracle;
pub mod path;
pub mod solver;
pub mod web;

pub use alternating::{
    check_alternating_trail, enumerate_alternating_trails, enumerate_augmenting_trails, find_augmenting_trail,
    has_v_joint_family, residual_digraph, strongly_disjoint_subset, SearchBudget, SearchBudgetExceeded,
};
pub use augment::{apply_augmenting_set, augment_once};
pub use bipartite::{
    hindered_set_from_hindrance, matching_to_linkage, orient_bipartite, verify_hindered_set, BipartiteGraph,
    HinderedSet, Matching,
};
pub use certificate::{validate_hindrance, HindranceCertificate, HindranceDefect};
pub use elimination::{
    check_trace_invariants, classify_popularity, elimination_step, run_elimination, EliminationTrace,
};
pub use extract::{extract_hindrance, last_reachable_vertices};
pub use linkage::{deficiency, validate_partial_linkage, LinkedWeb};
pub use oracle::{brute_find_hindrance, brute_max_linkage, brute_min_separator, gen_random_web, RandomWeb};
pub use path::{Path, Trail};
pub use solver::{hinder_from_wasteful, max_linkage, MaxLinkage};
pub use web::{is_separator, normalize_subdivide, validate_web, Digraph, RawDigraph, Vertex, Web};
