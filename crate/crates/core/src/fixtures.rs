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

//! Four small hand-built webs used throughout the tests and docs.
//!
//! * `fan`: three sources funnel through a hub `v` into two sinks.
//! * `swap`: the linkage `a1 p1 p2 b1` blocks `a2` until it is rerouted.
//! * `trivial`: `x` is an isolated vertex in both `A` and `B`.
//! * `popular`: two sources, one sink, no linkage.

use std::collections::BTreeSet;

use crate::linkage::LinkedWeb;
use crate::path::Path;
use crate::web::{validate_web, RawDigraph, Web};

pub type WebParts = (RawDigraph, BTreeSet<String>, BTreeSet<String>);

fn names(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn parts(vertices: &[&str], edges: &[(&str, &str)], a: &[&str], b: &[&str]) -> WebParts {
    (
        RawDigraph::with_edges(vertices.iter().copied(), edges.iter().copied()),
        names(a),
        names(b),
    )
}

fn linked(parts: WebParts, paths: &[&[&str]]) -> LinkedWeb {
    let web = validate_web(&parts.0, &parts.1, &parts.2).expect("fixture web is valid");
    let paths = paths
        .iter()
        .map(|p| Path::from_names(web.digraph(), p).expect("fixture vertex"))
        .collect();
    LinkedWeb::new(web, paths).expect("fixture linkage is valid")
}

pub fn f1_parts() -> WebParts {
    parts(
        &["a1", "a2", "a3", "v", "b1", "b2"],
        &[("a1", "v"), ("a2", "v"), ("a3", "v"), ("v", "b1"), ("v", "b2")],
        &["a1", "a2", "a3"],
        &["b1", "b2"],
    )
}

pub fn f2_parts() -> WebParts {
    parts(
        &["a1", "a2", "p1", "p2", "b1", "b2"],
        &[("a1", "p1"), ("p1", "p2"), ("p2", "b1"), ("a2", "p2"), ("p1", "b2")],
        &["a1", "a2"],
        &["b1", "b2"],
    )
}

pub fn f3_parts() -> WebParts {
    parts(&["a", "b", "x"], &[("a", "b")], &["a", "x"], &["b", "x"])
}

pub fn f4_parts() -> WebParts {
    parts(&["a1", "a2", "b"], &[("a1", "b"), ("a2", "b")], &["a1", "a2"], &["b"])
}

/// Fan web with `P1 = {a1 v b1}`.
pub fn f1() -> LinkedWeb {
    linked(f1_parts(), &[&["a1", "v", "b1"]])
}

/// Swap web with `P2 = {a1 p1 p2 b1}`.
pub fn f2() -> LinkedWeb {
    linked(f2_parts(), &[&["a1", "p1", "p2", "b1"]])
}

/// Trivial web with the trivial path `x`.
pub fn f3() -> LinkedWeb {
    linked(f3_parts(), &[&["x"]])
}

/// Popular web with the empty linkage.
pub fn f4() -> LinkedWeb {
    linked(f4_parts(), &[])
}

pub fn f3_web() -> Web {
    f3().web().clone()
}

/// Relinks a fixture by vertex names.
pub fn with_paths(lw: &LinkedWeb, paths: &[&[&str]]) -> LinkedWeb {
    let d = lw.web().digraph();
    lw.relink(
        paths
            .iter()
            .map(|p| Path::from_names(d, p).expect("fixture vertex"))
            .collect(),
    )
    .expect("valid linkage")
}
