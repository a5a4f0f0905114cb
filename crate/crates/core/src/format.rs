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

//! Line-based text formats for webs, bipartite graphs and certificates.
//!
//! Tokens are separated by whitespace and `#` starts a comment. A web file
//! uses `vertex`, `source`, `sink`, `edge` and `path` lines, and a bipartite
//! file `left`, `right`, `bedge` and `match` lines. Declarations may come in
//! any order, except that path lines keep theirs. `source` and `sink` also
//! declare their vertex. Certificates use `separator`, `hpath`, `path`,
//! `trail`, `hindered` and `hmatch` lines.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bipartite::{BipartiteError, BipartiteGraph, HinderedSet, Matching};
use crate::certificate::HindranceCertificate;
use crate::linkage::{LinkageError, LinkedWeb};
use crate::path::{Path, Trail};
use crate::web::{validate_web, Digraph, RawDigraph, Vertex, Violations, Web};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn parse_error<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-empty lines as `(line number, tokens)`.
fn token_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let content = l.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn arity(line: usize, tokens: &[&str], n: usize) -> Result<(), ParseError> {
    if tokens.len() != n + 1 {
        return parse_error(
            line,
            format!("`{}` takes {n} argument(s), got {}", tokens[0], tokens.len() - 1),
        );
    }
    Ok(())
}

fn declare(line: usize, set: &mut BTreeSet<String>, what: &str, id: &str) -> Result<(), ParseError> {
    if !set.insert(id.to_owned()) {
        return parse_error(line, format!("duplicate {what} {id}"));
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WebFile {
    pub digraph: RawDigraph,
    pub sources: BTreeSet<String>,
    pub sinks: BTreeSet<String>,
    pub paths: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteFile {
    pub left: BTreeSet<String>,
    pub right: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
    pub matching: Matching,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputFile {
    Web(WebFile),
    Bipartite(BipartiteFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Web(#[from] Violations),
    #[error(transparent)]
    Linkage(#[from] LinkageError),
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

impl BuildError {
    pub fn code(&self) -> &'static str {
        match self {
            BuildError::Web(v) => v.0.first().map_or("InvalidWeb", |w| w.code()),
            BuildError::Linkage(e) => e.code(),
            BuildError::Bipartite(e) => e.code(),
        }
    }
}

const WEB_KEYWORDS: [&str; 5] = ["vertex", "source", "sink", "edge", "path"];
const BIPARTITE_KEYWORDS: [&str; 4] = ["left", "right", "bedge", "match"];

/// Parses either format, deciding by the first keyword.
pub fn parse_input(text: &str) -> Result<InputFile, ParseError> {
    let first = token_lines(text).next().map(|(_, t)| t[0].to_owned());
    match first.as_deref() {
        Some(k) if BIPARTITE_KEYWORDS.contains(&k) => parse_bipartite_file(text).map(InputFile::Bipartite),
        _ => parse_web_file(text).map(InputFile::Web),
    }
}

pub fn parse_web_file(text: &str) -> Result<WebFile, ParseError> {
    let mut f = WebFile::default();
    let mut declared = BTreeSet::new();
    let mut references: Vec<(usize, String)> = Vec::new();
    for (line, t) in token_lines(text) {
        match t[0] {
            "vertex" => {
                arity(line, &t, 1)?;
                declare(line, &mut declared, "vertex", t[1])?;
            }
            "source" => {
                arity(line, &t, 1)?;
                declare(line, &mut f.sources, "source", t[1])?;
            }
            "sink" => {
                arity(line, &t, 1)?;
                declare(line, &mut f.sinks, "sink", t[1])?;
            }
            "edge" => {
                arity(line, &t, 2)?;
                if !f.digraph.edges.insert((t[1].to_owned(), t[2].to_owned())) {
                    return parse_error(line, format!("duplicate edge {} {}", t[1], t[2]));
                }
                references.extend(t[1..].iter().map(|v| (line, v.to_string())));
            }
            "path" => {
                if t.len() < 2 {
                    return parse_error(line, "`path` needs at least one vertex");
                }
                f.paths.push(t[1..].iter().map(|v| v.to_string()).collect());
                references.extend(t[1..].iter().map(|v| (line, v.to_string())));
            }
            k if BIPARTITE_KEYWORDS.contains(&k) => return parse_error(line, format!("`{k}` in a web file")),
            k => return parse_error(line, format!("unknown keyword `{k}`")),
        }
    }
    declared.extend(f.sources.iter().cloned());
    declared.extend(f.sinks.iter().cloned());
    if let Some((line, v)) = references.iter().find(|(_, v)| !declared.contains(v)) {
        return parse_error(*line, format!("undeclared vertex {v}"));
    }
    f.digraph.vertices = declared;
    Ok(f)
}

impl WebFile {
    pub fn web(&self) -> Result<Web, BuildError> {
        Ok(validate_web(&self.digraph, &self.sources, &self.sinks)?)
    }

    pub fn linked(&self) -> Result<LinkedWeb, BuildError> {
        let web = self.web()?;
        let paths = self
            .paths
            .iter()
            .map(|p| {
                let names: Vec<&str> = p.iter().map(String::as_str).collect();
                Path::from_names(web.digraph(), &names).expect("path vertices are declared")
            })
            .collect();
        Ok(LinkedWeb::new(web, paths)?)
    }
}

pub fn parse_bipartite_file(text: &str) -> Result<BipartiteFile, ParseError> {
    let mut f = BipartiteFile::default();
    for (line, t) in token_lines(text) {
        match t[0] {
            "left" => {
                arity(line, &t, 1)?;
                declare(line, &mut f.left, "left vertex", t[1])?;
            }
            "right" => {
                arity(line, &t, 1)?;
                declare(line, &mut f.right, "right vertex", t[1])?;
            }
            "bedge" | "match" => {
                arity(line, &t, 2)?;
                let e = (t[1].to_owned(), t[2].to_owned());
                let set = if t[0] == "bedge" { &mut f.edges } else { &mut f.matching };
                if !set.insert(e) {
                    return parse_error(line, format!("duplicate {} {} {}", t[0], t[1], t[2]));
                }
            }
            k if WEB_KEYWORDS.contains(&k) => return parse_error(line, format!("`{k}` in a bipartite file")),
            k => return parse_error(line, format!("unknown keyword `{k}`")),
        }
    }
    Ok(f)
}

impl BipartiteFile {
    pub fn graph(&self) -> Result<BipartiteGraph, BuildError> {
        Ok(BipartiteGraph::new(
            self.left.clone(),
            self.right.clone(),
            self.edges.clone(),
        )?)
    }
}

/// The lines of a certificate file, grouped by keyword, with line numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateFile {
    pub separator: Option<(usize, Vec<String>)>,
    pub hpaths: Vec<(usize, Vec<String>)>,
    pub paths: Vec<(usize, Vec<String>)>,
    pub trails: Vec<(usize, Vec<String>)>,
    pub hindered: Option<(usize, Vec<String>)>,
    pub hmatch: Vec<(usize, (String, String))>,
}

pub fn parse_certificate(text: &str) -> Result<CertificateFile, ParseError> {
    let mut c = CertificateFile::default();
    for (line, t) in token_lines(text) {
        let args: Vec<String> = t[1..].iter().map(|s| s.to_string()).collect();
        match t[0] {
            "separator" | "hindered" => {
                let slot = if t[0] == "separator" {
                    &mut c.separator
                } else {
                    &mut c.hindered
                };
                if slot.is_some() {
                    return parse_error(line, format!("second `{}` line", t[0]));
                }
                *slot = Some((line, args));
            }
            "hpath" | "path" | "trail" => {
                if args.is_empty() {
                    return parse_error(line, format!("`{}` needs at least one vertex", t[0]));
                }
                match t[0] {
                    "hpath" => c.hpaths.push((line, args)),
                    "path" => c.paths.push((line, args)),
                    _ => c.trails.push((line, args)),
                }
            }
            "hmatch" => {
                arity(line, &t, 2)?;
                c.hmatch.push((line, (args[0].clone(), args[1].clone())));
            }
            k => return parse_error(line, format!("unknown certificate keyword `{k}`")),
        }
    }
    Ok(c)
}

fn resolve(d: &Digraph, line: usize, names: &[String]) -> Result<Vec<Vertex>, ParseError> {
    names
        .iter()
        .map(|n| {
            d.vertex(n)
                .map_or_else(|| parse_error(line, format!("unknown vertex {n}")), Ok)
        })
        .collect()
}

impl CertificateFile {
    /// The `separator` and `hpath` lines against `d`.
    pub fn hindrance(&self, d: &Digraph) -> Result<HindranceCertificate, ParseError> {
        let Some((line, sep)) = &self.separator else {
            return parse_error(0, "missing `separator` line");
        };
        let separator = resolve(d, *line, sep)?.into_iter().collect();
        let paths = self
            .hpaths
            .iter()
            .map(|(line, p)| resolve(d, *line, p).map(Path::new))
            .collect::<Result<_, _>>()?;
        Ok(HindranceCertificate { separator, paths })
    }

    pub fn linkage_paths(&self, d: &Digraph) -> Result<Vec<Path>, ParseError> {
        self.paths
            .iter()
            .map(|(line, p)| resolve(d, *line, p).map(Path::new))
            .collect()
    }

    pub fn trail_list(&self, d: &Digraph) -> Result<Vec<Trail>, ParseError> {
        self.trails
            .iter()
            .map(|(line, p)| resolve(d, *line, p).map(Trail::new))
            .collect()
    }

    pub fn hindered_set(&self) -> Option<HinderedSet> {
        let (_, x) = self.hindered.as_ref()?;
        Some(HinderedSet {
            x: x.clone(),
            matching: self.hmatch.iter().map(|(_, e)| e.clone()).collect(),
        })
    }
}

fn line(out: &mut String, keyword: &str, tokens: impl IntoIterator<Item = impl AsRef<str>>) {
    out.push_str(keyword);
    for t in tokens {
        out.push(' ');
        out.push_str(t.as_ref());
    }
    out.push('\n');
}

fn names<'a>(d: &'a Digraph, vs: impl IntoIterator<Item = &'a Vertex>) -> Vec<&'a str> {
    vs.into_iter().map(|&v| d.name(v)).collect()
}

pub fn render_hindrance(d: &Digraph, cert: &HindranceCertificate) -> String {
    let mut out = String::new();
    line(&mut out, "separator", names(d, &cert.separator));
    let mut paths = cert.paths.clone();
    paths.sort_by_key(|p| p.render(d));
    for p in &paths {
        line(&mut out, "hpath", names(d, p.vertices()));
    }
    out
}

/// `path` lines followed by the `separator` line.
pub fn render_max_linkage(d: &Digraph, paths: &[Path], separator: &BTreeSet<Vertex>) -> String {
    let mut out = String::new();
    let mut rendered: Vec<&Path> = paths.iter().collect();
    rendered.sort_by_key(|p| p.render(d));
    for p in rendered {
        line(&mut out, "path", names(d, p.vertices()));
    }
    line(&mut out, "separator", names(d, separator));
    out
}

pub fn render_trail(d: &Digraph, t: &Trail) -> String {
    let mut out = String::new();
    line(&mut out, "trail", names(d, t.vertices()));
    out
}

pub fn render_hindered_set(h: &HinderedSet) -> String {
    let mut out = String::new();
    line(&mut out, "hindered", &h.x);
    for (a, b) in &h.matching {
        line(&mut out, "hmatch", [a, b]);
    }
    out
}

/// A web file that parses back to the same web and linkage.
pub fn render_web_file(web: &Web, paths: &[Path]) -> String {
    let d = web.digraph();
    let mut out = String::new();
    for v in d.vertices() {
        let keyword = match (web.is_source(v), web.is_sink(v)) {
            (false, false) => "vertex",
            (true, _) => "source",
            (false, true) => "sink",
        };
        line(&mut out, keyword, [d.name(v)]);
        if web.is_source(v) && web.is_sink(v) {
            line(&mut out, "sink", [d.name(v)]);
        }
    }
    for (u, v) in d.edges() {
        line(&mut out, "edge", [d.name(u), d.name(v)]);
    }
    for p in paths {
        line(&mut out, "path", names(d, p.vertices()));
    }
    out
}

pub fn render_bipartite_file(g: &BipartiteGraph, m: &Matching) -> String {
    let mut out = String::new();
    for a in g.left() {
        let _ = writeln!(out, "left {a}");
    }
    for b in g.right() {
        let _ = writeln!(out, "right {b}");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "bedge {a} {b}");
    }
    for (a, b) in m {
        let _ = writeln!(out, "match {a} {b}");
    }
    out
}
