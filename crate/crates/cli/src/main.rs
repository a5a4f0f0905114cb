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

//! `hindrance`: solve, certify and explore webs from the command line.
//!
//! Exit status 0 means success and 2 a computed negative answer, such as a
//! rejected certificate or a linkage that is not wasteful. Exit status 1 is
//! an input or resource error. Errors go to stderr as `error:<code>:<message>`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hindrance::alternating::{check_alternating_trail, SearchBudget};
use hindrance::bipartite::{hindered_set_from_hindrance, matching_to_linkage, verify_hindered_set, BipartiteGraph};
use hindrance::certificate::validate_hindrance;
use hindrance::elimination::{check_trace_invariants, run_elimination, EliminationState, Termination};
use hindrance::format::{
    parse_certificate, parse_input, render_hindered_set, render_hindrance, render_max_linkage, render_web_file,
    InputFile,
};
use hindrance::linkage::LinkedWeb;
use hindrance::oracle::{gen_random_web, Oracle, RandomWeb};
use hindrance::solver::{hinder_from_wasteful, hinder_with_trimmed_sources, maximize};
use hindrance::web::{Digraph, Vertex};

#[derive(Parser)]
#[command(name = "hindrance", version, about = "Linkage and hindrance certificates for webs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum linkage grown from the file's linkage, with a separator of equal size.
    Solve { file: PathBuf },
    /// Hindrance from the file's wasteful linkage (or matching).
    Hinder {
        file: PathBuf,
        /// Set aside this many unused sources before solving.
        #[arg(long, default_value_t = 0)]
        trim_sources: usize,
    },
    /// Run the unpopular-sink elimination to a fixpoint.
    Eliminate {
        file: PathBuf,
        /// Popularity threshold; defaults to the number of unused sources.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 100)]
        max_steps: usize,
        /// Append the structural invariant report.
        #[arg(long)]
        invariants: bool,
    },
    /// Check a certificate against the input file and print `ok`.
    Verify { file: PathBuf, cert: PathBuf },
    /// Brute-force maximum linkage, minimum separator and hindrance.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = hindrance::oracle::DEFAULT_CAP)]
        cap: usize,
    },
    /// Print a seeded random web file.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        sources: usize,
        #[arg(long)]
        sinks: usize,
        /// Let sources and sinks overlap.
        #[arg(long)]
        overlap: bool,
    },
}

struct Failure {
    exit: u8,
    code: String,
    message: String,
}

fn input_error(code: &str, message: impl ToString) -> Failure {
    Failure {
        exit: 1,
        code: code.to_owned(),
        message: message.to_string(),
    }
}

fn negative(code: &str, message: impl ToString) -> Failure {
    Failure {
        exit: 2,
        code: code.to_owned(),
        message: message.to_string(),
    }
}

type Outcome = Result<String, Failure>;

enum Input {
    Web(LinkedWeb),
    Bipartite(BipartiteGraph, LinkedWeb),
}

impl Input {
    fn linked(&self) -> &LinkedWeb {
        match self {
            Input::Web(lw) | Input::Bipartite(_, lw) => lw,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error("Io", format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Input, Failure> {
    let text = read(path)?;
    let parsed = parse_input(&text).map_err(|e| input_error("ParseError", e))?;
    let built = match parsed {
        InputFile::Web(f) => f.linked().map(Input::Web),
        InputFile::Bipartite(f) => f.graph().and_then(|g| {
            let lw = matching_to_linkage(&g, &f.matching)?;
            Ok(Input::Bipartite(g, lw))
        }),
    };
    built.map_err(|e| input_error(e.code(), e))
}

fn solve(file: &PathBuf) -> Outcome {
    let input = load(file)?;
    let m = maximize(input.linked().clone(), &mut ());
    Ok(render_max_linkage(
        m.linkage.web().digraph(),
        m.linkage.paths(),
        &m.separator,
    ))
}

fn hinder(file: &PathBuf, trim: usize) -> Outcome {
    let input = load(file)?;
    let lw = input.linked();
    let result = if trim == 0 {
        hinder_from_wasteful(lw)
    } else {
        hinder_with_trimmed_sources(lw, trim)
    };
    let cert = result.map_err(|e| match e {
        hindrance::solver::SolveError::NotWasteful { .. } => negative(e.code(), &e),
        _ => input_error(e.code(), &e),
    })?;
    let mut out = render_hindrance(lw.web().digraph(), &cert);
    if let Input::Bipartite(g, _) = &input {
        let h = hindered_set_from_hindrance(g, &cert).map_err(|e| input_error(e.code(), &e))?;
        out.push_str(&render_hindered_set(&h));
    }
    Ok(out)
}

fn vertex_list(d: &Digraph, vs: &BTreeSet<Vertex>) -> String {
    d.render_vertices(vs)
}

fn keyed(out: &mut String, key: &str, value: &str) {
    if value.is_empty() {
        let _ = writeln!(out, "{key}");
    } else {
        let _ = writeln!(out, "{key} {value}");
    }
}

fn render_linkage(lw: &LinkedWeb) -> String {
    let d = lw.web().digraph();
    lw.paths().iter().map(|p| p.render(d)).collect::<Vec<_>>().join(" ; ")
}

fn render_state(out: &mut String, original: &Digraph, st: &EliminationState) {
    let lw = &st.linked;
    let d = lw.web().digraph();
    let deleted: Vec<String> = original
        .edges()
        .filter(|&(u, v)| !d.has_edge(u, v))
        .map(|(u, v)| format!("{}->{}", d.name(u), d.name(v)))
        .collect();
    let _ = writeln!(out, "step {}", st.step);
    keyed(out, "sinks", &vertex_list(d, lw.web().sinks()));
    keyed(out, "deleted-edges", &deleted.join(" "));
    keyed(out, "linkage", &render_linkage(lw));
    keyed(out, "popular", &vertex_list(d, &st.popular));
    keyed(out, "unpopular", &vertex_list(d, &st.unpopular));
    match &st.wn {
        Some(w) => keyed(out, "wn", &vertex_list(d, w)),
        None => keyed(out, "wn", "?"),
    }
}

fn eliminate(file: &PathBuf, k: Option<usize>, max_steps: usize, invariants: bool) -> Outcome {
    let input = load(file)?;
    let lw = input.linked().clone();
    let budget = SearchBudget::default();
    let trace =
        run_elimination(lw.clone(), k, max_steps, budget).map_err(|e| input_error("SearchBudgetExceeded", e))?;
    let original = lw.web().digraph();
    let mut out = String::new();
    let _ = writeln!(out, "k {}", trace.k);
    for st in &trace.states {
        render_state(&mut out, original, st);
    }
    let termination = match trace.termination {
        Termination::Fixpoint => "fixpoint".to_owned(),
        Termination::StepCap => "step-cap".to_owned(),
        Termination::CycleDetected { period } => format!("cycle-detected {period}"),
    };
    let _ = writeln!(out, "limit {termination}");
    if let Some(lim) = &trace.limit {
        keyed(&mut out, "sinks", &vertex_list(lim.web().digraph(), lim.web().sinks()));
        keyed(&mut out, "linkage", &render_linkage(lim));
    }
    if invariants {
        let report = check_trace_invariants(&trace, lw.web(), budget);
        out.push_str(&report.to_string());
        if !report.passed() {
            print!("{out}");
            return Err(negative("InvariantFailed", "see report"));
        }
    }
    Ok(out)
}

fn verify(file: &PathBuf, cert_path: &PathBuf) -> Outcome {
    let input = load(file)?;
    let lw = input.linked();
    let web = lw.web();
    let d = web.digraph();
    let text = read(cert_path)?;
    let cert = parse_certificate(&text).map_err(|e| input_error("ParseError", e))?;
    let parse = |e: hindrance::format::ParseError| input_error("ParseError", e);
    let mut checked = false;
    if !cert.paths.is_empty() || (cert.separator.is_some() && cert.hpaths.is_empty() && cert.hindered.is_none()) {
        // maximum linkage: disjoint AB-paths and an AB-separator of the same size
        let paths = cert.linkage_paths(d).map_err(parse)?;
        let linkage = LinkedWeb::new(web.clone(), paths).map_err(|e| negative(e.code(), &e))?;
        let sep = cert.hindrance(d).map_err(parse)?.separator;
        if !d.separates(web.sources(), web.sinks(), &sep) {
            return Err(negative("NotSeparator", "separator misses an AB-path"));
        }
        if sep.len() != linkage.paths().len() {
            return Err(negative(
                "SizeMismatch",
                format!("{} paths but separator of size {}", linkage.paths().len(), sep.len()),
            ));
        }
        checked = true;
    } else if cert.separator.is_some() {
        let h = cert.hindrance(d).map_err(parse)?;
        validate_hindrance(web, &h).map_err(|e| negative(e.code(), &e))?;
        checked = true;
    }
    if let Some(h) = cert.hindered_set() {
        let Input::Bipartite(g, _) = &input else {
            return Err(input_error("NotBipartite", "hindered sets need a bipartite input"));
        };
        if !verify_hindered_set(g, &h) {
            return Err(negative("NotHindered", "the set is not hindered by the given matching"));
        }
        checked = true;
    }
    for t in cert.trail_list(d).map_err(parse)? {
        check_alternating_trail(lw, &t).map_err(|v| {
            negative(
                "NotAlternating",
                format!(
                    "{} violates property {} at {}",
                    t.render(d),
                    v.property as u8,
                    v.position
                ),
            )
        })?;
        checked = true;
    }
    if !checked {
        return Err(input_error("EmptyCertificate", "nothing to verify"));
    }
    Ok("ok\n".to_owned())
}

fn oracle(file: &PathBuf, cap: usize) -> Outcome {
    let input = load(file)?;
    let web = input.linked().web();
    let d = web.digraph();
    let o = Oracle::with_cap(cap);
    let cap_err = |e: hindrance::oracle::CapExceeded| input_error("CapExceeded", e);
    let (size, witness) = o.max_linkage(web).map_err(cap_err)?;
    let (sep_size, sep) = o.min_separator(web).map_err(cap_err)?;
    let mut out = format!("max-linkage {size}\n");
    out.push_str(&render_max_linkage(d, &witness, &sep));
    let _ = writeln!(out, "min-separator {sep_size}");
    match o.find_hindrance(web).map_err(cap_err)? {
        Some(cert) => {
            out.push_str("hindrance\n");
            for l in render_hindrance(d, &cert).lines() {
                let _ = writeln!(out, "  {l}");
            }
        }
        None => out.push_str("no-hindrance\n"),
    }
    Ok(out)
}

fn generate(params: RandomWeb) -> Outcome {
    let web = gen_random_web(params).map_err(|e| input_error("GenError", e))?;
    Ok(render_web_file(&web, &[]))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Solve { file } => solve(&file),
        Command::Hinder { file, trim_sources } => hinder(&file, trim_sources),
        Command::Eliminate {
            file,
            k,
            max_steps,
            invariants,
        } => eliminate(&file, k, max_steps, invariants),
        Command::Verify { file, cert } => verify(&file, &cert),
        Command::Oracle { file, cap } => oracle(&file, cap),
        Command::Gen {
            seed,
            n,
            p,
            sources,
            sinks,
            overlap,
        } => generate(RandomWeb {
            seed,
            vertices: n,
            edge_prob: p,
            sources,
            sinks,
            overlap,
        }),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error:{}:{}", f.code, f.message);
            ExitCode::from(f.exit)
        }
    }
}
