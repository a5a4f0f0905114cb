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

//! The elimination recursion on a partially linked web, run to a fixpoint.
//!
//! Each step splits the unused sinks `B̂_n` into popular ones `O_n` (ends of
//! `k` augmenting trails meeting only there) and unpopular ones `U_n`. Then
//! `U_n \ A` leaves the sink set while `N⁻(U_n)` joins it and loses its
//! out-edges. Linkage paths are cut at their first vertex in the new sink set.
//!
//! The step is the identity exactly when `U_n ⊆ A`. Otherwise `|E_n|` drops,
//! or it stays and `|B_n|` drops, so the recursion always reaches a fixpoint.
//! Cycle detection is kept as a safety net and reported if it ever fires.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::alternating::{
    check_alternating_trail, enumerate_alternating_trails, has_v_joint_family, SearchBudget, SearchBudgetExceeded,
};
use crate::linkage::LinkedWeb;
use crate::path::{Path, Trail};
use crate::web::{Edge, Vertex, Web};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationState {
    pub step: usize,
    /// `(D_n, A, B_n, P_n)`.
    pub linked: LinkedWeb,
    /// `O_n`.
    pub popular: BTreeSet<Vertex>,
    /// `U_n`.
    pub unpopular: BTreeSet<Vertex>,
    /// `N⁻_{D_n}(U_n)`.
    pub in_neighbours: BTreeSet<Vertex>,
    /// `W_n = V(P_n) \ V(P_{n+1})`, known once the next state exists.
    pub wn: Option<BTreeSet<Vertex>>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Termination {
    Fixpoint,
    StepCap,
    /// The state repeated with the given period (never 1).
    CycleDetected {
        period: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationTrace {
    /// The popularity threshold actually used.
    pub k: usize,
    pub states: Vec<EliminationState>,
    pub termination: Termination,
    /// `(D_lim, A, B_lim, P_lim)`, present on a fixpoint.
    pub limit: Option<LinkedWeb>,
}

/// Thresholds below one would make every unused sink popular.
pub fn effective_k(lw: &LinkedWeb, k: Option<usize>) -> usize {
    k.unwrap_or(lw.a_hat().len()).max(1)
}

/// Splits `B̂` into popular and unpopular vertices.
pub fn classify_popularity(
    lw: &LinkedWeb,
    k: usize,
    budget: SearchBudget,
) -> Result<(BTreeSet<Vertex>, BTreeSet<Vertex>), SearchBudgetExceeded> {
    let mut popular = BTreeSet::new();
    let mut unpopular = BTreeSet::new();
    for &v in lw.b_hat() {
        if has_v_joint_family(lw, v, k.max(1), budget)?.is_some() {
            popular.insert(v);
        } else {
            unpopular.insert(v);
        }
    }
    Ok((popular, unpopular))
}

fn classified(
    step: usize,
    linked: LinkedWeb,
    k: usize,
    budget: SearchBudget,
) -> Result<EliminationState, SearchBudgetExceeded> {
    let (popular, unpopular) = classify_popularity(&linked, k, budget)?;
    let d = linked.web().digraph();
    let in_neighbours = unpopular
        .iter()
        .flat_map(|&u| d.predecessors(u).iter().copied())
        .collect();
    Ok(EliminationState {
        step,
        linked,
        popular,
        unpopular,
        in_neighbours,
        wn: None,
    })
}

/// The state at the start of the recursion.
pub fn initial_state(lw: LinkedWeb, k: usize, budget: SearchBudget) -> Result<EliminationState, SearchBudgetExceeded> {
    classified(0, lw, k, budget)
}

fn linked_vertices(paths: &[Path]) -> BTreeSet<Vertex> {
    paths.iter().flat_map(|p| p.vertices().iter().copied()).collect()
}

/// Computes state `n + 1` and records `W_n` on `state`.
pub fn elimination_step(
    state: &mut EliminationState,
    k: usize,
    budget: SearchBudget,
) -> Result<EliminationState, SearchBudgetExceeded> {
    let web = state.linked.web();
    let d = web.digraph();
    let n_minus = &state.in_neighbours;
    let mut sinks: BTreeSet<Vertex> = web
        .sinks()
        .iter()
        .copied()
        .filter(|v| !state.unpopular.contains(v) || web.is_source(*v))
        .collect();
    sinks.extend(n_minus.iter().copied());
    assert!(
        d.separates(web.sources(), web.sinks(), &sinks),
        "new sinks separate the old sinks from A"
    );
    let next_web = web
        .with_digraph_and_sinks(d.without_out_edges(n_minus), sinks)
        .expect("deleting out-edges of the new sinks keeps a web");
    let paths: Vec<Path> = state
        .linked
        .paths()
        .iter()
        .map(|p| {
            let cut = p
                .vertices()
                .iter()
                .position(|v| next_web.is_sink(*v))
                .expect("path terminals remain sinks");
            p.prefix(cut)
        })
        .collect();
    state.wn = Some(
        linked_vertices(state.linked.paths())
            .difference(&linked_vertices(&paths))
            .copied()
            .collect(),
    );
    let next = LinkedWeb::new(next_web, paths).expect("truncated paths form a linkage");
    classified(state.step + 1, next, k, budget)
}

type StateKey = (BTreeSet<Vertex>, Vec<Edge>, Vec<Path>);

fn key(lw: &LinkedWeb) -> StateKey {
    (
        lw.web().sinks().clone(),
        lw.web().digraph().edges().collect(),
        lw.paths().to_vec(),
    )
}

/// Iterates [`elimination_step`] until the state repeats or `max_steps`
/// steps have been taken. `k = None` uses `|Â|`.
pub fn run_elimination(
    lw: LinkedWeb,
    k: Option<usize>,
    max_steps: usize,
    budget: SearchBudget,
) -> Result<EliminationTrace, SearchBudgetExceeded> {
    let k = effective_k(&lw, k);
    let mut seen: BTreeMap<StateKey, usize> = BTreeMap::new();
    seen.insert(key(&lw), 0);
    let mut states = vec![initial_state(lw, k, budget)?];
    loop {
        let current = states.last_mut().expect("at least one state");
        if current.step >= max_steps.max(1) {
            return Ok(EliminationTrace {
                k,
                states,
                termination: Termination::StepCap,
                limit: None,
            });
        }
        let next = elimination_step(current, k, budget)?;
        if let Some(&earlier) = seen.get(&key(&next.linked)) {
            let period = states.len() - earlier;
            let (termination, limit) = if period == 1 {
                (Termination::Fixpoint, Some(next.linked))
            } else {
                (Termination::CycleDetected { period }, None)
            };
            return Ok(EliminationTrace {
                k,
                states,
                termination,
                limit,
            });
        }
        seen.insert(key(&next.linked), states.len());
        states.push(next);
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// (a) `Â_n = Â_0`.
    SourceDeficiency,
    /// (b) `B_n` separates `B_0 ∪ … ∪ B_n` from `A` in the original digraph.
    SinksSeparate,
    /// (c) old trails avoiding `W_n ∪ N⁻(U_n)` before their end stay alternating.
    TrailsForward,
    /// (d) new trails meeting `W_n` at most at their end were alternating.
    TrailsBackward,
    /// (e) on a fixpoint, `B_lim` separates `B` from `A` in the original digraph.
    LimitSeparates,
    /// `P_{n+1}` paths are initial segments of `P_n` paths.
    Prefix,
    /// `E_{n+1} ⊆ E_n`.
    EdgesShrink,
    /// `O_n ∪ U_n = B̂_n`, disjointly.
    Classification,
    /// `O_n ⊆ O_{n+1}`; reported only.
    PopularMonotone,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::SourceDeficiency => "a",
            Clause::SinksSeparate => "b",
            Clause::TrailsForward => "c",
            Clause::TrailsBackward => "d",
            Clause::LimitSeparates => "e",
            Clause::Prefix => "prefix",
            Clause::EdgesShrink => "edges",
            Clause::Classification => "classes",
            Clause::PopularMonotone => "popular-monotone",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Trail enumeration ran out of budget.
    Skipped(String),
    /// A violation that the recursion is allowed to show at finite thresholds.
    Advisory(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: Clause,
    pub step: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvariantReport {
    pub results: Vec<ClauseResult>,
}

impl InvariantReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClauseResult> {
        self.results.iter().filter(|r| matches!(r.outcome, Outcome::Fail(_)))
    }

    pub fn skipped(&self) -> impl Iterator<Item = &ClauseResult> {
        self.results.iter().filter(|r| matches!(r.outcome, Outcome::Skipped(_)))
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn outcome(&self, clause: Clause, step: usize) -> Option<&Outcome> {
        self.results
            .iter()
            .find(|r| r.clause == clause && r.step == step)
            .map(|r| &r.outcome)
    }

    fn push(&mut self, clause: Clause, step: usize, outcome: Outcome) {
        self.results.push(ClauseResult { clause, step, outcome });
    }

    fn check(&mut self, clause: Clause, step: usize, ok: bool, why: impl FnOnce() -> String) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail(why()) };
        self.push(clause, step, outcome);
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let (word, detail) = match &r.outcome {
                Outcome::Pass => ("pass", ""),
                Outcome::Fail(s) => ("FAIL", s.as_str()),
                Outcome::Skipped(s) => ("skipped", s.as_str()),
                Outcome::Advisory(s) => ("advisory", s.as_str()),
            };
            write!(f, "invariant {} step {} {}", r.clause.label(), r.step, word)?;
            if !detail.is_empty() {
                write!(f, " {detail}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Trails of `from` satisfying `keep` that are not alternating in `to`.
fn transfer_failures(
    from: &LinkedWeb,
    to: &LinkedWeb,
    keep: impl Fn(&Trail) -> bool,
    budget: SearchBudget,
) -> Result<Vec<Trail>, SearchBudgetExceeded> {
    Ok(enumerate_alternating_trails(from, budget)?
        .into_iter()
        .filter(|t| keep(t) && check_alternating_trail(to, t).is_err())
        .collect())
}

/// Meets `set` only possibly at its terminal.
fn avoids_before_end(t: &Trail, set: &BTreeSet<Vertex>) -> bool {
    let vs = t.vertices();
    let last = vs.len() - 1;
    vs.iter()
        .enumerate()
        .all(|(i, v)| !set.contains(v) || (i == last && vs[..last].iter().all(|w| w != v)))
}

/// Checks every structural clause on every step of `trace`.
pub fn check_trace_invariants(trace: &EliminationTrace, original: &Web, budget: SearchBudget) -> InvariantReport {
    let mut report = InvariantReport::default();
    let d = original.digraph();
    let a = original.sources();
    let Some(first) = trace.states.first() else {
        return report;
    };
    let a_hat0 = first.linked.a_hat();
    let mut earlier_sinks: BTreeSet<Vertex> = BTreeSet::new();
    for (i, st) in trace.states.iter().enumerate() {
        let n = st.step;
        let lw = &st.linked;
        let dn = lw.web().digraph();
        report.check(Clause::SourceDeficiency, n, lw.a_hat() == a_hat0, || {
            format!("Â_n = {{{}}}", dn.render_vertices(lw.a_hat()))
        });
        earlier_sinks.extend(lw.web().sinks().iter().copied());
        let leak = d.unseparated_path(a, &earlier_sinks, lw.web().sinks());
        report.check(Clause::SinksSeparate, n, leak.is_none(), || {
            format!("path {} avoids B_n", d.render_vertices(leak.iter().flatten()))
        });
        let classes_ok = st.popular.is_disjoint(&st.unpopular)
            && st.popular.union(&st.unpopular).copied().collect::<BTreeSet<_>>() == *lw.b_hat();
        report.check(Clause::Classification, n, classes_ok, || {
            "O_n and U_n do not partition B̂_n".into()
        });

        let Some(next) = trace.states.get(i + 1) else {
            continue;
        };
        let next_lw = &next.linked;
        let edges_ok = next_lw.web().digraph().edges().all(|(u, v)| dn.has_edge(u, v));
        report.check(Clause::EdgesShrink, n, edges_ok, || "E_{n+1} has a new edge".into());
        let prefix_ok = next_lw
            .paths()
            .iter()
            .all(|q| lw.paths().iter().any(|p| p.vertices().starts_with(q.vertices())));
        report.check(Clause::Prefix, n, prefix_ok, || {
            "a P_{n+1} path is not an initial segment".into()
        });
        let lost: Vec<&Vertex> = st.popular.iter().filter(|v| !next.popular.contains(v)).collect();
        if lost.is_empty() {
            report.push(Clause::PopularMonotone, n, Outcome::Pass);
        } else {
            report.push(
                Clause::PopularMonotone,
                n,
                Outcome::Advisory(format!(
                    "{{{}}} stopped being popular (expected-possible at finite threshold)",
                    dn.render_vertices(lost)
                )),
            );
        }

        let wn = st.wn.clone().unwrap_or_default();
        let blocked: BTreeSet<Vertex> = wn.union(&st.in_neighbours).copied().collect();
        let forward = transfer_failures(lw, next_lw, |t| avoids_before_end(t, &blocked), budget);
        report.push(Clause::TrailsForward, n, trail_outcome(forward, dn));
        let backward = transfer_failures(next_lw, lw, |t| avoids_before_end(t, &wn), budget);
        report.push(Clause::TrailsBackward, n, trail_outcome(backward, dn));
    }
    if trace.termination == Termination::Fixpoint {
        let last = &trace.states[trace.states.len() - 1];
        let lim = trace.limit.as_ref().unwrap_or(&last.linked);
        let leak = d.unseparated_path(a, original.sinks(), lim.web().sinks());
        report.check(Clause::LimitSeparates, last.step, leak.is_none(), || {
            format!("path {} avoids B_lim", d.render_vertices(leak.iter().flatten()))
        });
    }
    report
}

fn trail_outcome(result: Result<Vec<Trail>, SearchBudgetExceeded>, d: &crate::web::Digraph) -> Outcome {
    match result {
        Ok(bad) if bad.is_empty() => Outcome::Pass,
        Ok(bad) => Outcome::Fail(format!("trail {} does not carry over", bad[0].render(d))),
        Err(e) => Outcome::Skipped(e.to_string()),
    }
}
