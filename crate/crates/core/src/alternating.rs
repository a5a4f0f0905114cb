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

//! Alternating and augmenting trails of a partially linked web.
//!
//! The residual digraph `D*` is `D` with every linkage edge reversed. A
//! non-trivial alternating trail is a trail of `D*` that
//!
//! 1. uses only `D*` edges, each at most once,
//! 2. starts in `Â`,
//! 3. repeats only linkage vertices, and never repeats its terminal vertex,
//! 4. after arriving at a linkage vertex by a forward edge, leaves it by the
//!    (unique) reversed edge unless the trail ends there.
//!
//! The trivial alternating trails are the vertices of `Â`. A trail is
//! augmenting when it ends in `B̂`.
//!
//! Existence questions are answered by breadth-first search in the
//! vertex-split residual network, where each vertex `v` has an entry copy
//! (reached by forward edges) and an exit copy (reached by reversed edges).
//! For a linkage vertex the entry copy can only continue backwards along its
//! path, which is exactly property 4. Exhaustive enumeration is available for
//! oracles and for the v-joint family search.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::linkage::LinkedWeb;
use crate::path::Trail;
use crate::web::{Edge, Vertex};

/// Default number of search expansions for exhaustive trail searches.
pub const DEFAULT_EXPANSIONS: usize = 1_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// An edge of `D` that is not on the linkage (`E* ∩ E`).
    Forward,
    /// A linkage edge traversed against its direction (`E* \ E`).
    Reversed,
}

/// Direction of `u -> v` in the residual digraph of `lw`, if it is an edge there.
#[inline]
pub fn residual_direction(lw: &LinkedWeb, u: Vertex, v: Vertex) -> Option<Direction> {
    let d = lw.web().digraph();
    if lw.is_path_edge(v, u) {
        Some(Direction::Reversed)
    } else if d.has_edge(u, v) && !lw.is_path_edge(u, v) {
        Some(Direction::Forward)
    } else {
        None
    }
}

/// `D*`, with each edge tagged by its [`Direction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualDigraph {
    succ: Vec<Vec<(Vertex, Direction, u32)>>,
    edge_count: usize,
}

impl ResidualDigraph {
    pub fn successors(&self, u: Vertex) -> impl Iterator<Item = (Vertex, Direction)> + '_ {
        self.succ[u.index()].iter().map(|&(v, dir, _)| (v, dir))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Direction)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |&(v, dir, _)| (Vertex::new(u), v, dir)))
    }

    pub fn reversed(&self) -> BTreeSet<Edge> {
        self.edges()
            .filter(|e| e.2 == Direction::Reversed)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    pub fn forward(&self) -> BTreeSet<Edge> {
        self.edges()
            .filter(|e| e.2 == Direction::Forward)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn direction(&self, u: Vertex, v: Vertex) -> Option<Direction> {
        self.succ[u.index()].iter().find(|e| e.0 == v).map(|e| e.1)
    }
}

pub fn residual_digraph(lw: &LinkedWeb) -> ResidualDigraph {
    let d = lw.web().digraph();
    let mut succ: Vec<Vec<(Vertex, Direction, u32)>> = vec![Vec::new(); d.vertex_count()];
    for (u, v) in d.edges() {
        if lw.is_path_edge(u, v) {
            succ[v.index()].push((u, Direction::Reversed, 0));
        } else {
            succ[u.index()].push((v, Direction::Forward, 0));
        }
    }
    let mut id = 0u32;
    for out in &mut succ {
        out.sort_unstable();
        for e in out.iter_mut() {
            e.2 = id;
            id += 1;
        }
    }
    ResidualDigraph {
        succ,
        edge_count: id as usize,
    }
}

/// The numbered defining property of alternating trails that a trail violates.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlternatingProperty {
    /// (1) not a trail of `D*`.
    ResidualTrail = 1,
    /// (2) does not start in `Â`.
    StartsInAHat = 2,
    /// (3) repeats a vertex outside the linkage, or repeats its terminal.
    Repetition = 3,
    /// (4) forward arrival at a linkage vertex not followed by the reversed edge.
    GoBack = 4,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Error)]
#[error("property ({}) fails at position {position}", *property as u8)]
pub struct TrailViolation {
    pub property: AlternatingProperty,
    /// Edge index for property 1, vertex index otherwise.
    pub position: usize,
}

pub fn check_alternating_trail(lw: &LinkedWeb, trail: &Trail) -> Result<(), TrailViolation> {
    let fail = |property, position| Err(TrailViolation { property, position });
    let vs = trail.vertices();
    if trail.is_trivial() {
        return if lw.a_hat().contains(&vs[0]) {
            Ok(())
        } else {
            fail(AlternatingProperty::StartsInAHat, 0)
        };
    }
    let mut dirs = Vec::with_capacity(vs.len() - 1);
    let mut used = BTreeSet::new();
    for (i, (u, v)) in trail.edges().enumerate() {
        match residual_direction(lw, u, v) {
            Some(dir) if used.insert((u, v)) => dirs.push(dir),
            _ => return fail(AlternatingProperty::ResidualTrail, i),
        }
    }
    if !lw.a_hat().contains(&vs[0]) {
        return fail(AlternatingProperty::StartsInAHat, 0);
    }
    let last = vs.len() - 1;
    let mut seen = BTreeSet::new();
    for (j, v) in vs.iter().enumerate() {
        if !seen.insert(*v) && (!lw.is_linked(*v) || j == last) {
            return fail(AlternatingProperty::Repetition, j);
        }
    }
    for i in 1..last {
        if lw.is_linked(vs[i]) && dirs[i - 1] == Direction::Forward && dirs[i] != Direction::Reversed {
            return fail(AlternatingProperty::GoBack, i);
        }
    }
    Ok(())
}

pub fn is_augmenting(lw: &LinkedWeb, trail: &Trail) -> bool {
    lw.b_hat().contains(&trail.terminal()) && check_alternating_trail(lw, trail).is_ok()
}

const NONE: u32 = u32::MAX;

/// Breadth-first search in the vertex-split residual network.
///
/// Node `2v` is the entry copy of `v`, node `2v + 1` its exit copy.
struct SplitSearch {
    parent: Vec<u32>,
    seen: Vec<bool>,
    hit: Option<u32>,
}

impl SplitSearch {
    fn run(lw: &LinkedWeb, stop: impl Fn(Vertex) -> bool) -> SplitSearch {
        let d = lw.web().digraph();
        let n = d.vertex_count();
        let mut search = SplitSearch {
            parent: vec![NONE; 2 * n],
            seen: vec![false; 2 * n],
            hit: None,
        };
        let mut queue = VecDeque::new();
        for &a in lw.a_hat() {
            let node = 2 * a.index() as u32;
            search.seen[node as usize] = true;
            queue.push_back(node);
        }
        let mut next = Vec::new();
        while let Some(node) = queue.pop_front() {
            let v = Vertex::new((node / 2) as usize);
            if node % 2 == 0 && stop(v) && !lw.is_linked(v) {
                search.hit = Some(node);
                return search;
            }
            next.clear();
            if node % 2 == 0 {
                match lw.path_predecessor(v) {
                    // entry copy of a linkage vertex: only the reversed edge
                    Some(p) => next.push((p, 2 * p.index() as u32 + 1)),
                    None if !lw.is_linked(v) => next.push((v, node + 1)),
                    None => {}
                }
            } else {
                for &w in d.successors(v) {
                    if !lw.is_path_edge(v, w) {
                        next.push((w, 2 * w.index() as u32));
                    }
                }
                if let Some(p) = lw.path_predecessor(v) {
                    next.push((p, node - 1));
                }
                next.sort_unstable();
            }
            for &(_, m) in &next {
                if !search.seen[m as usize] {
                    search.seen[m as usize] = true;
                    search.parent[m as usize] = node;
                    queue.push_back(m);
                }
            }
        }
        search
    }

    fn trail_to(&self, node: u32) -> Trail {
        let mut nodes = vec![node];
        let mut cur = node;
        while self.parent[cur as usize] != NONE {
            cur = self.parent[cur as usize];
            nodes.push(cur);
        }
        nodes.reverse();
        let mut vs: Vec<Vertex> = Vec::with_capacity(nodes.len());
        for m in nodes {
            let v = Vertex::new((m / 2) as usize);
            if vs.last() != Some(&v) {
                vs.push(v);
            }
        }
        Trail::new(vs)
    }
}

/// Returns an augmenting trail if one exists.
///
/// Trivial augmenting trails (vertices of `Â ∩ B̂`) are preferred; otherwise
/// the trail is a shortest one found by breadth-first search.
pub fn find_augmenting_trail(lw: &LinkedWeb) -> Option<Trail> {
    if let Some(&v) = lw.a_hat().intersection(lw.b_hat()).next() {
        return Some(Trail::trivial(v));
    }
    let search = SplitSearch::run(lw, |v| lw.b_hat().contains(&v));
    let trail = search.trail_to(search.hit?);
    assert_eq!(
        check_alternating_trail(lw, &trail),
        Ok(()),
        "split-network witness is not alternating"
    );
    Some(trail)
}

/// Which vertices are terminal vertices of alternating trails.
pub struct TerminalReach {
    search: SplitSearch,
    a_hat: BTreeSet<Vertex>,
}

impl TerminalReach {
    pub fn new(lw: &LinkedWeb) -> Self {
        TerminalReach {
            search: SplitSearch::run(lw, |_| false),
            a_hat: lw.a_hat().clone(),
        }
    }

    pub fn reaches(&self, v: Vertex) -> bool {
        self.search.seen[2 * v.index()] || self.search.seen[2 * v.index() + 1]
    }

    /// An alternating trail ending at `v`.
    pub fn witness(&self, v: Vertex) -> Option<Trail> {
        if self.a_hat.contains(&v) {
            return Some(Trail::trivial(v));
        }
        let (entry, exit) = (2 * v.index(), 2 * v.index() + 1);
        let node = match (self.search.seen[entry], self.search.seen[exit]) {
            (false, false) => return None,
            (true, false) => entry,
            (false, true) => exit,
            // the copy found first by the search is not preceded by the other
            (true, true) => {
                if self.depth(entry) <= self.depth(exit) {
                    entry
                } else {
                    exit
                }
            }
        };
        Some(self.search.trail_to(node as u32))
    }

    fn depth(&self, mut node: usize) -> usize {
        let mut depth = 0;
        while self.search.parent[node] != NONE {
            node = self.search.parent[node] as usize;
            depth += 1;
        }
        depth
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchBudgetExceeded {
    #[error("search budget exceeded: more than {0} trails")]
    Trails(usize),
    #[error("search budget exceeded: more than {0} expansions")]
    Expansions(usize),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_trails: usize,
    pub max_expansions: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_trails: 100_000,
            max_expansions: DEFAULT_EXPANSIONS,
        }
    }
}

impl SearchBudget {
    pub fn trails(max_trails: usize) -> Self {
        SearchBudget {
            max_trails,
            ..Self::default()
        }
    }
}

/// Depth-first enumeration of alternating trails ending in a target set.
struct Enumerator<'a> {
    lw: &'a LinkedWeb,
    residual: ResidualDigraph,
    target: Vec<bool>,
    useful: Vec<bool>,
    used: Vec<bool>,
    visits: Vec<u16>,
    stack: Vec<Vertex>,
    out: Vec<Trail>,
    expansions: usize,
    budget: SearchBudget,
}

impl<'a> Enumerator<'a> {
    fn new(lw: &'a LinkedWeb, target: impl Fn(Vertex) -> bool, budget: SearchBudget) -> Self {
        let residual = residual_digraph(lw);
        let n = lw.web().digraph().vertex_count();
        let target: Vec<bool> = (0..n).map(|i| target(Vertex::new(i))).collect();
        // vertices that can reach a target at all in D*
        let mut pred = vec![Vec::new(); n];
        for (u, v, _) in residual.edges() {
            pred[v.index()].push(u);
        }
        let mut useful = target.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| useful[i]).collect();
        while let Some(v) = queue.pop_front() {
            for &u in &pred[v] {
                if !useful[u.index()] {
                    useful[u.index()] = true;
                    queue.push_back(u.index());
                }
            }
        }
        let edges = residual.edge_count();
        Enumerator {
            lw,
            residual,
            target,
            useful,
            used: vec![false; edges],
            visits: vec![0; n],
            stack: Vec::new(),
            out: Vec::new(),
            expansions: 0,
            budget,
        }
    }

    fn emit(&mut self) -> Result<(), SearchBudgetExceeded> {
        if self.out.len() >= self.budget.max_trails {
            return Err(SearchBudgetExceeded::Trails(self.budget.max_trails));
        }
        self.out.push(Trail::new(self.stack.clone()));
        Ok(())
    }

    fn run(self) -> Result<Vec<Trail>, SearchBudgetExceeded> {
        self.run_counted().map(|(trails, _)| trails)
    }

    fn run_counted(mut self) -> Result<(Vec<Trail>, usize), SearchBudgetExceeded> {
        let starts: Vec<Vertex> = self.lw.a_hat().iter().copied().collect();
        for a in starts {
            if !self.useful[a.index()] {
                continue;
            }
            self.stack.push(a);
            self.visits[a.index()] = 1;
            if self.target[a.index()] {
                self.emit()?;
            }
            self.extend(a, false)?;
            self.visits[a.index()] = 0;
            self.stack.pop();
        }
        Ok((self.out, self.expansions))
    }

    fn extend(&mut self, v: Vertex, must_go_back: bool) -> Result<(), SearchBudgetExceeded> {
        self.expansions += 1;
        if self.expansions > self.budget.max_expansions {
            return Err(SearchBudgetExceeded::Expansions(self.budget.max_expansions));
        }
        for k in 0..self.residual.succ[v.index()].len() {
            let (w, dir, id) = self.residual.succ[v.index()][k];
            let linked = self.lw.is_linked(w);
            if self.used[id as usize]
                || (must_go_back && dir == Direction::Forward)
                || (!linked && self.visits[w.index()] > 0)
                || !self.useful[w.index()]
            {
                continue;
            }
            self.used[id as usize] = true;
            self.visits[w.index()] += 1;
            self.stack.push(w);
            if self.visits[w.index()] == 1 && self.target[w.index()] {
                self.emit()?;
            }
            self.extend(w, linked && dir == Direction::Forward)?;
            self.stack.pop();
            self.visits[w.index()] -= 1;
            self.used[id as usize] = false;
        }
        Ok(())
    }
}

/// Every alternating trail of `lw`, trivial ones included, in depth-first order.
pub fn enumerate_alternating_trails(lw: &LinkedWeb, budget: SearchBudget) -> Result<Vec<Trail>, SearchBudgetExceeded> {
    Enumerator::new(lw, |_| true, budget).run()
}

/// Every augmenting trail of `lw`; fails once more than `limit` exist.
pub fn enumerate_augmenting_trails(lw: &LinkedWeb, limit: usize) -> Result<Vec<Trail>, SearchBudgetExceeded> {
    enumerate_augmenting_trails_within(lw, SearchBudget::trails(limit))
}

pub fn enumerate_augmenting_trails_within(
    lw: &LinkedWeb,
    budget: SearchBudget,
) -> Result<Vec<Trail>, SearchBudgetExceeded> {
    let b_hat = lw.b_hat();
    Enumerator::new(lw, |v| b_hat.contains(&v), budget).run()
}

/// Augmenting trails terminating at `v`, plus the number of expansions used.
fn augmenting_trails_ending_at(
    lw: &LinkedWeb,
    v: Vertex,
    budget: SearchBudget,
) -> Result<(Vec<Trail>, usize), SearchBudgetExceeded> {
    if !lw.b_hat().contains(&v) {
        return Ok((Vec::new(), 0));
    }
    Enumerator::new(lw, |w| w == v, budget).run_counted()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("trails {0} and {1} share a vertex")]
pub struct NotDisjointInput(pub usize, pub usize);

/// Greedily keeps trails that meet no linkage path met by an earlier kept
/// trail, scanning in sorted order. Input trails must be pairwise disjoint.
pub fn strongly_disjoint_subset(lw: &LinkedWeb, trails: &[Trail]) -> Result<Vec<Trail>, NotDisjointInput> {
    let mut order: Vec<usize> = (0..trails.len()).collect();
    order.sort_by(|&i, &j| trails[i].cmp(&trails[j]));
    let mut owner: Vec<Option<usize>> = vec![None; lw.web().digraph().vertex_count()];
    for &i in &order {
        for v in trails[i].vertex_set() {
            if let Some(j) = owner[v.index()] {
                return Err(NotDisjointInput(j.min(i), j.max(i)));
            }
            owner[v.index()] = Some(i);
        }
    }
    let mut touched = BTreeSet::new();
    let mut kept = Vec::new();
    for &i in &order {
        let paths: BTreeSet<usize> = trails[i]
            .vertices()
            .iter()
            .filter_map(|&v| lw.location(v).map(|(p, _)| p))
            .collect();
        if paths.is_disjoint(&touched) {
            touched.extend(paths);
            kept.push(trails[i].clone());
        }
    }
    Ok(kept)
}

/// Are `R` and `T` strongly disjoint alternating trails of `lw`?
pub fn strongly_disjoint(lw: &LinkedWeb, r: &Trail, t: &Trail) -> bool {
    let rv = r.vertex_set();
    if t.vertices().iter().any(|v| rv.contains(v)) {
        return false;
    }
    let paths = |x: &Trail| -> BTreeSet<usize> {
        x.vertices()
            .iter()
            .filter_map(|&v| lw.location(v).map(|(p, _)| p))
            .collect()
    };
    paths(r).is_disjoint(&paths(t))
}

/// Searches for `k` augmenting trails ending at `v` that pairwise meet only in `v`.
///
/// Exact search within the budget's expansion limit. A vertex outside `B̂`
/// has no augmenting trails ending at it; `k = 0` is met by the empty family.
pub fn has_v_joint_family(
    lw: &LinkedWeb,
    v: Vertex,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<Vec<Trail>>, SearchBudgetExceeded> {
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > lw.a_hat().len() {
        return Ok(None);
    }
    let (mut trails, used) = augmenting_trails_ending_at(lw, v, budget)?;
    if trails.len() < k {
        return Ok(None);
    }
    // every family member enters v from a different vertex
    let entries: BTreeSet<Vertex> = trails
        .iter()
        .filter(|t| !t.is_trivial())
        .map(|t| t.vertices()[t.vertices().len() - 2])
        .collect();
    let trivial = usize::from(trails.iter().any(Trail::is_trivial));
    if entries.len() + trivial < k {
        return Ok(None);
    }
    trails.sort_by_key(|t| (t.len(), t.clone()));
    let n = lw.web().digraph().vertex_count();
    let words = n.div_ceil(64);
    let masks: Vec<Vec<u64>> = trails
        .iter()
        .map(|t| {
            let mut m = vec![0u64; words];
            for &x in t.vertices() {
                if x != v {
                    m[x.index() / 64] |= 1 << (x.index() % 64);
                }
            }
            m
        })
        .collect();
    let mut search = FamilySearch {
        masks: &masks,
        k,
        chosen: Vec::new(),
        union: vec![0; words],
        expansions: used,
        limit: budget.max_expansions,
    };
    Ok(search
        .extend(0)?
        .then(|| search.chosen.iter().map(|&i| trails[i].clone()).collect()))
}

struct FamilySearch<'m> {
    masks: &'m [Vec<u64>],
    k: usize,
    chosen: Vec<usize>,
    union: Vec<u64>,
    expansions: usize,
    limit: usize,
}

impl FamilySearch<'_> {
    fn extend(&mut self, from: usize) -> Result<bool, SearchBudgetExceeded> {
        if self.chosen.len() == self.k {
            return Ok(true);
        }
        self.expansions += 1;
        if self.expansions > self.limit {
            return Err(SearchBudgetExceeded::Expansions(self.limit));
        }
        for i in from..self.masks.len() {
            if self.chosen.len() + (self.masks.len() - i) < self.k {
                break;
            }
            let m = &self.masks[i];
            if m.iter().zip(&self.union).any(|(a, b)| a & b != 0) {
                continue;
            }
            for (u, a) in self.union.iter_mut().zip(m) {
                *u |= a;
            }
            self.chosen.push(i);
            if self.extend(i + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            for (u, a) in self.union.iter_mut().zip(m) {
                *u &= !a;
            }
        }
        Ok(false)
    }
}
