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

//! Brute-force references and instance generators.
//!
//! Everything here works on bitmasks and exhaustive search, independently of
//! the residual-network machinery, and is meant for webs of about ten
//! vertices. The degenerate hindrance `S = ∅`, `H = ∅` is found (and valid)
//! exactly when `A` is non-empty and the web has no `AB`-path at all.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::certificate::HindranceCertificate;
use crate::path::Path;
use crate::web::{Digraph, Edge, Vertex, Web};

pub const DEFAULT_CAP: usize = 10;

/// Hard ceiling: subset enumeration goes through `u64` masks.
const MAX_CAP: usize = 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Error)]
#[error("web has {vertices} vertices, oracle cap is {cap}")]
pub struct CapExceeded {
    pub vertices: usize,
    pub cap: usize,
}

type Mask = u64;

fn bit(v: usize) -> Mask {
    1 << v
}

fn mask_of<'a>(vs: impl IntoIterator<Item = &'a Vertex>) -> Mask {
    vs.into_iter().fold(0, |m, v| m | bit(v.index()))
}

fn vertices_of(mask: Mask) -> impl Iterator<Item = Vertex> {
    (0..64).filter(move |i| mask & bit(*i) != 0).map(Vertex::new)
}

/// Bitmask view of a web.
struct Masks {
    n: usize,
    succ: Vec<Mask>,
    a: Mask,
    b: Mask,
}

impl Masks {
    fn new(web: &Web) -> Masks {
        let d = web.digraph();
        Masks {
            n: d.vertex_count(),
            succ: d.vertices().map(|v| mask_of(d.successors(v))).collect(),
            a: mask_of(web.sources()),
            b: mask_of(web.sinks()),
        }
    }

    /// Every `XY`-path, grouped by nothing, in DFS order from `X` ascending.
    fn xy_paths(&self, x: Mask, y: Mask) -> Vec<(Vec<Vertex>, Mask)> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in (0..self.n).filter(|&s| x & bit(s) != 0) {
            if y & bit(s) != 0 {
                out.push((vec![Vertex::new(s)], bit(s)));
                continue;
            }
            stack.push(Vertex::new(s));
            self.extend_path(&mut stack, bit(s), x, y, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_path(&self, stack: &mut Vec<Vertex>, used: Mask, x: Mask, y: Mask, out: &mut Vec<(Vec<Vertex>, Mask)>) {
        let cur = stack.last().expect("non-empty").index();
        let mut next = self.succ[cur] & !used & !x;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            stack.push(Vertex::new(w));
            if y & bit(w) != 0 {
                out.push((stack.clone(), used | bit(w)));
            } else {
                self.extend_path(stack, used | bit(w), x, y, out);
            }
            stack.pop();
        }
    }

    /// Is there an `XY`-path avoiding `s`?
    fn leaks(&self, x: Mask, y: Mask, s: Mask) -> bool {
        let mut seen = x & !s;
        let mut frontier = seen;
        while frontier != 0 {
            if frontier & y != 0 {
                return true;
            }
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.succ[v];
            }
            next &= !s & !seen;
            seen |= next;
            frontier = next;
        }
        false
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(MAX_CAP) }
    }

    fn masks(&self, web: &Web) -> Result<Masks, CapExceeded> {
        let n = web.digraph().vertex_count();
        if n > self.cap {
            return Err(CapExceeded {
                vertices: n,
                cap: self.cap,
            });
        }
        Ok(Masks::new(web))
    }

    /// Maximum number of disjoint `AB`-paths, with a witness system.
    pub fn max_linkage(&self, web: &Web) -> Result<(usize, Vec<Path>), CapExceeded> {
        let m = self.masks(web)?;
        let paths = m.xy_paths(m.a, m.b);
        let sources: Vec<usize> = (0..m.n).filter(|&s| m.a & bit(s) != 0).collect();
        let by_source: Vec<Vec<usize>> = sources
            .iter()
            .map(|&s| (0..paths.len()).filter(|&i| paths[i].0[0].index() == s).collect())
            .collect();
        let mut best = Vec::new();
        let mut chosen = Vec::new();
        let ceiling = sources.len().min(m.b.count_ones() as usize);
        max_system(&paths, &by_source, 0, 0, &mut chosen, &mut best, ceiling);
        let witness = best.iter().map(|&i| Path::new(paths[i].0.clone())).collect();
        Ok((best.len(), witness))
    }

    /// Minimum `AB`-separator by subset enumeration in increasing size.
    pub fn min_separator(&self, web: &Web) -> Result<(usize, BTreeSet<Vertex>), CapExceeded> {
        let m = self.masks(web)?;
        for k in 0..=m.n {
            if let Some(s) = subsets_of_size(m.n, k).find(|&s| !m.leaks(m.a, m.b, s)) {
                return Ok((k, vertices_of(s).collect()));
            }
        }
        unreachable!("the whole vertex set separates")
    }

    /// Some hindrance, if the web has one.
    pub fn find_hindrance(&self, web: &Web) -> Result<Option<HindranceCertificate>, CapExceeded> {
        let m = self.masks(web)?;
        let a_count = m.a.count_ones() as usize;
        for k in 0..a_count.min(m.n + 1) {
            for s in subsets_of_size(m.n, k) {
                if m.leaks(m.a, m.b, s) {
                    continue;
                }
                let paths = m.xy_paths(m.a, s);
                let targets: Vec<usize> = (0..m.n).filter(|&v| s & bit(v) != 0).collect();
                let mut chosen = Vec::new();
                if onto_system(&paths, &targets, 0, 0, &mut chosen) {
                    return Ok(Some(HindranceCertificate {
                        separator: vertices_of(s).collect(),
                        paths: chosen.iter().map(|&i| Path::new(paths[i].0.clone())).collect(),
                    }));
                }
            }
        }
        Ok(None)
    }
}

fn max_system(
    paths: &[(Vec<Vertex>, Mask)],
    by_source: &[Vec<usize>],
    next: usize,
    used: Mask,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    ceiling: usize,
) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    if best.len() == ceiling || next == by_source.len() || chosen.len() + (by_source.len() - next) <= best.len() {
        return;
    }
    for &i in &by_source[next] {
        if paths[i].1 & used == 0 {
            chosen.push(i);
            max_system(paths, by_source, next + 1, used | paths[i].1, chosen, best, ceiling);
            chosen.pop();
            if best.len() == ceiling {
                return;
            }
        }
    }
    max_system(paths, by_source, next + 1, used, chosen, best, ceiling);
}

fn onto_system(
    paths: &[(Vec<Vertex>, Mask)],
    targets: &[usize],
    next: usize,
    used: Mask,
    chosen: &mut Vec<usize>,
) -> bool {
    if next == targets.len() {
        return true;
    }
    let t = targets[next];
    for (i, (p, mask)) in paths.iter().enumerate() {
        if p.last().map(|v| v.index()) == Some(t) && mask & used == 0 {
            chosen.push(i);
            if onto_system(paths, targets, next + 1, used | mask, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `k`-subsets of `{0..n}` as masks, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit: Mask = if n == 64 { Mask::MAX } else { (1 << n) - 1 };
    let mut cur: Option<Mask> = if k <= n { Some((1u64 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let c = cur?;
        if c & !limit != 0 {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(c)
    })
}

pub fn brute_max_linkage(web: &Web) -> Result<(usize, Vec<Path>), CapExceeded> {
    Oracle::default().max_linkage(web)
}

pub fn brute_min_separator(web: &Web) -> Result<(usize, BTreeSet<Vertex>), CapExceeded> {
    Oracle::default().min_separator(web)
}

pub fn brute_find_hindrance(web: &Web) -> Result<Option<HindranceCertificate>, CapExceeded> {
    Oracle::default().find_hindrance(web)
}

/// Every `AB`-path of the web, in depth-first order from the sources.
pub fn ab_paths(web: &Web) -> Vec<Path> {
    let m = Masks::new(web);
    m.xy_paths(m.a, m.b).into_iter().map(|(p, _)| Path::new(p)).collect()
}

/// Calls `f` on every partial linkage with at most `max_size` paths.
///
/// Linkages are produced with their paths ordered by initial vertex; the
/// empty linkage comes first.
pub fn for_each_partial_linkage(web: &Web, max_size: usize, mut f: impl FnMut(&[Path])) {
    let m = Masks::new(web);
    let paths: Vec<(Path, Mask)> = m
        .xy_paths(m.a, m.b)
        .into_iter()
        .map(|(p, mask)| (Path::new(p), mask))
        .collect();
    let mut chosen: Vec<Path> = Vec::new();
    fn rec(
        paths: &[(Path, Mask)],
        from: usize,
        used: Mask,
        max: usize,
        chosen: &mut Vec<Path>,
        f: &mut dyn FnMut(&[Path]),
    ) {
        f(chosen);
        if chosen.len() == max {
            return;
        }
        for i in from..paths.len() {
            let (p, mask) = &paths[i];
            if mask & used == 0 {
                chosen.push(p.clone());
                rec(paths, i + 1, used | mask, max, chosen, f);
                chosen.pop();
            }
        }
    }
    rec(&paths, 0, 0, max_size, &mut chosen, &mut f);
}

pub fn partial_linkages(web: &Web, max_size: usize) -> Vec<Vec<Path>> {
    let mut out = Vec::new();
    for_each_partial_linkage(web, max_size, |ps| out.push(ps.to_vec()));
    out
}

#[derive(Copy, Clone, Debug, PartialEq, Error)]
pub enum GenError {
    #[error("{sources} sources and {sinks} sinks do not fit disjointly into {vertices} vertices")]
    TooManyTerminals {
        vertices: usize,
        sources: usize,
        sinks: usize,
    },
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

/// Parameters for [`gen_random_web`].
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct RandomWeb {
    pub seed: u64,
    pub vertices: usize,
    pub edge_prob: f64,
    pub sources: usize,
    pub sinks: usize,
    /// Draw sinks from all vertices instead of the non-sources only.
    pub overlap: bool,
}

/// Vertex names `v0 .. v{n-1}`, zero-padded so that name order is index order.
pub fn vertex_names(n: usize) -> Arc<[String]> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

/// A seeded random web.
///
/// Every ordered pair `(u, v)` is considered once in lexicographic order and
/// kept with probability `edge_prob`, unless it points into a source, out of
/// a sink, or reverses an edge that was already kept.
pub fn gen_random_web(params: RandomWeb) -> Result<Web, GenError> {
    let RandomWeb {
        seed,
        vertices: n,
        edge_prob,
        sources,
        sinks,
        overlap,
    } = params;
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenError::BadProbability(edge_prob));
    }
    if sources > n || sinks > n || (!overlap && sources + sinks > n) {
        return Err(GenError::TooManyTerminals {
            vertices: n,
            sources,
            sinks,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    shuffle(&mut order, &mut rng);
    let a: BTreeSet<Vertex> = order[..sources].iter().map(|&i| Vertex::new(i)).collect();
    let b: BTreeSet<Vertex> = if overlap {
        shuffle(&mut order, &mut rng);
        order[..sinks].iter().map(|&i| Vertex::new(i)).collect()
    } else {
        order[sources..sources + sinks]
            .iter()
            .map(|&i| Vertex::new(i))
            .collect()
    };
    let mut adjacent = vec![false; n * n];
    let mut edges: Vec<Edge> = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let keep = rng.gen::<f64>() < edge_prob;
            let (uu, vv) = (Vertex::new(u), Vertex::new(v));
            if keep && !a.contains(&vv) && !b.contains(&uu) && !adjacent[v * n + u] {
                adjacent[u * n + v] = true;
                edges.push((uu, vv));
            }
        }
    }
    let d = Digraph::from_indexed(vertex_names(n), &edges).expect("generated digraph is simple");
    Ok(Web::new(d, a, b).expect("generated web respects degree conditions"))
}

fn shuffle(items: &mut [usize], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i);
        items.swap(i, j);
    }
}

/// Every web on `n` vertices up to isomorphism, with many isomorphic repeats.
///
/// Vertices are laid out by role: sources only, then `A ∩ B`, then sinks
/// only, then the rest. Any web is isomorphic to one with this layout. Edges
/// range over all pairs the degree conditions allow: source to sink, source
/// to inner, inner to sink, and either orientation (or none) between two
/// inner vertices.
pub struct SmallWebs {
    names: Arc<[String]>,
    n: usize,
    compositions: Vec<[usize; 4]>,
    comp: usize,
    slots: Vec<Slot>,
    counter: Vec<u8>,
    done: bool,
}

#[derive(Copy, Clone, Debug)]
enum Slot {
    Directed(usize, usize),
    Either(usize, usize),
}

impl SmallWebs {
    pub fn new(n: usize) -> Self {
        Self::from_compositions(n, Self::compositions(n))
    }

    /// Role sizes `[A only, A ∩ B, B only, neither]` summing to `n`.
    pub fn compositions(n: usize) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 0..=n {
            for ab in 0..=n - a {
                for b in 0..=n - a - ab {
                    out.push([a, ab, b, n - a - ab - b]);
                }
            }
        }
        out
    }

    /// Only the webs with the given role sizes.
    pub fn with_composition(composition: [usize; 4]) -> Self {
        Self::from_compositions(composition.iter().sum(), vec![composition])
    }

    fn from_compositions(n: usize, compositions: Vec<[usize; 4]>) -> Self {
        let mut it = SmallWebs {
            names: vertex_names(n),
            n,
            compositions,
            comp: 0,
            slots: Vec::new(),
            counter: Vec::new(),
            done: false,
        };
        it.load();
        it
    }

    /// Webs with up to `max_n` vertices.
    pub fn up_to(max_n: usize) -> impl Iterator<Item = Web> {
        (0..=max_n).flat_map(SmallWebs::new)
    }

    fn load(&mut self) {
        let Some(&[a, ab, b, _]) = self.compositions.get(self.comp) else {
            self.done = true;
            return;
        };
        let sources = 0..a;
        let sinks = a + ab..a + ab + b;
        let inner = a + ab + b..self.n;
        let mut slots = Vec::new();
        for s in sources.clone() {
            for t in sinks.clone().chain(inner.clone()) {
                slots.push(Slot::Directed(s, t));
            }
        }
        for u in inner.clone() {
            for t in sinks.clone() {
                slots.push(Slot::Directed(u, t));
            }
        }
        for u in inner.clone() {
            for v in u + 1..self.n {
                slots.push(Slot::Either(u, v));
            }
        }
        self.counter = vec![0; slots.len()];
        self.slots = slots;
    }

    fn advance(&mut self) {
        for (i, slot) in self.slots.iter().enumerate() {
            let radix = match slot {
                Slot::Directed(..) => 2,
                Slot::Either(..) => 3,
            };
            self.counter[i] += 1;
            if self.counter[i] < radix {
                return;
            }
            self.counter[i] = 0;
        }
        self.comp += 1;
        self.load();
    }
}

impl Iterator for SmallWebs {
    type Item = Web;

    fn next(&mut self) -> Option<Web> {
        if self.done {
            return None;
        }
        let [a, ab, b, _] = self.compositions[self.comp];
        let mut edges = Vec::new();
        for (slot, &c) in self.slots.iter().zip(&self.counter) {
            match (*slot, c) {
                (_, 0) => {}
                (Slot::Directed(u, v), _) | (Slot::Either(u, v), 1) => edges.push((Vertex::new(u), Vertex::new(v))),
                (Slot::Either(u, v), _) => edges.push((Vertex::new(v), Vertex::new(u))),
            }
        }
        let d = Digraph::from_indexed(self.names.clone(), &edges).expect("enumerated digraph is simple");
        let sources = (0..a + ab).map(Vertex::new).collect();
        let sinks = (a..a + ab + b).map(Vertex::new).collect();
        let web = Web::new(d, sources, sinks).expect("enumerated web is valid");
        self.advance();
        Some(web)
    }
}
