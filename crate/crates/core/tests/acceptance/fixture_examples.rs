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

//! The worked F1 to F4 examples, each cross-checked against brute force where
//! a brute-force counterpart exists.

use std::collections::BTreeSet;

use hindrance::alternating::{
    check_alternating_trail, enumerate_alternating_trails, enumerate_augmenting_trails, find_augmenting_trail,
    has_v_joint_family, residual_digraph, strongly_disjoint_subset, SearchBudget,
};
use hindrance::augment::{apply_augmenting_set, augment_once};
use hindrance::bipartite::{
    hindered_set_from_hindrance, matching_to_linkage, orient_bipartite, verify_hindered_set, BipartiteGraph,
    HinderedSet,
};
use hindrance::certificate::{validate_hindrance, HindranceCertificate};
use hindrance::elimination::{
    check_trace_invariants, classify_popularity, elimination_step, initial_state, run_elimination, Clause, Outcome,
    Termination,
};
use hindrance::extract::{extract_hindrance, last_reachable_vertices, ExtractError};
use hindrance::fixtures::{self, with_paths};
use hindrance::linkage::{deficiency, LinkageError, LinkedWeb};
use hindrance::oracle::{brute_find_hindrance, brute_max_linkage, brute_min_separator, gen_random_web, RandomWeb};
use hindrance::path::{Path, Trail};
use hindrance::solver::{hinder_from_wasteful, max_linkage, SolveError};
use hindrance::web::{is_separator, normalize_subdivide, validate_web, Edge, RawDigraph, Vertex, Web, WebViolation};

struct Examples(Vec<(String, bool)>);

impl Examples {
    fn check(&mut self, label: &str, ok: bool) {
        self.0.push((label.to_owned(), ok));
    }
}

fn set(lw: &LinkedWeb, vs: &BTreeSet<Vertex>) -> String {
    lw.web().digraph().render_vertices(vs)
}

fn paths(lw: &LinkedWeb, ps: &[Path]) -> Vec<String> {
    ps.iter().map(|p| p.render(lw.web().digraph())).collect()
}

fn trail(lw: &LinkedWeb, names: &[&str]) -> Trail {
    Trail::from_names(lw.web().digraph(), names).expect("fixture vertices")
}

fn edges(lw: &LinkedWeb, es: &BTreeSet<Edge>) -> Vec<String> {
    let d = lw.web().digraph();
    let mut out: Vec<String> = es.iter().map(|&(u, v)| format!("{}{}", d.name(u), d.name(v))).collect();
    out.sort();
    out
}

fn names(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn web_of(parts: fixtures::WebParts) -> Result<Web, hindrance::web::Violations> {
    validate_web(&parts.0, &parts.1, &parts.2)
}

pub fn run() -> Vec<(String, bool)> {
    let mut ex = Examples(Vec::new());
    let (f1, f2, f3, f4) = (fixtures::f1(), fixtures::f2(), fixtures::f3(), fixtures::f4());
    let f3_empty = with_paths(&f3, &[]);
    let budget = SearchBudget::default();

    // web validation and normalisation
    ex.check("F1 parts form a web", web_of(fixtures::f1_parts()).is_ok());
    ex.check("F3 parts form a web", web_of(fixtures::f3_parts()).is_ok());
    let (mut raw, a, b) = fixtures::f1_parts();
    raw.edges.insert(("v".into(), "a1".into()));
    let bad = validate_web(&raw, &a, &b);
    ex.check(
        "F1 plus v->a1 reports SourceHasInEdge(a1)",
        bad.is_err_and(|v| {
            v.0.contains(&WebViolation::SourceHasInEdge {
                vertex: "a1".into(),
                from: "v".into(),
            })
        }),
    );
    let sub = normalize_subdivide(&fixtures::f1_parts().0).unwrap();
    ex.check(
        "subdividing F1 gives 11 vertices and 10 edges",
        sub.vertex_count() == 11 && sub.edge_count() == 10,
    );

    // linkages and deficiencies
    ex.check(
        "(F1, P1): Â = {a2 a3}, B̂ = {b2}",
        set(&f1, f1.a_hat()) == "a2 a3" && set(&f1, f1.b_hat()) == "b2",
    );
    ex.check(
        "(F3, {x}): Â = {a}, B̂ = {b}",
        set(&f3, f3.a_hat()) == "a" && set(&f3, f3.b_hat()) == "b",
    );
    let shared = [&["a1", "v", "b1"][..], &["a2", "v", "b2"][..]]
        .iter()
        .map(|p| Path::from_names(f1.web().digraph(), p).unwrap())
        .collect();
    ex.check(
        "(F1, two paths through v) is rejected with PathsShareVertex(v)",
        LinkedWeb::new(f1.web().clone(), shared) == Err(LinkageError::PathsShareVertex("v".into())),
    );
    let def = |lw: &LinkedWeb| {
        let d = deficiency(lw);
        (set(lw, &d.a_hat), set(lw, &d.b_hat), d.wasteful)
    };
    ex.check(
        "deficiency(F1, P1) = ({a2 a3}, {b2}, true)",
        def(&f1) == ("a2 a3".into(), "b2".into(), true),
    );
    ex.check(
        "deficiency(F2, P2) = ({a2}, {b2}, false)",
        def(&f2) == ("a2".into(), "b2".into(), false),
    );
    ex.check(
        "deficiency(F4, ∅) = ({a1 a2}, {b}, true)",
        def(&f4) == ("a1 a2".into(), "b".into(), true),
    );

    // separators
    let f1w = f1.web().clone();
    let vs = |w: &Web, xs: &[&str]| w.vertex_set(xs.iter().copied()).unwrap();
    let sep = |w: &Web, s: &[&str]| is_separator(w, w.sources(), w.sinks(), &vs(w, s));
    ex.check("{v} separates F1", sep(&f1w, &["v"]));
    ex.check("{b1} does not separate F1", !sep(&f1w, &["b1"]));
    ex.check("{a b} does not separate F3", !sep(f3.web(), &["a", "b"]));

    // hindrance validation
    let cert = |lw: &LinkedWeb, s: &[&str], ps: &[&[&str]]| HindranceCertificate {
        separator: lw.web().vertex_set(s.iter().copied()).unwrap(),
        paths: ps
            .iter()
            .map(|p| Path::from_names(lw.web().digraph(), p).unwrap())
            .collect(),
    };
    ex.check(
        "F1: S={v}, H={a1 v} is valid",
        validate_hindrance(&f1w, &cert(&f1, &["v"], &[&["a1", "v"]])).is_ok(),
    );
    ex.check(
        "F1: S={v}, H={a1 v, a2 v} is invalid",
        validate_hindrance(&f1w, &cert(&f1, &["v"], &[&["a1", "v"], &["a2", "v"]])).is_err(),
    );
    ex.check(
        "F1: S={v b1}, H={a1 v} is invalid",
        validate_hindrance(&f1w, &cert(&f1, &["v", "b1"], &[&["a1", "v"]])).is_err(),
    );

    // residual digraph
    let r2 = residual_digraph(&f2);
    ex.check(
        "F2 reversed edges are p1a1 p2p1 b1p2",
        edges(&f2, &r2.reversed()) == ["b1p2", "p1a1", "p2p1"],
    );
    let r1 = residual_digraph(&with_paths(&f1, &[]));
    ex.check(
        "(F1, ∅): D* = D, nothing reversed",
        r1.reversed().is_empty() && r1.forward() == f1.web().digraph().edges().collect(),
    );
    let f4a = with_paths(&f4, &[&["a1", "b"]]);
    let r4 = residual_digraph(&f4a);
    ex.check(
        "(F4, {a1 b}): reversed {ba1}, forward {a2b}",
        edges(&f4a, &r4.reversed()) == ["ba1"] && edges(&f4a, &r4.forward()) == ["a2b"],
    );

    // alternating trails
    ex.check(
        "F2: a2 p2 p1 b2 is alternating",
        check_alternating_trail(&f2, &trail(&f2, &["a2", "p2", "p1", "b2"])).is_ok(),
    );
    ex.check(
        "F2: a2 p2 b1 is not alternating",
        check_alternating_trail(&f2, &trail(&f2, &["a2", "p2", "b1"])).is_err(),
    );
    ex.check(
        "(F3, {x}): trivial a is alternating",
        check_alternating_trail(&f3, &trail(&f3, &["a"])).is_ok(),
    );
    let found = |lw: &LinkedWeb| find_augmenting_trail(lw).map(|t| t.render(lw.web().digraph()));
    ex.check(
        "F2: augmenting trail a2 p2 p1 b2",
        found(&f2).as_deref() == Some("a2 p2 p1 b2"),
    );
    ex.check("F1: no augmenting trail", found(&f1).is_none());
    ex.check("F4: augmenting trail a1 b", found(&f4).as_deref() == Some("a1 b"));
    let all = |lw: &LinkedWeb| -> Vec<String> {
        enumerate_augmenting_trails(lw, 10)
            .unwrap()
            .iter()
            .map(|t| t.render(lw.web().digraph()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    };
    ex.check("F4: augmenting trails a1 b, a2 b", all(&f4) == ["a1 b", "a2 b"]);
    ex.check("F1: no augmenting trails", all(&f1).is_empty());
    ex.check("(F3, {x}): augmenting trails a b", all(&f3) == ["a b"]);

    // strongly disjoint subsets: F2 with a third source a3 -> p1
    let (mut raw2, mut a2, b2) = fixtures::f2_parts();
    raw2.vertices.insert("a3".into());
    raw2.edges.insert(("a3".into(), "p1".into()));
    a2.insert("a3".into());
    let web2 = validate_web(&raw2, &a2, &b2).unwrap();
    let p2 = Path::from_names(web2.digraph(), &["a1", "p1", "p2", "b1"]).unwrap();
    let lw2 = LinkedWeb::new(web2, vec![p2]).unwrap();
    let (t1, t2) = (trail(&lw2, &["a3", "p1"]), trail(&lw2, &["a2", "p2"]));
    let kept = strongly_disjoint_subset(&lw2, &[t1, t2.clone()]).unwrap();
    ex.check("two trails meeting P2: one survivor, first in order", kept == [t2]);
    let t = trail(&f4, &["a1", "b"]);
    ex.check(
        "(F4, {a1 b}) is strongly disjoint",
        strongly_disjoint_subset(&f4, std::slice::from_ref(&t)).unwrap() == [t],
    );
    let b = f4.web().vertex("b").unwrap();
    let fam = has_v_joint_family(&f4, b, 2, budget).unwrap();
    ex.check(
        "F4: b-joint family of size 2 is {a1 b, a2 b}",
        fam.map(|ts| paths_of(&f4, &ts)) == Some(vec!["a1 b".into(), "a2 b".into()]),
    );
    ex.check(
        "F4: no b-joint family of size 3",
        has_v_joint_family(&f4, b, 3, budget).unwrap().is_none(),
    );
    let b2v = f1.web().vertex("b2").unwrap();
    ex.check(
        "F1: no b2-joint family of size 1",
        has_v_joint_family(&f1, b2v, 1, budget).unwrap().is_none(),
    );

    // augmentation
    let aug = |lw: &LinkedWeb, t: &[&str]| apply_augmenting_set(lw, &[trail(lw, t)]).map(|q| paths(lw, &q));
    ex.check(
        "F2 augmented: a1 p1 b2, a2 p2 b1",
        aug(&f2, &["a2", "p2", "p1", "b2"]) == Ok(vec!["a1 p1 b2".into(), "a2 p2 b1".into()]),
    );
    ex.check("F4 augmented: a1 b", aug(&f4, &["a1", "b"]) == Ok(vec!["a1 b".into()]));
    ex.check(
        "(F3, ∅) augmented by x: x",
        aug(&f3_empty, &["x"]) == Ok(vec!["x".into()]),
    );
    let once = augment_once(&f2).unwrap();
    ex.check(
        "augment_once(F2) links everything",
        paths(&once, once.paths()) == ["a1 p1 b2", "a2 p2 b1"] && once.a_hat().is_empty() && once.b_hat().is_empty(),
    );
    ex.check("augment_once(F1) is absent", augment_once(&f1).is_none());
    let once4 = augment_once(&f4).unwrap();
    ex.check(
        "augment_once(F4) picks a1 b",
        paths(&once4, once4.paths()) == ["a1 b"] && once4.b_hat().is_empty(),
    );

    // last reachable vertices, with the F2 value taken from enumeration
    let last = |lw: &LinkedWeb| lw.web().digraph().render_vertices(&last_reachable_vertices(lw));
    ex.check("v_P for (F1, P1) is v", last(&f1) == "v");
    ex.check("v_P for (F4, {a1 b}) is b", last(&f4a) == "b");
    let ends: BTreeSet<Vertex> = enumerate_alternating_trails(&f2, budget)
        .unwrap()
        .iter()
        .map(Trail::terminal)
        .collect();
    let brute_vp = f2.paths()[0]
        .vertices()
        .iter()
        .rev()
        .find(|v| ends.contains(v))
        .copied()
        .unwrap();
    ex.check(
        "v_P for (F2, P2) agrees with enumeration (p2; b1 has no residual in-edge)",
        last(&f2) == "p2" && f2.web().name(brute_vp) == "p2",
    );

    // extraction and solver
    let ext = |lw: &LinkedWeb| extract_hindrance(lw).map(|c| (set(lw, &c.separator), paths(lw, &c.paths)));
    ex.check(
        "extract(F1, P1) = {v}, {a1 v}",
        ext(&f1) == Ok(("v".into(), vec!["a1 v".into()])),
    );
    let f1b = with_paths(&f1, &[&["a2", "v", "b2"]]);
    ex.check(
        "extract(F1, a2 v b2) = {v}, {a2 v}",
        ext(&f1b) == Ok(("v".into(), vec!["a2 v".into()])),
    );
    ex.check(
        "extract(F2, P2) fails with HasAugmentingTrail",
        ext(&f2) == Err(ExtractError::HasAugmentingTrail),
    );
    let m1 = max_linkage(f1.web());
    ex.check(
        "max linkage of F1 has size 1 with separator {v} (oracle agrees)",
        m1.linkage.paths().len() == 1
            && set(&f1, &m1.separator) == "v"
            && brute_max_linkage(f1.web()).unwrap().0 == 1
            && brute_min_separator(f1.web()).unwrap().0 == 1,
    );
    let m2 = max_linkage(f2.web());
    ex.check(
        "max linkage of F2 is a1 p1 b2, a2 p2 b1 with a separator of size 2 (oracle agrees)",
        paths(&f2, m2.linkage.paths()) == ["a1 p1 b2", "a2 p2 b1"]
            && m2.separator.len() == 2
            && brute_max_linkage(f2.web()).unwrap().0 == 2
            && brute_min_separator(f2.web()).unwrap().0 == 2,
    );
    let m3 = max_linkage(f3.web());
    let (s3, sep3) = brute_min_separator(f3.web()).unwrap();
    ex.check(
        "max linkage of F3 is a b, x with separator {b x} (oracle: size 2, contains x)",
        paths(&f3, m3.linkage.paths()) == ["a b", "x"]
            && set(&f3, &m3.separator) == "b x"
            && brute_max_linkage(f3.web()).unwrap().0 == 2
            && s3 == 2
            && sep3.contains(&f3.web().vertex("x").unwrap()),
    );
    let hin = |lw: &LinkedWeb| hinder_from_wasteful(lw).map(|c| (set(lw, &c.separator), paths(lw, &c.paths)));
    ex.check(
        "hinder(F1, P1) = {v}, {a1 v}",
        hin(&f1) == Ok(("v".into(), vec!["a1 v".into()])),
    );
    ex.check(
        "hinder(F4, ∅) = {b}, {a1 b}",
        hin(&f4) == Ok(("b".into(), vec!["a1 b".into()])),
    );
    ex.check(
        "hinder(F2, P2) fails with NotWasteful",
        hin(&f2) == Err(SolveError::NotWasteful { a_hat: 1, b_hat: 1 }),
    );

    // bipartite
    let f4g = BipartiteGraph::new(
        names(&["a1", "a2"]),
        names(&["b"]),
        [("a1", "b"), ("a2", "b")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect(),
    )
    .unwrap();
    ex.check("orienting the F4 graph gives F4", orient_bipartite(&f4g) == *f4.web());
    let ab: BTreeSet<(String, String)> = [("a1".to_string(), "b".to_string())].into();
    let lw = matching_to_linkage(&f4g, &ab).unwrap();
    ex.check(
        "F4 graph with {a1b}: Â={a2}, B̂=∅, wasteful",
        set(&lw, lw.a_hat()) == "a2" && lw.b_hat().is_empty() && lw.is_wasteful(),
    );
    let lw0 = matching_to_linkage(&f4g, &BTreeSet::new()).unwrap();
    ex.check(
        "F4 graph with ∅: Â={a1 a2}, B̂={b}, wasteful",
        set(&lw0, lw0.a_hat()) == "a1 a2" && set(&lw0, lw0.b_hat()) == "b" && lw0.is_wasteful(),
    );
    let h = hindered_set_from_hindrance(&f4g, &cert(&f4, &["b"], &[&["a1", "b"]])).unwrap();
    let expected = HinderedSet {
        x: vec!["a1".into(), "a2".into()],
        matching: vec![("a1".into(), "b".into())],
    };
    ex.check(
        "F4 graph hindered set X={a1 a2}, matching {a1b}",
        h == expected && verify_hindered_set(&f4g, &h),
    );
    ex.check(
        "an F1 certificate is rejected for the F4 graph",
        hindered_set_from_hindrance(&f4g, &hinder_from_wasteful(&f1).unwrap())
            .is_err_and(|e| e.code() == "InvalidCertificate"),
    );
    ex.check(
        "X={a1} with matching {a1b} is not hindered",
        !verify_hindered_set(
            &f4g,
            &HinderedSet {
                x: vec!["a1".into()],
                matching: vec![("a1".into(), "b".into())],
            },
        ),
    );
    ex.check(
        "X=∅ is not hindered",
        !verify_hindered_set(
            &f4g,
            &HinderedSet {
                x: vec![],
                matching: vec![],
            },
        ),
    );
    let from_solver = hindered_set_from_hindrance(&f4g, &hinder_from_wasteful(&lw0).unwrap()).unwrap();
    ex.check(
        "empty matching on the F4 graph gives X={a1 a2}",
        from_solver.x == ["a1", "a2"],
    );

    // elimination
    let classes = |lw: &LinkedWeb, k| {
        let (o, u) = classify_popularity(lw, k, budget).unwrap();
        (set(lw, &o), set(lw, &u))
    };
    ex.check(
        "popularity (F4, k=2): O={b}, U=∅",
        classes(&f4, 2) == ("b".into(), String::new()),
    );
    ex.check(
        "popularity (F1, k=2): O=∅, U={b2}",
        classes(&f1, 2) == (String::new(), "b2".into()),
    );
    ex.check(
        "popularity (F4, k=3): O=∅, U={b}",
        classes(&f4, 3) == (String::new(), "b".into()),
    );
    let mut s0 = initial_state(f1.clone(), 2, budget).unwrap();
    let mut s1 = elimination_step(&mut s0, 2, budget).unwrap();
    let d0 = f1.web().digraph();
    let removed: Vec<String> = d0
        .edges()
        .filter(|&(u, v)| !s1.linked.web().digraph().has_edge(u, v))
        .map(|(u, v)| format!("{}{}", d0.name(u), d0.name(v)))
        .collect();
    ex.check(
        "F1 step 0: B_1={b1 v}, E_1 = E minus vb1 vb2, P_1={a1 v}, W_0={b1}",
        set(&f1, s1.linked.web().sinks()) == "b1 v"
            && removed == ["vb1", "vb2"]
            && paths(&s1.linked, s1.linked.paths()) == ["a1 v"]
            && s0.wn.as_ref().map(|w| set(&f1, w)).as_deref() == Some("b1"),
    );
    let s2 = elimination_step(&mut s1, 2, budget).unwrap();
    ex.check(
        "F1 step 1: U_1={b1}, B_2={v}, E_2=E_1, P_2={a1 v}, W_1=∅",
        set(&f1, &s1.unpopular) == "b1"
            && set(&f1, s2.linked.web().sinks()) == "v"
            && s2.linked.web().digraph() == s1.linked.web().digraph()
            && paths(&s2.linked, s2.linked.paths()) == ["a1 v"]
            && s1.wn.as_ref().is_some_and(BTreeSet::is_empty),
    );
    let mut s4 = initial_state(f4a.clone(), 2, budget).unwrap();
    let s4n = elimination_step(&mut s4, 2, budget).unwrap();
    ex.check(
        "(F4, {a1 b}): O=U=∅ and the step is the identity",
        s4.popular.is_empty() && s4.unpopular.is_empty() && s4n.linked == f4a,
    );
    let tr1 = run_elimination(f1.clone(), Some(2), 10, budget).unwrap();
    let lim = tr1.limit.clone().unwrap();
    ex.check(
        "run (F1, k=2): fixpoint after 2 steps, B_lim={v}, P_lim={a1 v}, B̂_lim=∅",
        tr1.termination == Termination::Fixpoint
            && tr1.states.len() == 3
            && set(&lim, lim.web().sinks()) == "v"
            && paths(&lim, lim.paths()) == ["a1 v"]
            && lim.b_hat().is_empty(),
    );
    let tr4 = run_elimination(f4.clone(), Some(2), 10, budget).unwrap();
    ex.check(
        "run (F4, k=2): fixpoint at step 0 with O_0={b}",
        tr4.termination == Termination::Fixpoint && tr4.states.len() == 1 && set(&f4, &tr4.states[0].popular) == "b",
    );
    let tr3 = run_elimination(f3.clone(), Some(1), 10, budget).unwrap();
    ex.check(
        "run (F3, {x}, k=1): O_0={b}, immediate fixpoint",
        tr3.termination == Termination::Fixpoint && tr3.states.len() == 1 && set(&f3, &tr3.states[0].popular) == "b",
    );
    let rep1 = check_trace_invariants(&tr1, f1.web(), budget);
    let f1_trails = enumerate_alternating_trails(&f1, budget).unwrap().len();
    ex.check(
        "F1 trace passes every clause; (c)/(d) range over 6 alternating trails of (F1, P1)",
        rep1.passed() && rep1.skipped().next().is_none() && f1_trails == 6,
    );
    ex.check(
        "F4 trace passes",
        check_trace_invariants(&tr4, f4.web(), budget).passed(),
    );
    let mut corrupted = tr1.clone();
    let s1w = corrupted.states[1].linked.web().clone();
    let only_b1 = s1w
        .with_digraph_and_sinks(s1w.digraph().clone(), f1.web().vertex_set(["b1"]).unwrap())
        .unwrap();
    corrupted.states[1].linked = LinkedWeb::new(only_b1, vec![]).unwrap();
    let rep = check_trace_invariants(&corrupted, f1.web(), budget);
    ex.check(
        "corrupted trace (B_1 without v) fails (b) at n=1",
        matches!(rep.outcome(Clause::SinksSeparate, 1), Some(Outcome::Fail(_))),
    );

    // oracle
    ex.check(
        "brute hindrance for F1 is present and valid",
        brute_find_hindrance(f1.web())
            .unwrap()
            .is_some_and(|c| validate_hindrance(f1.web(), &c).is_ok()),
    );
    ex.check(
        "brute hindrance for F2 is absent",
        brute_find_hindrance(f2.web()).unwrap().is_none(),
    );
    let lone = validate_web(&RawDigraph::with_edges(["a"], []), &names(&["a"]), &BTreeSet::new()).unwrap();
    ex.check(
        "A={a}, B=∅: the empty certificate",
        brute_find_hindrance(&lone).unwrap() == Some(HindranceCertificate::default()),
    );
    let p = RandomWeb {
        seed: 1,
        vertices: 6,
        edge_prob: 0.3,
        sources: 2,
        sinks: 2,
        overlap: false,
    };
    ex.check(
        "gen(1, 6, 0.3, 2, 2) is deterministic",
        gen_random_web(p).unwrap() == gen_random_web(p).unwrap(),
    );
    ex.check(
        "gen seeds 1 and 2 differ",
        gen_random_web(p).unwrap() != gen_random_web(RandomWeb { seed: 2, ..p }).unwrap(),
    );
    ex.check(
        "gen with p=0 is edgeless",
        gen_random_web(RandomWeb { edge_prob: 0.0, ..p })
            .unwrap()
            .digraph()
            .edge_count()
            == 0,
    );
    ex.0
}

fn paths_of(lw: &LinkedWeb, ts: &[Trail]) -> Vec<String> {
    let mut out: Vec<String> = ts.iter().map(|t| t.render(lw.web().digraph())).collect();
    out.sort();
    out
}
