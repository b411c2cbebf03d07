//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Criteria 4 to 8 return a transcript of everything they emitted so that
//! criterion 12 can rerun them and compare byte for byte.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cfcolor::cliquesum::{
    adapt_colorability, combine_extendable, extendability_audit, fold_tree_decomposition,
    AuditConfig, CliqueSumError, CliqueSumSpec, ExtendableColorer, TorsoSpec,
};
use cfcolor::coloring::{
    respects_lists, verify_conflict_free, verify_odd, verify_proper, verify_proper_s_achieved,
};
use cfcolor::decomp::{
    bfs_layering, forest_decomposition, grid_column_decomposition, grid_row_layering,
    path_decomposition, random_decomposed_graph,
};
use cfcolor::exact::{
    exact_chromatic, exact_relations_check, refute_choosability, BruteExtendable,
    ChoosabilityConfig, ChoosabilityResult, ExactConfig, ExactKind,
};
use cfcolor::graph::{generators, one_subdivision, EdgeSet};
use cfcolor::ordering::{color_by_plan, random_plan};
use cfcolor::structured::{
    build_layered_plan, build_product_plan, color_minor_degenerate, surface_profile,
    ExactListColorer, MinorColorRequest,
};
use cfcolor::{AchievementSpec, Coloring, DegeneracyProfile, Graph, ListAssignment, VertexSet};

const SEED: u64 = 20240601;

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
    transcript: String,
    /// Conflict-free colorings emitted, kept for the odd-coloring check.
    emitted: Vec<(Graph, Coloring)>,
}

impl Outcome {
    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    fn record(&mut self, label: &str, phi: &Coloring) {
        self.transcript.push_str(label);
        self.transcript.push(' ');
        self.transcript.push_str(&serde_json::to_string(phi).expect("serializable"));
        self.transcript.push('\n');
    }

    fn within(&mut self, what: &str, took: Duration, limit: Duration) {
        self.notes.push(format!("{what} {:.2?}", took));
        if took > limit {
            self.fail(format!("{what} took {took:.2?}, limit {limit:.0?}"));
        }
    }
}

fn exact(g: &Graph, kind: ExactKind, cap: usize) -> usize {
    let cfg = ExactConfig { max_vertices: cap, jobs: 1 };
    exact_chromatic(g, &kind, &cfg).expect("within cap").value
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.9);
    generators::random_gnp(n, p, rng.gen())
}

fn c1() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let mut expect = |label: String, got: usize, want: usize| {
        if got != want {
            out.failures.push(format!("{label} = {got}, expected {want}"));
        }
    };
    expect("pcf(C_5)".into(), exact(&generators::cycle(5), ExactKind::Pcf, 12), 5);
    expect("pcf(P_3)".into(), exact(&generators::path(3), ExactKind::Pcf, 12), 3);
    for n in 1..=8 {
        expect(format!("pcf(K_{n})"), exact(&generators::complete(n), ExactKind::Pcf, 12), n);
    }
    for n in 3..=8 {
        expect(format!("icf(K_{n})"), exact(&generators::complete(n), ExactKind::Icf, 12), 3);
    }
    let mut rng = generators::rng(SEED);
    let graphs: Vec<Graph> = (0..200).map(|_| random_graph(&mut rng, 8)).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let (pcfc, chi) = (exact(g, ExactKind::Pcfc, 12), exact(g, ExactKind::Proper, 12));
            (pcfc != chi).then(|| format!("random graph {i}: pcfc {pcfc} != chi {chi}"))
        })
        .collect();
    out.failures.extend(bad);
    out.within("total", start.elapsed(), Duration::from_secs(10));
    out
}

fn c2() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let mut rng = generators::rng(SEED + 2);
    let graphs: Vec<Graph> = (0..500).map(|_| random_graph(&mut rng, 9)).collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let r = exact_relations_check(g, &ExactConfig::default()).expect("within cap");
            (!r.holds()).then(|| format!("random graph {i}: {:?}", r.violations))
        })
        .collect();
    out.failures.extend(bad);
    out.within("total", start.elapsed(), Duration::from_secs(300));
    out
}

/// All graphs on `n` vertices, one per isomorphism class.
fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| (k..n).map(move |j| {
                let mut q = p.clone();
                q.swap(k, j);
                q
            }))
            .collect();
    }
    let code = |mask: u32, p: &[usize]| -> u32 {
        pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, &(u, v))| {
            let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
            acc | 1 << pairs.iter().position(|&e| e == (a, b)).expect("pair")
        })
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..1u32 << pairs.len() {
        let canon = perms.iter().map(|p| code(mask, p)).min().expect("identity");
        if seen.insert(canon) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges).expect("valid"));
        }
    }
    out
}

fn c3() -> Outcome {
    let mut out = Outcome::default();
    let graphs: Vec<Graph> = (1..=5).flat_map(graphs_up_to_iso).collect();
    out.notes.push(format!("{} graphs", graphs.len()));
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|h| {
            let chi = exact(h, ExactKind::Proper, 12);
            let sub = one_subdivision(h);
            let pcf = exact(&sub.graph, ExactKind::Pcf, 16);
            (pcf < chi).then(|| format!("H with edges {:?}: pcf(sub) {pcf} < chi {chi}", h.edges().collect::<Vec<_>>()))
        })
        .collect();
    out.failures.extend(bad);
    out
}

fn c4(seed: u64) -> Outcome {
    let mut out = Outcome::default();
    let mut rng = generators::rng(seed);
    let planar = surface_profile(0);
    let mut cases: Vec<(&str, Graph, DegeneracyProfile, usize)> = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=40);
        cases.push(("tree", generators::random_tree(n, rng.gen()), DegeneracyProfile::degenerate(1.0), 3));
    }
    for _ in 0..100 {
        let n = rng.gen_range(3..=40);
        cases.push(("outerplanar", generators::random_maximal_outerplanar(n, rng.gen()), DegeneracyProfile::degenerate(2.0), 5));
    }
    for _ in 0..50 {
        let n = rng.gen_range(4..=40);
        cases.push(("planar", generators::random_planar_triangulation(n, rng.gen()), planar.profile, planar.list_size));
    }
    let cf = AchievementSpec::conflict_free();
    for (i, (family, g, profile, k)) in cases.into_iter().enumerate() {
        let n = g.vertex_count();
        let lists = ListAssignment::random(n, k, 2 * k, &mut rng);
        let start = Instant::now();
        let res = color_minor_degenerate(&MinorColorRequest::new(g.clone(), lists.clone(), profile));
        let took = start.elapsed();
        if took > Duration::from_secs(1) {
            out.fail(format!("{family} #{i} took {took:.2?}"));
        }
        let phi = match res {
            Ok(r) => r.coloring,
            Err(e) => {
                out.fail(format!("{family} #{i}: {e}"));
                continue;
            }
        };
        if let Err(e) = verify_proper_s_achieved(&g, &phi, &cf, None) {
            out.fail(format!("{family} #{i}: {e}"));
        }
        if !respects_lists(&phi, &lists) {
            out.fail(format!("{family} #{i}: coloring leaves the lists"));
        }
        if n <= 9 {
            let pcf = exact(&g, ExactKind::Pcf, 12);
            if phi.colors_used() < pcf {
                out.fail(format!("{family} #{i}: {} colors used, below pcf {pcf}", phi.colors_used()));
            }
        }
        out.record(&format!("{family}#{i}"), &phi);
        out.emitted.push((g, phi));
    }
    out
}

fn c5(seed: u64) -> Outcome {
    let mut out = Outcome::default();
    let mut rng = generators::rng(seed);
    for i in 0..1000 {
        let g = random_graph(&mut rng, 30);
        let plan = random_plan(&g, rng.gen_range(0..=3), &mut rng);
        let widths = match cfcolor::ordering::validate_plan(&g, &plan) {
            Ok(w) => w,
            Err(e) => {
                out.fail(format!("plan #{i} invalid: {e}"));
                continue;
            }
        };
        let k = widths.list_size();
        let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut rng);
        match color_by_plan(&g, &plan, &lists, i < 100) {
            Ok(r) => {
                let phi = r.coloring;
                if let Err(e) = verify_proper(&g, &phi).and_then(|_| verify_conflict_free(&g, &phi).map(drop)) {
                    out.fail(format!("run #{i}: {e}"));
                }
                if !respects_lists(&phi, &lists) {
                    out.fail(format!("run #{i}: coloring leaves the lists"));
                }
                out.record(&format!("plan#{i}"), &phi);
                out.emitted.push((g, phi));
            }
            Err(e) => out.fail(format!("run #{i}: {e}")),
        }
    }
    out
}

fn c6(seed: u64) -> Outcome {
    let mut out = Outcome::default();
    let mut rng = generators::rng(seed);
    for i in 0..100 {
        let (label, g, td, lay) = match i % 4 {
            0 => {
                let n = rng.gen_range(2..=30);
                let g = generators::path(n);
                let lay = bfs_layering(&g, &[0].into_iter().collect());
                ("path", g, path_decomposition(n), lay)
            }
            1 => {
                let g = generators::random_tree(rng.gen_range(2..=30), rng.gen());
                let td = forest_decomposition(&g).expect("tree");
                let lay = bfs_layering(&g, &VertexSet::new());
                ("tree", g, td, lay)
            }
            s => {
                let (r, c) = (rng.gen_range(2..=6), rng.gen_range(3..=8));
                let span = s;
                ("grid", generators::grid(r, c), grid_column_decomposition(r, c, span), grid_row_layering(r, c))
            }
        };
        let lp = match build_layered_plan(&g, &td, &lay) {
            Ok(lp) => lp,
            Err(e) => {
                out.fail(format!("{label} #{i}: {e}"));
                continue;
            }
        };
        let w = lp.w;
        if !(1..=3).contains(&w) || lp.widths.w1 > 3 * w || lp.widths.w2 > 5 * w {
            out.fail(format!("{label} #{i}: w = {w}, widths {:?}", lp.widths));
        }
        let k = lp.guaranteed_list_size();
        let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut rng);
        match color_by_plan(&g, &lp.plan, &lists, false) {
            Ok(r) => {
                let phi = r.coloring;
                if let Err(e) = verify_proper(&g, &phi).and_then(|_| verify_conflict_free(&g, &phi).map(drop)) {
                    out.fail(format!("{label} #{i}: {e}"));
                }
                if !respects_lists(&phi, &lists) {
                    out.fail(format!("{label} #{i}: coloring leaves the lists"));
                }
                out.record(&format!("{label}#{i} w={w}"), &phi);
                out.emitted.push((g, phi));
            }
            Err(e) => out.fail(format!("{label} #{i}: {e}")),
        }
    }
    out
}

fn c7(seed: u64) -> Outcome {
    let mut out = Outcome::default();
    let mut rng = generators::rng(seed);
    for i in 0..100 {
        let (label, h, td, q) = if i % 2 == 0 {
            let (a, b) = (rng.gen_range(2..=7), rng.gen_range(3..=7));
            ("path-path", generators::path(a), path_decomposition(a), generators::path(b))
        } else {
            let h = generators::random_tree(rng.gen_range(2..=8), rng.gen());
            let td = forest_decomposition(&h).expect("tree");
            ("tree-c5", h, td, generators::cycle(5))
        };
        let pp = match build_product_plan(&h, &td, &q) {
            Ok(pp) => pp,
            Err(e) => {
                out.fail(format!("{label} #{i}: {e}"));
                continue;
            }
        };
        let k = pp.guaranteed_list_size();
        if k != 15 {
            out.fail(format!("{label} #{i}: list size {k}, expected 15"));
        }
        let g = pp.product.graph.clone();
        let lists = ListAssignment::random(g.vertex_count(), k, 2 * k, &mut rng);
        match color_by_plan(&g, &pp.plan, &lists, false) {
            Ok(r) => {
                let phi = r.coloring;
                if let Err(e) = verify_proper(&g, &phi).and_then(|_| verify_conflict_free(&g, &phi).map(drop)) {
                    out.fail(format!("{label} #{i}: {e}"));
                }
                if !respects_lists(&phi, &lists) {
                    out.fail(format!("{label} #{i}: coloring leaves the lists"));
                }
                out.record(&format!("{label}#{i}"), &phi);
                out.emitted.push((g, phi));
            }
            Err(e) => out.fail(format!("{label} #{i}: {e}")),
        }
    }
    out
}

/// A random graph on `n` vertices with a random clique of size `q` planted,
/// together with that clique.
fn side(rng: &mut ChaCha8Rng, n: usize, q: usize) -> (Graph, Vec<usize>) {
    let g = generators::random_gnp(n, rng.gen_range(0.2..0.8), rng.gen());
    let mut verts: Vec<usize> = (0..n).collect();
    rand::seq::SliceRandom::shuffle(verts.as_mut_slice(), rng);
    verts.truncate(q);
    let mut planted = EdgeSet::new();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            planted.insert(u, v);
        }
    }
    (g.with_edges(&planted).expect("in range"), verts)
}

fn brute_side(g: &Graph, q: &[usize], extra: Option<(usize, usize)>, k: usize, spec: &AchievementSpec) -> Box<dyn ExtendableColorer> {
    let mut frame: Vec<VertexSet> = vec![q.iter().copied().collect()];
    if let Some((u, v)) = extra {
        frame.push([u, v].into_iter().collect());
    }
    let lists = ListAssignment::uniform(g.vertex_count(), k);
    Box::new(BruteExtendable::new(g.clone(), frame, lists, 2, spec.clone()).expect("small side"))
}

fn c8(seed: u64) -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let mut rng = generators::rng(seed);
    let specs = [AchievementSpec::conflict_free(), AchievementSpec::odd()];
    let audit_cfg = AuditConfig { seed, max_h_subsets: 64, ..AuditConfig::default() };

    // clique-sums of brute-force sides
    let mut sums = Vec::new();
    for _ in 0..100 {
        let n1 = rng.gen_range(1..=4);
        let q = rng.gen_range(0..=n1.min(2));
        let n2 = rng.gen_range(q.max(1)..=5 + q - n1);
        let (left, q_left) = side(&mut rng, n1, q);
        let (right, q_right) = side(&mut rng, n2, q);
        let dropped = if q == 2 && rng.gen_bool(0.3) { vec![(q_left[0], q_left[1])] } else { Vec::new() };
        let extra_l = left.edges().next().filter(|_| rng.gen_bool(0.5));
        let extra_r = right.edges().last().filter(|_| rng.gen_bool(0.5));
        let spec = CliqueSumSpec { left, right, q_left, q_right, dropped };
        sums.push((spec, extra_l, extra_r));
    }
    let (mut exhaustive, mut checked) = (0, 0);
    let reports: Vec<(usize, String, Result<cfcolor::cliquesum::AuditReport, CliqueSumError>)> = sums
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, (spec, el, er))| {
            let k = spec.left.vertex_count().max(spec.right.vertex_count()) + 4;
            specs.iter().map(move |s| {
                let res = combine_extendable(
                    brute_side(&spec.left, &spec.q_left, *el, k, s),
                    brute_side(&spec.right, &spec.q_right, *er, k, s),
                    spec,
                )
                .map(|c| extendability_audit(&c, &audit_cfg));
                (i, s.to_string(), res)
            })
        })
        .collect();
    for (i, s, res) in reports {
        match res {
            Ok(r) => {
                if r.exhaustive {
                    exhaustive += 1;
                }
                checked += r.checked;
                out.transcript.push_str(&format!("sum#{i} S={s} checked={} exhaustive={}\n", r.checked, r.exhaustive));
                if let Some(f) = r.failure {
                    out.fail(format!("sum #{i} S={s}: {} on {:?}", f.reason, f.request));
                }
            }
            Err(e) => out.fail(format!("sum #{i} S={s}: {e}")),
        }
    }
    out.notes.push(format!("{checked} sum requests"));
    if exhaustive != 2 * sums.len() {
        out.fail(format!("only {exhaustive} of {} sum audits were exhaustive", 2 * sums.len()));
    }

    // folds of adapted torso colorers, lists of size t + 2ξ
    for i in 0..50 {
        let nodes = rng.gen_range(2..=4);
        let bag = rng.gen_range(2..=3);
        let adhesion = rng.gen_range(1..bag);
        let (g, td) = random_decomposed_graph(nodes, bag, adhesion, 0.7, rng.gen());
        let xi = td.adhesion();
        let t = bag;
        let k = t + 2 * xi;
        let lists = ListAssignment::random(g.vertex_count(), k, k + 3, &mut rng);
        let s = specs[i % 2].clone();
        let factory = |ts: &TorsoSpec| -> Result<Box<dyn ExtendableColorer>, CliqueSumError> {
            let c = adapt_colorability(ts.graph.clone(), ts.frame.clone(), ts.lists.clone(), ts.adhesion, s.clone(), Arc::new(ExactListColorer::default()))?;
            Ok(Box::new(c))
        };
        let folded = match fold_tree_decomposition(&g, &td, &lists, factory) {
            Ok(f) => f,
            Err(e) => {
                out.fail(format!("fold #{i}: {e}"));
                continue;
            }
        };
        match folded.color() {
            Ok(phi) => {
                if let Err(e) = verify_proper_s_achieved(&g, &phi, &s, None) {
                    out.fail(format!("fold #{i}: {e}"));
                }
                if !respects_lists(&phi, &lists) {
                    out.fail(format!("fold #{i}: coloring leaves the lists"));
                }
                out.record(&format!("fold#{i} S={s}"), &phi);
            }
            Err(e) => out.fail(format!("fold #{i}: {e}")),
        }
        let cfg = AuditConfig { seed: seed + i as u64, samples: 100, ..AuditConfig::default() };
        let r = extendability_audit(&folded, &cfg);
        out.transcript.push_str(&format!("fold#{i} audit checked={}\n", r.checked));
        if let Some(f) = r.failure {
            out.fail(format!("fold #{i} audit: {} on {:?}", f.reason, f.request));
        }
    }
    out.within("total", start.elapsed(), Duration::from_secs(600));
    out
}

fn c9() -> Outcome {
    let mut out = Outcome::default();
    for (label, g, k, universe) in [("C_5", generators::cycle(5), 4, 4), ("P_3", generators::path(3), 2, 4)] {
        let cfg = ChoosabilityConfig { universe: Some(universe), ..Default::default() };
        let start = Instant::now();
        match refute_choosability(&g, k, &ExactKind::Pcf, &cfg) {
            Ok(ChoosabilityResult::Counterexample(l)) => {
                out.notes.push(format!("{label}: {:?}", l.lists));
            }
            other => out.fail(format!("{label}: expected a counterexample, got {other:?}")),
        }
        out.within(label, start.elapsed(), Duration::from_secs(1));
    }
    out
}

fn c10() -> Outcome {
    let mut out = Outcome::default();
    for (rho, want) in [(0, 11), (1, 11), (2, 13)] {
        let got = surface_profile(rho).list_size;
        if got != want {
            out.fail(format!("surface_profile({rho}) = {got}, expected {want}"));
        }
    }
    out
}

fn c11(runs: &[&Outcome]) -> Outcome {
    let mut out = Outcome::default();
    let mut count = 0;
    for r in runs {
        for (g, phi) in &r.emitted {
            count += 1;
            if let Err(e) = verify_odd(g, phi) {
                out.fail(format!("emitted coloring #{count}: {e}"));
            }
        }
    }
    out.notes.push(format!("{count} colorings"));
    out
}

type Criterion = fn(u64) -> Outcome;

fn c12(first: &BTreeMap<usize, String>) -> Outcome {
    let mut out = Outcome::default();
    let rerun: [(usize, Criterion); 5] = [(4, c4), (5, c5), (6, c6), (7, c7), (8, c8)];
    for (n, f) in rerun {
        if f(SEED + n as u64).transcript != first[&n] {
            out.fail(format!("criterion {n} output changed on rerun"));
        }
    }
    out
}

fn report(n: usize, what: &str, o: &Outcome) -> bool {
    let pass = o.failures.is_empty();
    let notes = if o.notes.is_empty() { String::new() } else { format!(" ({})", o.notes.join(", ")) };
    println!("criterion {n:>2}: {} {what}{notes}", if pass { "PASS" } else { "FAIL" });
    for f in o.failures.iter().take(10) {
        println!("    {f}");
    }
    if o.failures.len() > 10 {
        println!("    ... {} more", o.failures.len() - 10);
    }
    pass
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report(1, "tight values", &c1());
    ok &= report(2, "inequality chain", &c2());
    ok &= report(3, "1-subdivision lower bound", &c3());
    let r4 = c4(SEED + 4);
    ok &= report(4, "minor-degenerate colorer", &r4);
    let r5 = c5(SEED + 5);
    ok &= report(5, "ordering engine", &r5);
    let r6 = c6(SEED + 6);
    ok &= report(6, "layered pipeline", &r6);
    let r7 = c7(SEED + 7);
    ok &= report(7, "strong products", &r7);
    let r8 = c8(SEED + 8);
    ok &= report(8, "clique-sum machinery", &r8);
    ok &= report(9, "choosability refutation", &c9());
    ok &= report(10, "surface arithmetic", &c10());
    ok &= report(11, "odd-coloring path", &c11(&[&r4, &r5, &r6, &r7]));
    let first: BTreeMap<usize, String> = [(4, r4), (5, r5), (6, r6), (7, r7), (8, r8)]
        .into_iter()
        .map(|(n, o)| (n, o.transcript))
        .collect();
    ok &= report(12, "determinism", &c12(&first));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
