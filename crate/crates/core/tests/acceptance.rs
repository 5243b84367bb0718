//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits non-zero if any criterion fails.
//!
//! Pass criterion names (e.g. `C8`) to run only those.

mod common;

use std::fmt::Write as _;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_graphs, blossom_example, letter, spell, word};
use priority_matching::bench::{growth_ratios, run_scaling, ScalingConfig};
use priority_matching::driver::bipartite_two_priority_matching_observed;
use priority_matching::io::{
    generate_bipartite, generate_random, parse_graph, render_graph, render_matching, PrioritySpec,
};
use priority_matching::oracle::summarize;
use priority_matching::{
    find_i_augmenting_path, max_priority_matching, max_priority_matching_observed,
    max_size_matching, oracle_has_i_augmenting_path, priority_score, two_priority_matching,
    validate_i_augmenting, validate_set_augmenting, AugPath, BipartiteSearch, BlossomSearch,
    EdgeCase, EnumerationBudget, ForestView, Graph, Matching, Observer, Priority, Step, VertexId,
};

/// Keeps the first few failure messages and counts the rest.
#[derive(Default)]
struct Failures {
    count: usize,
    shown: Vec<String>,
}

impl Failures {
    fn push(&mut self, msg: String) {
        self.count += 1;
        if self.shown.len() < 5 {
            self.shown.push(msg);
        }
    }

    fn verdict(&self, ok: String) -> Result<String, String> {
        if self.count == 0 {
            Ok(ok)
        } else {
            Err(format!(
                "{} failures; first: {}",
                self.count,
                self.shown.join(" | ")
            ))
        }
    }
}

/// Checks every failed blossom search against the general failure properties.
#[derive(Default)]
struct FailureAudit {
    failed: usize,
    violations: Failures,
}

impl Observer for FailureAudit {
    fn on_search_end(&mut self, search: &BlossomSearch<'_>, found: Option<&AugPath>) {
        if found.is_none() {
            self.failed += 1;
            if let Err(v) = search.check_failure_properties() {
                self.violations.push(format!("i={} {v}", search.target()));
            }
        }
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    score: Failures,
    size: Failures,
    audit: FailureAudit,
    bipartite_failed: usize,
}

impl Tally {
    /// Solves `g`, compares against the oracle and audits every failed search.
    fn check(&mut self, g: &Graph, tag: &str) {
        self.instances += 1;
        let report = max_priority_matching_observed(g, &mut self.audit);
        let oracle =
            summarize(g, &EnumerationBudget::default()).expect("instance within oracle budget");
        if report.score != oracle.best_score {
            self.score.push(format!(
                "{tag}: solver {} oracle {}",
                report.score, oracle.best_score
            ));
        }
        let size = max_size_matching(g).matching.len();
        if report.matching.len() != size || size != oracle.max_cardinality {
            self.size.push(format!(
                "{tag}: priority {} size {} oracle {}",
                report.matching.len(),
                size,
                oracle.max_cardinality
            ));
        }
        if g.is_bipartite() {
            let set: Vec<VertexId> = g
                .vertices()
                .filter(|&x| g.priority(x) == Priority::HIGHEST)
                .collect();
            self.audit_bipartite(g, &set, tag);
        }
    }

    fn audit_bipartite(&mut self, g: &Graph, set: &[VertexId], tag: &str) {
        let violations = &mut self.audit.violations;
        let failed = &mut self.bipartite_failed;
        bipartite_two_priority_matching_observed(
            g,
            set,
            &mut |search: &BipartiteSearch<'_>, found| match found {
                Some(p) => {
                    if let Err(e) =
                        validate_set_augmenting(g, search.matching(), search.in_set(), p)
                    {
                        violations.push(format!("{tag}: bipartite path {e}"));
                    }
                }
                None => {
                    *failed += 1;
                    if let Err(v) = search.check_failure_properties() {
                        violations.push(format!("{tag}: bipartite {v}"));
                    }
                }
            },
        )
        .expect("graph is bipartite");
    }
}

fn distinct_priorities(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    p.shuffle(rng);
    p
}

/// Uniform, two-class, all-distinct and unrestricted random priorities.
fn priority_schemes(n: usize, rng: &mut ChaCha8Rng) -> [Vec<u32>; 4] {
    let top = n as u32;
    [
        vec![1; n],
        (0..n).map(|_| rng.random_range(1..=2.min(top))).collect(),
        distinct_priorities(n, rng),
        (0..n).map(|_| rng.random_range(1..=top)).collect(),
    ]
}

fn exhaustive() -> Tally {
    let mut tally = Tally::default();
    for n in 1..=6u32 {
        for (k, edges) in all_graphs(n).enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64((u64::from(n) << 32) | k as u64);
            for priorities in priority_schemes(n as usize, &mut rng) {
                let g = Graph::new(n as usize, &edges, &priorities).unwrap();
                tally.check(&g, &format!("n={n} edges={edges:?} rho={priorities:?}"));
            }
        }
    }
    tally
}

fn random_small(seed: u64, max_n: usize, max_m: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..=max_m.min(n * (n - 1) / 2));
    let spec = match rng.random_range(0..3) {
        0 => PrioritySpec::Full,
        1 => PrioritySpec::Uniform(vec![1, 2.min(n as u32)]),
        _ => PrioritySpec::Uniform(vec![1]),
    };
    let g = generate_random(n, m, &spec, seed).unwrap();
    if rng.random_bool(0.25) {
        g.with_priorities(&distinct_priorities(n, &mut rng))
            .unwrap()
    } else {
        g
    }
}

fn randomized() -> Tally {
    let mut tally = Tally::default();
    for seed in 0..1000 {
        let g = random_small(seed, 10, 20);
        tally.check(&g, &format!("seed={seed}"));
    }
    tally
}

/// At every search end, compares the solver's answer for each `i` up to the
/// current class with the oracle, on the driver's intermediate matching.
#[derive(Default)]
struct PathExistence {
    audit: FailureAudit,
    mismatches: Failures,
    comparisons: usize,
    tag: String,
}

impl Observer for PathExistence {
    fn on_search_end(&mut self, search: &BlossomSearch<'_>, found: Option<&AugPath>) {
        self.audit.on_search_end(search, found);
        let g = search.graph();
        let m = search.matching();
        let target = search.target();
        if let Some(p) = found {
            if let Err(e) = validate_i_augmenting(g, m, target, p) {
                self.mismatches
                    .push(format!("{}: invalid path {e}", self.tag));
            }
        }
        for i in 1..=target.get() {
            let i = Priority::new(i);
            let solver = if i == target {
                found.is_some()
            } else {
                find_i_augmenting_path(g, m, i).is_some()
            };
            let oracle =
                oracle_has_i_augmenting_path(g, m, i, &EnumerationBudget::default()).unwrap();
            self.comparisons += 1;
            if solver != oracle {
                self.mismatches.push(format!(
                    "{}: i={i} solver {solver} oracle {oracle}",
                    self.tag
                ));
            }
        }
    }
}

fn path_existence() -> (PathExistence, Tally) {
    let mut check = PathExistence::default();
    let mut bip = Tally::default();
    for seed in 0..500 {
        let g = random_small(10_000 + seed, 10, 18);
        check.tag = format!("seed={}", 10_000 + seed);
        max_priority_matching_observed(&g, &mut check);
        if g.is_bipartite() {
            let set: Vec<VertexId> = g
                .vertices()
                .filter(|&x| g.priority(x) == Priority::HIGHEST)
                .collect();
            bip.audit_bipartite(&g, &set, &check.tag);
        }
    }
    (check, bip)
}

fn random_bipartite(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left = rng.random_range(1..=6);
    let right = rng.random_range(1..=6);
    let density = rng.random_range(0.15..0.85);
    generate_bipartite(left, right, density, &PrioritySpec::Uniform(vec![1]), seed).unwrap()
}

fn max_degree_coverage() -> Result<String, String> {
    let mut failures = Failures::default();
    let mut checked = 0;
    let mut seed = 20_000;
    while checked < 200 {
        let g = random_bipartite(seed);
        seed += 1;
        if g.m() == 0 {
            continue;
        }
        checked += 1;
        let top = g.vertices().map(|x| g.degree(x)).max().unwrap();
        let set: Vec<VertexId> = g.vertices().filter(|&x| g.degree(x) == top).collect();
        let m = two_priority_matching(&g, &set).matching;
        if let Some(x) = set.iter().find(|&&x| !m.is_matched(x)) {
            failures.push(format!("seed={} vertex {x} unmatched", seed - 1));
        }
    }
    failures.verdict(format!(
        "{checked} bipartite graphs, every maximum-degree vertex matched"
    ))
}

fn bipartite_agreement() -> Result<String, String> {
    let mut failures = Failures::default();
    let mut audit = Tally::default();
    for seed in 0..500u64 {
        let g = random_bipartite(30_000 + seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let set: Vec<VertexId> = g.vertices().filter(|_| rng.random_bool(0.5)).collect();
        let general = two_priority_matching(&g, &set);
        let bipartite = priority_matching::bipartite_two_priority_matching(&g, &set).unwrap();
        if general.score != bipartite.score {
            failures.push(format!(
                "seed={seed}: blossom {} bipartite {}",
                general.score, bipartite.score
            ));
        }
        if general.blossoms != 0 {
            failures.push(format!("seed={seed}: {} blossoms", general.blossoms));
        }
        audit.audit_bipartite(&g, &set, &format!("seed={seed}"));
    }
    if audit.audit.violations.count > 0 {
        failures.push(format!(
            "{} bipartite property violations",
            audit.audit.violations.count
        ));
    }
    failures.verdict("500 instances, equal scores, zero blossoms".into())
}

fn scaling() -> Result<String, String> {
    let records = run_scaling(&ScalingConfig::default(), |_| {}).map_err(|e| e.to_string())?;
    let ratios = growth_ratios(&records);
    let mut summary = String::new();
    for r in &records {
        write!(
            summary,
            "n={} {:.1}ms; ",
            r.n,
            r.elapsed.as_secs_f64() * 1e3
        )
        .unwrap();
    }
    write!(
        summary,
        "ratios {:?}",
        ratios
            .iter()
            .map(|r| (r * 100.0).round() / 100.0)
            .collect::<Vec<_>>()
    )
    .unwrap();
    let last = records.last().unwrap();
    if ratios.iter().all(|&r| r <= 12.0) && last.elapsed < Duration::from_secs(60) {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn expect_step(step: Step, case: EdgeCase, what: &str) -> Result<(), String> {
    match step {
        Step::Continue(c) if c == case => Ok(()),
        other => Err(format!("{what}: expected {case}, got {other:?}")),
    }
}

/// Replays the edge order that builds both blossoms of the example.
fn grow_both_blossoms<'g>(g: &'g Graph, m: &'g Matching) -> Result<BlossomSearch<'g>, String> {
    let mut s = BlossomSearch::new(g, m, Priority::HIGHEST);
    let script = [
        ("ab", EdgeCase::Grow),
        ("cd", EdgeCase::Grow),
        ("cf", EdgeCase::Grow),
        ("hi", EdgeCase::Grow),
        ("jk", EdgeCase::Grow),
        ("hf", EdgeCase::Ignore),
        ("gd", EdgeCase::Ignore),
        ("gk", EdgeCase::Ignore),
        ("eg", EdgeCase::Blossom),
        ("mj", EdgeCase::Blossom),
    ];
    for (e, case) in script {
        let w = word(e);
        let step = s.select(w[0], w[1]).map_err(|err| format!("{e}: {err}"))?;
        expect_step(step, case, e)?;
    }
    let bases: Vec<String> = s.blossoms().iter().map(|b| spell(&[b.base])).collect();
    if bases != ["c", "j"] {
        return Err(format!("blossom bases {bases:?}"));
    }
    Ok(s)
}

fn found_path(step: Result<Step, priority_matching::SearchError>) -> Result<Vec<VertexId>, String> {
    match step {
        Ok(Step::Found(p)) => Ok(p.into_vertices()),
        other => Err(format!("expected a path, got {other:?}")),
    }
}

fn score_after(g: &Graph, m: &Matching, path: &[VertexId]) -> Result<Vec<u32>, String> {
    let mut next = m.clone();
    next.augment(g, path).map_err(|e| e.to_string())?;
    Ok(priority_score(g, &next).digits().to_vec())
}

/// An unscripted search must return a valid path, the oracle must agree a
/// path exists, and augmenting along it must score no worse than `reference`.
fn unscripted(g: &Graph, m: &Matching, reference: &str) -> Result<String, String> {
    let top = Priority::HIGHEST;
    let path = find_i_augmenting_path(g, m, top).ok_or("unscripted search found nothing")?;
    validate_i_augmenting(g, m, top, &path).map_err(|e| e.to_string())?;
    if !oracle_has_i_augmenting_path(g, m, top, &EnumerationBudget::default()).unwrap() {
        return Err("oracle found no improvement".into());
    }
    if score_after(g, m, path.vertices())? < score_after(g, m, &word(reference))? {
        return Err(format!(
            "{} scores below {reference}",
            spell(path.vertices())
        ));
    }
    Ok(spell(path.vertices()))
}

fn blossom_fixture() -> Result<String, String> {
    let (g, m) = blossom_example(true);

    let mut s = grow_both_blossoms(&g, &m)?;
    let first = found_path(s.select(letter('f'), letter('h')))?;
    if first != word("abcdegfh") {
        return Err(format!("edge fh gave {}", spell(&first)));
    }
    let mut s = grow_both_blossoms(&g, &m)?;
    let second = found_path(s.select(letter('k'), letter('g')))?;
    if second != word("hijmkgfcba") {
        return Err(format!("edge kg gave {}", spell(&second)));
    }
    let expanded: Vec<String> = ["abch", "abcjih"]
        .iter()
        .map(|p| {
            s.expand_path(&word(p))
                .map(|x| spell(x.vertices()))
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    if expanded != ["abcdegfh", "abcfgkmjih"] {
        return Err(format!("expansions {expanded:?}"));
    }
    let free_run = unscripted(&g, &m, "abcdegfh")?;
    let best = summarize(&g, &EnumerationBudget::default())
        .unwrap()
        .best_score;
    if max_priority_matching(&g).score != best {
        return Err("full solve differs from oracle".into());
    }

    let (g2, m2) = blossom_example(false);
    let mut s = BlossomSearch::new(&g2, &m2, Priority::HIGHEST);
    for e in ["ab", "cd", "cf"] {
        let w = word(e);
        expect_step(
            s.select(w[0], w[1]).map_err(|err| err.to_string())?,
            EdgeCase::Grow,
            e,
        )?;
    }
    let variant = found_path(s.select(letter('e'), letter('g')))?;
    if variant != word("abcfged") {
        return Err(format!("variant gave {}", spell(&variant)));
    }
    let free_variant = unscripted(&g2, &m2, "abcfged")?;

    Ok(format!(
        "abcdegfh, abcfgkmjih, abcfged reproduced; unscripted runs {free_run} and {free_variant}"
    ))
}

fn mpm(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_mpm"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "mpm {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn round_trip_and_determinism() -> Result<String, String> {
    let mut failures = Failures::default();
    let mut fixtures = vec![blossom_example(true).0, blossom_example(false).0];
    fixtures.push(Graph::new(1, &[], &[1]).unwrap());
    fixtures.push(Graph::uniform(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap());
    fixtures.extend((0..200).map(|seed| random_small(40_000 + seed, 30, 80)));
    for (k, g) in fixtures.iter().enumerate() {
        let text = render_graph(g);
        match parse_graph(&text) {
            Ok(back) if &back == g && render_graph(&back) == text => {}
            other => failures.push(format!("fixture {k}: {other:?}")),
        }
        let a = render_matching(g, &max_priority_matching(g).matching);
        let b = render_matching(g, &max_priority_matching(g).matching);
        if a != b {
            failures.push(format!("fixture {k}: solve output differs between runs"));
        }
    }
    for seed in [1, 2, 3] {
        let spec = PrioritySpec::Full;
        let a = generate_random(300, 900, &spec, seed).unwrap();
        let b = generate_random(300, 900, &spec, seed).unwrap();
        if render_matching(&a, &max_priority_matching(&a).matching)
            != render_matching(&b, &max_priority_matching(&b).matching)
        {
            failures.push(format!("seed {seed}: library solve differs"));
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let gen_args = [
        "gen",
        "--n",
        "400",
        "--m",
        "1200",
        "--seed",
        "7",
        "--priorities",
        "full",
    ];
    let first = mpm(&gen_args)?;
    if first != mpm(&gen_args)? {
        failures.push("mpm gen output differs between runs".into());
    }
    let graph_path = dir.path().join("g.txt");
    std::fs::write(&graph_path, &first).map_err(|e| e.to_string())?;
    let graph_arg = graph_path.to_str().unwrap();
    let solved = mpm(&["solve", graph_arg])?;
    if solved != mpm(&["solve", graph_arg])? {
        failures.push("mpm solve output differs between runs".into());
    }
    let matching_path = dir.path().join("m.txt");
    std::fs::write(&matching_path, &solved).map_err(|e| e.to_string())?;
    if let Err(e) = mpm(&["verify", graph_arg, matching_path.to_str().unwrap()]) {
        failures.push(e);
    }

    failures.verdict(format!(
        "{} fixtures round-trip; library and CLI solves byte-identical",
        fixtures.len()
    ))
}

type Criterion<'a> = (
    &'static str,
    &'static str,
    Box<dyn FnOnce() -> Result<String, String> + 'a>,
);

fn main() {
    let filters: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let wanted = |name: &str| filters.is_empty() || filters.iter().any(|f| f == name);

    let needs = |names: &[&str]| names.iter().any(|n| wanted(n));
    let timed = |f: &dyn Fn() -> Tally| {
        let start = Instant::now();
        (f(), start.elapsed())
    };
    let (ex, ex_time) = if needs(&["C1", "C4", "C6"]) {
        timed(&exhaustive)
    } else {
        Default::default()
    };
    let (rnd, rnd_time) = if needs(&["C2", "C4", "C6"]) {
        timed(&randomized)
    } else {
        Default::default()
    };
    let (thm, thm_bip) = if needs(&["C3", "C6"]) {
        path_existence()
    } else {
        Default::default()
    };

    let criteria: Vec<Criterion> = vec![
        (
            "C1",
            "exhaustive oracle equivalence",
            Box::new(|| {
                ex.score.verdict(format!(
                    "{} instances (all graphs on <= 6 vertices x 4 priority schemes) in {:.1?}",
                    ex.instances, ex_time
                ))
            }),
        ),
        (
            "C2",
            "randomized oracle equivalence",
            Box::new(|| {
                rnd.score.verdict(format!(
                    "{} seeded graphs in {:.1?}",
                    rnd.instances, rnd_time
                ))
            }),
        ),
        (
            "C3",
            "augmenting path exists iff oracle improves",
            Box::new(|| {
                thm.mismatches.verdict(format!(
                    "{} comparisons over 500 instances",
                    thm.comparisons
                ))
            }),
        ),
        (
            "C4",
            "maximum priority matchings have maximum size",
            Box::new(|| {
                let mut all = Failures::default();
                for f in [&ex.size, &rnd.size] {
                    all.count += f.count;
                    all.shown.extend(f.shown.iter().cloned());
                }
                all.verdict(format!("{} instances", ex.instances + rnd.instances))
            }),
        ),
        (
            "C5",
            "maximum-degree vertices covered",
            Box::new(max_degree_coverage),
        ),
        (
            "C6",
            "failure properties",
            Box::new(|| {
                let mut all = Failures::default();
                for f in [
                    &ex.audit.violations,
                    &rnd.audit.violations,
                    &thm.audit.violations,
                    &thm_bip.audit.violations,
                ] {
                    all.count += f.count;
                    all.shown.extend(f.shown.iter().cloned());
                }
                let general = ex.audit.failed + rnd.audit.failed + thm.audit.failed;
                let bipartite =
                    ex.bipartite_failed + rnd.bipartite_failed + thm_bip.bipartite_failed;
                all.verdict(format!(
                    "{general} general and {bipartite} bipartite failed searches, zero violations"
                ))
            }),
        ),
        (
            "C7",
            "bipartite search agrees with blossom search",
            Box::new(bipartite_agreement),
        ),
        ("C8", "scaling on m = 5n", Box::new(scaling)),
        ("C9", "blossom example paths", Box::new(blossom_fixture)),
        (
            "C10",
            "round-trip and determinism",
            Box::new(round_trip_and_determinism),
        ),
    ];

    let mut failed = 0;
    for (name, title, run) in criteria {
        if !wanted(name) {
            continue;
        }
        match run() {
            Ok(detail) => println!("[PASS] {name} {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name} {title}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
