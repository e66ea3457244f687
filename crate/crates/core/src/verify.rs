//! Seeded verification harness: one target per bounded-functionality result
//! plus the structural checks. Cases run in parallel and are reported in
//! case order, so a report depends only on the target, seed and case count.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, Hypergraph3};
use crate::functionality::{self, FunResult};
use crate::graph::Graph;
use crate::hyper3::{self, HyperWitness, StructureKind};
use crate::kexpr;
use crate::oracle;
use crate::params;
use crate::rng;
use crate::symdiff::{self, SdResult};
use crate::witnesses::{self, DnfWitness};
use crate::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    UnitInterval,
    Permutation,
    LineGraph,
    CwdBound,
    SdConstruction,
    Hypercube,
    DegeneracyBound,
    SdLink,
    Hyper3,
    OracleEquivalence,
    VcDimension,
}

impl Target {
    pub const ALL: [Target; 11] = [
        Target::UnitInterval,
        Target::Permutation,
        Target::LineGraph,
        Target::CwdBound,
        Target::SdConstruction,
        Target::Hypercube,
        Target::DegeneracyBound,
        Target::SdLink,
        Target::Hyper3,
        Target::OracleEquivalence,
        Target::VcDimension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::UnitInterval => "unit-interval",
            Target::Permutation => "permutation",
            Target::LineGraph => "line-graph",
            Target::CwdBound => "cwd-bound",
            Target::SdConstruction => "sd-construction",
            Target::Hypercube => "hypercube",
            Target::DegeneracyBound => "degeneracy-bound",
            Target::SdLink => "sd-link",
            Target::Hyper3 => "hyper3",
            Target::OracleEquivalence => "oracle-equivalence",
            Target::VcDimension => "vc-dimension",
        }
    }

    /// Case count used when none is given.
    pub fn default_cases(self) -> usize {
        match self {
            Target::UnitInterval | Target::Permutation | Target::CwdBound => 100,
            Target::LineGraph => 50,
            Target::DegeneracyBound | Target::SdLink | Target::OracleEquivalence | Target::VcDimension => 200,
            Target::Hyper3 => 20,
            Target::SdConstruction => 6,
            Target::Hypercube => 2,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Target> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown verify target '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub cases: Option<usize>,
    /// `sd-construction` only: check this `t` instead of `1..=cases`.
    pub t: Option<usize>,
    pub exact_limit: usize,
    /// Replay every witness with the brute-force oracles as well.
    pub recheck: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            cases: None,
            t: None,
            exact_limit: functionality::DEFAULT_EXACT_LIMIT,
            recheck: false,
        }
    }
}

/// Re-verifiable evidence attached to a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Fun(FunResult),
    Dnf(DnfWitness),
    Sd(SdResult),
    Hyper(HyperWitness),
    Order { value: usize, order: Vec<usize> },
    Shattered { value: usize, set: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case: usize,
    pub seed: u64,
    pub pass: bool,
    pub summary: String,
    pub evidence: Vec<Evidence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub target: Target,
    pub seed: u64,
    pub cases: usize,
    pub failures: usize,
    pub pass: bool,
    pub results: Vec<CaseReport>,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&CaseReport> {
        self.results.iter().find(|c| !c.pass)
    }
}

/// Accumulates one case's checks; any failed check fails the case.
struct Case {
    report: CaseReport,
    notes: Vec<String>,
}

impl Case {
    fn new(case: usize, seed: u64) -> Self {
        Case {
            report: CaseReport {
                case,
                seed,
                pass: true,
                summary: String::new(),
                evidence: Vec::new(),
            },
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.report.pass = false;
            self.notes.push(format!("FAIL {}", what()));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn evidence(&mut self, e: Evidence) {
        self.report.evidence.push(e);
    }

    fn error(&mut self, e: Error) {
        self.check(false, || format!("error: {e}"));
    }

    fn finish(mut self) -> CaseReport {
        self.report.summary = self.notes.join("; ");
        self.report
    }
}

pub fn run(target: Target, cfg: &Config) -> Result<VerifyReport> {
    let cases = match (target, cfg.t) {
        (Target::SdConstruction, Some(_)) => 1,
        _ => cfg.cases.unwrap_or_else(|| target.default_cases()),
    };
    if cases == 0 {
        return Err(Error::OutOfRange {
            what: "cases",
            value: 0,
            range: ">= 1",
        });
    }
    let results: Vec<CaseReport> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let seed = rng::case_seed(cfg.seed, i as u64);
            let mut case = Case::new(i, seed);
            run_case(target, cfg, cases, i, seed, &mut case);
            case.finish()
        })
        .collect();
    let failures = results.iter().filter(|c| !c.pass).count();
    Ok(VerifyReport {
        target,
        seed: cfg.seed,
        cases,
        failures,
        pass: failures == 0,
        results,
    })
}

fn run_case(target: Target, cfg: &Config, cases: usize, i: usize, seed: u64, case: &mut Case) {
    let outcome = match target {
        Target::UnitInterval => unit_interval_case(cfg, cases, i, seed, case),
        Target::Permutation => permutation_case(cfg, cases, i, seed, case),
        Target::LineGraph => line_graph_case(cfg, seed, case),
        Target::CwdBound => cwd_case(cfg, i, seed, case),
        Target::SdConstruction => sd_construction_case(cfg, i, case),
        Target::Hypercube => hypercube_case(cfg, i, case),
        Target::DegeneracyBound => degeneracy_case(cfg, i, seed, case),
        Target::SdLink => sd_link_case(cfg, i, seed, case),
        Target::Hyper3 => hyper3_case(cfg, cases, i, seed, case),
        Target::OracleEquivalence => oracle_case(i, seed, case),
        Target::VcDimension => vc_case(cfg, i, seed, case),
    };
    if let Err(e) = outcome {
        case.error(e);
    }
}

/// Small random graph for the structural targets: `n` in `2..=9`, edge
/// probability cycling through 0.2, 0.5, 0.8.
fn small_graph(i: usize, seed: u64) -> Result<Graph> {
    let n = 2 + i % 8;
    let p = [0.2, 0.5, 0.8][i % 3];
    families::random_graph(n, p, seed)
}

fn recheck_fun(cfg: &Config, case: &mut Case, g: &Graph, r: &FunResult) {
    if cfg.recheck {
        let s = r.witness_set.to_vec();
        case.check(oracle::is_function_of(g, r.witness_vertex, &s), || {
            format!("oracle rejects witness {s:?} for vertex {}", r.witness_vertex)
        });
    }
}

fn recheck_dnf(cfg: &Config, case: &mut Case, g: &Graph, w: &DnfWitness) {
    if cfg.recheck {
        case.check(oracle::dnf_holds(g, w), || {
            format!("oracle rejects DNF for vertex {}", w.target)
        });
    }
}

fn unit_interval_case(cfg: &Config, cases: usize, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    // isolated-free instance with n = 100: redraw from derived seeds
    let n = 100;
    let mut attempt = 0u64;
    let (iv, g) = loop {
        let iv = families::random_unit_intervals(n, rng::case_seed(seed, attempt))?;
        let g = families::unit_interval_graph(&iv);
        if !g.has_isolated_vertex() {
            break (iv, g);
        }
        attempt += 1;
    };
    let pair = witnesses::unit_interval_pair(&iv)?;
    let sum = witnesses::sum_sd_consecutive(&iv)?;
    case.check(pair.sd <= 1, || {
        format!("consecutive pair ({}, {}) has sd {}", pair.t, pair.t + 1, pair.sd)
    });
    case.check(sum <= 2 * n - 3, || format!("consecutive sd sum {sum} > {}", 2 * n - 3));
    for v in [pair.t, pair.t + 1] {
        match functionality::fun_vertex_at_most(&g, v, 2)? {
            Some(r) => {
                recheck_fun(cfg, case, &g, &r);
                case.evidence(Evidence::Fun(r));
            }
            None => case.check(false, || format!("fun({v}) > 2")),
        }
    }
    case.note(format!("redraws {attempt}, t {}, sd {}, sum {sum}", pair.t, pair.sd));

    // exhaustive part on the first half of the cases
    if i < cases.div_ceil(2) {
        let small_n = 1 + i % 10;
        let iv = families::random_unit_intervals(small_n, rng::case_seed(seed, u64::MAX))?;
        let g = families::unit_interval_graph(&iv);
        let r = functionality::fun_graph(&g, cfg.exact_limit.max(small_n))?;
        case.check(r.value <= 2, || format!("fun(G) = {} on {small_n} intervals", r.value));
        if cfg.recheck {
            let o = oracle::fun_graph(&g);
            case.check(o == r.value, || format!("oracle fun(G) = {o}, search {}", r.value));
        }
        case.note(format!("exhaustive n {small_n}: fun(G) {}", r.value));
    }
    Ok(())
}

fn permutation_case(cfg: &Config, cases: usize, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    let mut rng = rng::seeded(seed);
    // a fifth of the cases are small enough for the exact cross-check
    let n = if i < cases.div_ceil(5) {
        13 + i % 8
    } else {
        rng.gen_range(13..=200)
    };
    let p = families::random_permutation(n, rng.gen());
    let g = families::permutation_graph(&p);
    let w = witnesses::permutation_witness(&p)?;
    case.check(w.support.len() <= 8, || format!("support of size {}", w.support.len()));
    case.check(w.verify(&g), || "witness does not replay".into());
    recheck_dnf(cfg, case, &g, &w);
    if n <= 20 {
        let exact = functionality::fun_vertex(&g, w.target)?;
        case.check(exact.value <= 8, || {
            format!("exact fun({}) = {}", w.target, exact.value)
        });
        case.check(exact.value <= w.support.len(), || {
            "exact value above witness size".into()
        });
        case.note(format!("exact fun {}", exact.value));
    }
    case.note(format!("n {n}, x {}, support {}", w.target + 1, w.support.len()));
    case.evidence(Evidence::Dnf(w));
    Ok(())
}

fn line_graph_case(cfg: &Config, seed: u64, case: &mut Case) -> Result<()> {
    let g = families::random_graph(30, 0.3, seed)?;
    let (lg, names) = families::line_graph(&g)?;
    let mut largest: Option<DnfWitness> = None;
    for &e in &names {
        let w = witnesses::line_graph_witness_in(&lg, &names, e)?;
        case.check(w.support.len() <= 6, || {
            format!("edge {e:?}: support {}", w.support.len())
        });
        recheck_dnf(cfg, case, &lg, &w);
        if largest.as_ref().is_none_or(|b| w.support.len() > b.support.len()) {
            largest = Some(w);
        }
    }
    case.note(format!(
        "{} edges, max support {}",
        names.len(),
        largest.as_ref().map_or(0, |w| w.support.len())
    ));
    if let Some(w) = largest {
        case.evidence(Evidence::Dnf(w));
    }
    Ok(())
}

fn cwd_case(cfg: &Config, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    if i == 0 {
        let e = kexpr::parse(kexpr::C5_EXPRESSION)?;
        let lg = kexpr::eval(&e);
        let mut named: Vec<String> = lg
            .graph
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let mut p = [lg.names[a].as_str(), lg.names[b].as_str()];
                p.sort_unstable();
                p.concat()
            })
            .collect();
        named.sort();
        case.check(named == ["ab", "ae", "bc", "cd", "de"], || {
            format!("C5 expression gives {named:?}")
        });
        let r = kexpr::check_fun_cwd_bound(&e)?;
        case.check(r.pass && r.min_fun == 2, || {
            format!("C5: min_fun {} vs bound {}", r.min_fun, r.bound)
        });
    }
    let mut rng = rng::seeded(seed);
    let ops = rng.gen_range(1..=40);
    let e = kexpr::random_kexpression(3, ops, rng.gen())?;
    let r = kexpr::check_fun_cwd_bound(&e)?;
    case.check(r.pass && r.min_fun <= 5, || {
        format!("{e}: min_fun {} > {}", r.min_fun, r.bound.min(5))
    });
    recheck_fun(cfg, case, &kexpr::eval(&e).graph, &r.witness);

    let steps = rng.gen_range(0..=50);
    let g = families::distance_hereditary(&families::random_dh_script(steps, rng.gen()))?;
    let dh = functionality::min_fun(&g)?;
    case.check(dh.value <= 1, || {
        format!("distance-hereditary graph with min_fun {}", dh.value)
    });
    recheck_fun(cfg, case, &g, &dh);
    case.note(format!(
        "ops {ops}: min_fun {} <= {}; dh steps {steps}: min_fun {}",
        r.min_fun, r.bound, dh.value
    ));
    case.evidence(Evidence::Fun(r.witness));
    case.evidence(Evidence::Fun(dh));
    Ok(())
}

fn sd_construction_case(cfg: &Config, i: usize, case: &mut Case) -> Result<()> {
    let t = cfg.t.unwrap_or(i + 1);
    let g = families::permutation_graph(&families::sd_construction(t)?);
    let r = symdiff::min_sd(&g)?;
    case.check(r.value >= t, || {
        format!("t {t}: min sd {} at pair {:?}", r.value, r.pair)
    });
    if cfg.recheck {
        let o = oracle::min_sd(&g);
        case.check(o == r.value, || format!("oracle min sd {o}"));
    }
    case.note(format!("t {t}: {} vertices, min sd {}", g.n(), r.value));
    case.evidence(Evidence::Sd(r));
    Ok(())
}

fn hypercube_case(cfg: &Config, i: usize, case: &mut Case) -> Result<()> {
    let n = 3 + i;
    let q = families::hypercube(n)?;
    let need = (n - 1).div_ceil(3);
    let r = functionality::fun_vertex(&q, 0)?;
    case.check(r.value >= need, || format!("fun(0) in Q{n} = {} < {need}", r.value));
    let m = functionality::min_fun(&q)?;
    case.check(m.value >= need, || format!("min_fun(Q{n}) = {} < {need}", m.value));
    recheck_fun(cfg, case, &q, &r);
    case.note(format!(
        "Q{n}: fun(0) {}, min_fun {}, lower bound {need}",
        r.value, m.value
    ));
    case.evidence(Evidence::Fun(r));
    case.evidence(Evidence::Fun(m));
    Ok(())
}

fn degeneracy_case(cfg: &Config, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    let g = small_graph(i, seed)?;
    let d = params::degeneracy(&g)?;
    case.check(d.verify(&g), || "elimination order does not certify the value".into());
    let f = functionality::fun_graph(&g, cfg.exact_limit)?;
    case.check(f.value <= d.value, || {
        format!("fun(G) {} > degeneracy {}", f.value, d.value)
    });
    if cfg.recheck {
        let o = oracle::degeneracy(&g);
        case.check(o == d.value, || format!("oracle degeneracy {o}"));
    }
    case.note(format!("n {}: fun(G) {}, degeneracy {}", g.n(), f.value, d.value));
    case.evidence(Evidence::Order {
        value: d.value,
        order: d.order,
    });
    Ok(())
}

fn sd_link_case(cfg: &Config, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    let g = small_graph(i, seed)?;
    let n = g.n();
    let funs: Vec<FunResult> = (0..n)
        .map(|y| functionality::fun_vertex(&g, y))
        .collect::<Result<_>>()?;
    for (y, r) in funs.iter().enumerate() {
        let cap = g.degree(y).min(g.co_degree(y));
        case.check(r.value <= cap, || {
            format!("fun({y}) {} > min(deg, codeg) {cap}", r.value)
        });
        recheck_fun(cfg, case, &g, r);
    }
    for (x, fx) in funs.iter().enumerate() {
        for y in 0..n {
            if x == y {
                continue;
            }
            let sd = symdiff::sd_pair(&g, x, y)?;
            case.check(fx.value <= sd + 1, || {
                format!("fun({x}) {} > sd({x},{y}) + 1 = {}", fx.value, sd + 1)
            });
            if g.is_twin_pair(x, y)? {
                case.check(fx.value <= 1, || format!("twin {x} has fun {}", fx.value));
            }
        }
    }
    let f = functionality::fun_graph(&g, cfg.exact_limit)?;
    let s = symdiff::sd_graph(&g, cfg.exact_limit)?;
    case.check(f.value <= s.value + 1, || {
        format!("fun(G) {} > sd(G) + 1 = {}", f.value, s.value + 1)
    });

    // hereditary: a random induced subgraph
    let mut rng = rng::seeded(seed ^ 0x5eed);
    let members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
    if !members.is_empty() {
        let (h, _) = g.induced_subgraph(&VertexSet::from_iter(n, members.iter().copied()))?;
        let fh = functionality::fun_graph(&h, cfg.exact_limit)?;
        case.check(fh.value <= f.value, || {
            format!("fun(H) {} > fun(G) {} for H = {members:?}", fh.value, f.value)
        });
    }
    if cfg.recheck {
        let (of, os) = (oracle::fun_graph(&g), oracle::sd_graph(&g));
        case.check(of == f.value && os == s.value, || {
            format!("oracle fun(G) {of}, sd(G) {os}")
        });
    }
    case.note(format!("n {n}: fun(G) {}, sd(G) {}", f.value, s.value));
    case.evidence(Evidence::Sd(s));
    Ok(())
}

fn hyper3_case(_cfg: &Config, cases: usize, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    // sparse instance without thick pairs
    let mut attempt = 0u64;
    let h = loop {
        let h = families::random_3_hypergraph(60, 80, rng::case_seed(seed, attempt))?;
        if hyper3::thick_pairs(&h, hyper3::THICK_THRESHOLD).is_empty() {
            break h;
        }
        attempt += 1;
    };
    let all = hyper3::witness_no_thick_all(&h)?;
    let max_f = all.iter().map(|w| w.f.len()).max().unwrap_or(0);
    case.check(max_f <= hyper3::NO_THICK_BOUND, || {
        format!("|F| = {max_f} > {}", hyper3::NO_THICK_BOUND)
    });
    if let Some(w) = all.iter().max_by_key(|w| (w.f.len(), std::cmp::Reverse(w.s))) {
        case.evidence(Evidence::Hyper(w.clone()));
    }

    // a planted thick pair on top of a random instance
    let planted = plant_thick_pair(&families::random_3_hypergraph(60, 60, rng::case_seed(seed, u64::MAX))?)?;
    let r = hyper3::hyper3_fun_bound(&planted)?;
    case.check(r.pass && r.kind.is_some(), || {
        format!("planted instance: bound {} ({:?})", r.bound, r.kind)
    });
    case.note(format!(
        "no-thick max |F| {max_f}; planted {:?} |F| {}",
        r.kind, r.bound
    ));

    // the fixtures, once each
    let fixtures: [(Hypergraph3, StructureKind); 3] = [
        (hyper3::fixtures::fly(), StructureKind::Fly),
        (hyper3::fixtures::windmill(), StructureKind::Windmill),
        (hyper3::fixtures::broken_windmill(), StructureKind::BrokenWindmill),
    ];
    if i < fixtures.len().min(cases) {
        let (fh, kind) = &fixtures[i];
        let w = hyper3::witness_thick(fh)?;
        case.check(w.structure.kind == *kind, || {
            format!("fixture gave {:?}, expected {kind:?}", w.structure.kind)
        });
        case.check(w.witness.f.len() <= hyper3::THICK_BOUND, || {
            format!("fixture |F| = {}", w.witness.f.len())
        });
        case.note(format!("fixture {kind:?}: |F| {}", w.witness.f.len()));
        case.evidence(Evidence::Hyper(w.witness));
    }
    Ok(())
}

/// Adds hyperedges `{0, 1, k}` until `{0, 1}` is thick.
fn plant_thick_pair(h: &Hypergraph3) -> Result<Hypergraph3> {
    let mut edges = h.edges().to_vec();
    let mut have = edges.iter().filter(|e| e[0] == 0 && e[1] == 1).count();
    let mut k = 2;
    while have < hyper3::THICK_THRESHOLD {
        if !edges.contains(&[0, 1, k]) {
            edges.push([0, 1, k]);
            have += 1;
        }
        k += 1;
    }
    Hypergraph3::new(h.n().max(k), edges)
}

fn oracle_case(i: usize, seed: u64, case: &mut Case) -> Result<()> {
    let g = small_graph(i, seed)?;
    for y in 0..g.n() {
        let r = functionality::fun_vertex(&g, y)?;
        let o = oracle::fun_vertex(&g, y);
        case.check(r.value == o, || {
            format!("vertex {y}: branch-and-bound {} vs enumeration {o}", r.value)
        });
        case.check(r.witness_fn.verify(&g), || {
            format!("vertex {y}: witness function does not replay")
        });
        case.check(oracle::is_function_of(&g, y, &r.witness_set.to_vec()), || {
            format!("vertex {y}: oracle rejects the witness set")
        });
    }
    case.note(format!("n {}: {} vertices agree", g.n(), g.n()));
    Ok(())
}

fn vc_case(cfg: &Config, i: usize, seed: u64, case: &mut Case) -> Result<()> {
    if i < 3 {
        let n = i + 1;
        let r = params::vc_dimension(&families::shattering_graph(n)?)?;
        case.check(r.value == n, || format!("vc(D_{n}) = {}", r.value));
    }
    let mut rng = rng::seeded(seed);
    let n = rng.gen_range(1..=40);
    let g = families::random_graph(n, [0.2, 0.5, 0.8][i % 3], rng.gen())?;
    let r = params::vc_dimension(&g)?;
    let cap = (usize::BITS - 1 - n.leading_zeros()) as usize;
    case.check(r.value <= cap, || format!("vc {} > floor(log2 {n}) = {cap}", r.value));
    case.check(params::is_shattered(&g, &r.shattered), || {
        "reported set is not shattered".into()
    });
    if cfg.recheck && n <= 16 {
        let o = oracle::vc_dimension(&g);
        case.check(o == r.value, || format!("oracle vc {o}"));
    }
    case.note(format!("n {n}: vc {}", r.value));
    case.evidence(Evidence::Shattered {
        value: r.value,
        set: r.shattered,
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!("nope".parse::<Target>().is_err());
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let cfg = Config {
            seed: 11,
            cases: Some(3),
            recheck: true,
            ..Config::default()
        };
        for t in [
            Target::OracleEquivalence,
            Target::SdConstruction,
            Target::VcDimension,
            Target::Permutation,
        ] {
            let a = run(t, &cfg).unwrap();
            assert!(a.pass, "{t}: {:?}", a.first_failure());
            assert_eq!(a, run(t, &cfg).unwrap());
        }
    }

    #[test]
    fn sd_construction_single_t() {
        let cfg = Config {
            t: Some(3),
            ..Config::default()
        };
        let r = run(Target::SdConstruction, &cfg).unwrap();
        assert_eq!(r.cases, 1);
        assert!(r.pass);
        assert!(r.results[0].summary.contains("min sd"));
    }
}
