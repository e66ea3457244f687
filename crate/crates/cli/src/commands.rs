use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use funcgraph::families::{self, Hypergraph3, IntervalSet, Permutation};
use funcgraph::hyper3::{self, fixtures};
use funcgraph::{functionality, io, kexpr, oracle, params, symdiff, verify, witnesses, Graph};

use crate::{
    Command, Common, Failure, Family, FixtureName, FunMode, Hyper3Mode, Inputs, KexprMode, Outcome, SdMode, WitnessKind,
};

/// Vertex counts up to which `--recheck` also recomputes exponential values
/// with the brute-force oracles.
const ORACLE_FUN_LIMIT: usize = 12;
const ORACLE_DEGENERACY_LIMIT: usize = 16;
const ORACLE_VC_LIMIT: usize = 32;

type Res = Result<Outcome, Failure>;

fn outcome(result: impl Serialize, pass: bool, summary: String) -> Res {
    Ok(Outcome {
        result: serde_json::to_value(result).expect("results serialise"),
        pass,
        summary,
        raw: None,
    })
}

/// Outcome of replaying a result independently of the search code.
#[derive(Serialize)]
struct Recheck {
    witness: bool,
    /// The oracle's value, when the instance is small enough to recompute.
    oracle: Option<usize>,
}

impl Recheck {
    fn ok(&self, value: usize) -> bool {
        self.witness && self.oracle.is_none_or(|o| o == value)
    }
}

fn with_recheck(mut result: Value, recheck: Option<&Recheck>) -> Value {
    if let Some(r) = recheck {
        result["recheck"] = serde_json::to_value(r).expect("serialises");
    }
    result
}

pub fn run(cmd: &Command, inputs: &mut Inputs) -> Res {
    match cmd {
        Command::Gen { family, out, seed } => gen(family, out.as_ref(), seed.unwrap_or(0), inputs),
        Command::Fun {
            mode,
            file,
            vertex,
            lower_trials,
            seed,
            common,
        } => {
            let g = read_graph(file, inputs)?;
            fun(*mode, &g, *vertex, *lower_trials, seed.unwrap_or(0), common)
        }
        Command::Sd {
            mode,
            file,
            x,
            y,
            common,
        } => {
            let g = read_graph(file, inputs)?;
            sd(*mode, &g, *x, *y, common)
        }
        Command::Degeneracy { file, common } => {
            let g = read_graph(file, inputs)?;
            degeneracy(&g, common)
        }
        Command::Vcdim { file, common } => {
            let g = read_graph(file, inputs)?;
            vcdim(&g, common)
        }
        Command::Kexpr { mode, file, common } => {
            let e = kexpr::parse(&inputs.read(file)?)?;
            kexpr_cmd(*mode, &e, common)
        }
        Command::Witness {
            kind,
            file,
            x,
            edge,
            common,
        } => {
            let text = inputs.read(file)?;
            match kind {
                WitnessKind::UnitInterval => witness_unit_interval(&io::parse_intervals(&text)?, common),
                WitnessKind::Permutation => witness_permutation(&io::parse_permutation(&text)?, *x, common),
                WitnessKind::LineGraph => {
                    let edge = edge.as_ref().map(|e| (e[0], e[1]));
                    witness_line_graph(&io::parse_graph(&text)?, edge, common)
                }
            }
        }
        Command::Hyper3 { mode, file, common } => {
            let h = io::parse_hypergraph(&inputs.read(file)?)?;
            hyper3_cmd(*mode, &h, common)
        }
        Command::Verify {
            target,
            seed,
            cases,
            t,
            common,
        } => {
            inputs.add(format!("{target} {cases:?} {t:?} {} {}", common.exact_limit, common.recheck).as_bytes());
            let cfg = verify::Config {
                seed: *seed,
                cases: *cases,
                t: *t,
                exact_limit: common.exact_limit,
                recheck: common.recheck,
            };
            let report = verify::run(*target, &cfg)?;
            let mut summary = format!("{} cases, {} failed", report.cases, report.failures);
            if let Some(f) = report.first_failure() {
                summary.push_str(&format!(
                    "; first failure: case {} (seed {}): {}",
                    f.case, f.seed, f.summary
                ));
            }
            let pass = report.pass;
            outcome(report, pass, summary)
        }
    }
}

fn read_graph(file: &PathBuf, inputs: &mut Inputs) -> Result<Graph, Failure> {
    Ok(io::parse_graph(&inputs.read(file)?)?)
}

fn fun(
    mode: FunMode,
    g: &Graph,
    vertex: Option<usize>,
    lower_trials: Option<usize>,
    seed: u64,
    common: &Common,
) -> Res {
    match mode {
        FunMode::Vertex => {
            let y = vertex.ok_or_else(|| Failure::Usage("`fun vertex` needs --vertex".into()))?;
            let r = functionality::fun_vertex(g, y)?;
            let recheck = common.recheck.then(|| Recheck {
                witness: oracle::is_function_of(g, y, &r.witness_set.to_vec()),
                oracle: (g.n() <= ORACLE_FUN_LIMIT).then(|| oracle::fun_vertex(g, y)),
            });
            let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
            let summary = format!("fun({y}) = {} via {:?}", r.value, r.witness_set.to_vec());
            outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
        }
        FunMode::Min => {
            if g.n() == 0 {
                return Err(funcgraph::Error::TooFewVertices { min: 1, found: 0 }.into());
            }
            let r = functionality::min_fun(g)?;
            let recheck = common.recheck.then(|| Recheck {
                witness: oracle::is_function_of(g, r.witness_vertex, &r.witness_set.to_vec()),
                oracle: (g.n() <= ORACLE_FUN_LIMIT).then(|| oracle::min_fun(g)),
            });
            let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
            let summary = format!("min fun = {} at vertex {}", r.value, r.witness_vertex);
            outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
        }
        FunMode::Graph => {
            if g.n() > common.exact_limit {
                if let Some(trials) = lower_trials {
                    let lower = functionality::fun_graph_lower(g, trials, seed)?;
                    let summary = format!("fun(G) >= {lower} ({trials} random induced subgraphs)");
                    return outcome(
                        json!({ "exact": false, "lower_bound": lower, "trials": trials }),
                        true,
                        summary,
                    );
                }
            }
            let r = functionality::fun_graph(g, common.exact_limit)?;
            let recheck = common.recheck.then(|| Recheck {
                witness: oracle::is_function_of_within(g, &r.subgraph, r.vertex, &r.witness_set),
                oracle: (g.n() <= ORACLE_FUN_LIMIT).then(|| oracle::fun_graph(g)),
            });
            let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
            let summary = format!("fun(G) = {} on subgraph {:?}", r.value, r.subgraph);
            let mut result = json!(r);
            result["exact"] = json!(true);
            outcome(with_recheck(result, recheck.as_ref()), pass, summary)
        }
    }
}

fn sd(mode: SdMode, g: &Graph, x: Option<usize>, y: Option<usize>, common: &Common) -> Res {
    match mode {
        SdMode::Pair => {
            let (Some(x), Some(y)) = (x, y) else {
                return Err(Failure::Usage("`sd pair` needs --x and --y".into()));
            };
            let value = symdiff::sd_pair(g, x, y)?;
            let recheck = common.recheck.then(|| Recheck {
                witness: true,
                oracle: Some(oracle::sd_pair(g, x, y)),
            });
            let pass = recheck.as_ref().is_none_or(|c| c.ok(value));
            let result = json!({ "value": value, "pair": [x, y] });
            outcome(
                with_recheck(result, recheck.as_ref()),
                pass,
                format!("sd({x}, {y}) = {value}"),
            )
        }
        SdMode::Min => {
            let r = symdiff::min_sd(g)?;
            let recheck = common.recheck.then(|| Recheck {
                witness: oracle::sd_pair(g, r.pair.0, r.pair.1) == r.value,
                oracle: Some(oracle::min_sd(g)),
            });
            let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
            let summary = format!("min sd = {} at {:?}", r.value, r.pair);
            outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
        }
        SdMode::Graph => {
            let r = symdiff::sd_graph(g, common.exact_limit)?;
            let recheck = common.recheck.then(|| Recheck {
                witness: oracle::sd_pair_within(g, &r.subgraph, r.pair.0, r.pair.1) == r.value
                    && oracle::min_sd_within(g, &r.subgraph) == r.value,
                oracle: (g.n() <= ORACLE_FUN_LIMIT).then(|| oracle::sd_graph(g)),
            });
            let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
            let summary = format!("sd(G) = {} on subgraph {:?}", r.value, r.subgraph);
            outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
        }
    }
}

fn degeneracy(g: &Graph, common: &Common) -> Res {
    let r = params::degeneracy(g)?;
    let recheck = common.recheck.then(|| Recheck {
        witness: r.verify(g),
        oracle: (g.n() <= ORACLE_DEGENERACY_LIMIT).then(|| oracle::degeneracy(g)),
    });
    let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
    let summary = format!("degeneracy = {}", r.value);
    outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
}

fn vcdim(g: &Graph, common: &Common) -> Res {
    let r = params::vc_dimension(g)?;
    let recheck = common.recheck.then(|| Recheck {
        witness: r.shattered.len() == r.value && oracle::is_shattered(g, &r.shattered),
        oracle: (g.n() <= ORACLE_VC_LIMIT).then(|| oracle::vc_dimension(g)),
    });
    let pass = recheck.as_ref().is_none_or(|c| c.ok(r.value));
    let summary = format!("vc-dimension = {} via {:?}", r.value, r.shattered);
    outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
}

fn kexpr_cmd(mode: KexprMode, e: &kexpr::KExpr, common: &Common) -> Res {
    match mode {
        KexprMode::Eval => {
            let lg = kexpr::eval(e);
            let summary = format!(
                "{} vertices, {} edges, {} labels",
                lg.graph.n(),
                lg.graph.edge_count(),
                kexpr::label_count(e)
            );
            let result = json!({
                "expression": e.to_string(),
                "labels_used": kexpr::label_count(e),
                "vertices": lg.graph.n(),
                "names": lg.names,
                "final_labels": lg.labels,
                "edges": lg.graph.edges(),
            });
            outcome(result, true, summary)
        }
        KexprMode::Check => {
            let r = kexpr::check_fun_cwd_bound(e)?;
            let recheck = common.recheck.then(|| {
                let g = kexpr::eval(e).graph;
                Recheck {
                    witness: oracle::is_function_of(&g, r.witness.witness_vertex, &r.witness.witness_set.to_vec()),
                    oracle: (g.n() <= ORACLE_FUN_LIMIT).then(|| oracle::min_fun(&g)),
                }
            });
            let pass = r.pass && recheck.as_ref().is_none_or(|c| c.ok(r.min_fun));
            let summary = format!(
                "min fun {} <= {} = 2 * {} - 1: {}",
                r.min_fun, r.bound, r.labels, r.pass
            );
            outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
        }
    }
}

fn dnf_summary(w: &witnesses::DnfWitness) -> String {
    format!("x{} = {} over {:?}", w.target, w, w.support)
}

fn witness_unit_interval(iv: &IntervalSet, common: &Common) -> Res {
    let g = families::unit_interval_graph(iv);
    let pair = witnesses::unit_interval_pair(iv)?;
    let sum = witnesses::sum_sd_consecutive(iv)?;
    let n = iv.len();
    let isolated_free = !g.has_isolated_vertex();
    // fun(t) <= 2: the interval t + 1 together with the symmetric-difference vertex
    let fun_t = functionality::fun_vertex_at_most(&g, pair.t, 2)?;
    let recheck = common.recheck.then(|| Recheck {
        witness: fun_t
            .as_ref()
            .is_some_and(|f| oracle::is_function_of(&g, pair.t, &f.witness_set.to_vec()))
            && oracle::sd_pair(&g, pair.t, pair.t + 1) == pair.sd,
        oracle: None,
    });
    let holds = pair.sd <= 1 && sum <= 2 * n - 3 && fun_t.is_some();
    let pass = (!isolated_free || holds) && recheck.as_ref().is_none_or(|c| c.witness);
    let summary = format!(
        "pair ({}, {}) sd = {}, consecutive sum = {sum} (2n - 3 = {}), isolated-free: {isolated_free}",
        pair.t,
        pair.t + 1,
        pair.sd,
        2 * n - 3
    );
    let result = json!({
        "isolated_free": isolated_free,
        "pair": pair,
        "sum_sd_consecutive": sum,
        "sum_bound": 2 * n - 3,
        "fun_t": fun_t,
    });
    outcome(with_recheck(result, recheck.as_ref()), pass, summary)
}

fn witness_permutation(p: &Permutation, x: Option<usize>, common: &Common) -> Res {
    let g = families::permutation_graph(p);
    let w = match x {
        Some(x) => witnesses::strict_middle_witness(p, x)?,
        None => witnesses::permutation_witness(p)?,
    };
    let limit = if x.is_some() { 4 } else { 8 };
    let recheck = common.recheck.then(|| Recheck {
        witness: oracle::dnf_holds(&g, &w),
        oracle: None,
    });
    let pass = w.verify(&g) && w.support.len() <= limit && recheck.as_ref().is_none_or(|c| c.witness);
    let summary = format!("{} (size {} <= {limit})", dnf_summary(&w), w.support.len());
    let result = json!({ "witness": w, "formula": w.to_string(), "size": w.support.len(), "limit": limit });
    outcome(with_recheck(result, recheck.as_ref()), pass, summary)
}

fn witness_line_graph(g: &Graph, edge: Option<(usize, usize)>, common: &Common) -> Res {
    let (lg, names) = families::line_graph(g)?;
    let targets: Vec<(usize, usize)> = match edge {
        Some((u, v)) => vec![(u.min(v), u.max(v))],
        None => names.clone(),
    };
    let mut all = Vec::with_capacity(targets.len());
    let mut pass = true;
    let mut largest = 0;
    for x in targets {
        let w = witnesses::line_graph_witness_in(&lg, &names, x)?;
        let ok = w.verify(&lg) && w.support.len() <= 6 && (!common.recheck || oracle::dnf_holds(&lg, &w));
        pass &= ok;
        largest = largest.max(w.support.len());
        all.push(json!({ "edge": x, "verified": ok, "formula": w.to_string(), "witness": w }));
    }
    let summary = format!("{} edges certified, largest support {largest} <= 6", all.len());
    outcome(json!({ "largest": largest, "witnesses": all }), pass, summary)
}

fn hyper3_cmd(mode: Hyper3Mode, h: &Hypergraph3, common: &Common) -> Res {
    let replay = |s: usize, f: &[usize]| -> Result<bool, Failure> {
        let (g, _) = hyper3::intersection_graph(h)?;
        Ok(oracle::is_function_of(&g, s, f))
    };
    match mode {
        Hyper3Mode::Bound => {
            let r = hyper3::hyper3_fun_bound(h)?;
            let recheck = if common.recheck {
                Some(Recheck {
                    witness: replay(r.witness.s, &r.witness.f)?,
                    oracle: None,
                })
            } else {
                None
            };
            let pass = r.pass && recheck.as_ref().is_none_or(|c| c.witness);
            let summary = format!(
                "hyperedge {} determined by {} hyperedges (limit {}), {} thick pairs",
                r.witness.s, r.bound, r.limit, r.thick_pairs
            );
            outcome(with_recheck(json!(r), recheck.as_ref()), pass, summary)
        }
        Hyper3Mode::Structure => {
            let t = hyper3::witness_thick(h)?;
            let structure_ok = t.structure.verify(h, hyper3::THICK_THRESHOLD);
            let recheck = if common.recheck {
                Some(Recheck {
                    witness: replay(t.witness.s, &t.witness.f)?,
                    oracle: None,
                })
            } else {
                None
            };
            let size = t.witness.f.len();
            let pass = structure_ok && size <= hyper3::THICK_BOUND && recheck.as_ref().is_none_or(|c| c.witness);
            let summary = format!(
                "{:?} around hyperedge {}, witness size {size} <= {}",
                t.structure.kind,
                t.structure.s,
                hyper3::THICK_BOUND
            );
            let mut result = json!(t);
            result["structure_verified"] = json!(structure_ok);
            outcome(with_recheck(result, recheck.as_ref()), pass, summary)
        }
    }
}

fn gen(family: &Family, out: Option<&PathBuf>, seed: u64, inputs: &mut Inputs) -> Res {
    inputs.add(format!("{family:?} seed={seed}").as_bytes());
    let graph = |g: Graph| (io::write_graph(&g), "graph");
    let (text, format) = match family {
        Family::Random { n, p } => graph(families::random_graph(*n, *p, seed)?),
        Family::Path { n } => graph(Graph::path(*n)),
        Family::Cycle { n } => {
            if *n < 3 {
                return Err(Failure::Usage(format!("a cycle needs n >= 3, got {n}")));
            }
            graph(Graph::cycle(*n))
        }
        Family::Complete { n } => graph(Graph::complete(*n)),
        Family::Hypercube { n } => graph(families::hypercube(*n)?),
        Family::Shattering { n } => graph(families::shattering_graph(*n)?),
        Family::DistanceHereditary { steps } => graph(families::distance_hereditary(&families::random_dh_script(
            *steps, seed,
        ))?),
        Family::Permutation { n } => {
            if *n == 0 {
                return Err(Failure::Usage("a permutation needs n >= 1".into()));
            }
            (
                io::write_permutation(&families::random_permutation(*n, seed)),
                "permutation",
            )
        }
        Family::SdConstruction { t } => (io::write_permutation(&families::sd_construction(*t)?), "permutation"),
        Family::Intervals { n } => (
            io::write_intervals(&families::random_unit_intervals(*n, seed)?),
            "intervals",
        ),
        Family::Hypergraph { n, m } => (
            io::write_hypergraph(&families::random_3_hypergraph(*n, *m, seed)?),
            "hypergraph",
        ),
        Family::Fixture { name } => {
            let h = match name {
                FixtureName::Fly => fixtures::fly(),
                FixtureName::Windmill => fixtures::windmill(),
                FixtureName::BrokenWindmill => fixtures::broken_windmill(),
            };
            (io::write_hypergraph(&h), "hypergraph")
        }
        Family::Kexpr { labels, ops } => (
            format!("{}\n", kexpr::random_kexpression(*labels, *ops, seed)?),
            "kexpr",
        ),
        Family::C5Expression => (format!("{}\n", kexpr::C5_EXPRESSION), "kexpr"),
        Family::PermutationGraph { file } => graph(families::permutation_graph(&io::parse_permutation(
            &inputs.read(file)?,
        )?)),
        Family::IntervalGraph { file } => graph(families::unit_interval_graph(&io::parse_intervals(
            &inputs.read(file)?,
        )?)),
        Family::LineGraph { file } => {
            let g = io::parse_graph(&inputs.read(file)?)?;
            graph(families::line_graph(&g)?.0)
        }
        Family::IntersectionGraph { file } => {
            let h = io::parse_hypergraph(&inputs.read(file)?)?;
            graph(hyper3::intersection_graph(&h)?.0)
        }
        Family::KexprGraph { file } => graph(kexpr::eval(&kexpr::parse(&inputs.read(file)?)?).graph),
    };
    let summary = format!("{format}, {} bytes", text.len());
    match out {
        None => Ok(Outcome {
            result: Value::Null,
            pass: true,
            summary,
            raw: Some(text),
        }),
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            let result = json!({ "format": format, "path": path, "bytes": text.len(), "instance": text });
            outcome(result, true, summary)
        }
    }
}
