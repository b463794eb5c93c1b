use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use subwordlab::coxeter::{CoxeterSystem, GroupDescriptor, Word};
use subwordlab::harness::{self, ExperimentReport, Instance, MaximalityMode};
use subwordlab::multicluster::{
    expected_theta_order, multi_cluster_word, permutation_cycles, permutation_order, theta_orbits_on_facets,
    theta_permutation, type_a_bijection, type_b_bijection,
};
use subwordlab::quiver::{ar_quiver, export_dot, repetition_window, vertex_name, Quiver};
use subwordlab::sorting::sorting_word_w0;
use subwordlab::subword::{f_vector, minimal_nonfaces, FlipGraph, SubwordComplex};

#[derive(Parser)]
#[command(name = "subwordlab", version, about = "Subword complexes and multi-cluster complexes of finite Coxeter groups")]
struct Cli {
    /// Report elapsed_ms as 0 so output is byte-identical across runs
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The c-sorting word of w0 with its φ-counts
    Sort(GroupArgs),
    /// Facets, f-vector or minimal non-faces of a subword complex
    Complex {
        #[arg(value_enum)]
        what: ComplexWhat,
        #[command(flatten)]
        cx: ComplexArgs,
        /// Largest non-face size searched (default k + 1)
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Flip graph of a subword complex
    Flipgraph {
        #[command(flatten)]
        cx: ComplexArgs,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        diameter: bool,
    },
    /// The Θ permutation on the letters of c^k w0(c)
    Theta {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(short = 'k', long = "k", default_value_t = 1)]
        k: usize,
        #[arg(long)]
        orbits: bool,
        #[arg(long)]
        order: bool,
    },
    /// Letters of c^k w0(c) to diagonals of a polygon
    Bijection {
        #[arg(value_enum)]
        kind: BijectionKind,
        #[arg(long)]
        m: usize,
        #[arg(short = 'k', long = "k", default_value_t = 1)]
        k: usize,
        #[arg(long)]
        cox: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Auslander-Reiten quiver or a repetition-quiver window
    Quiver {
        #[arg(value_enum)]
        kind: QuiverKind,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 3)]
        copies: usize,
        /// Label of the first occurrence of each generator in the window
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        origin: i64,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the experiment suite; exits nonzero when an assertion fails
    Verify {
        #[arg(value_enum, default_value = "all")]
        which: VerifyWhat,
        #[arg(long = "type")]
        group: Option<String>,
        #[arg(short = 'k', long = "k")]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample size for maximality when exhaustive search is too large
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long = "type")]
    group: String,
    /// Coxeter word, e.g. s1,s3,s2,s4 (default s1,…,sn)
    #[arg(long)]
    cox: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ComplexArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(short = 'k', long = "k", default_value_t = 1)]
    k: usize,
    /// Use this word instead of c^k w0(c)
    #[arg(long)]
    word: Option<String>,
    #[arg(long, value_enum, default_value = "w0")]
    pi: PiChoice,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexWhat {
    Facets,
    Fvector,
    Nonfaces,
}

#[derive(Clone, Copy, ValueEnum)]
enum PiChoice {
    /// π = δ(Q)
    Auto,
    W0,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionKind {
    Typea,
    Typeb,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverKind {
    Ar,
    Repetition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyWhat {
    All,
    Counts,
    Csp,
    Nonfaces,
    Maximality,
    Sin,
    Mesh,
    Independence,
}

struct Output {
    json: bool,
    timing: bool,
    start: Instant,
}

impl Output {
    fn emit(&self, command: &str, params: Value, results: Value, text: String) {
        if self.json {
            let elapsed = if self.timing { self.start.elapsed().as_millis() as u64 } else { 0 };
            let doc = json!({ "command": command, "params": params, "results": results, "elapsed_ms": elapsed });
            write_stdout(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values serialize")));
        } else {
            write_stdout(&text);
        }
    }
}

/// Writes to stdout, ignoring a closed pipe (`subwordlab … | head`).
fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

impl GroupArgs {
    fn system(&self) -> anyhow::Result<(CoxeterSystem, Word)> {
        let sys = CoxeterSystem::from_name(&self.group)?;
        let c = match &self.cox {
            Some(s) => s.parse::<Word>()?,
            None => sys.standard_coxeter_word(),
        };
        sys.check_coxeter_word(&c)?;
        Ok((sys, c))
    }
}

impl ComplexArgs {
    fn build(&self) -> anyhow::Result<(CoxeterSystem, SubwordComplex)> {
        let (sys, c) = self.group.system()?;
        let q = match &self.word {
            Some(w) => w.parse::<Word>()?,
            None => multi_cluster_word(&sys, &c, self.k)?,
        };
        sys.check_word(&q)?;
        let pi = match self.pi {
            PiChoice::Auto => sys.demazure_product(&q),
            PiChoice::W0 => sys.longest_element().clone(),
        };
        let complex = SubwordComplex::new(&sys, q, pi).context("building the subword complex")?;
        Ok((sys, complex))
    }

    fn params(&self) -> Value {
        json!({
            "type": self.group.group,
            "cox": self.group.cox,
            "k": self.k,
            "word": self.word,
            "pi": match self.pi { PiChoice::Auto => "auto", PiChoice::W0 => "w0" },
        })
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|p| p + 1).collect()
}

fn letters(w: &Word) -> Vec<String> {
    w.iter().map(|s| format!("s{}", s + 1)).collect()
}

fn write_dot(path: &Option<PathBuf>, dot: &str) -> anyhow::Result<Option<String>> {
    match path {
        Some(p) => {
            fs::write(p, dot).with_context(|| format!("writing {}", p.display()))?;
            Ok(Some(p.display().to_string()))
        }
        None => Ok(None),
    }
}

fn quiver_json(q: &Quiver) -> Value {
    json!({
        "vertices": q.vertices.iter().map(|&v| vertex_name(v)).collect::<Vec<_>>(),
        "arrows": q.arrows.iter().map(|&(a, b)| [vertex_name(q.vertices[a]), vertex_name(q.vertices[b])]).collect::<Vec<_>>(),
    })
}

fn verify_instances(defaults: Vec<Instance>, group: &Option<String>, k: Option<usize>) -> anyhow::Result<Vec<Instance>> {
    let desc: Option<GroupDescriptor> = group.as_deref().map(str::parse).transpose()?;
    let list: Vec<Instance> = match (desc, k) {
        (Some(d), Some(k)) => vec![Instance { descriptor: d, k }],
        (Some(d), None) => {
            let matching: Vec<Instance> = defaults.iter().copied().filter(|i| i.descriptor == d).collect();
            if matching.is_empty() {
                vec![Instance { descriptor: d, k: 1 }]
            } else {
                matching
            }
        }
        (None, Some(k)) => defaults.into_iter().filter(|i| i.k == k).collect(),
        (None, None) => defaults,
    };
    Ok(list)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let timing = !cli.no_timing;
    let start = Instant::now();
    match cli.command {
        Command::Sort(g) => {
            let (sys, c) = g.system()?;
            let rep = sorting_word_w0(&sys, &c)?;
            let out = Output { json: g.json, timing, start };
            let phi: serde_json::Map<String, Value> =
                rep.phi.iter().enumerate().map(|(s, &n)| (format!("s{}", s + 1), json!(n))).collect();
            let blocks: Vec<Vec<String>> =
                rep.factorization.iter().map(|b| b.iter().map(|s| format!("s{}", s + 1)).collect()).collect();
            let text = format!(
                "word: {}\nphi: {}\nfactorization: {}\n",
                blocks.iter().map(|b| b.join(",")).collect::<Vec<_>>().join(" | "),
                phi.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "),
                blocks.iter().map(|b| format!("{{{}}}", b.join(","))).collect::<Vec<_>>().join(" ⊇ "),
            );
            out.emit(
                "sort",
                json!({ "type": g.group, "cox": c.to_string() }),
                json!({ "word": letters(&rep.word), "phi": phi, "factorization": blocks }),
                text,
            );
        }
        Command::Complex { what, cx, max_size } => {
            let (sys, complex) = cx.build()?;
            let out = Output { json: cx.group.json, timing, start };
            let mut params = cx.params();
            let (results, text) = match what {
                ComplexWhat::Facets => {
                    let facets: Vec<Vec<usize>> = complex.facets().iter().map(|f| f.to_one_based()).collect();
                    let text = format!(
                        "word: {}\nfacets ({}):\n{}",
                        complex.word(),
                        facets.len(),
                        complex.facets().iter().map(|f| format!("  {f}\n")).collect::<String>()
                    );
                    (
                        json!({ "word": letters(complex.word()), "facet_count": facets.len(), "facets": facets,
                                "vertices": complex.vertices().to_one_based(), "sphere": complex.is_sphere(&sys) }),
                        text,
                    )
                }
                ComplexWhat::Fvector => {
                    let fv = f_vector(&complex)?;
                    let chi = fv.reduced_euler_characteristic();
                    let text = format!("f-vector: {:?}\nreduced Euler characteristic: {chi}\n", fv.0);
                    (json!({ "f_vector": fv.0, "reduced_euler_characteristic": chi, "sphere": complex.is_sphere(&sys) }), text)
                }
                ComplexWhat::Nonfaces => {
                    let size = max_size.unwrap_or(cx.k + 1);
                    params["max_size"] = json!(size);
                    let nf = minimal_nonfaces(&complex, size);
                    let text = format!(
                        "minimal non-faces up to size {size} ({}):\n{}",
                        nf.len(),
                        nf.iter().map(|f| format!("  {f}\n")).collect::<String>()
                    );
                    (json!({ "nonfaces": nf.iter().map(|f| f.to_one_based()).collect::<Vec<_>>() }), text)
                }
            };
            out.emit("complex", params, results, text);
        }
        Command::Flipgraph { cx, dot, diameter } => {
            let (sys, complex) = cx.build()?;
            let graph = FlipGraph::new(&sys, &complex)?;
            let written = write_dot(&dot, &graph.to_dot())?;
            let diam = if diameter { graph.diameter() } else { None };
            let out = Output { json: cx.group.json, timing, start };
            let mut text = format!(
                "facets: {}\nedges: {}\nregular degree: {:?}\nconnected: {}\n",
                graph.facets.len(),
                graph.edges.len(),
                graph.regular_degree(),
                graph.is_connected()
            );
            if diameter {
                text.push_str(&format!("diameter: {diam:?}\n"));
            }
            if dot.is_none() && !cx.group.json {
                text.push_str(&graph.to_dot());
            }
            out.emit(
                "flipgraph",
                cx.params(),
                json!({ "facets": graph.facets.len(), "edges": graph.edges.len(),
                        "regular_degree": graph.regular_degree(), "connected": graph.is_connected(),
                        "diameter": diam, "dot": written }),
                text,
            );
        }
        Command::Theta { group, k, orbits, order } => {
            let (sys, c) = group.system()?;
            let perm = theta_permutation(&sys, &c, k)?;
            let out = Output { json: group.json, timing, start };
            let mut results = json!({ "permutation": one_based(&perm) });
            let mut text = format!(
                "theta: {}\n",
                perm.iter().enumerate().map(|(i, p)| format!("{}->{}", i + 1, p + 1)).collect::<Vec<_>>().join(" ")
            );
            if order {
                let ord = permutation_order(&perm);
                let expected = expected_theta_order(&sys, k);
                results["order"] = json!(ord);
                results["expected_order"] = json!(expected);
                results["cycles"] =
                    json!(permutation_cycles(&perm).iter().map(|c| one_based(c)).collect::<Vec<_>>());
                text.push_str(&format!("order: {ord} (expected {expected})\n"));
            }
            if orbits {
                let cx = SubwordComplex::with_w0(&sys, multi_cluster_word(&sys, &c, k)?)?;
                let orb = theta_orbits_on_facets(&sys, &cx);
                results["orbits"] = json!(orb
                    .iter()
                    .map(|o| o.iter().map(|f| f.to_one_based()).collect::<Vec<_>>())
                    .collect::<Vec<_>>());
                text.push_str(&format!("orbits on {} facets: {}\n", cx.num_facets(), orb.len()));
                for o in &orb {
                    let shown: Vec<String> = o.iter().map(|f| f.to_string()).collect();
                    text.push_str(&format!("  ({}) {}\n", o.len(), shown.join(" -> ")));
                }
            }
            out.emit("theta", json!({ "type": group.group, "cox": c.to_string(), "k": k }), results, text);
        }
        Command::Bijection { kind, m, k, cox, json: as_json } => {
            let out = Output { json: as_json, timing, start };
            let n = match kind {
                BijectionKind::Typea => m.checked_sub(2 * k + 1),
                BijectionKind::Typeb => m.checked_sub(k),
            }
            .filter(|&n| n >= 1)
            .with_context(|| format!("no group of this type for m = {m}, k = {k}"))?;
            let c = match &cox {
                Some(s) => s.parse::<Word>()?,
                None => (0..n).collect(),
            };
            let (kind_name, rows): (&str, Vec<(usize, String, Value)>) = match kind {
                BijectionKind::Typea => {
                    let diags = type_a_bijection(m, k, &c)?;
                    let sys = CoxeterSystem::from_name(&format!("A{n}"))?;
                    let q = multi_cluster_word(&sys, &c, k)?;
                    ("typea", q.iter().zip(diags).enumerate().map(|(i, (&s, d))| (i + 1, format!("s{}", s + 1), json!([d.a, d.b]))).collect())
                }
                BijectionKind::Typeb => {
                    let pairs = type_b_bijection(m, k, &c)?;
                    let sys = CoxeterSystem::from_name(&format!("B{n}"))?;
                    let q = multi_cluster_word(&sys, &c, k)?;
                    (
                        "typeb",
                        q.iter()
                            .zip(pairs)
                            .enumerate()
                            .map(|(i, (&s, p))| (i + 1, format!("s{}", s + 1), json!(p.0.iter().map(|d| [d.a, d.b]).collect::<Vec<_>>())))
                            .collect(),
                    )
                }
            };
            let text: String = rows.iter().map(|(p, s, d)| format!("{p:>3}  {s:<4} {d}\n")).collect();
            out.emit(
                "bijection",
                json!({ "kind": kind_name, "m": m, "k": k, "cox": c.to_string() }),
                json!(rows.iter().map(|(p, s, d)| json!({ "position": p, "letter": s, "diagonals": d })).collect::<Vec<_>>()),
                text,
            );
        }
        Command::Quiver { kind, group, copies, origin, dot } => {
            let (sys, c) = group.system()?;
            let out = Output { json: group.json, timing, start };
            let (name, quiver) = match kind {
                QuiverKind::Ar => ("ar", ar_quiver(&sys, &c)?),
                QuiverKind::Repetition => ("repetition", repetition_window(&sys, &c, copies, origin)?.quiver),
            };
            let dot_text = export_dot(&quiver);
            let written = write_dot(&dot, &dot_text)?;
            let mut text = format!("vertices: {}\narrows: {}\n", quiver.vertices.len(), quiver.arrows.len());
            if dot.is_none() {
                text.push_str(&dot_text);
            }
            let mut results = quiver_json(&quiver);
            results["dot"] = json!(written);
            out.emit(
                "quiver",
                json!({ "kind": name, "type": group.group, "cox": c.to_string(), "copies": copies, "origin": origin }),
                results,
                text,
            );
        }
        Command::Verify { which, group, k, seed, samples, json: as_json } => {
            let run_it = |w: VerifyWhat| which == VerifyWhat::All || which == w;
            let mut reports: Vec<ExperimentReport> = Vec::new();
            if run_it(VerifyWhat::Counts) {
                let list = verify_instances(harness::count_instances_default(), &group, k)?;
                reports.push(harness::timed(timing, || harness::run_count_experiment(&list))?);
            }
            if run_it(VerifyWhat::Independence) {
                let list = verify_instances(harness::independence_instances_default(), &group, k)?;
                reports.push(harness::timed(timing, || harness::run_independence_experiment(&list))?);
            }
            if run_it(VerifyWhat::Sin) {
                let desc: Option<GroupDescriptor> = group.as_deref().map(str::parse).transpose()?;
                let list: Vec<(GroupDescriptor, usize)> = match desc {
                    Some(d) => {
                        let sys = CoxeterSystem::new(d)?;
                        let len = k.unwrap_or(1) * sys.rank() + sys.num_positive_roots();
                        vec![(d, len)]
                    }
                    None => harness::sin_instances_default(),
                };
                reports.push(harness::timed(timing, || harness::run_sin_experiment(&list))?);
            }
            if run_it(VerifyWhat::Mesh) {
                let list = verify_instances(harness::mesh_instances_default(), &group, k)?;
                reports.push(harness::timed(timing, || harness::run_mesh_experiment(&list))?);
            }
            if run_it(VerifyWhat::Nonfaces) {
                let list = verify_instances(harness::nonface_instances_default(), &group, k)?;
                reports.push(harness::timed(timing, || harness::run_nonface_experiment(&list))?);
            }
            if run_it(VerifyWhat::Csp) {
                let list = verify_instances(harness::csp_instances_default(), &group, k)?;
                reports.push(harness::timed(timing, || harness::run_csp_experiment(&list))?);
            }
            if run_it(VerifyWhat::Maximality) {
                let list = verify_instances(harness::maximality_instances_default(), &group, k)?;
                reports.push(harness::timed(timing, || {
                    harness::run_maximality_experiment(&list, MaximalityMode::Auto(samples), seed)
                })?);
            }
            if which == VerifyWhat::All && group.is_none() {
                reports.push(harness::timed(timing, harness::run_naive_experiment)?);
            }
            let ok = !reports.iter().any(ExperimentReport::failed);
            let out = Output { json: as_json, timing, start };
            let mut text: String = reports.iter().map(|r| r.render() + "\n").collect();
            text.push_str(if ok { "all assertions passed\n" } else { "ASSERTION FAILURES\n" });
            out.emit(
                "verify",
                json!({ "which": format!("{:?}", which).to_lowercase(), "type": group, "k": k, "seed": seed, "samples": samples }),
                serde_json::to_value(&reports)?,
                text,
            );
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
