use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dp1::error::{Error, Result};
use dp1::excomb::{self, Group};
use dp1::gfield;
use dp1::sextic::{self, Sextic};
use dp1::{bounds, genpos, sweep};

#[derive(Parser)]
#[command(name = "dp1", version, about = "Degree-1 del Pezzo surfaces over finite fields")]
struct Cli {
    /// Render output as text instead of JSON
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Describe a finite field
    FieldInfo {
        #[arg(long, value_parser = parse_q)]
        q: u64,
    },
    /// Search for points in general position with prescribed Galois orbits
    Genpos {
        #[arg(long, value_parser = parse_q)]
        q: u64,
        /// Comma-separated counts of closed points of degree 1, 2, ...
        #[arg(long, value_parser = parse_orbits)]
        orbits: genpos::OrbitSpec,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Point counts #X(F_{q^n}) for n = 1..N
    Count {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Exceptional curves defined over F_{q^n}
    Curves {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Include the curves themselves
        #[arg(long)]
        list: bool,
    },
    /// Identify the type of the Frobenius class
    Identify {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 2)]
        depth_a: u32,
        #[arg(long, default_value_t = 1)]
        depth_b: u32,
    },
    /// Generalized Eckardt points over the splitting field
    Eckardt {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Weyl-group class tables
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
    /// Existence thresholds from degree-2 parents
    Bounds {
        /// Print the whole lower-bound table as CSV
        #[arg(long, conflicts_with = "type_index", required_unless_present = "type_index")]
        table: bool,
        /// Derivation for one degree-1 type
        #[arg(long = "type")]
        type_index: Option<usize>,
    },
    /// Exhaustive normal-form sweep, or seeded random sampling
    Sweep(SweepArgs),
    /// Re-check a fixture (.dp1) or a JSON artifact
    Verify { path: PathBuf },
}

#[derive(Args)]
struct SurfaceArgs {
    /// Sextic in the text format
    #[arg(long)]
    surface: PathBuf,
    /// Expected field size; rejected if the file says otherwise
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Subcommand)]
enum TablesAction {
    /// Re-run every table invariant
    Validate,
    /// Print class records
    Show {
        #[arg(long, value_enum, default_value_t = GroupArg::E8)]
        group: GroupArg,
        #[arg(long = "type")]
        type_index: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    E7,
    E8,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_q)]
    q: u64,
    #[arg(long)]
    family: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Checkpoint file written after every batch
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
    /// Stop after this many batches of members
    #[arg(long)]
    limit: Option<u64>,
    /// Random members of the reduced form instead of an exhaustive sweep
    #[arg(long, requires = "seed")]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

struct Output {
    value: Value,
    /// preformatted text for --human, if the verb has one
    text: Option<String>,
}

impl From<Value> for Output {
    fn from(value: Value) -> Self {
        Output { value, text: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(out) => {
            if cli.human {
                print!("{}", out.text.unwrap_or_else(|| render(&out.value, 0)));
            } else if let Value::String(s) = &out.value {
                print!("{s}");
            } else {
                println!("{}", out.value);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", json!({ "error": e.to_string() }));
            eprintln!("dp1: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_q(s: &str) -> std::result::Result<u64, String> {
    let q: u64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    gfield::prime_power(q).map(|_| q).ok_or_else(|| format!("{q} is not a prime power"))
}

fn parse_orbits(s: &str) -> std::result::Result<genpos::OrbitSpec, String> {
    genpos::OrbitSpec::parse(s).map_err(|e| e.to_string())
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn load_surface(a: &SurfaceArgs) -> Result<Sextic> {
    let s = read_sextic(&a.surface)?;
    if let Some(q) = a.q {
        if q != s.q() {
            return Err(Error::Parse(format!("surface is over F_{}, not F_{q}", s.q())));
        }
    }
    Ok(s)
}

fn read_sextic(path: &Path) -> Result<Sextic> {
    Sextic::parse(&std::fs::read_to_string(path)?)
}

fn run(verb: Verb) -> Result<Output> {
    match verb {
        Verb::FieldInfo { q } => {
            let f = gfield::field_of_order(q)?;
            Ok(json!({
                "q": q,
                "p": f.p(),
                "k": f.k(),
                "tag": f.tag(),
                "modulus": f.modulus(),
                "generator": f.generator(),
                "log_tables": f.has_tables(),
            })
            .into())
        }
        Verb::Genpos { q, orbits, jobs } => {
            set_jobs(jobs);
            let found = genpos::search_configuration(q, &orbits)?;
            let mut v = json!({ "q": q, "orbits": orbits.counts, "found": found.is_some(), "exhaustive": true });
            if let Some(cfg) = found {
                v["configuration"] = cfg.to_json();
            }
            Ok(v.into())
        }
        Verb::Count { surface, n } => {
            let s = load_surface(&surface)?;
            let counts = (1..=n).map(|k| sextic::count_points(&s, k)).collect::<Result<Vec<_>>>()?;
            Ok(json!({ "kind": "count", "q": s.q(), "surface": s.render(), "a": counts }).into())
        }
        Verb::Curves { surface, n, list } => {
            let s = load_surface(&surface)?;
            let set = sextic::exceptional_curves(&s, n)?;
            let mut v = json!({ "kind": "curves", "q": s.q(), "n": n, "field": set.field.tag(), "surface": s.render(), "count": set.curves.len() });
            if list {
                v["curves"] = serde_json::to_value(&set.curves).expect("serializable");
            }
            Ok(v.into())
        }
        Verb::Identify { surface, depth_a, depth_b } => {
            let s = load_surface(&surface)?;
            let c = sextic::classify(&s, depth_a, depth_b)?;
            let id = &c.identification;
            let ty = if id.resolved { json!(id.candidates[0]) } else { Value::Null };
            let carter: Vec<String> = id
                .candidates
                .iter()
                .map(|&t| excomb::tables().record(Group::E8, t).unwrap().carter.clone())
                .collect();
            Ok(json!({
                "kind": "identify",
                "type": ty,
                "candidates": id.candidates,
                "carter": carter,
                "orbit_trace": c.orbit_trace,
                "surface": s.render(),
            })
            .into())
        }
        Verb::Eckardt { surface, jobs } => {
            set_jobs(jobs);
            let s = load_surface(&surface)?;
            let r = sextic::eckardt_points(&s)?;
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["kind"] = json!("eckardt");
            v["surface"] = json!(s.render());
            Ok(v.into())
        }
        Verb::Tables { action } => tables(action),
        Verb::Bounds { table, type_index } => {
            if table {
                let rows = bounds::lower_bounds_table()?;
                let mut csv = String::from("type,q0,q0_even,expected_q0,expected_q0_even,match\n");
                let mut text = format!("{:>5} {:>5} {:>6}   {:>9}\n", "type", "q0", "q0'", "expected");
                for r in &rows {
                    csv += &format!(
                        "{},{},{},{},{},{}\n",
                        r.type_index,
                        r.q0,
                        r.q0_even,
                        r.expected_q0,
                        r.expected_q0_even,
                        r.matches()
                    );
                    let mark = if r.matches() { "" } else { "  mismatch" };
                    text += &format!(
                        "{:>5} {:>5} {:>6}   {:>4} {:>4}{mark}\n",
                        r.type_index, r.q0, r.q0_even, r.expected_q0, r.expected_q0_even
                    );
                }
                return Ok(Output { value: Value::String(csv), text: Some(text) });
            }
            let t = bounds::existence_threshold(type_index.expect("clap enforces one of the flags"))?;
            let upto = t.parents.iter().map(|p| p.odd.max(p.even)).max().unwrap_or(2);
            let parents: Vec<Value> = t
                .parents
                .iter()
                .map(|p| {
                    let steps: Vec<Value> = bounds::derivation(&p.profile, upto)
                        .into_iter()
                        .map(|(q, n, b, ok)| json!({ "q": q, "points": n, "bound": b, "exceeds": ok }))
                        .collect();
                    json!({ "profile": p.profile, "odd": p.odd, "even": p.even, "comparisons": steps })
                })
                .collect();
            let mut text = format!("type {}: q0 = {}, q0' = {}\n", t.deg1_type, t.q0, t.q0_even);
            for p in &t.parents {
                let pr = &p.profile;
                text += &format!(
                    "  parent E7 type {}: n = {}, m = {}, a = {}, exists for q >= {}; thresholds {} / {}\n",
                    pr.e7_type, pr.n, pr.m, pr.trace, pr.existence_threshold_deg2, p.odd, p.even
                );
                for (q, n, b, ok) in bounds::derivation(pr, upto) {
                    text += &format!("    q = {q:>4}: N = {n:>7}  B = {b:>10.3}  {}\n", if ok { "N > B" } else { "-" });
                }
            }
            Ok(Output {
                value: json!({ "type": t.deg1_type, "q0": t.q0, "q0_even": t.q0_even, "parents": parents }),
                text: Some(text),
            })
        }
        Verb::Sweep(a) => run_sweep(a),
        Verb::Verify { path } => verify(&path),
    }
}

fn tables(action: TablesAction) -> Result<Output> {
    match action {
        TablesAction::Validate => {
            let t = excomb::load_tables()?;
            let msg = format!("{} + {} records OK", t.e8.len(), t.e7.len());
            Ok(Output { value: json!({ "ok": true, "message": msg }), text: Some(msg + "\n") })
        }
        TablesAction::Show { group, type_index } => {
            let g = match group {
                GroupArg::E7 => Group::E7,
                GroupArg::E8 => Group::E8,
            };
            let t = excomb::tables();
            let recs: Vec<&excomb::ClassRecord> = match type_index {
                Some(i) => vec![t.record(g, i).ok_or(Error::NoMatchingClass)?],
                None => t.group(g).iter().collect(),
            };
            let mut text = format!("{:>4} {:<16} {:>6} {:>6}  orbits\n", "type", "carter", "trace", "order");
            for r in &recs {
                text +=
                    &format!("{:>4} {:<16} {:>6} {:>6}  {}\n", r.index, r.carter, r.trace, r.order(), r.orbit_string());
            }
            Ok(Output { value: serde_json::to_value(&recs).expect("serializable"), text: Some(text) })
        }
    }
}

fn run_sweep(a: SweepArgs) -> Result<Output> {
    set_jobs(a.jobs);
    let report = match a.samples {
        Some(n) => sweep::run_random(a.q, n, a.seed.expect("clap enforces --seed"))?,
        None => {
            let fams = sweep::select(a.q, a.family)?;
            let opts = sweep::SweepOptions {
                checkpoint: a.checkpoint,
                resume: a.resume,
                max_batches: a.limit,
                ..Default::default()
            };
            sweep::run_sweep(a.q, &fams, &opts)?
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("serializable");
    std::fs::write(&a.out, &text)?;
    Ok(json!({
        "kind": "sweep",
        "q": report.q,
        "out": a.out,
        "complete": report.complete,
        "counters": report.counters,
        "found": report.found(),
        "absent": report.absent(),
        "wall_clock_secs": report.wall_clock_secs,
    })
    .into())
}

fn verify(path: &Path) -> Result<Output> {
    if path.extension().is_some_and(|e| e == "dp1") {
        let r = sweep::verify_fixture(path)?;
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["ok"] = json!(true);
        return Ok(v.into());
    }
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if v.get("types").is_some() {
        let r: sweep::SweepReport = serde_json::from_value(v)?;
        r.verify()?;
        return Ok(json!({ "ok": true, "kind": "sweep", "found": r.found().len() }).into());
    }
    let kind = v["kind"].as_str().ok_or_else(|| Error::Parse("unrecognized artifact".into()))?;
    let s = Sextic::parse(v["surface"].as_str().ok_or_else(|| Error::Parse("artifact without surface".into()))?)?;
    let mismatch = |what: &str| Err(Error::Verification(format!("{what} differ")));
    match kind {
        "count" => {
            let a: Vec<u64> = serde_json::from_value(v["a"].clone())?;
            let got = (1..=a.len() as u32).map(|n| sextic::count_points(&s, n)).collect::<Result<Vec<_>>>()?;
            if got != a {
                return mismatch("point counts");
            }
        }
        "curves" => {
            let n = v["n"].as_u64().unwrap_or(1) as u32;
            if sextic::exceptional_curves(&s, n)?.curves.len() as u64 != v["count"].as_u64().unwrap_or(u64::MAX) {
                return mismatch("curve counts");
            }
        }
        "identify" => {
            let ot: excomb::OrbitTrace = serde_json::from_value(v["orbit_trace"].clone())?;
            let got = sextic::orbit_trace(&s, ot.a.len() as u32, ot.b.len() as u32)?;
            if got != ot {
                return mismatch("orbit-trace data");
            }
            let id = excomb::identify_type(&got)?;
            let cands: Vec<usize> = serde_json::from_value(v["candidates"].clone())?;
            if id.candidates != cands || !cands.iter().all(|&t| sextic::weil_consistent(&got, t)) {
                return mismatch("candidate types");
            }
        }
        "eckardt" => {
            let r = sextic::eckardt_points(&s)?;
            if serde_json::to_value(&r.eckardt_points)? != v["eckardt_points"] {
                return mismatch("Eckardt points");
            }
        }
        _ => return Err(Error::Parse(format!("unknown artifact kind {kind}"))),
    }
    if !sextic::is_smooth(&s)?.is_smooth() {
        return Err(Error::NotDelPezzo);
    }
    Ok(json!({ "ok": true, "kind": kind }).into())
}

/// Plain-text rendering of a JSON value.
fn render(v: &Value, indent: usize) -> String {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, x)| match x {
                Value::Object(_) => format!("{pad}{k}:\n{}", render(x, indent + 2)),
                Value::Array(a) if a.iter().any(|e| e.is_object()) => {
                    format!("{pad}{k}:\n{}", a.iter().map(|e| render(e, indent + 2)).collect::<String>())
                }
                Value::String(s) if s.contains('\n') => {
                    format!("{pad}{k}:\n{}", s.lines().map(|l| format!("{pad}  {l}\n")).collect::<String>())
                }
                _ => format!("{pad}{k}: {}\n", scalar(x)),
            })
            .collect(),
        _ => format!("{pad}{}\n", scalar(v)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}
