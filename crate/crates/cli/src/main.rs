//! `qgrass`: command-line front end for quivergrass.
//!
//! Exit codes: 0 on success (and on checks that hold), 2 when a check ran
//! and found violations, 1 when the input could not be processed.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quivergrass::construct::{
    build_eta, case1_pair, case2_x, case2_y, check_bijection, check_condition_c, check_lemma1, check_lemma2,
    kronecker_preprojective, make_eta_context, remark_counterexample_demo, remark_xprime, EtaContext,
};
use quivergrass::grassmann::enumerate_submodules;
use quivergrass::homext::{euler_form, ext1, hom_basis, is_brick, is_exceptional};
use quivergrass::json::{dimvec_from_json, matrix_to_json, parse_quiver, parse_representation, parse_text, rep_to_json};
use quivergrass::reptype::{classify, tits_definiteness};
use quivergrass::{DimVector, Error, FieldSpec, Limits, Matrix, Quiver, Representation};

#[derive(Parser)]
#[command(name = "qgrass", version, about = "Quiver representations, Hom/Ext and quiver Grassmannians over finite fields")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Ground field: p=<prime>, <prime> or rational. Overrides the field stored in input files.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of enumeration steps per exhaustive search.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads for enumeration (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Report counts only, without listing points.
    #[arg(long, global = true)]
    count_only: bool,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Representation type (finite, tame, wild) of a connected quiver.
    Classify {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Basis of Hom(M, N).
    Hom {
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        n: PathBuf,
    },
    /// Ext^1(M, N) with its canonical cocycle basis.
    Ext1 {
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        n: PathBuf,
    },
    /// Euler form <d, e> of two dimension vectors.
    Euler {
        #[arg(long)]
        quiver: PathBuf,
        /// Dimension vector as JSON {vertex: int} or a path to such a file.
        #[arg(long)]
        d: String,
        #[arg(long)]
        e: String,
    },
    /// Whether End(M) is the ground field.
    Brick {
        #[arg(long)]
        m: PathBuf,
    },
    /// Points of the quiver Grassmannian G_d(M).
    Grassmannian {
        #[arg(value_enum)]
        mode: GrMode,
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        d: String,
    },
    /// The functor eta on a Kronecker representation.
    Eta {
        #[command(subcommand)]
        cmd: EtaCmd,
    },
    /// Condition (C) for eta(N).
    CheckC(PairArgs),
    /// Every submodule of X^a with dimension vector dim X is isomorphic to X.
    CheckLemma1 {
        #[arg(long)]
        x: PathBuf,
        #[arg(long, default_value_t = 2)]
        a: usize,
    },
    /// Every (w,w)-submodule of X^a is isomorphic to a power of X.
    CheckLemma2 {
        #[arg(long)]
        x: PathBuf,
        #[arg(long, default_value_t = 2)]
        a: usize,
    },
    /// Compares |G_(1,1)(N)| with |G_(x+y)(eta N)|.
    Bijection(PairArgs),
    /// Built-in instances.
    Demo {
        #[command(subcommand)]
        cmd: DemoCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GrMode {
    List,
    Count,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    x: PathBuf,
    #[arg(long)]
    y: PathBuf,
    /// Kronecker representation N (source = Y side, sink = X side).
    #[arg(long = "kronecker")]
    n_rep: PathBuf,
}

#[derive(Subcommand)]
enum EtaCmd {
    Build(PairArgs),
}

#[derive(Subcommand)]
enum DemoCmd {
    /// X(λ) and Y = (k,k;1,0,0) on K(3).
    Case2 {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated λ values; default 1,2,...,n.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambdas: Option<Vec<i64>>,
    },
    /// K(2) plus a source w with an arrow w -> head; X the preprojective (m, m+1).
    Case1 {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value = "2")]
        head: String,
    },
    /// X′(l1, l2) with a nilpotent third arrow: condition (C) fails.
    Remark {
        #[arg(long, default_value_t = 1)]
        l1: i64,
        #[arg(long, default_value_t = 2)]
        l2: i64,
        /// Source dimension of N (1, 2 or 3); default runs all three.
        #[arg(long)]
        b: Option<usize>,
    },
}

/// A finished report: JSON payload plus whether the check it ran held.
struct Report {
    body: Value,
    holds: bool,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report { body, holds: true }
    }
}

fn read(path: &Path) -> quivergrass::Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_rep(path: &Path, opts: &Opts) -> quivergrass::Result<Representation> {
    parse_representation(&read(path)?, opts.field)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_dimvec(q: &Quiver, arg: &str) -> quivergrass::Result<DimVector> {
    let text = if Path::new(arg).is_file() { read(Path::new(arg))? } else { arg.to_string() };
    dimvec_from_json(q, &parse_text(&text)?)
}

fn field_or(opts: &Opts, default: u64) -> quivergrass::Result<FieldSpec> {
    match opts.field {
        Some(f) => Ok(f),
        None => FieldSpec::prime(default),
    }
}

fn limits(opts: &Opts) -> Limits {
    Limits {
        budget: opts.budget,
        seed: opts.seed,
        parallel: opts.jobs > 1,
        ..Limits::default()
    }
}

fn morphism_json(q: &Quiver, maps: &[Matrix]) -> Value {
    Value::Object(q.vertices().iter().cloned().zip(maps.iter().map(matrix_to_json)).collect())
}

/// Reduced Kronecker modules on K(n) used by the demos: a bristle and the
/// module of dimension (1,2) whose first two arrows are the coordinate inclusions.
fn demo_modules(n: usize, field: FieldSpec) -> quivergrass::Result<Vec<Representation>> {
    let q = Arc::new(Quiver::kronecker(n)?);
    let bristle = (0..n).map(|i| Matrix::from_i64(field, 1, 1, &[i64::from(i == 0)])).collect();
    let coords = (0..n).map(|i| Matrix::from_fn(field, 2, 1, |r, _| i64::from(r == i))).collect();
    Ok(vec![
        Representation::new(q.clone(), field, DimVector(vec![1, 1]), bristle)?,
        Representation::new(q, field, DimVector(vec![1, 2]), coords)?,
    ])
}

fn run_pipeline(ctx: &EtaContext, modules: &[Representation], l: &Limits) -> quivergrass::Result<Report> {
    let mut rows = Vec::new();
    let mut holds = true;
    for n_rep in modules {
        let w = build_eta(ctx, n_rep)?;
        let c = check_condition_c(ctx, &w, l)?;
        let b = check_bijection(ctx, n_rep, l)?;
        holds &= c.holds && b.equal;
        rows.push(json!({
            "kronecker": rep_to_json(n_rep),
            "dims_m": w.m.dims().0,
            "condition_c": c.to_json(),
            "bijection": b,
        }));
    }
    Ok(Report {
        body: json!({
            "n": ctx.n,
            "x": rep_to_json(&ctx.x),
            "y": rep_to_json(&ctx.y),
            "holds": holds,
            "instances": rows,
        }),
        holds,
    })
}

fn run(cmd: &Cmd, opts: &Opts) -> quivergrass::Result<Report> {
    let l = limits(opts);
    match cmd {
        Cmd::Classify { quiver } => {
            let q = parse_quiver(&read(quiver)?)?;
            let r = classify(&q)?;
            Ok(Report::ok(json!({
                "kind": r.kind,
                "witness": r.witness,
                "tits_form": tits_definiteness(&q),
            })))
        }
        Cmd::Hom { m, n } => {
            let (m, n) = (load_rep(m, opts)?, load_rep(n, opts)?);
            let h = hom_basis(&m, &n)?;
            let basis: Vec<Value> = h.basis.iter().map(|f| morphism_json(m.quiver(), &f.maps)).collect();
            Ok(Report::ok(json!({"dim": h.dim(), "basis": basis})))
        }
        Cmd::Ext1 { m, n } => {
            let (m, n) = (load_rep(m, opts)?, load_rep(n, opts)?);
            let e = ext1(&m, &n)?;
            let q = m.quiver();
            let cocycles: Vec<Value> = e
                .cocycles
                .iter()
                .map(|c| Value::Object(q.arrows().iter().map(|a| a.id.clone()).zip(c.components.iter().map(matrix_to_json)).collect()))
                .collect();
            Ok(Report::ok(json!({"dim": e.dim, "cocycles": cocycles})))
        }
        Cmd::Euler { quiver, d, e } => {
            let q = parse_quiver(&read(quiver)?)?;
            let value = euler_form(&q, &load_dimvec(&q, d)?, &load_dimvec(&q, e)?)?;
            Ok(Report::ok(json!({"euler": value})))
        }
        Cmd::Brick { m } => {
            let m = load_rep(m, opts)?;
            let brick = is_brick(&m)?;
            Ok(Report::ok(json!({
                "brick": brick,
                "dim_end": hom_basis(&m, &m)?.dim(),
                "exceptional": brick && is_exceptional(&m)?,
            })))
        }
        Cmd::Grassmannian { mode, m, d } => {
            let m = load_rep(m, opts)?;
            let d = load_dimvec(m.quiver(), d)?;
            let count_only = opts.count_only || matches!(mode, GrMode::Count);
            Ok(Report::ok(enumerate_submodules(&m, &d, &l)?.to_json(count_only)))
        }
        Cmd::Eta { cmd: EtaCmd::Build(p) } => {
            let ctx = make_eta_context(&load_rep(&p.x, opts)?, &load_rep(&p.y, opts)?)?;
            let w = build_eta(&ctx, &load_rep(&p.n_rep, opts)?)?;
            Ok(Report::ok(json!({
                "a": w.a,
                "b": w.b,
                "m": rep_to_json(&w.m),
                "mu": morphism_json(w.m.quiver(), &w.mu.maps),
                "pi": morphism_json(w.m.quiver(), &w.pi.maps),
            })))
        }
        Cmd::CheckC(p) => {
            let ctx = make_eta_context(&load_rep(&p.x, opts)?, &load_rep(&p.y, opts)?)?;
            let w = build_eta(&ctx, &load_rep(&p.n_rep, opts)?)?;
            let r = check_condition_c(&ctx, &w, &l)?;
            Ok(Report { holds: r.holds, body: r.to_json() })
        }
        Cmd::CheckLemma1 { x, a } => {
            let r = check_lemma1(&load_rep(x, opts)?, *a, &l)?;
            Ok(Report { holds: r.holds, body: r.to_json() })
        }
        Cmd::CheckLemma2 { x, a } => {
            let r = check_lemma2(&load_rep(x, opts)?, *a, &l)?;
            Ok(Report { holds: r.holds, body: r.to_json() })
        }
        Cmd::Bijection(p) => {
            let ctx = make_eta_context(&load_rep(&p.x, opts)?, &load_rep(&p.y, opts)?)?;
            let r = check_bijection(&ctx, &load_rep(&p.n_rep, opts)?, &l)?;
            Ok(Report {
                holds: r.equal,
                body: serde_json::to_value(&r).expect("report serializes"),
            })
        }
        Cmd::Demo { cmd } => demo(cmd, opts, &l),
    }
}

fn demo(cmd: &DemoCmd, opts: &Opts, l: &Limits) -> quivergrass::Result<Report> {
    match cmd {
        DemoCmd::Case2 { n, lambdas } => {
            let field = field_or(opts, 3)?;
            let lambdas = lambdas.clone().unwrap_or_else(|| (1..=*n as i64).collect());
            if lambdas.len() != *n {
                return Err(Error::InvalidInput(format!("expected {n} values of λ")));
            }
            let ctx = make_eta_context(&case2_x(&lambdas, field)?, &case2_y(field))?;
            run_pipeline(&ctx, &demo_modules(ctx.n, field)?, l)
        }
        DemoCmd::Case1 { m, head } => {
            let field = field_or(opts, 3)?;
            let q = Quiver::from_edges(&["1", "2", "w"], &[("a1", "1", "2"), ("a2", "1", "2"), ("c", "w", head)])?;
            let pair = case1_pair(&q, "w", &kronecker_preprojective(*m, field))?;
            let ctx = make_eta_context(&pair.x, &pair.y)?;
            let mut report = run_pipeline(&ctx, &demo_modules(ctx.n, field)?, l)?;
            report.body["x_exceptional"] = json!(pair.x_exceptional);
            Ok(report)
        }
        DemoCmd::Remark { l1, l2, b } => {
            let field = field_or(opts, 3)?;
            let bs: Vec<usize> = b.map_or_else(|| vec![1, 2, 3], |b| vec![b]);
            let mut rows = Vec::new();
            let mut holds = true;
            for b in bs {
                let r = remark_counterexample_demo(field, *l1, *l2, b, l)?;
                holds &= r.condition_c.holds;
                rows.push(r.to_json());
            }
            let x = remark_xprime(*l1, *l2, field)?;
            Ok(Report {
                body: json!({"x": rep_to_json(&x), "holds": holds, "instances": rows}),
                holds,
            })
        }
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", compact(x))),
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push_str(&format!("{pad}[{i}]\n"));
                render_text(x, indent + 2, out);
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", compact(v))),
    }
}

/// Scalars and matrices print on one line.
fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| match x {
            Value::Array(row) => row.iter().all(|y| !y.is_array() && !y.is_object()),
            Value::Object(_) => false,
            _ => true,
        }),
        Value::Object(_) => false,
        _ => true,
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.opts.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(1);
    }
    // a second initialization only happens in-process and is harmless to ignore
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.opts.jobs).build_global();
    match run(&cli.cmd, &cli.opts) {
        Ok(report) => {
            let out = match cli.opts.output {
                Output::Json => serde_json::to_string_pretty(&report.body).expect("JSON values serialize") + "\n",
                Output::Text => {
                    let mut out = String::new();
                    render_text(&report.body, 0, &mut out);
                    out
                }
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e @ Error::BudgetExceeded { .. }) => {
            eprintln!("error: budget exceeded ({e}); raise --budget or shrink the instance");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
