use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use zzqh::module::{injective, projective, simple, Module};
use zzqh::qh::Context;
use zzqh::report::Report;
use zzqh::resolution::{minimal_resolution, Grading, Ring};
use zzqh::suite;
use zzqh::{compute_basis, Error, Vertex};

#[derive(Parser)]
#[command(name = "zzqh", version, about = "Higher zigzag algebras, covers and duals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Instance {
    /// Algebra: zigzag, zigzag-trunc, cover, borel, qdual, dual-conjectured, dual-built or fixture:<name>
    #[arg(long, default_value = "cover")]
    algebra: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<u32>,
    /// Path-length cap for `build`, resolution cap elsewhere (ZZQH_MAX_STEPS overrides the latter)
    #[arg(long)]
    max_steps: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GradingArg {
    Length,
    Flat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the algebra basis as JSON
    Build(Instance),
    /// Dimension table per length, bidegree and vertex pair
    Dims(Instance),
    /// Cartan matrix
    Cartan(Instance),
    /// Minimal projective resolution of a module given as kind:vertex
    Resolve {
        #[command(flatten)]
        inst: Instance,
        /// simple|projective|injective|standard|costandard, then a vertex such as 2,0,0
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value = "length")]
        grading: GradingArg,
    },
    /// Run a check suite; without --n/--s the default grid is used
    Check {
        name: String,
        #[command(flatten)]
        inst: Instance,
    },
    /// Presentation of the dual built from Ext
    Dual {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        /// Emit the conjectured presentation instead of the built one
        #[arg(long)]
        conjectured: bool,
    },
    /// Counterexample, loop and line fixtures
    Fixtures {
        #[arg(long)]
        max_steps: Option<usize>,
    },
}

enum Fail {
    Arg(String),
    Check(Value),
    NonTermination(Value),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        match e {
            Error::NonTermination { .. } | Error::Truncated { .. } => {
                Fail::NonTermination(json!({"non_termination": e.to_string()}))
            }
            _ => Fail::Arg(e.to_string()),
        }
    }
}

fn env_steps() -> Result<Option<usize>, Fail> {
    match std::env::var("ZZQH_MAX_STEPS") {
        Ok(v) => v.parse().map(Some).map_err(|_| Fail::Arg(format!("ZZQH_MAX_STEPS={v:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

impl Instance {
    fn n(&self) -> usize {
        self.n.unwrap_or(1)
    }
    fn s(&self) -> u32 {
        self.s.unwrap_or(2)
    }
    fn resolution_steps(&self) -> Result<Option<usize>, Fail> {
        Ok(env_steps()?.or(self.max_steps))
    }
    fn presentation(&self) -> Result<zzqh::Presentation, Fail> {
        Ok(suite::presentation(&self.algebra, self.n(), self.s(), self.resolution_steps()?)?)
    }
    fn algebra(&self) -> Result<zzqh::AlgebraInstance, Fail> {
        Ok(compute_basis(&self.presentation()?, zzqh::DEFAULT_MAX_LEN)?)
    }
}

fn write_out(text: &str) {
    // a closed pipe is not an error for a batch tool
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    write_out(&format!("{}\n", serde_json::to_string_pretty(v).expect("json")));
}

fn finish(reports: Vec<Report>) -> Result<(), Fail> {
    let all: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
    let out = json!({"passed": reports.iter().all(|r| r.passed()), "reports": all});
    if reports.iter().all(|r| r.passed()) {
        print(&out);
        Ok(())
    } else {
        Err(Fail::Check(out))
    }
}

fn resolve_module(inst: &Instance, spec: &str, grading: GradingArg) -> Result<Value, Fail> {
    let (kind, vtx) = spec.split_once(':').ok_or_else(|| Fail::Arg(format!("module {spec:?} is not kind:vertex")))?;
    let pres = inst.presentation()?;
    let v = Vertex::parse(vtx)?;
    let x = pres.vertex_index(&v).ok_or_else(|| Fail::Arg(format!("no vertex {v} in {}", pres.name)))?;
    let a = compute_basis(&pres, zzqh::DEFAULT_MAX_LEN)?;
    let steps = inst.resolution_steps()?.unwrap_or(a.dim() + 1);
    let ctx = |()| -> Result<Context, Fail> {
        if pres.family.is_none() {
            return Err(Fail::Arg(format!("{} has no vertex order", pres.name)));
        }
        Ok(Context::family(&pres)?)
    };
    let m: Module = match kind {
        "simple" => simple(&a, x),
        "projective" => projective(&a, x).module,
        "injective" => injective(&a.opposite()?, x),
        "standard" => ctx(())?.standards[x].clone(),
        "costandard" => ctx(())?.costandards[x].clone(),
        _ => return Err(Fail::Arg(format!("unknown module kind {kind:?}"))),
    };
    let ring = Ring::new(a);
    let r = minimal_resolution(&ring, &m, steps);
    let g = match grading {
        GradingArg::Length => Grading::Length,
        GradingArg::Flat => Grading::Flat,
    };
    let witnesses: Vec<Value> = r
        .linearity(g)
        .iter()
        .map(|w| json!({"step": w.step, "vertex": pres.vertices[w.vertex], "shift": w.shift}))
        .collect();
    let out = json!({
        "algebra": pres.name,
        "module": spec,
        "complete": r.complete,
        "exact": r.is_exact(),
        "linear": witnesses.is_empty(),
        "nonlinear_summands": witnesses,
        "resolution": r.to_json(&ring),
    });
    if !r.complete {
        return Err(Fail::NonTermination(out));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.command {
        Command::Build(inst) => {
            let cap = inst.max_steps.unwrap_or(zzqh::DEFAULT_MAX_LEN);
            let pres = inst.presentation()?;
            match compute_basis(&pres, cap) {
                Ok(a) => print(&a.to_json()),
                Err(e @ Error::NonTermination { .. }) => {
                    return Err(Fail::NonTermination(json!({"algebra": pres.name, "max_steps": cap, "non_termination": e.to_string()})))
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Dims(inst) => {
            let a = inst.algebra()?;
            let verts = &a.presentation().vertices;
            let rows: Vec<Value> = a
                .dims()
                .into_iter()
                .map(|((l, b, x, y), d)| json!({"length": l, "bidegree": [b.flat, b.sharp], "from": verts[x], "to": verts[y], "dim": d}))
                .collect();
            print(&json!({"algebra": a.presentation().name, "dim": a.dim(), "dims": rows}));
        }
        Command::Cartan(inst) => {
            let a = inst.algebra()?;
            let c = a.cartan()?;
            let rows: Vec<Vec<String>> = c.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            print(&json!({"algebra": a.presentation().name, "vertices": a.presentation().vertices, "cartan": rows}));
        }
        Command::Resolve { inst, module, grading } => print(&resolve_module(&inst, &module, grading)?),
        Command::Check { name, inst } => {
            let names: Vec<&str> = if name == "all" {
                suite::CHECKS.to_vec()
            } else if suite::CHECKS.contains(&name.as_str()) {
                vec![name.as_str()]
            } else {
                return Err(Fail::Arg(format!("unknown check {name:?}")));
            };
            let grid: Vec<(usize, u32)> = match (inst.n, inst.s) {
                (None, None) => suite::GRID.to_vec(),
                _ => vec![(inst.n(), inst.s())],
            };
            let steps = inst.resolution_steps()?;
            let jobs: Vec<(&str, usize, u32)> = grid.iter().flat_map(|&(n, s)| names.iter().map(move |&c| (c, n, s))).collect();
            let results: Vec<Result<Report, Error>> = jobs.par_iter().map(|&(c, n, s)| suite::run_check(c, n, s, steps)).collect();
            let mut reports = Vec::new();
            for r in results {
                reports.push(r?);
            }
            finish(reports)?;
        }
        Command::Dual { inst, emit, conjectured } => {
            let (n, s) = (inst.n(), inst.s());
            let p = if conjectured {
                zzqh::presentation::dual_conjectured(n, s)?
            } else {
                suite::built_dual(n, s, inst.resolution_steps()?)?
            };
            match emit {
                Emit::Dot => write_out(&p.to_dot()),
                Emit::Json => print(&p.to_json()),
            }
        }
        Command::Fixtures { max_steps } => finish(vec![suite::run_fixtures(env_steps()?.or(max_steps))?])?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check(v)) => {
            print(&v);
            ExitCode::from(1)
        }
        Err(Fail::Arg(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::NonTermination(v)) => {
            print(&v);
            ExitCode::from(3)
        }
    }
}
