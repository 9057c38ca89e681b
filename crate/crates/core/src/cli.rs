//! The `invsemi` command line.
//!
//! [`run`] takes the argument vector and returns everything the process
//! would print together with its exit code, so the front end can be tested
//! without spawning processes.
//!
//! Exit codes: 0 success or affirmative answer, 1 negative answer with a
//! witness (or an internal re-validation failure, reported on stderr),
//! 2 input error, 3 unknown because a bound was hit.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::eqgeo::{
    closure, display_point, ed_verdict, parse_point, solution_set, Bounds, Certificate, EquationSystem, PointSet,
    VerdictStatus,
};
use crate::semigroup::{catalog, hasse_dot, parse_table, FiniteInverseSemigroup, CATALOG_NAMES};
use crate::term::DEFAULT_MAX_CELLS;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "invsemi", version, about = "Equations and algebraic sets over finite inverse semigroups")]
struct Cli {
    /// Suppress the version header line
    #[arg(long, global = true)]
    no_header: bool,

    /// Cap on materialised term-function table cells
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: usize,

    /// Cap on |S|^n for point scans
    #[arg(long, global = true, default_value_t = crate::eqgeo::DEFAULT_MAX_POINTS)]
    max_points: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Source {
    /// Built-in semigroup (trivial, chain2, chain3, z2, z3, z5, z2_zero, brandt_b2, sim2, sim3)
    #[arg(long, conflicts_with = "table")]
    catalog: Option<String>,

    /// Cayley-table file
    #[arg(required_unless_present = "catalog")]
    table: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct UnionArgs {
    #[arg(long)]
    arity: usize,

    /// A point of the set, e.g. "(e,f)"; repeatable
    #[arg(long = "point")]
    points: Vec<String>,

    /// Add the solution set of a system, equations separated by ';'; repeatable
    #[arg(long = "system")]
    systems: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure report
    Info {
        #[command(flatten)]
        src: Source,
    },
    /// Hasse diagram of the idempotents as DOT
    Hasse {
        #[command(flatten)]
        src: Source,
        /// Write the DOT source here instead of stdout
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Wagner–Preston representation by partial injections
    Embed {
        #[command(flatten)]
        src: Source,
    },
    /// Solution set of a system of equations
    Solve {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        arity: usize,
        /// An equation "lhs = rhs"; repeatable
        #[arg(long = "eq", required = true)]
        equations: Vec<String>,
    },
    /// Algebraic closure of a point set
    Closure {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        union: UnionArgs,
    },
    /// Whether a point set is algebraic
    IsAlgebraic {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        union: UnionArgs,
    },
    /// Equational-domain verdict with certificates
    Verify {
        #[command(flatten)]
        src: Source,
        /// Also certify the four-variable union V(x1=x2) ∪ V(x3=x4)
        #[arg(long)]
        rosenblatt: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Outcome {
        Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

fn load(src: &Source) -> Result<FiniteInverseSemigroup, String> {
    match (&src.catalog, &src.table) {
        (Some(name), None) => catalog(name).map_err(|e| format!("{e} (available: {})", CATALOG_NAMES.join(", "))),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let label = path.file_stem().map_or("table".into(), |s| s.to_string_lossy().into_owned());
            parse_table(&text).map(|s| s.with_label(label)).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => Err("give exactly one of --catalog or a table file".into()),
    }
}

fn build_union(args: &UnionArgs, s: &FiniteInverseSemigroup, bounds: &Bounds) -> Result<PointSet, String> {
    let mut y = PointSet::new(args.arity);
    for p in &args.points {
        y.insert(parse_point(p, args.arity, s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    }
    for sys in &args.systems {
        let eqs: Vec<&str> = sys.split(';').map(str::trim).filter(|e| !e.is_empty()).collect();
        let system = EquationSystem::parse(&eqs, args.arity, s).map_err(|e| format!("{sys:?}: {e}"))?;
        let v = solution_set(&system, s, bounds).map_err(|e| e.to_string())?;
        y = y.union(&v).map_err(|e| e.to_string())?;
    }
    Ok(y)
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let bounds = Bounds { max_points: cli.max_points, max_cells: cli.max_cells };
    let mut out = String::new();
    if !cli.no_header {
        writeln!(out, "invsemi {}", env!("CARGO_PKG_VERSION")).unwrap();
    }
    let src = match &cli.command {
        Command::Info { src }
        | Command::Hasse { src, .. }
        | Command::Embed { src }
        | Command::Solve { src, .. }
        | Command::Closure { src, .. }
        | Command::IsAlgebraic { src, .. }
        | Command::Verify { src, .. } => src,
    };
    let s = match load(src) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let result = match &cli.command {
        Command::Info { .. } => cmd_info(&s, &mut out),
        Command::Hasse { dot, .. } => cmd_hasse(&s, dot.as_ref(), &mut out),
        Command::Embed { .. } => cmd_embed(&s, &mut out),
        Command::Solve { arity, equations, .. } => cmd_solve(&s, *arity, equations, &bounds, &mut out),
        Command::Closure { union, .. } => cmd_closure(&s, union, &bounds, true, &mut out),
        Command::IsAlgebraic { union, .. } => cmd_closure(&s, union, &bounds, false, &mut out),
        Command::Verify { rosenblatt, .. } => cmd_verify(&s, *rosenblatt, &bounds, &mut out),
    };
    match result {
        Ok((code, stderr)) => Outcome { code, stdout: out, stderr },
        Err(e) => Outcome::input_error(e),
    }
}

type CmdResult = Result<(i32, String), String>;

fn names(s: &FiniteInverseSemigroup, elems: &[usize]) -> String {
    elems.iter().map(|&e| s.name(e)).collect::<Vec<_>>().join(" ")
}

fn cmd_info(s: &FiniteInverseSemigroup, out: &mut String) -> CmdResult {
    let opt = |e: Option<usize>| e.map_or("none".to_string(), |e| s.name(e).to_string());
    writeln!(out, "semigroup: {}", s.label()).unwrap();
    writeln!(out, "order: {}", s.order()).unwrap();
    writeln!(out, "elements: {}", s.names().join(" ")).unwrap();
    writeln!(out, "inverse: yes").unwrap();
    writeln!(out, "group: {}", if s.is_group() { "yes" } else { "no" }).unwrap();
    writeln!(out, "idempotents: {} ({})", s.idempotents().len(), names(s, s.idempotents())).unwrap();
    writeln!(out, "zero: {}", opt(s.zero())).unwrap();
    writeln!(out, "identity: {}", opt(s.identity())).unwrap();
    match s.find_incomparable_pair() {
        Some((e, f)) => writeln!(out, "idempotent order: incomparable pair ({}, {})", s.name(e), s.name(f)),
        None => writeln!(out, "idempotent order: chain of {}", s.idempotents().len()),
    }
    .unwrap();
    Ok((EXIT_OK, String::new()))
}

fn cmd_hasse(s: &FiniteInverseSemigroup, dot: Option<&PathBuf>, out: &mut String) -> CmdResult {
    let text = hasse_dot(s);
    match dot {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            let order = s.natural_order();
            writeln!(
                out,
                "wrote {} nodes, {} edges to {}",
                order.elements().len(),
                order.covers().len(),
                path.display()
            )
            .unwrap();
        }
        None => out.push_str(&text),
    }
    Ok((EXIT_OK, String::new()))
}

fn cmd_embed(s: &FiniteInverseSemigroup, out: &mut String) -> CmdResult {
    let wp = s.wagner_preston().map_err(|e| e.to_string())?;
    writeln!(out, "ground: {}", s.names().join(" ")).unwrap();
    for (a, theta) in wp.maps().iter().enumerate() {
        let dom: Vec<&str> = theta.domain_of().into_iter().map(|x| s.name(x)).collect();
        writeln!(out, "{}: dom {{{}}} | {}", s.name(a), dom.join(","), theta).unwrap();
    }
    writeln!(out, "faithful: injective, multiplicative, inversion-preserving").unwrap();
    Ok((EXIT_OK, String::new()))
}

fn cmd_solve(
    s: &FiniteInverseSemigroup,
    arity: usize,
    equations: &[String],
    bounds: &Bounds,
    out: &mut String,
) -> CmdResult {
    let sys = EquationSystem::parse(equations, arity, s).map_err(|e| e.to_string())?;
    let v = solution_set(&sys, s, bounds).map_err(|e| e.to_string())?;
    writeln!(out, "solutions: {}", v.len()).unwrap();
    for p in v.iter() {
        writeln!(out, "{}", display_point(p, s)).unwrap();
    }
    Ok((EXIT_OK, String::new()))
}

fn cmd_closure(
    s: &FiniteInverseSemigroup,
    args: &UnionArgs,
    bounds: &Bounds,
    list_members: bool,
    out: &mut String,
) -> CmdResult {
    let y = build_union(args, s, bounds)?;
    let c = closure(&y, s, bounds).map_err(|e| e.to_string())?;
    writeln!(out, "set: {} points", y.len()).unwrap();
    writeln!(out, "closure: {} points", c.points.len()).unwrap();
    if list_members {
        for p in c.points.iter() {
            let mark = if y.contains(p) { "" } else { "  (new)" };
            writeln!(out, "{}{mark}", display_point(p, s)).unwrap();
        }
    }
    writeln!(out, "exact: {}", c.exact).unwrap();
    let code = if !c.exact {
        writeln!(out, "algebraic: unknown (clone truncated after {} functions)", c.clone_size).unwrap();
        EXIT_UNKNOWN
    } else if let Some(w) = c.points.iter().find(|p| !y.contains(p)) {
        writeln!(out, "algebraic: no (witness {})", display_point(w, s)).unwrap();
        EXIT_NEGATIVE
    } else {
        writeln!(out, "algebraic: yes").unwrap();
        EXIT_OK
    };
    Ok((code, String::new()))
}

fn cmd_verify(s: &FiniteInverseSemigroup, rosenblatt: bool, bounds: &Bounds, out: &mut String) -> CmdResult {
    let verdict = ed_verdict(s, bounds, rosenblatt);
    let label = match &verdict.status {
        VerdictStatus::GroupOutOfScope => "GroupOutOfScope",
        VerdictStatus::NotEd => "NotED",
        VerdictStatus::NotEdByTheorem => "NotED-byTheorem",
        VerdictStatus::Inconsistent(_) => "Inconsistent",
    };
    writeln!(out, "verdict: {label}").unwrap();
    for note in &verdict.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    let mut stderr = String::new();
    for cert in &verdict.certificates {
        let block = cert.render(s);
        writeln!(out).unwrap();
        out.push_str(&block);
        let checked = Certificate::parse(&block, s)
            .map_err(|e| e.to_string())
            .and_then(|c| c.revalidate(s, bounds).map_err(|e| e.to_string()));
        match checked {
            Ok(()) => writeln!(out, "revalidated: ok").unwrap(),
            Err(e) => {
                writeln!(out, "revalidated: FAILED").unwrap();
                writeln!(stderr, "internal error: {} certificate failed re-validation: {e}", cert.kind).unwrap();
            }
        }
    }
    if let VerdictStatus::Inconsistent(why) = &verdict.status {
        writeln!(stderr, "internal error: {why}").unwrap();
    }
    let code = if !stderr.is_empty() {
        EXIT_NEGATIVE
    } else if verdict.status == VerdictStatus::NotEdByTheorem {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    };
    Ok((code, stderr))
}
