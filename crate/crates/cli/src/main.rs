//! `wildlie`: evaluate group words, query the definable predicates, run the
//! interpretation and von Staudt constructions, and execute the seeded
//! invariant suites.
//!
//! Exit status is 0 on success, 1 on a domain error (or a failing suite),
//! 2 on a usage or parse error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wildlie_core::check;
use wildlie_core::geometry::{self, AffPoint};
use wildlie_core::interp::{self, definable_reals_demo, DemoError, Value};
use wildlie_core::termlang::{self, EvalError, ParseError};
use wildlie_core::QuadRat;

#[derive(Parser, Debug)]
#[command(name = "wildlie", version, about = "Exact model of the Heisenberg quotient G = H3/Γ over Q(√2)")]
struct Cli {
    /// Emit one JSON object per result.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression: a group word, literal, or formula call.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Collinearity of three points of E, decided inside the group.
    Coll {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Whether H lies in the centralizer of G.
    Centralizer {
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Membership of H in the line subgroup L(a,b).
    #[command(name = "in-l")]
    InL {
        /// Line parameters `(a,b)`.
        #[arg(allow_hyphen_values = true)]
        params: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Whether C(G1) ∩ C(G2) is a line subgroup.
    #[command(name = "line-pair")]
    LinePair {
        #[arg(allow_hyphen_values = true)]
        g1: String,
        #[arg(allow_hyphen_values = true)]
        g2: String,
    },
    /// x + y by the von Staudt addition construction.
    #[command(name = "vs-add")]
    VsAdd {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        /// Auxiliary point off the axis u = 0.
        #[arg(long, default_value = "(1,1)", allow_hyphen_values = true)]
        aux: String,
    },
    /// x · y by the von Staudt multiplication construction.
    #[command(name = "vs-mul")]
    VsMul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value = "(1,1)", allow_hyphen_values = true)]
        aux: String,
    },
    /// Arithmetic and integrality through the interpretation in the group.
    Interp {
        op: InterpOp,
        #[arg(allow_hyphen_values = true, required = true, num_args = 1..=2)]
        scalars: Vec<String>,
    },
    /// Conjugate [0,1,0,1] by an element [0,0,c,x] of C([0,0,0,2]).
    Orbit {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Run a seeded invariant suite.
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InterpOp {
    Add,
    Mul,
    Isint,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(format!("parse error {e}"))
    }
}

impl From<wildlie_core::Error> for Failure {
    fn from(e: wildlie_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<DemoError> for Failure {
    fn from(e: DemoError) -> Self {
        match e {
            DemoError::Domain(d) => d.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Demo(d) => d.into(),
            EvalError::Type(_) => Failure::Usage(e.to_string()),
        }
    }
}

/// One line of output.
struct Output {
    command: &'static str,
    value: Value,
}

fn scalar(s: &str) -> Result<QuadRat, Failure> {
    Ok(termlang::parse_scalar(s)?)
}

fn value(s: &str) -> Result<Value, Failure> {
    Ok(termlang::eval(&termlang::parse_expr(s)?)?)
}

fn demo(command: &'static str, id: &str, args: &[&str]) -> Result<Vec<Output>, Failure> {
    let vals = args.iter().map(|a| value(a)).collect::<Result<Vec<_>, _>>()?;
    let value = definable_reals_demo(id, &vals)?;
    Ok(vec![Output { command, value }])
}

fn aux_point(s: &str) -> Result<AffPoint, Failure> {
    Ok(AffPoint::from(&termlang::parse_point(s)?))
}

fn check_lines(json: bool, suite: &str, seed: u64, count: usize) -> Result<bool, Failure> {
    let names: Vec<&str> = if suite == "all" {
        check::SUITES.to_vec()
    } else if check::SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::Usage(format!(
            "unknown suite `{suite}` (expected one of {}, all)",
            check::SUITES.join(", ")
        )));
    };
    let reports: Vec<check::Report> = names
        .iter()
        .map(|n| check::run_suite(n, seed, count).expect("known suite"))
        .collect();
    let all_ok = reports.iter().all(|r| r.ok());
    for r in &reports {
        if json {
            println!(
                "{}",
                json!({
                    "command": "check",
                    "result": {
                        "suite": r.suite,
                        "seed": seed,
                        "passed": r.passed,
                        "total": r.total,
                        "ok": r.ok(),
                        "failure": r.failure.as_ref().map(|(i, m)| json!({"case": i, "detail": m})),
                    },
                    "canonical": r.to_string(),
                })
            );
        } else if names.len() > 1 {
            println!("{}: {}", r.suite, r);
        } else {
            println!("{r}");
        }
    }
    if names.len() > 1 && !json {
        let passed: usize = reports.iter().map(|r| r.passed).sum();
        let total: usize = reports.iter().map(|r| r.total).sum();
        let head = if all_ok { "ok" } else { "FAIL" };
        println!("{head} {passed}/{total}");
    }
    Ok(all_ok)
}

fn run(cli: &Cli) -> Result<Vec<Output>, Failure> {
    let out = |command, value| Ok(vec![Output { command, value }]);
    match &cli.command {
        Command::Eval { expr } => out("eval", value(expr)?),
        Command::Coll { p, q, r } => demo("coll", "coll", &[p, q, r]),
        Command::Centralizer { h, g } => demo("centralizer", "centralizer", &[h, g]),
        Command::InL { params, h } => demo("in-l", "in_L", &[params, h]),
        Command::LinePair { g1, g2 } => demo("line-pair", "is_line_pair", &[g1, g2]),
        Command::Orbit { element } => demo("orbit", "orbit", &[element]),
        Command::VsAdd { x, y, aux } => {
            let r = geometry::vs_add(&scalar(x)?, &scalar(y)?, &aux_point(aux)?)?;
            out("vs-add", Value::Scalar(r))
        }
        Command::VsMul { x, y, aux } => {
            let r = geometry::vs_mul(&scalar(x)?, &scalar(y)?, &aux_point(aux)?)?;
            out("vs-mul", Value::Scalar(r))
        }
        Command::Interp { op, scalars } => {
            let nums = scalars
                .iter()
                .map(|s| scalar(s).map(|t| interp::encode(&t)))
                .collect::<Result<Vec<_>, _>>()?;
            let value = match (op, nums.as_slice()) {
                (InterpOp::Add, [x, y]) => Value::Scalar(interp::decode(&interp::interp_add(x, y)?)),
                (InterpOp::Mul, [x, y]) => Value::Scalar(interp::decode(&interp::interp_mul(x, y)?)),
                (InterpOp::Isint, [x]) => Value::Bool(interp::interp_is_int(x)),
                (InterpOp::Isint, _) => return Err(Failure::Usage("interp isint takes one scalar".into())),
                _ => return Err(Failure::Usage("interp add/mul take two scalars".into())),
            };
            out("interp", value)
        }
        Command::Check { .. } => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { suite, seed, count } => match check_lines(cli.json, suite, *seed, *count) {
            Ok(true) => return ExitCode::SUCCESS,
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        _ => run(&cli),
    };
    match result {
        Ok(lines) => {
            for o in lines {
                let canonical = o.value.to_string();
                if cli.json {
                    let result = match &o.value {
                        Value::Bool(b) => json!(b),
                        _ => json!(canonical),
                    };
                    println!(
                        "{}",
                        json!({"command": o.command, "result": result, "canonical": canonical})
                    );
                } else {
                    println!("{canonical}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
