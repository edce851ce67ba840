//! Command-line front end: the multiplier/convolutor table, expression
//! inference, map classification, discontinuity witnesses, seminorm
//! evaluation, membership queries and the fourteen-map audit.
//!
//! Exit codes: 0 on success, 1 on domain errors (inadmissible pairs, missing
//! witnesses, seminorm preconditions), 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use distcalc::dist::{dual_seminorm, parse_distribution, BoundedSetSpec};
use distcalc::expr::{audit_ehrenpreis, classify_map, classify_natural, infer, parse};
use distcalc::seminorm::{eval_seminorm, parse_seminorm, GridSpec, QuadRule};
use distcalc::space::Space;
use distcalc::symbolic::{membership, parse_function};
use distcalc::table::{emit_table, BilinearOp, TableFormat, VerdictValue};
use distcalc::witness::{run_witness, witness_for};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "distcalc",
    about = "Result spaces and continuity verdicts for multiplication, convolution and Fourier \
             transform over the classical test-function and distribution spaces",
    after_help = "SPACE tokens: D, S, D_Lp[p], Bdot, D_Linf, OC, OM, E, E', OM', OC', D'_L1, \
                  D'_Lq[q], S', D' (bare D_Lp and D'_Lq default the parameter to 2).\n\
                  Expressions: atoms `(name:SPACE)`, `*`, `conv`, `fourier(...)`, `d[k](...)`.\n\
                  Functions: bump(r), gauss(a), cexp(c), chirp, poly(c0,c1,...), const(v), \
                  dilate(f,c), translate(f,x0), products `*`, sums `+`.\n\
                  Seminorms: pS(m,beta), pLp(m,p|inf), pOM(m,psi), pE(m,K), pD(m0,eps0), \
                  pB(f1; f2; ...) for dual seminorms on distribution literals \
                  dirac(x0), d[k]dirac(x0), fn(f), sums with `+`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the structured commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GridArgs {
    /// Truncation radius of the evaluation box.
    #[arg(long, global = true, default_value_t = 6.0)]
    radius: f64,
    /// Grid points per axis (suprema and quadrature).
    #[arg(long, global = true, default_value_t = 1024)]
    points: u32,
    /// Quadrature rule.
    #[arg(long, global = true, value_enum, default_value_t = Quad::Trapezoid)]
    quad: Quad,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quad {
    Trapezoid,
    Simpson,
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplier-convolutor table with its o/x flags.
    Table,
    /// Infer the result space and continuity verdict of an expression.
    Infer {
        /// Expression, e.g. "(phi:D) * (f:E)".
        expr: String,
        /// Ambient dimension n.
        #[arg(long, default_value_t = 1)]
        dim: u32,
    },
    /// Classify one bilinear map, optionally at an explicit target space.
    Classify {
        space_a: String,
        space_b: String,
        #[arg(value_parser = parse_op)]
        op: BilinearOp,
        /// Target space; defaults to the inferred result space.
        target: Option<String>,
        #[arg(long, default_value_t = 1)]
        dim: u32,
    },
    /// Run the discontinuity witness for a pair of spaces.
    Witness {
        space_a: String,
        space_b: String,
        #[arg(value_parser = parse_op)]
        op: BilinearOp,
        /// Number of parameter values to sweep.
        #[arg(long, default_value_t = 5)]
        steps: usize,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a seminorm of a function (or a dual seminorm of a
    /// distribution via pB).
    Seminorm {
        /// Seminorm literal: pS(m,beta), pLp(m,p), pOM(m,psi), pE(m,K),
        /// pD(m0,eps0), or pB(f1; f2; ...).
        spec: String,
        /// Function literal, or a distribution literal when the spec is pB.
        operand: String,
        #[arg(long, default_value_t = 1)]
        dim: u32,
    },
    /// Decide membership of a function in a function space.
    Membership {
        function: String,
        space: String,
        #[arg(long, default_value_t = 1)]
        dim: u32,
    },
    /// Audit the fourteen bilinear maps on D, E and their duals.
    AuditEhrenpreis,
    /// Spot-check the continuity bound of a proved-continuous map.
    CheckBound {
        space_a: String,
        space_b: String,
        #[arg(value_parser = parse_op)]
        op: BilinearOp,
        target: String,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        /// Seed for the randomized pairs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        dim: u32,
    },
}

fn parse_op(s: &str) -> Result<BilinearOp, String> {
    match s {
        "mul" | "multiply" | "*" => Ok(BilinearOp::Multiply),
        "conv" | "convolve" => Ok(BilinearOp::Convolve),
        other => Err(format!("unknown operation `{other}` (use mul or conv)")),
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let grid = match GridSpec::new(
        cli.grid.radius,
        cli.grid.points,
        match cli.grid.quad {
            Quad::Trapezoid => QuadRule::Trapezoid,
            Quad::Simpson => QuadRule::Simpson,
        },
    ) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli, grid) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, grid: GridSpec) -> Result<(), String> {
    let fail = |e: &dyn std::fmt::Display| e.to_string();
    match cli.command {
        Command::Table => {
            let format = match cli.format {
                Format::Text => TableFormat::Text,
                Format::Json => TableFormat::Json,
            };
            println!("{}", emit_table(format));
        }
        Command::Infer { expr, dim } => {
            let e = parse(&expr, dim).map_err(|e| fail(&e))?;
            let result = infer(&e).map_err(|e| fail(&e))?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "space": result.space,
                        "verdict": verdict_token(result.verdict.value),
                        "target": result.verdict.target,
                        "ref": result.verdict.reference.label(),
                        "trace": result.trace,
                    }))
                    .expect("serializable")
                ),
                Format::Text => {
                    println!("space: {}", result.space);
                    println!(
                        "verdict: {} into {} ({})",
                        result.verdict.value, result.verdict.target, result.verdict.reference
                    );
                    for step in &result.trace {
                        println!("  {} [{}] {}", step.node, step.reference, step.rule);
                    }
                }
            }
        }
        Command::Classify {
            space_a,
            space_b,
            op,
            target,
            dim,
        } => {
            let a = Space::parse(&space_a, dim).map_err(|e| fail(&e))?;
            let b = Space::parse(&space_b, dim).map_err(|e| fail(&e))?;
            let outcome = match target {
                Some(t) => {
                    let t = Space::parse(&t, dim).map_err(|e| fail(&e))?;
                    classify_map(&a, &b, op, &t).map_err(|e| fail(&e))?
                }
                None => classify_natural(&a, &b, op).map_err(|e| fail(&e))?,
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "a": outcome.a,
                        "b": outcome.b,
                        "op": outcome.op,
                        "target": outcome.verdict.target,
                        "verdict": verdict_token(outcome.verdict.value),
                        "ref": outcome.verdict.reference.label(),
                    }))
                    .expect("serializable")
                ),
                Format::Text => println!(
                    "{} {} {} -> {}: {} ({})",
                    outcome.a,
                    outcome.op,
                    outcome.b,
                    outcome.verdict.target,
                    outcome.verdict.value,
                    outcome.verdict.reference
                ),
            }
        }
        Command::Witness {
            space_a,
            space_b,
            op,
            steps,
            json: json_flag,
        } => {
            let a = Space::parse(&space_a, 1).map_err(|e| fail(&e))?;
            let b = Space::parse(&space_b, 1).map_err(|e| fail(&e))?;
            let family = witness_for(&a, &b, op).map_err(|e| fail(&e))?;
            let report = run_witness(&family, steps, &grid).map_err(|e| fail(&e))?;
            if json_flag || cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                println!("family: {} ({})", report.family, report.reference);
                println!(
                    "map: {} {} {} -> {}",
                    report.a, report.op, report.b, report.target
                );
                for note in &report.notes {
                    println!("note: {note}");
                }
                println!(
                    "{:>12} {:>16} {:>16} {:>16}",
                    "param", "numerator", "denominator", "ratio"
                );
                for i in 0..report.params.len() {
                    println!(
                        "{:>12.4} {:>16.8} {:>16.8} {:>16.8}",
                        report.params[i],
                        report.numerators[i],
                        report.denominators[i],
                        report.ratios[i]
                    );
                }
                println!("verdict: {:?}", report.verdict);
            }
        }
        Command::Seminorm { spec, operand, dim } => {
            let spec_text = spec.trim();
            let value = if let Some(rest) = spec_text.strip_prefix("pB(") {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| "missing `)` in pB".to_string())?;
                let members: Result<Vec<_>, _> = inner
                    .split(';')
                    .map(|part| parse_function(part.trim(), dim))
                    .collect();
                let b = BoundedSetSpec::new(members.map_err(|e| fail(&e))?);
                let t = parse_distribution(&operand, dim).map_err(|e| fail(&e))?;
                dual_seminorm(&t, &b, &grid).map_err(|e| fail(&e))?
            } else {
                let spec = parse_seminorm(spec_text, dim).map_err(|e| fail(&e))?;
                let f = parse_function(&operand, dim).map_err(|e| fail(&e))?;
                eval_seminorm(&spec, &f, &grid).map_err(|e| fail(&e))?
            };
            match cli.format {
                Format::Json => println!("{}", json!({ "value": value })),
                Format::Text => println!("{value}"),
            }
        }
        Command::Membership {
            function,
            space,
            dim,
        } => {
            let f = parse_function(&function, dim).map_err(|e| fail(&e))?;
            let s = Space::parse(&space, dim).map_err(|e| fail(&e))?;
            let (ok, reason) = membership(&f, &s).map_err(|e| fail(&e))?;
            match cli.format {
                Format::Json => {
                    println!("{}", json!({ "space": s, "member": ok, "reason": reason }))
                }
                Format::Text => println!("{}: {}", if ok { "true" } else { "false" }, reason),
            }
        }
        Command::AuditEhrenpreis => {
            let audit = audit_ehrenpreis(1).map_err(|e| fail(&e))?;
            let continuous = audit
                .iter()
                .filter(|(_, o)| o.verdict.value == VerdictValue::Continuous)
                .count();
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = audit
                        .iter()
                        .map(|(item, o)| {
                            json!({
                                "item": item,
                                "a": o.a,
                                "b": o.b,
                                "op": o.op,
                                "target": o.verdict.target,
                                "verdict": verdict_token(o.verdict.value),
                                "ref": o.verdict.reference.label(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "maps": rows,
                            "continuous": continuous,
                            "total": audit.len(),
                        }))
                        .expect("serializable")
                    );
                }
                Format::Text => {
                    for (item, o) in &audit {
                        println!(
                            "{item:>2}. {} {} {} -> {}: {} ({})",
                            o.a, o.op, o.b, o.verdict.target, o.verdict.value, o.verdict.reference
                        );
                    }
                    println!("{continuous} of {} continuous", audit.len());
                }
            }
        }
        Command::CheckBound {
            space_a,
            space_b,
            op,
            target,
            trials,
            seed,
            dim,
        } => {
            let a = Space::parse(&space_a, dim).map_err(|e| fail(&e))?;
            let b = Space::parse(&space_b, dim).map_err(|e| fail(&e))?;
            let t = Space::parse(&target, dim).map_err(|e| fail(&e))?;
            let report =
                distcalc::witness::check_continuity_bound(&a, &b, op, &t, trials, seed, &grid)
                    .map_err(|e| fail(&e))?;
            match cli.format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report).expect("serializable")
                    )
                }
                Format::Text => {
                    if let Some(reason) = &report.skipped {
                        println!("skipped: {reason}");
                    } else {
                        println!(
                            "{} {} {} -> {}: {} trials, {} violations, constant {}, max lhs/bound {:.6}",
                            report.a,
                            report.op,
                            report.b,
                            report.target,
                            report.trials,
                            report.violations,
                            report.constant,
                            report.max_ratio_over_constant
                        );
                        for note in &report.notes {
                            println!("note: {note}");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn verdict_token(v: VerdictValue) -> &'static str {
    match v {
        VerdictValue::Continuous => "continuous",
        VerdictValue::Discontinuous => "discontinuous",
        VerdictValue::HypocontinuousOnlyKnown => "hypocontinuous-only-known",
    }
}
