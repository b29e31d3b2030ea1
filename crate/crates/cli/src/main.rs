//! `mvlab` — evaluate, check, classify, and report over finite-valued
//! matrix logics.
//!
//! Exit codes: 0 on success (and when every claim or expectation holds),
//! 1 when an `--expect` or manifest claim fails, 2 on usage or input
//! errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mvlab::definability::{enumerate_connectives, is_definable, Constraint};
use mvlab::engine::{check_consequence, check_validity, evaluate, ConsequenceFlavor, Verdict};
use mvlab::kernel::{Logic, TruthTable};
use mvlab::properties::{check_stability, classify, Thesis};
use mvlab::syntax::{parse, print as print_formula};

use mvlab_cli::config::LogicConfig;
use mvlab_cli::manifest::{summary, Manifest};
use mvlab_cli::output::{parse_sequent, parse_valuation, verdict_line, Expectation};
use mvlab_cli::registry::{resolve_logic, Registry};

#[derive(Parser)]
#[command(name = "mvlab", version, about = "workbench for finite-valued matrix logics in subset semantics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula under an explicit assignment
    Eval {
        /// Built-in logic name or definition file path
        logic: String,
        /// Formula text, or `-` to read one formula per stdin line
        #[arg(allow_hyphen_values = true)]
        formula: String,
        /// Assignments such as A=T B=B
        assignment: Vec<String>,
    },
    /// Check validity of a formula or a consequence claim
    Check {
        logic: String,
        #[command(subcommand)]
        mode: CheckMode,
    },
    /// Classify a logic: connexive, nexive, contradictory, and relatives
    Classify {
        logic: String,
        /// Negation role (connective name or symbol)
        #[arg(long)]
        neg: String,
        /// Conditional role (connective name or symbol)
        #[arg(long)]
        cond: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify a conditional under every standard paraconsistent negation
    Stability {
        logic: String,
        #[arg(long)]
        cond: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether a connective is term-definable from the signature
    Definable {
        logic: String,
        /// Target as `logic:connective` or a connective name
        /// (`consistency` is an alias for the toolbox `circ`)
        #[arg(long)]
        target: String,
        /// Extend the signature first (e.g. `toolbox:circ`)
        #[arg(long)]
        extend: Vec<String>,
    },
    /// Enumerate binary connectives satisfying named constraints
    Enumerate {
        logic: String,
        /// detachment, designated-preserving, classical-tf
        #[arg(long = "constraint")]
        constraints: Vec<String>,
        /// Print every surviving table
        #[arg(long)]
        show_tables: bool,
    },
    /// Run a claims manifest (the built-in one by default)
    Report {
        /// Manifest path; omit for the built-in claims
        manifest: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a logic definition file for a built-in logic
    ExportLogic {
        logic: String,
        /// Output path (stdout when omitted)
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CheckMode {
    /// Three-way validity: just true, sometimes false, or refuted
    Valid {
        /// Formula text, or `-` to read one formula per stdin line
        #[arg(allow_hyphen_values = true)]
        formula: String,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// A sequent `premise, premise => conclusion`
    Consequence {
        /// Sequent text, or `-` to read one sequent per stdin line
        #[arg(allow_hyphen_values = true)]
        sequent: String,
        /// truth, exact-truth, or non-falsity preservation
        #[arg(long, default_value = "truth")]
        flavor: String,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

#[derive(Args)]
struct CheckOpts {
    /// Fail (exit 1) unless the verdict matches
    #[arg(long)]
    expect: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Eval { logic, formula, assignment } => {
            let logic = resolve_logic(&logic)?;
            let valuation = parse_valuation(&logic, &assignment)?;
            for text in inputs(&formula)? {
                let parsed = parse(&logic, &text).map_err(|e| anyhow!("in `{text}`: {e}"))?;
                let value = evaluate(&logic, &valuation, &parsed)?;
                println!("{value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { logic, mode } => {
            let logic = resolve_logic(&logic)?;
            match mode {
                CheckMode::Valid { formula, opts } => {
                    let mut all_match = true;
                    for text in inputs(&formula)? {
                        let parsed = parse(&logic, &text).map_err(|e| anyhow!("in `{text}`: {e}"))?;
                        let verdict = check_validity(&logic, &parsed)?;
                        all_match &= emit_verdict(&logic, &text, &verdict, &opts)?;
                    }
                    Ok(exit_flag(all_match))
                }
                CheckMode::Consequence { sequent, flavor, opts } => {
                    let flavor = parse_flavor(&flavor)?;
                    let mut all_match = true;
                    for text in inputs(&sequent)? {
                        let parsed = parse_sequent(&logic, &text)?;
                        let verdict = check_consequence(&logic, &parsed, flavor)?;
                        all_match &= emit_verdict(&logic, &text, &verdict, &opts)?;
                    }
                    Ok(exit_flag(all_match))
                }
            }
        }
        Command::Classify { logic, neg, cond, format } => {
            let logic = resolve_logic(&logic)?;
            let report = classify(&logic, &neg, &cond).map_err(|e| anyhow!("{e}"))?;
            match format {
                Format::Machine => {
                    let theses: serde_json::Map<String, serde_json::Value> = report
                        .theses
                        .iter()
                        .map(|(t, v)| {
                            let status = v.as_ref().map(|v| v.status()).unwrap_or("not-checkable");
                            (t.name().to_string(), status.into())
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "logic": report.logic,
                        "negation": report.roles.negation,
                        "conditional": report.roles.conditional,
                        "theses": theses,
                        "connexive": report.connexive,
                        "hyper_connexive": report.hyper_connexive,
                        "nexive": report.nexive,
                        "hyper_nexive": report.hyper_nexive,
                        "contradictory": report.is_contradictory(),
                        "ultra_abelardian": report.ultra_abelardian,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                Format::Text => {
                    println!(
                        "{} with negation `{}` and conditional `{}`",
                        report.logic, report.roles.negation, report.roles.conditional
                    );
                    println!("(statuses use this tool's refinement: just-true vs sometimes-false)");
                    for thesis in Thesis::ALL {
                        let line = match &report.theses[&thesis] {
                            Some(v) => verdict_line(v),
                            None => "not checkable in this signature".to_string(),
                        };
                        println!("  {:5} {}", thesis.name(), line);
                    }
                    println!("flags:");
                    println!("  connexive        {}", report.connexive);
                    println!("  hyper-connexive  {}", report.hyper_connexive);
                    println!("  nexive           {}", report.nexive);
                    println!("  hyper-nexive     {}", report.hyper_nexive);
                    match &report.contradictory {
                        Some(w) => println!(
                            "  contradictory    true ({} and {})",
                            print_formula(&logic, &w.formula),
                            print_formula(&logic, &w.negation)
                        ),
                        None => println!("  contradictory    false"),
                    }
                    println!("  ultra-Abelardian {}", report.ultra_abelardian);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stability { logic, cond, format } => {
            let logic = resolve_logic(&logic)?;
            let report = check_stability(&logic, &cond).map_err(|e| anyhow!("{e}"))?;
            match format {
                Format::Machine => {
                    let entries: Vec<serde_json::Value> = report
                        .entries
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "negation": e.negation.name(),
                                "connexive": e.core_connexive(),
                                "first_failure": e.first_failure().map(|(t, v)| {
                                    serde_json::json!({
                                        "thesis": t.name(),
                                        "verdict": verdict_line(v),
                                    })
                                }),
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "logic": report.logic,
                        "conditional": report.conditional,
                        "stable": report.stable,
                        "entries": entries,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                Format::Text => {
                    println!(
                        "`{}` in {} across {} standard paraconsistent negation(s)",
                        report.conditional,
                        report.logic,
                        report.entries.len()
                    );
                    for entry in &report.entries {
                        match entry.first_failure() {
                            None => println!("  with {:4} connexive", entry.negation.name()),
                            Some((thesis, verdict)) => println!(
                                "  with {:4} fails {}: {}",
                                entry.negation.name(),
                                thesis.name(),
                                verdict_line(verdict)
                            ),
                        }
                    }
                    println!("connexively stable: {}", report.stable);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Definable { logic, target, extend } => {
            let registry = Registry::builtin();
            let host = match resolve_logic(&logic) {
                Ok(resolved) if extend.is_empty() => resolved,
                _ => registry.extended(&logic, &extend)?,
            };
            let target_spec = if target == "consistency" { "toolbox:circ" } else { &target };
            let target_conn = registry.find_connective(target_spec)?;
            match is_definable(&host, target_conn.table()).map_err(|e| anyhow!("{e}"))? {
                Some(member) => {
                    let vars: Vec<String> = (1..=member.arity).map(|i| format!("x{i}")).collect();
                    println!(
                        "yes: {} is definable in {} as {}",
                        target_conn.name(),
                        host.name(),
                        mvlab::syntax::print_schema(&host, &member.witness)
                    );
                    println!("     over variables {}", vars.join(", "));
                }
                None => {
                    println!("no: {} is not definable in {}", target_conn.name(), host.name());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { logic, constraints, show_tables } => {
            let logic = resolve_logic(&logic)?;
            let parsed: Vec<Constraint> = constraints
                .iter()
                .map(|c| parse_constraint(c))
                .collect::<Result<_>>()?;
            let survivors = enumerate_connectives(&logic, &parsed).map_err(|e| anyhow!("{e}"))?;
            println!(
                "{} binary table(s) over {} satisfy: {}",
                survivors.len(),
                logic.name(),
                if constraints.is_empty() { "(no constraints)".to_string() } else { constraints.join(", ") }
            );
            if show_tables {
                for (i, table) in survivors.iter().enumerate() {
                    println!("table {}:", i + 1);
                    print_table(&logic, table);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { manifest, format } => {
            let manifest = match manifest {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading manifest {}", path.display()))?;
                    Manifest::parse(&text)?
                }
                None => Manifest::builtin(),
            };
            let registry = Registry::builtin();
            let results = manifest.run(&registry);
            let (passed, failed) = summary(&results);
            match format {
                Format::Machine => {
                    let doc = serde_json::json!({
                        "format_version": 1,
                        "claims": results,
                        "summary": { "total": results.len(), "passed": passed, "failed": failed },
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                Format::Text => {
                    for r in &results {
                        let mark = if r.pass { "PASS" } else { "FAIL" };
                        println!("{mark} {:42} {}", r.id, r.locus);
                        if !r.pass {
                            println!("     {}", r.detail);
                        }
                    }
                    println!("{passed} passed, {failed} failed, {} total", results.len());
                }
            }
            Ok(exit_flag(failed == 0))
        }
        Command::ExportLogic { logic, output } => {
            let logic = resolve_logic(&logic)?;
            let json = LogicConfig::from_logic(&logic).to_json();
            match output {
                Some(path) => {
                    std::fs::write(&path, json + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                }
                None => println!("{json}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn inputs(arg: &str) -> Result<Vec<String>> {
    if arg != "-" {
        return Ok(vec![arg.to_string()]);
    }
    let mut buffer = String::new();
    std::io::stdin().read_to_string(&mut buffer).context("reading stdin")?;
    let lines: Vec<String> = buffer
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect();
    if lines.is_empty() {
        bail!("no formulas on stdin");
    }
    Ok(lines)
}

fn emit_verdict(logic: &Logic, input: &str, verdict: &Verdict, opts: &CheckOpts) -> Result<bool> {
    match opts.format {
        Format::Machine => {
            let doc = serde_json::json!({
                "logic": logic.name(),
                "input": input,
                "status": verdict.status(),
                "witness": verdict.witness().map(|w| w.to_string()),
            });
            println!("{}", serde_json::to_string(&doc)?);
        }
        Format::Text => println!("{}", verdict_line(verdict)),
    }
    match &opts.expect {
        Some(expect) => Ok(Expectation::parse(expect)?.matches(verdict)),
        None => Ok(true),
    }
}

fn exit_flag(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_flavor(text: &str) -> Result<ConsequenceFlavor> {
    Ok(match text {
        "truth" => ConsequenceFlavor::TruthPreservation,
        "exact-truth" => ConsequenceFlavor::ExactTruthPreservation,
        "non-falsity" => ConsequenceFlavor::NonFalsityPreservation,
        other => bail!("unknown flavor `{other}` (expected truth, exact-truth, or non-falsity)"),
    })
}

fn parse_constraint(text: &str) -> Result<Constraint> {
    Ok(match text {
        "detachment" => Constraint::DetachmentValid,
        "designated-preserving" => Constraint::DesignatedPreserving,
        "classical-tf" => Constraint::ClassicalOnTF,
        other => bail!(
            "unknown constraint `{other}` (expected detachment, designated-preserving, or classical-tf)"
        ),
    })
}

fn print_table(logic: &Logic, table: &TruthTable) {
    let header: Vec<String> = logic.values().iter().map(|v| v.to_string()).collect();
    println!("      {}", header.join(" "));
    for a in logic.values() {
        let row: Vec<String> = logic
            .values()
            .iter()
            .map(|b| table.get(&[*a, *b]).map(|v| v.to_string()).unwrap_or_else(|| "?".into()))
            .collect();
        println!("    {} {}", a, row.join(" "));
    }
}
