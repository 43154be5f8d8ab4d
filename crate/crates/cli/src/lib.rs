//! Command-line front end. `run` parses arguments, executes one command and
//! returns the process exit code: 0 on success, 1 when a verification fails,
//! 2 for usage errors and invalid input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use qtdiag_core::{
    apply_f_column, basis_for, delta_n, fram, framing_condition, partition_to_tableau, qt_catalan_tilde,
    tableau_to_partition, BasisReport, ColumnSpec, DyckSequence, EConvention, FramedTableau, Partition, Strategy,
};

pub mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qtdiag_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed tableau JSON in {path}: {message}")]
    Json { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "qtdiag", version, about = "Diagonally alternating polynomials, framed tableaux and (q,t)-Catalan data")]
pub struct Cli {
    /// Print a JSON report instead of the visual layout.
    #[arg(long, global = true)]
    pub json: bool,

    /// Also report elapsed milliseconds (JSON field or a line on stderr).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of C̃_n(q,t) = Σ q^coarea t^bounce.
    Catalan { n: usize },
    /// Dyck path statistics.
    #[command(subcommand)]
    Dyck(DyckCommand),
    /// Fram(μ, s).
    Fram {
        #[arg(long, num_args = 1.., required = true)]
        mu: Vec<u32>,
        #[arg(long, num_args = 1.., required = true)]
        s: Vec<u32>,
    },
    /// T ← x for a framed tableau read from a JSON file ("-" for stdin).
    Insert {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        x: u32,
    },
    /// Removes the corner entry of a framed tableau read from a JSON file.
    Remove {
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Partition ↔ framed tableau, checking the round trip.
    Biject(BijectArgs),
    /// The basis {F_{∅←λ} Δ_n : λ ⊢ k, ℓ(λ) = l} for k < n.
    Basis { n: usize, k: u32, l: u32 },
    /// F_t Δ_n for a strictly decreasing column t.
    Apply {
        #[arg(long, num_args = 1.., required = true)]
        column: Vec<u32>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Injective)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = ConventionArg::Formal)]
        convention: ConventionArg,
    },
    /// Runs the built-in checks; exits with 1 if any fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<verify::Suite>,
        /// Size bound: n for operator suites, 2N for partition weights.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum DyckCommand {
    /// area, coarea, bounce and the partitions (μ, λ) of a Dyck sequence.
    Stats {
        #[arg(required = true, num_args = 1..)]
        g: Vec<u32>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BijectArgs {
    #[arg(long, num_args = 1..)]
    lambda: Option<Vec<u32>>,
    #[arg(long)]
    tableau: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Determinant,
    Injective,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConventionArg {
    Formal,
    Analytic,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Determinant => Strategy::Determinant,
            StrategyArg::Injective => Strategy::Injective,
        }
    }
}

impl From<ConventionArg> for EConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Formal => EConvention::Formal,
            ConventionArg::Analytic => EConvention::Analytic,
        }
    }
}

/// What a command produced: the JSON report body and the human rendering.
struct Outcome {
    name: &'static str,
    inputs: Value,
    outputs: Value,
    text: String,
    passed: bool,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };

    let started = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let elapsed = started.elapsed().as_secs_f64() * 1000.0;

    let written = if cli.json {
        let mut report = json!({
            "command": outcome.name,
            "inputs": outcome.inputs,
            "outputs": outcome.outputs,
        });
        if cli.timing {
            report["timing_ms"] = json!(elapsed);
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("reports serialize"))
    } else {
        write!(out, "{}", outcome.text)
    };
    if written.is_err() {
        return EXIT_USAGE;
    }
    if cli.timing && !cli.json {
        let _ = writeln!(err, "elapsed: {elapsed:.3} ms");
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn to_value<S: serde::Serialize>(v: &S) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn read_tableau(path: &Path) -> Result<FramedTableau, CliError> {
    let mut raw = String::new();
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut raw).map_err(io)?;
    } else {
        raw = std::fs::read_to_string(path).map_err(io)?;
    }
    serde_json::from_str(&raw).map_err(|e| CliError::Json {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn partition_arg(parts: &[u32]) -> Result<Partition, CliError> {
    Ok(Partition::new(parts.to_vec())?)
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Catalan { n } => catalan(*n),
        Command::Dyck(DyckCommand::Stats { g }) => dyck_stats(g),
        Command::Fram { mu, s } => fram_cmd(mu, s),
        Command::Insert { tableau, x } => insert_cmd(tableau, *x),
        Command::Remove { tableau } => remove_cmd(tableau),
        Command::Biject(args) => biject_cmd(args),
        Command::Basis { n, k, l } => basis_cmd(*n, *k, *l),
        Command::Apply {
            column,
            n,
            strategy,
            convention,
        } => apply_cmd(column, *n, (*strategy).into(), (*convention).into()),
        Command::Verify { suite, max_n } => Ok(verify_cmd(*suite, *max_n)),
    }
}

fn catalan(n: usize) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let poly = qt_catalan_tilde(n);
    let mut text = format!("C̃_{n}(q,t), {} paths\n", poly.total());
    let (max_q, max_t) = poly.max_degrees();
    let width = poly.terms().map(|(_, _, c)| c.to_string().len()).max().unwrap_or(1).max(2);
    text.push_str(&format!("{:>4}", "t\\q"));
    for q in 0..=max_q {
        text.push_str(&format!(" {q:>width$}"));
    }
    text.push('\n');
    for t in 0..=max_t {
        text.push_str(&format!("{t:>4}"));
        for q in 0..=max_q {
            let c = poly.coefficient(q, t);
            let cell = if c.is_zero() { ".".to_string() } else { c.to_string() };
            text.push_str(&format!(" {cell:>width$}"));
        }
        text.push('\n');
    }
    Ok(Outcome {
        name: "catalan",
        inputs: json!({ "n": n }),
        outputs: json!({ "polynomial": to_value(&poly), "total": poly.total().to_string() }),
        text,
        passed: true,
    })
}

fn dyck_stats(g: &[u32]) -> Result<Outcome, CliError> {
    let seq = DyckSequence::new(g.to_vec())?;
    let (mu, lambda) = seq.to_partitions();
    let text = format!(
        "area={} coarea={} bounce={}\nmu={mu}\nlambda={lambda}\n",
        seq.area(),
        seq.coarea(),
        seq.bounce()
    );
    Ok(Outcome {
        name: "dyck stats",
        inputs: json!({ "g": g }),
        outputs: json!({
            "area": seq.area(),
            "coarea": seq.coarea(),
            "bounce": seq.bounce(),
            "mu": to_value(&mu),
            "lambda": to_value(&lambda),
        }),
        text,
        passed: true,
    })
}

fn fram_cmd(mu: &[u32], s: &[u32]) -> Result<Outcome, CliError> {
    let shape = partition_arg(mu)?;
    let ok = framing_condition(&shape, s)?;
    if !ok {
        return Err(qtdiag_core::Error::FramingCondition {
            mu: mu.to_vec(),
            s: s.to_vec(),
        }
        .into());
    }
    let t = fram(&shape, s)?;
    Ok(Outcome {
        name: "fram",
        inputs: json!({ "mu": mu, "s": s }),
        outputs: json!({ "tableau": to_value(&t) }),
        text: t.render(),
        passed: true,
    })
}

fn insert_cmd(path: &Path, x: u32) -> Result<Outcome, CliError> {
    let t = read_tableau(path)?;
    let result = t.insert(x)?;
    Ok(Outcome {
        name: "insert",
        inputs: json!({ "tableau": to_value(&t), "x": x }),
        outputs: json!({ "tableau": to_value(&result) }),
        text: result.render(),
        passed: true,
    })
}

fn remove_cmd(path: &Path) -> Result<Outcome, CliError> {
    let t = read_tableau(path)?;
    let (x, rest) = t.remove()?;
    Ok(Outcome {
        name: "remove",
        inputs: json!({ "tableau": to_value(&t) }),
        outputs: json!({ "x": x, "tableau": to_value(&rest) }),
        text: format!("x={x}\n{}", rest.render()),
        passed: true,
    })
}

fn biject_cmd(args: &BijectArgs) -> Result<Outcome, CliError> {
    if let Some(parts) = &args.lambda {
        let lambda = partition_arg(parts)?;
        let t = partition_to_tableau(&lambda)?;
        let back = tableau_to_partition(&t)?;
        let roundtrip = back == lambda;
        Ok(Outcome {
            name: "biject",
            inputs: json!({ "lambda": to_value(&lambda) }),
            outputs: json!({ "tableau": to_value(&t), "roundtrip": roundtrip }),
            text: format!("{}roundtrip={roundtrip}\n", t.render()),
            passed: roundtrip,
        })
    } else {
        let path = args.tableau.as_ref().expect("clap enforces one of the two");
        let t = read_tableau(path)?;
        let lambda = tableau_to_partition(&t)?;
        let roundtrip = partition_to_tableau(&lambda)? == t;
        Ok(Outcome {
            name: "biject",
            inputs: json!({ "tableau": to_value(&t) }),
            outputs: json!({ "lambda": to_value(&lambda), "roundtrip": roundtrip }),
            text: format!("lambda={lambda}\nroundtrip={roundtrip}\n"),
            passed: roundtrip,
        })
    }
}

fn basis_cmd(n: usize, k: u32, l: u32) -> Result<Outcome, CliError> {
    let elements = basis_for(n, k, l)?;
    let report = BasisReport::new(n, k, l, &elements);
    let mut text = format!("A_{n}^{{{k},{l}}}: dim {}\n", report.dim);
    for e in &elements {
        text.push_str(&format!(
            "\nlambda={}  leading={}  terms={}\n{}",
            e.lambda,
            e.leading,
            e.alternant.len(),
            e.tableau.render()
        ));
    }
    Ok(Outcome {
        name: "basis",
        inputs: json!({ "n": n, "k": k, "l": l }),
        outputs: to_value(&report),
        text,
        passed: true,
    })
}

fn apply_cmd(column: &[u32], n: usize, strategy: Strategy, conv: EConvention) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let spec = ColumnSpec::new(column.to_vec())?;
    let f = apply_f_column(&spec, &delta_n(n), conv, strategy);
    Ok(Outcome {
        name: "apply",
        inputs: json!({
            "column": column,
            "n": n,
            "strategy": strategy.to_string(),
            "convention": conv.to_string(),
        }),
        outputs: json!({ "alternant": to_value(&f), "term_count": f.len() }),
        text: f.to_string(),
        passed: true,
    })
}

fn verify_cmd(suite: Option<verify::Suite>, max_n: usize) -> Outcome {
    let suites = match suite {
        Some(s) => vec![s],
        None => verify::Suite::value_variants().to_vec(),
    };
    let mut text = String::new();
    let mut records = Vec::new();
    let mut passed = true;
    for s in suites {
        let r = verify::run_suite(s, max_n);
        passed &= r.passed;
        text.push_str(&format!(
            "{} {:<10} {} cases  {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            s.name(),
            r.cases,
            r.detail
        ));
        records.push(json!({ "suite": s.name(), "passed": r.passed, "cases": r.cases, "detail": r.detail }));
    }
    Outcome {
        name: "verify",
        inputs: json!({ "suite": suite.map(|s| s.name()), "max_n": max_n }),
        outputs: json!({ "passed": passed, "suites": records }),
        text,
        passed,
    }
}
