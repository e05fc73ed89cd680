use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use digibinom::binomlib::{q_binomial_digital, q_binomial_product};
use digibinom::digits::{self, DigitVector};
use digibinom::exactalg::Family;
use digibinom::sierpinski::{build_kron, dimension_of};
use digibinom::{IdentityKind, Mode, Polynomial, Variable, VariableVectors};
use digibinom_cli::dispatch::{verify_case, CaseParams};
use digibinom_cli::export::{self, DENSE_LIMIT};
use digibinom_cli::sweep::{self, SweepRanges};
use digibinom_cli::{ParamRange, ReportJson};
use num_bigint::BigUint;
use serde_json::json;

#[derive(Parser)]
#[command(name = "digibinom", version, about = "Digit-level binomial identities: tables, matrices and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Base-b expansion, digit sum and, given --m, dominance and weights
    Digits(DigitsArgs),
    /// Gaussian binomial coefficients [N,k]_q
    Qbinom(QbinomArgs),
    /// Export a Sierpinski matrix S_{b,N}
    Matrix(MatrixArgs),
    /// Check one identity instance
    Verify(VerifyArgs),
    /// Check an identity over parameter ranges
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Product,
    Digital,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    #[value(name = "random_eval", alias = "random-eval")]
    RandomEval,
}

#[derive(Args)]
struct DigitsArgs {
    n: BigUint,
    #[arg(long, short, default_value_t = 2)]
    base: u32,
    /// Compare against this m
    #[arg(long)]
    m: Option<BigUint>,
    /// Pad the expansion to this many digits
    #[arg(long)]
    width: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct QbinomArgs {
    #[arg(value_name = "N")]
    levels: u32,
    /// Omit for the whole row
    #[arg(allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, value_enum, default_value_t = Route::Product)]
    route: Route,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long = "b")]
    base: u32,
    #[arg(long = "N")]
    levels: u32,
    /// x_i = x<i>, r_i = r<i> (the default)
    #[arg(long, conflicts_with = "q_digital")]
    symbolic: bool,
    /// x_i = q^i*x, r_i = 1
    #[arg(long)]
    q_digital: bool,
    /// Override slots: `x=EXPR`, `r=EXPR` for every level, or `x3=EXPR`, `r0=EXPR` for one
    #[arg(long, value_name = "SLOT=EXPR")]
    bind: Vec<String>,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    format: MatrixFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    identity: IdentityKind,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long = "N")]
    levels: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,
    /// Seed for random_eval; generated and reported when absent
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    identity: IdentityKind,
    #[arg(long)]
    n: Option<ParamRange>,
    #[arg(long = "N")]
    levels: Option<ParamRange>,
    #[arg(long)]
    k: Option<ParamRange>,
    #[arg(long)]
    b: Option<ParamRange>,
    #[arg(long)]
    p: Option<ParamRange>,
    #[arg(long)]
    q: Option<ParamRange>,
    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,
    #[arg(long)]
    seed: Option<u64>,
    /// Run cases on all cores; the summary is the same either way
    #[arg(long)]
    parallel: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Exit status: 0 pass, 1 a check failed, 2 bad arguments.
enum Status {
    Pass,
    Fail,
}

type CmdResult = Result<Status, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Digits(a) => cmd_digits(a),
        Command::Qbinom(a) => cmd_qbinom(a),
        Command::Matrix(a) => cmd_matrix(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn print_json(v: &impl serde::Serialize) -> Result<(), String> {
    println!("{}", serde_json::to_string(v).map_err(err)?);
    Ok(())
}

fn cmd_digits(a: DigitsArgs) -> CmdResult {
    let minimal = digits::minimal_width(&a.n, a.base).map_err(err)?;
    let width = a.width.unwrap_or(minimal);
    let dv = DigitVector::expand(&a.n, a.base, width).map_err(err)?;
    let mut record = json!({
        "n": a.n.to_string(),
        "base": a.base,
        "digits": dv.digits(),
        "s": dv.digit_sum(),
    });
    if let Some(m) = &a.m {
        let dominated = digits::dominates(m, &a.n, a.base).map_err(err)?;
        record["m"] = json!(m.to_string());
        record["dominated"] = json!(dominated);
        if dominated {
            record["z"] = json!(digits::z_weight(m, &a.n, a.base, width).map_err(err)?);
            if a.base == 2 {
                record["w"] = json!(digits::w_weight(m, &a.n, width).map_err(err)?);
            }
        }
    }
    match a.format {
        Format::Json => print_json(&record)?,
        Format::Text => {
            println!("n = {} (base {})", a.n, a.base);
            println!("digits = {dv}");
            println!("s = {}", dv.digit_sum());
            if let Some(m) = &a.m {
                println!("m = {m}");
                println!("dominated = {}", record["dominated"]);
                for key in ["z", "w"] {
                    if let Some(v) = record.get(key) {
                        println!("{key} = {v}");
                    }
                }
            }
        }
    }
    Ok(Status::Pass)
}

fn cmd_qbinom(a: QbinomArgs) -> CmdResult {
    let ks: Vec<i64> = match a.k {
        Some(k) if k < 0 || k > i64::from(a.levels) => {
            return Err(format!("k = {k} is outside 0..={}", a.levels));
        }
        Some(k) => vec![k],
        None => (0..=i64::from(a.levels)).collect(),
    };
    let want_product = a.route != Route::Digital;
    let want_digital = a.route != Route::Product;
    let mut rows = Vec::with_capacity(ks.len());
    let mut agree = true;
    for &k in &ks {
        let product = if want_product { Some(q_binomial_product(a.levels, k).map_err(err)?) } else { None };
        let digital = if want_digital { Some(q_binomial_digital(a.levels, k).map_err(err)?) } else { None };
        if let (Some(p), Some(d)) = (&product, &digital) {
            agree &= p == d;
        }
        rows.push((k, product, digital));
    }
    match a.format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(k, p, d)| {
                    let mut row = json!({ "k": k });
                    if let Some(p) = p {
                        row["product"] = json!(p.to_string());
                    }
                    if let Some(d) = d {
                        row["digital"] = json!(d.to_string());
                    }
                    row
                })
                .collect();
            let mut out = json!({ "N": a.levels, "route": route_name(a.route), "rows": rows });
            if a.route == Route::Both {
                out["agree"] = json!(agree);
            }
            print_json(&out)?;
        }
        Format::Text => {
            for (k, p, d) in &rows {
                match (p, d) {
                    (Some(p), Some(d)) => {
                        println!("[{},{k}]_q product: {p}", a.levels);
                        println!("[{},{k}]_q digital: {d}", a.levels);
                    }
                    (Some(v), None) | (None, Some(v)) => println!("[{},{k}]_q = {v}", a.levels),
                    (None, None) => unreachable!(),
                }
            }
            if a.route == Route::Both {
                println!("routes agree: {}", if agree { "yes" } else { "NO" });
            }
        }
    }
    Ok(if agree { Status::Pass } else { Status::Fail })
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Product => "product",
        Route::Digital => "digital",
        Route::Both => "both",
    }
}

fn matrix_vectors(a: &MatrixArgs) -> Result<VariableVectors, String> {
    let levels = a.levels as usize;
    let (mut xs, mut rs) = if a.q_digital {
        let xs =
            (0..levels).map(|i| &Polynomial::var_pow(Variable::Q, i as u32) * &Polynomial::var(Variable::X)).collect();
        (xs, vec![Polynomial::one(); levels])
    } else {
        let vv = VariableVectors::symbolic(Family::X, a.levels).map_err(err)?;
        (vv.xs().to_vec(), vv.rs().to_vec())
    };
    for binding in &a.bind {
        let (slot, expr) = binding.split_once('=').ok_or_else(|| format!("binding `{binding}` is not SLOT=EXPR"))?;
        let slot = slot.trim();
        let value: Polynomial = expr.parse().map_err(|e| format!("binding `{binding}`: {e}"))?;
        let (family, index) = slot.split_at(1.min(slot.len()));
        let target = match family {
            "x" => &mut xs,
            "r" => &mut rs,
            _ => return Err(format!("unknown slot `{slot}`; use x, r, x<i> or r<i>")),
        };
        if index.is_empty() {
            target.iter_mut().for_each(|t| *t = value.clone());
        } else {
            let i: usize = index.parse().map_err(|_| format!("unknown slot `{slot}`"))?;
            *target.get_mut(i).ok_or_else(|| format!("slot `{slot}` is past level {}", a.levels))? = value;
        }
    }
    VariableVectors::new(xs, rs).map_err(err)
}

fn cmd_matrix(a: MatrixArgs) -> CmdResult {
    let dimension = dimension_of(a.base, a.levels).map_err(err)?;
    if a.format != MatrixFormat::Json && dimension > DENSE_LIMIT {
        return Err(format!(
            "dimension {dimension} is too large for dense output (limit {DENSE_LIMIT}); use --format json"
        ));
    }
    let vv = matrix_vectors(&a)?;
    let m = build_kron(a.base, a.levels, &vv).map_err(err)?;
    let mut out: Box<dyn Write> = match &a.output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match a.format {
        MatrixFormat::Json => export::write_json(&m, &mut out),
        MatrixFormat::Csv => export::write_csv(&m, &mut out),
        MatrixFormat::Text => export::write_text(&m, &mut out),
    }
    .and_then(|_| out.flush())
    .map_err(err)?;
    eprintln!("dimension: {}  nnz: {}", m.dimension(), m.nnz());
    Ok(Status::Pass)
}

fn resolve_mode(mode: ModeArg, seed: Option<u64>) -> Mode {
    match mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::RandomEval => Mode::RandomEval { seed: seed.unwrap_or_else(fresh_seed) },
    }
}

fn fresh_seed() -> u64 {
    let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_nanos()).unwrap_or(0);
    (nanos as u64) ^ (u64::from(std::process::id()) << 32)
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let params = CaseParams { n: a.n, levels: a.levels, k: a.k, b: a.b, p: a.p, q: a.q };
    let mode = resolve_mode(a.mode, a.seed);
    let report = verify_case(a.identity, &params, mode).map_err(err)?;
    match a.format {
        Format::Text => println!("{report}"),
        Format::Json => print_json(&ReportJson::from(&report))?,
    }
    Ok(if report.passed { Status::Pass } else { Status::Fail })
}

fn cmd_sweep(a: SweepArgs) -> CmdResult {
    let ranges = SweepRanges { n: a.n, levels: a.levels, k: a.k, b: a.b, p: a.p, q: a.q };
    let mode = resolve_mode(a.mode, a.seed);
    let start = Instant::now();
    let summary = sweep::run(a.identity, &ranges, mode, a.parallel).map_err(err)?;
    match a.format {
        Format::Text => print!("{}", summary.to_text()),
        Format::Json => print_json(&summary)?,
    }
    eprintln!("runtime: {:.3} s", start.elapsed().as_secs_f64());
    Ok(if summary.all_passed() { Status::Pass } else { Status::Fail })
}
