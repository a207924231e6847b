//! `gsdec`: command-line front end for the list decoder.
//!
//! Vectors are read from stdin as JSON integer arrays (comma-separated integers
//! are also accepted) and written to stdout as JSON. Exit codes: 0 success,
//! 1 usage or input error, 2 decoding failure or empty candidate list.

use std::io::{self, Read};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gsdec_core::galois::ArithOp;
use gsdec_core::interp::{build_compressed_system, build_system, GsaParams, InterpolationSystem};
use gsdec_core::pipeline::{self, default_grid, DecodeMode, Decoder};
use gsdec_core::{Elem, Error, ErrorSpec, FieldCtx, FieldSpec, Message, RsCode, TimeVector};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "gsdec",
    version,
    about = "Guruswami-Sudan list decoding for Reed-Solomon codes"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Field order: `2^4`, `16`, `q=7`.
    #[arg(long, global = true, default_value = "2^4")]
    q: String,
    /// Modulus coefficients, low to high, e.g. `1,1,0,0,1`.
    #[arg(long = "mod", global = true, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// Code dimension.
    #[arg(long, global = true, default_value_t = 3)]
    k: usize,
    /// Interpolation multiplicity.
    #[arg(long, global = true, default_value_t = 1)]
    s: usize,
    /// List size (maximal y-degree).
    #[arg(long, global = true, default_value_t = 2)]
    ell: usize,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Plain)]
    mode: ModeArg,
    /// Period for `--mode periodic`; must divide n. Default: smallest divisor >= d - 1.
    #[arg(long, global = true)]
    p: Option<usize>,
    /// Re-encoding positions. Default: 0..k-1.
    #[arg(long, global = true, value_delimiter = ',')]
    positions: Option<Vec<usize>>,
    /// Decoding radius override.
    #[arg(long, global = true)]
    tau: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ModeArg {
    Plain,
    Reencode,
    Periodic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe the field, or evaluate `A OP B` with OP one of + - * /.
    Field {
        a: Option<u64>,
        op: Option<String>,
        b: Option<u64>,
    },
    /// Encode a message of k symbols.
    Encode,
    /// Add errors to a vector.
    Corrupt {
        /// Number of random errors, drawn from `--seed`.
        #[arg(long, conflicts_with = "at")]
        errors: Option<usize>,
        /// Explicit errors `j:v,...`.
        #[arg(long, value_delimiter = ',')]
        at: Option<Vec<String>>,
    },
    /// Apply the re-encoding map or the periodicity projection.
    Modify,
    /// List-decode a received vector.
    Decode,
    /// Report interpolation system sizes for a received vector.
    Analyze,
    /// Run the benchmark grid; CSV unless `--json`.
    Bench {
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Run the built-in correctness suites.
    Selftest,
}

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Decode(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Decode(e)) => {
            eprintln!("decode failure: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Field { a, op, b } => field_cmd(g, *a, op.as_deref(), *b)?,
        Command::Encode => encode_cmd(g)?,
        Command::Corrupt { errors, at } => corrupt_cmd(g, *errors, at.as_deref())?,
        Command::Modify => modify_cmd(g)?,
        Command::Decode => return decode_cmd(g),
        Command::Analyze => analyze_cmd(g)?,
        Command::Bench { trials } => bench_cmd(g, *trials)?,
        Command::Selftest => return selftest_cmd(g),
    }
    Ok(())
}

fn field_spec(g: &Global) -> anyhow::Result<FieldSpec> {
    let mut spec: FieldSpec = g.q.parse().with_context(|| format!("--q {}", g.q))?;
    if g.modulus.is_some() {
        spec.modulus = g.modulus.clone();
    }
    Ok(spec)
}

fn field(g: &Global) -> anyhow::Result<Arc<FieldCtx>> {
    Ok(Arc::new(field_spec(g)?.build()?))
}

fn code(g: &Global) -> anyhow::Result<RsCode> {
    Ok(RsCode::new(field(g)?, g.k)?)
}

fn decode_mode(g: &Global) -> anyhow::Result<DecodeMode> {
    Ok(match g.mode {
        ModeArg::Plain => DecodeMode::Plain,
        ModeArg::Reencode => DecodeMode::Reencode {
            positions: g.positions.clone(),
        },
        ModeArg::Periodic => DecodeMode::Periodic { p: g.p },
    })
}

fn read_stdin_codes() -> anyhow::Result<Vec<u64>> {
    let mut input = String::new();
    io::stdin()
        .read_to_string(&mut input)
        .context("reading stdin")?;
    parse_codes(&input)
}

fn parse_codes(input: &str) -> anyhow::Result<Vec<u64>> {
    let input = input.trim();
    if input.starts_with('[') {
        return serde_json::from_str(input).context("stdin is not a JSON integer array");
    }
    input
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .with_context(|| format!("bad integer {t:?}"))
        })
        .collect()
}

fn read_vector(f: &FieldCtx) -> anyhow::Result<TimeVector> {
    let codes = read_stdin_codes()?;
    if codes.len() != f.n() {
        bail!("expected {} symbols, got {}", f.n(), codes.len());
    }
    Ok(TimeVector(f.elems(&codes)?))
}

fn codes(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.code()).collect()
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn field_cmd(g: &Global, a: Option<u64>, op: Option<&str>, b: Option<u64>) -> anyhow::Result<()> {
    let f = field(g)?;
    if let (Some(a), Some(op), Some(b)) = (a, op, b) {
        let op = match op {
            "+" => ArithOp::Add,
            "-" => ArithOp::Sub,
            "*" | "x" => ArithOp::Mul,
            "/" => ArithOp::Div,
            other => bail!("unknown operator {other:?}"),
        };
        let v = f.arith(f.elem(a)?, f.elem(b)?, op)?;
        return print_json(&v.code());
    }
    if a.is_some() {
        bail!("field arithmetic needs A OP B");
    }
    let info = json!({
        "q": f.order(),
        "characteristic": f.characteristic(),
        "degree": f.degree(),
        "n": f.n(),
        "modulus": f.modulus(),
        "alpha": f.alpha().code(),
    });
    if g.json {
        print_json(&info)
    } else {
        println!("{}", field_spec(g)?);
        println!(
            "order {} = {}^{}, n = {}",
            f.order(),
            f.characteristic(),
            f.degree(),
            f.n()
        );
        if f.degree() > 1 {
            println!("modulus {:?} (low to high)", f.modulus());
        }
        println!("alpha {}", f.alpha());
        Ok(())
    }
}

fn encode_cmd(g: &Global) -> anyhow::Result<()> {
    let rs = code(g)?;
    let msg = read_stdin_codes()?;
    if msg.len() != rs.k() {
        bail!(
            "expected a message of k = {} symbols, got {}",
            rs.k(),
            msg.len()
        );
    }
    let c = rs.encode(&Message(rs.field().elems(&msg)?))?;
    print_json(&c.codes())
}

fn corrupt_cmd(g: &Global, errors: Option<usize>, at: Option<&[String]>) -> anyhow::Result<()> {
    let rs = code(g)?;
    let f = rs.field();
    let v = read_vector(f)?;
    let spec = match (errors, at) {
        (Some(weight), None) => ErrorSpec::Random {
            weight,
            seed: g.seed,
        },
        (None, Some(pairs)) => ErrorSpec::Explicit(
            pairs
                .iter()
                .map(|p| {
                    let (j, val) = p
                        .split_once(':')
                        .ok_or_else(|| anyhow!("expected j:v, got {p:?}"))?;
                    Ok((j.trim().parse()?, f.elem(val.trim().parse()?)?))
                })
                .collect::<anyhow::Result<_>>()?,
        ),
        _ => bail!("corrupt needs --errors N or --at j:v,..."),
    };
    // draw the pattern against the zero codeword, then apply it to the input,
    // which need not be a codeword
    let (error, _) = rs.add_errors(&zero_codeword(&rs), &spec)?;
    let received = v.add(f, &error);
    if g.json {
        print_json(&json!({ "received": received.codes(), "error": error.codes() }))
    } else {
        print_json(&received.codes())
    }
}

fn zero_codeword(rs: &RsCode) -> gsdec_core::Codeword {
    rs.encode(&Message(vec![Elem::ZERO; rs.k()]))
        .expect("message of length k")
}

fn modify_cmd(g: &Global) -> anyhow::Result<()> {
    let rs = code(g)?;
    let f = rs.field();
    let v = read_vector(f)?;
    let mv = match g.mode {
        ModeArg::Reencode => {
            let j = g.positions.clone().unwrap_or_else(|| (0..rs.k()).collect());
            gsdec_core::modify::reencode(&rs, &v, &j)?
        }
        ModeArg::Periodic => {
            let p = g.p.unwrap_or_else(|| pipeline::default_period(&rs));
            gsdec_core::modify::periodicity_projection(&rs, &v, p)?
        }
        ModeArg::Plain => bail!("modify needs --mode reencode or --mode periodic"),
    };
    print_json(&json!({
        "modified": mv.modified.codes(),
        "offset": mv.offset.codes(),
        "offset_in_code": mv.offset_in_code,
        "sigma": mv.sigma,
        "zero_positions": mv.zero_positions(),
    }))
}

fn decode_cmd(g: &Global) -> Result<(), Failure> {
    let rs = code(g)?;
    let r = read_vector(rs.field())?;
    let dec = Decoder::new(rs, g.s, g.ell, decode_mode(g)?, g.tau).map_err(anyhow::Error::from)?;
    let report = match dec.decode(&r) {
        Ok(rep) => rep,
        Err(e) if is_usage(&e) => return Err(Failure::Usage(e.into())),
        Err(e) => return Err(Failure::Decode(e.into())),
    };
    if g.json {
        print_json(&report)?;
    } else {
        let list: Vec<Vec<u32>> = report
            .candidates
            .entries
            .iter()
            .map(|c| c.codeword.codes())
            .collect();
        print_json(&list)?;
    }
    if report.candidates.is_empty() {
        return Err(Failure::Decode(anyhow!(
            "no codeword within distance {}",
            report.tau
        )));
    }
    Ok(())
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::LengthMismatch { .. }
            | Error::ElementOutOfRange { .. }
            | Error::InvalidPositions(_)
            | Error::InvalidParams(_)
            | Error::NotDivisor { .. }
            | Error::Parse(_)
    )
}

#[derive(Serialize)]
struct SystemSummary {
    rows: usize,
    cols: usize,
    rank: usize,
    pruned_rows: usize,
    density: f64,
}

impl SystemSummary {
    fn of(f: &FieldCtx, sys: &InterpolationSystem) -> Self {
        let (rows, cols) = sys.shape();
        SystemSummary {
            rows,
            cols,
            rank: sys.matrix.rank(f),
            pruned_rows: sys.pruned_rows,
            density: sys.matrix.density(),
        }
    }
}

fn analyze_cmd(g: &Global) -> anyhow::Result<()> {
    let rs = code(g)?;
    let f = rs.field();
    let r = read_vector(f)?;
    let dec = Decoder::new(rs.clone(), g.s, g.ell, decode_mode(g)?, g.tau)?;
    let params: &GsaParams = dec.params();
    let full = build_system(f, &r, params)?;
    let mut out = json!({
        "n": rs.n(),
        "k": rs.k(),
        "s": params.s,
        "ell": params.ell,
        "tau": params.tau,
        "eps0": params.eps0.to_string(),
        "degree_bounds": params.dnu,
        "mode": dec.mode(),
        "uncompressed": SystemSummary::of(f, &full),
    });
    if let Some(mv) = dec.modify(&r)? {
        let sys = build_compressed_system(f, &mv, params)?;
        let plan = sys.plan.as_ref().expect("compressed system has a plan");
        out["compressed"] = serde_json::to_value(SystemSummary::of(f, &sys))?;
        out["sigma"] = json!(plan.sigma);
        out["v_poly"] = json!(codes(plan.v_poly.coeffs()));
        out["w_degree_bounds"] = json!(plan.w_degrees);
    }
    if g.json {
        print_json(&out)
    } else {
        println!("{}", serde_json::to_string_pretty(&out)?);
        Ok(())
    }
}

fn bench_cmd(g: &Global, trials: usize) -> anyhow::Result<()> {
    let table = pipeline::bench(&default_grid(), trials, g.seed)?;
    if g.json {
        println!("{}", table.to_json()?);
    } else {
        print!("{}", table.to_csv()?);
    }
    Ok(())
}

fn selftest_cmd(g: &Global) -> Result<(), Failure> {
    let results = pipeline::selftest().map_err(anyhow::Error::from)?;
    if g.json {
        print_json(&results)?;
    } else {
        for r in &results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            println!(
                "{status}  {:<18} {:>6} cases {:>4} failures  {:.2}s  {}",
                r.name, r.cases, r.failures, r.seconds, r.detail
            );
        }
    }
    if results.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Decode(anyhow!("self-test failed")))
    }
}
