//! `sorder`: coefficient tables, ordered symbols and verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 data or precondition error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use sorder_core::hsu_shiue::{hs_egf, hs_triangle_rec};
use sorder_core::ordering::{power_form, power_symbol, s_ordered_symbol, weyl_power_aaa, Variant};
use sorder_core::rational::parse_rational;
use sorder_core::riordan::CatalogSequence;
use sorder_core::two_point::two_point_egf;
use sorder_core::verify::{run_suite, Suite, SuiteConfig};
use sorder_core::{HSParams, OrderingParam, Rational, SingleAnnihilatorWord, TwoPointParams};

const DEFAULT_ORDER: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "sorder", version, about = "Exact s-ordering calculus for a, a† with [a, a†] = 1")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    /// s-ordered classical symbol.
    Symbol,
    Normal,
    AntiNormal,
}

#[derive(clap::Args, Debug)]
struct Trunc {
    /// Truncation order.
    #[arg(long = "N", env = "SORDER_TRUNC")]
    n: Option<usize>,
}

#[derive(clap::Args, Debug)]
struct HsArgs {
    #[arg(long = "A", value_parser = rational, default_value = "0", allow_hyphen_values = true)]
    a: Rational,
    #[arg(long = "B", value_parser = rational, default_value = "1", allow_hyphen_values = true)]
    b: Rational,
    #[arg(long = "r", value_parser = rational, default_value = "0", allow_hyphen_values = true)]
    r: Rational,
}

#[derive(clap::Args, Debug)]
struct WordArgs {
    #[arg(long = "L")]
    l: u32,
    #[arg(long = "R")]
    r: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hsu-Shiue triangle HS_{n,k}(A, B, r) from the recurrence.
    HsTriangle {
        #[command(flatten)]
        params: HsArgs,
        #[command(flatten)]
        order: Trunc,
    },
    /// Row polynomials of the Hsu-Shiue EGF.
    HsEgf {
        #[command(flatten)]
        params: HsArgs,
        #[command(flatten)]
        order: Trunc,
    },
    /// Row polynomials of the two-point EGF.
    TwoPointEgf {
        #[command(flatten)]
        params: HsArgs,
        #[arg(long = "r-prime", value_parser = rational, default_value = "0", allow_hyphen_values = true)]
        r_prime: Rational,
        /// normal, weyl, antinormal, a rational, or symbolic.
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        s: OrderingParam,
        #[command(flatten)]
        order: Trunc,
    },
    /// s-ordered symbol of exp(λ a†^L a a†^R).
    Order {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        s: OrderingParam,
        #[command(flatten)]
        order: Trunc,
    },
    /// (a†^L a a†^R)^n as an s-ordered symbol or in normal / anti-normal order.
    Power {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        s: OrderingParam,
        #[arg(long, value_enum, default_value_t = Form::Symbol)]
        form: Form,
    },
    /// Weyl-ordered symbol of (a† a a†)^n.
    WeylAaa {
        #[arg(long)]
        n: u32,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = suite_name)]
        suite: Suite,
        #[command(flatten)]
        order: Trunc,
        #[arg(long = "max-LR", default_value_t = 4)]
        max_lr: u32,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
    /// Triangle of a catalog Sheffer sequence: touchard, hermite, laguerre, abel.
    Catalog {
        #[arg(value_parser = sequence_name)]
        sequence: CatalogSequence,
        #[command(flatten)]
        order: Trunc,
    },
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn suite_name(text: &str) -> Result<Suite, String> {
    text.parse().map_err(|e: sorder_core::Error| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

fn sequence_name(text: &str) -> Result<CatalogSequence, String> {
    text.parse().map_err(|e: sorder_core::Error| e.to_string())
}

fn word(args: &WordArgs) -> sorder_core::Result<SingleAnnihilatorWord> {
    SingleAnnihilatorWord::new(args.l, args.r)
}

/// Rendered output and whether it reports a verification failure.
struct Rendered {
    text: String,
    failed: bool,
}

fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn csv_quote(text: &str) -> String {
    format!("\"{}\"", text.replace('"', "\"\""))
}

fn render(cli: &Cli) -> anyhow::Result<Rendered> {
    let csv = cli.format == Format::Csv;
    let order = |o: &Trunc| o.n.unwrap_or(DEFAULT_ORDER);
    let text = match &cli.command {
        Command::HsTriangle { params, order: o } => {
            let p = HSParams::new(params.a.clone(), params.b.clone(), params.r.clone());
            let tri = hs_triangle_rec(&p, order(o));
            if csv { tri.to_csv() } else { json(&tri)? }
        }
        Command::HsEgf { params, order: o } => {
            let p = HSParams::new(params.a.clone(), params.b.clone(), params.r.clone());
            let egf = hs_egf(&p, order(o))?;
            if csv { egf.to_triangle().to_csv() } else { json(&egf)? }
        }
        Command::TwoPointEgf { params, r_prime, s, order: o } => {
            let p = TwoPointParams::new(
                params.a.clone(),
                params.b.clone(),
                params.r.clone(),
                r_prime.clone(),
                s.to_spoly(),
            );
            let egf = two_point_egf(&p, order(o))?;
            if csv { egf.to_triangle().to_csv() } else { json(&egf)? }
        }
        Command::Order { word: w, s, order: o } => {
            let series = s_ordered_symbol(&word(w)?, &s.to_spoly(), order(o))?;
            if csv { series.to_csv() } else { json(&series)? }
        }
        Command::Power { word: w, n, s, form } => {
            let w = word(w)?;
            match form {
                Form::Symbol => {
                    let symbol = power_symbol(&w, *n, &s.to_spoly())?;
                    if csv { symbol.to_csv() } else { json(&symbol)? }
                }
                Form::Normal | Form::AntiNormal => {
                    let variant = if *form == Form::Normal { Variant::Normal } else { Variant::AntiNormal };
                    let result = power_form(&w, *n, variant);
                    if csv { result.to_csv() } else { json(&result)? }
                }
            }
        }
        Command::WeylAaa { n } => {
            let symbol = weyl_power_aaa(*n);
            if csv { symbol.to_csv() } else { json(&symbol)? }
        }
        Command::Verify { suite, order: o, max_lr, seed } => {
            let config = SuiteConfig { order: o.n, max_lr: *max_lr, seed: *seed };
            let report = run_suite(*suite, &config)?;
            let failed = !report.passed();
            if failed {
                for case in report.failures() {
                    eprintln!("FAIL {} {}", report.suite, case.params);
                }
            }
            let text = if csv {
                let mut out = String::from("case,status,params,residual\n");
                for (i, case) in report.cases.iter().enumerate() {
                    let status = serde_json::to_value(case.status)?;
                    let residual = match &case.residual {
                        Value::Null => String::new(),
                        other => csv_quote(&other.to_string()),
                    };
                    out.push_str(&format!(
                        "{i},{},{},{residual}\n",
                        status.as_str().unwrap_or_default(),
                        csv_quote(&case.params.to_string())
                    ));
                }
                out
            } else {
                json(&report)?
            };
            return Ok(Rendered { text, failed });
        }
        Command::Catalog { sequence, order: o } => {
            let n = order(o);
            let tri = sequence.sheffer_pair(n)?.triangle(n)?;
            if csv { tri.to_csv() } else { json(&tri)? }
        }
    };
    Ok(Rendered { text, failed: false })
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match render(&cli).and_then(|r| emit(&cli, &r.text).map(|()| r.failed)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
