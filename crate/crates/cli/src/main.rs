//! `bninv`: statistics, descent monomials, averaging, straightening and
//! freeness checks for diagonal invariants of `B_n`.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bn_invariants::hilbert::{fmaj_numerator, hilbert_series, verify_cells};
use bn_invariants::json::{DecompositionJson, ExpansionJson, PolynomialJson};
use bn_invariants::{
    decompose, descent_monomial_a, diagonal_descent_monomial_e, diagonal_signed_descent_monomial_c, evaluate,
    is_ordered, signed_descent_monomial_b, straighten, BiSeries, Monomial, QPolynomial, Rational, SignedPermutation,
    ENUMERATION_GUARD,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    /// descent monomial of an unsigned permutation
    A,
    /// signed descent monomial
    B,
    /// diagonal descent monomial of an unsigned permutation
    E,
    /// diagonal signed descent monomial
    C,
}

#[derive(Debug, Parser)]
#[command(name = "bninv", version, about = "Diagonal invariants of the hyperoctahedral group")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Largest rank accepted; defaults to 8 for enumeration and 3 for straighten/verify.
    #[arg(long, global = true)]
    rank_guard: Option<usize>,

    /// Largest total degree for `verify` and `hilbert`.
    #[arg(long, default_value_t = 12, global = true)]
    max_degree: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Descent statistics of a signed permutation given in window notation, e.g. "[2,-1,-4,3]".
    Stats {
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// One of the descent monomials a, b, e, c of a window.
    Monomial {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// Average of x^p y^q over the group, as polynomial JSON suitable for `straighten`.
    Rho {
        #[arg(long = "x", value_delimiter = ',', required = true)]
        p: Vec<u32>,
        #[arg(long = "y", value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
    /// Expand an invariant (polynomial JSON on stdin) in the free basis.
    Straighten {
        /// Re-evaluate the expansion and require exact equality with the input.
        #[arg(long)]
        verify: bool,
    },
    /// Check rank = dim = series = generators in every cell up to --max-degree.
    Verify { n: usize },
    /// Bigraded Hilbert series of the invariants, truncated at --max-degree.
    Hilbert {
        n: usize,
        /// Print the numerator polynomial instead of the series.
        #[arg(long)]
        numerator: bool,
    },
    /// Signed index permutation and exponent decomposition of an ordered monomial.
    Decompose {
        #[arg(long = "x", value_delimiter = ',', required = true)]
        p: Vec<u32>,
        #[arg(long = "y", value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
}

#[derive(Debug, Clone)]
struct Config {
    max_rank_guard: usize,
    truncation_degree: u32,
    output_format: Format,
}

impl Config {
    fn new(cli: &Cli) -> Result<Self> {
        let default_guard = match cli.command {
            Command::Straighten { .. } | Command::Verify { .. } => 3,
            _ => ENUMERATION_GUARD,
        };
        let max_rank_guard = cli.rank_guard.unwrap_or(default_guard);
        if max_rank_guard == 0 {
            bail!("--rank-guard must be positive");
        }
        Ok(Self {
            max_rank_guard,
            truncation_degree: cli.max_degree,
            output_format: cli.format,
        })
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n == 0 {
            bail!("rank must be positive");
        }
        if n > self.max_rank_guard {
            bail!(
                "rank {n} exceeds the rank guard {} (raise it with --rank-guard)",
                self.max_rank_guard
            );
        }
        Ok(())
    }

    fn json(&self) -> bool {
        self.output_format == Format::Json
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_stats(cfg: &Config, window: &str) -> Result<()> {
    let sigma: SignedPermutation = window.parse()?;
    let stats = sigma.statistics();
    let inverse = sigma.inverse();
    if cfg.json() {
        return print_json(&json!({
            "window": sigma.window(),
            "inverse": inverse.window(),
            "statistics": stats,
        }));
    }
    println!("window   {sigma}");
    println!("inverse  {inverse}");
    println!("Des      {{{}}}", list(&stats.descent_set));
    println!("d        ({})", list(&stats.d));
    println!("eps      ({})", list(&stats.eps));
    println!("f        ({})", list(&stats.f));
    println!("maj      {}", stats.maj);
    println!("neg      {}", stats.neg);
    println!("fmaj     {}", stats.fmaj);
    Ok(())
}

fn print_polynomial(cfg: &Config, f: &QPolynomial) -> Result<()> {
    if cfg.json() {
        print_json(&PolynomialJson::from(f))
    } else {
        println!("{f}");
        Ok(())
    }
}

fn cmd_monomial(cfg: &Config, kind: Kind, window: &str) -> Result<()> {
    let sigma: SignedPermutation = window.parse()?;
    let m = match kind {
        Kind::A => descent_monomial_a(&sigma)?,
        Kind::B => signed_descent_monomial_b(&sigma),
        Kind::E => diagonal_descent_monomial_e(&sigma)?,
        Kind::C => diagonal_signed_descent_monomial_c(&sigma),
    };
    print_polynomial(cfg, &QPolynomial::from_monomial(m, Rational::one()))
}

fn monomial_from_args(cfg: &Config, p: &[u32], q: &[u32]) -> Result<Monomial> {
    if p.len() != q.len() {
        bail!("--x has {} entries but --y has {}", p.len(), q.len());
    }
    cfg.check_rank(p.len())?;
    Ok(Monomial::new(p, q)?)
}

fn cmd_rho(cfg: &Config, p: &[u32], q: &[u32]) -> Result<()> {
    let m = monomial_from_args(cfg, p, q)?;
    print_polynomial(cfg, &QPolynomial::from_monomial(m, Rational::one()).rho()?)
}

fn cmd_decompose(cfg: &Config, p: &[u32], q: &[u32]) -> Result<()> {
    let m = monomial_from_args(cfg, p, q)?;
    if !is_ordered(&m) {
        bail!("{m} is not ordered");
    }
    let d = decompose(&m)?;
    if cfg.json() {
        return print_json(&DecompositionJson::from(&d));
    }
    println!("sigma  {}", d.sigma);
    println!("nu     ({})", list(&d.nu));
    println!("delta  ({})", list(&d.delta));
    println!("mu     ({})", list(&d.mu));
    println!("gamma  ({})", list(&d.gamma));
    Ok(())
}

fn cmd_straighten(cfg: &Config, verify: bool) -> Result<()> {
    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .context("reading polynomial JSON from stdin")?;
    let f = bn_invariants::json::polynomial_from_json(&input)?;
    cfg.check_rank(f.n())?;
    let expansion = straighten(&f)?;
    if verify && evaluate(&expansion)? != f {
        bail!("verification failed: the expansion does not evaluate back to the input");
    }
    if cfg.json() {
        return print_json(&ExpansionJson::from(&expansion));
    }
    for (sigma, coeff) in expansion.entries() {
        println!("{sigma}: {coeff}");
    }
    Ok(())
}

fn cmd_verify(cfg: &Config, n: usize) -> Result<bool> {
    cfg.check_rank(n)?;
    let cells = verify_cells(n, cfg.truncation_degree)?;
    let all = cells.iter().all(|c| c.pass);
    if cfg.json() {
        print_json(&json!({ "n": n, "max_degree": cfg.truncation_degree, "pass": all, "cells": cells }))?;
    } else {
        println!(
            "{:>3} {:>3} {:>6} {:>6} {:>6} {:>10}  result",
            "a", "b", "rank", "dim", "series", "generators"
        );
        for c in &cells {
            let verdict = if c.pass { "ok" } else { "FAIL" };
            println!(
                "{:>3} {:>3} {:>6} {:>6} {:>6} {:>10}  {verdict}",
                c.a, c.b, c.rank, c.dim, c.series, c.generators
            );
        }
        let passed = cells.iter().filter(|c| c.pass).count();
        println!("{passed}/{} cells pass", cells.len());
    }
    Ok(all)
}

fn print_series(cfg: &Config, n: usize, series: &BiSeries) -> Result<()> {
    if cfg.json() {
        let terms: Vec<_> = series
            .iter()
            .map(|((a, b), c)| json!({ "a": a, "b": b, "coeff": c }))
            .collect();
        return print_json(&json!({ "n": n, "truncation": series.truncation(), "terms": terms }));
    }
    let top = series.truncation();
    print!("a\\b");
    for b in 0..=top {
        print!(" {b:>4}");
    }
    println!();
    for a in 0..=top {
        print!("{a:>3}");
        for b in 0..=top - a {
            print!(" {:>4}", series.coefficient(a, b));
        }
        println!();
    }
    Ok(())
}

fn cmd_hilbert(cfg: &Config, n: usize, numerator: bool) -> Result<()> {
    cfg.check_rank(n)?;
    let series = if numerator {
        fmaj_numerator(n)?
    } else {
        hilbert_series(n, cfg.truncation_degree)?
    };
    print_series(cfg, n, &series)
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = Config::new(cli)?;
    match &cli.command {
        Command::Stats { window } => cmd_stats(&cfg, window)?,
        Command::Monomial { kind, window } => cmd_monomial(&cfg, *kind, window)?,
        Command::Rho { p, q } => cmd_rho(&cfg, p, q)?,
        Command::Decompose { p, q } => cmd_decompose(&cfg, p, q)?,
        Command::Straighten { verify } => cmd_straighten(&cfg, *verify)?,
        Command::Verify { n } => return cmd_verify(&cfg, *n),
        Command::Hilbert { n, numerator } => cmd_hilbert(&cfg, *n, *numerator)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
