//! Command-line front end.
//!
//! Exit codes: 0 when the checked predicate holds (or a campaign has no
//! records), 1 when it fails (or a campaign reports anything), 2 for usage
//! and input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use crate::binrep::{binrep, ceiling_condition, check_monotone, default_tolerance, digits_for, Monotone};
use crate::complex::{compressed_realize, dilate_complex, hadamard_complex, join, SimplicialComplex};
use crate::decomposition::{check_question_second, conjecture_second_violations, recursive_decompose};
use crate::error::{Error, Result};
use crate::fvector::{f_plus_tfprime_vector, kk_report, macaulay_report, veronese_subsequence, FVector};
use crate::harness::campaign::{run_campaign, Campaign};
use crate::harness::corpus::{generate_corpus, CorpusSpec, Generator};
use crate::poly::IntPolynomial;
use crate::triangle::{check_rows_kk, parse_spec_file, rows, TriangleSpec};

#[derive(Debug, Parser)]
#[command(name = "fpoly", version, about = "Exact checks on f-vectors and real-rooted polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kruskal-Katona condition on a vector such as 1,4,5,2
    CheckKk { vector: String },
    /// Macaulay condition on a vector
    CheckMacaulay { vector: String },
    /// Whether a polynomial (ascending coefficients) has only real roots
    Sturm { poly: String },
    /// Ultra log-concavity of the coefficients
    Ulc { poly: String },
    /// Binomial representation x_1, ..., x_d of the coefficients
    Binrep {
        poly: String,
        /// Width of the printed enclosures, e.g. 1e-12 or 1/1000
        #[arg(long)]
        tol: Option<String>,
    },
    /// Split f = g + t h and test the related conjecture
    Decompose { poly: String },
    /// Rows of a built-in triangle or of every spec in a file
    Triangle {
        source: String,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        check_kk: bool,
    },
    /// Complex and vector constructions
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Compressed complex with a given f-vector
    Realize { vector: String },
    /// Run a campaign over a generated corpus
    Campaign {
        name: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        max_coeff: Option<u64>,
        #[arg(long)]
        generator: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON-lines report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// TOML file with any of max_degree, max_coeff, generator, seed, jobs
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Join of two complexes given as facet lists
    Join { left: String, right: String },
    /// Hadamard complex of two facet lists
    Hadamard { left: String, right: String },
    /// Dilation of a complex by a factor
    Dilate { complex: String, factor: usize },
    /// (1, 2 f_0, 3 f_1, ...)
    Ftf { vector: String },
    /// Vector positions 0, k, 2k, ...
    Veronese { vector: String, k: usize },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CampaignConfig {
    max_degree: Option<usize>,
    max_coeff: Option<u64>,
    generator: Option<String>,
    seed: Option<u64>,
    jobs: Option<usize>,
}

fn parse_tolerance(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse { token: s.to_string(), input: "--tol".into() };
    let value = if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        BigRational::new(n, d)
    } else {
        let x: f64 = s.parse().map_err(|_| bad())?;
        BigRational::from_float(x).ok_or_else(bad)?
    };
    if value <= BigRational::from_integer(0.into()) {
        return Err(Error::NonPositive { what: "tolerance" });
    }
    Ok(value)
}

fn verdict(out: &mut dyn Write, holds: bool) -> Result<i32> {
    writeln!(out, "{}", if holds { "PASS" } else { "FAIL" })?;
    Ok(if holds { 0 } else { 1 })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::CheckKk { vector } => {
            let f: FVector = vector.parse()?;
            let r = kk_report(&f);
            let code = verdict(out, r.holds())?;
            for x in &r.failures {
                writeln!(out, "i={}: mu_{}({}) = {} > {}", x.index, x.index + 1, f.at(x.index + 1), x.lhs, x.rhs)?;
            }
            Ok(code)
        }
        Command::CheckMacaulay { vector } => {
            let f: FVector = vector.parse()?;
            let r = macaulay_report(&f);
            let code = verdict(out, r.holds())?;
            for x in &r.failures {
                writeln!(out, "i={}: kappa_{}({}) = {} > {}", x.index, x.index + 1, f.at(x.index + 1), x.lhs, x.rhs)?;
            }
            Ok(code)
        }
        Command::Sturm { poly } => {
            let p: IntPolynomial = poly.parse()?;
            let rr = p.is_real_rooted()?;
            writeln!(out, "{rr}")?;
            writeln!(
                out,
                "distinct real roots: {}, degree: {}",
                p.distinct_real_roots()?,
                p.degree().unwrap_or(0)
            )?;
            Ok(if rr { 0 } else { 1 })
        }
        Command::Ulc { poly } => {
            let p: IntPolynomial = poly.parse()?;
            let r = p.ultra_log_concavity()?;
            writeln!(out, "{}", r.holds)?;
            if let Some(w) = r.witness {
                writeln!(
                    out,
                    "index {}: a_{i}^2 = {} < a_{}*a_{} = {} (normalized {} < {})",
                    w.index,
                    w.coeff_square,
                    w.index - 1,
                    w.index + 1,
                    w.neighbour_product,
                    w.normalized_lhs,
                    w.normalized_rhs,
                    i = w.index
                )?;
            }
            Ok(if r.holds { 0 } else { 1 })
        }
        Command::Binrep { poly, tol } => {
            let p: IntPolynomial = poly.parse()?;
            let tol = match tol {
                Some(t) => parse_tolerance(&t)?,
                None => default_tolerance(),
            };
            let rep = binrep(&p, &tol)?;
            let digits = digits_for(&tol);
            for e in rep.entries() {
                writeln!(out, "x_{} = {}", e.index(), e.render(digits))?;
            }
            let mono = match check_monotone(&rep) {
                Monotone::Holds => "true".to_string(),
                Monotone::Violated { index } => format!("false (x_{index} < x_{})", index + 1),
                Monotone::Indeterminate { index } => format!("undecided at x_{index}"),
            };
            writeln!(out, "monotone: {mono}")?;
            let ceil = ceiling_condition(&p)?;
            writeln!(out, "ceiling condition: {}", ceil.holds)?;
            for c in &ceil.failures {
                writeln!(
                    out,
                    "  i={}: f_{} = {} < C({}, {}) = {}",
                    c.index,
                    c.index - 2,
                    c.lhs,
                    c.ceil,
                    c.index - 1,
                    c.rhs
                )?;
            }
            Ok(0)
        }
        Command::Decompose { poly } => {
            let p: IntPolynomial = poly.parse()?;
            let dec = recursive_decompose(&p)?;
            writeln!(out, "g = {}", dec.g())?;
            writeln!(out, "h = {}", dec.h())?;
            for (i, c) in dec.cascades().iter().enumerate() {
                writeln!(out, "f_{} = {c}", i)?;
            }
            let bad = conjecture_second_violations(&p)?;
            writeln!(out, "h_i <= g_i: {}", bad.is_empty())?;
            for i in &bad {
                writeln!(out, "  i={i}: h_i = {} > g_i = {}", dec.h().coeff(*i), dec.g().coeff(*i))?;
            }
            let (g_rr, h_rr) = check_question_second(&p)?;
            writeln!(out, "g real-rooted: {g_rr}")?;
            writeln!(out, "h real-rooted: {h_rr}")?;
            Ok(0)
        }
        Command::Triangle { source, rows: depth, check_kk } => {
            let specs = match TriangleSpec::builtin(&source) {
                Ok(s) => vec![s],
                Err(unknown) => match fs::read_to_string(&source) {
                    Ok(text) => parse_spec_file(&text)?,
                    Err(_) => return Err(unknown),
                },
            };
            let mut code = 0;
            for spec in &specs {
                writeln!(out, "# {spec}")?;
                let tri = rows(spec, depth)?;
                let report = if check_kk { Some(check_rows_kk(spec, depth)?) } else { None };
                for (d, row) in tri.rows().iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    match &report {
                        Some(r) => {
                            let ok = r.row_kk[d];
                            writeln!(out, "{}: {} {}", d + 1, cells.join(","), if ok { "PASS" } else { "FAIL" })?
                        }
                        None => writeln!(out, "{}: {}", d + 1, cells.join(","))?,
                    }
                }
                if let Some(r) = report {
                    if !r.rows_hold() {
                        code = 1;
                    }
                    for claim in 1..=3 {
                        let n = r.claim_failures_for(claim).count();
                        writeln!(out, "claim ({claim}): {n} failing (d,k) pairs")?;
                        if let Some(first) = r.claim_failures_for(claim).next() {
                            writeln!(out, "  first: {first}")?;
                        }
                    }
                }
            }
            Ok(code)
        }
        Command::Construct { what } => {
            match what {
                Construct::Join { left, right } => {
                    let c = join(&SimplicialComplex::parse(&left)?, &SimplicialComplex::parse(&right)?)?;
                    writeln!(out, "{c}")?;
                    writeln!(out, "f = {}", c.f_vector())?;
                }
                Construct::Hadamard { left, right } => {
                    let c = hadamard_complex(&SimplicialComplex::parse(&left)?, &SimplicialComplex::parse(&right)?)?;
                    writeln!(out, "{c}")?;
                    writeln!(out, "f = {}", c.f_vector())?;
                }
                Construct::Dilate { complex, factor } => {
                    let c = dilate_complex(&SimplicialComplex::parse(&complex)?, factor)?;
                    writeln!(out, "{c}")?;
                    writeln!(out, "f = {}", c.f_vector())?;
                }
                Construct::Ftf { vector } => {
                    writeln!(out, "{}", f_plus_tfprime_vector(&vector.parse()?))?;
                }
                Construct::Veronese { vector, k } => {
                    writeln!(out, "{}", veronese_subsequence(&vector.parse()?, k)?)?;
                }
            }
            Ok(0)
        }
        Command::Realize { vector } => {
            let f: FVector = vector.parse()?;
            let c = compressed_realize(&f)?;
            writeln!(out, "{c}")?;
            writeln!(out, "f = {}", c.f_vector())?;
            Ok(0)
        }
        Command::Campaign { name, max_degree, max_coeff, generator, seed, jobs, out: path, config } => {
            let campaign: Campaign = name.parse()?;
            let cfg: CampaignConfig = match config {
                Some(p) => {
                    let text = fs::read_to_string(&p)?;
                    toml::from_str(&text).map_err(|e| Error::Parse {
                        token: e.message().to_string(),
                        input: p.display().to_string(),
                    })?
                }
                None => CampaignConfig::default(),
            };
            let defaults = CorpusSpec::default();
            let generator: Generator = match generator.or(cfg.generator) {
                Some(g) => g.parse()?,
                None => defaults.generator,
            };
            let spec = CorpusSpec {
                max_degree: max_degree.or(cfg.max_degree).unwrap_or(defaults.max_degree),
                max_coeff: max_coeff.or(cfg.max_coeff).unwrap_or(defaults.max_coeff),
                generator,
                seed: seed.or(cfg.seed).unwrap_or(defaults.seed),
            };
            let jobs = jobs.or(cfg.jobs);
            if jobs == Some(0) {
                return Err(Error::NonPositive { what: "job count" });
            }
            let corpus = generate_corpus(&spec)?;
            let report = run_campaign(campaign, &corpus, &spec, jobs)?;
            match path {
                Some(p) => report.write_jsonl(fs::File::create(p)?)?,
                None => report.write_jsonl(&mut *out)?,
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
    }
}

/// Runs the command line `args` (program name first), writing to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn cli_main(args: Vec<String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
