use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use schubhess::ideal::{groebner, parse_ideal_file};
use schubhess::{f_poly, run_check, schubert, Check, HessenbergFunction, Permutation, QPoly};

/// Schubert polynomials, Hessenberg generators, and identity sweeps.
#[derive(Parser)]
#[command(name = "schubhess", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation given as "[3,1,2]".
    Schubert { permutation: String },
    /// Print the generator polynomial f_{i,j}.
    Fpoly { i: usize, j: usize },
    /// Run an identity sweep: theorem, ddo, chain, monk, lemma42, nonvanish.
    Verify {
        check: String,
        #[arg(long)]
        n: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Run past the size budget. Unsupported: may take a very long time.
        #[arg(long)]
        unsupported_override: bool,
    },
    /// Inspect a Hessenberg function given as "(3,3,4,5,5)".
    Hess { action: HessAction, h: String },
    /// Work with an ideal file: "vars: n" then one polynomial per line.
    Ideal {
        action: IdealAction,
        file: PathBuf,
        /// Polynomial to test, for `member`.
        poly: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum HessAction {
    Render,
    Corners,
    Dim,
    Generators,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealAction {
    Member,
    Hilbert,
    Basis,
}

/// Distinguishes failed sweeps (exit 1) from bad input (exit 2).
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Schubert { permutation } => {
            let w: Permutation = permutation.parse()?;
            println!("{}", schubert(&w));
        }
        Command::Fpoly { i, j } => println!("{}", f_poly(i, j)?),
        Command::Verify {
            check,
            n,
            json,
            jobs,
            unsupported_override,
        } => return verify(&check, n, json, jobs, unsupported_override),
        Command::Hess { action, h } => {
            let h: HessenbergFunction = h.parse()?;
            match action {
                HessAction::Render => println!("{}", h.render_grid()),
                HessAction::Corners => {
                    let corners: Vec<String> = h.corners().iter().map(|c| c.to_string()).collect();
                    println!("{}", corners.join(" "));
                }
                HessAction::Dim => println!("{}", h.dimension()),
                HessAction::Generators => {
                    for (k, g) in h.ideal_generators().iter().enumerate() {
                        println!("f_({},{}) = {g}", h.value(k + 1), k + 1);
                    }
                }
            }
        }
        Command::Ideal { action, file, poly } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let (n, gens) = parse_ideal_file(&text)?;
            let basis = groebner(&gens, n)?;
            match action {
                IdealAction::Member => {
                    let Some(poly) = poly else {
                        bail!("`ideal member` needs a polynomial argument");
                    };
                    let f: QPoly = poly.parse()?;
                    if f.max_var() > n {
                        bail!(
                            "polynomial uses x{} but the ideal has {n} variables",
                            f.max_var()
                        );
                    }
                    let nf = basis.normal_form(&f);
                    if nf.is_zero() {
                        println!("member");
                    } else {
                        println!("not a member (normal form {nf})");
                    }
                }
                IdealAction::Hilbert => println!("{}", basis.hilbert_series()?.to_list()),
                IdealAction::Basis => {
                    for g in basis.generators() {
                        println!("{g}");
                    }
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn verify(check: &str, n: usize, json: bool, jobs: Option<usize>, over: bool) -> Result<Outcome> {
    let check: Check = check.parse()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().context("starting worker pool")?;
    let report = pool.install(|| run_check(check, n, over))?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.summary());
    }
    Ok(if report.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}
