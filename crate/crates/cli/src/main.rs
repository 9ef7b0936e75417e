use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use strip_poise::format::{self, parse_rational, ProblemFile};
use strip_poise::gen::{fuzz_instance, generate, GenSpec, Pattern};
use strip_poise::geometry::{Point, Rational};
use strip_poise::oracle::{fundamental_functions, interpolate, oracle_determinant, oracle_poised};
use strip_poise::problem::{Boundary, Problem};
use strip_poise::reduction::{decide_with, DecideOptions};

const POISED: u8 = 0;
const NOT_POISED: u8 = 1;
const INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "strip-poise", version, about = "Decide poisedness of Lagrange interpolation on triangle strips")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a problem file by reduction
    Check {
        file: PathBuf,
        /// Print the reduction tree
        #[arg(long)]
        trace: bool,
        /// Print vertex values of a nonzero function vanishing at the nodes
        #[arg(long)]
        witness: bool,
        /// Skip the node-count bounds filter
        #[arg(long)]
        no_nc_filter: bool,
    },
    /// Decide a problem file by its Vandermonde determinant
    Oracle { file: PathBuf },
    /// Compare the reduction engine against the determinant on random instances
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for counterexample files
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Negate every engine verdict (harness self-test)
        #[arg(long)]
        inject_mutant: bool,
    },
    /// Interpolate data at the nodes of a poised problem
    Interp {
        file: PathBuf,
        /// Comma-separated values, one per node
        #[arg(long, allow_hyphen_values = true, required_unless_present = "fundamental")]
        data: Option<String>,
        /// Evaluate the interpolant at "x,y" (repeatable)
        #[arg(long = "at", allow_hyphen_values = true)]
        at: Vec<String>,
        /// Print every fundamental function instead
        #[arg(long, conflicts_with = "data")]
        fundamental: bool,
    },
    /// Print a generated problem file
    Gen {
        #[arg(long, value_parser = Pattern::NAMES)]
        pattern: String,
        #[arg(long)]
        n: usize,
        /// Number of middle triangles for basic-2m2 and nonpoised-2m2
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Print a one-line diagnosis and return the invalid-input code.
fn invalid(message: impl Display) -> u8 {
    eprintln!("error: {message}");
    INVALID
}

fn load(path: &Path) -> Result<(ProblemFile, Problem), u8> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let file = format::parse(&text).map_err(invalid)?;
    let problem = file.augmented().map_err(invalid)?;
    Ok((file, problem))
}

fn values_line(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn boundary_note(file: &ProblemFile, p: &Problem) {
    if file.boundary != Boundary::None {
        let added = p.nodes().len() - file.nodes.len();
        println!("boundary: {} ({added} side vertices added as nodes)", file.boundary);
    }
}

fn check(path: &Path, trace: bool, witness: bool, no_nc_filter: bool) -> Result<u8, u8> {
    let (file, p) = load(path)?;
    boundary_note(&file, &p);
    let verdict = decide_with(&p, DecideOptions { nc_filter: !no_nc_filter });
    if verdict.poised {
        println!("POISED");
    } else {
        println!("NOT POISED: {}", verdict.reason);
    }
    if trace {
        print!("{}", verdict.trace);
    }
    if witness {
        match &verdict.witness {
            Some(w) => println!("witness: {}", values_line(w.vertex_values())),
            None => println!("witness: none"),
        }
    }
    let fallbacks = verdict.fallback_count();
    if fallbacks > 0 {
        println!("note: {fallbacks} step(s) answered by the determinant fallback");
    }
    Ok(if verdict.poised { POISED } else { NOT_POISED })
}

fn oracle(path: &Path) -> Result<u8, u8> {
    let (file, p) = load(path)?;
    boundary_note(&file, &p);
    println!("nodes: {}", p.nodes().len());
    println!("dimension: {}", p.dimension());
    match oracle_determinant(&p) {
        Some(d) => {
            println!("determinant: {d}");
            Ok(if num_is_zero(&d) { NOT_POISED } else { POISED })
        }
        None => {
            println!("determinant: non-square");
            Ok(NOT_POISED)
        }
    }
}

fn num_is_zero(r: &Rational) -> bool {
    *r == Rational::from_integer(0.into())
}

fn fuzz(count: u64, max_n: usize, seed: u64, out: &Path, inject_mutant: bool) -> Result<u8, u8> {
    if count == 0 {
        return Err(invalid("--count must be at least 1"));
    }
    let (mut agree, mut disagree, mut fallbacks) = (0u64, 0u64, 0usize);
    for index in 0..count {
        let (pattern, n, p) = fuzz_instance(seed, index, max_n).map_err(invalid)?;
        let verdict = decide_with(&p, DecideOptions::default());
        fallbacks += verdict.fallback_count();
        let engine = verdict.poised ^ inject_mutant;
        let truth = oracle_poised(&p);
        if engine == truth {
            agree += 1;
            continue;
        }
        disagree += 1;
        let name = out.join(format!("counterexample-{seed}-{index}.txt"));
        let body = format!(
            "# fuzz seed {seed}, instance {index}, pattern {pattern}, n = {n}\n# engine: {engine}, determinant: {truth}\n{}",
            format::print(&ProblemFile::from_problem(&p, Boundary::None))
        );
        match std::fs::write(&name, body) {
            Ok(()) => println!("disagreement on instance {index}: written to {}", name.display()),
            Err(e) => println!("disagreement on instance {index}: could not write {}: {e}", name.display()),
        }
    }
    println!("checked {count} instances: {agree} agree, {disagree} disagree, {fallbacks} fallback steps");
    Ok(if disagree == 0 { POISED } else { NOT_POISED })
}

fn parse_list(text: &str, what: &str) -> Result<Vec<Rational>, u8> {
    text.split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| invalid(format!("bad {what} '{}': {e}", s.trim()))))
        .collect()
}

fn interp(path: &Path, data: Option<&str>, at: &[String], fundamental: bool) -> Result<u8, u8> {
    let (file, p) = load(path)?;
    let points = at
        .iter()
        .map(|s| match parse_list(s, "coordinate")?.as_slice() {
            [x, y] => Ok(Point::new(x.clone(), y.clone())),
            _ => Err(invalid(format!("expected x,y in --at, got '{s}'"))),
        })
        .collect::<Result<Vec<_>, u8>>()?;
    let report = |f: &strip_poise::space::PlFunction| -> Result<(), u8> {
        println!("vertex values: {}", values_line(f.vertex_values()));
        for q in &points {
            let v = f.eval(q).map_err(invalid)?;
            println!("f({}, {}) = {v}", q.x, q.y);
        }
        Ok(())
    };
    if fundamental {
        let Ok(fs) = fundamental_functions(&p) else {
            println!("NOT POISED");
            return Ok(NOT_POISED);
        };
        for (i, f) in fs.iter().enumerate().take(file.nodes.len()) {
            println!("s{}:", i + 1);
            report(f)?;
        }
        return Ok(POISED);
    }
    let mut values = parse_list(data.unwrap_or_default(), "datum")?;
    if values.len() != file.nodes.len() {
        return Err(invalid(format!("expected {} data values, got {}", file.nodes.len(), values.len())));
    }
    // constrained boundary sides carry zero data
    values.resize(p.nodes().len(), Rational::from_integer(0.into()));
    match interpolate(&p, &values) {
        Ok(f) => {
            report(&f)?;
            Ok(POISED)
        }
        Err(_) => {
            println!("NOT POISED");
            Ok(NOT_POISED)
        }
    }
}

fn gen(pattern: &str, n: usize, m: Option<usize>, seed: u64) -> Result<u8, u8> {
    let pattern = Pattern::from_name(pattern, m).map_err(invalid)?;
    let p = generate(GenSpec { seed, n, pattern }).map_err(invalid)?;
    print!("{}", format::print(&ProblemFile::from_problem(&p, Boundary::None)));
    Ok(POISED)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file, trace, witness, no_nc_filter } => check(&file, trace, witness, no_nc_filter),
        Command::Oracle { file } => oracle(&file),
        Command::Fuzz { count, max_n, seed, out, inject_mutant } => fuzz(count, max_n, seed, &out, inject_mutant),
        Command::Interp { file, data, at, fundamental } => interp(&file, data.as_deref(), &at, fundamental),
        Command::Gen { pattern, n, m, seed } => gen(&pattern, n, m, seed),
    };
    ExitCode::from(result.unwrap_or_else(|code| code))
}
