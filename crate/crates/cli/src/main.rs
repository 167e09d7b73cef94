//! Batch driver: every command reads at most one ideal document (a file
//! argument or standard input) and prints its result, so commands compose
//! through shell pipes.

mod commands;
mod error;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "syzlab", version, about = "Resolutions, local cohomology and audits of projective varieties over F_p")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Characteristic for constructed rings; input files carry their own.
    #[arg(long, global = true, default_value_t = syzlab::ring::DEFAULT_PRIME)]
    pub prime: u32,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Degree window `lo:hi` for local cohomology.
    #[arg(long, global = true, value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Option<(i64, i64)>,
    /// Directory receiving a copy of every output file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: i64 = a.trim().parse().map_err(|_| format!("bad lower end `{a}`"))?;
    let hi: i64 = b.trim().parse().map_err(|_| format!("bad upper end `{b}`"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Input document; standard input when omitted or `-`.
#[derive(Args, Debug, Clone)]
pub struct Input {
    pub input: Option<PathBuf>,
    /// Ideal of the document to use instead of the first one.
    #[arg(long)]
    pub name: Option<String>,
}

/// Second operand of a binary ideal operation.
#[derive(Args, Debug, Clone)]
pub struct Operand {
    /// Document holding the second ideal.
    #[arg(long, conflicts_with = "forms")]
    pub with: Option<PathBuf>,
    /// Comma-separated generators of the second ideal.
    #[arg(long)]
    pub forms: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a ring header.
    Ring {
        /// Comma-separated variable names.
        #[arg(long, conflicts_with = "n")]
        vars: Option<String>,
        /// Number of variables, named x0, x1, ...
        #[arg(short)]
        n: Option<usize>,
    },
    /// Read an ideal and write it back, optionally normalized.
    Ideal {
        #[command(flatten)]
        input: Input,
        /// Write the reduced Groebner basis.
        #[arg(long, conflicts_with = "minimal")]
        gb: bool,
        /// Write a minimal generating set.
        #[arg(long)]
        minimal: bool,
    },
    /// Rational normal surface scroll S(a1,a2).
    Scroll {
        /// `a1,a2` with 1 <= a1 <= a2.
        spec: String,
    },
    /// Rational normal curve of degree d in P^d.
    Rnc {
        #[arg(short)]
        d: usize,
    },
    /// Curve of degree d in P^r of maximal regularity with its extremal secant line.
    MaxregCurve {
        #[arg(short)]
        r: usize,
        #[arg(short)]
        d: usize,
    },
    /// Project from a coordinate center, after an optional shear.
    Project {
        #[command(flatten)]
        input: Input,
        /// Comma-separated coordinates to eliminate.
        #[arg(long)]
        drop: String,
        /// `a:b` applies x_a -> x_a + x_b first.
        #[arg(long)]
        shear: Option<String>,
    },
    /// Linear change of coordinates, e.g. `x0=x0+x9,x1=x1-x2`.
    Subst {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        map: String,
    },
    /// Saturated hyperplane section, by a given or a seeded random linear form.
    Section {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        form: Option<String>,
    },
    /// Union of a curve with a line (the document's `line` ideal by default).
    UnionLine {
        #[command(flatten)]
        input: Input,
        /// Comma-separated linear forms cutting out the line.
        #[arg(long)]
        line: Option<String>,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        operand: Operand,
    },
    /// Ideal quotient I : J.
    Colon {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        operand: Operand,
    },
    /// Saturation by J, or by the irrelevant ideal without an operand.
    Saturate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        operand: Operand,
    },
    /// Eliminate variables.
    Eliminate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vars: String,
    },
    /// Betti diagram of S/I.
    Betti {
        #[command(flatten)]
        input: Input,
        /// Write `beta i j v` lines instead of the diagram.
        #[arg(long)]
        kv: bool,
    },
    /// Hilbert series, polynomial and function.
    Hilbert {
        #[command(flatten)]
        input: Input,
        /// Last degree of the Hilbert function to print.
        #[arg(long, default_value_t = 10)]
        upto: i64,
    },
    /// Dimensions h^i(n) of the local cohomology of S/I.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        kv: bool,
    },
    /// Degree, regularity, depth and the invariants read off local cohomology.
    Invariants {
        #[command(flatten)]
        input: Input,
    },
    /// Upper bound on the sectional regularity from seeded sections.
    Sreg {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Length of the intersection with a line (the document's `line` ideal by default).
    SecantLength {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        line: Option<String>,
    },
    /// Linear general position of split hyperplane sections of (C u L).
    Lgp {
        /// A document written by maxreg-curve.
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        hyperplanes: usize,
        #[arg(long, default_value_t = 1000)]
        retries: usize,
    },
    /// Compare a curve's Betti table with the predicted shape.
    Thm32Check {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate one inequality audit on a surface.
    Audit {
        /// lemma45, cor46, prop43 or thm510.
        claim: String,
        #[command(flatten)]
        input: Input,
        /// Hyperplane section used for reg C; a seeded one otherwise.
        #[arg(long)]
        section_form: Option<String>,
        #[arg(long, default_value_t = 2)]
        trials: usize,
    },
    /// Match a surface's cohomology against the case table.
    Classify63 {
        #[command(flatten)]
        input: Input,
        /// Fail unless this case tag matches.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Rerun worked examples against their printed data.
    Reproduce {
        /// Comma-separated ids (7.1, 7.2, 7.3A, 7.3B, 7.4A, ..., 7.4E) or `all`.
        ids: String,
        /// Print every comparison, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.global, cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

