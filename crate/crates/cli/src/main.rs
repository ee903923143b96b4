mod commands;
mod render;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use triquad_core::conformance::Scope;
use triquad_core::delpezzo::SurfaceClass;
use triquad_core::Coeff;

use commands::{CliError, Output};
use render::Format;

/// Line-bundle cohomology, Chern-class bookkeeping and the rank-2 aCM
/// classification on P1 x P1 x P1.
#[derive(Parser, Debug)]
#[command(name = "triquad", version)]
struct Cli {
    /// Output format; md on a terminal, csv otherwise.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions h0..h3 of O(d1,d2,d3).
    #[command(allow_negative_numbers = true)]
    Cohom {
        #[arg(num_args = 3, value_names = ["D1", "D2", "D3"], required = true)]
        d: Vec<Coeff>,
    },
    /// Euler characteristic of a line bundle, or of rank-2 Chern data with --c2.
    #[command(allow_negative_numbers = true)]
    Chi {
        #[arg(num_args = 3, value_names = ["A1", "A2", "A3"], required = true)]
        c1: Vec<Coeff>,
        #[arg(long, num_args = 3, value_names = ["B1", "B2", "B3"])]
        c2: Option<Vec<Coeff>>,
    },
    /// dim Ext1(O(T), O(S)).
    #[command(allow_negative_numbers = true)]
    Ext {
        /// Target T followed by subbundle S.
        #[arg(num_args = 6, value_names = ["T1", "T2", "T3", "S1", "S2", "S3"], required = true)]
        classes: Vec<Coeff>,
    },
    /// Initialized aCM line bundles.
    AcmLines {
        /// Largest coefficient searched.
        #[arg(long, default_value_t = 4)]
        bound: Coeff,
    },
    /// Regenerate a case table.
    Table {
        which: TableKind,
        /// Keep only rows with this verdict.
        #[arg(long)]
        verdict: Option<String>,
    },
    /// Theorem A membership, Theorem B verdict and split candidates.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(num_args = 3, value_names = ["A1", "A2", "A3"], required = true)]
        c1: Vec<Coeff>,
        #[arg(long, num_args = 3, value_names = ["B1", "B2", "B3"])]
        c2: Option<Vec<Coeff>>,
    },
    /// Curves on the degree-6 del Pezzo surface.
    Delpezzo {
        #[command(subcommand)]
        action: Delpezzo,
    },
    /// Compare derived results with the golden tables.
    Verify {
        /// Restrict to one scope.
        #[arg(long, value_parser = parse_scope)]
        only: Option<Scope>,
    },
}

#[derive(Subcommand, Debug)]
enum Delpezzo {
    /// Classes of given degree and arithmetic genus.
    Classes {
        degree: Coeff,
        genus: Coeff,
        /// Keep one representative per Cremona orbit.
        #[arg(long)]
        reduce: bool,
    },
    /// Image of a - b1 e1 - b2 e2 - b3 e3 in A2(F).
    #[command(allow_negative_numbers = true)]
    Push {
        a: Coeff,
        #[arg(num_args = 3, value_names = ["B1", "B2", "B3"], required = true)]
        b: Vec<Coeff>,
    },
    /// Quadratic transformation of a class.
    #[command(allow_negative_numbers = true)]
    Cremona {
        a: Coeff,
        #[arg(num_args = 3, value_names = ["B1", "B2", "B3"], required = true)]
        b: Vec<Coeff>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Divisorial,
    Intermediate,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse()
}

fn triple(v: &[Coeff]) -> [Coeff; 3] {
    [v[0], v[1], v[2]]
}

fn dispatch(command: &Command) -> Result<Output, CliError> {
    Ok(match command {
        Command::Cohom { d } => commands::cohom(triple(d)),
        Command::Chi { c1, c2 } => commands::chi(triple(c1), c2.as_deref().map(triple))?,
        Command::Ext { classes } => commands::ext(triple(classes), triple(&classes[3..])),
        Command::AcmLines { bound } => commands::acm_lines(*bound),
        Command::Table { which: TableKind::Divisorial, verdict } => commands::divisorial(verdict.as_deref())?,
        Command::Table { which: TableKind::Intermediate, verdict } => commands::intermediate(verdict.as_deref())?,
        Command::Classify { c1, c2 } => commands::classify(triple(c1), c2.as_deref().map(triple))?,
        Command::Delpezzo { action } => match action {
            Delpezzo::Classes { degree, genus, reduce } => commands::delpezzo_classes(*degree, *genus, *reduce)?,
            Delpezzo::Push { a, b } => commands::delpezzo_single(SurfaceClass::new(*a, triple(b)), false)?,
            Delpezzo::Cremona { a, b } => commands::delpezzo_single(SurfaceClass::new(*a, triple(b)), true)?,
        },
        Command::Verify { only } => commands::verify(*only)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or(if std::io::stdout().is_terminal() { Format::Md } else { Format::Csv });
    let output = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = output.render(format);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    match &output {
        Output::Report(r) if !r.passed() => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}
