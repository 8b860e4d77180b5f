use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stringy_core::{
    verify_spec, BuildOptions, Error, Geometry, LinearOrbifold, OrbifoldSpec, RingTable, Theory,
};

#[derive(Parser)]
#[command(
    name = "stringy",
    version,
    about = "Orbifold cohomology rings of linear quotients"
)]
struct Cli {
    /// Let the group act on a point instead of Cⁿ (Dijkgraaf-Witten ring).
    #[arg(long, global = true)]
    dw: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the group order, conjugacy classes and sector data.
    Inspect { spec: PathBuf },
    /// Print a structure-constant table.
    Ring {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = TheoryArg::Cr)]
        theory: TheoryArg,
        #[arg(long, value_enum, default_value_t = Basis::Sector)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = RingFormat::Table)]
        format: RingFormat,
    },
    /// Write the spec of the cotangent doubling.
    Cotangent {
        spec: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check; exit status 0 iff all pass.
    Verify {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Cr,
    Virt,
}

impl From<TheoryArg> for Theory {
    fn from(t: TheoryArg) -> Self {
        match t {
            TheoryArg::Cr => Theory::ChenRuan,
            TheoryArg::Virt => Theory::Virtual,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Sector,
    Class,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

enum Failure {
    Verification,
    Engine(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let options = if cli.dw {
        BuildOptions::point()
    } else {
        BuildOptions::default()
    };
    match run(cli.command, options) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Engine(e)) => {
            eprintln!("stringy: {e}");
            ExitCode::from(match e {
                Error::Input(_) => 2,
                Error::Resource(_) => 3,
                Error::Consistency(_) => 1,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("stringy: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, options: BuildOptions) -> Result<(), Failure> {
    match command {
        Command::Inspect { spec } => {
            let m = LinearOrbifold::from_spec(&OrbifoldSpec::from_path(&spec)?, options)?;
            print!("{}", inspect(&m));
        }
        Command::Ring {
            spec,
            theory,
            basis,
            format,
        } => {
            let m = LinearOrbifold::from_spec(&OrbifoldSpec::from_path(&spec)?, options)?;
            let table = ring_table(&m, theory.into(), basis)?;
            match format {
                RingFormat::Table => print!("{}", table.to_text()),
                RingFormat::Json => println!("{}", table.to_json()),
            }
        }
        Command::Cotangent { spec, out } => {
            let doubled = OrbifoldSpec::from_path(&spec)?.cotangent_double();
            let json = doubled.to_json_pretty() + "\n";
            match out {
                Some(path) => write_file(&path, &json)?,
                None => print!("{json}"),
            }
        }
        Command::Verify { spec, format } => {
            let report = verify_spec(&OrbifoldSpec::from_path(&spec)?, options)?;
            match format {
                ReportFormat::Text => println!("{report}"),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
            if !report.all_passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn ring_table(m: &LinearOrbifold, theory: Theory, basis: Basis) -> Result<RingTable, Error> {
    let algebra = m.build_algebra(theory)?;
    Ok(match basis {
        Basis::Sector => algebra.table(),
        Basis::Class => algebra.invariant_ring(m.classes())?.table(),
    })
}

fn inspect(m: &LinearOrbifold) -> String {
    let mut out = String::new();
    let classes = m.classes();
    let _ = writeln!(out, "spec: {}", m.name());
    let geometry = match m.geometry() {
        Geometry::Linear => "linear",
        Geometry::Point => "point",
    };
    let _ = writeln!(out, "geometry: {geometry}, dimension {}", m.dimension());
    let _ = writeln!(out, "|G| = {}", m.order());
    let _ = writeln!(out, "conjugacy classes: {}", classes.len());
    let _ = writeln!(
        out,
        "{:<8} {:>5} {:>6} {:>6} {:>9} {:>6} {:>6}  phases",
        "class", "size", "order", "age", "fixed_dim", "sigma", "s"
    );
    for c in 0..classes.len() {
        let d = m.sector(classes.representative(c));
        let phases: Vec<String> = d.eigen_phases.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            out,
            "{:<8} {:>5} {:>6} {:>6} {:>9} {:>6} {:>6}  [{}]",
            m.class_label(c),
            classes.classes()[c].len(),
            d.order,
            d.age.to_string(),
            d.fixed_dim,
            d.virtual_shift,
            d.cr_shift.to_string(),
            phases.join(", ")
        );
    }
    out
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}
