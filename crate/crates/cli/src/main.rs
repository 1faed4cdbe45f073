use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coring_lab_cli::{catalog, commands, fixture, LoadError, Mode, ReportDocument};

#[derive(Parser)]
#[command(name = "coring-lab", version, about = "Exact computations with corings, comatrix corings and Galois comodules")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args)]
struct Load {
    file: PathBuf,
    /// Fail on axiom violations (default).
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    /// Report axiom violations as warnings.
    #[arg(long)]
    lenient: bool,
}

impl Load {
    fn load(&self) -> Result<fixture::Fixture, LoadError> {
        let mode = if self.lenient { Mode::Lenient } else { Mode::Strict };
        fixture::load_fixture(&self.file, mode)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Load a fixture and run every axiom check.
    Check {
        #[command(flatten)]
        load: Load,
        /// Only check the object with this name.
        #[arg(long)]
        object: Option<String>,
    },
    /// Build the Sweedler coring A ⊗_B A.
    Sweedler {
        #[command(flatten)]
        load: Load,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        subalgebra: String,
    },
    /// Build the comatrix coring of a bimodule.
    Comatrix {
        #[command(flatten)]
        load: Load,
        #[arg(long)]
        sigma: String,
    },
    /// Canonical map of a bicomodule.
    Can {
        #[command(flatten)]
        load: Load,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        coring: Option<String>,
    },
    /// Decide whether can is an isomorphism.
    Galois {
        #[command(flatten)]
        load: Load,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        coring: Option<String>,
    },
    /// Cotensor product X □ Σ† and the adjunction counit at X.
    Cotensor {
        #[command(flatten)]
        load: Load,
        #[arg(long)]
        comodule: String,
        #[arg(long)]
        sigma: String,
    },
    /// Equivalence diagnostics over the object sets in a config file.
    Report {
        #[command(flatten)]
        load: Load,
        #[arg(long)]
        config: PathBuf,
    },
    /// List the shipped fixtures or print one.
    Catalog {
        name: Option<String>,
        /// Print the report config instead of the fixture.
        #[arg(long)]
        config: bool,
        /// Write every shipped file into this directory.
        #[arg(long, conflicts_with = "name")]
        write: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<ReportDocument, LoadError> {
    match &cli.command {
        Command::Check { load, object } => commands::check(&load.load()?, object.as_deref()),
        Command::Sweedler { load, algebra, subalgebra } => commands::sweedler(&load.load()?, algebra, subalgebra),
        Command::Comatrix { load, sigma } => commands::comatrix(&load.load()?, sigma),
        Command::Can { load, sigma, coring } => commands::can(&load.load()?, sigma, coring.as_deref()),
        Command::Galois { load, sigma, coring } => commands::galois(&load.load()?, sigma, coring.as_deref()),
        Command::Cotensor { load, comodule, sigma } => commands::cotensor_cmd(&load.load()?, comodule, sigma),
        Command::Report { load, config } => {
            let f = load.load()?;
            commands::report(&f, &fixture::load_config(config)?)
        }
        Command::Catalog { .. } => unreachable!("handled before dispatch"),
    }
}

fn write_catalog(dir: &Path) -> Result<(), String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    for (name, text) in catalog::files() {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn catalog_cmd(name: Option<&str>, config: bool, write: Option<&Path>) -> ExitCode {
    if let Some(dir) = write {
        return match write_catalog(dir) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let Some(name) = name else {
        for e in catalog::all() {
            println!("{:<18} {}", e.name, e.description);
        }
        return ExitCode::SUCCESS;
    };
    let Some(entry) = catalog::entry(name) else {
        eprintln!("error: {name}: no catalog fixture with this name");
        return ExitCode::from(2);
    };
    if config {
        match entry.config {
            Some(c) => println!("{}", serde_json::to_string_pretty(&c).expect("config serializes")),
            None => {
                eprintln!("error: {name}: fixture has no report config");
                return ExitCode::from(2);
            }
        }
    } else {
        print!("{}", entry.fixture.to_canonical_json());
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Catalog { name, config, write } = &cli.command {
        return catalog_cmd(name.as_deref(), *config, write.as_deref());
    }
    match run(&cli) {
        Ok(doc) => {
            match cli.output {
                Output::Json => print!("{}", doc.to_json()),
                Output::Text => print!("{}", doc.to_text()),
            }
            ExitCode::from(doc.exit_code())
        }
        Err(e) => {
            for i in &e.issues {
                eprintln!("error: {i}");
            }
            ExitCode::from(2)
        }
    }
}
