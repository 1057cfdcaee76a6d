use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use ggvol_core::enumeration::CatalogKind;
use ggvol_core::interface::run::{run, Command, Format, RunConfig, Source};
use ggvol_core::volumes::VolumeMode;
use ggvol_core::{Caps, Error};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Complexity,
    Reduce,
    Subgroups,
    Induce,
    Volume,
    Verify,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Plain,
    Weighted,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Catalog {
    Normal,
    Cyclic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Doc,
}

/// Complexity, induced splittings and volume estimates for graphs of groups.
#[derive(Debug, Parser)]
#[command(name = "ggvol", version)]
struct Cli {
    command: Cmd,
    /// Input document (TOML).
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    input: Option<PathBuf>,
    /// Built-in example: free_product_finite_cyclics, wedge or surface_amalgam.
    #[arg(long)]
    builtin: Option<String>,
    /// Parameters of the built-in example.
    #[arg(long, value_delimiter = ',', num_args = 1.., requires = "builtin")]
    params: Vec<u32>,
    #[arg(long, default_value_t = 12)]
    max_index: u64,
    /// φ table: zero, vfin or euler.
    #[arg(long, default_value = "vfin")]
    phi: String,
    #[arg(long, value_enum, default_value_t = Mode::Plain)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Catalog::Normal)]
    catalog: Catalog,
    /// For cyclic catalogs: the only generator sent to the cycle.
    #[arg(long)]
    generator: Option<usize>,
    /// Catalog id of the quotient for `induce`.
    #[arg(long)]
    quotient: Option<String>,
    #[arg(long)]
    closure_cap: Option<usize>,
    #[arg(long)]
    candidate_cap: Option<u64>,
    #[arg(long)]
    product_cap: Option<usize>,
    #[arg(long)]
    search_cap: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutFormat::Doc)]
    format: OutFormat,
}

impl Cli {
    fn config(self) -> RunConfig {
        let source = match (self.input, self.builtin) {
            (Some(path), _) => Source::File(path),
            (None, Some(name)) => Source::Builtin { name, params: self.params },
            (None, None) => unreachable!("clap requires one source"),
        };
        let command = match self.command {
            Cmd::Complexity => Command::Complexity,
            Cmd::Reduce => Command::Reduce,
            Cmd::Subgroups => Command::Subgroups,
            Cmd::Induce => Command::Induce,
            Cmd::Volume => Command::Volume,
            Cmd::Verify => Command::Verify,
        };
        let defaults = Caps::default();
        let mut c = RunConfig::new(command, source);
        c.max_index = self.max_index;
        c.phi = self.phi;
        c.mode = match self.mode {
            Mode::Plain => VolumeMode::Plain,
            Mode::Weighted => VolumeMode::Weighted,
        };
        c.catalog = match self.catalog {
            Catalog::Normal => CatalogKind::Normal,
            Catalog::Cyclic => CatalogKind::Cyclic,
        };
        c.generator = self.generator;
        c.quotient = self.quotient;
        c.caps = Caps {
            closure: self.closure_cap.unwrap_or(defaults.closure),
            candidates: self.candidate_cap.unwrap_or(defaults.candidates),
            product: self.product_cap.unwrap_or(defaults.product),
            search_nodes: self.search_cap.unwrap_or(defaults.search_nodes),
        };
        c.out = self.out;
        c.format = match self.format {
            OutFormat::Csv => Format::Csv,
            OutFormat::Doc => Format::Doc,
        };
        c
    }
}

fn main() -> ExitCode {
    let config = Cli::parse().config();
    let outcome = run(&config).and_then(|o| {
        match &config.out {
            Some(path) => std::fs::write(path, &o.text).map_err(Error::from)?,
            None => print!("{}", o.text),
        }
        Ok(o)
    });
    match outcome {
        Ok(o) if o.success => ExitCode::SUCCESS,
        Ok(_) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
