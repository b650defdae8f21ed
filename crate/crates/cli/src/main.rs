use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use graphmml::codes::DEFAULT_AUTOMORPHISM_LIMIT;
use graphmml::context::DEFAULT_DEPTH;
use graphmml_cli::{commands, CliError, Format, Options, TreeAction, TreeKind};

/// Information content of labelled graphs and molecules, in bits.
#[derive(Parser)]
#[command(name = "graphmml", version)]
struct Cli {
    /// Context match radius in edge hops.
    #[arg(long, global = true, env = "GRAPHMML_DEPTH", default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Worker threads for table cells and rows; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Maximum degree for a label, e.g. `C=4`; may be repeated.
    #[arg(long, global = true, value_name = "LABEL=N")]
    valence: Vec<String>,
    /// File of `Label=N` lines; `--valence` flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    valence_config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bits for each target, given the background graphs.
    Info {
        #[arg(required = true)]
        targets: Vec<PathBuf>,
        /// Background graph files.
        #[arg(long)]
        given: Vec<PathBuf>,
        /// Print the per-step log instead of totals.
        #[arg(long)]
        steps: bool,
    },
    /// Conditional table: each row graph given each column graph.
    Table {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Each graph given all earlier ones, plus the total.
    Chain {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Tree codes: encode a rendering or decode a codeword.
    Tree {
        #[arg(value_enum)]
        action: TreeAction,
        #[arg(value_enum)]
        kind: TreeKind,
        input: String,
    },
    /// Automorphism count and vertex-ordering surplus.
    Ordering {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Largest vertex count to search.
        #[arg(long, default_value_t = DEFAULT_AUTOMORPHISM_LIMIT)]
        limit: usize,
    },
    /// Dump molecules or graphs as edge lists.
    Parse {
        files: Vec<PathBuf>,
        /// Parse one SMILES string instead of, or as well as, files.
        #[arg(long)]
        smiles: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let opts = Options {
        depth: cli.depth,
        format: cli.format,
        valence: cli.valence,
        valence_config: cli.valence_config,
    };
    match cli.command {
        Command::Info {
            targets,
            given,
            steps,
        } => commands::info(&targets, &given, steps, &opts),
        Command::Table { files } => commands::table(&files, &opts),
        Command::Chain { files } => commands::chain(&files, &opts),
        Command::Tree {
            action,
            kind,
            input,
        } => commands::tree(action, kind, &input),
        Command::Ordering { files, limit } => commands::ordering(&files, limit, &opts),
        Command::Parse { files, smiles } => commands::parse(&files, smiles.as_deref(), &opts),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("graphmml: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
