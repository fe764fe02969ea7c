use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use schreier_cli::commands::{self, Output, RandomSpec};
use schreier_cli::CliError;
use schreier_core::corpus::DEFAULT_SEED;

/// Decide whether a regular multigraph is a Schreier graph and emit
/// checkable certificates.
#[derive(Parser)]
#[command(name = "schreier", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutArg {
    /// Write the primary output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a connected regular graph. Exit 0: Schreier graph,
    /// 10: not Schreier (cover labeled), 11: half-edges (cover labeled).
    Classify {
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Emit a Schreier labeling of the graph itself.
    Label {
        graph: PathBuf,
        /// Label a bipartite graph with involutions only.
        #[arg(long)]
        involutions: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check a certificate against a graph. Exit 1 on violations.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Canonical double cover of a graph.
    Cover {
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
        /// Write the covering certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Maximum matching and deficiency.
    Match {
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Decompose an even-regular graph into 2-factors.
    Factor {
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
        /// Write the induced labeling here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Orbital graph of a permutation action.
    Orbital {
        action: PathBuf,
        #[command(flatten)]
        out: OutArg,
        /// Write the orbital labeling here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Graphviz rendering, optionally with generator labels.
    Dot {
        graph: PathBuf,
        /// Labeling certificate to draw.
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rewrite a graph in canonical form.
    Canon {
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Seeded random connected regular graph.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        half_edges: usize,
        /// No loops or parallel edges.
        #[arg(long)]
        simple: bool,
        /// Bipartite, `--vertices` per side.
        #[arg(long, conflicts_with_all = ["half_edges", "simple"])]
        bipartite: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

fn write(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let result = match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    result.map_err(|source| CliError::Io {
        path: path.map_or("<stdout>".into(), |p| p.display().to_string()),
        source,
    })
}

fn run(command: Command) -> Result<i32, CliError> {
    let (output, out, cert): (Output, Option<PathBuf>, Option<PathBuf>) = match command {
        Command::Classify { graph, out } => (
            commands::classify(&commands::load_graph(&graph)?)?,
            out.out,
            None,
        ),
        Command::Label {
            graph,
            involutions,
            out,
        } => (
            commands::label(&commands::load_graph(&graph)?, involutions)?,
            out.out,
            None,
        ),
        Command::Verify { graph, certificate } => {
            let g = commands::load_graph(&graph)?;
            let c = commands::load_certificate(&certificate)?;
            (commands::verify(&g, &c), None, None)
        }
        Command::Cover { graph, out, cert } => (
            commands::cover(&commands::load_graph(&graph)?)?,
            out.out,
            cert,
        ),
        Command::Match { graph, out } => (
            commands::matching(&commands::load_graph(&graph)?)?,
            out.out,
            None,
        ),
        Command::Factor { graph, out, cert } => (
            commands::factor(&commands::load_graph(&graph)?)?,
            out.out,
            cert,
        ),
        Command::Orbital { action, out, cert } => (
            commands::orbital(&commands::load_action(&action)?)?,
            out.out,
            cert,
        ),
        Command::Dot {
            graph,
            labeling,
            out,
        } => {
            let g = commands::load_graph(&graph)?;
            let l = labeling
                .as_deref()
                .map(commands::load_certificate)
                .transpose()?;
            (commands::dot(&g, l.as_ref())?, out.out, None)
        }
        Command::Canon { graph, out } => (
            commands::canon(&commands::load_graph(&graph)?),
            out.out,
            None,
        ),
        Command::Random {
            vertices,
            degree,
            half_edges,
            simple,
            bipartite,
            seed,
            out,
        } => {
            let spec = RandomSpec {
                vertices,
                degree,
                half_edges,
                simple,
                bipartite,
                seed,
            };
            (commands::random(spec)?, out.out, None)
        }
    };
    for note in &output.notes {
        eprintln!("{note}");
    }
    write(out.as_deref(), &output.text)?;
    if let (Some(path), Some(text)) = (cert, &output.certificate) {
        write(Some(&path), text)?;
    }
    Ok(output.code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli.command).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
