use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use panelsur_cli::{
    delta_report, emit_figure_data, load_dataset, render_delta, render_figure, render_report, rerender_json,
    run_pipeline, CliError, Emit, RunConfig, Stage,
};

#[derive(Parser)]
#[command(name = "panelsur", version, about = "Panel EGLS (period SUR) with unit-root and residual diagnostics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; overrides the config's `output`.
    #[arg(long, global = true, value_enum)]
    emit: Option<Emit>,
    /// Write here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Load the panel and summarize it.
    Ingest {
        #[arg(long)]
        config: PathBuf,
        /// Also check the model's variables and sample window against the data.
        #[arg(long)]
        validate: bool,
    },
    /// Unit-root battery for each configured variable.
    UnitRoot {
        #[arg(long)]
        config: PathBuf,
    },
    /// EGLS estimation.
    Estimate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Estimation plus residual diagnostics.
    Diagnose {
        #[arg(long)]
        config: PathBuf,
    },
    /// The whole pipeline.
    Report {
        #[arg(long)]
        config: PathBuf,
    },
    /// Scatter data for one pair of variables.
    Figure {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Per-unit change of a variable between two periods.
    Delta {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        var: String,
        #[arg(long)]
        from: i32,
        #[arg(long)]
        to: i32,
    },
    /// Re-render a JSON report.
    Render {
        #[arg(long)]
        input: PathBuf,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let load = |path: &PathBuf| RunConfig::from_path(path);
    let pick = |cfg: &RunConfig| cli.emit.unwrap_or(cfg.output);
    let stage = |config: &PathBuf, stage: Stage| -> Result<String, CliError> {
        let cfg = load(config)?;
        Ok(render_report(&run_pipeline(&cfg, stage)?, pick(&cfg)))
    };
    match &cli.command {
        Command::Ingest { config, validate } => stage(config, Stage::Ingest { validate: *validate }),
        Command::UnitRoot { config } => stage(config, Stage::UnitRoot),
        Command::Estimate { config } => stage(config, Stage::Estimate),
        Command::Diagnose { config } => stage(config, Stage::Diagnose),
        Command::Report { config } => stage(config, Stage::Full),
        Command::Figure { config, x, y } => {
            let cfg = load(config)?;
            let ds = load_dataset(&cfg)?;
            Ok(render_figure(&emit_figure_data(&ds, x, y)?, pick(&cfg)))
        }
        Command::Delta { config, var, from, to } => {
            let cfg = load(config)?;
            let ds = load_dataset(&cfg)?;
            let d = delta_report(&ds, var, *from, *to, cfg.aggregate_unit.as_deref())?;
            Ok(render_delta(&d, pick(&cfg)))
        }
        Command::Render { input } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", input.display())))?;
            rerender_json(&text, cli.emit.unwrap_or(Emit::Text))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    let result = run(cli).and_then(|text| match &out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
