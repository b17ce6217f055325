use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use folia_cli::fixtures::{corpus, ON_DISK};
use folia_cli::{parse_scenario, render, run_pipeline, serialize_scenario, InvariantReport, ScenarioDocument};

#[derive(Parser, Debug)]
#[command(
    name = "folia",
    version,
    about = "Exact invariants of foliated surfaces from scenario files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a scenario without computing invariants
    Check { file: PathBuf },
    /// Full invariant report
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chern numbers, bounds and the integrability verdict
    Decide { file: PathBuf },
    /// Zariski decomposition of K_F
    Zariski { file: PathBuf },
    /// Local and modular invariants of the fibration block
    Fibration { file: PathBuf },
    /// The bundled fixture corpus
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand, Debug)]
enum FixtureAction {
    /// Run every bundled fixture and compare with its expectations
    Run {
        #[arg(long)]
        filter: Option<String>,
    },
    /// List fixture names
    List,
    /// Write the on-disk representatives into a directory
    Write { dir: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

/// `path`, or `path.json` when only that exists.
fn resolve(path: &Path) -> PathBuf {
    if !path.exists() && path.extension().is_none() {
        let with = path.with_extension("json");
        if with.exists() {
            return with;
        }
    }
    path.to_path_buf()
}

fn load(path: &Path) -> anyhow::Result<ScenarioDocument> {
    let path = resolve(path);
    let bytes = std::fs::read(&path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_scenario(&bytes).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn show(r: &InvariantReport, sections: &[fn(&InvariantReport, &mut String)]) -> ExitCode {
    let mut out = String::new();
    render::header(r, &mut out);
    for s in sections {
        s(r, &mut out);
    }
    print!("{out}");
    status(r.passed)
}

/// Reports for the whole corpus, computed on all cores, in corpus order.
fn run_all(docs: &[ScenarioDocument]) -> Vec<InvariantReport> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = docs.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = docs
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(run_pipeline).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("pipeline panicked"))
            .collect()
    })
}

fn fixtures(action: FixtureAction) -> anyhow::Result<ExitCode> {
    match action {
        FixtureAction::List => {
            for d in corpus() {
                println!("{}", d.name);
            }
            Ok(ExitCode::SUCCESS)
        }
        FixtureAction::Write { dir } => {
            std::fs::create_dir_all(&dir)?;
            for d in corpus().into_iter().filter(|d| ON_DISK.contains(&d.name.as_str())) {
                let path = dir.join(format!("{}.json", d.name));
                std::fs::write(&path, serialize_scenario(&d))?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        FixtureAction::Run { filter } => {
            let docs: Vec<_> = corpus()
                .into_iter()
                .filter(|d| filter.as_deref().is_none_or(|f| d.name.contains(f)))
                .collect();
            if docs.is_empty() {
                return Err(anyhow!("no fixture matches the filter"));
            }
            let reports = run_all(&docs);
            let mut failed = 0;
            for r in &reports {
                if r.passed {
                    println!("ok    {}", r.name);
                } else {
                    failed += 1;
                    println!("FAIL  {}", r.name);
                    for e in &r.errors {
                        println!("      error: {e}");
                    }
                    for c in r.checks.iter().filter(|c| !c.passed) {
                        println!("      {}: {}", c.name, c.detail);
                    }
                    for e in r.expectations.iter().filter(|e| !e.passed) {
                        println!("      {}: expected {}, got {}", e.key, e.expected, e.actual);
                    }
                }
            }
            println!(
                "{} fixtures, {} passed, {failed} failed",
                reports.len(),
                reports.len() - failed
            );
            Ok(status(failed == 0))
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    Ok(match cli.command {
        Command::Check { file } => {
            let r = run_pipeline(&load(&file)?);
            let ok = r.checks.iter().all(|c| c.passed) && r.errors.is_empty();
            let mut out = String::new();
            render::checks(&r, &mut out);
            print!("{out}");
            status(ok)
        }
        Command::Invariants { file, format } => {
            let r = run_pipeline(&load(&file)?);
            match format {
                Format::Text => print!("{}", render::text(&r)),
                Format::Json => print!("{}", render::json(&r)),
            }
            status(r.passed)
        }
        Command::Decide { file } => show(&run_pipeline(&load(&file)?), &[render::verdict]),
        Command::Zariski { file } => show(&run_pipeline(&load(&file)?), &[render::zariski]),
        Command::Fibration { file } => {
            let doc = load(&file)?;
            if doc.fibration.is_none() {
                eprintln!("{}: no fibration block", doc.name);
                return Ok(ExitCode::from(1));
            }
            show(&run_pipeline(&doc), &[render::fibration])
        }
        Command::Fixtures { action } => fixtures(action)?,
    })
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
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
