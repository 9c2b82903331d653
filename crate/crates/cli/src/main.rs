use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use murasugi_cli::batch::{parse_manifest, run_batch};
use murasugi_cli::report::{emit_stream, Report};
use murasugi_cli::{CliError, CliResult, Format, Input, Mode, Overrides, Settings};

/// Alexander and Murasugi polynomials of two-component links, and an exact
/// norm test `P ≐ a·ā` with `a(g,1) = 1` in Z[Z/p × Z].
///
/// Exit codes: 0 norm (or success), 1 not a norm, 2 inconclusive,
/// 3 parse error, 4 wrong component count, 5 invalid p, 6 augmentation
/// violation, 7 other failure.
#[derive(Debug, Parser)]
#[command(name = "murasugi", version)]
struct Cli {
    /// TOML file with flat `key = value` settings named like the long flags;
    /// flags win over the file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output format [default: text].
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Alexander polynomial Δ(x, y).
    Alex {
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Print the projection of Δ to Z[Z/p × Z] in g, t.
    Murasugi {
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        period: PeriodArg,
    },
    /// Run the obstruction battery and the witness search.
    Check {
        #[command(flatten)]
        link: LinkArgs,
        /// Group-ring element in g, t instead of a link.
        #[arg(long, conflicts_with_all = ["braid", "presentation"])]
        poly: Option<String>,
        #[command(flatten)]
        period: PeriodArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Print the canonical form of a·ā.
    Realize {
        /// The element a(g, t); a(g, 1) must equal 1.
        #[arg(long = "a", alias = "poly")]
        a: String,
        #[command(flatten)]
        period: PeriodArg,
    },
    /// Process a manifest of `mode | p | kind | text` lines.
    Batch {
        manifest: PathBuf,
        /// Default p for lines that give `-`.
        #[command(flatten)]
        period: PeriodArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Relator to drop for link inputs [default: last].
        #[arg(long)]
        drop_relator: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct LinkArgs {
    /// Braid word `n; k1 k2 ...` whose closure is the link.
    #[arg(long, conflicts_with = "presentation")]
    braid: Option<String>,
    /// Presentation file (`gens:`, `ab:`, `rel:` lines).
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Relator to drop from square presentations [default: last].
    #[arg(long)]
    drop_relator: Option<usize>,
}

#[derive(Debug, Args)]
struct PeriodArg {
    /// Order of the cyclic group, p >= 2.
    #[arg(long, allow_negative_numbers = true)]
    p: Option<i64>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Largest |coefficient| in a witness [default: 3].
    #[arg(long)]
    max_coeff: Option<u32>,
    /// Largest t-degree in a witness [default: half the t-span].
    #[arg(long)]
    max_tdeg: Option<u32>,
    /// Search nodes before giving up [default: 10000000].
    #[arg(long)]
    budget: Option<u64>,
    /// Parallel witness search (and parallel batch lines).
    #[arg(long)]
    parallel: bool,
}

impl SearchArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            max_coeff: self.max_coeff,
            max_tdeg: self.max_tdeg,
            budget: self.budget,
            parallel: self.parallel.then_some(true),
            ..Overrides::default()
        }
    }
}

impl LinkArgs {
    fn input(&self) -> Option<Input> {
        match (&self.braid, &self.presentation) {
            (Some(b), _) => Some(Input::braid(b)),
            (_, Some(p)) => Some(Input::presentation(p)),
            _ => None,
        }
    }
}

fn link_input(link: &LinkArgs) -> CliResult<Input> {
    link.input()
        .ok_or_else(|| CliError::Usage("one of --braid or --presentation is required".into()))
}

fn settings(cli: &Cli, flags: Overrides) -> CliResult<Settings> {
    let flags = Overrides {
        format: cli.format,
        ..flags
    };
    let file = match &cli.config {
        Some(path) => Overrides::from_file(path)?,
        None => Overrides::default(),
    };
    Ok(flags.over(file).resolve())
}

fn print_text(report: &Report) {
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
        return;
    }
    match report.mode {
        Mode::Alex => println!("{}", report.delta.as_deref().unwrap_or_default()),
        Mode::Murasugi => {
            println!("{}", report.murasugi.as_deref().unwrap_or_default());
            if let Some(a) = &report.augmentation {
                eprintln!("augmentation: {a}");
            }
        }
        Mode::Realize => println!("{}", report.murasugi.as_deref().unwrap_or_default()),
        Mode::Check => {
            for c in &report.battery {
                println!("{:<6} {:<5} {}", c.name, c.status, c.evidence);
            }
            println!("verdict: {}", report.verdict.as_deref().unwrap_or_default());
            for (k, v) in [
                ("cited", &report.cited),
                ("witness", &report.witness),
                ("reason", &report.reason),
                ("bounds", &report.bounds),
            ] {
                if let Some(v) = v {
                    println!("{k}: {v}");
                }
            }
        }
    }
}

fn single(mode: Mode, input: CliResult<Input>, s: &Settings) -> i32 {
    let report = match input {
        Ok(input) => murasugi_cli::pipeline::run(mode, &input, s),
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    match s.format {
        Format::Text => print_text(&report),
        Format::Report => print!("{}", report.emit()),
    }
    report.exit
}

fn batch(manifest: &Path, s: &Settings) -> CliResult<i32> {
    let text = std::fs::read_to_string(manifest).map_err(|source| CliError::Io {
        path: manifest.to_path_buf(),
        source,
    })?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let entries = parse_manifest(&text, base)?;
    let (reports, summary) = run_batch(&entries, s, s.bounds.parallel);
    match s.format {
        Format::Report => print!("{}", emit_stream(&reports, Some(&summary))),
        Format::Text => {
            for (e, r) in entries.iter().zip(&reports) {
                let outcome = r
                    .error
                    .as_deref()
                    .map(|m| format!("error: {m}"))
                    .or_else(|| r.verdict.clone())
                    .or_else(|| r.murasugi.clone())
                    .or_else(|| r.delta.clone())
                    .unwrap_or_default();
                println!(
                    "{:>4} {} {} -> {} (exit {})",
                    e.line, r.mode, r.input, outcome, r.exit
                );
            }
            print!("{}", summary.emit());
        }
    }
    Ok(0)
}

fn dispatch(cli: &Cli) -> CliResult<i32> {
    let period = |p: &PeriodArg| Overrides {
        p: p.p,
        ..Overrides::default()
    };
    Ok(match &cli.command {
        Command::Alex { link } => {
            let s = settings(
                cli,
                Overrides {
                    drop_relator: link.drop_relator,
                    ..Overrides::default()
                },
            )?;
            single(Mode::Alex, link_input(link), &s)
        }
        Command::Murasugi { link, period: p } => {
            let s = settings(
                cli,
                Overrides {
                    drop_relator: link.drop_relator,
                    ..period(p)
                },
            )?;
            single(Mode::Murasugi, link_input(link), &s)
        }
        Command::Check {
            link,
            poly,
            period: p,
            search,
        } => {
            let flags = Overrides {
                drop_relator: link.drop_relator,
                ..search.overrides()
            };
            let s = settings(cli, Overrides { p: p.p, ..flags })?;
            let input = match poly {
                Some(text) => Ok(Input::poly(text)),
                None => link_input(link),
            };
            single(Mode::Check, input, &s)
        }
        Command::Realize { a, period: p } => {
            let s = settings(cli, period(p))?;
            single(Mode::Realize, Ok(Input::poly(a)), &s)
        }
        Command::Batch {
            manifest,
            period: p,
            search,
            drop_relator,
        } => {
            let flags = Overrides {
                p: p.p,
                drop_relator: *drop_relator,
                ..search.overrides()
            };
            let s = settings(cli, flags)?;
            batch(manifest, &s)?
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                murasugi_cli::exit::PARSE
            } else {
                0
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = dispatch(&cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
