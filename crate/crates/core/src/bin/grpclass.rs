use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use grpclass::caps::Caps;
use grpclass::classes::{hierarchy_report_with, pi_report_with, ClassId, ClassReport};
use grpclass::harness::checks::{CheckResult, Outcome, Status};
use grpclass::harness::{registry, report, run_checks, witness_search, Corpus, Manifest};
use grpclass::zoo::{self, NamedGroupId};
use grpclass::{Error, Group};

/// Conjugacy-class group predicates over permutation groups.
///
/// Caps are read from GRPCLASS_ENUMERATION, GRPCLASS_SUBGROUP_CAP,
/// GRPCLASS_SYLOW_CAP, GRPCLASS_ORBIT_KEYS and GRPCLASS_ISOMORPHISM_CAP.
#[derive(Parser)]
#[command(name = "grpclass", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership for one group (a group file or a name).
    Analyze {
        target: String,
        #[arg(long, value_enum, default_value_t = Classes::All)]
        classes: Classes,
        /// Write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Analyse a corpus and run every check.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run the consequence checks, or a selection of them.
    Theorems {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// List the registered checks and exit.
        #[arg(long)]
        list: bool,
        /// Show every instance, not only the violated and skipped ones.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Smallest corpus group in class A but not in class B.
    Witness {
        a: ClassId,
        b: ClassId,
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Build a named group and write it in group-file format.
    Construct {
        name: String,
        /// Output file, or `-` for standard output.
        #[arg(long)]
        emit: PathBuf,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    Run {
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// JSON report destination; standard output when given without a path.
        #[arg(long, num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
        #[arg(long)]
        markdown: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Classes {
    All,
    Pi,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let caps = Caps::from_env();
    match cli.command {
        Command::Analyze {
            target,
            classes,
            json,
        } => {
            let (name, group) = load_target(&target, &caps)?;
            let report = match classes {
                Classes::All => hierarchy_report_with(&group, &name, &caps),
                Classes::Pi => pi_report_with(&group, &name, &caps),
            };
            print_class_report(&report);
            if let Some(path) = json {
                let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
                text.push('\n');
                fs::write(path, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus {
            action:
                CorpusAction::Run {
                    manifest,
                    jobs,
                    json,
                    markdown,
                },
        } => {
            let corpus = load_corpus(manifest.as_deref(), &caps, jobs)?;
            let checks = run_checks(&corpus, None).expect("all ids registered");
            let to_stdout = matches!(json, Some(None));
            if to_stdout {
                print!("{}", report::to_json(&corpus, &checks));
            } else {
                print_summary(&corpus, &checks);
            }
            if let Some(Some(path)) = json {
                fs::write(path, report::to_json(&corpus, &checks))?;
            }
            if let Some(path) = markdown {
                fs::write(path, report::to_markdown(&corpus, &checks))?;
            }
            Ok(exit_for(&checks))
        }
        Command::Theorems {
            only,
            manifest,
            jobs,
            list,
            verbose,
        } => {
            if list {
                for c in registry() {
                    println!("{:30} {}", c.id, c.statement);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let corpus = load_corpus(manifest.as_deref(), &caps, jobs)?;
            let checks = run_checks(&corpus, only.as_deref()).map_err(Error::Unsupported)?;
            for r in &checks {
                println!("{:30} {:8} {}", r.id, r.status.as_str(), r.details);
                for i in &r.instances {
                    if verbose || i.outcome != Outcome::Holds {
                        println!(
                            "    {:8} {} (order {}): {}",
                            outcome_str(i.outcome),
                            i.group,
                            i.order,
                            i.note
                        );
                    }
                }
            }
            Ok(exit_for(&checks))
        }
        Command::Witness { a, b, manifest, jobs } => {
            let corpus = load_corpus(manifest.as_deref(), &caps, jobs)?;
            match witness_search(&corpus, a, b) {
                Some(g) => {
                    println!("{} (order {}) is in {a} but not in {b}", g.id, g.order());
                    if let Some(w) = g.report.witnesses.get(&b) {
                        println!(
                            "  order {}: <{}> vs <{}>",
                            w.order,
                            w.first.generators.join(", "),
                            w.second.generators.join(", ")
                        );
                    }
                }
                None => println!("none in corpus"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { name, emit } => {
            let id: NamedGroupId = name.parse()?;
            let g = zoo::construct(&id)?;
            let text = zoo::write_group_file(&g, &format!("{id}, order {}", g.order()));
            if emit.as_os_str() == "-" {
                print!("{text}");
            } else {
                fs::write(&emit, text)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// A path to an existing file is ingested; anything else is a group name.
fn load_target(target: &str, caps: &Caps) -> Result<(String, Group), Error> {
    let path = Path::new(target);
    let (name, g) = if path.is_file() {
        let stem = path
            .file_stem()
            .map_or(target.into(), |s| s.to_string_lossy().into_owned());
        (stem, zoo::ingest(path)?)
    } else {
        let id: NamedGroupId = target.parse()?;
        (id.to_string(), zoo::construct(&id)?)
    };
    Ok((name, g.with_enumeration_cap(caps.enumeration)))
}

fn load_corpus(manifest: Option<&Path>, caps: &Caps, jobs: usize) -> Result<Corpus, Error> {
    let m = match manifest {
        Some(p) => Manifest::load(p, caps)?,
        None => Manifest::default_corpus(caps),
    };
    Corpus::analyze(&m, jobs)
}

fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Violated => "VIOLATED",
        Outcome::Skipped => "skipped",
    }
}

fn exit_for(checks: &[CheckResult]) -> ExitCode {
    if checks.iter().any(|c| c.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_class_report(r: &ClassReport) {
    println!("{} (order {})", r.group, r.order);
    for c in ClassId::ALL {
        let v = &r.verdicts[&c];
        match v {
            grpclass::Verdict::Undecided(reason) => println!("  {:5} undecided: {reason}", c.as_str()),
            _ => println!("  {:5} {}", c.as_str(), v.as_str()),
        }
    }
    for (c, w) in &r.witnesses {
        let via = w
            .inferred_from
            .map(|f| format!(" (from {f})"))
            .unwrap_or_default();
        println!(
            "  witness {}{via}: order {}, <{}> vs <{}>",
            c.as_str(),
            w.order,
            w.first.generators.join(", "),
            w.second.generators.join(", ")
        );
    }
    for v in &r.violations {
        println!("  chain violation: {v}");
    }
}

fn print_summary(corpus: &Corpus, checks: &[CheckResult]) {
    for g in &corpus.groups {
        let marks: String = ClassId::ALL
            .iter()
            .map(|&c| match g.verdict(c).as_str() {
                "member" => '+',
                "non-member" => '-',
                _ => '?',
            })
            .collect();
        println!("{:16} {:>6} {marks}", g.id, g.order());
    }
    println!("classes: {}", ClassId::ALL.map(|c| c.as_str()).join(" "));
    println!();
    for r in checks {
        println!("{:30} {:8} {}", r.id, r.status.as_str(), r.details);
    }
}
