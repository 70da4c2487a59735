use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dualfol::corpus::{load_corpus, verify_corpus};
use dualfol::dual::{dual, dualize_formula, dualize_proof, parse_dualmap, DualityMap};
use dualfol::kernel::{check_proof_in, parse_proof_in, print_proof, Verdict};
use dualfol::model::{
    build_dual_model, check_complement_structure, enumerate_models, evaluate, evaluate_dual, parse_model,
};
use dualfol::sexp::{self, write_string};
use dualfol::suite::{run_suites, SuiteConfig};
use dualfol::{Formula, Language};

#[derive(Parser)]
#[command(name = "dualfol", version, about = "Formulas, Hilbert proofs and finite models for membership and its dual")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print elapsed times (output is then no longer reproducible byte for byte).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Sexp,
}

#[derive(Subcommand)]
enum Command {
    /// Parse formulas and print them in canonical form.
    Parse { file: PathBuf },
    /// Swap relations and symbols of every formula in FILE.
    Dualize {
        file: PathBuf,
        /// Duality map file; defaults to the built-in corpus map.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Also swap the sorts of bound variables.
        #[arg(long)]
        sorted: bool,
    },
    /// Check a proof file.
    CheckProof { file: PathBuf },
    /// Dualize every formula of a proof and check the result.
    TransportProof {
        file: PathBuf,
        #[arg(long)]
        map: Option<PathBuf>,
        /// Write the transported proof here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all complement-structures up to a size.
    GenModels {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        max_size: u8,
        /// Write one file per model into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a closed formula on a model with its dual on the dual model.
    CheckDuality {
        model: PathBuf,
        formula: PathBuf,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Bundled classic/dual axiom pairs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Property suites.
    Suite {
        #[command(subcommand)]
        action: SuiteAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Check that every dual sentence maps onto its classic counterpart.
    Verify,
}

#[derive(Subcommand)]
enum SuiteAction {
    /// Run every property suite.
    Run {
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
}

/// A failure reported with exit code 2 (bad input) or 1 (negative result).
enum Failure {
    Usage(String),
    Negative(String),
}

type Outcome = Result<bool, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_formulas(lang: &Language, path: &Path) -> Result<Vec<Formula>, Failure> {
    let text = read(path)?;
    let items = sexp::read_all(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    items
        .iter()
        .map(|e| lang.formula_from_sexp(e))
        .collect::<Result<_, _>>()
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_map(lang: &Language, path: &Option<PathBuf>) -> Result<DualityMap, Failure> {
    match path {
        None => Ok(DualityMap::corpus()),
        Some(p) => parse_dualmap(&read(p)?, lang).map_err(|e| usage(format!("{}: {e}", p.display()))),
    }
}

fn verdict_text(v: &Verdict, format: Format) -> String {
    match (format, v) {
        (Format::Text, v) => v.to_string(),
        (Format::Sexp, Verdict::Accepted) => "(verdict accepted)".into(),
        (Format::Sexp, Verdict::Rejected { step, reason }) => {
            let mut s = format!("(verdict rejected (step {step}) (reason ");
            write_string(&mut s, reason).unwrap();
            s.push_str("))");
            s
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let lang = Language::default();
    let started = Instant::now();
    let ok = match &cli.command {
        Command::Parse { file } => {
            for f in read_formulas(&lang, file)? {
                println!("{f}");
            }
            true
        }
        Command::Dualize { file, map, sorted } => {
            let d = load_map(&lang, map)?;
            for f in read_formulas(&lang, file)? {
                let g = if *sorted { dual(&f, &d) } else { dualize_formula(&f, &d) };
                println!("{g}");
            }
            true
        }
        Command::CheckProof { file } => {
            let proof = parse_proof_in(&lang, &read(file)?).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let v = check_proof_in(&lang, &proof);
            println!("{}", verdict_text(&v, cli.format));
            v.is_accepted()
        }
        Command::TransportProof { file, map, out } => {
            let d = load_map(&lang, map)?;
            let proof = parse_proof_in(&lang, &read(file)?).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let before = check_proof_in(&lang, &proof);
            let moved = dualize_proof(&proof, &d);
            let after = check_proof_in(&lang, &moved);
            let text = print_proof(&moved);
            match out {
                Some(path) => fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            match cli.format {
                Format::Text => eprintln!("source: {before}\ntransported: {after}"),
                Format::Sexp => eprintln!(
                    "(transport (source {}) (transported {}))",
                    verdict_text(&before, Format::Sexp),
                    verdict_text(&after, Format::Sexp)
                ),
            }
            if before.is_accepted() && !after.is_accepted() {
                return Err(Failure::Negative(format!("transported proof is {after}")));
            }
            before.is_accepted()
        }
        Command::GenModels { max_size, out } => {
            if let Some(dir) = out {
                fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            }
            let mut count = 0;
            for m in enumerate_models(*max_size as usize) {
                count += 1;
                match out {
                    Some(dir) => {
                        let path = dir.join(format!("model-{count:05}.sexp"));
                        fs::write(&path, format!("{m}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    }
                    None => println!("{m}"),
                }
            }
            match cli.format {
                Format::Text => println!("count {count}"),
                Format::Sexp => println!("(count {count})"),
            }
            true
        }
        Command::CheckDuality { model, formula, map } => {
            let d = load_map(&lang, map)?;
            let m = parse_model(&read(model)?).map_err(|e| usage(format!("{}: {e}", model.display())))?;
            let structure = check_complement_structure(&m);
            if !structure.is_accepted() {
                return Err(Failure::Negative(format!("{}: not a complement-structure: {structure}", model.display())));
            }
            let dm = build_dual_model(&m);
            let empty = Default::default();
            let mut all = true;
            for f in read_formulas(&lang, formula)? {
                let g = dual(&f, &d);
                let classic = evaluate(&m, &f, &empty).map_err(usage)?;
                let dualized = evaluate_dual(&dm, &g, &empty).map_err(usage)?;
                all &= classic == dualized;
                match cli.format {
                    Format::Text => println!(
                        "{f}: {classic}; dual {g}: {dualized}; {}",
                        if classic == dualized { "equivalent" } else { "NOT equivalent" }
                    ),
                    Format::Sexp => println!("(duality {f} {classic} {g} {dualized})"),
                }
            }
            all
        }
        Command::Corpus { action: CorpusAction::Verify } => {
            let c = load_corpus().map_err(usage)?;
            let report = verify_corpus(&c);
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Sexp => print!("{}", report.to_sexp()),
            }
            report.all_passed()
        }
        Command::Suite { action: SuiteAction::Run { seed } } => {
            let report = run_suites(&SuiteConfig { seed: *seed, ..SuiteConfig::default() });
            match cli.format {
                Format::Text => print!("{}", report.to_text(cli.timings)),
                Format::Sexp => print!("{}", report.to_sexp(cli.timings)),
            }
            report.ok()
        }
    };
    if cli.timings {
        eprintln!("elapsed {:.3}s", started.elapsed().as_secs_f64());
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Negative(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
