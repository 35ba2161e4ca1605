//! `sse` — build, query and verify desk-scale search-engine indexes.
//!
//! Exit statuses: 0 success, 1 usage error, 2 data error (unreadable or
//! corrupt files, corpus/index mismatch), 3 verification failure.

use std::fmt;
use std::fs;
use std::num::NonZeroU32;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sse_core::{
    build_index, edges_to_csv, extract_network, jaccard, pairwise_matrix, run_suite, Corpus,
    EngineError, Index, Semantics, Term, TokenizerConfig,
};

/// Session configuration with the documented defaults. The tokenizer part is
/// echoed into the index header; seed and pair budget are echoed into
/// verification reports.
#[derive(Debug, Clone, Copy)]
struct CliConfig {
    semantics: Semantics,
    lowercase: bool,
    window: NonZeroU32,
    seed: u64,
    pairs: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            semantics: Semantics::Phrase,
            lowercase: true,
            window: NonZeroU32::new(10).unwrap(),
            seed: 0,
            pairs: 1000,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Phrase,
    Bag,
}

impl From<SemanticsArg> for Semantics {
    fn from(arg: SemanticsArg) -> Semantics {
        match arg {
            SemanticsArg::Phrase => Semantics::Phrase,
            SemanticsArg::Bag => Semantics::Bag,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "sse",
    version,
    about = "Desk-scale search-engine model: positional index, hit counts, similarity, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index file from a corpus
    Index {
        /// Corpus source: a directory of .txt files or a JSONL record file
        #[arg(long)]
        input: PathBuf,
        /// Where to write the index file
        #[arg(long)]
        output: PathBuf,
        /// Term-occurrence semantics baked into the index
        #[arg(long, value_enum, default_value = "phrase")]
        semantics: SemanticsArg,
        /// Keep original case instead of folding to lowercase
        #[arg(long)]
        no_lowercase: bool,
    },
    /// Print the hit count of each term, one `term,count` line per term
    Hits {
        #[arg(long)]
        index: PathBuf,
        #[arg(required = true, value_name = "TERM")]
        terms: Vec<String>,
    },
    /// Print `nx,ny,nxy` for a term pair; with --window also the proximity count
    Doubleton {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        term_x: String,
        #[arg(long)]
        term_y: String,
        /// Proximity window in token positions (defaults to 10 when given
        /// without a value; phrase indexes only)
        #[arg(long)]
        window: Option<Option<NonZeroU32>>,
    },
    /// Print `value,nxy,nx,ny` — the Jaccard similarity with its cardinalities
    Sim {
        #[arg(long)]
        index: PathBuf,
        #[arg(value_name = "TERM_X")]
        term_x: String,
        #[arg(value_name = "TERM_Y")]
        term_y: String,
    },
    /// Write the pairwise similarity matrix; with --threshold, print the edge list
    Matrix {
        #[arg(long)]
        index: PathBuf,
        /// File with one term per line (alternative to TERM arguments)
        #[arg(long)]
        terms: Option<PathBuf>,
        #[arg(value_name = "TERM")]
        term_args: Vec<String>,
        /// Where to write the matrix CSV
        #[arg(long)]
        output: PathBuf,
        /// Print edges with similarity >= this value (in [0,1]) to stdout
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Run the verification suite against an index and its corpus
    Verify {
        #[arg(long)]
        index: PathBuf,
        /// The corpus the index was built from (directory or JSONL file)
        #[arg(long)]
        input: PathBuf,
        /// Seed for pair sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of term pairs to sample
        #[arg(long, default_value_t = 1000)]
        pairs: u64,
        /// Write the structured report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// File of extra terms (one per line) added to the sampling pool
        #[arg(long)]
        terms: Option<PathBuf>,
    },
    /// Print index statistics
    Stats {
        #[arg(long)]
        index: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Data(String),
    Verification,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
            Failure::Verification => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Data(msg) => write!(f, "{msg}"),
            Failure::Verification => write!(f, "verification failed"),
        }
    }
}

fn data_err(e: impl fmt::Display) -> Failure {
    Failure::Data(e.to_string())
}

fn load_index(path: &Path) -> Result<Index, Failure> {
    Index::load(path).map_err(|e| match e {
        EngineError::Io(io) => Failure::Data(format!("cannot read index {}: {io}", path.display())),
        other => Failure::Data(format!("cannot load index {}: {other}", path.display())),
    })
}

fn parse_query_term(raw: &str, config: &TokenizerConfig) -> Result<Term, Failure> {
    Term::parse(raw, config)
        .map_err(|_| Failure::Usage(format!("term {raw:?} has no words after normalization")))
}

fn read_terms_file(path: &Path, config: &TokenizerConfig) -> Result<Vec<Term>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Data(format!("cannot read terms file {}: {e}", path.display())))?;
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let term = Term::parse(line, config).map_err(|_| {
            Failure::Data(format!(
                "terms file {} line {}: no words after normalization",
                path.display(),
                lineno + 1
            ))
        })?;
        terms.push(term);
    }
    Ok(terms)
}

fn cmd_index(
    input: &Path,
    output: &Path,
    semantics: Semantics,
    lowercase: bool,
) -> Result<(), Failure> {
    let config = TokenizerConfig { lowercase };
    let corpus = Corpus::ingest(input, config).map_err(data_err)?;
    let index = build_index(&corpus, semantics);
    index
        .save(output)
        .map_err(|e| Failure::Data(format!("cannot write index {}: {e}", output.display())))?;
    println!("documents: {}", corpus.len());
    println!("vocabulary: {}", corpus.vocabulary().size());
    println!("universe: {}", index.universe_size());
    Ok(())
}

fn cmd_hits(index_path: &Path, raw_terms: &[String]) -> Result<(), Failure> {
    let index = load_index(index_path)?;
    for raw in raw_terms {
        let term = parse_query_term(raw, index.config())?;
        println!("{},{}", term.as_query(), index.singleton(&term).cardinality());
    }
    Ok(())
}

fn cmd_doubleton(
    index_path: &Path,
    raw_x: &str,
    raw_y: &str,
    window: Option<NonZeroU32>,
) -> Result<(), Failure> {
    let index = load_index(index_path)?;
    let tx = parse_query_term(raw_x, index.config())?;
    let ty = parse_query_term(raw_y, index.config())?;
    let nx = index.singleton(&tx).cardinality();
    let ny = index.singleton(&ty).cardinality();
    let nxy = index.doubleton(&tx, &ty).cardinality();
    match window {
        None => println!("{nx},{ny},{nxy}"),
        Some(window) => {
            let proximity = index
                .proximity(&tx, &ty, window)
                .map_err(data_err)?
                .cardinality();
            println!("{nx},{ny},{nxy},{proximity}");
        }
    }
    Ok(())
}

fn cmd_sim(index_path: &Path, raw_x: &str, raw_y: &str) -> Result<(), Failure> {
    let index = load_index(index_path)?;
    let tx = parse_query_term(raw_x, index.config())?;
    let ty = parse_query_term(raw_y, index.config())?;
    let sim = jaccard(&index, &tx, &ty);
    println!("{:.6},{},{},{}", sim.value(), sim.nxy, sim.nx, sim.ny);
    Ok(())
}

fn cmd_matrix(
    index_path: &Path,
    terms_file: Option<&Path>,
    term_args: &[String],
    output: &Path,
    threshold: Option<f64>,
) -> Result<(), Failure> {
    if let Some(threshold) = threshold {
        if !(0.0..=1.0).contains(&threshold) {
            return Err(Failure::Usage(format!(
                "threshold must be in [0,1], got {threshold}"
            )));
        }
    }
    let index = load_index(index_path)?;
    let terms = match (terms_file, term_args.is_empty()) {
        (Some(_), false) => {
            return Err(Failure::Usage(
                "pass either --terms FILE or TERM arguments, not both".to_string(),
            ))
        }
        (Some(path), true) => read_terms_file(path, index.config())?,
        (None, false) => term_args
            .iter()
            .map(|raw| parse_query_term(raw, index.config()))
            .collect::<Result<Vec<_>, _>>()?,
        (None, true) => {
            return Err(Failure::Usage(
                "no terms given: pass --terms FILE or TERM arguments".to_string(),
            ))
        }
    };
    let matrix = pairwise_matrix(&index, &terms).map_err(data_err)?;
    fs::write(output, matrix.to_csv())
        .map_err(|e| Failure::Data(format!("cannot write matrix {}: {e}", output.display())))?;
    if let Some(threshold) = threshold {
        let edges = extract_network(&index, &terms, threshold);
        print!("{}", edges_to_csv(&edges));
    }
    Ok(())
}

fn cmd_verify(
    index_path: &Path,
    input: &Path,
    config: &CliConfig,
    report_path: Option<&Path>,
    terms_file: Option<&Path>,
) -> Result<(), Failure> {
    let index = load_index(index_path)?;
    let corpus = Corpus::ingest(input, *index.config()).map_err(data_err)?;
    let extra_terms = match terms_file {
        Some(path) => read_terms_file(path, index.config())?,
        None => Vec::new(),
    };
    let report =
        run_suite(&index, &corpus, &extra_terms, config.seed, config.pairs).map_err(data_err)?;
    print!("{}", report.render_table());
    if let Some(path) = report_path {
        fs::write(path, report.to_json())
            .map_err(|e| Failure::Data(format!("cannot write report {}: {e}", path.display())))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_stats(index_path: &Path) -> Result<(), Failure> {
    let index = load_index(index_path)?;
    println!("doc_count: {}", index.universe_size());
    println!("vocabulary: {}", index.word_count());
    println!("postings: {}", index.total_postings());
    println!("semantics: {}", index.semantics());
    println!("lowercase: {}", index.config().lowercase);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Index {
            input,
            output,
            semantics,
            no_lowercase,
        } => {
            let config = CliConfig {
                semantics: semantics.into(),
                lowercase: !no_lowercase,
                ..CliConfig::default()
            };
            cmd_index(&input, &output, config.semantics, config.lowercase)
        }
        Command::Hits { index, terms } => cmd_hits(&index, &terms),
        Command::Doubleton {
            index,
            term_x,
            term_y,
            window,
        } => {
            let config = CliConfig::default();
            let window = window.map(|w| w.unwrap_or(config.window));
            cmd_doubleton(&index, &term_x, &term_y, window)
        }
        Command::Sim {
            index,
            term_x,
            term_y,
        } => cmd_sim(&index, &term_x, &term_y),
        Command::Matrix {
            index,
            terms,
            term_args,
            output,
            threshold,
        } => cmd_matrix(&index, terms.as_deref(), &term_args, &output, threshold),
        Command::Verify {
            index,
            input,
            seed,
            pairs,
            report,
            terms,
        } => {
            let config = CliConfig {
                seed,
                pairs,
                ..CliConfig::default()
            };
            cmd_verify(&index, &input, &config, report.as_deref(), terms.as_deref())
        }
        Command::Stats { index } => cmd_stats(&index),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here and must keep exit status 0.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
