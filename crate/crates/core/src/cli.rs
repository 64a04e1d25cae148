//! The `geodesy` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a radius, capacity or
//! search budget ran out, 3 an oracle or automaton disagreed with the ground
//! truth.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automata::{abelian_geodesic_dfa, delta_from_dfa, free_geodesic_dfa, validate_dfa_against_ball, Dfa};
use crate::crosscheck::{cross_check, CheckConfig, Table};
use crate::error::Error;
use crate::growth::{growth_series, DEFAULT_WORD_BUDGET};
use crate::models::{BaumslagSolitar, FreeAbelian, FreeGroup, GroupModel, RewritingModel};
use crate::oracles::{Ball, Delta, DEFAULT_BALL_CAPACITY};
use crate::presentation::{ParityClass, Presentation};
use crate::reductions::{geodesic_from_delta, EnumeratorConfig};
use crate::word::Word;

/// Which group to work in, as written on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSelector {
    Free(usize),
    Abelian(usize),
    Bs(i64),
    Rewrite(PathBuf),
}

impl FromStr for ModelSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid model {s:?}; expected free:K, abelian:K, bs:N or rewrite:PATH");
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let rank = || match arg.parse::<usize>() {
            Ok(k) if (1..=26).contains(&k) => Ok(k),
            _ => Err(bad()),
        };
        match kind {
            "free" => Ok(ModelSelector::Free(rank()?)),
            "abelian" => Ok(ModelSelector::Abelian(rank()?)),
            "bs" => match arg.parse::<i64>() {
                Ok(n) if n != 0 => Ok(ModelSelector::Bs(n)),
                _ => Err(bad()),
            },
            "rewrite" if !arg.is_empty() => Ok(ModelSelector::Rewrite(PathBuf::from(arg))),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ModelSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSelector::Free(k) => write!(f, "free:{k}"),
            ModelSelector::Abelian(k) => write!(f, "abelian:{k}"),
            ModelSelector::Bs(n) => write!(f, "bs:{n}"),
            ModelSelector::Rewrite(p) => write!(f, "rewrite:{}", p.display()),
        }
    }
}

impl ModelSelector {
    /// Naming a rewriting model on the command line counts as asserting
    /// that its rules are confluent.
    pub fn build(&self) -> Result<Arc<dyn GroupModel>, CliError> {
        Ok(match self {
            ModelSelector::Free(k) => Arc::new(FreeGroup::new(*k)?),
            ModelSelector::Abelian(k) => Arc::new(FreeAbelian::new(*k)?),
            ModelSelector::Bs(n) => Arc::new(BaumslagSolitar::new(*n)?),
            ModelSelector::Rewrite(path) => {
                let p = read_presentation(path)?;
                if p.rules().is_empty() {
                    return Err(CliError::Usage(format!(
                        "{} has no `rules:` line; a rewriting model needs rules",
                        path.display()
                    )));
                }
                Arc::new(RewritingModel::new(p, true)?)
            }
        })
    }

    /// The exact geodesic acceptor, for the groups that have one.
    pub fn dfa(&self) -> Option<Dfa> {
        match self {
            ModelSelector::Free(k) => Some(free_geodesic_dfa(*k)),
            ModelSelector::Abelian(k) => Some(abelian_geodesic_dfa(*k)),
            _ => None,
        }
    }
}

fn read_presentation(path: &PathBuf) -> Result<Presentation, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Presentation::parse(&text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Bfs,
    Dfa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Run(Error),
    /// The command ran but found disagreements.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Run(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failed(_) => 3,
            CliError::Run(e) => match e {
                Error::RadiusExceeded { .. } | Error::CapacityExceeded { .. } | Error::BudgetExhausted { .. } => 2,
                Error::NoDescentLetter { .. } | Error::InconsistentOracle(_) => 3,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Run(e) => match e {
                Error::RadiusExceeded { .. } => write!(f, "{e}; rerun with a larger --radius"),
                _ => write!(f, "{e}"),
            },
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "geodesy", version, about = "Geodesic problems in finitely generated groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct BallArgs {
    /// free:K, abelian:K, bs:N or rewrite:PATH
    #[arg(long)]
    pub model: ModelSelector,
    #[arg(long, default_value_t = 8)]
    pub radius: usize,
    /// Most elements the Cayley ball may hold
    #[arg(long, default_value_t = DEFAULT_BALL_CAPACITY, value_parser = positive)]
    pub capacity: usize,
}

#[derive(Debug, Clone, Args)]
pub struct EnumeratorArgs {
    /// Most relator conjugates per product
    #[arg(long, default_value_t = 2, value_parser = positive)]
    pub max_factors: usize,
    /// Longest conjugating word
    #[arg(long, default_value_t = 2)]
    pub max_conj: usize,
    #[arg(long, default_value_t = 100_000, value_parser = positive)]
    pub max_products: usize,
    /// Oracle calls plus products examined before giving up
    #[arg(long, default_value_t = 1_000_000, value_parser = positive)]
    pub max_steps: usize,
    /// Conjugate relators only as written, not their cyclic rotations
    #[arg(long)]
    pub no_rotations: bool,
}

impl EnumeratorArgs {
    fn config(&self) -> EnumeratorConfig {
        EnumeratorConfig {
            max_factors: self.max_factors,
            max_conjugator_length: self.max_conj,
            max_products: self.max_products,
            max_steps: self.max_steps as u64,
            rotations: !self.no_rotations,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Geodesic length of each word
    Length {
        #[command(flatten)]
        ball: BallArgs,
        /// Newline-separated words, one query per line
        #[arg(long)]
        word_file: Option<PathBuf>,
        words: Vec<String>,
    },
    /// Whether the geodesic length of WORD is at most K
    Bounded {
        #[command(flatten)]
        ball: BallArgs,
        /// Lines of `WORD K`
        #[arg(long)]
        word_file: Option<PathBuf>,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// A geodesic representative of each word
    Geodesic {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        word_file: Option<PathBuf>,
        words: Vec<String>,
    },
    /// Length change when appending LETTER to the geodesic WORD
    Delta {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long, value_enum, default_value_t = Via::Bfs)]
        via: Via,
        /// Lines of `WORD LETTER`
        #[arg(long)]
        word_file: Option<PathBuf>,
        args: Vec<String>,
    },
    /// Geodesic and spherical growth up to a length
    Growth {
        #[arg(long)]
        model: ModelSelector,
        #[arg(long, value_enum, default_value_t = Via::Bfs)]
        via: Via,
        #[arg(long)]
        max_len: usize,
        /// Also write the table as CSV to this file
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_BALL_CAPACITY, value_parser = positive)]
        capacity: usize,
        /// Most geodesic words held in one layer
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET, value_parser = positive)]
        word_budget: usize,
    },
    /// Compare a geodesic acceptor with the ball oracle on all short words
    Validate {
        /// free:K or abelian:K
        #[arg(long)]
        dfa: ModelSelector,
        /// Ball to compare against; defaults to the acceptor's own group
        #[arg(long)]
        model: Option<ModelSelector>,
        #[arg(long, default_value_t = 5)]
        radius: usize,
        /// Defaults to the radius
        #[arg(long)]
        max_len: Option<usize>,
        /// Print the transition table first
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = DEFAULT_BALL_CAPACITY, value_parser = positive)]
        capacity: usize,
    },
    /// Cross-check every reduction against the ball oracle
    ReduceCheck {
        /// Repeatable; defaults to abelian:2, free:2 and bs:2
        #[arg(long)]
        model: Vec<ModelSelector>,
        #[arg(long, default_value_t = 8)]
        radius: usize,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Random words of length max-len+1 ..= max-len+2
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Longest word sent through geodesic_from_delta
        #[arg(long, default_value_t = 4)]
        prop3_max_len: usize,
        #[arg(long)]
        no_prop3: bool,
        #[arg(long, default_value_t = DEFAULT_BALL_CAPACITY, value_parser = positive)]
        capacity: usize,
        #[command(flatten)]
        enumerator: EnumeratorArgs,
    },
    /// Geodesic from a Problem 2 oracle and an enumeration of relator conjugates
    GeodesicFromDelta {
        /// Relators are read from this file
        #[arg(long)]
        presentation: PathBuf,
        /// Problem 2 oracle source; defaults to rewrite:<presentation>
        #[arg(long)]
        model: Option<ModelSelector>,
        #[arg(long, value_enum, default_value_t = Via::Bfs)]
        via: Via,
        #[arg(long, default_value_t = 8)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_BALL_CAPACITY, value_parser = positive)]
        capacity: usize,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        enumerator: EnumeratorArgs,
    },
}

/// Settings shared by every subcommand, after defaults and validation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub model: Option<ModelSelector>,
    pub radius: usize,
    pub via: Via,
    pub capacity: usize,
    pub enumerator: EnumeratorConfig,
    pub word_budget: usize,
    pub format: OutputFormat,
}

/// Parses and validates arguments. `Ok(Err(text))` carries help or version
/// output that should be printed with exit code 0.
pub fn load_run_config<I, T>(argv: I) -> Result<Result<RunConfig, String>, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(Err(e.to_string())),
                _ => Err(CliError::Usage(e.to_string().trim_end().to_string())),
            };
        }
    };

    let mut cfg = RunConfig {
        command: cli.command.clone(),
        model: None,
        radius: 8,
        via: Via::Bfs,
        capacity: DEFAULT_BALL_CAPACITY,
        enumerator: EnumeratorConfig::default(),
        word_budget: DEFAULT_WORD_BUDGET,
        format: OutputFormat::Text,
    };
    match cli.command {
        Command::Length { ball, .. } | Command::Bounded { ball, .. } | Command::Geodesic { ball, .. } => {
            cfg.model = Some(ball.model);
            cfg.radius = ball.radius;
            cfg.capacity = ball.capacity;
        }
        Command::Delta { ball, via, .. } => {
            cfg.model = Some(ball.model);
            cfg.radius = ball.radius;
            cfg.capacity = ball.capacity;
            cfg.via = via;
        }
        Command::Growth {
            model,
            via,
            max_len,
            format,
            capacity,
            word_budget,
            ..
        } => {
            cfg.model = Some(model);
            cfg.via = via;
            cfg.radius = max_len + 1;
            cfg.format = format;
            cfg.capacity = capacity;
            cfg.word_budget = word_budget;
        }
        Command::Validate {
            dfa,
            model,
            radius,
            capacity,
            ..
        } => {
            if dfa.dfa().is_none() {
                return Err(CliError::Usage(format!(
                    "--dfa {dfa}: only free:K and abelian:K have geodesic acceptors"
                )));
            }
            cfg.model = Some(model.unwrap_or(dfa));
            cfg.radius = radius;
            cfg.capacity = capacity;
            cfg.via = Via::Dfa;
        }
        Command::ReduceCheck {
            radius,
            capacity,
            enumerator,
            ..
        } => {
            cfg.radius = radius;
            cfg.capacity = capacity;
            cfg.enumerator = enumerator.config();
        }
        Command::GeodesicFromDelta {
            model,
            via,
            radius,
            capacity,
            enumerator,
            ..
        } => {
            cfg.model = model;
            cfg.via = via;
            cfg.radius = radius;
            cfg.capacity = capacity;
            cfg.enumerator = enumerator.config();
        }
    }
    if cfg.via == Via::Dfa {
        if let Some(m) = &cfg.model {
            if m.dfa().is_none() && !matches!(cfg.command, Command::Validate { .. }) {
                return Err(CliError::Usage(format!(
                    "--via dfa needs a regular geodesic language; {m} has none here (use free:K or abelian:K)"
                )));
            }
        }
    }
    Ok(Ok(cfg))
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = match load_run_config(argv) {
        Ok(Ok(cfg)) => execute(&cfg, out),
        Ok(Err(text)) => {
            let _ = write!(out, "{text}");
            return 0;
        }
        Err(e) => Err(e),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "geodesy: {e}");
            e.exit_code()
        }
    }
}

fn parse_input_word(p: &Presentation, text: &str) -> Result<Word, CliError> {
    let text = if text == "ε" { "" } else { text };
    p.parse_word(text)
        .map_err(|e| CliError::Usage(format!("cannot parse word {text:?}: {e}")))
}

fn display_word(p: &Presentation, w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        p.format_word(w)
    }
}

/// Query lines: the positional arguments taken `arity` at a time, or each
/// non-blank, non-comment line of the word file.
fn query_lines(word_file: &Option<PathBuf>, positional: &[String], arity: usize) -> Result<Vec<Vec<String>>, CliError> {
    let lines: Vec<Vec<String>> = match word_file {
        Some(path) => {
            if !positional.is_empty() {
                return Err(CliError::Usage(
                    "give either --word-file or positional arguments, not both".into(),
                ));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| l.split_whitespace().map(String::from).collect())
                .collect()
        }
        None => positional.chunks(arity).map(<[String]>::to_vec).collect(),
    };
    for line in &lines {
        if line.len() != arity {
            return Err(CliError::Usage(format!(
                "expected {arity} argument(s) per query, got {:?}",
                line
            )));
        }
    }
    if lines.is_empty() {
        return Err(CliError::Usage("no query given".into()));
    }
    Ok(lines)
}

fn build_ball(model: Arc<dyn GroupModel>, cfg: &RunConfig) -> Result<Ball, CliError> {
    Ok(Ball::build_with_capacity(model, cfg.radius, cfg.capacity)?)
}

fn execute(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Usage(format!("write failed: {e}"));
    match &cfg.command {
        Command::Length { word_file, words, .. } | Command::Geodesic { word_file, words, .. } => {
            let model = cfg.model.as_ref().expect("model set").build()?;
            let queries = query_lines(word_file, words, 1)?;
            let p = model.presentation().clone();
            let parsed = queries
                .iter()
                .map(|q| parse_input_word(&p, &q[0]))
                .collect::<Result<Vec<_>, _>>()?;
            let ball = build_ball(model, cfg)?;
            for w in parsed {
                if matches!(cfg.command, Command::Length { .. }) {
                    writeln!(out, "{}", ball.length_of(&w)?).map_err(io)?;
                } else {
                    writeln!(out, "{}", display_word(&p, &ball.geodesic_of(&w)?)).map_err(io)?;
                }
            }
        }
        Command::Bounded { word_file, args, .. } => {
            let model = cfg.model.as_ref().expect("model set").build()?;
            let p = model.presentation().clone();
            let queries = query_lines(word_file, args, 2)?
                .iter()
                .map(|q| {
                    let w = parse_input_word(&p, &q[0])?;
                    let k = q[1]
                        .parse::<i64>()
                        .map_err(|_| CliError::Usage(format!("bound {:?} is not an integer", q[1])))?;
                    Ok((w, k))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let ball = build_ball(model, cfg)?;
            for (w, k) in queries {
                writeln!(out, "{}", ball.is_bounded(&w, k)?).map_err(io)?;
            }
        }
        Command::Delta { word_file, args, .. } => {
            let selector = cfg.model.as_ref().expect("model set");
            let model = selector.build()?;
            let p = model.presentation().clone();
            let queries = query_lines(word_file, args, 2)?
                .iter()
                .map(|q| {
                    let u = parse_input_word(&p, &q[0])?;
                    let x = parse_input_word(&p, &q[1])?;
                    if x.len() != 1 {
                        return Err(CliError::Usage(format!("{:?} is not a single letter", q[1])));
                    }
                    Ok((u, x[0]))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            match cfg.via {
                Via::Bfs => {
                    let ball = build_ball(model, cfg)?;
                    for (u, x) in queries {
                        writeln!(out, "{}", ball.delta_of(&u, x)?).map_err(io)?;
                    }
                }
                Via::Dfa => {
                    let dfa = selector.dfa().expect("validated in load_run_config");
                    // with only even relators, "not longer" means "shorter"
                    debug_assert_eq!(p.relator_parity(), ParityClass::AllRelatorsEven);
                    for (u, x) in queries {
                        let up = delta_from_dfa(&dfa, &u, x)
                            .map_err(|_| CliError::Run(Error::NotGeodesic(display_word(&p, &u))))?;
                        let d = if up { Delta::Increase } else { Delta::Decrease };
                        writeln!(out, "{d}").map_err(io)?;
                    }
                }
            }
        }
        Command::Growth { max_len, csv, .. } => {
            let selector = cfg.model.as_ref().expect("model set");
            let model = selector.build()?;
            let table = match cfg.via {
                Via::Bfs => {
                    let ball = build_ball(model.clone(), cfg)?;
                    growth_series(model.as_ref(), &ball, *max_len, cfg.word_budget)?
                }
                Via::Dfa => {
                    let dfa = selector.dfa().expect("validated in load_run_config");
                    growth_series(model.as_ref(), &dfa, *max_len, cfg.word_budget)?
                }
            };
            match cfg.format {
                OutputFormat::Text => write!(out, "{table}").map_err(io)?,
                OutputFormat::Csv => write!(out, "{}", table.to_csv()).map_err(io)?,
            }
            if let Some(path) = csv {
                fs::write(path, table.to_csv())
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Command::Validate {
            dfa, max_len, table, ..
        } => {
            let model = cfg.model.as_ref().expect("model set").build()?;
            let acceptor = dfa.dfa().expect("validated in load_run_config");
            let p = model.presentation().clone();
            if acceptor.alphabet().len() != p.alphabet().len() {
                return Err(CliError::Usage(format!(
                    "--dfa {dfa} and --model {} have different alphabets",
                    cfg.model.as_ref().unwrap()
                )));
            }
            if *table {
                write!(out, "{}", acceptor.to_table(p.names())).map_err(io)?;
            }
            let max_len = max_len.unwrap_or(cfg.radius);
            let ball = build_ball(model, cfg)?;
            let report = validate_dfa_against_ball(&acceptor, &ball, max_len)?;
            writeln!(
                out,
                "checked {} words up to length {}: {} mismatches",
                report.checked,
                report.max_len,
                report.mismatches.len()
            )
            .map_err(io)?;
            for m in &report.mismatches {
                writeln!(
                    out,
                    "{} accepted={} geodesic={}",
                    display_word(&p, &m.word),
                    m.accepted,
                    m.geodesic
                )
                .map_err(io)?;
            }
            if !report.is_clean() {
                return Err(CliError::Failed(format!(
                    "acceptor {dfa} disagrees with the ball on {} words",
                    report.mismatches.len()
                )));
            }
        }
        Command::ReduceCheck {
            model,
            max_len,
            samples,
            seed,
            prop3_max_len,
            no_prop3,
            ..
        } => {
            let selectors = if model.is_empty() {
                vec![ModelSelector::Abelian(2), ModelSelector::Free(2), ModelSelector::Bs(2)]
            } else {
                model.clone()
            };
            let check = CheckConfig {
                max_len: *max_len,
                samples: *samples,
                seed: *seed,
                prop3_max_len: (!no_prop3).then_some(*prop3_max_len),
                enumerator: cfg.enumerator,
            };
            let mut rows = Vec::new();
            for s in &selectors {
                let ball = build_ball(s.build()?, cfg)?;
                rows.extend(cross_check(&ball, &check));
            }
            write!(out, "{}", Table(&rows)).map_err(io)?;
            let failed = rows.iter().filter(|r| !r.passed()).count();
            if failed == 0 {
                writeln!(out, "all {} checks passed", rows.len()).map_err(io)?;
            } else {
                writeln!(out, "{failed} of {} checks failed", rows.len()).map_err(io)?;
                return Err(CliError::Failed(format!("{failed} checks failed")));
            }
        }
        Command::GeodesicFromDelta { presentation, word, .. } => {
            let p = read_presentation(presentation)?;
            let selector = match &cfg.model {
                Some(m) => m.clone(),
                None if !p.rules().is_empty() => ModelSelector::Rewrite(presentation.clone()),
                None => {
                    return Err(CliError::Usage(
                        "the presentation has no rules; pass --model to supply a Problem 2 oracle".into(),
                    ))
                }
            };
            let model = selector.build()?;
            if model.presentation().rank() != p.rank() {
                return Err(CliError::Usage(format!(
                    "{selector} has {} generators but the presentation has {}",
                    model.presentation().rank(),
                    p.rank()
                )));
            }
            let w = parse_input_word(&p, word)?;
            let outcome = match cfg.via {
                Via::Bfs => {
                    let ball = build_ball(model, cfg)?;
                    geodesic_from_delta(&ball, &p, &w, &cfg.enumerator)?
                }
                Via::Dfa => {
                    let dfa = selector.dfa().expect("validated in load_run_config");
                    geodesic_from_delta(&dfa, &p, &w, &cfg.enumerator)?
                }
            };
            writeln!(out, "{}", display_word(&p, &outcome.answer)).map_err(io)?;
        }
    }
    Ok(())
}
