use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rdrseg::corpus::Corpus;
use rdrseg::evaluation::{benchmark, score};
use rdrseg::learner::{learn, tune_threshold, CountingMode, LearnerConfig, TrainingStats};
use rdrseg::pipeline::segment_file;
use rdrseg::synthetic::{generate, SynthConfig};
use rdrseg::{Lexicon, ScrdrTree};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "rdrseg", version, about = "Ripple-down-rules word segmenter")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Learn a correction tree from a gold corpus.
    Train(TrainArgs),
    /// Segment a raw text file.
    Segment(SegmentArgs),
    /// Score a predicted segmentation against gold.
    Eval(EvalArgs),
    /// Pick a threshold by F1 on a development set.
    Tune(TuneArgs),
    /// Measure segmentation throughput.
    Bench(BenchArgs),
    /// Generate a synthetic gold corpus and lexicon.
    Synth(SynthArgs),
}

#[derive(Args)]
struct LearnerFlags {
    /// Minimum a - b score for a rule to be attached [default: 2]
    #[arg(long)]
    threshold: Option<u32>,
    /// Count a and b over distinct tuples or over occurrences [default: types]
    #[arg(long, value_parser = parse_mode)]
    counting_mode: Option<CountingMode>,
    /// Upper bound on learned rules [default: 100000]
    #[arg(long)]
    max_rules: Option<usize>,
    /// TOML file with `threshold`, `counting_mode`, `max_rules`; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

impl LearnerFlags {
    fn resolve(&self) -> Result<LearnerConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| rdrseg::Error::Io { path: path.clone(), source: e })?;
                toml::from_str::<LearnerConfig>(&text)
                    .map_err(|e| rdrseg::Error::Config(format!("{}: {e}", path.display())))?
            }
            None => LearnerConfig::default(),
        };
        if let Some(t) = self.threshold {
            cfg.threshold = t;
        }
        if let Some(m) = self.counting_mode {
            cfg.counting_mode = m;
        }
        if let Some(m) = self.max_rules {
            cfg.max_rules = m;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn parse_mode(s: &str) -> Result<CountingMode, String> {
    s.parse().map_err(|e: rdrseg::Error| e.to_string())
}

#[derive(Args)]
struct TrainArgs {
    #[arg(long)]
    gold: PathBuf,
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(long)]
    model: PathBuf,
    #[command(flatten)]
    learner: LearnerFlags,
    /// Also write the training report as JSON to this path
    #[arg(long)]
    stats: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SegmentArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    gold: PathBuf,
    #[arg(long)]
    pred: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TuneArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    dev: PathBuf,
    #[arg(long)]
    lexicon: PathBuf,
    /// Comma-separated candidate thresholds
    #[arg(long, value_delimiter = ',', required = true)]
    thresholds: Vec<u32>,
    #[command(flatten)]
    learner: LearnerFlags,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(long)]
    model: PathBuf,
    #[arg(long, default_value_t = 100)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, default_value_t = 13)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    vocab_size: usize,
    #[arg(long, default_value_t = 200)]
    lexicon_size: usize,
    #[arg(long, default_value_t = 0.3)]
    overlap_rate: f64,
    #[arg(long, default_value_t = 5000)]
    sentences: usize,
    /// Mean words per sentence
    #[arg(long, default_value_t = 10.0)]
    mean_len: f64,
    /// Extra sentences split off after the first --sentences into --test-out
    #[arg(long, default_value_t = 0)]
    test_sentences: usize,
    #[arg(long)]
    gold_out: PathBuf,
    #[arg(long)]
    lexicon_out: PathBuf,
    #[arg(long, requires = "test_sentences")]
    test_out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn pct(n: u64, d: u64) -> f64 {
    if d == 0 {
        0.0
    } else {
        100.0 * n as f64 / d as f64
    }
}

#[derive(Serialize)]
struct TrainReport<'a> {
    #[serde(flatten)]
    stats: &'a TrainingStats,
    model: &'a Path,
    elapsed_secs: f64,
}

fn train(args: &TrainArgs) -> Result<()> {
    let cfg = args.learner.resolve()?;
    let gold = Corpus::read_gold(&args.gold)?;
    let lex = Lexicon::load(&args.lexicon)?;
    let start = Instant::now();
    let learned = learn(&gold, &lex, &cfg)?;
    let elapsed = start.elapsed().as_secs_f64();
    learned.tree.save(&args.model)?;

    let report = TrainReport {
        stats: &learned.stats,
        model: &args.model,
        elapsed_secs: elapsed,
    };
    if let Some(path) = &args.stats {
        fs::write(path, serde_json::to_string_pretty(&report)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if args.json {
        return print_json(&report);
    }
    let s = &learned.stats;
    println!("sentences         {}", s.sentences);
    println!("dictionary        {} tuples", s.dictionary_size);
    println!("threshold         {} ({})", s.threshold, s.counting_mode);
    println!("rules learned     {}", s.rules_learned);
    println!(
        "training error    {} -> {} of {} syllables ({:.2}% -> {:.2}%)",
        s.initial_error,
        s.final_error,
        s.positions,
        pct(s.initial_error, s.positions),
        pct(s.final_error, s.positions)
    );
    if s.max_rules_hit {
        println!("warning: stopped at the max-rules cap of {}", cfg.max_rules);
    }
    println!("elapsed           {elapsed:.2} s");
    println!("model             {}", args.model.display());
    Ok(())
}

fn segment(args: &SegmentArgs) -> Result<()> {
    let lex = Lexicon::load(&args.lexicon)?;
    let tree = ScrdrTree::load(&args.model)?;
    let stats = segment_file(&args.input, &args.output, &lex, &tree, args.jobs)?;
    if args.json {
        return print_json(&stats);
    }
    println!(
        "segmented {} sentences, {} syllables into {} words in {:.3} s ({:.0} words/s, {:.0} syllables/s)",
        stats.sentences,
        stats.syllables,
        stats.words,
        stats.elapsed_secs,
        stats.words_per_sec,
        stats.syllables_per_sec
    );
    Ok(())
}

fn eval(args: &EvalArgs) -> Result<()> {
    let gold = Corpus::read_gold(&args.gold)?;
    let pred = Corpus::read_gold(&args.pred)?;
    let report = score(&gold, &pred)?;
    if args.json {
        return print_json(&report);
    }
    println!("{report}");
    Ok(())
}

fn tune(args: &TuneArgs) -> Result<()> {
    let base = args.learner.resolve()?;
    for &t in &args.thresholds {
        LearnerConfig { threshold: t, ..base }.validate()?;
    }
    let train = Corpus::read_gold(&args.train)?;
    let dev = Corpus::read_gold(&args.dev)?;
    let lex = Lexicon::load(&args.lexicon)?;
    let report = tune_threshold(&train, &dev, &lex, &args.thresholds, &base)?;
    if args.json {
        return print_json(&report);
    }
    println!("{:>9}  {:>6}  {:>9}  {:>7}  {:>7}", "threshold", "rules", "precision", "recall", "F1");
    for r in &report.results {
        println!(
            "{:>9}  {:>6}  {:>9.2}  {:>7.2}  {:>7.2}",
            r.threshold,
            r.rules,
            r.score.precision * 100.0,
            r.score.recall * 100.0,
            r.score.f1 * 100.0
        );
    }
    println!("best threshold: {}", report.best);
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<()> {
    let lex = Lexicon::load(&args.lexicon)?;
    let tree = ScrdrTree::load(&args.model)?;
    let report = benchmark(&args.input, &lex, &tree, args.reps, args.jobs)?;
    if args.json {
        return print_json(&report);
    }
    println!("{report}");
    Ok(())
}

#[derive(Serialize)]
struct SynthReport<'a> {
    config: SynthConfig,
    lexicon_words: usize,
    train_sentences: usize,
    test_sentences: usize,
    gold_out: &'a Path,
    lexicon_out: &'a Path,
    test_out: Option<&'a Path>,
}

fn synth(args: &SynthArgs) -> Result<()> {
    let cfg = SynthConfig {
        seed: args.seed,
        vocab_size: args.vocab_size,
        lexicon_size: args.lexicon_size,
        overlap_rate: args.overlap_rate,
        sentences: args.sentences + args.test_sentences,
        mean_len: args.mean_len,
    };
    let (mut gold, lex) = generate(&cfg)?;
    let test = Corpus::new(gold.sentences.split_off(args.sentences));
    gold.write_gold(&args.gold_out)?;
    lex.write(&args.lexicon_out)?;
    if let Some(path) = &args.test_out {
        test.write_gold(path)?;
    }
    let report = SynthReport {
        config: cfg,
        lexicon_words: lex.len(),
        train_sentences: gold.len(),
        test_sentences: test.len(),
        gold_out: &args.gold_out,
        lexicon_out: &args.lexicon_out,
        test_out: args.test_out.as_deref(),
    };
    if args.json {
        return print_json(&report);
    }
    println!(
        "wrote {} sentences to {}, {} words to {}",
        report.train_sentences,
        args.gold_out.display(),
        report.lexicon_words,
        args.lexicon_out.display()
    );
    if let Some(path) = &args.test_out {
        println!("wrote {} sentences to {}", report.test_sentences, path.display());
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<rdrseg::Error>() {
        Some(rdrseg::Error::Config(_)) => EXIT_USAGE,
        Some(rdrseg::Error::Invariant(_)) => EXIT_INTERNAL,
        _ => EXIT_DATA,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Train(a) => train(a),
        Command::Segment(a) => segment(a),
        Command::Eval(a) => eval(a),
        Command::Tune(a) => tune(a),
        Command::Bench(a) => bench(a),
        Command::Synth(a) => synth(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
