//! Word-level precision, recall and F1, and throughput measurement.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::context::check_alignment;
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::pipeline::segment_lines;
use crate::scrdr::ScrdrTree;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub matched: u64,
    pub predicted: u64,
    pub gold: u64,
}

impl ScoreReport {
    pub fn from_counts(matched: u64, predicted: u64, gold: u64) -> ScoreReport {
        let ratio = |n: u64, d: u64| if d == 0 { 0.0 } else { n as f64 / d as f64 };
        let precision = ratio(matched, predicted);
        let recall = ratio(matched, gold);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        ScoreReport {
            precision,
            recall,
            f1,
            matched,
            predicted,
            gold,
        }
    }
}

impl fmt::Display for ScoreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Precision  {:>7.2}", self.precision * 100.0)?;
        writeln!(f, "Recall     {:>7.2}", self.recall * 100.0)?;
        writeln!(f, "F1         {:>7.2}", self.f1 * 100.0)?;
        write!(
            f,
            "Words      {} matched / {} predicted / {} gold",
            self.matched, self.predicted, self.gold
        )
    }
}

/// Compare the word spans of `pred` against `gold`, sentence by sentence.
pub fn score(gold: &Corpus, pred: &Corpus) -> Result<ScoreReport> {
    check_alignment(gold, pred)?;
    let (mut matched, mut predicted, mut total) = (0u64, 0u64, 0u64);
    for (g, p) in gold.sentences.iter().zip(&pred.sentences) {
        let gold_spans: HashSet<(usize, usize)> = g.word_spans().into_iter().collect();
        let pred_spans = p.word_spans();
        total += gold_spans.len() as u64;
        predicted += pred_spans.len() as u64;
        matched += pred_spans.iter().filter(|s| gold_spans.contains(s)).count() as u64;
    }
    Ok(ScoreReport::from_counts(matched, predicted, total))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub repetitions: usize,
    pub sentences: usize,
    pub syllables: usize,
    pub words: usize,
    pub mean_secs: f64,
    pub words_per_sec: f64,
    pub syllables_per_sec: f64,
    pub jobs: usize,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "input      {} sentences, {} syllables, {} words",
            self.sentences, self.syllables, self.words
        )?;
        writeln!(f, "reps       {} (jobs {})", self.repetitions, self.jobs)?;
        writeln!(f, "mean time  {:.4} s", self.mean_secs)?;
        writeln!(f, "words/s    {:.0}", self.words_per_sec)?;
        write!(f, "syll/s     {:.0}", self.syllables_per_sec)
    }
}

/// Segment pre-loaded lines `repetitions` times and report mean rates.
pub fn benchmark_lines(
    lines: &[&str],
    lex: &Lexicon,
    tree: &ScrdrTree,
    repetitions: usize,
    jobs: usize,
) -> Result<BenchReport> {
    if repetitions == 0 {
        return Err(Error::Config("repetitions must be at least 1".to_string()));
    }
    let mut last = None;
    let start = Instant::now();
    for _ in 0..repetitions {
        let (out, stats) = segment_lines(lines, lex, tree, jobs)?;
        std::hint::black_box(&out);
        last = Some(stats);
    }
    let total = start.elapsed().as_secs_f64().max(1e-9);
    let stats = last.expect("at least one repetition");
    let mean = total / repetitions as f64;
    Ok(BenchReport {
        repetitions,
        sentences: stats.sentences,
        syllables: stats.syllables,
        words: stats.words,
        mean_secs: mean,
        words_per_sec: stats.words as f64 / mean,
        syllables_per_sec: stats.syllables as f64 / mean,
        jobs,
    })
}

/// Read `raw_path` once, then time repeated segmentation of its lines.
/// Loading the file, lexicon and model is excluded from the timing.
pub fn benchmark(
    raw_path: impl AsRef<Path>,
    lex: &Lexicon,
    tree: &ScrdrTree,
    repetitions: usize,
    jobs: usize,
) -> Result<BenchReport> {
    let path = raw_path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let lines: Vec<&str> = text.lines().collect();
    benchmark_lines(&lines, lex, tree, repetitions, jobs)
}
