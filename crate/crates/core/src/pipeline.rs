//! Segmentation of unseen text: longest matching, then per-syllable
//! correction by the learned tree.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::make_tuples_lowered;
use crate::corpus::{parse_raw, to_raw, to_underscore, Corpus, SegTag, Syllable, TaggedSentence};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::scrdr::ScrdrTree;

/// Segment one sentence. Window tuples are always built from the
/// initializer's tags, never from already corrected ones.
pub fn segment_sentence(
    raw: &[Syllable],
    lex: &Lexicon,
    tree: &ScrdrTree,
) -> Result<TaggedSentence> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    let lowered: Vec<String> = raw.iter().map(Syllable::lower).collect();
    let init = lex.tag_lowered(&lowered);
    let mut tags: Vec<SegTag> = make_tuples_lowered(&lowered, &init)
        .iter()
        .map(|t| tree.classify(t))
        .collect();
    tags[0] = SegTag::B;
    Ok(TaggedSentence::from_parts_unchecked(raw, &tags))
}

/// Re-segment the syllables of every sentence of `corpus`.
pub fn segment_corpus(corpus: &Corpus, lex: &Lexicon, tree: &ScrdrTree) -> Result<Corpus> {
    let sentences = corpus
        .sentences
        .iter()
        .map(|s| segment_sentence(&to_raw(s), lex, tree))
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus::new(sentences))
}

/// Segment one raw line into underscore form. Blank lines stay blank.
pub fn segment_line(line: &str, lex: &Lexicon, tree: &ScrdrTree) -> Result<(String, usize, usize)> {
    let raw = parse_raw(line)?;
    if raw.is_empty() {
        return Ok((String::new(), 0, 0));
    }
    let s = segment_sentence(&raw, lex, tree)?;
    Ok((to_underscore(&s)?, raw.len(), s.word_count()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentStats {
    pub sentences: usize,
    pub syllables: usize,
    pub words: usize,
    pub elapsed_secs: f64,
    pub syllables_per_sec: f64,
    pub words_per_sec: f64,
}

impl SegmentStats {
    fn new(sentences: usize, syllables: usize, words: usize, elapsed: Duration) -> Self {
        let secs = elapsed.as_secs_f64().max(1e-9);
        SegmentStats {
            sentences,
            syllables,
            words,
            elapsed_secs: elapsed.as_secs_f64(),
            syllables_per_sec: syllables as f64 / secs,
            words_per_sec: words as f64 / secs,
        }
    }
}

/// Segment lines already in memory, returning output lines in input order.
/// `jobs > 1` fans sentences out over a worker pool.
pub fn segment_lines(
    lines: &[&str],
    lex: &Lexicon,
    tree: &ScrdrTree,
    jobs: usize,
) -> Result<(Vec<String>, SegmentStats)> {
    let start = Instant::now();
    let results: Vec<Result<(String, usize, usize)>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        pool.install(|| lines.par_iter().map(|l| segment_line(l, lex, tree)).collect())
    } else {
        lines.iter().map(|l| segment_line(l, lex, tree)).collect()
    };
    let mut out = Vec::with_capacity(lines.len());
    let (mut sentences, mut syllables, mut words) = (0, 0, 0);
    for (k, r) in results.into_iter().enumerate() {
        let (text, n_syl, n_words) = r.map_err(|e| Error::AtLine {
            line: k + 1,
            source: Box::new(e),
        })?;
        if n_syl > 0 {
            sentences += 1;
        }
        syllables += n_syl;
        words += n_words;
        out.push(text);
    }
    let stats = SegmentStats::new(sentences, syllables, words, start.elapsed());
    Ok((out, stats))
}

/// Segment a raw file (one sentence per line) into an underscore file.
pub fn segment_file(
    in_path: impl AsRef<Path>,
    out_path: impl AsRef<Path>,
    lex: &Lexicon,
    tree: &ScrdrTree,
    jobs: usize,
) -> Result<SegmentStats> {
    let (in_path, out_path) = (in_path.as_ref(), out_path.as_ref());
    let text = fs::read_to_string(in_path).map_err(|e| Error::io(in_path, e))?;
    let start = Instant::now();
    let lines: Vec<&str> = text.lines().collect();
    let (out, stats) = segment_lines(&lines, lex, tree, jobs)?;
    let file = fs::File::create(out_path).map_err(|e| Error::io(out_path, e))?;
    let mut w = BufWriter::new(file);
    for line in &out {
        writeln!(w, "{line}").map_err(|e| Error::io(out_path, e))?;
    }
    w.flush().map_err(|e| Error::io(out_path, e))?;
    Ok(SegmentStats::new(
        stats.sentences,
        stats.syllables,
        stats.words,
        start.elapsed(),
    ))
}
