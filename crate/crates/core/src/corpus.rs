//! Gold (underscore), BI-tagged and raw sentence representations.
//!
//! A gold line such as `thuế_thu_nhập cá_nhân` separates words with
//! whitespace and joins the syllables of one word with underscores. Its
//! BI form tags the first syllable of every word `B` and the rest `I`.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Segmentation tag of a syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SegTag {
    /// Begin of a word.
    B,
    /// Inside of a word.
    I,
}

impl SegTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SegTag::B => "B",
            SegTag::I => "I",
        }
    }

    pub fn parse(s: &str) -> Option<SegTag> {
        match s {
            "B" => Some(SegTag::B),
            "I" => Some(SegTag::I),
            _ => None,
        }
    }

    pub fn flip(self) -> SegTag {
        match self {
            SegTag::B => SegTag::I,
            SegTag::I => SegTag::B,
        }
    }
}

impl fmt::Display for SegTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A single written syllable, NFC-normalized, original case preserved.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable(String);

impl Syllable {
    pub fn new(surface: &str) -> Result<Syllable> {
        let normalized: String = surface.nfc().collect();
        if normalized.is_empty()
            || normalized.contains('_')
            || normalized.chars().any(char::is_whitespace)
        {
            return Err(Error::MalformedWord(surface.to_string()));
        }
        Ok(Syllable(normalized))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Lowercased form used for lexicon lookup and context tuples.
    pub fn lower(&self) -> String {
        self.0.to_lowercase()
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Syllable {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A non-empty sequence of tagged syllables whose first tag is `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedSentence {
    items: Vec<(Syllable, SegTag)>,
}

impl TaggedSentence {
    pub fn new(items: Vec<(Syllable, SegTag)>) -> Result<TaggedSentence> {
        match items.first() {
            None => Err(Error::EmptyInput),
            Some((_, SegTag::I)) => Err(Error::InvalidTagSequence(
                "sentence starts with I".to_string(),
            )),
            Some(_) => Ok(TaggedSentence { items }),
        }
    }

    /// Pairs syllables with tags. Does not check the leading tag, so
    /// callers that need the invariant must go through [`TaggedSentence::new`].
    pub(crate) fn from_parts_unchecked(syllables: &[Syllable], tags: &[SegTag]) -> TaggedSentence {
        debug_assert_eq!(syllables.len(), tags.len());
        TaggedSentence {
            items: syllables.iter().cloned().zip(tags.iter().copied()).collect(),
        }
    }

    pub fn items(&self) -> &[(Syllable, SegTag)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn tags(&self) -> impl Iterator<Item = SegTag> + '_ {
        self.items.iter().map(|(_, t)| *t)
    }

    pub fn syllables(&self) -> impl Iterator<Item = &Syllable> + '_ {
        self.items.iter().map(|(s, _)| s)
    }

    /// Number of words, i.e. of `B` tags.
    pub fn word_count(&self) -> usize {
        self.tags().filter(|t| *t == SegTag::B).count()
    }

    /// Word spans as half-open syllable index ranges.
    pub fn word_spans(&self) -> Vec<(usize, usize)> {
        let mut spans = Vec::with_capacity(self.len());
        let mut start = 0;
        for (i, tag) in self.tags().enumerate().skip(1) {
            if tag == SegTag::B {
                spans.push((start, i));
                start = i;
            }
        }
        if !self.items.is_empty() {
            spans.push((start, self.items.len()));
        }
        spans
    }
}

/// Parse one gold line in underscore representation.
pub fn parse_underscore(line: &str) -> Result<TaggedSentence> {
    let mut items = Vec::new();
    for token in line.split_whitespace() {
        if token.starts_with('_') || token.ends_with('_') || token.contains("__") {
            return Err(Error::MalformedWord(token.to_string()));
        }
        for (k, part) in token.split('_').enumerate() {
            let tag = if k == 0 { SegTag::B } else { SegTag::I };
            items.push((Syllable::new(part)?, tag));
        }
    }
    if items.is_empty() {
        return Err(Error::EmptyInput);
    }
    TaggedSentence::new(items)
}

/// Render a tagged sentence back into underscore representation.
pub fn to_underscore(s: &TaggedSentence) -> Result<String> {
    let mut out = String::new();
    for (k, (syl, tag)) in s.items.iter().enumerate() {
        match (k, tag) {
            (0, SegTag::I) => {
                return Err(Error::InvalidTagSequence(
                    "sentence starts with I".to_string(),
                ))
            }
            (0, SegTag::B) => {}
            (_, SegTag::B) => out.push(' '),
            (_, SegTag::I) => out.push('_'),
        }
        out.push_str(syl.as_str());
    }
    Ok(out)
}

/// Drop the tags, keeping syllables in order.
pub fn to_raw(s: &TaggedSentence) -> Vec<Syllable> {
    s.syllables().cloned().collect()
}

/// Split a raw line into syllables on whitespace. Empty lines give an empty vector.
pub fn parse_raw(line: &str) -> Result<Vec<Syllable>> {
    line.split_whitespace().map(Syllable::new).collect()
}

/// An ordered collection of tagged sentences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub sentences: Vec<TaggedSentence>,
    pub source_path: Option<PathBuf>,
}

impl Corpus {
    pub fn new(sentences: Vec<TaggedSentence>) -> Corpus {
        Corpus {
            sentences,
            source_path: None,
        }
    }

    /// Parse gold text, one sentence per line. Blank lines are skipped.
    pub fn parse_gold(text: &str) -> Result<Corpus> {
        let mut sentences = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let sentence = parse_underscore(line).map_err(|e| Error::AtLine {
                line: i + 1,
                source: Box::new(e),
            })?;
            sentences.push(sentence);
        }
        Ok(Corpus::new(sentences))
    }

    pub fn read_gold(path: impl AsRef<Path>) -> Result<Corpus> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut corpus = Corpus::parse_gold(&text)?;
        corpus.source_path = Some(path.to_path_buf());
        Ok(corpus)
    }

    pub fn write_gold(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = BufWriter::new(file);
        for s in &self.sentences {
            writeln!(w, "{}", to_underscore(s)?).map_err(|e| Error::io(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    /// Write the syllables of every sentence, space separated, one per line.
    pub fn write_raw(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = BufWriter::new(file);
        for s in &self.sentences {
            let line: Vec<&str> = s.syllables().map(Syllable::as_str).collect();
            writeln!(w, "{}", line.join(" ")).map_err(|e| Error::io(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.sentences.iter().map(TaggedSentence::len).sum()
    }
}
