//! Word lexicon and the greedy longest-matching initial segmenter.

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use rustc_hash::FxHashMap;
use unicode_normalization::UnicodeNormalization;

use crate::corpus::{SegTag, Syllable, TaggedSentence};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
struct TrieNode {
    children: FxHashMap<Box<str>, u32>,
    terminal: bool,
}

/// A set of words, each a non-empty sequence of lowercased syllables,
/// indexed by a syllable trie.
#[derive(Debug, Clone)]
pub struct Lexicon {
    words: BTreeSet<Vec<String>>,
    nodes: Vec<TrieNode>,
}

impl Default for Lexicon {
    fn default() -> Self {
        Lexicon {
            words: BTreeSet::new(),
            nodes: vec![TrieNode::default()],
        }
    }
}

fn normalize_syllable(s: &str) -> String {
    s.nfc().collect::<String>().to_lowercase()
}

impl Lexicon {
    pub fn new() -> Lexicon {
        Lexicon::default()
    }

    /// Build from word strings whose syllables are separated by spaces or underscores.
    pub fn from_words<I, S>(words: I) -> Lexicon
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut lex = Lexicon::new();
        for w in words {
            lex.insert_str(w.as_ref());
        }
        lex
    }

    /// Insert one word given as text. Returns false for blank input or a duplicate.
    pub fn insert_str(&mut self, word: &str) -> bool {
        let syllables: Vec<String> = word
            .split(|c: char| c == '_' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(normalize_syllable)
            .collect();
        self.insert(syllables)
    }

    pub fn insert(&mut self, syllables: Vec<String>) -> bool {
        if syllables.is_empty() || self.words.contains(&syllables) {
            return false;
        }
        let mut node = 0usize;
        for syl in &syllables {
            node = match self.nodes[node].children.get(syl.as_str()) {
                Some(&next) => next as usize,
                None => {
                    let next = self.nodes.len();
                    self.nodes.push(TrieNode::default());
                    self.nodes[node]
                        .children
                        .insert(syl.clone().into_boxed_str(), next as u32);
                    next
                }
            };
        }
        self.nodes[node].terminal = true;
        self.words.insert(syllables);
        true
    }

    /// Load a lexicon file: one word per line, `#` lines ignored.
    pub fn load(path: impl AsRef<Path>) -> Result<Lexicon> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let lex = Lexicon::from_words(
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#')),
        );
        if lex.is_empty() {
            return Err(Error::EmptyLexicon(path.to_path_buf()));
        }
        Ok(lex)
    }

    /// Write one word per line, syllables joined by underscores, in sorted order.
    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = BufWriter::new(file);
        for word in &self.words {
            writeln!(w, "{}", word.join("_")).map_err(|e| Error::io(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains<S: AsRef<str>>(&self, syllables: &[S]) -> bool {
        self.trie_terminal(syllables.iter().map(AsRef::as_ref))
            .unwrap_or(false)
    }

    pub fn words(&self) -> impl Iterator<Item = &[String]> + '_ {
        self.words.iter().map(Vec::as_slice)
    }

    fn trie_terminal<'a>(&self, syllables: impl Iterator<Item = &'a str>) -> Option<bool> {
        let mut node = 0usize;
        let mut any = false;
        for syl in syllables {
            any = true;
            node = *self.nodes[node].children.get(syl)? as usize;
        }
        Some(any && self.nodes[node].terminal)
    }

    /// Length in syllables of the longest word that is a prefix of `lowered`.
    pub fn longest_prefix<S: AsRef<str>>(&self, lowered: &[S]) -> Option<usize> {
        let mut node = 0usize;
        let mut best = None;
        for (k, syl) in lowered.iter().enumerate() {
            match self.nodes[node].children.get(syl.as_ref()) {
                Some(&next) => node = next as usize,
                None => break,
            }
            if self.nodes[node].terminal {
                best = Some(k + 1);
            }
        }
        best
    }

    /// Longest-matching tags for already lowercased syllables.
    pub fn tag_lowered<S: AsRef<str>>(&self, lowered: &[S]) -> Vec<SegTag> {
        let mut tags = Vec::with_capacity(lowered.len());
        let mut i = 0;
        while i < lowered.len() {
            let len = self.longest_prefix(&lowered[i..]).unwrap_or(1);
            tags.push(SegTag::B);
            tags.extend(std::iter::repeat_n(SegTag::I, len - 1));
            i += len;
        }
        tags
    }

    /// Greedy left-to-right longest matching. Case-insensitive; output keeps
    /// the input's surfaces. Unknown syllables become single-syllable words.
    pub fn longest_match(&self, sentence: &[Syllable]) -> Result<TaggedSentence> {
        if sentence.is_empty() {
            return Err(Error::EmptyInput);
        }
        let lowered: Vec<String> = sentence.iter().map(Syllable::lower).collect();
        let tags = self.tag_lowered(&lowered);
        Ok(TaggedSentence::from_parts_unchecked(sentence, &tags))
    }
}
