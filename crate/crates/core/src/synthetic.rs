//! Synthetic gold corpora with controlled segmentation ambiguity.
//!
//! Base words are drawn so that the lexicon is prefix-free: the first
//! syllable of a word fixes its length. On a prefix-free lexicon longest
//! matching recovers every gold segmentation exactly. Ambiguity is then added
//! by extending a base word `w` with the first syllable `b` of another word
//! `v`: whenever gold text contains `w` followed by `v`, the greedy matcher
//! takes `w_b` instead.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson, WeightedIndex};
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, SegTag, Syllable, TaggedSentence};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;

const ONSETS: [&str; 16] = [
    "b", "c", "d", "đ", "g", "h", "k", "l", "m", "n", "ng", "nh", "s", "t", "th", "v",
];
const NUCLEI: [&str; 10] = ["a", "ă", "â", "e", "ê", "i", "o", "ô", "ơ", "ư"];
const CODAS: [&str; 5] = ["", "n", "m", "t", "ng"];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub seed: u64,
    pub vocab_size: usize,
    pub lexicon_size: usize,
    pub overlap_rate: f64,
    pub sentences: usize,
    /// Mean number of words per sentence.
    pub mean_len: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 13,
            vocab_size: 50,
            lexicon_size: 200,
            overlap_rate: 0.3,
            sentences: 5000,
            mean_len: 10.0,
        }
    }
}

fn syllable_inventory() -> Vec<String> {
    let mut out = Vec::with_capacity(ONSETS.len() * NUCLEI.len() * CODAS.len());
    for c in CODAS {
        for o in ONSETS {
            for n in NUCLEI {
                out.push(format!("{o}{n}{c}"));
            }
        }
    }
    out
}

/// Generate a gold corpus and a lexicon covering all of its words.
pub fn generate(cfg: &SynthConfig) -> Result<(Corpus, Lexicon)> {
    let inventory = syllable_inventory();
    if cfg.vocab_size < 2 || cfg.vocab_size > inventory.len() {
        return Err(Error::Config(format!(
            "vocab_size must be in 2..={}, got {}",
            inventory.len(),
            cfg.vocab_size
        )));
    }
    if cfg.lexicon_size < 1 {
        return Err(Error::Config("lexicon_size must be at least 1".to_string()));
    }
    if !(0.0..=1.0).contains(&cfg.overlap_rate) {
        return Err(Error::Config(format!(
            "overlap_rate must be in [0, 1], got {}",
            cfg.overlap_rate
        )));
    }
    if !(cfg.mean_len >= 1.0 && cfg.mean_len.is_finite()) {
        return Err(Error::Config(format!(
            "mean_len must be at least 1, got {}",
            cfg.mean_len
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut vocab: Vec<String> = inventory;
    vocab.shuffle(&mut rng);
    vocab.truncate(cfg.vocab_size);

    // Syllable classes: a word of length k starts with a syllable of class k.
    let v = cfg.vocab_size;
    let n1 = ((v as f64 * 0.2).round() as usize).max(1);
    let n3 = (v - n1) / 2;
    let n2 = v - n1 - n3;
    let classes: [&[String]; 3] = [&vocab[..n1], &vocab[n1..n1 + n2], &vocab[n1 + n2..]];
    let capacity = [n1, n2 * v, n3 * v * v];

    let n_overlap = (cfg.overlap_rate * cfg.lexicon_size as f64).round() as usize;
    let n_base = cfg.lexicon_size - n_overlap;
    if n_base == 0 {
        return Err(Error::Config(
            "overlap_rate leaves no base words in the lexicon".to_string(),
        ));
    }
    if n_base > capacity.iter().sum::<usize>() {
        return Err(Error::Config(format!(
            "lexicon_size {} exceeds the {} distinct words available from {} syllables",
            cfg.lexicon_size,
            capacity.iter().sum::<usize>(),
            v
        )));
    }

    let mut words: Vec<Vec<String>> = Vec::with_capacity(cfg.lexicon_size);
    let mut seen = std::collections::HashSet::new();
    let mut per_class = [0usize; 3];
    let length_weights = [0.2, 0.5, 0.3];
    while words.len() < n_base {
        let weights: Vec<f64> = (0..3)
            .map(|k| {
                if per_class[k] < capacity[k] {
                    length_weights[k]
                } else {
                    0.0
                }
            })
            .collect();
        let k = WeightedIndex::new(&weights)
            .expect("capacity check leaves an open class")
            .sample(&mut rng);
        let mut w = vec![classes[k][rng.gen_range(0..classes[k].len())].clone()];
        for _ in 0..k {
            w.push(vocab[rng.gen_range(0..v)].clone());
        }
        if seen.insert(w.clone()) {
            per_class[k] += 1;
            words.push(w);
        }
    }

    let extendable: Vec<usize> = (0..words.len()).filter(|&i| words[i].len() <= 2).collect();
    if n_overlap > 0 && extendable.is_empty() {
        return Err(Error::Config(
            "no base word short enough to extend for overlap".to_string(),
        ));
    }
    let mut attempts = 0usize;
    while words.len() < cfg.lexicon_size {
        attempts += 1;
        if attempts > 1000 * cfg.lexicon_size {
            return Err(Error::Config(format!(
                "cannot place {n_overlap} distinct overlap words"
            )));
        }
        let w = &words[extendable[rng.gen_range(0..extendable.len())]];
        let next = &words[rng.gen_range(0..n_base)];
        let mut ext = w.clone();
        ext.push(next[0].clone());
        if seen.insert(ext.clone()) {
            words.push(ext);
        }
    }

    // Word unigram model with a mild Zipf tail over a shuffled ranking.
    let mut ranking: Vec<usize> = (0..words.len()).collect();
    ranking.shuffle(&mut rng);
    let mut weights = vec![0.0; words.len()];
    for (r, &i) in ranking.iter().enumerate() {
        weights[i] = 1.0 / ((r + 1) as f64).powf(0.5);
    }
    let unigram = WeightedIndex::new(&weights).expect("positive weights");
    let extra_words = Poisson::new(cfg.mean_len - 1.0).ok();

    let mut sentences = Vec::with_capacity(cfg.sentences);
    for _ in 0..cfg.sentences {
        let n = 1 + extra_words.map_or(0, |p| p.sample(&mut rng) as usize);
        let mut items = Vec::new();
        for _ in 0..n {
            let w = &words[unigram.sample(&mut rng)];
            for (k, syl) in w.iter().enumerate() {
                let tag = if k == 0 { SegTag::B } else { SegTag::I };
                items.push((Syllable::new(syl)?, tag));
            }
        }
        sentences.push(TaggedSentence::new(items)?);
    }

    let lex = Lexicon::from_words(words.iter().map(|w| w.join("_")));
    Ok((Corpus::new(sentences), lex))
}
