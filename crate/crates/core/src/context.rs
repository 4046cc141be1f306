//! Five-syllable window tuples, the context dictionary, and rule templates.

use std::fmt;

use indexmap::IndexMap;

use crate::corpus::{Corpus, SegTag, TaggedSentence};
use crate::error::{Error, Result};
use crate::scrdr::{Conclusion, Condition, Rule};

/// One of the ten tuple fields, in window order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    SylM2,
    TagM2,
    SylM1,
    TagM1,
    Syl0,
    Tag0,
    SylP1,
    TagP1,
    SylP2,
    TagP2,
}

impl Field {
    pub const ALL: [Field; 10] = [
        Field::SylM2,
        Field::TagM2,
        Field::SylM1,
        Field::TagM1,
        Field::Syl0,
        Field::Tag0,
        Field::SylP1,
        Field::TagP1,
        Field::SylP2,
        Field::TagP2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Window offset, -2..=2.
    pub fn offset(self) -> isize {
        (self.index() / 2) as isize - 2
    }

    pub fn is_tag(self) -> bool {
        self.index() % 2 == 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::SylM2 => "s_m2",
            Field::TagM2 => "t_m2",
            Field::SylM1 => "s_m1",
            Field::TagM1 => "t_m1",
            Field::Syl0 => "s_0",
            Field::Tag0 => "t_0",
            Field::SylP1 => "s_p1",
            Field::TagP1 => "t_p1",
            Field::SylP2 => "s_p2",
            Field::TagP2 => "t_p2",
        }
    }

    pub fn from_name(name: &str) -> Option<Field> {
        Field::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The window around one syllable: lowercased syllables and initializer tags
/// at offsets -2..=2. Out-of-range positions hold the empty marker `""`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContextTuple {
    syllables: [String; 5],
    tags: [Option<SegTag>; 5],
}

impl ContextTuple {
    /// Build from the ten values in window order; `""` is the empty marker.
    /// Returns `None` if a tag value is not `B`, `I` or `""`, if the centre
    /// is empty, or if a syllable and its tag disagree on emptiness.
    pub fn from_values(values: [&str; 10]) -> Option<ContextTuple> {
        let mut syllables: [String; 5] = Default::default();
        let mut tags = [None; 5];
        for k in 0..5 {
            syllables[k] = values[2 * k].to_string();
            tags[k] = match values[2 * k + 1] {
                "" => None,
                v => Some(SegTag::parse(v)?),
            };
            if syllables[k].is_empty() != tags[k].is_none() {
                return None;
            }
        }
        tags[2]?;
        Some(ContextTuple { syllables, tags })
    }

    pub fn get(&self, field: Field) -> &str {
        let k = field.index() / 2;
        if field.is_tag() {
            self.tags[k].map_or("", SegTag::as_str)
        } else {
            &self.syllables[k]
        }
    }

    pub fn syllable(&self, offset: isize) -> &str {
        &self.syllables[(offset + 2) as usize]
    }

    pub fn tag(&self, offset: isize) -> Option<SegTag> {
        self.tags[(offset + 2) as usize]
    }

    /// The initializer's tag of the centre syllable.
    pub fn t0(&self) -> SegTag {
        self.tags[2].expect("centre tag is always present")
    }

    pub fn values(&self) -> [&str; 10] {
        Field::ALL.map(|f| self.get(f))
    }
}

impl fmt::Display for ContextTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.values().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v:?}")?;
        }
        f.write_str(")")
    }
}

/// One tuple per position of `s`, in order.
pub fn make_tuples(s: &TaggedSentence) -> Vec<ContextTuple> {
    let lowered: Vec<String> = s.syllables().map(|x| x.lower()).collect();
    let tags: Vec<SegTag> = s.tags().collect();
    make_tuples_lowered(&lowered, &tags)
}

pub(crate) fn make_tuples_lowered(lowered: &[String], tags: &[SegTag]) -> Vec<ContextTuple> {
    let n = lowered.len() as isize;
    (0..n)
        .map(|i| {
            let mut syllables: [String; 5] = Default::default();
            let mut window = [None; 5];
            for (k, j) in (i - 2..=i + 2).enumerate() {
                if (0..n).contains(&j) {
                    syllables[k] = lowered[j as usize].clone();
                    window[k] = Some(tags[j as usize]);
                }
            }
            ContextTuple {
                syllables,
                tags: window,
            }
        })
        .collect()
}

/// Resolved gold tag and occurrence counts of one dictionary key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DictEntry {
    pub gold: SegTag,
    /// Number of corpus positions producing the tuple.
    pub count: u32,
    count_b: u32,
    count_i: u32,
}

impl DictEntry {
    /// Positions of this tuple whose gold tag is `tag`.
    pub fn count_for(&self, tag: SegTag) -> u32 {
        match tag {
            SegTag::B => self.count_b,
            SegTag::I => self.count_i,
        }
    }
}

/// Mapping from initializer tuples to gold tags, in first-occurrence order.
#[derive(Debug, Clone, Default)]
pub struct ContextDictionary {
    entries: IndexMap<ContextTuple, DictEntry>,
}

impl ContextDictionary {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, t: &ContextTuple) -> Option<&DictEntry> {
        self.entries.get(t)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ContextTuple, &DictEntry)> + '_ {
        self.entries.iter()
    }

    pub fn entry_at(&self, index: usize) -> (&ContextTuple, &DictEntry) {
        self.entries.get_index(index).expect("index in range")
    }

    /// Total corpus positions.
    pub fn positions(&self) -> u64 {
        self.entries.values().map(|e| e.count as u64).sum()
    }

    fn add(&mut self, tuple: ContextTuple, gold: SegTag) {
        let t0 = tuple.t0();
        let e = self.entries.entry(tuple).or_insert(DictEntry {
            gold: t0,
            count: 0,
            count_b: 0,
            count_i: 0,
        });
        e.count += 1;
        match gold {
            SegTag::B => e.count_b += 1,
            SegTag::I => e.count_i += 1,
        }
    }

    // Majority gold tag; ties keep the initializer's tag.
    fn resolve(&mut self) {
        for (tuple, e) in self.entries.iter_mut() {
            e.gold = match e.count_b.cmp(&e.count_i) {
                std::cmp::Ordering::Greater => SegTag::B,
                std::cmp::Ordering::Less => SegTag::I,
                std::cmp::Ordering::Equal => tuple.t0(),
            };
        }
    }
}

/// Align an initialized corpus with its gold counterpart and collect the
/// dictionary of window tuples (from `init`) to gold tags.
pub fn build_context_dictionary(init: &Corpus, gold: &Corpus) -> Result<ContextDictionary> {
    check_alignment(init, gold)?;
    let mut d = ContextDictionary::default();
    for (si, gi) in init.sentences.iter().zip(&gold.sentences) {
        for (tuple, g) in make_tuples(si).into_iter().zip(gi.tags()) {
            d.add(tuple, g);
        }
    }
    d.resolve();
    Ok(d)
}

/// Same sentence count and case-insensitively equal syllables, sentence by sentence.
pub fn check_alignment(a: &Corpus, b: &Corpus) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Alignment {
            sentence: a.len().min(b.len()),
            reason: format!("{} sentences vs {}", a.len(), b.len()),
        });
    }
    for (k, (x, y)) in a.sentences.iter().zip(&b.sentences).enumerate() {
        if x.len() != y.len() {
            return Err(Error::Alignment {
                sentence: k,
                reason: format!("{} syllables vs {}", x.len(), y.len()),
            });
        }
        for (p, q) in x.syllables().zip(y.syllables()) {
            if p.as_str() != q.as_str() && p.lower() != q.lower() {
                return Err(Error::Alignment {
                    sentence: k,
                    reason: format!("syllable `{p}` vs `{q}`"),
                });
            }
        }
    }
    Ok(())
}

/// Index into [`TEMPLATES`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemplateId(pub u8);

impl TemplateId {
    pub fn all() -> impl Iterator<Item = TemplateId> {
        (0..TEMPLATES.len() as u8).map(TemplateId)
    }

    pub fn fields(self) -> &'static [Field] {
        TEMPLATES[self.0 as usize]
    }
}

use Field::*;

/// The 26 rule templates: syllable singles, pairs and triples; tag singles and
/// pairs; mixed syllable/tag conjunctions. Fields are listed in window order.
pub static TEMPLATES: [&[Field]; 26] = [
    &[SylM2],
    &[SylM1],
    &[Syl0],
    &[SylP1],
    &[SylP2],
    &[SylM2, Syl0],
    &[SylM1, Syl0],
    &[SylM1, SylP1],
    &[Syl0, SylP1],
    &[Syl0, SylP2],
    &[SylM2, SylM1, Syl0],
    &[SylM1, Syl0, SylP1],
    &[Syl0, SylP1, SylP2],
    &[TagM2],
    &[TagM1],
    &[Tag0],
    &[TagP1],
    &[TagP2],
    &[TagM2, TagM1],
    &[TagM1, TagP1],
    &[TagP1, TagP2],
    &[TagM1, Syl0],
    &[Syl0, TagP1],
    &[TagM1, Syl0, TagP1],
    &[TagM2, TagM1, Syl0],
    &[Syl0, TagP1, TagP2],
];

/// Concrete rule of one template for a tuple and its gold tag.
pub fn instantiate(template: TemplateId, t: &ContextTuple, gold: SegTag) -> Rule {
    let clauses = template
        .fields()
        .iter()
        .map(|&f| (f, t.get(f).to_string()))
        .collect();
    Rule::new(Condition::new(clauses), Conclusion::Tag(gold))
}

/// One rule per template, in template order.
pub fn instantiate_rules(t: &ContextTuple, gold: SegTag) -> Vec<Rule> {
    TemplateId::all().map(|id| instantiate(id, t, gold)).collect()
}
