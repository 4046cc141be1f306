//! Error-driven construction of the correction tree.
//!
//! Starting from the initialized three-node tree, every node N is visited in
//! creation order. While some cases of the context dictionary fire at N with
//! a wrong tag, candidate rules are instantiated from those cases, scored by
//! `a - b` (`a`: wrong cases at N the rule fixes, `b`: correct cases at N it
//! would break), and the best one meeting the threshold is attached as an
//! exception of N. Nodes other than 0..=2 only accept rules that fire on none
//! of their correct cases.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::context::{
    build_context_dictionary, instantiate_rules, ContextDictionary, ContextTuple, DictEntry, Field,
    TemplateId, TEMPLATES,
};
use crate::corpus::{to_raw, Corpus, SegTag, TaggedSentence};
use crate::error::{Error, Result};
use crate::evaluation::{score, ScoreReport};
use crate::lexicon::Lexicon;
use crate::pipeline::segment_corpus;
use crate::scrdr::{satisfies, Conclusion, Condition, Rule, ScrdrTree};

/// Ids of the nodes created by [`ScrdrTree::initialized`]; exempt from the
/// no-collision constraint.
const INITIAL_NODES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountingMode {
    /// Each distinct tuple counts once.
    #[default]
    Types,
    /// Each tuple counts as many times as it occurs in the corpus.
    Tokens,
}

impl CountingMode {
    fn weight(self, e: &DictEntry) -> u64 {
        match self {
            CountingMode::Types => 1,
            CountingMode::Tokens => e.count as u64,
        }
    }
}

impl fmt::Display for CountingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountingMode::Types => "types",
            CountingMode::Tokens => "tokens",
        })
    }
}

impl FromStr for CountingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "types" => Ok(CountingMode::Types),
            "tokens" => Ok(CountingMode::Tokens),
            other => Err(Error::Config(format!(
                "counting mode must be `types` or `tokens`, got `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LearnerConfig {
    pub threshold: u32,
    pub counting_mode: CountingMode,
    /// Hard cap on learned rules.
    pub max_rules: usize,
}

impl Default for LearnerConfig {
    fn default() -> Self {
        LearnerConfig {
            threshold: 2,
            counting_mode: CountingMode::Types,
            max_rules: 100_000,
        }
    }
}

impl LearnerConfig {
    pub fn with_threshold(threshold: u32) -> Self {
        LearnerConfig {
            threshold,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.threshold < 1 {
            return Err(Error::Config(format!(
                "threshold must be at least 1, got {}",
                self.threshold
            )));
        }
        Ok(())
    }
}

/// One dictionary entry as seen by the learner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub tuple: ContextTuple,
    pub gold: SegTag,
    pub count: u32,
}

/// Cases that fire at `node` with a wrong conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeErrorSet {
    pub node: usize,
    pub cases: Vec<Case>,
}

/// Split the dictionary entries firing at `node` into wrong and correct cases.
pub fn partition_cases(
    tree: &ScrdrTree,
    node: usize,
    d: &ContextDictionary,
) -> (NodeErrorSet, Vec<Case>) {
    let mut wrong = Vec::new();
    let mut correct = Vec::new();
    if let Some(n) = tree.node(node) {
        for (tuple, e) in d.iter() {
            if tree.fire(tuple) != node {
                continue;
            }
            let case = Case {
                tuple: tuple.clone(),
                gold: e.gold,
                count: e.count,
            };
            if n.rule.conclusion().apply(tuple) == e.gold {
                correct.push(case);
            } else {
                wrong.push(case);
            }
        }
    }
    (NodeErrorSet { node, cases: wrong }, correct)
}

pub fn compute_error_set(tree: &ScrdrTree, node: usize, d: &ContextDictionary) -> NodeErrorSet {
    partition_cases(tree, node, d).0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleScore {
    pub rule: Rule,
    /// Weight of error cases the rule fixes.
    pub a: u64,
    /// Weight of correct cases the rule breaks.
    pub b: u64,
}

impl RuleScore {
    pub fn net(&self) -> i64 {
        self.a as i64 - self.b as i64
    }
}

fn template_of(c: &Condition) -> TemplateId {
    let fields: Vec<Field> = c.clauses().iter().map(|(f, _)| *f).collect();
    TemplateId::all()
        .find(|t| t.fields() == fields.as_slice())
        .expect("candidate conditions come from templates")
}

/// Total order used to pick among candidates; `Less` means `x` is preferred.
fn prefer(
    (x_net, x_a, x_tpl, x_vals, x_tag): (i64, u64, TemplateId, &[&str], SegTag),
    (y_net, y_a, y_tpl, y_vals, y_tag): (i64, u64, TemplateId, &[&str], SegTag),
) -> Ordering {
    y_net
        .cmp(&x_net)
        .then(y_a.cmp(&x_a))
        .then(x_tpl.fields().len().cmp(&y_tpl.fields().len()))
        .then(x_tpl.cmp(&y_tpl))
        .then_with(|| x_vals.cmp(y_vals))
        .then(x_tag.cmp(&y_tag))
}

fn conclusion_tag(r: &Rule) -> SegTag {
    match r.conclusion() {
        Conclusion::Tag(t) => t,
        Conclusion::Identity => unreachable!("candidates conclude a tag"),
    }
}

/// Pick the exception rule for `node` from rules instantiated on `t_n`.
///
/// This is the direct, unindexed form of the selection step; [`learn`] uses an
/// incremental index that makes the same choice.
pub fn select_rule(
    node: usize,
    t_n: &NodeErrorSet,
    correct_n: &[Case],
    cfg: &LearnerConfig,
) -> Option<RuleScore> {
    let mut pool: Vec<Rule> = t_n
        .cases
        .iter()
        .flat_map(|c| instantiate_rules(&c.tuple, c.gold))
        .collect();
    pool.sort_by(|x, y| {
        (x.condition(), conclusion_tag(x)).cmp(&(y.condition(), conclusion_tag(y)))
    });
    pool.dedup();

    let weight = |c: &Case| match cfg.counting_mode {
        CountingMode::Types => 1,
        CountingMode::Tokens => c.count as u64,
    };
    let mut best: Option<(RuleScore, TemplateId)> = None;
    for rule in pool {
        let fired_correct = correct_n
            .iter()
            .filter(|c| satisfies(&c.tuple, rule.condition()));
        if node >= INITIAL_NODES && fired_correct.clone().next().is_some() {
            continue;
        }
        let tag = conclusion_tag(&rule);
        let (mut a, mut b) = (0u64, 0u64);
        for c in t_n.cases.iter().filter(|c| satisfies(&c.tuple, rule.condition())) {
            if c.gold == tag {
                a += weight(c);
            } else {
                b += weight(c);
            }
        }
        for c in fired_correct {
            if c.gold != tag {
                b += weight(c);
            }
        }
        let candidate = RuleScore { rule, a, b };
        if candidate.net() < cfg.threshold as i64 {
            continue;
        }
        let tpl = template_of(candidate.rule.condition());
        let better = match &best {
            None => true,
            Some((cur, cur_tpl)) => {
                let xv: Vec<&str> = candidate.rule.condition().clauses().iter().map(|(_, v)| v.as_str()).collect();
                let yv: Vec<&str> = cur.rule.condition().clauses().iter().map(|(_, v)| v.as_str()).collect();
                prefer(
                    (candidate.net(), candidate.a, tpl, &xv, tag),
                    (cur.net(), cur.a, *cur_tpl, &yv, conclusion_tag(&cur.rule)),
                ) == Ordering::Less
            }
        };
        if better {
            best = Some((candidate, tpl));
        }
    }
    best.map(|(s, _)| s)
}

/// Record of one attachment, in learning order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachedRule {
    pub node: usize,
    pub attached_at: usize,
    pub rule: String,
    pub a: u64,
    pub b: u64,
    /// Distinct correct cases of `attached_at` satisfying the rule.
    pub correct_hits: u64,
    /// Tag-level training error (corpus positions) after this attachment.
    pub error_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingStats {
    pub threshold: u32,
    pub counting_mode: CountingMode,
    pub sentences: usize,
    pub positions: u64,
    pub dictionary_size: usize,
    pub rules_learned: usize,
    pub initial_error: u64,
    pub final_error: u64,
    pub max_rules_hit: bool,
    pub rules: Vec<AttachedRule>,
}

#[derive(Debug, Clone)]
pub struct Learned {
    pub tree: ScrdrTree,
    pub stats: TrainingStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Key {
    template: u8,
    tag: SegTag,
    vals: [u32; 3],
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    a: u64,
    b: u64,
    b_types: u64,
}

/// Dictionary entries encoded as integer codes for fast template projection.
struct Encoded {
    codes: Vec<[u32; 10]>,
    strings: Vec<String>,
}

impl Encoded {
    fn new(d: &ContextDictionary) -> Encoded {
        let mut ids: FxHashMap<String, u32> = FxHashMap::default();
        let mut strings = vec![String::new()];
        ids.insert(String::new(), 0);
        let codes = d
            .iter()
            .map(|(t, _)| {
                Field::ALL.map(|f| {
                    let v = t.get(f);
                    if f.is_tag() {
                        match v {
                            "B" => 1,
                            "I" => 2,
                            _ => 0,
                        }
                    } else if let Some(&id) = ids.get(v) {
                        id
                    } else {
                        let id = strings.len() as u32;
                        strings.push(v.to_string());
                        ids.insert(v.to_string(), id);
                        id
                    }
                })
            })
            .collect();
        Encoded { codes, strings }
    }

    fn key(&self, case: usize, template: u8, tag: SegTag) -> Key {
        let code = &self.codes[case];
        let mut vals = [0u32; 3];
        for (slot, f) in TEMPLATES[template as usize].iter().enumerate() {
            vals[slot] = code[f.index()];
        }
        Key { template, tag, vals }
    }

    fn value_str(&self, f: Field, code: u32) -> &str {
        if f.is_tag() {
            ["", "B", "I"][code as usize]
        } else {
            &self.strings[code as usize]
        }
    }

    fn values(&self, key: &Key) -> Vec<&str> {
        TEMPLATES[key.template as usize]
            .iter()
            .zip(key.vals)
            .map(|(f, c)| self.value_str(*f, c))
            .collect()
    }

    fn rule(&self, key: &Key) -> Rule {
        let clauses = TEMPLATES[key.template as usize]
            .iter()
            .zip(key.vals)
            .map(|(f, c)| (*f, self.value_str(*f, c).to_string()))
            .collect();
        Rule::new(Condition::new(clauses), Conclusion::Tag(key.tag))
    }

    fn satisfies(&self, case: usize, key: &Key) -> bool {
        let code = &self.codes[case];
        TEMPLATES[key.template as usize]
            .iter()
            .zip(key.vals)
            .all(|(f, v)| code[f.index()] == v)
    }
}

struct State<'a> {
    d: &'a ContextDictionary,
    cfg: LearnerConfig,
    enc: Encoded,
    tree: ScrdrTree,
    members: Vec<Vec<u32>>,
    error: u64,
}

impl<'a> State<'a> {
    fn new(d: &'a ContextDictionary, cfg: LearnerConfig) -> State<'a> {
        let tree = ScrdrTree::initialized();
        let mut members = vec![Vec::new(); tree.node_count()];
        let mut error = 0;
        for (i, (t, e)) in d.iter().enumerate() {
            members[tree.fire(t)].push(i as u32);
            error += (e.count - e.count_for(tree.classify(t))) as u64;
        }
        State {
            d,
            cfg,
            enc: Encoded::new(d),
            tree,
            members,
            error,
        }
    }

    fn is_wrong(&self, node: usize, case: usize) -> bool {
        let (t, e) = self.d.entry_at(case);
        self.tree.node(node).unwrap().rule.conclusion().apply(t) != e.gold
    }

    fn tally(&self, node: usize) -> FxHashMap<Key, Tally> {
        let mut stats: FxHashMap<Key, Tally> = FxHashMap::default();
        let members = &self.members[node];
        for &c in members {
            let c = c as usize;
            if self.is_wrong(node, c) {
                let (_, e) = self.d.entry_at(c);
                let w = self.cfg.counting_mode.weight(e);
                for tpl in 0..TEMPLATES.len() as u8 {
                    stats.entry(self.enc.key(c, tpl, e.gold)).or_default().a += w;
                }
            }
        }
        for &c in members {
            let c = c as usize;
            if !self.is_wrong(node, c) {
                self.add_breakage(&mut stats, c, 1);
            }
        }
        stats
    }

    // Adjust `b` of every candidate that would flip correct case `c`.
    fn add_breakage(&self, stats: &mut FxHashMap<Key, Tally>, c: usize, sign: i64) {
        let (_, e) = self.d.entry_at(c);
        let w = self.cfg.counting_mode.weight(e);
        for tpl in 0..TEMPLATES.len() as u8 {
            if let Some(t) = stats.get_mut(&self.enc.key(c, tpl, e.gold.flip())) {
                if sign > 0 {
                    t.b += w;
                    t.b_types += 1;
                } else {
                    t.b -= w;
                    t.b_types -= 1;
                }
            }
        }
    }

    fn best(&self, node: usize, stats: &FxHashMap<Key, Tally>) -> Option<(Key, Tally)> {
        let mut best: Option<(Key, Tally, Vec<&str>)> = None;
        for (key, t) in stats {
            if t.a == 0 || (node >= INITIAL_NODES && t.b_types > 0) {
                continue;
            }
            let net = t.a as i64 - t.b as i64;
            if net < self.cfg.threshold as i64 {
                continue;
            }
            let vals = self.enc.values(key);
            let better = match &best {
                None => true,
                Some((bk, bt, bv)) => {
                    prefer(
                        (net, t.a, TemplateId(key.template), &vals, key.tag),
                        (bt.a as i64 - bt.b as i64, bt.a, TemplateId(bk.template), bv, bk.tag),
                    ) == Ordering::Less
                }
            };
            if better {
                best = Some((*key, *t, vals));
            }
        }
        best.map(|(k, t, _)| (k, t))
    }

    /// Attach `key` at `node`, move the cases it captures, update tallies.
    fn attach(&mut self, node: usize, key: &Key, stats: &mut FxHashMap<Key, Tally>) -> Result<usize> {
        let new = self.tree.attach_exception(node, self.enc.rule(key))?;
        self.members.push(Vec::new());
        let (moved, kept): (Vec<u32>, Vec<u32>) = std::mem::take(&mut self.members[node])
            .into_iter()
            .partition(|&c| self.enc.satisfies(c as usize, key));
        self.members[node] = kept;
        for &c in &moved {
            let c = c as usize;
            let (t, e) = self.d.entry_at(c);
            let before = self.tree.node(node).unwrap().rule.conclusion().apply(t);
            if before != e.gold {
                let w = self.cfg.counting_mode.weight(e);
                for tpl in 0..TEMPLATES.len() as u8 {
                    if let Some(t) = stats.get_mut(&self.enc.key(c, tpl, e.gold)) {
                        t.a -= w;
                    }
                }
            } else {
                self.add_breakage(stats, c, -1);
            }
            let after = key.tag;
            self.error -= (e.count - e.count_for(before)) as u64;
            self.error += (e.count - e.count_for(after)) as u64;
        }
        self.members[new] = moved;
        Ok(new)
    }
}

/// Learn a tree from a prepared context dictionary.
pub fn learn_from_dictionary(d: &ContextDictionary, cfg: &LearnerConfig) -> Result<Learned> {
    cfg.validate()?;
    let mut st = State::new(d, *cfg);
    let initial_error = st.error;
    let mut rules = Vec::new();
    let mut max_rules_hit = false;
    let mut queue: VecDeque<usize> = (1..INITIAL_NODES).collect();

    'outer: while let Some(node) = queue.pop_front() {
        let mut stats = st.tally(node);
        while let Some((key, tally)) = st.best(node, &stats) {
            if rules.len() >= cfg.max_rules {
                max_rules_hit = true;
                break 'outer;
            }
            let new = st.attach(node, &key, &mut stats)?;
            rules.push(AttachedRule {
                node: new,
                attached_at: node,
                rule: st.tree.node(new).unwrap().rule.to_string(),
                a: tally.a,
                b: tally.b,
                correct_hits: tally.b_types,
                error_after: st.error,
            });
            queue.push_back(new);
        }
    }

    let stats = TrainingStats {
        threshold: cfg.threshold,
        counting_mode: cfg.counting_mode,
        sentences: 0,
        positions: d.positions(),
        dictionary_size: d.len(),
        rules_learned: rules.len(),
        initial_error,
        final_error: st.error,
        max_rules_hit,
        rules,
    };
    Ok(Learned {
        tree: st.tree,
        stats,
    })
}

/// Longest-match every gold sentence's syllables.
pub fn initialize_corpus(gold: &Corpus, lex: &Lexicon) -> Result<Corpus> {
    let sentences = gold
        .sentences
        .iter()
        .map(|s| lex.longest_match(&to_raw(s)))
        .collect::<Result<Vec<TaggedSentence>>>()?;
    Ok(Corpus::new(sentences))
}

/// Train a correction tree for `lex`'s longest-match output on `gold`.
pub fn learn(gold: &Corpus, lex: &Lexicon, cfg: &LearnerConfig) -> Result<Learned> {
    cfg.validate()?;
    if gold.is_empty() {
        return Err(Error::EmptyInput);
    }
    let init = initialize_corpus(gold, lex)?;
    let d = build_context_dictionary(&init, gold)?;
    let mut learned = learn_from_dictionary(&d, cfg)?;
    learned.stats.sentences = gold.len();
    Ok(learned)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TuneResult {
    pub threshold: u32,
    pub rules: usize,
    pub score: ScoreReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TuneReport {
    pub results: Vec<TuneResult>,
    pub best: u32,
}

/// Train once per candidate threshold on `train`, score on `dev`, keep the best F1
/// (smallest threshold on ties).
pub fn tune_threshold(
    train: &Corpus,
    dev: &Corpus,
    lex: &Lexicon,
    candidates: &[u32],
    base: &LearnerConfig,
) -> Result<TuneReport> {
    if candidates.is_empty() {
        return Err(Error::Config("no candidate thresholds".to_string()));
    }
    if dev.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut results = Vec::with_capacity(candidates.len());
    for &threshold in candidates {
        let cfg = LearnerConfig { threshold, ..*base };
        let learned = learn(train, lex, &cfg)?;
        let pred = segment_corpus(dev, lex, &learned.tree)?;
        results.push(TuneResult {
            threshold,
            rules: learned.stats.rules_learned,
            score: score(dev, &pred)?,
        });
    }
    let best = results
        .iter()
        .max_by(|x, y| {
            x.score
                .f1
                .total_cmp(&y.score.f1)
                .then(y.threshold.cmp(&x.threshold))
        })
        .map(|r| r.threshold)
        .expect("candidates is non-empty");
    Ok(TuneReport { results, best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_underscore;

    fn micro() -> (Corpus, Lexicon) {
        (
            Corpus::new(vec![parse_underscore("thuế_thu_nhập cá_nhân").unwrap()]),
            Lexicon::from_words(["thu nhập", "cá nhân", "thuế"]),
        )
    }

    fn micro_dictionary() -> ContextDictionary {
        let (gold, lex) = micro();
        build_context_dictionary(&initialize_corpus(&gold, &lex).unwrap(), &gold).unwrap()
    }

    #[test]
    fn error_sets_of_initialized_tree() {
        let d = micro_dictionary();
        let tree = ScrdrTree::initialized();
        let t2 = compute_error_set(&tree, 2, &d);
        assert_eq!(t2.cases.len(), 1);
        assert_eq!(
            t2.cases[0].tuple,
            ContextTuple::from_values(["", "", "thuế", "B", "thu", "B", "nhập", "I", "cá", "B"])
                .unwrap()
        );
        assert_eq!(t2.cases[0].gold, SegTag::I);
        assert!(compute_error_set(&tree, 1, &d).cases.is_empty());

        let (gold, _) = micro();
        let perfect = build_context_dictionary(&gold, &gold).unwrap();
        for n in 0..3 {
            assert!(compute_error_set(&tree, n, &perfect).cases.is_empty());
        }
    }

    #[test]
    fn selects_rule_for_single_error() {
        let d = micro_dictionary();
        let tree = ScrdrTree::initialized();
        let (t2, correct) = partition_cases(&tree, 2, &d);
        let pick = select_rule(2, &t2, &correct, &LearnerConfig::with_threshold(1)).unwrap();
        assert_eq!((pick.a, pick.b), (1, 0));
        assert_eq!(pick.rule.conclusion(), Conclusion::Tag(SegTag::I));
        assert!(select_rule(2, &t2, &correct, &LearnerConfig::with_threshold(2)).is_none());
    }

    #[test]
    fn collision_constraint_empties_pool() {
        // Two tuples identical on every template field except none: a correct
        // case sharing all of the error's template projections.
        let err = ContextTuple::from_values(["", "", "a", "B", "b", "B", "", "", "", ""]).unwrap();
        let t_n = NodeErrorSet {
            node: 5,
            cases: vec![Case { tuple: err.clone(), gold: SegTag::I, count: 1 }],
        };
        let correct = vec![Case { tuple: err, gold: SegTag::B, count: 1 }];
        let cfg = LearnerConfig::with_threshold(1);
        assert!(select_rule(5, &t_n, &correct, &cfg).is_none());
        // Initial nodes are exempt but still pay b.
        assert!(select_rule(2, &t_n, &correct, &cfg).is_none());
    }

    #[test]
    fn learns_micro() {
        let (gold, lex) = micro();
        let learned = learn(&gold, &lex, &LearnerConfig::with_threshold(1)).unwrap();
        assert_eq!(learned.tree.node_count(), 4);
        assert_eq!(learned.stats.rules_learned, 1);
        assert_eq!(learned.stats.initial_error, 1);
        assert_eq!(learned.stats.final_error, 0);
        let r = &learned.stats.rules[0];
        assert_eq!((r.node, r.attached_at, r.a, r.b), (3, 2, 1, 0));
        let out = segment_corpus(&gold, &lex, &learned.tree).unwrap();
        assert_eq!(out, gold);

        let none = learn(&gold, &lex, &LearnerConfig::with_threshold(2)).unwrap();
        assert_eq!(none.tree.node_count(), 3);
    }

    #[test]
    fn perfect_initializer_learns_nothing() {
        let gold = Corpus::parse_gold("thuế thu_nhập cá_nhân\ncá_nhân\n").unwrap();
        let lex = Lexicon::from_words(["thu nhập", "cá nhân", "thuế"]);
        let learned = learn(&gold, &lex, &LearnerConfig::with_threshold(1)).unwrap();
        assert_eq!(learned.tree, ScrdrTree::initialized());
        assert_eq!(learned.stats.initial_error, 0);
    }

    #[test]
    fn rejects_bad_input() {
        let (gold, lex) = micro();
        assert!(matches!(
            learn(&gold, &lex, &LearnerConfig::with_threshold(0)),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            learn(&Corpus::default(), &lex, &LearnerConfig::default()),
            Err(Error::EmptyInput)
        ));
        assert!("words".parse::<CountingMode>().is_err());
        assert_eq!("tokens".parse::<CountingMode>().unwrap(), CountingMode::Tokens);
    }

    #[test]
    fn max_rules_cap_is_reported() {
        let gold = Corpus::parse_gold(&"a b_c\na_b d\n".repeat(3)).unwrap();
        let lex = Lexicon::from_words(["a_b", "b_c"]);
        let cfg = LearnerConfig { threshold: 1, max_rules: 0, ..Default::default() };
        let learned = learn(&gold, &lex, &cfg).unwrap();
        assert!(learned.stats.max_rules_hit);
        assert_eq!(learned.tree.node_count(), 3);
    }

    #[test]
    fn tune_prefers_larger_threshold_when_smaller_overfits() {
        // One noisy training sentence teaches threshold 1 a rule that hurts dev.
        let mut train = "a_b c\n".repeat(5);
        train.push_str("a b e\n");
        let train = Corpus::parse_gold(&train).unwrap();
        let dev = Corpus::parse_gold(&"a_b e\n".repeat(4)).unwrap();
        let lex = Lexicon::from_words(["a_b", "c", "e"]);
        let report = tune_threshold(&train, &dev, &lex, &[1, 2], &LearnerConfig::default()).unwrap();
        assert_eq!(report.results.len(), 2);
        assert!(report.results[0].score.f1 < report.results[1].score.f1);
        assert_eq!(report.best, 2);

        let single = tune_threshold(&train, &dev, &lex, &[2], &LearnerConfig::default()).unwrap();
        assert_eq!(single.best, 2);
        assert!(tune_threshold(&train, &dev, &lex, &[], &LearnerConfig::default()).is_err());
    }
}
