//! The indexed learner against a reference built from `partition_cases` and
//! `select_rule`, plus the soundness properties of every attachment.

use rdrseg::context::{build_context_dictionary, ContextDictionary};
use rdrseg::corpus::Corpus;
use rdrseg::learner::{
    initialize_corpus, learn, learn_from_dictionary, partition_cases, select_rule, CountingMode,
    LearnerConfig,
};
use rdrseg::pipeline::segment_corpus;
use rdrseg::scrdr::{satisfies, ScrdrTree};
use rdrseg::synthetic::{generate, SynthConfig};
use rdrseg::Lexicon;

fn reference_learn(d: &ContextDictionary, cfg: &LearnerConfig) -> ScrdrTree {
    let mut tree = ScrdrTree::initialized();
    let mut queue = std::collections::VecDeque::from([1usize, 2]);
    while let Some(node) = queue.pop_front() {
        loop {
            let (t_n, correct) = partition_cases(&tree, node, d);
            if t_n.cases.is_empty() {
                break;
            }
            match select_rule(node, &t_n, &correct, cfg) {
                Some(pick) => queue.push_back(tree.attach_exception(node, pick.rule).unwrap()),
                None => break,
            }
        }
    }
    tree
}

fn corpus(seed: u64, overlap: f64) -> (Corpus, Lexicon) {
    generate(&SynthConfig {
        seed,
        vocab_size: 20,
        lexicon_size: 60,
        overlap_rate: overlap,
        sentences: 150,
        mean_len: 6.0,
    })
    .unwrap()
}

fn dictionary(gold: &Corpus, lex: &Lexicon) -> ContextDictionary {
    build_context_dictionary(&initialize_corpus(gold, lex).unwrap(), gold).unwrap()
}

#[test]
fn indexed_learner_matches_reference() {
    let mut learned_any = false;
    for seed in 0..6 {
        let (gold, lex) = corpus(seed, 0.4);
        let d = dictionary(&gold, &lex);
        for (threshold, mode) in [(1, CountingMode::Types), (2, CountingMode::Types), (2, CountingMode::Tokens)] {
            let cfg = LearnerConfig { threshold, counting_mode: mode, ..Default::default() };
            let fast = learn_from_dictionary(&d, &cfg).unwrap().tree;
            let slow = reference_learn(&d, &cfg);
            assert_eq!(fast.serialize(), slow.serialize(), "seed {seed} threshold {threshold} {mode}");
            learned_any |= fast.node_count() > 3;
        }
    }
    assert!(learned_any);
}

#[test]
fn every_attachment_is_sound() {
    for seed in 0..4 {
        let (gold, lex) = corpus(100 + seed, 0.4);
        let d = dictionary(&gold, &lex);
        for mode in [CountingMode::Types, CountingMode::Tokens] {
            let cfg = LearnerConfig { threshold: 1, counting_mode: mode, ..Default::default() };
            let learned = learn_from_dictionary(&d, &cfg).unwrap();

            // Replay attachments in creation order and re-derive each score.
            let mut tree = ScrdrTree::initialized();
            let mut error = learned.stats.initial_error;
            for rec in &learned.stats.rules {
                let node = learned.tree.node(rec.node).unwrap();
                assert_eq!(node.attached_at, Some(rec.attached_at));
                let (t_n, correct) = partition_cases(&tree, rec.attached_at, &d);
                let w = |c: &rdrseg::learner::Case| match mode {
                    CountingMode::Types => 1,
                    CountingMode::Tokens => c.count as u64,
                };
                let a: u64 = t_n.cases.iter().filter(|c| satisfies(&c.tuple, node.rule.condition())).map(w).sum();
                let hits: Vec<_> = correct.iter().filter(|c| satisfies(&c.tuple, node.rule.condition())).collect();
                let b: u64 = hits.iter().map(|c| w(c)).sum();
                assert_eq!((a, b), (rec.a, rec.b));
                assert!(a as i64 - b as i64 >= cfg.threshold as i64);
                if rec.attached_at > 2 {
                    assert!(hits.is_empty());
                    assert_eq!(rec.correct_hits, 0);
                }
                let before_wrong = t_n.cases.len();
                assert_eq!(tree.attach_exception(rec.attached_at, node.rule.clone()).unwrap(), rec.node);
                // local repair: the attachment point's own errors drop
                let after_wrong = partition_cases(&tree, rec.attached_at, &d).0.cases.len();
                assert!(after_wrong < before_wrong);
                error = rec.error_after;
            }
            assert_eq!(tree, learned.tree);
            assert_eq!(error, learned.stats.final_error);
            if learned.stats.rules_learned > 0 {
                assert!(learned.stats.final_error < learned.stats.initial_error);
            }
        }
    }
}

#[test]
fn training_error_matches_resegmentation() {
    let (gold, lex) = corpus(7, 0.4);
    let learned = learn(&gold, &lex, &LearnerConfig::with_threshold(1)).unwrap();
    let pred = segment_corpus(&gold, &lex, &learned.tree).unwrap();
    let wrong: u64 = gold
        .sentences
        .iter()
        .zip(&pred.sentences)
        .map(|(g, p)| g.tags().zip(p.tags()).filter(|(x, y)| x != y).count() as u64)
        .sum();
    // sentence-initial B forcing can only remove errors
    assert!(wrong <= learned.stats.final_error);
}

#[test]
fn learning_is_deterministic() {
    let (gold, lex) = corpus(9, 0.3);
    let cfg = LearnerConfig::default();
    let a = learn(&gold, &lex, &cfg).unwrap();
    let b = learn(&gold, &lex, &cfg).unwrap();
    assert_eq!(a.tree.serialize(), b.tree.serialize());
    assert_eq!(a.stats, b.stats);
}
