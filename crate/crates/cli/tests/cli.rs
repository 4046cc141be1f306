use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn rdrseg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdrseg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn micro(dir: &Path) -> (std::path::PathBuf, std::path::PathBuf) {
    let gold = dir.join("gold.txt");
    let lex = dir.join("lex.txt");
    fs::write(&gold, "thuế_thu_nhập cá_nhân\n").unwrap();
    fs::write(&lex, "thu nhập\ncá nhân\nthuế\n").unwrap();
    (gold, lex)
}

#[test]
fn train_then_segment_micro_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let (gold, lex) = micro(dir.path());
    let model = dir.path().join("model.txt");
    let o = rdrseg(&["train", "--gold", s(&gold), "--lexicon", s(&lex), "--model", s(&model), "--threshold", "1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("rules learned     1"));
    assert_eq!(fs::read_to_string(&model).unwrap().lines().count(), 4);

    let raw = dir.path().join("raw.txt");
    let out = dir.path().join("out.txt");
    fs::write(&raw, "thuế thu nhập cá nhân\n").unwrap();
    let o = rdrseg(&["segment", "--input", s(&raw), "--lexicon", s(&lex), "--model", s(&model), "--output", s(&out)]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap(), "thuế_thu_nhập cá_nhân\n");
}

#[test]
fn train_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let (gold, lex) = micro(dir.path());
    let model = dir.path().join("model.txt");
    let o = rdrseg(&["train", "--gold", s(&gold), "--lexicon", s(&lex), "--model", s(&model), "--threshold", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rules_learned"], 1);
    assert_eq!(v["initial_error"], 1);
    assert_eq!(v["final_error"], 0);
    assert_eq!(v["rules"][0]["a"], 1);
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let (gold, lex) = micro(dir.path());
    let model = dir.path().join("model.txt");
    let cfg = dir.path().join("learner.toml");
    fs::write(&cfg, "threshold = 1\ncounting_mode = \"tokens\"\n").unwrap();
    let o = rdrseg(&["train", "--gold", s(&gold), "--lexicon", s(&lex), "--model", s(&model), "--config", s(&cfg), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["threshold"].as_u64(), v["counting_mode"].as_str()), (Some(1), Some("tokens")));

    let o = rdrseg(&["train", "--gold", s(&gold), "--lexicon", s(&lex), "--model", s(&model), "--config", s(&cfg), "--threshold", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rules_learned"], 0);

    fs::write(&cfg, "thresh = 1\n").unwrap();
    let o = rdrseg(&["train", "--gold", s(&gold), "--lexicon", s(&lex), "--model", s(&model), "--config", s(&cfg)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (gold, lex) = micro(dir.path());
    let model = dir.path().join("model.txt");

    let o = rdrseg(&["train", "--gold", s(&gold), "--lexicon", s(&lex), "--model", s(&model), "--threshold", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("threshold"));

    assert_eq!(rdrseg(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(rdrseg(&["train", "--gold", s(&gold)]).status.code(), Some(1));
    assert_eq!(rdrseg(&["--help"]).status.code(), Some(0));

    let raw = dir.path().join("raw.txt");
    fs::write(&raw, "a b\n").unwrap();
    let o = rdrseg(&["segment", "--input", s(&raw), "--lexicon", s(&lex), "--model", s(&dir.path().join("missing")), "--output", s(&dir.path().join("o"))]);
    assert_eq!(o.status.code(), Some(2));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "a__b\n").unwrap();
    let o = rdrseg(&["eval", "--gold", s(&bad), "--pred", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let (gold, _) = micro(dir.path());
    let o = rdrseg(&["eval", "--gold", s(&gold), "--pred", s(&gold)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("F1          100.00"), "{}", stdout(&o));
    let o = rdrseg(&["eval", "--gold", s(&gold), "--pred", s(&gold), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f1"], 1.0);
}

#[test]
fn synth_tune_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    let train = dir.path().join("train.txt");
    let dev = dir.path().join("dev.txt");
    let lex = dir.path().join("lex.txt");
    let o = rdrseg(&[
        "synth", "--seed", "5", "--sentences", "400", "--test-sentences", "100", "--vocab-size", "30",
        "--lexicon-size", "90", "--gold-out", s(&train), "--lexicon-out", s(&lex), "--test-out", s(&dev), "--json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["train_sentences"].as_u64(), v["test_sentences"].as_u64()), (Some(400), Some(100)));
    assert_eq!(fs::read_to_string(&dev).unwrap().lines().count(), 100);

    let o = rdrseg(&["tune", "--train", s(&train), "--dev", s(&dev), "--lexicon", s(&lex), "--thresholds", "1,2,3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5, "{text}");
    assert!(text.contains("best threshold: "));

    let model = dir.path().join("model.txt");
    rdrseg(&["train", "--gold", s(&train), "--lexicon", s(&lex), "--model", s(&model)]);
    let raw = dir.path().join("raw.txt");
    fs::write(&raw, fs::read_to_string(&dev).unwrap().replace('_', " ")).unwrap();
    let o = rdrseg(&["bench", "--input", s(&raw), "--lexicon", s(&lex), "--model", s(&model), "--reps", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["repetitions"], 3);
    assert!(v["syllables_per_sec"].as_f64().unwrap() > 0.0);
}
