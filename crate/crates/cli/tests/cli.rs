use std::fs;
use std::process::{Command, Output};

use heron_cli::commands::{FamilyResult, SurveySummary, VerifyReport};
use heron_cli::output::{read_survey_csv, OutputEnvelope};
use heron_cli::scaling::ScalingReport;
use heron_core::heron::HCount;
use heron_core::prime_case::{CaseTag, Classification};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn heron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heron")).args(args).env_remove("HERON_MAX_INPUT").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    heron(args).status.code().unwrap()
}

fn json<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(args: &[&str]) -> OutputEnvelope<T> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = heron(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let env: OutputEnvelope<T> = serde_json::from_str(&text).unwrap();
    let again: OutputEnvelope<T> = serde_json::from_str(&serde_json::to_string(&env).unwrap()).unwrap();
    assert_eq!(env, again);
    env
}

#[test]
fn count() {
    let env = json::<HCount>(&["count", "--a", "5", "--b", "13"]);
    assert_eq!(env.command, "count");
    assert_eq!(env.result.third_sides, vec![12]);
    let env = json::<HCount>(&["count", "--a", "5", "--b", "13", "--method", "angles"]);
    assert_eq!(env.result.third_sides, vec![12]);
    assert_eq!(json::<HCount>(&["count", "--a", "3", "--b", "3"]).result.count(), 0);
    assert_eq!(code(&["count", "--a", "0", "--b", "5"]), 2);
    assert_eq!(code(&["count", "--a", "5"]), 2);
    assert_eq!(code(&["count", "--a", "2000000000", "--b", "5"]), 3);
}

#[test]
fn input_ceiling_from_environment() {
    let run = |ceiling: &str| {
        Command::new(env!("CARGO_BIN_EXE_heron"))
            .args(["count", "--a", "5", "--b", "13"])
            .env("HERON_MAX_INPUT", ceiling)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(run("10"), 3);
    assert_eq!(run("13"), 0);
    assert_eq!(run("99999999999"), 0);
    assert_eq!(run("ten"), 2);
}

#[test]
fn classify() {
    let c = json::<Classification>(&["classify", "--p", "113", "--q", "257"]).result;
    assert_eq!(c.tag, CaseTag::Both1Mod4);
    assert_eq!(c.solutions.unwrap().solved().collect::<Vec<_>>(), vec![(15, 306)]);
    let c = json::<Classification>(&["classify", "--p", "5", "--q", "5"]).result;
    assert_eq!((c.tag, c.third_sides), (CaseTag::Equal1Mod4, vec![6, 8]));
    assert_eq!(code(&["classify", "--p", "9", "--q", "5"]), 2);
}

#[test]
fn family() {
    match json::<FamilyResult>(&["family", "--type", "example1", "--s", "1", "--t", "1"]).result {
        FamilyResult::Example1 { member: Some(m), .. } => assert_eq!((m.p, m.q, m.x), (5, 13, 12)),
        other => panic!("{other:?}"),
    }
    let text = String::from_utf8(
        heron(&["family", "--type", "prop28", "--i", "1", "--j", "1", "--k", "3", "--l", "2"]).stdout,
    )
    .unwrap();
    assert!(text.contains("(37, 13, 40, 30)"), "{text}");
    assert_eq!(code(&["family", "--type", "prop28", "--i", "2", "--j", "1", "--k", "3", "--l", "2"]), 2);
    assert_eq!(code(&["family", "--type", "prop28", "--i", "1"]), 2);
}

#[test]
fn survey_summary() {
    let s = json::<SurveySummary>(&["survey", "--max", "4"]).result;
    assert_eq!((s.total, s.zero_cells, s.cells), (2, 14, 16));
    let s = json::<SurveySummary>(&["survey", "--max", "1"]).result;
    assert_eq!(s.total, 0);
    assert_eq!(code(&["survey", "--max", "501"]), 3);
    assert_eq!(code(&["survey", "--max", "20", "--workers", "0"]), 2);
}

#[test]
fn survey_files_do_not_depend_on_workers() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one");
    let four = dir.path().join("four");
    assert_eq!(code(&["survey", "--max", "100", "--workers", "1", "--out", one.to_str().unwrap()]), 0);
    assert_eq!(code(&["survey", "--max", "100", "--workers", "4", "--out", four.to_str().unwrap()]), 0);
    for file in ["survey.csv", "scaling.json"] {
        assert_eq!(fs::read(one.join(file)).unwrap(), fs::read(four.join(file)).unwrap(), "{file}");
    }
    let records = read_survey_csv(fs::File::open(one.join("survey.csv")).unwrap()).unwrap();
    assert_eq!(records.len(), 100 * 100);
    let report: ScalingReport = serde_json::from_slice(&fs::read(one.join("scaling.json")).unwrap()).unwrap();
    assert_eq!(report.xs, vec![12, 25, 50, 100]);
    assert_eq!(*report.s_values.last().unwrap(), records.iter().map(|r| r.h as u64).sum::<u64>());
}

#[test]
fn survey_custom_ladder_and_bad_path() {
    let s = json::<SurveySummary>(&["survey", "--max", "30", "--xs", "10,20,30"]).result;
    assert_eq!(s.report.unwrap().xs, vec![10, 20, 30]);
    assert_eq!(code(&["survey", "--max", "30", "--xs", "20,10"]), 2);

    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    assert_eq!(code(&["survey", "--max", "10", "--out", blocker.join("sub").to_str().unwrap()]), 4);
}

#[test]
fn verify() {
    let out = heron(&["verify", "--suite", "heron", "--max", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert_eq!(code(&["verify", "--suite", "primecase", "--max", "500"]), 0);

    let out = heron(&["verify", "--suite", "all", "--max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    let report = json::<VerifyReport>(&["verify", "--suite", "arith", "--max", "200"]).result;
    assert!(report.passed && report.outcomes.len() == 7);
}

#[test]
fn seed_does_not_change_results() {
    let a = heron(&["classify", "--p", "4241", "--q", "2729", "--seed", "1"]).stdout;
    let b = heron(&["classify", "--p", "4241", "--q", "2729", "--seed", "99"]).stdout;
    assert_eq!(a, b);
}
