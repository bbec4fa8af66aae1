use std::io::Write;
use std::process::{Command, Output};

use twinlattice::Error;
use twinlattice_cli::report::{LemmaRecord, OutcomeRecord, Report, TableReport, WreathRecord};
use twinlattice_cli::{CliError, EXIT_INTERNAL, EXIT_INVALID};

fn twinlattice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twinlattice")).args(args).output().expect("binary runs")
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> (T, String) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = twinlattice(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).expect("valid report"), text)
}

#[test]
fn verdict_simple_for_a51_over_f4() {
    let (report, _): (Report, _) = json(&["verdict", "--m", "5", "--n", "1", "--q", "4"]);
    let v = report.verdict.unwrap();
    assert_eq!(v.outcome, OutcomeRecord::Simple);
    assert_eq!(v.quotient_index_bound, Some(1));
    assert_eq!(report.q, Some(4));
    // mn > 4: the condition checkers are included
    assert!(report.condition_i.unwrap().holds);
    let c2 = report.condition_ii.unwrap();
    assert_eq!((c2.minimal_c_graph, c2.minimal_c_chambers), (Some(3), Some(2)));

    let text = twinlattice(&["verdict", "--m", "5", "--n", "1", "--q", "4"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("verdict (q = 4): simple"));
}

#[test]
fn classify_affine() {
    let (report, text): (Report, _) = json(&["classify", "--m", "4", "--n", "1"]);
    assert!(text.contains("\"classification\": \"affine\""));
    assert!(report.condition_i.is_none() && report.verdict.is_none());
    assert_eq!(report.window, 8);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["verdict", "--m", "0", "--n", "2", "--q", "2"][..],
        &["verdict", "--m", "5", "--n", "1", "--q", "6"],
        &["conditions", "--m", "1", "--n", "2"],
        &["lemma", "--m", "3", "--n", "3"],
        &["wreath", "--group", "Z7", "--copies", "2"],
        &["wreath", "--group", "S3", "--copies", "1"],
        &["wreath", "--copies", "2"],
        &["classify", "--m", "-1", "--n", "2"],
    ] {
        let out = twinlattice(args);
        assert_eq!(out.status.code(), Some(EXIT_INVALID), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn internal_errors_map_to_exit_3() {
    assert_eq!(CliError::from(Error::Internal("guard".into())).code, EXIT_INTERNAL);
    assert_eq!(CliError::from(Error::NotPrimePower(6)).code, EXIT_INVALID);
}

#[test]
fn json_is_byte_identical_and_round_trips() {
    let args = ["verdict", "--m", "7", "--n", "1", "--q", "2"];
    let (report, first): (Report, _) = json(&args);
    let (_, second): (Report, _) = json(&args);
    assert_eq!(first, second);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", first);
    let keys: Vec<String> = serde_json::from_str::<serde_json::Value>(&first)
        .unwrap()
        .as_object()
        .unwrap()
        .keys()
        .cloned()
        .collect();
    assert_eq!(keys.len(), 8);
    assert!(first.contains("\"virtually_simple\""));
}

#[test]
fn table_and_lemma_reports() {
    let (table, _): (TableReport, _) = json(&["table", "--m", "2", "--n", "2", "--window", "2"]);
    assert_eq!(table.window, 2);
    // 10 walls, two roots each
    assert_eq!(table.entries.len(), 20 * 19 / 2);
    assert!(table.entries.iter().all(|e| e.support.is_empty()));

    let (lemma, _): (LemmaRecord, _) = json(&["lemma", "--m", "1", "--n", "6", "--window", "3"]);
    assert!(lemma.passed && lemma.violations.is_empty());
    assert_eq!(lemma.alpha, 2);
    assert!(lemma.pairs.iter().filter(|p| !p.support.is_empty()).all(|p| p.support.len() == 1));
}

#[test]
fn wreath_from_table_file() {
    // S3 as permutations of {0,1,2}, written out by hand
    let dir = std::env::temp_dir().join(format!("twinlattice-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.txt");
    let table = "6\n0 1 2 3 4 5\n1 0 3 2 5 4\n2 4 0 5 1 3\n3 5 1 4 0 2\n4 2 5 0 3 1\n5 3 4 1 2 0\n";
    std::fs::File::create(&path).unwrap().write_all(table.as_bytes()).unwrap();

    let p = path.to_str().unwrap();
    let (w, _): (WreathRecord, _) = json(&["wreath", "--table", p, "--copies", "2"]);
    assert_eq!(w.group.order, 6);
    assert!(!w.group.abelian);
    assert_eq!(w.wreath_order, Some(72));
    assert!(w.identity_holds);
    assert_eq!(w.shift_quotient_order, Some(2));

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "2\n0 1\n1 1\n").unwrap();
    let out = twinlattice(&["wreath", "--table", bad.to_str().unwrap(), "--copies", "2"]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn wreath_over_budget_still_reports_identity() {
    let (w, _): (WreathRecord, _) = json(&["wreath", "--group", "S4", "--copies", "4"]);
    assert_eq!(w.wreath_order, Some(1_327_104));
    assert!(w.identity_holds);
    assert_eq!(w.shift_quotient_order, None);
    assert_eq!(w.notes.len(), 1);
}
