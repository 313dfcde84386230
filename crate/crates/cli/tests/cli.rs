use std::process::{Command, Output};

use serde_json::Value;
use supereuler::io::parse_any;
use supereuler::iso::are_isomorphic;
use supereuler::named::petersen;
use supereuler::Limits;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supereuler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn construct_petersen_as_graph6() {
    let o = run(&["construct", "petersen", "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = parse_any(text.trim()).unwrap();
    assert!(are_isomorphic(&g, &petersen(), &Limits::default()).unwrap().is_some());
}

#[test]
fn negative_check_fails_only_under_assert() {
    let plain = run(&["check", "supereulerian", "--name", "petersen"]);
    assert_eq!(plain.status.code(), Some(0));
    assert!(stdout(&plain).contains("supereulerian: false"));
    let asserted = run(&["check", "supereulerian", "--name", "petersen", "--assert"]);
    assert_eq!(asserted.status.code(), Some(1));
    let positive = run(&["check", "collapsible", "--name", "k(4)", "--assert"]);
    assert_eq!(positive.status.code(), Some(0));
}

#[test]
fn verify_f_a_over_enumeration() {
    let o = run(&["verify", "F-a", "--enumerate", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["statement"], "F-a");
    assert_eq!(r["counterexamples"].as_array().unwrap().len(), 0);
    assert!(r["premise_matched"].as_u64().unwrap() > 0);
    assert!(r["scanned"].as_u64() >= r["premise_matched"].as_u64());
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&run(&["check", "reduced", "--name", "p14"]));
    let j = json(&run(&["check", "reduced", "--name", "p14", "--json"]));
    assert!(text.contains("reduced: true"));
    assert_eq!(j["verdict"]["answer"], true);

    let text = stdout(&run(&["scan", "conj-A", "--families"]));
    let j = json(&run(&["scan", "conj-A", "--families", "--format", "json"]));
    assert!(text.contains(j["verdict"].as_str().unwrap()));
}

#[test]
fn reduce_reports_preimages_and_round_trips() {
    let o = run(&["reduce", "--name", "blowup:petersen:K3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let g = parse_any(r["graph"].as_str().unwrap()).unwrap();
    assert!(are_isomorphic(&g, &petersen(), &Limits::default()).unwrap().is_some());
    assert_eq!(r["preimages"].as_array().unwrap().len(), 10);

    let dot = stdout(&run(&["reduce", "--name", "blowup:petersen:K3", "--format", "dot"]));
    assert!(dot.starts_with("graph") && dot.contains("subgraph"));
}

#[test]
fn fvalue_routes_agree_on_petersen() {
    let r = json(&run(&["fvalue", "--name", "petersen", "--json"]));
    assert_eq!((r["F"].as_u64(), r["F_tree_packing"].as_u64(), r["f"].as_i64()), (Some(3), Some(3), Some(3)));
}

#[test]
fn invariants_of_petersen() {
    let r = json(&run(&["invariants", "--name", "petersen", "--t", "3", "--json"]));
    assert_eq!(r["degree_profile"]["sigma2_bar"], 6);
    assert_eq!(r["degree_profile"]["sigma_t"]["3"], 9);
    assert_eq!(r["edge_connectivity"], 3);
    assert_eq!(r["girth"], 5);
    assert_eq!(r["matching"]["matching_number"], 5);
}

#[test]
fn pi_on_a_four_cycle_and_a_chorded_one() {
    let r = json(&run(&["pi", "--name", "cycle:4", "--cycle", "0,1,2,3", "--json"]));
    assert_eq!(r["e_pi"], serde_json::json!([0, 1]));
    let chord = run(&["pi", "--name", "k(4)", "--cycle", "0,1,2,3"]);
    assert_eq!(chord.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&chord.stderr).contains("chord"));
}

#[test]
fn validate_both_reconstructions() {
    for name in ["p14", "p16"] {
        let o = run(&["validate", name]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("validated"));
    }
}

#[test]
fn exit_codes_for_usage_and_limits() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm-9", "--enumerate", "3"]).status.code(), Some(2));
    assert_eq!(run(&["check", "supereulerian"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "nonsense"]).status.code(), Some(2));
    let limited = run(&["check", "collapsible", "--name", "p16", "--max-even-subsets", "10"]);
    assert_eq!(limited.status.code(), Some(3));
    let partition = run(&["fvalue", "--name", "p14"]);
    assert_eq!(partition.status.code(), Some(3));
}

#[test]
fn corpus_file_with_a_defect() {
    let dir = std::env::temp_dir().join(format!("supereuler-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    std::fs::write(&path, "IheA@GUAo\n# comment\nC~\nbroken!\n").unwrap();
    let r = json(&run(&["verify", "thm-H", "--file", path.to_str().unwrap(), "--json"]));
    assert_eq!(r["scanned"], 2);
    assert_eq!(r["defects"].as_array().unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn random_corpus_records_its_seed() {
    let a = json(&run(&["verify", "A-b", "--random", "30", "--connected", "--seed", "9", "--json"]));
    let b = json(&run(&["verify", "A-b", "--random", "30", "--connected", "--seed", "9", "--json"]));
    assert_eq!(a["seed"], 9);
    assert_eq!(a["premise_matched"], b["premise_matched"]);
    assert_eq!(a["counterexamples"], b["counterexamples"]);
}
