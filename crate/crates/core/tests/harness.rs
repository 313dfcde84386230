use proptest::prelude::*;
use supereuler::blowup::{blow_up, BlowUpSpec, Replacement};
use supereuler::harness::corpus::ingest_reader;
use supereuler::harness::{
    enumerate_small_graphs, registry, scan_conjecture, verify_statement, CorpusEntry, EnumerationFilter,
    StatementKind,
};
use supereuler::io::emit_graph6;
use supereuler::named::{cycle, p14, p16, petersen};
use supereuler::oracle::{is_collapsible, is_reduced};
use supereuler::{Corpus, Limits, MultiGraph};

fn theorem_corpus() -> Corpus {
    let mut c = Corpus::enumerated(6, &EnumerationFilter::connected()).unwrap();
    c.extend(Corpus::from_graphs("named", vec![petersen(), p14(), p16()]));
    c.extend(Corpus::bipartite_cubic_y(5, 5, None, 0).unwrap());
    c.extend(Corpus::bipartite_cubic_y(6, 6, Some(40), 7).unwrap());
    c.extend(Corpus::random(200, (4, 9), (0.2, 0.6), true, 11).unwrap());
    c
}

/// No reduced graph in these corpora has order 15 or a qualifying bipartite
/// split.
const VACUOUS: [&str; 5] = ["F-c", "lemma-3.2", "thm-3.3-a", "thm-3.3-b", "thm-3.3-c"];

#[test]
fn every_theorem_holds_on_the_standard_corpora() {
    let corpus = theorem_corpus();
    let limits = Limits::default();
    let families = Corpus::blow_up_families().unwrap();
    for st in registry().iter().filter(|s| s.kind == StatementKind::Theorem) {
        let target = if st.id == "thm-4.1-extremal" { &families } else { &corpus };
        let r = verify_statement(st.id, target, &limits).unwrap();
        assert!(r.is_consistent(), "{}", st.id);
        assert!(r.counterexamples.is_empty(), "{}: {:?}", st.id, r.counterexamples);
        for b in &r.budget_exceeded {
            assert!(
                matches!(b.provenance.as_str(), "p14" | "p16") && b.reason.contains("partition order"),
                "{}: {:?}",
                st.id,
                b
            );
        }
        if VACUOUS.contains(&st.id) {
            assert!(r.verdict.starts_with("vacuous"), "{}: {}", st.id, r.verdict);
        } else {
            assert!(r.premise_matched > 0, "{} is vacuous on the standard corpora", st.id);
        }
    }
}

fn heawood() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            edges.push((i, (i + 5) % 14));
        }
    }
    MultiGraph::from_edges(14, &edges).unwrap()
}

#[test]
fn small_bipartite_classes_have_no_reduced_member() {
    let l = Limits::default();
    let c = Corpus::bipartite_cubic_y(5, 5, None, 0).unwrap();
    assert!(!c.is_empty());
    assert!(c.items.iter().all(|i| !is_reduced(&i.graph, &l).unwrap().answer));
    let h = heawood();
    assert!(is_collapsible(&h, &l).unwrap().answer);
    let r = verify_statement("thm-3.3-a", &Corpus::from_graphs("heawood", vec![h]), &l).unwrap();
    assert_eq!(r.premise_matched, 0);
}

#[test]
fn connected_enumeration_counts() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_small_graphs(n, &EnumerationFilter::connected()).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn ingest_reports_defects_and_continues() {
    let mut text = String::from("# corpus\n\n");
    let c4 = emit_graph6(&cycle(4).unwrap()).unwrap();
    for i in 0..10 {
        if i == 6 {
            text.push_str("not a graph\n");
        } else {
            text.push_str(&c4);
            text.push('\n');
        }
    }
    let entries: Vec<CorpusEntry> = ingest_reader(text.as_bytes(), "inline").collect();
    let c = Corpus::from_entries("inline", entries);
    assert_eq!((c.len(), c.defects.len()), (9, 1));
    assert_eq!(c.defects[0].line, 9);
    assert!(c.items.iter().all(|i| i.graph.order() == 4 && i.graph.size() == 4));
    let r = verify_statement("thm-H", &c, &Limits::default()).unwrap();
    assert_eq!((r.scanned, r.defects.len()), (9, 1));

    let empty = Corpus::from_entries("empty", ingest_reader(&b""[..], "empty"));
    assert_eq!(verify_statement("E-b", &empty, &Limits::default()).unwrap().scanned, 0);
}

#[test]
fn conjecture_b_on_named_and_mixed_blow_ups() {
    let reps: Vec<Replacement> = (0..10)
        .map(|i| if i % 2 == 0 { Replacement::complete(2) } else { Replacement::complete(3) })
        .collect();
    let mixed = blow_up(&BlowUpSpec::with_round_robin(petersen(), reps)).unwrap();
    let c = Corpus::from_graphs("named+mixed", vec![petersen(), p14(), p16(), mixed]);
    let r = scan_conjecture("conj-B", &c, &Limits::default()).unwrap();
    // A K2 blob at a cubic vertex leaves a vertex of degree 2.
    assert_eq!((r.premise_matched, r.counterexamples.len()), (3, 0));
    assert!(r.verdict.starts_with("no counterexample in corpus"));

    let c4 = Corpus::from_graphs("c4", vec![cycle(4).unwrap()]);
    assert_eq!(scan_conjecture("conj-B", &c4, &Limits::default()).unwrap().premise_matched, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reports_are_deterministic_and_consistent(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let id = ids[pick.index(ids.len())];
        let c = Corpus::random(40, (1, 8), (0.2, 0.8), false, seed).unwrap();
        let a = verify_statement(id, &c, &Limits::default()).unwrap();
        let b = verify_statement(id, &c, &Limits::default()).unwrap();
        prop_assert_eq!(a.to_json_without_time(), b.to_json_without_time());
        prop_assert!(a.is_consistent());
        prop_assert_eq!(a.seed, Some(seed));
        prop_assert!(a.premise_matched + a.budget_exceeded.len() <= a.scanned);
    }
}
