use interval_complex::harness::{run_suite, SuiteId, SuiteParams, SuiteReport};
use interval_complex::predicates::{holds, is_under_closed_def, Predicate};
use interval_complex::{delta_d, Graph, Labeling};

fn params(id: SuiteId, n_max: usize) -> SuiteParams {
    SuiteParams {
        n_max,
        seed: Some(11),
        samples: 24,
        ..id.default_params()
    }
}

fn comparable(r: &SuiteReport) -> serde_json::Value {
    let mut v = serde_json::to_value(r).unwrap();
    v["elapsed_ms"] = serde_json::Value::Null;
    v
}

/// `(graph, d, labeling)` from a failure dump.
fn replay(dump: &str) -> (Graph, usize, Option<Labeling>) {
    let g = Graph::parse(dump).unwrap();
    let mut d = None;
    let mut l = None;
    for line in dump.lines() {
        if let Some(rest) = line.strip_prefix("# d ") {
            d = Some(rest.trim().parse().unwrap());
        }
        if let Some(rest) = line.strip_prefix("# labeling ") {
            l = Some(rest.parse().unwrap());
        }
    }
    (g, d.expect("dump carries d"), l)
}

#[test]
fn small_domains_pass() {
    for (id, n) in [
        (SuiteId::UnitEquiv123, 4),
        (SuiteId::StarTheorem, 4),
        (SuiteId::ClosedIsProper, 5),
        (SuiteId::StrongImpliesUc, 4),
        (SuiteId::Monotone, 5),
        (SuiteId::IntervalTheoremA, 5),
        (SuiteId::Forbidden, 5),
        (SuiteId::UnitImpliesChordalComplex, 5),
        (SuiteId::Cycles, 7),
        (SuiteId::Forests, 6),
        (SuiteId::Corona, 8),
    ] {
        let r = run_suite(id, &params(id, n)).unwrap();
        assert!(r.instances > 0, "{id}");
        assert!(r.passed, "{id}: {:?}", r.failures.first());
    }
}

#[test]
fn reports_are_reproducible_and_thread_independent() {
    for id in [SuiteId::Cycles, SuiteId::UnderClosedEquiv, SuiteId::Corona, SuiteId::SortableEquiv] {
        let p = params(id, if id == SuiteId::Corona { 8 } else { 4 });
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let three = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
        let a = one.install(|| run_suite(id, &p)).unwrap();
        let b = three.install(|| run_suite(id, &p)).unwrap();
        let c = run_suite(id, &p).unwrap();
        assert_eq!(comparable(&a), comparable(&b), "{id}");
        assert_eq!(comparable(&a), comparable(&c), "{id}");
    }
}

#[test]
fn mutation_is_detected_and_replays() {
    let mut p = params(SuiteId::Cycles, 7);
    p.mutation = true;
    let r = run_suite(SuiteId::Cycles, &p).unwrap();
    assert!(r.failure_count > 0);
    for f in r.failures.iter().filter(|f| f.check == "under-closed-vs-d>=n-2") {
        let (g, d, _) = replay(&f.instance);
        let c = delta_d(&g, d).unwrap();
        let mutated = Labeling::all(g.n()).any(|l| holds(Predicate::MutatedUnderClosed, &c.relabel(&l).unwrap()));
        let real = Labeling::all(g.n()).any(|l| holds(Predicate::UnderClosed, &c.relabel(&l).unwrap()));
        assert!(mutated && !real);
    }
}

#[test]
fn under_closed_failures_are_definition_false_local_true() {
    let r = run_suite(SuiteId::UnderClosedEquiv, &params(SuiteId::UnderClosedEquiv, 4)).unwrap();
    assert!(r.instances > 0);
    // The local form is strictly weaker per labeling; every failure must go that way.
    assert!(r.failure_count > 0);
    for f in &r.failures {
        let (g, d, l) = replay(&f.instance);
        let h = delta_d(&g, d).unwrap().relabel(&l.unwrap()).unwrap();
        assert!(!is_under_closed_def(&h));
        assert!(holds(Predicate::UnderClosed, &h));
    }
}

#[test]
fn failure_storage_is_capped_but_counted() {
    let r = run_suite(SuiteId::SortableEquiv, &params(SuiteId::SortableEquiv, 5)).unwrap();
    assert!(r.failure_count as usize > r.failures.len());
    assert_eq!(r.failures.len(), interval_complex::harness::MAX_STORED_FAILURES);
    let by_check: u64 = r.checks.values().map(|c| c.failed).sum();
    assert_eq!(by_check, r.failure_count);
}

#[test]
fn guards_and_params_are_validated() {
    let mut p = SuiteId::Forbidden.default_params();
    p.n_max = 9;
    assert!(run_suite(SuiteId::Forbidden, &p).is_err());
    let mut p = SuiteId::Cycles.default_params();
    p.d_min = 0;
    assert!(run_suite(SuiteId::Cycles, &p).is_err());
}

#[test]
fn labeled_and_reduced_enumeration_agree_on_existential_suites() {
    for id in [SuiteId::ClosedIsProper, SuiteId::Forbidden] {
        let mut labeled = params(id, 5);
        labeled.labeled_up_to = 5;
        let mut reduced = labeled.clone();
        reduced.labeled_up_to = 0;
        let a = run_suite(id, &labeled).unwrap();
        let b = run_suite(id, &reduced).unwrap();
        assert!(a.passed && b.passed, "{id}");
        assert!(a.instances > b.instances);
    }
}
