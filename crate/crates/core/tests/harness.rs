use funcgraph::hyper3::{self, fixtures, StructureKind};
use funcgraph::verify::{self, Config, Target};
use funcgraph::{families, Error};

#[test]
fn every_target_passes_a_short_run() {
    for target in Target::ALL {
        let cfg = Config {
            seed: 11,
            cases: Some(4),
            recheck: true,
            ..Config::default()
        };
        let report = verify::run(target, &cfg).unwrap();
        assert!(report.pass, "{target}: {:?}", report.first_failure());
        assert_eq!(report.results.len(), report.cases);
        let order: Vec<usize> = report.results.iter().map(|c| c.case).collect();
        assert_eq!(order, (0..report.cases).collect::<Vec<_>>());
    }
}

#[test]
fn reports_do_not_depend_on_scheduling() {
    let cfg = Config {
        seed: 99,
        cases: Some(12),
        ..Config::default()
    };
    let a = verify::run(Target::SdLink, &cfg).unwrap();
    let b = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| verify::run(Target::SdLink, &cfg).unwrap());
    assert_eq!(a, b);
}

#[test]
fn zero_cases_is_rejected() {
    let cfg = Config {
        cases: Some(0),
        ..Config::default()
    };
    assert!(matches!(
        verify::run(Target::Hypercube, &cfg),
        Err(Error::OutOfRange { .. })
    ));
}

#[test]
fn fixtures_yield_their_structures() {
    for (h, kind) in [
        (fixtures::fly(), StructureKind::Fly),
        (fixtures::windmill(), StructureKind::Windmill),
        (fixtures::broken_windmill(), StructureKind::BrokenWindmill),
    ] {
        let t = hyper3::witness_thick(&h).unwrap();
        assert_eq!(t.structure.kind, kind);
        assert!(t.structure.verify(&h, hyper3::THICK_THRESHOLD));
        assert!(t.witness.f.len() <= hyper3::THICK_BOUND);
        let r = hyper3::hyper3_fun_bound(&h).unwrap();
        assert!(r.pass);
        assert_eq!(r.kind, Some(kind));
    }
}

#[test]
fn sparse_hypergraphs_take_the_no_thick_route() {
    let h = families::random_3_hypergraph(40, 50, 3).unwrap();
    assert!(hyper3::thick_pairs(&h, hyper3::THICK_THRESHOLD).is_empty());
    let all = hyper3::witness_no_thick_all(&h).unwrap();
    assert_eq!(all.len(), 50);
    assert!(all
        .iter()
        .all(|w| w.f.len() <= hyper3::NO_THICK_BOUND && !w.f1_over_bound));
    assert!(matches!(hyper3::witness_thick(&h), Err(Error::Precondition(_))));
}
