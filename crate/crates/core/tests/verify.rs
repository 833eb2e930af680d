use queer_schur::verify::{run, run_suite, Config, Suite};

#[test]
fn suite_names_round_trip() {
    for s in Suite::CONCRETE.iter().copied().chain([Suite::All]) {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("nope".parse::<Suite>().is_err());
}

#[test]
fn config_validation() {
    assert!(Config::new(0, 3).validate().is_err());
    assert!(Config::new(2, 0).validate().is_err());
    assert!(Config { sample: Some(0), ..Config::new(2, 2) }.validate().is_err());
    assert!(run_suite(Suite::All, &Config::new(2, 2)).is_err());
}

#[test]
fn reports_repeat_apart_from_timing() {
    let cfg = Config::new(2, 3);
    let strip = |mut reps: Vec<queer_schur::verify::SuiteReport>| {
        reps.iter_mut().for_each(|r| r.elapsed_ms = 0);
        reps
    };
    let a = strip(run(Suite::All, &cfg).unwrap());
    let b = strip(run(Suite::All, &cfg).unwrap());
    assert_eq!(a.len(), Suite::CONCRETE.len());
    assert!(a.iter().all(|r| r.passed()));
    assert_eq!(a, b);
}

#[test]
fn sampling_is_seeded() {
    let cfg = |seed| Config { sample: Some(50), seed, ..Config::new(2, 3) };
    let a = run_suite(Suite::Even, &cfg(3)).unwrap();
    let b = run_suite(Suite::Even, &cfg(3)).unwrap();
    assert!(a.sampled);
    assert_eq!(a.cases, 50);
    assert!(a.total > 50);
    assert_eq!((a.cases, a.total, a.failures.len()), (b.cases, b.total, b.failures.len()));
}
