use recsym::checker::{check_identity, run_search, IdentityReport, SampleConfig};
use recsym::Backend;

fn cfg(seed: u64, backend: Backend) -> SampleConfig {
    SampleConfig { seed, backend, count: 60, ..SampleConfig::default() }
}

fn stable_json(mut report: IdentityReport) -> String {
    report.elapsed_ms = 0.0;
    serde_json::to_string(&report).unwrap()
}

#[test]
fn same_seed_same_report() {
    for backend in [Backend::Exact, Backend::Float] {
        for id in ["eq09_multiplicativity_rs", "eq12_invariance_le", "velocity_addition_oracle"] {
            let a = stable_json(check_identity(id, &cfg(7, backend)).unwrap());
            let b = stable_json(check_identity(id, &cfg(7, backend)).unwrap());
            assert_eq!(a, b, "{id} [{backend}]");
        }
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| stable_json(check_identity("eq06_multiplicativity_le", &cfg(3, Backend::Float)).unwrap()))
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn different_seeds_draw_different_samples() {
    let a = check_identity("eq09_multiplicativity_rs", &cfg(1, Backend::Float)).unwrap();
    let b = check_identity("eq09_multiplicativity_rs", &cfg(2, Backend::Float)).unwrap();
    assert_ne!(a.worst_rel_residual, b.worst_rel_residual);
}

#[test]
fn search_witness_is_reproducible() {
    let a = run_search("le_associativity", &cfg(11, Backend::Exact)).unwrap();
    let b = run_search("le_associativity", &cfg(11, Backend::Exact)).unwrap();
    assert_eq!(
        serde_json::to_value(&a.witness).unwrap(),
        serde_json::to_value(&b.witness).unwrap()
    );
}

#[test]
fn report_fields_are_in_documented_order() {
    let json = serde_json::to_string(&check_identity("det_equals_qform", &cfg(0, Backend::Exact)).unwrap()).unwrap();
    let keys = [
        "identity_id",
        "backend",
        "seed",
        "samples_run",
        "passed",
        "vacuous",
        "worst_abs_residual",
        "worst_rel_residual",
        "outside_regime_samples",
        "counterexample",
        "elapsed_ms",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{json}");
}
