//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recsym::boost::{boost_from_components, velocity_components};
use recsym::checker::{check_identity, run_search, IdentityReport, SampleConfig};
use recsym::{
    boost_from_velocity, einstein_add, massless_dirac, null_spinor, velocity_from_boost, Backend, GaussianRational,
    Scalar, Velocity3,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg(backend: Backend, count: usize) -> SampleConfig {
    SampleConfig { backend, count, ..SampleConfig::default() }
}

/// Runs identities and checks pass/zero residual (exact) or a relative bound (float).
fn identities(ids: &[&str], cfg: &SampleConfig, rel_bound: Option<f64>) -> Result<Vec<IdentityReport>, String> {
    let mut reports = Vec::new();
    for id in ids {
        let r = check_identity(id, cfg).map_err(|e| e.to_string())?;
        if !r.passed {
            return Err(format!("{id} [{}] failed: {:?}", r.backend, r.counterexample));
        }
        if r.samples_run != cfg.count {
            return Err(format!("{id} ran {} samples, wanted {}", r.samples_run, cfg.count));
        }
        match rel_bound {
            None if r.worst_abs_residual != 0.0 => return Err(format!("{id}: nonzero exact residual")),
            Some(bound) if r.worst_rel_residual > bound => {
                return Err(format!("{id}: worst relative residual {:.3e} > {bound:e}", r.worst_rel_residual))
            }
            _ => {}
        }
        reports.push(r);
    }
    Ok(reports)
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"));
    }
    Ok(format!("{detail} in {elapsed:.2?}"))
}

fn c1() -> Outcome {
    timed(Duration::from_secs(5), || {
        identities(&["eq05_qform_conj_le", "eq08_qform_conj_rs"], &cfg(Backend::Exact, 1000), None)?;
        Ok("conj products equal qform on 2x1000 exact samples".into())
    })
}

fn c2() -> Outcome {
    timed(Duration::from_secs(10), || {
        let ids = ["eq06_multiplicativity_le", "eq09_multiplicativity_rs"];
        identities(&ids, &cfg(Backend::Exact, 1000), None)?;
        let float = identities(&ids, &cfg(Backend::Float, 10_000), Some(1e-12))?;
        let worst = float.iter().map(|r| r.worst_rel_residual).fold(0.0, f64::max);
        Ok(format!("2x1000 exact with zero residual, 2x10000 float worst rel {worst:.2e}"))
    })
}

fn c3() -> Outcome {
    timed(Duration::from_secs(5), || {
        let ids = ["eq11_boost_unit", "eq12_invariance_le", "eq12_invariance_rs"];
        let float = identities(&ids, &cfg(Backend::Float, 1000), Some(1e-12))?;
        identities(&ids, &cfg(Backend::Exact, 1000), None)?;
        let worst = float.iter().map(|r| r.worst_rel_residual).fold(0.0, f64::max);
        Ok(format!("unit form and invariance on 1000 velocities, float worst rel {worst:.2e}, exact zero"))
    })
}

fn c4() -> Outcome {
    let r = check_identity("eq14_17_pauli_relations", &cfg(Backend::Exact, 1000)).map_err(|e| e.to_string())?;
    match (r.passed, r.samples_run, r.worst_abs_residual) {
        (true, 16, 0.0) => Ok("16 product relations exact".into()),
        _ => Err(format!("{r:?}")),
    }
}

fn c5() -> Outcome {
    timed(Duration::from_secs(5), || {
        identities(&["eq18_homomorphism"], &cfg(Backend::Exact, 1000), None)?;
        Ok("matrix product equals embedded composition on 1000 exact samples".into())
    })
}

fn c6() -> Outcome {
    identities(&["det_equals_qform"], &cfg(Backend::Exact, 1000), None)?;
    Ok("det(embed A) = qform A on 1000 exact samples".into())
}

fn c7() -> Outcome {
    let c = cfg(Backend::Exact, 1000);
    if !c.complex_components {
        return Err("sampler not drawing complex components".into());
    }
    identities(&["eq22_cross_term"], &c, None)?;
    Ok("scalar B.C and vector i BxC on 1000 complex exact samples".into())
}

fn c8() -> Outcome {
    identities(&["le_coplanarity", "rs_cross_term_exact"], &cfg(Backend::Exact, 1000), None)?;
    Ok("AxB coefficient is 0 under le and i under rs on 1000 real pairs".into())
}

fn c9() -> Outcome {
    let r = check_identity("velocity_addition_oracle", &cfg(Backend::Float, 1000)).map_err(|e| e.to_string())?;
    if !r.passed || r.worst_abs_residual > 1e-10 {
        return Err(format!("worst abs {:.3e}: {:?}", r.worst_abs_residual, r.counterexample));
    }
    let u = Velocity3::new(0.6, 0.0, 0.0);
    let composed = boost_from_velocity(u).and_then(|b| b.le_compose(&b)).and_then(|q| velocity_from_boost(&q));
    let w = composed.map_err(|e| e.to_string())?;
    let float_err = (w.0[0] - 15.0 / 17.0).abs().max(w.0[1].abs()).max(w.0[2].abs());
    if float_err > 1e-12 {
        return Err(format!("0.6 (+) 0.6 = {:?}, off by {float_err:.2e}", w.0));
    }
    let einstein = einstein_add(u, u).map_err(|e| e.to_string())?;
    if (einstein.0[0] - 15.0 / 17.0).abs() > 1e-12 {
        return Err(format!("einstein_add(0.6, 0.6) = {:?}", einstein.0));
    }
    let three_fifths = GaussianRational::from_ratio(3, 5);
    let v = [three_fifths, GaussianRational::zero(), GaussianRational::zero()];
    let b = boost_from_components(&v).map_err(|e| e.to_string())?;
    let exact = velocity_components(&b.le_compose(&b).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if exact[0] != GaussianRational::from_ratio(15, 17) {
        return Err(format!("exact 3/5 (+) 3/5 = {}", exact[0]));
    }
    Ok(format!(
        "1000 pairs within {:.2e} abs of einstein_add; 0.6 (+) 0.6 = 15/17 exactly, float err {float_err:.1e}",
        r.worst_abs_residual
    ))
}

fn c10() -> Outcome {
    let c = cfg(Backend::Exact, 1000);
    let mut lines = Vec::new();
    for (id, expect) in [
        ("rs_associativity", false),
        ("le_associativity", true),
        ("le_commutativity", true),
        ("rs_commutativity", true),
        ("le_cross_term_presence", false),
    ] {
        let r = run_search(id, &c).map_err(|e| e.to_string())?;
        if r.witness_found != expect || !r.matches_expectation {
            return Err(format!("{id}: witness_found = {}", r.witness_found));
        }
        lines.push(match &r.witness {
            Some(w) => format!("{id} witness at {}", w.stream_position),
            None => format!("{id} none in {}", r.samples_run),
        });
    }
    let status = Command::new(env!("CARGO_BIN_EXE_recsym"))
        .args(["search", "--id", "rs_associativity", "--count", "1000"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    if status.code() != Some(0) {
        return Err(format!("search subcommand exited with {status}"));
    }
    Ok(lines.join("; "))
}

fn c11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    let mut directions = 0;
    while directions < 100 {
        let p = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0f64)];
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(0.1..=1.0).contains(&norm) {
            continue;
        }
        let magnitude = rng.random_range(0.5..5.0);
        let p = p.map(|x| x / norm * magnitude);
        let psi = null_spinor(p).map_err(|e| e.to_string())?;
        let energy = Complex64::new(magnitude, 0.0);
        let pc = p.map(|x| Complex64::new(x, 0.0));
        let residual = massless_dirac(&energy, &pc).apply(&psi).max_modulus();
        worst = worst.max(residual);
        directions += 1;
    }
    if worst > 1e-12 {
        return Err(format!("worst residual {worst:.3e}"));
    }
    Ok(format!("100 directions, worst residual {worst:.2e}"))
}

fn c12() -> Outcome {
    let cases: [(&[&str], Option<&str>); 3] = [
        (&["eval", "qform(le((1;1,0,0),(13;0,0,5)))"], Some("0\n")),
        (&["boost", "0.6", "0", "0"], Some("(1.25; 0.75, 0, 0)\nqform = 1\n")),
        (&["check", "--id", "eq18_homomorphism", "--backend", "exact", "--count", "1000"], None),
    ];
    for (args, stdout) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_recsym")).args(args).output().map_err(|e| e.to_string())?;
        if out.status.code() != Some(0) {
            return Err(format!("{args:?} exited with {}", out.status));
        }
        if let Some(expected) = stdout {
            let got = String::from_utf8_lossy(&out.stdout);
            if got != expected {
                return Err(format!("{args:?} printed {got:?}, expected {expected:?}"));
            }
        }
    }
    Ok("eval, boost and check examples match with exit 0".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("conjugate product equals quadratic form", c1),
        ("multiplicativity", c2),
        ("boost unit form and invariance", c3),
        ("Pauli product relations", c4),
        ("Pauli homomorphism", c5),
        ("determinant equals quadratic form", c6),
        ("spin cross term", c7),
        ("coplanarity of le products", c8),
        ("velocity addition oracle", c9),
        ("counterexample searches", c10),
        ("null spinor residual", c11),
        ("CLI conformance", c12),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
