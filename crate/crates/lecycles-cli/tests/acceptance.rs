//! Acceptance suite: drives the shipped corpus end to end and prints one
//! pass/fail line per criterion.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num::Zero;
use serde_json::Value;

use lecycles::lenum::{le_number, milnor_number, slice_milnor};
use lecycles::oracle::weighted_homogeneous_milnor;
use lecycles::pipeline::{build_polar_tower, gamma_s_is_zero, Germ};
use lecycles::poly::{parse, Frame, Rational, Ring};
use lecycles_cli::corpus::{load_entry, CorpusEntry};
use lecycles_cli::run::cmd_corpus;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn load_corpus() -> Vec<CorpusEntry> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|r| r.ok())
        .map(|d| d.path())
        .filter(|p| p.extension().is_some_and(|e| e == "corpus"))
        .collect();
    files.sort();
    files.iter().map(|p| load_entry(p).unwrap()).collect()
}

fn origin(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

fn entry_germ(e: &CorpusEntry) -> Germ {
    Germ::new(&e.ring, e.f.clone(), Some(e.expected_s)).unwrap()
}

type Reports = BTreeMap<String, Value>;

fn read_reports(dir: &Path) -> Reports {
    let mut out = BTreeMap::new();
    for entry in std::fs::read_dir(dir).unwrap().filter_map(|r| r.ok()) {
        let path = entry.path();
        if path.extension().is_some_and(|e| e == "json") {
            let name = path.file_stem().unwrap().to_str().unwrap().to_string();
            let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
            out.insert(name, v);
        }
    }
    out
}

fn payload<'a>(report: &'a Value) -> &'a Value {
    &report["payload"]
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn ok() -> Outcome {
    Outcome {
        ok: true,
        detail: String::new(),
    }
}

fn fail(detail: String) -> Outcome {
    Outcome { ok: false, detail }
}

/// 1. Milnor numbers of >= 10 weighted-homogeneous isolated germs match
/// the independent product formula.
fn criterion_1() -> Outcome {
    let cases: [(&[&str], &str, &[u64], u64); 11] = [
        (&["x", "y"], "x^2 + y^2", &[1, 1], 2),
        (&["x", "y"], "x^3 + y^3", &[1, 1], 3),
        (&["x", "y"], "x^2 + y^3", &[3, 2], 6),
        (&["x", "y"], "x^2 + y^5", &[5, 2], 10),
        (&["x", "y"], "x^2 + y^7", &[7, 2], 14),
        (&["x", "y"], "x^3 + y^4", &[4, 3], 12),
        (&["x", "y"], "x^4 + y^4", &[1, 1], 4),
        (&["x", "y", "z"], "x^2 + y^2 + z^2", &[1, 1, 1], 2),
        (&["x", "y", "z"], "x^3 + y^3 + z^3", &[1, 1, 1], 3),
        (&["x", "y", "z"], "x^2 + y^3 + z^3", &[3, 2, 2], 6),
        (&["x", "y", "z"], "x^2 + y^3 + z^5", &[15, 10, 6], 30),
    ];
    for (vars, f, weights, degree) in cases {
        let ring = Ring::new(vars).unwrap();
        let germ = Germ::new(&ring, parse(f, &ring).unwrap(), None).unwrap();
        let got = match milnor_number(&germ, &origin(vars.len())) {
            Ok(m) => m,
            Err(e) => return fail(format!("{f}: {e}")),
        };
        let want = weighted_homogeneous_milnor(weights, degree).unwrap();
        if got != want {
            return fail(format!("{f}: milnor {got} != formula {want}"));
        }
    }
    ok()
}

/// 2. lambda^0(0) = mu(0) on every isolated-singularity entry.
fn criterion_2(entries: &[CorpusEntry]) -> Outcome {
    let mut seen = 0;
    for e in entries.iter().filter(|e| e.expected_s == 0) {
        seen += 1;
        let germ = entry_germ(e);
        let n = e.ring.num_vars();
        let tower = build_polar_tower(&germ, &Frame::identity(n)).unwrap();
        let mu = milnor_number(&germ, &origin(n)).unwrap();
        let lambda0 = le_number(&tower, 0, &origin(n)).unwrap();
        if mu != lambda0 {
            return fail(format!("{}: lambda^0 {lambda0} != mu {mu}", e.name));
        }
    }
    if seen < 3 {
        return fail(format!("only {seen} isolated entries"));
    }
    ok()
}

/// 3. The intersection identity holds exactly at the origin and at >= 3
/// declared sample points of every family entry.
fn criterion_3(entries: &[CorpusEntry], reports: &Reports) -> Outcome {
    for e in entries.iter().filter(|e| e.expected_s >= 1) {
        if e.samples.len() < 3 {
            return fail(format!("{}: only {} samples", e.name, e.samples.len()));
        }
        let p = payload(&reports[&e.name]);
        let daggers = p["dagger"].as_array().unwrap();
        if daggers.len() != e.samples.len() + 1 {
            return fail(format!("{}: {} dagger records", e.name, daggers.len()));
        }
        if let Some(bad) = daggers.iter().find(|d| d["ok"] != Value::Bool(true)) {
            return fail(format!("{}: dagger failed: {bad}", e.name));
        }
    }
    ok()
}

/// 4. The four criteria agree on every entry; >= 3 mu-constant and >= 3
/// non-mu-constant families carry pinned booleans, and every pinned
/// expectation matched (corpus exit code 0).
fn criterion_4(entries: &[CorpusEntry], reports: &Reports, corpus_exit: i32) -> Outcome {
    if corpus_exit != 0 {
        return fail(format!("corpus run exited {corpus_exit}"));
    }
    let mut mu_const = 0;
    let mut non_mu_const = 0;
    for e in entries {
        let p = payload(&reports[&e.name]);
        let c = &p["criteria"];
        if c["consistent"] != Value::Bool(true) {
            return fail(format!("{}: criteria not consistent", e.name));
        }
        if !p["mismatches"].as_array().unwrap().is_empty() {
            return fail(format!("{}: mismatches {}", e.name, p["mismatches"]));
        }
        if e.expected_s >= 1 {
            match e.expect.c1 {
                Some(true) => mu_const += 1,
                Some(false) => non_mu_const += 1,
                None => return fail(format!("{}: booleans not pinned", e.name)),
            }
        }
    }
    if mu_const < 3 || non_mu_const < 3 {
        return fail(format!(
            "{mu_const} mu-constant / {non_mu_const} non-mu-constant pinned families"
        ));
    }
    ok()
}

/// 5. Gamma^s = 0 forces lambda^k(0) = 0 for all k < s, across the corpus.
fn criterion_5(entries: &[CorpusEntry], reports: &Reports) -> Outcome {
    for e in entries {
        let p = payload(&reports[&e.name]);
        if p["criteria"]["c5_gamma_zero"] != Value::Bool(true) {
            continue;
        }
        let s = p["s"].as_u64().unwrap() as usize;
        let lambdas = p["origin_profile"]["lambdas"].as_array().unwrap();
        for k in 0..s {
            if lambdas[k] != Value::from(0u64) {
                return fail(format!("{}: lambda^{k} = {} != 0", e.name, lambdas[k]));
            }
        }
    }
    ok()
}

/// 6. Main-theorem scenario: positive run certified on the s = 2 constant
/// family with a point Y; the negative family surfaces the sampling caveat.
fn criterion_6(reports: &Reports) -> Outcome {
    let positive = payload(&reports["plane-a1"]);
    let mt = &positive["main_theorem"];
    if mt["hypothesis_surrogate"] != Value::Bool(true)
        || mt["implication_ok"] != Value::Bool(true)
        || mt["conclusion"]["mu0"] != Value::from(1u64)
        || mt["y_dimension_ok"] != Value::Bool(true)
    {
        return fail(format!("plane-a1 main theorem: {mt}"));
    }
    let negative = payload(&reports["jump-folium"]);
    let mt = &negative["main_theorem"];
    let caveats = mt["caveats"].as_array().unwrap();
    let violated = caveats
        .iter()
        .any(|c| c.as_str().unwrap().starts_with("VIOLATED-AT-SURROGATE-LEVEL"));
    let sampling_only = caveats
        .iter()
        .any(|c| c.as_str().unwrap().starts_with("SAMPLING-ONLY"));
    if mt["hypothesis_surrogate"] != Value::Bool(true)
        || mt["implication_ok"] != Value::Bool(false)
        || !violated
        || !sampling_only
    {
        return fail(format!("jump-folium main theorem: {mt}"));
    }
    ok()
}

/// 7. Generic Le number is stable across the two seed batches on every
/// entry, and lambda^s of each admissible frame dominates the generic value
/// on representative entries.
fn criterion_7(entries: &[CorpusEntry], reports: &Reports) -> Outcome {
    for e in entries {
        let p = payload(&reports[&e.name]);
        if p["criteria"]["generic_le"]["stable"] != Value::Bool(true) {
            return fail(format!("{}: generic Le not stable across batches", e.name));
        }
    }
    for name in ["line-a2", "jump-folium", "plane-a1"] {
        let e = entries.iter().find(|e| e.name == name).unwrap();
        let p = payload(&reports[name]);
        let generic = p["criteria"]["generic_le"]["value"].as_u64().unwrap() as usize;
        let germ = entry_germ(e);
        let n = e.ring.num_vars();
        for &seed in &e.seeds {
            let frame = Frame::random(n, seed, 7);
            let tower = match build_polar_tower(&germ, &frame) {
                Ok(t) => t,
                Err(_) => continue,
            };
            match le_number(&tower, tower.s(), &origin(n)) {
                Ok(v) if v < generic => {
                    return fail(format!("{name} seed {seed}: lambda^s {v} < generic {generic}"));
                }
                _ => {}
            }
        }
    }
    ok()
}

/// 8. mu0 and the criteria booleans are invariant under 3 random
/// invertible frames per entry.
fn criterion_8(entries: &[CorpusEntry], reports: &Reports) -> Outcome {
    let results: Vec<Result<(), String>> = entries
        .iter()
        .map(|e| {
            let p = payload(&reports[&e.name]);
            let mu0 = p["criteria"]["mu0"].as_u64().unwrap() as usize;
            let c5 = p["criteria"]["c5_gamma_zero"] == Value::Bool(true);
            let germ = entry_germ(e);
            let n = e.ring.num_vars();
            let mut seen = 0;
            for seed in 41..=52u64 {
                if seen == 3 {
                    break;
                }
                let frame = Frame::random(n, seed, 7);
                let tower = match build_polar_tower(&germ, &frame) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let mu = match slice_milnor(&tower, &origin(n)) {
                    Ok(m) => m,
                    Err(_) => continue,
                };
                seen += 1;
                if mu != mu0 {
                    return Err(format!("{} seed {seed}: mu {mu} != {mu0}", e.name));
                }
                let frame_c5 = gamma_s_is_zero(&tower)
                    .map_err(|err| format!("{} seed {seed}: {err}", e.name))?;
                if frame_c5 != c5 {
                    return Err(format!("{} seed {seed}: c5 flipped", e.name));
                }
                for q in &e.samples {
                    let sample_mu = slice_milnor(&tower, q)
                        .map_err(|err| format!("{} seed {seed}: {err}", e.name))?;
                    let reference = slice_milnor(
                        &build_polar_tower(&germ, &Frame::identity(n)).unwrap(),
                        q,
                    )
                    .map_err(|err| format!("{}: {err}", e.name))?;
                    if sample_mu != reference {
                        return Err(format!(
                            "{} seed {seed}: sample mu {sample_mu} != {reference}",
                            e.name
                        ));
                    }
                }
            }
            if seen < 3 {
                return Err(format!("{}: only {seen} admissible frames", e.name));
            }
            Ok(())
        })
        .collect();
    for r in results {
        if let Err(d) = r {
            return fail(d);
        }
    }
    ok()
}

/// 9. Two corpus runs with identical seeds produce byte-identical
/// comparison payloads.
fn criterion_9(dir_a: &Path, dir_b: &Path) -> Outcome {
    let a = read_reports(dir_a);
    let b = read_reports(dir_b);
    if a.keys().collect::<Vec<_>>() != b.keys().collect::<Vec<_>>() {
        return fail("report sets differ".into());
    }
    for (name, ra) in &a {
        let rb = &b[name];
        let pa = serde_json::to_string(payload(ra)).unwrap();
        let pb = serde_json::to_string(payload(rb)).unwrap();
        if pa != pb {
            return fail(format!("{name}: payloads differ"));
        }
    }
    ok()
}

#[test]
fn acceptance() {
    let entries = load_corpus();
    assert!(entries.len() >= 12, "corpus has {} entries", entries.len());

    let base = std::env::temp_dir().join(format!("lecycles-acceptance-{}", std::process::id()));
    let dir_a = base.join("a");
    let dir_b = base.join("b");
    let exit_a = cmd_corpus(&corpus_dir(), None, None, Some(&dir_a)).unwrap();
    let exit_b = cmd_corpus(&corpus_dir(), None, None, Some(&dir_b)).unwrap();
    assert_eq!(exit_b, exit_a);
    let reports = read_reports(&dir_a);

    let outcomes = [
        ("milnor oracle suite", criterion_1()),
        ("s = 0 degeneration", criterion_2(&entries)),
        ("intersection identity at samples", criterion_3(&entries, &reports)),
        ("criteria equivalence", criterion_4(&entries, &reports, exit_a)),
        ("gamma zero forces lower vanishing", criterion_5(&entries, &reports)),
        ("main theorem scenarios", criterion_6(&reports)),
        ("generic stability", criterion_7(&entries, &reports)),
        ("frame invariance", criterion_8(&entries, &reports)),
        ("determinism", criterion_9(&dir_a, &dir_b)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in outcomes.iter().enumerate() {
        if outcome.ok {
            println!("acceptance criterion {} ({name}): PASS", i + 1);
        } else {
            println!(
                "acceptance criterion {} ({name}): FAIL - {}",
                i + 1,
                outcome.detail
            );
            failed += 1;
        }
    }
    std::fs::remove_dir_all(&base).ok();
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
