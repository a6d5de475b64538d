//! Command implementations: one corpus entry in, JSON report (and exit
//! code) out.

use std::path::{Path, PathBuf};
use std::time::Instant;

use num::Zero;
use serde::Serialize;

use lecycles::checker::{evaluate_criteria, run_main_theorem, MainTheoremRun, Verdict};
use lecycles::lenum::{
    admissible_random_tower, dagger_check, generic_le_number, le_profile, milnor_number,
    slice_milnor, DaggerCheck, LeProfile,
};
use lecycles::oracle;
use lecycles::pipeline::{
    build_polar_tower, gamma_s_is_zero, jacobian, sigma_smooth_at_origin, Germ, PolarTower,
    SmoothCertificate,
};
use lecycles::poly::{Frame, Polynomial, Rational};
use lecycles::{Error, Result};

use crate::corpus::{parse_cli_point, CorpusEntry, FrameSpec};
use crate::report::{echo, render, write_atomic, EntryEcho};

const ORACLE_CAP: u32 = 24;

fn germ_of(entry: &CorpusEntry, check_s: bool) -> Result<Germ> {
    let expected = if check_s { Some(entry.expected_s) } else { None };
    Germ::new(&entry.ring, entry.f.clone(), expected)
}

/// Resolves the entry's frame policy: identity, or the first admissible
/// random frame from the seed list (`--seed`/`LECYCLE_SEED` prepended).
fn tower_of(entry: &CorpusEntry, germ: &Germ, seed: Option<u64>) -> Result<PolarTower> {
    match entry.frame {
        FrameSpec::Identity => build_polar_tower(germ, &Frame::identity(entry.ring.num_vars())),
        FrameSpec::Random => {
            let mut seeds = Vec::new();
            if let Some(s) = seed {
                seeds.push(s);
            }
            seeds.extend(&entry.seeds);
            if seeds.is_empty() {
                return Err(Error::Input(
                    "random frame needs --seed, LECYCLE_SEED, or a seeds list".into(),
                ));
            }
            let (tower, _tried) = admissible_random_tower(germ, &seeds)?;
            Ok(tower)
        }
    }
}

fn point_of(entry: &CorpusEntry, point: Option<&str>) -> Result<Vec<Rational>> {
    match point {
        None => Ok(vec![Rational::zero(); entry.ring.num_vars()]),
        Some(text) => parse_cli_point(text, entry.ring.num_vars()),
    }
}

fn emit(rendered: String, output: Option<&Path>) -> Result<()> {
    match output {
        None => {
            println!("{rendered}");
            Ok(())
        }
        Some(path) => write_atomic(path, &rendered),
    }
}

#[derive(Serialize)]
struct MilnorPayload {
    entry: EntryEcho,
    point: Vec<String>,
    milnor: usize,
    kind: &'static str,
}

pub fn cmd_milnor(
    entry: &CorpusEntry,
    point: Option<&str>,
    seed: Option<u64>,
    output: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let p = point_of(entry, point)?;
    let germ = germ_of(entry, false)?;
    let (milnor, kind, frame) = if entry.expected_s == 0 {
        (
            milnor_number(&germ, &p)?,
            "milnor",
            Frame::identity(entry.ring.num_vars()),
        )
    } else {
        let tower = tower_of(entry, &germ, seed)?;
        let mu = slice_milnor(&tower, &p)?;
        (mu, "slice-milnor", tower.frame().clone())
    };
    let payload = MilnorPayload {
        entry: echo(entry, &frame),
        point: p.iter().map(|c| c.to_string()).collect(),
        milnor,
        kind,
    };
    emit(render(&payload, started)?, output)?;
    Ok(0)
}

#[derive(Serialize)]
struct LeNumbersPayload {
    entry: EntryEcho,
    point: Vec<String>,
    profile: LeProfile,
    dagger: DaggerCheck,
}

pub fn cmd_le_numbers(
    entry: &CorpusEntry,
    point: Option<&str>,
    seed: Option<u64>,
    output: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let p = point_of(entry, point)?;
    let germ = germ_of(entry, true)?;
    let tower = tower_of(entry, &germ, seed)?;
    let payload = LeNumbersPayload {
        entry: echo(entry, tower.frame()),
        point: p.iter().map(|c| c.to_string()).collect(),
        profile: le_profile(&tower, &p)?,
        dagger: dagger_check(&tower, &p)?,
    };
    emit(render(&payload, started)?, output)?;
    Ok(0)
}

#[derive(Serialize)]
struct CheckPayload {
    entry: EntryEcho,
    s: usize,
    criteria: Verdict,
    origin_profile: LeProfile,
    dagger: Vec<DaggerCheck>,
    main_theorem: Option<MainTheoremRun>,
    mismatches: Vec<String>,
}

fn mismatch<T: std::fmt::Debug + PartialEq>(
    out: &mut Vec<String>,
    key: &str,
    expected: &Option<T>,
    got: &T,
) {
    if let Some(e) = expected {
        if e != got {
            out.push(format!("{key}: expected {e:?}, got {got:?}"));
        }
    }
}

fn run_check(entry: &CorpusEntry, seed: Option<u64>) -> Result<CheckPayload> {
    let germ = germ_of(entry, true)?;
    let tower = tower_of(entry, &germ, seed)?;
    let origin = vec![Rational::zero(); entry.ring.num_vars()];
    let criteria = evaluate_criteria(&germ, &tower, &entry.samples, &entry.seeds)?;
    let origin_profile = le_profile(&tower, &origin)?;
    let mut dagger = vec![dagger_check(&tower, &origin)?];
    for p in &entry.samples {
        dagger.push(dagger_check(&tower, p)?);
    }
    let main_theorem = if entry.main_theorem {
        Some(run_main_theorem(
            &germ,
            &tower,
            entry.y_ideal.as_ref(),
            &entry.samples,
            &entry.seeds,
        )?)
    } else {
        None
    };

    let mut mismatches = Vec::new();
    let e = &entry.expect;
    mismatch(&mut mismatches, "s", &e.s, &tower.s());
    mismatch(&mut mismatches, "mu0", &e.mu0, &criteria.mu0);
    mismatch(&mut mismatches, "lambdas", &e.lambdas, &origin_profile.lambdas);
    mismatch(&mut mismatches, "generic_le", &e.generic_le, &criteria.generic_le.value);
    mismatch(
        &mut mismatches,
        "sample_milnors",
        &e.sample_milnors,
        &criteria.sample_milnors,
    );
    mismatch(&mut mismatches, "c1", &e.c1, &criteria.c1_mu_constant_sampled);
    mismatch(&mut mismatches, "c2", &e.c2, &criteria.c2_mu_equals_generic_le);
    mismatch(&mut mismatches, "c4", &e.c4, &criteria.c4_mu_equals_le_in_frame);
    mismatch(&mut mismatches, "c5", &e.c5, &criteria.c5_gamma_zero);
    if let Some(run) = &main_theorem {
        mismatch(
            &mut mismatches,
            "implication_ok",
            &e.implication_ok,
            &run.implication_ok,
        );
    }
    for d in &dagger {
        if !d.ok {
            mismatches.push(format!(
                "dagger: {} != {} + {}",
                d.lhs, d.polar_term, d.lambda_s
            ));
        }
    }

    Ok(CheckPayload {
        entry: echo(entry, tower.frame()),
        s: tower.s(),
        criteria,
        origin_profile,
        dagger,
        main_theorem,
        mismatches,
    })
}

pub fn cmd_check(entry: &CorpusEntry, seed: Option<u64>, output: Option<&Path>) -> Result<i32> {
    let started = Instant::now();
    let payload = run_check(entry, seed)?;
    let failed = !payload.mismatches.is_empty();
    emit(render(&payload, started)?, output)?;
    Ok(if failed { 5 } else { 0 })
}

#[derive(Serialize)]
struct CorpusEntrySummary {
    name: String,
    pass: bool,
    error: Option<String>,
    mismatches: Vec<String>,
}

#[derive(Serialize)]
struct CorpusSummary {
    entries: Vec<CorpusEntrySummary>,
    total: usize,
    passed: usize,
}

pub fn cmd_corpus(
    dir: &Path,
    jobs: Option<usize>,
    seed: Option<u64>,
    output: Option<&Path>,
) -> Result<i32> {
    let started = Instant::now();
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|r| r.ok())
        .map(|d| d.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "corpus"))
        .collect();
    files.sort();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;

    let report_dir = output.map(Path::to_path_buf).unwrap_or_else(|| dir.join("reports"));
    let results: Vec<(String, CorpusEntrySummary, Option<String>)> = pool.install(|| {
        use rayon::prelude::*;
        files
            .par_iter()
            .map(|path| {
                let fallback = path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or("entry")
                    .to_string();
                match crate::corpus::load_entry(path).and_then(|entry| {
                    let t0 = Instant::now();
                    let payload = run_check(&entry, seed)?;
                    let rendered = render(&payload, t0)?;
                    Ok((entry.name.clone(), payload.mismatches.clone(), rendered))
                }) {
                    Ok((name, mismatches, rendered)) => {
                        let summary = CorpusEntrySummary {
                            name: name.clone(),
                            pass: mismatches.is_empty(),
                            error: None,
                            mismatches,
                        };
                        (name, summary, Some(rendered))
                    }
                    Err(e) => {
                        let summary = CorpusEntrySummary {
                            name: fallback.clone(),
                            pass: false,
                            error: Some(e.to_string()),
                            mismatches: Vec::new(),
                        };
                        (fallback, summary, None)
                    }
                }
            })
            .collect()
    });

    let mut results = results;
    results.sort_by(|a, b| a.0.cmp(&b.0));
    let mut names = std::collections::BTreeSet::new();
    let mut summaries = Vec::new();
    for (name, mut summary, rendered) in results {
        if !names.insert(name.clone()) {
            summary.pass = false;
            summary
                .mismatches
                .push(format!("duplicate entry name '{name}'"));
        }
        if let Some(rendered) = rendered {
            write_atomic(&report_dir.join(format!("{name}.json")), &rendered)?;
        }
        summaries.push(summary);
    }
    let passed = summaries.iter().filter(|s| s.pass).count();
    let total = summaries.len();
    let summary = CorpusSummary {
        entries: summaries,
        total,
        passed,
    };
    let rendered = render(&summary, started)?;
    write_atomic(&report_dir.join("summary.json"), &rendered)?;
    println!("{rendered}");
    Ok(if passed == total { 0 } else { 1 })
}

/// Recomputes every pinned quantity through the independent truncation
/// oracle (lengths) plus the engine's saturated ideals, and prints the
/// `expect.*` lines ready to paste into the entry file.
pub fn cmd_oracle(entry: &CorpusEntry, seed: Option<u64>, output: Option<&Path>) -> Result<i32> {
    let germ = germ_of(entry, true)?;
    let tower = tower_of(entry, &germ, seed)?;
    let s = tower.s();
    let ring = tower.c_ideal().ring().clone();

    let slices = |k: usize| -> Vec<Polynomial> {
        (0..k).map(|i| Polynomial::var(&ring, i)).collect()
    };
    let length = |gens: &[Polynomial], extra: &[Polynomial]| -> Result<usize> {
        let mut all = gens.to_vec();
        all.extend_from_slice(extra);
        oracle::local_length(&all, ORACLE_CAP)
            .ok_or_else(|| Error::InfiniteLength("oracle truncation did not stabilize".into()))
    };

    let mu0 = length(tower.c_ideal().generators(), &slices(s))?;
    let mut lambdas = Vec::with_capacity(s + 1);
    for k in 0..=s {
        let (total, polar) = if k == s {
            let total = mu0;
            let polar = if s == 0 {
                0
            } else {
                length(tower.gamma(s).unwrap().ideal.generators(), &slices(s))?
            };
            (total, polar)
        } else {
            let above = &tower.gamma(k + 1).unwrap().ideal;
            let mut with_partial = above.generators().to_vec();
            with_partial.push(tower.partials()[k].clone());
            let total = length(&with_partial, &slices(k))?;
            let polar = if k == 0 {
                let candidate = above.plus_polys(&[tower.partials()[0].clone()]);
                let (sat, _) = lecycles::basis::saturate(&candidate, tower.jacobian_ideal());
                if sat.is_unit() {
                    0
                } else {
                    length(sat.generators(), &[])?
                }
            } else {
                length(tower.gamma(k).unwrap().ideal.generators(), &slices(k))?
            };
            (total, polar)
        };
        if polar > total {
            return Err(Error::NegativeResult(format!(
                "oracle lambda^{k}: polar {polar} > total {total}"
            )));
        }
        lambdas.push(total - polar);
    }
    let polar_origin = if s == 0 {
        0
    } else {
        length(tower.gamma(s).unwrap().ideal.generators(), &slices(s))?
    };

    let mut sample_milnors = Vec::new();
    for p in &entry.samples {
        let q = tower.to_frame_coords(p);
        let translated = tower.c_ideal().translate(&q);
        sample_milnors.push(length(translated.generators(), &slices(s))?);
    }

    let generic = generic_le_number(&germ, &entry.seeds)?;
    let c2 = mu0 == generic.value;
    let c1 = if sample_milnors.is_empty() {
        c2
    } else {
        sample_milnors.iter().all(|&m| m == mu0)
    };
    let c4 = mu0 == lambdas[s];
    let c5 = polar_origin == 0 && gamma_s_is_zero(&tower)?;

    let mut lines = Vec::new();
    lines.push(format!("expect.s = {s}"));
    lines.push(format!("expect.mu0 = {mu0}"));
    lines.push(format!(
        "expect.lambdas = {}",
        lambdas
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    lines.push(format!("expect.generic_le = {}", generic.value));
    if !sample_milnors.is_empty() {
        lines.push(format!(
            "expect.sample_milnors = {}",
            sample_milnors
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    lines.push(format!("expect.c1 = {c1}"));
    lines.push(format!("expect.c2 = {c2}"));
    lines.push(format!("expect.c4 = {c4}"));
    lines.push(format!("expect.c5 = {c5}"));
    if entry.main_theorem {
        let jd = jacobian(&germ)?;
        let smooth = sigma_smooth_at_origin(&jd) == SmoothCertificate::CertifiedSmooth;
        let constant = !sample_milnors.is_empty()
            && sample_milnors.iter().all(|&m| m == sample_milnors[0]);
        let hypothesis = smooth && constant;
        let conclusion = c1 && c2 && c4 && c5;
        lines.push(format!("expect.implication_ok = {}", !hypothesis || conclusion));
    }
    let text = lines.join("\n") + "\n";
    match output {
        None => print!("{text}"),
        Some(path) => write_atomic(path, &text)?,
    }
    Ok(0)
}
