use lecycles::basis::Ideal;
use lecycles::checker::{evaluate_criteria, run_main_theorem, validate_samples};
use lecycles::pipeline::{build_polar_tower, Germ, SmoothCertificate};
use lecycles::poly::{parse, rat_int, Frame, Rational, Ring};

fn germ(vars: &[&str], f: &str) -> Germ {
    let ring = Ring::new(vars).unwrap();
    Germ::new(&ring, parse(f, &ring).unwrap(), None).unwrap()
}

fn pt(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&c| rat_int(c)).collect()
}

const SEEDS: [u64; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

#[test]
fn verdict_mu_constant_line() {
    let g = germ(&["t", "x", "y"], "x^2 + y^3");
    let tower = build_polar_tower(&g, &Frame::identity(3)).unwrap();
    let samples = vec![pt(&[-1, 0, 0]), pt(&[1, 0, 0]), pt(&[2, 0, 0])];
    let v = evaluate_criteria(&g, &tower, &samples, &SEEDS).unwrap();
    assert!(v.c1_mu_constant_sampled);
    assert!(v.c2_mu_equals_generic_le);
    assert!(v.c4_mu_equals_le_in_frame);
    assert!(v.c5_gamma_zero);
    assert!(v.c3_simple_family_derived);
    assert!(v.consistent);
    assert_eq!(v.mu0, 2);
    assert_eq!(v.sample_milnors, vec![2, 2, 2]);
}

#[test]
fn verdict_cusp_family_all_false() {
    let g = germ(&["t", "x", "y"], "x^3 + y^3 + t*x*y");
    let tower = build_polar_tower(&g, &Frame::identity(3)).unwrap();
    let samples = vec![pt(&[1, 0, 0]), pt(&[2, 0, 0])];
    let v = evaluate_criteria(&g, &tower, &samples, &SEEDS).unwrap();
    assert!(!v.c1_mu_constant_sampled);
    assert!(!v.c2_mu_equals_generic_le);
    assert!(!v.c4_mu_equals_le_in_frame);
    assert!(!v.c5_gamma_zero);
    assert!(!v.c3_simple_family_derived);
    assert!(v.consistent);
    assert_eq!(v.mu0, 4);
    assert_eq!(v.generic_le.value, 1);
    assert_eq!(v.sample_milnors, vec![1, 1]);
}

#[test]
fn verdict_constant_plane_family() {
    let g = germ(&["t", "u", "x", "y"], "x^2 + y^2");
    let tower = build_polar_tower(&g, &Frame::identity(4)).unwrap();
    let samples = vec![pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0]), pt(&[1, 1, 0, 0])];
    let v = evaluate_criteria(&g, &tower, &samples, &SEEDS).unwrap();
    assert!(v.c1_mu_constant_sampled && v.c2_mu_equals_generic_le);
    assert!(v.c4_mu_equals_le_in_frame && v.c5_gamma_zero);
    assert_eq!(v.mu0, 1);
}

#[test]
fn sample_off_sigma_rejected() {
    let g = germ(&["t", "x", "y"], "x^2 + y^3");
    assert!(validate_samples(&g, &[pt(&[0, 1, 0])]).is_err());
    assert!(validate_samples(&g, &[pt(&[3, 0, 0])]).is_ok());
}

#[test]
fn main_theorem_constant_family_with_point_y() {
    let g = germ(&["t", "u", "x", "y"], "x^2 + y^2");
    let tower = build_polar_tower(&g, &Frame::identity(4)).unwrap();
    let ring = g.ring().clone();
    let y = Ideal::new(
        &ring,
        vec![parse("t", &ring).unwrap(), parse("u", &ring).unwrap()],
    );
    let samples = vec![pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0]), pt(&[1, 1, 0, 0])];
    let run = run_main_theorem(&g, &tower, Some(&y), &samples, &SEEDS).unwrap();
    assert!(run.y_dimension_ok);
    assert_eq!(run.smooth_certificate, SmoothCertificate::CertifiedSmooth);
    assert!(run.samples_constant_off_y);
    assert!(run.hypothesis_surrogate);
    assert!(run.implication_ok);
    assert_eq!(run.conclusion.mu0, 1);
    assert_eq!(run.sample_mu, Some(1));
    assert!(run.caveats.iter().any(|c| c.starts_with("SAMPLING-ONLY")));
    assert!(!run.caveats.iter().any(|c| c.starts_with("VIOLATED")));
}

#[test]
fn main_theorem_empty_y_same_verdict() {
    let g = germ(&["t", "u", "x", "y"], "x^2 + y^2");
    let tower = build_polar_tower(&g, &Frame::identity(4)).unwrap();
    let samples = vec![pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0])];
    let run = run_main_theorem(&g, &tower, None, &samples, &SEEDS).unwrap();
    assert!(run.hypothesis_surrogate && run.implication_ok);
    assert_eq!(run.conclusion.mu0, 1);
}

#[test]
fn main_theorem_sampling_false_positive_is_surfaced() {
    // Samples away from the origin all see mu = 1, so the sampled
    // hypothesis holds, while the conclusion at the origin fails: the run
    // must flag the violated implication rather than hide it.
    let g = germ(&["t", "x", "y"], "x^3 + y^3 + t*x*y");
    let tower = build_polar_tower(&g, &Frame::identity(3)).unwrap();
    let samples = vec![pt(&[1, 0, 0]), pt(&[2, 0, 0])];
    let run = run_main_theorem(&g, &tower, None, &samples, &SEEDS).unwrap();
    assert!(run.hypothesis_surrogate);
    assert!(!run.implication_ok);
    assert!(run
        .caveats
        .iter()
        .any(|c| c.starts_with("VIOLATED-AT-SURROGATE-LEVEL")));
    assert_eq!(run.sample_mu, Some(1));
    assert_eq!(run.conclusion.mu0, 4);
}

#[test]
fn main_theorem_rejects_sample_on_y() {
    let g = germ(&["t", "u", "x", "y"], "x^2 + y^2");
    let tower = build_polar_tower(&g, &Frame::identity(4)).unwrap();
    let ring = g.ring().clone();
    let y = Ideal::new(
        &ring,
        vec![parse("t", &ring).unwrap(), parse("u", &ring).unwrap()],
    );
    let on_y = vec![pt(&[0, 0, 0, 0])];
    assert!(run_main_theorem(&g, &tower, Some(&y), &on_y, &SEEDS).is_err());
}

#[test]
fn verdict_frame_stable() {
    let g = germ(&["t", "x", "y"], "x^2 + y^3");
    let samples = vec![pt(&[1, 0, 0])];
    let mut booleans = Vec::new();
    for seed in [21u64, 22] {
        let frame = Frame::random(3, seed, 7);
        let tower = match build_polar_tower(&g, &frame) {
            Ok(t) => t,
            Err(_) => continue,
        };
        let v = match evaluate_criteria(&g, &tower, &samples, &SEEDS) {
            Ok(v) => v,
            Err(_) => continue,
        };
        booleans.push((
            v.c1_mu_constant_sampled,
            v.c2_mu_equals_generic_le,
            v.c4_mu_equals_le_in_frame,
            v.c5_gamma_zero,
        ));
    }
    assert!(!booleans.is_empty());
    assert!(booleans.iter().all(|&b| b == (true, true, true, true)));
}
