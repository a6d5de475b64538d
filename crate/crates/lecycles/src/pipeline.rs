//! From a germ and a coordinate frame to the geometric objects of the theory:
//! Jacobian ideal and critical locus, the scheme C cut out by the trailing
//! partials, and the tower of relative polar ideals obtained by gap-sheaf
//! removal (saturation by the Jacobian ideal).

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;
use serde::Serialize;

use crate::basis::{
    dimension, maximal_ideal, radical_contains, saturate, staircase, Dimension, Ideal,
};
use crate::poly::{Frame, MonomialOrder, Polynomial, Rational, Ring};
use crate::{Error, Result};

/// A polynomial hypersurface germ at the origin.
#[derive(Debug, Clone)]
pub struct Germ {
    ring: Arc<Ring>,
    f: Polynomial,
    expected_s: Option<usize>,
}

impl Germ {
    pub fn new(ring: &Arc<Ring>, f: Polynomial, expected_s: Option<usize>) -> Result<Germ> {
        if f.is_constant() {
            return Err(Error::InvalidGerm("f must be non-constant".into()));
        }
        if !f.constant_term().is_zero() {
            return Err(Error::InvalidGerm("f(0) must be 0".into()));
        }
        Ok(Germ {
            ring: ring.clone(),
            f,
            expected_s,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn expected_s(&self) -> Option<usize> {
        self.expected_s
    }
}

/// Partials, Jacobian ideal and the dimension of the critical locus.
#[derive(Debug, Clone)]
pub struct JacobianData {
    pub partials: Vec<Polynomial>,
    pub jacobian_ideal: Ideal,
    pub sigma_dim: Dimension,
    /// Whether f lies in the radical of J(f); reported, not enforced
    /// (global polynomial input can have critical points off V(f)).
    pub f_in_radical: bool,
}

pub fn jacobian(germ: &Germ) -> Result<JacobianData> {
    let n = germ.ring().num_vars();
    let partials: Vec<Polynomial> = (0..n).map(|i| germ.f().partial(i)).collect();
    let jacobian_ideal = Ideal::new(germ.ring(), partials.clone());
    let sigma_dim = dimension(&jacobian_ideal);
    let f_in_radical = radical_contains(&jacobian_ideal, germ.f());
    if let (Some(expected), Dimension::Dim(d)) = (germ.expected_s(), sigma_dim) {
        if expected != d {
            return Err(Error::InvalidGerm(format!(
                "declared s = {expected} but dim Sigma f = {d}"
            )));
        }
    }
    Ok(JacobianData {
        partials,
        jacobian_ideal,
        sigma_dim,
        f_in_radical,
    })
}

/// One saturated polar level of the tower.
#[derive(Debug, Clone)]
pub struct GammaLevel {
    pub ideal: Ideal,
    pub dim: Dimension,
    pub saturation_rounds: usize,
}

/// The relative polar tower of f in the coordinates of `frame`: the
/// unsaturated scheme C and the saturated polar ideals for k = s down to 1.
#[derive(Debug)]
pub struct PolarTower {
    frame: Frame,
    frame_inv: Frame,
    s: usize,
    f: Polynomial,
    partials: Vec<Polynomial>,
    jacobian_ideal: Ideal,
    c_ideal: Ideal,
    gamma: BTreeMap<usize, GammaLevel>,
}

impl PolarTower {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// The frame-transformed germ.
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn partials(&self) -> &[Polynomial] {
        &self.partials
    }

    pub fn jacobian_ideal(&self) -> &Ideal {
        &self.jacobian_ideal
    }

    pub fn c_ideal(&self) -> &Ideal {
        &self.c_ideal
    }

    pub fn gamma(&self, k: usize) -> Option<&GammaLevel> {
        self.gamma.get(&k)
    }

    pub fn gamma_levels(&self) -> &BTreeMap<usize, GammaLevel> {
        &self.gamma
    }

    /// Original-coordinate point -> frame coordinates.
    pub fn to_frame_coords(&self, p: &[Rational]) -> Vec<Rational> {
        self.frame_inv.apply_point(p)
    }
}

/// Builds C = (df/dz_s, ..., df/dz_n) and the saturated polar tower in the
/// coordinates given by `frame`. Fails with `Admissibility` when the frame
/// is not generic enough (C not purely s-dimensional, or a polar level of
/// unexpected dimension).
pub fn build_polar_tower(germ: &Germ, frame: &Frame) -> Result<PolarTower> {
    let ring = germ.ring();
    let n = ring.num_vars();
    if frame.dim() != n {
        return Err(Error::Input("frame dimension does not match ring".into()));
    }
    let f = frame.apply(germ.f());
    let transformed = Germ::new(ring, f.clone(), None)?;
    let jd = jacobian(&transformed)?;
    let s = match jd.sigma_dim {
        Dimension::Dim(s) => s,
        Dimension::Empty => {
            return Err(Error::InvalidGerm(
                "f has no critical points; the polar tower is undefined".into(),
            ))
        }
    };
    if let Some(expected) = germ.expected_s() {
        if expected != s {
            return Err(Error::InvalidGerm(format!(
                "declared s = {expected} but dim Sigma f = {s}"
            )));
        }
    }
    let c_ideal = Ideal::new(ring, jd.partials[s..].to_vec());
    let c_dim = dimension(&c_ideal);
    if c_dim != Dimension::Dim(s) {
        return Err(Error::Admissibility(format!(
            "C has dimension {c_dim:?}, expected {s}"
        )));
    }
    let mut gamma = BTreeMap::new();
    if s > 0 {
        let (ideal_s, rounds) = saturate(&c_ideal, &jd.jacobian_ideal);
        check_level_dim(&ideal_s, s)?;
        gamma.insert(
            s,
            GammaLevel {
                dim: dimension(&ideal_s),
                saturation_rounds: rounds,
                ideal: ideal_s,
            },
        );
        for k in (1..s).rev() {
            let above = &gamma.get(&(k + 1)).unwrap().ideal;
            let with_partial = above.plus_polys(&[jd.partials[k].clone()]);
            let (ideal_k, rounds) = saturate(&with_partial, &jd.jacobian_ideal);
            check_level_dim(&ideal_k, k)?;
            gamma.insert(
                k,
                GammaLevel {
                    dim: dimension(&ideal_k),
                    saturation_rounds: rounds,
                    ideal: ideal_k,
                },
            );
        }
    }
    Ok(PolarTower {
        frame: frame.clone(),
        frame_inv: frame.inverse(),
        s,
        f,
        partials: jd.partials,
        jacobian_ideal: jd.jacobian_ideal,
        c_ideal,
        gamma,
    })
}

fn check_level_dim(ideal: &Ideal, k: usize) -> Result<()> {
    match dimension(ideal) {
        Dimension::Empty => Ok(()),
        Dimension::Dim(d) if d == k => Ok(()),
        other => Err(Error::Admissibility(format!(
            "polar level {k} has dimension {other:?}"
        ))),
    }
}

/// True iff the s-dimensional polar cycle is zero near the origin. The
/// length test (origin off V(Gamma^s)) is cross-checked against the
/// set-equality test Sigma f = V(C); a mismatch is a pipeline bug.
pub fn gamma_s_is_zero(tower: &PolarTower) -> Result<bool> {
    if tower.s == 0 {
        // C coincides with the critical scheme; there is no polar part.
        return Ok(true);
    }
    let level = tower.gamma(tower.s).expect("tower invariant: level s");
    // Origin off V(Gamma^s) iff the local staircase is empty; an unbounded
    // staircase just means the polar set passes through the origin with
    // positive dimension.
    let by_length = staircase(&level.ideal).dimension == Some(0);
    let by_sets = (0..tower.s)
        .all(|i| radical_contains(&tower.c_ideal, &tower.partials[i]));
    if by_length != by_sets {
        return Err(Error::Internal(format!(
            "gamma-zero tests disagree: length says {by_length}, set equality says {by_sets}"
        )));
    }
    Ok(by_length)
}

/// Outcome of the smoothness check for the critical locus at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmoothCertificate {
    CertifiedSmooth,
    CertifiedSingular,
    Inconclusive,
}

/// Heuristic smoothness certificate for Sigma f at the origin: look for
/// n+1-s equations with the same zero set as J(f) whose linear parts are
/// independent. Three-valued; `Inconclusive` is treated as hypothesis
/// failure by the checker.
pub fn sigma_smooth_at_origin(jd: &JacobianData) -> SmoothCertificate {
    let ring = jd.jacobian_ideal.ring().clone();
    let n = ring.num_vars();
    let s = match jd.sigma_dim {
        Dimension::Dim(s) => s,
        Dimension::Empty => return SmoothCertificate::Inconclusive,
    };
    let codim = n - s;

    let mut pool: Vec<Polynomial> = Vec::new();
    let push = |pool: &mut Vec<Polynomial>, g: &Polynomial| {
        if !g.is_zero() && g.constant_term().is_zero() && !pool.contains(g) {
            pool.push(g.clone());
        }
    };
    for g in jd.jacobian_ideal.generators() {
        push(&mut pool, g);
    }
    for g in jd.jacobian_ideal.basis(MonomialOrder::DegRevLex).iter() {
        push(&mut pool, g);
    }
    let (sat, _) = saturate(&jd.jacobian_ideal, &maximal_ideal(&ring));
    for g in sat.basis(MonomialOrder::DegRevLex).iter() {
        push(&mut pool, g);
    }

    // Close the pool under partial derivatives that stay in the radical of
    // J(f): for g = h^k this recovers lower powers of h and eventually a
    // generator with a nonzero linear part (e.g. y from y^2). Soundness does
    // not depend on this heuristic — every chosen set is re-verified below by
    // two-sided radical containment. Degrees strictly drop, so this stops.
    let mut idx = 0;
    while idx < pool.len() {
        let g = pool[idx].clone();
        for i in 0..n {
            let d = g.partial(i);
            if !d.is_zero()
                && d.constant_term().is_zero()
                && radical_contains(&jd.jacobian_ideal, &d)
            {
                push(&mut pool, &d);
            }
        }
        idx += 1;
    }

    // Greedy rank computation on linear parts at the origin.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut chosen: Vec<Polynomial> = Vec::new();
    for g in &pool {
        if chosen.len() == codim {
            break;
        }
        let lin = linear_part(g, n);
        if lin.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut candidate = rows.clone();
        candidate.push(lin);
        if rank(&mut candidate) > rows.len() {
            rows = candidate;
            chosen.push(g.clone());
        }
    }

    if chosen.len() == codim {
        let both_ways = chosen
            .iter()
            .all(|g| radical_contains(&jd.jacobian_ideal, g))
            && {
                let chosen_ideal = Ideal::new(&ring, chosen.clone());
                jd.partials
                    .iter()
                    .all(|p| radical_contains(&chosen_ideal, p))
            };
        if both_ways {
            return SmoothCertificate::CertifiedSmooth;
        }
    }

    // Singular certificate for the hypersurface case: a squarefree witness
    // g with V(g) = Sigma f and vanishing gradient at the origin.
    if codim == 1 {
        for g in &pool {
            if !radical_contains(&jd.jacobian_ideal, g) {
                continue;
            }
            let g_ideal = Ideal::new(&ring, vec![g.clone()]);
            if !jd.partials.iter().all(|p| radical_contains(&g_ideal, p)) {
                continue;
            }
            // g squarefree iff its singular scheme has codimension >= 2.
            let grads: Vec<Polynomial> = (0..n).map(|i| g.partial(i)).collect();
            let sing = g_ideal.plus_polys(&grads);
            let small_sing = match dimension(&sing) {
                Dimension::Empty => true,
                Dimension::Dim(d) => d + 2 <= n,
            };
            if !small_sing {
                continue;
            }
            let grad_vanishes = linear_part(g, n).iter().all(|c| c.is_zero());
            return if grad_vanishes {
                SmoothCertificate::CertifiedSingular
            } else {
                SmoothCertificate::CertifiedSmooth
            };
        }
    }
    SmoothCertificate::Inconclusive
}

fn linear_part(g: &Polynomial, n: usize) -> Vec<Rational> {
    let mut lin = vec![Rational::zero(); n];
    for (c, m) in g.terms() {
        if m.degree() == 1 {
            let i = m.support().next().unwrap();
            lin[i] = c.clone();
        }
    }
    lin
}

fn rank(rows: &mut Vec<Vec<Rational>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    for c in 0..cols {
        if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let factor = &rows[i][c] / &rows[r][c];
                    for j in 0..cols {
                        let t = &rows[r][j] * &factor;
                        rows[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
    }
    r
}

/// Retry policy for random frames: up to 8 seeded attempts.
pub const MAX_FRAME_RETRIES: usize = 8;
