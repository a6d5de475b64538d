//! Milnor numbers, Le numbers, the generic Le number, the intersection
//! identity relating slice Milnor numbers to polar and Le terms, and the
//! integer-level consequences of the Le-number chain complex.

use num::Zero;
use serde::Serialize;

use crate::basis::{local_dim_at_origin, saturate, slice_ideal, Ideal};
use crate::pipeline::{build_polar_tower, jacobian, Germ, PolarTower, MAX_FRAME_RETRIES};
use crate::poly::{Frame, Rational};
use crate::{Error, Result};

/// The vector of Le numbers at a point, together with the Milnor number of
/// the transversal slice there.
#[derive(Debug, Clone, Serialize)]
pub struct LeProfile {
    /// Point in the original coordinates.
    pub point: Vec<String>,
    pub frame_seed: Option<u64>,
    /// lambdas[k] = k-th Le number, k = 0..=s.
    pub lambdas: Vec<usize>,
    pub slice_milnor: usize,
    pub admissible: bool,
}

/// The frame-independent minimum of the top Le number over tried frames.
#[derive(Debug, Clone, Serialize)]
pub struct GenericLeNumber {
    pub value: usize,
    pub frames_tried: Vec<u64>,
    pub stable: bool,
}

/// Milnor number of f at p: local length of the Jacobian ideal translated
/// to p. Errors with `InfiniteLength` when the critical point is not
/// isolated.
pub fn milnor_number(germ: &Germ, p: &[Rational]) -> Result<usize> {
    let jd = jacobian(germ)?;
    local_dim_at_origin(&jd.jacobian_ideal.translate(p))
}

/// Local length at q (frame coordinates) of I sliced by the first k
/// coordinate hyperplanes through q.
fn sliced_length(tower_ring: &Ideal, k: usize, q: &[Rational]) -> Result<usize> {
    let translated = tower_ring.translate(q);
    let ring = translated.ring().clone();
    let sliced = translated.plus_polys(&slice_ideal(&ring, k, &[]));
    local_dim_at_origin(&sliced)
}

/// Milnor number at p of f restricted to the slice {z_0 = q_0, ...,
/// z_{s-1} = q_{s-1}} in frame coordinates: the local length at p of the
/// ideal (z_0 - q_0, ..., z_{s-1} - q_{s-1}, df/dz_s, ..., df/dz_n).
pub fn slice_milnor(tower: &PolarTower, p: &[Rational]) -> Result<usize> {
    let q = tower.to_frame_coords(p);
    sliced_length(tower.c_ideal(), tower.s(), &q)
}

/// The k-th Le number at p (original coordinates), realized as a
/// difference of sliced local lengths.
pub fn le_number(tower: &PolarTower, k: usize, p: &[Rational]) -> Result<usize> {
    let s = tower.s();
    if k > s {
        return Err(Error::Input(format!("le number index {k} exceeds s = {s}")));
    }
    let q = tower.to_frame_coords(p);
    let (total, polar) = if k == s {
        let total = sliced_length(tower.c_ideal(), s, &q)?;
        let polar = if s == 0 {
            0
        } else {
            let level = tower.gamma(s).expect("tower invariant: level s");
            sliced_length(&level.ideal, s, &q)?
        };
        (total, polar)
    } else {
        let above = &tower.gamma(k + 1).expect("tower invariant").ideal;
        let with_partial = above.plus_polys(&[tower.partials()[k].clone()]);
        let total = sliced_length(&with_partial, k, &q)?;
        let polar = if k == 0 {
            // Gamma^0 as a length: saturate the level-1 candidate by J(f)
            // to strip components inside Sigma f, then measure at q.
            let (sat, _) = saturate(&with_partial, tower.jacobian_ideal());
            if sat.is_unit() {
                0
            } else {
                sliced_length(&sat, 0, &q)?
            }
        } else {
            sliced_length(&tower.gamma(k).expect("tower invariant").ideal, k, &q)?
        };
        (total, polar)
    };
    if polar > total {
        return Err(Error::NegativeResult(format!(
            "lambda^{k}: polar length {polar} exceeds total {total}"
        )));
    }
    Ok(total - polar)
}

/// Full Le profile (lambda^s, ..., lambda^0) and slice Milnor number at p.
pub fn le_profile(tower: &PolarTower, p: &[Rational]) -> Result<LeProfile> {
    let s = tower.s();
    let mut lambdas = Vec::with_capacity(s + 1);
    for k in 0..=s {
        lambdas.push(le_number(tower, k, p)?);
    }
    Ok(LeProfile {
        point: p.iter().map(|c| c.to_string()).collect(),
        frame_seed: tower.frame().seed(),
        lambdas,
        slice_milnor: slice_milnor(tower, p)?,
        admissible: true,
    })
}

/// Both sides of the intersection identity at q: the slice Milnor number
/// against the polar term plus the top Le number.
#[derive(Debug, Clone, Serialize)]
pub struct DaggerCheck {
    pub lhs: usize,
    pub polar_term: usize,
    pub lambda_s: usize,
    pub ok: bool,
}

pub fn dagger_check(tower: &PolarTower, p: &[Rational]) -> Result<DaggerCheck> {
    let s = tower.s();
    let q = tower.to_frame_coords(p);
    let lhs = slice_milnor(tower, p)?;
    let polar_term = if s == 0 {
        0
    } else {
        sliced_length(&tower.gamma(s).expect("tower invariant").ideal, s, &q)?
    };
    let lambda_s = le_number(tower, s, p)?;
    Ok(DaggerCheck {
        lhs,
        polar_term,
        lambda_s,
        ok: lhs == polar_term + lambda_s,
    })
}

/// Builds an admissible random-frame tower for the germ, walking the seed
/// list (up to the retry budget) until the tower builds and the origin
/// profile is finite. Returns the tower and the seeds tried.
pub fn admissible_random_tower(germ: &Germ, seeds: &[u64]) -> Result<(PolarTower, Vec<u64>)> {
    let n = germ.ring().num_vars();
    let mut tried = Vec::new();
    for &seed in seeds.iter().take(MAX_FRAME_RETRIES) {
        tried.push(seed);
        let frame = Frame::random(n, seed, 7);
        match build_polar_tower(germ, &frame) {
            Ok(tower) => {
                let origin = vec![Rational::zero(); n];
                if le_profile(&tower, &origin).is_ok() {
                    return Ok((tower, tried));
                }
            }
            Err(Error::Admissibility(_)) | Err(Error::InfiniteLength(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoAdmissibleFrame(tried.len()))
}

/// Minimum of lambda^s at the origin over admissible frames from the given
/// seeds; stable when the two halves of the seed list agree on the minimum.
pub fn generic_le_number(germ: &Germ, seeds: &[u64]) -> Result<GenericLeNumber> {
    if seeds.len() < 4 {
        return Err(Error::Input("generic Le number needs at least 4 seeds".into()));
    }
    let n = germ.ring().num_vars();
    let origin = vec![Rational::zero(); n];
    let mut values: Vec<(u64, usize)> = Vec::new();
    for &seed in seeds {
        let frame = Frame::random(n, seed, 7);
        let tower = match build_polar_tower(germ, &frame) {
            Ok(t) => t,
            Err(Error::Admissibility(_)) => continue,
            Err(e) => return Err(e),
        };
        match le_number(&tower, tower.s(), &origin) {
            Ok(v) => values.push((seed, v)),
            Err(Error::InfiniteLength(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if values.is_empty() {
        return Err(Error::NoAdmissibleFrame(seeds.len()));
    }
    let half = seeds.len() / 2;
    let min_of = |batch: &[u64]| -> Option<usize> {
        values
            .iter()
            .filter(|(s, _)| batch.contains(s))
            .map(|(_, v)| *v)
            .min()
    };
    let first = min_of(&seeds[..half]);
    let second = min_of(&seeds[half..]);
    let value = values.iter().map(|(_, v)| *v).min().unwrap();
    Ok(GenericLeNumber {
        value,
        frames_tried: values.iter().map(|(s, _)| *s).collect(),
        stable: first.is_some() && first == second,
    })
}

/// Integer-level consequences of the Le-number chain complex: lambda^0
/// equals the Milnor number when s = 0, and a certified mu-constant family
/// concentrates everything in the top Le number.
pub fn euler_consistency(profile: &LeProfile, mu_constant_certified: Option<bool>) -> bool {
    let d = profile.lambdas.len().saturating_sub(1);
    if d == 0 {
        return profile.lambdas[0] == profile.slice_milnor;
    }
    if mu_constant_certified == Some(true) {
        return profile.lambdas[..d].iter().all(|&l| l == 0)
            && profile.lambdas[d] == profile.slice_milnor;
    }
    true
}
