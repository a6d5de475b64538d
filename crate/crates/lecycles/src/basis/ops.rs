use std::sync::Arc;

use num::Zero;

use super::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};
use crate::Error;

/// Krull dimension of V(I), or `Empty` for the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Empty,
    Dim(usize),
}

/// Standard monomials of a local quotient ring; `None` fields flag an
/// unbounded staircase (non-isolated situation at the origin).
#[derive(Debug, Clone)]
pub struct StaircaseReport {
    pub standard_monomials: Option<Vec<Monomial>>,
    pub dimension: Option<usize>,
}

/// I ∩ (subring without `vars`), via an elimination order.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Ideal {
    let ring = ideal.ring();
    let n = ring.num_vars();
    if vars.is_empty() {
        return ideal.clone();
    }
    let mut perm: Vec<usize> = vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let cut = perm.len();
    for i in 0..n {
        if !perm[..cut].contains(&i) {
            perm.push(i);
        }
    }
    let permuted = ring.permuted(&perm);
    let mut to_new = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        to_new[old] = new;
    }
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.map_ring(&permuted, &to_new))
        .collect();
    let mapped = Ideal::new(&permuted, gens);
    let basis = mapped.basis(MonomialOrder::Elim { cut });
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(_, m)| m.0[..cut].iter().all(|&e| e == 0))
        })
        .map(|g| g.map_ring(ring, &perm))
        .collect();
    Ideal::new(ring, kept)
}

/// I ∩ J by the one-tag-variable construction: eliminate w from
/// w·I + (1-w)·J.
pub fn intersection(a: &Ideal, b: &Ideal) -> Ideal {
    let ring = a.ring();
    let n = ring.num_vars();
    if a.is_zero() || b.is_zero() {
        return Ideal::zero(ring);
    }
    let ext = ring.extended("#w");
    let up: Vec<usize> = (0..n).collect();
    let w = Polynomial::var(&ext, n);
    let one_minus_w = &Polynomial::one(&ext) - &w;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&g.map_ring(&ext, &up) * &w);
    }
    for g in b.generators() {
        gens.push(&g.map_ring(&ext, &up) * &one_minus_w);
    }
    let elim = eliminate(&Ideal::new(&ext, gens), &[n]);
    let down = Ideal::new(
        ring,
        elim.generators()
            .iter()
            .map(|g| g.map_ring(ring, &up))
            .collect(),
    );
    down
}

/// Exact division p / g; panics if g does not divide p (internal use only,
/// on members of I ∩ (g)).
fn exact_div(p: &Polynomial, g: &Polynomial) -> Polynomial {
    let ord = MonomialOrder::DegRevLex;
    let ring = p.ring().clone();
    let (gc, gm) = {
        let (c, m) = g.leading_term(ord).expect("division by zero");
        (c.clone(), m.clone())
    };
    let mut h = p.clone();
    let mut q = Polynomial::zero(&ring);
    while !h.is_zero() {
        let (hc, hm) = {
            let (c, m) = h.leading_term(ord).unwrap();
            (c.clone(), m.clone())
        };
        assert!(gm.divides(&hm), "exact_div: not divisible");
        let factor = &hc / &gc;
        let mono = gm.quotient_into(&hm);
        q = &q + &Polynomial::monomial(&ring, factor.clone(), mono.clone());
        h = &h - &g.mul_term(&factor, &mono);
    }
    q
}

/// I : (g) = {h : h·g ∈ I}, via (I ∩ (g)) / g.
pub fn colon_poly(ideal: &Ideal, g: &Polynomial) -> Ideal {
    assert!(!g.is_zero(), "colon by zero polynomial");
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Ideal::zero(ring);
    }
    let inter = intersection(ideal, &Ideal::new(ring, vec![g.clone()]));
    if inter.is_zero() {
        return Ideal::zero(ring);
    }
    let gens = inter
        .generators()
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| exact_div(p, g))
        .collect();
    Ideal::new(ring, gens)
}

/// I : J = ∩_g (I : g) over the non-zero generators of J.
pub fn colon_ideal(ideal: &Ideal, j: &Ideal) -> Ideal {
    assert!(!j.is_zero(), "colon by zero ideal");
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        if g.is_zero() {
            continue;
        }
        let c = colon_poly(ideal, g);
        acc = Some(match acc {
            None => c,
            Some(prev) => intersection(&prev, &c),
        });
    }
    acc.expect("colon by zero ideal")
}

/// I : J^∞ as the stable value of iterated colon. Returns the saturated
/// ideal and the number of colon rounds performed before stabilization was
/// certified (one extra round reproducing the same reduced basis).
pub fn saturate(ideal: &Ideal, j: &Ideal) -> (Ideal, usize) {
    assert!(!j.is_zero(), "saturation by zero ideal");
    let mut current = ideal.clone();
    let mut rounds = 0usize;
    loop {
        let next = colon_ideal(&current, j);
        rounds += 1;
        if next.same_ideal(&current) {
            return (current, rounds);
        }
        current = next;
    }
}

/// Krull dimension of V(I) via maximal independent variable sets modulo the
/// leading-term ideal (degrevlex).
pub fn dimension(ideal: &Ideal) -> Dimension {
    dimension_with(ideal, MonomialOrder::DegRevLex)
}

pub(crate) fn dimension_with(ideal: &Ideal, ord: MonomialOrder) -> Dimension {
    debug_assert!(ord.is_global());
    let ring = ideal.ring();
    let n = ring.num_vars();
    let basis = ideal.basis(ord);
    if basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero() {
        return Dimension::Empty;
    }
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(ord).unwrap().1.clone())
        .collect();
    // A subset S of variables is independent iff no leading monomial is
    // supported entirely inside S. Brute force over subsets; ring sizes in
    // this artifact stay small.
    let mut best = 0usize;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = leads.iter().all(|m| {
            let mut support = m.support();
            !support.all(|i| mask & (1 << i) != 0)
        });
        if independent {
            best = size;
        }
    }
    Dimension::Dim(best)
}

/// True iff g vanishes on V(I): 1 ∈ I + (1 - w·g) in the extended ring.
pub fn radical_contains(ideal: &Ideal, g: &Polynomial) -> bool {
    if g.is_zero() {
        return true;
    }
    if ideal.contains(g) {
        return true;
    }
    let ring = ideal.ring();
    let n = ring.num_vars();
    let ext = ring.extended("#w");
    let up: Vec<usize> = (0..n).collect();
    let w = Polynomial::var(&ext, n);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|p| p.map_ring(&ext, &up))
        .collect();
    gens.push(&Polynomial::one(&ext) - &(&w * &g.map_ring(&ext, &up)));
    Ideal::new(&ext, gens).is_unit()
}

/// Standard monomials of the local ring at the origin modulo I, via a
/// standard basis for the local order.
pub fn staircase(ideal: &Ideal) -> StaircaseReport {
    let ring = ideal.ring();
    let n = ring.num_vars();
    let basis = ideal.basis(MonomialOrder::LocalDegRevLex);
    if basis.is_empty() {
        // Zero ideal: the whole local ring.
        return StaircaseReport {
            standard_monomials: None,
            dimension: None,
        };
    }
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| {
            g.leading_term(MonomialOrder::LocalDegRevLex)
                .unwrap()
                .1
                .clone()
        })
        .collect();
    if leads.iter().any(|m| m.is_one()) {
        // Unit in the local ring: the origin is not on V(I).
        return StaircaseReport {
            standard_monomials: Some(Vec::new()),
            dimension: Some(0),
        };
    }
    // Finite iff every variable has a pure power among the leading
    // monomials.
    let mut bounds = vec![None::<u32>; n];
    for m in &leads {
        let mut support = m.support();
        if let (Some(i), None) = (support.next(), support.next()) {
            let e = m.0[i];
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    if bounds.iter().any(|b| b.is_none()) {
        return StaircaseReport {
            standard_monomials: None,
            dimension: None,
        };
    }
    let bounds: Vec<u32> = bounds.into_iter().map(|b| b.unwrap()).collect();
    let mut monomials = Vec::new();
    let mut current = vec![0u32; n];
    loop {
        let m = Monomial(current.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            monomials.push(m);
        }
        // Odometer over the box below the pure-power bounds.
        let mut i = 0;
        loop {
            if i == n {
                let dim = monomials.len();
                return StaircaseReport {
                    standard_monomials: Some(monomials),
                    dimension: Some(dim),
                };
            }
            current[i] += 1;
            if current[i] < bounds[i] {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// dim_Q of the localization at the origin modulo I; `Err(InfiniteLength)`
/// when the staircase is unbounded.
pub fn local_dim_at_origin(ideal: &Ideal) -> Result<usize, Error> {
    match staircase(ideal).dimension {
        Some(d) => Ok(d),
        None => Err(Error::InfiniteLength(format!(
            "non-isolated locus at the origin for ideal with {} generators",
            ideal.generators().len()
        ))),
    }
}

/// Convenience: the maximal ideal (z_0, ..., z_n).
pub fn maximal_ideal(ring: &Arc<Ring>) -> Ideal {
    Ideal::new(
        ring,
        (0..ring.num_vars())
            .map(|i| Polynomial::var(ring, i))
            .collect(),
    )
}

/// Convenience: slice ideal (z_0 - p_0, ..., z_{k-1} - p_{k-1}).
pub fn slice_ideal(ring: &Arc<Ring>, k: usize, p: &[Rational]) -> Vec<Polynomial> {
    (0..k)
        .map(|i| {
            &Polynomial::var(ring, i)
                - &Polynomial::constant(ring, p.get(i).cloned().unwrap_or_else(Rational::zero))
        })
        .collect()
}
