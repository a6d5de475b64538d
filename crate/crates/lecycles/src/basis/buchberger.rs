use std::collections::BTreeSet;

use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Full reduction for a global order: no term of the remainder is divisible
/// by any basis leading monomial.
pub fn reduce_global(g: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    debug_assert!(ord.is_global());
    let leads: Vec<(&Polynomial, Monomial)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| (b, b.leading_term(ord).unwrap().1.clone()))
        .collect();
    let ring = g.ring().clone();
    let mut h = g.clone();
    let mut remainder = Polynomial::zero(&ring);
    while !h.is_zero() {
        let (c, m) = {
            let (c, m) = h.leading_term(ord).unwrap();
            (c.clone(), m.clone())
        };
        match leads.iter().find(|(_, lm)| lm.divides(&m)) {
            Some((b, lm)) => {
                let lc = b.leading_term(ord).unwrap().0;
                let factor = &c / lc;
                let q = lm.quotient_into(&m);
                h = &h - &b.mul_term(&factor, &q);
            }
            None => {
                let t = Polynomial::monomial(&ring, c.clone(), m.clone());
                remainder = &remainder + &t;
                h = &h - &t;
            }
        }
    }
    remainder
}

/// Mora's weak normal form with ecart-based reducer selection. Terminates
/// for the local order; for a global order it coincides with leading-term
/// division. The result's leading monomial is not divisible by any basis
/// leading monomial, and u*g lies in (basis) + (result) for a local unit u.
pub fn mora_nf(g: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let mut pool: Vec<(Polynomial, Monomial, u32)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| {
            let lm = b.leading_term(ord).unwrap().1.clone();
            let e = b.ecart(ord);
            (b.clone(), lm, e)
        })
        .collect();
    let mut h = g.clone();
    loop {
        if h.is_zero() {
            return h;
        }
        let (hc, hm) = {
            let (c, m) = h.leading_term(ord).unwrap();
            (c.clone(), m.clone())
        };
        let candidate = pool
            .iter()
            .enumerate()
            .filter(|(_, (_, lm, _))| lm.divides(&hm))
            .min_by_key(|(_, (_, _, e))| *e)
            .map(|(i, _)| i);
        let idx = match candidate {
            Some(i) => i,
            None => return h,
        };
        let h_ecart = h.ecart(ord);
        if pool[idx].2 > h_ecart {
            pool.push((h.clone(), hm.clone(), h_ecart));
        }
        let (b, lm, _) = &pool[idx];
        let lc = b.leading_term(ord).unwrap().0;
        let factor = &hc / lc;
        let q = lm.quotient_into(&hm);
        h = &h - &b.mul_term(&factor, &q);
        // The weak normal form is only determined up to a local unit, so
        // rescaling to monic at every step is free and keeps the rational
        // coefficients from compounding.
        if !h.is_zero() {
            h = h.monic(ord);
        }
    }
}

/// Normal form dispatch: full reduction for global orders, Mora for local.
pub fn normal_form(g: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    if ord.is_global() {
        reduce_global(g, basis, ord)
    } else {
        mora_nf(g, basis, ord)
    }
}

fn s_polynomial(a: &Polynomial, b: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let (ca, ma) = a.leading_term(ord).unwrap();
    let (cb, mb) = b.leading_term(ord).unwrap();
    let l = ma.lcm(mb);
    let qa = ma.quotient_into(&l);
    let qb = mb.quotient_into(&l);
    let fa = cb.clone();
    let fb = ca.clone();
    &a.mul_term(&fa, &qa) - &b.mul_term(&fb, &qb)
}

/// Buchberger's algorithm. For a global order the result is the canonical
/// reduced Groebner basis (monic, tail-reduced, sorted ascending by leading
/// monomial). For the local order it is a minimal monic standard basis:
/// leading monomials generate the leading-term ideal, tails untouched.
pub fn basis_of(gens: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.clone());
        }
    }
    if basis.is_empty() {
        return Vec::new();
    }
    // Deterministic starting point.
    basis.sort_by(|a, b| ord.cmp(a.leading_term(ord).unwrap().1, b.leading_term(ord).unwrap().1));

    // Normal selection strategy: handle pairs with the smallest lcm degree
    // first; keeps intermediate elements small.
    let lcm_deg = |basis: &[Polynomial], i: usize, j: usize| -> u32 {
        let lmi = basis[i].leading_term(ord).unwrap().1;
        let lmj = basis[j].leading_term(ord).unwrap().1;
        lmi.lcm(lmj).degree()
    };
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.insert((lcm_deg(&basis, j, i), j, i));
        }
    }
    let pending = |pairs: &BTreeSet<(u32, usize, usize)>, a: usize, b: usize| {
        let (a, b) = key(a, b);
        pairs.iter().any(|&(_, i, j)| (i, j) == (a, b))
    };
    while let Some(&(d, i, j)) = pairs.iter().next() {
        pairs.remove(&(d, i, j));
        let lmi = basis[i].leading_term(ord).unwrap().1.clone();
        let lmj = basis[j].leading_term(ord).unwrap().1.clone();
        // Product criterion.
        if lmi.is_coprime(&lmj) {
            continue;
        }
        // Chain criterion: an element k whose leading monomial divides the
        // lcm, with both other pairs already handled.
        let l = lmi.lcm(&lmj);
        let chain = basis.iter().enumerate().any(|(k, b)| {
            k != i
                && k != j
                && b.leading_term(ord).unwrap().1.divides(&l)
                && !pending(&pairs, i, k)
                && !pending(&pairs, j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if !r.is_zero() {
            let new = basis.len();
            // Monic keeps coefficient growth in check; scaling by a unit
            // does not change the ideal.
            basis.push(r.monic(ord));
            for k in 0..new {
                pairs.insert((lcm_deg(&basis, k, new), k, new));
            }
        }
    }
    interreduce(basis, ord)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn interreduce(mut basis: Vec<Polynomial>, ord: MonomialOrder) -> Vec<Polynomial> {
    // Minimalize: drop elements whose leading monomial is divisible by
    // another element's leading monomial.
    let mut keep: Vec<Polynomial> = Vec::new();
    basis.sort_by(|a, b| ord.cmp(a.leading_term(ord).unwrap().1, b.leading_term(ord).unwrap().1));
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_term(ord).unwrap().1;
        let redundant = basis.iter().enumerate().any(|(k, b)| {
            k != idx && {
                let other = b.leading_term(ord).unwrap().1;
                other.divides(lm) && (other != lm || k < idx)
            }
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    if ord.is_global() {
        // Tail-reduce each element against the others for the canonical
        // reduced basis. Tail reduction may not terminate under the local
        // order, so it is global-only.
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, b)| b.clone())
                .collect();
            let r = reduce_global(&keep[i], &others, ord);
            if !r.is_zero() {
                out.push(r.monic(ord));
            }
        }
        out.sort_by(|a, b| ord.cmp(a.leading_term(ord).unwrap().1, b.leading_term(ord).unwrap().1));
        out
    } else {
        keep.iter().map(|g| g.monic(ord)).collect()
    }
}
