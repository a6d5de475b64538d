//! Independent recomputation path for local lengths, used to pin expected
//! values. Deliberately shares nothing with the basis engine: quotient
//! dimensions are obtained by truncating at a degree bound and doing plain
//! linear algebra over the monomial basis, with Nakayama-style
//! stabilization (two consecutive bounds agreeing) as the stopping rule.

use std::collections::BTreeMap;

use num::Zero;

use crate::poly::{Polynomial, Rational};

/// Local length at the origin of the quotient by the ideal generated by
/// `gens`: dim of R/(I + m^N) for stabilizing N. `None` when no
/// stabilization occurs below the cap (non-isolated situation).
pub fn local_length(gens: &[Polynomial], cap: u32) -> Option<usize> {
    let n = gens.first()?.ring().num_vars();
    let mut previous: Option<usize> = None;
    for bound in 1..=cap {
        let dim = truncated_quotient_dim(gens, n, bound);
        if previous == Some(dim) {
            return Some(dim);
        }
        previous = Some(dim);
    }
    None
}

/// dim_Q of Span(monomials of degree < bound) modulo the truncations of
/// all products (monomial)·(generator) that reach below the bound.
fn truncated_quotient_dim(gens: &[Polynomial], n: usize, bound: u32) -> usize {
    let monomials = monomials_below(n, bound);
    let index: BTreeMap<&[u32], usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let cols = monomials.len();

    // Row-echelon set keyed by pivot column.
    let mut pivots: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let min_deg = g
            .terms()
            .iter()
            .map(|(_, m)| m.degree())
            .min()
            .unwrap_or(0);
        if min_deg >= bound {
            continue;
        }
        for multiplier in monomials_below(n, bound - min_deg) {
            let mut row = vec![Rational::zero(); cols];
            let mut non_trivial = false;
            for (c, m) in g.terms() {
                let shifted: Vec<u32> = m
                    .0
                    .iter()
                    .zip(&multiplier)
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(&col) = index.get(shifted.as_slice()) {
                    row[col] = c.clone();
                    non_trivial = true;
                }
            }
            if non_trivial {
                insert_row(&mut pivots, row);
            }
        }
    }
    cols - pivots.len()
}

fn insert_row(pivots: &mut BTreeMap<usize, Vec<Rational>>, mut row: Vec<Rational>) {
    loop {
        let lead = match row.iter().position(|c| !c.is_zero()) {
            Some(i) => i,
            None => return,
        };
        match pivots.get(&lead) {
            Some(pivot) => {
                let factor = &row[lead] / &pivot[lead];
                for (r, p) in row.iter_mut().zip(pivot.iter()) {
                    let t = p * &factor;
                    *r -= t;
                }
            }
            None => {
                pivots.insert(lead, row);
                return;
            }
        }
    }
}

/// All exponent vectors of total degree < bound, in a fixed deterministic
/// order.
fn monomials_below(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    build(&mut out, &mut current, 0, bound);
    out
}

fn build(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, pos: usize, budget: u32) {
    if pos == current.len() {
        out.push(current.clone());
        return;
    }
    for e in 0..budget {
        current[pos] = e;
        build(out, current, pos + 1, budget - e);
    }
    current[pos] = 0;
}

/// Milnor number of a weighted-homogeneous isolated germ with the given
/// weights and weighted degree: the product of (d - w_i)/w_i. `None` when
/// the product is not a non-negative integer (weights do not divide
/// appropriately, or the germ is not isolated).
pub fn weighted_homogeneous_milnor(weights: &[u64], degree: u64) -> Option<usize> {
    let mut acc = Rational::from_integer(1.into());
    for &w in weights {
        if w == 0 || degree < w {
            return None;
        }
        acc *= Rational::new((degree - w).into(), w.into());
    }
    if !acc.is_integer() || acc < Rational::zero() {
        return None;
    }
    acc.to_integer().try_into().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, Ring};

    #[test]
    fn lengths_of_simple_jacobians() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let gens = vec![parse("2*x", &r).unwrap(), parse("3*y^2", &r).unwrap()];
        assert_eq!(local_length(&gens, 16), Some(2));

        let gens = vec![parse("x - x^2", &r).unwrap(), parse("y", &r).unwrap()];
        assert_eq!(local_length(&gens, 16), Some(1));

        let gens = vec![
            parse("x^2", &r).unwrap(),
            parse("x*y", &r).unwrap(),
            parse("y^2", &r).unwrap(),
        ];
        assert_eq!(local_length(&gens, 16), Some(3));
    }

    #[test]
    fn length_ignores_components_off_origin() {
        // Morse point at the origin of x^3 + y^3 - 3xy; the three other
        // critical points of the global system must not contribute.
        let r = Ring::new(&["x", "y"]).unwrap();
        let gens = vec![
            parse("3*x^2 - 3*y", &r).unwrap(),
            parse("3*y^2 - 3*x", &r).unwrap(),
        ];
        assert_eq!(local_length(&gens, 16), Some(1));
    }

    #[test]
    fn non_isolated_does_not_stabilize() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let gens = vec![parse("x", &r).unwrap()];
        assert_eq!(local_length(&gens, 10), None);
    }

    #[test]
    fn product_formula_values() {
        assert_eq!(weighted_homogeneous_milnor(&[1, 1], 2), Some(1)); // x^2+y^2
        assert_eq!(weighted_homogeneous_milnor(&[1, 1], 3), Some(4)); // x^3+y^3
        assert_eq!(weighted_homogeneous_milnor(&[15, 10, 6], 30), Some(8)); // x^2+y^3+z^5
    }
}
