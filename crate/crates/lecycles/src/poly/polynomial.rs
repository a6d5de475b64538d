use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, Ring};

/// A polynomial in canonical form: terms sorted descending under degrevlex,
/// no zero coefficients, no repeated monomials. Two polynomials are equal
/// iff their term lists are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Rational, Monomial)>,
}

const STORE: MonomialOrder = MonomialOrder::DegRevLex;

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Polynomial {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((c, Monomial::one(ring.num_vars())));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Rational::one(), Monomial::var(i, ring.num_vars()))],
        }
    }

    pub fn monomial(ring: &Arc<Ring>, c: Rational, m: Monomial) -> Polynomial {
        Self::from_terms(ring, vec![(c, m)])
    }

    /// Normalizes an arbitrary term list into canonical form.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Rational, Monomial)>) -> Polynomial {
        terms.sort_by(|a, b| STORE.cmp(&b.1, &a.1));
        let mut out: Vec<(Rational, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Rational, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].1.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// Leading term with respect to `ord`.
    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&Rational, &Monomial)> {
        if ord == STORE {
            return self.terms.first().map(|(c, m)| (c, m));
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.1, &b.1))
            .map(|(c, m)| (c, m))
    }

    /// Ecart: total degree minus degree of the leading monomial. Zero for
    /// global degree orders; for the local order it measures how far the
    /// tail reaches above the leading (lowest-degree) term.
    pub fn ecart(&self, ord: MonomialOrder) -> u32 {
        match (self.total_degree(), self.leading_term(ord)) {
            (Some(d), Some((_, m))) => d - m.degree(),
            _ => 0,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a * c, m.clone()))
                .collect(),
        }
    }

    /// self * (c * m); preserves canonical ordering.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (a * c, t.mul(m)))
                .collect(),
        }
    }

    /// Monic with respect to `ord` (leading coefficient 1).
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Some((c, _)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let n = self.ring.num_vars();
        assert!(i < n, "variable index out of range");
        let mut terms = Vec::new();
        for (c, m) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut exps = m.0.clone();
                exps[i] -= 1;
                terms.push((c * Rational::from_integer(e.into()), Monomial(exps)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes each variable by the given polynomial.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.num_vars());
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// f(z + p): moves the point p to the origin.
    pub fn translate(&self, p: &[Rational]) -> Polynomial {
        assert_eq!(p.len(), self.ring.num_vars());
        if p.iter().all(|c| c.is_zero()) {
            return self.clone();
        }
        let images: Vec<Polynomial> = (0..p.len())
            .map(|i| &Polynomial::var(&self.ring, i) + &Polynomial::constant(&self.ring, p[i].clone()))
            .collect();
        self.substitute(&images)
    }

    pub fn eval(&self, p: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &p[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Moves the polynomial into `target`, mapping variable i of the source
    /// ring to variable `var_map[i]` of the target ring. Exponents on
    /// unmapped target variables are zero.
    pub fn map_ring(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        let n = target.num_vars();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut exps = vec![0u32; n];
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        exps[var_map[i]] = e;
                    }
                }
                (c.clone(), Monomial(exps))
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        // Merge of two canonically sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, ma) = &self.terms[i];
            let (b, mb) = &rhs.terms[j];
            match STORE.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((a.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a + b;
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(rhs.terms[j..].iter().cloned());
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &rhs.terms {
            acc = &acc + &self.mul_term(c, m);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.var_name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
