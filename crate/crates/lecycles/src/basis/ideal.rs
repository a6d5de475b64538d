use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use super::buchberger::{basis_of, normal_form};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// A finitely generated ideal with a per-order basis cache. The zero ideal
/// is the one whose generators are all zero (basis: empty list). The cache
/// is single-owner: an `Ideal` value must not be shared across threads
/// while bases are being computed.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    cache: RefCell<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Ideal {
        let generators = if generators.is_empty() {
            vec![Polynomial::zero(ring)]
        } else {
            generators
        };
        debug_assert!(generators.iter().all(|g| g.ring() == ring));
        Ideal {
            ring: ring.clone(),
            generators,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::zero(ring)])
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    /// Reduced Groebner basis (global order) or minimal standard basis
    /// (local order), computed once per order and cached.
    pub fn basis(&self, ord: MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(b) = self.cache.borrow().get(&ord) {
            return b.clone();
        }
        let b = Arc::new(basis_of(&self.generators, ord));
        self.cache.borrow_mut().insert(ord, b.clone());
        b
    }

    /// Ideal membership via a global Groebner basis.
    pub fn contains(&self, g: &Polynomial) -> bool {
        if g.is_zero() {
            return true;
        }
        let basis = self.basis(MonomialOrder::DegRevLex);
        normal_form(g, &basis, MonomialOrder::DegRevLex).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        let basis = self.basis(MonomialOrder::DegRevLex);
        basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero()
    }

    /// Ideal sum I + J.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_polys(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Equality as ideals: identical reduced degrevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        *self.basis(MonomialOrder::DegRevLex) == *other.basis(MonomialOrder::DegRevLex)
    }

    /// The ideal translated so that p becomes the origin.
    pub fn translate(&self, p: &[crate::poly::Rational]) -> Ideal {
        Ideal::new(
            &self.ring,
            self.generators.iter().map(|g| g.translate(p)).collect(),
        )
    }
}
