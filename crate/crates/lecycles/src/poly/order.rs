use std::cmp::Ordering;

use super::Monomial;

/// Term orders. The global orders are well-orders with 1 smallest; the local
/// order reverses the degree comparison so 1 is the largest monomial, which
/// is what Mora normal form at the origin needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Negative degree, revlex tie-break ("ds" in the usual CAS notation).
    LocalDegRevLex,
    /// Elimination order for the first `cut` variables: block degree first,
    /// then degrevlex inside each block.
    Elim { cut: usize },
}

impl MonomialOrder {
    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::LocalDegRevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::LocalDegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
                Ordering::Equal => revlex_tie(&a.0, &b.0),
            },
            MonomialOrder::Elim { cut } => {
                let da: u32 = a.0[..cut].iter().sum();
                let db: u32 = b.0[..cut].iter().sum();
                da.cmp(&db)
                    .then_with(|| degrevlex(&a.0[..cut], &b.0[..cut]))
                    .then_with(|| degrevlex(&a.0[cut..], &b.0[cut..]))
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex_tie(a, b))
}

// Equal total degree assumed: the monomial whose last non-zero entry of
// a - b is negative is the larger one.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn one_is_smallest_for_global_orders() {
        let one = m(&[0, 0]);
        let x = m(&[1, 0]);
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            assert_eq!(ord.cmp(&one, &x), Ordering::Less);
        }
    }

    #[test]
    fn one_is_largest_for_local_order() {
        let one = m(&[0, 0]);
        let x = m(&[1, 0]);
        assert_eq!(MonomialOrder::LocalDegRevLex.cmp(&one, &x), Ordering::Greater);
    }

    #[test]
    fn degrevlex_classic() {
        // x^2 y > x y^2 in degrevlex with x before y? Both degree 3;
        // last differing exponent: y: 1 vs 2 -> x^2 y is larger.
        let a = m(&[2, 1]);
        let b = m(&[1, 2]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn elim_order_puts_block_first() {
        // Eliminating the first variable w: any monomial containing w beats
        // any monomial without it.
        let ord = MonomialOrder::Elim { cut: 1 };
        let w = m(&[1, 0, 0]);
        let x5 = m(&[0, 5, 0]);
        assert_eq!(ord.cmp(&w, &x5), Ordering::Greater);
    }
}
