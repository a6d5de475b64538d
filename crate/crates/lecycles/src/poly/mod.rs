//! Exact multivariate polynomial arithmetic over the rationals.

mod frame;
mod monomial;
mod order;
mod parser;
mod polynomial;
mod ring;

pub use frame::Frame;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parser::parse;
pub use polynomial::Polynomial;
pub use ring::Ring;

pub type Rational = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
