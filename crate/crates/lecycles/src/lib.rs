//! Exact computer algebra for hypersurface singularities: multivariate
//! polynomials over the rationals, Groebner and standard bases, relative
//! polar ideals, Le numbers, Milnor numbers and mu-constancy verdicts.

pub mod basis;
pub mod checker;
mod error;
pub mod lenum;
pub mod oracle;
pub mod pipeline;
pub mod poly;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
