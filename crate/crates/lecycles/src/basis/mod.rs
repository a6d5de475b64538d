//! Groebner bases for global orders, standard bases (Mora normal form) for
//! the local order at the origin, and the ideal operations the cycle
//! pipeline needs: sum, colon, saturation, elimination, dimension, local
//! quotient dimension, membership and radical containment.

mod buchberger;
mod ideal;
mod ops;


pub use buchberger::{normal_form, reduce_global};
pub use ideal::Ideal;
pub use ops::{
    colon_ideal, colon_poly, dimension, eliminate, intersection, local_dim_at_origin,
    maximal_ideal, radical_contains, saturate, slice_ideal, staircase, Dimension,
    StaircaseReport,
};
