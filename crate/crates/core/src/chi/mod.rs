//! The presentation of the ideal generated by the differences `x - x^psi`,
//! on generators `a_i = x_i - x_i^psi` and `b_{i,j} = [x_i,x_j] - [x_i,x_j]^psi`.

pub mod direct;
pub mod model;
pub mod relators;

pub use direct::{chi_direct_presentation, copy_bracket, direct_alphabet, DirectPresentation};
pub use model::{chi_alphabet, BRef, ChiModel, GWord};
pub use relators::{
    enumerate_relators, has_forbidden_monomial, nilpotent_quotient_relators, rel1, rel2_families, rel2_families_with,
    Family, PresentationSpec, Relator, TailReading, Variant,
};
