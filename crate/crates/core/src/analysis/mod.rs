//! Finite-dimensional quotients, the semidirect model of `chi`, and the
//! dimension and nilpotency checks built on them.

pub mod dims;
pub mod findim;
pub mod identities;
pub mod linalg;
pub mod quotient;
pub mod verify;

pub use dims::{
    class_upper_bound, dim_h2_free_nilpotent, dim_im_rho, dim_r, dim_report, r_polynomial, ChiComputation, DimReport,
    QUOTIENT_BOUND,
};
pub use findim::{FinDimLie, Vector};
pub use quotient::{
    free_nilpotent, quotient_structure, quotient_structure_with, semidirect_chi, QuotientAlgebra, SemidirectChi,
};
pub use verify::{
    difference_bracket_trials, f_n_survives, free_arithmetic_trials, run_verifications, Check, VerificationReport,
};
