pub mod basis;
pub mod bracketing;

pub use basis::{
    ambiguities, complete_bounded, is_member, normal_form, reduce_set, Ambiguity, AmbiguityKind, GSBasis, RewriteRule,
};
pub use bracketing::{special_bracketing, SpecialBracketing, Template};
