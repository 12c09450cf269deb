//! Exact symmetric bilinear forms: signatures by congruence reduction, the
//! Hodge-Riemann and weak Hodge-Riemann predicates, and intersection forms.

mod form;
mod gram;
mod hr;

pub use form::{Diagonalization, Signature, SymBilinearForm};
pub use gram::{gram, real11_tag};
pub use hr::{
    hodge_index_defect, is_hr, is_hr_wrt, is_weak_hr_wrt, primitive_basis, primitive_restriction,
    proportionality_witness,
};
