//! Exact exterior algebra of (p,q)-forms on `C^d`.
//!
//! Forms are sparse maps from canonical monomials to Gaussian rationals.
//! The supported dimension range is `1..=MAX_DIM`.

mod form;
mod hermitian;
mod monomial;

pub use form::{vol_coefficient, Form};
pub use hermitian::{basis_11_real, complex_det, HermitianMatrix};
pub use monomial::{mask_indices, Monomial};

pub const MAX_DIM: usize = 8;

/// Free-function form of [`HermitianMatrix::to_form`].
pub fn hermitian_to_form(h: &HermitianMatrix) -> Form {
    h.to_form()
}

/// Free-function form of [`HermitianMatrix::from_form`].
pub fn form_to_hermitian(a: &Form) -> crate::error::Result<HermitianMatrix> {
    HermitianMatrix::from_form(a)
}
