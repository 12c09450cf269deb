use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exterior::{basis_11_real, Form, HermitianMatrix};
use crate::linalg::Vector;
use crate::positivity::is_positive_definite_11;
use crate::random::positive_hermitian;
use crate::rational::Rational;

/// `V = W ⊕ Rζ` with `W` the real (1,1)-forms on `C^d` in the order of
/// [`basis_11_real`] and `ζ` appended as the last basis vector.
#[derive(Clone, Debug)]
pub struct AugmentedSpace {
    d: usize,
    h: HermitianMatrix,
    omegas: Vec<HermitianMatrix>,
    h_form: Form,
    omega_forms: Vec<Form>,
    w_basis: Vec<Form>,
}

impl AugmentedSpace {
    pub fn new(h: HermitianMatrix, omegas: Vec<HermitianMatrix>) -> Result<Self> {
        let d = h.dim();
        if omegas.is_empty() {
            return Err(Error::OutOfRange("e = 0".into()));
        }
        if let Some(w) = omegas.iter().find(|w| w.dim() != d) {
            return Err(Error::DimensionMismatch(d, w.dim()));
        }
        if !is_positive_definite_11(&h) {
            return Err(Error::NotStrictlyPositive("h".into()));
        }
        if let Some(j) = omegas.iter().position(|w| !is_positive_definite_11(w)) {
            return Err(Error::NotStrictlyPositive(format!("ω_{}", j + 1)));
        }
        Ok(Self {
            d,
            h_form: h.to_form(),
            omega_forms: omegas.iter().map(HermitianMatrix::to_form).collect(),
            w_basis: basis_11_real(d)?,
            h,
            omegas,
        })
    }

    pub fn from_forms(h: &Form, omegas: &[Form]) -> Result<Self> {
        let omegas = omegas.iter().map(HermitianMatrix::from_form).collect::<Result<_>>()?;
        Self::new(HermitianMatrix::from_form(h)?, omegas)
    }

    /// Identity `h` and `e` forms `B*B + I` drawn from `rng`.
    pub fn random<R: Rng>(rng: &mut R, d: usize, e: usize, bound: i64) -> Result<Self> {
        let omegas = (0..e).map(|_| positive_hermitian(rng, d, bound)).collect();
        Self::new(HermitianMatrix::identity(d)?, omegas)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn e(&self) -> usize {
        self.omegas.len()
    }

    /// `d² + 1`.
    pub fn dim(&self) -> usize {
        self.d * self.d + 1
    }

    pub fn zeta_index(&self) -> usize {
        self.d * self.d
    }

    pub fn h(&self) -> &HermitianMatrix {
        &self.h
    }

    pub fn omegas(&self) -> &[HermitianMatrix] {
        &self.omegas
    }

    pub fn h_form(&self) -> &Form {
        &self.h_form
    }

    pub fn omega_forms(&self) -> &[Form] {
        &self.omega_forms
    }

    pub fn w_basis(&self) -> &[Form] {
        &self.w_basis
    }

    /// Coordinates of `h` in `V`.
    pub fn h_vector(&self) -> Vector {
        let mut v = self.h.coordinates();
        v.push(Rational::zero());
        v
    }

    pub fn tag(&self) -> String {
        format!("real11(d={})+zeta", self.d)
    }
}
