use crate::exterior::Form;
use crate::rational::Rational;
use crate::ring::CommutativeRing;

/// An element `Σ_k c_k ζ^k` of `Λ^even ⊗ R[ζ]/(ζ^{d+1})`, with `c_k` forms
/// on `C^d`. Integration takes the `ζ^d` coefficient against `vol`.
#[derive(Clone, PartialEq, Debug)]
pub struct ZetaForm {
    coeffs: Vec<Form>,
}

impl ZetaForm {
    pub fn constant(f: Form) -> Self {
        let d = f.dim();
        let mut coeffs = vec![f.zero_like(); d + 1];
        coeffs[0] = f;
        Self { coeffs }
    }

    /// `ζ^k`, zero for `k > d`.
    pub fn zeta_pow(d: usize, k: usize) -> Self {
        let zero = Form::zero(d).expect("dimension validated by caller");
        let mut coeffs = vec![zero.clone(); d + 1];
        if k <= d {
            coeffs[k] = zero.one_like();
        }
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].dim()
    }

    pub fn coefficient(&self, k: usize) -> &Form {
        &self.coeffs[k]
    }

    /// `∫ vol · ζ^d = 1`; every other component integrates to zero.
    pub fn integrate(&self) -> crate::Result<Rational> {
        let d = self.dim();
        let top = self.coeffs[d].component(d, d);
        if top.is_zero() {
            return Ok(num_traits::Zero::zero());
        }
        top.top_ratio()
    }
}

impl CommutativeRing for ZetaForm {
    fn zero_like(&self) -> Self {
        Self {
            coeffs: vec![self.coeffs[0].zero_like(); self.coeffs.len()],
        }
    }
    fn one_like(&self) -> Self {
        Self::zeta_pow(self.dim(), 0)
    }
    fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len();
        let mut out = self.zero_like();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(n - a) {
                if !cb.is_zero() {
                    out.coeffs[a + b] = out.coeffs[a + b].add(&ca.mul(cb));
                }
            }
        }
        out
    }
    fn scale(&self, r: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale_rational(r)).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Form::is_zero)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.dim() == other.dim()
    }
}
