use num_traits::Zero;

use crate::bilinear::SymBilinearForm;
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// The polynomial family `t ↦ Σ_k t^k C_k` of symmetric bilinear forms.
/// Trailing zero coefficients are dropped; the zero family keeps one.
#[derive(Clone, PartialEq, Debug)]
pub struct FormFamily {
    coeffs: Vec<SymBilinearForm>,
}

impl FormFamily {
    pub fn new(mut coeffs: Vec<SymBilinearForm>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::Shape)?;
        let (n, tag) = (first.dim(), first.tag().to_string());
        if let Some(c) = coeffs.iter().find(|c| c.dim() != n) {
            return Err(Error::DimensionMismatch(n, c.dim()));
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(SymBilinearForm::is_zero) {
            coeffs.pop();
        }
        for c in &mut coeffs {
            if c.tag() != tag {
                *c = c.clone().with_tag(tag.clone());
            }
        }
        Ok(Self { coeffs })
    }

    pub fn constant(q: SymBilinearForm) -> Self {
        Self { coeffs: vec![q] }
    }

    pub fn zero(tag: impl Into<String>, n: usize) -> Self {
        Self::constant(SymBilinearForm::zero(tag, n))
    }

    pub fn coeffs(&self) -> &[SymBilinearForm] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].dim()
    }

    pub fn tag(&self) -> &str {
        self.coeffs[0].tag()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> SymBilinearForm {
        let mut acc = self.coeffs.last().expect("non-empty").clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.scale(t).add(c).expect("shared dimension");
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(self.tag(), self.dim());
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&rat(k as i64)))
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.tag(), self.dim());
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn diag(v: &[i64]) -> SymBilinearForm {
        SymBilinearForm::diagonal("t", &v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn eval_and_derivative() {
        // C0 + t C1 + t² C2
        let f = FormFamily::new(vec![diag(&[1, 2]), diag(&[0, 1]), diag(&[3, 0])]).unwrap();
        assert_eq!(f.eval(&rat(0)), diag(&[1, 2]));
        let t = ratio(1, 2);
        assert_eq!(f.eval(&t).matrix(), SymBilinearForm::diagonal("t", &[ratio(7, 4), ratio(5, 2)]).matrix());
        let df = f.derivative();
        assert_eq!(df.coeffs(), &[diag(&[0, 1]), diag(&[6, 0])]);
        assert_eq!(df.derivative().derivative(), FormFamily::zero("t", 2));
    }

    #[test]
    fn constant_derivative_is_zero() {
        assert!(FormFamily::constant(diag(&[1, -1])).derivative().is_zero());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let f = FormFamily::new(vec![diag(&[1]), diag(&[0])]).unwrap();
        assert_eq!(f.degree(), 0);
        assert!(FormFamily::new(vec![]).is_err());
        assert!(FormFamily::new(vec![diag(&[1]), diag(&[1, 1])]).is_err());
    }
}
