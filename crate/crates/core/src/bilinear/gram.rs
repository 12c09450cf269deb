use super::form::SymBilinearForm;
use crate::error::{Error, Result};
use crate::exterior::{basis_11_real, Form};

pub fn real11_tag(d: usize) -> String {
    format!("real11(d={d})")
}

/// Intersection form `Q_Ω(α, β) = (α ∧ Ω ∧ β) / vol` over [`basis_11_real`],
/// for a real `(d−2, d−2)`-form `Ω`.
pub fn gram(omega: &Form) -> Result<SymBilinearForm> {
    let d = omega.dim();
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    omega.require_bidegree(d - 2, d - 2)?;
    if !omega.is_real() {
        return Err(Error::NotReal);
    }
    let basis = basis_11_real(d)?;
    let left: Vec<Form> = basis.iter().map(|a| a.wedge_unchecked(omega)).collect();
    let n = basis.len();
    let mut g: Vec<Vec<crate::Rational>> = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            let v = if j < i {
                g[j][i].clone()
            } else {
                left[i].wedge_unchecked(&basis[j]).top_ratio()?
            };
            g[i].push(v);
        }
    }
    SymBilinearForm::new(real11_tag(d), g)
}
