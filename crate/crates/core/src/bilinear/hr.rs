use num_traits::{Signed, Zero};

use super::form::SymBilinearForm;
use crate::error::{Error, Result};
use crate::linalg::{in_span, is_zero_vec, Vector};
use crate::rational::Rational;

/// Signature `(1, n − 1, 0)`.
pub fn is_hr(q: &SymBilinearForm) -> bool {
    q.signature().is_hodge_riemann()
}

/// Hodge-Riemann and `Q(h) > 0`.
pub fn is_hr_wrt(q: &SymBilinearForm, h: &[Rational]) -> bool {
    q.quad(h).is_positive() && is_hr(q)
}

/// Limit of Hodge-Riemann forms with `Q(h) > 0`: exactly one positive
/// direction and `Q(h) > 0` (zero directions allowed).
pub fn is_weak_hr_wrt(q: &SymBilinearForm, h: &[Rational]) -> bool {
    q.quad(h).is_positive() && q.signature().n_plus == 1
}

/// `T(v) = Q(v,h)² − Q(v) Q(h)`. The Hodge-index inequality holds for every
/// `v` exactly when `T` is positive semidefinite.
pub fn hodge_index_defect(q: &SymBilinearForm, h: &[Rational]) -> SymBilinearForm {
    let gh = q.apply(h);
    let qh = q.quad(h);
    let n = q.dim();
    let g = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &gh[i] * &gh[j] - &qh * q.entry(i, j))
                .collect()
        })
        .collect();
    SymBilinearForm::new(format!("defect[{}]", q.tag()), g).expect("symmetric by construction")
}

/// Basis of `{v : Q(v, h) = 0}`. With pivot `p` the first index where
/// `Q(e_p, h) ≠ 0`, the basis is `e_k − (f_k / f_p) e_p` for `k ≠ p`.
pub fn primitive_basis(q: &SymBilinearForm, h: &[Rational]) -> Result<Vec<Vector>> {
    if q.quad(h).is_zero() {
        return Err(Error::DegenerateAnchor);
    }
    let f = q.apply(h);
    let p = f.iter().position(|x| !x.is_zero()).expect("Q(h) ≠ 0 forces Q(·,h) ≠ 0");
    let n = q.dim();
    Ok((0..n)
        .filter(|&k| k != p)
        .map(|k| {
            let mut v = vec![Rational::zero(); n];
            v[k] = Rational::from_integer(1.into());
            v[p] = -(&f[k] / &f[p]);
            v
        })
        .collect())
}

/// `Q` restricted to the primitive space of `h`.
pub fn primitive_restriction(q: &SymBilinearForm, h: &[Rational]) -> Result<SymBilinearForm> {
    let basis = primitive_basis(q, h)?;
    Ok(q.restrict(&basis, format!("primitive[{}]", q.tag())))
}

/// For `Q` Hodge-Riemann, `Q|_{V'} ≤ 0`, `β, γ ∈ V'` null with `γ ≠ 0`, returns
/// the `κ` with `β = κ γ`.
pub fn proportionality_witness(
    q: &SymBilinearForm,
    subspace: &[Vector],
    beta: &[Rational],
    gamma: &[Rational],
) -> Result<Rational> {
    let n = q.dim();
    if beta.len() != n || gamma.len() != n || subspace.iter().any(|v| v.len() != n) {
        return Err(Error::Shape);
    }
    if !is_hr(q) {
        return Err(Error::Hypothesis("Q is not Hodge-Riemann".into()));
    }
    if !q.restrict(subspace, "V'").is_negative_semidefinite() {
        return Err(Error::Hypothesis("Q is not negative semidefinite on V'".into()));
    }
    if is_zero_vec(gamma) {
        return Err(Error::Hypothesis("γ = 0".into()));
    }
    if !in_span(subspace, beta) || !in_span(subspace, gamma) {
        return Err(Error::Hypothesis("β or γ is not in V'".into()));
    }
    if !q.quad(beta).is_zero() || !q.quad(gamma).is_zero() {
        return Err(Error::Hypothesis("β or γ is not Q-null".into()));
    }
    let k = gamma.iter().position(|x| !x.is_zero()).expect("γ ≠ 0");
    let kappa = &beta[k] / &gamma[k];
    if beta.iter().zip(gamma).all(|(b, g)| *b == &kappa * g) {
        Ok(kappa)
    } else {
        Err(Error::NotProportional)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit;
    use crate::rational::rat;

    fn diag(v: &[i64]) -> SymBilinearForm {
        SymBilinearForm::diagonal("t", &v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    fn v(x: &[i64]) -> Vector {
        x.iter().map(|&a| rat(a)).collect()
    }

    #[test]
    fn hr_predicates() {
        assert!(is_hr_wrt(&diag(&[1, -1, -1]), &unit(3, 0)));
        assert!(!is_hr(&diag(&[1, 1, -1])));
        assert!(!is_hr(&diag(&[1, -1, 0])));
        assert!(!is_hr_wrt(&diag(&[1, -1, -1]), &unit(3, 1)));
    }

    #[test]
    fn weak_hr_predicates() {
        assert!(is_weak_hr_wrt(&diag(&[1, 0, -1]), &unit(3, 0)));
        for h in [v(&[1, 0, 0]), v(&[1, 1, 0]), v(&[3, 1, 1])] {
            assert!(!is_weak_hr_wrt(&diag(&[1, 1, -1]), &h));
        }
        // (x1 + x2)² − x3²
        let q = SymBilinearForm::new(
            "t",
            vec![v(&[1, 1, 0]), v(&[1, 1, 0]), v(&[0, 0, -1])],
        )
        .unwrap();
        assert!(is_weak_hr_wrt(&q, &unit(3, 0)));
        assert!(!is_hr(&q));
    }

    #[test]
    fn defect_examples() {
        let t = hodge_index_defect(&diag(&[1, -1]), &unit(2, 0));
        assert_eq!(t.matrix(), diag(&[0, 1]).matrix());
        assert!(t.is_psd());
        let t = hodge_index_defect(&diag(&[1, 1]), &unit(2, 0));
        assert_eq!(t.matrix(), diag(&[0, -1]).matrix());
        assert!(!t.is_psd());
    }

    #[test]
    fn primitive_examples() {
        let r = primitive_restriction(&diag(&[1, -1, -1]), &unit(3, 0)).unwrap();
        assert_eq!(r.matrix(), diag(&[-1, -1]).matrix());
        let r = primitive_restriction(&diag(&[1, 0]), &unit(2, 0)).unwrap();
        assert_eq!(r.matrix(), diag(&[0]).matrix());
        assert!(!r.is_negative_definite());
        assert_eq!(
            primitive_restriction(&diag(&[0, 1]), &unit(2, 0)),
            Err(Error::DegenerateAnchor)
        );
    }

    #[test]
    fn proportionality_examples() {
        let q = diag(&[1, -1, -1]);
        let sub = vec![v(&[1, 1, 0]), v(&[0, 0, 1])];
        let gamma = v(&[1, 1, 0]);
        assert_eq!(proportionality_witness(&q, &sub, &v(&[0, 0, 0]), &gamma).unwrap(), rat(0));
        assert_eq!(proportionality_witness(&q, &sub, &v(&[3, 3, 0]), &gamma).unwrap(), rat(3));
        assert_eq!(proportionality_witness(&q, &sub, &v(&[-2, -2, 0]), &gamma).unwrap(), rat(-2));
        assert!(matches!(
            proportionality_witness(&q, &sub, &v(&[0, 0, 1]), &gamma),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            proportionality_witness(&diag(&[1, 1, -1]), &sub, &gamma, &gamma),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            proportionality_witness(&q, &sub, &gamma, &v(&[0, 0, 0])),
            Err(Error::Hypothesis(_))
        ));
    }
}
