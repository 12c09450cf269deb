use num_traits::{One, Zero};

use super::form::{check_dim, Form};
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::rational::{GaussianRational, Rational};

/// A `d×d` Hermitian matrix with Gaussian-rational entries. It stands for the
/// real (1,1)-form `i Σ_{j,k} H[j][k] dz_j ∧ dz̄_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianMatrix {
    entries: Vec<Vec<GaussianRational>>,
}

impl HermitianMatrix {
    pub fn new(entries: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let d = entries.len();
        check_dim(d)?;
        if entries.iter().any(|row| row.len() != d) {
            return Err(Error::Shape);
        }
        for j in 0..d {
            for k in j..d {
                if entries[j][k] != entries[k][j].conj() {
                    return Err(Error::NotHermitian(j, k));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn identity(d: usize) -> Result<Self> {
        Self::diagonal(&vec![Rational::one(); d])
    }

    pub fn diagonal(diag: &[Rational]) -> Result<Self> {
        let d = diag.len();
        let mut entries = vec![vec![GaussianRational::zero(); d]; d];
        for (k, v) in diag.iter().enumerate() {
            entries[k][k] = GaussianRational::real(v.clone());
        }
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<GaussianRational>] {
        &self.entries
    }

    pub fn get(&self, j: usize, k: usize) -> &GaussianRational {
        &self.entries[j][k]
    }

    /// `B* B + I` for a square matrix `B`; positive definite by construction.
    pub fn gram_plus_identity(b: &[Vec<GaussianRational>]) -> Result<Self> {
        let d = b.len();
        if b.iter().any(|row| row.len() != d) {
            return Err(Error::Shape);
        }
        let mut entries = vec![vec![GaussianRational::zero(); d]; d];
        for j in 0..d {
            for k in 0..d {
                let mut acc = if j == k {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                };
                for r in 0..d {
                    acc += &(&b[r][j].conj() * &b[r][k]);
                }
                entries[j][k] = acc;
            }
        }
        Self::new(entries)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Self { entries })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x.scale(r)).collect())
                .collect(),
        }
    }

    /// `α = i Σ_{j,k} H[j][k] dz_j ∧ dz̄_k`.
    pub fn to_form(&self) -> Form {
        let d = self.dim();
        let mut f = Form::zero(d).expect("validated dimension");
        let i = GaussianRational::i();
        for j in 0..d {
            for k in 0..d {
                f.add_term(Monomial::new(1 << j, 1 << k), &i * &self.entries[j][k]);
            }
        }
        f
    }

    /// Inverse of [`HermitianMatrix::to_form`] on real (1,1)-forms.
    pub fn from_form(a: &Form) -> Result<Self> {
        a.require_bidegree(1, 1)?;
        if !a.is_real() {
            return Err(Error::NotReal);
        }
        let d = a.dim();
        let minus_i = GaussianRational::from_ints(0, -1);
        let entries = (0..d)
            .map(|j| {
                (0..d)
                    .map(|k| &minus_i * &a.coefficient(&Monomial::new(1 << j, 1 << k)))
                    .collect()
            })
            .collect();
        Self::new(entries)
    }

    /// Coordinates in the ordered basis of [`basis_11_real`].
    pub fn coordinates(&self) -> Vec<Rational> {
        let d = self.dim();
        let mut out: Vec<Rational> = (0..d).map(|j| self.entries[j][j].re.clone()).collect();
        for j in 0..d {
            for k in j + 1..d {
                // H[j][k] = x·1 + y·(−i) for the pair (E_jk + E_kj, −iE_jk + iE_kj).
                out.push(self.entries[j][k].re.clone());
                out.push(-&self.entries[j][k].im);
            }
        }
        out
    }

    pub fn from_coordinates(d: usize, coords: &[Rational]) -> Result<Self> {
        check_dim(d)?;
        if coords.len() != d * d {
            return Err(Error::DimensionMismatch(coords.len(), d * d));
        }
        let mut entries = vec![vec![GaussianRational::zero(); d]; d];
        for j in 0..d {
            entries[j][j] = GaussianRational::real(coords[j].clone());
        }
        let mut pos = d;
        for j in 0..d {
            for k in j + 1..d {
                let z = GaussianRational::new(coords[pos].clone(), -&coords[pos + 1]);
                entries[k][j] = z.conj();
                entries[j][k] = z;
                pos += 2;
            }
        }
        Self::new(entries)
    }

    /// Determinant of the leading `m×m` block; real because the block is Hermitian.
    pub fn leading_minor(&self, m: usize) -> Rational {
        let block: Vec<Vec<GaussianRational>> =
            self.entries[..m].iter().map(|row| row[..m].to_vec()).collect();
        complex_det(block).re
    }

    pub fn det(&self) -> Rational {
        self.leading_minor(self.dim())
    }
}

/// Determinant over the Gaussian rationals by fraction-field elimination.
pub fn complex_det(mut a: Vec<Vec<GaussianRational>>) -> GaussianRational {
    let n = a.len();
    let mut det = GaussianRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return GaussianRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let inv = a[c][c].inv().expect("nonzero pivot");
        det = &det * &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= &t;
            }
        }
    }
    det
}

/// Ordered basis of the real (1,1)-forms, length `d²`: first `i dz_j∧dz̄_j`
/// for each `j`, then for each `j < k` the pair
/// `i(dz_j∧dz̄_k + dz_k∧dz̄_j)` and `dz_j∧dz̄_k − dz_k∧dz̄_j` (scale 1).
pub fn basis_11_real(d: usize) -> Result<Vec<Form>> {
    check_dim(d)?;
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    let mut out = Vec::with_capacity(d * d);
    for j in 0..d {
        out.push(Form::from_monomial(d, Monomial::new(1 << j, 1 << j), i.clone())?);
    }
    for j in 0..d {
        for k in j + 1..d {
            let jk = Monomial::new(1 << j, 1 << k);
            let kj = Monomial::new(1 << k, 1 << j);
            let mut sym = Form::zero(d)?;
            sym.add_term(jk, i.clone());
            sym.add_term(kj, i.clone());
            let mut anti = Form::zero(d)?;
            anti.add_term(jk, one.clone());
            anti.add_term(kj, -&one);
            out.push(sym);
            out.push(anti);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn sample() -> HermitianMatrix {
        HermitianMatrix::new(vec![
            vec![g(2, 0), g(1, -3), g(0, 1)],
            vec![g(1, 3), g(5, 0), GaussianRational::new(ratio(1, 2), rat(2))],
            vec![g(0, -1), GaussianRational::new(ratio(1, 2), rat(-2)), g(-1, 0)],
        ])
        .unwrap()
    }

    #[test]
    fn rejects_non_hermitian() {
        let bad = HermitianMatrix::new(vec![vec![g(1, 0), g(1, 1)], vec![g(1, 1), g(1, 0)]]);
        assert_eq!(bad, Err(Error::NotHermitian(0, 1)));
        let bad = HermitianMatrix::new(vec![vec![g(1, 1)]]);
        assert_eq!(bad, Err(Error::NotHermitian(0, 0)));
    }

    #[test]
    fn identity_form() {
        let f = HermitianMatrix::identity(3).unwrap().to_form();
        let mut expected = Form::zero(3).unwrap();
        for j in 1..=3 {
            expected = expected.add_unchecked(&Form::from_factors(3, &[j], &[j], g(0, 1)).unwrap());
        }
        assert_eq!(f, expected);
    }

    #[test]
    fn round_trip_and_reality() {
        let h = sample();
        let f = h.to_form();
        assert!(f.is_real());
        assert_eq!(HermitianMatrix::from_form(&f).unwrap(), h);
        assert_eq!(HermitianMatrix::from_coordinates(3, &h.coordinates()).unwrap(), h);
    }

    #[test]
    fn imaginary_offdiagonal_is_real_form() {
        let h = HermitianMatrix::new(vec![
            vec![g(0, 0), GaussianRational::imag(ratio(1, 2))],
            vec![GaussianRational::imag(ratio(-1, 2)), g(0, 0)],
        ])
        .unwrap();
        let f = h.to_form();
        assert_eq!(f.conjugate(), f);
    }

    #[test]
    fn from_form_rejects_bad_input() {
        assert!(matches!(
            HermitianMatrix::from_form(&Form::dz(2, 1).unwrap()),
            Err(Error::WrongBidegree { .. })
        ));
        let non_real = Form::from_factors(2, &[1], &[2], g(1, 0)).unwrap();
        assert_eq!(HermitianMatrix::from_form(&non_real), Err(Error::NotReal));
    }

    #[test]
    fn basis_shape_and_coordinates() {
        assert_eq!(basis_11_real(1).unwrap().len(), 1);
        assert_eq!(basis_11_real(2).unwrap().len(), 4);
        let basis = basis_11_real(3).unwrap();
        assert_eq!(basis.len(), 9);
        assert!(basis.iter().all(Form::is_real));
        let h = sample();
        let mut combo = Form::zero(3).unwrap();
        for (c, b) in h.coordinates().iter().zip(&basis) {
            combo = combo.add_unchecked(&b.scale_rational(c));
        }
        assert_eq!(combo, h.to_form());
    }

    #[test]
    fn minors() {
        let h = sample();
        assert_eq!(h.leading_minor(1), rat(2));
        assert_eq!(h.leading_minor(2), rat(10 - 10));
        assert_eq!(HermitianMatrix::identity(4).unwrap().det(), rat(1));
    }
}
