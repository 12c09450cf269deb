use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, mat_vec, unit, Matrix, Vector};
use crate::rational::Rational;

/// Inertia of a real symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Signature {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Self {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    /// `(1, n − 1, 0)`.
    pub fn is_hodge_riemann(&self) -> bool {
        self.n_plus == 1 && self.n_zero == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Symmetric bilinear form given by its Gram matrix over a tagged ordered basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymBilinearForm {
    tag: String,
    g: Matrix,
}

/// Q-orthogonal basis `vectors` with `Q(vectors[k]) = pivots[k]`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub pivots: Vec<Rational>,
    pub vectors: Vec<Vector>,
}

impl Diagonalization {
    pub fn signature(&self) -> Signature {
        let mut s = Signature::new(0, 0, 0);
        for p in &self.pivots {
            if p.is_positive() {
                s.n_plus += 1;
            } else if p.is_negative() {
                s.n_minus += 1;
            } else {
                s.n_zero += 1;
            }
        }
        s
    }

    /// A basis vector with negative value, if any.
    pub fn negative_vector(&self) -> Option<&Vector> {
        self.pivots
            .iter()
            .position(Signed::is_negative)
            .map(|k| &self.vectors[k])
    }
}

impl SymBilinearForm {
    pub fn new(tag: impl Into<String>, g: Matrix) -> Result<Self> {
        let n = g.len();
        if g.iter().any(|row| row.len() != n) {
            return Err(Error::Shape);
        }
        for i in 0..n {
            for j in i + 1..n {
                if g[i][j] != g[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { tag: tag.into(), g })
    }

    pub fn zero(tag: impl Into<String>, n: usize) -> Self {
        Self {
            tag: tag.into(),
            g: vec![vec![Rational::zero(); n]; n],
        }
    }

    pub fn diagonal(tag: impl Into<String>, diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut f = Self::zero(tag, n);
        for (k, v) in diag.iter().enumerate() {
            f.g[k][k] = v.clone();
        }
        f
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.g.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.g[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().flatten().all(Zero::is_zero)
    }

    /// `G v`, i.e. the linear functional `Q(·, v)`.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        mat_vec(&self.g, v)
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        dot(u, &self.apply(v))
    }

    pub fn quad(&self, v: &[Rational]) -> Rational {
        self.eval(v, v)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            tag: self.tag.clone(),
            g: self.g.iter().map(|row| row.iter().map(|x| x * r).collect()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(Self {
            tag: self.tag.clone(),
            g: self
                .g
                .iter()
                .zip(&other.g)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    /// Gram matrix of the form on the span of `basis` (`Pᵀ G P`).
    pub fn restrict(&self, basis: &[Vector], tag: impl Into<String>) -> Self {
        let images: Vec<Vector> = basis.iter().map(|b| self.apply(b)).collect();
        let g = basis
            .iter()
            .map(|u| images.iter().map(|gv| dot(u, gv)).collect())
            .collect();
        Self { tag: tag.into(), g }
    }

    /// Restriction to a subset of the basis vectors.
    pub fn restrict_indices(&self, idx: &[usize], tag: impl Into<String>) -> Self {
        let g = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.g[i][j].clone()).collect())
            .collect();
        Self { tag: tag.into(), g }
    }

    /// Symmetric congruence reduction. Takes a non-zero diagonal pivot when
    /// one exists; otherwise folds a coordinate `q` into `p` where `G[p][q] ≠ 0`,
    /// which leaves `2 G[p][q]` on the diagonal.
    pub fn diagonalize(&self) -> Diagonalization {
        let n = self.dim();
        let mut a = self.g.clone();
        let mut p: Vec<Vector> = (0..n).map(|k| unit(n, k)).collect();
        let mut pivots = Vec::with_capacity(n);
        for r in 0..n {
            let diag = (r..n).find(|&k| !a[k][k].is_zero());
            let k = match diag {
                Some(k) => k,
                None => {
                    let pair = (r..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a[i][j].is_zero());
                    let Some((i, j)) = pair else {
                        // remaining block is zero
                        pivots.extend(std::iter::repeat_n(Rational::zero(), n - r));
                        break;
                    };
                    // e_i ← e_i + e_j
                    for c in 0..n {
                        let t = a[j][c].clone();
                        a[i][c] += t;
                    }
                    for row in a.iter_mut() {
                        let t = row[j].clone();
                        row[i] += t;
                    }
                    let pj = p[j].clone();
                    for (x, y) in p[i].iter_mut().zip(pj) {
                        *x += y;
                    }
                    i
                }
            };
            if k != r {
                a.swap(k, r);
                for row in a.iter_mut() {
                    row.swap(k, r);
                }
                p.swap(k, r);
            }
            let piv = a[r][r].clone();
            for i in r + 1..n {
                if a[i][r].is_zero() {
                    continue;
                }
                let f = &a[i][r] / &piv;
                for c in r..n {
                    let t = &f * &a[r][c];
                    a[i][c] -= t;
                }
                for row in a.iter_mut().skip(r) {
                    let t = &f * &row[r];
                    row[i] -= t;
                }
                let pr = p[r].clone();
                for (x, y) in p[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
            pivots.push(piv);
        }
        Diagonalization { pivots, vectors: p }
    }

    pub fn signature(&self) -> Signature {
        inertia(&self.g)
    }

    pub fn is_psd(&self) -> bool {
        self.signature().n_minus == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature().n_minus == self.dim()
    }

    pub fn is_negative_semidefinite(&self) -> bool {
        self.signature().n_plus == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature().n_plus == self.dim()
    }
}

/// Inertia by fraction-free (Bareiss) symmetric elimination over the
/// integers. The working block equals `c · S` for the true Schur complement
/// `S` and some nonzero `c`; only the sign of `c` is tracked.
fn inertia(g: &Matrix) -> Signature {
    let n = g.len();
    let lcm = g
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut a: Vec<Vec<BigInt>> = g
        .iter()
        .map(|row| row.iter().map(|x| (x * &lcm).to_integer()).collect())
        .collect();
    let mut sig = Signature::new(0, 0, 0);
    let mut prev = BigInt::one();
    let mut negated = false;
    for r in 0..n {
        let k = match (r..n).find(|&k| !a[k][k].is_zero()) {
            Some(k) => k,
            None => {
                let pair = (r..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = pair else {
                    sig.n_zero += n - r;
                    break;
                };
                // e_i ← e_i + e_j, then restart the Bareiss chain on the block.
                for c in r..n {
                    let t = a[j][c].clone();
                    a[i][c] += t;
                }
                for row in a.iter_mut().skip(r) {
                    let t = row[j].clone();
                    row[i] += t;
                }
                let common = a[r..]
                    .iter()
                    .flat_map(|row| &row[r..])
                    .fold(BigInt::zero(), |acc, x| acc.gcd(x));
                for row in a.iter_mut().skip(r) {
                    for x in row.iter_mut().skip(r) {
                        *x /= &common;
                    }
                }
                prev = BigInt::one();
                i
            }
        };
        if k != r {
            a.swap(k, r);
            for row in a.iter_mut() {
                row.swap(k, r);
            }
        }
        let piv = a[r][r].clone();
        if piv.is_positive() != negated {
            sig.n_plus += 1;
        } else {
            sig.n_minus += 1;
        }
        for i in r + 1..n {
            for j in i..n {
                let v = (&piv * &a[i][j] - &a[i][r] * &a[r][j]) / &prev;
                a[j][i] = v.clone();
                a[i][j] = v;
            }
        }
        if piv.is_negative() != prev.is_negative() {
            negated = !negated;
        }
        prev = piv;
    }
    sig
}
