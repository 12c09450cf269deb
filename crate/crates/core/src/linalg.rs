//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn unit(n: usize, k: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    v[k] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn axpy(a: &Rational, x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(xi, yi)| a * xi + yi).collect()
}

/// Reduced row echelon form and pivot columns. Pivot choice is the first
/// non-zero entry in column order, so results are deterministic.
pub fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(m.to_vec()).1.len()
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn kernel(m: &[Vec<Rational>], cols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(m.to_vec());
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[row][free];
        }
        out.push(v);
    }
    out
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &[Rational]) -> bool {
    let mut with: Matrix = basis.to_vec();
    let before = rank(&with);
    with.push(v.to_vec());
    rank(&with) == before
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&mat_vec(&a, v)));
        }
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]];
        assert!(in_span(&basis, &[rat(2), rat(2), rat(5)]));
        assert!(!in_span(&basis, &[rat(1), rat(0), rat(0)]));
    }
}
