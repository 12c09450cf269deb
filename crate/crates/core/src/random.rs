//! Seeded generators. Every task draws from its own ChaCha stream selected by
//! `(campaign seed, task index)`, so results do not depend on scheduling.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bilinear::SymBilinearForm;
use crate::exterior::{Form, HermitianMatrix};
use crate::linalg::Matrix;
use crate::rational::{ratio, GaussianRational};

/// Default half-width of the integer box for random entries.
pub const DEFAULT_BOX: i64 = 2;

pub fn task_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn gaussian_integer<R: Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::from_ints(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))
}

pub fn gaussian_matrix<R: Rng>(rng: &mut R, d: usize, bound: i64) -> Vec<Vec<GaussianRational>> {
    (0..d)
        .map(|_| (0..d).map(|_| gaussian_integer(rng, bound)).collect())
        .collect()
}

/// `B* B + I` with `B` drawn from the Gaussian integers in `[−bound, bound]²`.
pub fn positive_hermitian<R: Rng>(rng: &mut R, d: usize, bound: i64) -> HermitianMatrix {
    HermitianMatrix::gram_plus_identity(&gaussian_matrix(rng, d, bound)).expect("square")
}

/// `e` strictly positive (1,1)-forms on `C^d`.
pub fn positive_forms<R: Rng>(rng: &mut R, d: usize, e: usize, bound: i64) -> Vec<Form> {
    (0..e).map(|_| positive_hermitian(rng, d, bound).to_form()).collect()
}

/// Arbitrary Hermitian matrix with Gaussian-integer entries.
pub fn hermitian<R: Rng>(rng: &mut R, d: usize, bound: i64) -> HermitianMatrix {
    let mut m = vec![vec![GaussianRational::zero(); d]; d];
    for j in 0..d {
        m[j][j] = GaussianRational::from_ints(rng.random_range(-bound..=bound), 0);
        for k in j + 1..d {
            let z = gaussian_integer(rng, bound);
            m[k][j] = z.conj();
            m[j][k] = z;
        }
    }
    HermitianMatrix::new(m).expect("Hermitian by construction")
}

/// `Σ a_k dz_k` with Gaussian-integer coefficients.
pub fn form_10<R: Rng>(rng: &mut R, d: usize, bound: i64) -> Form {
    let mut out = Form::zero(d).expect("dimension checked by caller");
    for k in 1..=d {
        let c = gaussian_integer(rng, bound);
        out = out.add_unchecked(&Form::dz(d, k).expect("in range").scale(&c));
    }
    out
}

/// Symmetric matrix with entries `p/q`, `|p| ≤ bound`, `1 ≤ q ≤ 3`.
pub fn symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> SymBilinearForm {
    let mut g: Matrix = vec![vec![Zero::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let r = ratio(rng.random_range(-bound..=bound), rng.random_range(1..=3));
            g[j][i] = r.clone();
            g[i][j] = r;
        }
    }
    SymBilinearForm::new("random", g).expect("symmetric by construction")
}
