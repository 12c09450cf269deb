//! Independent reference implementations used to cross-check the library.
//! None of these call the code paths they are compared against.

#![allow(dead_code)]

use hrlab::exterior::{Form, HermitianMatrix};
use hrlab::rational::{rat, GaussianRational, Rational};
use hrlab::ring::MPoly;
use num_traits::{One, Zero};

/// Generators as integers: `dz_k ↦ k`, `dz̄_k ↦ d + k`. Sorting by this code
/// gives the canonical order (all `dz` ascending, then all `dz̄` ascending).
type Word = Vec<usize>;

fn words_of(f: &Form) -> Vec<(Word, GaussianRational)> {
    let d = f.dim();
    f.terms()
        .map(|(m, c)| {
            let mut w: Word = m.holo_indices();
            w.extend(m.anti_indices().into_iter().map(|k| d + k));
            (w, c.clone())
        })
        .collect()
}

/// Sign of the permutation sorting `w` (by counting inversions), or `None`
/// if a generator repeats.
fn sort_sign(w: &[usize]) -> Option<bool> {
    let mut inversions = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] == w[j] {
                return None;
            }
            if w[i] > w[j] {
                inversions += 1;
            }
        }
    }
    Some(inversions % 2 == 1)
}

/// Coefficient of `dz_1∧…∧dz_d∧dz̄_1∧…∧dz̄_d` in the product of `factors`,
/// expanded word by word.
pub fn expanded_top_coefficient(d: usize, factors: &[Form]) -> GaussianRational {
    let mut acc: Vec<(Word, GaussianRational)> = vec![(Vec::new(), GaussianRational::one())];
    for f in factors {
        let mut next = Vec::new();
        for (w, c) in &acc {
            for (w2, c2) in words_of(f) {
                let mut cat = w.clone();
                cat.extend(w2);
                if sort_sign(&cat).is_some() {
                    next.push((cat, c * &c2));
                }
            }
        }
        acc = next;
    }
    let target: Word = (1..=2 * d).collect();
    let mut total = GaussianRational::zero();
    for (w, c) in acc {
        let mut sorted = w.clone();
        sorted.sort_unstable();
        if sorted != target {
            continue;
        }
        match sort_sign(&w) {
            Some(true) => total -= &c,
            Some(false) => total += &c,
            None => {}
        }
    }
    total
}

/// `vol = ∏_k i dz_k∧dz̄_k`, expanded as a word.
pub fn vol_oracle(d: usize) -> GaussianRational {
    let factors: Vec<Form> = (1..=d)
        .map(|k| Form::from_factors(d, &[k], &[k], GaussianRational::i()).unwrap())
        .collect();
    expanded_top_coefficient(d, &factors)
}

/// `(f_1 ∧ … ∧ f_m) / vol` computed by word expansion.
pub fn top_ratio_oracle(d: usize, factors: &[Form]) -> GaussianRational {
    &expanded_top_coefficient(d, factors) / &vol_oracle(d)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting the largest element at `pos` adds `len − pos` inversions
            let extra = p.len() - pos;
            out.push((q, odd ^ (extra % 2 == 1)));
        }
    }
    out
}

/// `Σ_{σ,τ} sgn σ sgn τ ∏_k A_k[σ(k)][τ(k)]`, which is `d!` times the mixed
/// discriminant of `A_1, …, A_d`.
pub fn mixed_discriminant_sum(mats: &[HermitianMatrix]) -> GaussianRational {
    let d = mats.len();
    let perms = permutations(d);
    let mut total = GaussianRational::zero();
    for (s, so) in &perms {
        for (t, to) in &perms {
            let mut prod = GaussianRational::one();
            for k in 0..d {
                prod = &prod * mats[k].get(s[k], t[k]);
            }
            if so ^ to {
                total -= &prod;
            } else {
                total += &prod;
            }
        }
    }
    total
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(rat).fold(Rational::one(), |a, b| a * b)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<MPoly>]) -> MPoly {
    use hrlab::ring::CommutativeRing;
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut total = MPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// `e_k(x_0, …, x_{n−1})` as a sum over `k`-subsets.
pub fn elementary_oracle(k: usize, vars: &[MPoly]) -> MPoly {
    use hrlab::ring::CommutativeRing;
    let n = vars.len();
    let mut total = MPoly::zero();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut prod = MPoly::one();
        for (i, v) in vars.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod = prod.mul(v);
            }
        }
        total = total.add(&prod);
    }
    total
}

/// Schur polynomial via the determinant `det(c_{λ_i − i + j})` expanded by cofactors.
pub fn schur_oracle(parts: &[u32], vars: &[MPoly]) -> MPoly {
    let n = parts.len();
    let c = |k: i64| -> MPoly {
        if k < 0 || k as usize > vars.len() {
            MPoly::zero()
        } else {
            elementary_oracle(k as usize, vars)
        }
    };
    let m: Vec<Vec<MPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| c(parts[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    cofactor_det(&m)
}

/// Determinant of a 2×2 Hermitian matrix.
pub fn det2(a: &HermitianMatrix) -> Rational {
    (a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0)).re
}
