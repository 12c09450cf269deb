use num_traits::Zero;

use super::partition::{partitions, Partition};
use super::weights::WeightVector;
use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};
use crate::ring::{CommutativeRing, UniPoly};

fn first_root<R: CommutativeRing>(roots: &[R]) -> Result<&R> {
    let first = roots
        .first()
        .ok_or_else(|| Error::OutOfRange("empty list of inputs".into()))?;
    if roots.iter().any(|r| !r.compatible(first)) {
        return Err(Error::Hypothesis("inputs live in different ambient rings".into()));
    }
    Ok(first)
}

/// Elementary symmetric functions `c_0, …, c_e` of the inputs.
pub fn chern_classes<R: CommutativeRing>(roots: &[R]) -> Result<Vec<R>> {
    let first = first_root(roots)?;
    let mut c = vec![first.one_like()];
    for a in roots {
        let mut next = c.clone();
        next.push(first.zero_like());
        for k in 1..next.len() {
            next[k] = next[k].add(&c[k - 1].mul(a));
        }
        c = next;
    }
    Ok(c)
}

/// `e_k` of the inputs; `1` for `k = 0` and `0` for `k > e`.
pub fn elementary<R: CommutativeRing>(k: usize, roots: &[R]) -> Result<R> {
    let c = chern_classes(roots)?;
    Ok(c.get(k).cloned().unwrap_or_else(|| c[0].zero_like()))
}

/// `det(chern[rows[i] − i + j])` with out-of-range indices read as zero.
/// `chern[0]` must be the unit. Expanded over column subsets, so the cost is
/// `O(N 2^N)` ring products for `N = rows.len()`.
pub fn jacobi_trudi_det<R: CommutativeRing>(rows: &[u32], chern: &[R]) -> R {
    let one = chern[0].one_like();
    let n = rows.len();
    let entry = |i: usize, j: usize| -> Option<&R> {
        let k = rows[i] as i64 - i as i64 + j as i64;
        if k < 0 {
            return None;
        }
        chern.get(k as usize).filter(|c| !c.is_zero())
    };
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(one.clone());
    for mask in 0usize..(1 << n) {
        let Some(acc) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            dp[mask] = Some(acc);
            continue;
        }
        for col in 0..n {
            if mask >> col & 1 == 1 {
                continue;
            }
            let Some(m) = entry(row, col) else { continue };
            let above = (mask >> (col + 1)).count_ones();
            let mut term = acc.mul(m);
            if above % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut dp[mask | 1 << col];
            *slot = Some(match slot.take() {
                Some(s) => s.add(&term),
                None => term,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or_else(|| one.zero_like())
}

/// Schur polynomial of the inputs for partition `λ`.
pub fn schur<R: CommutativeRing>(lambda: &Partition, roots: &[R]) -> Result<R> {
    schur_padded(lambda, roots, lambda.len())
}

/// [`schur`] with the partition padded by zeros to length `n`.
pub fn schur_padded<R: CommutativeRing>(lambda: &Partition, roots: &[R], n: usize) -> Result<R> {
    let c = chern_classes(roots)?;
    Ok(jacobi_trudi_det(&lambda.padded(n), &c))
}

/// Coefficients `s_λ^{(0)}, …, s_λ^{(|λ|)}` of `x^j` in `s_λ(a_1 + x, …, a_e + x)`.
pub fn derived_schur_all<R: CommutativeRing>(lambda: &Partition, roots: &[R]) -> Result<Vec<R>> {
    first_root(roots)?;
    let lifted: Vec<UniPoly<R>> = roots.iter().map(UniPoly::shifted).collect();
    let s = schur(lambda, &lifted)?;
    Ok((0..=lambda.weight()).map(|j| s.coefficient(j)).collect())
}

/// `s_λ^{(j)}`; zero for `j > |λ|`.
pub fn derived_schur<R: CommutativeRing>(lambda: &Partition, roots: &[R], j: usize) -> Result<R> {
    let all = derived_schur_all(lambda, roots)?;
    Ok(all.get(j).cloned().unwrap_or_else(|| all[0].zero_like()))
}

/// `c_p(E⟨δ⟩) = Σ_{k=0}^{p} binom(e−k, p−k) c_k δ^{p−k}` for `0 ≤ p ≤ e`,
/// where `chern = [c_0, …, c_e]`.
pub fn twisted_chern<R: CommutativeRing>(chern: &[R], e: usize, delta: &R, p: usize) -> Result<R> {
    if chern.len() != e + 1 {
        return Err(Error::OutOfRange(format!(
            "expected {} Chern classes for rank {e}, got {}",
            e + 1,
            chern.len()
        )));
    }
    if p > e {
        return Err(Error::OutOfRange(format!("degree p = {p} exceeds rank e = {e}")));
    }
    let mut acc = chern[0].zero_like();
    for k in 0..=p {
        let coeff = Rational::from_integer(binomial((e - k) as i64, (p - k) as i64));
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&chern[k].mul(&delta.pow(p - k)).scale(&coeff));
    }
    Ok(acc)
}

/// `Γ_x = Σ_i x_i s_{λ^{(i)}}` over `partitions(b, e)`.
pub fn gamma<R: CommutativeRing>(x: &WeightVector, b: usize, e: usize, roots: &[R]) -> Result<R> {
    let parts = partitions(b, e);
    if parts.len() != x.len() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} partitions of {b} with parts ≤ {e}",
            x.len(),
            parts.len()
        )));
    }
    let first = first_root(roots)?;
    let mut acc = first.zero_like();
    for (lambda, w) in parts.iter().zip(x.weights()) {
        if w.is_zero() {
            continue;
        }
        acc = acc.add(&schur(lambda, roots)?.scale(w));
    }
    Ok(acc)
}
