use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// A point of the standard simplex: non-negative rationals summing to 1,
/// indexed by the fixed partition order of [`super::partitions`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::InvalidWeights("empty".into()));
        }
        if x.iter().any(|v| *v < Rational::zero()) {
            return Err(Error::InvalidWeights("negative entry".into()));
        }
        let total: Rational = x.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidWeights(format!("entries sum to {total}, not 1")));
        }
        Ok(Self(x))
    }

    /// The `i`-th vertex of the `(k−1)`-simplex.
    pub fn vertex(k: usize, i: usize) -> Result<Self> {
        if i >= k {
            return Err(Error::InvalidWeights(format!("vertex {i} of a {k}-point simplex")));
        }
        let mut x = vec![Rational::zero(); k];
        x[i] = Rational::one();
        Self::new(x)
    }

    pub fn barycenter(k: usize) -> Result<Self> {
        Self::new(vec![Rational::new(1.into(), (k as i64).into()); k])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the single non-zero weight, if this is a vertex.
    pub fn vertex_index(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..self.0.len()).filter(|&i| !self.0[i].is_zero()).collect();
        (nonzero.len() == 1).then(|| nonzero[0])
    }
}

/// All lattice points `n/r` of the `(k−1)`-simplex with `Σ n_i = r`, in
/// lexicographically decreasing order of `n`. There are `binom(r+k−1, k−1)`.
pub fn simplex_grid(k: usize, resolution: usize) -> Result<Vec<WeightVector>> {
    if k == 0 || resolution == 0 {
        return Err(Error::InvalidWeights("simplex grid needs k ≥ 1 and resolution ≥ 1".into()));
    }
    fn rec(slots: usize, rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for n in (0..=rest).rev() {
            prefix.push(n);
            rec(slots - 1, rest - n, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(k, resolution, &mut Vec::new(), &mut raw);
    let r = rat(resolution as i64);
    raw.into_iter()
        .map(|ns| WeightVector::new(ns.into_iter().map(|n| rat(n as i64) / &r).collect()))
        .collect()
}
