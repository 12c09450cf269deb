//! Partitions, elementary symmetric and Schur polynomials over any
//! [`CommutativeRing`](crate::ring::CommutativeRing), derived Schur
//! polynomials, twisted Chern classes and convex combinations of Schur classes.
//!
//! The determinant convention: for `λ = (λ_1, …, λ_N)` the Schur polynomial is
//! `det(c_{λ_i − i + j})_{1≤i,j≤N}` with `c_0 = 1` and `c_k = 0` for `k < 0`
//! or `k > e`, where `c_k` is the k-th elementary symmetric function of the
//! `e` inputs. With this convention `s_(1,1)(a, b) = a² + ab + b²`.

mod partition;
mod schur;
mod weights;

pub use partition::{partitions, Partition};
pub use schur::{
    chern_classes, derived_schur, derived_schur_all, elementary, gamma, jacobi_trudi_det,
    schur, schur_padded, twisted_chern,
};
pub use weights::{simplex_grid, WeightVector};
