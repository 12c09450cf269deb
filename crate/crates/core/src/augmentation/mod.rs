//! The augmented space `V = W ⊕ Rζ`, the forms `Q_i`, the families
//! `R_{i,t} = Σ_k binom(d−i+k, k) t^k Q_{i−k}`, and exact checks of the
//! augmentation properties.
//!
//! `ζ` generates a truncated polynomial ring `R[ζ]/(ζ^{d+1})` with
//! `∫ ζ^d = 1`, so `∫ β s_λ(ω + ζ) ζ^i h^{d−i} β′` reduces to top-degree
//! form integrals on `C^d`.

mod builtin;
mod checks;
mod family;
mod model;
mod space;
mod verdict;
mod zeta;

pub use builtin::{remark_anchor, remark_family};
pub use checks::{
    check_property_a, check_property_b, default_t_samples, derivative_inequality_form,
    PropertyAReport, PropertyBReport, SampleVerdict,
};
pub use family::FormFamily;
pub use model::{build_qi, build_qi_product, build_r, AugmentationModel};
pub use space::AugmentedSpace;
pub use verdict::{
    verify_augmentation1, verify_augmentation2, verify_augmentation2_family, verify_recursion,
    Aug1Verdict, Aug2Verdict, Outcome, RecursionStep, RecursionVerdict,
};
pub use zeta::ZetaForm;
