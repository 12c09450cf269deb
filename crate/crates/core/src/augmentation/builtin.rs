use super::family::FormFamily;
use crate::bilinear::SymBilinearForm;
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// `R_t(x) = (1+t)x_1² + 2x_1x_2 + (1−t)x_2² − (1+t)Σ_{i≥3} x_i²` on `R^n`:
/// weak Hodge-Riemann at `t = 0` with a one-dimensional kernel, Hodge-Riemann
/// for small `t ≠ 0`, constant derivative `diag(1, −1, …, −1)`.
pub fn remark_family(n: usize) -> Result<FormFamily> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} (need n ≥ 2)")));
    }
    let tag = format!("R^{n}");
    let mut c0 = vec![vec![rat(0); n]; n];
    let mut c1 = vec![vec![rat(0); n]; n];
    c0[0][0] = rat(1);
    c0[0][1] = rat(1);
    c0[1][0] = rat(1);
    c0[1][1] = rat(1);
    c1[0][0] = rat(1);
    c1[1][1] = rat(-1);
    for k in 2..n {
        c0[k][k] = rat(-1);
        c1[k][k] = rat(-1);
    }
    FormFamily::new(vec![
        SymBilinearForm::new(tag.clone(), c0)?,
        SymBilinearForm::new(tag, c1)?,
    ])
}

/// The anchor `h = e_1`.
pub fn remark_anchor(n: usize) -> Vec<Rational> {
    crate::linalg::unit(n, 0)
}
