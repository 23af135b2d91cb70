//! Bookkeeping in the Grothendieck ring of varieties over `ℤ[L]`, restricted
//! to the free module on symmetric powers of a curve and its Jacobian.

mod class;
mod zeta;
mod ratfun;
mod flips;

pub use class::{reduce_sym, Basis, K0Class};
pub use zeta::{zeta_identity_checks, l_identity_lhs, zeta_at_l, zeta_jac_tail, ZetaIdentityReport, SymSeries};
pub use ratfun::{integer_coeffs, proj_class, Poly, RationalFunctionL};
pub use flips::{
    delta_m, expected_moduli_class, flip_difference, p_polynomial, p_sum_closed_form, moduli_class,
    moduli_report, flip_class, verify_middle, verify_p_sum, x_class, Check, ModuliReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrothendieckError {
    #[error("genus {0} is below 2")]
    GenusTooSmall(usize),
    #[error("degree {d} must be odd and greater than {}", 2 * .g - 2)]
    BadDegree { d: usize, g: usize },
    #[error("step {i} out of range 0..={max}")]
    BadStep { i: usize, max: usize },
    #[error("checkpoint failed: {0}")]
    Checkpoint(String),
}
