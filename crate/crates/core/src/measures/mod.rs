//! Motivic measures: signed Hodge and Betti realizations, the value at
//! `L = 1`, and point counting over small finite fields.

mod curve;
mod finite_field;
mod hodge;
mod zeta;

pub use curve::{
    count_curve, count_realize, numerator_from_counts, numerator_poly, projective_count, CountReport, CurveData,
    CurveFixture, SUPPORTED_Q,
};
pub use finite_field::{prime_power, FiniteField};
pub use hodge::{betti, dg_multiplicity, e_jac, e_realize, e_sym, zeta_numerator, BettiPoly, HodgePoly};
pub use zeta::{functional_equation_holds, numerator_from_series};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeasureError {
    #[error("coefficient {0} is not an integral polynomial in L")]
    NonPolynomial(String),
    #[error("coefficient {0} has a pole at the evaluation point")]
    PoleAtOne(String),
    #[error("unsupported field order {0}")]
    UnsupportedField(u32),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid curve data: {0}")]
    InvalidCurveData(String),
    #[error("non-integral count: {0}")]
    NonIntegral(String),
    #[error("counting routes disagree: class gives {by_class}, formula gives {by_formula}")]
    RouteMismatch { by_class: String, by_formula: String },
}
