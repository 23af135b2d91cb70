//! Critical points and values of graph potentials.

mod numeric;
mod points;
mod signs;
mod spectrum;

pub use numeric::{brute_force_values, BruteForceReport, Cluster, MAX_BRUTE_FORCE_GENUS};
pub use points::{
    bead_matchings, candidate_point, certify_critical, certify_with_hessian, conifold, flipped_points, matching_value, predicted_value,
    ConifoldReport, CriticalPoint, CriticalReport, Mode,
};
pub use signs::{
    base_case_families, enumerate_sign_components, hessian_component_dim, Family, FamilyCheck, HessianProxy,
    SignComponent, SignEnumeration, ZChoice, MAX_HESSIAN_GENUS, MAX_SIGN_GENUS,
};
pub use spectrum::{expected_spectrum, spectrum_value, ExpectedSpectrum, SpectrumEntry};

use crate::graphs::GraphError;
use crate::laurent::LaurentError;
use crate::potential::PotentialError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CriticalError {
    #[error("genus {g} outside the supported range {min}..={max}")]
    GenusOutOfRange { g: usize, min: usize, max: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("edge set is not a perfect matching")]
    NotPerfectMatching,
    #[error("coloring has {0} colored vertices; normalize to at most one first")]
    TooManyColored(usize),
    #[error("flipped edge {0} is not in the matching")]
    FlipOutsideMatching(String),
    #[error("no coordinate for variable {0}")]
    MissingCoordinate(String),
    #[error("point has a zero coordinate")]
    ZeroCoordinate,
    #[error("potential is not in edge-variable coordinates")]
    WrongCoordinates,
    #[error("conifold preconditions fail (positive coefficients: {positive}, origin in Newton polytope: {origin})")]
    ConifoldPrecondition { positive: bool, origin: bool },
    #[error("no sign component attains value {0}")]
    NoComponent(String),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("number of starts must be positive")]
    NoStarts,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
}
