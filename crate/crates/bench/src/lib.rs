//! Workloads shared by the criterion benches.

use graphpot_core::critical::{
    bead_matchings, brute_force_values, candidate_point, certify_critical, enumerate_sign_components, Mode,
};
use graphpot_core::graphs::{necklace, perfect_matchings};
use graphpot_core::grothendieck::moduli_report;
use graphpot_core::potential::{decomposition_residual, graph_potential, matching_decomposition, necklace_uvz};
use graphpot_core::PotentialBundle;

pub fn necklace_potential(g: usize) -> PotentialBundle {
    graph_potential(&necklace(g).expect("genus at least 2"))
}

/// Number of terms of the necklace potential in `(u, v, z)` coordinates.
pub fn uvz_terms(g: usize) -> usize {
    necklace_uvz(g).expect("genus at least 2").potential.num_terms()
}

/// Checks every matching decomposition; returns how many were exact.
pub fn decompositions(g: usize) -> usize {
    let pb = necklace_potential(g);
    perfect_matchings(&pb.graph)
        .iter()
        .filter(|m| {
            let pieces = matching_decomposition(&pb, m).expect("perfect matching");
            decomposition_residual(&pb, &pieces).expect("same variables").is_zero()
        })
        .count()
}

/// Certifies every flip subset of the first bead matching in both modes.
pub fn certify_flips(g: usize) -> usize {
    let pb = necklace_potential(g);
    let m = &bead_matchings(&pb.graph)[0];
    let ids = m.ids(&pb.graph);
    let mut certified = 0;
    for mask in 0..1u32 << ids.len() {
        let flips: Vec<&str> = ids.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, s)| s.as_str()).collect();
        for mode in [Mode::Real, Mode::Imaginary] {
            let p = candidate_point(&pb.graph, m, &flips, mode).expect("matching point");
            certified += usize::from(certify_critical(&pb, &p).expect("nonzero point").gradient_certified);
        }
    }
    certified
}

pub fn sign_components(g: usize) -> usize {
    enumerate_sign_components(g).expect("supported genus").components.len()
}

pub fn numeric_clusters(g: usize, starts: usize) -> usize {
    brute_force_values(g, starts, 1, 1e-8, Some(1)).expect("supported genus").clusters.len()
}

pub fn moduli_checks(g: usize) -> usize {
    moduli_report(g).expect("genus at least 2").checks.len()
}
