use graphpot_core::graphs::{dumbbell, necklace, perfect_matchings, theta, ColoredGraph};
use graphpot_core::laurent::{LaurentPoly, MonomialMap};
use graphpot_core::potential::{
    bead_potential, decomposition_residual, graph_potential, matching_decomposition, necklace_uvz, normalize_coloring,
    string_potential,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn matching_decompositions_sum_to_potential() {
    for g in 2..=8 {
        let graph = necklace(g).unwrap();
        let pb = graph_potential(&graph);
        let ms = perfect_matchings(&graph);
        assert!(!ms.is_empty());
        for m in &ms {
            let pieces = matching_decomposition(&pb, m).unwrap();
            assert_eq!(pieces.len(), g - 1);
            assert!(decomposition_residual(&pb, &pieces).unwrap().is_zero(), "g={g} {:?}", m.ids(&graph));
        }
    }
}

#[test]
fn bead_and_string_decompositions_sum_to_potential() {
    for g in 2..=8 {
        let pb = necklace_uvz(g).unwrap();
        let vars = pb.vars().to_vec();
        let beads: Vec<LaurentPoly> = (1..g).map(|i| bead_potential(g, i).unwrap()).collect();
        let strings: Vec<LaurentPoly> = (1..g).map(|i| string_potential(g, i).unwrap()).collect();
        assert_eq!(LaurentPoly::sum(&vars, beads.iter()).unwrap(), pb.potential, "beads g={g}");
        assert_eq!(LaurentPoly::sum(&vars, strings.iter()).unwrap(), pb.potential, "strings g={g}");
    }
}

fn random_graph(rng: &mut ChaCha8Rng) -> ColoredGraph {
    match rng.gen_range(0..4) {
        0 => theta(),
        1 => dumbbell(),
        _ => necklace(rng.gen_range(2..=6)).unwrap(),
    }
}

#[test]
fn inverting_edge_variables_toggles_endpoint_colors() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..100 {
        let base = random_graph(&mut rng);
        let n = base.num_vertices();
        let coloring: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        let graph = base.with_coloring(coloring.clone()).unwrap();
        let inverted: Vec<usize> = (0..graph.num_edges()).filter(|_| rng.gen_bool(0.5)).collect();
        let delta = graph.coboundary(&inverted);
        let toggled: Vec<u8> = coloring.iter().zip(&delta).map(|(a, b)| a ^ b).collect();

        let before = graph_potential(&graph);
        let after = graph_potential(&graph.with_coloring(toggled).unwrap());
        let map = MonomialMap::inversion(before.vars(), &inverted);
        assert_eq!(before.potential.substitute_monomial(&map).unwrap(), after.potential, "case {case}");
    }
}

#[test]
fn normalization_then_decomposition() {
    let graph = necklace(4).unwrap().with_coloring(vec![1, 1, 0, 1, 0, 0]).unwrap();
    let pb = graph_potential(&graph);
    let m = &perfect_matchings(&graph)[0];
    assert!(matching_decomposition(&pb, m).is_err());
    let (normalized, map) = normalize_coloring(&pb).unwrap();
    assert_eq!(normalized.graph.colored_vertices(), vec![5]);
    assert_eq!(pb.potential.substitute_monomial(&map).unwrap(), normalized.potential);
    let pieces = matching_decomposition(&normalized, m).unwrap();
    assert!(decomposition_residual(&normalized, &pieces).unwrap().is_zero());
}
