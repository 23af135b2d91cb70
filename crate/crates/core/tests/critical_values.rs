use graphpot_core::critical::{
    bead_matchings, brute_force_values, candidate_point, certify_critical, certify_with_hessian,
    enumerate_sign_components, expected_spectrum, hessian_component_dim, matching_value, predicted_value, Mode,
};
use graphpot_core::graphs::necklace;
use graphpot_core::potential::graph_potential;

fn subsets(ids: &[String]) -> Vec<Vec<&str>> {
    (0..1u32 << ids.len())
        .map(|mask| ids.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, s)| s.as_str()).collect())
        .collect()
}

#[test]
fn matching_points_are_critical_with_predicted_values() {
    for g in 2..=8 {
        let graph = necklace(g).unwrap();
        let pb = graph_potential(&graph);
        let ms = bead_matchings(&graph);
        let spectrum = expected_spectrum(g).unwrap().values();
        // every flip subset on the first matching, then one flip set per size on every matching
        let ids = ms[0].ids(&graph);
        for flips in subsets(&ids) {
            for mode in [Mode::Real, Mode::Imaginary] {
                let p = candidate_point(&graph, &ms[0], &flips, mode).unwrap();
                let r = certify_critical(&pb, &p).unwrap();
                assert!(r.gradient_certified, "g={g} {mode} {flips:?}");
                assert_eq!(r.value, predicted_value(&graph, &flips, mode).unwrap(), "g={g} {mode} {flips:?}");
                if mode == Mode::Real {
                    assert_eq!(r.value, matching_value(g, flips.len(), mode));
                }
                assert!(spectrum.contains(&r.value), "g={g} {mode} {flips:?}");
            }
        }
        for m in &ms {
            let ids = m.ids(&graph);
            for j in 0..=ids.len() {
                let flips: Vec<&str> = ids[ids.len() - j..].iter().map(String::as_str).collect();
                for mode in [Mode::Real, Mode::Imaginary] {
                    let r = certify_critical(&pb, &candidate_point(&graph, m, &flips, mode).unwrap()).unwrap();
                    assert!(r.gradient_certified);
                    assert_eq!(r.value, predicted_value(&graph, &flips, mode).unwrap());
                }
            }
        }
    }
}

#[test]
fn matching_values_cover_the_spectrum() {
    for g in 2..=8 {
        let spectrum = expected_spectrum(g).unwrap();
        let mut got: Vec<String> = Vec::new();
        for j in 0..g {
            got.push(matching_value(g, j, Mode::Real).to_string());
        }
        for j in 0..g - 1 {
            got.push(matching_value(g, j, Mode::Imaginary).to_string());
        }
        let mut want: Vec<String> = spectrum.values().iter().map(ToString::to_string).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want, "g={g}");
    }
}

#[test]
fn real_flip_point_kernels_are_bounded_by_component_dimension() {
    for g in 2..=5 {
        let graph = necklace(g).unwrap();
        let pb = graph_potential(&graph);
        let m = &bead_matchings(&graph)[0];
        let ids = m.ids(&graph);
        for j in 0..g {
            let flips: Vec<&str> = ids[..j].iter().map(String::as_str).collect();
            let r = certify_with_hessian(&pb, &candidate_point(&graph, m, &flips, Mode::Real).unwrap()).unwrap();
            let expected = (2 * j).min(2 * g - 2 - 2 * j);
            // matching points sit on the top component but not at a generic point
            assert_eq!(r.hessian_kernel_dim, Some(expected.min(2)), "g={g} j={j}");
        }
    }
}

#[test]
fn sign_components_reproduce_dimensions() {
    for g in 2..=6 {
        assert!(enumerate_sign_components(g).unwrap().matches_expected().unwrap(), "g={g}");
    }
}

#[test]
fn hessian_proxy_matches_dimensions() {
    for g in 2..=6 {
        for k in 0..=2 * g - 2 {
            let h = hessian_component_dim(g, k).unwrap();
            assert!(h.gradient_certified);
            assert_eq!(h.kernel_dimension, h.expected_dimension, "g={g} k={k}");
        }
    }
}

#[test]
fn numeric_search_finds_only_expected_values() {
    for g in [2, 3] {
        let r = brute_force_values(g, 2000, 11, 1e-8, None).unwrap();
        assert!(r.within_expected(), "g={g}: {:?}", r.clusters);
        assert!(r.missing.is_empty(), "g={g}: missing {:?}", r.missing);
    }
}
