//! Graph potentials and their edge, bead and string decompositions.
//!
//! Every vertex contributes the four monomials `x_i^{±1} x_j^{±1} x_k^{±1}`
//! whose sign pattern has parity equal to the vertex color. A loop puts its
//! variable into the vertex potential twice, so some monomials merge.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::gaussian::GaussianRational;
use crate::graphs::{self, coloring_cobounding_set, ColoredGraph, GraphError, Matching};
use crate::laurent::{j_plus, ExponentVector, LaurentError, LaurentPoly, MonomialMap};
use crate::newton;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PotentialError {
    #[error("vertex potential needs exactly 3 incident half-edges, got {0}")]
    Incidence(usize),
    #[error("edge set {0:?} is not a perfect matching")]
    NotPerfectMatching(Vec<String>),
    #[error("coloring has {0} colored vertices; normalize to at most one first")]
    TooManyColored(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("potentials live on different graphs")]
    DifferentGraphs,
    #[error("potential is not in edge-variable coordinates")]
    WrongCoordinates,
    #[error("parity-equivalence map does not identify the potentials")]
    EquivalenceFailed,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coordinates {
    EdgeVars,
    Uvz,
}

/// A graph together with its potential in a named coordinate system.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialBundle {
    pub graph: ColoredGraph,
    pub potential: LaurentPoly,
    pub coordinates: Coordinates,
}

impl PotentialBundle {
    pub fn vars(&self) -> &[String] {
        self.potential.vars()
    }

    pub fn genus(&self) -> usize {
        self.graph.genus()
    }
}

/// The vertex potential over `vars`, where `incident` lists the variable
/// index of each of the three half-edges at the vertex.
pub fn vertex_potential(vars: &[String], incident: &[usize], color: u8) -> Result<LaurentPoly, PotentialError> {
    if incident.len() != 3 {
        return Err(PotentialError::Incidence(incident.len()));
    }
    let mut terms = Vec::with_capacity(4);
    for signs in 0u8..8 {
        let s = [signs & 1, (signs >> 1) & 1, (signs >> 2) & 1];
        if (s[0] ^ s[1] ^ s[2]) != (color & 1) {
            continue;
        }
        let mut e = vec![0i64; vars.len()];
        for (&k, &sk) in incident.iter().zip(&s) {
            e[k] += if sk == 0 { 1 } else { -1 };
        }
        terms.push((ExponentVector(e), GaussianRational::one()));
    }
    Ok(LaurentPoly::from_terms(vars, terms))
}

/// The vertex potential at `v`, over the graph's edge variables.
pub fn vertex_potential_of(g: &ColoredGraph, v: usize) -> Result<LaurentPoly, PotentialError> {
    let vars = g.edge_ids();
    vertex_potential(&vars, &g.incident_edges(v), g.coloring()[v])
}

/// Sum of all vertex potentials, one variable per edge in edge order.
pub fn graph_potential(g: &ColoredGraph) -> PotentialBundle {
    let vars = g.edge_ids();
    let mut w = LaurentPoly::zero(&vars);
    for v in 0..g.num_vertices() {
        let wv = vertex_potential(&vars, &g.incident_edges(v), g.coloring()[v]).expect("trivalent graph");
        w = w.add(&wv).expect("shared variables");
    }
    PotentialBundle { graph: g.clone(), potential: w, coordinates: Coordinates::EdgeVars }
}

/// All coefficients are positive integers.
pub fn has_positive_integer_coefficients(f: &LaurentPoly) -> bool {
    f.terms().all(|(_, c)| c.im.is_zero() && c.re.is_integer() && c.re.is_positive())
}

/// Checks the two standing assumptions of the conifold-point framework.
pub fn positivity_and_polytope(f: &LaurentPoly) -> (bool, bool) {
    (has_positive_integer_coefficients(f), newton::contains_origin(f))
}

/// One edge potential per matching edge: the sum of the vertex potentials of
/// both endpoints. The pieces sum to the full potential.
pub fn matching_decomposition(
    pb: &PotentialBundle,
    m: &Matching,
) -> Result<Vec<(String, LaurentPoly)>, PotentialError> {
    if pb.coordinates != Coordinates::EdgeVars {
        return Err(PotentialError::WrongCoordinates);
    }
    let g = &pb.graph;
    if !m.is_perfect_for(g) {
        return Err(PotentialError::NotPerfectMatching(m.ids(g)));
    }
    let colored = g.colored_vertices().len();
    if colored > 1 {
        return Err(PotentialError::TooManyColored(colored));
    }
    m.edges()
        .iter()
        .map(|&k| {
            let e = &g.edges()[k];
            let piece = vertex_potential_of(g, e.ends[0])?.add(&vertex_potential_of(g, e.ends[1])?)?;
            Ok((e.id.clone(), piece))
        })
        .collect()
}

/// `Σ pieces − W`; zero exactly when a decomposition is faithful.
pub fn decomposition_residual(pb: &PotentialBundle, pieces: &[(String, LaurentPoly)]) -> Result<LaurentPoly, PotentialError> {
    let total = LaurentPoly::sum(pb.vars(), pieces.iter().map(|(_, p)| p))?;
    Ok(total.sub(&pb.potential)?)
}

/// Variables of the necklace in `(u, v, z)` coordinates: `u1, v1, z1, u2, …`.
pub fn uvz_vars(g: usize) -> Vec<String> {
    (1..g).flat_map(|i| [format!("u{i}"), format!("v{i}"), format!("z{i}")]).collect()
}

/// The lattice map `x_i = (u_i v_i)^{1/2}`, `y_i = (u_i / v_i)^{1/2}`, `z_i = z_i`,
/// so that `u_i = x_i y_i` and `v_i = x_i / y_i`.
pub fn uvz_map(g: usize) -> Result<MonomialMap, PotentialError> {
    let source = graphs::necklace(g)?.edge_ids();
    let target = uvz_vars(g);
    let half = BigRational::new(1.into(), 2.into());
    let n = target.len();
    let mut images = Vec::with_capacity(source.len());
    for i in 0..g - 1 {
        let (u, v, z) = (3 * i, 3 * i + 1, 3 * i + 2);
        let mut x = vec![BigRational::zero(); n];
        x[u] = half.clone();
        x[v] = half.clone();
        let mut y = vec![BigRational::zero(); n];
        y[u] = half.clone();
        y[v] = -half.clone();
        let mut zz = vec![BigRational::zero(); n];
        zz[z] = BigRational::one();
        images.extend([x, y, zz]);
    }
    Ok(MonomialMap::new(source, target, images)?)
}

/// The necklace potential rewritten in `(u, v, z)` coordinates.
pub fn necklace_uvz(g: usize) -> Result<PotentialBundle, PotentialError> {
    let graph = graphs::necklace(g)?;
    let pb = graph_potential(&graph);
    let potential = pb.potential.substitute_monomial(&uvz_map(g)?)?;
    Ok(PotentialBundle { graph, potential, coordinates: Coordinates::Uvz })
}

fn check_index(g: usize, i: usize) -> Result<(), PotentialError> {
    if g < 2 {
        return Err(GraphError::GenusTooSmall(g).into());
    }
    if i == 0 || i > g - 1 {
        return Err(PotentialError::IndexOutOfRange { index: i, max: g - 1 });
    }
    Ok(())
}

fn z_pow(vars: &[String], i: usize, e: i64) -> Result<LaurentPoly, LaurentError> {
    LaurentPoly::var_pow(vars, &format!("z{i}"), e)
}

fn jp(vars: &[String], name: &str, i: usize) -> Result<LaurentPoly, LaurentError> {
    j_plus(vars, &format!("{name}{i}"))
}

/// `a·J⁺(p) + b·J⁺(q)` accumulated term by term.
fn sum_products(pairs: &[(LaurentPoly, LaurentPoly)]) -> Result<LaurentPoly, LaurentError> {
    let vars = pairs[0].0.vars().to_vec();
    pairs
        .iter()
        .try_fold(LaurentPoly::zero(&vars), |acc, (a, b)| acc.add(&a.mul(b)?))
}

/// The `i`th bead potential (two vertices of bead `i`), in `(u, v, z)` coordinates.
pub fn bead_potential(g: usize, i: usize) -> Result<LaurentPoly, PotentialError> {
    check_index(g, i)?;
    let vars = uvz_vars(g);
    let p = if i < g - 1 {
        sum_products(&[
            (z_pow(&vars, i, 1)?, jp(&vars, "u", i)?),
            (z_pow(&vars, i, -1)?, jp(&vars, "v", i)?),
            (z_pow(&vars, i + 1, 1)?, jp(&vars, "u", i)?),
            (z_pow(&vars, i + 1, -1)?, jp(&vars, "v", i)?),
        ])?
    } else {
        sum_products(&[
            (z_pow(&vars, i, 1)?, jp(&vars, "u", i)?),
            (z_pow(&vars, i, -1)?, jp(&vars, "v", i)?),
            (z_pow(&vars, 1, 1)?, jp(&vars, "v", i)?),
            (z_pow(&vars, 1, -1)?, jp(&vars, "u", i)?),
        ])?
    };
    Ok(p)
}

/// The `i`th string potential (the two vertices joined by `z_i`).
pub fn string_potential(g: usize, i: usize) -> Result<LaurentPoly, PotentialError> {
    check_index(g, i)?;
    let vars = uvz_vars(g);
    let p = if i == 1 {
        sum_products(&[
            (z_pow(&vars, 1, 1)?, jp(&vars, "v", g - 1)?),
            (z_pow(&vars, 1, -1)?, jp(&vars, "u", g - 1)?),
            (z_pow(&vars, 1, 1)?, jp(&vars, "u", 1)?),
            (z_pow(&vars, 1, -1)?, jp(&vars, "v", 1)?),
        ])?
    } else {
        sum_products(&[
            (z_pow(&vars, i, 1)?, jp(&vars, "u", i - 1)?),
            (z_pow(&vars, i, -1)?, jp(&vars, "v", i - 1)?),
            (z_pow(&vars, i, 1)?, jp(&vars, "u", i)?),
            (z_pow(&vars, i, -1)?, jp(&vars, "v", i)?),
        ])?
    };
    Ok(p)
}

/// Inverting the edge variables in `∂⁻¹(c1 + c2)` turns `W_{Γ,c1}` into `W_{Γ,c2}`.
/// The returned map is verified to do so exactly.
pub fn parity_equivalence(pb1: &PotentialBundle, pb2: &PotentialBundle) -> Result<MonomialMap, PotentialError> {
    if pb1.coordinates != Coordinates::EdgeVars || pb2.coordinates != Coordinates::EdgeVars {
        return Err(PotentialError::WrongCoordinates);
    }
    if pb1.graph.edges() != pb2.graph.edges() || pb1.graph.num_vertices() != pb2.graph.num_vertices() {
        return Err(PotentialError::DifferentGraphs);
    }
    let s = coloring_cobounding_set(&pb1.graph, pb1.graph.coloring(), pb2.graph.coloring())?;
    let map = MonomialMap::inversion(pb1.vars(), &s);
    if pb1.potential.substitute_monomial(&map)? != pb2.potential {
        return Err(PotentialError::EquivalenceFailed);
    }
    Ok(map)
}

/// Move the coloring to at most one colored vertex (the last vertex when the
/// parity is odd), returning the new bundle and the map realising the change.
pub fn normalize_coloring(pb: &PotentialBundle) -> Result<(PotentialBundle, MonomialMap), PotentialError> {
    let g = &pb.graph;
    let n = g.num_vertices();
    let mut target = vec![0u8; n];
    if graphs::parity(g.coloring()) == 1 {
        target[n - 1] = 1;
    }
    if target == g.coloring() {
        return Ok((pb.clone(), MonomialMap::identity(pb.vars())));
    }
    let normalized = graph_potential(&g.with_coloring(target)?);
    let map = parity_equivalence(pb, &normalized)?;
    Ok((normalized, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{dumbbell, necklace, perfect_matchings, theta};
    use crate::laurent::var_names;

    fn p(vars: &[String], s: &str) -> LaurentPoly {
        LaurentPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn vertex_potentials_by_color() {
        let v = var_names(&["x", "y", "z"]);
        assert_eq!(
            vertex_potential(&v, &[0, 1, 2], 0).unwrap(),
            p(&v, "x*y*z + x*y^-1*z^-1 + x^-1*y*z^-1 + x^-1*y^-1*z")
        );
        assert_eq!(
            vertex_potential(&v, &[0, 1, 2], 1).unwrap(),
            p(&v, "x^-1*y^-1*z^-1 + x*y*z^-1 + x*y^-1*z + x^-1*y*z")
        );
        assert_eq!(vertex_potential(&v, &[0, 1], 0), Err(PotentialError::Incidence(2)));
    }

    #[test]
    fn loop_vertex_merges_terms() {
        let v = var_names(&["x", "y"]);
        assert_eq!(vertex_potential(&v, &[0, 0, 1], 0).unwrap(), p(&v, "x^2*y + x^-2*y + 2*y^-1"));
    }

    #[test]
    fn colored_theta_potential() {
        let g = theta().with_colored(&[1]).unwrap();
        let pb = graph_potential(&g);
        let expected = p(
            pb.vars(),
            "x*y*z + x*y^-1*z^-1 + x^-1*y*z^-1 + x^-1*y^-1*z + x^-1*y^-1*z^-1 + x*y*z^-1 + x*y^-1*z + x^-1*y*z",
        );
        assert_eq!(pb.potential, expected);
    }

    #[test]
    fn dumbbell_potential() {
        let pb = graph_potential(&dumbbell());
        assert_eq!(pb.potential, p(pb.vars(), "x^2*y + x^-2*y + z^2*y + z^-2*y + 4*y^-1"));
    }

    #[test]
    fn matching_decomposition_rejects_non_matching() {
        let pb = graph_potential(&necklace(3).unwrap());
        let bad = Matching::from_ids(&pb.graph, &["z1"]).unwrap();
        assert!(matches!(matching_decomposition(&pb, &bad), Err(PotentialError::NotPerfectMatching(_))));
        let two = graph_potential(&necklace(3).unwrap().with_colored(&[0, 1, 2]).unwrap());
        let m = perfect_matchings(&two.graph)[0].clone();
        assert_eq!(matching_decomposition(&two, &m), Err(PotentialError::TooManyColored(3)));
    }

    #[test]
    fn genus_two_uvz_form() {
        // W₂ = J⁺(z)(J⁺(u) + J⁺(v))
        let pb = necklace_uvz(2).unwrap();
        let v = pb.vars().to_vec();
        let expected = j_plus(&v, "z1")
            .unwrap()
            .mul(&j_plus(&v, "u1").unwrap().add(&j_plus(&v, "v1").unwrap()).unwrap())
            .unwrap();
        assert_eq!(pb.potential, expected);
    }

    #[test]
    fn bead_and_string_indices_checked() {
        assert!(matches!(bead_potential(3, 0), Err(PotentialError::IndexOutOfRange { .. })));
        assert!(matches!(string_potential(3, 3), Err(PotentialError::IndexOutOfRange { .. })));
    }

    #[test]
    fn parity_equivalence_on_theta() {
        let a = graph_potential(&theta().with_colored(&[0]).unwrap());
        let b = graph_potential(&theta().with_colored(&[1]).unwrap());
        let map = parity_equivalence(&a, &b).unwrap();
        assert_eq!(a.potential.substitute_monomial(&map).unwrap(), b.potential);
        assert!(parity_equivalence(&a, &a).unwrap().is_identity());
        let even = graph_potential(&theta());
        assert!(matches!(
            parity_equivalence(&a, &even),
            Err(PotentialError::Graph(GraphError::ParityMismatch))
        ));
    }

    #[test]
    fn normalization_moves_color_to_last_vertex() {
        let g = necklace(3).unwrap().with_colored(&[0, 1, 2]).unwrap();
        let (norm, map) = normalize_coloring(&graph_potential(&g)).unwrap();
        assert_eq!(norm.graph.colored_vertices(), vec![3]);
        assert_eq!(graph_potential(&g).potential.substitute_monomial(&map).unwrap(), norm.potential);
    }
}
