//! Trivalent multigraphs with an 𝔽₂ vertex coloring.
//!
//! Edges are stored with stable string ids (`x1`, `y1`, `z1`, … for the
//! necklace family). A loop is an edge whose two ends coincide; it counts
//! twice towards the degree of its vertex and never appears in a matching.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotTrivalent { vertex: usize, degree: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge endpoint {0} out of range")]
    BadEndpoint(usize),
    #[error("coloring has length {got}, expected {expected}")]
    ColoringLength { expected: usize, got: usize },
    #[error("coloring entries must be 0 or 1")]
    ColoringValue,
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),
    #[error("edge `{0}` is a loop")]
    LoopEdge(String),
    #[error("half-edge {half} does not belong to edge `{edge}` at vertex {vertex}")]
    BadHalfEdge { edge: String, vertex: usize, half: String },
    #[error("colorings have different parity; no cobounding edge set exists")]
    ParityMismatch,
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("graph isomorphism is only supported up to {max} vertices, got {got}")]
    TooLargeForIsomorphism { max: usize, got: usize },
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub ends: [usize; 2],
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    fn new(id: impl Into<String>, a: usize, b: usize) -> Self {
        Self { id: id.into(), ends: [a, b] }
    }
}

/// A connected trivalent multigraph with vertex colors in 𝔽₂.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredGraph {
    vertices: usize,
    edges: Vec<Edge>,
    coloring: Vec<u8>,
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<Edge>,
    coloring: Vec<u8>,
}

/// One end of an edge: `(edge index, end index)`.
pub type HalfEdge = (usize, usize);

impl ColoredGraph {
    /// Validates trivalence, connectivity, coloring shape and edge-id uniqueness.
    pub fn new(vertices: usize, edges: Vec<Edge>, coloring: Vec<u8>) -> Result<Self, GraphError> {
        if coloring.len() != vertices {
            return Err(GraphError::ColoringLength { expected: vertices, got: coloring.len() });
        }
        if coloring.iter().any(|&c| c > 1) {
            return Err(GraphError::ColoringValue);
        }
        let mut seen = BTreeSet::new();
        for e in &edges {
            if !seen.insert(e.id.clone()) {
                return Err(GraphError::DuplicateEdge(e.id.clone()));
            }
            if let Some(&bad) = e.ends.iter().find(|&&v| v >= vertices) {
                return Err(GraphError::BadEndpoint(bad));
            }
        }
        let g = Self { vertices, edges, coloring };
        for v in 0..vertices {
            let d = g.degree(v);
            if d != 3 {
                return Err(GraphError::NotTrivalent { vertex: v, degree: d });
            }
        }
        if !g.is_connected_without(None) {
            return Err(GraphError::Disconnected);
        }
        if g.genus() < 2 {
            return Err(GraphError::GenusTooSmall(g.genus()));
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::new(raw.vertices, raw.edges, raw.coloring)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn coloring(&self) -> &[u8] {
        &self.coloring
    }

    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    pub fn edge_index(&self, id: &str) -> Result<usize, GraphError> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_string()))
    }

    pub fn genus(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertices)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| e.ends.iter().filter(|&&w| w == v).count()).sum()
    }

    pub fn num_loops(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Half-edges at `v` in edge order; a loop contributes both of its ends.
    pub fn half_edges_at(&self, v: usize) -> Vec<HalfEdge> {
        let mut out = Vec::with_capacity(3);
        for (k, e) in self.edges.iter().enumerate() {
            for end in 0..2 {
                if e.ends[end] == v {
                    out.push((k, end));
                }
            }
        }
        out
    }

    /// Edge indices incident to `v`, repeated for loops.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.half_edges_at(v).into_iter().map(|(k, _)| k).collect()
    }

    pub fn with_coloring(&self, coloring: Vec<u8>) -> Result<Self, GraphError> {
        Self::new(self.vertices, self.edges.clone(), coloring)
    }

    /// Color exactly the listed vertices.
    pub fn with_colored(&self, colored: &[usize]) -> Result<Self, GraphError> {
        let mut c = vec![0u8; self.vertices];
        for &v in colored {
            if v >= self.vertices {
                return Err(GraphError::BadVertex(v));
            }
            c[v] ^= 1;
        }
        self.with_coloring(c)
    }

    pub fn colored_vertices(&self) -> Vec<usize> {
        (0..self.vertices).filter(|&v| self.coloring[v] == 1).collect()
    }

    fn is_connected_without(&self, removed: Option<usize>) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (k, e) in self.edges.iter().enumerate() {
                if Some(k) == removed {
                    continue;
                }
                let other = if e.ends[0] == v {
                    e.ends[1]
                } else if e.ends[1] == v {
                    e.ends[0]
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True iff no single edge removal disconnects the graph.
    pub fn is_bridgeless(&self) -> bool {
        (0..self.edges.len()).all(|k| self.edges[k].is_loop() || self.is_connected_without(Some(k)))
    }

    /// The 𝔽₂ coboundary of an edge set: each edge toggles both endpoint colors.
    pub fn coboundary(&self, edge_set: &[usize]) -> Vec<u8> {
        let mut c = vec![0u8; self.vertices];
        for &k in edge_set {
            let [a, b] = self.edges[k].ends;
            c[a] ^= 1;
            c[b] ^= 1;
        }
        c
    }
}

pub fn parity(coloring: &[u8]) -> u8 {
    coloring.iter().fold(0, |acc, &c| acc ^ (c & 1))
}

/// The genus-`g` necklace: `g−1` beads of parallel edges `x_i, y_i` joined
/// by bridges `z_i`, closed up by `z_1`. Vertex `2i−2` is the left end of
/// bead `i`, vertex `2i−1` its right end; the last vertex is colored.
pub fn necklace(g: usize) -> Result<ColoredGraph, GraphError> {
    if g < 2 {
        return Err(GraphError::GenusTooSmall(g));
    }
    let n = 2 * g - 2;
    let mut edges = Vec::with_capacity(3 * g - 3);
    for i in 1..g {
        let left = 2 * i - 2;
        let right = 2 * i - 1;
        let prev_right = if i == 1 { n - 1 } else { 2 * i - 3 };
        edges.push(Edge::new(format!("x{i}"), left, right));
        edges.push(Edge::new(format!("y{i}"), left, right));
        edges.push(Edge::new(format!("z{i}"), prev_right, left));
    }
    let mut coloring = vec![0u8; n];
    coloring[n - 1] = 1;
    ColoredGraph::new(n, edges, coloring)
}

/// Two vertices joined by three parallel edges `x, y, z`; uncolored.
pub fn theta() -> ColoredGraph {
    ColoredGraph::new(
        2,
        vec![Edge::new("x", 0, 1), Edge::new("y", 0, 1), Edge::new("z", 0, 1)],
        vec![0, 0],
    )
    .expect("theta graph is valid")
}

/// Loops `x` at vertex 0 and `z` at vertex 1 joined by the bridge `y`; uncolored.
pub fn dumbbell() -> ColoredGraph {
    ColoredGraph::new(
        2,
        vec![Edge::new("x", 0, 0), Edge::new("y", 0, 1), Edge::new("z", 1, 1)],
        vec![0, 0],
    )
    .expect("dumbbell graph is valid")
}

/// A perfect matching as a sorted set of edge indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching(pub Vec<usize>);

impl Matching {
    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn ids(&self, g: &ColoredGraph) -> Vec<String> {
        self.0.iter().map(|&k| g.edges[k].id.clone()).collect()
    }

    pub fn from_ids(g: &ColoredGraph, ids: &[&str]) -> Result<Self, GraphError> {
        let mut v = ids.iter().map(|id| g.edge_index(id)).collect::<Result<Vec<_>, _>>()?;
        v.sort_unstable();
        Ok(Self(v))
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.binary_search(&k).is_ok()
    }

    /// Every vertex covered exactly once and no loops.
    pub fn is_perfect_for(&self, g: &ColoredGraph) -> bool {
        let mut cover = vec![0usize; g.vertices];
        for &k in &self.0 {
            let Some(e) = g.edges.get(k) else { return false };
            if e.is_loop() {
                return false;
            }
            cover[e.ends[0]] += 1;
            cover[e.ends[1]] += 1;
        }
        cover.into_iter().all(|c| c == 1)
    }
}

/// All perfect matchings, by backtracking on the lowest uncovered vertex.
/// Output is sorted lexicographically by edge-index set.
pub fn perfect_matchings(g: &ColoredGraph) -> Vec<Matching> {
    fn go(g: &ColoredGraph, covered: &mut [bool], chosen: &mut Vec<usize>, out: &mut Vec<Matching>) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(Matching(m));
            return;
        };
        for (k, e) in g.edges.iter().enumerate() {
            if e.is_loop() || (e.ends[0] != v && e.ends[1] != v) {
                continue;
            }
            let w = if e.ends[0] == v { e.ends[1] } else { e.ends[0] };
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.push(k);
            go(g, covered, chosen, out);
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![false; g.vertices], &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Rewire at the non-loop edge `e = (a, b)`, moving half-edge `from_a` (at `a`)
/// to `b` and `from_b` (at `b`) to `a`. Calling again with the two half-edges
/// exchanged undoes it.
pub fn elementary_transformation_swapping(
    g: &ColoredGraph,
    edge_id: &str,
    from_a: HalfEdge,
    from_b: HalfEdge,
) -> Result<ColoredGraph, GraphError> {
    let k = g.edge_index(edge_id)?;
    let e = &g.edges[k];
    if e.is_loop() {
        return Err(GraphError::LoopEdge(edge_id.to_string()));
    }
    let [a, b] = e.ends;
    let check = |h: HalfEdge, v: usize| -> Result<(), GraphError> {
        let ok = h.0 != k && h.0 < g.edges.len() && h.1 < 2 && g.edges[h.0].ends[h.1] == v;
        if ok {
            Ok(())
        } else {
            Err(GraphError::BadHalfEdge {
                edge: edge_id.to_string(),
                vertex: v,
                half: format!("{h:?}"),
            })
        }
    };
    check(from_a, a)?;
    check(from_b, b)?;
    let mut edges = g.edges.clone();
    edges[from_a.0].ends[from_a.1] = b;
    edges[from_b.0].ends[from_b.1] = a;
    ColoredGraph::new(g.vertices, edges, g.coloring.clone())
}

/// The elementary transformation at a non-loop edge `e = (a, b)`.
///
/// With the other half-edges at `a` ordered `(i, j)` and at `b` ordered
/// `(l, k)`, the result attaches `i, l` to `a` and `j, k` to `b`.
pub fn elementary_transformation(g: &ColoredGraph, edge_id: &str) -> Result<ColoredGraph, GraphError> {
    let k = g.edge_index(edge_id)?;
    let e = &g.edges[k];
    if e.is_loop() {
        return Err(GraphError::LoopEdge(edge_id.to_string()));
    }
    let [a, b] = e.ends;
    let others = |v: usize, own_end: usize| -> Vec<HalfEdge> {
        g.half_edges_at(v).into_iter().filter(|&h| h != (k, own_end)).collect()
    };
    let at_a = others(a, 0);
    let at_b = others(b, 1);
    elementary_transformation_swapping(g, edge_id, at_a[1], at_b[0])
}

/// An edge set `S` with `∂S = c1 + c2`, found by 𝔽₂ elimination on the
/// incidence matrix. Among all solutions the one of minimum size (then
/// lexicographically smallest) is returned when the cycle space is small.
pub fn coloring_cobounding_set(g: &ColoredGraph, c1: &[u8], c2: &[u8]) -> Result<Vec<usize>, GraphError> {
    let n = g.vertices;
    for c in [c1, c2] {
        if c.len() != n {
            return Err(GraphError::ColoringLength { expected: n, got: c.len() });
        }
    }
    if parity(c1) != parity(c2) {
        return Err(GraphError::ParityMismatch);
    }
    let m = g.edges.len();
    // rows: vertices; columns: edges | rhs
    let mut rows: Vec<Vec<u8>> = (0..n)
        .map(|v| {
            let mut r = vec![0u8; m + 1];
            for (k, e) in g.edges.iter().enumerate() {
                if !e.is_loop() && (e.ends[0] == v || e.ends[1] == v) {
                    r[k] = 1;
                }
            }
            r[m] = (c1[v] ^ c2[v]) & 1;
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&r| rows[r][col] == 1) else { continue };
        rows.swap(rank, p);
        for r in 0..n {
            if r != rank && rows[r][col] == 1 {
                let (src, dst) = if r < rank {
                    let (lo, hi) = rows.split_at_mut(rank);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&lo[rank], &mut hi[0])
                };
                for c in col..=m {
                    dst[c] ^= src[c];
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| r[m] == 1) {
        return Err(GraphError::ParityMismatch);
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let solve = |free_vals: &[u8]| -> Vec<u8> {
        let mut x = vec![0u8; m];
        for (&f, &v) in free.iter().zip(free_vals) {
            x[f] = v;
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let mut v = rows[r][m];
            for &f in &free {
                v ^= rows[r][f] & x[f];
            }
            x[pc] = v;
        }
        x
    };
    let to_set = |x: &[u8]| -> Vec<usize> { (0..m).filter(|&k| x[k] == 1).collect() };
    let mut best = to_set(&solve(&vec![0u8; free.len()]));
    const MAX_ENUMERATED_FREE: usize = 16;
    if free.len() <= MAX_ENUMERATED_FREE {
        for mask in 1u32..(1u32 << free.len()) {
            let vals: Vec<u8> = (0..free.len()).map(|b| ((mask >> b) & 1) as u8).collect();
            let cand = to_set(&solve(&vals));
            if (cand.len(), &cand) < (best.len(), &best) {
                best = cand;
            }
        }
    }
    Ok(best)
}

/// Canonical form up to vertex relabelling (edge ids ignored), by brute force
/// over vertex permutations. Test-scale only.
pub fn canonical_form(g: &ColoredGraph) -> Result<Vec<(usize, usize, u8, u8)>, GraphError> {
    const MAX: usize = 8;
    if g.vertices > MAX {
        return Err(GraphError::TooLargeForIsomorphism { max: MAX, got: g.vertices });
    }
    let mut perm: Vec<usize> = (0..g.vertices).collect();
    let mut best: Option<Vec<(usize, usize, u8, u8)>> = None;
    loop {
        let mut key: Vec<(usize, usize, u8, u8)> = g
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.ends[0]], perm[e.ends[1]]);
                let (a, b) = (a.min(b), a.max(b));
                let inv = |p: usize| perm.iter().position(|&q| q == p).expect("permutation");
                (a, b, g.coloring[inv(a)], g.coloring[inv(b)])
            })
            .collect();
        key.sort_unstable();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best.unwrap_or_default())
}

pub fn is_isomorphic(g: &ColoredGraph, h: &ColoredGraph) -> Result<bool, GraphError> {
    if g.vertices != h.vertices || g.edges.len() != h.edges.len() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_shapes() {
        let g2 = necklace(2).unwrap();
        assert_eq!(g2.edge_ids(), ["x1", "y1", "z1"]);
        assert_eq!(g2.num_loops(), 0);
        assert_eq!(g2.colored_vertices(), vec![1]);
        assert!(is_isomorphic(&g2.with_coloring(vec![0, 0]).unwrap(), &theta()).unwrap());
        let g3 = necklace(3).unwrap();
        assert_eq!((g3.num_vertices(), g3.num_edges()), (4, 6));
        assert_eq!(g3.edge_ids(), ["x1", "y1", "z1", "x2", "y2", "z2"]);
        for g in 2..=10 {
            assert_eq!(necklace(g).unwrap().genus(), g);
        }
        assert_eq!(necklace(1), Err(GraphError::GenusTooSmall(1)));
    }

    #[test]
    fn genus_two_graphs() {
        let t = theta();
        assert_eq!((t.num_vertices(), t.num_edges(), t.num_loops()), (2, 3, 0));
        let d = dumbbell();
        assert_eq!((d.num_vertices(), d.num_loops()), (2, 2));
        assert_eq!((t.genus(), d.genus()), (2, 2));
        assert!(!is_isomorphic(&t, &d).unwrap());
    }

    #[test]
    fn matchings_of_small_graphs() {
        assert_eq!(perfect_matchings(&theta()).len(), 3);
        let dm = perfect_matchings(&dumbbell());
        assert_eq!(dm, vec![Matching(vec![1])]);
        let g3 = necklace(3).unwrap();
        let ms = perfect_matchings(&g3);
        // x/y choice per bead, plus the all-z matching
        assert_eq!(ms.len(), 5);
        for ids in [["x1", "x2"], ["x1", "y2"], ["y1", "x2"], ["y1", "y2"]] {
            assert!(ms.contains(&Matching::from_ids(&g3, &ids).unwrap()));
        }
        assert!(ms.iter().all(|m| m.is_perfect_for(&g3)));
    }

    #[test]
    fn bridges() {
        assert!(theta().is_bridgeless());
        assert!(!dumbbell().is_bridgeless());
        assert!(necklace(3).unwrap().is_bridgeless());
    }

    #[test]
    fn theta_to_dumbbell_and_back() {
        let t = theta();
        for id in ["x", "y", "z"] {
            let d = elementary_transformation(&t, id).unwrap();
            assert!(is_isomorphic(&d, &dumbbell()).unwrap(), "edge {id}");
        }
        let d = dumbbell();
        assert!(is_isomorphic(&elementary_transformation(&d, "y").unwrap(), &t).unwrap());
        assert_eq!(elementary_transformation(&d, "x"), Err(GraphError::LoopEdge("x".into())));
    }

    #[test]
    fn explicit_swap_is_an_involution() {
        let g = necklace(4).unwrap();
        let k = g.edge_index("z2").unwrap();
        let [a, b] = g.edges()[k].ends;
        let ha = g.half_edges_at(a).into_iter().find(|h| h.0 != k).unwrap();
        let hb = g.half_edges_at(b).into_iter().find(|h| h.0 != k).unwrap();
        let once = elementary_transformation_swapping(&g, "z2", ha, hb).unwrap();
        let twice = elementary_transformation_swapping(&once, "z2", hb, ha).unwrap();
        assert_eq!(twice, g);
        assert_eq!(once.genus(), g.genus());
    }

    #[test]
    fn cobounding_sets() {
        let t = theta();
        let s = coloring_cobounding_set(&t, &[1, 0], &[0, 1]).unwrap();
        assert_eq!(s.len(), 1);
        assert!(coloring_cobounding_set(&t, &[1, 0], &[1, 0]).unwrap().is_empty());
        assert_eq!(coloring_cobounding_set(&t, &[1, 0], &[0, 0]), Err(GraphError::ParityMismatch));

        let g3 = necklace(3).unwrap();
        let c1 = g3.coloring().to_vec();
        let c2 = vec![0, 1, 0, 0];
        let s = coloring_cobounding_set(&g3, &c1, &c2).unwrap();
        let target: Vec<u8> = c1.iter().zip(&c2).map(|(a, b)| a ^ b).collect();
        assert_eq!(g3.coboundary(&s), target);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = necklace(3).unwrap();
        assert_eq!(ColoredGraph::from_json(&g.to_json()).unwrap(), g);
        let loops = r#"{"vertices": 2, "edges": [{"id": "x", "ends": [0,0]}, {"id": "y", "ends": [0,1]}, {"id": "z", "ends": [1,1]}], "coloring": [0,0]}"#;
        assert_eq!(ColoredGraph::from_json(loops).unwrap(), dumbbell());
        let bad = r#"{"vertices": 2, "edges": [{"id": "x", "ends": [0,1]}], "coloring": [0,0]}"#;
        assert!(matches!(ColoredGraph::from_json(bad), Err(GraphError::NotTrivalent { .. })));
        assert!(matches!(ColoredGraph::from_json("{"), Err(GraphError::Json(_))));
    }
}
