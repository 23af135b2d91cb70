use graphpot_core::graphs::{dumbbell, necklace, perfect_matchings, theta, ColoredGraph};
use graphpot_core::grothendieck::Check;
use graphpot_core::laurent::LaurentPoly;
use graphpot_core::potential::{
    bead_potential, decomposition_residual, graph_potential, matching_decomposition, necklace_uvz, normalize_coloring,
    string_potential,
};
use graphpot_core::GaussianRational;
use serde::Serialize;

use crate::args::{PotentialArgs, MAX_SYMBOLIC_GENUS};
use crate::report::{csv_table, status, to_json, CliError, Report};

#[derive(Debug, Serialize)]
pub struct PotentialReport {
    command: &'static str,
    graph: String,
    genus: usize,
    coloring: Vec<u8>,
    variables: Vec<String>,
    potential: String,
    terms: usize,
    conifold_value: String,
    checks: Vec<Check>,
    passed: bool,
}

impl Report for PotentialReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        let mut s = format!("{}\n", self.potential);
        s += &format!("graph: {} (genus {}), {} terms, value at (1,...,1): {}\n", self.graph, self.genus, self.terms, self.conifold_value);
        for c in &self.checks {
            s += &format!("{} {}\n", status(c.status), c.name);
        }
        s
    }

    fn csv(&self) -> String {
        let head = csv_table(
            &["graph", "genus", "terms", "conifold_value", "potential"],
            [vec![self.graph.clone(), self.genus.to_string(), self.terms.to_string(), self.conifold_value.clone(), self.potential.clone()]],
        );
        if self.checks.is_empty() {
            return head;
        }
        let checks = csv_table(
            &["check", "status", "detail"],
            self.checks.iter().map(|c| vec![c.name.clone(), c.status.to_string(), c.detail.clone()]),
        );
        format!("{head}\n{checks}")
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

fn parse_vertex(label: &str, n: usize) -> Result<usize, CliError> {
    let digits = label.trim().trim_start_matches(['v', 'V']);
    let v: usize = digits.parse().map_err(|_| CliError::Usage(format!("invalid vertex label `{label}`")))?;
    if v == 0 || v > n {
        return Err(CliError::Usage(format!("vertex `{label}` out of range v1..v{n}")));
    }
    Ok(v - 1)
}

fn load_graph(args: &PotentialArgs) -> Result<(String, ColoredGraph), CliError> {
    let necklace_genus = |g: Option<usize>| -> Result<(String, ColoredGraph), CliError> {
        let g = g.ok_or_else(|| CliError::usage("a necklace needs --genus"))?;
        if g > MAX_SYMBOLIC_GENUS {
            return Err(CliError::Usage(format!("necklace genus {g} exceeds the supported maximum {MAX_SYMBOLIC_GENUS}")));
        }
        Ok((format!("necklace{g}"), necklace(g).map_err(CliError::usage)?))
    };
    match (args.necklace, args.graph.as_deref()) {
        (Some(g), _) => necklace_genus(Some(g)),
        (None, Some("theta")) => Ok(("theta".into(), theta())),
        (None, Some("dumbbell")) => Ok(("dumbbell".into(), dumbbell())),
        (None, Some("necklace")) => necklace_genus(args.genus),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            let g = ColoredGraph::from_json(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            Ok((path.to_string(), g))
        }
        (None, None) => Err(CliError::usage("pass --graph or --necklace")),
    }
}

fn decomposition_checks(name: &str, graph: &ColoredGraph) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let pb = graph_potential(graph);
    let (normalized, _) = normalize_coloring(&pb).map_err(CliError::usage)?;
    if normalized.graph.coloring() != graph.coloring() {
        checks.push(Check::new("normalize-coloring", true, format!("{:?}", normalized.graph.coloring())));
    }
    for m in perfect_matchings(&normalized.graph) {
        let pieces = matching_decomposition(&normalized, &m).map_err(CliError::usage)?;
        let residual = decomposition_residual(&normalized, &pieces).map_err(CliError::usage)?;
        checks.push(Check::new(&format!("matching-{}", m.ids(graph).join("-")), residual.is_zero(), residual.to_string()));
    }
    if name.starts_with("necklace") && graph.colored_vertices() == [graph.num_vertices() - 1] {
        let g = graph.genus();
        let uvz = necklace_uvz(g).map_err(CliError::usage)?;
        let sum = |f: fn(usize, usize) -> Result<LaurentPoly, _>| -> Result<LaurentPoly, CliError> {
            let parts: Vec<LaurentPoly> = (1..g).map(|i| f(g, i)).collect::<Result<_, _>>().map_err(CliError::usage)?;
            LaurentPoly::sum(uvz.vars(), parts.iter()).map_err(CliError::usage)
        };
        for (label, total) in [("beads", sum(bead_potential)?), ("strings", sum(string_potential)?)] {
            let residual = total.sub(&uvz.potential).map_err(CliError::usage)?;
            checks.push(Check::new(label, residual.is_zero(), residual.to_string()));
        }
    }
    Ok(checks)
}

pub fn run(args: &PotentialArgs) -> Result<PotentialReport, CliError> {
    let (name, mut graph) = load_graph(args)?;
    if let Some(labels) = &args.colored {
        let vs = labels.iter().map(|l| parse_vertex(l, graph.num_vertices())).collect::<Result<Vec<_>, _>>()?;
        graph = graph.with_colored(&vs).map_err(CliError::usage)?;
    }
    let pb = graph_potential(&graph);
    let ones = vec![GaussianRational::from_int(1); pb.vars().len()];
    let value = pb.potential.eval(&ones).map_err(CliError::usage)?;
    let checks = if args.check_decompositions { decomposition_checks(&name, &graph)? } else { Vec::new() };
    Ok(PotentialReport {
        command: "potential",
        genus: graph.genus(),
        coloring: graph.coloring().to_vec(),
        variables: pb.vars().to_vec(),
        potential: pb.potential.to_string(),
        terms: pb.potential.num_terms(),
        conifold_value: value.to_string(),
        passed: checks.iter().all(|c| c.status),
        checks,
        graph: name,
    })
}
