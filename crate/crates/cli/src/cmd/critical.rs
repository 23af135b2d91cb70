use graphpot_core::critical::{
    bead_matchings, brute_force_values, candidate_point, certify_critical, expected_spectrum, hessian_component_dim,
    matching_value, BruteForceReport, SpectrumEntry, MAX_BRUTE_FORCE_GENUS, MAX_HESSIAN_GENUS,
};
use graphpot_core::graphs::necklace;
use graphpot_core::potential::graph_potential;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{CriticalArgs, MAX_SYMBOLIC_GENUS};
use crate::report::{csv_table, to_json, CliError, Report};

#[derive(Debug, Serialize)]
pub struct SpectrumRow {
    genus: usize,
    mode: String,
    k: usize,
    value: String,
    modulus: u64,
    dimension_expected: usize,
    hessian_kernel_dim: Option<usize>,
    certified: bool,
}

#[derive(Debug, Serialize)]
pub struct CriticalSpectrumReport {
    command: &'static str,
    genus: String,
    rows: Vec<SpectrumRow>,
    brute: Vec<BruteForceReport>,
    passed: bool,
}

const COLUMNS: [&str; 8] =
    ["genus", "mode", "k", "value", "modulus", "dimension_expected", "hessian_kernel_dim", "certified"];

impl SpectrumRow {
    fn fields(&self) -> Vec<String> {
        vec![
            self.genus.to_string(),
            self.mode.clone(),
            self.k.to_string(),
            self.value.clone(),
            self.modulus.to_string(),
            self.dimension_expected.to_string(),
            self.hessian_kernel_dim.map(|d| d.to_string()).unwrap_or_default(),
            self.certified.to_string(),
        ]
    }

    fn ok(&self) -> bool {
        self.certified && self.hessian_kernel_dim.is_none_or(|d| d == self.dimension_expected)
    }
}

impl Report for CriticalSpectrumReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        let fields: Vec<Vec<String>> = self.rows.iter().map(SpectrumRow::fields).collect();
        let widths: Vec<usize> = (0..COLUMNS.len())
            .map(|c| fields.iter().map(|r| r[c].len()).chain([COLUMNS[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = line(COLUMNS.to_vec());
        for r in &fields {
            s += &line(r.iter().map(String::as_str).collect());
        }
        for b in &self.brute {
            s += &format!(
                "numeric g={}: {} starts (seed {}), {} converged, {} clusters, {} extra, missing [{}]\n",
                b.genus,
                b.starts,
                b.seed,
                b.converged,
                b.clusters.len(),
                b.extra_clusters(),
                b.missing.join(", ")
            );
            for c in &b.clusters {
                s += &format!("  {:+.6} {:+.6}i  x{}{}\n", c.re, c.im, c.count, if c.expected { "" } else { "  UNEXPECTED" });
            }
        }
        s
    }

    fn csv(&self) -> String {
        let spectrum = csv_table(&COLUMNS, self.rows.iter().map(SpectrumRow::fields));
        if self.brute.is_empty() {
            return spectrum;
        }
        let clusters = csv_table(
            &["genus", "seed", "starts", "re", "im", "count", "expected"],
            self.brute.iter().flat_map(|b| {
                b.clusters.iter().map(move |c| {
                    vec![
                        b.genus.to_string(),
                        b.seed.to_string(),
                        b.starts.to_string(),
                        format!("{:.12}", c.re),
                        format!("{:.12}", c.im),
                        c.count.to_string(),
                        c.expected.to_string(),
                    ]
                })
            }),
        );
        format!("{spectrum}\n{clusters}")
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

/// Certify one spectrum entry at the matching point predicted to carry its value.
fn certify_entry(g: usize, e: &SpectrumEntry) -> Result<bool, CliError> {
    let graph = necklace(g).map_err(CliError::usage)?;
    let pb = graph_potential(&graph);
    let Some(j) = (0..g).find(|&j| matching_value(g, j, e.mode) == e.value) else {
        return Ok(false);
    };
    let m = &bead_matchings(&graph)[0];
    let ids = m.ids(&graph);
    let flips: Vec<&str> = ids[..j].iter().map(String::as_str).collect();
    let point = candidate_point(&graph, m, &flips, e.mode).map_err(CliError::usage)?;
    let r = certify_critical(&pb, &point).map_err(CliError::usage)?;
    Ok(r.gradient_certified && r.value == e.value)
}

fn check_bounds(args: &CriticalArgs) -> Result<(), CliError> {
    let g = args.genus.max();
    let limits = [
        (args.brute, MAX_BRUTE_FORCE_GENUS, "--brute"),
        (args.hessian, MAX_HESSIAN_GENUS, "--hessian"),
        (true, MAX_SYMBOLIC_GENUS, "symbolic certification"),
    ];
    for (active, max, what) in limits {
        if active && g > max {
            return Err(CliError::Usage(format!("genus {g} exceeds the supported maximum {max} for {what}")));
        }
    }
    if args.brute && !(args.tolerance > 0.0) {
        return Err(CliError::Usage(format!("tolerance must be positive, got {}", args.tolerance)));
    }
    if args.brute && args.seeds == 0 {
        return Err(CliError::usage("--seeds must be positive"));
    }
    Ok(())
}

pub fn run(args: &CriticalArgs, threads: Option<usize>) -> Result<CriticalSpectrumReport, CliError> {
    check_bounds(args)?;
    let genera: Vec<usize> = args.genus.iter().collect();
    let per_genus: Vec<Vec<SpectrumRow>> = genera
        .par_iter()
        .map(|&g| {
            let spectrum = expected_spectrum(g).map_err(CliError::usage)?;
            spectrum
                .entries
                .iter()
                .map(|e| {
                    let kernel = if args.hessian {
                        Some(hessian_component_dim(g, e.index).map_err(CliError::usage)?.kernel_dimension)
                    } else {
                        None
                    };
                    Ok(SpectrumRow {
                        genus: g,
                        mode: e.mode.to_string(),
                        k: e.index,
                        value: e.value.to_string(),
                        modulus: e.modulus,
                        dimension_expected: e.dimension,
                        hessian_kernel_dim: kernel,
                        certified: certify_entry(g, e)?,
                    })
                })
                .collect()
        })
        .collect::<Result<_, CliError>>()?;
    let rows: Vec<SpectrumRow> = per_genus.into_iter().flatten().collect();

    let mut brute = Vec::new();
    if args.brute {
        for &g in &genera {
            brute.push(brute_force_values(g, args.seeds, args.seed, args.tolerance, threads).map_err(CliError::usage)?);
        }
    }
    let passed = rows.iter().all(SpectrumRow::ok) && brute.iter().all(BruteForceReport::within_expected);
    Ok(CriticalSpectrumReport { command: "critical", genus: args.genus.to_string(), rows, brute, passed })
}
