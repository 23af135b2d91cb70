use graphpot_core::grothendieck::{zeta_identity_checks, moduli_report, verify_middle, Check, K0Class};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::GenusRange;
use crate::report::{csv_table, status, to_json, CliError, Report};

#[derive(Debug, Serialize)]
pub struct GenusChecks {
    genus: usize,
    class: K0Class,
    times_one_plus_l: K0Class,
    checks: Vec<Check>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    command: &'static str,
    genus: String,
    genera: Vec<GenusChecks>,
    passed: bool,
}

impl Report for VerifyReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for g in &self.genera {
            for c in &g.checks {
                s += &format!("g={} {} {}\n", g.genus, status(c.status), c.name);
            }
        }
        let total: usize = self.genera.iter().map(|g| g.checks.len()).sum();
        let failed: usize = self.genera.iter().flat_map(|g| &g.checks).filter(|c| !c.status).count();
        s += &format!("{} of {total} checkpoints passed\n", total - failed);
        s
    }

    fn csv(&self) -> String {
        csv_table(
            &["genus", "check", "status", "detail"],
            self.genera.iter().flat_map(|g| {
                g.checks.iter().map(|c| vec![g.genus.to_string(), c.name.clone(), c.status.to_string(), c.detail.clone()])
            }),
        )
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

fn genus_checks(g: usize) -> Result<GenusChecks, CliError> {
    let middle = verify_middle(g).map_err(CliError::usage)?;
    let b = moduli_report(g).map_err(CliError::usage)?;
    let k = zeta_identity_checks(g).map_err(CliError::usage)?;
    let mut checks = vec![Check::new("verify-middle", middle, "")];
    checks.extend(b.checks);
    checks.push(Check::new("checkpoints-polynomial", b.class.is_integral() && b.times_one_plus_l.is_integral(), b.class.to_string()));
    checks.extend(k.checks);
    Ok(GenusChecks { genus: g, class: b.class, times_one_plus_l: b.times_one_plus_l, checks })
}

pub fn verify(genus: &GenusRange) -> Result<VerifyReport, CliError> {
    let genera: Vec<GenusChecks> =
        genus.iter().collect::<Vec<_>>().into_par_iter().map(genus_checks).collect::<Result<_, _>>()?;
    let passed = genera.iter().all(|g| g.checks.iter().all(|c| c.status));
    Ok(VerifyReport { command: "k0", genus: genus.to_string(), genera, passed })
}

#[derive(Debug, Serialize)]
pub struct ClassEntry {
    genus: usize,
    class: K0Class,
    times_one_plus_l: K0Class,
}

#[derive(Debug, Serialize)]
pub struct ClassReport {
    command: &'static str,
    genus: String,
    classes: Vec<ClassEntry>,
    passed: bool,
}

impl Report for ClassReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn text(&self) -> String {
        self.classes.iter().map(|c| format!("g={}: {}\n", c.genus, c.class)).collect()
    }

    fn csv(&self) -> String {
        csv_table(
            &["genus", "class", "times_one_plus_l"],
            self.classes.iter().map(|c| vec![c.genus.to_string(), c.class.to_string(), c.times_one_plus_l.to_string()]),
        )
    }

    fn passed(&self) -> bool {
        self.passed
    }
}

pub fn class(genus: &GenusRange) -> Result<ClassReport, CliError> {
    let reports: Vec<_> = genus
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|g| moduli_report(g).map_err(CliError::usage))
        .collect::<Result<_, _>>()?;
    let passed = reports.iter().all(|r| r.passed());
    let classes = reports
        .into_iter()
        .map(|r| ClassEntry { genus: r.genus, class: r.class, times_one_plus_l: r.times_one_plus_l })
        .collect();
    Ok(ClassReport { command: "k0", genus: genus.to_string(), classes, passed })
}
